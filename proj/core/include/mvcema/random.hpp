#ifndef MVCEMA_RANDOM_HPP
#define MVCEMA_RANDOM_HPP

#include <cstdint>
#include <random>

#include "mvcema/matrix.hpp"

namespace mvcema {

/// Seeded generator with fixed-layout draws. Distribution sampling is done
/// in-house (not via std:: distributions) so that identical seeds give
/// identical streams on any standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1), 53 usable bits.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via the Marsaglia polar method.
  double normal();

  /// Uniform draw from the flat (all-ones concentration) simplex of
  /// dimension n: normalized exponentials.
  Vector flat_simplex(int n);

  std::uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// Derives independent child seeds from a base seed and a stream tag
/// (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t tag);

}  // namespace mvcema

#endif  // MVCEMA_RANDOM_HPP
