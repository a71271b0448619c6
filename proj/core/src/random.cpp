#include "mvcema/random.hpp"

#include <cmath>

namespace mvcema {

double SeededRng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  cached_ = v * m;
  has_cached_ = true;
  return u * m;
}

Vector SeededRng::flat_simplex(int n) {
  Vector x(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    // -log(1-u) with u in [0,1) stays finite.
    x[i] = -std::log1p(-uniform01());
    sum += x[i];
  }
  if (sum <= 0.0) {
    x.setConstant(1.0 / n);
    return x;
  }
  x /= sum;
  return x;
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t tag) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace mvcema
