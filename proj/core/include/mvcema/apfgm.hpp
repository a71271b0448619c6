#ifndef MVCEMA_APFGM_HPP
#define MVCEMA_APFGM_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mvcema/matrix.hpp"
#include "mvcema/simplex_qp.hpp"

namespace mvcema {

/// Row-stochastic grain-size-distribution data: I specimens x J bins,
/// entries >= 0, each row summing to one.
class GsdMatrix {
 public:
  /// Validates and adopts a matrix. Rows must be nonnegative and sum to 1
  /// within 1e-6; accepted rows are rescaled to sum exactly to 1.
  static GsdMatrix from_data(Matrix m);

  const Matrix& data() const { return data_; }
  Index specimens() const { return data_.rows(); }
  Index bins() const { return data_.cols(); }

 private:
  GsdMatrix() = default;
  Matrix data_;
};

/// Abundances W (I x K) and end members G (K x J), both row-stochastic.
struct Factorization {
  Matrix W;
  Matrix G;
  int k() const { return static_cast<int>(G.rows()); }
};

enum class VolumeMode { MinVolume, NoVolume, MaxVolume };

/// The volume weight actually used by a run: the user scale lambda_prime
/// and the derived weight
///   lambda = lambda_prime * |P - W0 G0|_F^2 / det(G0 G0^T),
/// frozen at initialization.
struct VolumeConfig {
  double lambda_prime = 0.0;
  double lambda = 0.0;
  VolumeMode mode = VolumeMode::NoVolume;
};

const char* to_string(VolumeMode m);

struct OuterSettings {
  int max_outer_iters = 500;
  double rel_tol = 1e-9;
  int threads = 1;
};

struct IterationRecord {
  int iteration = 0;
  double objective = 0.0;  // J = 1/2 |P-WG|_F^2 - (lambda/2) det(GG^T)
  double residual = 0.0;   // |P-WG|_F^2
  double det_gram = 0.0;   // det(GG^T)
};

/// Echo of the resolved run parameters, kept with the report so result
/// files can be written without re-supplying the configuration.
struct RunInfo {
  int k = 0;
  double lambda_prime = 0.0;
  double lambda = 0.0;
  std::uint64_t seed = 0;
  int max_outer_iters = 0;
  double outer_rel_tol = 0.0;
  int threads = 1;
};

struct RunReport {
  RunInfo info;
  std::vector<IterationRecord> trace;
  std::vector<std::string> warnings;
  int iterations = 0;
  double wall_seconds = 0.0;
  std::string termination;  // "converged" or "maxiter"
};

/// Draw feasible W0 (I x K) and G0 (K x J) rows from the flat simplex
/// distribution; G0 is resampled up to 10 times until it has full row rank
/// (relative singular value tolerance 1e-10). Deterministic per seed.
Factorization initialize(const GsdMatrix& p, int k, std::uint64_t seed);

/// Freeze the volume weight from the initial residual and volume.
/// Throws DegenerateInitVolumeError when det(G0 G0^T) <= 1e-14.
VolumeConfig scale_lambda(const GsdMatrix& p, const Factorization& f0,
                          double lambda_prime);

/// One abundance sweep: every row of W is replaced by the minimizer of
///   w (1/2 G G^T) w^T - P(i,:) G^T w^T  over the simplex,
/// warm-started from the current row. Rows are independent; with
/// threads > 1 they are solved concurrently with results identical to the
/// sequential order.
Factorization update_w(const GsdMatrix& p, const Factorization& f,
                       const PfgmSettings& s, int threads = 1);

/// One end-member sweep: rows of G are updated in order k = 1..K, each by
/// the simplex QP with
///   Q_k = 1/2 |W(:,k)|^2 I - (lambda/2) det(Gbar_k Gbar_k^T) C_k C_k^T,
///   b_k = P_k^T W(:,k),
/// rebuilding P_k and Q_k from the latest rows. Throws IndefiniteQkError
/// when Q_k's smallest eigenvalue falls to 1e-12 or below; a rank-deficient
/// Gbar_k is retried up to 3 times after a 1e-8 perturbation of its rows.
Factorization update_g(const GsdMatrix& p, const Factorization& f,
                       const VolumeConfig& vc, const PfgmSettings& s,
                       std::vector<std::string>* warnings = nullptr);

/// Objective, residual and volume of a factorization under a given weight.
IterationRecord evaluate(const GsdMatrix& p, const Factorization& f,
                         double lambda);

double residual_fro2(const GsdMatrix& p, const Factorization& f);

/// Per-iteration hook used by diagnostics; receives the factorization after
/// each completed outer iteration together with its trace record.
using IterationObserver =
    std::function<void(const Factorization&, const IterationRecord&)>;

struct ApfgmResult {
  Factorization factorization;
  RunReport report;
};

/// Algorithm driver: initialize, freeze lambda, then alternate the W and G
/// sweeps until maxiter or until the relative objective change stays below
/// outer.rel_tol for 5 consecutive iterations. When a G sweep reports an
/// indefinite subproblem the weight is halved for that iteration only; a
/// halved sweep is additionally accepted only if it does not increase the
/// frozen-lambda objective. All interventions land in report.warnings.
ApfgmResult run_apfgm(const GsdMatrix& p, int k, double lambda_prime,
                      std::uint64_t seed, const OuterSettings& outer = {},
                      const PfgmSettings& inner = {},
                      const IterationObserver& observer = {});

/// True when every row is nonnegative with sum within tol of one.
bool is_row_stochastic(const Matrix& m, double tol = 1e-9);

}  // namespace mvcema

#endif  // MVCEMA_APFGM_HPP
