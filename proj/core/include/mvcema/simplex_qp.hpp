#ifndef MVCEMA_SIMPLEX_QP_HPP
#define MVCEMA_SIMPLEX_QP_HPP

#include <functional>

#include "mvcema/matrix.hpp"

namespace mvcema {

/// Quadratic program min_x  x^T Q x - b^T x over the probability simplex.
/// Q is symmetric and already carries any 1/2 factors of the model.
struct QpProblem {
  Matrix Q;
  Vector b;
};

/// Accelerated projected gradient settings. Momentum is restarted whenever
/// the objective increases, which keeps the iterate sequence monotone.
struct PfgmSettings {
  int max_inner_iters = 200;
  double rel_tol = 1e-8;
  bool restart_on_nonmonotone = true;
};

struct QpResult {
  Vector x;
  int iterations = 0;
};

/// Euclidean projection onto {x >= 0, sum x = 1} by sort-and-threshold.
/// Exact (up to rounding), O(n log n). Throws EmptyVectorError on size 0.
Vector project_simplex(const Vector& v);

/// Solve a simplex-constrained QP with Nesterov's fast gradient method,
/// step 1/L with L = spectral_upper_bound(2Q). Returns the best iterate
/// seen, so the objective never exceeds the warm start's. Throws
/// DivergedError when the objective rises more than 1e-6 above its
/// starting value even after a momentum restart.
QpResult solve_qp_simplex(const QpProblem& p, const Vector& x0,
                          const PfgmSettings& s);

/// Same, with a caller-supplied Lipschitz constant L >= lambda_max(2Q);
/// used by callers that know L in closed form.
QpResult solve_qp_simplex(const QpProblem& p, const Vector& x0,
                          const PfgmSettings& s, double lipschitz);

namespace detail {

/// The engine behind solve_qp_simplex: minimizes a smooth convex function
/// over the simplex given its gradient, value, and a gradient Lipschitz
/// constant. Exposed separately so structured objectives can avoid forming
/// a dense Q.
QpResult pfgm_minimize(const std::function<void(const Vector&, Vector&)>& grad,
                       const std::function<double(const Vector&)>& value,
                       double lipschitz, const Vector& x0,
                       const PfgmSettings& s);

}  // namespace detail

}  // namespace mvcema

#endif  // MVCEMA_SIMPLEX_QP_HPP
