#include "mvcema/simplex_qp.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mvcema/errors.hpp"
#include "mvcema/linalg.hpp"

namespace mvcema {

Vector project_simplex(const Vector& v) {
  const Index n = v.size();
  if (n == 0) throw EmptyVectorError("project_simplex: empty vector");
  if (!v.allFinite()) {
    throw ValidationError("project_simplex: non-finite entries");
  }

  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());

  // Largest prefix whose shifted entries stay strictly positive.
  double cumsum = 0.0;
  double theta = 0.0;
  Index support = 0;
  double prefix = 0.0;
  for (Index j = 0; j < n; ++j) {
    prefix += u[j];
    const double t = (prefix - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) {
      support = j + 1;
      cumsum = prefix;
    }
  }
  theta = (cumsum - 1.0) / static_cast<double>(support);

  Vector x = (v.array() - theta).cwiseMax(0.0);
  return x;
}

namespace detail {

QpResult pfgm_minimize(const std::function<void(const Vector&, Vector&)>& grad,
                       const std::function<double(const Vector&)>& value,
                       double lipschitz, const Vector& x0,
                       const PfgmSettings& s) {
  const double step = 1.0 / std::max(lipschitz, 1e-12);

  Vector x = x0;
  Vector y = x0;
  Vector g(x0.size());
  double t = 1.0;
  double fx = value(x);
  const double f0 = fx;

  Vector x_best = x;
  double f_best = fx;

  QpResult out;
  for (int it = 1; it <= s.max_inner_iters; ++it) {
    grad(y, g);
    Vector x_new = project_simplex(y - step * g);
    double f_new = value(x_new);

    if (f_new > fx && s.restart_on_nonmonotone) {
      // Momentum overshoot: restart from the last iterate with a plain
      // projected gradient step.
      t = 1.0;
      grad(x, g);
      x_new = project_simplex(x - step * g);
      f_new = value(x_new);
      if (f_new > f0 + 1e-6) {
        throw DivergedError(
            "pfgm: objective rose above its starting value after restart "
            "(bad step size or indefinite Q)");
      }
    }

    const double t_new = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    const double beta = (t - 1.0) / t_new;
    y = x_new + beta * (x_new - x);

    const double move = (x_new - x).norm();
    const double scale = std::max(1.0, x.norm());
    x = std::move(x_new);
    fx = f_new;
    t = t_new;
    out.iterations = it;

    if (fx < f_best) {
      f_best = fx;
      x_best = x;
    }
    if (move <= s.rel_tol * scale) break;
  }

  out.x = std::move(x_best);
  return out;
}

}  // namespace detail

static void validate_qp(const QpProblem& p, const Vector& x0) {
  if (p.Q.rows() != p.Q.cols() || p.Q.rows() != p.b.size()) {
    throw ValidationError("solve_qp_simplex: inconsistent Q/b shapes");
  }
  if (x0.size() != p.b.size()) {
    throw ValidationError("solve_qp_simplex: start point has wrong size");
  }
  if (!detail::is_symmetric(p.Q)) {
    throw NonSymmetricError("solve_qp_simplex: Q is not symmetric");
  }
}

QpResult solve_qp_simplex(const QpProblem& p, const Vector& x0,
                          const PfgmSettings& s, double lipschitz) {
  validate_qp(p, x0);
  auto grad = [&p](const Vector& z, Vector& g) {
    g.noalias() = 2.0 * (p.Q * z);
    g -= p.b;
  };
  auto value = [&p](const Vector& z) {
    return z.dot(p.Q * z) - p.b.dot(z);
  };
  return detail::pfgm_minimize(grad, value, lipschitz, x0, s);
}

QpResult solve_qp_simplex(const QpProblem& p, const Vector& x0,
                          const PfgmSettings& s) {
  validate_qp(p, x0);
  return solve_qp_simplex(p, x0, s, spectral_upper_bound(2.0 * p.Q));
}

}  // namespace mvcema
