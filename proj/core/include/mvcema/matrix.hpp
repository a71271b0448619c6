#ifndef MVCEMA_MATRIX_HPP
#define MVCEMA_MATRIX_HPP

#include <Eigen/Dense>

namespace mvcema {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

}  // namespace mvcema

#endif  // MVCEMA_MATRIX_HPP
