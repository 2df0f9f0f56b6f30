#ifndef BLENDSEM_TYPES_HPP
#define BLENDSEM_TYPES_HPP

#include <Eigen/Dense>

namespace blendsem {

using Scalar = double;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Conservative state at one node: [rho, rho*v1, rho*v2, rho*E].
using State = Eigen::Vector4d;

enum class Axis { x = 0, y = 1 };

struct GasModel {
  Scalar gamma = 1.4;  // heat capacity ratio, > 1
};

}  // namespace blendsem

#endif
