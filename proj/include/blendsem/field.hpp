#ifndef BLENDSEM_FIELD_HPP
#define BLENDSEM_FIELD_HPP

#include <stdexcept>

#include "blendsem/mesh.hpp"
#include "blendsem/types.hpp"

namespace blendsem {

// Nodal values of the four conserved variables on every LGL node of the mesh.
// Storage is one 4 x (K (N+1)^2) column-major matrix: element-major, then
// node (i, j) with i fastest, and the variable index contiguous per node.
// The same container carries solution states and time derivatives.
class SolutionField {
 public:
  SolutionField() = default;
  SolutionField(const Mesh2D& mesh, int degree)
      : degree_(degree), kx_(mesh.kx), ky_(mesh.ky) {
    values_.setZero(4, static_cast<Eigen::Index>(num_elements()) * nodes_per_element());
  }

  int degree() const { return degree_; }
  int nodes_1d() const { return degree_ + 1; }
  int nodes_per_element() const { return nodes_1d() * nodes_1d(); }
  int num_elements() const { return kx_ * ky_; }
  int elements_x() const { return kx_; }
  int elements_y() const { return ky_; }
  Eigen::Index num_nodes() const { return values_.cols(); }

  Eigen::Index col(int element, int i, int j) const {
    return static_cast<Eigen::Index>(element) * nodes_per_element() + j * nodes_1d() + i;
  }

  auto node(int element, int i, int j) { return values_.col(col(element, i, j)); }
  auto node(int element, int i, int j) const { return values_.col(col(element, i, j)); }

  Eigen::Matrix4Xd& values() { return values_; }
  const Eigen::Matrix4Xd& values() const { return values_; }

  void set_zero() { values_.setZero(); }

  bool same_shape(const SolutionField& other) const {
    return degree_ == other.degree_ && kx_ == other.kx_ && ky_ == other.ky_;
  }

 private:
  Eigen::Matrix4Xd values_;
  int degree_ = 0;
  int kx_ = 0;
  int ky_ = 0;
};

// Element-wise blending coefficients. alpha weights the FV scheme against the
// DG scheme; alpha_correction accumulates the limiter's per-stage raises.
struct BlendField {
  Vec alpha;             // K entries in [0, 1]
  Vec alpha_correction;  // K entries, >= 0

  BlendField() = default;
  explicit BlendField(int num_elements)
      : alpha(Vec::Zero(num_elements)), alpha_correction(Vec::Zero(num_elements)) {}

  void reset(Scalar base = 0.0) {
    alpha.setConstant(base);
    alpha_correction.setZero();
  }
};

}  // namespace blendsem

#endif
