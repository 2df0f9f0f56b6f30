#ifndef BLENDSEM_LGL_HPP
#define BLENDSEM_LGL_HPP

#include "blendsem/types.hpp"

namespace blendsem {

// 1D Legendre-Gauss-Lobatto operators for one polynomial degree N.
//
// Immutable after construction; safe to share read-only between workers.
struct ElementOperators {
  int degree = 0;  // N >= 1
  Vec nodes;       // N+1 reference coordinates in [-1,1], strictly increasing
  Vec weights;     // N+1 positive quadrature weights, sum = 2
  Mat deriv;       // D(j,i) = l_i'(xi_j), rows annihilate constants
  Mat modal;       // nodal values -> Legendre expansion coefficients

  int num_nodes() const { return degree + 1; }
};

// Legendre polynomial P_n and its derivative at x, by three-term recurrence.
struct LegendreEval {
  Scalar value;
  Scalar deriv;
};
LegendreEval legendre(int n, Scalar x);

// Builds nodes, weights, derivative matrix, and the nodal-to-modal transform.
// Throws std::invalid_argument for degree < 1.
ElementOperators build_operators(int degree);

// Legendre expansion coefficients of a nodal vector (length N+1).
// Throws std::invalid_argument on dimension mismatch.
Vec nodal_to_modal(const ElementOperators& op, const Vec& nodal);

}  // namespace blendsem

#endif
