#include "blendsem/lgl.hpp"

#include <cmath>
#include <stdexcept>

namespace blendsem {

LegendreEval legendre(int n, Scalar x) {
  Scalar p_prev = 1.0;  // P_0
  Scalar p = x;         // P_1
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const Scalar p_next = ((2 * k - 1) * x * p - (k - 1) * p_prev) / k;
    p_prev = p;
    p = p_next;
  }
  // (1-x^2) P_n' = n (P_{n-1} - x P_n); at the endpoints use
  // P_n'(+-1) = (+-1)^{n-1} n(n+1)/2.
  const Scalar one_minus_x2 = 1.0 - x * x;
  Scalar dp;
  if (std::abs(one_minus_x2) > 1e-14) {
    dp = n * (p_prev - x * p) / one_minus_x2;
  } else {
    const Scalar sign = (x > 0 || n % 2 == 1) ? 1.0 : -1.0;
    dp = sign * n * (n + 1) / 2.0;
  }
  return {p, dp};
}

namespace {

// Interior LGL nodes are the roots of P_N'. Newton iteration on P_N' with
// P_N'' from the Legendre ODE: (1-x^2) P_N'' = 2x P_N' - N(N+1) P_N.
Scalar interior_node(int n, Scalar guess) {
  Scalar x = guess;
  for (int it = 0; it < 100; ++it) {
    const LegendreEval e = legendre(n, x);
    const Scalar second = (2.0 * x * e.deriv - n * (n + 1) * e.value) / (1.0 - x * x);
    const Scalar dx = e.deriv / second;
    x -= dx;
    if (std::abs(dx) < 1e-15) break;
  }
  return x;
}

}  // namespace

ElementOperators build_operators(int degree) {
  if (degree < 1) {
    throw std::invalid_argument("build_operators: degree must be >= 1, got " +
                                std::to_string(degree));
  }
  const int n = degree;
  const int m = n + 1;

  ElementOperators op;
  op.degree = n;
  op.nodes = Vec::Zero(m);
  op.weights = Vec::Zero(m);

  // Nodes: endpoints exact, interior by Newton from Chebyshev-Lobatto guesses,
  // mirrored about 0 so the set is symmetric to the last bit.
  op.nodes(0) = -1.0;
  op.nodes(n) = 1.0;
  for (int j = 1; j <= (n - 1) / 2; ++j) {
    const Scalar guess = -std::cos(M_PI * j / n);
    const Scalar x = interior_node(n, guess);
    op.nodes(j) = x;
    op.nodes(n - j) = -x;
  }
  if (n % 2 == 0 && n >= 2) op.nodes(n / 2) = 0.0;

  // w_j = 2 / (N (N+1) P_N(x_j)^2), valid at every LGL node.
  for (int j = 0; j < m; ++j) {
    const Scalar pn = legendre(n, op.nodes(j)).value;
    op.weights(j) = 2.0 / (n * (n + 1) * pn * pn);
  }

  // Derivative matrix from barycentric weights; diagonal via the negative-sum
  // trick so each row annihilates constants exactly.
  Vec bary = Vec::Ones(m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      if (k != i) bary(i) *= op.nodes(i) - op.nodes(k);
    }
    bary(i) = 1.0 / bary(i);
  }
  op.deriv = Mat::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    Scalar row_sum = 0.0;
    for (int i = 0; i < m; ++i) {
      if (i == j) continue;
      op.deriv(j, i) = (bary(i) / bary(j)) / (op.nodes(j) - op.nodes(i));
      row_sum += op.deriv(j, i);
    }
    op.deriv(j, j) = -row_sum;
  }

  // Nodal -> modal: invert the Legendre Vandermonde at the LGL nodes.
  Mat vander(m, m);
  for (int a = 0; a < m; ++a) {
    for (int j = 0; j < m; ++j) {
      vander(a, j) = legendre(j, op.nodes(a)).value;
    }
  }
  op.modal = vander.partialPivLu().inverse();

  return op;
}

Vec nodal_to_modal(const ElementOperators& op, const Vec& nodal) {
  if (nodal.size() != op.num_nodes()) {
    throw std::invalid_argument("nodal_to_modal: expected length " +
                                std::to_string(op.num_nodes()) + ", got " +
                                std::to_string(nodal.size()));
  }
  return op.modal * nodal;
}

}  // namespace blendsem
