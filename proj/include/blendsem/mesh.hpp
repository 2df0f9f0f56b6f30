#ifndef BLENDSEM_MESH_HPP
#define BLENDSEM_MESH_HPP

#include <stdexcept>

#include "blendsem/types.hpp"

namespace blendsem {

// Uniform Cartesian quad mesh, periodic in both directions. All elements are
// congruent; the reference-to-physical mapping factors per axis.
struct Mesh2D {
  int kx = 1;
  int ky = 1;
  Scalar x0 = -1.0, x1 = 1.0;
  Scalar y0 = -1.0, y1 = 1.0;

  Mesh2D() = default;
  Mesh2D(int elements_x, int elements_y, Scalar x_lo, Scalar x_hi, Scalar y_lo, Scalar y_hi)
      : kx(elements_x), ky(elements_y), x0(x_lo), x1(x_hi), y0(y_lo), y1(y_hi) {
    if (kx < 1 || ky < 1) throw std::invalid_argument("Mesh2D: element counts must be >= 1");
    if (!(x1 > x0) || !(y1 > y0)) throw std::invalid_argument("Mesh2D: empty domain");
  }

  Scalar dx() const { return (x1 - x0) / kx; }
  Scalar dy() const { return (y1 - y0) / ky; }
  Scalar metric_x() const { return 0.5 * dx(); }  // d x / d xi
  Scalar metric_y() const { return 0.5 * dy(); }  // d y / d eta
  Scalar jacobian() const { return metric_x() * metric_y(); }

  int num_elements() const { return kx * ky; }
  int element_index(int ex, int ey) const { return ey * kx + ex; }
  int element_x(int k) const { return k % kx; }
  int element_y(int k) const { return k / kx; }

  int neighbor_left(int k) const { return element_index((element_x(k) + kx - 1) % kx, element_y(k)); }
  int neighbor_right(int k) const { return element_index((element_x(k) + 1) % kx, element_y(k)); }
  int neighbor_down(int k) const { return element_index(element_x(k), (element_y(k) + ky - 1) % ky); }
  int neighbor_up(int k) const { return element_index(element_x(k), (element_y(k) + 1) % ky); }

  Scalar element_x0(int k) const { return x0 + element_x(k) * dx(); }
  Scalar element_y0(int k) const { return y0 + element_y(k) * dy(); }
};

// Physical coordinate of reference point xi in [-1, 1] within an element edge.
inline Scalar map_to_element(Scalar lo, Scalar width, Scalar xi) {
  return lo + 0.5 * (xi + 1.0) * width;
}

}  // namespace blendsem

#endif
