#include "bdmfem/quadrature.hpp"

namespace bdmfem {

const TriangleQuadrature& six_point_rule() {
  // Orbits (a, a, 1-2a) of the degree-4 symmetric rule. The first point of
  // each orbit is (0.44594849091597, 0.44594849091597) and
  // (0.09157621350977, 0.09157621350977) when rounded to 14 digits.
  static const TriangleQuadrature rule = [] {
    constexpr double a1 = 0.445948490915964886318329;
    constexpr double b1 = 1.0 - 2.0 * a1;
    constexpr double w1 = 0.223381589678011465944827;
    constexpr double a2 = 0.091576213509770743459572;
    constexpr double b2 = 1.0 - 2.0 * a2;
    constexpr double w2 = 0.109951743655321867388506;
    TriangleQuadrature q;
    q.degree = 4;
    q.nodes = {{{a1, a1}, w1}, {{a1, b1}, w1}, {{b1, a1}, w1},
               {{a2, a2}, w2}, {{a2, b2}, w2}, {{b2, a2}, w2}};
    return q;
  }();
  return rule;
}

const TriangleQuadrature& centroid_rule() {
  static const TriangleQuadrature rule{{{{1.0 / 3.0, 1.0 / 3.0}, 1.0}}, 1};
  return rule;
}

}  // namespace bdmfem
