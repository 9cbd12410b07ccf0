#pragma once

#include <optional>
#include <stdexcept>

#include "dpants/hyp/mat2.hpp"

namespace dpants::hyp {

/// Oriented geodesic of the upper half-plane given by its distinct ideal
/// endpoints; runs from `src` towards `dst`. For the axis of a hyperbolic
/// element, `src` is the repelling and `dst` the attracting fixed point, so
/// the element translates in the positive direction of its axis.
struct Geodesic {
  BPoint src, dst;

  Geodesic() = default;
  Geodesic(BPoint s, BPoint t) : src(s.normalized()), dst(t.normalized()) {
    if (bpoint_dist(src, dst) < 1e-13)
      throw std::domain_error("Geodesic: coincident endpoints");
  }

  Geodesic reversed() const { return {dst, src}; }

  /// Isometry taking the oriented imaginary axis (0 -> infinity) to this
  /// geodesic. The unit-speed parametrization is s -> g(i e^s).
  Mat2 to_standard() const {
    Mat2 g{dst.x, src.x, dst.w, src.w};
    if (g.det() < 0) { g.b = -g.b; g.d = -g.d; }
    return g.normalized();
  }

  Complex point_at(double s) const {
    return to_standard().apply(Complex(0, std::exp(s)));
  }

  /// Translation along this geodesic by length l (l may be negative).
  Mat2 translation_along(double l) const {
    return conj(to_standard(), Mat2::translation(l));
  }
};

inline Geodesic apply(const Mat2& m, const Geodesic& g) {
  return {apply(m, g.src), apply(m, g.dst)};
}

inline bool same_unoriented(const Geodesic& g1, const Geodesic& g2,
                            double tol = 1e-9) {
  const double direct =
      std::max(bpoint_dist(g1.src, g2.src), bpoint_dist(g1.dst, g2.dst));
  const double flipped =
      std::max(bpoint_dist(g1.src, g2.dst), bpoint_dist(g1.dst, g2.src));
  return std::min(direct, flipped) < tol;
}

/// Axis of a hyperbolic element, oriented by its translation direction.
Geodesic axis_of(const Mat2& m);

/// Translation length 2*acosh(|tr|/2); rejects elliptic input.
double translation_length(const Mat2& m);

/// Signed coordinate of z projected to the geodesic, and the distance.
struct FootData {
  double param;      // arc-length parameter of the foot along g
  double dist;       // distance from z to g
  Complex foot;
};
FootData foot_of(const Geodesic& g, Complex z);

/// Relation between two geodesics.
enum class AxisRelation { Crossing, Disjoint, SharedEnd, Coincident };

struct AxisConfig {
  AxisRelation relation;
  double angle = 0;      // crossing angle in (0, pi/2], if Crossing
  double distance = 0;   // distance between axes, if Disjoint
  Complex point{};       // crossing point, if Crossing
};

AxisConfig classify_axes(const Geodesic& g1, const Geodesic& g2);

/// Common perpendicular of two disjoint geodesics.
struct Perpendicular {
  Geodesic line;       // oriented from g1 towards g2
  Complex foot1, foot2;
  double length;       // distance between the axes
  Complex midpoint;    // midpoint of the perpendicular segment
};
Perpendicular common_perpendicular(const Geodesic& g1, const Geodesic& g2);

/// Side of the geodesic a boundary point lies on: +1 / -1, 0 if it is an
/// endpoint of g. Sides are labeled so that +1 is the left of src -> dst.
int side_of(const Geodesic& g, const BPoint& p, double tol = 1e-11);

/// Geodesic through two distinct interior points, oriented z1 -> z2.
Geodesic through(Complex z1, Complex z2);

inline Complex geodesic_midpoint(Complex z1, Complex z2) {
  const Geodesic g = through(z1, z2);
  return g.point_at(point_dist(z1, z2) / 2 + foot_of(g, z1).param);
}

}  // namespace dpants::hyp
