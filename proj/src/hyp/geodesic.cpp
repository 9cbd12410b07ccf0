#include "dpants/hyp/geodesic.hpp"

#include <cmath>

namespace dpants::hyp {

namespace {

// Endpoint images of g2 in the standard position of g1 (g1 = imaginary
// axis, oriented upward).
struct StdPair {
  Mat2 back;  // map from standard position to the original picture
  BPoint p, q;
};

StdPair standardize(const Geodesic& g1, const Geodesic& g2) {
  const Mat2 h = g1.to_standard();
  const Mat2 hi = h.inverse();
  return {h, apply(hi, g2.src), apply(hi, g2.dst)};
}

bool is_axis_end(const BPoint& p, double tol = 1e-12) {
  // endpoint of the standard imaginary axis: 0 or infinity
  return p.is_infinity() || std::abs(p.value()) < tol ||
         std::abs(p.w) < tol * std::abs(p.x);
}

}  // namespace

Geodesic axis_of(const Mat2& m) {
  const double tr = m.trace();
  if (std::abs(tr) <= 2)
    throw std::domain_error("axis_of: element is not hyperbolic");
  if (std::abs(m.c) < 1e-14 * (std::abs(m.a) + std::abs(m.d))) {
    // upper triangular: fixed points are infinity and b/(d-a)
    const BPoint finite = BPoint::at(m.b / (m.d - m.a));
    if (std::abs(m.a) > std::abs(m.d))
      return {finite, BPoint::infinity()};
    return {BPoint::infinity(), finite};
  }
  const double s = std::sqrt(tr * tr - 4);
  const double z1 = (m.a - m.d + s) / (2 * m.c);
  const double z2 = (m.a - m.d - s) / (2 * m.c);
  // attracting fixed point has |cz + d| > 1
  const bool first_attracts = std::abs(m.c * z1 + m.d) > 1;
  const double att = first_attracts ? z1 : z2;
  const double rep = first_attracts ? z2 : z1;
  return {BPoint::at(rep), BPoint::at(att)};
}

double translation_length(const Mat2& m) {
  const double t = std::abs(m.trace());
  if (t < 2 - 1e-12)
    throw std::domain_error("translation_length: elliptic element");
  return 2 * std::acosh(std::max(1.0, t / 2));
}

FootData foot_of(const Geodesic& g, Complex z) {
  const Mat2 hi = g.to_standard().inverse();
  const Complex w = hi.apply(z);
  const double r = std::abs(w);
  FootData f;
  f.param = std::log(r);
  f.dist = std::asinh(std::abs(w.real()) / w.imag());
  f.foot = g.to_standard().apply(Complex(0, r));
  return f;
}

AxisConfig classify_axes(const Geodesic& g1, const Geodesic& g2) {
  const auto [back, p, q] = standardize(g1, g2);
  const bool pe = is_axis_end(p), qe = is_axis_end(q);
  if (pe && qe) return {AxisRelation::Coincident};
  if (pe || qe) return {AxisRelation::SharedEnd};
  const double pv = p.value(), qv = q.value();
  const double m = (pv + qv) / 2, r = std::abs(qv - pv) / 2;
  AxisConfig out{};
  if (pv * qv < 0) {
    out.relation = AxisRelation::Crossing;
    out.angle = std::acos(std::min(1.0, std::abs(m) / r));
    out.point = back.apply(Complex(0, std::sqrt(r * r - m * m)));
  } else {
    out.relation = AxisRelation::Disjoint;
    out.distance = std::acosh(std::max(1.0, std::abs(m) / r));
  }
  return out;
}

Perpendicular common_perpendicular(const Geodesic& g1, const Geodesic& g2) {
  const auto [back, p, q] = standardize(g1, g2);
  if (is_axis_end(p) || is_axis_end(q))
    throw std::domain_error("common_perpendicular: shared ideal endpoint");
  const double pv = p.value(), qv = q.value();
  if (pv * qv <= 0)
    throw std::domain_error("common_perpendicular: axes are not disjoint");
  const double m = (pv + qv) / 2, r = std::abs(qv - pv) / 2;
  const double rho = std::sqrt(m * m - r * r);
  const double sgn = m > 0 ? 1.0 : -1.0;

  Perpendicular out;
  out.length = std::acosh(std::max(1.0, std::abs(m) / r));
  const Complex f1(0, rho);
  const Complex f2(rho * rho / m, rho * r / std::abs(m));
  const Geodesic perp{BPoint::at(-sgn * rho), BPoint::at(sgn * rho)};
  const double s1 = foot_of(perp, f1).param;
  out.line = apply(back, perp);
  out.foot1 = back.apply(f1);
  out.foot2 = back.apply(f2);
  out.midpoint = back.apply(perp.point_at(s1 + out.length / 2));
  return out;
}

int side_of(const Geodesic& g, const BPoint& p, double tol) {
  const Mat2 hi = g.to_standard().inverse();
  const BPoint q = apply(hi, p);
  if (q.is_infinity() || std::abs(q.value()) < tol) return 0;
  return q.value() > 0 ? 1 : -1;
}

Geodesic through(Complex z1, Complex z2) {
  const double x1 = z1.real(), y1 = z1.imag();
  const double x2 = z2.real(), y2 = z2.imag();
  Geodesic g;
  if (std::abs(x1 - x2) < 1e-13 * (1 + std::abs(x1))) {
    g = y2 > y1 ? Geodesic{BPoint::at(x1), BPoint::infinity()}
                : Geodesic{BPoint::infinity(), BPoint::at(x1)};
    return g;
  }
  const double m =
      (std::norm(z1) - std::norm(z2)) / (2 * (x1 - x2));
  const double r = std::abs(z1 - Complex(m, 0));
  g = Geodesic{BPoint::at(m - r), BPoint::at(m + r)};
  if (foot_of(g, z1).param > foot_of(g, z2).param) g = g.reversed();
  return g;
}

}  // namespace dpants::hyp
