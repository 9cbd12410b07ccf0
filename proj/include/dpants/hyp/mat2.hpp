#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace dpants::hyp {

using Complex = std::complex<double>;

/// Real 2x2 matrix acting on the upper half-plane by Moebius
/// transformations. Orientation-preserving isometries have det +1,
/// reflections (composed with conjugation of the argument) det -1.
/// Products renormalize to |det| = 1.
struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }

  /// Translation by length l along the imaginary axis, towards infinity.
  static Mat2 translation(double l) {
    const double e = std::exp(l / 2);
    return {e, 0, 0, 1 / e};
  }

  /// Rotation by angle theta (counterclockwise) about the point i.
  static Mat2 rotation(double theta) {
    const double c2 = std::cos(theta / 2), s2 = std::sin(theta / 2);
    return {c2, s2, -s2, c2};
  }

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }

  Mat2 inverse() const {
    const double dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
  }

  /// Renormalize so |det| = 1; keeps the sign of the determinant.
  Mat2 normalized() const {
    const double dt = det();
    const double s = std::sqrt(std::abs(dt));
    if (!(s > 0)) throw std::domain_error("Mat2: singular matrix");
    return {a / s, b / s, c / s, d / s};
  }

  Mat2 operator*(const Mat2& o) const {
    Mat2 r{a * o.a + b * o.c, a * o.b + b * o.d,
           c * o.a + d * o.c, c * o.b + d * o.d};
    return r.normalized();
  }

  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  Complex apply(Complex z) const {
    return (a * z + b) / (c * z + d);
  }

  /// Max-norm distance to +/- identity (projective identity residual).
  double identity_residual() const {
    auto res = [](const Mat2& m) {
      return std::max({std::abs(m.a - 1), std::abs(m.b), std::abs(m.c),
                       std::abs(m.d - 1)});
    };
    return std::min(res(*this), res(-*this));
  }

  std::array<double, 4> flat() const { return {a, b, c, d}; }
};

inline Mat2 conj(const Mat2& g, const Mat2& m) { return g * m * g.inverse(); }

inline double frobenius_dist(const Mat2& x, const Mat2& y) {
  return std::sqrt((x.a - y.a) * (x.a - y.a) + (x.b - y.b) * (x.b - y.b) +
                   (x.c - y.c) * (x.c - y.c) + (x.d - y.d) * (x.d - y.d));
}

/// Distance up to overall sign (matrices act projectively).
inline double projective_dist(const Mat2& x, const Mat2& y) {
  return std::min(frobenius_dist(x, y), frobenius_dist(x, -y));
}

inline bool is_hyperbolic(const Mat2& m) { return std::abs(m.trace()) > 2; }

/// Point of the boundary circle of the upper half-plane, projectively
/// (x : w); infinity is (1 : 0).
struct BPoint {
  double x = 0, w = 1;

  static BPoint infinity() { return {1, 0}; }
  static BPoint at(double v) { return {v, 1}; }

  bool is_infinity() const { return w == 0; }
  double value() const { return x / w; }

  BPoint normalized() const {
    double s = std::hypot(x, w);
    if (!(s > 0)) throw std::domain_error("BPoint: null vector");
    double sx = x / s, sw = w / s;
    if (sw < 0 || (sw == 0 && sx < 0)) { sx = -sx; sw = -sw; }
    if (std::abs(sw) < 1e-14) { sw = 0; sx = 1; }
    return {sx, sw};
  }
};

inline BPoint apply(const Mat2& m, const BPoint& p) {
  return BPoint{m.a * p.x + m.b * p.w, m.c * p.x + m.d * p.w}.normalized();
}

/// |p - q| in the projective (chordal) metric; 0 iff same boundary point.
inline double bpoint_dist(const BPoint& p, const BPoint& q) {
  const BPoint pn = p.normalized(), qn = q.normalized();
  return std::abs(pn.x * qn.w - pn.w * qn.x);
}

/// Rotation by pi about an interior point z (a lift of an elliptic
/// involution; the product of two such rotations is a translation along
/// the line through the two centers by twice the distance).
inline Mat2 half_turn(Complex z) {
  const double x = z.real(), y = z.imag();
  if (!(y > 0)) throw std::domain_error("half_turn: point not interior");
  const double sy = std::sqrt(y);
  const Mat2 g{sy, x / sy, 0, 1 / sy};
  return g * Mat2{0, 1, -1, 0} * g.inverse();
}

inline double point_dist(Complex z1, Complex z2) {
  const double n = std::norm(z1 - z2);
  const double ch = 1 + n / (2 * z1.imag() * z2.imag());
  return std::acosh(std::max(1.0, ch));
}

}  // namespace dpants::hyp
