#include "dpants/hyp/hexagon.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dpants::hyp {

namespace {

constexpr double kPi = std::numbers::pi;

// Turn direction of the hexagon development; fixed once, certified by the
// closure residual at every build.
constexpr double kTurn = -kPi / 2;

Mat2 reflection_in(const Geodesic& line) {
  const Mat2 frame = line.to_standard();
  const Mat2 s0{-1, 0, 0, 1};
  return frame * s0 * frame.inverse();
}

}  // namespace

double trace_to_length(double t) {
  if (t < 2)
    throw std::domain_error("trace_to_length: elliptic trace below 2");
  return 2 * std::acosh(t / 2);
}

double length_to_trace(double l) {
  if (l < 0) throw std::domain_error("length_to_trace: negative length");
  return 2 * std::cosh(l / 2);
}

double collar_width(double l) {
  if (!(l > 0)) throw std::domain_error("collar_width: length must be > 0");
  return std::asinh(1 / std::sinh(l));
}

HexagonSides solve_right_angled_hexagon(double a, double b, double c) {
  if (!(a > 0) || !(b > 0) || !(c > 0))
    throw std::domain_error("hexagon: sides must be positive");
  auto opposite = [](double x, double y, double z) {
    return std::acosh((std::cosh(x) + std::cosh(y) * std::cosh(z)) /
                      (std::sinh(y) * std::sinh(z)));
  };
  return {a, b, c, opposite(a, b, c), opposite(b, c, a), opposite(c, a, b)};
}

double hexagon_closure_residual(const std::array<double, 6>& sides) {
  Mat2 f = Mat2::identity();
  for (double s : sides) f = f * Mat2::translation(s) * Mat2::rotation(kTurn);
  return f.identity_residual();
}

PantsChart build_pants_chart(double l0, double l1, double l2) {
  const HexagonSides hx =
      solve_right_angled_hexagon(l0 / 2, l1 / 2, l2 / 2);
  // consecutive sides (u0, s01, u1, s12, u2, s20); the seam between slots
  // i, i+1 is the side opposite the remaining half-boundary
  const double u[3] = {l0 / 2, l1 / 2, l2 / 2};
  const double seam[3] = {hx.c_op, hx.a_op, hx.b_op};

  PantsChart pc;
  pc.boundary_length = {l0, l1, l2};
  pc.seam_length = {seam[0], seam[1], seam[2]};
  pc.closure_residual = hexagon_closure_residual(
      {u[0], seam[0], u[1], seam[1], u[2], seam[2]});

  const Geodesic std_axis{BPoint::at(0), BPoint::infinity()};
  Mat2 f = Mat2::identity();
  std::array<Mat2, 3> seam_frame;  // at the seam start, along the seam line
  for (int i = 0; i < 3; ++i) {
    pc.slot_frame[i] = f;
    pc.axis[i] = apply(f, std_axis);
    f = f * Mat2::translation(u[i]) * Mat2::rotation(kTurn);
    seam_frame[i] = f;
    pc.seam_line[i] = apply(f, std_axis);
    pc.seam_mid[i] =
        (f * Mat2::translation(seam[i] / 2)).apply(Complex(0, 1));
    f = f * Mat2::translation(seam[i]) * Mat2::rotation(kTurn);
  }

  // X_i = Ref(outgoing seam) * Ref(incoming seam) translates along axis i
  // by l_i; the triple product telescopes to the identity.
  std::array<Mat2, 3> ref;
  for (int i = 0; i < 3; ++i) ref[i] = reflection_in(pc.seam_line[i]);
  for (int i = 0; i < 3; ++i) pc.holonomy[i] = ref[i] * ref[(i + 2) % 3];
  return pc;
}

double PantsChart::seam_mid_to_opposite_axis(int seam_index) const {
  const int opposite = (seam_index + 2) % 3;
  return foot_of(axis[opposite], seam_mid[seam_index]).dist;
}

PantsGeometry pants_from_boundary_lengths(double l0, double l1, double l2) {
  const HexagonSides hx =
      solve_right_angled_hexagon(l0 / 2, l1 / 2, l2 / 2);
  return {l0, l1, l2, hx.c_op, hx.a_op, hx.b_op};
}

double handle_flip_length(double l_a, double l_c, double dalpha) {
  if (!(l_a > 0) || !(l_c > 0))
    throw std::domain_error("handle_flip_length: lengths must be positive");
  const PantsGeometry pg = pants_from_boundary_lengths(l_c, l_a, l_a);
  const double half_seam = pg.s12 / 2;  // between the two copies of a
  const double glide = l_a * dalpha / (4 * kPi);
  return 2 * std::acosh(std::cosh(half_seam) * std::cosh(glide));
}

double four_holes_flip_length(double l_a, double c1, double c2, double c3,
                              double c4, double dalpha) {
  if (!(l_a > 0) || !(c1 > 0) || !(c2 > 0) || !(c3 > 0) || !(c4 > 0))
    throw std::domain_error("four_holes_flip_length: lengths must be positive");
  const PantsChart u = build_pants_chart(l_a, c1, c2);
  const PantsChart v = build_pants_chart(l_a, c3, c4);
  const double du = u.seam_mid_to_opposite_axis(1);
  const double dv = v.seam_mid_to_opposite_axis(1);
  const double offset = l_a * dalpha / (2 * kPi);
  const double ch = std::cosh(du) * std::cosh(dv) * std::cosh(offset) +
                    std::sinh(du) * std::sinh(dv);
  return 2 * std::acosh(ch);
}

}  // namespace dpants::hyp
