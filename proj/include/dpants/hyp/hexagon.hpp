#pragma once

#include <array>

#include "dpants/hyp/geodesic.hpp"

namespace dpants::hyp {

/// l = 2*acosh(t/2) for a hyperbolic (or parabolic) trace t >= 2.
double trace_to_length(double t);

/// t = 2*cosh(l/2), l >= 0.
double length_to_trace(double l);

/// Collar half-width relation sinh(l) * sinh(w) = 1.
double collar_width(double l);

/// Opposite sides of a right-angled hexagon with alternating sides
/// (a, b, c); consecutive side order is (a, c', b, a', c, b').
/// cosh a' = (cosh a + cosh b cosh c) / (sinh b sinh c), and cyclically.
struct HexagonSides {
  double a, b, c;
  double a_op, b_op, c_op;
};
HexagonSides solve_right_angled_hexagon(double a, double b, double c);

/// Develops the closed boundary path of a right-angled hexagon with the
/// given consecutive sides and returns the identity residual of the
/// holonomy; ~0 certifies that the sides close up.
double hexagon_closure_residual(const std::array<double, 6>& sides);

/// A hyperbolic pair of pants developed in the upper half-plane.
/// Slot i carries boundary length l[i]; the slot-0 axis is the imaginary
/// axis. seam[i] is the common perpendicular between the slot-i and
/// slot-(i+1) boundaries. Boundary holonomies satisfy X2 * X1 * X0 = Id,
/// each X_i translating along axis[i] by l[i] in the axis orientation.
struct PantsChart {
  std::array<double, 3> boundary_length;
  std::array<double, 3> seam_length;    // seam[i] between slots i, i+1
  std::array<Geodesic, 3> axis;         // oriented along X_i
  std::array<Mat2, 3> holonomy;         // X_i
  std::array<Mat2, 3> slot_frame;       // at the incoming seam foot, along axis
  std::array<Geodesic, 3> seam_line;    // oriented slot i -> slot i+1
  std::array<Complex, 3> seam_mid;      // midpoint of the seam segment
  double closure_residual = 0;

  /// Distance from the midpoint of seam (i, i+1) to the remaining axis.
  double seam_mid_to_opposite_axis(int seam_index) const;
};

PantsChart build_pants_chart(double l0, double l1, double l2);

/// Seam system of a pair of pants with the given boundary lengths.
struct PantsGeometry {
  double l0, l1, l2;
  double s01, s12, s20;
};
PantsGeometry pants_from_boundary_lengths(double l0, double l1, double l2);

/// Length of the curve replacing the interior curve of a one-holed torus:
/// the interior curve a is crossed once by its partner b, and
/// cosh(l_b / 2) = cosh(OA) * cosh(l_a * dalpha / (4 pi)), with OA half the
/// seam between the two copies of a in the cut-open pair of pants and
/// dalpha the twist offset from the orthogonal configuration.
double handle_flip_length(double l_a, double l_c, double dalpha);

/// Length of the flip image of the middle curve a of a four-holed sphere
/// (boundary lengths c1, c2 on one side, c3, c4 on the other). The image
/// runs between the midpoints O, O' of the outer seams; its length is
/// 2 * OO', computed by crossing the gluing line p at perpendicular
/// distances D_u, D_v with foot offset l_a * dalpha / (2 pi):
///   cosh OO' = cosh D_u cosh D_v cosh(offset) + sinh D_u sinh D_v.
double four_holes_flip_length(double l_a, double c1, double c2, double c3,
                              double c4, double dalpha);

}  // namespace dpants::hyp
