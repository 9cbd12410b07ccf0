// scratch probe for development conventions; replaced by real tests
#include <cstdio>
#include <cmath>
#include "dpants/hyp/hexagon.hpp"

using namespace dpants::hyp;

int main() {
  // closure with the frozen turn direction
  auto hx = solve_right_angled_hexagon(1.0, 1.3, 0.8);
  double r = hexagon_closure_residual({hx.a, hx.c_op, hx.b, hx.a_op, hx.c, hx.b_op});
  std::printf("closure residual (a,c',b,a',c,b'): %.3e\n", r);

  auto pc = build_pants_chart(2.0, 1.5, 1.7);
  std::printf("pants closure: %.3e\n", pc.closure_residual);
  for (int i = 0; i < 3; ++i) {
    double tl = translation_length(pc.holonomy[i]);
    auto ax = axis_of(pc.holonomy[i]);
    std::printf("slot %d: tl=%.12f want %.12f  axis match=%d orient=%d\n", i, tl,
                pc.boundary_length[i], (int)same_unoriented(ax, pc.axis[i]),
                (int)(bpoint_dist(ax.dst, pc.axis[i].dst) < 1e-9));
  }
  Mat2 triple = pc.holonomy[2] * pc.holonomy[1] * pc.holonomy[0];
  std::printf("X2X1X0 residual: %.3e\n", triple.identity_residual());
  // seam feet antipodal: feet of incoming/outgoing seams on axis i at l_i/2
  for (int i = 0; i < 3; ++i) {
    auto fin = foot_of(pc.axis[i], pc.seam_mid[(i + 2) % 3]);
    auto fout = foot_of(pc.axis[i], pc.seam_mid[i]);
    (void)fin; (void)fout;
  }
  return 0;
}
