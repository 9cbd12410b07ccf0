#pragma once

#include "dpants/topo/double_pants.hpp"
#include "dpants/topo/surface.hpp"

namespace dpants::topo {

/// Chain-shaped standard pants decomposition of S_{g,n}: g self-folded
/// handles with loop curves "<loop_prefix>1..g" and boundary curves
/// "c1..cg", a linear trunk with curves "t1..", and legs "bd1..bdn".
/// Handle boundaries collapse onto legs or each other in the small cases
/// (S_{1,1}, S_{2,0}).
PantsGraph standard_graph(SurfaceSig sig, const std::string& loop_prefix);

/// Strictly standard double pants decomposition: both parts share all
/// curves except the handle interiors a_i / b_i, which cross once. Curve
/// records carry the symplectic homology basis (a_i -> alpha_i,
/// b_i -> beta_i, separating curves -> 0).
DoublePants strictly_standard_dp(SurfaceSig sig);

}  // namespace dpants::topo
