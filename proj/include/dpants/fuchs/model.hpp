#pragma once

#include <map>
#include <string>
#include <vector>

#include "dpants/fuchs/fn.hpp"
#include "dpants/hyp/hexagon.hpp"
#include "dpants/tolerances.hpp"
#include "dpants/topo/double_pants.hpp"

namespace dpants::fuchs {

using hyp::Geodesic;
using hyp::Mat2;

/// Marked Fuchsian group built from Fenchel-Nielsen coordinates over a
/// pants graph. Carries both the algebraic side (generator matrices,
/// defining relations, a word per decomposition curve) and the developed
/// geometry (a placed pants chart per vertex) used to realize curves that
/// are not part of the decomposition.
///
/// Generator alphabet: "C_<id>" for interior curves (oriented as the
/// boundary of the end0-side pants), "D_<id>" for legs, "G_<id>" for the
/// gluing transformation of each non-tree edge (self-loops included).
class FuchsianModel {
 public:
  topo::PantsGraph graph;
  FNCoords fn;

  std::map<std::string, Mat2> generators;
  std::vector<topo::Word> relations;
  std::map<topo::CurveId, topo::Word> curve_words;

  struct PlacedPants {
    hyp::PantsChart chart;
    Mat2 anchor;  // developing map of this vertex
  };
  std::vector<PlacedPants> pants;
  std::map<topo::CurveId, bool> edge_in_tree;

  double max_relation_residual = 0;

  Mat2 eval(const topo::Word& w) const;

  /// Geodesic length of the curve class of a word; rejects words that do
  /// not evaluate to a hyperbolic element.
  double word_length(const topo::Word& w) const;

  /// Holonomy of a decomposition curve (end0-side orientation).
  Mat2 curve_holonomy(const topo::CurveId& id) const;
  Geodesic curve_axis(const topo::CurveId& id) const;

  /// Gluing transformation of a non-tree edge.
  Mat2 gluing(const topo::CurveId& id) const;

  /// Global placement of the chart of the pants on the given side of an
  /// interior curve; the two side placements are adjacent along the
  /// developed axis of the curve.
  Mat2 side_placement(const topo::CurveId& id, int end) const;

  /// Midpoint (globally placed) of the seam of the side-`end` pants that
  /// joins its two other boundary slots.
  hyp::Complex opposite_seam_midpoint(const topo::CurveId& id,
                                      int end) const;

  /// The other two boundary slots of the side-`end` pants of the curve, in
  /// chart slot order, with their globally placed axes.
  struct FlankData {
    topo::CurveId curve[2];
    Geodesic axis[2];
  };
  FlankData flanks(const topo::CurveId& id, int end) const;
};

/// Assembles the marked group: per-vertex pants charts from the curve
/// lengths, developed across a spanning tree with twist offsets
/// t = l * alpha / (2 pi), one gluing generator per non-tree edge.
/// Fails if any defining relation closes worse than tol.geometric.
FuchsianModel build_fuchsian(const topo::PantsGraph& graph, const FNCoords& fn,
                             const Tolerances& tol = default_tolerances());

/// Length from the trace identity of a hyperbolic word evaluation.
double curve_length(const FuchsianModel& model, const topo::Word& word);

}  // namespace dpants::fuchs
