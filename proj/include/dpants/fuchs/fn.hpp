#pragma once

#include <map>
#include <vector>

#include "dpants/topo/surface.hpp"

namespace dpants::fuchs {

/// Fenchel-Nielsen point attached to a pants graph: a positive length per
/// curve (legs included) and a twist angle in radians per interior curve.
/// A full twist along c shifts the angle of c by 2 pi.
struct FNCoords {
  std::map<topo::CurveId, double> lengths;
  std::map<topo::CurveId, double> twists;

  double length(const topo::CurveId& id) const;
  double twist(const topo::CurveId& id) const;

  /// Keys match the graph exactly and lengths are positive.
  void validate(const topo::PantsGraph& graph) const;

  /// Canonical packing: lengths in sorted id order, then twists.
  std::vector<double> pack(const topo::PantsGraph& graph) const;
  static FNCoords unpack(const topo::PantsGraph& graph,
                         const std::vector<double>& values);
  static std::vector<std::string> pack_names(const topo::PantsGraph& graph);
};

}  // namespace dpants::fuchs
