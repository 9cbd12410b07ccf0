#pragma once

#include <set>
#include <vector>

#include "dpants/topo/surface.hpp"

namespace dpants::topo {

/// Connected components of the surface cut along a set of interior curves
/// of one pants decomposition, with per-component genus and boundary data.
struct CutAnalysis {
  int num_components = 0;
  std::vector<int> component_of_pants;  // per vertex of the graph

  struct Component {
    int genus = 0;
    int legs = 0;        // boundary components of S in this piece
    int cut_stubs = 0;   // boundary circles created by the cut
  };
  std::vector<Component> components;
};

CutAnalysis cut_along(const PantsGraph& graph,
                      const std::set<CurveId>& cut_curves);

/// A curve of C is strong iff its two boundary copies lie in distinct
/// components of S cut along all of C.
struct StrongWeakSplit {
  std::set<CurveId> strong;
  std::set<CurveId> weak;
};
StrongWeakSplit strong_weak_split(const std::set<CurveId>& curves,
                                  const PantsGraph& graph);

/// Good set check: every component of S cut along the strong curves of C
/// has positive genus or carries at least two boundary components of S.
struct GoodSetReport {
  bool good = false;
  StrongWeakSplit split;
  struct ComponentDiag {
    int genus;
    int legs;
    bool good;
  };
  std::vector<ComponentDiag> components;
};
GoodSetReport is_good_set(const std::set<CurveId>& curves,
                          const PantsGraph& graph);

}  // namespace dpants::topo
