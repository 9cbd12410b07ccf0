#include "dpants/topo/goodsets.hpp"

#include <numeric>
#include <stdexcept>

namespace dpants::topo {

CutAnalysis cut_along(const PantsGraph& graph,
                      const std::set<CurveId>& cut_curves) {
  for (const CurveId& id : cut_curves) {
    const CurveEdge& e = graph.edge(id);
    if (e.is_leg())
      throw std::invalid_argument("cut_along: " + id +
                                  " is a boundary curve");
  }

  std::vector<int> parent(std::max(graph.num_pants, 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : graph.curves)
    if (!e.is_leg() && !cut_curves.count(e.id))
      parent[find(e.end0.pants)] = find(e.end1.pants);

  CutAnalysis out;
  out.component_of_pants.assign(graph.num_pants, -1);
  std::vector<int> root_index(graph.num_pants, -1);
  for (int p = 0; p < graph.num_pants; ++p) {
    const int r = find(p);
    if (root_index[r] < 0) {
      root_index[r] = out.num_components++;
      out.components.push_back({});
    }
    out.component_of_pants[p] = root_index[r];
  }

  std::vector<int> vertices(out.num_components, 0),
      edges(out.num_components, 0);
  for (int p = 0; p < graph.num_pants; ++p)
    vertices[out.component_of_pants[p]]++;
  for (const auto& e : graph.curves) {
    if (e.is_leg()) {
      out.components[out.component_of_pants[e.end0.pants]].legs++;
      continue;
    }
    if (cut_curves.count(e.id)) {
      out.components[out.component_of_pants[e.end0.pants]].cut_stubs++;
      out.components[out.component_of_pants[e.end1.pants]].cut_stubs++;
    } else {
      edges[out.component_of_pants[e.end0.pants]]++;
    }
  }
  for (int k = 0; k < out.num_components; ++k)
    out.components[k].genus = edges[k] - vertices[k] + 1;
  return out;
}

StrongWeakSplit strong_weak_split(const std::set<CurveId>& curves,
                                  const PantsGraph& graph) {
  const CutAnalysis cut = cut_along(graph, curves);
  StrongWeakSplit out;
  for (const CurveId& id : curves) {
    const CurveEdge& e = graph.edge(id);
    const bool strong =
        !e.is_self_loop() &&
        cut.component_of_pants[e.end0.pants] !=
            cut.component_of_pants[e.end1.pants];
    (strong ? out.strong : out.weak).insert(id);
  }
  return out;
}

GoodSetReport is_good_set(const std::set<CurveId>& curves,
                          const PantsGraph& graph) {
  GoodSetReport rep;
  rep.split = strong_weak_split(curves, graph);
  const CutAnalysis cut = cut_along(graph, rep.split.strong);
  rep.good = true;
  for (const auto& comp : cut.components) {
    const bool ok = comp.genus > 0 || comp.legs >= 2;
    rep.components.push_back({comp.genus, comp.legs, ok});
    rep.good &= ok;
  }
  return rep;
}

}  // namespace dpants::topo
