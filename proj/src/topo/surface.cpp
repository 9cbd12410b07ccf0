#include "dpants/topo/surface.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dpants::topo {

int PantsGraph::find_index(const CurveId& id) const {
  for (size_t i = 0; i < curves.size(); ++i)
    if (curves[i].id == id) return static_cast<int>(i);
  return -1;
}

const CurveEdge& PantsGraph::edge(const CurveId& id) const {
  const int i = find_index(id);
  if (i < 0) throw std::out_of_range("PantsGraph: unknown curve " + id);
  return curves[i];
}

std::array<std::pair<int, int>, 3> PantsGraph::slots_of(int pants) const {
  std::array<std::pair<int, int>, 3> out;
  out.fill({-1, -1});
  for (size_t i = 0; i < curves.size(); ++i) {
    const CurveEdge& e = curves[i];
    if (e.end0.pants == pants) out[e.end0.slot] = {static_cast<int>(i), 0};
    if (!e.is_leg() && e.end1.pants == pants)
      out[e.end1.slot] = {static_cast<int>(i), 1};
  }
  return out;
}

bool PantsGraph::is_regular(const CurveId& id) const {
  const CurveEdge& e = edge(id);
  return !e.is_leg() && !e.is_self_loop();
}

std::vector<CurveId> PantsGraph::interior_ids() const {
  std::vector<CurveId> out;
  for (const auto& e : curves)
    if (!e.is_leg()) out.push_back(e.id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CurveId> PantsGraph::leg_ids() const {
  std::vector<CurveId> out;
  for (const auto& e : curves)
    if (e.is_leg()) out.push_back(e.id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CurveId> PantsGraph::all_ids() const {
  std::vector<CurveId> out;
  for (const auto& e : curves) out.push_back(e.id);
  std::sort(out.begin(), out.end());
  return out;
}

int PantsGraph::count_self_loops() const {
  int k = 0;
  for (const auto& e : curves) k += e.is_self_loop() ? 1 : 0;
  return k;
}

bool PantsGraph::is_standard() const {
  return count_self_loops() == sig.g;
}

std::pair<SlotRef, SlotRef> PantsGraph::sides_of(const CurveId& id) const {
  const CurveEdge& e = edge(id);
  if (e.is_leg())
    throw std::domain_error("sides_of: " + id + " is a boundary leg");
  return {e.end0, e.end1};
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.passed; });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks)
    os << (c.passed ? "pass" : "FAIL") << "  " << c.name
       << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  return os.str();
}

ValidationReport validate_pants_graph(const PantsGraph& graph,
                                      const SurfaceSig& sig) {
  ValidationReport rep;
  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  add("signature", sig.valid(),
      "g=" + std::to_string(sig.g) + " n=" + std::to_string(sig.n));

  {
    std::set<CurveId> seen;
    bool unique = true;
    for (const auto& e : graph.curves) unique &= seen.insert(e.id).second;
    add("unique-labels", unique, "");
  }

  const int total = static_cast<int>(graph.curves.size());
  add("curve-count", total == sig.total_curves(),
      "count " + std::to_string(total) + " vs " +
          std::to_string(sig.total_curves()));

  int legs = 0;
  for (const auto& e : graph.curves) legs += e.is_leg() ? 1 : 0;
  add("leg-count", legs == sig.n,
      std::to_string(legs) + " legs vs n=" + std::to_string(sig.n));

  add("pants-count", graph.num_pants == sig.num_pants(),
      std::to_string(graph.num_pants) + " pants vs " +
          std::to_string(sig.num_pants()));

  // trivalence: every slot of every vertex carries exactly one edge end
  {
    std::map<std::pair<int, int>, int> uses;
    bool in_range = true;
    for (const auto& e : graph.curves) {
      auto touch = [&](const SlotRef& s) {
        if (s.pants < 0) return;
        in_range &= s.pants < graph.num_pants && s.slot >= 0 && s.slot < 3;
        uses[{s.pants, s.slot}]++;
      };
      touch(e.end0);
      if (!e.is_leg()) touch(e.end1);
    }
    bool trivalent = in_range;
    for (int p = 0; p < graph.num_pants && trivalent; ++p)
      for (int s = 0; s < 3; ++s) {
        auto it = uses.find({p, s});
        trivalent &= it != uses.end() && it->second == 1;
      }
    trivalent &= static_cast<int>(uses.size()) == 3 * graph.num_pants;
    add("trivalence", trivalent, "each vertex carries 3 incidences");
  }

  // Euler characteristic / genus via the first Betti number of the graph
  {
    int interior = total - legs;
    add("interior-count", interior == sig.interior_curves(),
        std::to_string(interior) + " interior vs " +
            std::to_string(sig.interior_curves()));

    // connectivity by union-find over vertices
    std::vector<int> parent(std::max(graph.num_pants, 1));
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : graph.curves)
      if (!e.is_leg()) parent[find(e.end0.pants)] = find(e.end1.pants);
    int comps = 0;
    for (int p = 0; p < graph.num_pants; ++p) comps += find(p) == p ? 1 : 0;
    add("connected", comps == 1, std::to_string(comps) + " component(s)");

    const int betti = interior - graph.num_pants + comps;
    add("genus", betti == sig.g,
        "graph cycle rank " + std::to_string(betti) + " vs g=" +
            std::to_string(sig.g));
  }

  return rep;
}

}  // namespace dpants::topo
