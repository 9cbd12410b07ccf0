#include "dpants/topo/catalog.hpp"

#include <stdexcept>

namespace dpants::topo {

namespace {

std::string num(const std::string& base, int i) {
  return base + std::to_string(i);
}

}  // namespace

PantsGraph standard_graph(SurfaceSig sig, const std::string& loop_prefix) {
  if (!sig.valid())
    throw std::invalid_argument("standard_graph: need 2g + n > 2");
  const int g = sig.g, n = sig.n;
  PantsGraph pg;
  pg.sig = sig;
  pg.num_pants = sig.num_pants();

  // handle vertices 0..g-1: slots 0,1 carry the loop, slot 2 the boundary
  for (int i = 1; i <= g; ++i)
    pg.curves.push_back(
        {num(loop_prefix, i), {i - 1, 0}, {i - 1, 1}});

  if (g == 1 && n == 1) {
    pg.curves.push_back({num("bd", 1), {0, 2}, {}});
    return pg;
  }
  if (g == 2 && n == 0) {
    pg.curves.push_back({"c1", {0, 2}, {1, 2}});
    return pg;
  }

  // trunk: a chain of pants carrying the g handle stubs then the n legs
  struct Stub {
    CurveId id;
    bool leg;
    int handle;  // vertex to attach to, or -1 for a leg
  };
  std::vector<Stub> stubs;
  for (int i = 1; i <= g; ++i) stubs.push_back({num("c", i), false, i - 1});
  for (int j = 1; j <= n; ++j) stubs.push_back({num("bd", j), true, -1});
  const int m = static_cast<int>(stubs.size());  // g + n >= 3 here

  auto attach = [&](const Stub& s, int pants, int slot) {
    if (s.leg)
      pg.curves.push_back({s.id, {pants, slot}, {}});
    else
      pg.curves.push_back({s.id, {s.handle, 2}, {pants, slot}});
  };

  const int first_trunk = g;  // trunk vertices follow the handle vertices
  if (m == 3) {
    for (int s = 0; s < 3; ++s) attach(stubs[s], first_trunk, s);
    return pg;
  }
  // chain of m - 2 trunk vertices joined by curves t1..t_{m-3}
  attach(stubs[0], first_trunk, 0);
  attach(stubs[1], first_trunk, 1);
  for (int j = 1; j <= m - 3; ++j) {
    pg.curves.push_back(
        {num("t", j), {first_trunk + j - 1, 2}, {first_trunk + j, 0}});
    if (j < m - 3)
      attach(stubs[j + 1], first_trunk + j, 1);
  }
  attach(stubs[m - 2], first_trunk + m - 3, 1);
  attach(stubs[m - 1], first_trunk + m - 3, 2);
  return pg;
}

DoublePants strictly_standard_dp(SurfaceSig sig) {
  DoublePants dp;
  dp.part_a = standard_graph(sig, "a");
  dp.part_b = standard_graph(sig, "b");

  const int g = sig.g;
  for (const CurveId& id : dp.part_a.all_ids()) {
    CurveRecord rec;
    rec.id = id;
    rec.homology = HomologyVector::zero(g);
    dp.records[id] = rec;
  }
  for (const CurveId& id : dp.part_b.all_ids()) {
    if (dp.records.count(id)) continue;
    CurveRecord rec;
    rec.id = id;
    rec.homology = HomologyVector::zero(g);
    dp.records[id] = rec;
  }
  for (int i = 1; i <= g; ++i) {
    const CurveId a = num("a", i), b = num("b", i);
    dp.records[a].homology = HomologyVector::alpha(g, i - 1);
    dp.records[b].homology = HomologyVector::beta(g, i - 1);
    dp.records[a].intersections[b] = 1;
    dp.records[b].intersections[a] = 1;
    dp.conjugates.push_back({a, b, ConjugatePair::Handle});
  }

  dp.certificate = moves::MoveTrail{};  // already strictly standard
  return dp;
}

}  // namespace dpants::topo
