#include "dpants/topo/double_pants.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dpants::topo {

Word Word::operator*(const Word& o) const {
  Word r = *this;
  for (const auto& [g, p] : o.letters) {
    if (!r.letters.empty() && r.letters.back().first == g) {
      r.letters.back().second += p;
      if (r.letters.back().second == 0) r.letters.pop_back();
    } else if (p != 0) {
      r.letters.push_back({g, p});
    }
  }
  return r;
}

Word Word::inverse() const {
  Word r;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    r.letters.push_back({it->first, -it->second});
  return r;
}

std::string Word::str() const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, p] : letters) {
    if (!first) os << ".";
    first = false;
    os << g;
    if (p != 1) os << "^" << p;
  }
  return os.str();
}

const CurveRecord& DoublePants::record(const CurveId& id) const {
  auto it = records.find(id);
  if (it == records.end())
    throw std::out_of_range("DoublePants: no record for curve " + id);
  return it->second;
}

CurveRecord& DoublePants::record(const CurveId& id) {
  auto it = records.find(id);
  if (it == records.end())
    throw std::out_of_range("DoublePants: no record for curve " + id);
  return it->second;
}

std::vector<CurveId> DoublePants::double_curves() const {
  std::vector<CurveId> out;
  for (const CurveId& id : part_a.interior_ids())
    if (part_b.contains(id) && !part_b.edge(id).is_leg()) out.push_back(id);
  return out;
}

std::vector<CurveId> DoublePants::chart_curves() const {
  std::set<CurveId> ids;
  for (const auto& id : part_a.interior_ids()) ids.insert(id);
  for (const auto& id : part_b.interior_ids()) ids.insert(id);
  for (const auto& id : part_b.leg_ids()) ids.insert(id);
  return {ids.begin(), ids.end()};
}

IntegerLattice DoublePants::lagrangian(moves::Part p) const {
  return topo::lagrangian(part(p), records);
}

bool DoublePants::in_general_position() const {
  return general_position(lagrangian(moves::Part::A),
                          lagrangian(moves::Part::B),
                          sig().homology_rank());
}

IntegerLattice lagrangian(const PantsGraph& p,
                          const std::map<CurveId, CurveRecord>& records) {
  IntegerLattice lat;
  lat.ambient_rank = p.sig.homology_rank();
  for (const CurveId& id : p.interior_ids()) {
    auto it = records.find(id);
    if (it == records.end())
      throw std::out_of_range("lagrangian: missing homology for " + id);
    if (static_cast<int>(it->second.homology.coeffs.size()) !=
        lat.ambient_rank)
      throw std::invalid_argument("lagrangian: homology rank mismatch");
    if (!it->second.homology.is_zero())
      lat.rows.push_back(it->second.homology.coeffs);
  }
  lat.rows = row_basis(lat.rows);
  return lat;
}

namespace {

// Handle boundary curve -> loop curve, one entry per self-folded vertex.
std::map<CurveId, CurveId> handle_map(const PantsGraph& g) {
  std::map<CurveId, CurveId> out;
  for (int p = 0; p < g.num_pants; ++p) {
    const auto slots = g.slots_of(p);
    int loop = -1, boundary = -1;
    for (const auto& [ci, end] : slots) {
      if (ci < 0) continue;
      if (g.curves[ci].is_self_loop())
        loop = ci;
      else
        boundary = ci;
    }
    if (loop >= 0 && boundary >= 0)
      out[g.curves[boundary].id] = g.curves[loop].id;
  }
  return out;
}

}  // namespace

Classification classify(const DoublePants& dp) {
  const auto doubles = dp.double_curves();
  const std::set<CurveId> double_set(doubles.begin(), doubles.end());
  const int g = dp.sig().g;

  const auto handles_a = handle_map(dp.part_a);
  const auto handles_b = handle_map(dp.part_b);

  // standard: g handles in each part, cut out by the same double curves
  int doubled_handles = 0;
  for (const auto& [boundary, loop_a] : handles_a) {
    auto it = handles_b.find(boundary);
    const bool cut_by_double =
        double_set.count(boundary) || dp.part_b.edge(boundary).is_leg();
    if (it != handles_b.end() && cut_by_double) ++doubled_handles;
  }
  const bool standard = dp.part_a.count_self_loops() == g &&
                        dp.part_b.count_self_loops() == g &&
                        doubled_handles == g;

  if (standard) {
    const int want_doubles = 2 * g - 3 + dp.sig().n;
    if (static_cast<int>(doubles.size()) == want_doubles)
      return {DPClass::StrictlyStandard, dp.conjugates};
    return {DPClass::Standard, dp.conjugates};
  }

  if (doubles.empty() && dp.part_b.is_standard() &&
      static_cast<int>(dp.conjugates.size()) ==
          dp.sig().interior_curves()) {
    int handle_pairs = 0, flip_pairs = 0;
    for (const auto& cp : dp.conjugates)
      (cp.kind == ConjugatePair::Handle ? handle_pairs : flip_pairs)++;
    if (handle_pairs == g && flip_pairs == 2 * g - 3 + dp.sig().n)
      return {DPClass::Special, dp.conjugates};
  }
  return {DPClass::Other, {}};
}

}  // namespace dpants::topo
