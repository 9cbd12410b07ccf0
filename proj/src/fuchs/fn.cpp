#include "dpants/fuchs/fn.hpp"

#include <stdexcept>

namespace dpants::fuchs {

double FNCoords::length(const topo::CurveId& id) const {
  auto it = lengths.find(id);
  if (it == lengths.end())
    throw std::out_of_range("FNCoords: no length for " + id);
  return it->second;
}

double FNCoords::twist(const topo::CurveId& id) const {
  auto it = twists.find(id);
  if (it == twists.end())
    throw std::out_of_range("FNCoords: no twist for " + id);
  return it->second;
}

void FNCoords::validate(const topo::PantsGraph& graph) const {
  const auto all = graph.all_ids();
  if (lengths.size() != all.size())
    throw std::invalid_argument("FNCoords: length key set mismatch");
  for (const auto& id : all)
    if (!(length(id) > 0))
      throw std::invalid_argument("FNCoords: non-positive length for " + id);
  const auto interior = graph.interior_ids();
  if (twists.size() != interior.size())
    throw std::invalid_argument("FNCoords: twist key set mismatch");
  for (const auto& id : interior) twist(id);
}

std::vector<double> FNCoords::pack(const topo::PantsGraph& graph) const {
  std::vector<double> out;
  for (const auto& id : graph.all_ids()) out.push_back(length(id));
  for (const auto& id : graph.interior_ids()) out.push_back(twist(id));
  return out;
}

FNCoords FNCoords::unpack(const topo::PantsGraph& graph,
                          const std::vector<double>& values) {
  const auto all = graph.all_ids();
  const auto interior = graph.interior_ids();
  if (values.size() != all.size() + interior.size())
    throw std::invalid_argument("FNCoords: packed size mismatch");
  FNCoords fn;
  size_t k = 0;
  for (const auto& id : all) fn.lengths[id] = values[k++];
  for (const auto& id : interior) fn.twists[id] = values[k++];
  return fn;
}

std::vector<std::string> FNCoords::pack_names(const topo::PantsGraph& graph) {
  std::vector<std::string> out;
  for (const auto& id : graph.all_ids()) out.push_back("l(" + id + ")");
  for (const auto& id : graph.interior_ids())
    out.push_back("alpha(" + id + ")");
  return out;
}

}  // namespace dpants::fuchs
