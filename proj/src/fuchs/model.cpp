#include "dpants/fuchs/model.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dpants::fuchs {

namespace {

constexpr double kPi = std::numbers::pi;

// Gluing across a curve: advance by the twist offset along the common
// axis, then turn around so the far pants develops on the other side.
Mat2 gluing_map(double offset) {
  return Mat2::translation(offset) * Mat2::rotation(kPi);
}

std::string gen_c(const topo::CurveId& id) { return "C_" + id; }
std::string gen_d(const topo::CurveId& id) { return "D_" + id; }
std::string gen_g(const topo::CurveId& id) { return "G_" + id; }

}  // namespace

Mat2 FuchsianModel::eval(const topo::Word& w) const {
  Mat2 m = Mat2::identity();
  for (const auto& [name, power] : w.letters) {
    auto it = generators.find(name);
    if (it == generators.end())
      throw std::out_of_range("FuchsianModel: unknown generator " + name);
    const Mat2 base = power > 0 ? it->second : it->second.inverse();
    for (int i = 0; i < std::abs(power); ++i) m = m * base;
  }
  return m;
}

double FuchsianModel::word_length(const topo::Word& w) const {
  return curve_length(*this, w);
}

Mat2 FuchsianModel::curve_holonomy(const topo::CurveId& id) const {
  const auto& e = graph.edge(id);
  const auto& name = e.is_leg() ? gen_d(id) : gen_c(id);
  return generators.at(name);
}

Geodesic FuchsianModel::curve_axis(const topo::CurveId& id) const {
  return hyp::axis_of(curve_holonomy(id));
}

Mat2 FuchsianModel::gluing(const topo::CurveId& id) const {
  return generators.at(gen_g(id));
}

Mat2 FuchsianModel::side_placement(const topo::CurveId& id, int end) const {
  const auto& e = graph.edge(id);
  if (e.is_leg() && end != 0)
    throw std::domain_error("side_placement: leg has a single side");
  const topo::SlotRef side = end == 0 ? e.end0 : e.end1;
  Mat2 place = pants[side.pants].anchor;
  if (end == 1 && !edge_in_tree.at(id)) place = gluing(id) * place;
  return place;
}

hyp::Complex FuchsianModel::opposite_seam_midpoint(const topo::CurveId& id,
                                                   int end) const {
  const auto& e = graph.edge(id);
  const topo::SlotRef side = end == 0 ? e.end0 : e.end1;
  const Mat2 place = side_placement(id, end);
  // seam joining the two other slots of this vertex
  const int seam_index = (side.slot + 1) % 3;
  return place.apply(pants[side.pants].chart.seam_mid[seam_index]);
}

FuchsianModel::FlankData FuchsianModel::flanks(const topo::CurveId& id,
                                               int end) const {
  const auto& e = graph.edge(id);
  const topo::SlotRef side = end == 0 ? e.end0 : e.end1;
  const Mat2 place = side_placement(id, end);
  const auto slots = graph.slots_of(side.pants);
  FlankData out;
  int k = 0;
  for (int s = (side.slot + 1) % 3; k < 2; s = (s + 1) % 3, ++k) {
    out.curve[k] = graph.curves[slots[s].first].id;
    out.axis[k] = apply(place, pants[side.pants].chart.axis[s]);
  }
  return out;
}

FuchsianModel build_fuchsian(const topo::PantsGraph& graph, const FNCoords& fn,
                             const Tolerances& tol) {
  fn.validate(graph);

  FuchsianModel m;
  m.graph = graph;
  m.fn = fn;
  m.pants.resize(graph.num_pants);

  for (int p = 0; p < graph.num_pants; ++p) {
    const auto slots = graph.slots_of(p);
    double l[3];
    for (int s = 0; s < 3; ++s)
      l[s] = fn.length(graph.curves[slots[s].first].id);
    m.pants[p].chart = hyp::build_pants_chart(l[0], l[1], l[2]);
    if (m.pants[p].chart.closure_residual > tol.geometric)
      throw std::runtime_error("build_fuchsian: hexagon closure residual " +
                               std::to_string(m.pants[p].chart.closure_residual));
  }

  // develop across a BFS spanning tree rooted at vertex 0
  std::vector<int> placed(graph.num_pants, 0);
  for (auto& e : graph.curves)
    if (!e.is_leg()) m.edge_in_tree[e.id] = false;

  auto offset_of = [&](const topo::CurveEdge& e) {
    return fn.length(e.id) * fn.twist(e.id) / (2 * kPi);
  };
  auto slot_frame = [&](const topo::SlotRef& s) {
    return m.pants[s.pants].chart.slot_frame[s.slot];
  };

  m.pants[0].anchor = Mat2::identity();
  placed[0] = 1;
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop_front();
    for (size_t i = 0; i < graph.curves.size(); ++i) {
      const auto& e = graph.curves[i];
      if (e.is_leg() || e.is_self_loop()) continue;
      int from_end = -1;
      if (e.end0.pants == u && !placed[e.end1.pants]) from_end = 0;
      if (e.end1.pants == u && !placed[e.end0.pants]) from_end = 1;
      if (from_end < 0) continue;
      const topo::SlotRef here = from_end == 0 ? e.end0 : e.end1;
      const topo::SlotRef there = from_end == 0 ? e.end1 : e.end0;
      const double t = offset_of(e) * (from_end == 0 ? 1.0 : -1.0);
      m.pants[there.pants].anchor = m.pants[u].anchor * slot_frame(here) *
                                    gluing_map(t) *
                                    slot_frame(there).inverse();
      placed[there.pants] = 1;
      m.edge_in_tree[e.id] = true;
      frontier.push_back(there.pants);
    }
  }
  for (int p = 0; p < graph.num_pants; ++p)
    if (!placed[p])
      throw std::invalid_argument("build_fuchsian: pants graph disconnected");

  // generators: oriented curve holonomies, plus one gluing transformation
  // per non-tree edge
  for (const auto& e : graph.curves) {
    const Mat2 anchor0 = m.pants[e.end0.pants].anchor;
    const Mat2 hol = anchor0 *
                     m.pants[e.end0.pants].chart.holonomy[e.end0.slot] *
                     anchor0.inverse();
    m.generators[e.is_leg() ? gen_d(e.id) : gen_c(e.id)] = hol;
    if (!e.is_leg() && !m.edge_in_tree[e.id]) {
      const Mat2 g = m.pants[e.end0.pants].anchor * slot_frame(e.end0) *
                     gluing_map(offset_of(e)) * slot_frame(e.end1).inverse() *
                     m.pants[e.end1.pants].anchor.inverse();
      m.generators[gen_g(e.id)] = g;
    }
  }

  // words: decomposition curves are single generators
  for (const auto& e : graph.curves)
    m.curve_words[e.id] =
        topo::Word::letter(e.is_leg() ? gen_d(e.id) : gen_c(e.id));

  // defining relations: one per vertex, W2 * W1 * W0 with the slot words
  // expressed over the generator alphabet
  auto slot_word = [&](int p, int s) -> topo::Word {
    const auto slots = graph.slots_of(p);
    const auto& e = graph.curves[slots[s].first];
    if (e.is_leg()) return topo::Word::letter(gen_d(e.id));
    const bool canonical_side = slots[s].second == 0;
    if (canonical_side) return topo::Word::letter(gen_c(e.id));
    if (m.edge_in_tree[e.id]) return topo::Word::letter(gen_c(e.id), -1);
    return topo::Word::letter(gen_g(e.id), -1) *
           topo::Word::letter(gen_c(e.id), -1) *
           topo::Word::letter(gen_g(e.id));
  };
  for (int p = 0; p < graph.num_pants; ++p)
    m.relations.push_back(slot_word(p, 2) * slot_word(p, 1) *
                          slot_word(p, 0));

  for (const auto& r : m.relations)
    m.max_relation_residual =
        std::max(m.max_relation_residual, m.eval(r).identity_residual());
  if (m.max_relation_residual > tol.geometric) {
    std::ostringstream os;
    os << "build_fuchsian: relation residual " << m.max_relation_residual;
    throw std::runtime_error(os.str());
  }
  return m;
}

double curve_length(const FuchsianModel& model, const topo::Word& word) {
  const Mat2 g = model.eval(word);
  const double t = std::abs(g.trace());
  if (t <= 2 + 1e-14)
    throw std::domain_error(
        "curve_length: word does not evaluate to a hyperbolic element");
  return hyp::trace_to_length(t);
}

}  // namespace dpants::fuchs
