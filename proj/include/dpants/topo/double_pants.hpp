#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpants/moves/move.hpp"
#include "dpants/topo/homology.hpp"
#include "dpants/topo/surface.hpp"

namespace dpants::topo {

/// Word over the generator alphabet of a group model: (generator, power)
/// letters, composed left to right.
struct Word {
  std::vector<std::pair<std::string, int>> letters;

  Word() = default;
  static Word letter(std::string gen, int power = 1) {
    Word w;
    if (power != 0) w.letters.push_back({std::move(gen), power});
    return w;
  }
  Word operator*(const Word& o) const;
  Word inverse() const;
  std::string str() const;
  bool empty() const { return letters.empty(); }
};

/// Per-curve decoration: stable label, integer homology class, group word
/// (when one is maintained), and known geometric intersection counts with
/// the other curves of the current decomposition.
struct CurveRecord {
  CurveId id;
  HomologyVector homology;
  Word word;
  std::map<CurveId, int> intersections;

  int intersection_with(const CurveId& other) const {
    auto it = intersections.find(other);
    return it == intersections.end() ? 0 : it->second;
  }
};

struct ConjugatePair {
  CurveId a, b;
  enum Kind { Handle, Flip } kind;
};

/// A pair of pants decompositions of one surface whose homology lattices
/// are in general position (checked, not assumed).
struct DoublePants {
  PantsGraph part_a;
  PantsGraph part_b;
  std::map<CurveId, CurveRecord> records;
  std::vector<ConjugatePair> conjugates;
  std::optional<moves::MoveTrail> certificate;

  const SurfaceSig& sig() const { return part_b.sig; }
  const PantsGraph& part(moves::Part p) const {
    return p == moves::Part::A ? part_a : part_b;
  }
  PantsGraph& part(moves::Part p) {
    return p == moves::Part::A ? part_a : part_b;
  }

  const CurveRecord& record(const CurveId& id) const;
  CurveRecord& record(const CurveId& id);

  /// Interior curves present in both parts (boundary legs excluded).
  std::vector<CurveId> double_curves() const;

  /// All distinct curves of the decomposition: interior curves of both
  /// parts (doubles once) plus the legs, in canonical label order.
  std::vector<CurveId> chart_curves() const;

  /// Homology lattice spanned by the curve classes of one part.
  IntegerLattice lagrangian(moves::Part p) const;

  bool in_general_position() const;
};

enum class DPClass { Standard, StrictlyStandard, Special, Other };

struct Classification {
  DPClass cls;
  std::vector<ConjugatePair> pairs;  // populated for special decompositions
};

/// Classification per the structural definitions: standard needs g doubled
/// handles; strictly standard additionally has exactly 2g-3+n double
/// curves; special has a standard b-part, no double curves, and a full
/// conjugate pairing.
Classification classify(const DoublePants& dp);

/// Lattice spanned by homology classes of the curves of P.
IntegerLattice lagrangian(const PantsGraph& p,
                          const std::map<CurveId, CurveRecord>& records);

}  // namespace dpants::topo
