#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dpants::topo {

using CurveId = std::string;

/// Signature of the oriented surface S_{g,n}; requires 2g + n > 2.
struct SurfaceSig {
  int g = 0;
  int n = 0;

  bool valid() const { return g >= 0 && n >= 0 && 2 * g + n > 2; }
  int total_curves() const { return 3 * g - 3 + 2 * n; }
  int interior_curves() const { return 3 * g - 3 + n; }
  int num_pants() const { return 2 * g - 2 + n; }
  int chart_dim() const { return 6 * g - 6 + 3 * n; }
  int homology_rank() const { return 2 * g; }

  bool operator==(const SurfaceSig&) const = default;
};

struct SlotRef {
  int pants = -1;
  int slot = -1;  // 0..2
  bool operator==(const SlotRef&) const = default;
};

/// Edge of the pants graph. A leg (boundary curve of S) has only end0;
/// a self-loop (both ends on one vertex) is the identified boundary curve
/// of a self-folded pair of pants, i.e. the interior curve of a handle.
struct CurveEdge {
  CurveId id;
  SlotRef end0;
  SlotRef end1;

  bool is_leg() const { return end1.pants < 0; }
  bool is_self_loop() const {
    return !is_leg() && end0.pants == end1.pants;
  }
};

/// Decorated trivalent graph of a pants decomposition: vertices are pairs
/// of pants, edges are decomposition curves, legs are boundary components.
struct PantsGraph {
  SurfaceSig sig;
  int num_pants = 0;
  std::vector<CurveEdge> curves;

  int find_index(const CurveId& id) const;
  const CurveEdge& edge(const CurveId& id) const;
  bool contains(const CurveId& id) const { return find_index(id) >= 0; }

  /// Curve index and end (0/1) attached at each slot of a vertex.
  std::array<std::pair<int, int>, 3> slots_of(int pants) const;

  /// Regular: interior and not the curve inside a handle.
  bool is_regular(const CurveId& id) const;

  std::vector<CurveId> interior_ids() const;  // sorted
  std::vector<CurveId> leg_ids() const;       // sorted
  std::vector<CurveId> all_ids() const;       // sorted

  int count_self_loops() const;
  bool is_standard() const;  // has g disjoint handles

  /// Pair of pants on the two sides of an interior curve (equal for a
  /// self-loop), with the slots they attach through.
  std::pair<SlotRef, SlotRef> sides_of(const CurveId& id) const;
};

struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool passed() const;
  std::string summary() const;
};

/// Structural validation of a pants graph against a surface signature;
/// violations are reported individually, never repaired.
ValidationReport validate_pants_graph(const PantsGraph& graph,
                                      const SurfaceSig& sig);

}  // namespace dpants::topo
