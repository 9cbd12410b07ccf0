#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpants/topo/surface.hpp"

namespace dpants::moves {

enum class Part : int { A = 0, B = 1 };

inline Part other(Part p) { return p == Part::A ? Part::B : Part::A; }
inline const char* part_name(Part p) { return p == Part::A ? "a" : "b"; }

enum class MoveKind : int { Flip = 0, HandleTwist = 1, QuasiHandleTwist = 2 };

/// One elementary transformation of a double pants decomposition.
///
/// Flip: replace the regular curve `curve` of part `part` by its k-indexed
/// flip image (k = 0 is the seam-aligned image of the local four-holed
/// sphere; consecutive k differ by the elementary seam shift).
///
/// HandleTwist: `curve` is the interior curve of a doubled handle used as
/// the twisting curve; the partner curve in the other part is replaced by
/// its k-th twist image (direction is the sign of k).
///
/// QuasiHandleTwist: twist along `curve` conjugated by an auxiliary flip;
/// applicable without double curves.
struct Move {
  MoveKind kind = MoveKind::Flip;
  Part part = Part::A;
  topo::CurveId curve;
  int k = 0;

  bool operator==(const Move&) const = default;
};

/// Ordered move list bound to a base decomposition by hash; replaying the
/// moves from the base reproduces the head decomposition exactly.
struct MoveTrail {
  std::uint64_t base_hash = 0;
  std::vector<Move> moves;
  bool no_double_curves_en_route = false;
};

}  // namespace dpants::moves
