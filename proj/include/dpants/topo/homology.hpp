#pragma once

#include <cstdint>
#include <vector>

namespace dpants::topo {

/// Integer homology class in the fixed symplectic basis
/// (alpha_1..alpha_g, beta_1..beta_g); coeffs has size 2g.
struct HomologyVector {
  std::vector<std::int64_t> coeffs;

  static HomologyVector zero(int genus) {
    return {std::vector<std::int64_t>(2 * genus, 0)};
  }
  static HomologyVector alpha(int genus, int i);
  static HomologyVector beta(int genus, int i);

  int genus() const { return static_cast<int>(coeffs.size()) / 2; }
  bool is_zero() const;
  bool operator==(const HomologyVector&) const = default;

  HomologyVector operator+(const HomologyVector& o) const;
  HomologyVector operator-() const;
  HomologyVector scaled(std::int64_t k) const;
};

/// Standard symplectic form: <alpha_i, beta_i> = 1, all else 0.
std::int64_t symplectic_pairing(const HomologyVector& x,
                                const HomologyVector& y);

/// Action of the k-th power of the twist along c: x + k <x,c> c.
HomologyVector twist_action(const HomologyVector& x, const HomologyVector& c,
                            std::int64_t k);

/// Integer lattice in Z^{2g} given by a generating set of row vectors.
struct IntegerLattice {
  int ambient_rank = 0;  // 2g
  std::vector<std::vector<std::int64_t>> rows;

  int rank() const;  // rational rank of the span
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Elementary divisors d_1 | d_2 | ... of an integer matrix (non-negative,
/// zeros trailing), via integer row/column reduction.
std::vector<std::int64_t> smith_normal_form(IntMatrix m);

/// Hermite-style canonical basis of the row span (used as the lattice
/// basis returned by lagrangian()).
IntMatrix row_basis(IntMatrix m);

/// True iff the two lattices intersect trivially and jointly span Z^{2g}:
/// ranks add up to 2g and the stacked basis has all elementary divisors 1.
bool general_position(const IntegerLattice& la, const IntegerLattice& lb,
                      int homology_rank);

}  // namespace dpants::topo
