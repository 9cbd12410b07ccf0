#include "dpants/topo/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace dpants::topo {

namespace {

using std::int64_t;

void check_same_rank(const HomologyVector& x, const HomologyVector& y) {
  if (x.coeffs.size() != y.coeffs.size())
    throw std::invalid_argument("homology: mismatched ambient rank");
}

}  // namespace

HomologyVector HomologyVector::alpha(int genus, int i) {
  HomologyVector h = zero(genus);
  h.coeffs.at(i) = 1;
  return h;
}

HomologyVector HomologyVector::beta(int genus, int i) {
  HomologyVector h = zero(genus);
  h.coeffs.at(genus + i) = 1;
  return h;
}

bool HomologyVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](int64_t v) { return v == 0; });
}

HomologyVector HomologyVector::operator+(const HomologyVector& o) const {
  check_same_rank(*this, o);
  HomologyVector r = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

HomologyVector HomologyVector::operator-() const { return scaled(-1); }

HomologyVector HomologyVector::scaled(int64_t k) const {
  HomologyVector r = *this;
  for (auto& v : r.coeffs) v *= k;
  return r;
}

int64_t symplectic_pairing(const HomologyVector& x, const HomologyVector& y) {
  check_same_rank(x, y);
  const int g = x.genus();
  int64_t s = 0;
  for (int i = 0; i < g; ++i)
    s += x.coeffs[i] * y.coeffs[g + i] - x.coeffs[g + i] * y.coeffs[i];
  return s;
}

HomologyVector twist_action(const HomologyVector& x, const HomologyVector& c,
                            int64_t k) {
  return x + c.scaled(k * symplectic_pairing(x, c));
}

int IntegerLattice::rank() const {
  IntMatrix basis = row_basis(rows);
  return static_cast<int>(basis.size());
}

namespace {

void swap_rows(IntMatrix& m, size_t i, size_t j) { std::swap(m[i], m[j]); }

void swap_cols(IntMatrix& m, size_t i, size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

// row[i] += f * row[j]
void add_row(IntMatrix& m, size_t i, size_t j, int64_t f) {
  for (size_t k = 0; k < m[i].size(); ++k) m[i][k] += f * m[j][k];
}

void add_col(IntMatrix& m, size_t i, size_t j, int64_t f) {
  for (auto& row : m) row[i] += f * row[j];
}

}  // namespace

std::vector<int64_t> smith_normal_form(IntMatrix m) {
  std::vector<int64_t> divisors;
  if (m.empty() || m[0].empty()) return divisors;
  const size_t rows = m.size(), cols = m[0].size();
  size_t t = 0;
  while (t < rows && t < cols) {
    // locate a nonzero pivot of minimal absolute value in the active block
    size_t pi = t, pj = t;
    int64_t best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 &&
            (best == 0 || std::abs(m[i][j]) < std::abs(best))) {
          best = m[i][j];
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    swap_rows(m, t, pi);
    swap_cols(m, t, pj);

    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i)
      if (m[i][t] % m[t][t] != 0) clean = true;
    // eliminate the pivot row and column; restart if a remainder survives
    bool progress = true;
    while (progress) {
      progress = false;
      for (size_t i = t + 1; i < rows; ++i)
        if (m[i][t] != 0) {
          add_row(m, i, t, -(m[i][t] / m[t][t]));
          if (m[i][t] != 0) {
            swap_rows(m, t, i);
            progress = true;
          }
        }
      for (size_t j = t + 1; j < cols; ++j)
        if (m[t][j] != 0) {
          add_col(m, j, t, -(m[t][j] / m[t][t]));
          if (m[t][j] != 0) {
            swap_cols(m, t, j);
            progress = true;
          }
        }
    }
    (void)clean;

    // divisibility: fold any non-multiple entry into the pivot position
    bool fixed = false;
    for (size_t i = t + 1; i < rows && !fixed; ++i)
      for (size_t j = t + 1; j < cols && !fixed; ++j)
        if (m[i][j] % m[t][t] != 0) {
          add_row(m, t, i, 1);
          fixed = true;
        }
    if (fixed) continue;  // redo this pivot

    divisors.push_back(std::abs(m[t][t]));
    ++t;
  }
  return divisors;
}

IntMatrix row_basis(IntMatrix m) {
  if (m.empty()) return {};
  const size_t cols = m[0].size();
  size_t lead = 0, r = 0;
  while (r < m.size() && lead < cols) {
    // find a nonzero entry of minimal absolute value in this column
    size_t pivot = m.size();
    for (size_t i = r; i < m.size(); ++i)
      if (m[i][lead] != 0 &&
          (pivot == m.size() ||
           std::abs(m[i][lead]) < std::abs(m[pivot][lead])))
        pivot = i;
    if (pivot == m.size()) {
      ++lead;
      continue;
    }
    swap_rows(m, r, pivot);
    // reduce the column below; euclidean passes until clear
    bool again = true;
    while (again) {
      again = false;
      for (size_t i = r + 1; i < m.size(); ++i)
        if (m[i][lead] != 0) {
          add_row(m, i, r, -(m[i][lead] / m[r][lead]));
          if (m[i][lead] != 0) {
            swap_rows(m, r, i);
            again = true;
          }
        }
    }
    if (m[r][lead] < 0)
      for (auto& v : m[r]) v = -v;
    ++r;
    ++lead;
  }
  m.resize(r);
  // reduce entries above pivots for a canonical form
  for (size_t i = r; i-- > 0;) {
    size_t lead_col = 0;
    while (lead_col < cols && m[i][lead_col] == 0) ++lead_col;
    if (lead_col == cols) continue;
    for (size_t j = 0; j < i; ++j) {
      const int64_t q =
          (m[j][lead_col] % m[i][lead_col] + m[i][lead_col]) %
          m[i][lead_col];
      add_row(m, j, i, -((m[j][lead_col] - q) / m[i][lead_col]));
    }
  }
  return m;
}

bool general_position(const IntegerLattice& la, const IntegerLattice& lb,
                      int homology_rank) {
  if (la.ambient_rank != homology_rank || lb.ambient_rank != homology_rank)
    throw std::invalid_argument("general_position: ambient rank mismatch");
  if (homology_rank == 0) return true;  // genus 0: both lattices are zero
  IntMatrix stacked;
  for (const auto& r : la.rows) stacked.push_back(r);
  for (const auto& r : lb.rows) stacked.push_back(r);
  if (la.rank() + lb.rank() != homology_rank) return false;
  const auto divisors = smith_normal_form(std::move(stacked));
  if (static_cast<int>(divisors.size()) != homology_rank) return false;
  return std::all_of(divisors.begin(), divisors.end(),
                     [](int64_t d) { return d == 1; });
}

}  // namespace dpants::topo
