#pragma once

// Wild part of the conductor exponent at 2 from the lower ramification
// filtration G_0 >= G_1 >= ... acting on J[3] = F_3^6:
//
//   n_wild = sum_k (6 - dim J[3]^{G_k}) / [G_0 : G_k].

#include <optional>
#include <string>
#include <vector>

#include "tors3/error.hpp"
#include "tors3/rational.hpp"

namespace tors3 {

inline constexpr int kTorsionDim = 6;

/// 6x6 matrix over F_3, entries in {0, 1, 2}.
using F3Matrix = std::vector<std::vector<int>>;

struct GaloisAction {
  std::vector<F3Matrix> generators;
};

struct RamificationGroup {
  long order = 1;
  std::optional<GaloisAction> action;
  int fixed_dim = kTorsionDim;  // computed from `action` when present
};

struct RamificationFiltration {
  std::vector<RamificationGroup> groups;  // G_0, G_1, ...
};

namespace detail {

inline int mod3(long x) { return static_cast<int>(((x % 3) + 3) % 3); }

/// Rank over F_3 by row reduction; `rows` is modified.
inline int rank_f3(std::vector<std::vector<int>> rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = rank;
    while (piv < static_cast<int>(rows.size()) && rows[piv][c] == 0) ++piv;
    if (piv == static_cast<int>(rows.size())) continue;
    std::swap(rows[piv], rows[rank]);
    const int inv = rows[rank][c];  // 1 and 2 are their own inverses mod 3
    for (auto& v : rows[rank]) v = mod3(v * inv);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const int f = rows[r][c];
      for (int k = 0; k < cols; ++k) rows[r][k] = mod3(rows[r][k] - f * rows[rank][k]);
    }
    ++rank;
  }
  return rank;
}

inline void check_f3_matrix(const F3Matrix& m) {
  if (m.size() != kTorsionDim) throw InvariantError("generator must be 6x6");
  for (const auto& row : m) {
    if (row.size() != kTorsionDim) throw InvariantError("generator must be 6x6");
    for (int v : row)
      if (v < 0 || v > 2) throw InvariantError("generator entries must be 0, 1 or 2");
  }
  if (rank_f3(m) != kTorsionDim) throw InvariantError("generator is not invertible mod 3");
}

}  // namespace detail

/// dim over F_3 of the common fixed space: the nullspace of the stacked
/// matrices M - I.
inline int fixed_subspace_dim(const GaloisAction& action) {
  std::vector<std::vector<int>> stacked;
  for (const auto& m : action.generators) {
    detail::check_f3_matrix(m);
    for (int i = 0; i < kTorsionDim; ++i) {
      auto row = m[i];
      row[i] = detail::mod3(row[i] - 1);
      stacked.push_back(row);
    }
  }
  return kTorsionDim - detail::rank_f3(std::move(stacked));
}

/// Validates the chain and fills fixed_dim from the actions.
inline void normalize(RamificationFiltration& f) {
  for (std::size_t k = 0; k < f.groups.size(); ++k) {
    auto& g = f.groups[k];
    if (g.order < 1) throw InvariantError("group order must be positive");
    if (g.action) g.fixed_dim = fixed_subspace_dim(*g.action);
    if (g.fixed_dim < 0 || g.fixed_dim > kTorsionDim) throw InvariantError("fixed_dim must lie in 0..6");
    if (k > 0) {
      const auto& prev = f.groups[k - 1];
      if (g.order > prev.order || prev.order % g.order != 0) throw InvariantError("not a subgroup chain");
    }
  }
}

/// Exact wild exponent. Trivial groups contribute nothing.
inline Rational wild_exponent(RamificationFiltration f) {
  normalize(f);
  Rational sum = 0;
  if (f.groups.empty()) return sum;
  const long g0 = f.groups.front().order;
  for (const auto& g : f.groups) {
    if (g.order == 1) continue;
    sum += Rational(kTorsionDim - g.fixed_dim, g0 / g.order);
  }
  sum.canonicalize();
  return sum;
}

}  // namespace tors3
