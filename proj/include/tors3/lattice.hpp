#pragma once

// Integer lattices: exact LLL reduction and a bounded shortest-vector search.
//
// A basis is a list of integer vectors (the generators, i.e. the columns of
// an IntMatrix). Reduction is the integral variant of LLL, which keeps the
// Gram-Schmidt data as exact integers d_i = det Gram(b_1..b_i) and
// lambda_ij = d_j mu_ij, so no floating point enters the reduction itself.

#include <gmp.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "tors3/error.hpp"
#include "tors3/linalg.hpp"
#include "tors3/rational.hpp"

namespace tors3 {

using IntVec = std::vector<Integer>;

inline Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Integer norm2(const IntVec& a) { return dot(a, a); }

/// log10 of a positive integer, accurate to double precision at any size.
inline double log10_integer(const Integer& z) {
  if (z == 0) return -INFINITY;
  long e = 0;
  double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

inline std::vector<IntVec> columns(const IntMatrix& m) {
  std::vector<IntVec> out(m.cols(), IntVec(m.rows()));
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r) out[c][r] = m(r, c);
  return out;
}

/// Gram determinant det(B^T B) of the column lattice, by fraction-free
/// elimination. Equals det(B)^2 for a square matrix.
inline Integer gram_determinant(const IntMatrix& m) {
  auto cols = columns(m);
  const int n = static_cast<int>(cols.size());
  std::vector<IntVec> g(n, IntVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = dot(cols[i], cols[j]);
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && g[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(g[piv], g[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        g[i][j] = g[i][j] * g[k][k] - g[i][k] * g[k][j];
        mpz_divexact(g[i][j].get_mpz_t(), g[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      g[i][k] = 0;
    }
    prev = g[k][k];
  }
  return sign * g[n - 1][n - 1];
}

/// Exact Gram-Schmidt data of a reduced basis.
struct GramSchmidt {
  std::vector<Integer> d;                   // d[0] = 1, d[i] = det Gram(b_1..b_i)
  std::vector<std::vector<Integer>> lambda;  // lambda[i][j], j < i
};

namespace detail {

inline Integer round_div(const Integer& a, const Integer& b) {
  // nearest integer to a/b for b > 0
  Integer q;
  Integer num = 2 * a + b;
  Integer den = 2 * b;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline void divexact(Integer& a, const Integer& b) { mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace detail

/// In-place LLL with Lovasz parameter delta = num/den (default 0.99).
/// Throws on linearly dependent input.
inline GramSchmidt lll_reduce(std::vector<IntVec>& b, long delta_num = 99, long delta_den = 100) {
  const int n = static_cast<int>(b.size());
  GramSchmidt gs;
  gs.d.assign(n + 1, 0);
  gs.lambda.assign(n, std::vector<Integer>(n, 0));
  if (n == 0) return gs;
  auto& d = gs.d;       // 1-based: d[i] for b_1..b_i
  auto& lam = gs.lambda;  // 0-based vectors
  d[0] = 1;
  d[1] = norm2(b[0]);
  if (d[1] == 0) throw InvariantError("dependent lattice basis");

  auto red = [&](int k, int l) {
    // size-reduce b_k against b_l (0-based k, l)
    Integer two = 2 * abs(lam[k][l]);
    if (two <= d[l + 1]) return;
    Integer q = detail::round_div(lam[k][l], d[l + 1]);
    for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[l][t];
    lam[k][l] -= q * d[l + 1];
    for (int i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  auto swap = [&](int k, int kmax) {
    // exchange b_{k-1}, b_k (0-based k >= 1)
    std::swap(b[k], b[k - 1]);
    for (int j = 0; j < k - 1; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const Integer l = lam[k][k - 1];
    Integer bb = d[k - 1] * d[k + 1] + l * l;
    detail::divexact(bb, d[k]);
    for (int i = k + 1; i <= kmax; ++i) {
      Integer t = lam[i][k];
      Integer a = d[k + 1] * lam[i][k - 1] - l * t;
      detail::divexact(a, d[k]);
      lam[i][k] = a;
      Integer c = bb * t + l * lam[i][k];
      detail::divexact(c, d[k + 1]);
      lam[i][k - 1] = c;
    }
    d[k] = bb;
  };

  int k = 1, kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (int j = 0; j <= k; ++j) {
        Integer u = dot(b[k], b[j]);
        for (int i = 0; i < j; ++i) {
          u = d[i + 1] * u - lam[k][i] * lam[j][i];
          detail::divexact(u, d[i]);
        }
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k + 1] = u;
          if (u == 0) throw InvariantError("dependent lattice basis");
        }
      }
    }
    red(k, k - 1);
    const Integer& l = lam[k][k - 1];
    if (delta_den * d[k + 1] * d[k - 1] < delta_num * d[k] * d[k] - delta_den * l * l) {
      swap(k, kmax);
      k = std::max(1, k - 1);
    } else {
      for (int j = k - 2; j >= 0; --j) red(k, j);
      ++k;
    }
  }
  return gs;
}

/// Result of the shortest-vector search. `nodes` counts enumeration leaves;
/// `complete` is false when the node budget ran out first.
struct ShortVector {
  IntVec vector;
  Integer norm2;
  std::uint64_t nodes = 0;
  bool complete = true;
};

/// Shortest nonzero vector of the lattice spanned by the columns of B:
/// LLL (delta = 0.99), then Fincke-Pohst enumeration within the length of
/// the first reduced vector. Never longer than that vector.
inline ShortVector shortest_vector(const IntMatrix& m, std::uint64_t max_nodes = 2'000'000) {
  bool any = false;
  for (int r = 0; r < m.rows() && !any; ++r)
    for (int c = 0; c < m.cols() && !any; ++c) any = m(r, c) != 0;
  if (!any) throw InvariantError("zero matrix");
  auto b = columns(m);
  GramSchmidt gs = lll_reduce(b);
  const int n = static_cast<int>(b.size());

  // Floating Gram-Schmidt from the exact data; long double has the
  // exponent range for 1000-digit entries.
  auto to_ld = [](const Integer& num, const Integer& den) {
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, num.get_mpz_t());
    double md = mpz_get_d_2exp(&ed, den.get_mpz_t());
    return std::ldexp(static_cast<long double>(mn) / md, static_cast<int>(en - ed));
  };
  std::vector<long double> bstar(n);
  std::vector<std::vector<long double>> mu(n, std::vector<long double>(n, 0));
  for (int i = 0; i < n; ++i) {
    bstar[i] = to_ld(gs.d[i + 1], gs.d[i]);
    for (int j = 0; j < i; ++j) mu[i][j] = to_ld(gs.lambda[i][j], gs.d[j + 1]);
  }

  ShortVector best;
  best.vector = b[0];
  best.norm2 = norm2(b[0]);
  long double radius2 = to_ld(best.norm2, Integer(1)) * (1 + 1e-12L);

  std::vector<long> x(n, 0);
  std::vector<long double> partial(n + 1, 0);
  IntVec v(b[0].size());
  auto leaf = [&]() {
    bool nonzero = false;
    for (long xi : x) nonzero = nonzero || xi != 0;
    if (!nonzero) return;
    for (auto& e : v) e = 0;
    for (int i = 0; i < n; ++i)
      if (x[i] != 0)
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += x[i] * b[i][t];
    Integer nv = norm2(v);
    if (nv < best.norm2) {
      best.norm2 = nv;
      best.vector = v;
      radius2 = to_ld(nv, Integer(1)) * (1 + 1e-12L);
    }
  };

  auto search = [&](auto&& self, int k) -> void {
    if (best.nodes >= max_nodes) {
      best.complete = false;
      return;
    }
    long double c = 0;
    for (int j = k + 1; j < n; ++j) c -= x[j] * mu[j][k];
    const long double room = radius2 - partial[k + 1];
    if (room < 0) return;
    const long double w = std::sqrt(room / bstar[k]);
    const long lo = static_cast<long>(std::ceil(c - w)), hi = static_cast<long>(std::floor(c + w));
    for (long xi = lo; xi <= hi; ++xi) {
      const long double dist = (xi - c) * (xi - c) * bstar[k];
      if (partial[k + 1] + dist > radius2) continue;
      x[k] = xi;
      partial[k] = partial[k + 1] + dist;
      if (k == 0) {
        ++best.nodes;
        leaf();
      } else {
        self(self, k - 1);
      }
    }
    x[k] = 0;
  };
  search(search, n - 1);
  return best;
}

/// Shortest-vector candidate of the column lattice of B.
inline IntVec shortest_vector_candidate(const IntMatrix& m) { return shortest_vector(m).vector; }

}  // namespace tors3
