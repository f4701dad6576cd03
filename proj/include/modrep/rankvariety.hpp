#pragma once
#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "modrep/groebner.hpp"
#include "modrep/kernels.hpp"
#include "modrep/kmodule.hpp"

// Rank varieties of modules over prime fields: the locus of nonzero points
// alpha where restriction along the shifted unit 1 + sum alpha_i z_i fails to
// be free, cut out by the determinantal ideal of N x N minors of
// X(a) = sum a_i Z_i with N = (p-1) dim / p.

namespace modrep::rv {

struct RankVariety {
  std::optional<size_t> required_rank;  // empty: never free (p does not divide dim)
  gb::Ideal ideal;                    // over F_p[a_1..a_r]
};

inline std::vector<std::vector<size_t>> subsets_lex(size_t n, size_t k) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur(k);
  for (size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  for (;;) {
    out.push_back(cur);
    // advance to the next combination in lexicographic order
    size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    if (k == 0) break;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

// determinant of the selected square submatrix of a polynomial matrix, by
// dynamic programming over column subsets
inline poly::MultiPoly submatrix_det(const std::vector<std::vector<poly::MultiPoly>>& X,
                                     const std::vector<size_t>& rows, const std::vector<size_t>& cols,
                                     const poly::Ring& R) {
  size_t N = rows.size();
  if (N == 0) return poly::MultiPoly::constant(R, 1 % R->p);
  const FpField K(R->p);
  std::vector<poly::MultiPoly> dp(size_t(1) << N, poly::MultiPoly::zero(R));
  dp[0] = poly::MultiPoly::constant(R, 1 % R->p);
  for (size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    size_t i = (size_t)__builtin_popcountll(mask);  // next row to assign
    if (i == N) continue;
    for (size_t j = 0; j < N; ++j) {
      if (mask & (size_t(1) << j)) continue;
      const auto& entry = X[rows[i]][cols[j]];
      if (entry.is_zero()) continue;
      auto term = poly::poly_mul(dp[mask], entry);
      // sign: parity of already-chosen columns above j
      size_t above = mask >> (j + 1);
      if (__builtin_popcountll(above) & 1) term = poly::poly_neg(term);
      dp[mask | (size_t(1) << j)] = poly::poly_add(dp[mask | (size_t(1) << j)], term);
    }
  }
  return dp.back();
}

// all monomials of total degree d in r variables, in descending lexicographic
// order; used to index coefficient vectors of the homogeneous minors
inline std::vector<poly::Exp> degree_monomials(uint32_t r, size_t d) {
  std::vector<poly::Exp> out;
  poly::Exp cur(r, 0);
  auto rec = [&](auto&& self, uint32_t slot, size_t left) -> void {
    if (slot + 1 == r) {
      cur[slot] = (uint32_t)left;
      out.push_back(cur);
      return;
    }
    for (size_t take = left + 1; take-- > 0;) {
      cur[slot] = (uint32_t)take;
      self(self, slot + 1, left - take);
    }
  };
  if (r == 0) return out;
  rec(rec, 0, d);
  return out;  // a1-exponent descending first = lex descending
}

inline RankVariety rank_variety(const km::KModule<FpField>& m) {
  if (m.dim > 12) throw SizeError("rank variety computation is capped at dimension 12");
  if (m.r > 4) throw SizeError("rank variety computation is capped at rank 4");
  const FpField& K = m.field;
  uint32_t p = K.p;
  std::vector<std::string> names;
  for (uint32_t i = 0; i < m.r; ++i) names.push_back("a" + std::to_string(i + 1));
  auto R = poly::make_ring(p, names);
  if (m.dim % p != 0) return RankVariety{std::nullopt, gb::make_ideal(R, {})};
  size_t N = (p - 1) * m.dim / p;
  // X(a) = sum a_i Z_i as a matrix of linear forms
  std::vector<std::vector<poly::MultiPoly>> X(m.dim, std::vector<poly::MultiPoly>(m.dim, poly::MultiPoly::zero(R)));
  for (size_t a = 0; a < m.dim; ++a)
    for (size_t b = 0; b < m.dim; ++b)
      for (uint32_t i = 0; i < m.r; ++i) {
        auto c = m.Z[i].at(a, b);
        if (K.is_zero(c)) continue;
        X[a][b] = poly::poly_add(X[a][b], poly::poly_scale(poly::MultiPoly::variable(R, i), c));
      }
  auto rowsets = subsets_lex(m.dim, N);
  auto colsets = rowsets;
  size_t total = rowsets.size() * colsets.size();
  // nonzero minors in enumeration order; threads collect locally and results
  // are merged back into that order, so the outcome is schedule-independent
  std::vector<std::pair<size_t, poly::MultiPoly>> minors;
  bool par = la::parallel_flag().load();
  {
    size_t nthreads = 1;
#ifdef _OPENMP
    if (par) nthreads = (size_t)omp_get_max_threads();
#endif
    std::vector<std::vector<std::pair<size_t, poly::MultiPoly>>> local(nthreads);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (long long t = 0; t < (long long)total; ++t) {
      size_t tid = 0;
#ifdef _OPENMP
      tid = (size_t)omp_get_thread_num() % local.size();
#endif
      const auto& rows = rowsets[(size_t)t / colsets.size()];
      const auto& cols = colsets[(size_t)t % colsets.size()];
      // prune: a symbolically zero row or column kills the minor
      bool zero = false;
      for (size_t a = 0; a < N && !zero; ++a) {
        bool any = false;
        for (size_t b = 0; b < N; ++b)
          if (!X[rows[a]][cols[b]].is_zero()) any = true;
        if (!any) zero = true;
      }
      for (size_t b = 0; b < N && !zero; ++b) {
        bool any = false;
        for (size_t a = 0; a < N; ++a)
          if (!X[rows[a]][cols[b]].is_zero()) any = true;
        if (!any) zero = true;
      }
      if (zero) continue;
      auto det = submatrix_det(X, rows, cols, R);
      if (!det.is_zero()) local[tid].emplace_back((size_t)t, det);
    }
    for (auto& v : local)
      for (auto& e : v) minors.push_back(std::move(e));
    std::sort(minors.begin(), minors.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  // incremental reduced row echelon span over the degree-N monomial basis
  auto monos = degree_monomials(m.r, N);
  std::vector<std::vector<uint32_t>> rowsv;  // echelon rows as coefficient vectors
  std::vector<size_t> pivots;
  auto to_vec = [&](const poly::MultiPoly& f) {
    std::vector<uint32_t> v(monos.size(), 0);
    for (auto& t : f.terms) {
      auto it = std::lower_bound(monos.begin(), monos.end(), t.e, [](const poly::Exp& x, const poly::Exp& y) {
        return poly::cmp_lex(x, y) > 0;  // stored descending
      });
      if (it == monos.end() || *it != t.e) throw InternalError("minor is not homogeneous of the expected degree");
      v[(size_t)(it - monos.begin())] = t.c;
    }
    return v;
  };
  for (auto& [idx, f] : minors) {
    (void)idx;
    auto v = to_vec(f);
    // reduce against existing rows
    for (size_t rrow = 0; rrow < rowsv.size(); ++rrow) {
      uint32_t c = v[pivots[rrow]];
      if (c == 0) continue;
      for (size_t j = 0; j < v.size(); ++j) v[j] = K.sub(v[j], K.mul(c, rowsv[rrow][j]));
    }
    size_t piv = v.size();
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv == v.size()) continue;
    uint32_t inv = K.inv(v[piv]);
    for (auto& x : v) x = K.mul(x, inv);
    // back-reduce the existing rows to keep the echelon fully reduced
    for (size_t rrow = 0; rrow < rowsv.size(); ++rrow) {
      uint32_t c = rowsv[rrow][piv];
      if (c == 0) continue;
      for (size_t j = 0; j < v.size(); ++j) rowsv[rrow][j] = K.sub(rowsv[rrow][j], K.mul(c, v[j]));
    }
    rowsv.push_back(std::move(v));
    pivots.push_back(piv);
  }
  // rows sorted by pivot ascending = generators in descending term order
  std::vector<size_t> order(rowsv.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return pivots[x] < pivots[y]; });
  std::vector<poly::MultiPoly> gens;
  for (size_t i : order) {
    poly::MultiPoly g = poly::MultiPoly::zero(R);
    for (size_t j = 0; j < monos.size(); ++j)
      if (rowsv[i][j] != 0) g.terms.push_back(poly::Term{monos[j], rowsv[i][j]});
    poly::canonicalize(g);
    gens.push_back(std::move(g));
  }
  return RankVariety{N, gb::make_ideal(R, gens)};
}

// the variety is just the origin iff every coordinate is nilpotent on it
inline bool is_origin_only(const RankVariety& v) {
  for (uint32_t i = 0; i < (uint32_t)v.ideal.ring->vars.size(); ++i)
    if (!gb::radical_member(poly::MultiPoly::variable(v.ideal.ring, i), v.ideal)) return false;
  return true;
}

inline bool variety_contains_point(const RankVariety& v, const std::vector<uint32_t>& alpha) {
  const FpField K(v.ideal.ring->p);
  if (alpha.size() != v.ideal.ring->vars.size()) throw InputError("point has wrong number of coordinates");
  for (auto& g : v.ideal.gens)
    if (!K.is_zero(poly::poly_eval(g, alpha))) return false;
  return true;
}

// varieties intersect as ideal sums and unite as ideal products
inline gb::Ideal variety_intersect(const RankVariety& a, const RankVariety& b) {
  return gb::ideal_sum(a.ideal, b.ideal);
}

inline gb::Ideal variety_union(const RankVariety& a, const RankVariety& b) {
  return gb::ideal_product(a.ideal, b.ideal);
}

}  // namespace modrep::rv
