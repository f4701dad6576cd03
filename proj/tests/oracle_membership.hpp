#pragma once
// Test-side membership oracle: decides f ∈ span_k{ x^a·g : deg(x^a·g) ≤ D }
// by plain linear algebra over the monomial basis — no Gröbner machinery.
// Degree bound pinned at D = 10: positive certificates found by the reduction
// engine at these sizes (≤3 variables, generators of degree ≤3, queries of
// degree ≤4) stay well inside it.

#include <map>
#include <random>
#include <vector>

#include "modrep/kernels.hpp"
#include "modrep/poly.hpp"

namespace testsupport {

inline constexpr uint32_t kSpanDegreeBound = 10;

inline void enumerate_monos(size_t nvars, uint32_t maxdeg, size_t slot, modrep::poly::Exp& cur,
                            std::vector<modrep::poly::Exp>& out) {
  if (slot == nvars) {
    out.push_back(cur);
    return;
  }
  uint32_t used = modrep::poly::total_deg(cur);
  for (uint32_t e = 0; e + used <= maxdeg; ++e) {
    cur[slot] = e;
    enumerate_monos(nvars, maxdeg, slot + 1, cur, out);
  }
  cur[slot] = 0;
}

struct SpanOracle {
  modrep::poly::Ring ring;
  uint32_t D;
  std::vector<modrep::poly::Exp> monos;
  std::map<modrep::poly::Exp, size_t> index;
  std::vector<uint32_t> ech;  // rref'd rows of the span, row-major
  std::vector<size_t> pivots;

  SpanOracle(modrep::poly::Ring R, const std::vector<modrep::poly::MultiPoly>& gens, uint32_t bound = kSpanDegreeBound)
      : ring(std::move(R)), D(bound) {
    modrep::poly::Exp cur(ring->nvars(), 0);
    enumerate_monos(ring->nvars(), D, 0, cur, monos);
    for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
    size_t cols = monos.size();
    std::vector<uint32_t> rows;
    size_t nrows = 0;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      uint32_t dg = g.degree();
      if (dg > D) continue;
      for (const auto& m : monos) {
        if (modrep::poly::total_deg(m) + dg > D) continue;
        std::vector<uint32_t> row(cols, 0);
        for (const auto& t : g.terms) row[index.at(modrep::poly::mono_mul(t.e, m))] = t.c;
        rows.insert(rows.end(), row.begin(), row.end());
        ++nrows;
      }
    }
    auto e = modrep::la::rref_fp(rows, nrows, cols, ring->p, modrep::la::Mode::serial);
    pivots = e.pivot_cols;
    ech.assign(rows.begin(), rows.begin() + (long)(e.rank * cols));
  }

  bool member(const modrep::poly::MultiPoly& f) const {
    modrep::FpField K(ring->p);
    size_t cols = monos.size();
    std::vector<uint32_t> v(cols, 0);
    for (const auto& t : f.terms) {
      auto it = index.find(t.e);
      if (it == index.end()) return false;  // degree above the bound
      v[it->second] = t.c;
    }
    for (size_t i = 0; i < pivots.size(); ++i) {
      uint32_t c = v[pivots[i]];
      if (!c) continue;
      uint32_t nc = K.neg(c);
      for (size_t j = 0; j < cols; ++j) v[j] = K.add(v[j], K.mul(nc, ech[i * cols + j]));
    }
    for (uint32_t x : v)
      if (x) return false;
    return true;
  }
};

inline modrep::poly::MultiPoly random_poly(std::mt19937& rng, const modrep::poly::Ring& R, uint32_t maxdeg,
                                           size_t maxterms) {
  modrep::poly::MultiPoly f(R);
  std::uniform_int_distribution<size_t> tcount(1, maxterms);
  std::uniform_int_distribution<uint32_t> coef(1, R->p - 1);
  size_t k = tcount(rng);
  for (size_t t = 0; t < k; ++t) {
    modrep::poly::Exp e(R->nvars(), 0);
    uint32_t budget = maxdeg;
    for (size_t i = 0; i < R->nvars(); ++i) {
      std::uniform_int_distribution<uint32_t> d(0, budget);
      e[i] = d(rng);
      budget -= e[i];
    }
    f.terms.push_back({std::move(e), coef(rng)});
  }
  modrep::poly::canonicalize(f);
  return f;
}

}  // namespace testsupport
