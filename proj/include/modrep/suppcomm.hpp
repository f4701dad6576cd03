#pragma once

// Bounded complexes of free modules over a polynomial ring, Koszul complexes,
// cohomology as presented modules, and support sets of modules and complexes.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <modrep/groebner.hpp>

namespace modrep::sc {

using poly::MultiPoly;

// cochain complex of free modules: degree n runs over [lo, lo + ranks.size() - 1],
// d[k] maps degree lo + k to degree lo + k + 1 and has shape ranks[k+1] x ranks[k]
struct FreeComplex {
  poly::Ring ring;
  long long lo = 0;
  std::vector<size_t> ranks;
  std::vector<gb::PolyMat> d;

  long long hi() const { return lo + (long long)ranks.size() - 1; }
  size_t rank_at(long long n) const {
    if (n < lo || n > hi()) return 0;
    return ranks[(size_t)(n - lo)];
  }
};

inline FreeComplex make_complex(poly::Ring R, long long lo, std::vector<size_t> ranks,
                                std::vector<gb::PolyMat> diffs) {
  if (ranks.empty()) throw InputError("a complex needs at least one degree");
  if (diffs.size() + 1 != ranks.size()) throw InputError("differential count does not match the degree range");
  for (size_t k = 0; k < diffs.size(); ++k) {
    if (diffs[k].rows != ranks[k + 1] || diffs[k].cols != ranks[k])
      throw InputError("differential " + std::to_string(k) + " has the wrong shape");
    for (auto& f : diffs[k].a) poly::check_same_ring(f.ring, R);
  }
  for (size_t k = 0; k + 1 < diffs.size(); ++k)
    if (!gb::pm_is_zero(gb::pm_mul(diffs[k + 1], diffs[k])))
      throw InputError("differentials do not compose to zero");
  FreeComplex x;
  x.ring = std::move(R);
  x.lo = lo;
  x.ranks = std::move(ranks);
  x.d = std::move(diffs);
  return x;
}

// tensor product of complexes; within degree n the summands A^{rx_i} (x) A^{ry_j},
// i + j = n, are laid out with i ascending, and inside a block the first factor
// index is the slower one
inline FreeComplex tensor_complexes(const FreeComplex& X, const FreeComplex& Y) {
  poly::check_same_ring(X.ring, Y.ring);
  const poly::Ring& R = X.ring;
  long long lo = X.lo + Y.lo;
  long long hi = X.hi() + Y.hi();

  auto block_range = [&](long long n) {
    long long a = std::max(X.lo, n - Y.hi());
    long long b = std::min(X.hi(), n - Y.lo);
    return std::pair<long long, long long>{a, b};
  };
  auto offsets = [&](long long n) {
    std::vector<std::pair<long long, size_t>> off;  // (x-degree i, offset)
    auto [a, b] = block_range(n);
    size_t pos = 0;
    for (long long i = a; i <= b; ++i) {
      off.push_back({i, pos});
      pos += X.rank_at(i) * Y.rank_at(n - i);
    }
    return off;
  };

  std::vector<size_t> ranks;
  for (long long n = lo; n <= hi; ++n) {
    size_t r = 0;
    for (auto& [i, o] : offsets(n)) r += X.rank_at(i) * Y.rank_at(n - i);
    ranks.push_back(r);
  }

  std::vector<gb::PolyMat> diffs;
  for (long long n = lo; n < hi; ++n) {
    gb::PolyMat Z = gb::PolyMat::zero(R, ranks[(size_t)(n + 1 - lo)], ranks[(size_t)(n - lo)]);
    auto src = offsets(n);
    auto tgtv = offsets(n + 1);
    auto tgt_off = [&](long long i) -> long long {
      for (auto& [ti, to] : tgtv)
        if (ti == i) return (long long)to;
      return -1;
    };
    for (auto& [i, os] : src) {
      long long j = n - i;
      size_t rx = X.rank_at(i), ry = Y.rank_at(j);
      if (rx == 0 || ry == 0) continue;
      // first-factor differential: block (i, j) -> (i + 1, j)
      if (i < X.hi()) {
        long long ot = tgt_off(i + 1);
        const gb::PolyMat& dx = X.d[(size_t)(i - X.lo)];
        size_t rx1 = X.rank_at(i + 1);
        for (size_t ap = 0; ap < rx1; ++ap)
          for (size_t a = 0; a < rx; ++a) {
            const MultiPoly& f = dx.at(ap, a);
            if (f.is_zero()) continue;
            for (size_t b = 0; b < ry; ++b)
              Z.at((size_t)ot + ap * ry + b, os + a * ry + b) =
                  poly::poly_add(Z.at((size_t)ot + ap * ry + b, os + a * ry + b), f);
          }
      }
      // second-factor differential with the sign (-1)^i: block (i, j) -> (i, j + 1)
      if (j < Y.hi()) {
        long long ot = tgt_off(i);
        const gb::PolyMat& dy = Y.d[(size_t)(j - Y.lo)];
        size_t ry1 = Y.rank_at(j + 1);
        bool neg = (i % 2) != 0;
        for (size_t bp = 0; bp < ry1; ++bp)
          for (size_t b = 0; b < ry; ++b) {
            MultiPoly g = dy.at(bp, b);
            if (g.is_zero()) continue;
            if (neg) g = poly::poly_neg(g);
            for (size_t a = 0; a < rx; ++a)
              Z.at((size_t)ot + a * ry1 + bp, os + a * ry + b) =
                  poly::poly_add(Z.at((size_t)ot + a * ry1 + bp, os + a * ry + b), g);
          }
      }
    }
    diffs.push_back(std::move(Z));
  }
  return make_complex(R, lo, std::move(ranks), std::move(diffs));
}

// Koszul complex on a list of ring elements, concentrated in degrees [-n, 0];
// built as the tensor product of the two-term complexes A --a--> A
inline FreeComplex koszul_complex(const poly::Ring& R, const std::vector<MultiPoly>& elems) {
  if (elems.empty()) throw InputError("a Koszul complex needs at least one element");
  for (auto& a : elems) poly::check_same_ring(a.ring, R);
  auto one_elem = [&](const MultiPoly& a) {
    gb::PolyMat d = gb::PolyMat::zero(R, 1, 1);
    d.at(0, 0) = a;
    return make_complex(R, -1, {1, 1}, {d});
  };
  FreeComplex x = one_elem(elems[0]);
  for (size_t k = 1; k < elems.size(); ++k) x = tensor_complexes(x, one_elem(elems[k]));
  return x;
}

// cohomology in every degree, H^n = ker d^n / im d^{n-1}; generators of each
// kernel come from a module Groebner basis, and the images of the previous
// differential are rewritten in those generators to give the relations
inline std::vector<gb::PresentedModule> complex_cohomology(const FreeComplex& x) {
  const poly::Ring& R = x.ring;
  std::vector<gb::PresentedModule> out;
  for (size_t idx = 0; idx < x.ranks.size(); ++idx) {
    size_t t = x.ranks[idx];
    if (t == 0) {
      out.push_back(gb::PresentedModule{R, 0, {}});
      continue;
    }
    std::vector<std::vector<MultiPoly>> kgens;
    bool open_end = idx + 1 == x.ranks.size() || x.ranks[idx + 1] == 0 || gb::pm_is_zero(x.d[idx]);
    if (open_end) {
      for (size_t j = 0; j < t; ++j) {
        std::vector<MultiPoly> e(t, MultiPoly::zero(R));
        e[j] = MultiPoly::constant(R, 1);
        kgens.push_back(std::move(e));
      }
    } else {
      std::vector<std::vector<MultiPoly>> cols;
      for (size_t j = 0; j < t; ++j) cols.push_back(gb::pm_col(x.d[idx], j));
      kgens = gb::module_kernel(cols, x.ranks[idx + 1], R).gens;
    }
    std::vector<std::vector<MultiPoly>> rels;
    if (!open_end) {
      // the kernel generators need not be a free basis: their syzygies are
      // relations of the quotient as well
      for (auto& s : gb::module_kernel(kgens, t, R).gens) rels.push_back(s);
    }
    if (idx > 0 && x.ranks[idx - 1] > 0) {
      for (size_t j = 0; j < x.ranks[idx - 1]; ++j) {
        std::vector<MultiPoly> v = gb::pm_col(x.d[idx - 1], j);
        bool zero = true;
        for (auto& f : v) zero = zero && f.is_zero();
        if (zero) continue;
        auto cof = gb::member_with_cofactors(v, kgens, t, R);
        if (!cof) throw InternalError("a differential image escapes the next kernel");
        rels.push_back(*cof);
      }
    }
    out.push_back(gb::PresentedModule{R, kgens.size(), std::move(rels)});
  }
  return out;
}

// whether A^rank / relations is the zero module
inline bool presented_is_zero(const gb::PresentedModule& m) {
  if (m.rank == 0) return true;
  auto basis = gb::submodule_groebner(m.relations, m.rank, m.ring);
  for (size_t j = 0; j < m.rank; ++j) {
    std::vector<MultiPoly> e(m.rank, MultiPoly::zero(m.ring));
    e[j] = MultiPoly::constant(m.ring, 1);
    auto r = gb::submodule_normal_form(e, basis, m.rank, m.ring);
    for (auto& f : r)
      if (!f.is_zero()) return false;
  }
  return true;
}

inline gb::PresentedModule presented_direct_sum(const gb::PresentedModule& a, const gb::PresentedModule& b) {
  poly::check_same_ring(a.ring, b.ring);
  gb::PresentedModule s;
  s.ring = a.ring;
  s.rank = a.rank + b.rank;
  for (auto& u : a.relations) {
    std::vector<MultiPoly> v = u;
    v.resize(s.rank, MultiPoly::zero(a.ring));
    s.relations.push_back(std::move(v));
  }
  for (auto& u : b.relations) {
    std::vector<MultiPoly> v(a.rank, MultiPoly::zero(a.ring));
    v.insert(v.end(), u.begin(), u.end());
    s.relations.push_back(std::move(v));
  }
  return s;
}

// ---- support sets ----

// finite union of closed subvarieties, one ideal per component; each ideal is
// stored by its reduced Groebner basis, and an empty list is the empty set
struct SupportSet {
  std::vector<gb::Ideal> comps;
};

inline gb::Ideal normalize_ideal(const gb::Ideal& I) { return gb::make_ideal(I.ring, gb::groebner(I)); }

inline SupportSet supp_from_ideal(const gb::Ideal& I) {
  if (gb::ideal_is_trivial(I)) return SupportSet{};
  return SupportSet{{normalize_ideal(I)}};
}

inline SupportSet supp_module(const gb::PresentedModule& m) { return supp_from_ideal(gb::annihilator(m)); }

namespace detail {
inline std::vector<std::string> ideal_key(const gb::Ideal& I) {
  std::vector<std::string> k;
  for (auto& g : I.gens) k.push_back(poly::poly_str(g));
  return k;
}
}  // namespace detail

inline SupportSet supp_union(const SupportSet& u, const SupportSet& v) {
  SupportSet w = u;
  std::vector<std::vector<std::string>> seen;
  for (auto& c : w.comps) seen.push_back(detail::ideal_key(c));
  for (auto& c : v.comps) {
    auto k = detail::ideal_key(c);
    bool dup = false;
    for (auto& s : seen) dup = dup || s == k;
    if (!dup) {
      w.comps.push_back(c);
      seen.push_back(std::move(k));
    }
  }
  return w;
}

inline SupportSet supp_complex(const FreeComplex& x) {
  SupportSet s;
  for (auto& h : complex_cohomology(x)) s = supp_union(s, supp_module(h));
  return s;
}

// single ideal cutting out the same set: the product over the components
// (the unit ideal for the empty set)
inline gb::Ideal supp_flatten(const SupportSet& s, const poly::Ring& R) {
  if (s.comps.empty()) return gb::make_ideal(R, {MultiPoly::constant(R, 1)});
  gb::Ideal acc = s.comps[0];
  for (size_t i = 1; i < s.comps.size(); ++i) acc = gb::ideal_product(acc, s.comps[i]);
  return acc;
}

inline bool supp_set_eq(const SupportSet& u, const SupportSet& v, const poly::Ring& R) {
  return gb::ideal_eq_radical(supp_flatten(u, R), supp_flatten(v, R));
}

// resolution of the module tensored with the Koszul complex on the elements;
// the resolution sits in degrees [-length, 0]
inline FreeComplex koszul_on_module(const gb::PresentedModule& m, const std::vector<MultiPoly>& elems,
                                    size_t resolution_cap = 10) {
  gb::Resolution res = gb::free_resolution(m, resolution_cap);
  if (!res.complete) throw SizeError("free resolution exceeds the length cap");
  size_t L = res.diffs.size();
  std::vector<size_t> ranks(L + 1);
  ranks[L] = m.rank;
  for (size_t i = 0; i < L; ++i) ranks[L - 1 - i] = res.diffs[i].cols;  // degree -(i+1)
  std::vector<gb::PolyMat> diffs;
  for (size_t k = 0; k < L; ++k) diffs.push_back(res.diffs[L - 1 - k]);
  FreeComplex base = make_complex(m.ring, -(long long)L, std::move(ranks), std::move(diffs));
  return tensor_complexes(base, koszul_complex(m.ring, elems));
}

// whether the fibre of the module at the point c (coordinates mod p) is nonzero,
// i.e. whether some basis vector survives modulo relations + (y_i - c_i) A^rank
inline bool supp_contains_point(const gb::PresentedModule& m, const std::vector<uint32_t>& c) {
  const poly::Ring& R = m.ring;
  if (c.size() != R->nvars()) throw InputError("point has the wrong number of coordinates");
  if (m.rank == 0) return false;
  FpField K(R->p);
  std::vector<std::vector<MultiPoly>> gens = m.relations;
  for (size_t i = 0; i < c.size(); ++i) {
    MultiPoly lin = MultiPoly::zero(R);
    poly::Exp e((uint32_t)R->nvars(), 0);
    e[i] = 1;
    lin.terms.push_back({e, 1});
    uint32_t ci = K.from_int((long long)(c[i] % K.p));
    if (ci != 0) lin.terms.push_back({poly::Exp((uint32_t)R->nvars(), 0), K.neg(ci)});
    poly::canonicalize(lin);
    for (size_t j = 0; j < m.rank; ++j) {
      std::vector<MultiPoly> v(m.rank, MultiPoly::zero(R));
      v[j] = lin;
      gens.push_back(std::move(v));
    }
  }
  auto basis = gb::submodule_groebner(gens, m.rank, R);
  for (size_t j = 0; j < m.rank; ++j) {
    std::vector<MultiPoly> e(m.rank, MultiPoly::zero(R));
    e[j] = MultiPoly::constant(R, 1);
    auto r = gb::submodule_normal_form(e, basis, m.rank, R);
    for (auto& f : r)
      if (!f.is_zero()) return true;
  }
  return false;
}

// containment of single-component supports: V(I) is inside V(J) exactly when
// every generator of J lies in the radical of I
inline bool supp_subset(const SupportSet& u, const SupportSet& v) {
  if (u.comps.size() > 1 || v.comps.size() > 1)
    throw InputError("support containment works on single components only");
  if (u.comps.empty()) return true;
  if (v.comps.empty()) return gb::ideal_is_trivial(u.comps[0]);
  for (auto& g : v.comps[0].gens)
    if (!gb::radical_member(g, u.comps[0])) return false;
  return true;
}

}  // namespace modrep::sc
