#pragma once
#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "modrep/poly.hpp"

// Gröbner engine for submodules of free modules A^t over A = F_p[v1..vn].
// Ideals are the rank-1 case. Kernels, colon ideals and annihilators all run
// through one mechanism: append tag components that record cofactors, compute
// a Gröbner basis under a block order in which the original components
// dominate, and read syzygies off the elements whose leading block vanished.

namespace modrep::gb {

using poly::Exp;
using poly::MultiPoly;
using poly::Ord;

// one term c * x^e * basis_vector[comp] of a free module element
struct MTerm {
  Exp e;
  uint32_t comp = 0;
  uint32_t c = 0;
};

// block order: components < block_split dominate all others; within a block,
// monomials are compared first (grevlex or lex), ties go to the smaller
// component. Multiplicative in the monomial, so valid for Buchberger.
struct TermOrder {
  Ord kind = Ord::grevlex;
  uint32_t block_split = UINT32_MAX;

  int cmp(const MTerm& a, const MTerm& b) const {
    bool ba = a.comp < block_split, bb = b.comp < block_split;
    if (ba != bb) return ba ? 1 : -1;
    int c = poly::cmp_mono(kind, a.e, b.e);
    if (c) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }
};

// element of A^t as a term list kept strictly descending under the order
using MVec = std::vector<MTerm>;

inline MVec mv_normalize(MVec v, const TermOrder& o, const FpField& K) {
  std::sort(v.begin(), v.end(), [&o](const MTerm& a, const MTerm& b) { return o.cmp(a, b) > 0; });
  MVec out;
  for (auto& t : v) {
    uint32_t c = t.c % K.p;
    if (!out.empty() && out.back().comp == t.comp && out.back().e == t.e) {
      out.back().c = K.add(out.back().c, c);
      if (out.back().c == 0) out.pop_back();
    } else if (c) {
      out.push_back({t.e, t.comp, c});
    }
  }
  return out;
}

// v + c * x^m * w  (all sorted descending; result sorted descending)
inline MVec mv_axpy(const MVec& v, uint32_t c, const Exp& m, const MVec& w, const TermOrder& o, const FpField& K) {
  MVec out;
  out.reserve(v.size() + w.size());
  size_t i = 0, j = 0;
  auto wterm = [&](size_t jj) {
    MTerm t = w[jj];
    t.e = poly::mono_mul(t.e, m);
    t.c = K.mul(t.c, c);
    return t;
  };
  while (i < v.size() || j < w.size()) {
    if (j == w.size()) {
      out.push_back(v[i++]);
    } else if (i == v.size()) {
      MTerm t = wterm(j++);
      if (t.c) out.push_back(std::move(t));
    } else {
      MTerm t = wterm(j);
      int cc = o.cmp(v[i], t);
      if (cc > 0) {
        out.push_back(v[i++]);
      } else if (cc < 0) {
        if (t.c) out.push_back(std::move(t));
        ++j;
      } else {
        uint32_t s = K.add(v[i].c, t.c);
        if (s) {
          MTerm u = v[i];
          u.c = s;
          out.push_back(std::move(u));
        }
        ++i;
        ++j;
      }
    }
  }
  return out;
}

inline MVec mv_scale_mono(const MVec& w, uint32_t c, const Exp& m, const TermOrder& o, const FpField& K) {
  return mv_axpy(MVec{}, c, m, w, o, K);
}

// full normal form: no term of the result is divisible by any basis leading term
inline MVec mv_reduce(MVec v, const std::vector<MVec>& basis, const TermOrder& o, const FpField& K) {
  MVec done;
  while (!v.empty()) {
    const MTerm lt = v.front();
    bool hit = false;
    for (const MVec& g : basis) {
      if (g.empty()) continue;
      const MTerm& glt = g.front();
      if (glt.comp == lt.comp && poly::mono_divides(glt.e, lt.e)) {
        uint32_t f = K.neg(K.div(lt.c, glt.c));
        v = mv_axpy(v, f, poly::mono_div(lt.e, glt.e), g, o, K);
        hit = true;
        break;
      }
    }
    if (!hit) {
      done.push_back(v.front());
      v.erase(v.begin());
    }
  }
  return done;
}

inline bool mono_coprime(const Exp& a, const Exp& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

// Buchberger with normal (smallest-lcm) selection and the chain criterion;
// the coprime criterion is applied only in ambient rank 1, where it is valid.
// Returns the reduced Gröbner basis, monic, sorted descending by leading term.
inline std::vector<MVec> module_groebner(const std::vector<MVec>& raw, const TermOrder& o, const FpField& K,
                                         bool ambient_rank_one) {
  std::vector<MVec> g;
  for (const MVec& v : raw) {
    MVec n = mv_normalize(v, o, K);
    if (n.empty()) continue;
    if (n.front().c != 1) n = mv_scale_mono(n, K.inv(n.front().c), Exp(n.front().e.size(), 0), o, K);
    g.push_back(std::move(n));
  }

  struct PK {
    uint32_t deg;
    Exp l;
    uint32_t comp;
    size_t i, j;
  };
  auto pkless = [&o](const PK& a, const PK& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = poly::cmp_mono(o.kind, a.l, b.l);
    if (c) return c < 0;
    if (a.comp != b.comp) return a.comp < b.comp;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<PK, decltype(pkless)> queue(pkless);
  std::set<std::pair<size_t, size_t>> pending;

  auto add_pairs = [&](size_t t) {
    for (size_t i = 0; i < t; ++i) {
      if (g[i].front().comp != g[t].front().comp) continue;
      Exp l = poly::mono_lcm(g[i].front().e, g[t].front().e);
      queue.insert({poly::total_deg(l), l, g[t].front().comp, i, t});
      pending.insert({i, t});
    }
  };
  for (size_t t = 0; t < g.size(); ++t) add_pairs(t);

  const Exp no_shift(g.empty() ? 0 : g[0].front().e.size(), 0);
  while (!queue.empty()) {
    PK pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});
    const MTerm& a = g[pk.i].front();
    const MTerm& b = g[pk.j].front();
    if (ambient_rank_one && mono_coprime(a.e, b.e)) continue;
    bool skip = false;
    for (size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == pk.i || k == pk.j) continue;
      const MTerm& c = g[k].front();
      if (c.comp != pk.comp || !poly::mono_divides(c.e, pk.l)) continue;
      auto p1 = std::minmax(pk.i, k), p2 = std::minmax(pk.j, k);
      if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second})) skip = true;
    }
    if (skip) continue;
    MVec s = mv_scale_mono(g[pk.i], K.one(), poly::mono_div(pk.l, a.e), o, K);
    s = mv_axpy(s, K.neg(K.one()), poly::mono_div(pk.l, b.e), g[pk.j], o, K);
    s = mv_reduce(std::move(s), g, o, K);
    if (!s.empty()) {
      if (s.front().c != 1) s = mv_scale_mono(s, K.inv(s.front().c), no_shift, o, K);
      g.push_back(std::move(s));
      add_pairs(g.size() - 1);
    }
  }

  // minimalize: drop elements whose leading term another element's divides
  std::vector<char> alive(g.size(), 1);
  for (size_t i = 0; i < g.size(); ++i) {
    if (!alive[i]) continue;
    for (size_t j = 0; j < g.size(); ++j) {
      if (i == j || !alive[j]) continue;
      const MTerm &li = g[i].front(), &lj = g[j].front();
      if (li.comp != lj.comp || !poly::mono_divides(lj.e, li.e)) continue;
      if (li.e == lj.e && j > i) continue;  // equal leading terms: keep the earlier
      alive[i] = 0;
      break;
    }
  }
  std::vector<MVec> mins;
  for (size_t i = 0; i < g.size(); ++i)
    if (alive[i]) mins.push_back(std::move(g[i]));

  // inter-reduce tails (leading terms are pairwise non-divisible, so one pass)
  for (size_t i = 0; i < mins.size(); ++i) {
    std::vector<MVec> others;
    for (size_t j = 0; j < mins.size(); ++j)
      if (j != i) others.push_back(mins[j]);
    mins[i] = mv_reduce(std::move(mins[i]), others, o, K);
  }
  std::sort(mins.begin(), mins.end(),
            [&o](const MVec& x, const MVec& y) { return o.cmp(x.front(), y.front()) > 0; });
  return mins;
}

// ---- conversions between MultiPoly vectors and MVec ----

inline MVec to_mvec(const std::vector<MultiPoly>& comps, const TermOrder& o, const FpField& K) {
  MVec v;
  for (size_t j = 0; j < comps.size(); ++j)
    for (auto& t : comps[j].terms) v.push_back({t.e, (uint32_t)j, t.c});
  return mv_normalize(std::move(v), o, K);
}

inline std::vector<MultiPoly> from_mvec(const MVec& v, size_t t, const poly::Ring& R) {
  std::vector<MultiPoly> out(t, MultiPoly::zero(R));
  for (auto& term : v) {
    if (term.comp >= t) throw InternalError("component out of range in from_mvec");
    out[term.comp].terms.push_back({term.e, term.c});
  }
  for (auto& f : out) poly::canonicalize(f);
  return out;
}

// ---- ideals ----

struct IdealCache {
  std::mutex mu;
  std::map<Ord, std::vector<MultiPoly>> basis;
};

struct Ideal {
  poly::Ring ring;
  std::vector<MultiPoly> gens;
  std::shared_ptr<IdealCache> cache;
};

inline Ideal make_ideal(poly::Ring R, std::vector<MultiPoly> gens) {
  std::vector<MultiPoly> kept;
  for (auto& f : gens) {
    poly::check_same_ring(f.ring, R);
    if (!f.is_zero()) kept.push_back(f);
  }
  return Ideal{std::move(R), std::move(kept), std::make_shared<IdealCache>()};
}

// reduced Gröbner basis under the given order, computed once and cached
inline std::vector<MultiPoly> groebner(const Ideal& I, Ord ord = Ord::grevlex) {
  std::lock_guard<std::mutex> lock(I.cache->mu);
  auto it = I.cache->basis.find(ord);
  if (it != I.cache->basis.end()) return it->second;
  FpField K(I.ring->p);
  TermOrder o{ord, UINT32_MAX};
  std::vector<MVec> in;
  for (auto& f : I.gens) in.push_back(to_mvec({f}, o, K));
  std::vector<MVec> basis = module_groebner(in, o, K, true);
  std::vector<MultiPoly> out;
  for (auto& b : basis) out.push_back(from_mvec(b, 1, I.ring)[0]);
  I.cache->basis.emplace(ord, out);
  return out;
}

inline MultiPoly normal_form(const MultiPoly& f, const Ideal& I, Ord ord = Ord::grevlex) {
  poly::check_same_ring(f.ring, I.ring);
  FpField K(I.ring->p);
  TermOrder o{ord, UINT32_MAX};
  std::vector<MVec> basis;
  for (auto& b : groebner(I, ord)) basis.push_back(to_mvec({b}, o, K));
  return from_mvec(mv_reduce(to_mvec({f}, o, K), basis, o, K), 1, I.ring)[0];
}

inline bool ideal_member(const MultiPoly& f, const Ideal& I) { return normal_form(f, I).is_zero(); }

inline bool ideal_is_trivial(const Ideal& I) {
  return ideal_member(MultiPoly::constant(I.ring, 1), I);
}

// fresh variable name not colliding with the ring's
inline std::string fresh_var_name(const poly::Ring& R, std::string base) {
  auto taken = [&](const std::string& s) {
    for (auto& v : R->vars)
      if (v == s) return true;
    return false;
  };
  while (taken(base)) base += "_";
  return base;
}

// radical membership via Rabinowitsch: f in sqrt(I) iff 1 in I + (1 - u f)
inline bool radical_member(const MultiPoly& f, const Ideal& I) {
  poly::check_same_ring(f.ring, I.ring);
  if (f.is_zero()) return true;
  size_t n = I.ring->nvars();
  std::vector<std::string> vars = I.ring->vars;
  vars.push_back(fresh_var_name(I.ring, "u"));
  poly::Ring Rx = poly::make_ring(I.ring->p, std::move(vars));
  std::vector<size_t> idmap(n);
  for (size_t i = 0; i < n; ++i) idmap[i] = i;
  std::vector<MultiPoly> gens;
  for (auto& gpoly : I.gens) gens.push_back(poly::poly_map_vars(gpoly, Rx, idmap));
  MultiPoly uf = poly::poly_mul(poly::MultiPoly::variable(Rx, n), poly::poly_map_vars(f, Rx, idmap));
  gens.push_back(poly::poly_sub(MultiPoly::constant(Rx, 1), uf));
  return ideal_is_trivial(make_ideal(Rx, std::move(gens)));
}

// equality of vanishing sets: generators of each side lie in the radical of the other
inline bool ideal_eq_radical(const Ideal& I, const Ideal& J) {
  for (auto& f : I.gens)
    if (!radical_member(f, J)) return false;
  for (auto& f : J.gens)
    if (!radical_member(f, I)) return false;
  return true;
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  poly::check_same_ring(I.ring, J.ring);
  std::vector<MultiPoly> gens = I.gens;
  gens.insert(gens.end(), J.gens.begin(), J.gens.end());
  return make_ideal(I.ring, std::move(gens));
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
  poly::check_same_ring(I.ring, J.ring);
  std::vector<MultiPoly> gens;
  for (auto& f : I.gens)
    for (auto& g : J.gens) gens.push_back(poly::poly_mul(f, g));
  return make_ideal(I.ring, std::move(gens));
}

// I ∩ J by tag elimination: lex Gröbner basis of t·I + (1−t)·J with the tag
// variable permuted to the front (lex eliminates any prefix), keep tag-free rows
inline Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  poly::check_same_ring(I.ring, J.ring);
  if (I.gens.empty() || J.gens.empty()) return make_ideal(I.ring, {});
  size_t n = I.ring->nvars();
  std::vector<std::string> vars;
  vars.push_back(fresh_var_name(I.ring, "t"));
  for (auto& v : I.ring->vars) vars.push_back(v);
  poly::Ring Rx = poly::make_ring(I.ring->p, vars);
  std::vector<size_t> shift(n);
  for (size_t i = 0; i < n; ++i) shift[i] = i + 1;
  MultiPoly tag = poly::MultiPoly::variable(Rx, 0);
  MultiPoly one_minus_tag = poly::poly_sub(MultiPoly::constant(Rx, 1), tag);
  std::vector<MultiPoly> gens;
  for (auto& f : I.gens) gens.push_back(poly::poly_mul(tag, poly::poly_map_vars(f, Rx, shift)));
  for (auto& f : J.gens) gens.push_back(poly::poly_mul(one_minus_tag, poly::poly_map_vars(f, Rx, shift)));
  std::vector<MultiPoly> basis = groebner(make_ideal(Rx, std::move(gens)), Ord::lex);
  std::vector<size_t> down(n + 1, 0);
  for (size_t i = 0; i < n; ++i) down[i + 1] = i;
  std::vector<MultiPoly> out;
  for (auto& b : basis) {
    bool tag_free = true;
    for (auto& t : b.terms)
      if (t.e[0]) {
        tag_free = false;
        break;
      }
    if (tag_free) out.push_back(poly::poly_map_vars(b, I.ring, down));
  }
  return make_ideal(I.ring, std::move(out));
}

// ---- free submodules, presented modules, polynomial matrices ----

struct FreeSubmodule {
  size_t ambient = 0;
  std::vector<std::vector<MultiPoly>> gens;  // vectors of length `ambient`
};

struct PresentedModule {
  poly::Ring ring;
  size_t rank = 0;
  std::vector<std::vector<MultiPoly>> relations;  // vectors of length `rank`
};

// dense matrix of polynomials, row-major
struct PolyMat {
  size_t rows = 0, cols = 0;
  std::vector<MultiPoly> a;
  static PolyMat zero(const poly::Ring& R, size_t r, size_t c) {
    PolyMat m;
    m.rows = r;
    m.cols = c;
    m.a.assign(r * c, MultiPoly::zero(R));
    return m;
  }
  MultiPoly& at(size_t i, size_t j) { return a[i * cols + j]; }
  const MultiPoly& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

inline PolyMat pm_mul(const PolyMat& x, const PolyMat& y) {
  if (x.cols != y.rows) throw InputError("polynomial matrix shape mismatch");
  poly::Ring R = x.a.empty() ? (y.a.empty() ? nullptr : y.a[0].ring) : x.a[0].ring;
  PolyMat r = PolyMat::zero(R, x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < y.cols; ++j)
        if (!y.at(k, j).is_zero()) r.at(i, j) = poly::poly_add(r.at(i, j), poly::poly_mul(x.at(i, k), y.at(k, j)));
    }
  return r;
}

inline bool pm_is_zero(const PolyMat& m) {
  for (auto& f : m.a)
    if (!f.is_zero()) return false;
  return true;
}

inline std::vector<MultiPoly> pm_col(const PolyMat& m, size_t j) {
  std::vector<MultiPoly> v;
  v.reserve(m.rows);
  for (size_t i = 0; i < m.rows; ++i) v.push_back(m.at(i, j));
  return v;
}

inline PolyMat pm_from_cols(const poly::Ring& R, size_t rows, const std::vector<std::vector<MultiPoly>>& cols) {
  PolyMat m = PolyMat::zero(R, rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InputError("column length mismatch");
    for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

// plain module Gröbner basis of a list of vectors in A^t (no tag block)
inline std::vector<MVec> submodule_groebner(const std::vector<std::vector<MultiPoly>>& gens, size_t t,
                                            const poly::Ring& R, Ord ord = Ord::grevlex) {
  FpField K(R->p);
  TermOrder o{ord, UINT32_MAX};
  std::vector<MVec> in;
  for (auto& v : gens) {
    if (v.size() != t) throw InputError("generator has wrong ambient rank");
    in.push_back(to_mvec(v, o, K));
  }
  return module_groebner(in, o, K, t == 1);
}

// normal form of a vector modulo a precomputed submodule basis
inline std::vector<MultiPoly> submodule_normal_form(const std::vector<MultiPoly>& v, const std::vector<MVec>& basis,
                                                    size_t t, const poly::Ring& R, Ord ord = Ord::grevlex) {
  FpField K(R->p);
  TermOrder o{ord, UINT32_MAX};
  return from_mvec(mv_reduce(to_mvec(v, o, K), basis, o, K), t, R);
}

// Gröbner basis of the "fat" module {(v_i ; e_i)} in A^{t+s}; elements whose
// first block vanished are the syzygies of the v_i
struct FatBasis {
  size_t t = 0, s = 0;
  std::vector<MVec> basis;
};

inline FatBasis fat_groebner(const std::vector<std::vector<MultiPoly>>& vecs, size_t t, const poly::Ring& R) {
  FpField K(R->p);
  size_t s = vecs.size();
  TermOrder o{Ord::grevlex, (uint32_t)t};
  std::vector<MVec> in;
  for (size_t i = 0; i < s; ++i) {
    if (vecs[i].size() != t) throw InputError("generator has wrong ambient rank");
    MVec v = to_mvec(vecs[i], o, K);
    v.push_back({Exp(R->nvars(), 0), (uint32_t)(t + i), 1});
    in.push_back(mv_normalize(std::move(v), o, K));
  }
  return FatBasis{t, s, module_groebner(in, o, K, false)};
}

// kernel of phi : A^s -> A^t given by its columns
inline FreeSubmodule module_kernel(const std::vector<std::vector<MultiPoly>>& cols, size_t t, const poly::Ring& R) {
  FreeSubmodule ker;
  ker.ambient = cols.size();
  if (cols.empty()) return ker;
  FatBasis fb = fat_groebner(cols, t, R);
  for (auto& b : fb.basis) {
    if (b.empty() || b.front().comp < t) continue;  // leading term in the image block
    MVec shifted = b;
    for (auto& term : shifted) term.comp -= (uint32_t)t;
    ker.gens.push_back(from_mvec(shifted, fb.s, R));
  }
  return ker;
}

// express b as a combination of the generators, or nullopt if not a member;
// the returned cofactors w satisfy  sum_i w_i * gens_i = b  (verified)
inline std::optional<std::vector<MultiPoly>> member_with_cofactors(const std::vector<MultiPoly>& b,
                                                                  const std::vector<std::vector<MultiPoly>>& gens,
                                                                  size_t t, const poly::Ring& R) {
  FpField K(R->p);
  size_t q = gens.size();
  if (q == 0) {
    for (auto& f : b)
      if (!f.is_zero()) return std::nullopt;
    return std::vector<MultiPoly>{};
  }
  FatBasis fb = fat_groebner(gens, t, R);
  TermOrder o{Ord::grevlex, (uint32_t)t};
  MVec rem = mv_reduce(to_mvec(b, o, K), fb.basis, o, K);
  for (auto& term : rem)
    if (term.comp < t) return std::nullopt;
  std::vector<MultiPoly> cof(q, MultiPoly::zero(R));
  for (auto& term : rem) cof[term.comp - t].terms.push_back({term.e, K.neg(term.c)});
  for (auto& f : cof) poly::canonicalize(f);
  // postcondition check: the cofactors really rebuild b
  for (size_t i = 0; i < t; ++i) {
    MultiPoly acc = MultiPoly::zero(R);
    for (size_t j = 0; j < q; ++j) acc = poly::poly_add(acc, poly::poly_mul(cof[j], gens[j][i]));
    if (!poly::poly_eq(acc, b[i])) throw InternalError("cofactor reconstruction failed");
  }
  return cof;
}

// annihilator of A^rank / relations as the intersection of the colon ideals
// (relations : e_j), each read off the syzygies of [relations | e_j]
inline Ideal annihilator(const PresentedModule& m) {
  if (m.rank == 0) return make_ideal(m.ring, {MultiPoly::constant(m.ring, 1)});
  if (m.relations.empty()) return make_ideal(m.ring, {});
  size_t q = m.relations.size();
  std::optional<Ideal> acc;
  for (size_t j = 0; j < m.rank; ++j) {
    std::vector<std::vector<MultiPoly>> vecs = m.relations;
    std::vector<MultiPoly> ej(m.rank, MultiPoly::zero(m.ring));
    ej[j] = MultiPoly::constant(m.ring, 1);
    vecs.push_back(ej);
    FatBasis fb = fat_groebner(vecs, m.rank, m.ring);
    std::vector<MultiPoly> colon_gens;
    for (auto& b : fb.basis) {
      if (b.empty() || b.front().comp < m.rank) continue;
      MultiPoly coeff = MultiPoly::zero(m.ring);
      for (auto& term : b)
        if (term.comp == m.rank + q) coeff.terms.push_back({term.e, term.c});
      poly::canonicalize(coeff);
      if (!coeff.is_zero()) colon_gens.push_back(std::move(coeff));
    }
    Ideal colon = make_ideal(m.ring, std::move(colon_gens));
    if (colon.gens.empty()) return make_ideal(m.ring, {});  // nothing multiplies e_j into the relations
    acc = acc ? ideal_intersect(*acc, colon) : colon;
    if (acc->gens.empty()) return *acc;
  }
  return *acc;
}

// free resolution of A^rank / relations: d1 = relations as columns, each next
// step the kernel of the previous; stops when a kernel vanishes
struct Resolution {
  std::vector<PolyMat> diffs;
  bool complete = true;
};

inline Resolution free_resolution(const PresentedModule& m, size_t max_len) {
  Resolution res;
  if (m.relations.empty() || m.rank == 0) return res;
  size_t ambient = m.rank;
  std::vector<std::vector<MultiPoly>> cols = m.relations;
  while (res.diffs.size() < max_len) {
    res.diffs.push_back(pm_from_cols(m.ring, ambient, cols));
    FreeSubmodule ker = module_kernel(cols, ambient, m.ring);
    if (ker.gens.empty()) return res;
    ambient = cols.size();
    cols = ker.gens;
  }
  res.complete = false;
  return res;
}

}  // namespace modrep::gb
