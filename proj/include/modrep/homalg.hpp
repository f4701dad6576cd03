#pragma once
#include <cstdint>
#include <vector>

#include "modrep/kmodule.hpp"

// Homological algebra over kE: projective covers, syzygies, minimal
// resolutions, Ext dimensions, stable and Tate Hom spaces, and Carlson's
// kernel modules L_{zeta^n} in characteristic 2.

namespace modrep::ha {

template <class F>
km::KModule<F> regular_power(const F& K, uint32_t r, size_t n) {
  if (n == 0) {
    km::KModule<F> z{K, r, 0, {}};
    for (uint32_t i = 0; i < r; ++i) z.Z.push_back(la::Matrix<F>::zero(K, 0, 0));
    return z;
  }
  auto kE = km::regular(K, r);
  auto acc = kE;
  for (size_t i = 1; i < n; ++i) acc = km::direct_sum(acc, kE);
  return acc;
}

template <class F>
struct CoverData {
  km::KModule<F> P;    // free module kE^b, b = dim of the top of m
  la::Matrix<F> epi;   // m.dim x P.dim, surjective with kernel inside rad P
};

// minimal projective cover: one free generator per basis vector of m / rad m,
// sent to a chosen representative
template <class F>
CoverData<F> projective_cover(const km::KModule<F>& m) {
  const F& K = m.field;
  auto reps = km::top_rep_indices(m);
  size_t b = reps.size();
  size_t q = km::pow_sz(m.p(), m.r);
  CoverData<F> cd{regular_power(K, m.r, b), la::Matrix<F>::zero(K, m.dim, b * q)};
  auto Ze = km::monomial_actions(m);
  for (size_t l = 0; l < b; ++l)
    for (size_t e = 0; e < q; ++e)
      for (size_t a = 0; a < m.dim; ++a) cd.epi.at(a, l * q + e) = Ze[e].at(a, reps[l]);
  if (la::rank(K, cd.epi) != m.dim) throw InternalError("projective cover is not surjective");
  return cd;
}

template <class F>
struct OmegaData {
  km::KModule<F> omega;  // kernel of the cover, with the restricted action
  la::Matrix<F> incl;    // P.dim x omega.dim, embedding into the cover
  CoverData<F> cover;
};

template <class F>
OmegaData<F> omega_data(const km::KModule<F>& m) {
  const F& K = m.field;
  auto cd = projective_cover(m);
  auto ker = la::kernel_basis(K, cd.epi);
  auto B = la::from_columns(K, cd.P.dim, ker);
  auto om = km::restrict_action(cd.P, B);
  return OmegaData<F>{std::move(om), std::move(B), std::move(cd)};
}

template <class F>
km::KModule<F> omega(const km::KModule<F>& m) {
  return omega_data(m).omega;
}

template <class F>
km::KModule<F> omega_inverse(const km::KModule<F>& m) {
  return km::dual(omega(km::dual(m)));
}

// omega^i for i >= 0, omega^{-|i|} via duality for i < 0
template <class F>
km::KModule<F> omega_iterate(const km::KModule<F>& m, long long i) {
  if (i >= 0) {
    auto cur = m;
    for (long long t = 0; t < i; ++t) cur = omega(cur);
    return cur;
  }
  return km::dual(omega_iterate(km::dual(m), -i));
}

template <class F>
struct ProjResolution {
  std::vector<size_t> ranks;        // free ranks b_0..b_len
  std::vector<km::KModule<F>> P;    // the free modules kE^{b_i}
  std::vector<la::Matrix<F>> d;     // d[0]: P_0 -> m; d[i]: P_i -> P_{i-1}
};

// minimal resolution ... -> P_1 -> P_0 -> m -> 0 of length len
template <class F>
ProjResolution<F> minimal_resolution(const km::KModule<F>& m, size_t len) {
  ProjResolution<F> res;
  auto cur = m;
  la::Matrix<F> prev_incl = la::Matrix<F>::identity(m.field, m.dim);
  for (size_t i = 0; i <= len; ++i) {
    auto od = omega_data(cur);
    res.ranks.push_back(od.cover.P.dim == 0 ? 0 : od.cover.P.dim / km::pow_sz(m.p(), m.r));
    res.P.push_back(od.cover.P);
    res.d.push_back(la::mat_mul(m.field, prev_incl, od.cover.epi));
    prev_incl = od.incl;
    cur = od.omega;
  }
  return res;
}

// the complex Hom(P_i, n) in generator-value coordinates: a map P_i -> n is a
// tuple in n^{b_i}, and precomposition with d_{i+1} is a block matrix whose
// (l', l) block is sum_e c_{l,e} Z_n^e, reading off the monomial coordinates
// of the image of the l'-th generator
template <class F>
struct HomComplex {
  std::vector<size_t> hom_dims;      // b_i * dim n, i = 0..len
  std::vector<la::Matrix<F>> delta;  // delta[i]: Hom(P_i, n) -> Hom(P_{i+1}, n)
};

template <class F>
HomComplex<F> hom_complex(const ProjResolution<F>& res, const km::KModule<F>& n) {
  const F& K = n.field;
  size_t q = km::pow_sz(n.p(), n.r);
  size_t dn = n.dim;
  auto Zn = km::monomial_actions(n);
  HomComplex<F> hc;
  for (size_t i = 0; i < res.ranks.size(); ++i) hc.hom_dims.push_back(res.ranks[i] * dn);
  for (size_t i = 0; i + 1 < res.ranks.size(); ++i) {
    size_t bi = res.ranks[i], bj = res.ranks[i + 1];
    auto delta = la::Matrix<F>::zero(K, bj * dn, bi * dn);
    for (size_t lp = 0; lp < bj; ++lp) {
      // image of the lp-th generator of P_{i+1} inside P_i
      for (size_t l = 0; l < bi; ++l) {
        auto block = la::Matrix<F>::zero(K, dn, dn);
        bool any = false;
        for (size_t e = 0; e < q; ++e) {
          auto c = res.d[i + 1].at(l * q + e, lp * q);
          if (K.is_zero(c)) continue;
          any = true;
          block = la::mat_add(K, block, la::mat_scale(K, Zn[e], c));
        }
        if (!any) continue;
        for (size_t a = 0; a < dn; ++a)
          for (size_t bcol = 0; bcol < dn; ++bcol) delta.at(lp * dn + a, l * dn + bcol) = block.at(a, bcol);
      }
    }
    hc.delta.push_back(std::move(delta));
  }
  return hc;
}

// dim Ext^i(m, n) for i = 0..count-1, as cohomology of Hom(P_*, n)
template <class F>
std::vector<size_t> ext_dims(const km::KModule<F>& m, const km::KModule<F>& n, size_t count) {
  if (count == 0) return {};
  const F& K = m.field;
  auto res = minimal_resolution(m, count);
  auto hc = hom_complex(res, n);
  std::vector<size_t> ranks;
  for (auto& dmat : hc.delta) ranks.push_back(la::rank(K, dmat));
  std::vector<size_t> out;
  for (size_t i = 0; i < count; ++i) {
    size_t v = hc.hom_dims[i] - ranks[i];
    if (i > 0) v -= ranks[i - 1];
    out.push_back(v);
  }
  return out;
}

// dimension of Hom(m, n) modulo maps factoring through a projective; a map
// factors through a projective iff it lifts over the cover of n
template <class F>
size_t stable_hom_dim(const km::KModule<F>& m, const km::KModule<F>& n) {
  const F& K = m.field;
  size_t h = km::hom_dim(m, n);
  if (h == 0) return 0;
  auto cd = projective_cover(n);
  auto lifts = km::hom_maps(m, cd.P);
  if (lifts.empty()) return h;
  std::vector<std::vector<typename F::Elem>> cols;
  for (auto& g : lifts) {
    auto comp = la::mat_mul(K, cd.epi, g);
    cols.push_back(comp.a);
  }
  auto span = la::from_columns(K, n.dim * m.dim, cols);
  return h - la::rank(K, span);
}

// Tate cohomology dimension: stable maps out of the i-th syzygy
template <class F>
size_t tate_dim(const km::KModule<F>& m, const km::KModule<F>& n, long long i) {
  return stable_hom_dim(omega_iterate(m, i), n);
}

template <class F>
struct OmegaMap {
  km::KModule<F> src;  // omega(m)
  km::KModule<F> tgt;  // omega(n)
  la::Matrix<F> f;     // tgt.dim x src.dim
};

// functorial omega of a map f: m -> n: lift over the covers by choosing
// preimages of the generator images, then restrict to the kernels
template <class F>
OmegaMap<F> omega_of_map(const km::KModule<F>& m, const km::KModule<F>& n, const la::Matrix<F>& f) {
  const F& K = m.field;
  auto odm = omega_data(m);
  auto odn = omega_data(n);
  size_t q = km::pow_sz(m.p(), m.r);
  size_t bm = odm.cover.P.dim / (q ? q : 1);
  auto Zp = km::monomial_actions(odn.cover.P);
  auto lift = la::Matrix<F>::zero(K, odn.cover.P.dim, odm.cover.P.dim);
  for (size_t l = 0; l < bm; ++l) {
    // f applied to the image of the l-th generator
    std::vector<typename F::Elem> target(n.dim, K.zero());
    for (size_t a = 0; a < n.dim; ++a)
      for (size_t c = 0; c < m.dim; ++c)
        target[a] = K.add(target[a], K.mul(f.at(a, c), odm.cover.epi.at(c, l * q)));
    auto x = la::solve(K, odn.cover.epi, target);
    if (!x) throw InternalError("lift over the cover is infeasible");
    for (size_t e = 0; e < q; ++e) {
      auto col = la::mat_vec(K, Zp[e], *x);
      for (size_t a = 0; a < odn.cover.P.dim; ++a) lift.at(a, l * q + e) = col[a];
    }
  }
  auto rhs = la::mat_mul(K, lift, odm.incl);
  auto of = la::solve_matrix(K, odn.incl, rhs);
  if (!of) throw InternalError("lift does not preserve the kernels");
  return OmegaMap<F>{std::move(odm.omega), std::move(odn.omega), std::move(*of)};
}

// Carlson's module L_{zeta^n} in characteristic 2: kernel of the n-th
// composite power zeta o Omega(zeta) o ... of the degree-one class given by a
// nonzero vector c, with free summands split off
inline km::KModule<FpField> carlson_L(const FpField& K, uint32_t r, const std::vector<FpField::Elem>& c,
                                      uint32_t n) {
  if (K.characteristic() != 2) throw InputError("Carlson modules are only defined in characteristic 2");
  if (c.size() != r) throw InputError("class vector must have one entry per generator");
  if (n == 0) throw InputError("power must be at least 1");
  bool all_zero = true;
  for (auto x : c)
    if (!K.is_zero(x)) all_zero = false;
  if (all_zero) throw InputError("class vector must be nonzero");
  auto k = km::trivial(K, r);
  auto od = omega_data(k);
  // zeta on Omega(k), embedded in kE: pick off the coefficients of the
  // degree-one monomials z_i
  auto zeta = la::Matrix<FpField>::zero(K, 1, od.omega.dim);
  for (size_t j = 0; j < od.omega.dim; ++j) {
    FpField::Elem v = K.zero();
    for (uint32_t i = 0; i < r; ++i) {
      std::vector<uint32_t> e(r, 0);
      e[i] = 1;
      v = K.add(v, K.mul(c[i], od.incl.at(km::mono_index(e, 2), j)));
    }
    zeta.at(0, j) = v;
  }
  // build the chain zeta, Omega(zeta), ..., Omega^{n-1}(zeta) and compose
  auto total = zeta;  // 1 x dim of the current source
  la::Matrix<FpField> link = zeta;
  km::KModule<FpField> cur_src = od.omega, cur_tgt = k;
  for (uint32_t j = 1; j < n; ++j) {
    auto om = omega_of_map(cur_src, cur_tgt, link);
    link = om.f;
    cur_src = om.src;
    cur_tgt = om.tgt;
    total = la::mat_mul(K, total, link);
  }
  if (la::rank(K, total) != 1) throw InternalError("composite class vanished");
  auto ker = la::kernel_basis(K, total);
  auto B = la::from_columns(K, cur_src.dim, ker);
  return km::strip_free(km::restrict_action(cur_src, B));
}

// cosocle ranks of a minimal injective resolution, via duality
template <class F>
std::vector<size_t> injective_resolution_ranks(const km::KModule<F>& m, size_t len) {
  return minimal_resolution(km::dual(m), len).ranks;
}

}  // namespace modrep::ha
