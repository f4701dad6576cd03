#pragma once

// Characteristic-two correspondence between modules over the group algebra of
// an elementary abelian 2-group and graded modules over a polynomial ring:
// the twisted bimodule J = kE (x) S with its degree-one differential, the
// quasi-isomorphism checks for the unit and counit of the correspondence, and
// the windowed cohomology transform of a module with its variable actions.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <modrep/homalg.hpp>
#include <modrep/rankvariety.hpp>

namespace modrep::bg {

// kE (x) S truncated at internal degree N: the degree-i piece is free of rank
// dim S^i over kE, and the differential is (left) multiplication by the
// degree-one element sum_i z_i (x) x_i
struct TruncatedJ {
  uint32_t r = 0;
  size_t N = 0;
  std::vector<km::KModule<FpField>> J;       // J[i], 0 <= i <= N
  std::vector<la::Matrix<FpField>> d;        // d[i] : J[i] -> J[i+1]
  std::vector<std::vector<poly::Exp>> mono;  // monomial basis of S^i, aligned with the blocks
};

namespace detail {

inline size_t mono_pos(const std::vector<poly::Exp>& list, const poly::Exp& e) {
  for (size_t i = 0; i < list.size(); ++i)
    if (list[i] == e) return i;
  throw InternalError("monomial missing from the graded basis");
}

inline std::vector<FpField::Elem> mat_vec(const FpField& K, const la::Matrix<FpField>& m,
                                          const std::vector<FpField::Elem>& v) {
  if (m.cols != v.size()) throw InputError("matrix-vector shape mismatch");
  std::vector<FpField::Elem> out(m.rows, 0);
  for (size_t i = 0; i < m.rows; ++i) {
    FpField::Elem acc = 0;
    for (size_t j = 0; j < m.cols; ++j)
      if (v[j]) acc = K.add(acc, K.mul(m.at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

}  // namespace detail

inline TruncatedJ build_J(uint32_t r, size_t N) {
  if (N < 1) throw InputError("the truncation window must reach degree one");
  FpField K(2);
  km::KModule<FpField> kE = km::regular(K, r);
  size_t q = kE.dim;
  TruncatedJ t;
  t.r = r;
  t.N = N;
  for (size_t i = 0; i <= N; ++i) {
    t.mono.push_back(rv::degree_monomials(r, i));
    t.J.push_back(ha::regular_power(K, r, t.mono.back().size()));
  }
  for (size_t i = 0; i < N; ++i) {
    la::Matrix<FpField> D = la::Matrix<FpField>::zero(K, t.J[i + 1].dim, t.J[i].dim);
    for (size_t b = 0; b < t.mono[i].size(); ++b)
      for (uint32_t v = 0; v < r; ++v) {
        poly::Exp e = t.mono[i][b];
        e[v] += 1;
        size_t bp = detail::mono_pos(t.mono[i + 1], e);
        const auto& Z = kE.Z[v];
        for (size_t a = 0; a < q; ++a)
          for (size_t c = 0; c < q; ++c)
            if (Z.at(a, c)) D.at(bp * q + a, b * q + c) = K.add(D.at(bp * q + a, b * q + c), Z.at(a, c));
      }
    t.d.push_back(std::move(D));
  }
  for (size_t i = 0; i + 1 < t.d.size(); ++i)
    if (!la::is_zero_mat(K, la::mat_mul(K, t.d[i + 1], t.d[i])))
      throw InternalError("the degree-one differential does not square to zero");
  return t;
}

// unit check: in the window, the truncated complex resolves the trivial module,
// with the bottom cohomology spanned by (z_1 ... z_r) (x) 1
inline bool eta_check(uint32_t r, size_t N) {
  if (N < 2) throw InputError("window too small for a cohomology check");
  TruncatedJ t = build_J(r, N);
  FpField K(2);
  size_t w = km::pow_sz(2, r) - 1;  // index of the top product of the generators
  auto ker = la::kernel_basis(K, t.d[0]);
  bool ok = ker.size() == 1;
  if (ok)
    for (size_t j = 0; j < ker[0].size(); ++j) ok = ok && (ker[0][j] == (j == w ? 1u : 0u));
  for (size_t i = 1; i < N; ++i)
    ok = ok && (t.J[i].dim == la::rank(K, t.d[i]) + la::rank(K, t.d[i - 1]));
  return ok;
}

// total Hom complex from the free tower J into a cochain complex of modules,
// in generator-value coordinates: a map out of kE^s is the tuple of its values
// on the s generators
struct HomTotal {
  long long nlo = 0, nhi = 0;
  std::vector<size_t> dims;                 // dim of the total degree-n space, n = nlo..nhi
  std::vector<la::Matrix<FpField>> D;       // D[k] : degree nlo+k -> nlo+k+1
  std::vector<std::vector<size_t>> off;     // off[n-nlo][i] = offset of component i (SIZE_MAX if absent)
};

// the source tower is cut by a staircase: total degree n keeps components
// i <= stair0 - n, so each lower Hom degree carries one more source component
// and the truncation is closed under the differential with no reflection of
// the top boundary into low cohomological degrees
inline HomTotal hom_total(const TruncatedJ& t, const std::vector<km::KModule<FpField>>& tgt,
                          const std::vector<la::Matrix<FpField>>& tgtD, long long nlo, long long nhi,
                          long long stair0) {
  FpField K(2);
  size_t q = km::pow_sz(2, t.r);
  long long srcN = (long long)t.N;
  long long tgtN = (long long)tgt.size() - 1;
  std::vector<std::vector<la::Matrix<FpField>>> tact;
  for (auto& T : tgt) tact.push_back(km::monomial_actions(T));
  auto gens = [&](long long i) { return t.mono[(size_t)i].size(); };
  auto present = [&](long long i, long long n) {
    return i >= 0 && i <= srcN && i <= stair0 - n && i + n >= 0 && i + n <= tgtN;
  };

  HomTotal h;
  h.nlo = nlo;
  h.nhi = nhi;
  for (long long n = nlo; n <= nhi; ++n) {
    std::vector<size_t> off((size_t)srcN + 1, SIZE_MAX);
    size_t pos = 0;
    for (long long i = 0; i <= srcN; ++i) {
      if (!present(i, n)) continue;
      off[(size_t)i] = pos;
      pos += gens(i) * tgt[(size_t)(i + n)].dim;
    }
    h.off.push_back(std::move(off));
    h.dims.push_back(pos);
  }

  for (long long n = nlo; n < nhi; ++n) {
    const auto& offS = h.off[(size_t)(n - nlo)];
    const auto& offT = h.off[(size_t)(n + 1 - nlo)];
    la::Matrix<FpField> D =
        la::Matrix<FpField>::zero(K, h.dims[(size_t)(n + 1 - nlo)], h.dims[(size_t)(n - nlo)]);
    // walk the components of the target degree and pull in both terms of the
    // differential: postcomposition from component i, precomposition from i+1
    for (long long i = 0; i <= srcN; ++i) {
      if (offT[(size_t)i] == SIZE_MAX) continue;
      long long j = i + n;  // target complex slot of the source component i
      size_t si = gens(i);
      size_t dimTj1 = tgt[(size_t)(j + 1)].dim;
      if (offS[(size_t)i] != SIZE_MAX && j >= 0 && j < tgtN) {
        size_t dimTj = tgt[(size_t)j].dim;
        for (size_t l = 0; l < si; ++l)
          for (size_t a = 0; a < dimTj1; ++a)
            for (size_t b = 0; b < dimTj; ++b) {
              auto x = tgtD[(size_t)j].at(a, b);
              if (x)
                D.at(offT[(size_t)i] + l * dimTj1 + a, offS[(size_t)i] + l * dimTj + b) = K.add(
                    D.at(offT[(size_t)i] + l * dimTj1 + a, offS[(size_t)i] + l * dimTj + b), x);
            }
      }
      if (i + 1 <= srcN && offS[(size_t)(i + 1)] != SIZE_MAX) {
        size_t si1 = gens(i + 1);
        const auto& dj = t.d[(size_t)i];
        for (size_t l = 0; l < si; ++l)
          for (size_t lp = 0; lp < si1; ++lp)
            for (size_t e = 0; e < q; ++e) {
              auto c = dj.at(lp * q + e, l * q);
              if (!c) continue;
              const auto& Ze = tact[(size_t)(j + 1)][e];
              for (size_t a = 0; a < dimTj1; ++a)
                for (size_t b = 0; b < dimTj1; ++b)
                  if (Ze.at(a, b))
                    D.at(offT[(size_t)i] + l * dimTj1 + a, offS[(size_t)(i + 1)] + lp * dimTj1 + b) =
                        K.add(D.at(offT[(size_t)i] + l * dimTj1 + a,
                                   offS[(size_t)(i + 1)] + lp * dimTj1 + b),
                              K.mul(c, Ze.at(a, b)));
            }
      }
    }
    h.D.push_back(std::move(D));
  }
  return h;
}

// counit check: in the window, the endomorphism complex of J has the cohomology
// of a polynomial ring on r degree-one classes, represented by right
// multiplication with the monomials
inline bool zeta_check(uint32_t r, size_t N) {
  if (N < 2) throw InputError("window too small for a cohomology check");
  TruncatedJ t = build_J(r, N);
  FpField K(2);
  size_t q = km::pow_sz(2, r);
  std::vector<la::Matrix<FpField>> selfD = t.d;
  HomTotal h = hom_total(t, t.J, selfD, -1, (long long)N - 1, (long long)N - 1);
  bool ok = true;
  for (long long n = 0; ok && n + 2 <= (long long)N; ++n) {
    size_t idx = (size_t)(n + 1);  // n - nlo
    size_t rk_out = la::rank(K, h.D[idx]);
    size_t rk_in = la::rank(K, h.D[idx - 1]);
    size_t dimH = h.dims[idx] - rk_out - rk_in;
    size_t sn = t.mono[(size_t)n].size();
    ok = ok && dimH == sn;
    // right multiplication by each monomial of degree n gives a cocycle; the
    // classes must stay independent modulo the coboundaries
    la::Matrix<FpField> P = la::Matrix<FpField>::zero(K, h.dims[idx], sn);
    for (size_t bi = 0; bi < sn; ++bi) {
      const poly::Exp& beta = t.mono[(size_t)n][bi];
      for (long long i = 0; i + n <= (long long)N && i <= (long long)N; ++i) {
        size_t offc = h.off[idx][(size_t)i];
        if (offc == SIZE_MAX) continue;
        size_t dimTj = t.J[(size_t)(i + n)].dim;
        for (size_t l = 0; l < t.mono[(size_t)i].size(); ++l) {
          poly::Exp g = t.mono[(size_t)i][l];
          for (size_t v = 0; v < g.size(); ++v) g[v] += beta[v];
          size_t gp = detail::mono_pos(t.mono[(size_t)(i + n)], g);
          P.at(offc + l * dimTj + gp * q, bi) = 1;
        }
      }
    }
    for (size_t bi = 0; ok && bi < sn; ++bi) {
      std::vector<FpField::Elem> col(h.dims[idx]);
      for (size_t i2 = 0; i2 < h.dims[idx]; ++i2) col[i2] = P.at(i2, bi);
      auto img = detail::mat_vec(K, h.D[idx], col);
      for (auto x : img) ok = ok && x == 0;
    }
    ok = ok && la::rank(K, la::hstack(K, {h.D[idx - 1], P})) == rk_in + sn;
  }
  return ok;
}

// windowed cohomology of a module under the correspondence, with the variable
// actions represented on cohomology
struct DGSWindow {
  size_t window = 0;                 // N
  std::vector<size_t> dims;          // h^0..h^N (the top degree is uncertified)
  size_t certified = 0;              // N - 1
  // actions[v][n] : H^n -> H^{n+1} for 0 <= n <= N-2
  std::vector<std::vector<la::Matrix<FpField>>> actions;
};

inline DGSWindow bgg_transform(const km::KModule<FpField>& m, size_t N) {
  if (m.p() != 2) throw InputError("the correspondence needs characteristic two");
  if (N < 1) throw InputError("the truncation window must reach degree one");
  FpField K = m.field;
  uint32_t r = m.r;
  TruncatedJ t = build_J(r, N);

  // injective resolution of m through duality: resolve the dual by covers and
  // dualize back, so the maps are the transposes of the resolution maps
  auto res = ha::minimal_resolution(km::dual(m), N + 1);
  std::vector<km::KModule<FpField>> I;
  std::vector<la::Matrix<FpField>> dI;
  for (size_t j = 0; j + 1 < res.P.size(); ++j) {
    I.push_back(km::dual(res.P[j]));
    dI.push_back(la::transpose(res.d[j + 1]));
  }
  I.push_back(km::dual(res.P.back()));

  HomTotal h = hom_total(t, I, dI, -1, (long long)N + 1);

  DGSWindow w;
  w.window = N;
  w.certified = N - 1;
  std::vector<size_t> rk(h.D.size());
  for (size_t k = 0; k < h.D.size(); ++k) rk[k] = la::rank(K, h.D[k]);
  for (long long n = 0; n <= (long long)N; ++n) {
    size_t idx = (size_t)(n + 1);
    w.dims.push_back(h.dims[idx] - rk[idx] - rk[idx - 1]);
  }

  // representatives: kernel vectors that extend the coboundaries independently
  std::vector<la::Matrix<FpField>> reps;  // columns, one matrix per degree 0..N-1
  for (long long n = 0; n + 1 <= (long long)N; ++n) {
    size_t idx = (size_t)(n + 1);
    auto ker = la::kernel_basis(K, h.D[idx]);
    la::Matrix<FpField> R = la::Matrix<FpField>::zero(K, h.dims[idx], w.dims[(size_t)n]);
    la::Matrix<FpField> acc = h.D[idx - 1];
    size_t got = 0, base = rk[idx - 1];
    for (auto& v : ker) {
      if (got == w.dims[(size_t)n]) break;
      la::Matrix<FpField> cand = la::Matrix<FpField>::zero(K, h.dims[idx], 1);
      for (size_t i2 = 0; i2 < v.size(); ++i2) cand.at(i2, 0) = v[i2];
      la::Matrix<FpField> ext = la::hstack(K, {acc, cand});
      if (la::rank(K, ext) > base + got) {
        for (size_t i2 = 0; i2 < v.size(); ++i2) R.at(i2, got) = v[i2];
        ++got;
        acc = std::move(ext);
      }
    }
    if (got != w.dims[(size_t)n]) throw InternalError("cohomology representatives are incomplete");
    reps.push_back(std::move(R));
  }

  // variable actions by precomposition with right multiplication on the tower
  w.actions.assign(r, {});
  for (uint32_t v = 0; v < r; ++v) {
    for (long long n = 0; n + 2 <= (long long)N; ++n) {
      size_t idx = (size_t)(n + 1);
      // P : total degree n -> n+1, copying the next component's values along
      // the monomial shift by x_v
      la::Matrix<FpField> P =
          la::Matrix<FpField>::zero(K, h.dims[idx + 1], h.dims[idx]);
      for (long long i = 0; i + 1 <= (long long)t.N; ++i) {
        size_t offT = h.off[idx + 1][(size_t)i];
        size_t offS = h.off[idx][(size_t)(i + 1)];
        if (offT == SIZE_MAX || offS == SIZE_MAX) continue;
        // the copied component i+1 of the source map and the receiving
        // component i both land in the complex slot i+n+1
        size_t dimT = I[(size_t)(i + n + 1)].dim;
        for (size_t l = 0; l < t.mono[(size_t)i].size(); ++l) {
          poly::Exp g = t.mono[(size_t)i][l];
          g[v] += 1;
          size_t lp = detail::mono_pos(t.mono[(size_t)(i + 1)], g);
          for (size_t a = 0; a < dimT; ++a)
            P.at(offT + l * dimT + a, offS + lp * dimT + a) = 1;
        }
      }
      // express the image of each representative in the next degree's basis
      la::Matrix<FpField> act = la::Matrix<FpField>::zero(K, w.dims[(size_t)(n + 1)], w.dims[(size_t)n]);
      la::Matrix<FpField> frame = la::hstack(K, {h.D[idx], reps[(size_t)(n + 1)]});
      for (size_t col = 0; col < w.dims[(size_t)n]; ++col) {
        std::vector<FpField::Elem> u(h.dims[idx]);
        for (size_t i2 = 0; i2 < u.size(); ++i2) u[i2] = reps[(size_t)n].at(i2, col);
        auto img = detail::mat_vec(K, P, u);
        auto sol = la::solve(K, frame, img);
        if (!sol) throw InternalError("a variable action leaves the cocycles");
        for (size_t i2 = 0; i2 < w.dims[(size_t)(n + 1)]; ++i2)
          act.at(i2, col) = (*sol)[h.D[idx].cols + i2];
      }
      w.actions[v].push_back(std::move(act));
    }
  }
  return w;
}

// the certified window of the transform matches the stable cohomology
// dimensions computed from a minimal resolution of the trivial module
inline bool compare_with_ext(const km::KModule<FpField>& m, size_t N) {
  DGSWindow w = bgg_transform(m, N);
  km::KModule<FpField> k = km::trivial(m.field, m.r);
  auto ext = ha::ext_dims(k, m, N >= 1 ? N - 1 : 0);
  for (size_t n = 0; n < ext.size(); ++n)
    if (w.dims[n] != ext[n]) return false;
  return true;
}

}  // namespace modrep::bg
