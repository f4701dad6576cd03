#pragma once
#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "modrep/fraction.hpp"
#include "modrep/matrix.hpp"

// Modules over kE, E elementary abelian of rank r in characteristic p: a
// module is a vector space with r commuting p-nilpotent matrices Z_i giving
// the action of z_i = g_i - 1. The field is either F_p or a rational function
// field over it.

namespace modrep::km {

template <class F>
struct KModule {
  F field;
  uint32_t r = 1;
  size_t dim = 0;
  std::vector<la::Matrix<F>> Z;  // r matrices, dim x dim

  uint32_t p() const { return field.characteristic(); }
};

// check the defining relations: Z_i Z_j = Z_j Z_i and Z_i^p = 0
template <class F>
void validate(const KModule<F>& m) {
  if (m.r == 0) throw InputError("module rank must be at least 1");
  if (m.Z.size() != m.r) throw InputError("expected " + std::to_string(m.r) + " action matrices");
  const F& K = m.field;
  for (uint32_t i = 0; i < m.r; ++i)
    if (m.Z[i].rows != m.dim || m.Z[i].cols != m.dim)
      throw InputError("action matrix " + std::to_string(i + 1) + " is not " + std::to_string(m.dim) + "x" +
                       std::to_string(m.dim));
  for (uint32_t i = 0; i < m.r; ++i)
    for (uint32_t j = i + 1; j < m.r; ++j)
      if (!la::mat_eq(K, la::mat_mul(K, m.Z[i], m.Z[j]), la::mat_mul(K, m.Z[j], m.Z[i])))
        throw InputError("action matrices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                         " do not commute");
  for (uint32_t i = 0; i < m.r; ++i)
    if (!la::is_zero_mat(K, la::mat_pow(K, m.Z[i], m.p())))
      throw InputError("action matrix " + std::to_string(i + 1) + " is not " + std::to_string(m.p()) +
                       "-nilpotent");
}

// build from matrices; group form g_i (checked to satisfy g_i^p = 1) is
// converted to z-form via Z_i = G_i - I
template <class F>
KModule<F> from_group_matrices(const F& field, uint32_t r, const std::vector<la::Matrix<F>>& mats, bool z_form) {
  if (r == 0) throw InputError("module rank must be at least 1");
  if (mats.size() != r) throw InputError("expected " + std::to_string(r) + " matrices, got " + std::to_string(mats.size()));
  size_t d = mats.empty() ? 0 : mats[0].rows;
  for (auto& g : mats)
    if (g.rows != g.cols || g.rows != d) throw InputError("matrices must be square and of equal size");
  KModule<F> m{field, r, d, {}};
  uint32_t p = field.characteristic();
  for (uint32_t i = 0; i < r; ++i) {
    if (z_form) {
      m.Z.push_back(mats[i]);
    } else {
      if (!la::mat_eq(field, la::mat_pow(field, mats[i], p), la::Matrix<F>::identity(field, d)))
        throw InputError("group matrix " + std::to_string(i + 1) + " does not have order dividing " +
                         std::to_string(p));
      m.Z.push_back(la::mat_sub(field, mats[i], la::Matrix<F>::identity(field, d)));
    }
  }
  validate(m);
  return m;
}

template <class F>
KModule<F> trivial(const F& field, uint32_t r) {
  KModule<F> m{field, r, 1, {}};
  for (uint32_t i = 0; i < r; ++i) m.Z.push_back(la::Matrix<F>::zero(field, 1, 1));
  return m;
}

inline size_t pow_sz(uint32_t p, uint32_t r) {
  size_t v = 1;
  for (uint32_t i = 0; i < r; ++i) v *= p;
  return v;
}

// index of the monomial z^e in the regular module's basis: mixed radix with
// the last exponent varying fastest
inline size_t mono_index(const std::vector<uint32_t>& e, uint32_t p) {
  size_t idx = 0;
  for (uint32_t x : e) idx = idx * p + x;
  return idx;
}

// the group algebra kE as a module over itself, basis = monomials z^e
template <class F>
KModule<F> regular(const F& field, uint32_t r) {
  if (r == 0) throw InputError("module rank must be at least 1");
  uint32_t p = field.characteristic();
  size_t d = pow_sz(p, r);
  KModule<F> m{field, r, d, {}};
  std::vector<uint32_t> e(r, 0);
  for (uint32_t i = 0; i < r; ++i) m.Z.push_back(la::Matrix<F>::zero(field, d, d));
  for (size_t idx = 0; idx < d; ++idx) {
    // decode idx into exponents
    size_t t = idx;
    for (uint32_t i = r; i-- > 0;) {
      e[i] = (uint32_t)(t % p);
      t /= p;
    }
    for (uint32_t i = 0; i < r; ++i) {
      if (e[i] + 1 >= p) continue;  // z_i * z^e dies
      e[i] += 1;
      m.Z[i].at(mono_index(e, p), idx) = field.one();
      e[i] -= 1;
    }
  }
  return m;
}

template <class F>
void check_same_algebra(const KModule<F>& m, const KModule<F>& n) {
  if (m.r != n.r || m.p() != n.p()) throw InputError("modules are over different group algebras");
}

// diagonal action on M (x) N: from g(x)g = (1+z)(x)(1+z'),
// z acts as Z(x)I + I(x)Z' + Z(x)Z'
template <class F>
KModule<F> tensor_diag(const KModule<F>& m, const KModule<F>& n) {
  check_same_algebra(m, n);
  const F& K = m.field;
  KModule<F> t{K, m.r, m.dim * n.dim, {}};
  auto Im = la::Matrix<F>::identity(K, m.dim);
  auto In = la::Matrix<F>::identity(K, n.dim);
  for (uint32_t i = 0; i < m.r; ++i) {
    auto a = la::kron(K, m.Z[i], In);
    auto b = la::kron(K, Im, n.Z[i]);
    auto c = la::kron(K, m.Z[i], n.Z[i]);
    t.Z.push_back(la::mat_add(K, la::mat_add(K, a, b), c));
  }
  return t;
}

template <class F>
KModule<F> direct_sum(const KModule<F>& m, const KModule<F>& n) {
  check_same_algebra(m, n);
  const F& K = m.field;
  KModule<F> s{K, m.r, m.dim + n.dim, {}};
  for (uint32_t i = 0; i < m.r; ++i) {
    auto Zi = la::Matrix<F>::zero(K, s.dim, s.dim);
    for (size_t a = 0; a < m.dim; ++a)
      for (size_t b = 0; b < m.dim; ++b) Zi.at(a, b) = m.Z[i].at(a, b);
    for (size_t a = 0; a < n.dim; ++a)
      for (size_t b = 0; b < n.dim; ++b) Zi.at(m.dim + a, m.dim + b) = n.Z[i].at(a, b);
    s.Z.push_back(std::move(Zi));
  }
  return s;
}

// (I + Z)^{-1} = sum_{j<p} (-Z)^j, valid since Z^p = 0
template <class F>
la::Matrix<F> unipotent_inverse(const F& K, const la::Matrix<F>& Z, uint32_t p) {
  auto acc = la::Matrix<F>::identity(K, Z.rows);
  auto pw = la::Matrix<F>::identity(K, Z.rows);
  auto negZ = la::mat_scale(K, Z, K.from_int(-1));
  for (uint32_t j = 1; j < p; ++j) {
    pw = la::mat_mul(K, pw, negZ);
    acc = la::mat_add(K, acc, pw);
  }
  return acc;
}

// contragredient: g acts on M* by transpose-inverse, so
// Z* = ((I+Z)^{-1})^T - I
template <class F>
KModule<F> dual(const KModule<F>& m) {
  const F& K = m.field;
  KModule<F> d{K, m.r, m.dim, {}};
  auto I = la::Matrix<F>::identity(K, m.dim);
  for (uint32_t i = 0; i < m.r; ++i)
    d.Z.push_back(la::mat_sub(K, la::transpose(unipotent_inverse(K, m.Z[i], m.p())), I));
  return d;
}

template <class F>
KModule<F> hom_module(const KModule<F>& m, const KModule<F>& n) {
  return tensor_diag(dual(m), n);
}

// dimension of the simultaneous kernel of all Z_i (the fixed points / socle)
template <class F>
size_t fixed_point_dim(const KModule<F>& m) {
  if (m.dim == 0) return 0;
  const F& K = m.field;
  std::vector<la::Matrix<F>> parts(m.Z.begin(), m.Z.end());
  auto stacked = la::vstack(K, parts);
  return m.dim - la::rank(K, stacked);
}

template <class F>
size_t hom_dim(const KModule<F>& m, const KModule<F>& n) {
  return fixed_point_dim(hom_module(m, n));
}

// basis of Hom_{kE}(m, n) as matrices n.dim x m.dim, from the fixed points of
// the internal hom (coordinate i*dim(n)+j  <->  entry T[j][i])
template <class F>
std::vector<la::Matrix<F>> hom_maps(const KModule<F>& m, const KModule<F>& n) {
  const F& K = m.field;
  auto h = hom_module(m, n);
  std::vector<la::Matrix<F>> out;
  if (h.dim == 0) return out;
  std::vector<la::Matrix<F>> parts(h.Z.begin(), h.Z.end());
  auto stacked = la::vstack(K, parts);
  for (auto& v : la::kernel_basis(K, stacked)) {
    auto T = la::Matrix<F>::zero(K, n.dim, m.dim);
    for (size_t i = 0; i < m.dim; ++i)
      for (size_t j = 0; j < n.dim; ++j) T.at(j, i) = v[i * n.dim + j];
    out.push_back(std::move(T));
  }
  return out;
}

template <class F>
bool is_module_map(const KModule<F>& m, const KModule<F>& n, const la::Matrix<F>& T) {
  const F& K = m.field;
  if (T.rows != n.dim || T.cols != m.dim) return false;
  for (uint32_t i = 0; i < m.r; ++i)
    if (!la::mat_eq(K, la::mat_mul(K, T, m.Z[i]), la::mat_mul(K, n.Z[i], T))) return false;
  return true;
}

// X(alpha) = sum alpha_i Z_i, the action of the shifted unit's z-element
template <class F>
la::Matrix<F> restrict_shifted(const KModule<F>& m, const std::vector<typename F::Elem>& alpha) {
  const F& K = m.field;
  if (alpha.size() != m.r) throw InputError("alpha must have one entry per generator");
  bool all_zero = true;
  for (auto& a : alpha)
    if (!K.is_zero(a)) all_zero = false;
  if (all_zero) throw InputError("alpha must be nonzero");
  auto X = la::Matrix<F>::zero(K, m.dim, m.dim);
  for (uint32_t i = 0; i < m.r; ++i) X = la::mat_add(K, X, la::mat_scale(K, m.Z[i], alpha[i]));
  return X;
}

// free over the cyclic shifted subgroup iff rank X(alpha) hits the ceiling
// (p-1)/p * dim; impossible whenever p does not divide dim
template <class F>
bool shifted_free(const KModule<F>& m, const std::vector<typename F::Elem>& alpha) {
  auto X = restrict_shifted(m, alpha);
  if (m.dim % m.p() != 0) return false;
  return la::rank(m.field, X) == (m.p() - 1) * m.dim / m.p();
}

// keep only the actions indexed by S (0-based, nonempty, strictly increasing)
template <class F>
KModule<F> restrict_subset(const KModule<F>& m, const std::vector<uint32_t>& S) {
  if (S.empty()) throw InputError("subset must be nonempty");
  for (size_t t = 0; t < S.size(); ++t) {
    if (S[t] >= m.r) throw InputError("subset index out of range");
    if (t && S[t] <= S[t - 1]) throw InputError("subset indices must be strictly increasing");
  }
  KModule<F> s{m.field, (uint32_t)S.size(), m.dim, {}};
  for (uint32_t i : S) s.Z.push_back(m.Z[i]);
  return s;
}

// induce a module over the subalgebra generated by slots S up to the full
// rank-r algebra; basis = coset monomials (exponents on the complement of S,
// mixed radix, last slot fastest) tensor the original basis
template <class F>
KModule<F> induce_subset(const KModule<F>& mprime, uint32_t full_r, const std::vector<uint32_t>& S) {
  if (S.size() != mprime.r) throw InputError("subset size must match the module's rank");
  for (size_t t = 0; t < S.size(); ++t) {
    if (S[t] >= full_r) throw InputError("subset index out of range");
    if (t && S[t] <= S[t - 1]) throw InputError("subset indices must be strictly increasing");
  }
  const F& K = mprime.field;
  uint32_t p = mprime.p();
  std::vector<uint32_t> C;  // complement slots, ascending
  for (uint32_t i = 0; i < full_r; ++i)
    if (std::find(S.begin(), S.end(), i) == S.end()) C.push_back(i);
  size_t nmono = pow_sz(p, (uint32_t)C.size());
  size_t dm = mprime.dim;
  KModule<F> out{K, full_r, nmono * dm, {}};
  for (uint32_t i = 0; i < full_r; ++i) out.Z.push_back(la::Matrix<F>::zero(K, out.dim, out.dim));
  std::vector<uint32_t> f(C.size(), 0);
  for (size_t idx = 0; idx < nmono; ++idx) {
    size_t t = idx;
    for (size_t i = C.size(); i-- > 0;) {
      f[i] = (uint32_t)(t % p);
      t /= p;
    }
    // z_i for i in S: acts on the module factor, block diagonal
    for (size_t s = 0; s < S.size(); ++s)
      for (size_t a = 0; a < dm; ++a)
        for (size_t b = 0; b < dm; ++b)
          out.Z[S[s]].at(idx * dm + a, idx * dm + b) = mprime.Z[s].at(a, b);
    // z_i for i in the complement: shifts the coset monomial
    for (size_t c = 0; c < C.size(); ++c) {
      if (f[c] + 1 >= p) continue;
      f[c] += 1;
      size_t tgt = mono_index(f, p);
      f[c] -= 1;
      for (size_t a = 0; a < dm; ++a) out.Z[C[c]].at(tgt * dm + a, idx * dm + a) = K.one();
    }
  }
  return out;
}

// indices of standard basis vectors spanning m / rad m (rad m = sum Z_i m):
// row-reduce [Z_1|...|Z_r | I] and take the pivots that land in the identity block
template <class F>
std::vector<size_t> top_rep_indices(const KModule<F>& m) {
  const F& K = m.field;
  if (m.dim == 0) return {};
  std::vector<la::Matrix<F>> parts(m.Z.begin(), m.Z.end());
  parts.push_back(la::Matrix<F>::identity(K, m.dim));
  auto aug = la::hstack(K, parts);
  la::Matrix<F> work = aug;
  auto ech = la::rref_generic(K, work);
  size_t rad_cols = m.r * m.dim;
  std::vector<size_t> reps;
  for (size_t pc : ech.pivot_cols)
    if (pc >= rad_cols) reps.push_back(pc - rad_cols);
  return reps;
}

template <class F>
size_t top_dim(const KModule<F>& m) {
  return top_rep_indices(m).size();
}

// for p-groups projective = free, and freeness is a dimension count against
// the top (Nakayama)
template <class F>
bool is_projective(const KModule<F>& m) {
  return m.dim == pow_sz(m.p(), m.r) * top_dim(m);
}

// w = (z_1 ... z_r)^{p-1} spans the socle of kE; the rank of its action
// counts the free direct summands
template <class F>
la::Matrix<F> socle_operator(const KModule<F>& m) {
  const F& K = m.field;
  auto W = la::Matrix<F>::identity(K, m.dim);
  for (uint32_t i = 0; i < m.r; ++i) W = la::mat_mul(K, W, m.Z[i]);
  return la::mat_pow(K, W, m.p() - 1);
}

template <class F>
size_t free_rank(const KModule<F>& m) {
  return la::rank(m.field, socle_operator(m));
}

// restrict the action to an invariant subspace given by independent columns
template <class F>
KModule<F> restrict_action(const KModule<F>& m, const la::Matrix<F>& B) {
  const F& K = m.field;
  KModule<F> s{K, m.r, B.cols, {}};
  for (uint32_t i = 0; i < m.r; ++i) {
    auto img = la::mat_mul(K, m.Z[i], B);
    auto A = la::solve_matrix(K, B, img);
    if (!A) throw InternalError("subspace is not invariant under the action");
    s.Z.push_back(std::move(*A));
  }
  return s;
}

// action matrices Z^e for every monomial exponent e in {0..p-1}^r, indexed by
// mono_index
template <class F>
std::vector<la::Matrix<F>> monomial_actions(const KModule<F>& m) {
  const F& K = m.field;
  uint32_t p = m.p();
  size_t nm = pow_sz(p, m.r);
  std::vector<la::Matrix<F>> Ze(nm);
  std::vector<uint32_t> e(m.r, 0);
  for (size_t idx = 0; idx < nm; ++idx) {
    size_t t = idx;
    for (uint32_t i = m.r; i-- > 0;) {
      e[i] = (uint32_t)(t % p);
      t /= p;
    }
    auto M = la::Matrix<F>::identity(K, m.dim);
    for (uint32_t i = 0; i < m.r; ++i)
      for (uint32_t k = 0; k < e[i]; ++k) M = la::mat_mul(K, M, m.Z[i]);
    Ze[idx] = std::move(M);
  }
  return Ze;
}

// split off a maximal free direct summand: choose basis vectors m_j with
// independent socle images, build the kE-linear projection onto the free
// submodule they generate, and return its kernel with the restricted action
template <class F>
KModule<F> strip_free(const KModule<F>& m) {
  const F& K = m.field;
  auto W = socle_operator(m);
  size_t s = la::rank(K, W);
  if (s == 0) return m;
  uint32_t p = m.p();
  size_t d = m.dim;
  // greedy pick, in basis order, of vectors with independent socle images
  std::vector<size_t> picked;
  la::Matrix<F> U = la::Matrix<F>::zero(K, d, 0);
  for (size_t j = 0; j < d && picked.size() < s; ++j) {
    auto cand = la::column(W, j);  // W e_j
    la::Matrix<F> trial = la::Matrix<F>::zero(K, d, U.cols + 1);
    for (size_t i = 0; i < d; ++i) {
      for (size_t c = 0; c < U.cols; ++c) trial.at(i, c) = U.at(i, c);
      trial.at(i, U.cols) = cand[i];
    }
    if (la::rank(K, trial) == U.cols + 1) {
      U = trial;
      picked.push_back(j);
    }
  }
  if (picked.size() != s) throw InternalError("socle rank not reached by standard vectors");
  // functionals sigma_l with sigma_l(W m_{j_t}) = delta_{lt}: rows of X where X U = I
  auto Xt = la::solve_matrix(K, la::transpose(U), la::Matrix<F>::identity(K, s));
  if (!Xt) throw InternalError("no left inverse for the socle frame");
  auto sigma = la::transpose(*Xt);  // s x d, sigma * U = I_s
  auto Ze = monomial_actions(m);
  size_t nm = Ze.size();
  std::vector<uint32_t> P(m.r, p - 1);
  // projection pi(x) = sum_l sum_e (Z^{P-e} m_{j_l}) * sigma_l(Z^e x)
  auto pi = la::Matrix<F>::zero(K, d, d);
  std::vector<uint32_t> comp(m.r);
  for (size_t idx = 0; idx < nm; ++idx) {
    size_t t = idx;
    for (uint32_t i = m.r; i-- > 0;) {
      comp[i] = (uint32_t)(t % p);
      t /= p;
    }
    for (uint32_t i = 0; i < m.r; ++i) comp[i] = P[i] - comp[i];
    size_t cidx = mono_index(comp, p);
    auto row = la::mat_mul(K, sigma, Ze[idx]);  // sigma * Z^e, one row per l
    for (size_t l = 0; l < s; ++l) {
      auto v = la::column(Ze[cidx], picked[l]);  // Z^{P-e} m_{j_l}
      for (size_t a = 0; a < d; ++a) {
        if (K.is_zero(v[a])) continue;
        for (size_t b = 0; b < d; ++b) pi.at(a, b) = K.add(pi.at(a, b), K.mul(v[a], row.at(l, b)));
      }
    }
  }
  auto ker = la::kernel_basis(K, pi);
  if (ker.size() != d - nm * s) throw InternalError("free splitting has wrong dimension");
  auto B = la::from_columns(K, d, ker);
  return restrict_action(m, B);
}

}  // namespace modrep::km
