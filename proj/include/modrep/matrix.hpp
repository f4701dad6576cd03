#pragma once
#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "modrep/fp.hpp"
#include "modrep/kernels.hpp"

namespace modrep::la {

// dense row-major matrix over an exact field; the field context object K is
// passed to the operations (it carries p, and for function fields the ring)
template <class F>
struct Matrix {
  using Elem = typename F::Elem;
  size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(size_t r, size_t c, Elem fill) : rows(r), cols(c), a(r * c, fill) {}
  static Matrix zero(const F& K, size_t r, size_t c) { return Matrix(r, c, K.zero()); }
  static Matrix identity(const F& K, size_t n) {
    Matrix m = zero(K, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = K.one();
    return m;
  }
  Elem& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Elem& at(size_t i, size_t j) const { return a[i * cols + j]; }
  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

template <class F>
bool mat_eq(const F& K, const Matrix<F>& x, const Matrix<F>& y) {
  if (!x.same_shape(y)) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!K.eq(x.a[i], y.a[i])) return false;
  return true;
}

template <class F>
bool is_zero_mat(const F& K, const Matrix<F>& x) {
  for (auto& e : x.a)
    if (!K.is_zero(e)) return false;
  return true;
}

template <class F>
Matrix<F> mat_add(const F& K, const Matrix<F>& x, const Matrix<F>& y) {
  if (!x.same_shape(y)) throw InputError("matrix shape mismatch in add");
  Matrix<F> r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = K.add(r.a[i], y.a[i]);
  return r;
}

template <class F>
Matrix<F> mat_sub(const F& K, const Matrix<F>& x, const Matrix<F>& y) {
  if (!x.same_shape(y)) throw InputError("matrix shape mismatch in sub");
  Matrix<F> r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = K.sub(r.a[i], y.a[i]);
  return r;
}

template <class F>
Matrix<F> mat_scale(const F& K, const Matrix<F>& x, typename F::Elem c) {
  Matrix<F> r = x;
  for (auto& e : r.a) e = K.mul(e, c);
  return r;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& x) {
  Matrix<F> r;
  r.rows = x.cols;
  r.cols = x.rows;
  r.a.resize(x.a.size());
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) r.a[j * r.cols + i] = x.a[i * x.cols + j];
  return r;
}

template <class F>
Matrix<F> mat_mul(const F& K, const Matrix<F>& x, const Matrix<F>& y) {
  if (x.cols != y.rows) throw InputError("matrix shape mismatch in mul");
  if constexpr (std::is_same_v<F, FpField>) {
    Matrix<F> r;
    r.rows = x.rows;
    r.cols = y.cols;
    r.a = matmul_fp(x.a, x.rows, x.cols, y.a, y.cols, K.p, default_mode());
    return r;
  } else {
    Matrix<F> r = Matrix<F>::zero(K, x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
      for (size_t k = 0; k < x.cols; ++k) {
        if (K.is_zero(x.at(i, k))) continue;
        for (size_t j = 0; j < y.cols; ++j)
          r.at(i, j) = K.add(r.at(i, j), K.mul(x.at(i, k), y.at(k, j)));
      }
    return r;
  }
}

template <class F>
Matrix<F> mat_pow(const F& K, const Matrix<F>& x, uint64_t e) {
  Matrix<F> r = Matrix<F>::identity(K, x.rows);
  Matrix<F> b = x;
  while (e) {
    if (e & 1) r = mat_mul(K, r, b);
    b = mat_mul(K, b, b);
    e >>= 1;
  }
  return r;
}

// Kronecker product, index (i,j) -> i*cols(y)+j blocks
template <class F>
Matrix<F> kron(const F& K, const Matrix<F>& x, const Matrix<F>& y) {
  Matrix<F> r = Matrix<F>::zero(K, x.rows * y.rows, x.cols * y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) {
      if (K.is_zero(x.at(i, j))) continue;
      for (size_t k = 0; k < y.rows; ++k)
        for (size_t l = 0; l < y.cols; ++l)
          r.at(i * y.rows + k, j * y.cols + l) = K.mul(x.at(i, j), y.at(k, l));
    }
  return r;
}

template <class F>
Matrix<F> hstack(const F& K, const std::vector<Matrix<F>>& parts) {
  if (parts.empty()) return Matrix<F>();
  size_t rows = parts[0].rows, cols = 0;
  for (auto& m : parts) {
    if (m.rows != rows) throw InputError("hstack row mismatch");
    cols += m.cols;
  }
  Matrix<F> r = Matrix<F>::zero(K, rows, cols);
  size_t off = 0;
  for (auto& m : parts) {
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < m.cols; ++j) r.at(i, off + j) = m.at(i, j);
    off += m.cols;
  }
  return r;
}

template <class F>
Matrix<F> vstack(const F& K, const std::vector<Matrix<F>>& parts) {
  if (parts.empty()) return Matrix<F>();
  size_t cols = parts[0].cols, rows = 0;
  for (auto& m : parts) {
    if (m.cols != cols) throw InputError("vstack col mismatch");
    rows += m.rows;
  }
  Matrix<F> r = Matrix<F>::zero(K, rows, cols);
  size_t off = 0;
  for (auto& m : parts) {
    for (size_t i = 0; i < m.rows; ++i)
      for (size_t j = 0; j < cols; ++j) r.at(off + i, j) = m.at(i, j);
    off += m.rows;
  }
  return r;
}

// columns -> matrix and back
template <class F>
Matrix<F> from_columns(const F& K, size_t rows, const std::vector<std::vector<typename F::Elem>>& cols) {
  Matrix<F> r = Matrix<F>::zero(K, rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InputError("column length mismatch");
    for (size_t i = 0; i < rows; ++i) r.at(i, j) = cols[j][i];
  }
  return r;
}

template <class F>
std::vector<typename F::Elem> column(const Matrix<F>& m, size_t j) {
  std::vector<typename F::Elem> v(m.rows);
  for (size_t i = 0; i < m.rows; ++i) v[i] = m.at(i, j);
  return v;
}

// generic reduced row echelon form (same pivot strategy as the F_p kernels)
template <class F>
Echelon rref_generic(const F& K, Matrix<F>& m) {
  Echelon res;
  size_t pr = 0;
  for (size_t pc = 0; pc < m.cols && pr < m.rows; ++pc) {
    size_t sel = m.rows;
    for (size_t i = pr; i < m.rows; ++i)
      if (!K.is_zero(m.at(i, pc))) {
        sel = i;
        break;
      }
    if (sel == m.rows) continue;
    if (sel != pr)
      for (size_t j = pc; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(pr, j));
    auto iv = K.inv(m.at(pr, pc));
    for (size_t j = pc; j < m.cols; ++j) m.at(pr, j) = K.mul(m.at(pr, j), iv);
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == pr || K.is_zero(m.at(i, pc))) continue;
      auto f = m.at(i, pc);
      for (size_t j = pc; j < m.cols; ++j) m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(pr, j)));
    }
    res.pivot_cols.push_back(pc);
    ++pr;
  }
  res.rank = pr;
  return res;
}

template <class F>
size_t rank(const F& K, const Matrix<F>& m) {
  if constexpr (std::is_same_v<F, FpField>) {
    return rank_fp(m.a, m.rows, m.cols, K.p, default_mode());
  } else {
    Matrix<F> c = m;
    return rref_generic(K, c).rank;
  }
}

// null-space basis, one vector per free column, free variable pinned to 1
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& K, const Matrix<F>& m) {
  if constexpr (std::is_same_v<F, FpField>) {
    return kernel_fp(m.a, m.rows, m.cols, K.p, default_mode());
  } else {
    Matrix<F> c = m;
    Echelon e = rref_generic(K, c);
    std::vector<char> is_pivot(m.cols, 0);
    for (size_t pc : e.pivot_cols) is_pivot[pc] = 1;
    std::vector<std::vector<typename F::Elem>> basis;
    for (size_t fc = 0; fc < m.cols; ++fc) {
      if (is_pivot[fc]) continue;
      std::vector<typename F::Elem> v(m.cols, K.zero());
      v[fc] = K.one();
      for (size_t i = 0; i < e.rank; ++i) v[e.pivot_cols[i]] = K.neg(c.at(i, fc));
      basis.push_back(std::move(v));
    }
    return basis;
  }
}

// one solution of m·x = b with free variables set to 0; nullopt if none
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const F& K, const Matrix<F>& m,
                                                   const std::vector<typename F::Elem>& b) {
  if (b.size() != m.rows) throw InputError("solve: rhs length mismatch");
  if constexpr (std::is_same_v<F, FpField>) {
    std::vector<uint32_t> x;
    if (!solve_fp(m.a, m.rows, m.cols, b, K.p, x, default_mode())) return std::nullopt;
    return x;
  } else {
    Matrix<F> aug = Matrix<F>::zero(K, m.rows, m.cols + 1);
    for (size_t i = 0; i < m.rows; ++i) {
      for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
      aug.at(i, m.cols) = b[i];
    }
    Echelon e = rref_generic(K, aug);
    std::vector<typename F::Elem> x(m.cols, K.zero());
    for (size_t i = 0; i < e.rank; ++i) {
      if (e.pivot_cols[i] == m.cols) return std::nullopt;
      x[e.pivot_cols[i]] = aug.at(i, m.cols);
    }
    return x;
  }
}

// solve m·X = B column by column; nullopt if any column is inconsistent
template <class F>
std::optional<Matrix<F>> solve_matrix(const F& K, const Matrix<F>& m, const Matrix<F>& b) {
  if (m.rows != b.rows) throw InputError("solve_matrix: shape mismatch");
  Matrix<F> x = Matrix<F>::zero(K, m.cols, b.cols);
  for (size_t j = 0; j < b.cols; ++j) {
    auto sol = solve(K, m, column(b, j));
    if (!sol) return std::nullopt;
    for (size_t i = 0; i < m.cols; ++i) x.at(i, j) = (*sol)[i];
  }
  return x;
}

template <class F>
std::vector<typename F::Elem> mat_vec(const F& K, const Matrix<F>& m, const std::vector<typename F::Elem>& v) {
  if (v.size() != m.cols) throw InputError("mat_vec: length mismatch");
  std::vector<typename F::Elem> r(m.rows, K.zero());
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j)
      if (!K.is_zero(m.at(i, j))) r[i] = K.add(r[i], K.mul(m.at(i, j), v[j]));
  return r;
}

}  // namespace modrep::la
