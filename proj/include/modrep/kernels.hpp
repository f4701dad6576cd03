#pragma once
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "modrep/fp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Dense F_p elimination and matmul kernels. Every routine has a serial
// reference path and an OpenMP path; pivoting is identical in both, so the
// results are bitwise equal and the parallel path can be validated against
// the serial one (see test_kernels and the bench tool).

namespace modrep::la {

enum class Mode { serial, parallel };

inline std::atomic<bool>& parallel_flag() {
  static std::atomic<bool> f{false};
  return f;
}
inline void set_parallel(bool on) { parallel_flag().store(on); }
inline Mode default_mode() { return parallel_flag().load() ? Mode::parallel : Mode::serial; }

struct Echelon {
  size_t rank = 0;
  std::vector<size_t> pivot_cols;  // one per pivot row, ascending
};

// in-place reduced row echelon form, leftmost-nonzero pivoting with fixed row
// scan order (first row with nonzero entry in the pivot column wins)
inline Echelon rref_fp(std::vector<uint32_t>& a, size_t rows, size_t cols, uint32_t p, Mode mode) {
  FpField K(p);
  Echelon res;
  size_t pr = 0;  // next pivot row
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    size_t sel = rows;
    for (size_t i = pr; i < rows; ++i)
      if (a[i * cols + pc] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != pr)
      for (size_t j = pc; j < cols; ++j) std::swap(a[sel * cols + j], a[pr * cols + j]);
    uint32_t piv = a[pr * cols + pc];
    if (piv != 1) {
      uint32_t iv = K.inv(piv);
      for (size_t j = pc; j < cols; ++j) a[pr * cols + j] = K.mul(a[pr * cols + j], iv);
    }
    auto eliminate = [&](size_t i) {
      uint32_t f = a[i * cols + pc];
      if (f == 0) return;
      uint32_t nf = K.neg(f);
      const uint32_t* src = &a[pr * cols];
      uint32_t* dst = &a[i * cols];
      for (size_t j = pc; j < cols; ++j) dst[j] = (uint32_t)(((uint64_t)src[j] * nf + dst[j]) % p);
    };
    if (mode == Mode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (long long i = 0; i < (long long)rows; ++i)
        if ((size_t)i != pr) eliminate((size_t)i);
    } else {
      for (size_t i = 0; i < rows; ++i)
        if (i != pr) eliminate(i);
    }
    res.pivot_cols.push_back(pc);
    ++pr;
  }
  res.rank = pr;
  return res;
}

inline size_t rank_fp(std::vector<uint32_t> a, size_t rows, size_t cols, uint32_t p, Mode mode) {
  return rref_fp(a, rows, cols, p, mode).rank;
}

// basis of the null space, one column vector per free column; the free
// variable of each basis vector is set to 1 and all other free variables to 0
inline std::vector<std::vector<uint32_t>> kernel_fp(std::vector<uint32_t> a, size_t rows, size_t cols, uint32_t p,
                                                    Mode mode) {
  FpField K(p);
  Echelon e = rref_fp(a, rows, cols, p, mode);
  std::vector<char> is_pivot(cols, 0);
  for (size_t c : e.pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<uint32_t>> basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<uint32_t> v(cols, 0);
    v[fc] = 1;
    for (size_t i = 0; i < e.rank; ++i) {
      size_t pc = e.pivot_cols[i];
      v[pc] = K.neg(a[i * cols + fc]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// one solution of a·x = b (free variables pinned to 0), or empty optional-like
// flag via the bool; deterministic
inline bool solve_fp(std::vector<uint32_t> a, size_t rows, size_t cols, std::vector<uint32_t> b, uint32_t p,
                     std::vector<uint32_t>& x, Mode mode) {
  // eliminate on the augmented matrix
  std::vector<uint32_t> aug((cols + 1) * rows);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i * (cols + 1) + j] = a[i * cols + j];
    aug[i * (cols + 1) + cols] = b[i];
  }
  Echelon e = rref_fp(aug, rows, cols + 1, p, mode);
  x.assign(cols, 0);
  for (size_t i = 0; i < e.rank; ++i) {
    size_t pc = e.pivot_cols[i];
    if (pc == cols) return false;  // pivot in the constant column: inconsistent
    x[pc] = aug[i * (cols + 1) + cols];
  }
  return true;
}

inline std::vector<uint32_t> matmul_fp(const std::vector<uint32_t>& a, size_t ar, size_t ac,
                                       const std::vector<uint32_t>& b, size_t bc, uint32_t p, Mode mode) {
  std::vector<uint32_t> c(ar * bc, 0);
  auto row = [&](size_t i) {
    for (size_t j = 0; j < bc; ++j) {
      uint64_t acc = 0;
      for (size_t k = 0; k < ac; ++k) acc += (uint64_t)a[i * ac + k] * b[k * bc + j];
      c[i * bc + j] = (uint32_t)(acc % p);
    }
  };
  if (mode == Mode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < (long long)ar; ++i) row((size_t)i);
  } else {
    for (size_t i = 0; i < ar; ++i) row(i);
  }
  return c;
}

}  // namespace modrep::la
