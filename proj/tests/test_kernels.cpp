#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modrep/kernels.hpp"
#include "modrep/matrix.hpp"

using namespace modrep;
using namespace modrep::la;

namespace {

std::vector<uint32_t> random_mat(std::mt19937& rng, size_t r, size_t c, uint32_t p) {
  std::uniform_int_distribution<uint32_t> d(0, p - 1);
  std::vector<uint32_t> m(r * c);
  for (auto& e : m) e = d(rng);
  return m;
}

}  // namespace

TEST_CASE("parallel rref is bitwise identical to serial") {
  std::mt19937 rng(20240817);
  for (uint32_t p : {2u, 3u, 5u, 97u}) {
    for (auto [r, c] : std::vector<std::pair<size_t, size_t>>{{1, 1}, {5, 5}, {8, 3}, {3, 8}, {20, 20}, {40, 17}}) {
      auto m = random_mat(rng, r, c, p);
      auto ms = m, mp = m;
      Echelon es = rref_fp(ms, r, c, p, Mode::serial);
      Echelon ep = rref_fp(mp, r, c, p, Mode::parallel);
      CHECK(es.rank == ep.rank);
      CHECK(es.pivot_cols == ep.pivot_cols);
      CHECK(ms == mp);  // bitwise equal content
    }
  }
}

TEST_CASE("rref is idempotent and pivots are clean") {
  std::mt19937 rng(555);
  for (int t = 0; t < 20; ++t) {
    size_t r = 6, c = 9;
    auto m = random_mat(rng, r, c, 5);
    Echelon e = rref_fp(m, r, c, 5, Mode::serial);
    auto m2 = m;
    Echelon e2 = rref_fp(m2, r, c, 5, Mode::serial);
    CHECK(m == m2);
    CHECK(e.rank == e2.rank);
    // pivot columns hold unit vectors
    for (size_t i = 0; i < e.rank; ++i) {
      size_t pc = e.pivot_cols[i];
      for (size_t row = 0; row < r; ++row) CHECK(m[row * c + pc] == (row == i ? 1u : 0u));
    }
  }
}

TEST_CASE("matmul serial, parallel, and generic paths agree") {
  std::mt19937 rng(31337);
  for (uint32_t p : {2u, 7u, 97u}) {
    FpField K(p);
    for (int t = 0; t < 10; ++t) {
      size_t n = 1 + (size_t)(rng() % 16), m = 1 + (size_t)(rng() % 16), q = 1 + (size_t)(rng() % 16);
      auto a = random_mat(rng, n, m, p);
      auto b = random_mat(rng, m, q, p);
      auto cs = matmul_fp(a, n, m, b, q, p, Mode::serial);
      auto cp = matmul_fp(a, n, m, b, q, p, Mode::parallel);
      CHECK(cs == cp);
      // generic reference
      std::vector<uint32_t> cg(n * q, 0);
      for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < m; ++k)
          for (size_t j = 0; j < q; ++j) cg[i * q + j] = K.add(cg[i * q + j], K.mul(a[i * m + k], b[k * q + j]));
      CHECK(cs == cg);
    }
  }
}

TEST_CASE("kernel and solve postconditions in both modes") {
  std::mt19937 rng(2718);
  for (uint32_t p : {2u, 3u, 97u}) {
    FpField K(p);
    for (Mode mode : {Mode::serial, Mode::parallel}) {
      for (int t = 0; t < 15; ++t) {
        size_t r = 1 + (size_t)(rng() % 8), c = 1 + (size_t)(rng() % 8);
        auto a = random_mat(rng, r, c, p);
        size_t rk = rank_fp(a, r, c, p, mode);
        auto kb = kernel_fp(a, r, c, p, mode);
        CHECK(rk + kb.size() == c);
        for (auto& v : kb) {
          for (size_t i = 0; i < r; ++i) {
            uint64_t acc = 0;
            for (size_t j = 0; j < c; ++j) acc += (uint64_t)a[i * c + j] * v[j];
            CHECK(acc % p == 0);
          }
        }
        // b in the column space: solvable, and the solution checks out
        auto x0 = random_mat(rng, c, 1, p);
        std::vector<uint32_t> b(r, 0);
        for (size_t i = 0; i < r; ++i) {
          uint64_t acc = 0;
          for (size_t j = 0; j < c; ++j) acc += (uint64_t)a[i * c + j] * x0[j];
          b[i] = (uint32_t)(acc % p);
        }
        std::vector<uint32_t> x;
        REQUIRE(solve_fp(a, r, c, b, p, x, mode));
        for (size_t i = 0; i < r; ++i) {
          uint64_t acc = 0;
          for (size_t j = 0; j < c; ++j) acc += (uint64_t)a[i * c + j] * x[j];
          CHECK(acc % p == b[i]);
        }
      }
    }
  }
}

TEST_CASE("inconsistent systems are detected in both modes") {
  for (Mode mode : {Mode::serial, Mode::parallel}) {
    std::vector<uint32_t> a = {1, 1, 1, 1};  // rank 1
    std::vector<uint32_t> x;
    CHECK(!solve_fp(a, 2, 2, {1, 0}, 2, x, mode));
    CHECK(solve_fp(a, 2, 2, {1, 1}, 2, x, mode));
  }
}

TEST_CASE("global parallel toggle leaves matrix results unchanged") {
  std::mt19937 rng(14142);
  FpField K(5);
  Matrix<FpField> m = Matrix<FpField>::zero(K, 12, 15);
  std::uniform_int_distribution<uint32_t> d(0, 4);
  for (auto& e : m.a) e = d(rng);

  set_parallel(false);
  size_t rk_serial = rank(K, m);
  auto kb_serial = kernel_basis(K, m);
  set_parallel(true);
  size_t rk_parallel = rank(K, m);
  auto kb_parallel = kernel_basis(K, m);
  set_parallel(false);

  CHECK(rk_serial == rk_parallel);
  CHECK(kb_serial == kb_parallel);
}
