#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include <modrep/bgg.hpp>

using namespace modrep;

TEST_CASE("the truncated tower has the expected shape") {
  FpField K(2);

  bg::TruncatedJ t1 = bg::build_J(1, 4);
  REQUIRE(t1.J.size() == 5);
  for (auto& J : t1.J) CHECK(J.dim == 2);
  km::KModule<FpField> kE1 = km::regular(K, 1);
  for (auto& d : t1.d) CHECK(la::mat_eq(K, d, kE1.Z[0]));

  bg::TruncatedJ t2 = bg::build_J(2, 3);
  REQUIRE(t2.J.size() == 4);
  CHECK(t2.J[0].dim == 4);
  CHECK(t2.J[1].dim == 8);
  CHECK(t2.J[2].dim == 12);
  CHECK(t2.J[3].dim == 16);
  for (size_t i = 0; i + 1 < t2.d.size(); ++i)
    CHECK(la::is_zero_mat(K, la::mat_mul(K, t2.d[i + 1], t2.d[i])));

  CHECK_THROWS_AS(bg::build_J(2, 0), InputError);
}

TEST_CASE("the tower resolves the trivial module in the window") {
  CHECK(bg::eta_check(1, 4));
  CHECK(bg::eta_check(2, 4));
  CHECK(bg::eta_check(3, 3));
  CHECK_THROWS_AS(bg::eta_check(2, 1), InputError);

  // the bottom cohomology is spanned by the product of all the generators
  FpField K(2);
  bg::TruncatedJ t = bg::build_J(2, 2);
  auto ker = la::kernel_basis(K, t.d[0]);
  REQUIRE(ker.size() == 1);
  for (size_t j = 0; j < ker[0].size(); ++j) CHECK(ker[0][j] == (j == 3 ? 1u : 0u));
}

TEST_CASE("the endomorphism cohomology is a polynomial window") {
  CHECK(bg::zeta_check(1, 5));
  CHECK(bg::zeta_check(2, 5));
  CHECK(bg::zeta_check(2, 3));
  CHECK_THROWS_AS(bg::zeta_check(1, 1), InputError);
}

TEST_CASE("transform of the trivial module counts the graded pieces") {
  FpField K(2);

  bg::DGSWindow w = bg::bgg_transform(km::trivial(K, 2), 5);
  CHECK(w.window == 5);
  CHECK(w.certified == 4);
  REQUIRE(w.dims.size() == 6);
  for (size_t n = 0; n <= 4; ++n) CHECK(w.dims[n] == n + 1);

  bg::DGSWindow w1 = bg::bgg_transform(km::trivial(K, 1), 4);
  REQUIRE(w1.dims.size() == 5);
  for (size_t n = 0; n <= 3; ++n) CHECK(w1.dims[n] == 1);

  FpField K3(3);
  CHECK_THROWS_AS(bg::bgg_transform(km::trivial(K3, 2), 3), InputError);
}

TEST_CASE("transform of the regular module is concentrated in degree zero") {
  FpField K(2);
  bg::DGSWindow w = bg::bgg_transform(km::regular(K, 2), 4);
  CHECK(w.dims[0] == 1);
  for (size_t n = 1; n <= 3; ++n) CHECK(w.dims[n] == 0);
}

TEST_CASE("transform matches stable cohomology") {
  FpField K(2);
  km::KModule<FpField> k2 = km::trivial(K, 2);
  CHECK(bg::compare_with_ext(k2, 4));
  CHECK(bg::compare_with_ext(ha::omega(k2), 4));
  CHECK(bg::compare_with_ext(km::regular(K, 2), 4));
  CHECK(bg::compare_with_ext(km::trivial(K, 1), 4));
}

TEST_CASE("variable actions build an injective commuting ladder") {
  FpField K(2);
  bg::DGSWindow w = bg::bgg_transform(km::trivial(K, 2), 5);
  REQUIRE(w.actions.size() == 2);
  for (uint32_t v = 0; v < 2; ++v) {
    REQUIRE(w.actions[v].size() == 4);  // degrees 0..N-2
    for (size_t n = 0; n + 2 <= 5; ++n) {
      CHECK(w.actions[v][n].rows == w.dims[n + 1]);
      CHECK(w.actions[v][n].cols == w.dims[n]);
      CHECK(la::rank(K, w.actions[v][n]) == w.dims[n]);  // injective on certified degrees
    }
  }
  for (size_t n = 0; n + 3 <= 5; ++n) {
    la::Matrix<FpField> ab = la::mat_mul(K, w.actions[0][n + 1], w.actions[1][n]);
    la::Matrix<FpField> ba = la::mat_mul(K, w.actions[1][n + 1], w.actions[0][n]);
    CHECK(la::mat_eq(K, ab, ba));
  }
}

TEST_CASE("enlarging the window keeps certified dimensions") {
  FpField K(2);
  bg::DGSWindow small = bg::bgg_transform(km::trivial(K, 2), 3);
  bg::DGSWindow big = bg::bgg_transform(km::trivial(K, 2), 5);
  for (size_t n = 0; n + 1 <= 3; ++n) CHECK(small.dims[n] == big.dims[n]);

  bg::DGSWindow om_small = bg::bgg_transform(ha::omega(km::trivial(K, 2)), 3);
  bg::DGSWindow om_big = bg::bgg_transform(ha::omega(km::trivial(K, 2)), 4);
  for (size_t n = 0; n + 1 <= 3; ++n) CHECK(om_small.dims[n] == om_big.dims[n]);
}

TEST_CASE("hom-complex differentials square to zero") {
  FpField K(2);
  bg::TruncatedJ t = bg::build_J(2, 4);
  bg::HomTotal h = bg::hom_total(t, t.J, t.d, -1, 3);
  for (size_t k = 0; k + 1 < h.D.size(); ++k)
    CHECK(la::is_zero_mat(K, la::mat_mul(K, h.D[k + 1], h.D[k])));
}
