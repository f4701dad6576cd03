#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modrep/groebner.hpp"
#include "oracle_membership.hpp"

using namespace modrep;
using namespace modrep::poly;
using namespace modrep::gb;

namespace {

MultiPoly P(const Ring& R, const std::string& s) { return parse_poly(R, s); }

bool same_poly_set(std::vector<MultiPoly> a, std::vector<MultiPoly> b) {
  if (a.size() != b.size()) return false;
  for (auto& f : a) {
    bool found = false;
    for (size_t i = 0; i < b.size(); ++i)
      if (poly_eq(f, b[i])) {
        b.erase(b.begin() + (long)i);
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// engine-independent Gröbner check: every S-vector of the basis reduces to 0
// by plain division, with no pair criteria involved
bool all_spolys_reduce(const std::vector<MultiPoly>& basis, const Ring& R, Ord ord) {
  FpField K(R->p);
  TermOrder o{ord, UINT32_MAX};
  std::vector<MVec> bs;
  for (auto& f : basis) bs.push_back(to_mvec({f}, o, K));
  for (size_t i = 0; i < bs.size(); ++i)
    for (size_t j = i + 1; j < bs.size(); ++j) {
      Exp l = mono_lcm(bs[i].front().e, bs[j].front().e);
      MVec s = mv_scale_mono(bs[i], K.inv(bs[i].front().c), mono_div(l, bs[i].front().e), o, K);
      s = mv_axpy(s, K.neg(K.inv(bs[j].front().c)), mono_div(l, bs[j].front().e), bs[j], o, K);
      if (!mv_reduce(std::move(s), bs, o, K).empty()) return false;
    }
  return true;
}

bool is_reduced_basis(const std::vector<MultiPoly>& basis, const Ring& R, Ord ord) {
  FpField K(R->p);
  TermOrder o{ord, UINT32_MAX};
  std::vector<MVec> bs;
  for (auto& f : basis) {
    if (f.is_zero()) return false;
    bs.push_back(to_mvec({f}, o, K));
  }
  for (size_t i = 0; i < bs.size(); ++i) {
    if (bs[i].front().c != 1) return false;  // monic under the active order
    for (size_t j = 0; j < bs.size(); ++j) {
      if (i == j) continue;
      for (auto& t : bs[i])
        if (mono_divides(bs[j].front().e, t.e)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("polynomial text grammar round trip") {
  auto R = parse_ring("GF(5)[a1,a2]");
  CHECK(R->p == 5);
  CHECK(R->vars == std::vector<std::string>{"a1", "a2"});
  CHECK(ring_str(*R) == "GF(5)[a1,a2]");

  auto f = P(R, "a1^2*a2 + 3*a2^3");
  CHECK(poly_str(f) == "a1^2*a2 + 3*a2^3");
  CHECK(poly_eq(parse_poly(R, poly_str(f)), f));

  CHECK(poly_str(P(R, "  a2^3 * 3+ a1 ^2 * a2 ")) == "a1^2*a2 + 3*a2^3");
  CHECK(poly_str(P(R, "2 + 3")) == "0");
  CHECK(poly_str(P(R, "a1 + 4*a1")) == "0");
  CHECK(poly_str(P(R, "a1 - a2")) == "a1 + 4*a2");
  CHECK(poly_str(MultiPoly::zero(R)) == "0");
  CHECK(poly_str(MultiPoly::constant(R, 3)) == "3");
  CHECK_THROWS_AS(P(R, "a3 + 1"), InputError);
  CHECK_THROWS_AS(P(R, ""), InputError);
  CHECK_THROWS_AS(P(R, "a1 + + a2"), InputError);
  CHECK_THROWS_AS(parse_ring("GF(6)[x]"), InputError);
}

TEST_CASE("polynomial arithmetic and evaluation") {
  auto R = parse_ring("GF(2)[a,b]");
  auto a = P(R, "a"), b = P(R, "b");
  auto s = poly_add(a, b);
  CHECK(poly_eq(poly_mul(s, s), P(R, "a^2 + b^2")));  // freshman's dream
  CHECK(poly_eval(P(R, "a^2 + a*b + 1"), {1, 1}) == 1);
  CHECK(poly_eval(P(R, "a^2 + a*b + 1"), {1, 0}) == 0);
  CHECK(poly_homogeneous(P(R, "a^2 + a*b")));
  CHECK(!poly_homogeneous(P(R, "a^2 + b")));

  auto R3 = parse_ring("GF(3)[x]");
  auto x = P(R3, "x");
  CHECK(poly_eq(poly_sub(x, poly_scale(x, 4)), MultiPoly::zero(R3)));
  CHECK(P(R3, "x^3").degree() == 3);
}

TEST_CASE("groebner basis golden cases") {
  auto R = parse_ring("GF(2)[y1,y2]");

  auto I1 = make_ideal(R, {P(R, "y1"), P(R, "y2")});
  CHECK(same_poly_set(groebner(I1), {P(R, "y1"), P(R, "y2")}));

  auto I0 = make_ideal(R, {});
  CHECK(groebner(I0).empty());

  auto I2 = make_ideal(R, {P(R, "y1^2"), P(R, "y1*y2 + y2^2")});
  auto B2 = groebner(I2);
  CHECK(same_poly_set(B2, {P(R, "y1^2"), P(R, "y1*y2 + y2^2"), P(R, "y2^3")}));
  CHECK(is_reduced_basis(B2, R, Ord::grevlex));
  CHECK(all_spolys_reduce(B2, R, Ord::grevlex));

  // reduced basis is unique: generator order must not matter
  auto I2r = make_ideal(R, {P(R, "y1*y2 + y2^2"), P(R, "y1^2")});
  auto B2r = groebner(I2r);
  REQUIRE(B2.size() == B2r.size());
  for (size_t i = 0; i < B2.size(); ++i) CHECK(poly_eq(B2[i], B2r[i]));
}

TEST_CASE("groebner postconditions on random ideals") {
  std::mt19937 rng(90210);
  for (uint32_t p : {2u, 3u, 5u}) {
    auto R = make_ring(p, {"x", "y", "z"});
    for (int t = 0; t < 8; ++t) {
      std::vector<MultiPoly> gens;
      size_t k = 1 + rng() % 3;
      for (size_t i = 0; i < k; ++i) gens.push_back(testsupport::random_poly(rng, R, 3, 3));
      auto I = make_ideal(R, gens);
      for (Ord ord : {Ord::grevlex, Ord::lex}) {
        auto B = groebner(I, ord);
        if (!B.empty()) {
          CHECK(is_reduced_basis(B, R, ord));
          CHECK(all_spolys_reduce(B, R, ord));
        }
        // generators reduce to zero against their own basis
        for (auto& g : gens) CHECK(normal_form(g, I, ord).is_zero());
      }
    }
  }
}

TEST_CASE("ideal membership golden cases") {
  auto R = parse_ring("GF(2)[y1,y2]");
  CHECK(ideal_member(P(R, "y1*y2"), make_ideal(R, {P(R, "y1"), P(R, "y2")})));
  CHECK(!ideal_member(MultiPoly::constant(R, 1), make_ideal(R, {P(R, "y1")})));
  CHECK(ideal_member(P(R, "y2^3"), make_ideal(R, {P(R, "y1^2"), P(R, "y1*y2 + y2^2")})));
}

TEST_CASE("normal form is idempotent and the defect is a member") {
  std::mt19937 rng(5150);
  auto R = make_ring(3, {"x", "y"});
  for (int t = 0; t < 10; ++t) {
    std::vector<MultiPoly> gens = {testsupport::random_poly(rng, R, 2, 2), testsupport::random_poly(rng, R, 2, 2)};
    auto I = make_ideal(R, gens);
    auto f = testsupport::random_poly(rng, R, 3, 4);
    auto nf = normal_form(f, I);
    CHECK(poly_eq(normal_form(nf, I), nf));
    testsupport::SpanOracle oracle(R, gens);
    CHECK(oracle.member(poly_sub(f, nf)));
  }
}

TEST_CASE("membership agrees with the span oracle on random ideals") {
  std::mt19937 rng(62831);
  for (uint32_t p : {2u, 3u}) {
    auto R = make_ring(p, {"x", "y", "z"});
    for (int t = 0; t < 12; ++t) {
      std::vector<MultiPoly> gens;
      size_t k = 1 + rng() % 3;
      for (size_t i = 0; i < k; ++i) gens.push_back(testsupport::random_poly(rng, R, 3, 3));
      auto I = make_ideal(R, gens);
      testsupport::SpanOracle oracle(R, gens);
      for (int q = 0; q < 4; ++q) {
        auto f = testsupport::random_poly(rng, R, 4, 4);
        CHECK(ideal_member(f, I) == oracle.member(f));
      }
      // constructed members: random monomial combinations of the generators
      for (int q = 0; q < 2; ++q) {
        MultiPoly comb = MultiPoly::zero(R);
        for (auto& g : gens) comb = poly_add(comb, poly_mul(testsupport::random_poly(rng, R, 2, 2), g));
        CHECK(ideal_member(comb, I));
        CHECK(oracle.member(comb));
      }
    }
  }
}

TEST_CASE("radical membership golden cases") {
  auto R = parse_ring("GF(2)[y1,y2]");
  CHECK(radical_member(P(R, "y1"), make_ideal(R, {P(R, "y1^2")})));
  CHECK(!radical_member(P(R, "y2"), make_ideal(R, {P(R, "y1^2")})));
  auto Ra = parse_ring("GF(2)[a1,a2]");
  CHECK(radical_member(P(Ra, "a1 + a2"), make_ideal(Ra, {P(Ra, "a1^2 + a2^2")})));

  // and in odd characteristic, where squaring is not additive
  auto R3 = parse_ring("GF(3)[x,y]");
  CHECK(radical_member(P(R3, "x + y"), make_ideal(R3, {P(R3, "x^3 + y^3")})));  // (x+y)^3 = x^3+y^3 mod 3
  CHECK(!radical_member(P(R3, "x"), make_ideal(R3, {P(R3, "x*y")})));
}

TEST_CASE("radical equality of vanishing sets") {
  auto R = parse_ring("GF(2)[y1,y2]");
  auto sq = make_ideal(R, {P(R, "y1^2")});
  auto lin = make_ideal(R, {P(R, "y1")});
  auto other = make_ideal(R, {P(R, "y2")});
  CHECK(ideal_eq_radical(sq, lin));
  CHECK(ideal_eq_radical(lin, sq));  // symmetric
  CHECK(!ideal_eq_radical(lin, other));
  CHECK(ideal_eq_radical(lin, lin));  // reflexive

  auto Ra = parse_ring("GF(2)[a1,a2]");
  CHECK(ideal_eq_radical(make_ideal(Ra, {P(Ra, "a1 + a2")}), make_ideal(Ra, {P(Ra, "a1^2 + a2^2")})));

  // invariant under redundant generators
  auto redundant = make_ideal(R, {P(R, "y1"), P(R, "y1^2"), P(R, "y1*y2")});
  CHECK(ideal_eq_radical(lin, redundant));
}

TEST_CASE("ideal intersection and product") {
  auto R = parse_ring("GF(2)[y1,y2]");
  auto I = make_ideal(R, {P(R, "y1")});
  auto J = make_ideal(R, {P(R, "y2")});
  auto IJ = ideal_intersect(I, J);
  CHECK(same_poly_set(groebner(IJ), {P(R, "y1*y2")}));

  auto K2 = ideal_intersect(make_ideal(R, {P(R, "y1"), P(R, "y2")}), I);
  CHECK(same_poly_set(groebner(K2), {P(R, "y1")}));

  CHECK(groebner(ideal_intersect(make_ideal(R, {}), I)).empty());

  auto prod = ideal_product(I, J);
  CHECK(same_poly_set(groebner(prod), {P(R, "y1*y2")}));

  // intersection in odd characteristic with a shared factor
  auto R3 = parse_ring("GF(3)[x,y]");
  auto A = make_ideal(R3, {P(R3, "x*y")});
  auto B = make_ideal(R3, {P(R3, "x")});
  CHECK(same_poly_set(groebner(ideal_intersect(A, B)), {P(R3, "x*y")}));
}

TEST_CASE("module kernel golden cases") {
  auto R = parse_ring("GF(2)[y1,y2]");

  auto k1 = module_kernel({{P(R, "y1")}}, 1, R);
  CHECK(k1.gens.empty());

  auto k2 = module_kernel({{P(R, "y1")}, {P(R, "y2")}}, 1, R);
  REQUIRE(k2.gens.size() == 1);
  CHECK(poly_eq(k2.gens[0][0], P(R, "y2")));
  CHECK(poly_eq(k2.gens[0][1], P(R, "y1")));

  auto k3 = module_kernel({{MultiPoly::zero(R)}}, 1, R);
  REQUIRE(k3.gens.size() == 1);
  CHECK(poly_eq(k3.gens[0][0], MultiPoly::constant(R, 1)));
}

TEST_CASE("module kernel postcondition phi*g = 0 on random maps") {
  std::mt19937 rng(161803);
  for (uint32_t p : {2u, 3u}) {
    auto R = make_ring(p, {"x", "y"});
    for (int t = 0; t < 6; ++t) {
      size_t tgt = 1 + rng() % 2, src = 1 + rng() % 3;
      std::vector<std::vector<MultiPoly>> cols(src);
      for (auto& c : cols)
        for (size_t i = 0; i < tgt; ++i)
          c.push_back(rng() % 3 ? testsupport::random_poly(rng, R, 2, 2) : MultiPoly::zero(R));
      auto ker = module_kernel(cols, tgt, R);
      for (auto& g : ker.gens) {
        REQUIRE(g.size() == src);
        for (size_t i = 0; i < tgt; ++i) {
          MultiPoly acc = MultiPoly::zero(R);
          for (size_t j = 0; j < src; ++j) acc = poly_add(acc, poly_mul(g[j], cols[j][i]));
          CHECK(acc.is_zero());
        }
      }
    }
  }
}

TEST_CASE("membership with cofactors reconstructs the input") {
  std::mt19937 rng(2020);
  auto R = make_ring(3, {"x", "y"});
  std::vector<std::vector<MultiPoly>> gens = {{P(R, "x"), P(R, "y")}, {P(R, "y^2"), MultiPoly::zero(R)}};
  // random combinations are members and get verified cofactors
  for (int t = 0; t < 5; ++t) {
    std::vector<MultiPoly> b(2, MultiPoly::zero(R));
    for (auto& g : gens) {
      auto c = testsupport::random_poly(rng, R, 2, 2);
      for (size_t i = 0; i < 2; ++i) b[i] = poly_add(b[i], poly_mul(c, g[i]));
    }
    CHECK(member_with_cofactors(b, gens, 2, R).has_value());
  }
  // a non-member
  std::vector<MultiPoly> nm = {MultiPoly::constant(R, 1), MultiPoly::zero(R)};
  CHECK(!member_with_cofactors(nm, gens, 2, R).has_value());
  // zero is always a member with zero cofactors
  auto z = member_with_cofactors({MultiPoly::zero(R), MultiPoly::zero(R)}, gens, 2, R);
  REQUIRE(z.has_value());
  for (auto& c : *z) CHECK(c.is_zero());
}

TEST_CASE("annihilator golden cases") {
  auto R = parse_ring("GF(2)[y1,y2]");

  PresentedModule cyc{R, 1, {{P(R, "y1")}}};
  CHECK(same_poly_set(groebner(annihilator(cyc)), {P(R, "y1")}));

  PresentedModule fr{R, 1, {}};
  CHECK(annihilator(fr).gens.empty());

  PresentedModule zero{R, 0, {}};
  CHECK(ideal_is_trivial(annihilator(zero)));

  PresentedModule twodim{R, 2, {{P(R, "y1"), MultiPoly::zero(R)},
                                {MultiPoly::zero(R), P(R, "y2")},
                                {P(R, "y2"), MultiPoly::zero(R)},
                                {MultiPoly::zero(R), P(R, "y1")}}};
  CHECK(same_poly_set(groebner(annihilator(twodim)), {P(R, "y1"), P(R, "y2")}));

  // annihilator of A/(y1) ⊕ A/(y2) is the intersection (y1y2)
  PresentedModule mixed{R, 2, {{P(R, "y1"), MultiPoly::zero(R)}, {MultiPoly::zero(R), P(R, "y2")}}};
  CHECK(same_poly_set(groebner(annihilator(mixed)), {P(R, "y1*y2")}));
}

TEST_CASE("free resolution golden cases") {
  auto R = parse_ring("GF(2)[y1,y2]");

  auto r1 = free_resolution(PresentedModule{R, 1, {{P(R, "y1")}}}, 10);
  CHECK(r1.complete);
  REQUIRE(r1.diffs.size() == 1);
  CHECK(r1.diffs[0].rows == 1);
  CHECK(r1.diffs[0].cols == 1);
  CHECK(poly_eq(r1.diffs[0].at(0, 0), P(R, "y1")));

  auto r0 = free_resolution(PresentedModule{R, 2, {}}, 10);
  CHECK(r0.complete);
  CHECK(r0.diffs.empty());

  auto rk = free_resolution(PresentedModule{R, 1, {{P(R, "y1")}, {P(R, "y2")}}}, 10);
  CHECK(rk.complete);
  REQUIRE(rk.diffs.size() == 2);
  CHECK(rk.diffs[0].rows == 1);
  CHECK(rk.diffs[0].cols == 2);
  CHECK(rk.diffs[1].rows == 2);
  CHECK(rk.diffs[1].cols == 1);
  CHECK(pm_is_zero(pm_mul(rk.diffs[0], rk.diffs[1])));
}

TEST_CASE("free resolution adjacent composition vanishes on random modules") {
  std::mt19937 rng(7070);
  for (uint32_t p : {2u, 3u}) {
    auto R = make_ring(p, {"x", "y"});
    for (int t = 0; t < 5; ++t) {
      size_t rank = 1 + rng() % 2;
      std::vector<std::vector<MultiPoly>> rel;
      size_t k = 1 + rng() % 2;
      for (size_t i = 0; i < k; ++i) {
        std::vector<MultiPoly> v;
        for (size_t j = 0; j < rank; ++j)
          v.push_back(rng() % 2 ? testsupport::random_poly(rng, R, 2, 2) : MultiPoly::zero(R));
        rel.push_back(v);
      }
      auto res = free_resolution(PresentedModule{R, rank, rel}, 10);
      CHECK(res.complete);
      for (size_t i = 0; i + 1 < res.diffs.size(); ++i)
        CHECK(pm_is_zero(pm_mul(res.diffs[i], res.diffs[i + 1])));
    }
  }
}
