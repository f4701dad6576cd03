#pragma once
#include <string>

#include "modrep/poly.hpp"

namespace modrep {

// rational function field F_p(t1,...,tm), elements kept as unreduced
// numerator/denominator pairs; the denominator is normalized to leading
// coefficient 1 (constant scaling only — no gcd cancellation), equality is
// decided by cross-multiplication
struct FuncField {
  poly::Ring ring;

  struct Elem {
    poly::MultiPoly num, den;
  };

  explicit FuncField(poly::Ring r) : ring(std::move(r)) {
    if (!ring) throw InputError("function field needs a coefficient ring");
  }

  uint32_t characteristic() const { return ring->p; }

  Elem make(poly::MultiPoly n, poly::MultiPoly d) const {
    poly::check_same_ring(n.ring, ring);
    poly::check_same_ring(d.ring, ring);
    if (d.is_zero()) throw InputError("zero denominator");
    if (n.is_zero()) return {poly::MultiPoly::zero(ring), poly::MultiPoly::constant(ring, 1)};
    FpField K(ring->p);
    uint32_t lead = d.terms.front().c;  // lex-desc leading coefficient
    if (lead != 1) {
      uint32_t s = K.inv(lead);
      n = poly::poly_scale(n, s);
      d = poly::poly_scale(d, s);
    }
    return {std::move(n), std::move(d)};
  }

  Elem from_poly(poly::MultiPoly n) const { return make(std::move(n), poly::MultiPoly::constant(ring, 1)); }

  Elem zero() const { return from_poly(poly::MultiPoly::zero(ring)); }
  Elem one() const { return from_poly(poly::MultiPoly::constant(ring, 1)); }
  Elem from_int(long long v) const {
    FpField K(ring->p);
    return from_poly(poly::MultiPoly::constant(ring, K.from_int(v)));
  }

  bool is_zero(const Elem& a) const { return a.num.is_zero(); }

  bool eq(const Elem& a, const Elem& b) const {
    return poly::poly_eq(poly::poly_mul(a.num, b.den), poly::poly_mul(b.num, a.den));
  }

  Elem add(const Elem& a, const Elem& b) const {
    return make(poly::poly_add(poly::poly_mul(a.num, b.den), poly::poly_mul(b.num, a.den)),
                poly::poly_mul(a.den, b.den));
  }
  Elem neg(const Elem& a) const { return {poly::poly_neg(a.num), a.den}; }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem mul(const Elem& a, const Elem& b) const {
    return make(poly::poly_mul(a.num, b.num), poly::poly_mul(a.den, b.den));
  }
  Elem inv(const Elem& a) const {
    if (a.num.is_zero()) throw InputError("division by zero");
    return make(a.den, a.num);
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, uint64_t n) const {
    Elem r = one();
    while (n) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }

  std::string str(const Elem& a) const {
    if (a.den.is_constant() && !a.den.is_zero() && a.den.terms.size() == 1 && a.den.terms[0].c == 1)
      return poly::poly_str(a.num);
    return poly::poly_str(a.num) + "/" + poly::poly_str(a.den);
  }
};

}  // namespace modrep
