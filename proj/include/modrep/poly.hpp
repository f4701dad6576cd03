#pragma once
#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "modrep/fp.hpp"

namespace modrep::poly {

// polynomial ring F_p[v1,...,vn]; rings compare by value (same p, same names)
struct PolyRing {
  uint32_t p;
  std::vector<std::string> vars;
  PolyRing(uint32_t prime, std::vector<std::string> names) : p(prime), vars(std::move(names)) {
    if (!is_prime_u32(p) || p > 97) throw InputError("ring characteristic must be a prime <= 97");
  }
  size_t nvars() const { return vars.size(); }
  bool operator==(const PolyRing& o) const { return p == o.p && vars == o.vars; }
};

using Ring = std::shared_ptr<const PolyRing>;

inline Ring make_ring(uint32_t p, std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(p, std::move(vars));
}

inline void check_same_ring(const Ring& a, const Ring& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !(*a == *b)) throw InputError("polynomial ring mismatch");
}

using Exp = std::vector<uint32_t>;

inline uint32_t total_deg(const Exp& e) {
  uint32_t d = 0;
  for (uint32_t x : e) d += x;
  return d;
}

// lex: first differing slot decides, larger exponent wins
inline int cmp_lex(const Exp& a, const Exp& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

// graded reverse lex: higher total degree wins; on ties the last differing
// slot decides, with the smaller exponent winning
inline int cmp_grevlex(const Exp& a, const Exp& b) {
  uint32_t da = total_deg(a), db = total_deg(b);
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

enum class Ord { grevlex, lex };

inline int cmp_mono(Ord o, const Exp& a, const Exp& b) {
  return o == Ord::lex ? cmp_lex(a, b) : cmp_grevlex(a, b);
}

inline bool mono_divides(const Exp& a, const Exp& b) {  // a | b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exp mono_mul(const Exp& a, const Exp& b) {
  Exp r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Exp mono_div(const Exp& a, const Exp& b) {  // a / b, assumes b | a
  Exp r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Exp mono_lcm(const Exp& a, const Exp& b) {
  Exp r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

struct Term {
  Exp e;
  uint32_t c;  // nonzero residue
};

// sparse multivariate polynomial; terms stored sorted lex-descending (the
// canonical order used for equality and printing)
struct MultiPoly {
  Ring ring;
  std::vector<Term> terms;

  MultiPoly() = default;
  explicit MultiPoly(Ring r) : ring(std::move(r)) {}

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const { return terms.empty() || (terms.size() == 1 && total_deg(terms[0].e) == 0); }
  uint32_t degree() const {  // total degree, 0 for the zero polynomial
    uint32_t d = 0;
    for (auto& t : terms) d = std::max(d, total_deg(t.e));
    return d;
  }

  static MultiPoly zero(Ring r) { return MultiPoly(std::move(r)); }
  static MultiPoly constant(Ring r, uint32_t c) {
    MultiPoly f(r);
    c %= r->p;
    if (c) f.terms.push_back({Exp(r->nvars(), 0), c});
    return f;
  }
  static MultiPoly monomial(Ring r, Exp e, uint32_t c) {
    MultiPoly f(r);
    c %= r->p;
    if (c) f.terms.push_back({std::move(e), c});
    return f;
  }
  static MultiPoly variable(Ring r, size_t i, uint32_t pow = 1) {
    Exp e(r->nvars(), 0);
    e[i] = pow;
    return monomial(std::move(r), std::move(e), 1);
  }
};

inline void canonicalize(MultiPoly& f) {
  std::sort(f.terms.begin(), f.terms.end(), [](const Term& a, const Term& b) { return cmp_lex(a.e, b.e) > 0; });
  std::vector<Term> out;
  FpField K(f.ring->p);
  for (auto& t : f.terms) {
    if (!out.empty() && out.back().e == t.e) {
      out.back().c = K.add(out.back().c, t.c);
      if (out.back().c == 0) out.pop_back();
    } else if (t.c % f.ring->p) {
      out.push_back({t.e, t.c % f.ring->p});
    }
  }
  f.terms = std::move(out);
}

inline MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) {
  check_same_ring(a.ring, b.ring);
  MultiPoly r = a;
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  canonicalize(r);
  return r;
}

inline MultiPoly poly_neg(const MultiPoly& a) {
  MultiPoly r = a;
  FpField K(a.ring->p);
  for (auto& t : r.terms) t.c = K.neg(t.c);
  return r;
}

inline MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b) { return poly_add(a, poly_neg(b)); }

inline MultiPoly poly_scale(const MultiPoly& a, uint32_t c) {
  FpField K(a.ring->p);
  c %= a.ring->p;
  MultiPoly r(a.ring);
  if (c == 0) return r;
  r.terms = a.terms;
  for (auto& t : r.terms) t.c = K.mul(t.c, c);
  return r;
}

inline MultiPoly poly_mul_mono(const MultiPoly& a, const Exp& e, uint32_t c) {
  FpField K(a.ring->p);
  c %= a.ring->p;
  MultiPoly r(a.ring);
  if (c == 0) return r;
  r.terms.reserve(a.terms.size());
  for (auto& t : a.terms) r.terms.push_back({mono_mul(t.e, e), K.mul(t.c, c)});
  return r;  // shifting by a monomial preserves the lex-desc sort
}

inline MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) {
  check_same_ring(a.ring, b.ring);
  MultiPoly r(a.ring);
  FpField K(a.ring->p);
  // accumulate in a map keyed by exponent (lex-desc)
  auto cmp = [](const Exp& x, const Exp& y) { return cmp_lex(x, y) > 0; };
  std::map<Exp, uint32_t, decltype(cmp)> m(cmp);
  for (auto& s : a.terms)
    for (auto& t : b.terms) {
      Exp e = mono_mul(s.e, t.e);
      uint32_t c = K.mul(s.c, t.c);
      auto it = m.find(e);
      if (it == m.end())
        m.emplace(std::move(e), c);
      else {
        it->second = K.add(it->second, c);
        if (it->second == 0) m.erase(it);
      }
    }
  for (auto& [e, c] : m) r.terms.push_back({e, c});
  return r;
}

inline bool poly_eq(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].c != b.terms[i].c || a.terms[i].e != b.terms[i].e) return false;
  return true;
}

inline uint32_t poly_eval(const MultiPoly& f, const std::vector<uint32_t>& point) {
  if (point.size() != f.ring->nvars()) throw InputError("evaluation point has wrong length");
  FpField K(f.ring->p);
  uint32_t acc = 0;
  for (auto& t : f.terms) {
    uint32_t v = t.c;
    for (size_t i = 0; i < point.size(); ++i)
      if (t.e[i]) v = K.mul(v, K.pow(point[i] % f.ring->p, t.e[i]));
    acc = K.add(acc, v);
  }
  return acc;
}

// move a polynomial into another ring: slot i of the old ring becomes slot
// var_map[i] of the new one (used for tag-variable permutations/extensions)
inline MultiPoly poly_map_vars(const MultiPoly& f, Ring newring, const std::vector<size_t>& var_map) {
  MultiPoly r(newring);
  for (auto& t : f.terms) {
    Exp e(newring->nvars(), 0);
    for (size_t i = 0; i < t.e.size(); ++i)
      if (t.e[i]) e[var_map[i]] += t.e[i];
    r.terms.push_back({std::move(e), t.c});
  }
  canonicalize(r);
  return r;
}

inline bool poly_homogeneous(const MultiPoly& f) {
  if (f.terms.empty()) return true;
  uint32_t d = total_deg(f.terms[0].e);
  for (auto& t : f.terms)
    if (total_deg(t.e) != d) return false;
  return true;
}

// ---- text form: terms joined by " + ", term = [coeff*]vars with ^ powers ----

inline std::string term_str(const PolyRing& ring, const Term& t) {
  std::string s;
  bool any_var = false;
  for (size_t i = 0; i < t.e.size(); ++i) {
    if (!t.e[i]) continue;
    if (any_var) s += "*";
    s += ring.vars[i];
    if (t.e[i] > 1) s += "^" + std::to_string(t.e[i]);
    any_var = true;
  }
  if (!any_var) return std::to_string(t.c);
  if (t.c != 1) return std::to_string(t.c) + "*" + s;
  return s;
}

inline std::string poly_str(const MultiPoly& f) {
  if (f.terms.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < f.terms.size(); ++i) {
    if (i) s += " + ";
    s += term_str(*f.ring, f.terms[i]);
  }
  return s;
}

// parse `a1^2*a2 + 3*a2^3`-style text; whitespace-insensitive; `-` accepted
// and folded into the coefficient
inline MultiPoly parse_poly(Ring ring, const std::string& text) {
  FpField K(ring->p);
  MultiPoly out(ring);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  auto parse_uint = [&]() -> uint64_t {
    size_t start = i;
    uint64_t v = 0;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) {
      v = v * 10 + (uint64_t)(text[i] - '0');
      ++i;
    }
    if (i == start) throw InputError("expected a number at position " + std::to_string(i) + " in '" + text + "'");
    return v;
  };
  auto parse_name = [&]() -> std::string {
    size_t start = i;
    while (i < text.size() && (std::isalnum((unsigned char)text[i]) || text[i] == '_')) ++i;
    return text.substr(start, i - start);
  };
  skip_ws();
  if (i == text.size()) throw InputError("empty polynomial");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    uint32_t sign = 1;
    if (!first || text[i] == '+' || text[i] == '-') {
      if (i == text.size() || (text[i] != '+' && text[i] != '-')) throw InputError("expected '+' between terms in '" + text + "'");
      if (text[i] == '-') sign = K.neg(1);
      ++i;
      skip_ws();
    }
    first = false;
    // one term: factors joined by '*'
    uint32_t coeff = sign;
    Exp e(ring->nvars(), 0);
    bool any_factor = false;
    while (true) {
      skip_ws();
      if (i < text.size() && std::isdigit((unsigned char)text[i])) {
        coeff = K.mul(coeff, K.from_int((long long)(parse_uint() % ring->p)));
        any_factor = true;
      } else if (i < text.size() && (std::isalpha((unsigned char)text[i]) || text[i] == '_')) {
        std::string name = parse_name();
        size_t vi = 0;
        for (; vi < ring->nvars(); ++vi)
          if (ring->vars[vi] == name) break;
        if (vi == ring->nvars()) throw InputError("unknown variable '" + name + "'");
        uint64_t pw = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip_ws();
          pw = parse_uint();
        }
        e[vi] += (uint32_t)pw;
        any_factor = true;
      } else {
        throw InputError("expected a coefficient or variable at position " + std::to_string(i) + " in '" + text + "'");
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any_factor) throw InputError("empty term in '" + text + "'");
    if (coeff) out.terms.push_back({std::move(e), coeff});
  }
  canonicalize(out);
  return out;
}

// ring descriptor `GF(p)[v1,...,vn]`; `GF(p)` alone gives a 0-variable ring
inline Ring parse_ring(const std::string& text) {
  size_t i = 0;
  auto expect = [&](const std::string& tok) {
    if (text.compare(i, tok.size(), tok) != 0) throw InputError("bad ring descriptor '" + text + "'");
    i += tok.size();
  };
  expect("GF(");
  size_t close = text.find(')', i);
  if (close == std::string::npos) throw InputError("bad ring descriptor '" + text + "'");
  uint32_t p = 0;
  for (; i < close; ++i) {
    if (!std::isdigit((unsigned char)text[i])) throw InputError("bad ring descriptor '" + text + "'");
    p = p * 10 + (uint32_t)(text[i] - '0');
  }
  i = close + 1;
  std::vector<std::string> vars;
  if (i < text.size()) {
    expect("[");
    if (text.back() != ']') throw InputError("bad ring descriptor '" + text + "'");
    std::string body = text.substr(i, text.size() - 1 - i);
    size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
      size_t comma = body.find(',', pos);
      std::string name = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (name.empty()) throw InputError("bad ring descriptor '" + text + "'");
      vars.push_back(name);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return make_ring(p, std::move(vars));
}

inline std::string ring_str(const PolyRing& r) {
  std::string s = "GF(" + std::to_string(r.p) + ")";
  if (!r.vars.empty()) {
    s += "[";
    for (size_t i = 0; i < r.vars.size(); ++i) {
      if (i) s += ",";
      s += r.vars[i];
    }
    s += "]";
  }
  return s;
}

}  // namespace modrep::poly
