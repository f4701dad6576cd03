#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

namespace modrep {

// library-level error kinds: InputError -> bad user data, SizeError -> documented
// size caps, InternalError -> broken postcondition (a bug)
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// prime field F_p, elements stored as canonical residues 0..p-1
struct FpField {
  uint32_t p = 2;
  using Elem = uint32_t;

  explicit FpField(uint32_t prime = 2) : p(prime) {
    if (!is_prime_u32(p) || p > 97) throw InputError("field characteristic must be a prime <= 97, got " + std::to_string(p));
  }

  uint32_t characteristic() const { return p; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long long v) const {
    long long m = v % (long long)p;
    if (m < 0) m += p;
    return (Elem)m;
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return (uint32_t)(((uint64_t)a * b) % p); }
  Elem pow(Elem a, uint64_t e) const {
    Elem r = one(), base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw InputError("division by zero in F_" + std::to_string(p));
    return pow(a, p - 2);  // Fermat
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  std::string str(Elem a) const { return std::to_string(a); }
};

}  // namespace modrep
