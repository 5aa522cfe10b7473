#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobloc/error.hpp"

namespace frobloc {

/// (a * b) mod m for m <= 2^31.
inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
  return static_cast<std::uint32_t>((std::uint64_t(a) * b) % m);
}

inline std::uint32_t addmod(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
  std::uint64_t s = std::uint64_t(a) + b;
  if (s >= m) s -= m;
  return static_cast<std::uint32_t>(s);
}

inline std::uint32_t submod(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
  return a >= b ? a - b : static_cast<std::uint32_t>(a + std::uint64_t(m) - b);
}

inline std::uint32_t negmod(std::uint32_t a, std::uint32_t m) {
  return a == 0 ? 0 : m - a;
}

std::uint32_t powmod(std::uint32_t base, std::uint64_t exp, std::uint32_t m);

/// gcd(a, b) together with Bezout coefficients: g = s*a + t*b.
struct Egcd {
  std::int64_t g, s, t;
};
Egcd egcd(std::int64_t a, std::int64_t b);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Inverse of a mod m, or nullopt when gcd(a, m) != 1.
std::optional<std::uint32_t> try_invmod(std::uint32_t a, std::uint32_t m);

/// Inverse of a mod m; throws NotInvertibleError otherwise.
std::uint32_t invmod(std::uint32_t a, std::uint32_t m);

bool is_prime(std::uint32_t n);

/// Prime factors of n (without multiplicity), ascending.
std::vector<std::uint32_t> prime_factors(std::uint32_t n);

/// Smallest primitive root modulo an odd prime l.
std::uint32_t minimal_primitive_root(std::uint32_t l);

/// Multiplicative order of a modulo m (a must be a unit).
std::uint32_t multiplicative_order(std::uint32_t a, std::uint32_t m);

/// Coefficient ring for Lie rings: a prime field F_l or a cyclic ring
/// Z/p^e, optionally carrying a distinguished root of unity omega.
struct CoefficientRing {
  enum class Kind { kPrimeField, kCyclic };

  Kind kind = Kind::kPrimeField;
  std::uint32_t modulus = 2;
  /// For kCyclic: the prime p and exponent e with modulus = p^e.
  std::uint32_t prime = 2;
  std::uint32_t exponent = 1;

  std::optional<std::uint32_t> omega;
  std::uint32_t omega_order = 0;

  bool is_field() const { return kind == Kind::kPrimeField; }
  bool is_unit(std::uint32_t a) const {
    return gcd_u64(a % modulus, modulus) == 1;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return addmod(a, b, modulus);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return submod(a, b, modulus);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mulmod(a, b, modulus);
  }
  std::uint32_t neg(std::uint32_t a) const { return negmod(a, modulus); }
  std::uint32_t inv(std::uint32_t a) const { return invmod(a, modulus); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    return powmod(a, e, modulus);
  }
};

/// F_l without a distinguished root.
CoefficientRing make_prime_field(std::uint32_t l);

/// F_l with omega of multiplicative order n; requires l prime, l = 1 (mod n)
/// and n invertible (automatic for n < l). Omega is g^((l-1)/n) for the
/// minimal primitive root g, so the choice is deterministic.
CoefficientRing make_prime_field_with_root(std::uint32_t l, std::uint32_t n);

/// Z/p^e. An omega of order n may be attached afterwards via attach_root.
CoefficientRing make_cyclic_ring(std::uint32_t p, std::uint32_t e);

/// Attach a verified root of unity: checks omega^n = 1, omega^k != 1 for
/// 0 < k < n, and that n is a unit in the ring.
void attach_root(CoefficientRing& ring, std::uint32_t omega, std::uint32_t n);

}  // namespace frobloc
