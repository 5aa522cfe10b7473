#include "frobloc/modarith.hpp"

#include <numeric>
#include <string>

namespace frobloc {

std::uint32_t powmod(std::uint32_t base, std::uint64_t exp, std::uint32_t m) {
  std::uint64_t b = base % m;
  std::uint64_t r = 1 % m;
  while (exp > 0) {
    if (exp & 1) r = (r * b) % m;
    b = (b * b) % m;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Egcd egcd(std::int64_t a, std::int64_t b) {
  if (b == 0) return {a, 1, 0};
  std::int64_t s0 = 1, t0 = 0, s1 = 0, t1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t tmp = a - q * b;
    a = b;
    b = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return {a, s0, t0};
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<std::uint32_t> try_invmod(std::uint32_t a, std::uint32_t m) {
  const Egcd e = egcd(std::int64_t(a % m), std::int64_t(m));
  if (e.g != 1) return std::nullopt;
  std::int64_t s = e.s % std::int64_t(m);
  if (s < 0) s += m;
  return static_cast<std::uint32_t>(s);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t m) {
  if (auto r = try_invmod(a, m)) return *r;
  throw NotInvertibleError("element " + std::to_string(a) +
                           " is not invertible modulo " + std::to_string(m));
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= static_cast<std::uint32_t>(d);
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t minimal_primitive_root(std::uint32_t l) {
  if (l == 2) return 1;
  const auto qs = prime_factors(l - 1);
  for (std::uint32_t g = 2; g < l; ++g) {
    bool ok = true;
    for (std::uint32_t q : qs) {
      if (powmod(g, (l - 1) / q, l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error("no primitive root modulo " + std::to_string(l));
}

std::uint32_t multiplicative_order(std::uint32_t a, std::uint32_t m) {
  a %= m;
  if (gcd_u64(a, m) != 1)
    throw NotInvertibleError("order of a non-unit modulo " + std::to_string(m));
  std::uint32_t k = 1;
  std::uint64_t x = a;
  while (x != 1 % m) {
    x = (x * a) % m;
    ++k;
  }
  return k;
}

CoefficientRing make_prime_field(std::uint32_t l) {
  if (!is_prime(l))
    throw Error("prime field modulus " + std::to_string(l) + " is not prime");
  CoefficientRing r;
  r.kind = CoefficientRing::Kind::kPrimeField;
  r.modulus = l;
  r.prime = l;
  r.exponent = 1;
  return r;
}

CoefficientRing make_prime_field_with_root(std::uint32_t l, std::uint32_t n) {
  CoefficientRing r = make_prime_field(l);
  if ((l - 1) % n != 0)
    throw NoRootOfUnityError("F_" + std::to_string(l) +
                             " has no element of multiplicative order " +
                             std::to_string(n));
  const std::uint32_t g = minimal_primitive_root(l);
  attach_root(r, powmod(g, (l - 1) / n, l), n);
  return r;
}

CoefficientRing make_cyclic_ring(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw Error("Z/p^e needs p prime");
  if (e == 0) throw Error("Z/p^e needs e >= 1");
  std::uint64_t m = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    m *= p;
    if (m > (1ull << 31)) throw Error("cyclic ring modulus exceeds 2^31");
  }
  CoefficientRing r;
  r.kind = CoefficientRing::Kind::kCyclic;
  r.modulus = static_cast<std::uint32_t>(m);
  r.prime = p;
  r.exponent = e;
  return r;
}

void attach_root(CoefficientRing& ring, std::uint32_t omega, std::uint32_t n) {
  omega %= ring.modulus;
  if (powmod(omega, n, ring.modulus) != 1)
    throw NoRootOfUnityError("omega^" + std::to_string(n) + " != 1");
  for (std::uint32_t k = 1; k < n; ++k)
    if (powmod(omega, k, ring.modulus) == 1)
      throw NoRootOfUnityError("omega has order " + std::to_string(k) +
                               " < " + std::to_string(n));
  if (!ring.is_unit(n))
    throw NoRootOfUnityError("root order " + std::to_string(n) +
                             " is not invertible modulo " +
                             std::to_string(ring.modulus));
  ring.omega = omega;
  ring.omega_order = n;
}

}  // namespace frobloc
