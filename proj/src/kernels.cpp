#include "frobloc/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace frobloc::kernels {

namespace scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t a,
              std::size_t n, std::uint32_t m) {
  const std::uint64_t aa = a % m;
  for (std::size_t i = 0; i < n; ++i) {
    // dst, src < m <= 2^31, so the accumulator stays below 2^63.
    dst[i] = static_cast<std::uint32_t>((dst[i] + aa * src[i]) % m);
  }
}

void scale_mod(std::uint32_t* dst, std::uint32_t a, std::size_t n,
               std::uint32_t m) {
  const std::uint64_t aa = a % m;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>((aa * dst[i]) % m);
  }
}

std::optional<AssocWitness> table_assoc_violation(const std::uint16_t* table,
                                                  std::uint32_t order) {
  const std::uint32_t n = order;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint16_t* lhs_row = table + std::size_t(table[x * n + y]) * n;
      const std::uint16_t* y_row = table + std::size_t(y) * n;
      const std::uint16_t* x_row = table + std::size_t(x) * n;
      for (std::uint32_t z = 0; z < n; ++z) {
        if (lhs_row[z] != x_row[y_row[z]]) return AssocWitness{x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define FROBLOC_HAVE_AVX2_BUILD 1
namespace avx2 {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t a,
              std::size_t n, std::uint32_t m);
void scale_mod(std::uint32_t* dst, std::uint32_t a, std::size_t n,
               std::uint32_t m);
std::optional<AssocWitness> table_assoc_violation(const std::uint16_t* table,
                                                  std::uint32_t order);
}  // namespace avx2
#else
#define FROBLOC_HAVE_AVX2_BUILD 0
#endif

namespace {

enum class Backend { kScalar, kAvx2 };

bool avx2_available() {
#if FROBLOC_HAVE_AVX2_BUILD
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect_backend() {
  if (std::getenv("FROBLOC_NO_SIMD") != nullptr) return Backend::kScalar;
  return avx2_available() ? Backend::kAvx2 : Backend::kScalar;
}

Backend& backend() {
  static Backend b = detect_backend();
  return b;
}

}  // namespace

// The AVX2 modular kernels round-trip through doubles; exactness of the
// floor-divide step needs a*x + y < 2^43, hence the modulus ceiling.
std::uint32_t max_simd_modulus() { return 1u << 21; }

std::string active_backend() {
  return backend() == Backend::kAvx2 ? "avx2" : "scalar";
}

void select_backend(const std::string& name) {
  if (name == "scalar") {
    backend() = Backend::kScalar;
  } else if (name == "avx2") {
    if (!avx2_available())
      throw std::invalid_argument("avx2 backend unavailable on this CPU");
    backend() = Backend::kAvx2;
  } else if (name == "auto") {
    backend() = detect_backend();
  } else {
    throw std::invalid_argument("unknown kernel backend: " + name);
  }
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t a,
              std::size_t n, std::uint32_t m) {
#if FROBLOC_HAVE_AVX2_BUILD
  if (backend() == Backend::kAvx2 && m <= max_simd_modulus()) {
    avx2::axpy_mod(dst, src, a, n, m);
    return;
  }
#endif
  scalar::axpy_mod(dst, src, a, n, m);
}

void scale_mod(std::uint32_t* dst, std::uint32_t a, std::size_t n,
               std::uint32_t m) {
#if FROBLOC_HAVE_AVX2_BUILD
  if (backend() == Backend::kAvx2 && m <= max_simd_modulus()) {
    avx2::scale_mod(dst, a, n, m);
    return;
  }
#endif
  scalar::scale_mod(dst, a, n, m);
}

std::optional<AssocWitness> table_assoc_violation(const std::uint16_t* table,
                                                  std::uint32_t order) {
#if FROBLOC_HAVE_AVX2_BUILD
  if (backend() == Backend::kAvx2) return avx2::table_assoc_violation(table, order);
#endif
  return scalar::table_assoc_violation(table, order);
}

}  // namespace frobloc::kernels
