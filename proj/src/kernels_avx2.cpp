// AVX2 variants of the modular vector kernels and the table associativity
// scan. Compiled with -mavx2 and selected at runtime; kernels.cpp routes
// here only on CPUs reporting AVX2 and, for the modular kernels, only for
// m <= max_simd_modulus().
//
// The modular kernels compute (a*x + y) mod m in double precision:
// with a, x, y < m <= 2^21 every intermediate (product < 2^42, sum < 2^43,
// q*m < 2^43) is exactly representable, and the floor-multiply quotient
// q = floor((a*x+y) * (1/m)) is off by at most one, fixed by two
// conditional corrections.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <vector>

namespace frobloc::kernels::avx2 {

using AssocWitness = std::array<std::uint32_t, 3>;

namespace {

inline __m256d load4_as_pd(const std::uint32_t* p) {
  const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
  return _mm256_cvtepi32_pd(v);  // entries < 2^21, sign bit never set
}

inline void store4_from_pd(std::uint32_t* p, __m256d v) {
  const __m128i r = _mm256_cvttpd_epi32(v);
  _mm_storeu_si128(reinterpret_cast<__m128i*>(p), r);
}

inline __m256d reduce_once(__m256d t, __m256d vm, __m256d vinvm) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinvm));
  __m256d r = _mm256_sub_pd(t, _mm256_mul_pd(q, vm));
  const __m256d zero = _mm256_setzero_pd();
  __m256d mask = _mm256_cmp_pd(r, zero, _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(mask, vm));
  mask = _mm256_cmp_pd(r, vm, _CMP_GE_OQ);
  r = _mm256_sub_pd(r, _mm256_and_pd(mask, vm));
  return r;
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t a,
              std::size_t n, std::uint32_t m) {
  const std::uint64_t aa = a % m;
  const __m256d va = _mm256_set1_pd(static_cast<double>(aa));
  const __m256d vm = _mm256_set1_pd(static_cast<double>(m));
  const __m256d vinvm = _mm256_set1_pd(1.0 / static_cast<double>(m));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = load4_as_pd(src + i);
    const __m256d y = load4_as_pd(dst + i);
    const __m256d t = _mm256_add_pd(_mm256_mul_pd(va, x), y);
    store4_from_pd(dst + i, reduce_once(t, vm, vinvm));
  }
  for (; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + aa * src[i]) % m);
}

void scale_mod(std::uint32_t* dst, std::uint32_t a, std::size_t n,
               std::uint32_t m) {
  const std::uint64_t aa = a % m;
  const __m256d va = _mm256_set1_pd(static_cast<double>(aa));
  const __m256d vm = _mm256_set1_pd(static_cast<double>(m));
  const __m256d vinvm = _mm256_set1_pd(1.0 / static_cast<double>(m));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = load4_as_pd(dst + i);
    store4_from_pd(dst + i, reduce_once(_mm256_mul_pd(va, x), vm, vinvm));
  }
  for (; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((aa * dst[i]) % m);
}

std::optional<AssocWitness> table_assoc_violation(const std::uint16_t* table,
                                                  std::uint32_t order) {
  const std::uint32_t n = order;
  // Widened copy of row x so the inner loop can gather with 32-bit lanes.
  std::vector<std::int32_t> xrow32(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint16_t* x_row = table + std::size_t(x) * n;
    for (std::uint32_t w = 0; w < n; ++w) xrow32[w] = x_row[w];
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint16_t* lhs_row = table + std::size_t(table[x * n + y]) * n;
      const std::uint16_t* y_row = table + std::size_t(y) * n;
      std::uint32_t z = 0;
      for (; z + 8 <= n; z += 8) {
        const __m128i lhs16 =
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(lhs_row + z));
        const __m256i lhs = _mm256_cvtepu16_epi32(lhs16);
        const __m128i idx16 =
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(y_row + z));
        const __m256i idx = _mm256_cvtepu16_epi32(idx16);
        const __m256i rhs = _mm256_i32gather_epi32(xrow32.data(), idx, 4);
        const __m256i eq = _mm256_cmpeq_epi32(lhs, rhs);
        if (_mm256_movemask_epi8(eq) != -1) {
          for (std::uint32_t zz = z; zz < z + 8; ++zz)
            if (lhs_row[zz] != x_row[y_row[zz]]) return AssocWitness{x, y, zz};
        }
      }
      for (; z < n; ++z)
        if (lhs_row[z] != x_row[y_row[z]]) return AssocWitness{x, y, z};
    }
  }
  return std::nullopt;
}

}  // namespace frobloc::kernels::avx2

#endif  // x86_64
