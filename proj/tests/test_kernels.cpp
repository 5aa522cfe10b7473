#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "frobloc/kernels.hpp"

using namespace frobloc;

namespace {

// Equivalence oracle for the modular kernels: plain 128-bit-free u64
// arithmetic, independent of both dispatched paths.
std::uint32_t ref_mod(std::uint64_t acc, std::uint32_t m) {
  return static_cast<std::uint32_t>(acc % m);
}

std::vector<std::uint32_t> random_vec(std::mt19937_64& rng, std::size_t n,
                                      std::uint32_t m) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % m);
  return v;
}

}  // namespace

TEST_CASE("scalar axpy/scale agree with the arithmetic definition") {
  std::mt19937_64 rng(7);
  for (std::uint32_t m : {2u, 3u, 7u, 49u, 121u, 729u, 1u << 20, 2147483647u}) {
    for (std::size_t n : {0u, 1u, 3u, 8u, 17u, 64u}) {
      auto dst = random_vec(rng, n, m);
      const auto src = random_vec(rng, n, m);
      const auto a = static_cast<std::uint32_t>(rng() % m);
      auto expect = dst;
      for (std::size_t i = 0; i < n; ++i)
        expect[i] = ref_mod(std::uint64_t(dst[i]) + std::uint64_t(a) * src[i], m);
      kernels::scalar::axpy_mod(dst.data(), src.data(), a, n, m);
      CHECK(dst == expect);

      auto d2 = random_vec(rng, n, m);
      auto e2 = d2;
      for (std::size_t i = 0; i < n; ++i)
        e2[i] = ref_mod(std::uint64_t(a) * d2[i], m);
      kernels::scalar::scale_mod(d2.data(), a, n, m);
      CHECK(d2 == e2);
    }
  }
}

TEST_CASE("dispatched kernels match the scalar reference bit for bit") {
  std::mt19937_64 rng(11);
  const std::string saved = kernels::active_backend();
  // Exercise whatever backend dispatch picked (AVX2 where the CPU has it),
  // including the modulus boundary where the SIMD path hands back to scalar.
  for (std::uint32_t m :
       {2u, 3u, 5u, 7u, 31u, 32u, 729u, 65537u, kernels::max_simd_modulus(),
        kernels::max_simd_modulus() + 1, 2147483647u}) {
    for (std::size_t n : {1u, 4u, 5u, 8u, 31u, 100u, 1000u}) {
      auto base = random_vec(rng, n, m);
      const auto src = random_vec(rng, n, m);
      const auto a = static_cast<std::uint32_t>(rng() % m);

      auto via_scalar = base;
      kernels::scalar::axpy_mod(via_scalar.data(), src.data(), a, n, m);
      auto via_dispatch = base;
      kernels::axpy_mod(via_dispatch.data(), src.data(), a, n, m);
      CHECK(via_scalar == via_dispatch);

      auto s1 = base;
      kernels::scalar::scale_mod(s1.data(), a, n, m);
      auto s2 = base;
      kernels::scale_mod(s2.data(), a, n, m);
      CHECK(s1 == s2);
    }
  }
  kernels::select_backend(saved);
}

TEST_CASE("forced scalar backend is honored") {
  kernels::select_backend("scalar");
  CHECK(kernels::active_backend() == "scalar");
  kernels::select_backend("auto");
}

TEST_CASE("associativity scan finds the lexicographically first witness") {
  // Z/4 with one corrupted entry.
  std::vector<std::uint16_t> t = {
      0, 1, 2, 3,  //
      1, 2, 3, 0,  //
      2, 3, 0, 1,  //
      3, 0, 1, 2,  //
  };
  CHECK(!kernels::table_assoc_violation(t.data(), 4).has_value());
  CHECK(!kernels::scalar::table_assoc_violation(t.data(), 4).has_value());

  t[1 * 4 + 1] = 3;  // break 1*1
  const auto w1 = kernels::table_assoc_violation(t.data(), 4);
  const auto w2 = kernels::scalar::table_assoc_violation(t.data(), 4);
  REQUIRE(w1.has_value());
  CHECK(w1 == w2);
}

TEST_CASE("associativity scan equivalence on random tables") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 37);
    std::vector<std::uint16_t> t(std::size_t(n) * n);
    if (it % 2 == 0) {
      // random table: almost surely non-associative
      for (auto& x : t) x = static_cast<std::uint16_t>(rng() % n);
    } else {
      // cyclic group, then possibly corrupt one entry
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
          t[i * n + j] = static_cast<std::uint16_t>((i + j) % n);
      if (rng() % 2 == 0 && n > 2)
        t[(rng() % n) * n + (rng() % n)] = static_cast<std::uint16_t>(rng() % n);
    }
    CHECK(kernels::table_assoc_violation(t.data(), n) ==
          kernels::scalar::table_assoc_violation(t.data(), n));
  }
}
