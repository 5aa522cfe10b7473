#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace frobloc::kernels {

/// Witness for a failed associativity scan: (x, y, z) with
/// t[t[x][y]][z] != t[x][t[y][z]].
using AssocWitness = std::array<std::uint32_t, 3>;

// Scalar reference implementations. These are the semantic definition of
// each kernel; the dispatched entry points below must agree with them
// bit-for-bit on every input (see tests/test_kernels.cpp).
namespace scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t a,
              std::size_t n, std::uint32_t m);
void scale_mod(std::uint32_t* dst, std::uint32_t a, std::size_t n,
               std::uint32_t m);
std::optional<AssocWitness> table_assoc_violation(const std::uint16_t* table,
                                                  std::uint32_t order);

}  // namespace scalar

/// dst[i] <- (dst[i] + a * src[i]) mod m, for moduli up to 2^31.
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t a,
              std::size_t n, std::uint32_t m);

/// dst[i] <- (a * dst[i]) mod m.
void scale_mod(std::uint32_t* dst, std::uint32_t a, std::size_t n,
               std::uint32_t m);

/// First triple violating associativity of an order x order index table,
/// or nullopt if the table is associative. Scans in lexicographic (x,y,z)
/// order so the witness is deterministic.
std::optional<AssocWitness> table_assoc_violation(const std::uint16_t* table,
                                                  std::uint32_t order);

/// Name of the backend the vector kernels currently dispatch to
/// ("scalar" or "avx2"). The AVX2 modular kernels only engage for
/// m <= max_simd_modulus(); larger moduli always take the scalar path.
std::string active_backend();
std::uint32_t max_simd_modulus();

/// Force a backend ("scalar", "avx2", "auto"). Throws std::invalid_argument
/// for unknown names or when the requested backend is unavailable on this
/// CPU. The FROBLOC_NO_SIMD environment variable (any nonempty value)
/// pins the scalar path at startup.
void select_backend(const std::string& name);

}  // namespace frobloc::kernels
