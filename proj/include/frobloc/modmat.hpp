#pragma once

#include <cstdint>
#include <vector>

#include "frobloc/error.hpp"

namespace frobloc::modmat {

using Vec = std::vector<std::uint32_t>;
using Mat = std::vector<Vec>;  // rows

/// Howell normal form of the row span of `rows` over Z/m.
///
/// The result is the canonical basis of the span: pivots divide m, entries
/// above a pivot are reduced modulo it, and the Howell property holds (every
/// span element whose leading column is j lies in the span of the rows with
/// pivot column >= j). Two generating sets with equal span produce identical
/// output, so subspace equality is row-by-row comparison.
Mat howell(Mat rows, std::size_t ncols, std::uint32_t m);

/// Residual of v after greedy reduction against a Howell basis.
Vec reduce(const Mat& basis, Vec v, std::uint32_t m);

/// Membership of v in the span of a Howell basis.
bool contains(const Mat& basis, const Vec& v, std::uint32_t m);

/// Canonical basis of {x in (Z/m)^rows(B) : x * B = 0 (mod m)}.
Mat kernel(const Mat& B, std::size_t ncols, std::uint32_t m);

/// x * A for a row vector x (length rows(A)).
Vec vecmat(const Vec& x, const Mat& A, std::uint32_t m);

/// A * B with A of shape r x k and B of shape k x c.
Mat matmul(const Mat& A, const Mat& B, std::uint32_t m);

Mat identity(std::size_t n, std::uint32_t m);
bool is_zero(const Vec& v);
bool is_zero_mat(const Mat& a);

/// Scalar-multiplied copy.
Vec scaled(Vec v, std::uint32_t a, std::uint32_t m);

/// Matrix power A^e (square A).
Mat matpow(Mat a, std::uint64_t e, std::uint32_t m);

}  // namespace frobloc::modmat
