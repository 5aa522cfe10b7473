#include "frobloc/modmat.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "frobloc/kernels.hpp"
#include "frobloc/modarith.hpp"

namespace frobloc::modmat {

namespace {

// dst += a * src (mod m)
void row_axpy(Vec& dst, const Vec& src, std::uint32_t a, std::uint32_t m) {
  kernels::axpy_mod(dst.data(), src.data(), a, dst.size(), m);
}

void row_scale(Vec& dst, std::uint32_t a, std::uint32_t m) {
  kernels::scale_mod(dst.data(), a, dst.size(), m);
}

// Unit u (mod m) with u * v = gcd(v, m) (mod m). Needs v != 0 mod m.
std::uint32_t unit_to_canonical(std::uint32_t v, std::uint32_t m) {
  const auto d = static_cast<std::uint32_t>(gcd_u64(v, m));
  const std::uint32_t md = m / d;
  std::uint32_t u = md == 1 ? 1 : invmod((v / d) % md, md);
  // Lift to a unit modulo m. For the prime-power moduli used by the
  // coefficient rings the first candidate already works; the loop keeps
  // the routine correct for arbitrary m.
  while (gcd_u64(u, m) != 1) u += md;
  return u % m;
}

}  // namespace

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

bool is_zero_mat(const Mat& a) {
  return std::all_of(a.begin(), a.end(), [](const Vec& r) { return is_zero(r); });
}

Vec scaled(Vec v, std::uint32_t a, std::uint32_t m) {
  row_scale(v, a, m);
  return v;
}

Mat howell(Mat rows, std::size_t ncols, std::uint32_t m) {
  for (Vec& r : rows) {
    if (r.size() != ncols) throw Error("howell: ragged row");
    for (std::uint32_t& x : r) x %= m;
  }
  std::size_t top = 0;
  for (std::size_t j = 0; j < ncols; ++j) {
    // Collapse all rows below `top` with a nonzero entry in column j into
    // one, using integer Bezout combinations (unimodular, span-preserving).
    std::size_t r = top;
    while (r < rows.size() && rows[r][j] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[top], rows[r]);
    for (std::size_t k = top + 1; k < rows.size(); ++k) {
      if (rows[k][j] == 0) continue;
      const std::int64_t a = rows[top][j];
      const std::int64_t b = rows[k][j];
      const Egcd e = egcd(a, b);
      const auto lift = [&](std::int64_t x) {
        x %= std::int64_t(m);
        if (x < 0) x += m;
        return static_cast<std::uint32_t>(x);
      };
      Vec nt(ncols, 0), nk(ncols, 0);
      row_axpy(nt, rows[top], lift(e.s), m);
      row_axpy(nt, rows[k], lift(e.t), m);
      row_axpy(nk, rows[top], lift(b / e.g), m);
      row_axpy(nk, rows[k], lift(-(a / e.g)), m);
      rows[top] = std::move(nt);
      rows[k] = std::move(nk);
    }
    if (rows[top][j] == 0) continue;  // collapsed to zero mod m
    const auto d = static_cast<std::uint32_t>(gcd_u64(rows[top][j], m));
    row_scale(rows[top], unit_to_canonical(rows[top][j], m), m);
    assert(rows[top][j] == d);
    for (std::size_t k = 0; k < top; ++k) {
      const std::uint32_t q = rows[k][j] / d;
      if (q != 0) row_axpy(rows[k], rows[top], m - q % m, m);
    }
    if (d != 1) {
      // Annihilator multiple: keeps the Howell property; joins the pool
      // for the remaining columns (its entries up to j are all zero).
      Vec ann = rows[top];
      row_scale(ann, m / d, m);
      rows.push_back(std::move(ann));
    }
    ++top;
  }
  rows.resize(top);
  return rows;
}

Vec reduce(const Mat& basis, Vec v, std::uint32_t m) {
  for (std::uint32_t& x : v) x %= m;
  for (const Vec& row : basis) {
    std::size_t j = 0;
    while (j < row.size() && row[j] == 0) ++j;
    if (j == row.size()) continue;
    const std::uint32_t d = row[j];
    if (v[j] % d != 0) continue;  // cannot eliminate; leave the residue
    const std::uint32_t q = v[j] / d;
    if (q != 0) row_axpy(v, row, m - q % m, m);
  }
  return v;
}

bool contains(const Mat& basis, const Vec& v, std::uint32_t m) {
  return is_zero(reduce(basis, v, m));
}

Mat kernel(const Mat& B, std::size_t ncols, std::uint32_t m) {
  const std::size_t n = B.size();
  Mat aug(n, Vec(ncols + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (B[i].size() != ncols) throw Error("kernel: ragged row");
    for (std::size_t j = 0; j < ncols; ++j) aug[i][j] = B[i][j] % m;
    aug[i][ncols + i] = 1 % m;
  }
  const Mat h = howell(std::move(aug), ncols + n, m);
  Mat tails;
  for (const Vec& row : h) {
    bool head_zero = true;
    for (std::size_t j = 0; j < ncols; ++j)
      if (row[j] != 0) {
        head_zero = false;
        break;
      }
    if (!head_zero) continue;
    tails.emplace_back(row.begin() + std::ptrdiff_t(ncols), row.end());
  }
  return howell(std::move(tails), n, m);
}

Vec vecmat(const Vec& x, const Mat& A, std::uint32_t m) {
  if (A.empty()) return {};
  Vec out(A.front().size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] % m != 0) row_axpy(out, A[i], x[i], m);
  return out;
}

Mat matmul(const Mat& A, const Mat& B, std::uint32_t m) {
  Mat out;
  out.reserve(A.size());
  for (const Vec& row : A) out.push_back(vecmat(row, B, m));
  return out;
}

Mat identity(std::size_t n, std::uint32_t m) {
  Mat out(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1 % m;
  return out;
}

Mat matpow(Mat a, std::uint64_t e, std::uint32_t m) {
  Mat r = identity(a.size(), m);
  while (e > 0) {
    if (e & 1) r = matmul(r, a, m);
    a = matmul(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace frobloc::modmat
