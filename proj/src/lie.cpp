#include "frobloc/lie.hpp"

#include <algorithm>
#include <string>

#include "frobloc/kernels.hpp"

namespace frobloc {

using modmat::Mat;
using modmat::Vec;

modmat::Vec LieRing::basis_vector(std::uint32_t i) const {
  Vec v(rank, 0);
  v[i] = 1 % orders[i];
  return v;
}

Vec LieRing::reduce(Vec v) const {
  for (std::uint32_t k = 0; k < rank; ++k) v[k] %= orders[k];
  return v;
}

Vec LieRing::scale_up(const Vec& v) const {
  Vec out(rank);
  for (std::uint32_t k = 0; k < rank; ++k)
    out[k] = mulmod(v[k] % orders[k], ring.modulus / orders[k], ring.modulus);
  return out;
}

Vec LieRing::scale_down(const Vec& v) const {
  Vec out(rank);
  for (std::uint32_t k = 0; k < rank; ++k) {
    const std::uint32_t s = ring.modulus / orders[k];
    if (v[k] % s != 0)
      throw Error("scaled coordinate is not in the module lattice (internal)");
    out[k] = (v[k] / s) % orders[k];
  }
  return out;
}

Mat LieRing::canonical_span(const Mat& rows) const {
  Mat scaled;
  scaled.reserve(rows.size());
  for (const Vec& r : rows) scaled.push_back(scale_up(r));
  Mat h = modmat::howell(std::move(scaled), rank, ring.modulus);
  for (Vec& r : h) r = scale_down(r);
  return h;
}

Vec LieRing::bracket(const Vec& x, const Vec& y) const {
  Vec out(rank, 0);
  const std::uint32_t m = ring.modulus;
  for (std::uint32_t i = 0; i < rank; ++i) {
    if (x[i] % orders[i] == 0) continue;
    for (std::uint32_t j = 0; j < rank; ++j) {
      if (y[j] % orders[j] == 0) continue;
      const std::uint32_t c = mulmod(x[i], y[j], m);
      kernels::axpy_mod(out.data(), basis_bracket(i, j).data(), c, rank, m);
    }
  }
  return reduce(std::move(out));
}

std::uint64_t LieRing::module_size() const {
  std::uint64_t n = 1;
  for (auto o : orders) n *= o;
  return n;
}

LieRing lie_from_structure_constants(
    const CoefficientRing& ring, const std::vector<std::uint32_t>& orders,
    const std::map<std::pair<std::uint32_t, std::uint32_t>, Vec>& constants) {
  LieRing l;
  l.ring = ring;
  l.rank = static_cast<std::uint32_t>(orders.size());
  if (l.rank > kMaxLieRank)
    throw Error("Lie ring rank " + std::to_string(l.rank) + " exceeds cap " +
                std::to_string(kMaxLieRank));
  l.orders = orders;
  for (auto o : l.orders) {
    if (o < 2 || ring.modulus % o != 0)
      throw OrderConsistencyError("generator order " + std::to_string(o) +
                                  " does not divide the ring modulus");
    if (ring.is_field() && o != ring.modulus)
      throw OrderConsistencyError(
          "over a field every generator order must equal the modulus");
  }
  l.constants.assign(std::size_t(l.rank) * l.rank, l.zero());
  for (const auto& [ij, c] : constants) {
    const auto [i, j] = ij;
    if (i >= l.rank || j >= l.rank)
      throw Error("structure constant index out of range");
    if (i >= j)
      throw AntisymmetryFailureError(
          "structure constants must be indexed over i < j (got " +
          std::to_string(i) + "," + std::to_string(j) + ")");
    if (c.size() != l.rank) throw Error("structure constant vector length");
    Vec cij = l.reduce(c);
    Vec cji(l.rank);
    for (std::uint32_t k = 0; k < l.rank; ++k)
      cji[k] = negmod(cij[k], l.orders[k]);
    l.constants[std::size_t(i) * l.rank + j] = std::move(cij);
    l.constants[std::size_t(j) * l.rank + i] = std::move(cji);
  }
  // additive-order consistency: gcd(o_i, o_j) * [e_i, e_j] = 0
  for (std::uint32_t i = 0; i < l.rank; ++i)
    for (std::uint32_t j = 0; j < l.rank; ++j) {
      const auto g = static_cast<std::uint32_t>(gcd_u64(l.orders[i], l.orders[j]));
      const Vec& c = l.basis_bracket(i, j);
      for (std::uint32_t k = 0; k < l.rank; ++k)
        if (mulmod(g % l.orders[k], c[k], l.orders[k]) != 0)
          throw OrderConsistencyError(
              "order of e_" + std::to_string(k) + " does not divide the order "
              "of [e_" + std::to_string(i) + ",e_" + std::to_string(j) + "]");
    }
  // Jacobi on all triples
  for (std::uint32_t i = 0; i < l.rank; ++i)
    for (std::uint32_t j = i + 1; j < l.rank; ++j)
      for (std::uint32_t k = j + 1; k < l.rank; ++k) {
        Vec s = l.bracket(l.basis_bracket(i, j), l.basis_vector(k));
        const Vec t = l.bracket(l.basis_bracket(j, k), l.basis_vector(i));
        const Vec u = l.bracket(l.basis_bracket(k, i), l.basis_vector(j));
        for (std::uint32_t w = 0; w < l.rank; ++w) {
          s[w] = addmod(s[w], t[w], l.orders[w]);
          s[w] = addmod(s[w], u[w], l.orders[w]);
        }
        if (!modmat::is_zero(s))
          throw JacobiFailureError("Jacobi identity fails on basis triple (" +
                                   std::to_string(i) + "," + std::to_string(j) +
                                   "," + std::to_string(k) + ")");
      }
  return l;
}

std::uint64_t LieSubspace::size() const {
  // product over scaled-pivot cyclic factors
  std::uint64_t n = 1;
  const std::uint32_t m = parent->ring.modulus;
  for (const Vec& row : basis) {
    const Vec s = parent->scale_up(row);
    for (std::uint32_t j = 0; j < s.size(); ++j)
      if (s[j] != 0) {
        n *= m / static_cast<std::uint32_t>(gcd_u64(s[j], m));
        break;
      }
  }
  return n;
}

bool LieSubspace::contains(const Vec& v) const {
  Mat scaled;
  scaled.reserve(basis.size());
  for (const Vec& r : basis) scaled.push_back(parent->scale_up(r));
  return modmat::contains(scaled, parent->scale_up(parent->reduce(v)),
                          parent->ring.modulus);
}

bool operator==(const LieSubspace& a, const LieSubspace& b) {
  return a.parent == b.parent && a.basis == b.basis;
}

LieSubspace span_subspace(const LieRing& l, const Mat& generators) {
  LieSubspace s;
  s.parent = &l;
  Mat rows;
  rows.reserve(generators.size());
  for (const Vec& g : generators) rows.push_back(l.reduce(g));
  s.basis = l.canonical_span(rows);
  return s;
}

LieSubspace zero_subspace(const LieRing& l) { return span_subspace(l, {}); }

LieSubspace full_subspace(const LieRing& l) {
  Mat gens;
  for (std::uint32_t i = 0; i < l.rank; ++i) gens.push_back(l.basis_vector(i));
  return span_subspace(l, gens);
}

LieSubspace sum_subspaces(const LieSubspace& u, const LieSubspace& v) {
  Mat gens = u.basis;
  gens.insert(gens.end(), v.basis.begin(), v.basis.end());
  return span_subspace(*u.parent, gens);
}

LieSubspace intersect_subspaces(const LieSubspace& u, const LieSubspace& v) {
  const LieRing& l = *u.parent;
  const std::uint32_t m = l.ring.modulus;
  // rows of [U; -V] in scaled coordinates; kernel rows (a | b) give
  // intersection elements a*U = b*V
  Mat stack;
  for (const Vec& r : u.basis) stack.push_back(l.scale_up(r));
  for (const Vec& r : v.basis) {
    Vec neg = l.scale_up(r);
    for (auto& x : neg) x = negmod(x, m);
    stack.push_back(neg);
  }
  const Mat ker = modmat::kernel(stack, l.rank, m);
  Mat gens;
  for (const Vec& c : ker) {
    Vec w(l.rank, 0);
    for (std::size_t i = 0; i < u.basis.size(); ++i)
      kernels::axpy_mod(w.data(), stack[i].data(), c[i], l.rank, m);
    gens.push_back(l.scale_down(w));
  }
  return span_subspace(l, gens);
}

LieSubspace bracket_of_subspaces(const LieSubspace& u, const LieSubspace& v) {
  const LieRing& l = *u.parent;
  Mat gens;
  gens.reserve(u.basis.size() * v.basis.size());
  for (const Vec& x : u.basis)
    for (const Vec& y : v.basis) gens.push_back(l.bracket(x, y));
  return span_subspace(l, gens);
}

LieSubspace iterated_commutator(const LieSubspace& x, const LieSubspace& y,
                                std::uint32_t m) {
  LieSubspace cur = x;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (cur.is_zero()) break;
    cur = bracket_of_subspaces(cur, y);
  }
  return cur;
}

namespace {

std::vector<LieSubspace> descending_series(const LieRing& l, bool derived) {
  std::vector<LieSubspace> series;
  series.push_back(full_subspace(l));
  while (true) {
    const LieSubspace& last = series.back();
    LieSubspace next =
        derived ? bracket_of_subspaces(last, last)
                : bracket_of_subspaces(last, series.front());
    if (next == last) break;
    series.push_back(std::move(next));
    if (series.back().is_zero()) break;
  }
  return series;
}

}  // namespace

std::vector<LieSubspace> lower_central_series_lie(const LieRing& l) {
  return descending_series(l, false);
}

std::optional<std::uint32_t> nilpotency_class_lie(const LieRing& l) {
  const auto s = lower_central_series_lie(l);
  if (!s.back().is_zero() && l.rank > 0) return std::nullopt;
  if (s.front().is_zero()) return 0;
  return static_cast<std::uint32_t>(s.size() - 1);
}

std::vector<LieSubspace> derived_series_lie(const LieRing& l) {
  return descending_series(l, true);
}

std::optional<std::uint32_t> derived_length_lie(const LieRing& l) {
  const auto s = derived_series_lie(l);
  if (!s.back().is_zero() && l.rank > 0) return std::nullopt;
  if (s.front().is_zero()) return 0;
  return static_cast<std::uint32_t>(s.size() - 1);
}

std::optional<std::uint32_t> subalgebra_class(const LieSubspace& s) {
  if (s.is_zero()) return 0;
  std::vector<LieSubspace> series = {s};
  while (true) {
    LieSubspace next = bracket_of_subspaces(series.back(), s);
    if (next == series.back()) return std::nullopt;
    const bool zero = next.is_zero();
    series.push_back(std::move(next));
    if (zero) return static_cast<std::uint32_t>(series.size() - 1);
  }
}

bool is_bracket_closed(const LieSubspace& s) {
  const LieSubspace br = bracket_of_subspaces(s, s);
  for (const Vec& v : br.basis)
    if (!s.contains(v)) return false;
  return true;
}

Vec LieAutomorphism::apply(const Vec& x) const {
  return parent->reduce(modmat::vecmat(parent->reduce(x), matrix,
                                       parent->ring.modulus));
}

LieAutomorphism lie_automorphism(const LieRing& l, Mat matrix) {
  if (matrix.size() != l.rank)
    throw Error("automorphism matrix must be rank x rank");
  for (auto& row : matrix) {
    if (row.size() != l.rank) throw Error("automorphism matrix must be square");
    for (auto& x : row) x %= l.ring.modulus;
  }
  // module-map validity: o_i * M[i][k] = 0 (mod o_k)
  for (std::uint32_t i = 0; i < l.rank; ++i)
    for (std::uint32_t k = 0; k < l.rank; ++k)
      if (mulmod(l.orders[i] % l.orders[k], matrix[i][k] % l.orders[k],
                 l.orders[k]) != 0)
        throw OrderConsistencyError(
            "matrix entry (" + std::to_string(i) + "," + std::to_string(k) +
            ") does not define a map of the additive group");
  LieAutomorphism f;
  f.parent = &l;
  f.matrix = std::move(matrix);
  // invertibility: the images of the basis span the whole module
  Mat images;
  for (std::uint32_t i = 0; i < l.rank; ++i)
    images.push_back(f.apply(l.basis_vector(i)));
  if (l.canonical_span(images) != full_subspace(l).basis)
    throw NotInvertibleError("matrix is not invertible on the module");
  for (std::uint32_t i = 0; i < l.rank; ++i)
    for (std::uint32_t j = i + 1; j < l.rank; ++j) {
      const Vec lhs = f.apply(l.basis_bracket(i, j));
      const Vec rhs = l.bracket(f.apply(l.basis_vector(i)),
                                f.apply(l.basis_vector(j)));
      if (lhs != rhs)
        throw NotBracketPreservingError("bracket not preserved on basis pair (" +
                                        std::to_string(i) + "," +
                                        std::to_string(j) + ")");
    }
  return f;
}

LieAutomorphism identity_lie_automorphism(const LieRing& l) {
  LieAutomorphism f;
  f.parent = &l;
  f.matrix = modmat::identity(l.rank, l.ring.modulus);
  return f;
}

LieAutomorphism compose(const LieAutomorphism& f, const LieAutomorphism& g) {
  // apply(x) = f(g(x)) = (x * Mg) * Mf
  LieAutomorphism out;
  out.parent = f.parent;
  out.matrix = modmat::matmul(g.matrix, f.matrix, f.parent->ring.modulus);
  return out;
}

LieSubspace apply_to_subspace(const LieAutomorphism& f, const LieSubspace& s) {
  Mat gens;
  gens.reserve(s.basis.size());
  for (const Vec& v : s.basis) gens.push_back(f.apply(v));
  return span_subspace(*f.parent, gens);
}

LieSubspace fixed_subalgebra(const LieRing& l,
                             const std::vector<LieAutomorphism>& auts) {
  const std::uint32_t m = l.ring.modulus;
  // solve x (A - I) = 0 for all A simultaneously; with mixed orders the
  // system is (A - I) with column k scaled by m/o_k, solutions read mod o_i
  Mat stacked(l.rank);
  for (std::uint32_t i = 0; i < l.rank; ++i) stacked[i].reserve(l.rank * auts.size());
  std::size_t width = 0;
  for (const auto& f : auts) {
    for (std::uint32_t i = 0; i < l.rank; ++i)
      for (std::uint32_t k = 0; k < l.rank; ++k) {
        std::uint32_t entry = f.matrix[i][k] % m;
        if (i == k) entry = submod(entry, 1 % m, m);
        stacked[i].push_back(mulmod(entry, m / l.orders[k], m));
      }
    width += l.rank;
  }
  const Mat ker = modmat::kernel(stacked, width, m);
  Mat gens;
  for (const Vec& c : ker) {
    Vec v(l.rank);
    for (std::uint32_t i = 0; i < l.rank; ++i) v[i] = c[i] % l.orders[i];
    gens.push_back(std::move(v));
  }
  LieSubspace fix = span_subspace(l, gens);
  if (!is_bracket_closed(fix))
    throw Error("fixed subalgebra is not bracket-closed (internal error)");
  return fix;
}

}  // namespace frobloc
