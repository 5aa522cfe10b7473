#include "frobloc/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

#include "frobloc/kernels.hpp"
#include "frobloc/modarith.hpp"

namespace frobloc {

namespace {

std::string triple(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<std::uint16_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup s;
  s.parent = &g;
  s.mask.assign(g.order, 0);
  for (auto m : members) s.mask[m] = 1;
  s.members = std::move(members);
  return s;
}

// closure of a member set under multiplication (set already contains 0 and
// is inverse-closed once closed under products, the group being finite)
Subgroup close_under_products(const FiniteGroup& g,
                              std::vector<std::uint16_t> seed) {
  std::vector<std::uint8_t> mask(g.order, 0);
  std::deque<std::uint16_t> queue;
  std::vector<std::uint16_t> members;
  auto push = [&](std::uint16_t x) {
    if (!mask[x]) {
      mask[x] = 1;
      members.push_back(x);
      queue.push_back(x);
    }
  };
  push(0);
  for (auto x : seed) push(x);
  while (!queue.empty()) {
    const std::uint16_t x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < members.size(); ++i) {
      // members grows during iteration; products with every current member
      const std::uint16_t y = members[i];
      push(g.mul(x, y));
      push(g.mul(y, x));
    }
  }
  return make_subgroup(g, std::move(members));
}

}  // namespace

std::uint32_t FiniteGroup::element_order(std::uint32_t x) const {
  std::uint32_t k = 1;
  std::uint32_t cur = x;
  while (cur != 0) {
    cur = mul(cur, x);
    ++k;
  }
  return k;
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.parent == b.parent && a.members == b.members;
}

std::uint32_t assoc_check_cap() {
  if (const char* env = std::getenv("FROBLOC_ASSOC_CAP")) {
    const long v = std::atol(env);
    if (v > 0) return static_cast<std::uint32_t>(v);
  }
  return 512;
}

FiniteGroup group_from_table(const std::vector<std::vector<std::uint32_t>>& tab,
                             bool trusted) {
  const std::size_t n = tab.size();
  if (n == 0 || n > 65535) throw NotAGroupError("table order out of range");
  for (const auto& row : tab)
    if (row.size() != n) throw NotAGroupError("table is not square");
  for (const auto& row : tab)
    for (auto x : row)
      if (x >= n) throw NotAGroupError("table entry out of range");

  // locate a two-sided identity
  std::optional<std::uint32_t> id;
  for (std::uint32_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x)
      ok = tab[e][x] == x && tab[x][e] == x;
    if (ok) {
      id = e;
      break;
    }
  }
  if (!id) throw NotAGroupError("no two-sided identity element");

  // relabel so the identity is index 0
  std::vector<std::uint32_t> to_new(n), to_old(n);
  std::iota(to_new.begin(), to_new.end(), 0u);
  std::iota(to_old.begin(), to_old.end(), 0u);
  if (*id != 0) {
    std::swap(to_new[0], to_new[*id]);
    std::swap(to_old[0], to_old[*id]);
  }

  FiniteGroup g;
  g.order = static_cast<std::uint32_t>(n);
  g.table.resize(n * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      g.table[std::size_t(x) * n + y] =
          static_cast<std::uint16_t>(to_new[tab[to_old[x]][to_old[y]]]);

  // Latin-square property
  for (std::uint32_t x = 0; x < n; ++x) {
    std::vector<std::uint8_t> seen_row(n, 0), seen_col(n, 0);
    for (std::uint32_t y = 0; y < n; ++y) {
      if (seen_row[g.mul(x, y)]++)
        throw NotAGroupError("row " + std::to_string(x) +
                             " is not a permutation");
      if (seen_col[g.mul(y, x)]++)
        throw NotAGroupError("column " + std::to_string(x) +
                             " is not a permutation");
    }
  }

  if (!trusted && n <= assoc_check_cap()) {
    if (auto w = kernels::table_assoc_violation(g.table.data(), g.order))
      throw NotAGroupError("associativity fails at " +
                           triple((*w)[0], (*w)[1], (*w)[2]));
  }

  g.inverse.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::optional<std::uint32_t> ix;
    for (std::uint32_t y = 0; y < n; ++y)
      if (g.mul(x, y) == 0 && g.mul(y, x) == 0) {
        ix = y;
        break;
      }
    if (!ix) throw NotAGroupError("element " + std::to_string(x) +
                                  " has no two-sided inverse");
    g.inverse[x] = static_cast<std::uint16_t>(*ix);
  }
  return g;
}

FiniteGroup cyclic_group(std::uint32_t n) {
  if (n == 0) throw NotAGroupError("cyclic group of order 0");
  FiniteGroup g;
  g.order = n;
  g.table.resize(std::size_t(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      g.table[std::size_t(i) * n + j] = static_cast<std::uint16_t>((i + j) % n);
  g.inverse.resize(n);
  for (std::uint32_t i = 0; i < n; ++i)
    g.inverse[i] = static_cast<std::uint16_t>(i == 0 ? 0 : n - i);
  return g;
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const std::uint64_t n = std::uint64_t(g1.order) * g2.order;
  if (n > 65535) throw NotAGroupError("direct product order exceeds 65535");
  FiniteGroup g;
  g.order = static_cast<std::uint32_t>(n);
  g.table.resize(n * n);
  const std::uint32_t m2 = g2.order;
  for (std::uint32_t a1 = 0; a1 < g1.order; ++a1)
    for (std::uint32_t a2 = 0; a2 < m2; ++a2) {
      const std::uint32_t x = a1 * m2 + a2;
      for (std::uint32_t b1 = 0; b1 < g1.order; ++b1)
        for (std::uint32_t b2 = 0; b2 < m2; ++b2)
          g.table[std::size_t(x) * n + (b1 * m2 + b2)] =
              static_cast<std::uint16_t>(g1.mul(a1, b1) * m2 + g2.mul(a2, b2));
    }
  g.inverse.resize(n);
  for (std::uint32_t a1 = 0; a1 < g1.order; ++a1)
    for (std::uint32_t a2 = 0; a2 < m2; ++a2)
      g.inverse[a1 * m2 + a2] =
          static_cast<std::uint16_t>(g1.inv(a1) * m2 + g2.inv(a2));
  return g;
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<std::uint16_t> all(g.order);
  std::iota(all.begin(), all.end(), std::uint16_t(0));
  return make_subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return make_subgroup(g, {0}); }

Subgroup subgroup_from_members(const FiniteGroup& g,
                               std::vector<std::uint16_t> members) {
  Subgroup s = make_subgroup(g, std::move(members));
  if (s.members.empty() || s.members.front() != 0)
    throw NotAGroupError("subgroup must contain the identity");
  for (auto x : s.members) {
    if (!s.contains(g.inv(x)))
      throw NotAGroupError("subgroup not closed under inverse at " +
                           std::to_string(x));
    for (auto y : s.members)
      if (!s.contains(g.mul(x, y)))
        throw NotAGroupError("subgroup not closed under product at (" +
                             std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return s;
}

Subgroup subgroup_generated(const FiniteGroup& g,
                            const std::vector<std::uint16_t>& gens) {
  return close_under_products(g, gens);
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (std::uint32_t x = 0; x < g.order; ++x)
    for (auto m : s.members)
      if (!s.contains(g.conj(x, m))) return false;
  return true;
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n))
    throw NotNormalError("subgroup of order " + std::to_string(n.order()) +
                         " is not normal");
  QuotientGroup q;
  q.parent = &g;
  q.normal = n;
  q.coset_of.assign(g.order, 0xffff);
  // cosets keyed by their minimal element; scan in index order so coset
  // indices follow minimal representatives
  for (std::uint32_t x = 0; x < g.order; ++x) {
    if (q.coset_of[x] != 0xffff) continue;
    const auto idx = static_cast<std::uint16_t>(q.reps.size());
    q.reps.push_back(static_cast<std::uint16_t>(x));
    for (auto m : n.members) q.coset_of[g.mul(x, m)] = idx;
  }
  const auto qn = static_cast<std::uint32_t>(q.reps.size());
  if (std::uint64_t(qn) * n.order() != g.order)
    throw NotAGroupError("coset count mismatch");  // unreachable for normal n
  FiniteGroup qt;
  qt.order = qn;
  qt.table.resize(std::size_t(qn) * qn);
  for (std::uint32_t i = 0; i < qn; ++i)
    for (std::uint32_t j = 0; j < qn; ++j)
      qt.table[std::size_t(i) * qn + j] = q.coset_of[g.mul(q.reps[i], q.reps[j])];
  qt.inverse.resize(qn);
  for (std::uint32_t i = 0; i < qn; ++i) qt.inverse[i] = q.coset_of[g.inv(q.reps[i])];
  q.quotient = std::move(qt);
  return q;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a,
                             const Subgroup& b) {
  std::vector<std::uint16_t> gens;
  gens.reserve(64);
  std::vector<std::uint8_t> seen(g.order, 0);
  for (auto x : a.members)
    for (auto y : b.members) {
      const std::uint16_t c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return close_under_products(g, std::move(gens));
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series;
  series.push_back(whole_group(g));
  const Subgroup whole = series.front();
  while (true) {
    Subgroup next = commutator_subgroup(g, series.back(), whole);
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().is_trivial()) break;
  }
  return series;
}

std::optional<std::uint32_t> nilpotency_class(const FiniteGroup& g) {
  const auto series = lower_central_series(g);
  if (!series.back().is_trivial() && g.order > 1) return std::nullopt;
  return static_cast<std::uint32_t>(series.size() - 1);
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series;
  series.push_back(whole_group(g));
  while (true) {
    Subgroup next = commutator_subgroup(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().is_trivial()) break;
  }
  return series;
}

std::optional<std::uint32_t> derived_length(const FiniteGroup& g) {
  const auto series = derived_series(g);
  if (!series.back().is_trivial() && g.order > 1) return std::nullopt;
  return static_cast<std::uint32_t>(series.size() - 1);
}

bool is_solvable(const FiniteGroup& g) { return derived_length(g).has_value(); }
bool is_nilpotent(const FiniteGroup& g) { return nilpotency_class(g).has_value(); }

namespace {

// prime-order subgroups, one per subgroup (deduplicated by minimal generator)
std::vector<Subgroup> prime_order_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  std::vector<std::uint8_t> used(g.order, 0);
  for (std::uint32_t x = 1; x < g.order; ++x) {
    if (used[x]) continue;
    const std::uint32_t ord = g.element_order(x);
    // power x down to an element of prime order
    const std::uint32_t p = prime_factors(ord).front();
    std::uint32_t y = 0;
    for (std::uint32_t i = 0; i < ord / p; ++i) y = g.mul(y, x);
    if (y == 0) continue;
    Subgroup s = subgroup_generated(g, {static_cast<std::uint16_t>(y)});
    for (auto mem : s.members)
      if (g.element_order(mem) == p) used[mem] = 1;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

bool is_supersolvable(const FiniteGroup& g) {
  if (g.order == 1) return true;
  FiniteGroup cur = g;
  while (cur.order > 1) {
    bool found = false;
    for (const Subgroup& s : prime_order_subgroups(cur)) {
      if (is_normal(cur, s)) {
        cur = quotient(cur, s).quotient;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Subgroup hall_subgroup_of_nilpotent(const FiniteGroup& g, std::uint32_t p) {
  if (!is_nilpotent(g))
    throw NotNilpotentError("Hall p'-subgroup requested of a non-nilpotent group");
  std::vector<std::uint16_t> mem;
  for (std::uint32_t x = 0; x < g.order; ++x)
    if (g.element_order(x) % p != 0) mem.push_back(static_cast<std::uint16_t>(x));
  // a subgroup because G is nilpotent; construct with full validation
  return subgroup_from_members(g, std::move(mem));
}

Subgroup center(const FiniteGroup& g) {
  std::vector<std::uint16_t> mem;
  for (std::uint32_t x = 0; x < g.order; ++x) {
    bool central = true;
    for (std::uint32_t y = 0; y < g.order && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) mem.push_back(static_cast<std::uint16_t>(x));
  }
  return make_subgroup(g, std::move(mem));
}

bool is_abelian(const FiniteGroup& g) {
  for (std::uint32_t x = 0; x < g.order; ++x)
    for (std::uint32_t y = x + 1; y < g.order; ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

bool is_cyclic_subgroup(const FiniteGroup& g, const Subgroup& s) {
  for (auto x : s.members)
    if (g.element_order(x) == s.order()) return true;
  return s.order() == 1;
}

std::optional<std::uint32_t> p_group_prime(const FiniteGroup& g) {
  if (g.order == 1) return std::nullopt;
  const auto ps = prime_factors(g.order);
  if (ps.size() != 1) return std::nullopt;
  return ps.front();
}

}  // namespace frobloc
