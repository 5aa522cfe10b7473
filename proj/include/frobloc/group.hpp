#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobloc/error.hpp"

namespace frobloc {

/// A finite group as a dense multiplication table of element indices.
/// The identity is always index 0. Immutable after construction.
struct FiniteGroup {
  std::uint32_t order = 1;
  std::vector<std::uint16_t> table;    // order*order, row-major
  std::vector<std::uint16_t> inverse;  // per element

  std::uint16_t mul(std::uint32_t x, std::uint32_t y) const {
    return table[std::size_t(x) * order + y];
  }
  std::uint16_t inv(std::uint32_t x) const { return inverse[x]; }
  std::uint16_t conj(std::uint32_t g, std::uint32_t x) const {
    // g x g^-1
    return mul(mul(g, x), inv(g));
  }
  std::uint16_t commutator(std::uint32_t a, std::uint32_t b) const {
    // a^-1 b^-1 a b
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  std::uint32_t element_order(std::uint32_t x) const;
};

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<std::uint16_t> members;  // sorted, always contains 0
  std::vector<std::uint8_t> mask;      // parent->order bytes

  std::uint32_t order() const { return static_cast<std::uint32_t>(members.size()); }
  bool contains(std::uint32_t x) const { return mask[x] != 0; }
  bool is_trivial() const { return members.size() == 1; }
  bool is_whole() const { return members.size() == parent->order; }
};

bool operator==(const Subgroup& a, const Subgroup& b);

struct QuotientGroup {
  const FiniteGroup* parent = nullptr;
  Subgroup normal;
  std::vector<std::uint16_t> reps;      // minimal element index per coset
  std::vector<std::uint16_t> coset_of;  // parent element -> coset index
  FiniteGroup quotient;

  std::uint16_t project(std::uint32_t x) const { return coset_of[x]; }
};

/// Associativity-check cap: tables of order <= cap are verified by the full
/// O(n^3) scan in group_from_table; builders that guarantee associativity
/// construct above the cap. Overridable via FROBLOC_ASSOC_CAP.
std::uint32_t assoc_check_cap();

/// Validates and normalizes a raw table (identity relabeled to index 0 when
/// needed). `trusted` skips the cubic associativity scan regardless of size;
/// Latin-square, identity and inverse checks always run.
FiniteGroup group_from_table(const std::vector<std::vector<std::uint32_t>>& table,
                             bool trusted = false);

FiniteGroup cyclic_group(std::uint32_t n);

/// Componentwise product on pairs; index of (a, b) is a*|G2| + b.
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2);

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup subgroup_from_members(const FiniteGroup& g,
                               std::vector<std::uint16_t> members);

/// Smallest subgroup containing gens (breadth-first closure).
Subgroup subgroup_generated(const FiniteGroup& g,
                            const std::vector<std::uint16_t>& gens);

bool is_normal(const FiniteGroup& g, const Subgroup& s);

/// Coset group by a normal subgroup; representatives are the minimal
/// element index in each coset, cosets ordered by representative.
QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n);

/// Subgroup generated by all [a,b] = a^-1 b^-1 a b, a in A, b in B.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a,
                             const Subgroup& b);

/// gamma_1 = G, gamma_{i+1} = [gamma_i, G], until stabilization.
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);

/// Least n with gamma_{n+1} = 1, or nullopt when the series stabilizes
/// above the trivial subgroup.
std::optional<std::uint32_t> nilpotency_class(const FiniteGroup& g);

std::vector<Subgroup> derived_series(const FiniteGroup& g);
std::optional<std::uint32_t> derived_length(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);

/// Prime-order-normal-subgroup tower test: repeatedly find a subgroup of
/// prime order normal in the current quotient and pass to the quotient.
bool is_supersolvable(const FiniteGroup& g);

/// Elements of order coprime to p in a nilpotent group (a subgroup).
Subgroup hall_subgroup_of_nilpotent(const FiniteGroup& g, std::uint32_t p);

Subgroup center(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);
bool is_cyclic_subgroup(const FiniteGroup& g, const Subgroup& s);

/// Whether |G| is a power of the prime p (p deduced; 1 is no p-group).
std::optional<std::uint32_t> p_group_prime(const FiniteGroup& g);

}  // namespace frobloc
