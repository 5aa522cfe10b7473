#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "frobloc/modarith.hpp"
#include "frobloc/modmat.hpp"

namespace frobloc {

/// Desk-scale cap: Jacobi checking is cubic in the rank.
inline constexpr std::uint32_t kMaxLieRank = 24;

/// A finitely generated Lie ring by basis and structure constants over a
/// finite coefficient ring. The additive group is the direct sum of cyclic
/// groups Z/orders[i]; vectors are stored in natural coordinates, entry i
/// reduced modulo orders[i]. For prime fields all orders equal the modulus.
struct LieRing {
  CoefficientRing ring;
  std::uint32_t rank = 0;
  std::vector<std::uint32_t> orders;
  /// Full antisymmetrized table: constants[i*rank+j] = [e_i, e_j].
  std::vector<modmat::Vec> constants;

  const modmat::Vec& basis_bracket(std::uint32_t i, std::uint32_t j) const {
    return constants[std::size_t(i) * rank + j];
  }

  modmat::Vec zero() const { return modmat::Vec(rank, 0); }
  modmat::Vec basis_vector(std::uint32_t i) const;

  /// Reduce entry k modulo orders[k].
  modmat::Vec reduce(modmat::Vec v) const;

  /// Natural -> Z/m scaled coordinates (entry k multiplied by m/orders[k])
  /// and back. The scaled image is where the Howell linear algebra runs.
  modmat::Vec scale_up(const modmat::Vec& v) const;
  modmat::Vec scale_down(const modmat::Vec& v) const;

  /// Canonical basis (natural coordinates) of the span of `rows`.
  modmat::Mat canonical_span(const modmat::Mat& rows) const;

  modmat::Vec bracket(const modmat::Vec& x, const modmat::Vec& y) const;

  /// Number of elements of the additive group.
  std::uint64_t module_size() const;
};

/// Validates antisymmetry conventions, additive-order consistency and the
/// Jacobi identity on all basis triples. `constants` maps (i, j) with i < j
/// to the coordinates of [e_i, e_j].
LieRing lie_from_structure_constants(
    const CoefficientRing& ring, const std::vector<std::uint32_t>& orders,
    const std::map<std::pair<std::uint32_t, std::uint32_t>, modmat::Vec>&
        constants);

/// A submodule of the additive group of a Lie ring, held as the canonical
/// (Howell) basis in natural coordinates. Defaults to the zero subspace.
struct LieSubspace {
  const LieRing* parent = nullptr;
  modmat::Mat basis;

  bool is_zero() const { return basis.empty(); }
  std::size_t generator_count() const { return basis.size(); }
  /// Number of elements of the subgroup.
  std::uint64_t size() const;
  bool contains(const modmat::Vec& v) const;
};

bool operator==(const LieSubspace& a, const LieSubspace& b);

LieSubspace span_subspace(const LieRing& l, const modmat::Mat& generators);
LieSubspace zero_subspace(const LieRing& l);
LieSubspace full_subspace(const LieRing& l);
LieSubspace sum_subspaces(const LieSubspace& u, const LieSubspace& v);
LieSubspace intersect_subspaces(const LieSubspace& u, const LieSubspace& v);

/// Span of pairwise brackets of basis vectors.
LieSubspace bracket_of_subspaces(const LieSubspace& u, const LieSubspace& v);

/// [X, Y, ..., Y] with m copies of Y (left-normed); m = 0 returns X.
LieSubspace iterated_commutator(const LieSubspace& x, const LieSubspace& y,
                                std::uint32_t m);

std::vector<LieSubspace> lower_central_series_lie(const LieRing& l);
std::optional<std::uint32_t> nilpotency_class_lie(const LieRing& l);
std::vector<LieSubspace> derived_series_lie(const LieRing& l);
std::optional<std::uint32_t> derived_length_lie(const LieRing& l);

/// Nilpotency class of a bracket-closed subspace (series inside it).
std::optional<std::uint32_t> subalgebra_class(const LieSubspace& s);
bool is_bracket_closed(const LieSubspace& s);

/// An invertible bracket-preserving linear map, row convention:
/// apply(x) = x * matrix.
struct LieAutomorphism {
  const LieRing* parent = nullptr;
  modmat::Mat matrix;

  modmat::Vec apply(const modmat::Vec& x) const;
};

/// Validates module-map order compatibility, invertibility and bracket
/// preservation on all basis pairs.
LieAutomorphism lie_automorphism(const LieRing& l, modmat::Mat matrix);

LieAutomorphism identity_lie_automorphism(const LieRing& l);
LieAutomorphism compose(const LieAutomorphism& f, const LieAutomorphism& g);

/// Image of a subspace under an automorphism.
LieSubspace apply_to_subspace(const LieAutomorphism& f, const LieSubspace& s);

/// Common fixed points {x : x*A = x for all A}; always bracket-closed
/// (asserted on every call).
LieSubspace fixed_subalgebra(const LieRing& l,
                             const std::vector<LieAutomorphism>& auts);

}  // namespace frobloc
