#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobloc/action.hpp"
#include "frobloc/lie.hpp"

namespace frobloc {

/// A grading of a Lie ring by a finite cyclic group Z/nZ (moduli = {n}) or
/// a finite abelian group given as a tuple of moduli. Every index tuple has
/// an entry in `components` (zero subspaces included), the components are
/// jointly spanning and independent, and [L_a, L_b] is contained in L_{a+b}.
struct Grading {
  const LieRing* parent = nullptr;
  std::vector<std::uint32_t> moduli;
  std::map<std::vector<std::uint32_t>, LieSubspace> components;

  std::vector<std::uint32_t> add_indices(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) const;
  const LieSubspace& at(const std::vector<std::uint32_t>& idx) const;
  std::vector<std::vector<std::uint32_t>> all_indices() const;
  std::uint32_t nonzero_component_count() const;
};

/// Builds a grading from a (possibly partial) component map; missing indices
/// become zero subspaces. Does not verify the grading axioms; callers use
/// verify_grading when the data is untrusted.
Grading make_grading(const LieRing& l, std::vector<std::uint32_t> moduli,
                     std::map<std::vector<std::uint32_t>, LieSubspace> comps);

struct GradingCheck {
  bool ok = true;
  std::string witness;
};

/// Direct-sum and bracket-compatibility check with a witness on failure.
GradingCheck verify_grading(const Grading& g);

/// Eigenspace decomposition of L with respect to an automorphism phi with
/// phi^p = id, via the projections pi_i = p^-1 sum_j omega^{-ij} phi^j.
/// Requires omega of order p in the coefficient ring. The projection
/// identities (sum pi_i = id, pi_i pi_j = 0) and the grading axioms are
/// verified before returning.
Grading eigenspace_decomposition(const LieRing& l, const LieAutomorphism& phi,
                                 std::uint32_t p);

/// Eigenspace grading together with the complement action on it.
struct EigenData {
  Grading grading;
  LieAutomorphism phi;
  LieAutomorphism h_action;
  std::uint32_t omega = 0;
  std::uint32_t p = 0;  // order of phi (prime)
  std::uint32_t q = 0;  // order of the complement generator
  std::uint32_t r = 0;  // h maps L_i onto L_{r i}; primitive q-th root mod p

  const LieSubspace& component(std::uint32_t i) const {
    return grading.at({i % p});
  }
};

/// Verifies phi^p = h^q = id and finds the exponent r (a primitive q-th
/// root of unity mod p) with h(L_i) = L_{r i} for every i. When
/// `expected_r` is set only that candidate is accepted.
EigenData make_eigen_data(const LieRing& l, const LieAutomorphism& phi,
                          const LieAutomorphism& h, std::uint32_t p,
                          std::uint32_t q,
                          std::optional<std::uint32_t> expected_r = std::nullopt);

// ---- graded criteria -------------------------------------------------

/// L_0 = 0 forces solvability; returns the derived length.
std::uint32_t kreknin_check(const Grading& g);

/// L_0 = 0 with prime index modulus forces nilpotency; returns the class.
std::uint32_t higman_check(const Grading& g);

/// [L, L_0, ..., L_0] (m copies) = 0 forces solvability; returns the
/// derived length.
std::uint32_t khukhro_check(const Grading& g, std::uint32_t m);

/// [L, L_a, ..., L_a] (m copies) = 0 for every a (abelian index group)
/// forces nilpotency; returns the class.
std::uint32_t khushu_check(const Grading& g, std::uint32_t m);

/// Metabelian reduction over Z/pZ: given u, v satisfying
///   (1) [L, L_0 x u] = 0 and (2) [[L,L] cap L_0, L_a x v] = 0 for all a,
/// verifies that t(a,b), the minimal t with [[L,L] cap L_b, L_a x t] = 0,
/// obeys t <= v (b = 0), t <= u (a = 0), and t <= v + s where s < p solves
/// b + s a = 0 (mod p) otherwise, then asserts nilpotency through the
/// khushu route and returns the class.
std::uint32_t metabelian_reduction_check(const Grading& g, std::uint32_t u,
                                         std::uint32_t v);

/// Least m >= 0 with [L, X, ..., X] (m copies) = 0; nullopt when the chain
/// stabilizes above zero.
std::optional<std::uint32_t> minimal_ad_degree(const LieRing& l,
                                               const LieSubspace& x);

/// Span T of the h-orbit sums x + x^h + ... + x^(h^{q-1}) over x in L_a;
/// equals the h-fixed subspace of the sum of the components L_{r^i a}.
LieSubspace orbit_sum_subspace(const EigenData& ed, std::uint32_t a);

/// L_a lies inside T + T^phi + ... + T^(phi^{q-1}).
bool t_coverage_check(const EigenData& ed, std::uint32_t a);

/// Exact eigencomponent recovery: given a module automorphism alpha of
/// order n (ring contains omega of order n), exponents t_1 < ... < t_m and
/// z = sum y_{t_i} with alpha(y_{t_i}) = omega^{t_i} y_{t_i}, solves the
/// Vandermonde system in z, z alpha, ..., z alpha^{m-1} and returns the
/// components. SingularSystem when a pivot is not invertible.
std::vector<modmat::Vec> vandermonde_recover(
    const LieRing& l, const LieAutomorphism& alpha, std::uint32_t n,
    const std::vector<std::uint32_t>& exponents, const modmat::Vec& z);

// ---- actions of finite groups on Lie rings ---------------------------

struct LieAction {
  const FiniteGroup* group = nullptr;
  const LieRing* lie = nullptr;
  std::vector<LieAutomorphism> images;  // indexed by group element

  const LieAutomorphism& of(std::uint32_t g) const { return images[g]; }
};

/// Validates every image and the (anti)homomorphism law
/// M[a*b] = M[b] * M[a] (row-vector convention).
LieAction lie_action_from_images(const FiniteGroup& group, const LieRing& l,
                                 std::vector<modmat::Mat> matrices);

LieAction lie_action_from_generator_images(
    const FiniteGroup& group, const LieRing& l,
    const std::map<std::uint16_t, modmat::Mat>& gen_images);

/// Fixed points of a subset of group elements acting on L.
LieSubspace fixed_of_elements(const LieAction& act,
                              const std::vector<std::uint16_t>& elems);

/// Everything needed to run the eigenspace lemmas for a supersolvable
/// Frobenius group acting on a Lie ring: the distinguished central subgroup
/// Z = <z_gen> of prime order p, a generator h_gen of the cyclic complement,
/// and the induced eigen data.
struct FrobeniusLieContext {
  const LieRing* lie = nullptr;
  const FiniteGroup* fh = nullptr;
  FrobeniusStructure fs;
  LieAction action;
  std::uint16_t z_gen = 0;
  std::uint16_t h_gen = 0;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  EigenData eigen;

  /// V_f = C_L(Z H^f).
  LieSubspace v_f(std::uint32_t f) const;
  LieSubspace centralizer_of_kernel() const;
  LieSubspace centralizer_of_complement() const;
};

FrobeniusLieContext make_frobenius_lie_context(const LieRing& l,
                                               FrobeniusStructure fs,
                                               LieAction action);

/// L_0 = sum over f in F of V_f, assuming C_L(F) = 0 and FH supersolvable.
bool v_f_decomposition_check(const FrobeniusLieContext& ctx);

/// For metabelian L: [[L,L] cap V_f, L_a x v] = 0 for all a != 0, with
/// v = (c-1)q + 1 and c the class of C_L(H) (c = 0 is treated as c = 1).
bool lemma36_conjugate_check(const FrobeniusLieContext& ctx, std::uint32_t f);

/// v = (c-1)q + 1 with the degenerate c = 0 treated as c = 1.
std::uint32_t lemma36_v(std::uint32_t c, std::uint32_t q);

}  // namespace frobloc
