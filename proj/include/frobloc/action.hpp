#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "frobloc/group.hpp"

namespace frobloc {

/// A single automorphism of a finite group, stored as a full permutation
/// of element indices.
struct Automorphism {
  const FiniteGroup* target = nullptr;
  std::vector<std::uint16_t> image;

  std::uint16_t apply(std::uint32_t x) const { return image[x]; }
};

/// Validates bijectivity and the homomorphism law on all pairs.
Automorphism automorphism_from_permutation(const FiniteGroup& target,
                                           std::vector<std::uint16_t> image);

Automorphism identity_automorphism(const FiniteGroup& target);
Automorphism compose(const Automorphism& f, const Automorphism& g);  // f o g
Automorphism inverse_automorphism(const Automorphism& f);

/// An action of `actor` on `target` by automorphisms: one automorphism per
/// actor element, with images[a*b] = images[a] o images[b].
struct ActionHom {
  const FiniteGroup* actor = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<Automorphism> images;  // indexed by actor element

  std::uint16_t apply(std::uint32_t a, std::uint32_t x) const {
    return images[a].image[x];
  }
};

/// Full map: every actor element's permutation given and verified.
ActionHom action_from_images(const FiniteGroup& actor, const FiniteGroup& target,
                             std::vector<std::vector<std::uint16_t>> images);

/// Some elements' permutations given; the rest are filled in by closure over
/// products. The given elements must generate the actor, and any element
/// reached twice must agree, otherwise InvalidAction.
ActionHom action_from_generator_images(
    const FiniteGroup& actor, const FiniteGroup& target,
    const std::map<std::uint16_t, std::vector<std::uint16_t>>& gen_images);

/// Subgroup of target fixed by every images[s], s in S.
Subgroup fixed_point_subgroup(const ActionHom& act,
                              const std::vector<std::uint16_t>& s);

/// Semidirect product N x| H for an action of H on N by automorphisms.
/// Pairs (n, h) are encoded as n*|H| + h.
struct SemidirectProduct {
  FiniteGroup group;
  Subgroup embedded_n;  // normal copy of N
  Subgroup embedded_h;  // copy of H
};
SemidirectProduct semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                                     const ActionHom& act);

/// A verified Frobenius group: kernel normal, complement a complement,
/// conjugation of every nontrivial complement element fixed-point-free on
/// the kernel. Supersolvability of the whole group and cyclicity of the
/// complement are measured at construction, never assumed.
struct FrobeniusStructure {
  const FiniteGroup* group = nullptr;
  Subgroup kernel;
  Subgroup complement;
  bool supersolvable = false;
  bool cyclic_complement = false;
};

FrobeniusStructure verify_frobenius(const FiniteGroup& group,
                                    const Subgroup& kernel,
                                    const Subgroup& complement);

/// A prime-order subgroup of the center of the kernel, normal in the whole
/// group; the generator of minimal element index among valid candidates.
/// NoSuchSubgroup when none exists (the supersolvability hypothesis failed).
Subgroup central_prime_subgroup(const FrobeniusStructure& fs);

struct InducedQuotientAction {
  QuotientGroup quot;
  ActionHom action;  // same actor, acting on quot.quotient
};

/// Action induced on target/N; N must be normal and invariant under every
/// automorphism of the action.
InducedQuotientAction induced_quotient_action(const ActionHom& act,
                                              const Subgroup& n);

/// Fixed points stay trivial in quotients by invariant normal subgroups
/// (nilpotent actor, trivial fixed points). A false return is a bug witness.
bool lemma_ker_check(const ActionHom& act, const Subgroup& n);

/// Fixed points of the complement in G/N equal the image of C_G(H)N, for an
/// FH-invariant normal N with C_N(F) = 1.
bool lemma_com_check(const FrobeniusStructure& fs, const ActionHom& act,
                     const Subgroup& n);

/// For a nilpotent actor acting on a p-group with trivial fixed points, the
/// Hall p'-part of the actor already has trivial fixed points.
bool lemma_coprime_check(const ActionHom& act);

/// N = < C_N(B^y) : y in K > for a Frobenius group KB acting on N with
/// C_N(K) = 1.
bool frobenius_generation_check(const FrobeniusStructure& fs,
                                const ActionHom& act);

}  // namespace frobloc
