#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobloc/grading.hpp"
#include "frobloc/lie.hpp"

namespace frobloc {

/// Deterministic cross-platform generator (splitmix64); avoids
/// implementation-defined standard distributions so seeded corpora are
/// byte-identical everywhere.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform-enough value in [0, k); k > 0.
  std::uint64_t below(std::uint64_t k) { return next() % k; }

private:
  std::uint64_t state_;
};

struct GradedSamplerOptions {
  std::vector<std::uint32_t> moduli = {3};  // index group as tuple of moduli
  std::uint32_t field = 7;                  // prime coefficient field F_l
  std::uint32_t max_rank = 8;
  bool zero_at_origin = true;       // enforce L_0 = 0
  bool require_metabelian = false;  // restrict to derived length <= 2 models
  /// Restrict to the models that are nilpotent by construction. The sparse
  /// model can reach non-nilpotent algebras when L_0 is allowed to be
  /// nonzero (for example [e1, e2] = e1 with e2 of degree 0).
  bool nilpotent_only = false;
  std::uint64_t seed = 0;
};

struct GradedSample {
  LieRing lie;
  Grading grading;
  std::string model;
};

/// Sample #index of the seeded stream. Models mix abelian pieces, random
/// class-2 brackets (Jacobi-free by shape), unitriangular chain algebras
/// with random unit scalings and degree labels, and sparse
/// component-respecting constants kept only when the Jacobi check passes;
/// every sample is finished with a random degree-preserving change of
/// basis, so structure constants are dense and generic while the graded
/// isomorphism class stays certified.
GradedSample random_graded_sample(const GradedSamplerOptions& opt,
                                  std::uint64_t index);

}  // namespace frobloc
