#include <cstdint>
#include <map>
#include <vector>

#include "doctest.h"
#include "frobloc/action.hpp"
#include "frobloc/grading.hpp"
#include "frobloc/group.hpp"
#include "frobloc/lie.hpp"
#include "frobloc/modarith.hpp"
#include "frobloc/randgen.hpp"

using namespace frobloc;
using modmat::Mat;
using modmat::Vec;

namespace {

using Constants = std::map<std::pair<std::uint32_t, std::uint32_t>, Vec>;

LieRing heisenberg_lie_with_root(std::uint32_t l, std::uint32_t p) {
  Constants c;
  c[{0, 1}] = {0, 0, 1};
  return lie_from_structure_constants(make_prime_field_with_root(l, p),
                                      {l, l, l}, c);
}

/// The character-block algebra over F_7: six basis vectors
/// x1, x2, y1, y2, z1, z2 with [x1,y1] = z1 and [x2,y2] = z2, acted on by
/// FH = (Z/3)^2 x| Z/2 (inversion). The F-characters on the blocks are
/// chi1, chi1^-1, chi2, chi2^-1, chi1*chi2, (chi1*chi2)^-1 with
/// chi_i(a, b) = omega^(a or b), omega = 2 in F_7; h swaps each pair.
struct CharBlock {
  FiniteGroup fh;
  FrobeniusStructure fs;
  LieRing lie;
  LieAction action;
};

CharBlock make_char_block() {
  CharBlock cb;
  const FiniteGroup f9 = direct_product(cyclic_group(3), cyclic_group(3));
  const FiniteGroup z2 = cyclic_group(2);
  // inversion on (Z/3)^2
  std::vector<std::uint16_t> invp(9);
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b)
      invp[a * 3 + b] = static_cast<std::uint16_t>(((3 - a) % 3) * 3 + (3 - b) % 3);
  std::vector<std::uint16_t> idp(9);
  for (std::uint32_t i = 0; i < 9; ++i) idp[i] = static_cast<std::uint16_t>(i);
  const auto sd = semidirect_product(
      f9, z2, action_from_images(z2, f9, {idp, invp}));
  cb.fh = sd.group;
  const Subgroup kernel = subgroup_from_members(cb.fh, [&] {
    std::vector<std::uint16_t> m;
    for (std::uint32_t i = 0; i < 9; ++i) m.push_back(static_cast<std::uint16_t>(i * 2));
    return m;
  }());
  const Subgroup comp = subgroup_from_members(cb.fh, {0, 1});
  cb.fs = verify_frobenius(cb.fh, kernel, comp);

  Constants c;
  c[{0, 2}] = {0, 0, 0, 0, 1, 0};  // [x1, y1] = z1
  c[{1, 3}] = {0, 0, 0, 0, 0, 1};  // [x2, y2] = z2
  cb.lie = lie_from_structure_constants(make_prime_field_with_root(7, 3),
                                        {7, 7, 7, 7, 7, 7}, c);

  // generator images: f1 = (1,0) at embedded index 3*2 = 6,
  // f2 = (0,1) at index 1*2 = 2, h at index 1
  const std::uint32_t w = 2;  // omega
  auto diag6 = [&](std::uint32_t a, std::uint32_t b) {
    Mat m(6, Vec(6, 0));
    const std::uint32_t vals[6] = {powmod(w, a, 7),     powmod(w, 3 - a % 3, 7) % 7,
                                   powmod(w, b, 7),     powmod(w, (3 - b % 3) % 3, 7),
                                   powmod(w, a + b, 7), powmod(w, (6 - a - b) % 3, 7)};
    for (std::uint32_t i = 0; i < 6; ++i) m[i][i] = vals[i];
    return m;
  };
  Mat swap6(6, Vec(6, 0));
  swap6[0][1] = swap6[1][0] = swap6[2][3] = swap6[3][2] = swap6[4][5] =
      swap6[5][4] = 1;
  cb.action = lie_action_from_generator_images(
      cb.fh, cb.lie, {{6, diag6(1, 0)}, {2, diag6(0, 1)}, {1, swap6}});
  return cb;
}

}  // namespace

TEST_CASE("eigenspace decomposition of the Heisenberg algebra over F_7") {
  const LieRing h = heisenberg_lie_with_root(7, 3);
  CHECK(h.ring.omega == 2);  // 2 = minimal generator power of order 3 in F_7

  const LieAutomorphism phi =
      lie_automorphism(h, {{2, 0, 0}, {0, 4, 0}, {0, 0, 1}});
  const Grading g = eigenspace_decomposition(h, phi, 3);
  CHECK(g.at({0}) == span_subspace(h, {{0, 0, 1}}));
  CHECK(g.at({1}) == span_subspace(h, {{1, 0, 0}}));
  CHECK(g.at({2}) == span_subspace(h, {{0, 1, 0}}));

  // [L_1, L_2] lands in L_0 as the grading demands
  const LieSubspace br = bracket_of_subspaces(g.at({1}), g.at({2}));
  for (const Vec& v : br.basis) CHECK(g.at({0}).contains(v));
}

TEST_CASE("identity automorphism decomposes as L_0 = L") {
  const LieRing h = heisenberg_lie_with_root(7, 3);
  const Grading g = eigenspace_decomposition(h, identity_lie_automorphism(h), 3);
  CHECK(g.at({0}) == full_subspace(h));
  CHECK(g.at({1}).is_zero());
  CHECK(g.at({2}).is_zero());
}

TEST_CASE("scalar action on an abelian algebra decomposes as L = L_1") {
  const LieRing ab = lie_from_structure_constants(
      make_prime_field_with_root(7, 3), {7, 7}, {});
  const LieAutomorphism phi = lie_automorphism(ab, {{2, 0}, {0, 2}});
  const Grading g = eigenspace_decomposition(ab, phi, 3);
  CHECK(g.at({1}) == full_subspace(ab));
  CHECK(g.at({0}).is_zero());
}

TEST_CASE("verify_grading") {
  const LieRing h = heisenberg_lie_with_root(7, 3);

  std::map<std::vector<std::uint32_t>, LieSubspace> one;
  one[{0}] = full_subspace(h);
  CHECK(verify_grading(make_grading(h, {1}, one)).ok);

  const LieAutomorphism phi =
      lie_automorphism(h, {{2, 0, 0}, {0, 4, 0}, {0, 0, 1}});
  const Grading g = eigenspace_decomposition(h, phi, 3);
  CHECK(verify_grading(g).ok);

  // swapping L_1 and L_2 still grades this algebra (the only nonzero
  // bracket lands in L_0 = L_{1+2} either way) ...
  std::map<std::vector<std::uint32_t>, LieSubspace> swapped;
  swapped[{0}] = g.at({0});
  swapped[{1}] = g.at({2});
  swapped[{2}] = g.at({1});
  CHECK(verify_grading(make_grading(h, {3}, swapped)).ok);

  // ... but mislabeling L_0 <-> L_1 is caught with a witness:
  // [L_0, L_2] = [e1, e2] = e3 would have to land in L_2 = span(e2)
  std::map<std::vector<std::uint32_t>, LieSubspace> bad;
  bad[{0}] = g.at({1});
  bad[{1}] = g.at({0});
  bad[{2}] = g.at({2});
  const GradingCheck chk = verify_grading(make_grading(h, {3}, bad));
  CHECK(!chk.ok);
  CHECK(!chk.witness.empty());
}

TEST_CASE("kreknin_check") {
  // n = 2, L = L_1 abelian: length 1
  const LieRing ab = lie_from_structure_constants(
      make_prime_field_with_root(5, 2), {5, 5}, {});
  std::map<std::vector<std::uint32_t>, LieSubspace> comps;
  comps[{1}] = full_subspace(ab);
  CHECK(kreknin_check(make_grading(ab, {2}, comps)) == 1);

  // hypothesis violation: L_0 != 0
  std::map<std::vector<std::uint32_t>, LieSubspace> at0;
  at0[{0}] = full_subspace(ab);
  CHECK_THROWS_AS(kreknin_check(make_grading(ab, {2}, at0)),
                  HypothesisViolatedError);

  // seeded Z/4 samples with L_0 = 0: always solvable
  GradedSamplerOptions opt;
  opt.moduli = {4};
  opt.field = 5;
  opt.seed = 7;
  for (std::uint64_t i = 0; i < 60; ++i) {
    const GradedSample s = random_graded_sample(opt, i);
    CHECK(kreknin_check(s.grading) >= 0);
  }
}

TEST_CASE("higman_check") {
  // p = 2: class <= 1 always
  {
    GradedSamplerOptions opt;
    opt.moduli = {2};
    opt.field = 5;
    opt.seed = 11;
    for (std::uint64_t i = 0; i < 40; ++i) {
      const GradedSample s = random_graded_sample(opt, i);
      CHECK(higman_check(s.grading) <= 1);
    }
  }
  // p = 3: class <= 2, with nonabelian samples reaching 2
  {
    GradedSamplerOptions opt;
    opt.moduli = {3};
    opt.field = 7;
    opt.seed = 12;
    std::uint32_t max_class = 0;
    for (std::uint64_t i = 0; i < 80; ++i) {
      const GradedSample s = random_graded_sample(opt, i);
      const std::uint32_t cls = higman_check(s.grading);
      CHECK(cls <= 2);
      max_class = std::max(max_class, cls);
    }
    CHECK(max_class == 2);
  }
  // p = 5: nilpotent, classes recorded
  {
    GradedSamplerOptions opt;
    opt.moduli = {5};
    opt.field = 11;
    opt.seed = 13;
    std::uint32_t max_class = 0;
    for (std::uint64_t i = 0; i < 80; ++i) {
      const GradedSample s = random_graded_sample(opt, i);
      max_class = std::max(max_class, higman_check(s.grading));
    }
    CHECK(max_class >= 3);  // the chain models reach class 3+
    CHECK(max_class <= 6);
  }
}

TEST_CASE("khukhro_check") {
  // L_0 = 0 with m = 1 reduces to kreknin
  const LieRing ab = lie_from_structure_constants(
      make_prime_field_with_root(5, 2), {5, 5}, {});
  std::map<std::vector<std::uint32_t>, LieSubspace> comps;
  comps[{1}] = full_subspace(ab);
  const Grading g = make_grading(ab, {2}, comps);
  CHECK(khukhro_check(g, 1) == kreknin_check(g));

  // Heisenberg eigengrading: L_0 is central, so m = 1 and m = 2 both work
  const LieRing h = heisenberg_lie_with_root(7, 3);
  const LieAutomorphism phi =
      lie_automorphism(h, {{2, 0, 0}, {0, 4, 0}, {0, 0, 1}});
  const Grading hg = eigenspace_decomposition(h, phi, 3);
  CHECK(khukhro_check(hg, 1) == 2);
  CHECK(khukhro_check(hg, 2) == 2);

  // hypothesis failure reported
  std::map<std::vector<std::uint32_t>, LieSubspace> whole;
  whole[{0}] = full_subspace(h);
  CHECK_THROWS_AS(khukhro_check(make_grading(h, {3}, whole), 1),
                  HypothesisViolatedError);
}

TEST_CASE("khushu_check") {
  // all components central: class <= 1
  const LieRing ab = lie_from_structure_constants(
      make_prime_field_with_root(7, 3), {7, 7}, {});
  std::map<std::vector<std::uint32_t>, LieSubspace> comps;
  comps[{1, 0}] = span_subspace(ab, {{1, 0}});
  comps[{0, 1}] = span_subspace(ab, {{0, 1}});
  const Grading g = make_grading(ab, {2, 2}, comps);
  CHECK(khushu_check(g, 1) <= 1);

  // Heisenberg eigengrading with m = 2
  const LieRing h = heisenberg_lie_with_root(7, 3);
  const LieAutomorphism phi =
      lie_automorphism(h, {{2, 0, 0}, {0, 4, 0}, {0, 0, 1}});
  CHECK(khushu_check(eigenspace_decomposition(h, phi, 3), 2) == 2);

  // random samples with the enforced hypothesis, over a tuple index group
  GradedSamplerOptions opt;
  opt.moduli = {2, 3};
  opt.field = 7;
  opt.seed = 21;
  opt.zero_at_origin = false;
  opt.nilpotent_only = true;
  for (std::uint64_t i = 0; i < 40; ++i) {
    const GradedSample s = random_graded_sample(opt, i);
    // nilpotent by construction: measure a sufficient m, then check
    std::uint32_t m = 1;
    for (const auto& [idx, comp] : s.grading.components) {
      const auto deg = minimal_ad_degree(s.lie, comp);
      REQUIRE(deg.has_value());
      m = std::max(m, *deg);
    }
    CHECK(khushu_check(s.grading, m) >= 1);
  }
}

TEST_CASE("minimal_ad_degree") {
  const LieRing h = heisenberg_lie_with_root(7, 3);
  CHECK(minimal_ad_degree(h, zero_subspace(h)) == 1);
  CHECK(minimal_ad_degree(h, span_subspace(h, {{0, 0, 1}})) == 1);
  CHECK(minimal_ad_degree(h, full_subspace(h)) == 2);

  const LieRing zero = lie_from_structure_constants(make_prime_field(5), {}, {});
  CHECK(minimal_ad_degree(zero, zero_subspace(zero)) == 0);

  // non-nilpotent: [e1,e2] = e1, adX with X = <e2> never dies
  std::map<std::pair<std::uint32_t, std::uint32_t>, Vec> c;
  c[{0, 1}] = {1, 0};
  const LieRing aff = lie_from_structure_constants(make_prime_field(5), {5, 5}, c);
  CHECK(!minimal_ad_degree(aff, span_subspace(aff, {{0, 1}})).has_value());
}

TEST_CASE("metabelian reduction over Z/pZ") {
  // the p = 3 eigengrading of the Heisenberg algebra is metabelian;
  // measure u and v, then run the reduction
  const LieRing h = heisenberg_lie_with_root(7, 3);
  const LieAutomorphism phi =
      lie_automorphism(h, {{2, 0, 0}, {0, 4, 0}, {0, 0, 1}});
  const Grading g = eigenspace_decomposition(h, phi, 3);
  const auto u = minimal_ad_degree(h, g.at({0}));
  REQUIRE(u.has_value());
  // measure v: max over a of the ad-degree of [L,L] cap L_0 by L_a
  const LieSubspace derived = bracket_of_subspaces(full_subspace(h), full_subspace(h));
  const LieSubspace l0p = intersect_subspaces(derived, g.at({0}));
  std::uint32_t v = 1;
  for (std::uint32_t a = 0; a < 3; ++a) {
    LieSubspace cur = l0p;
    std::uint32_t t = 0;
    while (!cur.is_zero()) {
      cur = bracket_of_subspaces(cur, g.at({a}));
      ++t;
    }
    v = std::max(v, std::max(t, 1u));
  }
  CHECK(metabelian_reduction_check(g, *u, v) == 2);

  // violated hypothesis: v = 0 cannot satisfy condition (2) when
  // [L,L] cap L_0 is nonzero
  CHECK_THROWS_AS(metabelian_reduction_check(g, *u, 0), HypothesisViolatedError);

  // seeded metabelian samples: measured (u, v) always pass
  GradedSamplerOptions opt;
  opt.moduli = {3};
  opt.field = 7;
  opt.seed = 31;
  opt.zero_at_origin = false;
  opt.require_metabelian = true;
  for (std::uint64_t i = 0; i < 40; ++i) {
    const GradedSample s = random_graded_sample(opt, i);
    const auto dl = derived_length_lie(s.lie);
    REQUIRE(dl.has_value());
    if (*dl > 2) continue;
    const auto su = minimal_ad_degree(s.lie, s.grading.at({0}));
    REQUIRE(su.has_value());
    const LieSubspace sd =
        bracket_of_subspaces(full_subspace(s.lie), full_subspace(s.lie));
    std::uint32_t sv = 1;
    for (std::uint32_t a = 0; a < 3; ++a) {
      LieSubspace cur = intersect_subspaces(sd, s.grading.at({0}));
      std::uint32_t t = 0;
      while (!cur.is_zero()) {
        cur = bracket_of_subspaces(cur, s.grading.at({a}));
        ++t;
      }
      sv = std::max(sv, std::max(t, 1u));
    }
    CHECK(metabelian_reduction_check(s.grading, std::max(*su, 1u), sv) >= 1);
  }
}

TEST_CASE("orbit sums and phi-translate coverage") {
  const CharBlock cb = make_char_block();
  const FrobeniusLieContext ctx =
      make_frobenius_lie_context(cb.lie, cb.fs, cb.action);
  CHECK(ctx.p == 3);
  CHECK(ctx.q == 2);
  CHECK(ctx.eigen.r == 2);  // inversion: L_i -> L_{-i}

  for (std::uint32_t a = 1; a < 3; ++a) {
    const LieSubspace t = orbit_sum_subspace(ctx.eigen, a);
    // oracle: T equals the h-fixed subspace of L_a + L_{ra}
    const LieSubspace sum =
        sum_subspaces(ctx.eigen.component(a), ctx.eigen.component((ctx.eigen.r * a) % 3));
    const LieSubspace hfix = fixed_subalgebra(*ctx.lie, {ctx.eigen.h_action});
    const LieSubspace expected = intersect_subspaces(sum, hfix);
    CHECK(t == expected);
    CHECK(t_coverage_check(ctx.eigen, a));
  }

  // q = 1: trivial complement, T = L_a
  const LieRing h = heisenberg_lie_with_root(7, 3);
  const LieAutomorphism phi =
      lie_automorphism(h, {{2, 0, 0}, {0, 4, 0}, {0, 0, 1}});
  const EigenData ed =
      make_eigen_data(h, phi, identity_lie_automorphism(h), 3, 1);
  for (std::uint32_t a = 1; a < 3; ++a) {
    CHECK(orbit_sum_subspace(ed, a) == ed.component(a));
    CHECK(t_coverage_check(ed, a));
  }

  // L_a = 0 gives T = 0: use the trivial-phi grading where L_1 = 0
  const EigenData ed0 = make_eigen_data(h, identity_lie_automorphism(h),
                                        identity_lie_automorphism(h), 3, 1);
  CHECK(orbit_sum_subspace(ed0, 1).is_zero());
}

TEST_CASE("H-permutation law: components map exactly onto L_{ri}") {
  const CharBlock cb = make_char_block();
  const FrobeniusLieContext ctx =
      make_frobenius_lie_context(cb.lie, cb.fs, cb.action);
  for (std::uint32_t i = 0; i < 3; ++i) {
    const LieSubspace img =
        apply_to_subspace(ctx.eigen.h_action, ctx.eigen.component(i));
    CHECK(img == ctx.eigen.component((ctx.eigen.r * i) % 3));
  }
  // conjugates h^f induce the same permutation of components
  for (auto f : ctx.fs.kernel.members) {
    const std::uint16_t hf =
        ctx.fh->mul(ctx.fh->mul(f, ctx.h_gen), ctx.fh->inv(f));
    for (std::uint32_t i = 0; i < 3; ++i) {
      const LieSubspace img =
          apply_to_subspace(ctx.action.of(hf), ctx.eigen.component(i));
      CHECK(img == ctx.eigen.component((ctx.eigen.r * i) % 3));
    }
  }
}

TEST_CASE("V_f decomposition of L_0") {
  const CharBlock cb = make_char_block();
  const FrobeniusLieContext ctx =
      make_frobenius_lie_context(cb.lie, cb.fs, cb.action);
  // the kernel has trivial fixed points on L
  CHECK(ctx.centralizer_of_kernel().is_zero());
  CHECK(v_f_decomposition_check(ctx));

  // nontrivial: single V_f's are strictly smaller than L_0
  const LieSubspace l0 = ctx.eigen.component(0);
  CHECK(!l0.is_zero());
  bool some_proper = false;
  for (auto f : ctx.fs.kernel.members)
    some_proper = some_proper || ctx.v_f(f).size() < l0.size();
  CHECK(some_proper);
}

TEST_CASE("lemma36 conjugate check with v = (c-1)q + 1") {
  CHECK(lemma36_v(1, 1) == 1);
  CHECK(lemma36_v(1, 2) == 1);
  CHECK(lemma36_v(2, 2) == 3);
  CHECK(lemma36_v(3, 2) == 5);
  CHECK(lemma36_v(0, 5) == 1);  // degenerate trivial centralizer

  const CharBlock cb = make_char_block();
  const FrobeniusLieContext ctx =
      make_frobenius_lie_context(cb.lie, cb.fs, cb.action);
  // C_L(H) here is a rank-3 Heisenberg: class 2, so v = 3
  CHECK(subalgebra_class(ctx.centralizer_of_complement()) == 2);
  for (auto f : ctx.fs.kernel.members) CHECK(lemma36_conjugate_check(ctx, f));
}

TEST_CASE("vandermonde recovery") {
  // m = 1: y = z
  const LieRing ab2 = lie_from_structure_constants(
      make_prime_field_with_root(5, 2), {5, 5}, {});
  const LieAutomorphism neg = lie_automorphism(ab2, {{4, 0}, {0, 4}});
  const Vec z1 = {3, 2};
  const auto rec1 = vandermonde_recover(ab2, neg, 2, {1}, z1);
  REQUIRE(rec1.size() == 1);
  CHECK(rec1[0] == z1);

  // n = 2: y_0 = (z + z alpha)/2, y_1 = (z - z alpha)/2 over F_5
  const LieAutomorphism a2 = lie_automorphism(ab2, {{1, 0}, {0, 4}});
  // y0 = (2,0) in the +1 eigenspace, y1 = (0,3) in the -1 eigenspace
  const Vec z = {2, 3};
  const auto rec = vandermonde_recover(ab2, a2, 2, {0, 1}, z);
  REQUIRE(rec.size() == 2);
  CHECK(rec[0] == Vec{2, 0});
  CHECK(rec[1] == Vec{0, 3});

  // random planted instances over F_7, n = 3
  const LieRing ab3 = lie_from_structure_constants(
      make_prime_field_with_root(7, 3), {7, 7, 7}, {});
  const std::uint32_t w = *ab3.ring.omega;
  const LieAutomorphism a3 = lie_automorphism(
      ab3, {{1, 0, 0}, {0, w, 0}, {0, 0, powmod(w, 2, 7)}});
  SplitMix64 rng(77);
  for (int it = 0; it < 50; ++it) {
    Vec y0 = {static_cast<std::uint32_t>(rng.below(7)), 0, 0};
    Vec y1 = {0, static_cast<std::uint32_t>(rng.below(7)), 0};
    Vec y2 = {0, 0, static_cast<std::uint32_t>(rng.below(7))};
    Vec zz(3);
    for (int k = 0; k < 3; ++k) zz[k] = addmod(addmod(y0[k], y1[k], 7), y2[k], 7);
    const auto rec3 = vandermonde_recover(ab3, a3, 3, {0, 1, 2}, zz);
    REQUIRE(rec3.size() == 3);
    CHECK(rec3[0] == y0);
    CHECK(rec3[1] == y1);
    CHECK(rec3[2] == y2);
  }

  // repeated exponents: singular system
  CHECK_THROWS_AS(vandermonde_recover(ab3, a3, 3, {1, 1}, {1, 1, 0}),
                  SingularSystemError);
}

TEST_CASE("vandermonde recovery over Z/25 with n = 4") {
  // omega = 7 has order 4 mod 25; blockwise scalar action
  CoefficientRing z25 = make_cyclic_ring(5, 2);
  attach_root(z25, 7, 4);
  const LieRing l = lie_from_structure_constants(z25, {25, 25}, {});
  const LieAutomorphism alpha = lie_automorphism(l, {{7, 0}, {0, powmod(7, 3, 25)}});
  SplitMix64 rng(5);
  for (int it = 0; it < 20; ++it) {
    const Vec y1 = {static_cast<std::uint32_t>(rng.below(25)), 0};
    const Vec y3 = {0, static_cast<std::uint32_t>(rng.below(25))};
    const Vec z = {y1[0], y3[1]};
    const auto rec = vandermonde_recover(l, alpha, 4, {1, 3}, z);
    REQUIRE(rec.size() == 2);
    CHECK(rec[0] == y1);
    CHECK(rec[1] == y3);
  }
}

TEST_CASE("eigenprojection identities (sum to I, pairwise orthogonal)") {
  // exercised internally by eigenspace_decomposition; a broken phi (order
  // not p) must be rejected
  const LieRing h = heisenberg_lie_with_root(7, 3);
  const LieAutomorphism bad =
      lie_automorphism(h, {{3, 0, 0}, {0, 5, 0}, {0, 0, 1}});  // order 6
  CHECK_THROWS_AS(eigenspace_decomposition(h, bad, 3), NotOrderPError);

  const LieRing no_root = lie_from_structure_constants(make_prime_field(5),
                                                       {5, 5}, {});
  const LieAutomorphism id2 = identity_lie_automorphism(no_root);
  CHECK_THROWS_AS(eigenspace_decomposition(no_root, id2, 3), NoRootOfUnityError);
}
