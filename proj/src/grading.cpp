#include "frobloc/grading.hpp"

#include <algorithm>
#include <numeric>

#include "frobloc/kernels.hpp"

namespace frobloc {

using modmat::Mat;
using modmat::Vec;

std::vector<std::uint32_t> Grading::add_indices(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
  std::vector<std::uint32_t> out(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i)
    out[i] = (a[i] + b[i]) % moduli[i];
  return out;
}

const LieSubspace& Grading::at(const std::vector<std::uint32_t>& idx) const {
  return components.at(idx);
}

std::vector<std::vector<std::uint32_t>> Grading::all_indices() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(moduli.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t pos = 0;
    while (pos < moduli.size() && ++cur[pos] == moduli[pos]) cur[pos++] = 0;
    if (pos == moduli.size()) break;
  }
  return out;
}

std::uint32_t Grading::nonzero_component_count() const {
  std::uint32_t d = 0;
  for (const auto& [idx, comp] : components)
    if (!comp.is_zero()) ++d;
  return d;
}

Grading make_grading(const LieRing& l, std::vector<std::uint32_t> moduli,
                     std::map<std::vector<std::uint32_t>, LieSubspace> comps) {
  Grading g;
  g.parent = &l;
  g.moduli = std::move(moduli);
  if (g.moduli.empty()) throw Error("grading needs at least one index modulus");
  for (auto m : g.moduli)
    if (m == 0) throw Error("grading index modulus must be positive");
  for (const auto& idx : g.all_indices()) {
    auto it = comps.find(idx);
    g.components[idx] = it == comps.end() ? zero_subspace(l) : it->second;
  }
  for (const auto& [idx, comp] : comps)
    if (g.components.find(idx) == g.components.end())
      throw Error("grading component index out of range");
  return g;
}

GradingCheck verify_grading(const Grading& g) {
  const LieRing& l = *g.parent;
  // joint span and independence: sizes multiply to the module size
  Mat all;
  std::uint64_t product = 1;
  for (const auto& [idx, comp] : g.components) {
    for (const Vec& v : comp.basis) all.push_back(v);
    product *= comp.size();
  }
  const LieSubspace joint = span_subspace(l, all);
  if (joint.size() != l.module_size())
    return {false, "components do not span the module"};
  if (product != l.module_size())
    return {false, "components are not independent"};
  for (const auto& [ia, ca] : g.components) {
    if (ca.is_zero()) continue;
    for (const auto& [ib, cb] : g.components) {
      if (cb.is_zero()) continue;
      const LieSubspace br = bracket_of_subspaces(ca, cb);
      const LieSubspace& target = g.at(g.add_indices(ia, ib));
      for (const Vec& v : br.basis)
        if (!target.contains(v)) {
          std::string wa, wb;
          for (auto x : ia) wa += (wa.empty() ? "" : ",") + std::to_string(x);
          for (auto x : ib) wb += (wb.empty() ? "" : ",") + std::to_string(x);
          return {false, "[L_(" + wa + "), L_(" + wb + ")] escapes its component"};
        }
    }
  }
  return {};
}

Grading eigenspace_decomposition(const LieRing& l, const LieAutomorphism& phi,
                                 std::uint32_t p) {
  const std::uint32_t m = l.ring.modulus;
  if (!l.ring.omega || l.ring.omega_order != p)
    throw NoRootOfUnityError("coefficient ring carries no root of unity of order " +
                             std::to_string(p));
  if (!is_prime(p)) throw NotOrderPError("eigenspace order must be prime");
  const std::uint32_t omega = *l.ring.omega;
  // phi^p = identity
  if (modmat::matpow(phi.matrix, p, m) != modmat::identity(l.rank, m))
    throw NotOrderPError("phi^p is not the identity");
  const std::uint32_t pinv = invmod(p % m, m);

  std::vector<Mat> powers(p);
  powers[0] = modmat::identity(l.rank, m);
  for (std::uint32_t j = 1; j < p; ++j)
    powers[j] = modmat::matmul(powers[j - 1], phi.matrix, m);

  std::vector<Mat> projections(p);
  for (std::uint32_t i = 0; i < p; ++i) {
    Mat pi(l.rank, Vec(l.rank, 0));
    for (std::uint32_t j = 0; j < p; ++j) {
      const std::uint32_t coef =
          mulmod(pinv, powmod(invmod(omega, m), std::uint64_t(i) * j, m), m);
      for (std::uint32_t row = 0; row < l.rank; ++row)
        kernels::axpy_mod(pi[row].data(), powers[j][row].data(), coef, l.rank, m);
    }
    projections[i] = std::move(pi);
  }

  // projection identities: sum = I, products vanish
  Mat total(l.rank, Vec(l.rank, 0));
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::uint32_t row = 0; row < l.rank; ++row)
      kernels::axpy_mod(total[row].data(), projections[i][row].data(), 1, l.rank, m);
  if (total != modmat::identity(l.rank, m))
    throw Error("eigenprojections do not sum to the identity");
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::uint32_t j = 0; j < p; ++j) {
      const Mat prod = modmat::matmul(projections[i], projections[j], m);
      if (i != j && !modmat::is_zero_mat(prod))
        throw Error("eigenprojections are not orthogonal");
      if (i == j && prod != projections[i])
        throw Error("eigenprojection is not idempotent");
    }

  std::map<std::vector<std::uint32_t>, LieSubspace> comps;
  for (std::uint32_t i = 0; i < p; ++i) {
    Mat gens;
    for (std::uint32_t row = 0; row < l.rank; ++row) {
      // image of the basis vector e_row under pi_i, in natural coordinates
      Vec x = l.basis_vector(row);
      gens.push_back(l.reduce(modmat::vecmat(x, projections[i], m)));
    }
    comps[{i}] = span_subspace(l, gens);
  }
  Grading g = make_grading(l, {p}, std::move(comps));
  const GradingCheck chk = verify_grading(g);
  if (!chk.ok) throw Error("eigenspace decomposition is not a grading: " + chk.witness);
  return g;
}

EigenData make_eigen_data(const LieRing& l, const LieAutomorphism& phi,
                          const LieAutomorphism& h, std::uint32_t p,
                          std::uint32_t q,
                          std::optional<std::uint32_t> expected_r) {
  const std::uint32_t m = l.ring.modulus;
  if (modmat::matpow(h.matrix, q, m) != modmat::identity(l.rank, m))
    throw Error("complement action: h^q is not the identity");
  EigenData ed;
  ed.grading = eigenspace_decomposition(l, phi, p);
  ed.phi = phi;
  ed.h_action = h;
  ed.omega = *l.ring.omega;
  ed.p = p;
  ed.q = q;

  std::vector<std::uint32_t> candidates;
  if (expected_r) {
    candidates.push_back(*expected_r % p);
  } else {
    for (std::uint32_t r = 1; r < p; ++r)
      if (multiplicative_order(r, p) == q) candidates.push_back(r);
    if (q == 1) candidates.push_back(1);
  }
  for (std::uint32_t r : candidates) {
    if (q > 1 && multiplicative_order(r % p, p) != q) continue;
    bool ok = true;
    for (std::uint32_t i = 0; i < p && ok; ++i)
      ok = apply_to_subspace(h, ed.grading.at({i})) ==
           ed.grading.at({(std::uint64_t(r) * i) % p});
    if (ok) {
      ed.r = r % p;
      return ed;
    }
  }
  throw Error("complement action does not permute eigencomponents by a "
              "primitive q-th root of unity");
}

namespace {

void require_valid_grading(const Grading& g) {
  const GradingCheck chk = verify_grading(g);
  if (!chk.ok) throw HypothesisViolatedError("invalid grading: " + chk.witness);
}

std::vector<std::uint32_t> zero_index(const Grading& g) {
  return std::vector<std::uint32_t>(g.moduli.size(), 0);
}

}  // namespace

std::uint32_t kreknin_check(const Grading& g) {
  require_valid_grading(g);
  if (!g.at(zero_index(g)).is_zero())
    throw HypothesisViolatedError("kreknin: component at 0 is nonzero");
  const auto dl = derived_length_lie(*g.parent);
  if (!dl)
    throw TheoremViolatedError(
        "kreknin: graded Lie ring with L_0 = 0 is not solvable");
  return *dl;
}

std::uint32_t higman_check(const Grading& g) {
  require_valid_grading(g);
  if (g.moduli.size() != 1 || !is_prime(g.moduli[0]))
    throw HypothesisViolatedError("higman: index modulus must be prime");
  if (!g.at(zero_index(g)).is_zero())
    throw HypothesisViolatedError("higman: component at 0 is nonzero");
  const auto cls = nilpotency_class_lie(*g.parent);
  if (!cls)
    throw TheoremViolatedError(
        "higman: Z/pZ-graded Lie ring with L_0 = 0 is not nilpotent");
  return *cls;
}

std::uint32_t khukhro_check(const Grading& g, std::uint32_t m) {
  require_valid_grading(g);
  const LieSubspace l0 = g.at(zero_index(g));
  if (!iterated_commutator(full_subspace(*g.parent), l0, m).is_zero())
    throw HypothesisViolatedError(
        "khukhro: [L, L_0 x " + std::to_string(m) + "] is nonzero");
  const auto dl = derived_length_lie(*g.parent);
  if (!dl) throw TheoremViolatedError("khukhro: hypothesis held but L is not solvable");
  return *dl;
}

std::uint32_t khushu_check(const Grading& g, std::uint32_t m) {
  require_valid_grading(g);
  const LieSubspace full = full_subspace(*g.parent);
  for (const auto& [idx, comp] : g.components) {
    if (!iterated_commutator(full, comp, m).is_zero()) {
      std::string w;
      for (auto x : idx) w += (w.empty() ? "" : ",") + std::to_string(x);
      throw HypothesisViolatedError("khushu: [L, L_(" + w + ") x " +
                                    std::to_string(m) + "] is nonzero");
    }
  }
  const auto cls = nilpotency_class_lie(*g.parent);
  if (!cls) throw TheoremViolatedError("khushu: hypothesis held but L is not nilpotent");
  return *cls;
}

namespace {

// minimal t with [X, Y x t] = 0, or nullopt when the chain stabilizes
std::optional<std::uint32_t> ad_degree_of(const LieSubspace& x,
                                          const LieSubspace& y) {
  LieSubspace cur = x;
  std::uint32_t t = 0;
  while (!cur.is_zero()) {
    LieSubspace next = bracket_of_subspaces(cur, y);
    if (next == cur) return std::nullopt;
    cur = std::move(next);
    ++t;
  }
  return t;
}

}  // namespace

std::uint32_t metabelian_reduction_check(const Grading& g, std::uint32_t u,
                                         std::uint32_t v) {
  require_valid_grading(g);
  if (g.moduli.size() != 1 || !is_prime(g.moduli[0]))
    throw HypothesisViolatedError("metabelian reduction: index modulus must be prime");
  const std::uint32_t p = g.moduli[0];
  const LieRing& l = *g.parent;
  const auto dl = derived_length_lie(l);
  if (!dl || *dl > 2)
    throw HypothesisViolatedError("metabelian reduction: L is not metabelian");
  const LieSubspace full = full_subspace(l);
  const LieSubspace derived = bracket_of_subspaces(full, full);
  const LieSubspace l0 = g.at({0});
  if (!iterated_commutator(full, l0, u).is_zero())
    throw HypothesisViolatedError("metabelian reduction: condition (1) fails at u=" +
                                  std::to_string(u));
  for (std::uint32_t a = 0; a < p; ++a) {
    const LieSubspace l0p = intersect_subspaces(derived, l0);
    if (!iterated_commutator(l0p, g.at({a}), v).is_zero())
      throw HypothesisViolatedError(
          "metabelian reduction: condition (2) fails at a=" + std::to_string(a) +
          ", v=" + std::to_string(v));
  }

  std::uint32_t max_t = 0;
  for (std::uint32_t b = 0; b < p; ++b) {
    const LieSubspace lbp = intersect_subspaces(derived, g.at({b}));
    for (std::uint32_t a = 0; a < p; ++a) {
      const auto t = ad_degree_of(lbp, g.at({a}));
      if (!t)
        throw BoundViolatedError("metabelian reduction: [L_b', L_a x t] never "
                                 "vanishes at (a,b)=(" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
      std::uint32_t bound;
      if (b == 0) {
        bound = v;
      } else if (a == 0) {
        bound = u;
      } else {
        // s < p with b + s a = 0 (mod p)
        const std::uint32_t s =
            mulmod(negmod(b, p), invmod(a, p), p);
        bound = v + s;
      }
      if (*t > bound)
        throw BoundViolatedError("metabelian reduction: t(a,b) = " +
                                 std::to_string(*t) + " exceeds bound " +
                                 std::to_string(bound) + " at (a,b)=(" +
                                 std::to_string(a) + "," + std::to_string(b) + ")");
      max_t = std::max(max_t, *t);
    }
  }
  // nilpotency through the khushu criterion: [L, L_a x (max_t + 1)] = 0
  return khushu_check(g, max_t + 1);
}

std::optional<std::uint32_t> minimal_ad_degree(const LieRing& l,
                                               const LieSubspace& x) {
  return ad_degree_of(full_subspace(l), x);
}

LieSubspace orbit_sum_subspace(const EigenData& ed, std::uint32_t a) {
  const LieRing& l = *ed.grading.parent;
  a %= ed.p;
  if (a == 0) throw HypothesisViolatedError("orbit_sum_subspace requires a != 0");
  Mat gens;
  for (const Vec& x : ed.grading.at({a}).basis) {
    Vec sum = x;
    Vec cur = x;
    for (std::uint32_t j = 1; j < ed.q; ++j) {
      cur = ed.h_action.apply(cur);
      for (std::uint32_t k = 0; k < l.rank; ++k)
        sum[k] = addmod(sum[k], cur[k], l.orders[k]);
    }
    gens.push_back(std::move(sum));
  }
  return span_subspace(l, gens);
}

bool t_coverage_check(const EigenData& ed, std::uint32_t a) {
  const LieRing& l = *ed.grading.parent;
  a %= ed.p;
  if (a == 0) throw HypothesisViolatedError("t_coverage_check requires a != 0");
  const LieSubspace t = orbit_sum_subspace(ed, a);
  LieSubspace cover = t;
  LieSubspace cur = t;
  for (std::uint32_t j = 1; j < ed.q; ++j) {
    cur = apply_to_subspace(ed.phi, cur);
    cover = sum_subspaces(cover, cur);
  }
  for (const Vec& x : ed.grading.at({a}).basis)
    if (!cover.contains(x)) return false;
  return true;
}

std::vector<Vec> vandermonde_recover(const LieRing& l,
                                     const LieAutomorphism& alpha,
                                     std::uint32_t n,
                                     const std::vector<std::uint32_t>& exponents,
                                     const Vec& z) {
  const std::uint32_t m = l.ring.modulus;
  if (!l.ring.omega || l.ring.omega_order != n)
    throw NoRootOfUnityError("vandermonde recovery needs omega of order " +
                             std::to_string(n));
  const std::uint32_t omega = *l.ring.omega;
  const std::size_t k = exponents.size();
  if (k == 0) return {};

  // rows of the right-hand side: z alpha^j in scaled coordinates
  Mat rhs;
  Vec cur = l.reduce(z);
  for (std::size_t j = 0; j < k; ++j) {
    rhs.push_back(l.scale_up(cur));
    cur = alpha.apply(cur);
  }
  // Vandermonde matrix V[j][i] = omega^{t_i j}
  Mat v(k, Vec(k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i)
      v[j][i] = powmod(omega, std::uint64_t(exponents[i]) * j, m);

  // Gaussian elimination with unit pivots on [V | rhs]
  for (std::size_t col = 0; col < k; ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t row = col; row < k; ++row)
      if (try_invmod(v[row][col], m)) {
        pivot = row;
        break;
      }
    if (!pivot)
      throw SingularSystemError(
          "vandermonde system has no invertible pivot in column " +
          std::to_string(col));
    std::swap(v[col], v[*pivot]);
    std::swap(rhs[col], rhs[*pivot]);
    const std::uint32_t inv = invmod(v[col][col], m);
    kernels::scale_mod(v[col].data(), inv, k, m);
    kernels::scale_mod(rhs[col].data(), inv, l.rank, m);
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || v[row][col] == 0) continue;
      const std::uint32_t c = negmod(v[row][col], m);
      kernels::axpy_mod(v[row].data(), v[col].data(), c, k, m);
      kernels::axpy_mod(rhs[row].data(), rhs[col].data(), c, l.rank, m);
    }
  }
  std::vector<Vec> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(l.scale_down(rhs[i]));
  return out;
}

LieAction lie_action_from_images(const FiniteGroup& group, const LieRing& l,
                                 std::vector<Mat> matrices) {
  if (matrices.size() != group.order)
    throw InvalidActionError("lie action: one matrix per group element required");
  LieAction act;
  act.group = &group;
  act.lie = &l;
  act.images.reserve(group.order);
  for (auto& mt : matrices) act.images.push_back(lie_automorphism(l, std::move(mt)));
  const std::uint32_t m = l.ring.modulus;
  if (act.images[0].matrix != modmat::identity(l.rank, m))
    throw InvalidActionError("lie action: identity must act trivially");
  for (std::uint32_t a = 0; a < group.order; ++a)
    for (std::uint32_t b = 0; b < group.order; ++b) {
      // apply(ab, x) = apply(a, apply(b, x)) = x M_b M_a
      const Mat prod = modmat::matmul(act.images[b].matrix, act.images[a].matrix, m);
      if (act.images[group.mul(a, b)].matrix != prod)
        throw InvalidActionError("lie action: homomorphism law fails at (" +
                                 std::to_string(a) + "," + std::to_string(b) + ")");
    }
  return act;
}

LieAction lie_action_from_generator_images(
    const FiniteGroup& group, const LieRing& l,
    const std::map<std::uint16_t, Mat>& gen_images) {
  const std::uint32_t m = l.ring.modulus;
  std::vector<Mat> mats(group.order);
  std::vector<std::uint8_t> known(group.order, 0);
  mats[0] = modmat::identity(l.rank, m);
  known[0] = 1;
  for (const auto& [g, mt] : gen_images) {
    if (g >= group.order) throw InvalidActionError("generator index out of range");
    mats[g] = mt;
    known[g] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t a = 0; a < group.order; ++a) {
      if (!known[a]) continue;
      for (std::uint32_t b = 0; b < group.order; ++b) {
        if (!known[b]) continue;
        const std::uint16_t c = group.mul(a, b);
        const Mat prod = modmat::matmul(mats[b], mats[a], m);
        if (!known[c]) {
          mats[c] = prod;
          known[c] = 1;
          grew = true;
        } else if (mats[c] != prod) {
          throw InvalidActionError(
              "lie action generators do not extend to a homomorphism");
        }
      }
    }
  }
  if (std::find(known.begin(), known.end(), 0) != known.end())
    throw InvalidActionError("lie action generators do not generate the group");
  return lie_action_from_images(group, l, std::move(mats));
}

LieSubspace fixed_of_elements(const LieAction& act,
                              const std::vector<std::uint16_t>& elems) {
  std::vector<LieAutomorphism> auts;
  auts.reserve(elems.size());
  for (auto e : elems) auts.push_back(act.images[e]);
  return fixed_subalgebra(*act.lie, auts);
}

LieSubspace FrobeniusLieContext::v_f(std::uint32_t f) const {
  std::vector<std::uint16_t> members = {z_gen};
  for (auto h : fs.complement.members)
    members.push_back(fh->mul(fh->mul(static_cast<std::uint16_t>(f), h),
                              fh->inv(static_cast<std::uint16_t>(f))));
  return fixed_of_elements(action, members);
}

LieSubspace FrobeniusLieContext::centralizer_of_kernel() const {
  return fixed_of_elements(action, fs.kernel.members);
}

LieSubspace FrobeniusLieContext::centralizer_of_complement() const {
  return fixed_of_elements(action, fs.complement.members);
}

FrobeniusLieContext make_frobenius_lie_context(const LieRing& l,
                                               FrobeniusStructure fs,
                                               LieAction action) {
  if (action.group != fs.group)
    throw InvalidActionError("lie context: action must be of the Frobenius group");
  FrobeniusLieContext ctx;
  ctx.lie = &l;
  ctx.fh = fs.group;
  ctx.fs = std::move(fs);
  ctx.action = std::move(action);

  const Subgroup z = central_prime_subgroup(ctx.fs);
  ctx.p = z.order();
  ctx.z_gen = z.members[1];  // minimal nontrivial member

  if (!ctx.fs.cyclic_complement)
    throw HypothesisViolatedError("lie context: complement is not cyclic");
  ctx.q = ctx.fs.complement.order();
  ctx.h_gen = 0;
  for (auto h : ctx.fs.complement.members)
    if (h != 0 && ctx.fh->element_order(h) == ctx.q) {
      ctx.h_gen = h;
      break;
    }
  if (ctx.q > 1 && ctx.h_gen == 0)
    throw HypothesisViolatedError("lie context: no generator of the complement");

  // r from the group side: h^-1 z h = z^r
  const std::uint16_t conj =
      ctx.fh->mul(ctx.fh->mul(ctx.fh->inv(ctx.h_gen), ctx.z_gen), ctx.h_gen);
  std::uint32_t r = 0;
  std::uint16_t cur = 0;
  for (std::uint32_t k = 1; k <= ctx.p; ++k) {
    cur = ctx.fh->mul(cur, ctx.z_gen);
    if (cur == conj) {
      r = k;
      break;
    }
  }
  if (r == 0)
    throw Error("lie context: conjugate of z is not a power of z");

  ctx.eigen = make_eigen_data(l, ctx.action.of(ctx.z_gen), ctx.action.of(ctx.h_gen),
                              ctx.p, ctx.q, r);
  return ctx;
}

bool v_f_decomposition_check(const FrobeniusLieContext& ctx) {
  if (!ctx.fs.supersolvable)
    throw HypothesisViolatedError("v_f decomposition: FH is not supersolvable");
  if (!ctx.centralizer_of_kernel().is_zero())
    throw HypothesisViolatedError("v_f decomposition: C_L(F) != 0");
  const LieSubspace l0 = ctx.eigen.grading.at({0});
  LieSubspace sum = zero_subspace(*ctx.lie);
  for (auto f : ctx.fs.kernel.members) sum = sum_subspaces(sum, ctx.v_f(f));
  return sum == l0;
}

std::uint32_t lemma36_v(std::uint32_t c, std::uint32_t q) {
  return (std::max(c, 1u) - 1) * q + 1;
}

bool lemma36_conjugate_check(const FrobeniusLieContext& ctx, std::uint32_t f) {
  const LieRing& l = *ctx.lie;
  const auto dl = derived_length_lie(l);
  if (!dl || *dl > 2)
    throw HypothesisViolatedError("lemma36: L is not metabelian");
  if (!ctx.centralizer_of_kernel().is_zero())
    throw HypothesisViolatedError("lemma36: C_L(F) != 0");
  const auto c = subalgebra_class(ctx.centralizer_of_complement());
  if (!c) throw HypothesisViolatedError("lemma36: C_L(H) is not nilpotent");
  const std::uint32_t v = lemma36_v(*c, ctx.q);

  const LieSubspace full = full_subspace(l);
  const LieSubspace derived = bracket_of_subspaces(full, full);
  const LieSubspace w = intersect_subspaces(derived, ctx.v_f(f));
  for (std::uint32_t a = 1; a < ctx.p; ++a)
    if (!iterated_commutator(w, ctx.eigen.grading.at({a}), v).is_zero())
      return false;
  return true;
}

}  // namespace frobloc
