#include "frobloc/action.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "frobloc/modarith.hpp"

namespace frobloc {

namespace {

void check_is_automorphism(const FiniteGroup& g,
                           const std::vector<std::uint16_t>& image,
                           const std::string& what) {
  if (image.size() != g.order)
    throw InvalidActionError(what + ": permutation length mismatch");
  std::vector<std::uint8_t> seen(g.order, 0);
  for (auto y : image) {
    if (y >= g.order || seen[y]++)
      throw InvalidActionError(what + ": image is not a permutation");
  }
  if (image[0] != 0)
    throw InvalidActionError(what + ": identity not fixed");
  for (std::uint32_t x = 0; x < g.order; ++x)
    for (std::uint32_t y = 0; y < g.order; ++y)
      if (image[g.mul(x, y)] != g.mul(image[x], image[y]))
        throw InvalidActionError(what + ": homomorphism law fails at (" +
                                 std::to_string(x) + "," + std::to_string(y) +
                                 ")");
}

}  // namespace

Automorphism automorphism_from_permutation(const FiniteGroup& target,
                                           std::vector<std::uint16_t> image) {
  check_is_automorphism(target, image, "automorphism");
  return Automorphism{&target, std::move(image)};
}

Automorphism identity_automorphism(const FiniteGroup& target) {
  Automorphism a;
  a.target = &target;
  a.image.resize(target.order);
  std::iota(a.image.begin(), a.image.end(), std::uint16_t(0));
  return a;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  Automorphism out;
  out.target = f.target;
  out.image.resize(f.image.size());
  for (std::size_t x = 0; x < g.image.size(); ++x)
    out.image[x] = f.image[g.image[x]];
  return out;
}

Automorphism inverse_automorphism(const Automorphism& f) {
  Automorphism out;
  out.target = f.target;
  out.image.resize(f.image.size());
  for (std::size_t x = 0; x < f.image.size(); ++x) out.image[f.image[x]] = static_cast<std::uint16_t>(x);
  return out;
}

namespace {

void validate_action(const ActionHom& act) {
  const FiniteGroup& a = *act.actor;
  const FiniteGroup& t = *act.target;
  if (act.images.size() != a.order)
    throw InvalidActionError("action: one automorphism per actor element required");
  for (std::uint32_t x = 0; x < a.order; ++x)
    check_is_automorphism(t, act.images[x].image,
                          "action image of " + std::to_string(x));
  for (std::uint32_t x = 0; x < t.order; ++x)
    if (act.images[0].image[x] != x)
      throw InvalidActionError("action: identity must act trivially");
  for (std::uint32_t p = 0; p < a.order; ++p)
    for (std::uint32_t q = 0; q < a.order; ++q) {
      const auto& lhs = act.images[a.mul(p, q)].image;
      const auto& ip = act.images[p].image;
      const auto& iq = act.images[q].image;
      for (std::uint32_t x = 0; x < t.order; ++x)
        if (lhs[x] != ip[iq[x]])
          throw InvalidActionError("action: images[" + std::to_string(p) + "*" +
                                   std::to_string(q) +
                                   "] != composition (at target element " +
                                   std::to_string(x) + ")");
    }
}

}  // namespace

ActionHom action_from_images(const FiniteGroup& actor, const FiniteGroup& target,
                             std::vector<std::vector<std::uint16_t>> images) {
  ActionHom act;
  act.actor = &actor;
  act.target = &target;
  act.images.reserve(images.size());
  for (auto& img : images) act.images.push_back(Automorphism{&target, std::move(img)});
  validate_action(act);
  return act;
}

ActionHom action_from_generator_images(
    const FiniteGroup& actor, const FiniteGroup& target,
    const std::map<std::uint16_t, std::vector<std::uint16_t>>& gen_images) {
  std::vector<std::vector<std::uint16_t>> images(actor.order);
  std::vector<std::uint8_t> known(actor.order, 0);
  std::vector<std::uint16_t> id(target.order);
  std::iota(id.begin(), id.end(), std::uint16_t(0));
  images[0] = id;
  known[0] = 1;
  std::deque<std::uint16_t> queue = {0};
  for (const auto& [g, img] : gen_images) {
    if (g >= actor.order) throw InvalidActionError("generator index out of range");
    if (known[g] && images[g] != img)
      throw InvalidActionError("conflicting image for generator " + std::to_string(g));
    if (!known[g]) {
      images[g] = img;
      known[g] = 1;
      queue.push_back(g);
    }
  }
  std::vector<std::uint16_t> frontier(queue.begin(), queue.end());
  // close under products; recheck every product so inconsistent generator
  // data cannot slip through
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t a = 0; a < actor.order; ++a) {
      if (!known[a]) continue;
      for (std::uint32_t b = 0; b < actor.order; ++b) {
        if (!known[b]) continue;
        const std::uint16_t c = actor.mul(a, b);
        std::vector<std::uint16_t> comp(target.order);
        for (std::uint32_t x = 0; x < target.order; ++x)
          comp[x] = images[a][images[b][x]];
        if (!known[c]) {
          images[c] = std::move(comp);
          known[c] = 1;
          grew = true;
        } else if (images[c] != comp) {
          throw InvalidActionError("generator images do not extend to a "
                                   "homomorphism (conflict at element " +
                                   std::to_string(c) + ")");
        }
      }
    }
  }
  if (std::find(known.begin(), known.end(), 0) != known.end())
    throw InvalidActionError("generator images do not generate the actor");
  return action_from_images(actor, target, std::move(images));
}

Subgroup fixed_point_subgroup(const ActionHom& act,
                              const std::vector<std::uint16_t>& s) {
  std::vector<std::uint16_t> mem;
  for (std::uint32_t x = 0; x < act.target->order; ++x) {
    bool fixed = true;
    for (auto a : s)
      if (act.images[a].image[x] != x) {
        fixed = false;
        break;
      }
    if (fixed) mem.push_back(static_cast<std::uint16_t>(x));
  }
  return subgroup_from_members(*act.target, std::move(mem));
}

SemidirectProduct semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                                     const ActionHom& act) {
  if (act.actor != &h || act.target != &n)
    throw InvalidActionError("semidirect product: action must be of H on N");
  const std::uint64_t order = std::uint64_t(n.order) * h.order;
  if (order > 65535) throw NotAGroupError("semidirect product order exceeds 65535");
  FiniteGroup g;
  g.order = static_cast<std::uint32_t>(order);
  g.table.resize(order * order);
  for (std::uint32_t n1 = 0; n1 < n.order; ++n1)
    for (std::uint32_t h1 = 0; h1 < h.order; ++h1) {
      const std::uint32_t x = n1 * h.order + h1;
      const auto& act_h1 = act.images[h1].image;
      for (std::uint32_t n2 = 0; n2 < n.order; ++n2)
        for (std::uint32_t h2 = 0; h2 < h.order; ++h2)
          g.table[std::size_t(x) * order + (n2 * h.order + h2)] =
              static_cast<std::uint16_t>(n.mul(n1, act_h1[n2]) * h.order +
                                         h.mul(h1, h2));
    }
  g.inverse.resize(order);
  for (std::uint32_t n1 = 0; n1 < n.order; ++n1)
    for (std::uint32_t h1 = 0; h1 < h.order; ++h1) {
      // (n, h)^-1 = (act(h^-1)(n^-1), h^-1)
      const std::uint16_t hi = h.inv(h1);
      g.inverse[n1 * h.order + h1] = static_cast<std::uint16_t>(
          act.images[hi].image[n.inv(n1)] * h.order + hi);
    }

  SemidirectProduct out;
  out.group = std::move(g);
  std::vector<std::uint16_t> nm, hm;
  for (std::uint32_t i = 0; i < n.order; ++i)
    nm.push_back(static_cast<std::uint16_t>(i * h.order));
  for (std::uint32_t j = 0; j < h.order; ++j) hm.push_back(static_cast<std::uint16_t>(j));
  out.embedded_n = subgroup_from_members(out.group, std::move(nm));
  out.embedded_h = subgroup_from_members(out.group, std::move(hm));
  return out;
}

FrobeniusStructure verify_frobenius(const FiniteGroup& group,
                                    const Subgroup& kernel,
                                    const Subgroup& complement) {
  if (kernel.parent != &group || complement.parent != &group)
    throw NotFrobeniusError("kernel/complement must be subgroups of the group");
  if (!is_normal(group, kernel))
    throw NotFrobeniusError("kernel is not normal");
  for (auto h : complement.members)
    if (h != 0 && kernel.contains(h))
      throw NotFrobeniusError("kernel and complement intersect at element " +
                              std::to_string(h));
  if (std::uint64_t(kernel.order()) * complement.order() != group.order)
    throw NotFrobeniusError("|kernel| * |complement| != |group|");
  for (auto h : complement.members) {
    if (h == 0) continue;
    for (auto f : kernel.members)
      if (f != 0 && group.conj(h, f) == f)
        throw NotFrobeniusError("complement element " + std::to_string(h) +
                                " centralizes kernel element " +
                                std::to_string(f));
  }
  FrobeniusStructure fs;
  fs.group = &group;
  fs.kernel = kernel;
  fs.complement = complement;
  fs.supersolvable = is_supersolvable(group);
  fs.cyclic_complement = is_cyclic_subgroup(group, complement);
  return fs;
}

Subgroup central_prime_subgroup(const FrobeniusStructure& fs) {
  const FiniteGroup& g = *fs.group;
  // center of the kernel
  std::vector<std::uint16_t> zf;
  for (auto z : fs.kernel.members) {
    bool central = true;
    for (auto f : fs.kernel.members)
      if (g.mul(z, f) != g.mul(f, z)) {
        central = false;
        break;
      }
    if (central) zf.push_back(z);
  }
  for (auto z : zf) {
    if (z == 0) continue;
    if (!is_prime(g.element_order(z))) continue;
    Subgroup cand = subgroup_generated(g, {z});
    if (is_normal(g, cand)) return cand;  // minimal generator index wins
  }
  throw NoSuchSubgroupError(
      "no prime-order subgroup of Z(kernel) is normal in the whole group");
}

InducedQuotientAction induced_quotient_action(const ActionHom& act,
                                              const Subgroup& n) {
  for (std::uint32_t a = 0; a < act.actor->order; ++a)
    for (auto x : n.members)
      if (!n.contains(act.images[a].image[x]))
        throw NotInvariantError("subgroup is not invariant under actor element " +
                                std::to_string(a));
  InducedQuotientAction out;
  out.quot = quotient(*act.target, n);  // throws NotNormal when not normal
  const std::uint32_t qn = out.quot.quotient.order;
  std::vector<std::vector<std::uint16_t>> images(act.actor->order);
  for (std::uint32_t a = 0; a < act.actor->order; ++a) {
    images[a].resize(qn);
    for (std::uint32_t c = 0; c < qn; ++c)
      images[a][c] = out.quot.project(act.images[a].image[out.quot.reps[c]]);
  }
  out.action = action_from_images(*act.actor, out.quot.quotient, std::move(images));
  return out;
}

bool lemma_ker_check(const ActionHom& act, const Subgroup& n) {
  if (!is_nilpotent(*act.actor))
    throw HypothesisViolatedError("lemma_ker_check: actor is not nilpotent");
  std::vector<std::uint16_t> all(act.actor->order);
  std::iota(all.begin(), all.end(), std::uint16_t(0));
  if (!fixed_point_subgroup(act, all).is_trivial())
    throw HypothesisViolatedError("lemma_ker_check: fixed points are not trivial");
  const InducedQuotientAction iq = induced_quotient_action(act, n);
  std::vector<std::uint16_t> qall(iq.action.actor->order);
  std::iota(qall.begin(), qall.end(), std::uint16_t(0));
  return fixed_point_subgroup(iq.action, qall).is_trivial();
}

bool lemma_com_check(const FrobeniusStructure& fs, const ActionHom& act,
                     const Subgroup& n) {
  if (act.actor != fs.group)
    throw HypothesisViolatedError("lemma_com_check: action actor must be FH");
  // C_N(F) = 1
  const Subgroup cf = fixed_point_subgroup(act, fs.kernel.members);
  for (auto x : n.members)
    if (x != 0 && cf.contains(x))
      throw HypothesisViolatedError(
          "lemma_com_check: kernel has nontrivial fixed points in N");
  const InducedQuotientAction iq = induced_quotient_action(act, n);

  const Subgroup lhs = fixed_point_subgroup(iq.action, fs.complement.members);

  // C_G(H) N / N
  const Subgroup cgh = fixed_point_subgroup(act, fs.complement.members);
  std::vector<std::uint16_t> gens = cgh.members;
  gens.insert(gens.end(), n.members.begin(), n.members.end());
  const Subgroup cghn = subgroup_generated(*act.target, gens);
  std::vector<std::uint16_t> proj;
  for (auto x : cghn.members) proj.push_back(iq.quot.project(x));
  const Subgroup rhs = subgroup_from_members(iq.quot.quotient, std::move(proj));

  return lhs == rhs;
}

bool lemma_coprime_check(const ActionHom& act) {
  const auto p = p_group_prime(*act.target);
  if (!p)
    throw HypothesisViolatedError("lemma_coprime_check: target is not a p-group");
  if (!is_nilpotent(*act.actor))
    throw HypothesisViolatedError("lemma_coprime_check: actor is not nilpotent");
  std::vector<std::uint16_t> all(act.actor->order);
  std::iota(all.begin(), all.end(), std::uint16_t(0));
  if (!fixed_point_subgroup(act, all).is_trivial())
    throw HypothesisViolatedError(
        "lemma_coprime_check: fixed points are not trivial");
  const Subgroup hall = hall_subgroup_of_nilpotent(*act.actor, *p);
  return fixed_point_subgroup(act, hall.members).is_trivial();
}

bool frobenius_generation_check(const FrobeniusStructure& fs,
                                const ActionHom& act) {
  if (act.actor != fs.group)
    throw HypothesisViolatedError("generation check: action actor must be KB");
  if (!fixed_point_subgroup(act, fs.kernel.members).is_trivial())
    throw HypothesisViolatedError(
        "generation check: kernel has nontrivial fixed points");
  const FiniteGroup& fh = *fs.group;
  std::vector<std::uint16_t> gens;
  for (auto y : fs.kernel.members) {
    std::vector<std::uint16_t> conj_b;
    for (auto b : fs.complement.members)
      conj_b.push_back(fh.mul(fh.mul(y, b), fh.inv(y)));
    const Subgroup fixed = fixed_point_subgroup(act, conj_b);
    gens.insert(gens.end(), fixed.members.begin(), fixed.members.end());
  }
  return subgroup_generated(*act.target, gens).is_whole();
}

}  // namespace frobloc
