#include "frobloc/randgen.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "frobloc/kernels.hpp"
#include "frobloc/modarith.hpp"

namespace frobloc {

using modmat::Mat;
using modmat::Vec;

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

using Index = std::vector<std::uint32_t>;

Index random_index(SplitMix64& rng, const std::vector<std::uint32_t>& moduli,
                   bool nonzero) {
  Index idx(moduli.size());
  while (true) {
    bool zero = true;
    for (std::size_t t = 0; t < moduli.size(); ++t) {
      idx[t] = static_cast<std::uint32_t>(rng.below(moduli[t]));
      zero = zero && idx[t] == 0;
    }
    if (!nonzero || !zero) return idx;
  }
}

Index add_index(const Index& a, const Index& b,
                const std::vector<std::uint32_t>& moduli) {
  Index out(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) out[t] = (a[t] + b[t]) % moduli[t];
  return out;
}

Index sub_index(const Index& a, const Index& b,
                const std::vector<std::uint32_t>& moduli) {
  Index out(a.size());
  for (std::size_t t = 0; t < a.size(); ++t)
    out[t] = (a[t] + moduli[t] - b[t]) % moduli[t];
  return out;
}

bool is_zero_index(const Index& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; });
}

struct RawSample {
  std::vector<Index> degrees;  // per basis vector
  std::map<std::pair<std::uint32_t, std::uint32_t>, Vec> constants;
  std::string model;
};

std::uint32_t random_unit(SplitMix64& rng, std::uint32_t l) {
  return 1 + static_cast<std::uint32_t>(rng.below(l - 1));
}

RawSample model_abelian(SplitMix64& rng, const GradedSamplerOptions& opt) {
  RawSample s;
  const std::uint32_t rank = 1 + static_cast<std::uint32_t>(rng.below(opt.max_rank));
  for (std::uint32_t i = 0; i < rank; ++i)
    s.degrees.push_back(random_index(rng, opt.moduli, opt.zero_at_origin));
  s.model = "abelian";
  return s;
}

// V + W with brackets V x V -> W only: every double bracket vanishes, so
// the Jacobi identity holds by shape.
RawSample model_class2(SplitMix64& rng, const GradedSamplerOptions& opt) {
  RawSample s;
  const std::uint32_t rank =
      3 + static_cast<std::uint32_t>(rng.below(opt.max_rank - 2));
  const std::uint32_t nv = 2 + static_cast<std::uint32_t>(rng.below(rank - 2));
  const std::uint32_t nw = rank - nv;
  for (std::uint32_t i = 0; i < nv; ++i)
    s.degrees.push_back(random_index(rng, opt.moduli, opt.zero_at_origin));
  for (std::uint32_t k = 0; k < nw; ++k) {
    // give the center parts reachable degrees where possible
    for (int attempt = 0; attempt < 8; ++attempt) {
      const auto i = static_cast<std::uint32_t>(rng.below(nv));
      const auto j = static_cast<std::uint32_t>(rng.below(nv));
      const Index d = add_index(s.degrees[i], s.degrees[j], opt.moduli);
      if (!opt.zero_at_origin || !is_zero_index(d)) {
        s.degrees.push_back(d);
        break;
      }
    }
    if (s.degrees.size() < std::size_t(nv) + k + 1)
      s.degrees.push_back(random_index(rng, opt.moduli, opt.zero_at_origin));
  }
  for (std::uint32_t i = 0; i < nv; ++i)
    for (std::uint32_t j = i + 1; j < nv; ++j) {
      if (rng.below(10) < 3) continue;  // keep some sparsity
      const Index target = add_index(s.degrees[i], s.degrees[j], opt.moduli);
      Vec c(rank, 0);
      bool any = false;
      for (std::uint32_t k = nv; k < rank; ++k)
        if (s.degrees[k] == target && rng.below(2) == 0) {
          c[k] = random_unit(rng, opt.field);
          any = true;
        }
      if (any) s.constants[{i, j}] = std::move(c);
    }
  s.model = "class2";
  return s;
}

// Strictly-upper-triangular matrix algebra on s(s-1)/2 matrix units with
// random unit rescalings and random distinct row labels; the commutator of
// an associative algebra satisfies Jacobi identically.
RawSample model_chain(SplitMix64& rng, const GradedSamplerOptions& opt) {
  std::vector<std::uint32_t> sizes;
  for (std::uint32_t sz = 3; sz <= 5; ++sz) {
    if (sz * (sz - 1) / 2 > opt.max_rank) continue;
    if (opt.require_metabelian && sz > 4) continue;
    std::uint64_t group_order = 1;
    for (auto mm : opt.moduli) group_order *= mm;
    if (opt.zero_at_origin && group_order < sz) continue;  // need distinct labels
    sizes.push_back(sz);
  }
  if (sizes.empty()) return model_class2(rng, opt);
  const std::uint32_t sz = sizes[rng.below(sizes.size())];

  // distinct row labels so every matrix-unit degree d_j - d_i is nonzero
  std::vector<Index> labels;
  for (int attempt = 0; attempt < 200 && labels.size() < sz; ++attempt) {
    const Index cand = random_index(rng, opt.moduli, false);
    bool fresh = true;
    for (const auto& lb : labels) fresh = fresh && !(lb == cand);
    if (fresh) labels.push_back(cand);
  }
  if (labels.size() < sz) return model_class2(rng, opt);

  RawSample s;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> pos;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> lambda;
  for (std::uint32_t i = 0; i < sz; ++i)
    for (std::uint32_t j = i + 1; j < sz; ++j) {
      pos[{i, j}] = static_cast<std::uint32_t>(s.degrees.size());
      lambda[{i, j}] = random_unit(rng, opt.field);
      s.degrees.push_back(sub_index(labels[j], labels[i], opt.moduli));
    }
  const std::uint32_t rank = static_cast<std::uint32_t>(s.degrees.size());
  for (const auto& [ab, pa] : pos)
    for (const auto& [cd, pc] : pos) {
      if (pa >= pc) continue;
      const auto [a, b] = ab;
      const auto [c, d] = cd;
      Vec coef(rank, 0);
      if (b == c) {
        coef[pos[{a, d}]] = mulmod(mulmod(lambda.at(ab), lambda.at(cd), opt.field),
                                   invmod(lambda.at({a, d}), opt.field), opt.field);
        s.constants[{pa, pc}] = std::move(coef);
      } else if (d == a) {
        coef[pos[{c, b}]] = negmod(
            mulmod(mulmod(lambda.at(ab), lambda.at(cd), opt.field),
                   invmod(lambda.at({c, b}), opt.field), opt.field),
            opt.field);
        s.constants[{pa, pc}] = std::move(coef);
      }
    }
  s.model = "chain" + std::to_string(sz);
  return s;
}

// Component-respecting constants on a few random pairs, kept only when the
// Jacobi check passes.
RawSample model_sparse(SplitMix64& rng, const GradedSamplerOptions& opt) {
  const std::uint32_t rank =
      3 + static_cast<std::uint32_t>(rng.below(opt.max_rank - 2));
  for (int attempt = 0; attempt < 40; ++attempt) {
    RawSample s;
    for (std::uint32_t i = 0; i < rank; ++i)
      s.degrees.push_back(random_index(rng, opt.moduli, opt.zero_at_origin));
    const std::uint32_t npairs = 1 + static_cast<std::uint32_t>(rng.below(3));
    for (std::uint32_t t = 0; t < npairs; ++t) {
      const auto i = static_cast<std::uint32_t>(rng.below(rank));
      const auto j = static_cast<std::uint32_t>(rng.below(rank));
      if (i == j) continue;
      const auto [lo, hi] = std::minmax(i, j);
      const Index target = add_index(s.degrees[lo], s.degrees[hi], opt.moduli);
      Vec c(rank, 0);
      bool any = false;
      for (std::uint32_t k = 0; k < rank; ++k)
        if (s.degrees[k] == target && k != lo && k != hi && rng.below(2) == 0) {
          c[k] = random_unit(rng, opt.field);
          any = true;
        }
      if (any) s.constants[{lo, hi}] = std::move(c);
    }
    if (s.constants.empty()) continue;
    try {
      const CoefficientRing ring = make_prime_field(opt.field);
      const std::vector<std::uint32_t> orders(rank, opt.field);
      (void)lie_from_structure_constants(ring, orders, s.constants);
      s.model = "sparse";
      return s;
    } catch (const JacobiFailureError&) {
      continue;  // resample
    }
  }
  return model_class2(rng, opt);
}

// Random degree-preserving change of basis: elementary row operations
// within each degree class, with the inverse tracked alongside.
void scramble(SplitMix64& rng, const GradedSamplerOptions& opt, RawSample& s,
              const LieRing& l, Mat& p, Mat& q) {
  const std::uint32_t rank = l.rank;
  const std::uint32_t field = opt.field;
  p = modmat::identity(rank, field);
  q = modmat::identity(rank, field);
  std::map<Index, std::vector<std::uint32_t>> classes;
  for (std::uint32_t i = 0; i < rank; ++i) classes[s.degrees[i]].push_back(i);
  const std::uint32_t ops = 2 * rank + 4;
  std::vector<const std::vector<std::uint32_t>*> cls;
  for (const auto& [d, v] : classes) cls.push_back(&v);
  for (std::uint32_t t = 0; t < ops; ++t) {
    const auto& members = *cls[rng.below(cls.size())];
    const std::uint32_t a = members[rng.below(members.size())];
    if (rng.below(3) == 0 || members.size() == 1) {
      const std::uint32_t u = random_unit(rng, field);
      kernels::scale_mod(p[a].data(), u, rank, field);
      const std::uint32_t ui = invmod(u, field);
      for (std::uint32_t row = 0; row < rank; ++row)
        q[row][a] = mulmod(q[row][a], ui, field);
    } else {
      std::uint32_t b = members[rng.below(members.size())];
      if (a == b) continue;
      const std::uint32_t lam = random_unit(rng, field);
      // row_a of P += lam * row_b;  col_b of Q -= lam * col_a
      kernels::axpy_mod(p[a].data(), p[b].data(), lam, rank, field);
      for (std::uint32_t row = 0; row < rank; ++row)
        q[row][b] = submod(q[row][b], mulmod(lam, q[row][a], field), field);
    }
  }
}

}  // namespace

GradedSample random_graded_sample(const GradedSamplerOptions& opt,
                                  std::uint64_t index) {
  if (opt.max_rank < 3 || opt.max_rank > kMaxLieRank)
    throw Error("graded sampler needs 3 <= max_rank <= 24");
  SplitMix64 seeder(opt.seed ^ (0xa076'1d64'78bd'642full * (index + 1)));
  SplitMix64 rng(seeder.next());

  RawSample raw;
  switch (rng.below(5)) {
    case 0:
      raw = model_abelian(rng, opt);
      break;
    case 1:
    case 2:
      raw = model_class2(rng, opt);
      break;
    case 3:
      raw = model_chain(rng, opt);
      break;
    default:
      raw = opt.require_metabelian || opt.nilpotent_only
                ? model_class2(rng, opt)
                : model_sparse(rng, opt);
      break;
  }

  const CoefficientRing ring = make_prime_field(opt.field);
  const std::vector<std::uint32_t> orders(raw.degrees.size(), opt.field);
  LieRing base = lie_from_structure_constants(ring, orders, raw.constants);

  // degree-preserving base change
  Mat p, q;
  scramble(rng, opt, raw, base, p, q);
  std::map<std::pair<std::uint32_t, std::uint32_t>, Vec> scrambled;
  for (std::uint32_t i = 0; i < base.rank; ++i)
    for (std::uint32_t j = i + 1; j < base.rank; ++j) {
      const Vec br = base.bracket(p[i], p[j]);
      Vec c = modmat::vecmat(br, q, opt.field);
      if (!modmat::is_zero(c)) scrambled[{i, j}] = std::move(c);
    }

  GradedSample out;
  out.lie = lie_from_structure_constants(ring, orders, scrambled);
  out.model = raw.model;
  std::map<Index, Mat> comp_gens;
  for (std::uint32_t i = 0; i < out.lie.rank; ++i)
    comp_gens[raw.degrees[i]].push_back(out.lie.basis_vector(i));
  std::map<Index, LieSubspace> comps;
  for (const auto& [d, gens] : comp_gens)
    comps[d] = span_subspace(out.lie, gens);
  out.grading = make_grading(out.lie, opt.moduli, std::move(comps));
  return out;
}

}  // namespace frobloc
