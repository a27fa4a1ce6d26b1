#include "r3/branch_qform.hpp"

#include <cassert>
#include <cstdint>
#include <deque>
#include <random>
#include <string>
#include <utility>

#include "r3/branch_small.hpp"
#include "r3/gf_linear.hpp"

namespace r3 {

namespace {

constexpr uint32_t unset = UINT32_MAX;

// nonzero isotropic vector counts of the standard forms
uint64_t zero_count(uint64_t q, unsigned m, int eps)
{
  uint64_t qm = 1, qm1 = 1;
  for (unsigned i = 0; i + 1 < m; ++i)
    qm1 *= q;
  qm = qm1 * q;
  if (eps > 0)
    return (qm - 1) * (qm1 + 1);
  return (qm + 1) * (qm1 - 1);
}

} // namespace

std::optional<uint16_t> isotropic_orbit(const OrbitalStructure& os, uint64_t q)
{
  uint16_t diag = os.at(0, 0);
  std::vector<uint64_t> cnt(os.rank, 0);
  for (uint32_t y = 1; y < os.n; ++y)
    cnt[os.at(0, y)]++;

  std::optional<uint16_t> pick;
  for (uint16_t c = 0; c < os.rank; ++c) {
    if (c == diag || cnt[c] == 0)
      continue;
    if (cnt[c] % q == 0)
      continue;
    if (pick)
      return std::nullopt;
    pick = c;
  }
  return pick;
}

std::vector<Perm> reduce_generators(const PermGroup& g, unsigned k)
{
  assert(k > 0);
  if (g.trivial())
    return {};

  std::mt19937_64 rng(0x9f02c);
  for (unsigned s = 1; s <= k; ++s)
    for (unsigned t = 0; t < 2048 / k; ++t) {
      std::vector<Perm> cand;
      for (unsigned i = 0; i < s; ++i)
        cand.push_back(g.random_element(rng));
      if (PermGroup(g.degree(), cand).order() == g.order())
        return cand;
    }
  return g.generators();
}

std::optional<FormTable> propagate_form(const FrameCoords& fc,
                                        const std::vector<Perm>& gens,
                                        const std::vector<Semisimilarity>& ws,
                                        const std::vector<uint32_t>& iso_pts,
                                        uint32_t seed, uint32_t gamma)
{
  assert(gens.size() == ws.size());
  const VecSpace& vs = fc.vs;
  const Gf& f = vs.f;

  FormTable kappa(vs.n, unset);
  std::deque<uint32_t> queue;
  auto assign = [&](uint32_t u, uint32_t val) {
    if (kappa[u] == unset) {
      kappa[u] = val;
      queue.push_back(u);
      return true;
    }
    return kappa[u] == val;
  };

  assign(0, 0);
  for (uint32_t u : iso_pts)
    if (!assign(u, 0))
      return std::nullopt;
  assert(kappa[seed] == unset);
  assign(seed, gamma);

  while (!queue.empty()) {
    uint32_t u = queue.front();
    queue.pop_front();
    uint32_t x = fc.from_std[u];
    for (size_t i = 0; i < gens.size(); ++i) {
      uint32_t v = fc.to_std[gens[i][x]];
      uint32_t val = f.mul(ws[i].lambda, f.frob(kappa[u], ws[i].alpha));
      if (!assign(v, val))
        return std::nullopt;
    }
  }
  return kappa;
}

std::optional<FormCheck> validate_form(const FrameCoords& fc,
                                       const std::vector<Perm>& g0_gens,
                                       const FormTable& kappa)
{
  const VecSpace& vs = fc.vs;
  for (uint32_t u = 0; u < vs.n; ++u)
    if (kappa[u] == unset)
      return std::nullopt;

  if (!is_homogeneous(vs, kappa))
    return std::nullopt;
  GfMat gram = gram_of(vs, kappa);
  if (!is_bilinear(vs, kappa, gram))
    return std::nullopt;
  if (gf_rank(vs.f, gram) != vs.k)
    return std::nullopt;

  FormCheck chk{std::move(gram), {}};
  for (const Perm& g : g0_gens) {
    auto s = semisimilarity_of(vs, kappa, fc.push_forward(g));
    if (!s)
      return std::nullopt;
    chk.witness.push_back(*s);
  }
  return chk;
}

PermGroup emit_qform_closure(const AffineFrame& fr, const FrameCoords& fc,
                             const FormTable& kappa, const StandardBasis& sb)
{
  const VecSpace& vs = fc.vs;
  const Gf& f = vs.f;
  assert(vs.k % 2 == 0);
  unsigned m = vs.k / 2;

  QuadForm qf{f, m, sb.eps, sb.aniso_b};
  auto binv = gf_inverse(f, sb.b);
  assert(binv.has_value());

  std::vector<Perm> gens = fr.basis_tr;
  auto push_mat = [&](const GfMat& ms) {
    GfMat conj = gf_mul(f, gf_mul(f, *binv, ms), sb.b);
    Perm s = vs.perm_of_mat(conj);
    assert(semisimilarity_of(vs, kappa, s).has_value());
    gens.push_back(fc.pull_back(s));
  };

  for (const GfMat& ms : isometry_generators(qf))
    push_mat(ms);
  if (f.q > 2)
    push_mat(similarity_matrix(qf, f.from_exp(1)));

  if (f.r > 1) {
    // coefficient-wise Frobenius in the standard basis, corrected so the
    // anisotropic coefficient stays put
    GfMat cb = gf_mul(f, frobenius_corrector(qf), sb.b);
    std::vector<uint32_t> img(vs.n);
    for (uint32_t x = 0; x < vs.n; ++x) {
      std::vector<uint32_t> c = gf_vec_mul(f, vs.coords_of(x), *binv);
      for (uint32_t& e : c)
        e = f.frob(e, 1);
      img[x] = vs.point_of(gf_vec_mul(f, c, cb));
    }
    Perm s(img);
    assert(semisimilarity_of(vs, kappa, s).has_value());
    gens.push_back(fc.pull_back(s));
  }

  PermGroup out(fr.n, gens);
  Bigint expected = bigint_pow(Bigint(f.q), 2 * m) *
                    orthogonal_order(f, m, sb.eps) * Bigint(f.q - 1) * f.r;
  assert(out.order() == expected);
  return out;
}

BranchResult run_qform(const PermGroup& g, const OrbitalStructure& os)
{
  auto fr = detect_affine(g);
  if (!fr)
    return BranchResult::fail("no affine frame");

  SmallEmbeddings emb = embeddings_small(*fr);
  if (emb.cands.empty())
    return BranchResult::fail("no semilinear embedding");

  // small semilinear dimension: meet the closure inside every enumerable
  // affine overgroup and keep the largest intersection
  std::optional<PermGroup> best;
  std::string note;
  for (const FieldEmbedding& e : emb.cands) {
    if (e.fs.a > 4)
      continue;
    auto meet = brute_closure_in_agl(*fr, e.fs, os);
    if (!meet)
      continue;
    if (!best || best->order() < meet->order()) {
      best = std::move(meet);
      note = "qform brute a=" + std::to_string(e.fs.a) +
             ",q=" + std::to_string(e.fs.q);
    }
  }
  if (best) {
    assert(best->contains_all(g.generators()));
    for (const Perm& x : best->generators())
      assert(preserves_orbitals(os, x));
    return BranchResult::found(std::move(*best), note);
  }

  // large dimension: guess semisimilarity data on few generators and
  // rebuild the invariant quadratic form orbit by orbit
  std::vector<Perm> small = reduce_generators(fr->g0, 6);
  size_t s = small.size();
  for (const FieldEmbedding& e : emb.cands) {
    if (e.fs.a < 4 || e.fs.a % 2 != 0)
      continue;
    const Gf& f = e.fs.gf;
    auto iso = isotropic_orbit(os, f.q);
    if (!iso)
      continue;

    uint64_t per = uint64_t(f.q - 1) * f.r;
    uint64_t total = 1;
    bool over = false;
    for (size_t i = 0; i < s && !over; ++i) {
      total *= per;
      if (total > (uint64_t(1) << 21))
        over = true;
    }
    if (over)
      continue;

    FrameCoords fc = frame_coords(*fr, e.fs);
    std::vector<uint32_t> iso_pts;
    uint32_t seed = unset;
    for (uint32_t y = 1; y < fr->n; ++y) {
      if (os.at(0, y) == *iso)
        iso_pts.push_back(fc.to_std[y]);
      else if (seed == unset)
        seed = fc.to_std[y];
    }
    assert(seed != unset);

    // one seed value per square class
    std::vector<uint32_t> gammas{f.from_exp(0)};
    if (f.p != 2)
      gammas.push_back(f.from_exp(1));

    std::vector<uint64_t> idx(s, 0);
    while (true) {
      std::vector<Semisimilarity> ws(s);
      for (size_t i = 0; i < s; ++i)
        ws[i] = Semisimilarity{f.from_exp(idx[i] % (f.q - 1)),
                               unsigned(idx[i] / (f.q - 1))};

      for (uint32_t gamma : gammas) {
        auto kappa = propagate_form(fc, small, ws, iso_pts, seed, gamma);
        if (!kappa)
          continue;
        auto chk = validate_form(fc, fr->g0.generators(), *kappa);
        if (!chk)
          continue;
        auto sb = standard_basis(fc.vs, *kappa);
        if (!sb)
          continue;
        // nondegenerate forms vanish on exactly one orbit size
        assert(iso_pts.size() == zero_count(f.q, e.fs.a / 2, sb->eps));

        PermGroup out = emit_qform_closure(*fr, fc, *kappa, *sb);
        assert(out.contains_all(g.generators()));
        for (const Perm& x : out.generators())
          assert(preserves_orbitals(os, x));
        return BranchResult::found(std::move(out),
                                   std::string("qform eps=") +
                                   (sb->eps > 0 ? "+" : "-") +
                                   ",q=" + std::to_string(f.q) +
                                   ",m=" + std::to_string(e.fs.a / 2));
      }

      size_t i = 0;
      while (i < s && ++idx[i] == per)
        idx[i++] = 0;
      if (i == s)
        break;
    }
  }
  return BranchResult::fail("no quadratic form found");
}

} // namespace r3
