#include "r3/branch_small.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "r3/bigint.hpp"
#include "r3/coord.hpp"

namespace r3 {

bool order_gate(const PermGroup& g)
{
  return g.order() <= bigint_pow(g.degree(), 18);
}

namespace {

constexpr size_t elements_cap = size_t(1) << 18;
constexpr size_t scan_cap = size_t(1) << 22;

bool generates(const PermGroup& g0, const std::vector<Perm>& tuple)
{
  return PermGroup(g0.degree(), tuple).order() == g0.order();
}

// drop tuple members that are not needed, replacing them by the identity
void minimize_tuple(const PermGroup& g0, std::vector<Perm>& tuple)
{
  Perm id(g0.degree());
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] == id)
      continue;
    std::vector<Perm> trial = tuple;
    trial[i] = id;
    if (generates(g0, trial))
      tuple[i] = id;
  }
  std::stable_partition(tuple.begin(), tuple.end(),
                        [&](const Perm& p) { return !(p == id); });
}

} // namespace

std::optional<std::vector<Perm>> small_generating_tuple(const PermGroup& g0,
                                                        unsigned k)
{
  Perm id(g0.degree());
  if (g0.trivial())
    return std::vector<Perm>(k, id);

  auto elems = g0.elements(elements_cap);
  if (!elems)
    return std::nullopt;
  std::sort(elems->begin(), elems->end(),
            [](const Perm& a, const Perm& b) { return a.images() < b.images(); });

  std::mt19937_64 rng(0x5ca1ab1e);
  std::uniform_int_distribution<size_t> pick(0, elems->size() - 1);
  for (unsigned t = 0; t < 1024; ++t) {
    std::vector<Perm> tuple;
    for (unsigned i = 0; i < k; ++i)
      tuple.push_back((*elems)[pick(rng)]);
    if (generates(g0, tuple)) {
      minimize_tuple(g0, tuple);
      while (tuple.size() < k)
        tuple.push_back(id);
      return tuple;
    }
  }

  // exhaustive combinations by size, smallest tuples first
  Bigint total = bigint_pow(Bigint(elems->size()), k);
  if (total > scan_cap)
    return std::nullopt;
  size_t m = elems->size();
  std::vector<size_t> idx;
  for (unsigned s = 1; s <= k && s <= m; ++s) {
    idx.assign(s, 0);
    for (size_t i = 0; i < s; ++i)
      idx[i] = i;
    while (true) {
      std::vector<Perm> tuple;
      for (size_t i : idx)
        tuple.push_back((*elems)[i]);
      if (generates(g0, tuple)) {
        while (tuple.size() < k)
          tuple.push_back(id);
        return tuple;
      }
      size_t i = s;
      while (i-- > 0) {
        if (idx[i] + (s - i) < m) {
          ++idx[i];
          for (size_t j = i + 1; j < s; ++j)
            idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0)
          goto next_size;
      }
    }
  next_size:;
  }
  return std::nullopt;
}

SmallEmbeddings embeddings_small(const AffineFrame& fr)
{
  std::vector<MatrixModP> derived_mats;
  PermGroup der = fr.g0.derived_subgroup();
  for (const Perm& h : der.generators())
    derived_mats.push_back(matrix_of(fr, h));

  SmallEmbeddings out;
  out.cands = enumerate_field_structures(fr.p, fr.d, fr.g0_mats, derived_mats,
                                         &out.complete);
  out.cands.erase(std::remove_if(out.cands.begin(), out.cands.end(),
                                 [](const FieldEmbedding& e) {
                                   return e.fs.a > 48;
                                 }),
                  out.cands.end());
  std::sort(out.cands.begin(), out.cands.end(),
            [](const FieldEmbedding& x, const FieldEmbedding& y) {
              return x.fs.a < y.fs.a;
            });
  for (const FieldEmbedding& e : out.cands)
    if (e.fs.a <= 16)
      out.class_s = true;
  return out;
}

std::optional<PermGroup> brute_closure_in_agl(const AffineFrame& fr,
                                              const FieldStructure& fs,
                                              const OrbitalStructure& os,
                                              size_t cap)
{
  unsigned a = fs.a, q = fs.q, rq = fr.d / fs.a;

  Bigint count = bigint_pow(Bigint(q), a * a) * rq;
  if (count > cap)
    return std::nullopt;

  FrameCoords fc = frame_coords(fr, fs);
  const VecSpace& vs = fc.vs;
  std::vector<uint16_t> dc(fr.n);
  for (uint32_t x = 0; x < fr.n; ++x)
    dc[x] = os.at(0, x);

  std::vector<Perm> gens = fr.basis_tr;
  PermGroup h(fr.n, gens);

  std::vector<uint32_t> entry(a * a, 0);
  GfMat m(a, a);
  while (true) {
    for (unsigned i = 0; i < a * a; ++i)
      m.e[i] = entry[i];
    if (gf_invertible(fs.gf, m)) {
      for (unsigned e = 0; e < rq; ++e) {
        bool keep = true;
        std::vector<uint32_t> img(vs.n);
        for (uint32_t x = 0; x < vs.n && keep; ++x) {
          std::vector<uint32_t> v = vs.coords_of(x);
          for (uint32_t& c : v)
            c = vs.f.frob(c, e);
          uint32_t y = vs.point_of(gf_vec_mul(vs.f, v, m));
          img[x] = y;
          keep = dc[fc.from_std[x]] == dc[fc.from_std[y]];
        }
        if (!keep)
          continue;
        Perm s = fc.pull_back(Perm(img));
        if (!h.contains(s)) {
          gens.push_back(s);
          h = PermGroup(fr.n, gens);
        }
      }
    }
    unsigned i = 0;
    while (i < a * a && entry[i] == q - 1)
      entry[i++] = 0;
    if (i == a * a)
      break;
    ++entry[i];
  }
  return h;
}

BranchResult run_small(const PermGroup& g, const OrbitalStructure& os)
{
  if (!order_gate(g))
    return BranchResult::fail("order above n^18");
  auto fr = detect_affine(g);
  if (!fr)
    return BranchResult::fail("no affine frame");

  auto tuple = small_generating_tuple(fr->g0, 4);
  if (!tuple)
    return BranchResult::fail("stabilizer is not 4-generated");

  SmallEmbeddings emb = embeddings_small(*fr);
  if (emb.cands.empty())
    return BranchResult::fail("no semilinear embedding");

  std::optional<PermGroup> best;
  std::string chosen;
  bool skipped = false;
  for (const FieldEmbedding& e : emb.cands) {
    auto h = brute_closure_in_agl(*fr, e.fs, os);
    if (!h) {
      skipped = true;
      continue;
    }
    if (!best || h->order() > best->order()) {
      best = h;
      chosen = "a=" + std::to_string(e.fs.a) +
               ",q=" + std::to_string(e.fs.q);
    } else if (h->order() == best->order() && !h->same_group(*best)) {
      return BranchResult::fail("equal-order candidates disagree");
    }
  }
  if (!best)
    return BranchResult::fail(skipped ? "all enumerations over cap"
                                      : "no candidate");

  assert(best->contains_all(g.generators()));
  for (const Perm& x : best->generators())
    assert(preserves_orbitals(os, x));

  std::string note = "small " + chosen;
  if (emb.class_s)
    note += " class(S)";
  if (!emb.complete)
    note += " incomplete-embeddings";
  return BranchResult::found(std::move(*best), note);
}

} // namespace r3
