#include "r3/branch_tensor.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "r3/bigint.hpp"
#include "r3/branch_small.hpp"

namespace r3 {

namespace {

Bigint gl_order(unsigned m, unsigned q)
{
  Bigint qm = bigint_pow(Bigint(q), m);
  Bigint res(1);
  Bigint qi(1);
  for (unsigned i = 0; i < m; ++i) {
    res = res * (qm - qi);
    qi = qi * q;
  }
  return res;
}

Bigint sl_order(unsigned m, unsigned q)
{
  return gl_order(m, q) / Bigint(q - 1);
}

// GF(q) matrix of a permutation that is linear in the vs coordinates,
// verified on every point
std::optional<GfMat> linear_matrix_of(const FrameCoords& fc, const Perm& h)
{
  const VecSpace& vs = fc.vs;
  unsigned k = vs.k;
  GfMat m(k, k);
  for (unsigned i = 0; i < k; ++i) {
    std::vector<uint32_t> ei(k, 0);
    ei[i] = 1;
    uint32_t img = fc.to_std[h[fc.from_std[vs.point_of(ei)]]];
    std::vector<uint32_t> row = vs.coords_of(img);
    for (unsigned j = 0; j < k; ++j)
      m.at(i, j) = row[j];
  }
  for (uint32_t x = 0; x < vs.n; ++x) {
    std::vector<uint32_t> im = gf_vec_mul(vs.f, vs.coords_of(x), m);
    if (fc.from_std[vs.point_of(im)] != h[fc.from_std[x]])
      return std::nullopt;
  }
  return m;
}

// incremental row echelon over GF(q) coordinate rows
struct Echelon {
  const Gf& f;
  unsigned k;
  std::vector<std::vector<uint32_t>> rows;
  std::vector<unsigned> piv;

  Echelon(const Gf& f_, unsigned k_) : f(f_), k(k_) {}

  // reduces w in place; returns true and stores it when independent
  bool add(std::vector<uint32_t> w)
  {
    for (size_t r = 0; r < rows.size(); ++r) {
      uint32_t c = w[piv[r]];
      if (c == 0)
        continue;
      uint32_t s = f.mul(c, f.inv(rows[r][piv[r]]));
      for (unsigned j = 0; j < k; ++j)
        w[j] = f.sub(w[j], f.mul(s, rows[r][j]));
    }
    for (unsigned j = 0; j < k; ++j)
      if (w[j] != 0) {
        rows.push_back(std::move(w));
        piv.push_back(j);
        return true;
      }
    return false;
  }

  unsigned dim() const { return static_cast<unsigned>(rows.size()); }
};

// smallest dimension of a nonzero invariant subspace, by closing the span
// of each vector under the matrices; early exit once only dimension 1 or
// the running minimum could be beaten
unsigned min_invariant_dim(const VecSpace& vs, const std::vector<GfMat>& mats)
{
  unsigned best = vs.k + 1;
  for (uint32_t v = 1; v < vs.n; ++v) {
    Echelon ech(vs.f, vs.k);
    ech.add(vs.coords_of(v));
    size_t next = 0;
    bool pruned = false;
    while (next < ech.rows.size()) {
      std::vector<uint32_t> w = ech.rows[next++];
      for (const GfMat& m : mats) {
        if (ech.add(gf_vec_mul(vs.f, w, m)) && ech.dim() >= best) {
          pruned = true;
          break;
        }
      }
      if (pruned)
        break;
    }
    if (!pruned)
      best = std::min(best, ech.dim());
    if (best == 1)
      break;
  }
  return best;
}

} // namespace

std::optional<std::pair<unsigned, unsigned>>
tensor_parameters(const OrbitalStructure& os, unsigned p)
{
  if (!is_rank3(os))
    return std::nullopt;
  std::vector<uint64_t> sd = subdegrees(os);
  for (int which : {1, 0}) {
    uint64_t s = sd[which];
    uint64_t q = 1;
    while (s % p == 0) {
      q *= p;
      s /= p;
    }
    if (q == 1)
      continue;
    uint64_t t = os.n;
    unsigned e = 0;
    while (t > 1 && t % q == 0) {
      t /= q;
      ++e;
    }
    if (t != 1 || e % 2 != 0 || e / 2 < 2)
      continue;
    return std::make_pair(static_cast<unsigned>(q), e / 2);
  }
  return std::nullopt;
}

bool check_tensor_basis(const FrameCoords& fc, const std::vector<Perm>& gens,
                        const TensorBasis& tb)
{
  const VecSpace& vs = fc.vs;
  const Gf& f = vs.f;
  unsigned m = tb.m;
  for (const Perm& g : gens) {
    for (uint32_t u = 1; u < f.q * f.q; ++u) {
      uint32_t u0 = u % f.q, u1 = u / f.q;
      uint64_t wn = 1;
      for (unsigned j = 0; j < m; ++j)
        wn *= f.q;
      for (uint64_t wi = 1; wi < wn; ++wi) {
        std::vector<uint32_t> wv(m);
        uint64_t t = wi;
        for (unsigned j = 0; j < m; ++j) {
          wv[j] = static_cast<uint32_t>(t % f.q);
          t /= f.q;
        }
        // coefficients of the simple tensor u' (x) w'
        std::vector<uint32_t> c(2 * m);
        for (unsigned j = 0; j < m; ++j) {
          c[j] = f.mul(u0, wv[j]);
          c[m + j] = f.mul(u1, wv[j]);
        }
        uint32_t x = vs.point_of(gf_vec_mul(f, c, tb.b));
        uint32_t y = fc.to_std[g[fc.from_std[x]]];
        std::vector<uint32_t> d = gf_vec_mul(f, vs.coords_of(y), tb.binv);
        GfMat dm(2, m);
        for (unsigned j = 0; j < 2 * m; ++j)
          dm.e[j] = d[j];
        if (gf_rank(f, dm) > 1)
          return false;
      }
    }
  }
  return true;
}

std::optional<PermGroup> extract_slw(const AffineFrame& fr,
                                     const FrameCoords& fc, unsigned m)
{
  assert(m >= 4);
  const Gf& f = fc.vs.f;
  Bigint target = sl_order(m, f.q);

  PermGroup d1 = fr.g0.derived_subgroup();
  PermGroup h = d1.derived_subgroup();
  if (h.trivial())
    return std::nullopt;

  std::vector<Perm> cands = h.generators();
  std::mt19937_64 rng(0x7e4507);
  for (int i = 0; i < 32; ++i)
    cands.push_back(h.random_element(rng));

  std::vector<Perm> join;
  std::vector<const Perm*> tried;
  for (const Perm& cand : cands) {
    if (cand.is_identity())
      continue;
    if (std::find_if(tried.begin(), tried.end(), [&](const Perm* p) {
          return *p == cand;
        }) != tried.end())
      continue;
    tried.push_back(&cand);

    PermGroup nh = h.normal_closure({cand});
    std::vector<GfMat> mats;
    bool linear = true;
    for (const Perm& s : nh.generators()) {
      auto mm = linear_matrix_of(fc, s);
      if (!mm) {
        linear = false;
        break;
      }
      mats.push_back(std::move(*mm));
    }
    if (!linear)
      continue;
    if (min_invariant_dim(fc.vs, mats) != m)
      continue;
    for (const Perm& s : nh.generators())
      join.push_back(s);
  }
  if (join.empty())
    return std::nullopt;

  PermGroup s = PermGroup(fr.n, join).derived_subgroup();
  if (s.order() != target)
    return std::nullopt;
  if (s.derived_subgroup().order() != target)
    return std::nullopt;
  for (const Perm& g : fr.g0.generators())
    for (const Perm& x : s.generators())
      if (!s.contains(conjugate(x, g)))
        return std::nullopt;
  return s;
}

std::optional<Perm> shift_independent(const PermGroup& s,
                                      const std::vector<uint32_t>& pset,
                                      const std::vector<uint32_t>& qset)
{
  unsigned n = s.degree();
  std::vector<char> inq(n, 0);
  for (uint32_t x : qset)
    inq[x] = 1;

  auto meets_only_zero = [&](const Perm& g) {
    unsigned hits = 0;
    for (uint32_t x : pset)
      if (inq[g[x]])
        ++hits;
    return hits == 1; // the common zero point
  };

  for (uint32_t gamma : pset) {
    std::vector<char> seen(n, 0);
    std::vector<Perm> wit(n, Perm(1));
    std::vector<uint32_t> queue{gamma};
    seen[gamma] = 1;
    wit[gamma] = Perm(n);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      uint32_t x = queue[qi];
      for (const Perm& g : s.generators()) {
        uint32_t y = g[x];
        if (seen[y])
          continue;
        seen[y] = 1;
        wit[y] = wit[x] * g;
        queue.push_back(y);
      }
    }
    for (uint32_t y : queue) {
      if (inq[y])
        continue;
      if (meets_only_zero(wit[y]))
        return wit[y];
    }
  }
  return std::nullopt;
}

namespace {

// vs points of the orbit of simple tensors: the suborbit of 0 whose size
// is (q + 1)(q^m - 1)
std::optional<std::vector<uint32_t>> simple_tensor_pool(
    const FrameCoords& fc, const OrbitalStructure& os, unsigned m)
{
  uint64_t q = fc.vs.f.q;
  uint64_t qm = 1;
  for (unsigned j = 0; j < m; ++j)
    qm *= q;
  uint64_t want = (q + 1) * (qm - 1);

  for (uint16_t c = 0; c < os.rank; ++c) {
    if (os.at(0, 0) == c)
      continue;
    std::vector<uint32_t> pool;
    for (uint32_t y = 0; y < os.n; ++y)
      if (y != 0 && os.at(0, y) == c)
        pool.push_back(fc.to_std[y]);
    if (pool.size() == want)
      return pool;
  }
  return std::nullopt;
}

struct BasisSearch {
  const VecSpace& vs;
  const std::vector<uint32_t>& pool;
  std::vector<char> inpool;
  unsigned m;
  size_t budget = size_t(1) << 22;

  std::vector<uint32_t> chosen;   // vs points, row-major
  std::vector<uint32_t> rowspan;  // span points of the current first row
  Echelon ech;

  BasisSearch(const VecSpace& vs_, const std::vector<uint32_t>& pool_,
              unsigned m_)
    : vs(vs_), pool(pool_), inpool(vs_.n, 0), m(m_), ech(vs_.f, vs_.k)
  {
    for (uint32_t x : pool)
      inpool[x] = 1;
  }

  // all c1*a + c2*z for c2 != 0 land in the pool
  bool pair_ok(uint32_t a, uint32_t z) const
  {
    const Gf& f = vs.f;
    std::vector<uint32_t> av = vs.coords_of(a), zv = vs.coords_of(z);
    for (uint32_t c1 = 0; c1 < f.q; ++c1)
      for (uint32_t c2 = 1; c2 < f.q; ++c2) {
        uint32_t pt =
            vs.point_of(vs.add(vs.smul(c1, av), vs.smul(c2, zv)));
        if (!inpool[pt])
          return false;
      }
    return true;
  }

  // extends span (given by its point list) by z, pool-checking every new
  // point; empties the result on failure
  std::vector<uint32_t> span_extend(const std::vector<uint32_t>& span,
                                    uint32_t z) const
  {
    const Gf& f = vs.f;
    std::vector<uint32_t> zv = vs.coords_of(z);
    std::vector<uint32_t> out = span;
    for (uint32_t s : span)
      for (uint32_t c = 1; c < f.q; ++c) {
        uint32_t pt = vs.point_of(vs.add(vs.coords_of(s), vs.smul(c, zv)));
        if (pt == 0 || !inpool[pt])
          return {};
        out.push_back(pt);
      }
    return out;
  }
};

std::optional<TensorBasis> finish_basis(const FrameCoords& fc,
                                        const std::vector<Perm>& g0_gens,
                                        const std::vector<uint32_t>& chosen,
                                        unsigned m)
{
  const VecSpace& vs = fc.vs;
  GfMat b(2 * m, 2 * m);
  for (unsigned i = 0; i < 2 * m; ++i) {
    std::vector<uint32_t> row = vs.coords_of(chosen[i]);
    for (unsigned j = 0; j < 2 * m; ++j)
      b.at(i, j) = row[j];
  }
  auto binv = gf_inverse(vs.f, b);
  if (!binv)
    return std::nullopt;
  TensorBasis tb{m, b, *binv};
  if (!check_tensor_basis(fc, g0_gens, tb))
    return std::nullopt;
  return tb;
}

// backtracking over pool vectors, first row then second, with all-simple
// span filters; the first vector is pinned to pool[0]
std::optional<TensorBasis> scan_basis(const AffineFrame& fr,
                                      const FrameCoords& fc,
                                      const std::vector<uint32_t>& pool,
                                      unsigned m)
{
  BasisSearch bs(fc.vs, pool, m);
  std::optional<TensorBasis> found;

  // per-depth span point lists for the two rows
  std::vector<std::vector<uint32_t>> row1(m + 1), row2(m + 1);
  row1[1] = {0, pool[0]};
  for (uint32_t c = 2; c < fc.vs.f.q; ++c)
    row1[1].push_back(
        fc.vs.point_of(fc.vs.smul(c, fc.vs.coords_of(pool[0]))));
  row2[0] = {0};

  std::vector<uint32_t> chosen{pool[0]};
  Echelon ech(fc.vs.f, fc.vs.k);
  ech.add(fc.vs.coords_of(pool[0]));

  // scalar multiples of the seed must be simple too
  for (uint32_t pt : row1[1])
    if (pt != 0 && !bs.inpool[pt])
      return std::nullopt;

  size_t nodes = 0;
  auto step = [&](auto&& self, unsigned depth) -> bool {
    if (++nodes > bs.budget)
      return true; // abort, budget exhausted
    if (depth == 2 * m) {
      found = finish_basis(fc, fr.g0.generators(), chosen, m);
      return found.has_value();
    }
    unsigned i = depth / m, j = depth % m; // 0-based factor indices
    for (uint32_t z : pool) {
      if (std::find(chosen.begin(), chosen.end(), z) != chosen.end())
        continue;
      if (i == 1 && !bs.pair_ok(chosen[j], z))
        continue;
      std::vector<uint32_t>& row = (i == 0) ? row1[j] : row2[j];
      std::vector<uint32_t> ext = bs.span_extend(row, z);
      if (ext.empty())
        continue;
      if (!ech.add(fc.vs.coords_of(z)))
        continue;
      ((i == 0) ? row1 : row2)[j + 1] = std::move(ext);
      chosen.push_back(z);
      if (self(self, depth + 1))
        return true;
      chosen.pop_back();
      ech.rows.pop_back();
      ech.piv.pop_back();
    }
    return false;
  };
  step(step, 1);
  return found;
}

// seed pair -> span accumulation route for m >= 4
std::optional<TensorBasis> accumulate_basis(const AffineFrame& fr,
                                            const FrameCoords& fc,
                                            const std::vector<uint32_t>& pool,
                                            unsigned m)
{
  auto slw = extract_slw(fr, fc, m);
  if (!slw)
    return std::nullopt;

  BasisSearch bs(fc.vs, pool, m);
  const VecSpace& vs = fc.vs;
  uint32_t v1 = pool[0];

  for (uint32_t v2 : pool) {
    if (v2 == v1 || !bs.pair_ok(v1, v2))
      continue;
    // P = span(v1, v2) as frame points
    std::vector<uint32_t> pstd{0};
    {
      std::vector<uint32_t> a = vs.coords_of(v1), b = vs.coords_of(v2);
      for (uint32_t c1 = 0; c1 < vs.f.q; ++c1)
        for (uint32_t c2 = 0; c2 < vs.f.q; ++c2) {
          if (c1 == 0 && c2 == 0)
            continue;
          pstd.push_back(vs.point_of(vs.add(vs.smul(c1, a), vs.smul(c2, b))));
        }
    }
    std::vector<uint32_t> pframe;
    for (uint32_t x : pstd)
      pframe.push_back(fc.from_std[x]);

    std::vector<Perm> gs{Perm(fr.n)};
    std::vector<uint32_t> qstd = pstd; // accumulated span, vs points
    bool ok = true;
    for (unsigned i = 1; i < m; ++i) {
      std::vector<uint32_t> qframe;
      for (uint32_t x : qstd)
        qframe.push_back(fc.from_std[x]);
      auto g = shift_independent(*slw, pframe, qframe);
      if (!g) {
        ok = false;
        break;
      }
      // extend the span by the image of P
      std::vector<uint32_t> fresh;
      for (uint32_t x : pframe) {
        uint32_t y = fc.to_std[(*g)[x]];
        if (y != 0)
          fresh.push_back(y);
      }
      std::vector<uint32_t> bigger;
      for (uint32_t a : qstd)
        for (uint32_t b : fresh)
          bigger.push_back(vs.point_of(vs.add(vs.coords_of(a),
                                              vs.coords_of(b))));
      for (uint32_t b : fresh)
        bigger.push_back(b);
      std::sort(bigger.begin(), bigger.end());
      bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
      for (uint32_t a : qstd)
        bigger.push_back(a);
      std::sort(bigger.begin(), bigger.end());
      bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
      // the sum must be direct: dimensions add up
      uint64_t want = 1;
      for (unsigned t = 0; t < 2 * (i + 1); ++t)
        want *= vs.f.q;
      if (bigger.size() != want) {
        ok = false;
        break;
      }
      qstd = std::move(bigger);
      gs.push_back(std::move(*g));
    }
    if (!ok)
      continue;

    std::vector<uint32_t> chosen(2 * m);
    for (unsigned j = 0; j < m; ++j) {
      chosen[j] = fc.to_std[gs[j][fc.from_std[v1]]];
      chosen[m + j] = fc.to_std[gs[j][fc.from_std[v2]]];
    }
    auto tb = finish_basis(fc, fr.g0.generators(), chosen, m);
    if (tb)
      return tb;
  }
  return std::nullopt;
}

} // namespace

std::optional<TensorBasis> find_tensor_basis(const AffineFrame& fr,
                                             const FrameCoords& fc,
                                             const OrbitalStructure& os,
                                             unsigned m)
{
  auto pool = simple_tensor_pool(fc, os, m);
  if (!pool)
    return std::nullopt;
  if (m <= 3)
    return scan_basis(fr, fc, *pool, m);
  return accumulate_basis(fr, fc, *pool, m);
}

PermGroup emit_tensor_closure(const AffineFrame& fr, const FrameCoords& fc,
                              const TensorBasis& tb)
{
  const VecSpace& vs = fc.vs;
  const Gf& f = vs.f;
  unsigned m = tb.m;

  std::vector<Perm> gens = fr.basis_tr;
  auto push_mat = [&](const GfMat& mp) {
    GfMat conj = gf_mul(f, gf_mul(f, tb.binv, mp), tb.b);
    gens.push_back(fc.pull_back(vs.perm_of_mat(conj)));
  };

  for (const GfMat& a : gl_generators(f, 2))
    push_mat(gf_kron(f, a, GfMat::identity(m)));
  for (const GfMat& b : gl_generators(f, m))
    push_mat(gf_kron(f, GfMat::identity(2), b));

  if (f.r > 1) {
    // coefficient-wise Frobenius in the tensor basis
    std::vector<uint32_t> img(vs.n);
    for (uint32_t x = 0; x < vs.n; ++x) {
      std::vector<uint32_t> c = gf_vec_mul(f, vs.coords_of(x), tb.binv);
      for (uint32_t& e : c)
        e = f.frob(e, 1);
      img[x] = vs.point_of(gf_vec_mul(f, c, tb.b));
    }
    gens.push_back(fc.pull_back(Perm(img)));
  }

  if (m == 2) {
    GfMat sw(4, 4);
    for (unsigned i = 0; i < 2; ++i)
      for (unsigned j = 0; j < 2; ++j)
        sw.at(i * 2 + j, j * 2 + i) = 1;
    push_mat(sw);
  }

  PermGroup out(fr.n, gens);
  Bigint expected = bigint_pow(Bigint(f.q), 2 * m) * gl_order(2, f.q) *
                    gl_order(m, f.q) / Bigint(f.q - 1) * f.r *
                    (m == 2 ? 2 : 1);
  assert(out.order() == expected);
  return out;
}

BranchResult run_tensor(const PermGroup& g, const OrbitalStructure& os)
{
  auto fr = detect_affine(g);
  if (!fr)
    return BranchResult::fail("no affine frame");
  auto qm = tensor_parameters(os, fr->p);
  if (!qm)
    return BranchResult::fail("no tensor parameters");
  auto [q, m] = *qm;

  SmallEmbeddings emb = embeddings_small(*fr);
  bool anyfield = false;
  for (const FieldEmbedding& e : emb.cands) {
    if (e.fs.q != q)
      continue;
    anyfield = true;
    FrameCoords fc = frame_coords(*fr, e.fs);
    auto tb = find_tensor_basis(*fr, fc, os, m);
    if (!tb)
      continue;
    PermGroup h = emit_tensor_closure(*fr, fc, *tb);
    assert(h.contains_all(g.generators()));
    for (const Perm& x : h.generators())
      assert(preserves_orbitals(os, x));
    return BranchResult::found(std::move(h),
                               "tensor q=" + std::to_string(q) +
                               ",m=" + std::to_string(m));
  }
  return BranchResult::fail(anyfield ? "no embedding gives a tensor basis"
                                     : "no matching field embedding");
}

} // namespace r3
