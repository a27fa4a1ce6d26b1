#include "r3/affine.hpp"

#include <cassert>

namespace r3 {

Perm AffineFrame::translation(const std::vector<uint32_t>& v) const
{
  Perm t(n);
  for (size_t i = 0; i < d; ++i)
    for (uint32_t k = 0; k < v[i]; ++k)
      t = t * basis_tr[i];
  return t;
}

Perm AffineFrame::perm_of_matrix(const MatrixModP& m) const
{
  assert(m.p == p && m.d == d);
  std::vector<uint32_t> img(n);
  for (uint32_t x = 0; x < n; ++x)
    img[x] = point_of(row_vec_mul(label[x], m));
  return Perm(img);
}

Perm AffineFrame::perm_of_affine(const MatrixModP& m,
                                 const std::vector<uint32_t>& t) const
{
  assert(m.p == p && m.d == d && t.size() == d);
  std::vector<uint32_t> img(n);
  for (uint32_t x = 0; x < n; ++x) {
    std::vector<uint32_t> v = row_vec_mul(label[x], m);
    for (unsigned i = 0; i < d; ++i)
      v[i] = (v[i] + t[i]) % p;
    img[x] = point_of(v);
  }
  return Perm(img);
}

namespace {

Perm perm_pow(Perm b, Bigint e)
{
  Perm r(b.degree());
  while (e > 0) {
    if ((e & 1) != 0)
      r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool regular_elementary_abelian(const PermGroup& v, unsigned p)
{
  if (v.order() != v.degree() || !v.is_transitive() || !v.is_abelian())
    return false;
  for (const Perm& g : v.generators())
    if (element_order(g) != p)
      return false;
  return true;
}

std::optional<AffineFrame> build_frame(const PermGroup& g, const PermGroup& v,
                                       unsigned p, unsigned d)
{
  unsigned n = g.degree();

  // greedy minimal generating set: keep generators that enlarge the orbit
  // of 0, which equals the generated subgroup under a regular action
  std::vector<Perm> basis;
  for (const Perm& t : v.generators()) {
    size_t before = basis.empty() ? 1 : PermGroup(n, basis).orbit_of(0).size();
    std::vector<Perm> trial = basis;
    trial.push_back(t);
    if (PermGroup(n, trial).orbit_of(0).size() > before)
      basis = std::move(trial);
    if (basis.size() == d)
      break;
  }
  if (basis.size() != d)
    return std::nullopt;

  AffineFrame fr;
  fr.p = p;
  fr.d = d;
  fr.n = n;
  fr.basis_tr = basis;
  fr.label.assign(n, {});
  fr.point.assign(n, UINT32_MAX);

  fr.label[0] = std::vector<uint32_t>(d, 0);
  fr.point[0] = 0;
  std::vector<uint32_t> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    uint32_t x = queue[qi];
    for (unsigned i = 0; i < d; ++i) {
      uint32_t y = basis[i][x];
      if (!fr.label[y].empty())
        continue;
      std::vector<uint32_t> lv = fr.label[x];
      lv[i] = (lv[i] + 1) % p;
      fr.label[y] = std::move(lv);
      fr.point[fr.pack(fr.label[y])] = y;
      queue.push_back(y);
    }
  }
  if (queue.size() != n)
    return std::nullopt;

  fr.g0 = g.point_stabilizer(0);
  for (const Perm& s : fr.g0.generators())
    fr.g0_mats.push_back(matrix_of(fr, s));
  return fr;
}

} // namespace

std::optional<AffineFrame> detect_affine(const PermGroup& g)
{
  assert(g.is_transitive());
  unsigned n = g.degree();

  unsigned p = 0, d = 0;
  {
    unsigned m = n;
    for (unsigned f = 2; f <= m; ++f)
      if (m % f == 0) {
        p = f;
        while (m % f == 0) {
          m /= f;
          ++d;
        }
        break;
      }
    if (m != 1)
      return std::nullopt; // not a prime power
  }

  // fast path for primitive inputs: a regular elementary abelian normal
  // subgroup is then the unique minimal normal subgroup, so the normal
  // closure of any single translation recovers it; translations are the
  // order p elements without fixed points
  if (g.is_primitive()) {
    std::mt19937_64 rng(0xaff1e2);
    std::vector<Perm> cands = g.generators();
    for (int i = 0; i < 16; ++i)
      cands.push_back(g.random_element(rng));
    for (const Perm& h : cands) {
      if (h.is_identity())
        continue;
      Bigint o = element_order(h);
      if (o % p != 0)
        continue;
      Perm z = perm_pow(h, o / p);
      bool fpf = true;
      for (uint32_t x = 0; x < n && fpf; ++x)
        if (z[x] == x)
          fpf = false;
      if (!fpf)
        continue;
      PermGroup nrm = g.normal_closure({z});
      if (regular_elementary_abelian(nrm, p))
        return build_frame(g, nrm, p, d);
    }
  }

  PermGroup soc = g.socle_primitive();
  if (regular_elementary_abelian(soc, p))
    return build_frame(g, soc, p, d);

  // degenerate inputs: some normal closure of a socle generator may still
  // be regular elementary abelian
  for (const Perm& s : soc.generators()) {
    PermGroup nrm = g.normal_closure({s});
    if (regular_elementary_abelian(nrm, p)) {
      auto fr = build_frame(g, nrm, p, d);
      if (fr)
        fr->multiple_regular = true;
      return fr;
    }
  }
  return std::nullopt;
}

MatrixModP matrix_of(const AffineFrame& fr, const Perm& g)
{
  assert(g.degree() == fr.n && g[0] == 0);

  MatrixModP m(fr.p, fr.d);
  for (unsigned i = 0; i < fr.d; ++i) {
    std::vector<uint32_t> ei(fr.d, 0);
    ei[i] = 1;
    const std::vector<uint32_t>& row = fr.label[g[fr.point_of(ei)]];
    for (unsigned j = 0; j < fr.d; ++j)
      m.at(i, j) = row[j];
  }

  std::mt19937_64 rng(0xaff1e);
  std::uniform_int_distribution<uint32_t> pick(0, fr.n - 1);
  for (int t = 0; t < 8; ++t) {
    uint32_t x = pick(rng);
    assert(fr.label[g[x]] == row_vec_mul(fr.label[x], m));
  }
  return m;
}

} // namespace r3
