#include "r3/gf_linear.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>

namespace r3 {

MatrixSpace centralizer_space(unsigned p, unsigned d,
                              const std::vector<MatrixModP>& gens)
{
  std::vector<std::vector<uint32_t>> rows;
  for (const MatrixModP& g : gens) {
    assert(g.p == p && g.d == d);
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) {
        std::vector<uint32_t> row(d * d, 0);
        for (unsigned k = 0; k < d; ++k) {
          row[i * d + k] = (row[i * d + k] + g.at(k, j)) % p;
          row[k * d + j] = (row[k * d + j] + p - g.at(i, k) % p) % p;
        }
        rows.push_back(std::move(row));
      }
  }

  MatrixSpace sp;
  sp.p = p;
  sp.d = d;
  for (const auto& v : nullspace(p, d * d, std::move(rows))) {
    MatrixModP m(p, d);
    m.e.assign(v.begin(), v.end());
    sp.basis.push_back(std::move(m));
  }
  return sp;
}

namespace {

MatrixModP combine(const MatrixSpace& sp, const std::vector<uint32_t>& coeff)
{
  MatrixModP m(sp.p, sp.d);
  for (size_t i = 0; i < sp.basis.size(); ++i)
    if (coeff[i] != 0)
      m = m + scaled(sp.basis[i], coeff[i]);
  return m;
}

bool next_odometer(std::vector<uint32_t>& coeff, unsigned p)
{
  for (size_t i = 0; i < coeff.size(); ++i) {
    if (++coeff[i] < p)
      return true;
    coeff[i] = 0;
  }
  return false;
}

} // namespace

std::optional<std::vector<MatrixModP>>
enumerate_units(const MatrixSpace& space, size_t cap)
{
  size_t total = 1;
  for (size_t i = 0; i < space.basis.size(); ++i) {
    if (total > cap / space.p)
      return std::nullopt;
    total *= space.p;
  }

  std::vector<MatrixModP> units;
  std::vector<uint32_t> coeff(space.basis.size(), 0);
  while (next_odometer(coeff, space.p)) {
    MatrixModP m = combine(space, coeff);
    if (mat_inverse(m))
      units.push_back(std::move(m));
  }
  return units;
}

std::optional<std::vector<unsigned>>
semilinear_check(const std::vector<MatrixModP>& gens,
                 const FieldStructure& fs)
{
  // exponents p^i mod (q - 1) indexed by i
  std::vector<uint32_t> pex(fs.gf.r);
  uint64_t e = 1;
  for (unsigned i = 0; i < fs.gf.r; ++i) {
    pex[i] = static_cast<uint32_t>(e);
    e = e * fs.p % (fs.q - 1 > 0 ? fs.q - 1 : 1);
  }

  std::vector<unsigned> res;
  for (const MatrixModP& g : gens) {
    auto ginv = mat_inverse(g);
    if (!ginv)
      return std::nullopt;
    MatrixModP conj = *ginv * fs.c * g;
    uint32_t code = fs.code_of(conj);
    if (code == UINT32_MAX || code == 0)
      return std::nullopt;
    if (fs.q == 2) {
      res.push_back(0);
      continue;
    }
    uint32_t ex = code - 1;
    unsigned found = fs.gf.r;
    for (unsigned i = 0; i < fs.gf.r; ++i)
      if (pex[i] % (fs.q - 1) == ex) {
        found = i;
        break;
      }
    if (found == fs.gf.r)
      return std::nullopt;
    res.push_back(found);
  }
  return res;
}

namespace {

// smallest m | d with u^(p^m - 1) = 1 whose exact order is p^m - 1
std::optional<unsigned> field_order_divisor(const MatrixModP& u, unsigned d)
{
  for (unsigned m = 1; m <= d; ++m) {
    if (d % m != 0)
      continue;
    uint64_t qm = 1;
    bool overflow = false;
    for (unsigned i = 0; i < m; ++i) {
      qm *= u.p;
      overflow |= qm > (1u << 20);
    }
    if (overflow)
      return std::nullopt;
    if (!mat_pow(u, qm - 1).is_identity())
      continue;
    // exact order: no proper prime-quotient power may be the identity
    uint64_t rest = qm - 1;
    for (uint64_t ell = 2; ell * ell <= rest; ++ell)
      if (rest % ell == 0) {
        if (mat_pow(u, (qm - 1) / ell).is_identity())
          return std::nullopt;
        while (rest % ell == 0)
          rest /= ell;
      }
    if (rest > 1 && mat_pow(u, (qm - 1) / rest).is_identity())
      return std::nullopt;
    return m;
  }
  return std::nullopt;
}

} // namespace

std::vector<FieldEmbedding>
enumerate_field_structures(unsigned p, unsigned d,
                           const std::vector<MatrixModP>& g0_gens,
                           const std::vector<MatrixModP>& derived_gens,
                           bool* complete)
{
  if (complete)
    *complete = true;

  MatrixSpace cs = centralizer_space(p, d, derived_gens);
  auto units = enumerate_units(cs, 1u << 16);

  std::vector<FieldEmbedding> res;
  std::vector<std::set<MatrixModP>> seen_sets;
  std::vector<uint32_t> seen_q;

  auto try_unit = [&](const MatrixModP& u) {
    auto m = field_order_divisor(u, d);
    if (!m)
      return;
    uint64_t qm = 1;
    for (unsigned i = 0; i < *m; ++i)
      qm *= p;
    for (size_t s = 0; s < seen_sets.size(); ++s)
      if (seen_q[s] == qm && seen_sets[s].count(u))
        return;
    auto fs = field_from_element(u, d / *m);
    if (!fs)
      return;
    std::set<MatrixModP> elems(fs->powers.begin(), fs->powers.end());
    for (size_t s = 0; s < seen_sets.size(); ++s)
      if (seen_q[s] == qm && seen_sets[s] == elems)
        return;
    auto frob = semilinear_check(g0_gens, *fs);
    seen_sets.push_back(std::move(elems));
    seen_q.push_back(static_cast<uint32_t>(qm));
    if (!frob)
      return;
    res.push_back({std::move(*fs), std::move(*frob)});
  };

  if (units) {
    for (const MatrixModP& u : *units)
      try_unit(u);
  } else {
    if (complete)
      *complete = false;
    // the prime-field structure survives: scalars always centralize
    uint32_t root = 1;
    if (p > 2) {
      for (root = 2; root < p; ++root) {
        bool prim = true;
        uint64_t rest = p - 1;
        for (uint64_t ell = 2; ell * ell <= rest; ++ell)
          if (rest % ell == 0) {
            uint64_t pw = 1, b = root;
            for (uint64_t e = (p - 1) / ell; e > 0; e >>= 1) {
              if (e & 1)
                pw = pw * b % p;
              b = b * b % p;
            }
            prim &= pw != 1;
            while (rest % ell == 0)
              rest /= ell;
          }
        if (rest > 1) {
          uint64_t pw = 1, b = root;
          for (uint64_t e = (p - 1) / rest; e > 0; e >>= 1) {
            if (e & 1)
              pw = pw * b % p;
            b = b * b % p;
          }
          prim &= pw != 1;
        }
        if (prim)
          break;
      }
    }
    try_unit(scaled(MatrixModP::identity(p, d), root));
  }
  return res;
}

std::optional<MatrixModP>
tuple_intertwiner(const std::vector<MatrixModP>& gs,
                  const std::vector<MatrixModP>& hs,
                  bool* complete)
{
  assert(gs.size() == hs.size());
  if (complete)
    *complete = true;
  if (gs.empty())
    return std::nullopt;

  unsigned p = gs[0].p, d = gs[0].d;
  std::vector<std::vector<uint32_t>> rows;
  for (size_t t = 0; t < gs.size(); ++t) {
    const MatrixModP& g = gs[t];
    const MatrixModP& h = hs[t];
    assert(g.p == p && g.d == d && h.p == p && h.d == d);
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) {
        std::vector<uint32_t> row(d * d, 0);
        for (unsigned k = 0; k < d; ++k) {
          row[k * d + j] = (row[k * d + j] + g.at(i, k)) % p;
          row[i * d + k] = (row[i * d + k] + p - h.at(k, j) % p) % p;
        }
        rows.push_back(std::move(row));
      }
  }

  MatrixSpace sp;
  sp.p = p;
  sp.d = d;
  for (const auto& v : nullspace(p, d * d, std::move(rows))) {
    MatrixModP m(p, d);
    m.e.assign(v.begin(), v.end());
    sp.basis.push_back(std::move(m));
  }
  if (sp.basis.empty())
    return std::nullopt;

  auto verify = [&](const MatrixModP& t) {
    for (size_t i = 0; i < gs.size(); ++i)
      assert(gs[i] * t == t * hs[i]);
  };

  std::mt19937_64 rng(0x7e57ed);
  std::uniform_int_distribution<uint32_t> pick(0, p - 1);
  for (int tries = 0; tries < 64; ++tries) {
    std::vector<uint32_t> coeff(sp.basis.size());
    for (auto& c : coeff)
      c = pick(rng);
    MatrixModP t = combine(sp, coeff);
    if (mat_inverse(t)) {
      verify(t);
      return t;
    }
  }

  auto all = enumerate_units(sp, 1u << 16);
  if (!all) {
    if (complete)
      *complete = false;
    return std::nullopt;
  }
  if (all->empty())
    return std::nullopt;
  verify(all->front());
  return all->front();
}

} // namespace r3
