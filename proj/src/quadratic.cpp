#include "r3/quadratic.hpp"

#include <cassert>

#include "r3/perm_group.hpp"

namespace r3 {

uint32_t aniso_coeff(const Gf& f)
{
  for (uint32_t b = 1; b < f.q; ++b) {
    bool root = false;
    for (uint32_t x = 0; x < f.q && !root; ++x)
      root = f.add(f.add(f.mul(x, x), x), b) == 0;
    if (!root)
      return b;
  }
  assert(false && "no irreducible t^2 + t + b");
  return 0;
}

uint32_t QuadForm::eval(const std::vector<uint32_t>& v) const
{
  assert(v.size() == 2 * m);
  uint32_t acc = 0;
  for (unsigned i = 0; i + 1 < m; ++i)
    acc = f.add(acc, f.mul(v[2 * i], v[2 * i + 1]));
  uint32_t x = v[2 * m - 2], y = v[2 * m - 1];
  if (eps > 0)
    acc = f.add(acc, f.mul(x, y));
  else
    acc = f.add(acc, f.add(f.mul(x, x),
                           f.add(f.mul(x, y), f.mul(b, f.mul(y, y)))));
  return acc;
}

uint32_t QuadForm::bilin(const std::vector<uint32_t>& x,
                         const std::vector<uint32_t>& y) const
{
  std::vector<uint32_t> s(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    s[i] = f.add(x[i], y[i]);
  return f.sub(f.sub(eval(s), eval(x)), eval(y));
}

QuadForm standard_form(const Gf& f, unsigned m, int eps)
{
  assert(m >= 1 && (eps == 1 || eps == -1));
  QuadForm qf{f, m, eps, eps < 0 ? aniso_coeff(f) : 0};
  return qf;
}

Bigint orthogonal_order(const Gf& f, unsigned m, int eps)
{
  Bigint q = f.q;
  Bigint res = 2 * bigint_pow(q, m * (m - 1));
  res *= bigint_pow(q, m) - eps;
  for (unsigned i = 1; i < m; ++i)
    res *= bigint_pow(q, 2 * i) - 1;
  return res;
}

FormTable table_of(const VecSpace& vs, const QuadForm& qf)
{
  FormTable t(vs.n);
  for (uint32_t x = 0; x < vs.n; ++x)
    t[x] = qf.eval(vs.coords_of(x));
  return t;
}

namespace {

uint32_t table_bilin(const VecSpace& vs, const FormTable& kappa, uint32_t x,
                     uint32_t y)
{
  uint32_t s = vs.point_of(vs.add(vs.coords_of(x), vs.coords_of(y)));
  return vs.f.sub(vs.f.sub(kappa[s], kappa[x]), kappa[y]);
}

// kernel vectors t with sum_j t_j a(i, j) = 0 for every row i
std::vector<std::vector<uint32_t>> gf_kernel(const Gf& f, GfMat a)
{
  unsigned rank = 0;
  std::vector<unsigned> pivot;
  for (unsigned col = 0; col < a.cols && rank < a.rows; ++col) {
    unsigned piv = rank;
    while (piv < a.rows && a.at(piv, col) == 0)
      ++piv;
    if (piv == a.rows)
      continue;
    for (unsigned j = 0; j < a.cols; ++j)
      std::swap(a.at(rank, j), a.at(piv, j));
    uint32_t s = f.inv(a.at(rank, col));
    for (unsigned j = 0; j < a.cols; ++j)
      a.at(rank, j) = f.mul(a.at(rank, j), s);
    for (unsigned r = 0; r < a.rows; ++r) {
      if (r == rank || a.at(r, col) == 0)
        continue;
      uint32_t fac = a.at(r, col);
      for (unsigned j = 0; j < a.cols; ++j)
        a.at(r, j) = f.sub(a.at(r, j), f.mul(fac, a.at(rank, j)));
    }
    pivot.push_back(col);
    ++rank;
  }
  std::vector<std::vector<uint32_t>> basis;
  std::vector<bool> is_pivot(a.cols, false);
  for (unsigned c : pivot)
    is_pivot[c] = true;
  for (unsigned free = 0; free < a.cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<uint32_t> v(a.cols, 0);
    v[free] = 1;
    for (unsigned r = 0; r < rank; ++r)
      v[pivot[r]] = f.neg(a.at(r, free));
    basis.push_back(v);
  }
  return basis;
}

} // namespace

bool is_homogeneous(const VecSpace& vs, const FormTable& kappa)
{
  for (uint32_t x = 0; x < vs.n; ++x)
    for (uint32_t c = 0; c < vs.f.q; ++c) {
      uint32_t cx = vs.point_of(vs.smul(c, vs.coords_of(x)));
      if (kappa[cx] != vs.f.mul(vs.f.mul(c, c), kappa[x]))
        return false;
    }
  return true;
}

GfMat gram_of(const VecSpace& vs, const FormTable& kappa)
{
  unsigned k = vs.k;
  std::vector<uint32_t> unit(k);
  for (unsigned i = 0; i < k; ++i) {
    std::vector<uint32_t> e(k, 0);
    e[i] = 1;
    unit[i] = vs.point_of(e);
  }
  GfMat g(k, k);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      g.at(i, j) = table_bilin(vs, kappa, unit[i], unit[j]);
  return g;
}

bool is_bilinear(const VecSpace& vs, const FormTable& kappa, const GfMat& gram)
{
  for (uint32_t x = 0; x < vs.n; ++x) {
    std::vector<uint32_t> gx = gf_vec_mul(vs.f, vs.coords_of(x), gram);
    for (uint32_t y = 0; y < vs.n; ++y) {
      std::vector<uint32_t> cy = vs.coords_of(y);
      uint32_t acc = 0;
      for (unsigned j = 0; j < vs.k; ++j)
        acc = vs.f.add(acc, vs.f.mul(gx[j], cy[j]));
      if (acc != table_bilin(vs, kappa, x, y))
        return false;
    }
  }
  return true;
}

std::optional<Semisimilarity> semisimilarity_of(const VecSpace& vs,
                                                const FormTable& kappa,
                                                const Perm& g)
{
  assert(g.degree() == vs.n);
  uint32_t v0 = 0;
  while (v0 < vs.n && kappa[v0] == 0)
    ++v0;
  if (v0 == vs.n)
    return Semisimilarity{1, 0};
  for (unsigned alpha = 0; alpha < vs.f.r; ++alpha) {
    if (kappa[g[v0]] == 0)
      break;
    uint32_t lambda =
        vs.f.mul(kappa[g[v0]], vs.f.inv(vs.f.frob(kappa[v0], alpha)));
    bool ok = true;
    for (uint32_t x = 0; x < vs.n && ok; ++x)
      ok = kappa[g[x]] == vs.f.mul(lambda, vs.f.frob(kappa[x], alpha));
    if (ok)
      return Semisimilarity{lambda, alpha};
  }
  return std::nullopt;
}

namespace {

// all points of the span of the given coordinate vectors, by odometer order
std::vector<uint32_t> span_points(const VecSpace& vs,
                                  const std::vector<std::vector<uint32_t>>& b)
{
  std::vector<uint32_t> pts;
  std::vector<uint32_t> coeff(b.size(), 0);
  while (true) {
    std::vector<uint32_t> v(vs.k, 0);
    for (size_t i = 0; i < b.size(); ++i)
      if (coeff[i] != 0)
        v = vs.add(v, vs.smul(coeff[i], b[i]));
    pts.push_back(vs.point_of(v));
    size_t i = 0;
    while (i < coeff.size() && coeff[i] == vs.f.q - 1)
      coeff[i++] = 0;
    if (i == coeff.size())
      break;
    ++coeff[i];
  }
  return pts;
}

} // namespace

std::optional<StandardBasis> standard_basis(const VecSpace& vs,
                                            const FormTable& kappa)
{
  const Gf& f = vs.f;
  unsigned k = vs.k;
  if (k % 2 != 0)
    return std::nullopt;

  // current complement basis, shrinks by one orthogonal pair per round
  std::vector<std::vector<uint32_t>> rem;
  for (unsigned i = 0; i < k; ++i) {
    std::vector<uint32_t> e(k, 0);
    e[i] = 1;
    rem.push_back(e);
  }

  std::vector<std::vector<uint32_t>> hyper; // e_i, f_i interleaved
  std::vector<std::vector<uint32_t>> aniso; // final plane if anisotropic

  while (!rem.empty()) {
    std::vector<uint32_t> pts = span_points(vs, rem);
    uint32_t u = 0;
    bool found = false;
    for (uint32_t x : pts)
      if (x != 0 && kappa[x] == 0) {
        u = x;
        found = true;
        break;
      }

    if (!found) {
      // anisotropic remainder must be a single plane
      if (rem.size() != 2)
        return std::nullopt;
      uint32_t e = 0;
      for (uint32_t x : pts)
        if (kappa[x] == 1) {
          e = x;
          break;
        }
      if (e == 0)
        return std::nullopt;
      uint32_t fv = 0;
      for (uint32_t x : pts) {
        if (x == 0 || table_bilin(vs, kappa, e, x) != 1)
          continue;
        GfMat two(2, k);
        for (unsigned j = 0; j < k; ++j) {
          two.at(0, j) = vs.coords_of(e)[j];
          two.at(1, j) = vs.coords_of(x)[j];
        }
        if (gf_rank(f, two) == 2) {
          fv = x;
          break;
        }
      }
      if (fv == 0)
        return std::nullopt;
      aniso.push_back(vs.coords_of(e));
      aniso.push_back(vs.coords_of(fv));
      rem.clear();
      break;
    }

    // hyperbolic pair through the singular vector u
    uint32_t w = 0;
    for (uint32_t x : pts)
      if (table_bilin(vs, kappa, u, x) != 0) {
        w = x;
        break;
      }
    if (w == 0)
      return std::nullopt;
    std::vector<uint32_t> wc =
        vs.smul(f.inv(table_bilin(vs, kappa, u, w)), vs.coords_of(w));
    w = vs.point_of(wc);
    // make the partner singular: w - kappa(w) u
    std::vector<uint32_t> w2 =
        vs.add(wc, vs.smul(f.neg(kappa[w]), vs.coords_of(u)));
    uint32_t wp = vs.point_of(w2);
    if (kappa[wp] != 0 || table_bilin(vs, kappa, u, wp) != 1)
      return std::nullopt;
    hyper.push_back(vs.coords_of(u));
    hyper.push_back(w2);

    // restrict to the orthogonal complement of the pair
    GfMat sys(2, static_cast<unsigned>(rem.size()));
    for (size_t i = 0; i < rem.size(); ++i) {
      uint32_t ri = vs.point_of(rem[i]);
      sys.at(0, static_cast<unsigned>(i)) = table_bilin(vs, kappa, ri, u);
      sys.at(1, static_cast<unsigned>(i)) = table_bilin(vs, kappa, ri, wp);
    }
    std::vector<std::vector<uint32_t>> ker = gf_kernel(f, sys);
    if (ker.size() != rem.size() - 2)
      return std::nullopt;
    std::vector<std::vector<uint32_t>> next;
    for (const auto& t : ker) {
      std::vector<uint32_t> v(k, 0);
      for (size_t i = 0; i < rem.size(); ++i)
        if (t[i] != 0)
          v = vs.add(v, vs.smul(t[i], rem[i]));
      next.push_back(v);
    }
    rem = std::move(next);
  }

  StandardBasis sb;
  sb.eps = aniso.empty() ? 1 : -1;
  GfMat b(k, k);
  std::vector<std::vector<uint32_t>> all = hyper;
  for (const auto& v : aniso)
    all.push_back(v);
  if (all.size() != k)
    return std::nullopt;
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      b.at(i, j) = all[i][j];
  if (!gf_invertible(f, b))
    return std::nullopt;

  unsigned m = k / 2;
  if (sb.eps < 0) {
    uint32_t fp = vs.point_of(all[k - 1]);
    sb.aniso_b = kappa[fp];
  }

  // the rewritten form must match the standard pattern on every point
  QuadForm qf{f, m, sb.eps, sb.aniso_b};
  if (sb.eps < 0) {
    // t^2 + t + b must be irreducible for the minus plane
    for (uint32_t x = 0; x < f.q; ++x)
      if (f.add(f.add(f.mul(x, x), x), sb.aniso_b) == 0)
        return std::nullopt;
  }
  for (uint32_t y = 0; y < vs.n; ++y) {
    std::vector<uint32_t> v = gf_vec_mul(f, vs.coords_of(y), b);
    if (kappa[vs.point_of(v)] != qf.eval(vs.coords_of(y)))
      return std::nullopt;
  }

  // isotropic count must match the type
  uint64_t iso = 0;
  for (uint32_t x = 1; x < vs.n; ++x)
    if (kappa[x] == 0)
      ++iso;
  uint64_t qm = 1, qm1 = 1;
  for (unsigned i = 0; i < m; ++i)
    qm *= f.q;
  for (unsigned i = 0; i + 1 < m; ++i)
    qm1 *= f.q;
  uint64_t expect = sb.eps > 0 ? (qm - 1) * (qm1 + 1) : (qm + 1) * (qm1 - 1);
  if (iso != expect)
    return std::nullopt;

  sb.b = b;
  return sb;
}

namespace {

GfMat reflection_matrix(const QuadForm& qf, const std::vector<uint32_t>& w)
{
  const Gf& f = qf.f;
  unsigned k = 2 * qf.m;
  uint32_t kw = qf.eval(w);
  assert(kw != 0);
  uint32_t s = f.inv(kw);
  GfMat r = GfMat::identity(k);
  for (unsigned i = 0; i < k; ++i) {
    std::vector<uint32_t> e(k, 0);
    e[i] = 1;
    uint32_t c = f.mul(qf.bilin(e, w), s);
    for (unsigned j = 0; j < k; ++j)
      r.at(i, j) = f.sub(r.at(i, j), f.mul(c, w[j]));
  }
  return r;
}

bool preserves_form(const QuadForm& qf, const VecSpace& vs, const GfMat& g)
{
  for (uint32_t x = 0; x < vs.n; ++x) {
    std::vector<uint32_t> v = vs.coords_of(x);
    if (qf.eval(gf_vec_mul(qf.f, v, g)) != qf.eval(v))
      return false;
  }
  return true;
}

} // namespace

std::vector<GfMat> isometry_generators(const QuadForm& qf)
{
  const Gf& f = qf.f;
  unsigned k = 2 * qf.m;
  VecSpace vs(f, k);
  Bigint target = orthogonal_order(f, qf.m, qf.eps);

  std::vector<GfMat> mats;
  std::vector<Perm> perms;
  auto group = [&]() { return PermGroup(vs.n, perms); };
  PermGroup cur(vs.n, {});

  auto try_add = [&](const GfMat& m) {
    if (!preserves_form(qf, vs, m))
      return;
    Perm s = vs.perm_of_mat(m);
    if (cur.contains(s))
      return;
    mats.push_back(m);
    perms.push_back(s);
    cur = group();
  };

  for (uint32_t x = 1; x < vs.n && cur.order() < target; ++x) {
    std::vector<uint32_t> w = vs.coords_of(x);
    if (qf.eval(w) != 0)
      try_add(reflection_matrix(qf, w));
  }

  if (cur.order() < target) {
    // deterministic repairs for the cases reflections do not reach
    if (qf.m >= 2 && (qf.eps > 0 || qf.m >= 3)) {
      GfMat sw(k, k);
      for (unsigned i = 0; i < k; ++i)
        sw.at(i, i < 4 ? i ^ 2 : i) = 1; // swap the first two planes
      try_add(sw);
    }
    GfMat ip(k, k);
    for (unsigned i = 0; i < k; ++i)
      ip.at(i, i < 2 ? i ^ 1 : i) = 1; // swap within the first plane
    if (qf.m >= 2 || qf.eps > 0)
      try_add(ip);
    if (f.q > 3) {
      GfMat rot = GfMat::identity(k);
      rot.at(0, 0) = f.from_exp(1);
      rot.at(1, 1) = f.inv(f.from_exp(1));
      if (qf.m >= 2 || qf.eps > 0)
        try_add(rot);
    }
  }

  assert(cur.order() == target);
  return mats;
}

GfMat similarity_matrix(const QuadForm& qf, uint32_t mu)
{
  const Gf& f = qf.f;
  unsigned k = 2 * qf.m;
  assert(mu != 0);
  GfMat d(k, k);
  unsigned planes = qf.eps > 0 ? qf.m : qf.m - 1;
  for (unsigned i = 0; i < planes; ++i) {
    d.at(2 * i, 2 * i) = 1;
    d.at(2 * i + 1, 2 * i + 1) = mu;
  }
  if (qf.eps < 0) {
    // multiplication by a plane element of norm mu
    uint32_t x0 = 0, y0 = 0;
    bool found = false;
    for (uint32_t x = 0; x < f.q && !found; ++x)
      for (uint32_t y = 0; y < f.q && !found; ++y) {
        uint32_t val = f.add(f.mul(x, x),
                             f.add(f.mul(x, y), f.mul(qf.b, f.mul(y, y))));
        if (val == mu) {
          x0 = x;
          y0 = y;
          found = true;
        }
      }
    assert(found);
    unsigned o = k - 2;
    d.at(o, o) = x0;
    d.at(o, o + 1) = y0;
    d.at(o + 1, o) = f.neg(f.mul(qf.b, y0));
    d.at(o + 1, o + 1) = f.add(x0, y0);
  }
  return d;
}

GfMat frobenius_corrector(const QuadForm& qf)
{
  const Gf& f = qf.f;
  unsigned k = 2 * qf.m;
  GfMat c = GfMat::identity(k);
  if (qf.eps > 0 || f.r == 1)
    return c;
  uint32_t bs = f.frob(qf.b, 1);
  if (bs == qf.b)
    return c;

  // plane block sending the form with coefficient b to coefficient b*
  auto plane_eval = [&](uint32_t x, uint32_t y) {
    return f.add(f.mul(x, x), f.add(f.mul(x, y), f.mul(qf.b, f.mul(y, y))));
  };
  for (uint32_t a0 = 0; a0 < f.q; ++a0)
    for (uint32_t a1 = 0; a1 < f.q; ++a1) {
      if (plane_eval(a0, a1) != 1)
        continue;
      for (uint32_t b0 = 0; b0 < f.q; ++b0)
        for (uint32_t b1 = 0; b1 < f.q; ++b1) {
          if (plane_eval(b0, b1) != bs)
            continue;
          if (plane_eval(f.add(a0, b0), f.add(a1, b1)) !=
              f.add(f.add(1u, 1u), bs))
            continue;
          unsigned o = k - 2;
          c.at(o, o) = a0;
          c.at(o, o + 1) = a1;
          c.at(o + 1, o) = b0;
          c.at(o + 1, o + 1) = b1;
          return c;
        }
    }
  assert(false && "no frobenius corrector");
  return c;
}

} // namespace r3
