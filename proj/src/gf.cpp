#include "r3/gf.hpp"

#include <algorithm>

namespace r3 {

namespace {

std::vector<uint32_t> prime_factors(uint32_t n)
{
  std::vector<uint32_t> fs;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1)
    fs.push_back(n);
  return fs;
}

using Poly = std::vector<uint32_t>; // length r, low digit first

uint32_t pack(const Poly& a, unsigned p)
{
  uint32_t v = 0;
  for (size_t i = a.size(); i-- > 0;)
    v = v * p + a[i];
  return v;
}

// multiply mod f where f = x^r + fl (fl has degree < r)
Poly mulmod(const Poly& a, const Poly& b, const Poly& fl, unsigned p)
{
  size_t r = fl.size();
  std::vector<uint64_t> prod(2 * r - 1, 0);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      prod[i + j] += static_cast<uint64_t>(a[i]) * b[j];
  for (size_t deg = 2 * r - 2; deg >= r; --deg) {
    uint64_t c = prod[deg] % p;
    prod[deg] = 0;
    if (c == 0)
      continue;
    // x^deg = -fl * x^(deg-r)
    for (size_t i = 0; i < r; ++i)
      prod[deg - r + i] += c * ((p - fl[i]) % p);
  }
  Poly res(r);
  for (size_t i = 0; i < r; ++i)
    res[i] = static_cast<uint32_t>(prod[i] % p);
  return res;
}

Poly powmod(Poly a, uint64_t e, const Poly& fl, unsigned p)
{
  Poly res(fl.size(), 0);
  res[0] = 1;
  while (e > 0) {
    if (e & 1)
      res = mulmod(res, a, fl, p);
    a = mulmod(a, a, fl, p);
    e >>= 1;
  }
  return res;
}

bool is_one(const Poly& a)
{
  if (a[0] != 1)
    return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0)
      return false;
  return true;
}

// gcd over GF(p) of dense polynomials (lengths arbitrary)
Poly poly_gcd(Poly a, Poly b, unsigned p)
{
  auto deg = [](const Poly& x) {
    for (size_t i = x.size(); i-- > 0;)
      if (x[i] != 0)
        return static_cast<long>(i);
    return -1L;
  };
  while (deg(b) >= 0) {
    long da = deg(a), db = deg(b);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    uint32_t f = static_cast<uint32_t>(
        static_cast<uint64_t>(a[da]) *
        [&] {
          // inverse of b's leading coefficient
          uint32_t x = b[db], r = 1;
          for (unsigned e = p - 2; e > 0; e >>= 1) {
            if (e & 1)
              r = static_cast<uint32_t>(static_cast<uint64_t>(r) * x % p);
            x = static_cast<uint32_t>(static_cast<uint64_t>(x) * x % p);
          }
          return r;
        }() %
        p);
    for (long i = 0; i <= db; ++i)
      a[da - db + i] =
          (a[da - db + i] + (p - 1) * static_cast<uint64_t>(f) % p * b[i]) % p;
  }
  Poly res = a;
  return res;
}

bool irreducible(const Poly& fl, unsigned p)
{
  size_t r = fl.size();
  Poly x(r, 0);
  if (r == 1)
    return true;
  x[1] = 1;

  // x^(p^r) == x mod f
  Poly t = x;
  for (size_t i = 0; i < r; ++i)
    t = powmod(t, p, fl, p);
  if (t != x)
    return false;

  for (uint32_t ell : prime_factors(static_cast<uint32_t>(r))) {
    Poly u = x;
    for (size_t i = 0; i < r / ell; ++i)
      u = powmod(u, p, fl, p);
    // gcd(u - x, f) must be 1
    Poly diff(r + 1, 0);
    for (size_t i = 0; i < r; ++i)
      diff[i] = (u[i] + p - x[i]) % p;
    Poly f(r + 1);
    for (size_t i = 0; i < r; ++i)
      f[i] = fl[i];
    f[r] = 1;
    Poly g = poly_gcd(f, diff, p);
    long dg = -1;
    for (size_t i = g.size(); i-- > 0;)
      if (g[i] != 0) {
        dg = static_cast<long>(i);
        break;
      }
    if (dg != 0)
      return false;
  }
  return true;
}

} // namespace

Gf make_gf(unsigned p, unsigned r)
{
  assert(r >= 1);
  uint64_t q64 = 1;
  for (unsigned i = 0; i < r; ++i)
    q64 *= p;
  assert(q64 <= (1u << 20));
  uint32_t q = static_cast<uint32_t>(q64);

  Gf f;
  f.p = p;
  f.r = r;
  f.q = q;
  f.vec_of.assign(q, 0);
  f.code_of.assign(q, 0);

  // lexicographically first irreducible f = x^r + fl
  Poly fl(r, 0);
  for (uint32_t packed = 0;; ++packed) {
    assert(packed < q);
    uint32_t v = packed;
    for (unsigned i = 0; i < r; ++i) {
      fl[i] = v % p;
      v /= p;
    }
    if (irreducible(fl, p))
      break;
  }

  std::vector<uint32_t> facs = prime_factors(q - 1);

  // smallest generator of the multiplicative group
  Poly gen(r, 0);
  for (uint32_t packed = 1;; ++packed) {
    assert(packed < q);
    uint32_t v = packed;
    for (unsigned i = 0; i < r; ++i) {
      gen[i] = v % p;
      v /= p;
    }
    bool ok = is_one(powmod(gen, q - 1, fl, p));
    for (uint32_t ell : facs)
      ok = ok && !is_one(powmod(gen, (q - 1) / ell, fl, p));
    if (ok)
      break;
  }

  Poly pw(r, 0);
  pw[0] = 1;
  for (uint32_t k = 0; k < q - 1; ++k) {
    uint32_t packed = pack(pw, p);
    f.vec_of[k + 1] = packed;
    assert(f.code_of[packed] == 0 && packed != 0);
    f.code_of[packed] = k + 1;
    pw = mulmod(pw, gen, fl, p);
  }
  assert(is_one(pw));

  f.zech.assign(q - 1, 0);
  for (uint32_t i = 0; i < q - 1; ++i) {
    uint32_t packed = f.vec_of[i + 1];
    uint32_t bumped = packed - packed % p + (packed % p + 1) % p;
    f.zech[i] = f.code_of[bumped];
  }

  f.scal.assign(p, 0);
  for (uint32_t k = 1; k < p; ++k)
    f.scal[k] = f.code_of[k];
  f.minus_one = f.scal[p - 1];

  return f;
}

GfMat gf_mul(const Gf& f, const GfMat& a, const GfMat& b)
{
  assert(a.cols == b.rows);
  GfMat c(a.rows, b.cols);
  for (unsigned i = 0; i < a.rows; ++i)
    for (unsigned j = 0; j < b.cols; ++j) {
      uint32_t acc = 0;
      for (unsigned k = 0; k < a.cols; ++k)
        acc = f.add(acc, f.mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = acc;
    }
  return c;
}

GfMat gf_add(const Gf& f, const GfMat& a, const GfMat& b)
{
  assert(a.rows == b.rows && a.cols == b.cols);
  GfMat c(a.rows, a.cols);
  for (size_t i = 0; i < a.e.size(); ++i)
    c.e[i] = f.add(a.e[i], b.e[i]);
  return c;
}

GfMat gf_transpose(const GfMat& a)
{
  GfMat c(a.cols, a.rows);
  for (unsigned i = 0; i < a.rows; ++i)
    for (unsigned j = 0; j < a.cols; ++j)
      c.at(j, i) = a.at(i, j);
  return c;
}

GfMat gf_kron(const Gf& f, const GfMat& a, const GfMat& b)
{
  GfMat c(a.rows * b.rows, a.cols * b.cols);
  for (unsigned i = 0; i < a.rows; ++i)
    for (unsigned j = 0; j < a.cols; ++j)
      for (unsigned k = 0; k < b.rows; ++k)
        for (unsigned l = 0; l < b.cols; ++l)
          c.at(i * b.rows + k, j * b.cols + l) =
              f.mul(a.at(i, j), b.at(k, l));
  return c;
}

std::optional<GfMat> gf_inverse(const Gf& f, const GfMat& a)
{
  assert(a.rows == a.cols);
  unsigned d = a.rows;
  GfMat m = a, inv = GfMat::identity(d);
  for (unsigned col = 0; col < d; ++col) {
    unsigned piv = d;
    for (unsigned r = col; r < d; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv == d)
      return std::nullopt;
    for (unsigned j = 0; j < d; ++j) {
      std::swap(m.e[col * d + j], m.e[piv * d + j]);
      std::swap(inv.e[col * d + j], inv.e[piv * d + j]);
    }
    uint32_t s = f.inv(m.at(col, col));
    for (unsigned j = 0; j < d; ++j) {
      m.at(col, j) = f.mul(m.at(col, j), s);
      inv.at(col, j) = f.mul(inv.at(col, j), s);
    }
    for (unsigned r = 0; r < d; ++r) {
      if (r == col || m.at(r, col) == 0)
        continue;
      uint32_t fac = m.at(r, col);
      for (unsigned j = 0; j < d; ++j) {
        m.at(r, j) = f.sub(m.at(r, j), f.mul(fac, m.at(col, j)));
        inv.at(r, j) = f.sub(inv.at(r, j), f.mul(fac, inv.at(col, j)));
      }
    }
  }
  return inv;
}

bool gf_invertible(const Gf& f, const GfMat& a)
{
  return gf_inverse(f, a).has_value();
}

unsigned gf_rank(const Gf& f, GfMat a)
{
  unsigned rank = 0;
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
    ++rank;
  }
  return rank;
}

std::vector<uint32_t> gf_vec_mul(const Gf& f, const std::vector<uint32_t>& v,
                                 const GfMat& a)
{
  assert(v.size() == a.rows);
  std::vector<uint32_t> r(a.cols, 0);
  for (unsigned j = 0; j < a.cols; ++j) {
    uint32_t acc = 0;
    for (unsigned i = 0; i < a.rows; ++i)
      acc = f.add(acc, f.mul(v[i], a.at(i, j)));
    r[j] = acc;
  }
  return r;
}

std::vector<GfMat> gl_generators(const Gf& f, unsigned m)
{
  std::vector<GfMat> gens;
  if (f.q > 2) {
    GfMat d = GfMat::identity(m);
    d.at(0, 0) = f.from_exp(1);
    gens.push_back(d);
  }
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) {
      if (i == j)
        continue;
      for (unsigned t = 0; t < f.r; ++t) {
        GfMat tv = GfMat::identity(m);
        tv.at(i, j) = f.from_exp(t);
        gens.push_back(tv);
      }
    }
  return gens;
}

} // namespace r3
