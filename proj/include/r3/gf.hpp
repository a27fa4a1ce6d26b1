#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

namespace r3 {

// GF(q) arithmetic on element codes: 0 is zero, code k >= 1 is c^(k-1) for a
// fixed generator c of the multiplicative group. Addition goes through the
// Zech table, multiplication through exponents.
struct Gf {
  unsigned p = 2, r = 1, q = 2;
  std::vector<uint32_t> zech;   // code of 1 + c^i, i in [0, q-1)
  uint32_t minus_one = 1;       // code of -1
  std::vector<uint32_t> vec_of; // code -> packed base-p digits (optional)
  std::vector<uint32_t> code_of;// packed -> code (optional)
  std::vector<uint32_t> scal;   // residue k -> code of k*1

  uint32_t from_exp(uint64_t e) const { return 1 + static_cast<uint32_t>(e % (q - 1)); }
  uint32_t exp_of(uint32_t x) const
  {
    assert(x != 0);
    return x - 1;
  }

  uint32_t add(uint32_t x, uint32_t y) const
  {
    if (x == 0)
      return y;
    if (y == 0)
      return x;
    uint32_t z = zech[(y - 1 + q - 1 - (x - 1) % (q - 1)) % (q - 1)];
    if (z == 0)
      return 0;
    return from_exp(static_cast<uint64_t>(x - 1) + (z - 1));
  }

  uint32_t neg(uint32_t x) const { return mul(x, minus_one); }
  uint32_t sub(uint32_t x, uint32_t y) const { return add(x, neg(y)); }

  uint32_t mul(uint32_t x, uint32_t y) const
  {
    if (x == 0 || y == 0)
      return 0;
    return from_exp(static_cast<uint64_t>(x - 1) + (y - 1));
  }

  uint32_t inv(uint32_t x) const
  {
    assert(x != 0);
    return from_exp((q - 1 - (x - 1) % (q - 1)) % (q - 1));
  }

  uint32_t powi(uint32_t x, uint64_t e) const
  {
    if (x == 0)
      return e == 0 ? 1u : 0u;
    return from_exp(static_cast<uint64_t>(x - 1) % (q - 1) * (e % (q - 1)));
  }

  uint32_t frob(uint32_t x, unsigned i = 1) const
  {
    uint64_t pe = 1;
    for (unsigned k = 0; k < i % r; ++k)
      pe = pe * p % (q - 1 == 0 ? 1 : q - 1);
    return x == 0 ? 0 : from_exp(static_cast<uint64_t>(x - 1) * pe);
  }

  bool in_prime_field(uint32_t x) const { return x == 0 || frob(x) == x; }
};

// deterministic table construction from the lexicographically first
// irreducible polynomial and the smallest multiplicative generator
Gf make_gf(unsigned p, unsigned r);

// matrix over GF(q) element codes, row-major, possibly rectangular
struct GfMat {
  unsigned rows = 0, cols = 0;
  std::vector<uint32_t> e;

  GfMat() = default;

  GfMat(unsigned r, unsigned c) : rows(r), cols(c), e(r * c, 0) {}

  static GfMat identity(unsigned n)
  {
    GfMat m(n, n);
    for (unsigned i = 0; i < n; ++i)
      m.at(i, i) = 1;
    return m;
  }

  uint32_t& at(unsigned i, unsigned j) { return e[i * cols + j]; }
  uint32_t at(unsigned i, unsigned j) const { return e[i * cols + j]; }

  bool operator==(const GfMat& o) const = default;
};

GfMat gf_mul(const Gf& f, const GfMat& a, const GfMat& b);
GfMat gf_add(const Gf& f, const GfMat& a, const GfMat& b);
GfMat gf_transpose(const GfMat& a);
GfMat gf_kron(const Gf& f, const GfMat& a, const GfMat& b);
std::optional<GfMat> gf_inverse(const Gf& f, const GfMat& a);
std::vector<uint32_t> gf_vec_mul(const Gf& f, const std::vector<uint32_t>& v,
                                 const GfMat& a);
bool gf_invertible(const Gf& f, const GfMat& a);
unsigned gf_rank(const Gf& f, GfMat a);

// redundant generating set of GL_m(q): a primitive diagonal plus all
// elementary transvections with coefficients spanning GF(q) over GF(p)
std::vector<GfMat> gl_generators(const Gf& f, unsigned m);

} // namespace r3
