#include "r3/zoo.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

#include "r3/coord.hpp"
#include "r3/gf.hpp"
#include "r3/orbitals.hpp"
#include "r3/perm_group.hpp"
#include "r3/quadratic.hpp"

namespace r3 {

namespace {

Bigint factorial(unsigned n)
{
  Bigint r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

Bigint gl_order(unsigned m, unsigned q)
{
  Bigint qm = bigint_pow(q, m), r = 1;
  for (unsigned i = 0; i < m; ++i)
    r *= qm - bigint_pow(q, i);
  return r;
}

// 2-transitive building block: AGL(1,5) for degree 5, Sym(b) otherwise
std::vector<Perm> base_gens(unsigned b)
{
  assert(b >= 2);
  if (b == 5) {
    std::vector<uint32_t> add(5), mul(5);
    for (uint32_t x = 0; x < 5; ++x) {
      add[x] = (x + 1) % 5;
      mul[x] = 2 * x % 5;
    }
    return {Perm(add), Perm(mul)};
  }
  std::vector<uint32_t> cyc(b), swp(b);
  for (uint32_t i = 0; i < b; ++i) {
    cyc[i] = (i + 1) % b;
    swp[i] = i < 2 ? i ^ 1 : i;
  }
  if (b == 2)
    return {Perm(swp)};
  return {Perm(swp), Perm(cyc)};
}

Bigint base_order(unsigned b)
{
  return b == 5 ? Bigint(20) : factorial(b);
}

struct PrimePower {
  unsigned p, r;
};

PrimePower factor_prime_power(unsigned q)
{
  assert(q >= 2);
  unsigned p = 2;
  while (q % p != 0)
    ++p;
  unsigned r = 0, t = q;
  while (t % p == 0) {
    t /= p;
    ++r;
  }
  assert(t == 1 && "degree parameter must be a prime power");
  return {p, r};
}

// translations along every prime-field basis direction
std::vector<Perm> translation_gens(const VecSpace& vs)
{
  std::vector<Perm> out;
  for (unsigned i = 0; i < vs.k; ++i)
    for (unsigned j = 0; j < vs.f.r; ++j) {
      std::vector<uint32_t> t(vs.k, 0);
      t[i] = vs.f.from_exp(j);
      out.push_back(vs.perm_of_translation(t));
    }
  return out;
}

void finish(Instance& ins, std::vector<uint64_t> expected,
            const Bigint& expected_order)
{
  std::sort(expected.begin(), expected.end());
  PermGroup g(ins.degree, ins.gens);
  assert(g.is_transitive());
  assert(g.order() == expected_order);
  ins.order = g.order();
  OrbitalStructure os = two_orbits(g);
  assert(is_rank3(os));
  ins.subdegrees = subdegrees(os);
  assert(ins.subdegrees == expected);
}

} // namespace

Instance zoo_imprimitive(unsigned b, unsigned k)
{
  assert(b >= 2 && k >= 2);
  unsigned n = b * k;
  Instance ins;
  ins.name = "imprimitive(" + std::to_string(b) + "," + std::to_string(k) + ")";
  ins.degree = n;

  for (const Perm& g : base_gens(b)) {
    std::vector<uint32_t> img(n);
    for (uint32_t x = 0; x < n; ++x)
      img[x] = x < b ? g[x] : x;
    ins.gens.push_back(Perm(img));
  }
  std::vector<uint32_t> swp(n), cyc(n);
  for (uint32_t x = 0; x < n; ++x) {
    uint32_t blk = x / b, off = x % b;
    swp[x] = blk < 2 ? (blk ^ 1) * b + off : x;
    cyc[x] = (blk + 1) % k * b + off;
  }
  ins.gens.push_back(Perm(swp));
  ins.gens.push_back(Perm(cyc));

  Bigint bo = base_order(b);
  finish(ins, {b - 1, static_cast<uint64_t>(b) * (k - 1)},
         bigint_pow(bo, k) * factorial(k));
  ins.closure_order = bigint_pow(factorial(b), k) * factorial(k);
  return ins;
}

Instance zoo_product(unsigned q)
{
  assert(q >= 3);
  unsigned n = q * q;
  Instance ins;
  ins.name = "product(" + std::to_string(q) + ")";
  ins.degree = n;

  for (const Perm& g : base_gens(q)) {
    std::vector<uint32_t> img(n);
    for (uint32_t x = 0; x < n; ++x)
      img[x] = g[x / q] * q + x % q;
    ins.gens.push_back(Perm(img));
  }
  std::vector<uint32_t> tau(n);
  for (uint32_t x = 0; x < n; ++x)
    tau[x] = x % q * q + x / q;
  ins.gens.push_back(Perm(tau));

  Bigint bo = base_order(q);
  finish(ins, {2 * (static_cast<uint64_t>(q) - 1),
               static_cast<uint64_t>(q - 1) * (q - 1)},
         bo * bo * 2);
  ins.closure_order = factorial(q) * factorial(q) * 2;
  return ins;
}

Instance zoo_johnson_pairs(unsigned t)
{
  assert(t >= 5);
  unsigned n = t * (t - 1) / 2;
  Instance ins;
  ins.name = "johnson(" + std::to_string(t) + ")";
  ins.degree = n;

  auto pair_index = [t](uint32_t a, uint32_t b) {
    if (a > b)
      std::swap(a, b);
    return a * t - a * (a + 1) / 2 + (b - a - 1);
  };
  auto lift = [&](const Perm& g) {
    std::vector<uint32_t> img(n);
    for (uint32_t a = 0; a < t; ++a)
      for (uint32_t b = a + 1; b < t; ++b)
        img[pair_index(a, b)] = pair_index(g[a], g[b]);
    return Perm(img);
  };

  std::vector<uint32_t> tri(t), cyc(t);
  for (uint32_t i = 0; i < t; ++i) {
    tri[i] = i < 3 ? (i + 1) % 3 : i;
    cyc[i] = i;
  }
  if (t % 2 == 1) {
    for (uint32_t i = 0; i < t; ++i)
      cyc[i] = (i + 1) % t;
  } else {
    for (uint32_t i = 1; i < t; ++i)
      cyc[i] = i % (t - 1) + 1;
  }
  ins.gens = {lift(Perm(tri)), lift(Perm(cyc))};

  finish(ins,
         {2 * (static_cast<uint64_t>(t) - 2),
          static_cast<uint64_t>(t - 2) * (t - 3) / 2},
         factorial(t) / 2);
  ins.closure_order = factorial(t);
  return ins;
}

Instance zoo_paley(unsigned q)
{
  assert(q % 4 == 1);
  PrimePower pp = factor_prime_power(q);
  Gf f = make_gf(pp.p, pp.r);
  VecSpace vs(f, 1);

  Instance ins;
  ins.name = "paley(" + std::to_string(q) + ")";
  ins.degree = q;
  ins.gens = translation_gens(vs);
  ins.gens.push_back(vs.perm_of_scalar(f.from_exp(2)));

  uint64_t half = (q - 1) / 2;
  finish(ins, {half, half}, Bigint(q) * half);
  ins.closure_order = Bigint(q) * half * pp.r;
  return ins;
}

Instance zoo_bilinear(unsigned q, unsigned m)
{
  assert(m >= 2);
  PrimePower pp = factor_prime_power(q);
  Gf f = make_gf(pp.p, pp.r);
  VecSpace vs(f, 2 * m);

  Instance ins;
  ins.name = "bilinear(" + std::to_string(q) + "," + std::to_string(m) + ")";
  ins.degree = vs.n;
  for (const GfMat& a : gl_generators(f, 2))
    ins.gens.push_back(vs.perm_of_mat(gf_kron(f, a, GfMat::identity(m))));
  for (const GfMat& b : gl_generators(f, m))
    ins.gens.push_back(vs.perm_of_mat(gf_kron(f, GfMat::identity(2), b)));
  for (const Perm& t : translation_gens(vs))
    ins.gens.push_back(t);

  uint64_t qm = 1;
  for (unsigned i = 0; i < m; ++i)
    qm *= q;
  uint64_t qm1 = qm / q;
  Bigint lin = gl_order(2, q) * gl_order(m, q) / (q - 1);
  finish(ins,
         {static_cast<uint64_t>(q + 1) * (qm - 1),
          static_cast<uint64_t>(q) * (qm - 1) * (qm1 - 1)},
         bigint_pow(q, 2 * m) * lin);
  ins.closure_order =
      bigint_pow(q, 2 * m) * lin * pp.r * (m == 2 ? 2 : 1);
  return ins;
}

Instance zoo_affine_polar(int eps, unsigned m, unsigned q)
{
  assert((eps == 1 || eps == -1) && m >= 2);
  PrimePower pp = factor_prime_power(q);
  Gf f = make_gf(pp.p, pp.r);
  VecSpace vs(f, 2 * m);
  QuadForm qf = standard_form(f, m, eps);

  Instance ins;
  ins.name = std::string("affine_polar(") + (eps > 0 ? "+" : "-") + "," +
             std::to_string(m) + "," + std::to_string(q) + ")";
  ins.degree = vs.n;
  for (const GfMat& g : isometry_generators(qf))
    ins.gens.push_back(vs.perm_of_mat(g));
  // isometries fix form values, so for q > 2 a primitive similarity is
  // needed to fuse the nonsingular classes into one orbit
  if (q > 2)
    ins.gens.push_back(vs.perm_of_mat(similarity_matrix(qf, f.from_exp(1))));
  for (const Perm& t : translation_gens(vs))
    ins.gens.push_back(t);

  uint64_t qm = 1;
  for (unsigned i = 0; i < m; ++i)
    qm *= q;
  uint64_t qm1 = qm / q;
  uint64_t iso = eps > 0 ? (qm - 1) * (qm1 + 1) : (qm + 1) * (qm1 - 1);
  uint64_t aniso = eps > 0 ? qm1 * (q - 1) * (qm - 1) : qm1 * (q - 1) * (qm + 1);
  Bigint oo = orthogonal_order(f, m, eps);
  finish(ins, {iso, aniso}, bigint_pow(q, 2 * m) * oo * (q - 1));
  ins.closure_order = bigint_pow(q, 2 * m) * oo * (q - 1) * pp.r;
  return ins;
}

std::optional<Instance> zoo_by_name(const std::string& name,
                                    const std::vector<std::string>& args)
{
  auto num = [&](size_t i) -> std::optional<unsigned> {
    if (i >= args.size())
      return std::nullopt;
    char* end = nullptr;
    unsigned long v = std::strtoul(args[i].c_str(), &end, 10);
    if (end == args[i].c_str() || *end != '\0' || v == 0)
      return std::nullopt;
    return static_cast<unsigned>(v);
  };

  if (name == "imprimitive" && args.size() == 2) {
    auto b = num(0), k = num(1);
    if (b && k && *b >= 2 && *k >= 2)
      return zoo_imprimitive(*b, *k);
  } else if (name == "product" && args.size() == 1) {
    auto q = num(0);
    if (q && *q >= 3)
      return zoo_product(*q);
  } else if (name == "johnson" && args.size() == 1) {
    auto t = num(0);
    if (t && *t >= 5)
      return zoo_johnson_pairs(*t);
  } else if (name == "paley" && args.size() == 1) {
    auto q = num(0);
    if (q && *q % 4 == 1 && *q >= 5)
      return zoo_paley(*q);
  } else if (name == "bilinear" && args.size() == 2) {
    auto q = num(0), m = num(1);
    if (q && m && *q >= 2 && *m >= 2)
      return zoo_bilinear(*q, *m);
  } else if (name == "polar" && args.size() == 3) {
    if (args[0] != "+" && args[0] != "-")
      return std::nullopt;
    auto m = num(1), q = num(2);
    if (m && q && *m >= 2 && *q >= 2)
      return zoo_affine_polar(args[0] == "+" ? 1 : -1, *m, *q);
  }
  return std::nullopt;
}

} // namespace r3
