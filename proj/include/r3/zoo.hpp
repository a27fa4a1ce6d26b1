#pragma once

#include <optional>
#include <string>
#include <vector>

#include "r3/bigint.hpp"
#include "r3/perm.hpp"

namespace r3 {

// prebuilt rank 3 instance with formula-checked subdegrees
struct Instance {
  std::string name;
  unsigned degree = 0;
  std::vector<Perm> gens;
  Bigint order;
  std::vector<uint64_t> subdegrees;    // ascending
  std::optional<Bigint> closure_order; // known order of the 2-closure
};

// wreath product base per Sym(k) on k blocks of size b, base = AGL(1,5)
// for b = 5 and Sym(b) otherwise
Instance zoo_imprimitive(unsigned b, unsigned k);

// product action of base per Sym(2) on q^2 points, same base convention
Instance zoo_product(unsigned q);

// Alt(t) on unordered pairs, the triangular graph
Instance zoo_johnson_pairs(unsigned t);

// translations with the square multiplier subgroup, q = 1 mod 4
Instance zoo_paley(unsigned q);

// GL_2(q) x GL_m(q) in Kronecker form with translations, the bilinear
// forms graph H_q(2, m)
Instance zoo_bilinear(unsigned q, unsigned m);

// full orthogonal group of a standard quadratic form with translations,
// the affine polar graph VO_2m^eps(q)
Instance zoo_affine_polar(int eps, unsigned m, unsigned q);

// command line lookup: imprimitive B K, product Q, johnson T, paley Q,
// bilinear Q M, polar +|- M Q
std::optional<Instance> zoo_by_name(const std::string& name,
                                    const std::vector<std::string>& args);

} // namespace r3
