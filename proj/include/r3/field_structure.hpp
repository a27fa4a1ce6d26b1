#pragma once

#include <map>
#include <optional>

#include "r3/gf.hpp"
#include "r3/matrix.hpp"

namespace r3 {

// GF(q) realized inside the d x d matrices over GF(p): the zero matrix plus
// the cyclic group of a generator c of order q - 1, closed under addition.
// Elements use the same code convention as Gf.
struct FieldStructure {
  unsigned p = 2, d = 1, a = 1, q = 2;
  MatrixModP c;
  std::vector<MatrixModP> powers;       // powers[k] = c^k, k in [0, q-1)
  std::map<MatrixModP, uint32_t> codes; // nonzero element -> code
  Gf gf;

  // UINT32_MAX when the matrix lies outside the field
  uint32_t code_of(const MatrixModP& m) const;
  const MatrixModP& mat_of(uint32_t code) const;
  MatrixModP zero() const { return MatrixModP(p, d); }
};

// succeeds iff order(c) = p^(d/a) - 1 and {0} with the powers of c is closed
// under addition; the Zech table is read off the matrix sums
std::optional<FieldStructure> field_from_element(const MatrixModP& c,
                                                 unsigned a);

} // namespace r3
