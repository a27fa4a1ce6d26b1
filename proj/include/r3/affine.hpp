#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "r3/matrix.hpp"
#include "r3/perm.hpp"
#include "r3/perm_group.hpp"

namespace r3 {

// identification of the domain with GF(p)^d coming from a regular
// elementary abelian normal subgroup: point 0 is the zero vector, labels
// add when basis translations act
struct AffineFrame {
  unsigned p = 2, d = 1;
  unsigned n = 2; // p^d
  std::vector<std::vector<uint32_t>> label; // point -> vector
  std::vector<uint32_t> point;              // packed vector -> point
  std::vector<Perm> basis_tr;               // translation by e_i
  PermGroup g0;                             // stabilizer of point 0
  std::vector<MatrixModP> g0_mats;          // matrix per g0 generator
  bool multiple_regular = false;            // degenerate-input marker

  uint32_t pack(const std::vector<uint32_t>& v) const
  {
    uint32_t acc = 0;
    for (size_t i = v.size(); i-- > 0;)
      acc = acc * p + v[i];
    return acc;
  }

  uint32_t point_of(const std::vector<uint32_t>& v) const
  {
    return point[pack(v)];
  }

  // translation by an arbitrary vector, as a product of basis translations
  Perm translation(const std::vector<uint32_t>& v) const;

  // permutation acting as x -> x * m on labels
  Perm perm_of_matrix(const MatrixModP& m) const;

  // x -> x * m + t
  Perm perm_of_affine(const MatrixModP& m,
                      const std::vector<uint32_t>& t) const;
};

std::optional<AffineFrame> detect_affine(const PermGroup& g);

// pre: g fixes point 0 and acts linearly on labels (true for any group with
// the frame's translation subgroup normal in it)
MatrixModP matrix_of(const AffineFrame& fr, const Perm& g);

} // namespace r3
