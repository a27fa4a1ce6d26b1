#pragma once

#include <optional>
#include <vector>

#include "r3/field_structure.hpp"
#include "r3/matrix.hpp"

namespace r3 {

struct MatrixSpace {
  unsigned p = 2, d = 0;
  std::vector<MatrixModP> basis;
};

// basis of {X : Xg = gX for every generator}, by stacked nullspace
MatrixSpace centralizer_space(unsigned p, unsigned d,
                              const std::vector<MatrixModP>& gens);

// all invertible elements of the span, or nullopt when p^dim > cap
std::optional<std::vector<MatrixModP>>
enumerate_units(const MatrixSpace& space, size_t cap);

// per-generator exponents i with c^g = c^(p^i), or nullopt when some
// generator does not normalize the field
std::optional<std::vector<unsigned>>
semilinear_check(const std::vector<MatrixModP>& gens,
                 const FieldStructure& fs);

struct FieldEmbedding {
  FieldStructure fs;
  std::vector<unsigned> frob; // Frobenius exponent per checked generator
};

// every field structure whose units centralize the derived generators and
// which the g0 generators act on semilinearly, one entry per distinct
// element set; *complete is cleared when unit enumeration hit its cap and
// only the prime-field structure could be guaranteed
std::vector<FieldEmbedding>
enumerate_field_structures(unsigned p, unsigned d,
                           const std::vector<MatrixModP>& g0_gens,
                           const std::vector<MatrixModP>& derived_gens,
                           bool* complete = nullptr);

// invertible t with g_i t = t h_i for all i; random combinations first,
// exhaustive scan when the intertwiner space is small enough; *complete is
// cleared when neither settles the question
std::optional<MatrixModP>
tuple_intertwiner(const std::vector<MatrixModP>& gs,
                  const std::vector<MatrixModP>& hs,
                  bool* complete = nullptr);

} // namespace r3
