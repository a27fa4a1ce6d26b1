#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "r3/affine.hpp"
#include "r3/field_structure.hpp"
#include "r3/gf.hpp"
#include "r3/perm.hpp"

namespace r3 {

// GF(q)^k with points packed little-endian base q; coordinates are Gf codes.
// Permutations of the packed domain realize semilinear and affine maps.
struct VecSpace {
  Gf f;
  unsigned k = 1;
  uint32_t n = 2; // q^k

  VecSpace(Gf f_, unsigned k_);

  std::vector<uint32_t> coords_of(uint32_t x) const;
  uint32_t point_of(const std::vector<uint32_t>& v) const;

  std::vector<uint32_t> add(const std::vector<uint32_t>& a,
                            const std::vector<uint32_t>& b) const;
  std::vector<uint32_t> smul(uint32_t c, const std::vector<uint32_t>& v) const;

  // x -> (x^(p^e)) * m + t, components raised with the field Frobenius
  Perm perm_of_affine(const GfMat& m, unsigned frob_e,
                      const std::vector<uint32_t>& t) const;

  Perm perm_of_mat(const GfMat& m) const;
  Perm perm_of_translation(const std::vector<uint32_t>& t) const;
  Perm perm_of_frobenius() const;
  Perm perm_of_scalar(uint32_t c) const;
};

// identification of an affine frame's domain with GF(q)^a through a field
// structure and a GF(q)-basis given by label vectors
struct FrameCoords {
  VecSpace vs;
  std::vector<uint32_t> to_std;   // frame point -> vs point
  std::vector<uint32_t> from_std; // vs point -> frame point

  // conjugate a permutation of the vs domain back to the frame domain
  Perm pull_back(const Perm& s) const;
  // and the other way around
  Perm push_forward(const Perm& g) const;
};

// fails when the given label vectors are not a GF(q)-basis
std::optional<FrameCoords> make_frame_coords(
    const AffineFrame& fr, const FieldStructure& fs,
    const std::vector<std::vector<uint32_t>>& basis);

// greedy basis: first label vectors that grow the GF(q)-span
FrameCoords frame_coords(const AffineFrame& fr, const FieldStructure& fs);

} // namespace r3
