#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "r3/affine.hpp"
#include "r3/branch.hpp"
#include "r3/coord.hpp"
#include "r3/orbitals.hpp"

namespace r3 {

// q = largest power of p dividing a subdegree (larger one first), m with
// n = q^(2m) and m >= 2
std::optional<std::pair<unsigned, unsigned>>
tensor_parameters(const OrbitalStructure& os, unsigned p);

// basis v[i][j] = u_i (x) w_j laid out row-major at (i-1)*m + (j-1); b rows
// hold the GF(q) coordinates of the v[i][j]
struct TensorBasis {
  unsigned m = 2;
  GfMat b;
  GfMat binv;
};

// true iff every given generator maps every simple tensor of the candidate
// basis to a simple tensor, through rank-1 coefficient matrices
bool check_tensor_basis(const FrameCoords& fc, const std::vector<Perm>& gens,
                        const TensorBasis& tb);

// the normal subgroup of g0 acting as SL_m(q) on the second tensor factor;
// needs m >= 4, verified by order, perfectness and normality
std::optional<PermGroup> extract_slw(const AffineFrame& fr,
                                     const FrameCoords& fc, unsigned m);

// g in s with P^g meeting Q in exactly the common zero point, by orbit scan
std::optional<Perm> shift_independent(const PermGroup& s,
                                      const std::vector<uint32_t>& pset,
                                      const std::vector<uint32_t>& qset);

// m <= 3: pruned scan over vectors of the simple-tensor orbit; m >= 4:
// span accumulation P^(g_1) + ... + P^(g_m) over extract_slw
std::optional<TensorBasis> find_tensor_basis(const AffineFrame& fr,
                                             const FrameCoords& fc,
                                             const OrbitalStructure& os,
                                             unsigned m);

// translations, both factor actions, coefficient Frobenius and for m = 2
// the factor swap; order-checked against the closed form
PermGroup emit_tensor_closure(const AffineFrame& fr, const FrameCoords& fc,
                              const TensorBasis& tb);

BranchResult run_tensor(const PermGroup& g, const OrbitalStructure& os);

} // namespace r3
