#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "r3/affine.hpp"
#include "r3/branch.hpp"
#include "r3/coord.hpp"
#include "r3/orbitals.hpp"
#include "r3/perm_group.hpp"
#include "r3/quadratic.hpp"

namespace r3 {

// the nondiagonal 2-orbit of 0 whose size is not divisible by q; for an
// invariant quadratic form this is the isotropic vector orbit; none when
// both or neither suborbit qualifies
std::optional<uint16_t> isotropic_orbit(const OrbitalStructure& os,
                                        uint64_t q);

// generating sequence of at most k elements found by seeded random
// sampling, or the original generators when none is found
std::vector<Perm> reduce_generators(const PermGroup& g, unsigned k);

// breadth-first form reconstruction from assumed semisimilarity data:
// kappa = 0 on iso_pts, kappa(seed) = gamma and kappa(u^gens[i]) =
// lambda_i * kappa(u)^(p^alpha_i); nullopt on a revisit conflict,
// unreached entries stay UINT32_MAX
std::optional<FormTable> propagate_form(const FrameCoords& fc,
                                        const std::vector<Perm>& gens,
                                        const std::vector<Semisimilarity>& ws,
                                        const std::vector<uint32_t>& iso_pts,
                                        uint32_t seed, uint32_t gamma);

// total, homogeneous, bilinear with trivial radical, and every stabilizer
// generator acts by semisimilarities
struct FormCheck {
  GfMat gram;
  std::vector<Semisimilarity> witness;
};

std::optional<FormCheck> validate_form(const FrameCoords& fc,
                                       const std::vector<Perm>& g0_gens,
                                       const FormTable& kappa);

// translations joined with the full semisimilarity group of the form,
// order-checked against q^2m |O| (q-1) r
PermGroup emit_qform_closure(const AffineFrame& fr, const FrameCoords& fc,
                             const FormTable& kappa, const StandardBasis& sb);

} // namespace r3
