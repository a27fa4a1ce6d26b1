#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "r3/bigint.hpp"
#include "r3/coord.hpp"
#include "r3/gf.hpp"
#include "r3/perm.hpp"

namespace r3 {

// standard quadratic form on GF(q)^2m: hyperbolic planes x1x2 + x3x4 + ...,
// with the last plane replaced by x^2 + xy + b y^2 for the minus type
struct QuadForm {
  Gf f;
  unsigned m = 1;
  int eps = 1;    // +1 or -1
  uint32_t b = 0; // anisotropic coefficient, 0 for the plus type

  uint32_t eval(const std::vector<uint32_t>& v) const;
  uint32_t bilin(const std::vector<uint32_t>& x,
                 const std::vector<uint32_t>& y) const;
};

// smallest b with t^2 + t + b irreducible over GF(q)
uint32_t aniso_coeff(const Gf& f);

QuadForm standard_form(const Gf& f, unsigned m, int eps);

// |O^eps_{2m}(q)|
Bigint orthogonal_order(const Gf& f, unsigned m, int eps);

// value table of a form on a coordinate space, by packed point
using FormTable = std::vector<uint32_t>;

FormTable table_of(const VecSpace& vs, const QuadForm& qf);

// kappa(c v) = c^2 kappa(v) for all scalars and points
bool is_homogeneous(const VecSpace& vs, const FormTable& kappa);

// Gram matrix of f(x, y) = kappa(x+y) - kappa(x) - kappa(y) on unit vectors
GfMat gram_of(const VecSpace& vs, const FormTable& kappa);

// f is bilinear with the given Gram matrix, checked on all pairs
bool is_bilinear(const VecSpace& vs, const FormTable& kappa, const GfMat& gram);

// per-generator (scalar code, frobenius exponent) with
// kappa(v^g) = lambda * kappa(v)^(p^alpha) on every point
struct Semisimilarity {
  uint32_t lambda = 1;
  unsigned alpha = 0;
};

std::optional<Semisimilarity> semisimilarity_of(const VecSpace& vs,
                                                const FormTable& kappa,
                                                const Perm& g);

// rows are the new basis vectors: kappa(y * B) is the standard form of the
// returned type; fails when nondegeneracy breaks down mid-recursion
struct StandardBasis {
  GfMat b;
  int eps = 1;
  uint32_t aniso_b = 0;
};

std::optional<StandardBasis> standard_basis(const VecSpace& vs,
                                            const FormTable& kappa);

// generators of the full isometry group of the standard form, as matrices;
// verified reflections plus the deterministic plane maps
std::vector<GfMat> isometry_generators(const QuadForm& qf);

// similarity with factor mu: identity on e_i, mu on f_i, norm multiplication
// on the anisotropic plane
GfMat similarity_matrix(const QuadForm& qf, uint32_t mu);

// corrector so that frobenius followed by it is a semisimilarity of the
// standard form (identity when the anisotropic coefficient is fixed by it)
GfMat frobenius_corrector(const QuadForm& qf);

} // namespace r3
