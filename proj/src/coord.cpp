#include "r3/coord.hpp"

#include <cassert>

#include "r3/matrix.hpp"

namespace r3 {

VecSpace::VecSpace(Gf f_, unsigned k_) : f(std::move(f_)), k(k_)
{
  assert(k >= 1);
  uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i)
    total *= f.q;
  assert(total <= (1u << 22));
  n = static_cast<uint32_t>(total);
}

std::vector<uint32_t> VecSpace::coords_of(uint32_t x) const
{
  std::vector<uint32_t> v(k);
  for (unsigned i = 0; i < k; ++i) {
    v[i] = x % f.q;
    x /= f.q;
  }
  return v;
}

uint32_t VecSpace::point_of(const std::vector<uint32_t>& v) const
{
  assert(v.size() == k);
  uint32_t acc = 0;
  for (size_t i = k; i-- > 0;) {
    assert(v[i] < f.q);
    acc = acc * f.q + v[i];
  }
  return acc;
}

std::vector<uint32_t> VecSpace::add(const std::vector<uint32_t>& a,
                                    const std::vector<uint32_t>& b) const
{
  std::vector<uint32_t> r(k);
  for (unsigned i = 0; i < k; ++i)
    r[i] = f.add(a[i], b[i]);
  return r;
}

std::vector<uint32_t> VecSpace::smul(uint32_t c,
                                     const std::vector<uint32_t>& v) const
{
  std::vector<uint32_t> r(k);
  for (unsigned i = 0; i < k; ++i)
    r[i] = f.mul(c, v[i]);
  return r;
}

Perm VecSpace::perm_of_affine(const GfMat& m, unsigned frob_e,
                              const std::vector<uint32_t>& t) const
{
  assert(m.rows == k && m.cols == k && t.size() == k);
  std::vector<uint32_t> img(n);
  std::vector<uint32_t> v(k), w(k);
  for (uint32_t x = 0; x < n; ++x) {
    v = coords_of(x);
    for (unsigned i = 0; i < k; ++i)
      v[i] = f.frob(v[i], frob_e);
    for (unsigned j = 0; j < k; ++j) {
      uint32_t acc = t[j];
      for (unsigned i = 0; i < k; ++i)
        acc = f.add(acc, f.mul(v[i], m.at(i, j)));
      w[j] = acc;
    }
    img[x] = point_of(w);
  }
  Perm res(img);
  assert(res.is_valid());
  return res;
}

Perm VecSpace::perm_of_mat(const GfMat& m) const
{
  return perm_of_affine(m, 0, std::vector<uint32_t>(k, 0));
}

Perm VecSpace::perm_of_translation(const std::vector<uint32_t>& t) const
{
  return perm_of_affine(GfMat::identity(k), 0, t);
}

Perm VecSpace::perm_of_frobenius() const
{
  return perm_of_affine(GfMat::identity(k), 1, std::vector<uint32_t>(k, 0));
}

Perm VecSpace::perm_of_scalar(uint32_t c) const
{
  assert(c != 0);
  GfMat m(k, k);
  for (unsigned i = 0; i < k; ++i)
    m.at(i, i) = c;
  return perm_of_mat(m);
}

Perm FrameCoords::pull_back(const Perm& s) const
{
  assert(s.degree() == vs.n);
  std::vector<uint32_t> img(vs.n);
  for (uint32_t x = 0; x < vs.n; ++x)
    img[x] = from_std[s[to_std[x]]];
  return Perm(img);
}

Perm FrameCoords::push_forward(const Perm& g) const
{
  assert(g.degree() == vs.n);
  std::vector<uint32_t> img(vs.n);
  for (uint32_t x = 0; x < vs.n; ++x)
    img[x] = to_std[g[from_std[x]]];
  return Perm(img);
}

std::optional<FrameCoords> make_frame_coords(
    const AffineFrame& fr, const FieldStructure& fs,
    const std::vector<std::vector<uint32_t>>& basis)
{
  assert(fs.p == fr.p && fs.d == fr.d && basis.size() == fs.a);
  unsigned d = fr.d;
  unsigned rep = d / fs.a; // field degree over the prime field

  // change of basis over GF(p): row (i, j) is basis[i] * c^j
  std::vector<std::vector<uint32_t>> rows;
  for (unsigned i = 0; i < fs.a; ++i)
    for (unsigned j = 0; j < rep; ++j)
      rows.push_back(row_vec_mul(basis[i], fs.powers[j]));
  MatrixModP t(fr.p, d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j)
      t.at(i, j) = rows[i][j];
  auto tinv = mat_inverse(t);
  if (!tinv)
    return std::nullopt;

  const Gf& f = fs.gf;
  FrameCoords fc{VecSpace(f, fs.a), {}, {}};
  fc.to_std.assign(fr.n, 0);
  fc.from_std.assign(fr.n, 0);
  std::vector<uint32_t> codes(fs.a);
  for (uint32_t x = 0; x < fr.n; ++x) {
    std::vector<uint32_t> w = row_vec_mul(fr.label[x], *tinv);
    for (unsigned i = 0; i < fs.a; ++i) {
      uint32_t acc = 0;
      for (unsigned j = 0; j < rep; ++j)
        acc = f.add(acc, f.mul(f.scal[w[i * rep + j]], f.from_exp(j)));
      codes[i] = acc;
    }
    fc.to_std[x] = fc.vs.point_of(codes);
    fc.from_std[fc.to_std[x]] = x;
  }
  assert(fc.to_std[0] == 0);
  return fc;
}

FrameCoords frame_coords(const AffineFrame& fr, const FieldStructure& fs)
{
  unsigned rep = fr.d / fs.a;
  std::vector<std::vector<uint32_t>> basis;
  std::vector<std::vector<uint32_t>> rows;
  for (uint32_t x = 1; x < fr.n && basis.size() < fs.a; ++x) {
    auto trial = rows;
    for (unsigned j = 0; j < rep; ++j)
      trial.push_back(row_vec_mul(fr.label[x], fs.powers[j]));
    if (matrix_rank(fr.p, trial) == trial.size()) {
      rows = std::move(trial);
      basis.push_back(fr.label[x]);
    }
  }
  assert(basis.size() == fs.a);
  auto fc = make_frame_coords(fr, fs, basis);
  assert(fc.has_value());
  return *fc;
}

} // namespace r3
