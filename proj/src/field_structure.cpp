#include "r3/field_structure.hpp"

#include <cassert>

namespace r3 {

uint32_t FieldStructure::code_of(const MatrixModP& m) const
{
  if (m.is_zero())
    return 0;
  auto it = codes.find(m);
  return it == codes.end() ? UINT32_MAX : it->second;
}

const MatrixModP& FieldStructure::mat_of(uint32_t code) const
{
  assert(code >= 1 && code <= q - 1);
  return powers[code - 1];
}

std::optional<FieldStructure> field_from_element(const MatrixModP& c,
                                                 unsigned a)
{
  unsigned d = c.d, p = c.p;
  if (a == 0 || d % a != 0)
    return std::nullopt;
  uint64_t q64 = 1;
  for (unsigned i = 0; i < d / a; ++i) {
    q64 *= p;
    if (q64 > (1u << 20))
      return std::nullopt;
  }
  uint32_t q = static_cast<uint32_t>(q64);

  FieldStructure fs;
  fs.p = p;
  fs.d = d;
  fs.a = a;
  fs.q = q;
  fs.c = c;

  // exact order q - 1 with early abort, collecting powers on the way
  MatrixModP pw = MatrixModP::identity(p, d);
  for (uint32_t k = 0; k + 1 < q; ++k) {
    if (k > 0 && pw.is_identity())
      return std::nullopt;
    fs.powers.push_back(pw);
    auto [it, fresh] = fs.codes.emplace(pw, k + 1);
    if (!fresh)
      return std::nullopt;
    pw = pw * c;
  }
  if (!pw.is_identity())
    return std::nullopt;

  // additive closure via the Zech table: 1 + c^i must land in the set
  fs.gf.p = p;
  fs.gf.r = d / a;
  fs.gf.q = q;
  fs.gf.zech.assign(q - 1, 0);
  for (uint32_t i = 0; i < q - 1; ++i) {
    MatrixModP s = fs.powers[0] + fs.powers[i];
    uint32_t code = fs.code_of(s);
    if (code == UINT32_MAX)
      return std::nullopt;
    fs.gf.zech[i] = code;
  }

  fs.gf.scal.assign(p, 0);
  MatrixModP acc(p, d);
  for (uint32_t k = 1; k < p; ++k) {
    acc = acc + fs.powers[0];
    uint32_t code = fs.code_of(acc);
    assert(code != UINT32_MAX);
    fs.gf.scal[k] = code;
  }
  fs.gf.minus_one = fs.gf.scal[p - 1];

  return fs;
}

} // namespace r3
