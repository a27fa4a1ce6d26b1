#include "r3/perm.hpp"

#include <numeric>

namespace r3 {

bool Perm::is_valid() const
{
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t x : img_) {
    if (x >= img_.size() || seen[x])
      return false;
    seen[x] = true;
  }
  return true;
}

Perm conjugate(const Perm& g, const Perm& t)
{
  // (t^-1 g t)[x] = t[g[t^-1[x]]]; build directly via x = t[y]
  std::vector<uint32_t> r(g.degree());
  for (uint32_t y = 0; y < g.degree(); ++y)
    r[t[y]] = t[g[y]];
  return Perm(std::move(r));
}

Perm commutator(const Perm& a, const Perm& b)
{
  return a.inverse() * b.inverse() * a * b;
}

std::vector<std::vector<uint32_t>> cycle_decomposition(const Perm& g)
{
  std::vector<std::vector<uint32_t>> cycles;
  std::vector<bool> seen(g.degree(), false);
  for (uint32_t s = 0; s < g.degree(); ++s) {
    if (seen[s])
      continue;
    std::vector<uint32_t> cyc;
    uint32_t x = s;
    do {
      seen[x] = true;
      cyc.push_back(x);
      x = g[x];
    } while (x != s);
    if (cyc.size() > 1)
      cycles.push_back(std::move(cyc));
  }
  return cycles;
}

Bigint element_order(const Perm& g)
{
  Bigint ord = 1;
  for (const auto& cyc : cycle_decomposition(g)) {
    Bigint len = cyc.size();
    ord = ord / boost::multiprecision::gcd(ord, len) * len;
  }
  return ord;
}

} // namespace r3
