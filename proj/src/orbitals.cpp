#include "r3/orbitals.hpp"

#include <algorithm>
#include <cassert>

namespace r3 {

OrbitalStructure two_orbits(const PermGroup& g)
{
  unsigned n = g.degree();
  assert(n > 0 && n <= 20000);

  OrbitalStructure os;
  os.n = n;
  os.color.assign(static_cast<size_t>(n) * n, UINT16_MAX);

  const std::vector<Perm>& gens = g.generators();
  std::vector<uint64_t> queue;

  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) {
      size_t start = static_cast<size_t>(a) * n + b;
      if (os.color[start] != UINT16_MAX)
        continue;
      uint16_t c = os.rank++;
      assert(os.rank != 0);
      os.color[start] = c;
      uint64_t count = 1;
      queue.assign(1, start);
      while (!queue.empty()) {
        uint64_t pr = queue.back();
        queue.pop_back();
        uint32_t x = static_cast<uint32_t>(pr / n);
        uint32_t y = static_cast<uint32_t>(pr % n);
        for (const Perm& s : gens) {
          size_t im = static_cast<size_t>(s[x]) * n + s[y];
          if (os.color[im] == UINT16_MAX) {
            os.color[im] = c;
            ++count;
            queue.push_back(im);
          }
        }
      }
      os.sizes.push_back(count);
    }

  os.paired.resize(os.rank);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      os.paired[os.at(a, b)] = os.at(b, a);
  for (uint16_t c = 0; c < os.rank; ++c)
    assert(os.paired[os.paired[c]] == c);

  return os;
}

std::vector<uint64_t> subdegrees(const OrbitalStructure& os)
{
  std::vector<uint64_t> counts(os.rank, 0);
  for (uint32_t b = 0; b < os.n; ++b)
    ++counts[os.at(0, b)];

  std::vector<uint64_t> res;
  for (uint16_t c = 0; c < os.rank; ++c)
    if (c != os.at(0, 0) && counts[c] > 0)
      res.push_back(counts[c]);
  std::sort(res.begin(), res.end());
  return res;
}

bool is_rank3(const OrbitalStructure& os)
{
  if (os.rank != 3)
    return false;
  // transitive with a diagonal orbital of full size
  return os.sizes[os.at(0, 0)] == os.n;
}

bool preserves_orbitals(const OrbitalStructure& os, const Perm& p)
{
  assert(p.degree() == os.n);
  for (uint32_t a = 0; a < os.n; ++a)
    for (uint32_t b = 0; b < os.n; ++b)
      if (os.at(p[a], p[b]) != os.at(a, b))
        return false;
  return true;
}

} // namespace r3
