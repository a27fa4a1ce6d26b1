#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "r3/perm.hpp"

namespace r3 {

inline Perm pcyc(unsigned n,
                 std::initializer_list<std::initializer_list<uint32_t>> cycles)
{
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i)
    img[i] = i;
  for (const auto& cyc : cycles) {
    const uint32_t* pts = cyc.begin();
    size_t k = cyc.size();
    for (size_t i = 0; i < k; ++i)
      img[pts[i]] = pts[(i + 1) % k];
  }
  return Perm(img);
}

inline std::vector<Perm> sym_gens(unsigned n)
{
  std::vector<uint32_t> cyc(n);
  for (uint32_t i = 0; i < n; ++i)
    cyc[i] = (i + 1) % n;
  return {pcyc(n, {{0, 1}}), Perm(cyc)};
}

inline std::vector<Perm> alt_gens(unsigned n)
{
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i)
    img[i] = i;
  if (n % 2 == 1) {
    for (uint32_t i = 0; i < n; ++i)
      img[i] = (i + 1) % n;
  } else {
    img[0] = 0;
    for (uint32_t i = 1; i < n; ++i)
      img[i] = i % (n - 1) + 1;
  }
  return {pcyc(n, {{0, 1, 2}}), Perm(img)};
}

// action induced on the 2-subsets of {0,…,m−1}, listed lexicographically
inline Perm pair_action(const Perm& p)
{
  unsigned m = p.degree();
  std::vector<std::vector<uint32_t>> id(m, std::vector<uint32_t>(m));
  uint32_t np = 0;
  for (uint32_t a = 0; a < m; ++a)
    for (uint32_t b = a + 1; b < m; ++b) {
      id[a][b] = id[b][a] = np;
      ++np;
    }
  std::vector<uint32_t> img(np);
  for (uint32_t a = 0; a < m; ++a)
    for (uint32_t b = a + 1; b < m; ++b)
      img[id[a][b]] = id[p[a]][p[b]];
  return Perm(img);
}

inline std::vector<Perm> pair_action(const std::vector<Perm>& gens)
{
  std::vector<Perm> res;
  for (const Perm& g : gens)
    res.push_back(pair_action(g));
  return res;
}

} // namespace r3
