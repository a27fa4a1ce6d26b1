#pragma once

#include <cstdint>
#include <vector>

#include "r3/perm.hpp"
#include "r3/perm_group.hpp"

namespace r3 {

// Orbits of a group acting componentwise on ordered pairs, stored as an
// n x n color matrix. Colors are assigned in lexicographic discovery order,
// so color 0 is the diagonal orbital when the group is transitive.
struct OrbitalStructure {
  unsigned n = 0;
  uint16_t rank = 0;
  std::vector<uint16_t> color;    // flattened row-major, color of (a, b)
  std::vector<uint16_t> paired;   // paired[c] is the color of reversed pairs
  std::vector<uint64_t> sizes;    // pairs per color

  uint16_t at(uint32_t a, uint32_t b) const
  {
    return color[static_cast<size_t>(a) * n + b];
  }
};

OrbitalStructure two_orbits(const PermGroup& g);

// sizes of the non-diagonal orbitals through point 0, ascending;
// pre: transitive group, so these are the subdegrees beyond the trivial one
std::vector<uint64_t> subdegrees(const OrbitalStructure& os);

bool is_rank3(const OrbitalStructure& os);

bool preserves_orbitals(const OrbitalStructure& os, const Perm& p);

} // namespace r3
