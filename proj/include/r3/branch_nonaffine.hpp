#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "r3/branch.hpp"
#include "r3/perm.hpp"
#include "r3/perm_group.hpp"

namespace r3 {

// generators of Sym(block) wr Sym(blocks) aligned to the given system
std::vector<Perm> imprimitive_closure(
    unsigned n, const std::vector<std::vector<uint32_t>>& blocks);

// coordinates on q^2 points such that two points are adjacent exactly when
// they agree in one coordinate
struct HammingLabelling {
  unsigned q = 0;
  std::vector<uint32_t> row, col;
};

std::optional<HammingLabelling>
recognize_h2(unsigned n, const std::vector<std::vector<uint32_t>>& adj);

// Sym(q) acting on rows and columns plus the coordinate swap
std::vector<Perm> product_closure(const HammingLabelling& lab);

// oracle closure when the socle is nonabelian simple
std::optional<PermGroup> almost_simple_closure(const PermGroup& g);

} // namespace r3
