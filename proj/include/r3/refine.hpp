#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "r3/orbitals.hpp"
#include "r3/perm_group.hpp"

namespace r3 {

// Ordered partition of the point set; cells are slices of the points array.
// Points inside a cell are kept ascending, so cell contents are canonical.
struct OrderedPartition {
  std::vector<uint32_t> points;
  std::vector<std::pair<uint32_t, uint32_t>> cells;   // offset, size

  bool discrete() const { return cells.size() == points.size(); }
};

// points grouped by their diagonal color, colors ascending
OrderedPartition initial_partition(const OrbitalStructure& cfg);

// coarsest stable refinement: two points stay together only if for every
// cell and every pair color they send equally many pairs of that color into
// the cell; cells split by sorted signature, scan restarts after each split
void refine(const OrbitalStructure& cfg, OrderedPartition& p);

OrderedPartition individualized(const OrderedPartition& p, size_t cell,
                                uint32_t v);

struct AutOptions {
  unsigned max_degree = 256;
  uint64_t max_nodes = 1ull << 20;
};

// full group of color-preserving permutations, or nullopt when the degree
// or the node budget is exceeded
std::optional<PermGroup> automorphism_group(const OrbitalStructure& cfg,
                                            const AutOptions& opt = {});

std::optional<PermGroup> oracle_two_closure(const PermGroup& g,
                                            const AutOptions& opt = {});

} // namespace r3
