#pragma once

#include <optional>
#include <string>
#include <utility>

#include "r3/orbitals.hpp"
#include "r3/perm_group.hpp"

namespace r3 {

// outcome of one closure algorithm: a candidate group or a failure note
struct BranchResult {
  std::optional<PermGroup> group;
  std::string note;

  bool ok() const { return group.has_value(); }

  static BranchResult fail(std::string why)
  {
    return {std::nullopt, std::move(why)};
  }

  static BranchResult found(PermGroup g, std::string what)
  {
    return {std::move(g), std::move(what)};
  }
};

BranchResult run_nonaffine(const PermGroup& g, const OrbitalStructure& os);
BranchResult run_small(const PermGroup& g, const OrbitalStructure& os);
BranchResult run_tensor(const PermGroup& g, const OrbitalStructure& os);
BranchResult run_qform(const PermGroup& g, const OrbitalStructure& os);

} // namespace r3
