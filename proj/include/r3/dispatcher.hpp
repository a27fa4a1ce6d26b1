#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "r3/bigint.hpp"
#include "r3/orbitals.hpp"
#include "r3/perm_group.hpp"

namespace r3 {

// every generator of g lies in h and every generator of h fixes every
// 2-orbit of g setwise
bool verify_candidate(const PermGroup& g, const PermGroup& h,
                      const OrbitalStructure& os);
bool verify_candidate(const PermGroup& g, const PermGroup& h);

enum class OracleMode { off, on, automatic };

struct ClosureOptions {
  OracleMode oracle = OracleMode::automatic;
  unsigned threshold = 256; // degree bound for the automatic oracle
};

enum class ClosureStatus { solved, not_rank3, unresolved };

struct BranchOutcome {
  std::string name;
  bool ok = false;
  std::string note;
  Bigint order = 0; // 0 when the branch failed
  bool verified = false;
};

struct ClosureReport {
  ClosureStatus status = ClosureStatus::unresolved;
  std::string digest; // input fingerprint
  unsigned degree = 0;
  unsigned rank = 0;
  std::vector<uint64_t> subdegrees;
  std::vector<BranchOutcome> branches;
  std::string chosen; // winning branch, "oracle", or empty
  std::optional<PermGroup> group;
  bool verified = false;
  std::optional<Bigint> oracle_order;
  std::string diagnostic; // consistency violations, normally empty
};

// run every branch, verify every answer, return the largest candidate;
// the oracle arbitrates when the degree is within reach
ClosureReport two_closure(const PermGroup& g, const ClosureOptions& opt = {});

// json object with orders as decimal strings
std::string report_json(const ClosureReport& rep);

// one line per fact
std::string report_text(const ClosureReport& rep);

} // namespace r3
