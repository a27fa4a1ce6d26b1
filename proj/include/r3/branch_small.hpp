#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "r3/affine.hpp"
#include "r3/branch.hpp"
#include "r3/gf_linear.hpp"

namespace r3 {

// |G| <= n^18
bool order_gate(const PermGroup& g);

// k elements generating g0, identity-padded, or nullopt when no k elements
// generate; seeded random tuples first, then a capped exhaustive scan
std::optional<std::vector<Perm>> small_generating_tuple(const PermGroup& g0,
                                                        unsigned k);

struct SmallEmbeddings {
  std::vector<FieldEmbedding> cands; // ascending dimension
  bool class_s = false;              // some embedding has a <= 16
  bool complete = true;              // enumeration hit no cap
};

SmallEmbeddings embeddings_small(const AffineFrame& fr);

// the full intersection of the 2-closure with the affine semilinear group
// of the embedding, by enumerating semilinear parts; nullopt over cap
std::optional<PermGroup> brute_closure_in_agl(const AffineFrame& fr,
                                              const FieldStructure& fs,
                                              const OrbitalStructure& os,
                                              size_t cap = size_t(1) << 22);

} // namespace r3
