#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "r3/bigint.hpp"
#include "r3/perm.hpp"

namespace r3 {

// Permutation group with a deterministic stabilizer chain (Schreier-Sims).
// Base points are the smallest moved point at each level unless a seed base
// is given; transversals are stored as explicit permutations per point.
class PermGroup {
public:
  PermGroup() = default;

  explicit PermGroup(unsigned n) : n_(n), order_(1) {}

  PermGroup(unsigned n, std::vector<Perm> gens,
            const std::vector<uint32_t>& seed_base = {});

  unsigned degree() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const Bigint& order() const { return order_; }
  bool trivial() const { return order_ == 1; }

  bool contains(const Perm& g) const;
  Perm sift(const Perm& g) const;

  bool contains_all(const std::vector<Perm>& gs) const;
  bool is_subgroup_of(const PermGroup& h) const;
  bool same_group(const PermGroup& h) const;

  std::vector<std::vector<uint32_t>> orbits() const;
  std::vector<uint32_t> orbit_of(uint32_t x) const;
  bool is_transitive() const;
  bool is_regular() const;
  std::optional<Perm> transporter(uint32_t a, uint32_t b) const;

  PermGroup point_stabilizer(uint32_t x) const;

  // pre: transitive; nullopt means primitive
  std::optional<std::vector<std::vector<uint32_t>>> minimal_block_system() const;
  bool is_primitive() const;

  // the same group over a small generating set
  PermGroup reduced() const;

  PermGroup normal_closure(const std::vector<Perm>& seeds) const;
  PermGroup derived_subgroup() const;

  // all elements, or nullopt when |G| > cap
  std::optional<std::vector<Perm>> elements(size_t cap) const;

  Perm random_element(std::mt19937_64& rng) const;

  bool is_abelian() const;

  // product of the minimal normal subgroups found by closure minimization;
  // equals the socle for primitive input (search is budgeted)
  PermGroup socle_primitive() const;

  bool is_simple_nonabelian() const;

  std::vector<uint32_t> base() const;

private:
  struct Level {
    uint32_t b = 0;
    std::vector<Perm> gens;
    std::vector<int32_t> pos;      // point -> orbit index, -1 outside
    std::vector<uint32_t> orbit;   // discovery order, orbit[0] == b
    std::vector<Perm> tr;          // tr[pt] maps b to pt
    size_t done_pts = 0, done_gens = 0;

    void init(unsigned n, uint32_t base_pt);
    void add_gen(const Perm& s);
  };

  unsigned n_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  Bigint order_ = 1;

  void build(const std::vector<uint32_t>& seed_base);
  // sift starting at level lvl; returns residue and the level reached
  std::pair<Perm, size_t> sift_from(size_t lvl, Perm g) const;
  // returns -1 when the level's Schreier generators all sift to identity,
  // otherwise the level where a residue was inserted
  int verify_level(size_t i);

  PermGroup minimize_normal(PermGroup nrm) const;
};

} // namespace r3
