#include "r3/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace r3 {

void PermGroup::Level::init(unsigned n, uint32_t base_pt)
{
  b = base_pt;
  gens.clear();
  pos.assign(n, -1);
  orbit.assign(1, b);
  tr.assign(n, Perm());
  pos[b] = 0;
  tr[b] = Perm(n);
  done_pts = 0;
  done_gens = 0;
}

// extend the orbit in place; existing points keep their position and
// transversal element, so previously verified Schreier generators stay valid
void PermGroup::Level::add_gen(const Perm& s)
{
  gens.push_back(s);

  size_t old_size = orbit.size();
  for (size_t i = 0; i < old_size; ++i) {
    uint32_t pt = orbit[i], im = s[pt];
    if (pos[im] < 0) {
      pos[im] = static_cast<int32_t>(orbit.size());
      tr[im] = tr[pt] * s;
      orbit.push_back(im);
    }
  }
  for (size_t i = old_size; i < orbit.size(); ++i) {
    uint32_t pt = orbit[i];
    for (const Perm& g : gens) {
      uint32_t im = g[pt];
      if (pos[im] < 0) {
        pos[im] = static_cast<int32_t>(orbit.size());
        tr[im] = tr[pt] * g;
        orbit.push_back(im);
      }
    }
  }
}

PermGroup::PermGroup(unsigned n, std::vector<Perm> gens,
                     const std::vector<uint32_t>& seed_base)
  : n_(n)
{
  for (const Perm& g : gens) {
    assert(g.degree() == n_);
    assert(g.is_valid());
    if (!g.is_identity())
      gens_.push_back(g);
  }
  build(seed_base);
}

void PermGroup::build(const std::vector<uint32_t>& seed_base)
{
  levels_.clear();

  std::vector<Perm> cur = gens_;
  size_t si = 0;
  while (true) {
    uint32_t b = n_;
    if (si < seed_base.size()) {
      b = seed_base[si];
    } else {
      for (const Perm& g : cur)
        b = std::min(b, g.smallest_moved());
      if (b == n_)
        break;
    }
    ++si;
    Level lv;
    lv.init(n_, b);
    levels_.push_back(std::move(lv));
    Level& back = levels_.back();
    std::vector<Perm> nxt;
    for (Perm& g : cur) {
      if (!g.is_identity()) {
        if (g[b] == b)
          nxt.push_back(g);
        back.add_gen(g);
      }
    }
    cur = std::move(nxt);
  }

  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    int j = verify_level(static_cast<size_t>(i));
    i = j < 0 ? i - 1 : j;
  }

  order_ = 1;
  for (const Level& lv : levels_)
    order_ *= static_cast<unsigned long>(lv.orbit.size());
}

std::pair<Perm, size_t> PermGroup::sift_from(size_t lvl, Perm g) const
{
  for (size_t l = lvl; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    uint32_t im = g[lv.b];
    if (lv.pos[im] < 0)
      return {std::move(g), l};
    g = g * lv.tr[im].inverse();
  }
  return {std::move(g), levels_.size()};
}

int PermGroup::verify_level(size_t i)
{
  Level& lv = levels_[i];
  for (size_t pi = 0; pi < lv.orbit.size(); ++pi) {
    for (size_t gi = 0; gi < lv.gens.size(); ++gi) {
      if (pi < lv.done_pts && gi < lv.done_gens)
        continue;
      uint32_t beta = lv.orbit[pi];
      const Perm& s = lv.gens[gi];
      uint32_t delta = s[beta];
      assert(lv.pos[delta] >= 0);
      Perm schreier = lv.tr[beta] * s * lv.tr[delta].inverse();
      if (schreier.is_identity())
        continue;
      auto [res, j] = sift_from(i + 1, std::move(schreier));
      if (res.is_identity())
        continue;
      if (j == levels_.size()) {
        Level fresh;
        fresh.init(n_, res.smallest_moved());
        levels_.push_back(std::move(fresh));
      }
      for (size_t l = i + 1; l <= j; ++l)
        levels_[l].add_gen(res);
      return static_cast<int>(j);
    }
  }
  lv.done_pts = lv.orbit.size();
  lv.done_gens = lv.gens.size();
  return -1;
}

Perm PermGroup::sift(const Perm& g) const
{
  assert(g.degree() == n_);
  return sift_from(0, g).first;
}

bool PermGroup::contains(const Perm& g) const
{
  assert(g.degree() == n_);
  return sift_from(0, g).first.is_identity();
}

bool PermGroup::contains_all(const std::vector<Perm>& gs) const
{
  for (const Perm& g : gs)
    if (!contains(g))
      return false;
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& h) const
{
  return n_ == h.n_ && h.contains_all(gens_);
}

bool PermGroup::same_group(const PermGroup& h) const
{
  return n_ == h.n_ && order_ == h.order_ && h.contains_all(gens_);
}

std::vector<std::vector<uint32_t>> PermGroup::orbits() const
{
  std::vector<std::vector<uint32_t>> res;
  std::vector<char> seen(n_, 0);
  for (uint32_t x = 0; x < n_; ++x) {
    if (seen[x])
      continue;
    std::vector<uint32_t> orb{x};
    seen[x] = 1;
    for (size_t i = 0; i < orb.size(); ++i)
      for (const Perm& g : gens_) {
        uint32_t im = g[orb[i]];
        if (!seen[im]) {
          seen[im] = 1;
          orb.push_back(im);
        }
      }
    res.push_back(std::move(orb));
  }
  return res;
}

std::vector<uint32_t> PermGroup::orbit_of(uint32_t x) const
{
  std::vector<uint32_t> orb{x};
  std::vector<char> seen(n_, 0);
  seen[x] = 1;
  for (size_t i = 0; i < orb.size(); ++i)
    for (const Perm& g : gens_) {
      uint32_t im = g[orb[i]];
      if (!seen[im]) {
        seen[im] = 1;
        orb.push_back(im);
      }
    }
  return orb;
}

bool PermGroup::is_transitive() const
{
  return n_ > 0 && orbit_of(0).size() == n_;
}

bool PermGroup::is_regular() const
{
  return is_transitive() && order_ == n_;
}

std::optional<Perm> PermGroup::transporter(uint32_t a, uint32_t b) const
{
  std::vector<Perm> tr(n_);
  std::vector<char> seen(n_, 0);
  std::vector<uint32_t> orb{a};
  seen[a] = 1;
  tr[a] = Perm(n_);
  for (size_t i = 0; i < orb.size(); ++i) {
    if (orb[i] == b)
      return tr[b];
    for (const Perm& g : gens_) {
      uint32_t im = g[orb[i]];
      if (!seen[im]) {
        seen[im] = 1;
        tr[im] = tr[orb[i]] * g;
        orb.push_back(im);
      }
    }
  }
  return std::nullopt;
}

PermGroup PermGroup::point_stabilizer(uint32_t x) const
{
  assert(x < n_);
  PermGroup chain(n_, gens_, {x});
  std::vector<Perm> sub;
  for (size_t l = 1; l < chain.levels_.size(); ++l)
    for (const Perm& g : chain.levels_[l].gens)
      sub.push_back(g);
  return PermGroup(n_, sub);
}

namespace {

struct UnionFind {
  std::vector<uint32_t> parent;

  explicit UnionFind(uint32_t n) : parent(n)
  {
    for (uint32_t i = 0; i < n; ++i)
      parent[i] = i;
  }

  uint32_t find(uint32_t x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // returns false if already joined
  bool join(uint32_t a, uint32_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (a > b)
      std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

} // namespace

std::optional<std::vector<std::vector<uint32_t>>>
PermGroup::minimal_block_system() const
{
  assert(is_transitive());

  size_t best_size = n_;
  std::optional<std::vector<std::vector<uint32_t>>> best;

  for (uint32_t beta = 1; beta < n_; ++beta) {
    UnionFind uf(n_);
    std::vector<std::pair<uint32_t, uint32_t>> queue{{0, beta}};
    uf.join(0, beta);
    for (size_t i = 0; i < queue.size(); ++i) {
      auto [a, b] = queue[i];
      for (const Perm& g : gens_) {
        uint32_t c = uf.find(g[a]), d = uf.find(g[b]);
        if (uf.join(c, d))
          queue.emplace_back(c, d);
      }
    }

    std::vector<std::vector<uint32_t>> classes(n_);
    for (uint32_t x = 0; x < n_; ++x)
      classes[uf.find(x)].push_back(x);
    size_t block_size = classes[uf.find(0)].size();
    if (block_size == n_ || block_size >= best_size)
      continue;

    std::vector<std::vector<uint32_t>> blocks;
    for (auto& c : classes)
      if (!c.empty())
        blocks.push_back(std::move(c));
    assert(n_ % block_size == 0 && blocks.size() == n_ / block_size);
    best_size = block_size;
    best = std::move(blocks);
    if (best_size == 2)
      break;
  }
  return best;
}

bool PermGroup::is_primitive() const
{
  return !minimal_block_system().has_value();
}

PermGroup PermGroup::reduced() const
{
  if (gens_.size() <= 8)
    return *this;

  // two random elements generate most groups met here; otherwise keep the
  // generators that grow the group
  std::mt19937_64 rng(0x4ed0ce);
  for (int t = 0; t < 3; ++t) {
    std::vector<Perm> pair{random_element(rng), random_element(rng)};
    PermGroup cand(n_, pair);
    if (cand.order_ == order_)
      return cand;
  }
  std::vector<Perm> keep;
  PermGroup cur(n_);
  for (const Perm& g : gens_) {
    if (cur.contains(g))
      continue;
    keep.push_back(g);
    cur = PermGroup(n_, keep);
    if (cur.order_ == order_)
      break;
  }
  return cur;
}

PermGroup PermGroup::normal_closure(const std::vector<Perm>& seeds) const
{
  std::vector<Perm> cur;
  for (const Perm& s : seeds)
    if (!s.is_identity())
      cur.push_back(s);
  PermGroup nrm(n_, cur);

  // sweep the reduced generating set, growing and compacting until the
  // group is closed under conjugation
  while (true) {
    nrm = nrm.reduced();
    bool stable = true;
    cur = nrm.generators();
    for (size_t i = 0; i < cur.size() && stable; ++i)
      for (const Perm& g : gens_) {
        Perm c = conjugate(cur[i], g);
        if (!nrm.contains(c)) {
          cur.push_back(std::move(c));
          nrm = PermGroup(n_, cur);
          stable = false;
          break;
        }
      }
    if (stable)
      return nrm;
  }
}

PermGroup PermGroup::derived_subgroup() const
{
  PermGroup small = reduced();
  const std::vector<Perm>& gs = small.gens_;
  std::vector<Perm> seeds;
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = i + 1; j < gs.size(); ++j) {
      Perm c = commutator(gs[i], gs[j]);
      if (!c.is_identity())
        seeds.push_back(std::move(c));
    }
  return small.normal_closure(seeds);
}

std::optional<std::vector<Perm>> PermGroup::elements(size_t cap) const
{
  if (order_ > cap)
    return std::nullopt;

  std::vector<Perm> res;
  res.reserve(static_cast<size_t>(order_));
  size_t k = levels_.size();
  std::vector<size_t> idx(k, 0);
  while (true) {
    Perm g(n_);
    for (size_t l = k; l-- > 0;) {
      const Level& lv = levels_[l];
      g = g * lv.tr[lv.orbit[idx[l]]];
    }
    res.push_back(std::move(g));
    size_t l = 0;
    for (; l < k; ++l) {
      if (++idx[l] < levels_[l].orbit.size())
        break;
      idx[l] = 0;
    }
    if (l == k)
      break;
  }
  assert(Bigint(res.size()) == order_);
  return res;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const
{
  Perm g(n_);
  for (size_t l = levels_.size(); l-- > 0;) {
    const Level& lv = levels_[l];
    std::uniform_int_distribution<size_t> pick(0, lv.orbit.size() - 1);
    g = g * lv.tr[lv.orbit[pick(rng)]];
  }
  return g;
}

bool PermGroup::is_abelian() const
{
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (!commutator(gens_[i], gens_[j]).is_identity())
        return false;
  return true;
}

PermGroup PermGroup::minimize_normal(PermGroup nrm) const
{
  constexpr size_t enum_cap = 512;
  std::mt19937_64 rng(0x5eedf00d);

  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    std::vector<Perm> candidates;
    if (auto all = nrm.elements(enum_cap)) {
      for (Perm& e : *all)
        if (!e.is_identity())
          candidates.push_back(std::move(e));
    } else {
      candidates = nrm.generators();
      for (size_t i = 0; i < enum_cap; ++i) {
        Perm e = nrm.random_element(rng);
        if (!e.is_identity())
          candidates.push_back(std::move(e));
      }
    }
    for (const Perm& h : candidates) {
      PermGroup c = normal_closure({h});
      if (c.order() < nrm.order()) {
        nrm = std::move(c);
        shrunk = true;
        break;
      }
    }
  }
  return nrm;
}

PermGroup PermGroup::socle_primitive() const
{
  if (gens_.empty())
    return PermGroup(n_);

  PermGroup prod = minimize_normal(normal_closure({gens_.front()}));

  std::mt19937_64 rng(0x50c1e);
  unsigned misses = 0;
  while (misses < 24) {
    Perm h = random_element(rng);
    if (h.is_identity() || prod.contains(h)) {
      ++misses;
      continue;
    }
    PermGroup nrm = minimize_normal(normal_closure({h}));
    if (prod.contains_all(nrm.generators())) {
      ++misses;
      continue;
    }
    std::vector<Perm> joined = prod.generators();
    for (const Perm& g : nrm.generators())
      joined.push_back(g);
    PermGroup join(n_, joined);
    if (join.order() == prod.order() * nrm.order()) {
      prod = std::move(join);
      misses = 0;
    } else {
      ++misses;
    }
  }
  return prod;
}

bool PermGroup::is_simple_nonabelian() const
{
  if (order_ == 1 || is_abelian())
    return false;

  constexpr size_t enum_cap = 512;
  std::vector<Perm> candidates;
  if (auto all = elements(enum_cap)) {
    for (Perm& e : *all)
      if (!e.is_identity())
        candidates.push_back(std::move(e));
  } else {
    candidates = gens_;
    std::mt19937_64 rng(0xd15c0);
    for (size_t i = 0; i < enum_cap; ++i) {
      Perm e = random_element(rng);
      if (!e.is_identity())
        candidates.push_back(std::move(e));
    }
  }
  for (const Perm& h : candidates)
    if (normal_closure({h}).order() != order_)
      return false;
  return true;
}

std::vector<uint32_t> PermGroup::base() const
{
  std::vector<uint32_t> res;
  for (const Level& lv : levels_)
    res.push_back(lv.b);
  return res;
}

} // namespace r3
