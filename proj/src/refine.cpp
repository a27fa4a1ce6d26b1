#include "r3/refine.hpp"

#include <algorithm>
#include <cassert>

namespace r3 {

OrderedPartition initial_partition(const OrbitalStructure& cfg)
{
  OrderedPartition p;
  std::vector<std::pair<uint16_t, uint32_t>> by_color;
  for (uint32_t x = 0; x < cfg.n; ++x)
    by_color.emplace_back(cfg.at(x, x), x);
  std::sort(by_color.begin(), by_color.end());

  uint32_t start = 0;
  for (uint32_t i = 0; i < cfg.n; ++i) {
    p.points.push_back(by_color[i].second);
    if (i + 1 == cfg.n || by_color[i + 1].first != by_color[i].first) {
      p.cells.emplace_back(start, i + 1 - start);
      start = i + 1;
    }
  }
  return p;
}

void refine(const OrbitalStructure& cfg, OrderedPartition& p)
{
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ci = 0; ci < p.cells.size(); ++ci) {
      auto [off, sz] = p.cells[ci];
      if (sz <= 1)
        continue;

      size_t sig_len = p.cells.size() * cfg.rank;
      std::vector<std::pair<std::vector<uint32_t>, uint32_t>> sigs;
      sigs.reserve(sz);
      for (uint32_t i = 0; i < sz; ++i) {
        uint32_t x = p.points[off + i];
        std::vector<uint32_t> sig(sig_len, 0);
        for (size_t cj = 0; cj < p.cells.size(); ++cj) {
          auto [o2, s2] = p.cells[cj];
          for (uint32_t j = 0; j < s2; ++j)
            ++sig[cj * cfg.rank + cfg.at(x, p.points[o2 + j])];
        }
        sigs.emplace_back(std::move(sig), x);
      }
      std::sort(sigs.begin(), sigs.end());
      if (sigs.front().first == sigs.back().first)
        continue;

      std::vector<std::pair<uint32_t, uint32_t>> sub;
      uint32_t run = 0;
      for (uint32_t i = 0; i < sz; ++i) {
        p.points[off + i] = sigs[i].second;
        if (i + 1 == sz || sigs[i + 1].first != sigs[i].first) {
          sub.emplace_back(off + run, i + 1 - run);
          run = i + 1;
        }
      }
      p.cells.erase(p.cells.begin() + static_cast<long>(ci));
      p.cells.insert(p.cells.begin() + static_cast<long>(ci), sub.begin(),
                     sub.end());
      changed = true;
      break;
    }
  }
}

OrderedPartition individualized(const OrderedPartition& p, size_t cell,
                                uint32_t v)
{
  auto [off, sz] = p.cells[cell];
  assert(sz > 1);

  OrderedPartition q;
  q.points = p.points;
  uint32_t w = off;
  q.points[w++] = v;
  for (uint32_t i = 0; i < sz; ++i)
    if (p.points[off + i] != v)
      q.points[w++] = p.points[off + i];
  assert(w == off + sz);

  q.cells.reserve(p.cells.size() + 1);
  for (size_t i = 0; i < p.cells.size(); ++i) {
    if (i == cell) {
      q.cells.emplace_back(off, 1);
      q.cells.emplace_back(off + 1, sz - 1);
    } else {
      q.cells.push_back(p.cells[i]);
    }
  }
  return q;
}

namespace {

struct NodeBudget {};

class AutSearch {
public:
  AutSearch(const OrbitalStructure& cfg, uint64_t max_nodes)
    : cfg_(cfg), n_(cfg.n), max_nodes_(max_nodes), known_(n_)
  {
  }

  PermGroup run()
  {
    OrderedPartition root = initial_partition(cfg_);
    refine(cfg_, root);
    explore_identity(root, 0);
    return known_;
  }

private:
  const OrbitalStructure& cfg_;
  unsigned n_;
  uint64_t max_nodes_, nodes_ = 0;
  std::vector<Perm> found_;
  PermGroup known_;
  std::vector<uint32_t> prefix_;               // choices above the node
  std::vector<std::vector<uint32_t>> shapes_;  // identity cell sizes per depth
  std::vector<uint32_t> leaf_;                 // identity leaf point order

  void charge()
  {
    if (++nodes_ > max_nodes_)
      throw NodeBudget{};
  }

  static std::vector<uint32_t> shape_of(const OrderedPartition& p)
  {
    std::vector<uint32_t> s;
    s.reserve(p.cells.size());
    for (const auto& c : p.cells)
      s.push_back(c.second);
    return s;
  }

  // first smallest non-singleton cell
  static size_t target_cell(const OrderedPartition& p)
  {
    size_t best = p.cells.size();
    for (size_t i = 0; i < p.cells.size(); ++i)
      if (p.cells[i].second > 1 &&
          (best == p.cells.size() || p.cells[i].second < p.cells[best].second))
        best = i;
    assert(best < p.cells.size());
    return best;
  }

  bool color_automorphism(const Perm& g) const
  {
    for (uint32_t a = 0; a < n_; ++a)
      for (uint32_t b = 0; b < n_; ++b)
        if (cfg_.at(g[a], g[b]) != cfg_.at(a, b))
          return false;
    return true;
  }

  // orbit roots of the subgroup of found automorphisms fixing the prefix
  std::vector<uint32_t> prefix_stab_roots() const
  {
    std::vector<uint32_t> root(n_);
    for (uint32_t x = 0; x < n_; ++x)
      root[x] = x;
    auto find = [&](uint32_t x) {
      while (root[x] != x) {
        root[x] = root[root[x]];
        x = root[x];
      }
      return x;
    };
    for (const Perm& g : found_) {
      bool fixes = true;
      for (uint32_t b : prefix_)
        fixes &= g[b] == b;
      if (!fixes)
        continue;
      for (uint32_t x = 0; x < n_; ++x) {
        uint32_t a = find(x), b = find(g[x]);
        if (a != b)
          root[std::max(a, b)] = std::min(a, b);
      }
    }
    for (uint32_t x = 0; x < n_; ++x)
      root[x] = find(x);
    return root;
  }

  void explore_identity(OrderedPartition& p, size_t depth)
  {
    charge();
    assert(depth == shapes_.size());
    shapes_.push_back(shape_of(p));

    if (p.discrete()) {
      leaf_ = p.points;
      return;
    }

    size_t tc = target_cell(p);
    auto [off, sz] = p.cells[tc];
    std::vector<uint32_t> cands(p.points.begin() + off,
                                p.points.begin() + off + sz);

    uint32_t v0 = cands.front();
    {
      OrderedPartition q = individualized(p, tc, v0);
      refine(cfg_, q);
      prefix_.push_back(v0);
      explore_identity(q, depth + 1);
      prefix_.pop_back();
    }

    std::vector<char> processed(n_, 0);
    processed[v0] = 1;
    for (size_t i = 1; i < cands.size(); ++i) {
      uint32_t v = cands[i];
      std::vector<uint32_t> root = prefix_stab_roots();
      bool covered = false;
      for (uint32_t x = 0; x < n_ && !covered; ++x)
        covered = processed[x] && root[x] == root[v];
      processed[v] = 1;
      if (covered)
        continue;
      OrderedPartition q = individualized(p, tc, v);
      refine(cfg_, q);
      explore_branch(q, depth + 1);
    }
  }

  // returns true once a valid mapping was confirmed in this subtree
  bool explore_branch(OrderedPartition& p, size_t depth)
  {
    charge();
    assert(depth < shapes_.size());
    if (shape_of(p) != shapes_[depth])
      return false;

    if (p.discrete()) {
      std::vector<uint32_t> img(n_);
      for (uint32_t i = 0; i < n_; ++i)
        img[leaf_[i]] = p.points[i];
      Perm sigma(img);
      if (sigma.is_identity() || !color_automorphism(sigma))
        return false;
      if (!known_.contains(sigma)) {
        found_.push_back(sigma);
        known_ = PermGroup(n_, found_);
      }
      return true;
    }

    size_t tc = target_cell(p);
    auto [off, sz] = p.cells[tc];
    for (uint32_t i = 0; i < sz; ++i) {
      OrderedPartition q = individualized(p, tc, p.points[off + i]);
      refine(cfg_, q);
      if (explore_branch(q, depth + 1))
        return true;
    }
    return false;
  }
};

} // namespace

std::optional<PermGroup> automorphism_group(const OrbitalStructure& cfg,
                                            const AutOptions& opt)
{
  if (cfg.n > opt.max_degree)
    return std::nullopt;
  try {
    AutSearch search(cfg, opt.max_nodes);
    PermGroup res = search.run();
    for (const Perm& g : res.generators())
      assert(preserves_orbitals(cfg, g));
    return res;
  } catch (const NodeBudget&) {
    return std::nullopt;
  }
}

std::optional<PermGroup> oracle_two_closure(const PermGroup& g,
                                            const AutOptions& opt)
{
  if (g.degree() > opt.max_degree)
    return std::nullopt;
  auto res = automorphism_group(two_orbits(g), opt);
  if (res)
    assert(g.is_subgroup_of(*res));
  return res;
}

} // namespace r3
