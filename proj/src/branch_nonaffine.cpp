#include "r3/branch_nonaffine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>

#include "r3/bigint.hpp"
#include "r3/refine.hpp"

namespace r3 {

std::vector<Perm> imprimitive_closure(
    unsigned n, const std::vector<std::vector<uint32_t>>& blocks)
{
  size_t k = blocks.size(), b = blocks[0].size();
  assert(k >= 2 && b >= 2 && k * b == n);

  auto ident = [n]() {
    std::vector<uint32_t> img(n);
    for (uint32_t i = 0; i < n; ++i)
      img[i] = i;
    return img;
  };

  std::vector<Perm> gens;
  std::vector<uint32_t> swp = ident();
  swp[blocks[0][0]] = blocks[0][1];
  swp[blocks[0][1]] = blocks[0][0];
  gens.push_back(Perm(swp));
  if (b >= 3) {
    std::vector<uint32_t> cyc = ident();
    for (size_t i = 0; i < b; ++i)
      cyc[blocks[0][i]] = blocks[0][(i + 1) % b];
    gens.push_back(Perm(cyc));
  }

  std::vector<uint32_t> bswp = ident();
  for (size_t i = 0; i < b; ++i) {
    bswp[blocks[0][i]] = blocks[1][i];
    bswp[blocks[1][i]] = blocks[0][i];
  }
  gens.push_back(Perm(bswp));
  if (k >= 3) {
    std::vector<uint32_t> bcyc(n);
    for (size_t j = 0; j < k; ++j)
      for (size_t i = 0; i < b; ++i)
        bcyc[blocks[j][i]] = blocks[(j + 1) % k][i];
    gens.push_back(Perm(bcyc));
  }
  return gens;
}

std::optional<HammingLabelling>
recognize_h2(unsigned n, const std::vector<std::vector<uint32_t>>& adj)
{
  unsigned q = static_cast<unsigned>(std::lround(std::sqrt(double(n))));
  if (q < 2 || q * q != n)
    return std::nullopt;
  for (const auto& nb : adj)
    if (nb.size() != 2 * (q - 1))
      return std::nullopt;

  std::vector<std::vector<bool>> am(n, std::vector<bool>(n, false));
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v : adj[u])
      am[u][v] = true;

  // the line through an edge is its closed common neighborhood
  std::set<std::vector<uint32_t>> lineset;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v : adj[u]) {
      if (v < u)
        continue;
      std::vector<uint32_t> line{u, v};
      for (uint32_t w : adj[u])
        if (w != v && am[v][w])
          line.push_back(w);
      if (line.size() != q)
        return std::nullopt;
      std::sort(line.begin(), line.end());
      for (size_t i = 0; i < q; ++i)
        for (size_t j = i + 1; j < q; ++j)
          if (!am[line[i]][line[j]])
            return std::nullopt;
      lineset.insert(line);
    }

  std::vector<std::vector<uint32_t>> lines(lineset.begin(), lineset.end());
  if (lines.size() != 2 * q)
    return std::nullopt;
  std::vector<std::vector<uint32_t>> through(n);
  for (uint32_t li = 0; li < lines.size(); ++li)
    for (uint32_t x : lines[li])
      through[x].push_back(li);
  for (uint32_t x = 0; x < n; ++x)
    if (through[x].size() != 2)
      return std::nullopt;

  // two-color the lines: intersecting lines get different colors
  std::vector<int> color(lines.size(), -1);
  std::vector<uint32_t> queue{0};
  color[0] = 0;
  while (!queue.empty()) {
    uint32_t li = queue.back();
    queue.pop_back();
    for (uint32_t x : lines[li])
      for (uint32_t lj : through[x]) {
        if (lj == li)
          continue;
        if (color[lj] == -1) {
          color[lj] = 1 - color[li];
          queue.push_back(lj);
        } else if (color[lj] == color[li]) {
          return std::nullopt;
        }
      }
  }

  HammingLabelling lab;
  lab.q = q;
  lab.row.assign(n, 0);
  lab.col.assign(n, 0);
  std::vector<uint32_t> index(lines.size(), 0);
  uint32_t next[2] = {0, 0};
  for (uint32_t li = 0; li < lines.size(); ++li) {
    if (color[li] == -1)
      return std::nullopt;
    index[li] = next[color[li]]++;
  }
  if (next[0] != q || next[1] != q)
    return std::nullopt;
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t li : through[x]) {
      if (color[li] == 0)
        lab.row[x] = index[li];
      else
        lab.col[x] = index[li];
    }

  // the labelling must reproduce adjacency pair by pair
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y) {
      if (x == y)
        continue;
      if (lab.row[x] == lab.row[y] && lab.col[x] == lab.col[y])
        return std::nullopt;
      bool share = lab.row[x] == lab.row[y] || lab.col[x] == lab.col[y];
      if (share != am[x][y])
        return std::nullopt;
    }
  return lab;
}

std::vector<Perm> product_closure(const HammingLabelling& lab)
{
  unsigned q = lab.q, n = q * q;
  std::vector<uint32_t> pt(n);
  for (uint32_t x = 0; x < n; ++x)
    pt[lab.row[x] * q + lab.col[x]] = x;

  auto on_grid = [&](auto f) {
    std::vector<uint32_t> img(n);
    for (uint32_t i = 0; i < q; ++i)
      for (uint32_t j = 0; j < q; ++j) {
        auto [i2, j2] = f(i, j);
        img[pt[i * q + j]] = pt[i2 * q + j2];
      }
    return Perm(img);
  };

  auto sw = [](uint32_t i) { return i < 2 ? i ^ 1 : i; };
  auto cy = [q](uint32_t i) { return (i + 1) % q; };
  std::vector<Perm> gens;
  gens.push_back(on_grid([&](uint32_t i, uint32_t j) {
    return std::pair<uint32_t, uint32_t>(sw(i), j);
  }));
  gens.push_back(on_grid([&](uint32_t i, uint32_t j) {
    return std::pair<uint32_t, uint32_t>(cy(i), j);
  }));
  gens.push_back(on_grid([&](uint32_t i, uint32_t j) {
    return std::pair<uint32_t, uint32_t>(i, sw(j));
  }));
  gens.push_back(on_grid([&](uint32_t i, uint32_t j) {
    return std::pair<uint32_t, uint32_t>(i, cy(j));
  }));
  gens.push_back(on_grid([&](uint32_t i, uint32_t j) {
    return std::pair<uint32_t, uint32_t>(j, i);
  }));
  return gens;
}

std::optional<PermGroup> almost_simple_closure(const PermGroup& g)
{
  PermGroup socle = g.socle_primitive();
  if (!socle.is_simple_nonabelian())
    return std::nullopt;
  return oracle_two_closure(g);
}

namespace {

void assert_sound(const PermGroup& g, const OrbitalStructure& os,
                  const PermGroup& h)
{
  assert(h.contains_all(g.generators()));
  for (const Perm& x : h.generators())
    assert(preserves_orbitals(os, x));
  (void)g;
  (void)os;
  (void)h;
}

} // namespace

BranchResult run_nonaffine(const PermGroup& g, const OrbitalStructure& os)
{
  unsigned n = g.degree();

  if (auto blocks = g.minimal_block_system()) {
    std::vector<Perm> gens = imprimitive_closure(n, *blocks);
    PermGroup h(n, gens);
    size_t k = blocks->size(), b = (*blocks)[0].size();
    Bigint expect = 1;
    for (unsigned i = 2; i <= b; ++i)
      expect *= i;
    expect = bigint_pow(expect, static_cast<unsigned>(k));
    for (unsigned i = 2; i <= k; ++i)
      expect *= i;
    assert(h.order() == expect);
    assert_sound(g, os, h);
    return BranchResult::found(std::move(h), "imprimitive");
  }

  // undirected smallest orbit of the right degree -> try a grid labelling
  unsigned q = static_cast<unsigned>(std::lround(std::sqrt(double(n))));
  if (q >= 3 && q * q == n) {
    for (uint16_t c = 1; c < os.rank; ++c) {
      if (os.paired[c] != c)
        continue;
      if (os.sizes[c] != static_cast<uint64_t>(n) * 2 * (q - 1))
        continue;
      std::vector<std::vector<uint32_t>> adj(n);
      for (uint32_t x = 0; x < n; ++x)
        for (uint32_t y = 0; y < n; ++y)
          if (os.at(x, y) == c)
            adj[x].push_back(y);
      if (auto lab = recognize_h2(n, adj)) {
        PermGroup h(n, product_closure(*lab));
        assert_sound(g, os, h);
        return BranchResult::found(std::move(h), "product");
      }
    }
  }

  PermGroup socle = g.socle_primitive();
  if (socle.is_simple_nonabelian()) {
    if (auto h = oracle_two_closure(g)) {
      assert_sound(g, os, *h);
      return BranchResult::found(std::move(*h), "almost simple");
    }
    return BranchResult::fail("oracle budget exceeded for simple socle");
  }
  return BranchResult::fail("affine");
}

} // namespace r3
