#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "r3/branch_nonaffine.hpp"
#include "r3/orbitals.hpp"
#include "r3/perm_group.hpp"
#include "r3/refine.hpp"
#include "r3/zoo.hpp"

#include "test_util.hpp"

using namespace r3;

namespace {

std::vector<std::vector<uint32_t>> grid_adjacency(unsigned q)
{
  unsigned n = q * q;
  std::vector<std::vector<uint32_t>> adj(n);
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y) {
      if (x == y)
        continue;
      if (x / q == y / q || x % q == y % q)
        adj[x].push_back(y);
    }
  return adj;
}

std::vector<std::vector<uint32_t>> color_adjacency(const OrbitalStructure& os,
                                                   uint16_t c)
{
  std::vector<std::vector<uint32_t>> adj(os.n);
  for (uint32_t x = 0; x < os.n; ++x)
    for (uint32_t y = 0; y < os.n; ++y)
      if (os.at(x, y) == c)
        adj[x].push_back(y);
  return adj;
}

} // namespace

TEST_CASE("imprimitive closure orders")
{
  // D4 with diagonal blocks
  std::vector<Perm> d4 = imprimitive_closure(4, {{0, 2}, {1, 3}});
  CHECK(PermGroup(4, d4).order() == 8);

  Instance s32 = zoo_imprimitive(3, 2);
  PermGroup g(s32.degree, s32.gens);
  auto blocks = g.minimal_block_system();
  REQUIRE(blocks.has_value());
  PermGroup h(6, imprimitive_closure(6, *blocks));
  CHECK(h.order() == 72);
  CHECK(h.contains_all(s32.gens));

  Instance w = zoo_imprimitive(5, 3);
  PermGroup gw(w.degree, w.gens);
  auto bw = gw.minimal_block_system();
  REQUIRE(bw.has_value());
  PermGroup hw(15, imprimitive_closure(15, *bw));
  CHECK(hw.order() == 10368000);
  CHECK(hw.contains_all(w.gens));
}

TEST_CASE("grid recognition")
{
  for (unsigned q : {3u, 4u, 5u}) {
    auto lab = recognize_h2(q * q, grid_adjacency(q));
    REQUIRE(lab.has_value());
    CHECK(lab->q == q);
    PermGroup h(q * q, product_closure(*lab));
    Bigint fact = 1;
    for (unsigned i = 2; i <= q; ++i)
      fact *= i;
    CHECK(h.order() == fact * fact * 2);
  }

  // petersen fails the square test
  Instance pet = zoo_johnson_pairs(5);
  PermGroup g(pet.degree, pet.gens);
  OrbitalStructure os = two_orbits(g);
  CHECK(!recognize_h2(10, color_adjacency(os, 1)).has_value());

  // a strongly regular impostor with rook parameters but 3-cliques only:
  // Z4 x Z4 with differences (1,0), (0,1), (1,1) and negatives
  std::vector<std::vector<uint32_t>> shr(16);
  auto pack = [](uint32_t a, uint32_t b) { return a * 4 + b; };
  for (uint32_t a = 0; a < 4; ++a)
    for (uint32_t b = 0; b < 4; ++b)
      for (auto [da, db] : {std::pair<uint32_t, uint32_t>{1, 0},
                            {3, 0},
                            {0, 1},
                            {0, 3},
                            {1, 1},
                            {3, 3}})
        shr[pack(a, b)].push_back(pack((a + da) % 4, (b + db) % 4));
  CHECK(!recognize_h2(16, shr).has_value());
}

TEST_CASE("product closure through recognition")
{
  Instance f = zoo_product(5);
  PermGroup g(f.degree, f.gens);
  OrbitalStructure os = two_orbits(g);
  uint16_t small = os.sizes[1] <= os.sizes[2] ? 1 : 2;
  auto lab = recognize_h2(25, color_adjacency(os, small));
  REQUIRE(lab.has_value());
  PermGroup h(25, product_closure(*lab));
  CHECK(h.order() == 28800);
  CHECK(h.contains_all(f.gens));
  for (const Perm& x : h.generators())
    CHECK(preserves_orbitals(os, x));
}

TEST_CASE("almost simple closure")
{
  Instance pet = zoo_johnson_pairs(5);
  PermGroup a5(pet.degree, pet.gens);
  auto h = almost_simple_closure(a5);
  REQUIRE(h.has_value());
  CHECK(h->order() == 120);

  // the closure itself is already closed
  auto h2 = almost_simple_closure(*h);
  REQUIRE(h2.has_value());
  CHECK(h2->order() == 120);

  Instance j7 = zoo_johnson_pairs(7);
  PermGroup a7(j7.degree, j7.gens);
  auto h7 = almost_simple_closure(a7);
  REQUIRE(h7.has_value());
  CHECK(h7->order() == 5040);

  // affine socle rejected
  Instance p13 = zoo_paley(13);
  CHECK(!almost_simple_closure(PermGroup(13, p13.gens)).has_value());
}

TEST_CASE("cascade")
{
  auto run = [](const Instance& ins) {
    PermGroup g(ins.degree, ins.gens);
    OrbitalStructure os = two_orbits(g);
    return run_nonaffine(g, os);
  };

  BranchResult w = run(zoo_imprimitive(5, 3));
  REQUIRE(w.ok());
  CHECK(w.note == "imprimitive");
  CHECK(w.group->order() == 10368000);

  BranchResult f = run(zoo_product(5));
  REQUIRE(f.ok());
  CHECK(f.note == "product");
  CHECK(f.group->order() == 28800);

  BranchResult j = run(zoo_johnson_pairs(6));
  REQUIRE(j.ok());
  CHECK(j.note == "almost simple");
  CHECK(j.group->order() == 720);

  BranchResult p = run(zoo_paley(13));
  CHECK(!p.ok());
  CHECK(p.note == "affine");

  BranchResult c = run(zoo_affine_polar(-1, 2, 2));
  CHECK(!c.ok());
  CHECK(c.note == "affine");
}

TEST_CASE("cascade output matches the oracle")
{
  for (const Instance& ins :
       {zoo_imprimitive(3, 2), zoo_imprimitive(2, 2), zoo_product(3),
        zoo_product(4), zoo_johnson_pairs(5)}) {
    PermGroup g(ins.degree, ins.gens);
    OrbitalStructure os = two_orbits(g);
    BranchResult r = run_nonaffine(g, os);
    REQUIRE(r.ok());
    auto ora = oracle_two_closure(g);
    REQUIRE(ora.has_value());
    CHECK(r.group->order() == ora->order());
    CHECK(r.group->same_group(*ora));
  }
}
