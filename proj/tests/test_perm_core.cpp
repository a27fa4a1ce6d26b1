#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "r3/orbitals.hpp"
#include "r3/perm.hpp"
#include "r3/perm_group.hpp"
#include "test_util.hpp"

using namespace r3;

TEST_CASE("permutation arithmetic")
{
  Perm a = pcyc(5, {{0, 1, 2}});
  Perm b = pcyc(5, {{2, 3, 4}});

  Perm ab = a * b;
  for (uint32_t x = 0; x < 5; ++x)
    CHECK(ab[x] == b[a[x]]);

  CHECK((a * a.inverse()).is_identity());
  CHECK(Perm(5).is_identity());
  CHECK(!Perm(std::vector<uint32_t>{0, 0, 1}).is_valid());

  Perm t = pcyc(5, {{0, 3}});
  Perm c = conjugate(a, t);
  for (uint32_t x = 0; x < 5; ++x)
    CHECK(c[t[x]] == t[a[x]]);

  CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);

  Perm g = pcyc(10, {{0, 1}, {2, 3, 4}, {5, 6, 7, 8, 9}});
  auto cyc = cycle_decomposition(g);
  REQUIRE(cyc.size() == 3);
  CHECK(element_order(g) == 30);
  CHECK(element_order(Perm(4)) == 1);

  CHECK(pcyc(6, {{0, 1}}).smallest_moved() == 0);
  CHECK(pcyc(6, {{4, 5}}).smallest_moved() == 4);
  CHECK(Perm(6).smallest_moved() == 6);
}

TEST_CASE("chain order matches naive enumeration")
{
  PermGroup s5(5, sym_gens(5));
  CHECK(s5.order() == 120);

  // multiply out all products from the generators as an independent count
  std::set<Perm> all{Perm(5)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(all.begin(), all.end());
    for (const Perm& x : cur)
      for (const Perm& g : s5.generators())
        grew |= all.insert(x * g).second;
  }
  CHECK(all.size() == 120);

  for (const Perm& x : all)
    CHECK(s5.contains(x));

  PermGroup trivial(4, {});
  CHECK(trivial.order() == 1);

  PermGroup a5p(10, pair_action(alt_gens(5)));
  CHECK(a5p.order() == 60);

  PermGroup s8(8, sym_gens(8));
  CHECK(s8.order() == 40320);
  PermGroup again(8, sym_gens(8));
  CHECK(s8.base() == again.base());
  CHECK(s8.base().front() == 0);
}

TEST_CASE("membership")
{
  PermGroup c3(3, {pcyc(3, {{0, 1, 2}})});
  CHECK(!c3.contains(pcyc(3, {{0, 1}})));
  CHECK(c3.contains(Perm(3)));

  PermGroup c4(4, {pcyc(4, {{0, 1, 2, 3}})});
  CHECK(c4.contains(pcyc(4, {{0, 2}, {1, 3}})));
  CHECK(!c4.contains(pcyc(4, {{0, 1}})));

  PermGroup a5(5, alt_gens(5));
  CHECK(a5.order() == 60);
  CHECK(!a5.contains(pcyc(5, {{0, 1}})));
  CHECK(a5.sift(pcyc(5, {{0, 1, 2}})).is_identity());
}

TEST_CASE("orbits and transporters")
{
  PermGroup g(5, {pcyc(5, {{0, 1, 2}})});
  auto orbs = g.orbits();
  REQUIRE(orbs.size() == 3);
  CHECK(orbs[0].size() == 3);
  CHECK(orbs[1] == std::vector<uint32_t>{3});
  CHECK(orbs[2] == std::vector<uint32_t>{4});
  CHECK(!g.is_transitive());

  PermGroup h(4, {pcyc(4, {{0, 1}}), pcyc(4, {{2, 3}})});
  auto horbs = h.orbits();
  REQUIRE(horbs.size() == 2);
  CHECK(horbs[0].size() == 2);
  CHECK(horbs[1].size() == 2);

  auto t = g.transporter(0, 2);
  REQUIRE(t.has_value());
  CHECK((*t)[0] == 2);
  CHECK(g.contains(*t));
  CHECK(g.transporter(0, 0)->is_identity());
  CHECK(!PermGroup(3, {pcyc(3, {{0, 1}})}).transporter(0, 2).has_value());
}

TEST_CASE("point stabilizers")
{
  PermGroup s5(5, sym_gens(5));
  PermGroup st = s5.point_stabilizer(0);
  CHECK(st.order() == 24);
  for (const Perm& g : st.generators())
    CHECK(g[0] == 0);
  CHECK(st.order() * s5.orbit_of(0).size() == s5.order());

  PermGroup c5(5, {pcyc(5, {{0, 1, 2, 3, 4}})});
  CHECK(c5.is_regular());
  CHECK(c5.point_stabilizer(2).trivial());

  PermGroup a5p(10, pair_action(alt_gens(5)));
  CHECK(a5p.point_stabilizer(7).order() == 6);
}

TEST_CASE("minimal block systems")
{
  PermGroup c4(4, {pcyc(4, {{0, 1, 2, 3}})});
  auto bs = c4.minimal_block_system();
  REQUIRE(bs.has_value());
  REQUIRE(bs->size() == 2);
  CHECK((*bs)[0] == std::vector<uint32_t>({0, 2}));
  CHECK((*bs)[1] == std::vector<uint32_t>({1, 3}));

  CHECK(PermGroup(5, sym_gens(5)).is_primitive());

  // three blocks of five: per-block cycle plus a block rotation
  std::vector<uint32_t> rot(15);
  for (uint32_t i = 0; i < 15; ++i)
    rot[i] = (i + 5) % 15;
  PermGroup w(15, {pcyc(15, {{0, 1, 2, 3, 4}}), Perm(rot)});
  CHECK(w.order() == 375);
  auto wb = w.minimal_block_system();
  REQUIRE(wb.has_value());
  CHECK(wb->size() == 3);
  CHECK((*wb)[0].size() == 5);
  for (const auto& block : *wb)
    for (const Perm& g : w.generators()) {
      std::set<uint32_t> im;
      for (uint32_t x : block)
        im.insert(g[x]);
      bool found = false;
      for (const auto& other : *wb)
        found |= std::equal(other.begin(), other.end(), im.begin(), im.end());
      CHECK(found);
    }
}

TEST_CASE("normal closure and derived subgroup")
{
  PermGroup s4(4, sym_gens(4));
  CHECK(s4.normal_closure({pcyc(4, {{0, 1}, {2, 3}})}).order() == 4);
  CHECK(s4.normal_closure({pcyc(4, {{0, 1, 2}})}).order() == 12);
  CHECK(s4.derived_subgroup().order() == 12);
  CHECK(s4.derived_subgroup().derived_subgroup().order() == 4);

  PermGroup s5(5, sym_gens(5));
  CHECK(s5.derived_subgroup().order() == 60);

  PermGroup c6(6, {pcyc(6, {{0, 1, 2, 3, 4, 5}})});
  CHECK(c6.is_abelian());
  CHECK(c6.derived_subgroup().trivial());
  CHECK(!s4.is_abelian());

  PermGroup n = s5.normal_closure({pcyc(5, {{0, 1, 2}})});
  for (const Perm& x : n.generators())
    for (const Perm& g : s5.generators())
      CHECK(n.contains(conjugate(x, g)));
}

TEST_CASE("element enumeration")
{
  PermGroup trivial(4, {});
  auto e0 = trivial.elements(10);
  REQUIRE(e0.has_value());
  CHECK(e0->size() == 1);

  PermGroup c3(5, {pcyc(5, {{0, 1, 2}})});
  auto e1 = c3.elements(10);
  REQUIRE(e1.has_value());
  CHECK(e1->size() == 3);

  PermGroup s5(5, sym_gens(5));
  CHECK(!s5.elements(100).has_value());
  auto e2 = s5.elements(200000);
  REQUIRE(e2.has_value());
  std::set<Perm> distinct(e2->begin(), e2->end());
  CHECK(distinct.size() == 120);
}

TEST_CASE("random elements stay inside")
{
  PermGroup a5p(10, pair_action(alt_gens(5)));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i)
    CHECK(a5p.contains(a5p.random_element(rng)));
}

TEST_CASE("socle of primitive groups")
{
  PermGroup s5(5, sym_gens(5));
  CHECK(s5.socle_primitive().order() == 60);

  PermGroup agl15(5, {pcyc(5, {{0, 1, 2, 3, 4}}), pcyc(5, {{1, 2, 4, 3}})});
  CHECK(agl15.order() == 20);
  PermGroup soc = agl15.socle_primitive();
  CHECK(soc.order() == 5);
  for (const Perm& x : soc.generators())
    for (const Perm& g : agl15.generators())
      CHECK(soc.contains(conjugate(x, g)));

  PermGroup a5p(10, pair_action(alt_gens(5)));
  CHECK(a5p.socle_primitive().order() == 60);

  // regular elementary abelian group: socle is the whole group
  std::vector<Perm> xors;
  for (uint32_t bit : {1u, 2u, 4u}) {
    std::vector<uint32_t> img(8);
    for (uint32_t x = 0; x < 8; ++x)
      img[x] = x ^ bit;
    xors.emplace_back(img);
  }
  PermGroup v8(8, xors);
  CHECK(v8.order() == 8);
  CHECK(v8.socle_primitive().order() == 8);
}

TEST_CASE("simplicity scan")
{
  CHECK(PermGroup(10, pair_action(alt_gens(5))).is_simple_nonabelian());
  CHECK(!PermGroup(5, {pcyc(5, {{0, 1, 2, 3, 4}})}).is_simple_nonabelian());
  CHECK(!PermGroup(5, sym_gens(5)).is_simple_nonabelian());
  CHECK(!PermGroup(4, alt_gens(4)).is_simple_nonabelian());
  CHECK(PermGroup(7, alt_gens(7)).is_simple_nonabelian());
}

TEST_CASE("pair orbits")
{
  PermGroup s5(5, sym_gens(5));
  CHECK(two_orbits(s5).rank == 2);

  PermGroup c4(4, {pcyc(4, {{0, 1, 2, 3}})});
  OrbitalStructure oc4 = two_orbits(c4);
  CHECK(oc4.rank == 4);
  for (uint16_t c = 0; c < oc4.rank; ++c)
    CHECK(oc4.paired[oc4.paired[c]] == c);

  PermGroup a5p(10, pair_action(alt_gens(5)));
  OrbitalStructure pet = two_orbits(a5p);
  CHECK(is_rank3(pet));
  CHECK(subdegrees(pet) == std::vector<uint64_t>({3, 6}));
  CHECK(!is_rank3(oc4));
  CHECK(!is_rank3(two_orbits(s5)));

  uint64_t total = 0;
  for (uint64_t s : pet.sizes)
    total += s;
  CHECK(total == 100);
  CHECK(pet.sizes[pet.at(0, 0)] == 10);

  for (const Perm& g : a5p.generators())
    CHECK(preserves_orbitals(pet, g));
  CHECK(preserves_orbitals(pet, Perm(10)));
  std::vector<uint32_t> ten(10);
  for (uint32_t i = 0; i < 10; ++i)
    ten[i] = (i + 1) % 10;
  CHECK(!preserves_orbitals(pet, Perm(ten)));
}

TEST_CASE("orbital refinement along subgroups")
{
  PermGroup c5(5, {pcyc(5, {{0, 1, 2, 3, 4}})});
  PermGroup d5(5, {pcyc(5, {{0, 1, 2, 3, 4}}), pcyc(5, {{1, 4}, {2, 3}})});
  CHECK(d5.order() == 10);

  OrbitalStructure oc = two_orbits(c5);
  OrbitalStructure od = two_orbits(d5);
  CHECK(oc.rank == 5);
  CHECK(od.rank == 3);
  CHECK(subdegrees(od) == std::vector<uint64_t>({2, 2}));

  // each orbital of the subgroup lies inside one orbital of the group
  std::vector<int> image(oc.rank, -1);
  for (uint32_t a = 0; a < 5; ++a)
    for (uint32_t b = 0; b < 5; ++b) {
      int& slot = image[oc.at(a, b)];
      if (slot < 0)
        slot = od.at(a, b);
      CHECK(slot == od.at(a, b));
    }
}
