#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "r3/orbitals.hpp"
#include "r3/perm_group.hpp"
#include "r3/zoo.hpp"

using namespace r3;

namespace {

std::vector<uint64_t> sd(std::initializer_list<uint64_t> v)
{
  return std::vector<uint64_t>(v);
}

} // namespace

TEST_CASE("imprimitive instances")
{
  Instance w = zoo_imprimitive(5, 3);
  CHECK(w.degree == 15);
  CHECK(w.subdegrees == sd({4, 10}));
  CHECK(w.order == 48000);
  CHECK(*w.closure_order == 10368000);

  Instance s = zoo_imprimitive(3, 2);
  CHECK(s.degree == 6);
  CHECK(s.subdegrees == sd({2, 3}));
  CHECK(*s.closure_order == 72);

  Instance d = zoo_imprimitive(2, 2);
  CHECK(d.degree == 4);
  CHECK(d.subdegrees == sd({1, 2}));
  CHECK(d.order == 8);
}

TEST_CASE("product instances")
{
  Instance f = zoo_product(5);
  CHECK(f.degree == 25);
  CHECK(f.subdegrees == sd({8, 16}));
  CHECK(f.order == 800);
  CHECK(*f.closure_order == 28800);

  Instance s4 = zoo_product(4);
  CHECK(s4.degree == 16);
  CHECK(s4.subdegrees == sd({6, 9}));

  Instance s3 = zoo_product(3);
  CHECK(s3.degree == 9);
  CHECK(s3.subdegrees == sd({4, 4}));
}

TEST_CASE("johnson pair instances")
{
  Instance pet = zoo_johnson_pairs(5);
  CHECK(pet.degree == 10);
  CHECK(pet.subdegrees == sd({3, 6}));
  CHECK(pet.order == 60);
  CHECK(*pet.closure_order == 120);

  Instance j6 = zoo_johnson_pairs(6);
  CHECK(j6.degree == 15);
  CHECK(j6.subdegrees == sd({6, 8}));

  Instance j7 = zoo_johnson_pairs(7);
  CHECK(j7.degree == 21);
  CHECK(j7.subdegrees == sd({10, 10}));
}

TEST_CASE("paley instances")
{
  Instance p13 = zoo_paley(13);
  CHECK(p13.degree == 13);
  CHECK(p13.subdegrees == sd({6, 6}));
  CHECK(p13.order == 78);
  CHECK(*p13.closure_order == 78);

  Instance p9 = zoo_paley(9);
  CHECK(p9.degree == 9);
  CHECK(p9.subdegrees == sd({4, 4}));
  CHECK(p9.order == 36);
  CHECK(*p9.closure_order == 72);

  Instance p17 = zoo_paley(17);
  CHECK(p17.subdegrees == sd({8, 8}));
  CHECK(*p17.closure_order == 136);
}

TEST_CASE("bilinear forms instances")
{
  Instance h23 = zoo_bilinear(2, 3);
  CHECK(h23.degree == 64);
  CHECK(h23.subdegrees == sd({21, 42}));
  CHECK(h23.order == 64512);
  CHECK(*h23.closure_order == 64512);

  Instance h32 = zoo_bilinear(3, 2);
  CHECK(h32.degree == 81);
  CHECK(h32.subdegrees == sd({32, 48}));
  CHECK(h32.order == 93312);
  CHECK(*h32.closure_order == 186624);

  Instance h24 = zoo_bilinear(2, 4);
  CHECK(h24.degree == 256);
  CHECK(h24.subdegrees == sd({45, 210}));
}

TEST_CASE("affine polar instances")
{
  Instance m22 = zoo_affine_polar(-1, 2, 2);
  CHECK(m22.degree == 16);
  CHECK(m22.subdegrees == sd({5, 10}));
  CHECK(m22.order == 1920);
  CHECK(*m22.closure_order == 1920);

  Instance p23 = zoo_affine_polar(1, 2, 3);
  CHECK(p23.degree == 81);
  CHECK(p23.subdegrees == sd({32, 48}));
  CHECK(p23.order == 186624);
  CHECK(*p23.closure_order == 186624);

  Instance p32 = zoo_affine_polar(1, 3, 2);
  CHECK(p32.degree == 64);
  CHECK(p32.subdegrees == sd({28, 35}));
  CHECK(*p32.closure_order == 2580480);
}

TEST_CASE("polar and bilinear coincidence at m = 2")
{
  // same degree, same subdegrees, same closure order, different groups
  Instance a = zoo_affine_polar(1, 2, 3);
  Instance b = zoo_bilinear(3, 2);
  CHECK(a.degree == b.degree);
  CHECK(a.subdegrees == b.subdegrees);
  CHECK(*a.closure_order == *b.closure_order);
}

TEST_CASE("orbital refinement under subgroups")
{
  // wreath instance orbitals refine the full wreath closure orbitals
  Instance w = zoo_imprimitive(5, 2);
  PermGroup g(w.degree, w.gens);
  OrbitalStructure fine = two_orbits(g);

  Instance big = zoo_imprimitive(5, 2);
  std::vector<Perm> up = big.gens;
  // adding a transposition inside block 0 coarsens nothing for rank 3
  std::vector<uint32_t> img(w.degree);
  for (uint32_t i = 0; i < w.degree; ++i)
    img[i] = i < 2 ? i ^ 1 : i;
  up.push_back(Perm(img));
  PermGroup h(w.degree, up);
  OrbitalStructure coarse = two_orbits(h);
  REQUIRE(h.order() > g.order());

  // every fine color maps inside exactly one coarse color
  for (uint32_t a = 0; a < w.degree; ++a)
    for (uint32_t b = 0; b < w.degree; ++b)
      for (uint32_t c = 0; c < w.degree; ++c)
        for (uint32_t d = 0; d < w.degree; ++d)
          if (fine.at(a, b) == fine.at(c, d))
            CHECK(coarse.at(a, b) == coarse.at(c, d));
}

TEST_CASE("name lookup")
{
  auto a = zoo_by_name("johnson", {"5"});
  REQUIRE(a.has_value());
  CHECK(a->degree == 10);

  auto b = zoo_by_name("polar", {"-", "2", "2"});
  REQUIRE(b.has_value());
  CHECK(b->degree == 16);

  CHECK(!zoo_by_name("johnson", {"4"}).has_value());
  CHECK(!zoo_by_name("paley", {"12"}).has_value());
  CHECK(!zoo_by_name("nosuch", {"3"}).has_value());
  CHECK(!zoo_by_name("polar", {"x", "2", "2"}).has_value());
  CHECK(!zoo_by_name("bilinear", {"3"}).has_value());
}
