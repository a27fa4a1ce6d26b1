#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <string>
#include <vector>

#include "r3/branch_small.hpp"
#include "r3/branch_tensor.hpp"
#include "r3/coord.hpp"
#include "r3/gf.hpp"
#include "r3/orbitals.hpp"
#include "r3/refine.hpp"
#include "r3/zoo.hpp"

#include "test_util.hpp"

using namespace r3;

namespace {

PermGroup group_of(const Instance& inst)
{
  return PermGroup(inst.degree, inst.gens);
}

// affine group of order 320 on GF(16): translations, the cube of a
// primitive scalar and the Frobenius
PermGroup clebsch_group()
{
  Gf f = make_gf(2, 4);
  VecSpace vs(f, 1);
  std::vector<Perm> gens{vs.perm_of_translation({1}),
                         vs.perm_of_scalar(f.from_exp(3)),
                         vs.perm_of_frobenius()};
  return PermGroup(16, gens);
}

FrameCoords plain_coords(const Gf& f, unsigned k)
{
  VecSpace vs(f, k);
  std::vector<uint32_t> ident(vs.n);
  std::iota(ident.begin(), ident.end(), 0);
  return FrameCoords{vs, ident, ident};
}

} // namespace

TEST_CASE("tensor parameter extraction")
{
  auto params = [](const Instance& inst, unsigned p) {
    OrbitalStructure os = two_orbits(group_of(inst));
    return tensor_parameters(os, p);
  };

  auto p23 = params(zoo_bilinear(2, 3), 2);
  REQUIRE(p23.has_value());
  CHECK(*p23 == std::make_pair(2u, 3u));

  auto p33 = params(zoo_bilinear(3, 3), 3);
  REQUIRE(p33.has_value());
  CHECK(*p33 == std::make_pair(3u, 3u));

  // the q-divisible subdegree of H_2(2, 2) is the smaller one
  auto p22 = params(zoo_bilinear(2, 2), 2);
  REQUIRE(p22.has_value());
  CHECK(*p22 == std::make_pair(2u, 2u));

  auto p42 = params(zoo_bilinear(4, 2), 2);
  REQUIRE(p42.has_value());
  CHECK(*p42 == std::make_pair(4u, 2u));

  CHECK(!params(zoo_johnson_pairs(5), 2).has_value());
  CHECK(!params(zoo_paley(13), 13).has_value());
}

TEST_CASE("coefficient check for a tensor basis")
{
  Gf f = make_gf(2, 1);
  FrameCoords fc = plain_coords(f, 6);
  const VecSpace& vs = fc.vs;

  GfMat a(2, 2), sw2(2, 2), b3(3, 3);
  a.at(0, 0) = 1, a.at(0, 1) = 1, a.at(1, 1) = 1;
  sw2.at(0, 1) = 1, sw2.at(1, 0) = 1;
  b3.at(0, 1) = 1, b3.at(1, 2) = 1, b3.at(2, 0) = 1;

  std::vector<Perm> gens{vs.perm_of_mat(gf_kron(f, a, GfMat::identity(3))),
                         vs.perm_of_mat(gf_kron(f, sw2, GfMat::identity(3))),
                         vs.perm_of_mat(gf_kron(f, GfMat::identity(2), b3))};

  TensorBasis tb{3, GfMat::identity(6), GfMat::identity(6)};
  CHECK(check_tensor_basis(fc, gens, tb));
  CHECK(check_tensor_basis(fc, {}, tb));

  // swapping the rows of v12 and v21 breaks the coefficient layout
  GfMat bad = GfMat::identity(6);
  bad.at(1, 1) = 0, bad.at(1, 3) = 1;
  bad.at(3, 3) = 0, bad.at(3, 1) = 1;
  TensorBasis tbad{3, bad, bad};
  CHECK(!check_tensor_basis(fc, gens, tbad));
}

TEST_CASE("independent shift search")
{
  PermGroup s(6, sym_gens(6));
  std::vector<uint32_t> pset{0, 1, 2}, qset{0, 1, 2};
  auto g = shift_independent(s, pset, qset);
  REQUIRE(g.has_value());
  unsigned hits = 0;
  for (uint32_t x : pset)
    if ((*g)[x] <= 2)
      ++hits;
  CHECK(hits == 1);

  PermGroup triv(6, {});
  CHECK(!shift_independent(triv, {0, 1}, {0, 1, 2}).has_value());

  auto h = shift_independent(s, {0, 1}, {0});
  REQUIRE(h.has_value());
  CHECK((((*h)[0] == 0) ^ (((*h)[1]) == 0)));
}

TEST_CASE("special linear factor extraction")
{
  auto slw_of = [](const Instance& inst, unsigned m) {
    PermGroup g = group_of(inst);
    auto fr = detect_affine(g);
    REQUIRE(fr.has_value());
    SmallEmbeddings emb = embeddings_small(*fr);
    REQUIRE(!emb.cands.empty());
    FrameCoords fc = frame_coords(*fr, emb.cands.back().fs);
    auto slw = extract_slw(*fr, fc, m);
    REQUIRE(slw.has_value());
    return *slw;
  };

  PermGroup s24 = slw_of(zoo_bilinear(2, 4), 4);
  CHECK(s24.order() == Bigint(20160));
  PermGroup d24 = s24.derived_subgroup();
  CHECK(d24.order() == Bigint(20160));

  PermGroup s25 = slw_of(zoo_bilinear(2, 5), 5);
  CHECK(s25.order() == Bigint(9999360));
}

TEST_CASE("tensor basis search")
{
  auto basis_of = [](const Instance& inst, unsigned q, unsigned m) {
    PermGroup g = group_of(inst);
    OrbitalStructure os = two_orbits(g);
    auto fr = detect_affine(g);
    REQUIRE(fr.has_value());
    SmallEmbeddings emb = embeddings_small(*fr);
    const FieldEmbedding* pick = nullptr;
    for (const FieldEmbedding& e : emb.cands)
      if (e.fs.q == q)
        pick = &e;
    REQUIRE(pick != nullptr);
    FrameCoords fc = frame_coords(*fr, pick->fs);
    auto tb = find_tensor_basis(*fr, fc, os, m);
    REQUIRE(tb.has_value());
    return emit_tensor_closure(*fr, fc, *tb);
  };

  Instance h23 = zoo_bilinear(2, 3);
  CHECK(basis_of(h23, 2, 3).order() == *h23.closure_order);

  Instance h24 = zoo_bilinear(2, 4);
  CHECK(basis_of(h24, 2, 4).order() == *h24.closure_order);
}

TEST_CASE("tensor branch end to end")
{
  auto run = [](const Instance& inst) {
    PermGroup g = group_of(inst);
    OrbitalStructure os = two_orbits(g);
    return run_tensor(g, os);
  };

  Instance h22 = zoo_bilinear(2, 2);
  BranchResult r22 = run(h22);
  REQUIRE(r22.ok());
  CHECK(r22.note == "tensor q=2,m=2");
  CHECK(r22.group->order() == *h22.closure_order);

  Instance h32 = zoo_bilinear(3, 2);
  BranchResult r32 = run(h32);
  REQUIRE(r32.ok());
  CHECK(r32.note == "tensor q=3,m=2");
  CHECK(r32.group->order() == *h32.closure_order);
  CHECK(r32.group->contains_all(h32.gens));

  Instance h42 = zoo_bilinear(4, 2);
  BranchResult r42 = run(h42);
  REQUIRE(r42.ok());
  CHECK(r42.note == "tensor q=4,m=2");
  CHECK(r42.group->order() == *h42.closure_order);

  // rank 3 but not a tensor: parameters fit, no basis exists
  PermGroup cl = clebsch_group();
  BranchResult rcl = run_tensor(cl, two_orbits(cl));
  CHECK(!rcl.ok());
  CHECK(rcl.note == "no embedding gives a tensor basis");

  PermGroup pet = group_of(zoo_johnson_pairs(5));
  BranchResult rpet = run_tensor(pet, two_orbits(pet));
  CHECK(!rpet.ok());
  CHECK(rpet.note == "no affine frame");

  PermGroup pal = group_of(zoo_paley(13));
  BranchResult rpal = run_tensor(pal, two_orbits(pal));
  CHECK(!rpal.ok());
  CHECK(rpal.note == "no tensor parameters");
}

TEST_CASE("tensor branch agrees with the oracle")
{
  for (auto [q, m] : {std::pair<unsigned, unsigned>{2, 2}, {2, 3}, {3, 2}}) {
    Instance inst = zoo_bilinear(q, m);
    PermGroup g = group_of(inst);
    OrbitalStructure os = two_orbits(g);
    BranchResult r = run_tensor(g, os);
    REQUIRE(r.ok());
    auto ora = oracle_two_closure(g, AutOptions{});
    REQUIRE(ora.has_value());
    CHECK(r.group->same_group(*ora));
  }
}
