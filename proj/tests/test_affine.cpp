#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "r3/affine.hpp"
#include "r3/matrix.hpp"
#include "r3/perm_group.hpp"

#include "test_util.hpp"

using namespace r3;

namespace {

// x -> ax + b on Z/p
Perm mod_affine(unsigned p, uint32_t a, uint32_t b)
{
  std::vector<uint32_t> img(p);
  for (uint32_t x = 0; x < p; ++x)
    img[x] = (a * x + b) % p;
  return Perm(img);
}

std::vector<uint32_t> neg_vec(unsigned p, const std::vector<uint32_t>& v)
{
  std::vector<uint32_t> r(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    r[i] = (p - v[i]) % p;
  return r;
}

void check_round_trip(const AffineFrame& fr, const PermGroup& g)
{
  for (const Perm& gen : g.generators()) {
    std::vector<uint32_t> t = fr.label[gen[0]];
    Perm lin = gen * fr.translation(neg_vec(fr.p, t));
    CHECK(lin[0] == 0);
    MatrixModP m = matrix_of(fr, lin);
    CHECK(mat_inverse(m).has_value());
    CHECK(fr.perm_of_affine(m, t) == gen);
  }
}

} // namespace

TEST_CASE("one dimensional affine frames")
{
  PermGroup agl15(5, {mod_affine(5, 1, 1), mod_affine(5, 2, 0)});
  CHECK(agl15.order() == 20);

  auto fr = detect_affine(agl15);
  REQUIRE(fr.has_value());
  CHECK(fr->p == 5);
  CHECK(fr->d == 1);
  CHECK(fr->n == 5);
  CHECK(!fr->multiple_regular);
  CHECK(fr->g0.order() == 4);
  REQUIRE(fr->g0_mats.size() == fr->g0.generators().size());

  CHECK(matrix_of(*fr, mod_affine(5, 2, 0)) ==
        scaled(MatrixModP::identity(5, 1), 2));

  check_round_trip(*fr, agl15);

  // frames are deterministic
  auto again = detect_affine(agl15);
  REQUIRE(again.has_value());
  CHECK(again->label == fr->label);
}

TEST_CASE("groups with no affine frame")
{
  PermGroup s5(5, sym_gens(5));
  CHECK(!detect_affine(s5).has_value());

  PermGroup c6(6, {pcyc(6, {{0, 1, 2, 3, 4, 5}})});
  CHECK(!detect_affine(c6).has_value());

  PermGroup a7(7, alt_gens(7));
  CHECK(!detect_affine(a7).has_value());
}

TEST_CASE("regular elementary abelian frame")
{
  PermGroup v4(4, {pcyc(4, {{0, 1}, {2, 3}}), pcyc(4, {{0, 2}, {1, 3}})});
  auto fr = detect_affine(v4);
  REQUIRE(fr.has_value());
  CHECK(fr->p == 2);
  CHECK(fr->d == 2);
  CHECK(fr->g0.trivial());

  for (uint32_t x = 0; x < fr->n; ++x)
    CHECK(fr->point_of(fr->label[x]) == x);

  CHECK(matrix_of(*fr, Perm(4)).is_identity());
}

TEST_CASE("two dimensional frame with point stabilizer")
{
  PermGroup s4(4, sym_gens(4));
  auto fr = detect_affine(s4);
  REQUIRE(fr.has_value());
  CHECK(fr->p == 2);
  CHECK(fr->d == 2);
  CHECK(fr->g0.order() == 6);
  check_round_trip(*fr, s4);

  // stabilizer generators act linearly and invertibly
  for (size_t i = 0; i < fr->g0_mats.size(); ++i) {
    CHECK(mat_inverse(fr->g0_mats[i]).has_value());
    CHECK(fr->perm_of_matrix(fr->g0_mats[i]) == fr->g0.generators()[i]);
  }
}

TEST_CASE("frame over an odd prime")
{
  auto pt = [](uint32_t a, uint32_t b) { return a + 3 * b; };
  std::vector<uint32_t> t1(9), t2(9), sw(9);
  for (uint32_t a = 0; a < 3; ++a)
    for (uint32_t b = 0; b < 3; ++b) {
      t1[pt(a, b)] = pt((a + 1) % 3, b);
      t2[pt(a, b)] = pt(a, (b + 1) % 3);
      sw[pt(a, b)] = pt(b, a);
    }
  PermGroup g(9, {Perm(t1), Perm(t2), Perm(sw)});
  CHECK(g.order() == 18);

  auto fr = detect_affine(g);
  REQUIRE(fr.has_value());
  CHECK(fr->p == 3);
  CHECK(fr->d == 2);
  CHECK(fr->g0.order() == 2);

  MatrixModP m = matrix_of(*fr, Perm(sw));
  CHECK(!m.is_identity());
  CHECK((m * m).is_identity());

  check_round_trip(*fr, g);

  // conjugating a translation by a stabilizer element is again a translation
  Perm tr = fr->translation({1, 2});
  MatrixModP sm = matrix_of(*fr, Perm(sw));
  CHECK(conjugate(tr, Perm(sw)) ==
        fr->translation(row_vec_mul({1, 2}, sm)));
}
