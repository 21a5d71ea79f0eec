#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "relgl/congruence.hpp"
#include "relgl/subgroup.hpp"

using namespace relgl;

TEST(Subgroup, GlOrderMatchesBruteForceScan) {
  struct Case {
    RingPtr r;
    unsigned n;
  };
  for (const auto& c : std::vector<Case>{{make_zmod(4), 2}, {make_zmod(2), 3}, {make_zmod(6), 2},
                                        {make_triangular(2), 2}, {make_local_f2(), 2}, {make_zmod(3), 3}}) {
    auto gl = enumerate_gl(*c.r, c.n);
    EXPECT_EQ(gl.size(), count_invertible_by_scan(*c.r, c.n)) << c.r->descriptor().dump() << " n=" << c.n;
    EXPECT_TRUE(is_subgroup(gl));
  }
}

TEST(Subgroup, ElementaryZ4IsSpecialLinear) {
  auto r = make_zmod(4);
  auto gl = enumerate_gl(*r, 3);
  ASSERT_EQ(gl.size(), 86016u);
  std::uint64_t det_one = 0;
  for (const auto& m : gl.members()) det_one += determinant(m) == r->one();
  auto e = elementary_subgroup(unit_ideal(r), 3);
  EXPECT_EQ(det_one, 43008u);
  EXPECT_EQ(e.size(), det_one);
  for (const auto& m : e.members()) ASSERT_EQ(determinant(m), r->one());
}

TEST(Subgroup, ClosureIsIdempotentAndOrderIndependent) {
  auto r = make_zmod(4);
  auto i = ideal_generated(r, {2});
  auto base = all_transvections(*r, 3, unit_ideal(r).members());
  auto e = closure(*r, 3, base, 1 << 20);
  auto again = closure(*r, 3, e.members(), 1 << 20);
  EXPECT_EQ(again, e);
  std::mt19937_64 rng(99);
  for (int k = 0; k < 3; ++k) {
    auto shuffled = base;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(closure(*r, 3, shuffled, 1 << 20).sorted_keys(), e.sorted_keys());
  }
  auto z = z_generators(i, 3);
  auto rel = closure(*r, 3, z, 1 << 20);
  std::reverse(z.begin(), z.end());
  EXPECT_EQ(closure(*r, 3, z, 1 << 20), rel);
}

TEST(Subgroup, RelativeInclusionsOverZ4) {
  auto r = make_zmod(4);
  auto i = ideal_generated(r, {2});
  auto e = elementary_subgroup(i, 3);
  auto rel = relative_elementary(i, 3);
  auto gl = principal_congruence_subgroup(i, 3);
  EXPECT_EQ(e.size(), 64u);
  EXPECT_EQ(rel.size(), 256u);
  EXPECT_EQ(gl.size(), 512u);
  EXPECT_TRUE(e.subset_of(rel));
  EXPECT_TRUE(rel.subset_of(gl));
  EXPECT_TRUE(is_subgroup(gl));
}

TEST(Subgroup, RelativeElementaryConstructionsAgree) {
  for (const auto& r : {make_zmod(4), make_zmod(6), make_local_f2(), make_triangular(2)}) {
    for (const auto& i : enumerate_ideals(r)) {
      if (i.is_unit() || (r->size() == 8 && i.size() > 2)) continue;
      auto a = relative_elementary(i, 3);
      auto b = relative_elementary_by_normal_closure(i, 3);
      EXPECT_EQ(a.sorted_keys(), b.sorted_keys()) << r->descriptor().dump() << " " << i.label();
    }
  }
}

TEST(Subgroup, PrincipalCongruenceLiftMatchesFilter) {
  for (const auto& r : {make_zmod(4), make_triangular(2), make_local_f2()}) {
    auto gl = enumerate_gl(*r, 2);
    for (const auto& i : enumerate_ideals(r)) {
      auto lifted = principal_congruence_subgroup(i, 2);
      auto filtered = congruence_subgroup(gl, make_congruence(Family::principal, 2, i));
      EXPECT_EQ(lifted.sorted_keys(), filtered.sorted_keys()) << r->descriptor().dump() << " " << i.label();
    }
  }
}

TEST(Subgroup, MixedCommutatorModesAgree) {
  auto r = make_zmod(4);
  auto i = ideal_generated(r, {2});
  auto f = relative_elementary(i, 3);
  auto h = principal_congruence_subgroup(i, 3);
  Caps by_elements, by_generators;
  by_generators.pair = 1;
  auto x = mixed_commutator(f, h, by_elements);
  auto y = mixed_commutator(f, h, by_generators);
  EXPECT_EQ(x.construction(), "element-pair commutators");
  EXPECT_EQ(y.construction(), "generator-pair commutators");
  EXPECT_EQ(x.sorted_keys(), y.sorted_keys());
  EXPECT_TRUE(is_subgroup(y));
}

TEST(Subgroup, CoprimeLevelsCommuteOverZ6) {
  // GL(2,Z/6) = GL(2,Z/2) x GL(2,Z/3); the two principal subgroups sit in different factors.
  auto r = make_zmod(6);
  auto a = principal_congruence_subgroup(ideal_generated(r, {2}), 2);
  auto b = principal_congruence_subgroup(ideal_generated(r, {3}), 2);
  EXPECT_EQ(a.size(), 48u);
  EXPECT_EQ(b.size(), 6u);
  EXPECT_EQ(mixed_commutator(a, b).size(), 1u);
}

TEST(Subgroup, NormalClosureOfCentralElement) {
  auto r = make_zmod(4);
  auto gl = enumerate_gl(*r, 2);
  auto s = normal_closure(*r, 2, {{scalar(*r, 2, 3), "c"}}, generating_set(gl), 1 << 10);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(is_normalised_by(s, gl.members()));
}

TEST(Subgroup, NonClosedMemberListIsNotSubgroup) {
  auto r = make_zmod(4);
  auto s = from_members(*r, 2, {transvection(*r, 2, 0, 1, 1)});
  EXPECT_FALSE(is_subgroup(s));
  EXPECT_THROW(generating_set(s), Error);
}

TEST(Subgroup, CapsRefuse) {
  auto r = make_zmod(4);
  Caps tiny = Caps::uniform(10);
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::invalid_input;
  };
  EXPECT_EQ(kind([&] { elementary_subgroup(unit_ideal(r), 3, tiny); }), ErrorKind::cap_exceeded);
  EXPECT_EQ(kind([&] { enumerate_gl(*r, 3, tiny); }), ErrorKind::cap_exceeded);
  EXPECT_EQ(kind([&] { principal_congruence_subgroup(ideal_generated(r, {2}), 3, tiny); }), ErrorKind::cap_exceeded);
  Caps low_degree;
  low_degree.degree = 2;
  EXPECT_EQ(kind([&] { enumerate_gl(*r, 3, low_degree); }), ErrorKind::cap_exceeded);
}
