#include <gtest/gtest.h>

#include "relgl/ideal.hpp"
#include "relgl/ideal_identities.hpp"

using namespace relgl;

namespace {

// Every subset of R that is closed under +, negation and two-sided multiplication.
std::size_t brute_force_ideal_count(const FiniteRing& r) {
  const std::size_t n = r.size();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & (std::uint64_t{1} << r.zero()))) continue;
    auto in = [&](Elem x) { return (mask >> x) & 1; };
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!in(Elem(a))) continue;
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (in(Elem(b)) && !in(r.add(Elem(a), Elem(b)))) ok = false;
        if (!in(r.mul(Elem(a), Elem(b))) || !in(r.mul(Elem(b), Elem(a)))) ok = false;
      }
    }
    count += ok;
  }
  return count;
}

Ideal zi(const RingPtr& r, std::vector<Elem> g) { return ideal_generated(r, g); }

}  // namespace

TEST(Ideal, GeneratedIdealsInZmod) {
  auto z12 = make_zmod(12);
  EXPECT_EQ(zi(z12, {8}).elements(), (std::vector<Elem>{0, 4, 8}));
  EXPECT_EQ(zi(z12, {4, 6}).size(), 6u);  // (2)
  EXPECT_TRUE(zi(z12, {5}).is_unit());
  EXPECT_TRUE(zero_ideal(z12).is_zero());
  EXPECT_EQ(zero_ideal(z12).label(), "(0)");
}

TEST(Ideal, OperationsInZ12) {
  auto r = make_zmod(12);
  auto a = zi(r, {2}), b = zi(r, {3});
  EXPECT_EQ(ideal_sum(a, b).members(), unit_ideal(r).members());
  EXPECT_EQ(ideal_intersection(a, b).members(), zi(r, {6}).members());
  EXPECT_EQ(ideal_product(a, b).members(), zi(r, {6}).members());
  EXPECT_EQ(symmetrised_product(a, a).members(), zi(r, {4}).members());
  // (B:A) for B = (4), A = (2) is {x : 2x in (4)} = (2).
  EXPECT_EQ(ideal_quotient(zi(r, {4}), a).members(), a.members());
  EXPECT_EQ(ideal_quotient(zero_ideal(r), zi(r, {6})).members(), a.members());
  EXPECT_TRUE(ideal_quotient(a, zi(r, {4})).is_unit());
}

TEST(Ideal, QuotientsInTriangularRingAreTwoSided) {
  auto t = make_triangular(2);
  const Elem e12 = 2;
  auto j = zi(t, {e12});
  EXPECT_EQ(j.size(), 2u);
  auto q = ideal_quotient(zero_ideal(t), j);
  // x e12 = e12 x = 0 forces x to have zero diagonal.
  EXPECT_EQ(q.members(), j.members());
  for (const auto& i : enumerate_ideals(t)) EXPECT_TRUE(is_two_sided_ideal(*t, i.members()));
}

TEST(Ideal, EnumerationMatchesBruteForce) {
  for (const auto& r : {make_zmod(8), make_zmod(12), make_zmod(9), make_local_f2(), make_triangular(2),
                        make_product(make_zmod(2), make_zmod(2)), make_product(make_zmod(2), make_zmod(4))}) {
    auto list = enumerate_ideals(r);
    EXPECT_EQ(list.size(), brute_force_ideal_count(*r)) << r->descriptor().dump();
    EXPECT_TRUE(list.front().is_zero());
    EXPECT_TRUE(list.back().is_unit());
  }
}

TEST(Ideal, EnumerationKnownCounts) {
  EXPECT_EQ(enumerate_ideals(make_zmod(8)).size(), 4u);
  EXPECT_EQ(enumerate_ideals(make_zmod(12)).size(), 6u);
  // 0, (x), (y), (x+y), (x,y), R.
  EXPECT_EQ(enumerate_ideals(make_local_f2()).size(), 6u);
}

TEST(Ideal, EnumerationRefusesOverCap) {
  try {
    enumerate_ideals(make_local_f2(), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
}

TEST(Ideal, NonIdealRejected) {
  auto r = make_zmod(8);
  ElementSet s(8);
  s.insert(0);
  s.insert(3);
  EXPECT_THROW(ideal_from_members(r, s), Error);
}

TEST(IdealIdentities, HoldOnEveryRingFamily) {
  for (const auto& r : {make_zmod(8), make_zmod(12), make_local_f2(), make_triangular(2),
                        make_product(make_zmod(2), make_zmod(4))}) {
    auto rep = verify_ideal_identities(r);
    EXPECT_EQ(rep.verdict, Verdict::pass) << r->descriptor().dump() << " " << rep.to_json().dump();
    EXPECT_TRUE(rep.witnesses.empty());
  }
}

TEST(IdealIdentities, StrictSumQuotientInLocalRing) {
  // ((x)+(y) : (x+y)) = R while ((x):(x+y)) + ((y):(x+y)) = (x,y).
  auto r = make_local_f2();
  auto big = ideal_quotient(ideal_sum(zi(r, {2}), zi(r, {4})), zi(r, {6}));
  auto small = ideal_sum(ideal_quotient(zi(r, {2}), zi(r, {6})), ideal_quotient(zi(r, {4}), zi(r, {6})));
  EXPECT_TRUE(big.is_unit());
  EXPECT_EQ(small.size(), 4u);
  auto rep = verify_ideal_identities(r);
  EXPECT_GT(rep.findings.back()["strict_sum_quotient_count"].get<int>(), 0);
}

TEST(IdealIdentities, ChainRingHasNoStrictInequalities) {
  auto rep = verify_ideal_identities(make_zmod(8));
  const auto& last = rep.findings.back();
  EXPECT_EQ(last["ideal_count"].get<int>(), 4);
  EXPECT_EQ(last["strict_sum_quotient_count"].get<int>(), 0);
  EXPECT_EQ(last["strict_meet_quotient_count"].get<int>(), 0);
}

TEST(IdealIdentities, RefusesWhenIdealCapTooSmall) {
  EXPECT_EQ(verify_ideal_identities(make_zmod(12), 2).verdict, Verdict::refused_cap);
}

TEST(LevelIdentity, Examples) {
  auto z4 = make_zmod(4);
  EXPECT_EQ(verify_level_identity(zi(z4, {2}), zero_ideal(z4)).verdict, Verdict::pass);
  auto z12 = make_zmod(12);
  EXPECT_EQ(verify_level_identity(zi(z12, {2}), zi(z12, {4})).verdict, Verdict::pass);
  EXPECT_EQ(verify_level_identity_all(z12).verdict, Verdict::pass);
  EXPECT_EQ(verify_level_identity_all(make_local_f2()).verdict, Verdict::pass);
}

TEST(LevelIdentity, NoncommutativeRingIsHypothesisViolation) {
  EXPECT_EQ(verify_level_identity_all(make_triangular(2)).verdict, Verdict::hypothesis_violated);
}
