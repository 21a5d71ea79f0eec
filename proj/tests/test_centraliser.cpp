#include <gtest/gtest.h>

#include "relgl/centraliser.hpp"

using namespace relgl;

namespace {

Ideal gen(const RingPtr& r, std::vector<Elem> g) { return ideal_generated(r, g); }

std::size_t finding_size(const VerificationReport& rep) {
  for (const auto& f : rep.findings)
    if (f.contains("centraliser_size")) return f["centraliser_size"].get<std::size_t>();
  return 0;
}

}  // namespace

TEST(Theorem1Predicate, HandExamplesOverZ4) {
  auto r = make_zmod(4);
  auto a = gen(r, {2});
  auto zero = zero_ideal(r);
  // t_12(1) fails to commute with t_21(2): the (1,1) entry of the difference is 2.
  EXPECT_FALSE(theorem1_predicate(transvection(*r, 3, 0, 1, 1), a, zero));
  EXPECT_TRUE(theorem1_predicate(transvection(*r, 3, 0, 1, 2), a, zero));
  EXPECT_TRUE(theorem1_predicate(scalar(*r, 3, 3), a, zero));
  EXPECT_TRUE(theorem1_predicate(transvection(*r, 3, 0, 1, 1), a, a));
}

TEST(Theorem1Predicate, MatchesMemberwiseCommutationOverAllOfGL) {
  auto r = make_zmod(4);
  Workspace ws(r, 3);
  for (auto bg : {Elem(0), Elem(2)}) {
    auto a = gen(r, {2}), b = gen(r, {bg});
    const auto& h = ws.elementary(a).members();
    const Theorem1Predicate pred(a, b);
    std::vector<Mat> inside;
    for (const auto& g : ws.gl().members()) {
      bool all = true;
      for (std::size_t k = 0; k < h.size() && all; ++k) all = commutes_mod(g, h[k], b);
      ASSERT_EQ(pred(g), all) << to_text(g);
      if (all) inside.push_back(g);
    }
    auto s = from_members(*r, 3, inside);
    EXPECT_TRUE(is_subgroup(s));
  }
}

TEST(Theorem1Predicate, AdditiveGeneratorsSpanA) {
  auto r = make_zmod(12);
  auto a = gen(r, {2});
  ElementSet s(r->size());
  for (Elem x : a.additive_generators()) s.insert(x);
  EXPECT_EQ(additive_closure(*r, s).count(), a.size());
}

TEST(Theorem1, ExhaustiveZ4KnownSizes) {
  auto r = make_zmod(4);
  Workspace ws(r, 3);
  auto two = gen(r, {2});
  auto rep = verify_theorem1(ws, two, zero_ideal(r));
  EXPECT_EQ(rep.verdict, Verdict::pass) << rep.to_json().dump();
  EXPECT_EQ(finding_size(rep), 512u);
  EXPECT_EQ(finding_size(verify_theorem1(ws, unit_ideal(r), zero_ideal(r))), 2u);
}

TEST(Theorem1, TrivialLevelsGiveAllOfGL) {
  auto r = make_zmod(4);
  Workspace ws(r, 3);
  auto two = gen(r, {2});
  // B = R or A = 0 make (B:A) = R, and every g centralises modulo R.
  EXPECT_EQ(finding_size(verify_theorem1(ws, two, unit_ideal(r), {}, "E(n,A)")), 86016u);
  EXPECT_EQ(finding_size(verify_theorem1(ws, zero_ideal(r), two, {}, "E(n,A)")), 86016u);
}

TEST(Theorem1, GenericCentraliserAgreesWithMembership) {
  auto r = make_zmod(4);
  Workspace ws(r, 3);
  auto a = gen(r, {2});
  const SubgroupSet& gl = ws.gl();
  const SubgroupSet& h = ws.principal(a);
  auto fast = centraliser_mod(gl.members(), generating_set(ws.elementary(a)), a);
  auto slow = relative_centraliser(gl.members(), generating_set(ws.elementary(a)),
                                   [&](const Mat& m) { return h.contains(m); });
  EXPECT_EQ(fast, slow);
}

TEST(Theorem1, SampledTriangularAndDeterministic) {
  auto t = make_triangular(2);
  Workspace w1(t, 3, {}, 1), w3(t, 3, {}, 3);
  auto a = gen(t, {2});
  SampleSpec s{3000, 17, 24};
  auto x = verify_theorem1(w1, a, zero_ideal(t), s);
  auto y = verify_theorem1(w3, a, zero_ideal(t), s);
  EXPECT_EQ(x.verdict, Verdict::pass) << x.to_json().dump();
  EXPECT_EQ(x.to_json(false).dump(), y.to_json(false).dump());
  EXPECT_GT(x.findings.back()["c_omega_samples"].get<int>(), 0);
}

TEST(Theorem1, ExhaustiveOverLargeGroupRefuses) {
  auto t = make_triangular(2);
  Workspace ws(t, 3);
  auto rep = verify_theorem1(ws, gen(t, {2}), zero_ideal(t));
  EXPECT_EQ(rep.verdict, Verdict::refused_cap);
  EXPECT_EQ(exit_code(rep.verdict), 4);
}

TEST(Theorem1, UnknownHChoiceIsConfigError) {
  auto r = make_zmod(4);
  Workspace ws(r, 3);
  try {
    verify_theorem1(ws, gen(r, {2}), zero_ideal(r), {}, "E(n,Q)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::config_error);
  }
}

TEST(Theorem2, ExhaustiveZ4) {
  auto r = make_zmod(4);
  Workspace ws(r, 3);
  auto rep = verify_theorem2(ws, gen(r, {2}), zero_ideal(r));
  EXPECT_EQ(rep.verdict, Verdict::pass) << rep.to_json().dump();
}

TEST(Theorem2, SampledZ4) {
  auto r = make_zmod(4);
  Workspace ws(r, 3);
  auto rep = verify_theorem2(ws, gen(r, {2}), zero_ideal(r), SampleSpec{400, 3, 16});
  EXPECT_EQ(rep.verdict, Verdict::pass) << rep.to_json().dump();
  EXPECT_EQ(rep.checked_count, 400u);
}

TEST(Theorem2, NoncommutativeRingIsHypothesisViolation) {
  auto t = make_triangular(2);
  Workspace ws(t, 3);
  auto rep = verify_theorem2(ws, gen(t, {2}), zero_ideal(t));
  EXPECT_EQ(rep.verdict, Verdict::hypothesis_violated);
  EXPECT_EQ(exit_code(rep.verdict), 3);
}

TEST(Lemma9, Z4BothSidesTrivial) {
  auto r = make_zmod(4);
  Workspace ws(r, 3);
  auto rep = explore_lemma9(ws, gen(r, {2}), gen(r, {2}));
  EXPECT_EQ(rep.verdict, Verdict::informational);
  const auto& f = rep.findings.at(0);
  EXPECT_TRUE(f["equal"].get<bool>());
  EXPECT_EQ(f["lhs"]["size"], 1);
  EXPECT_EQ(f["rhs"]["size"], 1);
}

TEST(Lemma9, CoprimeLevelsOverZ6) {
  auto r = make_zmod(6);
  Workspace ws(r, 3);
  auto rep = explore_lemma9(ws, gen(r, {2}), gen(r, {3}));
  const auto& f = rep.findings.at(0);
  // The two principal subgroups live in different CRT factors, and AB = 0.
  EXPECT_TRUE(f["equal"].get<bool>());
  EXPECT_EQ(f["lhs"]["size"], 1);
}

TEST(Lemma9, FindingsAreConsistent) {
  auto r = make_zmod(8);
  Workspace ws(r, 3);
  auto rep = explore_lemma9(ws, gen(r, {2}), gen(r, {4}));
  EXPECT_EQ(rep.verdict, Verdict::informational);
  const auto& f = rep.findings.at(0);
  const bool equal = f["equal"].get<bool>();
  EXPECT_EQ(equal, !f.contains("lhs_only") && !f.contains("rhs_only"));
}
