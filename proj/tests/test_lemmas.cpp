#include <gtest/gtest.h>

#include "relgl/lemmas.hpp"

using namespace relgl;

namespace {

Ideal gen(const RingPtr& r, std::vector<Elem> g) { return ideal_generated(r, g); }

// y with the sign of the second t_ij dropped.
Mat y_sign_bug(const FiniteRing& r, unsigned n, unsigned i, unsigned j, Elem a, Elem b) {
  return transvection(r, n, i, j, a) * transvection(r, n, j, i, b) * transvection(r, n, i, j, a) *
         transvection(r, n, j, i, r.neg(b));
}

}  // namespace

TEST(Lemma1, ZClosureEqualsNormalClosure) {
  for (auto [r, g] : std::vector<std::pair<RingPtr, Elem>>{{make_zmod(4), 2}, {make_zmod(6), 3}, {make_local_f2(), 2}}) {
    Workspace ws(r, 3);
    auto rep = verify_lemma1(ws, gen(r, {g}));
    EXPECT_EQ(rep.verdict, Verdict::pass) << rep.to_json().dump();
    EXPECT_EQ(rep.findings[0]["size"], rep.findings[1]["size"]);
  }
}

TEST(Lemma2, ThreeConstructionsAgree) {
  auto r = make_zmod(4);
  Workspace ws(r, 3);
  auto rep = verify_lemma2(ws, gen(r, {2}), gen(r, {2}));
  EXPECT_EQ(rep.verdict, Verdict::pass);
  ASSERT_EQ(rep.findings.size(), 3u);
  // Over Z/4 every generator is trivial: (2)(2) = 0 and y_ij(2,2) = e.
  for (const auto& f : rep.findings) EXPECT_EQ(f["size"], 1);

  auto z6 = make_zmod(6);
  Workspace w6(z6, 3);
  auto rep6 = verify_lemma2(w6, gen(z6, {2}), gen(z6, {3}));
  EXPECT_EQ(rep6.verdict, Verdict::pass);
  EXPECT_EQ(rep6.findings[0]["size"], 1);
}

TEST(Lemma2, SinglePairNameAndGeneratorCount) {
  auto r = make_zmod(8);
  auto a = gen(r, {2});
  auto full = lemma2_generators(a, a, 3, false);
  auto single = lemma2_generators(a, a, 3, true);
  // |A|·|B| y-generators per position pair; six pairs in degree three.
  EXPECT_EQ(full.size() - single.size(), 5u * 16u);
  EXPECT_NE(commutator_via_lemma2(a, a, 3, {}, true).name().find("_12"), std::string::npos);
}

TEST(Lemma3, ChainHoldsOverZ8) {
  auto r = make_zmod(8);
  Workspace ws(r, 3);
  auto rep = verify_lemma3(ws, gen(r, {2}), gen(r, {2}));
  EXPECT_EQ(rep.verdict, Verdict::pass) << rep.to_json().dump();
  int relations = 0;
  for (const auto& f : rep.findings) relations += f.contains("relation");
  EXPECT_EQ(relations, 3);
}

TEST(Lemma4, ConjugationCongruenceHolds) {
  auto r = make_zmod(8);
  Workspace w1(r, 3, {}, 1), w2(r, 3, {}, 2);
  auto a = gen(r, {2});
  auto x = verify_lemma4(w1, a, a, 20, 5);
  auto y = verify_lemma4(w2, a, a, 20, 5);
  EXPECT_EQ(x.verdict, Verdict::pass);
  EXPECT_EQ(x.to_json(false).dump(), y.to_json(false).dump());
}

TEST(Lemma5And6, HoldOnStandardGenerators) {
  for (auto [m, g] : std::vector<std::pair<long, Elem>>{{8, 2}, {9, 3}, {12, 2}}) {
    auto r = make_zmod(m);
    Workspace ws(r, 3);
    auto a = gen(r, {g});
    EXPECT_EQ(verify_lemma5(ws, a, a).verdict, Verdict::pass) << "Z/" << m;
    EXPECT_EQ(verify_lemma6(ws, a, a).verdict, Verdict::pass) << "Z/" << m;
  }
  auto t = make_triangular(2);
  Workspace wt(t, 3);
  auto j = gen(t, {2});
  EXPECT_EQ(verify_lemma5(wt, j, unit_ideal(t)).verdict, Verdict::pass);
  EXPECT_EQ(verify_lemma6(wt, j, unit_ideal(t)).verdict, Verdict::pass);
}

TEST(Lemma5, LiteralReadingIsReportedNotFailed) {
  auto r = make_zmod(8);
  Workspace ws(r, 3);
  auto a = gen(r, {2});
  auto rep = verify_lemma5(ws, a, unit_ideal(r));
  EXPECT_EQ(rep.verdict, Verdict::pass);
  ASSERT_FALSE(rep.findings.empty());
  EXPECT_TRUE(rep.findings.back().contains("literal_reading"));
}

// A∘B = 0 over Z/9 with A = B = (3), so every congruence is an equality and the mutation shows.
TEST(Mutation, SignBugDetectedOverZ9) {
  auto r = make_zmod(9);
  Workspace ws(r, 3);
  auto a = gen(r, {3});
  auto l5 = verify_lemma5(ws, a, a, y_sign_bug);
  auto l6 = verify_lemma6(ws, a, a, y_sign_bug);
  auto l4 = verify_lemma4(ws, a, a, 0, 0, 32, y_sign_bug);
  EXPECT_EQ(l5.verdict, Verdict::fail);
  EXPECT_EQ(l6.verdict, Verdict::fail);
  EXPECT_EQ(l4.verdict, Verdict::fail);

  // Recheck the lemma6 witness from its own fields.
  const auto& w = l6.witnesses.at(0);
  auto p = [&](const char* k) { return w[k].get<unsigned>() - 1; };
  const Elem x = w["a"].get<Elem>(), b = w["b"].get<Elem>(), c = w["c"].get<Elem>();
  Mat lhs = y_sign_bug(*r, 3, p("i"), p("j"), r->mul(x, c), b);
  Mat rhs = y_sign_bug(*r, 3, p("k"), p("l"), x, r->mul(c, b));
  EXPECT_EQ(to_text(lhs), w["lhs"].get<std::string>());
  EXPECT_EQ(to_text(rhs), w["rhs"].get<std::string>());
  EXPECT_NE(lhs, rhs);

  // Lemma5 witness: lhs and rhs differ outright.
  const auto& w5 = l5.witnesses.at(0);
  EXPECT_NE(from_text(*r, w5["lhs"].get<std::string>()), from_text(*r, w5["rhs"].get<std::string>()));
}

// Over Z/8 with A = B = (2), every product of transvections with entries in (2) whose
// off-diagonal entries fall in (4) lies in E(3,R,(4)), so this mutation cannot be seen there.
TEST(Mutation, SignBugInvisibleModuloLevelFourOverZ8) {
  auto r = make_zmod(8);
  Workspace ws(r, 3);
  auto a = gen(r, {2});
  const SubgroupSet& mod = ws.relative_elementary(gen(r, {4}));
  for (Elem x : a.elements())
    for (Elem b : a.elements()) {
      EXPECT_TRUE(mod.contains(y_sign_bug(*r, 3, 0, 1, x, b)));
      EXPECT_TRUE(mod.contains(y_gen(*r, 3, 0, 1, x, b)));
    }
  EXPECT_EQ(verify_lemma5(ws, a, a, y_sign_bug).verdict, Verdict::pass);
}

TEST(Lemma7, ComaximalPairsAgree) {
  auto r = make_zmod(6);
  Workspace ws(r, 3);
  auto rep = verify_lemma7(ws, gen(r, {2}), gen(r, {3}));
  EXPECT_EQ(rep.verdict, Verdict::pass) << rep.to_json().dump();
}

TEST(Lemma7, NonComaximalIsHypothesisViolation) {
  auto r = make_zmod(4);
  Workspace ws(r, 3);
  auto rep = verify_lemma7(ws, gen(r, {2}), gen(r, {2}));
  EXPECT_EQ(rep.verdict, Verdict::hypothesis_violated);
  EXPECT_EQ(exit_code(rep.verdict), 3);
  EXPECT_TRUE(rep.witnesses.empty());
}

TEST(Lemma8, HoldsOverZ4) {
  auto r = make_zmod(4);
  Workspace ws(r, 3);
  EXPECT_EQ(verify_lemma8(ws, gen(r, {2}), gen(r, {2})).verdict, Verdict::pass);
}

TEST(Lemma8, NoncommutativeRingIsHypothesisViolation) {
  auto t = make_triangular(2);
  Workspace ws(t, 3);
  EXPECT_EQ(verify_lemma8(ws, gen(t, {2}), gen(t, {2})).verdict, Verdict::hypothesis_violated);
}

TEST(Lemmas, CapRefusalBecomesVerdict) {
  auto r = make_zmod(4);
  Workspace ws(r, 3, Caps::uniform(10));
  auto rep = verify_lemma1(ws, unit_ideal(r));
  EXPECT_EQ(rep.verdict, Verdict::refused_cap);
  EXPECT_EQ(exit_code(rep.verdict), 4);
  EXPECT_FALSE(rep.message.empty());
}

TEST(Workspace, RejectsBadDegree) {
  EXPECT_THROW(Workspace(make_zmod(4), 1), Error);
  Caps c;
  c.degree = 2;
  EXPECT_THROW(Workspace(make_zmod(4), 3, c), Error);
}
