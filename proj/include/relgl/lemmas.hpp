#pragma once

// Verifiers for the structural lemmas on relative elementary and mixed commutator subgroups.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "relgl/ideal_identities.hpp"
#include "relgl/parallel.hpp"
#include "relgl/report.hpp"
#include "relgl/sampling.hpp"
#include "relgl/workspace.hpp"

namespace relgl {

/// Constructor for y_ij(a, b); replaceable so verifiers can be run against a deliberately broken one.
using YGen = std::function<Mat(const FiniteRing&, unsigned, unsigned, unsigned, Elem, Elem)>;

inline Mat standard_y(const FiniteRing& r, unsigned n, unsigned i, unsigned j, Elem a, Elem b) {
  return y_gen(r, n, i, j, a, b);
}

namespace detail {

inline VerificationReport lemma_report(const std::string& claim, const Workspace& ws, const Ideal& a,
                                       const Ideal* b = nullptr) {
  VerificationReport rep;
  rep.claim = claim;
  rep.ring = ws.ring()->descriptor();
  rep.n = ws.n();
  rep.ideals = json{{"A", ideal_to_json(a)}};
  if (b) rep.ideals["B"] = ideal_to_json(*b);
  return rep;
}

inline json subgroup_summary(const SubgroupSet& s) {
  return json{{"name", s.name()}, {"size", s.size()}, {"construction", s.construction()}};
}

// Runs body(); cap refusals and unmet hypotheses become verdicts instead of escaping.
template <class Body>
VerificationReport guarded(VerificationReport rep, Body&& body) {
  Stopwatch clock;
  try {
    body(rep);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::cap_exceeded)
      rep.verdict = Verdict::refused_cap;
    else if (e.kind() == ErrorKind::hypothesis_violated)
      rep.verdict = Verdict::hypothesis_violated;
    else
      throw;
    rep.witnesses = json::array();
    rep.message = e.what();
  }
  rep.wall_time_ms = clock.elapsed_ms();
  return rep;
}

inline std::vector<std::pair<unsigned, unsigned>> position_pairs(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (i != j) out.emplace_back(i, j);
  return out;
}

// x ≡ y modulo the normal subgroup m: x y⁻¹ ∈ m.
inline bool congruent_in(const Mat& x, const Mat& y, const SubgroupSet& m) {
  return m.contains(x * inverse_of(y));
}

}  // namespace detail

/// Lemma 2 generator set: z_ij(ab, c), z_ij(ba, c) for a ∈ A, b ∈ B, c ∈ R, and y_ij(a, b).
/// With `single_pair`, the y-generators are taken only at position (0, 1).
inline std::vector<LabeledMat> lemma2_generators(const Ideal& a, const Ideal& b, unsigned n, bool single_pair,
                                                 const YGen& y = standard_y) {
  const FiniteRing& r = *a.ring();
  detail::require_same_ring(a, b);
  ElementSet products(r.size());
  for (Elem x : a.elements())
    for (Elem w : b.elements()) {
      products.insert(r.mul(x, w));
      products.insert(r.mul(w, x));
    }
  std::vector<LabeledMat> gens;
  for (auto [i, j] : detail::position_pairs(n))
    for (Elem p : products.elements())
      if (p != r.zero())
        for (std::size_t c = 0; c < r.size(); ++c) gens.push_back({z_gen(r, n, i, j, p, Elem(c)), "z"});
  for (auto [i, j] : detail::position_pairs(n)) {
    if (single_pair && !(i == 0 && j == 1)) continue;
    for (Elem x : a.elements())
      for (Elem w : b.elements()) gens.push_back({y(r, n, i, j, x, w), "y"});
  }
  return gens;
}

/// [E(n,R,A), E(n,R,B)] as the closure of the Lemma 2 generator set.
inline SubgroupSet commutator_via_lemma2(const Ideal& a, const Ideal& b, unsigned n, const Caps& caps = {},
                                         bool single_pair = false) {
  std::string name = "[E(" + std::to_string(n) + ",R," + a.label() + "),E(" + std::to_string(n) + ",R," +
                     b.label() + ")]" + (single_pair ? "_12" : "");
  return closure(*a.ring(), n, lemma2_generators(a, b, n, single_pair), caps.subgroup, name);
}

/// z-generator closure vs normal closure of E(n, A) in E(n, R).
inline VerificationReport verify_lemma1(Workspace& ws, const Ideal& a) {
  return detail::guarded(detail::lemma_report("lemma1", ws, a), [&](VerificationReport& rep) {
    const SubgroupSet& z = ws.relative_elementary(a);
    SubgroupSet nc = relative_elementary_by_normal_closure(a, ws.n(), ws.caps());
    rep.checked_count = z.size() + nc.size();
    rep.add_finding(detail::subgroup_summary(z));
    rep.add_finding(detail::subgroup_summary(nc));
    for (const auto& m : z.members())
      if (!nc.contains(m)) {
        rep.add_witness(json{{"in", "z-closure"}, {"not_in", "normal closure"}, {"matrix", to_text(m)}});
        return;
      }
    for (const auto& m : nc.members())
      if (!z.contains(m)) {
        rep.add_witness(json{{"in", "normal closure"}, {"not_in", "z-closure"}, {"matrix", to_text(m)}});
        return;
      }
  });
}

/// Full y-generator set, single-pair variant, and the direct mixed commutator give one subgroup.
inline VerificationReport verify_lemma2(Workspace& ws, const Ideal& a, const Ideal& b) {
  return detail::guarded(detail::lemma_report("lemma2", ws, a, &b), [&](VerificationReport& rep) {
    SubgroupSet full = commutator_via_lemma2(a, b, ws.n(), ws.caps(), false);
    SubgroupSet single = commutator_via_lemma2(a, b, ws.n(), ws.caps(), true);
    SubgroupSet direct = mixed_commutator(ws.relative_elementary(a), ws.relative_elementary(b), ws.caps());
    const SubgroupSet* sets[] = {&full, &single, &direct};
    const char* names[] = {"full generators", "single-pair generators", "direct mixed commutator"};
    for (auto* s : sets) {
      rep.checked_count += s->size();
      rep.add_finding(detail::subgroup_summary(*s));
    }
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) {
        if (p == q) continue;
        for (const auto& m : sets[p]->members())
          if (!sets[q]->contains(m)) {
            rep.add_witness(json{{"in", names[p]}, {"not_in", names[q]}, {"matrix", to_text(m)}});
            return;
          }
      }
  });
}

/// E(n,R,A∘B) ⊆ [E(n,A),E(n,B)] ⊆ [E(n,R,A),E(n,R,B)] ⊆ GL(n,R,A∘B), recording which steps are strict.
inline VerificationReport verify_lemma3(Workspace& ws, const Ideal& a, const Ideal& b) {
  return detail::guarded(detail::lemma_report("lemma3", ws, a, &b), [&](VerificationReport& rep) {
    Ideal ab = symmetrised_product(a, b);
    rep.ideals["A∘B"] = ideal_to_json(ab);
    const SubgroupSet& inner = ws.relative_elementary(ab);
    SubgroupSet mid = mixed_commutator(ws.elementary(a), ws.elementary(b), ws.caps());
    SubgroupSet outer = mixed_commutator(ws.relative_elementary(a), ws.relative_elementary(b), ws.caps());
    const CongruenceSpec level = make_congruence(Family::principal, ws.n(), ab);
    std::vector<const SubgroupSet*> chain = {&inner, &mid, &outer};
    for (auto* s : chain) rep.add_finding(detail::subgroup_summary(*s));

    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      const auto& lo = *chain[k];
      const auto& hi = *chain[k + 1];
      rep.checked_count += lo.size();
      for (const auto& m : lo.members())
        if (!hi.contains(m)) {
          rep.add_witness(json{{"inclusion", lo.name() + " <= " + hi.name()}, {"matrix", to_text(m)}});
          return;
        }
      rep.add_finding(json{{"relation", lo.name() + (lo.size() == hi.size() ? " = " : " < ") + hi.name()}});
    }
    rep.checked_count += outer.size();
    for (const auto& m : outer.members())
      if (!satisfies_congruence(m, level)) {
        rep.add_witness(json{{"inclusion", outer.name() + " <= " + level.label()}, {"matrix", to_text(m)}});
        return;
      }
    // Size of the outer bound, when it can be materialised.
    try {
      const SubgroupSet& top = ws.principal(ab);
      rep.add_finding(detail::subgroup_summary(top));
      rep.add_finding(
          json{{"relation", outer.name() + (outer.size() == top.size() ? " = " : " < ") + level.label()}});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::cap_exceeded) throw;
      rep.add_finding(json{{"relation", outer.name() + " <= " + level.label()}, {"note", e.what()}});
    }
  });
}

/// ˣy_ij(a,b) ≡ y_ij(a,b) mod E(n,R,A∘B) for x over the transvection generators of E(n,R)
/// and `x_samples` seeded random words in them.
inline VerificationReport verify_lemma4(Workspace& ws, const Ideal& a, const Ideal& b, unsigned x_samples = 100,
                                        std::uint64_t seed = 0, unsigned word_length = 32,
                                        const YGen& y = standard_y) {
  auto base = detail::lemma_report("lemma4", ws, a, &b);
  base.seed = seed;
  return detail::guarded(std::move(base), [&](VerificationReport& rep) {
    const FiniteRing& r = *ws.ring();
    const unsigned n = ws.n();
    Ideal ab = symmetrised_product(a, b);
    const SubgroupSet& mod = ws.relative_elementary(ab);
    std::vector<Mat> xs;
    for (const auto& t : all_transvections(r, n, ElementSet::full(r.size()))) xs.push_back(t.m);
    const std::size_t n_gens = xs.size();
    for (unsigned k = 0; k < x_samples; ++k) {
      std::mt19937_64 rng(derive_seed(seed, k));
      xs.push_back(random_word(std::vector<Mat>(xs.begin(), xs.begin() + n_gens), word_length, rng));
    }
    struct Tuple {
      unsigned i, j;
      Elem a, b;
      Mat y, y_inv;
    };
    std::vector<Tuple> ys;
    for (auto [i, j] : detail::position_pairs(n))
      for (Elem x : a.elements())
        for (Elem w : b.elements()) {
          Mat m = y(r, n, i, j, x, w);
          ys.push_back({i, j, x, w, m, inverse_of(m)});
        }
    std::vector<Mat> x_inv;
    for (const auto& x : xs) x_inv.push_back(inverse_of(x));

    const unsigned workers = ws.workers();
    std::vector<std::optional<json>> first(std::max(1U, workers));
    parallel_ranges(xs.size(), workers, [&](std::size_t begin, std::size_t end, unsigned chunk) {
      for (std::size_t k = begin; k < end; ++k)
        for (const auto& t : ys) {
          Mat conj = xs[k] * t.y * x_inv[k];
          if (!mod.contains(conj * t.y_inv)) {
            first[chunk] = json{{"congruence", "x y x^-1 = y"}, {"i", t.i + 1}, {"j", t.j + 1}, {"a", t.a},
                                {"b", t.b},  {"x", to_text(xs[k])},        {"lhs", to_text(conj)},
                                {"rhs", to_text(t.y)}};
            return;
          }
        }
    });
    rep.checked_count = xs.size() * ys.size();
    rep.add_finding(json{{"x_generators", n_gens}, {"x_words", x_samples}, {"word_length", word_length},
                         {"modulus", detail::subgroup_summary(mod)}});
    for (auto& w : first)
      if (w) {
        rep.add_witness(*w);
        return;
      }
  });
}

/// The four y-congruences modulo E(n,R,A∘B). The additivity congruence is checked as
/// y(a1+a2,b) ≡ y(a1,b) y(a2,b); the literal y(a1,b) y(a1,b) reading is reported separately.
inline VerificationReport verify_lemma5(Workspace& ws, const Ideal& a, const Ideal& b, const YGen& y = standard_y) {
  return detail::guarded(detail::lemma_report("lemma5", ws, a, &b), [&](VerificationReport& rep) {
    const FiniteRing& r = *ws.ring();
    const unsigned n = ws.n();
    const SubgroupSet& mod = ws.relative_elementary(symmetrised_product(a, b));
    const Mat e = identity(r, n);
    std::uint64_t literal_divergent = 0;
    std::optional<json> literal_example;
    auto check = [&](const char* name, const Mat& lhs, const Mat& rhs, json params) {
      ++rep.checked_count;
      if (detail::congruent_in(lhs, rhs, mod)) return true;
      params["congruence"] = name;
      params["lhs"] = to_text(lhs);
      params["rhs"] = to_text(rhs);
      rep.add_witness(std::move(params));
      return false;
    };
    auto as = a.elements(), bs = b.elements();
    for (auto [i, j] : detail::position_pairs(n)) {
      auto Y = [&](Elem x, Elem w) { return y(r, n, i, j, x, w); };
      json pos{{"i", i + 1}, {"j", j + 1}};
      for (Elem a1 : as)
        for (Elem a2 : as)
          for (Elem w : bs) {
            json p = pos;
            p["a1"] = a1, p["a2"] = a2, p["b"] = w;
            if (!check("y(a1+a2,b) = y(a1,b) y(a2,b)", Y(r.add(a1, a2), w), Y(a1, w) * Y(a2, w), p)) return;
            if (!detail::congruent_in(Y(r.add(a1, a2), w), Y(a1, w) * Y(a1, w), mod)) {
              ++literal_divergent;
              if (!literal_example) literal_example = p;
            }
          }
      for (Elem x : as)
        for (Elem b1 : bs)
          for (Elem b2 : bs) {
            json p = pos;
            p["a"] = x, p["b1"] = b1, p["b2"] = b2;
            if (!check("y(a,b1+b2) = y(a,b1) y(a,b2)", Y(x, r.add(b1, b2)), Y(x, b1) * Y(x, b2), p)) return;
            if (!check("y(ab1,b2) = e", Y(r.mul(x, b1), b2), e, p)) return;
          }
      for (Elem x : as)
        for (Elem w : bs) {
          json p = pos;
          p["a"] = x, p["b"] = w;
          Mat yinv = inverse_of(Y(x, w));
          if (!check("y(a,b)^-1 = y(-a,b)", yinv, Y(r.neg(x), w), p)) return;
          if (!check("y(a,b)^-1 = y(a,-b)", yinv, Y(x, r.neg(w)), p)) return;
        }
      for (Elem a1 : as)
        for (Elem a2 : as)
          for (Elem w : bs) {
            json p = pos;
            p["a1"] = a1, p["a2"] = a2, p["b"] = w;
            if (!check("y(a1,a2b) = e", Y(a1, r.mul(a2, w)), e, p)) return;
          }
    }
    json lit{{"literal_reading", "y(a1+a2,b) = y(a1,b) y(a1,b)"}, {"divergent_tuples", literal_divergent}};
    if (literal_example) lit["example"] = *literal_example;
    rep.add_finding(std::move(lit));
  });
}

/// y_ij(ac, b) ≡ y_kl(a, cb) mod E(n,R,A∘B) over all position pairs and all a ∈ A, b ∈ B, c ∈ R.
inline VerificationReport verify_lemma6(Workspace& ws, const Ideal& a, const Ideal& b, const YGen& y = standard_y) {
  return detail::guarded(detail::lemma_report("lemma6", ws, a, &b), [&](VerificationReport& rep) {
    const FiniteRing& r = *ws.ring();
    const unsigned n = ws.n();
    const SubgroupSet& mod = ws.relative_elementary(symmetrised_product(a, b));
    auto pairs = detail::position_pairs(n);
    for (auto [i, j] : pairs)
      for (auto [k, l] : pairs)
        for (Elem x : a.elements())
          for (Elem w : b.elements())
            for (std::size_t cc = 0; cc < r.size(); ++cc) {
              const Elem c = static_cast<Elem>(cc);
              Mat lhs = y(r, n, i, j, r.mul(x, c), w);
              Mat rhs = y(r, n, k, l, x, r.mul(c, w));
              ++rep.checked_count;
              if (!detail::congruent_in(lhs, rhs, mod)) {
                rep.add_witness(json{{"congruence", "y_ij(ac,b) = y_kl(a,cb)"},
                                     {"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"l", l + 1},
                                     {"a", x}, {"b", w}, {"c", c},
                                     {"lhs", to_text(lhs)}, {"rhs", to_text(rhs)}});
                return;
              }
            }
  });
}

/// [E(n,A), E(n,B)] = E(n,R,A∘B) for comaximal A, B.
inline VerificationReport verify_lemma7(Workspace& ws, const Ideal& a, const Ideal& b) {
  return detail::guarded(detail::lemma_report("lemma7", ws, a, &b), [&](VerificationReport& rep) {
    if (!ideal_sum(a, b).is_unit()) {
      rep.verdict = Verdict::hypothesis_violated;
      rep.message = "A + B = " + ideal_sum(a, b).label() + " is not the whole ring";
      return;
    }
    rep.add_finding(json{{"comaximal", true}});
    SubgroupSet lhs = mixed_commutator(ws.elementary(a), ws.elementary(b), ws.caps());
    const SubgroupSet& rhs = ws.relative_elementary(symmetrised_product(a, b));
    rep.add_finding(detail::subgroup_summary(lhs));
    rep.add_finding(detail::subgroup_summary(rhs));
    rep.checked_count = lhs.size() + rhs.size();
    if (!(lhs == rhs)) {
      const SubgroupSet& big = lhs.size() >= rhs.size() ? lhs : rhs;
      const SubgroupSet& small = lhs.size() >= rhs.size() ? rhs : lhs;
      for (const auto& m : big.members())
        if (!small.contains(m)) {
          rep.add_witness(json{{"in", big.name()}, {"not_in", small.name()}, {"matrix", to_text(m)}});
          return;
        }
      rep.add_witness(json{{"in", small.name()}, {"not_in", big.name()}});
    }
  });
}

/// [E(n,R,A), C(n,R,B)] = [E(n,R,A), E(n,R,B)] over a commutative ring.
inline VerificationReport verify_lemma8(Workspace& ws, const Ideal& a, const Ideal& b) {
  return detail::guarded(detail::lemma_report("lemma8", ws, a, &b), [&](VerificationReport& rep) {
    if (!ws.ring()->is_commutative()) {
      rep.verdict = Verdict::hypothesis_violated;
      rep.message = "lemma8 requires a commutative ring";
      return;
    }
    SubgroupSet cb = congruence_subgroup(ws.gl(), make_congruence(Family::full, ws.n(), b));
    const SubgroupSet& ea = ws.relative_elementary(a);
    SubgroupSet lhs = mixed_commutator(ea, cb, ws.caps());
    SubgroupSet rhs = mixed_commutator(ea, ws.relative_elementary(b), ws.caps());
    rep.add_finding(detail::subgroup_summary(cb));
    rep.add_finding(detail::subgroup_summary(lhs));
    rep.add_finding(detail::subgroup_summary(rhs));
    rep.checked_count = lhs.size() + rhs.size();
    for (const auto& m : lhs.members())
      if (!rhs.contains(m)) {
        rep.add_witness(json{{"in", lhs.name()}, {"not_in", rhs.name()}, {"matrix", to_text(m)}});
        return;
      }
    for (const auto& m : rhs.members())
      if (!lhs.contains(m)) {
        rep.add_witness(json{{"in", rhs.name()}, {"not_in", lhs.name()}, {"matrix", to_text(m)}});
        return;
      }
  });
}

}  // namespace relgl
