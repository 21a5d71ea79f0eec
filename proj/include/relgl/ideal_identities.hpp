#pragma once

// Exhaustive checks of the ideal-quotient identities and inequalities over all ideals of a ring.

#include <cstddef>
#include <string>
#include <vector>

#include "relgl/ideal.hpp"
#include "relgl/report.hpp"

namespace relgl {

inline json ideal_to_json(const Ideal& i) {
  json gens = json::array();
  for (Elem g : i.generators()) gens.push_back(g);
  return json{{"label", i.label()}, {"gens", gens}, {"size", i.size()}};
}

inline json members_json(const ElementSet& s) {
  json a = json::array();
  for (Elem x : s.elements()) a.push_back(x);
  return a;
}

namespace detail {

// Operation tables over a fixed ideal list, indexed by position in the list.
class IdealTables {
 public:
  explicit IdealTables(std::vector<Ideal> ideals) : ideals_(std::move(ideals)) {
    const std::size_t k = ideals_.size();
    sum_.resize(k * k);
    meet_.resize(k * k);
    circ_.resize(k * k);
    prod_.resize(k * k);
    quot_.resize(k * k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        sum_[a * k + b] = find(ideal_sum(ideals_[a], ideals_[b]));
        meet_[a * k + b] = find(ideal_intersection(ideals_[a], ideals_[b]));
        circ_[a * k + b] = find(symmetrised_product(ideals_[a], ideals_[b]));
        prod_[a * k + b] = find(ideal_product(ideals_[a], ideals_[b]));
        quot_[a * k + b] = find(ideal_quotient(ideals_[a], ideals_[b]));
      }
  }

  std::size_t count() const { return ideals_.size(); }
  const Ideal& at(std::size_t i) const { return ideals_[i]; }
  std::size_t sum(std::size_t a, std::size_t b) const { return sum_[a * count() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * count() + b]; }
  std::size_t circ(std::size_t a, std::size_t b) const { return circ_[a * count() + b]; }
  std::size_t prod(std::size_t a, std::size_t b) const { return prod_[a * count() + b]; }
  /// Index of (a : b).
  std::size_t quot(std::size_t a, std::size_t b) const { return quot_[a * count() + b]; }
  bool le(std::size_t a, std::size_t b) const { return ideals_[a].subset_of(ideals_[b]); }
  std::size_t unit() const { return count() - 1; }

 private:
  std::size_t find(const Ideal& i) const {
    for (std::size_t j = 0; j < ideals_.size(); ++j)
      if (ideals_[j].members() == i.members()) return j;
    fail(ErrorKind::invalid_ideal, "ideal operation left the enumerated lattice");
  }

  std::vector<Ideal> ideals_;
  std::vector<std::size_t> sum_, meet_, circ_, prod_, quot_;
};

}  // namespace detail

/// Checks every ideal-quotient identity over all ideal pairs and triples of `r`.
///
/// Equalities and inclusions must hold exactly. The two sum/intersection inequalities
/// must hold; every pair or triple where they are strict is recorded as a finding.
inline VerificationReport verify_ideal_identities(const RingPtr& r, std::size_t ideal_cap = 64,
                                                  std::size_t max_strict_recorded = 16) {
  Stopwatch clock;
  VerificationReport rep;
  rep.claim = "ideal-identities";
  rep.ring = r->descriptor();
  std::vector<Ideal> list;
  try {
    list = enumerate_ideals(r, ideal_cap);
  } catch (const Error& e) {
    rep.verdict = Verdict::refused_cap;
    rep.message = e.what();
    return rep;
  }
  detail::IdealTables t(std::move(list));
  const std::size_t k = t.count();
  const bool comm = r->is_commutative();
  json catalogue = json::array();
  for (std::size_t i = 0; i < k; ++i) catalogue.push_back(ideal_to_json(t.at(i)));
  rep.ideals = json{{"all", catalogue}};

  auto lbl = [&](std::size_t i) { return t.at(i).label(); };
  auto witness = [&](const char* id, std::size_t a, std::size_t b, std::size_t c, std::size_t lhs,
                     std::size_t rhs) {
    rep.add_witness(json{{"identity", id},
                         {"A", lbl(a)},
                         {"B", lbl(b)},
                         {"C", lbl(c)},
                         {"lhs", members_json(t.at(lhs).members())},
                         {"rhs", members_json(t.at(rhs).members())}});
  };
  std::size_t strict_sum = 0, strict_meet = 0;
  auto strict = [&](const char* id, std::size_t a, std::size_t b, std::size_t c, std::size_t big,
                    std::size_t small, std::size_t& counter) {
    if (counter++ >= max_strict_recorded) return;
    rep.add_finding(json{{"strict", id},
                         {"A", lbl(a)},
                         {"B", lbl(b)},
                         {"C", lbl(c)},
                         {"larger", members_json(t.at(big).members())},
                         {"smaller", members_json(t.at(small).members())}});
  };

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      ++rep.checked_count;
      const std::size_t ba = t.quot(b, a);
      if (!t.le(b, ba)) witness("(B:A) >= B", a, b, b, ba, b);
      if (t.le(a, b) && ba != t.unit()) witness("A <= B implies (B:A) = R", a, b, b, ba, t.unit());
      if (!t.le(t.circ(ba, a), b)) witness("(B:A)∘A <= B", a, b, b, t.circ(ba, a), b);
      if (t.quot(a, t.sum(a, b)) != t.quot(a, b)) witness("(A:(A+B)) = (A:B)", a, b, b, t.quot(a, t.sum(a, b)), t.quot(a, b));
    }
  for (std::size_t a = 0; a < k; ++a) {
    if (t.quot(a, a) != t.unit()) witness("(A:A) = R", a, a, a, t.quot(a, a), t.unit());
    if (t.quot(a, t.unit()) != a) witness("(A:R) = A", a, a, a, t.quot(a, t.unit()), a);
  }

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) {
        ++rep.checked_count;
        // (A:(B+C)) = (A:B) ∩ (A:C)
        {
          std::size_t lhs = t.quot(a, t.sum(b, c)), rhs = t.meet(t.quot(a, b), t.quot(a, c));
          if (lhs != rhs) witness("(A:(B+C)) = (A:B)∩(A:C)", a, b, c, lhs, rhs);
        }
        // ((A∩B):C) = (A:C) ∩ (B:C)
        {
          std::size_t lhs = t.quot(t.meet(a, b), c), rhs = t.meet(t.quot(a, c), t.quot(b, c));
          if (lhs != rhs) witness("((A∩B):C) = (A:C)∩(B:C)", a, b, c, lhs, rhs);
        }
        // Any two of ((A:B):C), (A:(B∘C)), ((A:C):B) intersect inside the third.
        {
          std::size_t x = t.quot(t.quot(a, b), c), y = t.quot(a, t.circ(b, c)), w = t.quot(t.quot(a, c), b);
          if (!t.le(t.meet(x, y), w)) witness("((A:B):C)∩(A:(B∘C)) <= ((A:C):B)", a, b, c, t.meet(x, y), w);
          if (!t.le(t.meet(x, w), y)) witness("((A:B):C)∩((A:C):B) <= (A:(B∘C))", a, b, c, t.meet(x, w), y);
          if (!t.le(t.meet(y, w), x)) witness("(A:(B∘C))∩((A:C):B) <= ((A:B):C)", a, b, c, t.meet(y, w), x);
          if (comm) {
            std::size_t ybc = t.quot(a, t.prod(b, c));
            if (x != ybc || w != ybc) witness("((A:B):C) = (A:(BC)) = ((A:C):B)", a, b, c, x, ybc);
          }
        }
        // ((A+B):C) >= (A:C) + (B:C)
        {
          std::size_t big = t.quot(t.sum(a, b), c), small = t.sum(t.quot(a, c), t.quot(b, c));
          if (!t.le(small, big)) witness("((A+B):C) >= (A:C)+(B:C)", a, b, c, big, small);
          else if (big != small) strict("((A+B):C) > (A:C)+(B:C)", a, b, c, big, small, strict_sum);
        }
        // (A:(B∩C)) >= (A:B) + (A:C)
        {
          std::size_t big = t.quot(a, t.meet(b, c)), small = t.sum(t.quot(a, b), t.quot(a, c));
          if (!t.le(small, big)) witness("(A:(B∩C)) >= (A:B)+(A:C)", a, b, c, big, small);
          else if (big != small) strict("(A:(B∩C)) > (A:B)+(A:C)", a, b, c, big, small, strict_meet);
        }
      }
  rep.add_finding(json{{"ideal_count", k},
                       {"strict_sum_quotient_count", strict_sum},
                       {"strict_meet_quotient_count", strict_meet}});
  rep.wall_time_ms = clock.elapsed_ms();
  return rep;
}

/// ((B:A)A : A) = (B:A) for one pair; requires a commutative ring.
inline VerificationReport verify_level_identity(const Ideal& a, const Ideal& b) {
  Stopwatch clock;
  VerificationReport rep;
  rep.claim = "level-identity";
  rep.ring = a.ring()->descriptor();
  rep.ideals = json{{"A", ideal_to_json(a)}, {"B", ideal_to_json(b)}};
  if (!a.ring()->is_commutative()) {
    rep.verdict = Verdict::hypothesis_violated;
    rep.message = "level identity is checked only over commutative rings";
    return rep;
  }
  Ideal q = ideal_quotient(b, a);
  Ideal lhs = ideal_quotient(ideal_product(q, a), a);
  rep.checked_count = 1;
  if (lhs.members() != q.members())
    rep.add_witness(json{{"A", a.label()},
                         {"B", b.label()},
                         {"lhs", members_json(lhs.members())},
                         {"rhs", members_json(q.members())}});
  rep.wall_time_ms = clock.elapsed_ms();
  return rep;
}

/// The level identity over all ideal pairs of a commutative ring.
inline VerificationReport verify_level_identity_all(const RingPtr& r, std::size_t ideal_cap = 64) {
  Stopwatch clock;
  VerificationReport rep;
  rep.claim = "level-identity";
  rep.ring = r->descriptor();
  if (!r->is_commutative()) {
    rep.verdict = Verdict::hypothesis_violated;
    rep.message = "level identity is checked only over commutative rings";
    return rep;
  }
  std::vector<Ideal> list;
  try {
    list = enumerate_ideals(r, ideal_cap);
  } catch (const Error& e) {
    rep.verdict = Verdict::refused_cap;
    rep.message = e.what();
    return rep;
  }
  for (const auto& a : list)
    for (const auto& b : list) {
      auto one = verify_level_identity(a, b);
      rep.checked_count += one.checked_count;
      for (const auto& w : one.witnesses) rep.add_witness(w);
    }
  rep.wall_time_ms = clock.elapsed_ms();
  return rep;
}

}  // namespace relgl
