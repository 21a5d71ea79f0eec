#pragma once

// Two-sided ideals as explicit element sets, and the ideal-quotient calculus.

#include <algorithm>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "relgl/element_set.hpp"
#include "relgl/error.hpp"
#include "relgl/ring.hpp"

namespace relgl {

/// Additive subgroup generated by `gens`.
inline ElementSet additive_closure(const FiniteRing& r, const ElementSet& gens) {
  ElementSet out(r.size());
  out.insert(r.zero());
  std::vector<Elem> members{r.zero()};
  auto g = gens.elements();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem x : g) {
      Elem s = r.add(members[i], x);
      if (!out.contains(s)) {
        out.insert(s);
        members.push_back(s);
      }
    }
  return out;
}

class Ideal {
 public:
  Ideal(RingPtr ring, ElementSet members, std::vector<Elem> generators)
      : ring_(std::move(ring)), members_(std::move(members)), gens_(std::move(generators)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const ElementSet& members() const noexcept { return members_; }
  const std::vector<Elem>& generators() const noexcept { return gens_; }

  bool contains(Elem x) const noexcept { return members_.contains(x); }
  std::size_t size() const noexcept { return members_.count(); }
  std::vector<Elem> elements() const { return members_.elements(); }
  bool is_zero() const noexcept { return size() == 1; }
  bool is_unit() const noexcept { return size() == ring_->size(); }
  bool subset_of(const Ideal& o) const noexcept { return members_.subset_of(o.members_); }

  /// A generating set of the additive group of the ideal, chosen greedily in index order.
  std::vector<Elem> additive_generators() const {
    std::vector<Elem> out;
    ElementSet span(ring_->size());
    span.insert(ring_->zero());
    ElementSet chosen(ring_->size());
    for (Elem x : elements()) {
      if (span.contains(x)) continue;
      out.push_back(x);
      chosen.insert(x);
      span = additive_closure(*ring_, chosen);
    }
    return out;
  }

  /// Text of the form "(g1,g2)" using element names.
  std::string label() const {
    std::string s = "(";
    if (gens_.empty()) s += ring_->name(ring_->zero());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ",";
      s += ring_->name(gens_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

 private:
  RingPtr ring_;
  ElementSet members_;
  std::vector<Elem> gens_;
};

namespace detail {

inline ElementSet two_sided_span(const FiniteRing& r, const std::vector<Elem>& gens) {
  ElementSet seeds(r.size());
  for (Elem g : gens)
    for (std::size_t x = 0; x < r.size(); ++x)
      for (std::size_t y = 0; y < r.size(); ++y) seeds.insert(r.mul(r.mul(Elem(x), g), Elem(y)));
  return additive_closure(r, seeds);
}

inline void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) fail(ErrorKind::invalid_pair, "ideals belong to different rings");
}

// Greedy generating set for an already-known ideal member set.
inline std::vector<Elem> choose_generators(const FiniteRing& r, const ElementSet& members) {
  std::vector<Elem> gens;
  ElementSet span(r.size());
  span.insert(r.zero());
  for (Elem x : members.elements()) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = two_sided_span(r, gens);
  }
  return gens;
}

}  // namespace detail

inline bool is_two_sided_ideal(const FiniteRing& r, const ElementSet& s) {
  if (!s.contains(r.zero())) return false;
  auto m = s.elements();
  for (Elem a : m) {
    if (!s.contains(r.neg(a))) return false;
    for (Elem b : m)
      if (!s.contains(r.add(a, b))) return false;
    for (std::size_t x = 0; x < r.size(); ++x)
      if (!s.contains(r.mul(Elem(x), a)) || !s.contains(r.mul(a, Elem(x)))) return false;
  }
  return true;
}

/// Smallest two-sided ideal containing `gens`.
inline Ideal ideal_generated(const RingPtr& r, const std::vector<Elem>& gens) {
  for (Elem g : gens)
    if (g >= r->size()) fail(ErrorKind::invalid_parameter, "generator index out of range");
  return Ideal(r, detail::two_sided_span(*r, gens), gens);
}

inline Ideal zero_ideal(const RingPtr& r) { return ideal_generated(r, {}); }
inline Ideal unit_ideal(const RingPtr& r) { return ideal_generated(r, {r->one()}); }

/// Wraps an element set known to be an ideal, choosing generators for it.
inline Ideal ideal_from_members(const RingPtr& r, const ElementSet& members) {
  if (!is_two_sided_ideal(*r, members)) fail(ErrorKind::invalid_ideal, "element set is not a two-sided ideal");
  if (members.count() == r->size()) return unit_ideal(r);
  return Ideal(r, members, detail::choose_generators(*r, members));
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  detail::require_same_ring(a, b);
  const auto& r = *a.ring();
  ElementSet s(r.size());
  for (Elem x : a.elements())
    for (Elem y : b.elements()) s.insert(r.add(x, y));
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), s, gens);
}

inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  detail::require_same_ring(a, b);
  return ideal_from_members(a.ring(), a.members() & b.members());
}

/// AB: the ideal generated by all products ab.
inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
  detail::require_same_ring(a, b);
  const auto& r = *a.ring();
  ElementSet seeds(r.size());
  for (Elem x : a.elements())
    for (Elem y : b.elements()) seeds.insert(r.mul(x, y));
  // Sums of products already absorb multiplication on both sides.
  return ideal_from_members(a.ring(), additive_closure(r, seeds));
}

/// A∘B = AB + BA.
inline Ideal symmetrised_product(const Ideal& a, const Ideal& b) {
  detail::require_same_ring(a, b);
  return ideal_from_members(a.ring(), ideal_sum(ideal_product(a, b), ideal_product(b, a)).members());
}

/// BA⁻¹ = {x : xA ⊆ B}.
inline Ideal right_quotient(const Ideal& b, const Ideal& a) {
  detail::require_same_ring(a, b);
  const auto& r = *a.ring();
  ElementSet out(r.size());
  auto am = a.elements();
  for (std::size_t x = 0; x < r.size(); ++x)
    if (std::all_of(am.begin(), am.end(), [&](Elem y) { return b.contains(r.mul(Elem(x), y)); }))
      out.insert(Elem(x));
  return ideal_from_members(a.ring(), out);
}

/// A⁻¹B = {x : Ax ⊆ B}.
inline Ideal left_quotient(const Ideal& a, const Ideal& b) {
  detail::require_same_ring(a, b);
  const auto& r = *a.ring();
  ElementSet out(r.size());
  auto am = a.elements();
  for (std::size_t x = 0; x < r.size(); ++x)
    if (std::all_of(am.begin(), am.end(), [&](Elem y) { return b.contains(r.mul(y, Elem(x))); }))
      out.insert(Elem(x));
  return ideal_from_members(a.ring(), out);
}

/// (B:A) = BA⁻¹ ∩ A⁻¹B.
inline Ideal ideal_quotient(const Ideal& b, const Ideal& a) {
  detail::require_same_ring(a, b);
  return ideal_from_members(a.ring(), right_quotient(b, a).members() & left_quotient(a, b).members());
}

/// Cent_R(Z) = {x : xz = zx for all z in Z}.
inline ElementSet centraliser(const FiniteRing& r, const ElementSet& z) {
  ElementSet out(r.size());
  auto zs = z.elements();
  for (std::size_t x = 0; x < r.size(); ++x)
    if (std::all_of(zs.begin(), zs.end(), [&](Elem y) { return r.mul(Elem(x), y) == r.mul(y, Elem(x)); }))
      out.insert(Elem(x));
  return out;
}

/// Cent_R(Z, B) = {x : xz - zx ∈ B for all z in Z}.
inline ElementSet relative_centraliser_ring(const FiniteRing& r, const ElementSet& z, const Ideal& b) {
  ElementSet out(r.size());
  auto zs = z.elements();
  for (std::size_t x = 0; x < r.size(); ++x)
    if (std::all_of(zs.begin(), zs.end(),
                    [&](Elem y) { return b.contains(r.sub(r.mul(Elem(x), y), r.mul(y, Elem(x)))); }))
      out.insert(Elem(x));
  return out;
}

/// All two-sided ideals, sorted by size then members. Every ideal is a sum of principal
/// ideals, so closing the principal ideals under pairwise sums reaches all of them.
inline std::vector<Ideal> enumerate_ideals(const RingPtr& r, std::size_t cap = 64) {
  std::vector<Ideal> out;
  auto add = [&](Ideal candidate) {
    for (const auto& i : out)
      if (i.members() == candidate.members()) return;
    if (out.size() >= cap)
      fail(ErrorKind::cap_exceeded, "more than " + std::to_string(cap) + " ideals; raise the ideal cap");
    out.push_back(std::move(candidate));
  };
  add(ideal_generated(r, {}));
  for (std::size_t x = 0; x < r->size(); ++x) add(ideal_generated(r, {Elem(x)}));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Elem> gens = out[j].generators();
      gens.insert(gens.end(), out[i].generators().begin(), out[i].generators().end());
      add(ideal_generated(r, gens));
    }
  std::stable_sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return out;
}

namespace detail {

class QuotientStructure final : public RingStructure {
 public:
  QuotientStructure(RingPtr parent, const Ideal& ideal) : parent_(std::move(parent)), ideal_label_(ideal.label()) {
    proj_.assign(parent_->size(), Elem(0));
    ElementSet seen(parent_->size());
    auto members = ideal.elements();
    for (std::size_t x = 0; x < parent_->size(); ++x) {
      if (seen.contains(Elem(x))) continue;
      Elem q = static_cast<Elem>(reps_.size());
      reps_.push_back(Elem(x));
      for (Elem i : members) {
        Elem y = parent_->add(Elem(x), i);
        seen.insert(y);
        proj_[y] = q;
      }
    }
  }
  std::size_t size() const override { return reps_.size(); }
  Elem zero() const override { return proj_[parent_->zero()]; }
  Elem one() const override { return proj_[parent_->one()]; }
  Elem add(Elem a, Elem b) const override { return proj_[parent_->add(reps_[a], reps_[b])]; }
  Elem neg(Elem a) const override { return proj_[parent_->neg(reps_[a])]; }
  Elem mul(Elem a, Elem b) const override { return proj_[parent_->mul(reps_[a], reps_[b])]; }
  std::string name(Elem a) const override { return "[" + parent_->name(reps_[a]) + "]"; }
  json descriptor() const override {
    return json{{"kind", "quotient"}, {"of", parent_->descriptor()}, {"ideal", ideal_label_}};
  }
  std::optional<std::uint64_t> gl_order(unsigned) const override { return std::nullopt; }

  const std::vector<Elem>& projection() const { return proj_; }
  const std::vector<Elem>& representatives() const { return reps_; }

 private:
  RingPtr parent_;
  std::string ideal_label_;
  std::vector<Elem> reps_;
  std::vector<Elem> proj_;
};

}  // namespace detail

/// R/I with least-index coset representatives, and the reduction homomorphism R -> R/I.
inline std::pair<RingPtr, RingHom> quotient_ring(const RingPtr& r, const Ideal& ideal) {
  if (ideal.ring() != r) fail(ErrorKind::invalid_ideal, "ideal does not belong to the ring");
  if (!is_two_sided_ideal(*r, ideal.members())) fail(ErrorKind::invalid_ideal, "not a two-sided ideal");
  auto s = std::make_shared<detail::QuotientStructure>(r, ideal);
  std::vector<Elem> proj = s->projection();
  RingPtr q = make_ring(std::move(s));
  return {q, RingHom{r, q, std::move(proj)}};
}

}  // namespace relgl
