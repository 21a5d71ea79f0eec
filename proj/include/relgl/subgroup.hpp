#pragma once

// Finite subgroups of GL(n, R) materialised as hash-indexed element sets.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "relgl/congruence.hpp"
#include "relgl/ideal.hpp"
#include "relgl/key_set.hpp"
#include "relgl/mat.hpp"

namespace relgl {

/// Size limits. Every limit is enforced by refusal, never by truncation.
struct Caps {
  std::size_t subgroup = std::size_t{1} << 22;
  std::uint64_t gl = 4'000'000;
  /// |F|·|H| limit for element-pair commutator enumeration and for full centraliser scans.
  std::uint64_t pair = std::uint64_t{1} << 24;
  /// Element-pair limit for direct (non-generator) centraliser scans.
  std::uint64_t scan = std::uint64_t{1} << 27;
  std::size_t ideals = 64;
  unsigned degree = 4;

  static Caps uniform(std::uint64_t v) {
    Caps c;
    c.subgroup = static_cast<std::size_t>(v);
    c.gl = v;
    c.pair = v;
    c.scan = v;
    c.ideals = static_cast<std::size_t>(v);
    return c;
  }
};

struct LabeledMat {
  Mat m;
  std::string label;  // t, z, y, commutator, conjugate, custom
};

class SubgroupSet {
 public:
  SubgroupSet(const FiniteRing& r, unsigned n, std::string name = {}) : ring_(&r), n_(n), name_(std::move(name)) {}

  const FiniteRing& ring() const noexcept { return *ring_; }
  unsigned n() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }
  /// How the member set was produced, e.g. "closure" or "generator-pair commutators".
  const std::string& construction() const noexcept { return construction_; }
  void set_construction(std::string s) { construction_ = std::move(s); }

  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Mat>& members() const noexcept { return members_; }
  const std::vector<LabeledMat>& generators() const noexcept { return gens_; }
  std::vector<Mat> generator_matrices() const {
    std::vector<Mat> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.m);
    return out;
  }

  bool contains(const Mat& m) const { return keys_.contains(mat_key(m)); }
  bool contains_key(std::uint64_t k) const { return keys_.contains(k); }

  bool subset_of(const SubgroupSet& o) const {
    if (size() > o.size()) return false;
    return std::all_of(members_.begin(), members_.end(), [&](const Mat& m) { return o.contains(m); });
  }

  std::vector<std::uint64_t> sorted_keys() const {
    std::vector<std::uint64_t> k;
    k.reserve(members_.size());
    for (const auto& m : members_) k.push_back(mat_key(m));
    std::sort(k.begin(), k.end());
    return k;
  }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.ring_ == b.ring_ && a.n_ == b.n_ && a.size() == b.size() && a.subset_of(b);
  }

  // Raw insertion used by ClosureBuilder and from_members.
  bool insert_member(const Mat& m) {
    if (!keys_.insert(mat_key(m))) return false;
    members_.push_back(m);
    return true;
  }
  void push_generator(LabeledMat g) { gens_.push_back(std::move(g)); }

 private:
  const FiniteRing* ring_;
  unsigned n_;
  std::string name_;
  std::string construction_ = "closure";
  std::vector<Mat> members_;
  KeySet keys_;
  std::vector<LabeledMat> gens_;
};

/// Incremental subgroup closure. Redundant generators are dropped on arrival.
class ClosureBuilder {
 public:
  ClosureBuilder(const FiniteRing& r, unsigned n, std::size_t cap, std::string name = {})
      : set_(r, n, std::move(name)), cap_(cap) {
    if (!key_fits(r, n)) fail(ErrorKind::cap_exceeded, "matrix keys do not fit in 64 bits for this ring and degree");
    push(identity(r, n));
  }

  /// Extends the closure by g; returns false if g was already a member.
  bool add_generator(const Mat& g, const std::string& label = "custom") {
    if (g.ring != &set_.ring() || g.n != set_.n()) fail(ErrorKind::invalid_pair, "generator ring/degree mismatch");
    if (set_.contains(g)) return false;
    const std::size_t old = set_.size();
    set_.push_generator({g, label});
    gens_.push_back(g);
    for (std::size_t i = 0; i < old; ++i) push(set_.members()[i] * g);
    for (std::size_t i = old; i < set_.size(); ++i) {
      const Mat m = set_.members()[i];
      for (const auto& s : gens_) push(m * s);
    }
    return true;
  }

  std::size_t size() const { return set_.size(); }
  bool contains(const Mat& m) const { return set_.contains(m); }
  const std::vector<Mat>& generators() const { return gens_; }
  const SubgroupSet& current() const { return set_; }
  SubgroupSet finish() && { return std::move(set_); }

 private:
  void push(const Mat& m) {
    if (set_.insert_member(m) && set_.size() > cap_)
      fail(ErrorKind::cap_exceeded, "subgroup '" + set_.name() + "' exceeds cap " + std::to_string(cap_) +
                                        " (partial size " + std::to_string(set_.size()) + ")");
  }

  SubgroupSet set_;
  std::size_t cap_;
  std::vector<Mat> gens_;
};

/// Smallest subgroup containing gens.
inline SubgroupSet closure(const FiniteRing& r, unsigned n, const std::vector<LabeledMat>& gens,
                           std::size_t cap, std::string name = {}) {
  ClosureBuilder b(r, n, cap, std::move(name));
  for (const auto& g : gens) b.add_generator(g.m, g.label);
  return std::move(b).finish();
}

inline SubgroupSet closure(const FiniteRing& r, unsigned n, const std::vector<Mat>& gens, std::size_t cap,
                           std::string name = {}) {
  ClosureBuilder b(r, n, cap, std::move(name));
  for (const auto& g : gens) b.add_generator(g);
  return std::move(b).finish();
}

/// Smallest subgroup containing gens and normalised by every matrix in `conjugators`.
inline SubgroupSet normal_closure(const FiniteRing& r, unsigned n, const std::vector<LabeledMat>& gens,
                                  const std::vector<Mat>& conjugators, std::size_t cap, std::string name = {}) {
  ClosureBuilder b(r, n, cap, std::move(name));
  for (const auto& g : gens) b.add_generator(g.m, g.label);
  std::vector<Mat> inv;
  inv.reserve(conjugators.size());
  for (const auto& x : conjugators) inv.push_back(inverse_of(x));
  // Conjugation by x maps the finite subgroup into itself iff onto itself, so x⁻¹ needs no separate pass.
  for (std::size_t k = 0; k < b.generators().size(); ++k)
    for (std::size_t c = 0; c < conjugators.size(); ++c) {
      const Mat s = b.generators()[k];
      b.add_generator(conjugators[c] * s * inv[c], "conjugate");
    }
  return std::move(b).finish();
}

/// Wraps a member list already known (or to be verified) to be a subgroup.
inline SubgroupSet from_members(const FiniteRing& r, unsigned n, const std::vector<Mat>& members,
                                std::string name = {}) {
  SubgroupSet s(r, n, std::move(name));
  s.insert_member(identity(r, n));
  for (const auto& m : members) s.insert_member(m);
  s.set_construction("member list");
  return s;
}

/// Greedy generating set of a materialised subgroup: each member not yet in the closure becomes a generator.
/// Fails with invalid-input if the member set is not closed under multiplication.
inline std::vector<Mat> generating_set(const SubgroupSet& s) {
  if (s.construction() == "closure" && !s.generators().empty()) return s.generator_matrices();
  ClosureBuilder b(s.ring(), s.n(), s.size());
  try {
    for (const auto& m : s.members()) b.add_generator(m);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::cap_exceeded) fail(ErrorKind::invalid_input, "member set is not closed under products");
    throw;
  }
  if (b.size() != s.size()) fail(ErrorKind::invalid_input, "member set is not closed under products");
  return b.generators();
}

/// Whether the member set is a subgroup (contains e, closed under products; finite so inverses follow).
inline bool is_subgroup(const SubgroupSet& s) {
  if (!s.contains(identity(s.ring(), s.n()))) return false;
  ClosureBuilder b(s.ring(), s.n(), s.size() + 1);
  try {
    for (const auto& m : s.members()) b.add_generator(m);
  } catch (const Error&) {
    return false;
  }
  return b.size() == s.size();
}

inline std::vector<LabeledMat> all_transvections(const FiniteRing& r, unsigned n, const ElementSet& params) {
  std::vector<LabeledMat> out;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (i != j)
        for (Elem x : params.elements())
          if (x != r.zero()) out.push_back({transvection(r, n, i, j, x), "t"});
  return out;
}

namespace detail {

inline std::vector<LabeledMat> gl_generators(const FiniteRing& r, unsigned n) {
  auto gens = all_transvections(r, n, ElementSet::full(r.size()));
  const auto& u = r.units();
  std::uint64_t combos = sat_pow(u.size(), n);
  if (combos <= 4096) {
    std::vector<Elem> d(n);
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::uint64_t t = code;
      for (unsigned k = 0; k < n; ++k) {
        d[k] = u[t % u.size()];
        t /= u.size();
      }
      gens.push_back({diagonal(r, d), "diag"});
    }
  } else {
    for (unsigned k = 0; k < n; ++k)
      for (Elem x : u) {
        std::vector<Elem> d(n, r.one());
        d[k] = x;
        gens.push_back({diagonal(r, d), "diag"});
      }
  }
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  do {
    gens.push_back({permutation_matrix(r, perm), "perm"});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return gens;
}

// Counts invertible matrices by scanning all |R|^(n^2) of them.
inline std::uint64_t count_invertible_by_scan(const FiniteRing& r, unsigned n) {
  const std::uint64_t total = sat_pow(r.size(), n * n);
  std::uint64_t count = 0;
  for (std::uint64_t k = 0; k < total; ++k)
    if (is_invertible(mat_from_key(r, n, k))) ++count;
  return count;
}

}  // namespace detail

/// Counts invertible n x n matrices by brute force; the independent oracle for enumerate_gl.
inline std::uint64_t count_invertible_by_scan(const FiniteRing& r, unsigned n) {
  return detail::count_invertible_by_scan(r, n);
}

/// All of GL(n, R), by closure from transvections, unit diagonals and permutation matrices.
///
/// The size is cross-checked against a brute-force count when |R|^(n²) <= 2^18 and against the
/// closed-form order when the ring family has one.
inline SubgroupSet enumerate_gl(const FiniteRing& r, unsigned n, const Caps& caps = {}) {
  detail::require_degree(n);
  if (n > caps.degree) fail(ErrorKind::cap_exceeded, "degree above the configured cap");
  auto formula = r.gl_order(n);
  if (formula && *formula > caps.gl)
    fail(ErrorKind::cap_exceeded, "|GL(" + std::to_string(n) + ",R)| = " + std::to_string(*formula) +
                                      " exceeds cap " + std::to_string(caps.gl) + "; use sample mode");
  SubgroupSet gl = closure(r, n, detail::gl_generators(r, n), static_cast<std::size_t>(caps.gl),
                           "GL(" + std::to_string(n) + ",R)");
  if (formula && *formula != gl.size())
    throw std::logic_error("GL closure size " + std::to_string(gl.size()) + " disagrees with formula " +
                           std::to_string(*formula));
  if (sat_pow(r.size(), n * n) <= (std::uint64_t{1} << 18)) {
    auto scan = detail::count_invertible_by_scan(r, n);
    if (scan != gl.size())
      throw std::logic_error("GL closure size " + std::to_string(gl.size()) + " disagrees with scan " +
                             std::to_string(scan));
  }
  return gl;
}

/// GL(n, R, I) by enumerating e + M over all M with entries in I.
inline SubgroupSet principal_congruence_subgroup(const Ideal& i, unsigned n, const Caps& caps = {}) {
  const FiniteRing& r = *i.ring();
  const std::string name = "GL(" + std::to_string(n) + ",R," + i.label() + ")";
  if (i.is_unit()) {
    SubgroupSet gl = enumerate_gl(r, n, caps);
    gl.set_name(name);
    return gl;
  }
  const std::uint64_t candidates = sat_pow(i.size(), n * n);
  if (candidates > caps.pair || candidates > UINT64_MAX / 2)
    fail(ErrorKind::cap_exceeded, name + " needs " + std::to_string(candidates) + " candidate lifts, above cap");
  auto elems = i.elements();
  SubgroupSet s(r, n, name);
  s.set_construction("lift enumeration");
  const Mat e = identity(r, n);
  for (std::uint64_t code = 0; code < candidates; ++code) {
    Mat m = e;
    std::uint64_t t = code;
    for (unsigned k = 0; k < n * n; ++k) {
      m.e[k] = r.add(m.e[k], elems[t % elems.size()]);
      t /= elems.size();
    }
    if (is_invertible(m)) {
      s.insert_member(m);
      if (s.size() > caps.subgroup) fail(ErrorKind::cap_exceeded, name + " exceeds subgroup cap");
    }
  }
  return s;
}

/// Members of `g` satisfying a congruence predicate.
inline SubgroupSet congruence_subgroup(const SubgroupSet& gl, const CongruenceSpec& spec) {
  SubgroupSet s(gl.ring(), gl.n(), spec.label());
  s.set_construction("filter of GL");
  for (const auto& m : gl.members())
    if (satisfies_congruence(m, spec)) s.insert_member(m);
  return s;
}

/// E(n, I): generated by all transvections of level I.
inline SubgroupSet elementary_subgroup(const Ideal& i, unsigned n, const Caps& caps = {}) {
  const FiniteRing& r = *i.ring();
  return closure(r, n, all_transvections(r, n, i.members()), caps.subgroup,
                 "E(" + std::to_string(n) + "," + i.label() + ")");
}

inline std::vector<LabeledMat> z_generators(const Ideal& a, unsigned n) {
  const FiniteRing& r = *a.ring();
  std::vector<LabeledMat> out;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (i != j)
        for (Elem x : a.elements())
          if (x != r.zero())
            for (std::size_t c = 0; c < r.size(); ++c) out.push_back({z_gen(r, n, i, j, x, Elem(c)), "z"});
  return out;
}

/// E(n, R, A) as the closure of all z_ij(a, c), a in A, c in R.
inline SubgroupSet relative_elementary(const Ideal& a, unsigned n, const Caps& caps = {}) {
  return closure(*a.ring(), n, z_generators(a, n), caps.subgroup,
                 "E(" + std::to_string(n) + ",R," + a.label() + ")");
}

/// E(n, R, A) as the normal closure of E(n, A) under the transvection generators of E(n, R).
inline SubgroupSet relative_elementary_by_normal_closure(const Ideal& a, unsigned n, const Caps& caps = {}) {
  const FiniteRing& r = *a.ring();
  std::vector<Mat> conj;
  for (const auto& t : all_transvections(r, n, ElementSet::full(r.size()))) conj.push_back(t.m);
  return normal_closure(r, n, all_transvections(r, n, a.members()), conj, caps.subgroup,
                        "E(" + std::to_string(n) + ",R," + a.label() + ")*");
}

/// [F, H], the subgroup generated by all [f, h].
///
/// Enumerates every element pair when |F|·|H| <= caps.pair; otherwise takes commutators of
/// generator pairs and closes them under conjugation by the generators of F and H.
inline SubgroupSet mixed_commutator(const SubgroupSet& f, const SubgroupSet& h, const Caps& caps = {}) {
  if (&f.ring() != &h.ring() || f.n() != h.n()) fail(ErrorKind::invalid_pair, "subgroups over different rings");
  const FiniteRing& r = f.ring();
  const unsigned n = f.n();
  const std::string name = "[" + f.name() + "," + h.name() + "]";
  if (sat_mul(f.size(), h.size()) <= caps.pair) {
    std::vector<Mat> finv, hinv;
    finv.reserve(f.size());
    hinv.reserve(h.size());
    for (const auto& x : f.members()) finv.push_back(inverse_of(x));
    for (const auto& y : h.members()) hinv.push_back(inverse_of(y));
    ClosureBuilder b(r, n, caps.subgroup, name);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < h.size(); ++j)
        b.add_generator(commutator(f.members()[i], finv[i], h.members()[j], hinv[j]), "commutator");
    SubgroupSet s = std::move(b).finish();
    s.set_construction("element-pair commutators");
    return s;
  }
  auto fg = generating_set(f);
  auto hg = generating_set(h);
  std::vector<LabeledMat> comms;
  for (const auto& x : fg)
    for (const auto& y : hg) comms.push_back({commutator(x, y), "commutator"});
  std::vector<Mat> conj = fg;
  conj.insert(conj.end(), hg.begin(), hg.end());
  SubgroupSet s = normal_closure(r, n, comms, conj, caps.subgroup, name);
  s.set_construction("generator-pair commutators");
  return s;
}

/// Whether every conjugate x s x⁻¹ of a generator s of `s` by a generator x lies in `s`.
inline bool is_normalised_by(const SubgroupSet& s, const std::vector<Mat>& conjugators) {
  auto gens = generating_set(s);
  for (const auto& x : conjugators) {
    Mat xi = inverse_of(x);
    for (const auto& g : gens)
      if (!s.contains(x * g * xi)) return false;
  }
  return true;
}

}  // namespace relgl
