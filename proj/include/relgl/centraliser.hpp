#pragma once

// Relative centralisers C_G(F, H) and the checks that identify them with congruence subgroups.

#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "relgl/ideal_identities.hpp"
#include "relgl/lemmas.hpp"
#include "relgl/parallel.hpp"
#include "relgl/report.hpp"
#include "relgl/sampling.hpp"
#include "relgl/workspace.hpp"

namespace relgl {

using Mask = std::vector<std::uint8_t>;

/// {g ∈ G : [f, g] ∈ H for all f ∈ F}, as a mask over `g`. `h_member` must be thread-safe.
template <class HMember>
Mask relative_centraliser(const std::vector<Mat>& g, const std::vector<Mat>& f, HMember&& h_member,
                          unsigned workers = 1) {
  std::vector<Mat> f_inv;
  f_inv.reserve(f.size());
  for (const auto& x : f) f_inv.push_back(inverse_of(x));
  Mask out(g.size(), 0);
  parallel_ranges(g.size(), workers, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t k = begin; k < end; ++k) {
      const Mat gi = inverse_of(g[k]);
      bool ok = true;
      for (std::size_t q = 0; q < f.size() && ok; ++q) ok = h_member(commutator(f[q], f_inv[q], g[k], gi));
      out[k] = ok;
    }
  });
  return out;
}

/// Whether g h ≡ h g entrywise modulo B, i.e. [h, g] ∈ GL(n, R, B).
inline bool commutes_mod(const Mat& g, const Mat& h, const Ideal& b) {
  return congruent_mod(g * h, h * g, b);
}

/// relative_centraliser with H = GL(n, R, B), which needs no inverses.
inline Mask centraliser_mod(const std::vector<Mat>& g, const std::vector<Mat>& f, const Ideal& b,
                            unsigned workers = 1) {
  Mask out(g.size(), 0);
  parallel_ranges(g.size(), workers, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t k = begin; k < end; ++k) {
      bool ok = true;
      for (std::size_t q = 0; q < f.size() && ok; ++q) ok = commutes_mod(g[k], f[q], b);
      out[k] = ok;
    }
  });
  return out;
}

/// Membership in C(E(n,A), GL(n,R,B)) by transvection checks: g t_rs(a) ≡ t_rs(a) g mod B
/// for every position pair and every a in an additive generating set of A.
class Theorem1Predicate {
 public:
  Theorem1Predicate(const Ideal& a, const Ideal& b) : b_(b), gens_(a.additive_generators()) {
    detail::require_same_ring(a, b);
  }

  bool operator()(const Mat& g) const {
    const FiniteRing& r = *g.ring;
    const unsigned n = g.n;
    // g t_rs(a) - t_rs(a) g has (i, s) entry g_ir a and (r, j) entry -a g_sj, summed where both apply.
    for (Elem a : gens_)
      for (unsigned rr = 0; rr < n; ++rr)
        for (unsigned s = 0; s < n; ++s) {
          if (rr == s) continue;
          for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
              Elem d = r.zero();
              if (j == s) d = r.add(d, r.mul(g(i, rr), a));
              if (i == rr) d = r.sub(d, r.mul(a, g(s, j)));
              if (!b_.contains(d)) return false;
            }
        }
    return true;
  }

  const std::vector<Elem>& additive_generators() const { return gens_; }

 private:
  Ideal b_;
  std::vector<Elem> gens_;
};

inline bool theorem1_predicate(const Mat& g, const Ideal& a, const Ideal& b) { return Theorem1Predicate(a, b)(g); }

namespace detail {

inline std::size_t mask_count(const Mask& m) {
  std::size_t c = 0;
  for (auto v : m) c += v;
  return c;
}

inline std::optional<std::size_t> first_difference(const Mask& x, const Mask& y) {
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != y[k]) return k;
  return std::nullopt;
}

inline VerificationReport centraliser_report(const std::string& claim, const Workspace& ws, const Ideal& a,
                                             const Ideal& b, const Ideal& q) {
  VerificationReport rep = lemma_report(claim, ws, a, &b);
  rep.ideals["(B:A)"] = ideal_to_json(q);
  return rep;
}

// Reduction of matrices modulo an ideal, with distinct images numbered in first-seen order.
class Reduction {
 public:
  Reduction(const RingPtr& r, const Ideal& b) {
    if (!b.is_zero()) {
      auto [q, hom] = quotient_ring(r, b);
      quotient_ = q;
      image_ = hom.image;
    }
  }

  Mat operator()(const Mat& m) const {
    if (!quotient_) return m;
    return map_entries(m, *quotient_, [&](Elem x) { return image_[x]; });
  }

  // Distinct images of `ms` and, for each input, the index of its image.
  std::pair<std::vector<Mat>, std::vector<std::uint32_t>> images(const std::vector<Mat>& ms) const {
    std::vector<Mat> distinct;
    std::vector<std::uint32_t> index(ms.size());
    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    for (std::size_t k = 0; k < ms.size(); ++k) {
      Mat im = (*this)(ms[k]);
      auto [it, fresh] = seen.emplace(mat_key(im), static_cast<std::uint32_t>(distinct.size()));
      if (fresh) distinct.push_back(im);
      index[k] = it->second;
    }
    return {std::move(distinct), std::move(index)};
  }

 private:
  RingPtr quotient_;
  std::vector<Elem> image_;
};

// Centraliser of every element of H modulo B, computed on distinct images in R/B.
// Returns nullopt when the estimated work exceeds `budget`.
inline std::optional<Mask> full_centraliser_mod(const RingPtr& r, const std::vector<Mat>& g,
                                                const std::vector<Mat>& h, const Ideal& b, std::size_t expected,
                                                std::uint64_t budget, unsigned workers) {
  if (b.is_unit()) return Mask(g.size(), 1);
  Reduction red(r, b);
  auto [gi, gidx] = red.images(g);
  auto [hi, hidx] = red.images(h);
  (void)hidx;
  const std::uint64_t estimate = sat_mul(std::min(expected, gi.size()), hi.size()) + gi.size();
  if (estimate > budget) return std::nullopt;
  Mask img(gi.size(), 0);
  parallel_ranges(gi.size(), workers, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t k = begin; k < end; ++k) {
      bool ok = true;
      for (std::size_t q = 0; q < hi.size() && ok; ++q) ok = (gi[k] * hi[q] == hi[q] * gi[k]);
      img[k] = ok;
    }
  });
  Mask out(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) out[k] = img[gidx[k]];
  return out;
}

inline std::vector<Mat> c_omega_pool(const CongruenceSpec& spec) {
  const FiniteRing& r = *spec.ring();
  const unsigned n = spec.n;
  std::vector<Mat> pool;
  for (const auto& t : all_transvections(r, n, spec.level.members())) pool.push_back(t.m);
  std::vector<Elem> diag_units;
  for (Elem u : r.units())
    if (spec.diagonal_ok.contains(u)) diag_units.push_back(u);
  const std::uint64_t combos = sat_pow(diag_units.size(), n);
  if (combos <= 4096) {
    std::vector<Elem> d(n);
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::uint64_t t = code;
      for (unsigned k = 0; k < n; ++k) {
        d[k] = diag_units[t % diag_units.size()];
        t /= diag_units.size();
      }
      Mat m = diagonal(r, d);
      if (satisfies_congruence(m, spec)) pool.push_back(m);
    }
  } else {
    for (Elem u : diag_units) pool.push_back(scalar(r, n, u));
  }
  if (pool.empty()) pool.push_back(identity(r, n));
  return pool;
}

struct HChoice {
  std::string name;
  const SubgroupSet* group;
};

inline std::vector<HChoice> theorem1_h_choices(Workspace& ws, const Ideal& a, const std::string& only) {
  const std::string d = std::to_string(ws.n());
  std::vector<HChoice> out;
  auto want = [&](const std::string& key) { return only.empty() || only == "all" || only == key; };
  if (want("E(n,A)")) out.push_back({"E(" + d + "," + a.label() + ")", &ws.elementary(a)});
  if (want("E(n,R,A)")) out.push_back({"E(" + d + ",R," + a.label() + ")", &ws.relative_elementary(a)});
  if (want("GL(n,R,A)")) out.push_back({"GL(" + d + ",R," + a.label() + ")", &ws.principal(a)});
  if (out.empty()) fail(ErrorKind::config_error, "unknown H choice '" + only + "'");
  return out;
}

}  // namespace detail

/// Sampling parameters; `samples == 0` means exhaustive.
struct SampleSpec {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned word_length = 32;
};

/// C_GL(H, GL(n,R,B)) = C_Ω(A,B)(n, R, (B:A)) for H ∈ {E(n,A), E(n,R,A), GL(n,R,A)}.
///
/// Exhaustive: every g ∈ GL(n,R) is checked for predicate ⇔ c_omega membership; the centraliser
/// of each H is computed from its generators (valid since GL(n,R,B) is normal) and, where the
/// work fits caps.scan, from all of its members on images in GL(n, R/B).
/// Sampled: the same biconditionals on random words, half of them drawn from generators of C_Ω.
inline VerificationReport verify_theorem1(Workspace& ws, const Ideal& a, const Ideal& b, const SampleSpec& mode = {},
                                          const std::string& h_choice = "all") {
  const Ideal q = ideal_quotient(b, a);
  auto base = detail::centraliser_report("theorem1", ws, a, b, q);
  base.mode = mode.samples ? "sample" : "exhaustive";
  base.seed = mode.seed;
  return detail::guarded(std::move(base), [&](VerificationReport& rep) {
    const unsigned workers = ws.workers();
    const CongruenceSpec spec = make_c_omega(ws.n(), a, b);
    const Theorem1Predicate pred(a, b);
    rep.add_finding(json{{"c_omega", spec.label()}, {"diagonal_entries", members_json(spec.diagonal_ok)},
                         {"additive_generators", pred.additive_generators()}});

    if (mode.samples == 0) {
      const auto& g = ws.gl().members();
      rep.checked_count = g.size();
      Mask p(g.size()), w(g.size());
      parallel_ranges(g.size(), workers, [&](std::size_t begin, std::size_t end, unsigned) {
        for (std::size_t k = begin; k < end; ++k) {
          p[k] = pred(g[k]);
          w[k] = satisfies_congruence(g[k], spec);
        }
      });
      if (auto k = detail::first_difference(p, w)) {
        rep.add_witness(json{{"matrix", to_text(g[*k])}, {"predicate", bool(p[*k])}, {"c_omega", bool(w[*k])}});
        return;
      }
      rep.add_finding(json{{"centraliser_size", detail::mask_count(w)}});
      for (const auto& h : detail::theorem1_h_choices(ws, a, h_choice)) {
        auto gens = generating_set(*h.group);
        Mask c = centraliser_mod(g, gens, b, workers);
        if (auto k = detail::first_difference(c, w)) {
          rep.add_witness(json{{"H", h.name}, {"matrix", to_text(g[*k])}, {"centralises_H", bool(c[*k])},
                               {"c_omega", bool(w[*k])}});
          return;
        }
        json f{{"H", h.name}, {"H_size", h.group->size()}, {"generators", gens.size()}};
        auto full = detail::full_centraliser_mod(ws.ring(), g, h.group->members(), b, detail::mask_count(w),
                                                 ws.caps().scan, workers);
        if (full) {
          if (auto k = detail::first_difference(*full, w)) {
            rep.add_witness(json{{"H", h.name}, {"check", "all members"}, {"matrix", to_text(g[*k])},
                                 {"centralises_H", bool((*full)[*k])}, {"c_omega", bool(w[*k])}});
            return;
          }
          f["member_check"] = "all members";
        } else {
          f["member_check"] = "generators only (member scan above cap)";
        }
        rep.add_finding(std::move(f));
      }
      return;
    }

    // Sample mode.
    const FiniteRing& r = *ws.ring();
    const unsigned n = ws.n();
    const std::vector<Mat> pool = detail::c_omega_pool(spec);
    struct HGens {
      std::string name;
      std::vector<Mat> gens;
    };
    std::vector<HGens> hs;
    for (const auto& h : detail::theorem1_h_choices(ws, a, h_choice)) hs.push_back({h.name, generating_set(*h.group)});
    const std::size_t chunks = std::max(1U, workers);
    std::vector<std::optional<std::pair<std::uint64_t, json>>> first(chunks);
    std::vector<std::uint64_t> positives(chunks, 0);
    parallel_ranges(mode.samples, workers, [&](std::size_t begin, std::size_t end, unsigned chunk) {
      for (std::size_t k = begin; k < end; ++k) {
        std::mt19937_64 rng(derive_seed(mode.seed, k));
        const Mat g = (k % 2 == 0) ? random_gl_word(r, n, mode.word_length, rng)
                                   : random_word(pool, mode.word_length, rng);
        const bool p = pred(g), w = satisfies_congruence(g, spec);
        positives[chunk] += w;
        if (p != w) {
          first[chunk] = {k, json{{"sample", k}, {"matrix", to_text(g)}, {"predicate", p}, {"c_omega", w}}};
          return;
        }
        for (const auto& h : hs) {
          bool c = true;
          for (std::size_t i = 0; i < h.gens.size() && c; ++i) c = commutes_mod(g, h.gens[i], b);
          if (c != w) {
            first[chunk] = {k, json{{"sample", k}, {"H", h.name}, {"matrix", to_text(g)}, {"centralises_H", c},
                                    {"c_omega", w}}};
            return;
          }
        }
      }
    });
    std::optional<std::pair<std::uint64_t, json>> hit;
    for (auto& f : first)
      if (f && (!hit || f->first < hit->first)) hit = f;
    std::uint64_t pos = 0;
    for (auto v : positives) pos += v;
    json info{{"samples", mode.samples}, {"word_length", mode.word_length}, {"pool_size", pool.size()}};
    for (const auto& h : hs) info["H_generators"][h.name] = h.gens.size();
    if (hit) {
      rep.checked_count = hit->first + 1;
      rep.add_finding(std::move(info));
      rep.add_witness(hit->second);
      return;
    }
    info["c_omega_samples"] = pos;
    rep.checked_count = mode.samples;
    rep.add_finding(std::move(info));
  });
}

/// C_GL(E(n,R,A), [E(n,R,Q), E(n,R,A)]) = C(n,R,Q) with Q = (B:A), over a commutative ring.
inline VerificationReport verify_theorem2(Workspace& ws, const Ideal& a, const Ideal& b, const SampleSpec& mode = {}) {
  const Ideal q = ideal_quotient(b, a);
  auto base = detail::centraliser_report("theorem2", ws, a, b, q);
  base.mode = mode.samples ? "sample" : "exhaustive";
  base.seed = mode.seed;
  return detail::guarded(std::move(base), [&](VerificationReport& rep) {
    if (!ws.ring()->is_commutative()) {
      rep.verdict = Verdict::hypothesis_violated;
      rep.message = "theorem2 requires a commutative ring";
      return;
    }
    const FiniteRing& r = *ws.ring();
    const unsigned n = ws.n();
    const unsigned workers = ws.workers();
    const SubgroupSet& f = ws.relative_elementary(a);
    const SubgroupSet s = mixed_commutator(ws.relative_elementary(q), f, ws.caps());
    const CongruenceSpec expected = make_congruence(Family::full, n, q);
    std::vector<Mat> gl_gens;
    for (const auto& x : detail::gl_generators(r, n)) gl_gens.push_back(x.m);
    const bool normal = is_normalised_by(s, gl_gens);
    const auto f_gens = generating_set(f);
    rep.add_finding(json{{"modulus", detail::subgroup_summary(s)},
                         {"modulus_normal_in_GL", normal},
                         {"F", detail::subgroup_summary(f)},
                         {"F_generators", f_gens.size()},
                         {"expected", expected.label()}});
    auto in_s = [&](const Mat& m) { return s.contains(m); };

    if (mode.samples == 0) {
      const auto& g = ws.gl().members();
      rep.checked_count = g.size();
      Mask w(g.size());
      for (std::size_t k = 0; k < g.size(); ++k) w[k] = satisfies_congruence(g[k], expected);
      const std::size_t expected_size = detail::mask_count(w);
      const bool full_fits = sat_mul(expected_size, f.size()) + g.size() <= ws.caps().scan;
      if (!normal && !full_fits)
        fail(ErrorKind::cap_exceeded, "modulus not normal and the all-members scan exceeds the scan cap");
      std::vector<std::pair<std::string, Mask>> results;
      if (normal) results.emplace_back("generators of F", relative_centraliser(g, f_gens, in_s, workers));
      if (full_fits) results.emplace_back("all members of F", relative_centraliser(g, f.members(), in_s, workers));
      for (const auto& [how, c] : results) {
        if (auto k = detail::first_difference(c, w)) {
          rep.add_witness(json{{"check", how}, {"matrix", to_text(g[*k])}, {"centralises", bool(c[*k])},
                               {"expected", bool(w[*k])}});
          return;
        }
        rep.add_finding(json{{"check", how}, {"centraliser_size", detail::mask_count(c)}});
      }
      return;
    }

    if (!normal) fail(ErrorKind::hypothesis_violated, "sampled check needs a modulus normal in GL");
    std::vector<Mat> pool;
    for (const auto& t : all_transvections(r, n, q.members())) pool.push_back(t.m);
    for (Elem u : r.units()) pool.push_back(scalar(r, n, u));
    std::vector<Mat> f_inv;
    for (const auto& x : f_gens) f_inv.push_back(inverse_of(x));
    const std::size_t chunks = std::max(1U, workers);
    std::vector<std::optional<std::pair<std::uint64_t, json>>> first(chunks);
    parallel_ranges(mode.samples, workers, [&](std::size_t begin, std::size_t end, unsigned chunk) {
      for (std::size_t k = begin; k < end; ++k) {
        std::mt19937_64 rng(derive_seed(mode.seed, k));
        const Mat g = (k % 2 == 0) ? random_gl_word(r, n, mode.word_length, rng)
                                   : random_word(pool, mode.word_length, rng);
        const Mat gi = inverse_of(g);
        bool c = true;
        for (std::size_t i = 0; i < f_gens.size() && c; ++i) c = s.contains(commutator(f_gens[i], f_inv[i], g, gi));
        const bool w = satisfies_congruence(g, expected);
        if (c != w) {
          first[chunk] = {k, json{{"sample", k}, {"matrix", to_text(g)}, {"centralises", c}, {"expected", w}}};
          return;
        }
      }
    });
    std::optional<std::pair<std::uint64_t, json>> hit;
    for (auto& x : first)
      if (x && (!hit || x->first < hit->first)) hit = x;
    rep.checked_count = hit ? hit->first + 1 : mode.samples;
    if (hit) rep.add_witness(hit->second);
  });
}

/// Whether [GL(n,R,A), GL(n,R,B)] = E(n,R,AB) happens to hold. Informational only.
inline VerificationReport explore_lemma9(Workspace& ws, const Ideal& a, const Ideal& b) {
  auto base = detail::lemma_report("explore-lemma9", ws, a, &b);
  base.verdict = Verdict::informational;
  return detail::guarded(std::move(base), [&](VerificationReport& rep) {
    const Ideal ab = ideal_product(a, b);
    rep.ideals["AB"] = ideal_to_json(ab);
    SubgroupSet lhs = mixed_commutator(ws.principal(a), ws.principal(b), ws.caps());
    const SubgroupSet& rhs = ws.relative_elementary(ab);
    rep.checked_count = lhs.size() + rhs.size();
    const bool equal = lhs == rhs;
    json f{{"lhs", detail::subgroup_summary(lhs)}, {"rhs", detail::subgroup_summary(rhs)}, {"equal", equal}};
    for (const auto& m : lhs.members())
      if (!rhs.contains(m)) {
        f["lhs_only"] = to_text(m);
        break;
      }
    for (const auto& m : rhs.members())
      if (!lhs.contains(m)) {
        f["rhs_only"] = to_text(m);
        break;
      }
    rep.add_finding(std::move(f));
  });
}

}  // namespace relgl
