#pragma once

// Membership predicates for the congruence subgroup families of GL(n, R).

#include <optional>
#include <string>

#include "relgl/ideal.hpp"
#include "relgl/mat.hpp"

namespace relgl {

enum class Family { principal, full, brimming, homothety, c_omega };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::principal: return "principal";
    case Family::full: return "full";
    case Family::brimming: return "brimming";
    case Family::homothety: return "homothety";
    case Family::c_omega: return "c_omega";
  }
  return "unknown";
}

/// A congruence subgroup of GL(n, R): its family, its level, and the allowed diagonal entries.
///
/// For c_omega(A, B) the level is (B:A) and diagonal entries must lie in Cent_R(A, B).
/// For the full family diagonal entries must commute with every ring element modulo the level.
struct CongruenceSpec {
  Family family;
  unsigned n;
  Ideal level;
  ElementSet diagonal_ok;
  std::optional<Ideal> a, b;

  const RingPtr& ring() const { return level.ring(); }

  std::string label() const {
    const std::string deg = std::to_string(n);
    switch (family) {
      case Family::principal: return "GL(" + deg + ",R," + level.label() + ")";
      case Family::full: return "C(" + deg + ",R," + level.label() + ")";
      case Family::brimming: return "G(" + deg + ",R," + level.label() + ")";
      case Family::homothety: return "C*(" + deg + ",R," + level.label() + ")";
      case Family::c_omega: return "C_Omega(" + a->label() + "," + b->label() + ")(" + deg + ",R," + level.label() + ")";
    }
    return "?";
  }
};

inline CongruenceSpec make_congruence(Family family, unsigned n, const Ideal& level) {
  if (family == Family::c_omega) fail(ErrorKind::invalid_parameter, "use make_c_omega for the c_omega family");
  const auto& r = *level.ring();
  ElementSet diag = ElementSet::full(r.size());
  if (family == Family::full) diag = relative_centraliser_ring(r, ElementSet::full(r.size()), level);
  return CongruenceSpec{family, n, level, std::move(diag), std::nullopt, std::nullopt};
}

inline CongruenceSpec make_c_omega(unsigned n, const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) fail(ErrorKind::invalid_pair, "ideals belong to different rings");
  Ideal q = ideal_quotient(b, a);
  ElementSet diag = relative_centraliser_ring(*a.ring(), a.members(), b);
  return CongruenceSpec{Family::c_omega, n, std::move(q), std::move(diag), a, b};
}

/// Entrywise membership test; `g` is assumed invertible.
inline bool satisfies_congruence(const Mat& g, const CongruenceSpec& spec) {
  const FiniteRing& r = *g.ring;
  const Ideal& lvl = spec.level;
  const unsigned n = g.n;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (i != j && !lvl.contains(g(i, j))) return false;
  switch (spec.family) {
    case Family::brimming: return true;
    case Family::principal:
      for (unsigned i = 0; i < n; ++i)
        if (!lvl.contains(r.sub(g(i, i), r.one()))) return false;
      return true;
    case Family::full:
    case Family::homothety:
    case Family::c_omega:
      for (unsigned i = 1; i < n; ++i)
        if (!lvl.contains(r.sub(g(i, i), g(0, 0)))) return false;
      for (unsigned i = 0; i < n; ++i)
        if (!spec.diagonal_ok.contains(g(i, i))) return false;
      return true;
  }
  return false;
}

inline bool in_congruence(const Mat& g, const CongruenceSpec& spec) {
  if (g.ring != spec.ring().get() || g.n != spec.n)
    fail(ErrorKind::invalid_pair, "matrix does not match the congruence subgroup's ring or degree");
  if (!is_invertible(g)) fail(ErrorKind::invalid_input, "matrix is not invertible");
  return satisfies_congruence(g, spec);
}

/// Whether g ≡ h entrywise modulo the ideal.
inline bool congruent_mod(const Mat& g, const Mat& h, const Ideal& i) {
  const FiniteRing& r = *g.ring;
  for (unsigned k = 0; k < g.n * g.n; ++k)
    if (!i.contains(r.sub(g.e[k], h.e[k]))) return false;
  return true;
}

}  // namespace relgl
