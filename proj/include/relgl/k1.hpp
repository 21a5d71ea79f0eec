#pragma once

// K1(n, R, I) = GL(n, R, I) / E(n, R, I) and the group Z(n, R, I).

#include <optional>
#include <string>
#include <vector>

#include "relgl/centraliser.hpp"

namespace relgl {

struct K1Data {
  std::uint64_t gl_order = 0;
  std::uint64_t e_order = 0;
  bool normal = false;
  std::optional<std::uint64_t> quotient_order;
  std::optional<bool> abelian;
};

/// Orders of GL(n,R,I) and E(n,R,I), and, when E(n,R,I) is normal in GL(n,R,I), the order
/// and abelianness of the quotient. Abelianness is decided by commutators of generator pairs.
inline K1Data k1_data(Workspace& ws, const Ideal& i) {
  const SubgroupSet& gl = ws.principal(i);
  const SubgroupSet& e = ws.relative_elementary(i);
  K1Data d;
  d.gl_order = gl.size();
  d.e_order = e.size();
  if (!e.subset_of(gl)) return d;
  auto gens = generating_set(gl);
  d.normal = is_normalised_by(e, gens);
  if (!d.normal) return d;
  d.quotient_order = gl.size() / e.size();
  bool ab = true;
  for (std::size_t p = 0; p < gens.size() && ab; ++p)
    for (std::size_t q = p + 1; q < gens.size() && ab; ++q) ab = e.contains(commutator(gens[p], gens[q]));
  d.abelian = ab;
  return d;
}

inline VerificationReport k1_report(Workspace& ws, const Ideal& i) {
  auto base = detail::lemma_report("k1", ws, i);
  base.ideals = json{{"I", ideal_to_json(i)}};
  base.verdict = Verdict::informational;
  return detail::guarded(std::move(base), [&](VerificationReport& rep) {
    K1Data d = k1_data(ws, i);
    rep.checked_count = d.gl_order;
    json f{{"gl_order", d.gl_order}, {"e_order", d.e_order}, {"e_normal", d.normal}};
    f["quotient_order"] = d.quotient_order ? json(*d.quotient_order) : json(nullptr);
    f["quotient_abelian"] = d.abelian ? json(*d.abelian) : json(nullptr);
    if (!d.normal) rep.message = "E(n,R,I) is not normal in GL(n,R,I); quotient not formed";
    rep.add_finding(std::move(f));
  });
}

/// Z(n,R,I) = {g ∈ GL(n,R) : [g, GL(n,R)] ⊆ E(n,R,I)}.
///
/// With E(n,R,I) normal in GL, candidates are found against the generators of GL and then
/// validated against every element of GL when that fits caps.scan.
struct ZGroupResult {
  SubgroupSet group;
  bool modulus_normal;
  bool validated_against_all;
};

inline ZGroupResult z_group(Workspace& ws, const Ideal& i) {
  const SubgroupSet& gl = ws.gl();
  const SubgroupSet& e = ws.relative_elementary(i);
  const auto gens = generating_set(gl);
  const bool normal = is_normalised_by(e, gens);
  const auto& g = gl.members();
  auto in_e = [&](const Mat& m) { return e.contains(m); };
  // relative_centraliser tests [f, g]; [g, h] ∈ E iff [h, g] = [g, h]⁻¹ ∈ E.
  Mask cand;
  if (normal) {
    cand = relative_centraliser(g, gens, in_e, ws.workers());
  } else {
    if (sat_mul(g.size(), g.size()) > ws.caps().scan)
      fail(ErrorKind::cap_exceeded, "E(n,R,I) not normal in GL and the all-pairs scan exceeds the scan cap");
    cand = relative_centraliser(g, g, in_e, ws.workers());
  }
  std::vector<Mat> members;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (cand[k]) members.push_back(g[k]);
  bool validated = !normal;
  if (normal && sat_mul(members.size(), g.size()) <= ws.caps().scan) {
    Mask full = relative_centraliser(members, g, in_e, ws.workers());
    for (std::size_t k = 0; k < members.size(); ++k)
      if (!full[k])
        throw std::logic_error("generator test admitted " + to_text(members[k]) + " into Z(n,R,I)");
    validated = true;
  }
  SubgroupSet z = from_members(gl.ring(), gl.n(), members, "Z(" + std::to_string(gl.n()) + ",R," + i.label() + ")");
  return {std::move(z), normal, validated};
}

/// Z(n,R,I) together with the check Z(n,R,I) ⊆ C(n,R,I).
inline VerificationReport verify_z_group(Workspace& ws, const Ideal& i) {
  auto base = detail::lemma_report("z-group", ws, i);
  base.ideals = json{{"I", ideal_to_json(i)}};
  return detail::guarded(std::move(base), [&](VerificationReport& rep) {
    ZGroupResult z = z_group(ws, i);
    const CongruenceSpec full = make_congruence(Family::full, ws.n(), i);
    rep.checked_count = ws.gl().size();
    json f{{"z_order", z.group.size()},
           {"modulus_normal", z.modulus_normal},
           {"validated_against_all_of_GL", z.validated_against_all},
           {"is_subgroup", is_subgroup(z.group)}};
    if (z.group.size() <= 8) {
      json m = json::array();
      for (auto k : z.group.sorted_keys()) m.push_back(to_text(mat_from_key(z.group.ring(), z.group.n(), k)));
      f["members"] = m;
    }
    rep.add_finding(std::move(f));
    for (const auto& m : z.group.members())
      if (!satisfies_congruence(m, full)) {
        rep.add_witness(json{{"inclusion", z.group.name() + " <= " + full.label()}, {"matrix", to_text(m)}});
        return;
      }
  });
}

}  // namespace relgl
