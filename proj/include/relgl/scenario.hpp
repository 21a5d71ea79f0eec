#pragma once

// Scenario configs: ring and ideal descriptors, subgroup expressions, and dispatch to the verifiers.

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "relgl/centraliser.hpp"
#include "relgl/ideal_identities.hpp"
#include "relgl/k1.hpp"
#include "relgl/lemmas.hpp"

namespace relgl {

inline const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "theorem1", "theorem2", "lemma1",           "lemma2",          "lemma3", "lemma4",  "lemma5",
      "lemma6",   "lemma7",   "lemma8",           "ideal-identities", "level-identity", "k1", "z-group",
      "explore-lemma9", "centraliser"};
  return ids;
}

namespace detail {

inline std::string trim(std::string s) {
  auto sp = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && sp(s.front())) s.erase(s.begin());
  while (!s.empty() && sp(s.back())) s.pop_back();
  return s;
}

// Splits on commas that are not nested inside brackets or parentheses.
inline std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline long to_long(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::config_error, what + ": expected an integer, got '" + s + "'");
  }
}

}  // namespace detail

/// Ring from a descriptor: JSON such as {"kind":"zmod","m":4}, or shorthand
/// "zmod:12", "triangular:2", "local-f2", "product(zmod:2,zmod:3)".
inline RingPtr parse_ring(const json& d) {
  if (d.is_string()) {
    const std::string s = detail::trim(d.get<std::string>());
    if (!s.empty() && s.front() == '{') {
      json j;
      try {
        j = json::parse(s);
      } catch (const json::exception& e) {
        fail(ErrorKind::config_error, std::string("ring descriptor: ") + e.what());
      }
      return parse_ring(j);
    }
    if (s == "local-f2") return make_local_f2();
    if (s.rfind("product(", 0) == 0 && s.back() == ')') {
      auto parts = detail::split_top(s.substr(8, s.size() - 9));
      if (parts.size() < 2) fail(ErrorKind::config_error, "product needs at least two factors");
      RingPtr r = parse_ring(json(parts[0]));
      for (std::size_t i = 1; i < parts.size(); ++i) r = make_product(r, parse_ring(json(parts[i])));
      return r;
    }
    auto colon = s.find(':');
    if (colon != std::string::npos) {
      const std::string kind = s.substr(0, colon);
      const long m = detail::to_long(s.substr(colon + 1), "ring modulus");
      if (kind == "zmod") return make_zmod(m);
      if (kind == "triangular") return make_triangular(m);
    }
    fail(ErrorKind::config_error, "unknown ring descriptor '" + s + "'");
  }
  if (!d.is_object() || !d.contains("kind") || !d["kind"].is_string())
    fail(ErrorKind::config_error, "ring descriptor must be a string or an object with a 'kind'");
  const std::string kind = d["kind"];
  auto modulus = [&] {
    if (!d.contains("m") || !d["m"].is_number_integer())
      fail(ErrorKind::config_error, "ring '" + kind + "' needs an integer 'm'");
    return d["m"].get<long>();
  };
  if (kind == "zmod") return make_zmod(modulus());
  if (kind == "triangular") return make_triangular(modulus());
  if (kind == "local-f2") return make_local_f2();
  if (kind == "product") {
    if (!d.contains("factors") || !d["factors"].is_array() || d["factors"].size() < 2)
      fail(ErrorKind::config_error, "product needs a 'factors' array of at least two rings");
    RingPtr r = parse_ring(d["factors"][0]);
    for (std::size_t i = 1; i < d["factors"].size(); ++i) r = make_product(r, parse_ring(d["factors"][i]));
    return r;
  }
  fail(ErrorKind::config_error, "unknown ring kind '" + kind + "'");
}

namespace detail {

inline Elem parse_element(const FiniteRing& r, const json& v) {
  const bool zmod = r.descriptor().value("kind", "") == "zmod";
  if (v.is_number_integer()) {
    long x = v.get<long>();
    const long q = static_cast<long>(r.size());
    if (zmod) return static_cast<Elem>(((x % q) + q) % q);
    if (x < 0 || x >= q) fail(ErrorKind::config_error, "element index " + std::to_string(x) + " out of range");
    return static_cast<Elem>(x);
  }
  if (v.is_string()) {
    if (auto e = r.find_by_name(v.get<std::string>())) return *e;
    fail(ErrorKind::config_error, "no ring element named '" + v.get<std::string>() + "'");
  }
  fail(ErrorKind::config_error, "ring elements are integers (indices) or element names");
}

}  // namespace detail

/// Ideal from a descriptor: "R", "0", "(2,3)", a generator array, or {"gens": [...]}.
inline Ideal parse_ideal(const RingPtr& r, const json& d) {
  json gens;
  if (d.is_string()) {
    std::string s = detail::trim(d.get<std::string>());
    if (s == "R" || s == "(1)" || s == "1") return unit_ideal(r);
    if (s == "0" || s == "(0)" || s.empty()) return zero_ideal(r);
    if (s.front() != '(' || s.back() != ')') fail(ErrorKind::config_error, "bad ideal '" + s + "'");
    gens = json::array();
    for (const auto& part : detail::split_top(s.substr(1, s.size() - 2))) {
      if (part.empty()) continue;
      bool numeric = std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(c) || c == '-'; });
      if (numeric) gens.push_back(detail::to_long(part, "ideal generator"));
      else gens.push_back(part);
    }
  } else if (d.is_array()) {
    gens = d;
  } else if (d.is_object() && d.contains("gens") && d["gens"].is_array()) {
    gens = d["gens"];
  } else {
    fail(ErrorKind::config_error, "ideal must be \"R\", \"0\", \"(g,...)\", an array, or {\"gens\": [...]}");
  }
  std::vector<Elem> g;
  for (const auto& v : gens) g.push_back(detail::parse_element(*r, v));
  return ideal_generated(r, g);
}

/// A validated scenario.
struct Scenario {
  RingPtr ring;
  unsigned n = 3;
  std::string check;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, std::string> subgroups;  // F, H, expect for the centraliser check
  SampleSpec sample;
  std::string h_choice = "all";
  unsigned x_samples = 100;
  unsigned workers = 1;
  Caps caps;
  json echo;
};

namespace detail {

inline const std::set<std::string>& known_keys() {
  static const std::set<std::string> k = {"ring", "n",    "ideals",  "check",     "mode",   "samples",
                                          "seed", "word_length", "caps", "H", "x_samples", "workers",
                                          "F", "expect"};
  return k;
}

inline std::vector<std::string> required_ideals(const std::string& check) {
  if (check == "lemma1") return {"A"};
  if (check == "k1" || check == "z-group") return {"I"};
  if (check == "ideal-identities" || check == "level-identity" || check == "centraliser") return {};
  return {"A", "B"};
}

}  // namespace detail

/// Parses and validates a config; every violation is reported in one config-error.
inline Scenario parse_scenario(const json& cfg) {
  std::vector<std::string> errs;
  auto guard = [&](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      errs.push_back(e.what());
    }
  };
  Scenario sc;
  if (!cfg.is_object()) fail(ErrorKind::config_error, "config must be an object");
  for (auto it = cfg.begin(); it != cfg.end(); ++it)
    if (!detail::known_keys().count(it.key())) errs.push_back("unknown key '" + it.key() + "'");

  if (!cfg.contains("ring")) errs.push_back("missing 'ring'");
  else guard([&] { sc.ring = parse_ring(cfg["ring"]); });

  if (!cfg.contains("check") || !cfg["check"].is_string()) {
    errs.push_back("missing or non-string 'check'");
  } else {
    sc.check = cfg["check"];
    const auto& ids = check_ids();
    if (std::find(ids.begin(), ids.end(), sc.check) == ids.end()) errs.push_back("unknown check '" + sc.check + "'");
  }

  auto uint_field = [&](const char* key, auto& out, std::uint64_t lo, std::uint64_t hi) {
    if (!cfg.contains(key)) return;
    const auto& v = cfg[key];
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      errs.push_back(std::string("'") + key + "' must be a non-negative integer");
      return;
    }
    auto x = v.get<std::uint64_t>();
    if (x < lo || x > hi) {
      errs.push_back(std::string("'") + key + "' must be between " + std::to_string(lo) + " and " + std::to_string(hi));
      return;
    }
    out = static_cast<std::remove_reference_t<decltype(out)>>(x);
  };

  if (cfg.contains("caps")) {
    const auto& c = cfg["caps"];
    if (!c.is_object()) {
      errs.push_back("'caps' must be an object");
    } else {
      for (auto it = c.begin(); it != c.end(); ++it) {
        if (!it.value().is_number_integer() || it.value().get<long long>() <= 0) {
          errs.push_back("cap '" + it.key() + "' must be a positive integer");
          continue;
        }
        auto v = it.value().get<std::uint64_t>();
        if (it.key() == "subgroup") sc.caps.subgroup = v;
        else if (it.key() == "gl") sc.caps.gl = v;
        else if (it.key() == "pair") sc.caps.pair = v;
        else if (it.key() == "scan") sc.caps.scan = v;
        else if (it.key() == "ideals") sc.caps.ideals = v;
        else if (it.key() == "degree") sc.caps.degree = static_cast<unsigned>(std::min<std::uint64_t>(v, kMaxDegree));
        else errs.push_back("unknown cap '" + it.key() + "'");
      }
    }
  }

  if (!cfg.contains("n") && !(sc.check == "ideal-identities" || sc.check == "level-identity")) errs.push_back("missing 'n'");
  uint_field("n", sc.n, 2, sc.caps.degree);

  std::string mode = "exhaustive";
  if (cfg.contains("mode")) {
    if (!cfg["mode"].is_string() || (cfg["mode"] != "exhaustive" && cfg["mode"] != "sample"))
      errs.push_back("'mode' must be \"exhaustive\" or \"sample\"");
    else
      mode = cfg["mode"];
  }
  std::uint64_t samples = 100000;
  uint_field("samples", samples, 1, std::uint64_t{1} << 32);
  uint_field("seed", sc.sample.seed, 0, UINT64_MAX);
  uint_field("word_length", sc.sample.word_length, 1, 4096);
  uint_field("x_samples", sc.x_samples, 0, 1000000);
  uint_field("workers", sc.workers, 1, 256);
  if (mode == "sample") {
    sc.sample.samples = samples;
    if (sc.check != "theorem1" && sc.check != "theorem2")
      errs.push_back("sample mode applies only to theorem1 and theorem2");
  }
  if (cfg.contains("H")) {
    if (!cfg["H"].is_string()) {
      errs.push_back("'H' must be a string");
    } else {
      sc.h_choice = cfg["H"];
      if (sc.check == "centraliser") {
        sc.subgroups["H"] = sc.h_choice;
      } else if (sc.h_choice != "all" && sc.h_choice != "E(n,A)" && sc.h_choice != "E(n,R,A)" &&
                 sc.h_choice != "GL(n,R,A)") {
        errs.push_back("'H' must be one of all, E(n,A), E(n,R,A), GL(n,R,A)");
      }
    }
  }
  for (const char* key : {"F", "expect"})
    if (cfg.contains(key)) {
      if (cfg[key].is_string()) sc.subgroups[key] = cfg[key];
      else errs.push_back(std::string("'") + key + "' must be a subgroup expression string");
    }
  if (sc.check == "centraliser")
    for (const char* key : {"F", "H"})
      if (!sc.subgroups.count(key)) errs.push_back(std::string("centraliser check needs '") + key + "'");

  if (cfg.contains("ideals")) {
    if (!cfg["ideals"].is_object()) {
      errs.push_back("'ideals' must be an object");
    } else if (sc.ring) {
      for (auto it = cfg["ideals"].begin(); it != cfg["ideals"].end(); ++it)
        guard([&] {
          try {
            sc.ideals.emplace(it.key(), parse_ideal(sc.ring, it.value()));
          } catch (const Error& e) {
            fail(ErrorKind::config_error, "ideal " + it.key() + ": " + e.what());
          }
        });
    }
  }
  if (!sc.check.empty()) {
    auto req = detail::required_ideals(sc.check);
    for (const auto& name : req) {
      if (sc.ideals.count(name)) continue;
      if (name == "I" && sc.ideals.count("A")) continue;
      if (cfg.contains("ideals") && cfg["ideals"].is_object() && cfg["ideals"].contains(name)) continue;
      errs.push_back("check '" + sc.check + "' needs ideal '" + name + "'");
    }
    if (sc.check == "level-identity" && (sc.ideals.count("A") != sc.ideals.count("B")))
      errs.push_back("level-identity takes both A and B, or neither (all pairs)");
  }
  if (!errs.empty()) {
    std::string msg = "invalid config:";
    for (const auto& e : errs) msg += "\n  - " + e;
    fail(ErrorKind::config_error, msg);
  }

  sc.echo = json::object();
  sc.echo["ring"] = sc.ring->descriptor();
  sc.echo["n"] = sc.n;
  sc.echo["check"] = sc.check;
  sc.echo["mode"] = mode;
  json ids = json::object();
  for (const auto& [k, v] : sc.ideals) ids[k] = ideal_to_json(v);
  sc.echo["ideals"] = ids;
  if (sc.sample.samples) {
    sc.echo["samples"] = sc.sample.samples;
    sc.echo["word_length"] = sc.sample.word_length;
  }
  sc.echo["seed"] = sc.sample.seed;
  for (const auto& [k, v] : sc.subgroups) sc.echo[k] = v;
  if (sc.check == "theorem1") sc.echo["H"] = sc.h_choice;
  if (sc.check == "lemma4") sc.echo["x_samples"] = sc.x_samples;
  return sc;
}

inline Scenario parse_scenario_text(const std::string& text) {
  json cfg;
  try {
    cfg = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::config_error, std::string("config is not valid JSON: ") + e.what());
  }
  return parse_scenario(cfg);
}

/// Evaluates a subgroup expression: "E(n,I)", "E(n,R,I)", "GL(n,R,I)", "GL(n,R)", "E(n,R)",
/// "C(n,R,I)", or "[X,Y]". I is a named ideal of the scenario or a literal such as "(2)", "R", "0".
inline SubgroupSet parse_subgroup(Workspace& ws, const std::string& text,
                                  const std::map<std::string, Ideal>& named = {}) {
  const std::string s = detail::trim(text);
  const RingPtr& r = ws.ring();
  auto ideal = [&](const std::string& tok) {
    auto it = named.find(tok);
    if (it != named.end()) return it->second;
    return parse_ideal(r, json(tok));
  };
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
    auto parts = detail::split_top(s.substr(1, s.size() - 2));
    if (parts.size() != 2) fail(ErrorKind::config_error, "commutator expression needs two subgroups: " + s);
    SubgroupSet a = parse_subgroup(ws, parts[0], named);
    SubgroupSet b = parse_subgroup(ws, parts[1], named);
    return mixed_commutator(a, b, ws.caps());
  }
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') fail(ErrorKind::config_error, "bad subgroup expression '" + s + "'");
  const std::string head = s.substr(0, open);
  auto args = detail::split_top(s.substr(open + 1, s.size() - open - 2));
  if (args.empty() || (args[0] != "n" && args[0] != std::to_string(ws.n())))
    fail(ErrorKind::config_error, "first argument of '" + s + "' must be n or " + std::to_string(ws.n()));
  if (head == "E" && args.size() == 2) {
    if (args[1] == "R") return ws.elementary(unit_ideal(r));
    return ws.elementary(ideal(args[1]));
  }
  if (args.size() < 2 || args[1] != "R") fail(ErrorKind::config_error, "bad subgroup expression '" + s + "'");
  const Ideal i = args.size() == 2 ? unit_ideal(r) : ideal(args[2]);
  if (args.size() > 3) fail(ErrorKind::config_error, "too many arguments in '" + s + "'");
  if (head == "E") return ws.relative_elementary(i);
  if (head == "GL") return ws.principal(i);
  if (head == "C") return congruence_subgroup(ws.gl(), make_congruence(Family::full, ws.n(), i));
  fail(ErrorKind::config_error, "unknown subgroup constructor '" + head + "'");
}

namespace detail {

// C_GL(F, H) for subgroup expressions; generators of F suffice when H is normal in GL.
inline VerificationReport run_centraliser(Workspace& ws, const Scenario& sc) {
  VerificationReport base;
  base.claim = "centraliser";
  base.ring = ws.ring()->descriptor();
  base.n = ws.n();
  base.verdict = Verdict::informational;
  return guarded(std::move(base), [&](VerificationReport& rep) {
    SubgroupSet f = parse_subgroup(ws, sc.subgroups.at("F"), sc.ideals);
    SubgroupSet h = parse_subgroup(ws, sc.subgroups.at("H"), sc.ideals);
    const auto& g = ws.gl().members();
    std::vector<Mat> gl_gens = generating_set(ws.gl());
    const bool normal = is_normalised_by(h, gl_gens);
    auto in_h = [&](const Mat& m) { return h.contains(m); };
    Mask c;
    if (normal) {
      c = relative_centraliser(g, generating_set(f), in_h, ws.workers());
    } else {
      if (sat_mul(g.size(), f.size()) > ws.caps().scan)
        fail(ErrorKind::cap_exceeded, "H is not normal in GL and the all-members scan exceeds the scan cap");
      c = relative_centraliser(g, f.members(), in_h, ws.workers());
    }
    rep.checked_count = g.size();
    rep.add_finding(json{{"F", subgroup_summary(f)},
                         {"H", subgroup_summary(h)},
                         {"H_normal_in_GL", normal},
                         {"used", normal ? "generators of F" : "all members of F"},
                         {"centraliser_size", mask_count(c)}});
    if (sc.subgroups.count("expect")) {
      SubgroupSet want = parse_subgroup(ws, sc.subgroups.at("expect"), sc.ideals);
      rep.verdict = Verdict::pass;
      for (std::size_t k = 0; k < g.size(); ++k)
        if (bool(c[k]) != want.contains(g[k])) {
          rep.add_witness(json{{"matrix", to_text(g[k])}, {"in_centraliser", bool(c[k])},
                               {"in_expected", want.contains(g[k])}});
          return;
        }
    }
  });
}

inline const Ideal& ideal_or(const Scenario& sc, const char* key, const char* fallback) {
  auto it = sc.ideals.find(key);
  if (it == sc.ideals.end()) it = sc.ideals.find(fallback);
  return it->second;
}

}  // namespace detail

/// Runs a validated scenario. Errors other than caps and hypotheses propagate.
inline VerificationReport run_scenario(const Scenario& sc) {
  const std::string& c = sc.check;
  VerificationReport rep;
  if (c == "ideal-identities") {
    rep = verify_ideal_identities(sc.ring, sc.caps.ideals);
  } else if (c == "level-identity") {
    rep = sc.ideals.count("A") ? verify_level_identity(sc.ideals.at("A"), sc.ideals.at("B"))
                               : verify_level_identity_all(sc.ring, sc.caps.ideals);
  } else {
    Workspace ws(sc.ring, sc.n, sc.caps, sc.workers);
    auto A = [&] { return sc.ideals.at("A"); };
    auto B = [&] { return sc.ideals.at("B"); };
    if (c == "theorem1") rep = verify_theorem1(ws, A(), B(), sc.sample, sc.h_choice);
    else if (c == "theorem2") rep = verify_theorem2(ws, A(), B(), sc.sample);
    else if (c == "lemma1") rep = verify_lemma1(ws, A());
    else if (c == "lemma2") rep = verify_lemma2(ws, A(), B());
    else if (c == "lemma3") rep = verify_lemma3(ws, A(), B());
    else if (c == "lemma4") rep = verify_lemma4(ws, A(), B(), sc.x_samples, sc.sample.seed);
    else if (c == "lemma5") rep = verify_lemma5(ws, A(), B());
    else if (c == "lemma6") rep = verify_lemma6(ws, A(), B());
    else if (c == "lemma7") rep = verify_lemma7(ws, A(), B());
    else if (c == "lemma8") rep = verify_lemma8(ws, A(), B());
    else if (c == "k1") rep = k1_report(ws, detail::ideal_or(sc, "I", "A"));
    else if (c == "z-group") rep = verify_z_group(ws, detail::ideal_or(sc, "I", "A"));
    else if (c == "explore-lemma9") rep = explore_lemma9(ws, A(), B());
    else if (c == "centraliser") rep = detail::run_centraliser(ws, sc);
    else fail(ErrorKind::config_error, "unknown check '" + c + "'");
  }
  rep.n = (c == "ideal-identities" || c == "level-identity") ? 0 : sc.n;
  rep.scenario = sc.echo;
  return rep;
}

}  // namespace relgl
