#pragma once

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "relgl/ring.hpp"

namespace relgl {

enum class Verdict { pass, fail, hypothesis_violated, refused_cap, informational };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::hypothesis_violated: return "hypothesis-violated";
    case Verdict::refused_cap: return "refused-cap";
    case Verdict::informational: return "informational";
  }
  return "unknown";
}

inline int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass:
    case Verdict::informational: return 0;
    case Verdict::fail: return 2;
    case Verdict::hypothesis_violated: return 3;
    case Verdict::refused_cap: return 4;
  }
  return 1;
}

// fail > refused-cap > hypothesis-violated > informational > pass
inline int severity(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::informational: return 1;
    case Verdict::hypothesis_violated: return 2;
    case Verdict::refused_cap: return 3;
    case Verdict::fail: return 4;
  }
  return 4;
}

inline Verdict worst(Verdict a, Verdict b) { return severity(a) >= severity(b) ? a : b; }

/// Structured outcome of one claim check.
struct VerificationReport {
  std::string claim;
  // Normalised scenario that produced the report, when run from a config.
  json scenario;
  json ring;
  unsigned n = 0;
  json ideals = json::object();
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::uint64_t checked_count = 0;
  Verdict verdict = Verdict::pass;
  json witnesses = json::array();
  // Non-failing observations: strictness witnesses, sizes, relations.
  json findings = json::array();
  std::int64_t wall_time_ms = 0;
  std::string message;

  void add_witness(json w) {
    witnesses.push_back(std::move(w));
    verdict = Verdict::fail;
  }
  void add_finding(json f) { findings.push_back(std::move(f)); }
  bool passed() const { return verdict == Verdict::pass || verdict == Verdict::informational; }

  json to_json(bool with_timing = true) const {
    json j;
    j["claim"] = claim;
    if (!scenario.is_null()) j["scenario"] = scenario;
    j["ring"] = ring;
    j["n"] = n;
    j["ideals"] = ideals;
    j["mode"] = mode;
    j["seed"] = seed;
    j["checked_count"] = checked_count;
    j["verdict"] = to_string(verdict);
    j["witnesses"] = witnesses;
    j["findings"] = findings;
    if (!message.empty()) j["message"] = message;
    if (with_timing) j["wall_time_ms"] = wall_time_ms;
    return j;
  }

  std::string to_human() const {
    std::ostringstream os;
    os << claim << ": " << to_string(verdict) << "\n";
    os << "  ring " << ring.dump() << ", n = " << n << ", mode " << mode << ", seed " << seed << "\n";
    if (!ideals.empty()) os << "  ideals " << ideals.dump() << "\n";
    os << "  checked " << checked_count << " in " << wall_time_ms << " ms\n";
    if (!message.empty()) os << "  " << message << "\n";
    for (const auto& f : findings) os << "  finding: " << f.dump() << "\n";
    for (const auto& w : witnesses) os << "  WITNESS: " << w.dump() << "\n";
    return os.str();
  }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace relgl
