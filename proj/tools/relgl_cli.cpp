// relgl: command-line front end for the verifiers.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "relgl/relgl.hpp"

namespace {

using namespace relgl;

std::string read_config(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ifstream in(arg);
  if (!in) fail(ErrorKind::config_error, "cannot read config file '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json describe_ring(const RingPtr& r) {
  json elems = json::array();
  for (Elem x : r->elements()) {
    json e{{"index", x}, {"name", r->name(x)}, {"unit", r->is_unit(x)}};
    if (auto inv = r->inverse(x)) e["inverse"] = *inv;
    elems.push_back(std::move(e));
  }
  json units = json::array();
  for (Elem u : r->units()) units.push_back(u);
  return json{{"ring", r->descriptor()},
              {"size", r->size()},
              {"commutative", r->is_commutative()},
              {"zero", r->zero()},
              {"one", r->one()},
              {"units", units},
              {"elements", elems}};
}

json ideal_ops(const RingPtr& r, std::size_t cap) {
  auto ideals = enumerate_ideals(r, cap);
  json list = json::array();
  for (const auto& i : ideals) {
    json j = ideal_to_json(i);
    j["members"] = members_json(i.members());
    list.push_back(std::move(j));
  }
  json table = json::array();
  for (const auto& a : ideals)
    for (const auto& b : ideals)
      table.push_back(json{{"A", a.label()},
                           {"B", b.label()},
                           {"A+B", ideal_sum(a, b).label()},
                           {"A∩B", ideal_intersection(a, b).label()},
                           {"AB", ideal_product(a, b).label()},
                           {"A∘B", symmetrised_product(a, b).label()},
                           {"(A:B)", ideal_quotient(a, b).label()}});
  return json{{"ring", r->descriptor()}, {"ideals", list}, {"operations", table}};
}

void print_table(const json& d) {
  std::cout << "ring " << d["ring"].dump() << ", " << d["size"] << " elements, "
            << (d["commutative"].get<bool>() ? "commutative" : "noncommutative") << "\n";
  std::cout << "index  name  unit  inverse\n";
  for (const auto& e : d["elements"]) {
    std::cout << e["index"].get<int>() << "  " << e["name"].get<std::string>() << "  "
              << (e["unit"].get<bool>() ? "yes" : "no");
    if (e.contains("inverse")) std::cout << "  " << e["inverse"].get<int>();
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative centralisers and congruence subgroups of GL(n, R) over finite rings"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned workers = 0;
  std::uint64_t seed = 0, cap = 0;
  std::string format = "human";
  bool have_seed = false;
  app.add_option("--workers", workers, "Worker threads (verdicts do not depend on this)");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for sampling and random words");
  app.add_option("--cap", cap, "Set every size cap to this value");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine"}));

  std::string config;
  auto* run = app.add_subcommand("run", "Run one scenario config (file path or inline JSON)");
  run->add_option("config", config)->required();

  bool with_reports = false;
  std::vector<int> only;
  auto* accept = app.add_subcommand("accept", "Run the acceptance suite");
  accept->add_flag("--reports", with_reports, "Include every sub-report in machine output");
  accept->add_option("--only", only, "Run only these criterion ids");

  std::string descriptor;
  auto* describe = app.add_subcommand("describe-ring", "Print the index/element table of a ring");
  describe->add_option("descriptor", descriptor)->required();
  auto* ops = app.add_subcommand("ideal-ops", "List the ideals of a ring and their sums, products and quotients");
  ops->add_option("descriptor", descriptor)->required();

  CLI11_PARSE(app, argc, argv);
  have_seed = seed_opt->count() > 0;
  const bool machine = format == "machine";

  try {
    if (*run) {
      json cfg;
      try {
        cfg = json::parse(read_config(config));
      } catch (const json::exception& e) {
        fail(ErrorKind::config_error, std::string("config is not valid JSON: ") + e.what());
      }
      if (have_seed) cfg["seed"] = seed;
      if (workers) cfg["workers"] = workers;
      if (cap) {
        Caps c = Caps::uniform(cap);
        cfg["caps"] = json{{"subgroup", c.subgroup}, {"gl", c.gl}, {"pair", c.pair}, {"scan", c.scan},
                           {"ideals", c.ideals}};
      }
      Scenario sc = parse_scenario(cfg);
      VerificationReport rep = run_scenario(sc);
      if (machine) std::cout << rep.to_json().dump(2) << "\n";
      else std::cout << rep.to_human();
      return exit_code(rep.verdict);
    }
    if (*accept) {
      AcceptanceOptions opt;
      if (workers) opt.workers = workers;
      if (have_seed) opt.seed = seed;
      if (cap) opt.caps = Caps::uniform(cap);
      opt.only = only;
      auto results = run_acceptance_suite(opt, [&](const CriterionResult& r) {
        if (!machine) std::cout << acceptance_line(r) << std::endl;
      });
      const Verdict v = overall(results);
      if (machine) std::cout << acceptance_summary(results, with_reports).dump(2) << "\n";
      else std::cout << "overall: " << to_string(v) << "\n";
      return exit_code(v);
    }
    if (*describe || *ops) {
      RingPtr r = parse_ring(json(descriptor));
      if (*describe) {
        json d = describe_ring(r);
        if (machine) std::cout << d.dump(2) << "\n";
        else print_table(d);
      } else {
        json d = ideal_ops(r, cap ? cap : Caps{}.ideals);
        if (machine) {
          std::cout << d.dump(2) << "\n";
        } else {
          std::cout << "ideals of " << d["ring"].dump() << ":\n";
          for (const auto& i : d["ideals"]) std::cout << "  " << i["label"].get<std::string>() << "  " << i["members"].dump() << "\n";
          for (const auto& o : d["operations"]) std::cout << "  " << o.dump() << "\n";
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::cap_exceeded: return 4;
      case ErrorKind::hypothesis_violated: return 3;
      default: return 1;
    }
  }
  return 0;
}
