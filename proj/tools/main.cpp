// Command-line front end: poset validation and rendering, tower
// construction and checking, maximal-element search, corpus verification,
// transfinite ordinal demos, and the dataflow demo.
//
// Exit codes: 0 success, 1 domain error (axiom violations, failed checks),
// 2 usage or schema errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "towers/dataflow.hpp"
#include "towers/formats.hpp"
#include "towers/maximality.hpp"
#include "towers/oracle.hpp"
#include "towers/ordinal.hpp"
#include "towers/poset.hpp"
#include "towers/provider.hpp"
#include "towers/tower.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot read file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

void print_trace(const towers::PosetProvider& host, const towers::TowerTrace& trace) {
  for (const auto& stage : trace.stages) {
    std::cout << "  stage " << stage.index.to_string() << " ["
              << towers::stage_kind_name(stage.kind) << "] " << host.format(stage.element)
              << "\n";
  }
}

void print_certificate(const towers::PosetProvider& host,
                       const towers::FixedPointCertificate& cert) {
  print_trace(host, cert.trace);
  std::cout << "omega = " << host.format(cert.omega) << "\n";
  std::cout << "checks: omega-in-tower=" << (cert.checks.omega_in_tower ? "yes" : "no")
            << " omega-fixed=" << (cert.checks.omega_fixed ? "yes" : "no")
            << " omega-is-lub=" << (cert.checks.omega_is_lub ? "yes" : "no") << "\n";
}

int cmd_poset_validate(const std::string& file) {
  const auto p = towers::load_poset(read_file(file));
  std::cout << "OK " << (p.name().empty() ? "(unnamed)" : p.name()) << ": " << p.size()
            << " elements, " << p.strict_pairs().size() << " strict pairs\n";
  return 0;
}

int cmd_poset_dot(const std::string& file) {
  std::cout << towers::export_dot(towers::load_poset(read_file(file)));
  return 0;
}

int cmd_tower_build(const std::string& poset_file, const std::string& map_file,
                    const std::string& base, bool json) {
  const auto p = towers::load_poset(read_file(poset_file));
  const auto f = towers::parse_map_doc(read_file(map_file)).to_map(p);
  const auto cert = build_tower_finite(p, f, base);
  const towers::FinitePosetAdapter adapter(p);
  if (json) {
    std::cout << towers::certificate_to_json(adapter, cert) << "\n";
  } else {
    print_certificate(adapter, cert);
  }
  return cert.checks.all() ? 0 : 1;
}

int cmd_tower_check(const std::string& poset_file, const std::string& map_file,
                    const std::string& base, const std::string& candidate) {
  const auto p = towers::load_poset(read_file(poset_file));
  const auto f = towers::parse_map_doc(read_file(map_file)).to_map(p);
  const auto result = check_tower(p, f, base, split_commas(candidate));
  if (tower_check_passed(result)) {
    std::cout << "valid\n";
    return 0;
  }
  const auto& violation = std::get<towers::TowerViolation>(result);
  const char* condition = "well-order/base";
  if (violation.condition == towers::TowerViolation::Condition::Successor) {
    condition = "successor";
  } else if (violation.condition == towers::TowerViolation::Condition::Limit) {
    condition = "limit";
  }
  std::cout << "violation (" << condition << "): " << violation.witness << "\n";
  return 1;
}

int cmd_tower_enumerate(const std::string& poset_file, const std::string& map_file,
                        const std::string& base) {
  const auto p = towers::load_poset(read_file(poset_file));
  const auto f = towers::parse_map_doc(read_file(map_file)).to_map(p);
  const auto towers_found = enumerate_towers(p, f, base);
  for (const auto& trace : towers_found) {
    const auto member_labels = trace_members(p, trace).labels();
    for (std::size_t i = 0; i < member_labels.size(); ++i) {
      std::cout << (i == 0 ? "" : ",") << member_labels[i];
    }
    std::cout << "\n";
  }
  std::cout << towers_found.size() << " towers\n";
  return 0;
}

int cmd_maximal(const std::string& poset_file, std::string base, const std::string& strategy,
                std::uint64_t seed) {
  const auto p = towers::load_poset(read_file(poset_file));
  if (p.size() == 0) {
    throw towers::EmptySubset();
  }
  if (base.empty()) {
    base = p.label(0);
  }
  towers::ChoiceSelector sel = towers::ChoiceSelector::least_id();
  if (strategy == "random") {
    sel = towers::ChoiceSelector::seeded_random(seed);
  } else if (strategy != "least-id") {
    throw UsageError("unknown strategy: " + strategy);
  }
  const auto outcome = find_maximal(p, sel, base);
  std::cout << "maximal = " << outcome.maximal << "\n";
  const towers::FinitePosetAdapter adapter(p);
  print_trace(adapter, outcome.trace);
  std::cout << "cone-empty = " << (outcome.cone_verified_empty ? "yes" : "no") << "\n";
  return outcome.cone_verified_empty ? 0 : 1;
}

int cmd_oracle_run(int max_n, int random_n, int seeds, bool json) {
  towers::CorpusOptions options;
  if (random_n > 0) {
    options.random_n = random_n;
    for (int i = 1; i <= seeds; ++i) {
      options.random_seeds.push_back(static_cast<std::uint64_t>(i));
    }
  }
  const auto report = towers::verify_corpus(max_n, options);
  if (json) {
    std::cout << towers::report_to_json(report) << "\n";
  } else {
    for (const auto& counts : report.per_n) {
      std::cout << "n=" << counts.n << (counts.random ? " (random)" : "") << ": "
                << counts.posets << " posets, " << counts.progressive_maps
                << " progressive maps, " << counts.instances << " instances, "
                << counts.towers_compared << " tower pairs compared\n";
    }
    for (const auto& failure : report.failures) {
      std::cout << "FAIL [" << failure.check << "] poset=" << failure.poset
                << " map=" << failure.map << " base=" << failure.base << ": " << failure.detail
                << "\n";
    }
    std::cout << (report.ok() ? "all checks passed" : "FAILURES FOUND") << " ("
              << report.elapsed_seconds << "s)\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_ordinal_tower(const std::string& alpha, const std::string& base, int budget, bool json) {
  const towers::OrdinalIntervalProvider interval(towers::Ordinal::parse(alpha));
  const towers::Element start{towers::Ordinal::parse(base)};
  if (!interval.leq(start, towers::Element{interval.top()})) {
    throw UsageError("base lies above the interval top");
  }
  towers::TowerBudget limits;
  if (budget > 0) {
    limits.successor_steps_per_block = budget;
  }
  const auto result =
      build_tower_transfinite(interval, interval.clamped_successor(), start, limits);
  if (const auto* cert = std::get_if<towers::FixedPointCertificate>(&result)) {
    if (json) {
      std::cout << towers::certificate_to_json(interval, *cert) << "\n";
    } else {
      print_certificate(interval, *cert);
    }
    return 0;
  }
  const auto& exhausted = std::get<towers::BudgetExhausted>(result);
  if (!json) {
    print_trace(interval, exhausted.partial);
  }
  std::cout << "budget exhausted before a fixed point\n";
  return 1;
}

int cmd_demo_dataflow(const std::string& name) {
  const auto cfg = towers::cfg_fixture(name);
  const auto result = reaching_definitions(cfg);
  for (std::size_t i = 0; i < cfg.nodes.size(); ++i) {
    auto join = [](const std::vector<std::string>& defs) {
      std::string out = "{";
      for (std::size_t k = 0; k < defs.size(); ++k) {
        out += (k == 0 ? "" : ",") + defs[k];
      }
      return out + "}";
    };
    std::cout << cfg.nodes[i] << ": IN=" << join(result.state.in[i])
              << " OUT=" << join(result.state.out[i]) << "\n";
  }
  std::cout << "tower stages: " << result.trace_stages << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"well-ordered fixed-point towers on posets"};
  app.require_subcommand(1);

  // poset validate|dot
  auto* poset = app.add_subcommand("poset", "poset file operations");
  poset->require_subcommand(1);
  std::string poset_file;
  auto* validate = poset->add_subcommand("validate", "validate a poset document");
  validate->add_option("file", poset_file, "poset JSON document")->required();
  auto* dot = poset->add_subcommand("dot", "render the Hasse diagram as DOT");
  dot->add_option("file", poset_file, "poset JSON document")->required();

  // tower build|check|enumerate
  auto* tower = app.add_subcommand("tower", "build, check, and enumerate towers");
  tower->require_subcommand(1);
  std::string tower_poset, tower_map, tower_base, tower_candidate;
  bool tower_json = false;
  auto* build = tower->add_subcommand("build", "build the largest tower and its fixed point");
  build->add_option("--poset", tower_poset)->required();
  build->add_option("--map", tower_map)->required();
  build->add_option("--base", tower_base)->required();
  build->add_flag("--json", tower_json);
  auto* check = tower->add_subcommand("check", "check a candidate tower");
  check->add_option("--poset", tower_poset)->required();
  check->add_option("--map", tower_map)->required();
  check->add_option("--base", tower_base)->required();
  check->add_option("--candidate", tower_candidate, "comma-separated labels")->required();
  auto* enumerate = tower->add_subcommand("enumerate", "list all towers for a base");
  enumerate->add_option("--poset", tower_poset)->required();
  enumerate->add_option("--map", tower_map)->required();
  enumerate->add_option("--base", tower_base)->required();

  // maximal
  std::string max_poset, max_base, max_strategy = "least-id";
  std::uint64_t max_seed = 0;
  auto* maximal = app.add_subcommand("maximal", "find a maximal element by selector ascent");
  maximal->add_option("--poset", max_poset)->required();
  maximal->add_option("--base", max_base);
  maximal->add_option("--strategy", max_strategy, "least-id or random");
  maximal->add_option("--seed", max_seed);

  // oracle run
  auto* oracle = app.add_subcommand("oracle", "corpus verification");
  oracle->require_subcommand(1);
  int oracle_max_n = 3, oracle_random_n = 0, oracle_seeds = 10;
  bool oracle_json = false;
  auto* run = oracle->add_subcommand("run", "verify the desk-scale corpus");
  run->add_option("--max-n", oracle_max_n, "exhaustive poset size limit");
  run->add_option("--random-n", oracle_random_n, "random-mode poset size");
  run->add_option("--seeds", oracle_seeds, "number of random seeds");
  run->add_flag("--json", oracle_json);

  // ordinal tower
  auto* ordinal = app.add_subcommand("ordinal", "transfinite demos on ordinal intervals");
  ordinal->require_subcommand(1);
  std::string ord_alpha, ord_base = "0";
  int ord_budget = 0;
  bool ord_json = false;
  auto* ord_tower = ordinal->add_subcommand(
      "tower", "run the clamped successor to its fixed point");
  ord_tower->add_option("--alpha", ord_alpha, "interval top (w-grammar)")->required();
  ord_tower->add_option("--base", ord_base, "starting ordinal");
  ord_tower->add_option("--budget", ord_budget, "successor steps per block");
  ord_tower->add_flag("--json", ord_json);

  // demo dataflow
  auto* demo = app.add_subcommand("demo", "worked examples");
  demo->require_subcommand(1);
  std::string demo_cfg = "diamond";
  auto* dataflow = demo->add_subcommand("dataflow", "reaching definitions via the tower engine");
  dataflow->add_option("--cfg", demo_cfg, "single, chain2, or diamond");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) {
      return cmd_poset_validate(poset_file);
    }
    if (dot->parsed()) {
      return cmd_poset_dot(poset_file);
    }
    if (build->parsed()) {
      return cmd_tower_build(tower_poset, tower_map, tower_base, tower_json);
    }
    if (check->parsed()) {
      return cmd_tower_check(tower_poset, tower_map, tower_base, tower_candidate);
    }
    if (enumerate->parsed()) {
      return cmd_tower_enumerate(tower_poset, tower_map, tower_base);
    }
    if (maximal->parsed()) {
      return cmd_maximal(max_poset, max_base, max_strategy, max_seed);
    }
    if (run->parsed()) {
      return cmd_oracle_run(oracle_max_n, oracle_random_n, oracle_seeds, oracle_json);
    }
    if (ord_tower->parsed()) {
      return cmd_ordinal_tower(ord_alpha, ord_base, ord_budget, ord_json);
    }
    if (dataflow->parsed()) {
      return cmd_demo_dataflow(demo_cfg);
    }
  } catch (const towers::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const towers::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const towers::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
