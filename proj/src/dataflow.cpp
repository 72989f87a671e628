#include "towers/dataflow.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace towers {

ControlFlowGraph ControlFlowGraph::make(
    std::vector<std::string> nodes, const std::vector<std::pair<std::string, std::string>>& edges,
    std::vector<std::vector<std::string>> gen, std::vector<std::vector<std::string>> kill) {
  ControlFlowGraph cfg;
  cfg.nodes = std::move(nodes);
  const std::size_t n = cfg.nodes.size();
  if (n == 0) {
    throw InvalidCfg("control-flow graph needs at least one node");
  }
  std::set<std::string> seen;
  for (const auto& node : cfg.nodes) {
    if (node.empty() || !seen.insert(node).second) {
      throw InvalidCfg("node ids must be nonempty and unique");
    }
  }
  if (gen.size() != n || kill.size() != n) {
    throw InvalidCfg("gen/kill must list one set per node");
  }
  cfg.gen = std::move(gen);
  cfg.kill = std::move(kill);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& def : cfg.gen[i]) {
      if (std::find(cfg.kill[i].begin(), cfg.kill[i].end(), def) != cfg.kill[i].end()) {
        throw InvalidCfg("gen and kill overlap at node " + cfg.nodes[i] + " on " + def);
      }
    }
  }
  cfg.preds.assign(n, {});
  for (const auto& [from, to] : edges) {
    cfg.preds[static_cast<std::size_t>(cfg.index_of(to))].push_back(cfg.index_of(from));
  }
  return cfg;
}

int ControlFlowGraph::index_of(std::string_view node) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == node) {
      return static_cast<int>(i);
    }
  }
  throw InvalidCfg("unknown node: " + std::string(node));
}

std::vector<std::string> ControlFlowGraph::definitions() const {
  std::set<std::string> defs;
  for (const auto& set : gen) {
    defs.insert(set.begin(), set.end());
  }
  for (const auto& set : kill) {
    defs.insert(set.begin(), set.end());
  }
  return {defs.begin(), defs.end()};
}

ReachingProblem make_reaching_problem(const ControlFlowGraph& cfg) {
  const std::size_t n = cfg.nodes.size();
  std::vector<std::string> defs = cfg.definitions();
  if (defs.size() > 64) {
    throw InvalidCfg("at most 64 distinct definitions are supported");
  }
  std::map<std::string, int> def_bit;
  for (std::size_t i = 0; i < defs.size(); ++i) {
    def_bit.emplace(defs[i], static_cast<int>(i));
  }
  auto to_mask = [&](const std::vector<std::string>& set) {
    std::uint64_t mask = 0;
    for (const auto& def : set) {
      mask |= std::uint64_t{1} << def_bit.at(def);
    }
    return mask;
  };
  std::vector<std::uint64_t> gen_mask(n), kill_mask(n);
  for (std::size_t i = 0; i < n; ++i) {
    gen_mask[i] = to_mask(cfg.gen[i]);
    kill_mask[i] = to_mask(cfg.kill[i]);
  }

  PowersetProductProvider provider(std::vector<int>(n, static_cast<int>(defs.size())),
                                   std::vector<std::vector<std::string>>(n, defs));

  // One coordinate per node, holding its OUT set. The step joins with the
  // previous state, which keeps the map progressive on the whole lattice.
  DynamicMap step{"reaching-definitions-step",
                  [preds = cfg.preds, gen_mask, kill_mask, n](const Element& e) {
                    const BitTuple& outs = std::get<BitTuple>(e);
                    BitTuple next = outs;
                    for (std::size_t i = 0; i < n; ++i) {
                      std::uint64_t in = 0;
                      for (int pred : preds[i]) {
                        in |= outs.coords[static_cast<std::size_t>(pred)];
                      }
                      next.coords[i] |= gen_mask[i] | (in & ~kill_mask[i]);
                    }
                    return Element{std::move(next)};
                  }};

  return ReachingProblem{std::move(provider), std::move(step), std::move(defs)};
}

DataflowResult reaching_definitions(const ControlFlowGraph& cfg) {
  const std::size_t n = cfg.nodes.size();
  const ReachingProblem problem = make_reaching_problem(cfg);
  const std::vector<std::string>& defs = problem.definitions;

  const auto result = build_tower_transfinite(problem.provider, problem.step,
                                              Element{problem.provider.bottom()}, TowerBudget{});
  const auto* cert = std::get_if<FixedPointCertificate>(&result);
  if (!cert) {
    throw Error("reaching definitions did not reach a fixed point within budget");
  }
  const BitTuple& fixed = std::get<BitTuple>(cert->omega);

  auto to_defs = [&](std::uint64_t mask) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < defs.size(); ++i) {
      if ((mask >> i) & 1U) {
        out.push_back(defs[i]);
      }
    }
    return out;
  };

  DataflowResult out;
  out.trace_stages = cert->trace.stages.size();
  out.state.in.resize(n);
  out.state.out.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t in = 0;
    for (int pred : cfg.preds[i]) {
      in |= fixed.coords[static_cast<std::size_t>(pred)];
    }
    out.state.in[i] = to_defs(in);
    out.state.out[i] = to_defs(fixed.coords[i]);
  }
  return out;
}

ControlFlowGraph cfg_fixture(std::string_view name) {
  if (name == "single") {
    return ControlFlowGraph::make({"n1"}, {}, {{"d1"}}, {{}});
  }
  if (name == "chain2") {
    return ControlFlowGraph::make({"n1", "n2"}, {{"n1", "n2"}}, {{"d1"}, {"d2"}}, {{}, {}});
  }
  if (name == "diamond") {
    return ControlFlowGraph::make(
        {"n1", "n2", "n3", "n4"},
        {{"n1", "n2"}, {"n1", "n3"}, {"n2", "n4"}, {"n3", "n4"}},
        {{"d1"}, {}, {}, {"d4"}}, {{}, {}, {}, {"d1"}});
  }
  throw InvalidCfg("no such fixture: " + std::string(name));
}

}  // namespace towers
