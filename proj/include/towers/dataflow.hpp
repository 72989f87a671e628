#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "towers/provider.hpp"
#include "towers/tower.hpp"

namespace towers {

/// A small control-flow graph with per-node gen/kill definition sets.
struct ControlFlowGraph {
  std::vector<std::string> nodes;
  std::vector<std::vector<int>> preds;            // per node, predecessor indices
  std::vector<std::vector<std::string>> gen;      // per node
  std::vector<std::vector<std::string>> kill;     // per node, disjoint from gen

  /// Validates node references and gen/kill disjointness.
  static ControlFlowGraph make(std::vector<std::string> nodes,
                               const std::vector<std::pair<std::string, std::string>>& edges,
                               std::vector<std::vector<std::string>> gen,
                               std::vector<std::vector<std::string>> kill);

  int index_of(std::string_view node) const;
  /// All definition ids mentioned in gen/kill, sorted.
  std::vector<std::string> definitions() const;
};

/// Per-node IN/OUT sets, definitions sorted by id.
struct AnalysisState {
  std::vector<std::vector<std::string>> in;
  std::vector<std::vector<std::string>> out;

  bool operator==(const AnalysisState& other) const = default;
};

struct DataflowResult {
  AnalysisState state;
  std::size_t trace_stages = 0;
};

/// The instantiated fixed-point problem: one powerset coordinate per node
/// (holding that node's OUT set) and the accumulate-only global step.
struct ReachingProblem {
  PowersetProductProvider provider;
  DynamicMap step;
  std::vector<std::string> definitions;
};

ReachingProblem make_reaching_problem(const ControlFlowGraph& cfg);

/// Solves reaching definitions by running the tower construction on the
/// product-of-powersets provider: the global step joins each node's OUT
/// with gen(n) + (IN(n) - kill(n)) where IN(n) is the union of
/// predecessor OUTs, so the step is progressive and its fixed point is the
/// least solution of the usual equations.
DataflowResult reaching_definitions(const ControlFlowGraph& cfg);

/// Named demo fixtures: "single", "chain2", "diamond".
ControlFlowGraph cfg_fixture(std::string_view name);

}  // namespace towers
