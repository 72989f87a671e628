#include "towers/tower.hpp"

#include <algorithm>

namespace towers {

SelfMap::SelfMap(const FinitePoset& host, std::vector<int> table, std::string name)
    : host_(&host), table_(std::move(table)), name_(std::move(name)) {
  if (static_cast<int>(table_.size()) != host.size()) {
    throw IncompleteAssignment("(table size " + std::to_string(table_.size()) + " for " +
                               std::to_string(host.size()) + " elements)");
  }
  strictly_progressive_ = true;  // vacuously, until a counterexample
  for (int x = 0; x < host.size(); ++x) {
    const int fx = table_[static_cast<std::size_t>(x)];
    if (fx < 0 || fx >= host.size()) {
      throw UnknownElement("index " + std::to_string(fx));
    }
    if (!host.leq(x, fx)) {
      if (!progressive_witness_) {
        progressive_witness_ = x;
      }
      strictly_progressive_ = false;
    } else if (x == fx) {
      strictly_progressive_ = false;
    }
  }
}

SelfMap SelfMap::from_table(const FinitePoset& host,
                            const std::vector<std::pair<ElementLabel, ElementLabel>>& assignment,
                            std::string name) {
  std::vector<int> table(static_cast<std::size_t>(host.size()), -1);
  for (const auto& [from, to] : assignment) {
    const int src = host.index_of(from);
    const int dst = host.index_of(to);
    if (table[static_cast<std::size_t>(src)] != -1) {
      throw InvalidLabel("duplicate assignment for element " + from);
    }
    table[static_cast<std::size_t>(src)] = dst;
  }
  for (int x = 0; x < host.size(); ++x) {
    if (table[static_cast<std::size_t>(x)] == -1) {
      throw IncompleteAssignment(host.label(x));
    }
  }
  return SelfMap(host, std::move(table), std::move(name));
}

SelfMap SelfMap::from_indices(const FinitePoset& host, std::vector<int> table, std::string name) {
  return SelfMap(host, std::move(table), std::move(name));
}

SelfMap SelfMap::identity(const FinitePoset& host) {
  std::vector<int> table(static_cast<std::size_t>(host.size()));
  for (int x = 0; x < host.size(); ++x) {
    table[static_cast<std::size_t>(x)] = x;
  }
  return SelfMap(host, std::move(table), "identity");
}

ElementLabel SelfMap::apply(std::string_view x) const {
  return host_->label(apply(host_->index_of(x)));
}

std::string_view stage_kind_name(StageKind kind) {
  switch (kind) {
    case StageKind::Base:
      return "base";
    case StageKind::Successor:
      return "successor";
    case StageKind::Limit:
      return "limit";
  }
  return "?";
}

std::vector<Element> TowerTrace::elements() const {
  std::vector<Element> out;
  out.reserve(stages.size());
  for (const TowerStage& stage : stages) {
    out.push_back(stage.element);
  }
  return out;
}

bool tower_check_passed(const TowerCheck& check) {
  return std::holds_alternative<TowerValid>(check);
}

namespace {

void require_progressive(const FinitePoset& p, const SelfMap& f) {
  if (auto witness = f.progressive_witness()) {
    throw NotProgressive(p.label(*witness));
  }
}

}  // namespace

TowerCheck check_tower(const FinitePoset& p, const SelfMap& f, std::string_view base,
                       std::span<const ElementLabel> candidate) {
  if (candidate.empty()) {
    throw EmptySubset();
  }
  require_progressive(p, f);
  const int base_idx = p.index_of(base);
  std::vector<int> members;
  members.reserve(candidate.size());
  for (const auto& label : candidate) {
    members.push_back(p.index_of(label));
  }

  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    if (!p.lt(members[i], members[i + 1])) {
      return TowerViolation{TowerViolation::Condition::WellOrderBase,
                            "sequence not strictly ascending at (" + p.label(members[i]) + ", " +
                                p.label(members[i + 1]) + ")"};
    }
  }
  if (members.front() != base_idx) {
    return TowerViolation{TowerViolation::Condition::WellOrderBase,
                          "least element " + p.label(members.front()) + " != base " +
                              std::string(base)};
  }
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    const int expected = f.apply(members[i]);
    if (expected != members[i + 1]) {
      return TowerViolation{TowerViolation::Condition::Successor,
                            "succ(" + p.label(members[i]) + ") = " + p.label(members[i + 1]) +
                                " != f(" + p.label(members[i]) + ") = " + p.label(expected)};
    }
  }
  return TowerValid{};
}

TowerCheck check_tower(const PosetProvider& host, const DynamicMap& f, const Element& base,
                       const TowerTrace& candidate) {
  if (candidate.stages.empty()) {
    throw EmptySubset();
  }
  const auto& stages = candidate.stages;
  for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
    if (!(stages[i].index < stages[i + 1].index)) {
      throw NotAscending("stage indices are not strictly increasing at position " +
                         std::to_string(i + 1));
    }
  }

  if (!stages.front().index.is_zero() || stages.front().kind != StageKind::Base) {
    return TowerViolation{TowerViolation::Condition::WellOrderBase,
                          "first stage must be the base stage at index 0"};
  }
  if (!(stages.front().element == base) || !(candidate.base == base)) {
    return TowerViolation{TowerViolation::Condition::WellOrderBase,
                          "least element " + host.format(stages.front().element) + " != base " +
                              host.format(base)};
  }

  for (std::size_t i = 1; i < stages.size(); ++i) {
    const TowerStage& prev = stages[i - 1];
    const TowerStage& cur = stages[i];
    if (!host.lt(prev.element, cur.element)) {
      return TowerViolation{TowerViolation::Condition::WellOrderBase,
                            "elements not strictly ascending at stage " + cur.index.to_string()};
    }
    if (cur.index == prev.index.successor()) {
      if (cur.kind != StageKind::Successor) {
        throw NotAscending("stage " + cur.index.to_string() +
                           " has a successor index but is marked " +
                           std::string(stage_kind_name(cur.kind)));
      }
      const Element expected = f.apply(prev.element);
      if (!(expected == cur.element)) {
        return TowerViolation{TowerViolation::Condition::Successor,
                              "succ(" + host.format(prev.element) + ") = " +
                                  host.format(cur.element) + " != f(" +
                                  host.format(prev.element) + ") = " + host.format(expected)};
      }
      continue;
    }
    // Sampled records may only jump by omega; anything else cannot be
    // verified against the limit condition from the record alone.
    if (!(cur.index == prev.index.plus_omega()) || cur.kind != StageKind::Limit) {
      throw NotAscending("stage " + cur.index.to_string() +
                         " must either succeed or omega-jump stage " + prev.index.to_string());
    }
    const auto orbit_lub = host.omega_orbit_lub(prev.element, f);
    if (!orbit_lub) {
      throw AccelerationUnavailable(f.name);
    }
    if (!(*orbit_lub == cur.element)) {
      return TowerViolation{TowerViolation::Condition::Limit,
                            "limit stage " + cur.index.to_string() + " = " +
                                host.format(cur.element) + " != lub of earlier stages = " +
                                host.format(*orbit_lub)};
    }
  }
  return TowerValid{};
}

FixedPointCertificate build_tower_finite(const FinitePoset& p, const SelfMap& f,
                                         std::string_view base) {
  require_progressive(p, f);
  const int base_idx = p.index_of(base);

  TowerTrace trace;
  trace.base = Element{base_idx};
  trace.stages.push_back(TowerStage{Ordinal(), Element{base_idx}, StageKind::Base});

  std::vector<int> members{base_idx};
  int current = base_idx;
  Ordinal index;
  while (f.apply(current) != current) {
    current = f.apply(current);
    index = index.successor();
    trace.stages.push_back(TowerStage{index, Element{current}, StageKind::Successor});
    members.push_back(current);
  }

  FixedPointCertificate cert;
  cert.omega = Element{current};
  cert.trace = std::move(trace);
  cert.checks.omega_in_tower =
      std::find(members.begin(), members.end(), current) != members.end();
  cert.checks.omega_fixed = f.apply(current) == current;
  const auto lub = p.lub(members);
  cert.checks.omega_is_lub = lub.has_value() && *lub == current;
  return cert;
}

TransfiniteResult build_tower_transfinite(const PosetProvider& host, const DynamicMap& f,
                                          const Element& base, const TowerBudget& budget) {
  if (budget.successor_steps_per_block <= 0) {
    throw Error("successor step budget must be positive");
  }

  TowerTrace trace;
  trace.base = base;
  trace.stages.push_back(TowerStage{Ordinal(), base, StageKind::Base});

  Element current = base;
  Ordinal index;
  int accelerations = 0;

  auto certify = [&](Element omega) -> FixedPointCertificate {
    FixedPointCertificate cert;
    cert.checks.omega_in_tower = false;
    for (const TowerStage& stage : trace.stages) {
      if (stage.element == omega) {
        cert.checks.omega_in_tower = true;
        break;
      }
    }
    cert.checks.omega_fixed = f.apply(omega) == omega;
    const auto lub = host.lub_of_ascent(trace.elements());
    cert.checks.omega_is_lub = lub.has_value() && *lub == omega;
    cert.omega = std::move(omega);
    cert.trace = std::move(trace);
    return cert;
  };

  while (true) {
    int steps = 0;
    while (steps < budget.successor_steps_per_block) {
      Element next = f.apply(current);
      if (next == current) {
        return certify(std::move(current));
      }
      if (!host.leq(current, next)) {
        throw NotProgressive(host.format(current));
      }
      index = index.successor();
      trace.stages.push_back(TowerStage{index, next, StageKind::Successor});
      current = std::move(next);
      ++steps;
    }
    if (accelerations >= budget.max_accelerations) {
      return BudgetExhausted{std::move(trace)};
    }
    const auto orbit_lub = host.omega_orbit_lub(current, f);
    if (!orbit_lub) {
      throw AccelerationUnavailable(f.name);
    }
    if (!host.lt(current, *orbit_lub)) {
      throw Error("orbit lub " + host.format(*orbit_lub) + " is not strictly above " +
                  host.format(current));
    }
    ++accelerations;
    index = index.plus_omega();
    trace.stages.push_back(TowerStage{index, *orbit_lub, StageKind::Limit});
    current = *orbit_lub;
  }
}

std::string_view segment_order_name(SegmentOrder order) {
  switch (order) {
    case SegmentOrder::Equal:
      return "equal";
    case SegmentOrder::FirstInitialInSecond:
      return "first-initial-in-second";
    case SegmentOrder::SecondInitialInFirst:
      return "second-initial-in-first";
    case SegmentOrder::Incomparable:
      return "incomparable";
  }
  return "?";
}

SegmentRelation compare_towers(const OrderedSubset& first, const OrderedSubset& second) {
  if (first.host != second.host) {
    throw HostMismatch();
  }
  if (first.empty() || second.empty()) {
    throw EmptySubset();
  }
  if (first.members.front() != second.members.front()) {
    throw BaseMismatch(first.host->label(first.members.front()),
                       second.host->label(second.members.front()));
  }

  std::size_t agreement = 0;
  const std::size_t common = std::min(first.size(), second.size());
  while (agreement < common && first.members[agreement] == second.members[agreement]) {
    ++agreement;
  }

  SegmentRelation relation;
  relation.common_prefix =
      OrderedSubset{first.host, std::vector<int>(first.members.begin(),
                                                 first.members.begin() +
                                                     static_cast<std::ptrdiff_t>(agreement))};
  if (agreement == first.size() && agreement == second.size()) {
    relation.order = SegmentOrder::Equal;
  } else if (agreement == first.size()) {
    relation.order = SegmentOrder::FirstInitialInSecond;
  } else if (agreement == second.size()) {
    relation.order = SegmentOrder::SecondInitialInFirst;
  } else {
    relation.order = SegmentOrder::Incomparable;
  }
  return relation;
}

OrderedSubset trace_members(const FinitePoset& p, const TowerTrace& trace) {
  OrderedSubset out;
  out.host = &p;
  out.members.reserve(trace.stages.size());
  for (const TowerStage& stage : trace.stages) {
    out.members.push_back(std::get<int>(stage.element));
  }
  return out;
}

std::vector<TowerTrace> enumerate_towers(const FinitePoset& p, const SelfMap& f,
                                         std::string_view base) {
  constexpr int kMaxElements = 12;
  if (p.size() > kMaxElements) {
    throw TooLarge("tower enumeration scans all element subsets", kMaxElements);
  }
  require_progressive(p, f);
  const int base_idx = p.index_of(base);
  const int n = p.size();

  std::vector<TowerTrace> towers;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (((mask >> base_idx) & 1U) == 0) {
      continue;
    }
    std::vector<int> members;
    for (int x = 0; x < n; ++x) {
      if ((mask >> x) & 1U) {
        members.push_back(x);
      }
    }
    bool chain = true;
    for (std::size_t i = 0; chain && i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!p.leq(members[i], members[j]) && !p.leq(members[j], members[i])) {
          chain = false;
          break;
        }
      }
    }
    if (!chain) {
      continue;
    }
    std::sort(members.begin(), members.end(), [&p](int a, int b) { return p.lt(a, b); });
    if (members.front() != base_idx) {
      continue;
    }
    bool successor_ok = true;
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      if (f.apply(members[i]) != members[i + 1]) {
        successor_ok = false;
        break;
      }
    }
    if (!successor_ok) {
      continue;
    }

    TowerTrace trace;
    trace.base = Element{base_idx};
    Ordinal index;
    for (std::size_t i = 0; i < members.size(); ++i) {
      trace.stages.push_back(TowerStage{
          index, Element{members[i]}, i == 0 ? StageKind::Base : StageKind::Successor});
      index = index.successor();
    }
    towers.push_back(std::move(trace));
  }
  std::sort(towers.begin(), towers.end(), [](const TowerTrace& a, const TowerTrace& b) {
    return a.stages.size() < b.stages.size();
  });
  return towers;
}

DynamicMap to_dynamic(const SelfMap& f) {
  std::vector<int> table = f.table();
  std::string name = f.name().empty() ? "finite-table" : f.name();
  return DynamicMap{std::move(name), [table](const Element& e) -> Element {
                      return Element{table.at(static_cast<std::size_t>(std::get<int>(e)))};
                    }};
}

}  // namespace towers
