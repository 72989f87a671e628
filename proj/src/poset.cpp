#include "towers/poset.hpp"

#include <algorithm>

namespace towers {

namespace {

void check_labels(const std::vector<ElementLabel>& labels) {
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw InvalidLabel("element labels must be nonempty");
    }
    if (!seen.insert(label).second) {
      throw InvalidLabel("duplicate element label: " + label);
    }
  }
}

}  // namespace

int FinitePoset::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    throw UnknownElement(std::string(label));
  }
  return it->second;
}

bool FinitePoset::contains(std::string_view label) const {
  return index_.find(std::string(label)) != index_.end();
}

void FinitePoset::relation_insert(int x, int y) {
  if (dense_) {
    dense_rows_[static_cast<std::size_t>(x)] |= std::uint64_t{1} << y;
  } else {
    sparse_pairs_.insert(static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(size()) +
                         static_cast<std::uint64_t>(y));
  }
}

bool FinitePoset::relation_contains(int x, int y) const {
  if (dense_) {
    return (dense_rows_[static_cast<std::size_t>(x)] >> y) & 1U;
  }
  return sparse_pairs_.count(static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(size()) +
                             static_cast<std::uint64_t>(y)) != 0;
}

FinitePoset FinitePoset::validate(
    std::vector<ElementLabel> elements,
    const std::vector<std::pair<ElementLabel, ElementLabel>>& leq_pairs, std::string name) {
  check_labels(elements);

  FinitePoset p;
  p.name_ = std::move(name);
  p.labels_ = std::move(elements);
  const int n = p.size();
  p.dense_ = n <= 64;
  if (p.dense_) {
    p.dense_rows_.assign(static_cast<std::size_t>(n), 0);
  }
  for (int i = 0; i < n; ++i) {
    p.index_.emplace(p.labels_[static_cast<std::size_t>(i)], i);
  }

  for (const auto& [a, b] : leq_pairs) {
    p.relation_insert(p.index_of(a), p.index_of(b));
  }
  for (int i = 0; i < n; ++i) {
    p.relation_insert(i, i);
  }

  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (p.relation_contains(x, y) && p.relation_contains(y, x)) {
        throw AxiomViolation(PosetAxiom::Antisymmetry, p.label(x), p.label(y));
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!p.relation_contains(x, y)) {
        continue;
      }
      for (int z = 0; z < n; ++z) {
        if (p.relation_contains(y, z) && !p.relation_contains(x, z)) {
          throw AxiomViolation(PosetAxiom::Transitivity, p.label(x), p.label(z));
        }
      }
    }
  }
  return p;
}

namespace {

// Depth-first cycle search over the cover digraph; fills `cycle` with the
// witness walk (first label repeated at the end) when one exists.
bool find_cycle(int v, const std::vector<std::vector<int>>& adjacency, std::vector<int>& color,
                std::vector<int>& path, std::vector<int>& cycle) {
  color[static_cast<std::size_t>(v)] = 1;
  path.push_back(v);
  for (int w : adjacency[static_cast<std::size_t>(v)]) {
    if (color[static_cast<std::size_t>(w)] == 1) {
      auto start = std::find(path.begin(), path.end(), w);
      cycle.assign(start, path.end());
      cycle.push_back(w);
      return true;
    }
    if (color[static_cast<std::size_t>(w)] == 0 &&
        find_cycle(w, adjacency, color, path, cycle)) {
      return true;
    }
  }
  path.pop_back();
  color[static_cast<std::size_t>(v)] = 2;
  return false;
}

}  // namespace

FinitePoset FinitePoset::close_covers(
    std::vector<ElementLabel> elements,
    const std::vector<std::pair<ElementLabel, ElementLabel>>& cover_pairs, std::string name) {
  check_labels(elements);

  const int n = static_cast<int>(elements.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    index.emplace(elements[static_cast<std::size_t>(i)], i);
  }
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (const auto& [a, b] : cover_pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) {
      throw UnknownElement(a);
    }
    if (ib == index.end()) {
      throw UnknownElement(b);
    }
    adjacency[static_cast<std::size_t>(ia->second)].push_back(ib->second);
  }

  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::vector<int> path;
  std::vector<int> cycle;
  for (int v = 0; v < n; ++v) {
    if (color[static_cast<std::size_t>(v)] == 0 &&
        find_cycle(v, adjacency, color, path, cycle)) {
      std::vector<ElementLabel> witness;
      witness.reserve(cycle.size());
      for (int w : cycle) {
        witness.push_back(elements[static_cast<std::size_t>(w)]);
      }
      throw CycleDetected(std::move(witness));
    }
  }

  // Reachability closure; acyclicity already guarantees antisymmetry.
  std::vector<std::pair<ElementLabel, ElementLabel>> closed;
  for (int v = 0; v < n; ++v) {
    std::vector<bool> reached(static_cast<std::size_t>(n), false);
    std::vector<int> stack{v};
    reached[static_cast<std::size_t>(v)] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adjacency[static_cast<std::size_t>(u)]) {
        if (!reached[static_cast<std::size_t>(w)]) {
          reached[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    for (int w = 0; w < n; ++w) {
      if (w != v && reached[static_cast<std::size_t>(w)]) {
        closed.emplace_back(elements[static_cast<std::size_t>(v)],
                            elements[static_cast<std::size_t>(w)]);
      }
    }
  }
  return validate(std::move(elements), closed, std::move(name));
}

bool FinitePoset::leq(int x, int y) const {
  if (x < 0 || x >= size() || y < 0 || y >= size()) {
    throw UnknownElement("index " + std::to_string(x < 0 || x >= size() ? x : y));
  }
  return relation_contains(x, y);
}

bool FinitePoset::leq(std::string_view x, std::string_view y) const {
  return relation_contains(index_of(x), index_of(y));
}

bool FinitePoset::lt(std::string_view x, std::string_view y) const {
  return lt(index_of(x), index_of(y));
}

std::vector<int> FinitePoset::strict_upper_cone(int x) const {
  if (x < 0 || x >= size()) {
    throw UnknownElement("index " + std::to_string(x));
  }
  std::vector<int> cone;
  for (int y = 0; y < size(); ++y) {
    if (lt(x, y)) {
      cone.push_back(y);
    }
  }
  return cone;
}

std::vector<ElementLabel> FinitePoset::strict_upper_cone(std::string_view x) const {
  std::vector<ElementLabel> out;
  for (int y : strict_upper_cone(index_of(x))) {
    out.push_back(label(y));
  }
  return out;
}

std::optional<int> FinitePoset::lub(std::span<const int> subset) const {
  if (subset.empty()) {
    throw EmptySubset();
  }
  std::vector<int> upper_bounds;
  for (int v = 0; v < size(); ++v) {
    bool bounds_all = true;
    for (int a : subset) {
      if (!leq(a, v)) {
        bounds_all = false;
        break;
      }
    }
    if (bounds_all) {
      upper_bounds.push_back(v);
    }
  }
  for (int u : upper_bounds) {
    bool least = true;
    for (int v : upper_bounds) {
      if (!leq(u, v)) {
        least = false;
        break;
      }
    }
    if (least) {
      return u;  // unique by antisymmetry
    }
  }
  return std::nullopt;
}

std::optional<ElementLabel> FinitePoset::lub(std::span<const ElementLabel> subset) const {
  std::vector<int> indices;
  indices.reserve(subset.size());
  for (const auto& label_text : subset) {
    indices.push_back(index_of(label_text));
  }
  auto result = lub(indices);
  if (!result) {
    return std::nullopt;
  }
  return label(*result);
}

std::vector<std::pair<ElementLabel, ElementLabel>> FinitePoset::strict_pairs() const {
  std::vector<std::pair<ElementLabel, ElementLabel>> out;
  for (int x = 0; x < size(); ++x) {
    for (int y = 0; y < size(); ++y) {
      if (lt(x, y)) {
        out.emplace_back(label(x), label(y));
      }
    }
  }
  return out;
}

std::vector<std::pair<ElementLabel, ElementLabel>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<ElementLabel, ElementLabel>> out;
  for (int x = 0; x < size(); ++x) {
    for (int y = 0; y < size(); ++y) {
      if (!lt(x, y)) {
        continue;
      }
      bool covered = true;
      for (int z = 0; z < size(); ++z) {
        if (lt(x, z) && lt(z, y)) {
          covered = false;
          break;
        }
      }
      if (covered) {
        out.emplace_back(label(x), label(y));
      }
    }
  }
  return out;
}

bool FinitePoset::operator==(const FinitePoset& other) const {
  if (labels_ != other.labels_) {
    return false;
  }
  for (int x = 0; x < size(); ++x) {
    for (int y = 0; y < size(); ++y) {
      if (relation_contains(x, y) != other.relation_contains(x, y)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<ElementLabel> OrderedSubset::labels() const {
  std::vector<ElementLabel> out;
  out.reserve(members.size());
  for (int m : members) {
    out.push_back(host->label(m));
  }
  return out;
}

std::variant<NotAChain, ClassifiedSubset> classify_subset(const FinitePoset& p,
                                                          std::span<const ElementLabel> subset) {
  if (subset.empty()) {
    throw EmptySubset();
  }
  std::vector<int> members;
  for (const auto& label_text : subset) {
    const int idx = p.index_of(label_text);
    if (std::find(members.begin(), members.end(), idx) == members.end()) {
      members.push_back(idx);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!p.leq(members[i], members[j]) && !p.leq(members[j], members[i])) {
        return NotAChain{{p.label(members[i]), p.label(members[j])}};
      }
    }
  }
  std::sort(members.begin(), members.end(), [&p](int a, int b) { return p.lt(a, b); });

  ClassifiedSubset out;
  out.subset = OrderedSubset{&p, std::move(members)};
  out.kinds.reserve(out.subset.size());
  for (std::size_t i = 0; i < out.subset.size(); ++i) {
    if (i == 0) {
      out.kinds.push_back(ElementKind{ElementKind::Tag::Least, std::nullopt});
    } else {
      // In a finite chain every non-least element is the successor of the
      // one directly below it, so the limit label cannot occur.
      out.kinds.push_back(
          ElementKind{ElementKind::Tag::Successor, p.label(out.subset.members[i - 1])});
    }
  }
  return out;
}

OrderedSubset make_chain(const FinitePoset& p, std::span<const ElementLabel> subset) {
  auto result = classify_subset(p, subset);
  if (auto* not_chain = std::get_if<NotAChain>(&result)) {
    throw NotAChainError(not_chain->witness.first, not_chain->witness.second);
  }
  return std::get<ClassifiedSubset>(std::move(result)).subset;
}

std::pair<OrderedSubset, OrderedSubset> segments(const OrderedSubset& y_set, std::string_view y) {
  const int target = y_set.host->index_of(y);
  auto it = std::find(y_set.members.begin(), y_set.members.end(), target);
  if (it == y_set.members.end()) {
    throw UnknownElement(std::string(y) + " (not a member of the subset)");
  }
  OrderedSubset initial{y_set.host, std::vector<int>(y_set.members.begin(), it)};
  OrderedSubset weak{y_set.host, std::vector<int>(y_set.members.begin(), it + 1)};
  return {std::move(initial), std::move(weak)};
}

std::optional<ElementLabel> successor_in(const OrderedSubset& y_set, std::string_view y) {
  const int target = y_set.host->index_of(y);
  auto it = std::find(y_set.members.begin(), y_set.members.end(), target);
  if (it == y_set.members.end()) {
    throw UnknownElement(std::string(y) + " (not a member of the subset)");
  }
  ++it;
  if (it == y_set.members.end()) {
    return std::nullopt;
  }
  return y_set.host->label(*it);
}

bool is_initial_segment(const OrderedSubset& a, const OrderedSubset& b) {
  if (a.host != b.host) {
    throw HostMismatch();
  }
  const FinitePoset& p = *a.host;
  for (int x : a.members) {
    if (std::find(b.members.begin(), b.members.end(), x) == b.members.end()) {
      return false;
    }
  }
  for (int x : b.members) {
    const bool in_a = std::find(a.members.begin(), a.members.end(), x) != a.members.end();
    if (in_a) {
      continue;
    }
    for (int y : a.members) {
      if (p.lt(x, y)) {
        return false;
      }
    }
  }
  return true;
}

namespace fixtures {

FinitePoset chain3() {
  return FinitePoset::close_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, "CHAIN3");
}

FinitePoset diamond() {
  return FinitePoset::close_covers({"bot", "l", "r", "top"},
                                   {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}},
                                   "DIAMOND");
}

FinitePoset vee() {
  return FinitePoset::close_covers({"bot", "l", "r"}, {{"bot", "l"}, {"bot", "r"}}, "VEE");
}

FinitePoset antichain2() { return FinitePoset::close_covers({"x", "y"}, {}, "ANTICHAIN2"); }

FinitePoset by_name(std::string_view name) {
  if (name == "CHAIN3") {
    return chain3();
  }
  if (name == "DIAMOND") {
    return diamond();
  }
  if (name == "VEE") {
    return vee();
  }
  if (name == "ANTICHAIN2") {
    return antichain2();
  }
  throw UnknownElement(std::string(name) + " (no such fixture)");
}

}  // namespace fixtures

}  // namespace towers
