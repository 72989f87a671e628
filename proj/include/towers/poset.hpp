#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "towers/errors.hpp"

namespace towers {

/// Elements are identified by short text labels, unique within one poset.
/// Internally every element also carries its declaration index; all
/// "least id" tie-breaks across the library use declaration order.
using ElementLabel = std::string;

/// A finite partially ordered set with validated axioms.
///
/// The relation is stored densely (one bit row per element) up to 64
/// elements and as a pair set beyond that. Instances are immutable after
/// construction and safe to share across threads.
class FinitePoset {
 public:
  /// Validates reflexivity, antisymmetry, and transitivity. Reflexive
  /// pairs may be supplied or are added automatically.
  static FinitePoset validate(std::vector<ElementLabel> elements,
                              const std::vector<std::pair<ElementLabel, ElementLabel>>& leq_pairs,
                              std::string name = "");

  /// Builds the reflexive-transitive closure of an acyclic cover relation
  /// (Hasse-diagram input) and validates it as a poset.
  static FinitePoset close_covers(
      std::vector<ElementLabel> elements,
      const std::vector<std::pair<ElementLabel, ElementLabel>>& cover_pairs,
      std::string name = "");

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<ElementLabel>& elements() const { return labels_; }
  const ElementLabel& label(int index) const { return labels_.at(static_cast<std::size_t>(index)); }
  /// Declaration index of a label; throws UnknownElement.
  int index_of(std::string_view label) const;
  bool contains(std::string_view label) const;

  bool leq(int x, int y) const;
  bool leq(std::string_view x, std::string_view y) const;
  bool lt(int x, int y) const { return x != y && leq(x, y); }
  bool lt(std::string_view x, std::string_view y) const;

  /// U_x = { y | x < y }; empty exactly when x is maximal.
  std::vector<int> strict_upper_cone(int x) const;
  std::vector<ElementLabel> strict_upper_cone(std::string_view x) const;

  /// Least upper bound of a nonempty subset, when it exists.
  std::optional<int> lub(std::span<const int> subset) const;
  std::optional<ElementLabel> lub(std::span<const ElementLabel> subset) const;

  /// All non-reflexive related pairs (x, y) with x < y, in declaration order.
  std::vector<std::pair<ElementLabel, ElementLabel>> strict_pairs() const;

  /// Cover pairs (x, y): x < y with nothing strictly between; the unique
  /// transitive reduction.
  std::vector<std::pair<ElementLabel, ElementLabel>> cover_pairs() const;

  bool operator==(const FinitePoset& other) const;

 private:
  FinitePoset() = default;

  void relation_insert(int x, int y);
  bool relation_contains(int x, int y) const;

  std::string name_;
  std::vector<ElementLabel> labels_;
  std::unordered_map<std::string, int> index_;
  // Dense rows when size() <= 64, pair set otherwise.
  std::vector<std::uint64_t> dense_rows_;
  std::unordered_set<std::uint64_t> sparse_pairs_;
  bool dense_ = true;
};

/// A nonempty chain of a host poset, sorted ascending by the host order.
/// Finiteness makes it well-ordered. The host must outlive the subset.
struct OrderedSubset {
  const FinitePoset* host = nullptr;
  std::vector<int> members;  // strictly ascending in host order

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
  std::vector<ElementLabel> labels() const;
  bool operator==(const OrderedSubset& other) const = default;
};

/// Position of an element within a well-ordered subset.
struct ElementKind {
  enum class Tag { Least, Successor, Limit };
  Tag tag = Tag::Least;
  std::optional<ElementLabel> predecessor;  // present iff tag == Successor

  bool operator==(const ElementKind& other) const = default;
};

struct NotAChain {
  std::pair<ElementLabel, ElementLabel> witness;
};

struct ClassifiedSubset {
  OrderedSubset subset;
  std::vector<ElementKind> kinds;  // parallel to subset.members
};

/// Sorts a subset into a chain and labels every element least /
/// successor-of / limit. On finite subsets the limit label never occurs:
/// every non-least element of a finite chain is the successor of the one
/// below it.
std::variant<NotAChain, ClassifiedSubset> classify_subset(const FinitePoset& p,
                                                          std::span<const ElementLabel> subset);

/// classify_subset that throws NotAChainError instead of returning the witness.
OrderedSubset make_chain(const FinitePoset& p, std::span<const ElementLabel> subset);

/// IS = { z in Y | z < y } and WIS = IS + { y }.
std::pair<OrderedSubset, OrderedSubset> segments(const OrderedSubset& y_set, std::string_view y);

/// Least element of Y strictly above y; absent iff y is the largest.
std::optional<ElementLabel> successor_in(const OrderedSubset& y_set, std::string_view y);

/// True iff A is contained in B and B has no element below a member of A
/// that is missing from A.
bool is_initial_segment(const OrderedSubset& a, const OrderedSubset& b);

namespace fixtures {

/// a < b < c.
FinitePoset chain3();
/// bot < l, r < top with l, r incomparable.
FinitePoset diamond();
/// bot < l and bot < r only.
FinitePoset vee();
/// Two incomparable elements x, y.
FinitePoset antichain2();

/// Lookup by name ("CHAIN3", "DIAMOND", "VEE", "ANTICHAIN2").
FinitePoset by_name(std::string_view name);

}  // namespace fixtures

}  // namespace towers
