#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "towers/ordinal.hpp"
#include "towers/poset.hpp"
#include "towers/provider.hpp"

namespace towers {

/// A total self-map on a finite poset, stored as an index table.
/// Progressive and strictly-progressive flags are checked exhaustively at
/// construction. The host poset must outlive the map.
class SelfMap {
 public:
  static SelfMap from_table(const FinitePoset& host,
                            const std::vector<std::pair<ElementLabel, ElementLabel>>& assignment,
                            std::string name = "");
  static SelfMap from_indices(const FinitePoset& host, std::vector<int> table,
                              std::string name = "");
  static SelfMap identity(const FinitePoset& host);

  const FinitePoset& host() const { return *host_; }
  const std::string& name() const { return name_; }
  const std::vector<int>& table() const { return table_; }

  int apply(int x) const { return table_.at(static_cast<std::size_t>(x)); }
  ElementLabel apply(std::string_view x) const;

  /// x <= f(x) for every element.
  bool is_progressive() const { return !progressive_witness_.has_value(); }
  /// x < f(x) for every element.
  bool is_strictly_progressive() const { return strictly_progressive_; }
  /// First element (in declaration order) with f(x) not above x, if any.
  std::optional<int> progressive_witness() const { return progressive_witness_; }

  bool operator==(const SelfMap& other) const {
    return table_ == other.table_ && host_->elements() == other.host_->elements();
  }

 private:
  SelfMap(const FinitePoset& host, std::vector<int> table, std::string name);

  const FinitePoset* host_;
  std::vector<int> table_;
  std::string name_;
  std::optional<int> progressive_witness_;
  bool strictly_progressive_ = false;
};

enum class StageKind { Base, Successor, Limit };

std::string_view stage_kind_name(StageKind kind);

/// One stage of an ordinal-indexed ascent.
struct TowerStage {
  Ordinal index;
  Element element;
  StageKind kind = StageKind::Base;

  bool operator==(const TowerStage& other) const = default;
};

/// Record of a well-ordered ascent: stage 0 is the base, successor stages
/// apply the map, limit stages hold lubs of all earlier stages. Long runs
/// of successor stages may be truncated by an omega-jump, so the record
/// samples the underlying tower rather than listing every stage.
struct TowerTrace {
  Element base;
  std::vector<TowerStage> stages;

  bool operator==(const TowerTrace& other) const = default;
  std::vector<Element> elements() const;
};

struct CertificateChecks {
  bool omega_in_tower = false;
  bool omega_fixed = false;
  bool omega_is_lub = false;

  bool all() const { return omega_in_tower && omega_fixed && omega_is_lub; }
  bool operator==(const CertificateChecks& other) const = default;
};

/// The largest tower together with its certified fixed point.
struct FixedPointCertificate {
  Element omega;
  TowerTrace trace;
  CertificateChecks checks;

  bool operator==(const FixedPointCertificate& other) const = default;
};

struct TowerValid {};

struct TowerViolation {
  enum class Condition { WellOrderBase, Successor, Limit };
  Condition condition;
  std::string witness;
};

using TowerCheck = std::variant<TowerValid, TowerViolation>;

bool tower_check_passed(const TowerCheck& check);

/// Checks the three tower conditions on a finite candidate sequence:
/// least element is the base, each successor equals the map applied to
/// its predecessor, and (vacuously here) limit elements are lubs of their
/// initial segments. Stage kinds are inferred positionally.
TowerCheck check_tower(const FinitePoset& p, const SelfMap& f, std::string_view base,
                       std::span<const ElementLabel> candidate);

/// Checks a recorded transfinite trace against the tower conditions.
/// Stage kinds are inferred from the ordinal indices: consecutive indices
/// are successor stages and omega-jumps are limit stages, whose elements
/// are verified through the provider's closed-form orbit lub.
TowerCheck check_tower(const PosetProvider& host, const DynamicMap& f, const Element& base,
                       const TowerTrace& candidate);

/// Builds the largest tower on a finite poset by plain orbit iteration
/// (finite chains have no limit elements, so the limit condition is
/// vacuous) and certifies its fixed point. Terminates within |X| stages.
FixedPointCertificate build_tower_finite(const FinitePoset& p, const SelfMap& f,
                                         std::string_view base);

struct TowerBudget {
  int successor_steps_per_block = 1024;
  int max_accelerations = 64;
};

struct BudgetExhausted {
  TowerTrace partial;
};

using TransfiniteResult = std::variant<FixedPointCertificate, BudgetExhausted>;

/// Builds a tower over an arbitrary provider, alternating blocks of
/// successor steps with omega-jump limit stages: when a block exhausts its
/// step budget without reaching a fixed point, the provider's closed-form
/// orbit lub supplies the next limit stage. Stops at the first fixed
/// point; returns the partial trace when the acceleration budget runs out.
TransfiniteResult build_tower_transfinite(const PosetProvider& host, const DynamicMap& f,
                                          const Element& base, const TowerBudget& budget = {});

enum class SegmentOrder { Equal, FirstInitialInSecond, SecondInitialInFirst, Incomparable };

std::string_view segment_order_name(SegmentOrder order);

/// Relation between two same-based chains, plus their largest common
/// weak-initial-segment agreement V (the longest common prefix).
struct SegmentRelation {
  SegmentOrder order;
  OrderedSubset common_prefix;
};

/// Same-base towers are never incomparable; arbitrary same-base chains may
/// be, and are reported as such.
SegmentRelation compare_towers(const OrderedSubset& first, const OrderedSubset& second);

/// Members of a finite-host trace as an OrderedSubset of p.
OrderedSubset trace_members(const FinitePoset& p, const TowerTrace& trace);

/// All subsets of p that pass check_tower for (f, base), sorted by size.
/// These are exactly the nonempty prefixes of the largest tower.
std::vector<TowerTrace> enumerate_towers(const FinitePoset& p, const SelfMap& f,
                                         std::string_view base);

/// Lifts a finite self-map to the provider element representation.
DynamicMap to_dynamic(const SelfMap& f);

}  // namespace towers
