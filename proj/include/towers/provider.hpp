#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "towers/ordinal.hpp"
#include "towers/poset.hpp"

namespace towers {

/// Tuple of bit-sets, one per coordinate; the carrier of the
/// product-of-powersets provider. Coordinate universes hold at most 64 bits.
struct BitTuple {
  std::vector<std::uint64_t> coords;

  bool operator==(const BitTuple& other) const = default;
};

/// Opaque element value handled by providers: a finite-poset element (by
/// declaration index), an ordinal, or a product-lattice tuple.
using Element = std::variant<int, Ordinal, BitTuple>;

/// A self-map passed to providers by symbolic name so they can recognize
/// maps with closed-form orbit lubs (e.g. the clamped successor).
struct DynamicMap {
  std::string name;
  std::function<Element(const Element&)> apply;
};

/// Uniform order oracle: the tower engine only needs an order test and
/// least upper bounds of the well-ordered ascents it actually builds.
/// Implementations are immutable and freely shareable across threads.
class PosetProvider {
 public:
  virtual ~PosetProvider() = default;

  virtual bool leq(const Element& a, const Element& b) const = 0;
  bool lt(const Element& a, const Element& b) const { return !(a == b) && leq(a, b); }

  /// Least upper bound of a recorded strictly ascending nonempty sequence.
  virtual std::optional<Element> lub_of_ascent(std::span<const Element> ascent) const = 0;

  /// Least upper bound of the orbit { f^n(x) : n < omega } when available
  /// in closed form for the (recognized) map f.
  virtual std::optional<Element> omega_orbit_lub(const Element& x, const DynamicMap& f) const;

  virtual std::string describe() const = 0;
  virtual std::string format(const Element& e) const = 0;
};

/// Delegates leq/lub to a finite explicit poset. No omega acceleration:
/// finite ascents terminate on their own.
class FinitePosetAdapter final : public PosetProvider {
 public:
  explicit FinitePosetAdapter(FinitePoset poset);

  bool leq(const Element& a, const Element& b) const override;
  std::optional<Element> lub_of_ascent(std::span<const Element> ascent) const override;
  std::string describe() const override;
  std::string format(const Element& e) const override;

  const FinitePoset& poset() const { return poset_; }

 private:
  FinitePoset poset_;
};

/// The ordinal interval [0, top] with the usual order; the canonical host
/// exhibiting genuine limit stages.
class OrdinalIntervalProvider final : public PosetProvider {
 public:
  /// Symbolic name of the clamped successor map, recognized for
  /// closed-form orbit lubs.
  static constexpr const char* kClampedSuccessorName = "successor-clamped";

  explicit OrdinalIntervalProvider(Ordinal top);

  bool leq(const Element& a, const Element& b) const override;
  std::optional<Element> lub_of_ascent(std::span<const Element> ascent) const override;
  std::optional<Element> omega_orbit_lub(const Element& x, const DynamicMap& f) const override;
  std::string describe() const override;
  std::string format(const Element& e) const override;

  const Ordinal& top() const { return top_; }

  /// x |-> min(x + 1, top). Progressive everywhere, strictly progressive
  /// exactly below the top.
  DynamicMap clamped_successor() const;

 private:
  Ordinal top_;
};

/// Product of powersets ordered by pointwise inclusion; lub of an ascent
/// is the pointwise union over the trace.
class PowersetProductProvider final : public PosetProvider {
 public:
  explicit PowersetProductProvider(std::vector<int> universe_sizes,
                                   std::vector<std::vector<std::string>> bit_labels = {});

  bool leq(const Element& a, const Element& b) const override;
  std::optional<Element> lub_of_ascent(std::span<const Element> ascent) const override;
  std::string describe() const override;
  std::string format(const Element& e) const override;

  int coordinates() const { return static_cast<int>(universe_sizes_.size()); }
  int universe_size(int coord) const { return universe_sizes_.at(static_cast<std::size_t>(coord)); }
  BitTuple bottom() const;
  BitTuple top() const;

 private:
  std::vector<int> universe_sizes_;
  std::vector<std::vector<std::string>> bit_labels_;
};

std::unique_ptr<PosetProvider> make_finite_adapter(FinitePoset poset);
std::unique_ptr<PosetProvider> make_ordinal_interval(Ordinal top);
std::unique_ptr<PosetProvider> make_powerset_product(std::vector<int> universe_sizes);

}  // namespace towers
