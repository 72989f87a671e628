#include "towers/provider.hpp"

#include <algorithm>

namespace towers {

std::optional<Element> PosetProvider::omega_orbit_lub(const Element&, const DynamicMap&) const {
  return std::nullopt;
}

namespace {

int finite_index(const Element& e) {
  const int* idx = std::get_if<int>(&e);
  if (!idx) {
    throw Error("element does not belong to a finite poset host");
  }
  return *idx;
}

const Ordinal& ordinal_of(const Element& e) {
  const Ordinal* ord = std::get_if<Ordinal>(&e);
  if (!ord) {
    throw Error("element does not belong to an ordinal interval host");
  }
  return *ord;
}

const BitTuple& tuple_of(const Element& e) {
  const BitTuple* t = std::get_if<BitTuple>(&e);
  if (!t) {
    throw Error("element does not belong to a product lattice host");
  }
  return *t;
}

}  // namespace

FinitePosetAdapter::FinitePosetAdapter(FinitePoset poset) : poset_(std::move(poset)) {}

bool FinitePosetAdapter::leq(const Element& a, const Element& b) const {
  return poset_.leq(finite_index(a), finite_index(b));
}

std::optional<Element> FinitePosetAdapter::lub_of_ascent(std::span<const Element> ascent) const {
  if (ascent.empty()) {
    throw EmptySubset();
  }
  std::vector<int> indices;
  indices.reserve(ascent.size());
  for (const Element& e : ascent) {
    indices.push_back(finite_index(e));
  }
  auto result = poset_.lub(indices);
  if (!result) {
    return std::nullopt;
  }
  return Element{*result};
}

std::string FinitePosetAdapter::describe() const {
  return "finite poset " + (poset_.name().empty() ? "(unnamed)" : poset_.name()) + " with " +
         std::to_string(poset_.size()) + " elements";
}

std::string FinitePosetAdapter::format(const Element& e) const {
  return poset_.label(finite_index(e));
}

OrdinalIntervalProvider::OrdinalIntervalProvider(Ordinal top) : top_(std::move(top)) {}

bool OrdinalIntervalProvider::leq(const Element& a, const Element& b) const {
  return ordinal_of(a) <= ordinal_of(b);
}

std::optional<Element> OrdinalIntervalProvider::lub_of_ascent(
    std::span<const Element> ascent) const {
  if (ascent.empty()) {
    throw EmptySubset();
  }
  // A finite ascent of ordinals has a largest element, which is its lub.
  return ascent.back();
}

std::optional<Element> OrdinalIntervalProvider::omega_orbit_lub(const Element& x,
                                                                const DynamicMap& f) const {
  if (f.name != kClampedSuccessorName) {
    return std::nullopt;
  }
  Ordinal jump = ordinal_of(x).plus_omega();
  if (top_ < jump) {
    jump = top_;
  }
  return Element{std::move(jump)};
}

std::string OrdinalIntervalProvider::describe() const {
  return "ordinal interval [0, " + top_.to_string() + "]";
}

std::string OrdinalIntervalProvider::format(const Element& e) const {
  return ordinal_of(e).to_string();
}

DynamicMap OrdinalIntervalProvider::clamped_successor() const {
  Ordinal top = top_;
  return DynamicMap{kClampedSuccessorName, [top](const Element& e) -> Element {
                      const Ordinal& x = ordinal_of(e);
                      if (x < top) {
                        return Element{x.successor()};
                      }
                      return Element{top};
                    }};
}

PowersetProductProvider::PowersetProductProvider(std::vector<int> universe_sizes,
                                                 std::vector<std::vector<std::string>> bit_labels)
    : universe_sizes_(std::move(universe_sizes)), bit_labels_(std::move(bit_labels)) {
  if (universe_sizes_.empty()) {
    throw Error("product provider needs at least one coordinate");
  }
  for (int size : universe_sizes_) {
    if (size < 0 || size > 64) {
      throw TooLarge("coordinate universes must hold at most 64 members", 64);
    }
  }
}

namespace {

void check_tuple_shape(const BitTuple& t, const std::vector<int>& sizes) {
  if (t.coords.size() != sizes.size()) {
    throw Error("tuple has wrong number of coordinates");
  }
}

}  // namespace

bool PowersetProductProvider::leq(const Element& a, const Element& b) const {
  const BitTuple& ta = tuple_of(a);
  const BitTuple& tb = tuple_of(b);
  check_tuple_shape(ta, universe_sizes_);
  check_tuple_shape(tb, universe_sizes_);
  for (std::size_t i = 0; i < ta.coords.size(); ++i) {
    if ((ta.coords[i] & ~tb.coords[i]) != 0) {
      return false;
    }
  }
  return true;
}

std::optional<Element> PowersetProductProvider::lub_of_ascent(
    std::span<const Element> ascent) const {
  if (ascent.empty()) {
    throw EmptySubset();
  }
  BitTuple join;
  join.coords.assign(universe_sizes_.size(), 0);
  for (const Element& e : ascent) {
    const BitTuple& t = tuple_of(e);
    check_tuple_shape(t, universe_sizes_);
    for (std::size_t i = 0; i < join.coords.size(); ++i) {
      join.coords[i] |= t.coords[i];
    }
  }
  return Element{std::move(join)};
}

std::string PowersetProductProvider::describe() const {
  std::string out = "product of powersets with universe sizes";
  for (int size : universe_sizes_) {
    out += " " + std::to_string(size);
  }
  return out;
}

std::string PowersetProductProvider::format(const Element& e) const {
  const BitTuple& t = tuple_of(e);
  std::string out = "(";
  for (std::size_t i = 0; i < t.coords.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += "{";
    bool first = true;
    for (int bit = 0; bit < universe_sizes_[i]; ++bit) {
      if ((t.coords[i] >> bit) & 1U) {
        if (!first) {
          out += ",";
        }
        first = false;
        if (i < bit_labels_.size() && static_cast<std::size_t>(bit) < bit_labels_[i].size()) {
          out += bit_labels_[i][static_cast<std::size_t>(bit)];
        } else {
          out += "b" + std::to_string(bit);
        }
      }
    }
    out += "}";
  }
  out += ")";
  return out;
}

BitTuple PowersetProductProvider::bottom() const {
  return BitTuple{std::vector<std::uint64_t>(universe_sizes_.size(), 0)};
}

BitTuple PowersetProductProvider::top() const {
  BitTuple out;
  out.coords.reserve(universe_sizes_.size());
  for (int size : universe_sizes_) {
    out.coords.push_back(size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1);
  }
  return out;
}

std::unique_ptr<PosetProvider> make_finite_adapter(FinitePoset poset) {
  return std::make_unique<FinitePosetAdapter>(std::move(poset));
}

std::unique_ptr<PosetProvider> make_ordinal_interval(Ordinal top) {
  return std::make_unique<OrdinalIntervalProvider>(std::move(top));
}

std::unique_ptr<PosetProvider> make_powerset_product(std::vector<int> universe_sizes) {
  return std::make_unique<PowersetProductProvider>(std::move(universe_sizes));
}

}  // namespace towers
