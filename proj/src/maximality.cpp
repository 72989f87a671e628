#include "towers/maximality.hpp"

namespace towers {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

int ChoiceSelector::choose(const FinitePoset& p, int x) const {
  const std::vector<int> cone = p.strict_upper_cone(x);
  if (cone.empty()) {
    throw EmptySubset();
  }
  if (strategy == Strategy::LeastId) {
    return cone.front();  // cone is in declaration order
  }
  const std::uint64_t h = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(x) + 1));
  return cone[static_cast<std::size_t>(h % cone.size())];
}

SelfMap selector_map(const FinitePoset& p, const ChoiceSelector& sel) {
  std::vector<int> table(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    table[static_cast<std::size_t>(x)] =
        p.strict_upper_cone(x).empty() ? x : sel.choose(p, x);
  }
  const char* name =
      sel.strategy == ChoiceSelector::Strategy::LeastId ? "selector-least-id" : "selector-random";
  return SelfMap::from_indices(p, std::move(table), name);
}

MaximalityOutcome find_maximal(const FinitePoset& p, const ChoiceSelector& sel,
                               std::string_view base) {
  const SelfMap f = selector_map(p, sel);
  FixedPointCertificate cert = build_tower_finite(p, f, base);

  MaximalityOutcome outcome;
  outcome.maximal = p.label(std::get<int>(cert.omega));
  outcome.cone_verified_empty = p.strict_upper_cone(std::get<int>(cert.omega)).empty();
  outcome.trace = std::move(cert.trace);
  return outcome;
}

std::vector<SelfMap> enumerate_strictly_progressive(const FinitePoset& p) {
  constexpr int kMaxElements = 8;
  if (p.size() > kMaxElements) {
    throw TooLarge("strictly progressive enumeration scans all self-maps", kMaxElements);
  }

  std::vector<std::vector<int>> cones;
  cones.reserve(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    cones.push_back(p.strict_upper_cone(x));
    if (cones.back().empty()) {
      return {};  // product over an empty cone is empty
    }
  }

  std::vector<SelfMap> maps;
  std::vector<std::size_t> odometer(static_cast<std::size_t>(p.size()), 0);
  while (true) {
    std::vector<int> table(static_cast<std::size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x) {
      table[static_cast<std::size_t>(x)] =
          cones[static_cast<std::size_t>(x)][odometer[static_cast<std::size_t>(x)]];
    }
    maps.push_back(SelfMap::from_indices(p, std::move(table)));

    int pos = p.size() - 1;
    while (pos >= 0) {
      auto& digit = odometer[static_cast<std::size_t>(pos)];
      if (++digit < cones[static_cast<std::size_t>(pos)].size()) {
        break;
      }
      digit = 0;
      --pos;
    }
    if (pos < 0) {
      break;
    }
  }
  return maps;
}

}  // namespace towers
