#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "towers/poset.hpp"
#include "towers/tower.hpp"

namespace towers {

/// Picks one element from each nonempty strict upper cone. Deterministic
/// given (poset, strategy, seed): the random strategy hashes the seed and
/// the element's declaration index with splitmix64, so the choice does not
/// depend on call order.
struct ChoiceSelector {
  enum class Strategy { LeastId, SeededRandom };

  Strategy strategy = Strategy::LeastId;
  std::uint64_t seed = 0;

  static ChoiceSelector least_id() { return ChoiceSelector{Strategy::LeastId, 0}; }
  static ChoiceSelector seeded_random(std::uint64_t seed) {
    return ChoiceSelector{Strategy::SeededRandom, seed};
  }

  /// Element chosen from the strict upper cone of x; precondition: the
  /// cone is nonempty.
  int choose(const FinitePoset& p, int x) const;
};

/// The splitmix64 mixing function, used verbatim by the seeded-random
/// selector so results are portable bit for bit.
std::uint64_t splitmix64(std::uint64_t x);

/// Extends the selector to a total progressive self-map: f(x) = sel(x)
/// when the cone of x is nonempty, f(x) = x at maximal elements. The map
/// is strictly progressive only when the poset has no maximal element,
/// which no nonempty finite poset achieves.
SelfMap selector_map(const FinitePoset& p, const ChoiceSelector& sel);

struct MaximalityOutcome {
  ElementLabel maximal;
  /// Re-verified directly from the order relation, independently of the
  /// search that produced the element.
  bool cone_verified_empty = false;
  TowerTrace trace;
};

/// Runs the tower construction on the selector map; the resulting fixed
/// point is maximal (a nonempty cone would contradict fixedness). At most
/// |X| stages.
MaximalityOutcome find_maximal(const FinitePoset& p, const ChoiceSelector& sel,
                               std::string_view base);

/// All total self-maps with x < f(x) everywhere. Empty on every nonempty
/// finite poset: a maximal element has nothing strictly above it.
std::vector<SelfMap> enumerate_strictly_progressive(const FinitePoset& p);

}  // namespace towers
