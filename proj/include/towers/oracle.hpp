#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "towers/maximality.hpp"
#include "towers/poset.hpp"
#include "towers/tower.hpp"

namespace towers {

/// Every poset on n labeled elements, each exactly once. Enumerates the
/// 3^(n(n-1)/2) antisymmetric orientations of element pairs and keeps the
/// transitively closed ones.
std::vector<FinitePoset> enumerate_labeled_posets(int n);

/// All total self-maps f with x <= f(x) everywhere.
std::vector<SelfMap> enumerate_progressive_maps(const FinitePoset& p);

/// Product over x of |{ y : x <= y }|; equals the enumeration size.
std::uint64_t progressive_map_count(const FinitePoset& p);

/// Seeded random poset: a random DAG on declaration order, transitively
/// closed. Only raw mt19937_64 output feeds the draw, so results are
/// reproducible across platforms.
FinitePoset random_poset(int n, std::mt19937_64& rng);

/// Seeded random progressive map: each element maps uniformly into its
/// principal up-set.
SelfMap random_progressive_map(const FinitePoset& p, std::mt19937_64& rng);

struct CorpusOptions {
  int tower_enumeration_limit = 12;
  /// Seed used for the seeded-random selector strategy inside the run.
  std::uint64_t selector_seed = 0xC0FFEE;
  /// Poset size for random mode; 0 disables it.
  int random_n = 0;
  /// One random poset per seed, replayable.
  std::vector<std::uint64_t> random_seeds;
  /// Progressive maps sampled per random poset.
  int random_maps_per_poset = 5;
};

struct CorpusFailure {
  std::string poset;
  std::string map;
  std::string base;
  std::string check;
  std::string detail;
};

struct CorpusCounts {
  int n = 0;
  bool random = false;
  std::uint64_t posets = 0;
  std::uint64_t progressive_maps = 0;
  std::uint64_t instances = 0;  // (poset, map, base) triples
  std::uint64_t towers_compared = 0;
};

struct CorpusReport {
  std::vector<CorpusCounts> per_n;
  std::vector<CorpusFailure> failures;
  double elapsed_seconds = 0.0;
  std::vector<std::uint64_t> random_seeds;

  bool ok() const { return failures.empty(); }
};

/// Desk-scale exhaustive verification. For every labeled poset with
/// n <= n_max, every progressive self-map, and every base element, checks:
///   - the fixed-point certificate (omega in the tower, fixed, the lub);
///   - the enumerated towers are exactly the nonempty prefixes of the
///     largest tower;
///   - all tower pairs are comparable as initial segments;
///   - the finite and transfinite builders agree;
///   - no strictly progressive self-map exists;
///   - maximal-element extraction for both selector strategies.
/// Random mode replays the same checks on seeded posets of size random_n.
/// Failures are reported as data, never thrown.
CorpusReport verify_corpus(int n_max, const CorpusOptions& options = {});

}  // namespace towers
