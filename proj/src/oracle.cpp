#include "towers/oracle.hpp"

#include <algorithm>
#include <chrono>

#include "towers/provider.hpp"

namespace towers {

namespace {

constexpr const char* kLabels[] = {"a", "b", "c", "d", "e"};

std::vector<ElementLabel> default_labels(int n) {
  std::vector<ElementLabel> out;
  out.reserve(static_cast<std::size_t>(n));
  if (n <= 5) {
    for (int i = 0; i < n; ++i) {
      out.emplace_back(kLabels[i]);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      out.push_back("e" + std::to_string(i));
    }
  }
  return out;
}

bool transitively_closed(const std::vector<std::uint64_t>& rows, int n) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if ((rows[static_cast<std::size_t>(x)] >> y) & 1U) {
        // row(x) must contain row(y)
        if ((rows[static_cast<std::size_t>(y)] & ~rows[static_cast<std::size_t>(x)]) != 0) {
          return false;
        }
      }
    }
  }
  return true;
}

FinitePoset poset_from_rows(const std::vector<std::uint64_t>& rows, int n,
                            const std::vector<ElementLabel>& labels, std::string name) {
  std::vector<std::pair<ElementLabel, ElementLabel>> pairs;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && ((rows[static_cast<std::size_t>(x)] >> y) & 1U)) {
        pairs.emplace_back(labels[static_cast<std::size_t>(x)],
                           labels[static_cast<std::size_t>(y)]);
      }
    }
  }
  return FinitePoset::validate(labels, pairs, std::move(name));
}

}  // namespace

std::vector<FinitePoset> enumerate_labeled_posets(int n) {
  constexpr int kMaxN = 5;
  if (n < 0 || n > kMaxN) {
    throw TooLarge("labeled poset enumeration", kMaxN);
  }
  const std::vector<ElementLabel> labels = default_labels(n);
  if (n == 0) {
    return {FinitePoset::validate({}, {}, "n0#0")};
  }

  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      slots.emplace_back(i, j);
    }
  }

  std::vector<FinitePoset> out;
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    states *= 3;
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (std::uint64_t state = 0; state < states; ++state) {
    for (int x = 0; x < n; ++x) {
      rows[static_cast<std::size_t>(x)] = std::uint64_t{1} << x;
    }
    std::uint64_t digits = state;
    for (const auto& [i, j] : slots) {
      switch (digits % 3) {
        case 1:
          rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
          break;
        case 2:
          rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
          break;
        default:
          break;
      }
      digits /= 3;
    }
    if (transitively_closed(rows, n)) {
      out.push_back(poset_from_rows(
          rows, n, labels, "n" + std::to_string(n) + "#" + std::to_string(out.size())));
    }
  }
  return out;
}

std::uint64_t progressive_map_count(const FinitePoset& p) {
  std::uint64_t count = 1;
  for (int x = 0; x < p.size(); ++x) {
    std::uint64_t up = 0;
    for (int y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) {
        ++up;
      }
    }
    count *= up;
  }
  return count;
}

std::vector<SelfMap> enumerate_progressive_maps(const FinitePoset& p) {
  constexpr int kMaxElements = 6;
  if (p.size() > kMaxElements) {
    throw TooLarge("progressive map enumeration", kMaxElements);
  }

  std::vector<std::vector<int>> up_sets;
  up_sets.reserve(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    std::vector<int> up;
    for (int y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) {
        up.push_back(y);
      }
    }
    up_sets.push_back(std::move(up));
  }

  std::vector<SelfMap> maps;
  if (p.size() == 0) {
    maps.push_back(SelfMap::from_indices(p, {}));
    return maps;
  }
  std::vector<std::size_t> odometer(static_cast<std::size_t>(p.size()), 0);
  while (true) {
    std::vector<int> table(static_cast<std::size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x) {
      table[static_cast<std::size_t>(x)] =
          up_sets[static_cast<std::size_t>(x)][odometer[static_cast<std::size_t>(x)]];
    }
    maps.push_back(SelfMap::from_indices(p, std::move(table)));

    int pos = p.size() - 1;
    while (pos >= 0) {
      auto& digit = odometer[static_cast<std::size_t>(pos)];
      if (++digit < up_sets[static_cast<std::size_t>(pos)].size()) {
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

FinitePoset random_poset(int n, std::mt19937_64& rng) {
  std::vector<ElementLabel> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i));
  }
  std::vector<std::pair<ElementLabel, ElementLabel>> covers;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // Edge probability ~0.4 from raw generator bits, for portability.
      if ((rng() & 0xFF) < 102) {
        covers.emplace_back(labels[static_cast<std::size_t>(i)],
                            labels[static_cast<std::size_t>(j)]);
      }
    }
  }
  return FinitePoset::close_covers(labels, covers, "random-n" + std::to_string(n));
}

SelfMap random_progressive_map(const FinitePoset& p, std::mt19937_64& rng) {
  std::vector<int> table(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    std::vector<int> up;
    for (int y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) {
        up.push_back(y);
      }
    }
    table[static_cast<std::size_t>(x)] = up[static_cast<std::size_t>(rng() % up.size())];
  }
  return SelfMap::from_indices(p, std::move(table), "random-progressive");
}

namespace {

std::string describe_map(const FinitePoset& p, const SelfMap& f) {
  std::string out;
  for (int x = 0; x < p.size(); ++x) {
    if (x > 0) {
      out += ",";
    }
    out += p.label(x) + "->" + p.label(f.apply(x));
  }
  return out.empty() ? "(empty)" : out;
}

class CorpusRunner {
 public:
  CorpusRunner(const CorpusOptions& options, CorpusReport& report)
      : options_(options), report_(report) {}

  void run_instance(const FinitePoset& p, const SelfMap& f, int base, CorpusCounts& counts) {
    ++counts.instances;
    const std::string base_label = p.label(base);
    auto fail = [&](const std::string& check, const std::string& detail) {
      report_.failures.push_back(
          CorpusFailure{p.name(), describe_map(p, f), base_label, check, detail});
    };

    FixedPointCertificate cert;
    try {
      cert = build_tower_finite(p, f, base_label);
    } catch (const Error& e) {
      fail("fixed-point-certificate", std::string("builder threw: ") + e.what());
      return;
    }

    // Re-verify the three certificate conclusions directly.
    const OrderedSubset members = trace_members(p, cert.trace);
    const int omega = std::get<int>(cert.omega);
    const bool in_tower =
        std::find(members.members.begin(), members.members.end(), omega) != members.members.end();
    const auto lub = p.lub(members.members);
    if (!in_tower || f.apply(omega) != omega || !lub || *lub != omega ||
        !cert.checks.all()) {
      fail("fixed-point-certificate", "omega=" + p.label(omega));
      return;
    }

    // The built trace must itself pass the tower check.
    const auto trace_labels = members.labels();
    if (!tower_check_passed(check_tower(p, f, base_label, trace_labels))) {
      fail("tower-check", "largest tower fails its own conditions");
    }

    // Finite and transfinite builders must agree through the adapter.
    try {
      const FinitePosetAdapter adapter(p);
      const auto transfinite =
          build_tower_transfinite(adapter, to_dynamic(f), Element{base}, TowerBudget{});
      const auto* cert2 = std::get_if<FixedPointCertificate>(&transfinite);
      if (!cert2 || !(*cert2 == cert)) {
        fail("cross-builder", "transfinite certificate differs");
      }
    } catch (const Error& e) {
      fail("cross-builder", std::string("transfinite builder threw: ") + e.what());
    }

    if (p.size() <= options_.tower_enumeration_limit) {
      const auto towers = enumerate_towers(p, f, base_label);
      // Exactly the nonempty prefixes of the largest tower.
      bool prefixes_ok = towers.size() == cert.trace.stages.size();
      if (prefixes_ok) {
        for (std::size_t k = 0; k < towers.size(); ++k) {
          TowerTrace prefix;
          prefix.base = cert.trace.base;
          prefix.stages.assign(cert.trace.stages.begin(),
                               cert.trace.stages.begin() + static_cast<std::ptrdiff_t>(k + 1));
          if (!(towers[k] == prefix)) {
            prefixes_ok = false;
            break;
          }
        }
      }
      if (!prefixes_ok) {
        fail("prefix-characterization",
             "enumerated " + std::to_string(towers.size()) + " towers for a largest tower of " +
                 std::to_string(cert.trace.stages.size()) + " stages");
      }

      for (std::size_t i = 0; i < towers.size(); ++i) {
        for (std::size_t j = 0; j < towers.size(); ++j) {
          if (i == j) {
            continue;
          }
          const auto relation =
              compare_towers(trace_members(p, towers[i]), trace_members(p, towers[j]));
          ++counts.towers_compared;
          if (relation.order == SegmentOrder::Incomparable) {
            fail("tower-comparison", "towers " + std::to_string(i) + " and " +
                                         std::to_string(j) + " incomparable");
          }
        }
      }
    }
  }

  void run_poset(const FinitePoset& p, const std::vector<SelfMap>& maps, CorpusCounts& counts) {
    ++counts.posets;
    counts.progressive_maps += maps.size();

    auto fail = [&](const std::string& check, const std::string& detail) {
      report_.failures.push_back(CorpusFailure{p.name(), "", "", check, detail});
    };

    if (p.size() > 0 && p.size() <= 8) {
      if (!enumerate_strictly_progressive(p).empty()) {
        fail("no-strict-progression", "found a strictly progressive self-map");
      }
    }

    for (const SelfMap& f : maps) {
      for (int base = 0; base < p.size(); ++base) {
        run_instance(p, f, base, counts);
      }
    }

    const ChoiceSelector selectors[] = {
        ChoiceSelector::least_id(), ChoiceSelector::seeded_random(options_.selector_seed)};
    for (const ChoiceSelector& sel : selectors) {
      const SelfMap smap = selector_map(p, sel);
      for (int base = 0; base < p.size(); ++base) {
        const auto outcome = find_maximal(p, sel, p.label(base));
        const bool cone_empty = p.strict_upper_cone(p.index_of(outcome.maximal)).empty();
        const bool stages_ok = outcome.trace.stages.size() <= static_cast<std::size_t>(p.size());
        const auto trace_labels = trace_members(p, outcome.trace).labels();
        const bool trace_ok =
            tower_check_passed(check_tower(p, smap, p.label(base), trace_labels));
        if (!outcome.cone_verified_empty || !cone_empty || !stages_ok || !trace_ok) {
          report_.failures.push_back(CorpusFailure{
              p.name(), smap.name(), p.label(base), "maximality", "maximal=" + outcome.maximal});
        }
      }
    }
  }

 private:
  const CorpusOptions& options_;
  CorpusReport& report_;
};

}  // namespace

CorpusReport verify_corpus(int n_max, const CorpusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CorpusReport report;
  CorpusRunner runner(options, report);

  for (int n = 1; n <= n_max; ++n) {
    CorpusCounts counts;
    counts.n = n;
    for (const FinitePoset& p : enumerate_labeled_posets(n)) {
      runner.run_poset(p, enumerate_progressive_maps(p), counts);
    }
    report.per_n.push_back(counts);
  }

  if (options.random_n > 0 && !options.random_seeds.empty()) {
    CorpusCounts counts;
    counts.n = options.random_n;
    counts.random = true;
    for (std::uint64_t seed : options.random_seeds) {
      std::mt19937_64 rng(seed);
      const FinitePoset p = random_poset(options.random_n, rng);
      std::vector<SelfMap> maps;
      maps.reserve(static_cast<std::size_t>(options.random_maps_per_poset));
      for (int i = 0; i < options.random_maps_per_poset; ++i) {
        maps.push_back(random_progressive_map(p, rng));
      }
      runner.run_poset(p, maps, counts);
      report.random_seeds.push_back(seed);
    }
    report.per_n.push_back(counts);
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace towers
