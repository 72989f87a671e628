#include "doctest.h"
#include "support/test_oracles.hpp"
#include "towers/maximality.hpp"
#include "towers/oracle.hpp"

using towers::ChoiceSelector;
using towers::ElementLabel;
using towers::FinitePoset;
using towers::SelfMap;

namespace {

std::vector<ElementLabel> labels(std::initializer_list<const char*> names) {
  return {names.begin(), names.end()};
}

std::vector<ElementLabel> trace_labels(const FinitePoset& p, const towers::TowerTrace& trace) {
  return trace_members(p, trace).labels();
}

}  // namespace

TEST_CASE("selector_map with least-id choices") {
  const auto vee = towers::fixtures::vee();
  const auto f_vee = selector_map(vee, ChoiceSelector::least_id());
  CHECK(f_vee.apply("bot") == "l");
  CHECK(f_vee.apply("l") == "l");
  CHECK(f_vee.apply("r") == "r");
  CHECK(f_vee.is_progressive());
  CHECK(!f_vee.is_strictly_progressive());

  const auto chain = towers::fixtures::chain3();
  const auto f_chain = selector_map(chain, ChoiceSelector::least_id());
  CHECK(f_chain.apply("a") == "b");
  CHECK(f_chain.apply("b") == "c");
  CHECK(f_chain.apply("c") == "c");

  const auto diamond = towers::fixtures::diamond();
  const auto f_diamond = selector_map(diamond, ChoiceSelector::least_id());
  CHECK(f_diamond.apply("bot") == "l");
  CHECK(f_diamond.apply("l") == "top");
  CHECK(f_diamond.apply("r") == "top");
  CHECK(f_diamond.apply("top") == "top");
}

TEST_CASE("random selector always picks inside the cone") {
  for (const auto* name : {"CHAIN3", "DIAMOND", "VEE", "ANTICHAIN2"}) {
    const auto p = towers::fixtures::by_name(name);
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xDEADBEEFULL}) {
      const auto sel = ChoiceSelector::seeded_random(seed);
      for (int x = 0; x < p.size(); ++x) {
        const auto cone = p.strict_upper_cone(x);
        if (cone.empty()) {
          continue;
        }
        const int chosen = sel.choose(p, x);
        CHECK(std::find(cone.begin(), cone.end(), chosen) != cone.end());
      }
    }
  }
}

TEST_CASE("random selector choice matches the documented formula") {
  const auto diamond = towers::fixtures::diamond();
  const std::uint64_t seed = 123456789;
  const auto sel = ChoiceSelector::seeded_random(seed);
  const int bot = diamond.index_of("bot");
  const auto cone = diamond.strict_upper_cone(bot);

  const std::uint64_t h = test_oracles::splitmix64_reference(
      seed ^ test_oracles::splitmix64_reference(static_cast<std::uint64_t>(bot) + 1));
  const int expected = cone[static_cast<std::size_t>(h % cone.size())];
  CHECK(sel.choose(diamond, bot) == expected);
}

TEST_CASE("find_maximal on fixtures") {
  const auto vee = towers::fixtures::vee();
  const auto vee_outcome = find_maximal(vee, ChoiceSelector::least_id(), "bot");
  CHECK(vee_outcome.maximal == "l");
  CHECK(vee_outcome.cone_verified_empty);
  CHECK(trace_labels(vee, vee_outcome.trace) == labels({"bot", "l"}));

  const auto diamond = towers::fixtures::diamond();
  const auto diamond_outcome = find_maximal(diamond, ChoiceSelector::least_id(), "r");
  CHECK(diamond_outcome.maximal == "top");
  CHECK(diamond_outcome.cone_verified_empty);
  CHECK(trace_labels(diamond, diamond_outcome.trace) == labels({"r", "top"}));

  const auto antichain = towers::fixtures::antichain2();
  for (std::uint64_t seed : {0ULL, 7ULL}) {
    const auto outcome = find_maximal(antichain, ChoiceSelector::seeded_random(seed), "x");
    CHECK(outcome.maximal == "x");
    CHECK(outcome.cone_verified_empty);
    CHECK(trace_labels(antichain, outcome.trace) == labels({"x"}));
  }
}

TEST_CASE("identical seeds give identical outcomes") {
  const auto diamond = towers::fixtures::diamond();
  for (std::uint64_t seed : {1ULL, 99ULL, 0xABCDEFULL}) {
    const auto first = find_maximal(diamond, ChoiceSelector::seeded_random(seed), "bot");
    const auto second = find_maximal(diamond, ChoiceSelector::seeded_random(seed), "bot");
    CHECK(first.maximal == second.maximal);
    CHECK(first.trace == second.trace);
  }
}

TEST_CASE("no strictly progressive self-map exists on the fixtures") {
  for (const auto* name : {"CHAIN3", "DIAMOND", "VEE", "ANTICHAIN2"}) {
    const auto p = towers::fixtures::by_name(name);
    CHECK(enumerate_strictly_progressive(p).empty());
  }
}

TEST_CASE("strictly progressive enumeration guard") {
  std::vector<ElementLabel> many;
  for (int i = 0; i < 9; ++i) {
    many.push_back("e" + std::to_string(i));
  }
  const auto big = FinitePoset::close_covers(many, {});
  CHECK_THROWS_AS(enumerate_strictly_progressive(big), towers::TooLarge);
}

TEST_CASE("certificates and strict progressiveness exclude each other") {
  // On finite hosts every progressive map yields a certificate, and none
  // of them is strictly progressive.
  for (const auto* name : {"CHAIN3", "VEE", "ANTICHAIN2"}) {
    const auto p = towers::fixtures::by_name(name);
    for (const SelfMap& f : towers::enumerate_progressive_maps(p)) {
      for (int base = 0; base < p.size(); ++base) {
        const auto cert = build_tower_finite(p, f, p.label(base));
        CHECK(cert.checks.all());
        CHECK(!(cert.checks.all() && f.is_strictly_progressive()));
      }
    }
  }
}

TEST_CASE("maximality traces are selector-map towers") {
  for (const auto* name : {"CHAIN3", "DIAMOND", "VEE", "ANTICHAIN2"}) {
    const auto p = towers::fixtures::by_name(name);
    for (const auto& sel :
         {ChoiceSelector::least_id(), ChoiceSelector::seeded_random(0xC0FFEE)}) {
      const auto f = selector_map(p, sel);
      for (int base = 0; base < p.size(); ++base) {
        const auto outcome = find_maximal(p, sel, p.label(base));
        CHECK(outcome.cone_verified_empty);
        CHECK(p.strict_upper_cone(p.index_of(outcome.maximal)).empty());
        CHECK(outcome.trace.stages.size() <= static_cast<std::size_t>(p.size()));
        CHECK(tower_check_passed(
            check_tower(p, f, p.label(base), trace_labels(p, outcome.trace))));
      }
    }
  }
}
