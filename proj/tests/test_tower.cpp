#include <algorithm>

#include "doctest.h"
#include "towers/oracle.hpp"
#include "towers/tower.hpp"

using towers::Element;
using towers::ElementLabel;
using towers::FinitePoset;
using towers::FinitePosetAdapter;
using towers::FixedPointCertificate;
using towers::Ordinal;
using towers::OrdinalIntervalProvider;
using towers::SelfMap;
using towers::StageKind;
using towers::TowerBudget;
using towers::TowerTrace;

namespace {

std::vector<ElementLabel> labels(std::initializer_list<const char*> names) {
  return {names.begin(), names.end()};
}

SelfMap diamond_map(const FinitePoset& diamond) {
  return SelfMap::from_table(
      diamond, {{"bot", "l"}, {"l", "top"}, {"r", "top"}, {"top", "top"}}, "diamond-f");
}

std::vector<ElementLabel> trace_labels(const FinitePoset& p, const TowerTrace& trace) {
  return trace_members(p, trace).labels();
}

}  // namespace

TEST_CASE("self-map construction and flags") {
  const auto chain = towers::fixtures::chain3();
  const auto f = SelfMap::from_table(chain, {{"a", "b"}, {"b", "c"}, {"c", "c"}});
  CHECK(f.is_progressive());
  CHECK(!f.is_strictly_progressive());
  CHECK(f.apply("a") == "b");

  const auto id = SelfMap::identity(chain);
  CHECK(id.is_progressive());
  CHECK(!id.is_strictly_progressive());

  // b -> a goes down.
  const auto down = SelfMap::from_table(chain, {{"a", "b"}, {"b", "a"}, {"c", "c"}});
  CHECK(!down.is_progressive());
  CHECK(*down.progressive_witness() == chain.index_of("b"));

  CHECK_THROWS_AS(SelfMap::from_table(chain, {{"a", "b"}}), towers::IncompleteAssignment);
  CHECK_THROWS_AS(SelfMap::from_table(chain, {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "c"}}),
                  towers::InvalidLabel);
  CHECK_THROWS_AS(SelfMap::from_table(chain, {{"a", "zzz"}, {"b", "c"}, {"c", "c"}}),
                  towers::UnknownElement);
}

TEST_CASE("check_tower on finite candidates") {
  const auto diamond = towers::fixtures::diamond();
  const auto f = diamond_map(diamond);

  CHECK(tower_check_passed(check_tower(diamond, f, "bot", labels({"bot", "l", "top"}))));
  CHECK(tower_check_passed(check_tower(diamond, f, "bot", labels({"bot"}))));

  const auto skip = check_tower(diamond, f, "bot", labels({"bot", "top"}));
  const auto& violation = std::get<towers::TowerViolation>(skip);
  CHECK(violation.condition == towers::TowerViolation::Condition::Successor);
  CHECK(violation.witness.find("f(bot) = l") != std::string::npos);

  const auto wrong_base = check_tower(diamond, f, "bot", labels({"l", "top"}));
  CHECK(std::get<towers::TowerViolation>(wrong_base).condition ==
        towers::TowerViolation::Condition::WellOrderBase);

  const auto not_ascending = check_tower(diamond, f, "bot", labels({"bot", "r", "l"}));
  CHECK(std::get<towers::TowerViolation>(not_ascending).condition ==
        towers::TowerViolation::Condition::WellOrderBase);

  CHECK_THROWS_AS(check_tower(diamond, f, "bot", std::vector<ElementLabel>{}),
                  towers::EmptySubset);
  CHECK_THROWS_AS(check_tower(diamond, f, "bot", labels({"zzz"})), towers::UnknownElement);

  const auto not_prog =
      SelfMap::from_table(diamond, {{"bot", "bot"}, {"l", "bot"}, {"r", "r"}, {"top", "top"}});
  CHECK_THROWS_AS(check_tower(diamond, not_prog, "bot", labels({"bot"})),
                  towers::NotProgressive);
}

TEST_CASE("build_tower_finite on the diamond") {
  const auto diamond = towers::fixtures::diamond();
  const auto cert = build_tower_finite(diamond, diamond_map(diamond), "bot");

  CHECK(trace_labels(diamond, cert.trace) == labels({"bot", "l", "top"}));
  CHECK(cert.omega == Element{diamond.index_of("top")});
  CHECK(cert.checks.all());
  CHECK(cert.trace.stages[0].kind == StageKind::Base);
  CHECK(cert.trace.stages[1].kind == StageKind::Successor);
  CHECK(cert.trace.stages[2].index == Ordinal::finite(2));
}

TEST_CASE("build_tower_finite fixes identity immediately") {
  const auto vee = towers::fixtures::vee();
  const auto cert = build_tower_finite(vee, SelfMap::identity(vee), "r");
  CHECK(trace_labels(vee, cert.trace) == labels({"r"}));
  CHECK(cert.omega == Element{vee.index_of("r")});
  CHECK(cert.checks.all());
}

TEST_CASE("build_tower_finite on the chain") {
  const auto chain = towers::fixtures::chain3();
  const auto f = SelfMap::from_table(chain, {{"a", "b"}, {"b", "c"}, {"c", "c"}});
  const auto cert = build_tower_finite(chain, f, "a");
  CHECK(trace_labels(chain, cert.trace) == labels({"a", "b", "c"}));
  CHECK(cert.omega == Element{chain.index_of("c")});
  CHECK(cert.checks.all());

  const auto down = SelfMap::from_table(chain, {{"a", "b"}, {"b", "a"}, {"c", "c"}});
  CHECK_THROWS_AS(build_tower_finite(chain, down, "a"), towers::NotProgressive);
}

TEST_CASE("enumerate_towers returns exactly the prefixes") {
  const auto diamond = towers::fixtures::diamond();
  const auto towers_found = enumerate_towers(diamond, diamond_map(diamond), "bot");
  REQUIRE(towers_found.size() == 3);
  CHECK(trace_labels(diamond, towers_found[0]) == labels({"bot"}));
  CHECK(trace_labels(diamond, towers_found[1]) == labels({"bot", "l"}));
  CHECK(trace_labels(diamond, towers_found[2]) == labels({"bot", "l", "top"}));

  const auto identity_towers = enumerate_towers(diamond, SelfMap::identity(diamond), "r");
  REQUIRE(identity_towers.size() == 1);
  CHECK(trace_labels(diamond, identity_towers[0]) == labels({"r"}));

  const auto chain = towers::fixtures::chain3();
  const auto f = SelfMap::from_table(chain, {{"a", "b"}, {"b", "c"}, {"c", "c"}});
  const auto from_b = enumerate_towers(chain, f, "b");
  REQUIRE(from_b.size() == 2);
  CHECK(trace_labels(chain, from_b[0]) == labels({"b"}));
  CHECK(trace_labels(chain, from_b[1]) == labels({"b", "c"}));
}

TEST_CASE("enumerate_towers guards against large posets") {
  std::vector<ElementLabel> many;
  std::vector<std::pair<ElementLabel, ElementLabel>> covers;
  for (int i = 0; i < 13; ++i) {
    many.push_back("e" + std::to_string(i));
    if (i > 0) {
      covers.emplace_back("e" + std::to_string(i - 1), "e" + std::to_string(i));
    }
  }
  const auto big = FinitePoset::close_covers(many, covers);
  CHECK_THROWS_AS(enumerate_towers(big, SelfMap::identity(big), "e0"), towers::TooLarge);
}

TEST_CASE("compare_towers on towers and arbitrary chains") {
  const auto diamond = towers::fixtures::diamond();

  const auto just_bot = make_chain(diamond, labels({"bot"}));
  const auto full = make_chain(diamond, labels({"bot", "l", "top"}));
  const auto first = compare_towers(just_bot, full);
  CHECK(first.order == towers::SegmentOrder::FirstInitialInSecond);
  CHECK(first.common_prefix.labels() == labels({"bot"}));

  const auto swapped = compare_towers(full, just_bot);
  CHECK(swapped.order == towers::SegmentOrder::SecondInitialInFirst);

  CHECK(compare_towers(full, full).order == towers::SegmentOrder::Equal);

  const auto left = make_chain(diamond, labels({"bot", "l"}));
  const auto right = make_chain(diamond, labels({"bot", "r"}));
  const auto split = compare_towers(left, right);
  CHECK(split.order == towers::SegmentOrder::Incomparable);
  CHECK(split.common_prefix.labels() == labels({"bot"}));

  const auto from_l = make_chain(diamond, labels({"l", "top"}));
  CHECK_THROWS_AS(compare_towers(full, from_l), towers::BaseMismatch);

  const auto chain = towers::fixtures::chain3();
  const auto other = make_chain(chain, labels({"a"}));
  CHECK_THROWS_AS(compare_towers(full, other), towers::HostMismatch);
}

TEST_CASE("transfinite build on an ordinal interval reaches the top") {
  const OrdinalIntervalProvider interval(Ordinal::parse("w*2"));
  const auto result = build_tower_transfinite(interval, interval.clamped_successor(),
                                              Element{Ordinal::finite(0)}, TowerBudget{8, 64});
  const auto& cert = std::get<FixedPointCertificate>(result);
  CHECK(cert.omega == Element{Ordinal::parse("w*2")});
  CHECK(cert.checks.all());

  std::vector<Ordinal> limit_indices;
  for (const auto& stage : cert.trace.stages) {
    if (stage.kind == StageKind::Limit) {
      limit_indices.push_back(stage.index);
      CHECK(stage.index == std::get<Ordinal>(stage.element));
    }
  }
  REQUIRE(limit_indices.size() == 2);
  CHECK(limit_indices[0] == Ordinal::parse("w"));
  CHECK(limit_indices[1] == Ordinal::parse("w*2"));
}

TEST_CASE("transfinite build starting at the top is immediate") {
  const OrdinalIntervalProvider interval(Ordinal::omega());
  const auto result = build_tower_transfinite(interval, interval.clamped_successor(),
                                              Element{Ordinal::omega()});
  const auto& cert = std::get<FixedPointCertificate>(result);
  CHECK(cert.trace.stages.size() == 1);
  CHECK(cert.omega == Element{Ordinal::omega()});
  CHECK(cert.checks.all());
}

TEST_CASE("finite and transfinite builders agree through the adapter") {
  const auto chain = towers::fixtures::chain3();
  const auto f = SelfMap::from_table(chain, {{"a", "b"}, {"b", "c"}, {"c", "c"}});
  const auto finite_cert = build_tower_finite(chain, f, "a");

  const FinitePosetAdapter adapter(chain);
  const auto result =
      build_tower_transfinite(adapter, to_dynamic(f), Element{chain.index_of("a")},
                              TowerBudget{3, 0});
  CHECK(std::get<FixedPointCertificate>(result) == finite_cert);
}

TEST_CASE("transfinite budgets: exhaustion and unavailable acceleration") {
  const OrdinalIntervalProvider interval(Ordinal::parse("w^2"));
  const auto result = build_tower_transfinite(interval, interval.clamped_successor(),
                                              Element{Ordinal::finite(0)}, TowerBudget{4, 2});
  const auto& exhausted = std::get<towers::BudgetExhausted>(result);
  // Two accelerations got us to w*2; the top w^2 is out of reach.
  CHECK(exhausted.partial.stages.back().element == Element{Ordinal::parse("w*2+4")});

  const auto chain = towers::fixtures::chain3();
  const FinitePosetAdapter adapter(chain);
  const auto f = SelfMap::from_table(chain, {{"a", "b"}, {"b", "c"}, {"c", "c"}});
  CHECK_THROWS_AS(build_tower_transfinite(adapter, to_dynamic(f), Element{chain.index_of("a")},
                                          TowerBudget{1, 64}),
                  towers::AccelerationUnavailable);
}

TEST_CASE("transfinite builder rejects non-progressive steps") {
  const OrdinalIntervalProvider interval(Ordinal::omega());
  const towers::DynamicMap bad{"drop-to-zero", [](const Element&) {
                                 return Element{Ordinal::finite(0)};
                               }};
  CHECK_THROWS_AS(
      build_tower_transfinite(interval, bad, Element{Ordinal::finite(5)}, TowerBudget{}),
      towers::NotProgressive);
}

TEST_CASE("check_tower validates recorded transfinite traces") {
  const OrdinalIntervalProvider interval(Ordinal::parse("w*2"));
  const auto succ = interval.clamped_successor();
  const auto result =
      build_tower_transfinite(interval, succ, Element{Ordinal::finite(0)}, TowerBudget{8, 64});
  auto cert = std::get<FixedPointCertificate>(result);

  CHECK(tower_check_passed(check_tower(interval, succ, Element{Ordinal::finite(0)}, cert.trace)));

  // Tamper with a successor element.
  auto broken = cert.trace;
  broken.stages[3].element = Element{Ordinal::finite(9)};
  const auto violation = check_tower(interval, succ, Element{Ordinal::finite(0)}, broken);
  CHECK(!tower_check_passed(violation));

  // Tamper with a limit element.
  auto broken_limit = cert.trace;
  for (auto& stage : broken_limit.stages) {
    if (stage.kind == StageKind::Limit) {
      stage.element = Element{std::get<Ordinal>(stage.element).successor()};
      break;
    }
  }
  // The tampered stage now both breaks the ascent at the next stage and
  // fails the lub condition; either way it must not pass.
  CHECK(!tower_check_passed(check_tower(interval, succ, Element{Ordinal::finite(0)},
                                        broken_limit)));

  // Indices that jump by something other than a successor or omega-jump
  // make the record unverifiable.
  auto scrambled = cert.trace;
  scrambled.stages[1].index = Ordinal::finite(7);
  CHECK_THROWS_AS(check_tower(interval, succ, Element{Ordinal::finite(0)}, scrambled),
                  towers::NotAscending);

  const auto wrong_base = check_tower(interval, succ, Element{Ordinal::finite(3)}, cert.trace);
  CHECK(std::get<towers::TowerViolation>(wrong_base).condition ==
        towers::TowerViolation::Condition::WellOrderBase);
}

TEST_CASE("limit stages dominate everything before them") {
  const OrdinalIntervalProvider interval(Ordinal::parse("w*3+5"));
  const auto result = build_tower_transfinite(interval, interval.clamped_successor(),
                                              Element{Ordinal::finite(0)}, TowerBudget{16, 64});
  const auto& cert = std::get<FixedPointCertificate>(result);
  for (std::size_t i = 0; i < cert.trace.stages.size(); ++i) {
    if (cert.trace.stages[i].kind != StageKind::Limit) {
      continue;
    }
    const auto& limit = cert.trace.stages[i].element;
    for (std::size_t j = 0; j < i; ++j) {
      CHECK(interval.lt(cert.trace.stages[j].element, limit));
    }
    // Below every sampled upper bound of the earlier stages.
    const std::vector<Element> bounds{
        limit, Element{std::get<Ordinal>(limit).successor()}, Element{interval.top()}};
    for (const auto& bound : bounds) {
      if (interval.leq(bound, Element{interval.top()})) {
        bool upper = true;
        for (std::size_t j = 0; j < i; ++j) {
          upper = upper && interval.leq(cert.trace.stages[j].element, bound);
        }
        if (upper) {
          CHECK(interval.leq(limit, bound));
        }
      }
    }
  }
}
