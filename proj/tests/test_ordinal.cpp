#include <random>

#include "doctest.h"
#include "towers/ordinal.hpp"

using towers::OrdCmp;
using towers::Ordinal;

namespace {

Ordinal w() { return Ordinal::omega(); }
Ordinal fin(std::uint64_t n) { return Ordinal::finite(n); }

// w*a + b
Ordinal omega_times_plus(std::uint64_t a, std::uint64_t b) {
  std::vector<Ordinal::Term> terms;
  if (a > 0) {
    terms.push_back({fin(1), a});
  }
  if (b > 0) {
    terms.push_back({fin(0), b});
  }
  return Ordinal::from_terms(std::move(terms));
}

// Random canonical CNF value, depth-bounded, coefficients <= 9.
Ordinal random_cnf(std::mt19937_64& rng, int depth) {
  if (depth == 0) {
    return fin(rng() % 10);
  }
  const int term_count = static_cast<int>(rng() % 4);
  std::vector<Ordinal> exponents;
  for (int i = 0; i < term_count; ++i) {
    Ordinal e = random_cnf(rng, depth - 1);
    bool duplicate = false;
    for (const Ordinal& seen : exponents) {
      if (seen == e) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      exponents.push_back(std::move(e));
    }
  }
  std::sort(exponents.begin(), exponents.end(),
            [](const Ordinal& a, const Ordinal& b) { return b < a; });
  std::vector<Ordinal::Term> terms;
  for (Ordinal& e : exponents) {
    terms.push_back({std::move(e), 1 + rng() % 9});
  }
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("ordinal comparison basic cases") {
  CHECK(ord_compare(fin(3), w()) == OrdCmp::Less);
  CHECK(ord_compare(omega_times_plus(2, 1), omega_times_plus(2, 1)) == OrdCmp::Equal);
  CHECK(ord_compare(Ordinal::omega_power(fin(2)), omega_times_plus(5, 9)) == OrdCmp::Greater);
  CHECK(fin(0) < fin(1));
  CHECK(fin(7) < omega_times_plus(1, 0));
}

TEST_CASE("ordinal successor") {
  CHECK(fin(0).successor() == fin(1));
  CHECK(w().successor() == omega_times_plus(1, 1));
  CHECK(omega_times_plus(2, 4).successor() == omega_times_plus(2, 5));
}

TEST_CASE("ordinal classification") {
  CHECK(fin(0).classify().kind == Ordinal::Kind::Zero);

  const auto seven = fin(7).classify();
  CHECK(seven.kind == Ordinal::Kind::Successor);
  CHECK(*seven.predecessor == fin(6));

  CHECK(w().classify().kind == Ordinal::Kind::Limit);

  // w^2 + w*3
  const Ordinal big = Ordinal::from_terms({{fin(2), 1}, {fin(1), 3}});
  CHECK(big.classify().kind == Ordinal::Kind::Limit);

  const auto after_limit = omega_times_plus(1, 1).classify();
  CHECK(after_limit.kind == Ordinal::Kind::Successor);
  CHECK(*after_limit.predecessor == w());
}

TEST_CASE("plus_omega") {
  CHECK(fin(0).plus_omega() == w());
  CHECK(omega_times_plus(1, 5).plus_omega() == omega_times_plus(2, 0));
  CHECK(Ordinal::omega_power(fin(2)).plus_omega() ==
        Ordinal::from_terms({{fin(2), 1}, {fin(1), 1}}));
}

TEST_CASE("parse examples") {
  CHECK(Ordinal::parse("w*2+3") == omega_times_plus(2, 3));
  CHECK(Ordinal::parse("w^2+w+1") ==
        Ordinal::from_terms({{fin(2), 1}, {fin(1), 1}, {fin(0), 1}}));
  CHECK(Ordinal::parse("w^w") == Ordinal::omega_power(w()));
  CHECK(Ordinal::parse("0") == fin(0));
  CHECK(Ordinal::parse("17") == fin(17));
  CHECK(Ordinal::parse("w^(w+1)*2") ==
        Ordinal::omega_power(omega_times_plus(1, 1), 2));
  CHECK(Ordinal::parse("w^w^w") == Ordinal::omega_power(Ordinal::omega_power(w())));
  CHECK(Ordinal::parse("w^0*5") == fin(5));
}

TEST_CASE("parse rejects malformed and non-canonical input") {
  CHECK_THROWS_AS(Ordinal::parse(""), towers::ParseError);
  CHECK_THROWS_AS(Ordinal::parse("w+w"), towers::ParseError);
  CHECK_THROWS_AS(Ordinal::parse("1+w"), towers::ParseError);
  CHECK_THROWS_AS(Ordinal::parse("w^"), towers::ParseError);
  CHECK_THROWS_AS(Ordinal::parse("w*0"), towers::ParseError);
  CHECK_THROWS_AS(Ordinal::parse("w)"), towers::ParseError);
  CHECK_THROWS_AS(Ordinal::parse("w^(w"), towers::ParseError);
  CHECK_THROWS_AS(Ordinal::parse("0+1"), towers::ParseError);
  try {
    Ordinal::parse("w+w");
    FAIL("expected ParseError");
  } catch (const towers::ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("from_terms validates canonical form") {
  CHECK_THROWS_AS(Ordinal::from_terms({{fin(1), 1}, {fin(1), 1}}), towers::NonCanonical);
  CHECK_THROWS_AS(Ordinal::from_terms({{fin(0), 1}, {fin(1), 1}}), towers::NonCanonical);
  CHECK_THROWS_AS(Ordinal::from_terms({{fin(1), 0}}), towers::NonCanonical);
}

TEST_CASE("finite values") {
  CHECK(fin(0).is_zero());
  CHECK(fin(5).is_finite());
  CHECK(fin(5).finite_value() == 5);
  CHECK(!w().is_finite());
  CHECK_THROWS_AS(w().finite_value(), towers::Error);
}

TEST_CASE("comparison is a total order on generated values") {
  std::mt19937_64 rng(20240817);
  for (int i = 0; i < 1000; ++i) {
    const Ordinal a = random_cnf(rng, 3);
    const Ordinal b = random_cnf(rng, 3);
    const Ordinal c = random_cnf(rng, 3);

    // trichotomy
    const int lt = a < b ? 1 : 0;
    const int eq = a == b ? 1 : 0;
    const int gt = b < a ? 1 : 0;
    CHECK(lt + eq + gt == 1);

    // transitivity
    if (a <= b && b <= c) {
      CHECK(a <= c);
    }
  }
}

TEST_CASE("classify and successor cohere on generated values") {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 1000; ++i) {
    const Ordinal a = random_cnf(rng, 3);
    const auto classified = a.successor().classify();
    CHECK(classified.kind == Ordinal::Kind::Successor);
    CHECK(*classified.predecessor == a);
  }
}

TEST_CASE("plus_omega yields the next representable limit") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 500; ++i) {
    const Ordinal a = random_cnf(rng, 2);
    const Ordinal jump = a.plus_omega();
    CHECK(a < jump);
    CHECK(jump.classify().kind == Ordinal::Kind::Limit);

    // No generated limit ordinal fits strictly between.
    const Ordinal probe = random_cnf(rng, 2);
    if (probe.classify().kind == Ordinal::Kind::Limit) {
      CHECK(!(a < probe && probe < jump));
    }
  }
}

TEST_CASE("parse and format round-trip") {
  std::mt19937_64 rng(90125);
  for (int i = 0; i < 1000; ++i) {
    const Ordinal a = random_cnf(rng, 3);
    CHECK(Ordinal::parse(a.to_string()) == a);
  }
  CHECK(fin(0).to_string() == "0");
  CHECK(w().to_string() == "w");
  CHECK(omega_times_plus(2, 3).to_string() == "w*2+3");
  CHECK(Ordinal::omega_power(w()).to_string() == "w^w");
  CHECK(Ordinal::omega_power(omega_times_plus(1, 1), 2).to_string() == "w^(w+1)*2");
}
