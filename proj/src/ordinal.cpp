#include "towers/ordinal.hpp"

#include <algorithm>
#include <utility>

namespace towers {

Ordinal::Ordinal() = default;
Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
Ordinal::~Ordinal() = default;

Ordinal Ordinal::finite(std::uint64_t n) {
  Ordinal out;
  if (n > 0) {
    out.terms_.push_back(Term{Ordinal(), n});
  }
  return out;
}

Ordinal Ordinal::omega() { return omega_power(finite(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient) {
  if (coefficient == 0) {
    throw NonCanonical("omega_power requires a positive coefficient");
  }
  Ordinal out;
  out.terms_.push_back(Term{exponent, coefficient});
  return out;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) {
      throw NonCanonical("coefficients must be >= 1");
    }
    if (i + 1 < terms.size() && !(terms[i + 1].exponent < terms[i].exponent)) {
      throw NonCanonical("exponents must be strictly decreasing");
    }
  }
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

bool Ordinal::is_zero() const { return terms_.empty(); }

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t Ordinal::finite_value() const {
  if (terms_.empty()) {
    return 0;
  }
  if (!is_finite()) {
    throw Error("ordinal is not finite: " + to_string());
  }
  return terms_[0].coefficient;
}

const std::vector<Ordinal::Term>& Ordinal::terms() const { return terms_; }

Ordinal Ordinal::successor() const {
  Ordinal out = *this;
  if (!out.terms_.empty() && out.terms_.back().exponent.is_zero()) {
    out.terms_.back().coefficient += 1;
  } else {
    out.terms_.push_back(Term{Ordinal(), 1});
  }
  return out;
}

ClassifiedOrdinal Ordinal::classify() const {
  if (terms_.empty()) {
    return {Kind::Zero, std::nullopt};
  }
  if (!terms_.back().exponent.is_zero()) {
    return {Kind::Limit, std::nullopt};
  }
  Ordinal pred = *this;
  if (pred.terms_.back().coefficient == 1) {
    pred.terms_.pop_back();
  } else {
    pred.terms_.back().coefficient -= 1;
  }
  return {Kind::Successor, std::move(pred)};
}

Ordinal Ordinal::plus_omega() const {
  Ordinal out = *this;
  // The finite tail (the unique exponent-zero term, if any) is absorbed.
  if (!out.terms_.empty() && out.terms_.back().exponent.is_zero()) {
    out.terms_.pop_back();
  }
  const Ordinal one = finite(1);
  if (!out.terms_.empty() && out.terms_.back().exponent == one) {
    out.terms_.back().coefficient += 1;
  } else {
    out.terms_.push_back(Term{one, 1});
  }
  return out;
}

bool Ordinal::operator==(const Ordinal& other) const { return terms_ == other.terms_; }

std::strong_ordering Ordinal::operator<=>(const Ordinal& other) const {
  const std::size_t common = std::min(terms_.size(), other.terms_.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto exp_cmp = terms_[i].exponent <=> other.terms_[i].exponent;
    if (exp_cmp != std::strong_ordering::equal) {
      return exp_cmp;
    }
    const auto coeff_cmp = terms_[i].coefficient <=> other.terms_[i].coefficient;
    if (coeff_cmp != std::strong_ordering::equal) {
      return coeff_cmp;
    }
  }
  return terms_.size() <=> other.terms_.size();
}

OrdCmp ord_compare(const Ordinal& a, const Ordinal& b) {
  const auto cmp = a <=> b;
  if (cmp == std::strong_ordering::less) {
    return OrdCmp::Less;
  }
  return cmp == std::strong_ordering::greater ? OrdCmp::Greater : OrdCmp::Equal;
}

namespace {

// Grammar:  sum := product ("+" product)*
//           product := "w" ("^" exp_atom)? ("*" nat)? | nat
//           exp_atom := nat | "w" ("^" exp_atom)? | "(" sum ")"
class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal run() {
    Ordinal result = parse_sum();
    if (pos_ != text_.size()) {
      throw ParseError(pos_, "end of input");
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  bool consume(char c) {
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t parse_nat() {
    if (at_end() || peek() < '0' || peek() > '9') {
      fail("digit");
    }
    std::uint64_t value = 0;
    while (!at_end() && peek() >= '0' && peek() <= '9') {
      const std::uint64_t digit = static_cast<std::uint64_t>(peek() - '0');
      if (value > (UINT64_MAX - digit) / 10) {
        fail("a smaller number");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  Ordinal parse_exp_atom() {
    if (at_end()) {
      fail("exponent");
    }
    if (consume('(')) {
      Ordinal inner = parse_sum();
      if (!consume(')')) {
        fail("')'");
      }
      return inner;
    }
    if (consume('w')) {
      if (consume('^')) {
        return Ordinal::omega_power(parse_exp_atom());
      }
      return Ordinal::omega();
    }
    return Ordinal::finite(parse_nat());
  }

  // Returns (exponent, coefficient); coefficient 0 encodes the literal "0".
  Ordinal::Term parse_product() {
    if (at_end()) {
      fail("'w' or digit");
    }
    if (consume('w')) {
      Ordinal exponent = Ordinal::finite(1);
      if (consume('^')) {
        exponent = parse_exp_atom();
      }
      std::uint64_t coefficient = 1;
      if (consume('*')) {
        coefficient = parse_nat();
        if (coefficient == 0) {
          fail("positive coefficient");
        }
      }
      return Ordinal::Term{std::move(exponent), coefficient};
    }
    return Ordinal::Term{Ordinal(), parse_nat()};
  }

  Ordinal parse_sum() {
    std::vector<Ordinal::Term> terms;
    while (true) {
      const std::size_t product_pos = pos_;
      Ordinal::Term term = parse_product();
      if (term.coefficient == 0) {
        // A literal "0" is only the zero ordinal when it stands alone.
        if (!terms.empty() || (!at_end() && peek() == '+')) {
          pos_ = product_pos;
          fail("positive term");
        }
        return Ordinal();
      }
      if (!terms.empty() && !(term.exponent < terms.back().exponent)) {
        pos_ = product_pos;
        fail("strictly decreasing exponents");
      }
      terms.push_back(std::move(term));
      if (!consume('+')) {
        break;
      }
    }
    return Ordinal::from_terms(std::move(terms));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_exponent(const Ordinal& e) {
  if (e.is_finite()) {
    return std::to_string(e.finite_value());
  }
  // A single w-power with coefficient 1 nests without parentheses
  // ("w^w^w" parses right-associatively); anything else needs them.
  if (e.terms().size() == 1 && e.terms()[0].coefficient == 1) {
    return e.to_string();
  }
  return "(" + e.to_string() + ")";
}

}  // namespace

Ordinal Ordinal::parse(std::string_view text) { return OrdinalParser(text).run(); }

std::string Ordinal::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) {
      out += '+';
    }
    const Term& term = terms_[i];
    if (term.exponent.is_zero()) {
      out += std::to_string(term.coefficient);
      continue;
    }
    if (term.exponent == finite(1)) {
      out += 'w';
    } else {
      out += "w^";
      out += format_exponent(term.exponent);
    }
    if (term.coefficient > 1) {
      out += '*';
      out += std::to_string(term.coefficient);
    }
  }
  return out;
}

}  // namespace towers
