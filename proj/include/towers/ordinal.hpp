#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "towers/errors.hpp"

namespace towers {

struct ClassifiedOrdinal;

/// An ordinal below epsilon_0 in Cantor normal form: a strictly
/// exponent-decreasing sum of terms w^e * c with integer coefficients c >= 1.
/// The empty sum is 0; a finite ordinal n is the single term w^0 * n.
///
/// Values are immutable and always canonical; construction from raw terms
/// validates and throws NonCanonical otherwise.
class Ordinal {
 public:
  struct Term;

  /// Zero.
  Ordinal();
  Ordinal(const Ordinal&);
  Ordinal(Ordinal&&) noexcept;
  Ordinal& operator=(const Ordinal&);
  Ordinal& operator=(Ordinal&&) noexcept;
  ~Ordinal();

  static Ordinal finite(std::uint64_t n);
  static Ordinal omega();
  /// Builds w^exponent * coefficient (coefficient >= 1).
  static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);
  static Ordinal from_terms(std::vector<Term> terms);

  bool is_zero() const;
  /// True iff the value is a natural number; value() then returns it.
  bool is_finite() const;
  std::uint64_t finite_value() const;
  const std::vector<Term>& terms() const;

  /// alpha + 1.
  Ordinal successor() const;

  enum class Kind { Zero, Successor, Limit };
  ClassifiedOrdinal classify() const;

  /// Ordinal sum alpha + w: the least limit ordinal strictly above alpha.
  Ordinal plus_omega() const;

  /// Parses the ASCII grammar ("w^2+w*3+1", "w^w", "w^(w+1)*2", "0", ...).
  static Ordinal parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const Ordinal& other) const;
  std::strong_ordering operator<=>(const Ordinal& other) const;

 private:
  std::vector<Term> terms_;  // invariant: exponents strictly decreasing, coefficients >= 1
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  bool operator==(const Term& other) const {
    return coefficient == other.coefficient && exponent == other.exponent;
  }
};

struct ClassifiedOrdinal {
  Ordinal::Kind kind = Ordinal::Kind::Zero;
  std::optional<Ordinal> predecessor;  // present iff kind == Successor
};

enum class OrdCmp { Less, Equal, Greater };

/// Total-order comparison of canonical ordinals.
OrdCmp ord_compare(const Ordinal& a, const Ordinal& b);

}  // namespace towers
