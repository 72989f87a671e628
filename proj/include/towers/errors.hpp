#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace towers {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class PosetAxiom { Reflexivity, Antisymmetry, Transitivity };

/// One of the partial-order axioms fails; carries the offending pair.
class AxiomViolation : public Error {
 public:
  AxiomViolation(PosetAxiom axiom, std::string first, std::string second)
      : Error(describe(axiom, first, second)),
        axiom_(axiom),
        witness_(std::move(first), std::move(second)) {}

  PosetAxiom axiom() const { return axiom_; }
  const std::pair<std::string, std::string>& witness() const { return witness_; }

 private:
  static std::string describe(PosetAxiom axiom, const std::string& a, const std::string& b);

  PosetAxiom axiom_;
  std::pair<std::string, std::string> witness_;
};

class UnknownElement : public Error {
 public:
  explicit UnknownElement(const std::string& label)
      : Error("unknown element: " + label), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class InvalidLabel : public Error {
 public:
  explicit InvalidLabel(const std::string& what) : Error(what) {}
};

/// Cover-relation input contains a directed cycle.
class CycleDetected : public Error {
 public:
  explicit CycleDetected(std::vector<std::string> cycle)
      : Error(describe(cycle)), cycle_(std::move(cycle)) {}
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  static std::string describe(const std::vector<std::string>& cycle);

  std::vector<std::string> cycle_;
};

class EmptySubset : public Error {
 public:
  EmptySubset() : Error("operation requires a nonempty subset") {}
};

class HostMismatch : public Error {
 public:
  HostMismatch() : Error("subsets belong to different host posets") {}
};

class NotAChainError : public Error {
 public:
  NotAChainError(std::string first, std::string second)
      : Error("elements are incomparable: (" + first + ", " + second + ")"),
        witness_(std::move(first), std::move(second)) {}
  const std::pair<std::string, std::string>& witness() const { return witness_; }

 private:
  std::pair<std::string, std::string> witness_;
};

class NonCanonical : public Error {
 public:
  explicit NonCanonical(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected)
      : Error("parse error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// The self-map fails x <= f(x) at the witness element.
class NotProgressive : public Error {
 public:
  explicit NotProgressive(const std::string& witness)
      : Error("map is not progressive at element " + witness), witness_(witness) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class IncompleteAssignment : public Error {
 public:
  explicit IncompleteAssignment(const std::string& label)
      : Error("self-map has no assignment for element " + label) {}
};

class TooLarge : public Error {
 public:
  TooLarge(const std::string& what, std::size_t limit)
      : Error(what + " (limit " + std::to_string(limit) + ")") {}
};

class NotAscending : public Error {
 public:
  explicit NotAscending(const std::string& what) : Error(what) {}
};

class BaseMismatch : public Error {
 public:
  BaseMismatch(const std::string& first, const std::string& second)
      : Error("towers have different base elements: " + first + " vs " + second) {}
};

class SchemaError : public Error {
 public:
  SchemaError(std::string path, std::string message)
      : Error("schema error at " + path + ": " + message),
        path_(std::move(path)),
        message_(std::move(message)) {}
  const std::string& path() const { return path_; }
  const std::string& message() const { return message_; }

 private:
  std::string path_;
  std::string message_;
};

class InvalidCfg : public Error {
 public:
  explicit InvalidCfg(const std::string& what) : Error(what) {}
};

class AccelerationUnavailable : public Error {
 public:
  explicit AccelerationUnavailable(const std::string& map_name)
      : Error("step budget exhausted and the host provides no orbit lub for map '" + map_name +
              "'") {}
};

}  // namespace towers
