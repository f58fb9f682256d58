#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace latcheck {

// Base of every error the library throws. `kind()` is a stable tag used by
// the CLI to map failures onto exit codes and report fields.
class LatticeError : public std::runtime_error {
 public:
  LatticeError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class NotALattice : public LatticeError {
 public:
  NotALattice(std::string a, std::string b, std::string op)
      : LatticeError("NotALattice",
                     "pair (" + a + ", " + b + ") has no unique " + op),
        first(std::move(a)), second(std::move(b)), operation(std::move(op)) {}
  std::string first, second, operation;
};

class CyclicCovers : public LatticeError {
 public:
  explicit CyclicCovers(const std::string& where)
      : LatticeError("CyclicCovers", "cover relation has a cycle through " + where) {}
};

class DuplicateLabel : public LatticeError {
 public:
  explicit DuplicateLabel(const std::string& label)
      : LatticeError("DuplicateLabel", "duplicate label '" + label + "'") {}
};

class InvalidDiagram : public LatticeError {
 public:
  explicit InvalidDiagram(const std::string& what) : LatticeError("InvalidDiagram", what) {}
};

class SizeLimit : public LatticeError {
 public:
  SizeLimit(const std::string& what, std::size_t size, std::size_t cap)
      : LatticeError("SizeLimit", what + ": size " + std::to_string(size) +
                                      " exceeds cap " + std::to_string(cap)) {}
};

class EmptySeeds : public LatticeError {
 public:
  EmptySeeds() : LatticeError("EmptySeeds", "seed set is empty") {}
};

class SearchBudgetExceeded : public LatticeError {
 public:
  explicit SearchBudgetExceeded(const std::string& what)
      : LatticeError("SearchBudgetExceeded", what + ": search budget exhausted") {}
};

class HypothesisViolated : public LatticeError {
 public:
  explicit HypothesisViolated(const std::string& clause)
      : LatticeError("HypothesisViolated", "hypothesis violated: " + clause), clause(clause) {}
  std::string clause;
};

class UnknownName : public LatticeError {
 public:
  explicit UnknownName(const std::string& name)
      : LatticeError("UnknownName", "unknown name '" + name + "'") {}
};

class BadParameter : public LatticeError {
 public:
  explicit BadParameter(const std::string& what) : LatticeError("BadParameter", what) {}
};

class NotAPartition : public LatticeError {
 public:
  explicit NotAPartition(const std::string& what) : LatticeError("NotAPartition", what) {}
};

class NotDistributive : public LatticeError {
 public:
  NotDistributive() : LatticeError("NotDistributive", "lattice is not distributive") {}
};

class UnassignedGenerator : public LatticeError {
 public:
  explicit UnassignedGenerator(const std::string& gen)
      : LatticeError("UnassignedGenerator", "generator '" + gen + "' has no assignment") {}
};

class ParseError : public LatticeError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : LatticeError("ParseError", "line " + std::to_string(line) + ", column " +
                                       std::to_string(column) + ": " + what),
        line(line), column(column) {}
  std::size_t line, column;
};

class UnknownProfile : public LatticeError {
 public:
  explicit UnknownProfile(const std::string& name)
      : LatticeError("UnknownProfile", "unknown profile '" + name + "'") {}
};

}  // namespace latcheck
