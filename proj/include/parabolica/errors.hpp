#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace parabolica {

// Base of every error the library raises on purpose. `kind` is a short
// machine-readable tag that the CLI forwards in its error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Bad input: dimension mismatch, failed precondition, malformed data.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A structure-constant tensor that is not a Lie bracket. The failing basis
// triple is kept so callers can report it.
class InvalidStructure : public DomainError {
 public:
  InvalidStructure(const std::string& message, std::size_t i, std::size_t j,
                   std::size_t k)
      : DomainError("invalid_structure", message), i_(i), j_(j), k_(k) {}
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }
  std::size_t k() const noexcept { return k_; }

 private:
  std::size_t i_, j_, k_;
};

// An internal consistency check that a theorem guarantees has failed. These
// are never the caller's fault; the CLI maps them to exit code 2.
class TheoremContradiction : public Error {
 public:
  explicit TheoremContradiction(const std::string& message)
      : Error("theorem_contradiction", message) {}
};

}  // namespace parabolica
