#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kmatch {

/// Parameter outside an operation's domain (b > a in a falling factorial,
/// overlapping centre edges, unknown part index, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A universe or compatibility graph would exceed its configured cap.
/// `predicted` is the exact count the enumeration would have produced.
class UniverseTooLarge : public std::runtime_error {
 public:
  UniverseTooLarge(const std::string& what, std::string predicted)
      : std::runtime_error(what), predicted_(std::move(predicted)) {}
  const std::string& predicted() const noexcept { return predicted_; }

 private:
  std::string predicted_;
};

/// Branch-and-bound node budget exhausted; no answer is reported.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_(nodes) {}
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// More maximum cliques than the configured cap.
class MaximaOverflow : public std::runtime_error {
 public:
  MaximaOverflow(const std::string& what, std::uint64_t partial)
      : std::runtime_error(what), partial_(partial) {}
  std::uint64_t partial_count() const noexcept { return partial_; }

 private:
  std::uint64_t partial_;
};

/// Engine invariant broken (inexact formula division, clique below a feasible
/// star, ...). Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kmatch
