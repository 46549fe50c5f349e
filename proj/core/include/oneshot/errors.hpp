#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "oneshot/rational.hpp"

namespace oneshot {

// Malformed or inconsistent user input (files, alphabets, unknown names).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search exceeded its configured node budget. Carries the best lower
// bound found so far when the search maintains one.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what,
                          std::optional<Rational> partial = std::nullopt,
                          std::uint64_t nodes = 0)
      : std::runtime_error(what), partial_lower_bound(std::move(partial)), nodes_used(nodes) {}
  std::optional<Rational> partial_lower_bound;
  std::uint64_t nodes_used;
};

// Vertex enumeration hit its cap. Never a silent truncation.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what, std::size_t count)
      : std::runtime_error(what), count(count) {}
  std::size_t count;
};

struct SearchBudget {
  std::uint64_t cap = 1'000'000'000;  // B&B nodes
  std::uint64_t used = 0;

  void charge(std::uint64_t n = 1) {
    used += n;
    if (used > cap) throw BudgetExceeded("search budget exceeded", std::nullopt, used);
  }
};

}  // namespace oneshot
