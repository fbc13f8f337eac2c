#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "menage/population.hpp"

namespace menage {

// A circular order of person ids. The canonical representative puts person 0
// at position 0; rotations are identified, reflections are not.
struct Seating {
  std::vector<int> order;

  auto operator<=>(const Seating&) const = default;
};

// Rotates so that id 0 comes first. Idempotent. Throws std::invalid_argument
// unless `order` is a permutation of 0..n-1. The empty order maps to the
// empty seating.
Seating canonicalize(std::vector<int> order);

struct ValidityReport {
  bool valid = true;
  int constraint = 0;  // 1, 2 or 3 when invalid
  std::string detail;  // offending adjacency or arc, e.g. "H1 adjacent W2.1"

  // "VALID" or e.g. "C2 violated: H1 adjacent W2.1".
  std::string message() const;
};

// Checks the three seating rules on a circular order:
//   C1  each family occupies one contiguous circular arc;
//   C2  a man and a woman may be adjacent only if they are husband and wife;
//   C3  a husband with two or more wives has one of his own wives on each side.
// A 2-person circle has a single unordered adjacency, not two.
//
// The first violation in a fixed scan order is reported: C1 by ascending
// family number, then C2 and C3 by ascending seat position. Requires at
// least 2 persons; throws std::invalid_argument on a malformed permutation.
ValidityReport is_valid_seating(const Population& population, const std::vector<int>& order);

namespace detail {

struct Violation {
  int constraint = 0;
  int family = 0;     // C1
  int pos = 0;        // C2/C3: position of the first member of the pair
  int pos_other = 0;  // the offending neighbour
};

// Core scan; assumes `order` is already a valid permutation of the ids.
std::optional<Violation> find_violation(const Population& population, const std::vector<int>& order);

}  // namespace detail

}  // namespace menage
