#pragma once

#include <map>
#include <string>

namespace menage {

// An instance of the seating problem: how many families of each size sit at
// the table, plus unattached men and women. A family of size k is one
// husband and k-1 wives; k >= 2.
struct ProblemSpec {
  std::map<int, int> families;  // family size k -> number of such families
  int single_men = 0;
  int single_women = 0;

  // Throws std::invalid_argument on k < 2 or any negative count.
  void validate() const;

  int families_of(int size) const;  // 0 when absent
  int family_count() const;         // total number of families
  int total_persons() const;
  int max_family_size() const;      // 0 when there are no families

  // Compact deterministic form, e.g. "2=2,3=1,m=1" ("empty" for the empty
  // spec). Family sizes ascending; zero entries omitted.
  std::string to_string() const;

  bool operator==(const ProblemSpec&) const = default;
};

}  // namespace menage
