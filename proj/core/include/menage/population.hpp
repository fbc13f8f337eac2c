#pragma once

#include <string>
#include <vector>

#include "menage/problem_spec.hpp"

namespace menage {

enum class Sex { male, female };

enum class RoleKind { husband, wife, single_man, single_woman };

struct Person {
  int id = 0;
  Sex sex = Sex::male;
  RoleKind kind = RoleKind::husband;
  int family = 0;       // 1-based family number; 0 for singles
  int family_size = 0;  // 0 for singles
  int wife_no = 0;      // 1..k-1 for wives
  int single_no = 0;    // 1..m or 1..w for singles

  // Token syntax used by the CLI and seating files:
  //   H<f>      husband of family f
  //   W<f>.<j>  j-th wife of family f
  //   M<i>      i-th single man
  //   F<i>      i-th single woman
  std::string token() const;
};

struct FamilyInfo {
  int number = 0;    // 1-based
  int size = 0;      // k
  int first_id = 0;  // husband; wives follow at first_id+1 .. first_id+size-1
};

struct Population {
  ProblemSpec spec;
  std::vector<Person> persons;     // indexed by id
  std::vector<FamilyInfo> families;  // ascending family number

  int size() const { return static_cast<int>(persons.size()); }
  const Person& person(int id) const { return persons.at(static_cast<size_t>(id)); }
  int single_man_id(int index) const;    // index 1..m
  int single_woman_id(int index) const;  // index 1..w
};

// Deterministic labeling: families in increasing size, then family index;
// within a family the husband first, then wives in wife order; then single
// men; then single women. Ids are consecutive from 0.
Population build_population(const ProblemSpec& spec);

}  // namespace menage
