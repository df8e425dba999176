#pragma once

// The finite and level-graded families of negative self-intersection classes
// that define walls in the capacity cone for nine balls:
//
//   F1a  L - sum_{i in I} Ei, |I| >= 4           (square <= -3)
//   F1b  2L - sum_{i in I} Ei, |I| >= 7
//   F1c  3L - 2Ei - sum_{j != i} Ej
//   F2a  r_ijk + m D9, m >= 0                    (square -2, c1 = 0)
//   F2b  -r_ijk + m D9, m >= 1
//   F2c  Ei - Ej + m D9, m >= 1 (ordered pairs)
//   Exceptional: square -1, c1 = 1
//
// Enumerations are deterministic (family, then indices, then level) so
// golden-file output is stable, and memoized per bound.

#include "capcone/hclass.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace capcone {

enum class RootKind { PlusRijk, MinusRijk, Rij };

// A (-2)-class tagged by its elementary root and level.  The class is
// recomputable from the tag; both are kept for convenience.
struct RootClass {
  RootKind kind = RootKind::PlusRijk;
  int i = 0, j = 0, k = 0;  // k unused for Rij; i < j < k otherwise
  long long m = 0;
  HClass cls;

  // Validates index ordering and the level constraint (m >= 0 for PlusRijk,
  // m >= 1 otherwise) and fills in cls.
  static RootClass make(RootKind kind, int i, int j, int k, long long m);

  bool operator==(const RootClass&) const = default;
};

std::string root_kind_name(RootKind kind);
std::string format_root(const RootClass& root);

enum class Family { F1a, F1b, F1c, F2a, F2b, F2c, Exceptional, NotNegativeWall };

std::string family_name(Family family);

struct FamilyTag {
  Family family = Family::NotNegativeWall;
  std::vector<int> indices;        // I for F1a/F1b, {i} for F1c, tag indices for roots
  long long m = 0;                 // level, for root families
  std::optional<RootClass> root;   // present exactly for F2a/F2b/F2c
};

// All 437 classes of self-intersection <= -3 (382 + 46 + 9).
const std::vector<HClass>& enumerate_le_minus3();

// All positive roots of level m <= max_m, in (level, kind, indices) order.
// 84 at level zero and 240 per further level.
std::shared_ptr<const std::vector<RootClass>> enumerate_neg2_roots(long long max_m);

// The 84 + 72 elementary root classes r_ijk and Ei - Ej (both orders),
// used for level bounds.
const std::vector<HClass>& elementary_root_classes();

// All classes with square -1, c1 = 1 and 0 <= a0 <= max_a0; the nine Ei plus
// the non-negative solutions of the two Diophantine constraints
// sum ai = 3 a0 - 1, sum ai^2 = a0^2 + 1.  Bounded brute force, memoized.
std::shared_ptr<const std::vector<HClass>> enumerate_exceptional(long long max_a0);

// Matches a class against the families above; NotNegativeWall otherwise.
FamilyTag classify_negative(const HClass& cls);

// Equivalent characterizations: the class is F2a (m >= 0) or F2b/F2c
// (m >= 1); or, a (-2)-class with c1 = 0 and strictly positive L-coefficient.
bool is_positive_root(const HClass& cls);

}  // namespace capcone
