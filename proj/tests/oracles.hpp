#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// bitmask subset enumeration, plain box brute force, and the closed-form
// renormalization formulas written directly in terms of the old form.

#include "capcone/hclass.hpp"
#include "capcone/negative_classes.hpp"

#include <set>
#include <vector>

namespace capcone::test_oracles {

// Square <= -3 wall classes by direct bitmask enumeration.
inline std::set<HClass> le3_by_bitmask() {
  std::set<HClass> out;
  for (unsigned mask = 1; mask < (1u << 9); ++mask) {
    const int size = __builtin_popcount(mask);
    std::vector<long long> a(9, 0);
    for (int i = 0; i < 9; ++i) {
      if (mask & (1u << i)) a[i] = 1;
    }
    if (size >= 4) out.insert(HClass(1, a));
    if (size >= 7) out.insert(HClass(2, a));
  }
  for (int i = 0; i < 9; ++i) {
    std::vector<long long> a(9, 1);
    a[i] = 2;
    out.insert(HClass(3, a));
  }
  return out;
}

// Number of positive roots of level <= max_m by direct counting.
inline std::size_t neg2_count_oracle(long long max_m) {
  std::size_t triples = 0, ordered_pairs = 0;
  for (int i = 1; i <= 9; ++i) {
    for (int j = i + 1; j <= 9; ++j) {
      for (int k = j + 1; k <= 9; ++k) ++triples;
      }
  }
  for (int i = 1; i <= 9; ++i) {
    for (int j = 1; j <= 9; ++j) {
      if (i != j) ++ordered_pairs;
    }
  }
  // level 0: r_ijk only; each higher level adds both r_ijk signs and all
  // ordered pairs
  return triples + static_cast<std::size_t>(max_m) * (2 * triples + ordered_pairs);
}

// Exceptional classes with 0 <= a0 <= max_a0 by plain box brute force over
// non-negative coefficient vectors (plus the nine E_i).  Only usable for
// small bounds; the box has (a0+1)^9 points.
inline std::set<HClass> exceptional_by_box(long long max_a0) {
  std::set<HClass> out;
  for (int i = 1; i <= 9; ++i) out.insert(e_class(i));
  for (long long a0 = 1; a0 <= max_a0; ++a0) {
    std::vector<long long> a(9, 0);
    while (true) {
      long long sum = 0, sq = 0;
      for (long long v : a) {
        sum += v;
        sq += v * v;
      }
      if (a0 * a0 - sq == -1 && 3 * a0 - sum == 1) out.insert(HClass(a0, a));
      int pos = 8;
      while (pos >= 0 && a[pos] == a0) {
        a[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++a[pos];
    }
  }
  return out;
}

// Closed form for the normalized capacities after crossing one positive
// root, written directly in terms of the old (unnormalized) form.
inline std::vector<Rat> renormalize_closed_form(const PDClass& pd, const RootClass& root) {
  const Rat a = pairing(pd, root.cls);
  const long long m = root.m;
  std::vector<Rat> out(9);
  if (root.kind == RootKind::Rij) {
    const Rat den = pd.c0 + 3 * m * a;
    for (int l = 1; l <= 9; ++l) {
      Rat num = pd.c[l - 1];
      if (l == root.i) num += (m - 1) * a;
      else if (l == root.j) num += (m + 1) * a;
      else num += m * a;
      out[l - 1] = num / den;
    }
    return out;
  }
  const int sgn = root.kind == RootKind::PlusRijk ? 1 : -1;
  const Rat den = pd.c0 + (3 * m + sgn) * a;
  for (int l = 1; l <= 9; ++l) {
    const bool in_support = l == root.i || l == root.j || l == root.k;
    out[l - 1] = (pd.c[l - 1] + (in_support ? Rat(m + sgn) : Rat(m)) * a) / den;
  }
  return out;
}

}  // namespace capcone::test_oracles
