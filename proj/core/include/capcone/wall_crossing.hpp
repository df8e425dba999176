#pragma once

// Chamber signatures, wall-crossing capacity sequences with exact
// renormalization, admissibility with certificates, separating walls, and
// the comparable-pair construction across a single (-2)-wall.

#include "capcone/hclass.hpp"
#include "capcone/negative_classes.hpp"
#include "capcone/numbers_game.hpp"
#include "capcone/reduction.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace capcone {

// ---------------------------------------------------------------------------
// Signatures

struct ChamberSignature {
  long long level_bound = 0;
  // Signs are -1/0/+1 of the area; order matches the module enumerations.
  std::vector<std::pair<RootClass, int>> root_signs;
  std::vector<std::pair<HClass, int>> le3_signs;
  std::vector<HClass> on_wall;  // classes with area exactly 0

  bool interior() const { return on_wall.empty(); }
};

// Smallest M such that every positive root of level m > M has strictly
// positive area at delta: ceil(max |area(delta, r)| / area(delta, D9)) over
// the 156 elementary roots.  Requires area(delta, D9) > 0.
long long level_bound(const CapacityVector& delta);
long long level_bound(const PDClass& form);

// Signs of all 437 square <= -3 classes and of every positive root with
// level m <= level_bound(delta).
ChamberSignature chamber_signature(const CapacityVector& delta);

// All walls (square <= -3 classes first, then positive roots up to the
// joint level bound) whose area has opposite strict signs at the two
// capacities.  A wall through either endpoint is an error naming the wall.
std::vector<HClass> separating_walls(const CapacityVector& from, const CapacityVector& to);

// ---------------------------------------------------------------------------
// Crossing steps

// form + pairing(form, root) * root.  Requires a positive root with strictly
// positive pairing; the new pairing with the root is the negative of the old
// one, and every stored coefficient weakly increases (c0 strictly).
PDClass wall_cross_step(const PDClass& form, const HClass& root);

// (c1/c0, ..., c9/c0); requires c0 > 0 and positive entries.
CapacityVector normalize(const PDClass& form);

// ---------------------------------------------------------------------------
// Sequences

struct SequenceRecord {
  int step = 0;  // 1-based
  HClass crossed;
  PDClass pd_unnormalized;  // after the crossing
  CapacityVector delta;     // normalized capacities after the crossing
  Rat area_before;          // > 0
  Rat area_after;           // == -area_before
  long long invariant_value = 0;
  Rat sup_distance_to_monotone;  // max_i |delta_i - 1/3|
};

// Drives the lattice game from delta0, crossing the fired wall at each step.
// Requires delta0 in the all-positive region (sum < 1), reduced, and off
// every wall.  A fired wall with area exactly zero aborts with an error
// naming the step and wall (the caller perturbs delta0); strictly negative
// fired areas cannot occur from a legal start.
std::vector<SequenceRecord> generate_sequence(const CapacityVector& delta0, int steps,
                                              Strategy strategy, std::uint64_t seed);

// The shipped generic starting point (196,176,133,105,95,70,45,22,17)/1000:
// strictly decreasing, sum < 1, and its default runs stay clear of every
// wall at every step.
const CapacityVector& default_sequence_start();

// ---------------------------------------------------------------------------
// Comparable pairs across one (-2)-wall

struct RestrictionPair {
  HClass wall;
  CapacityVector x_plus;   // area(x_plus, wall) < 0
  CapacityVector x_minus;  // area(x_minus, wall) > 0
  Rat epsilon;             // requested proximity budget
  Rat k;                   // x_plus - x_minus == k * (E-coefficients of wall)
};

// Walks from `near` (strictly on the positive-area side) along the wall's
// capacity-space normal to a symmetric pair x_minus, x_plus around the
// crossing point, with offset s = min(epsilon, gap to the nearest other
// wall crossing) / 2, then halved until exactly this wall separates the pair
// and both endpoints are admissible and off every wall.  Deterministic.
RestrictionPair comparable_pair(const HClass& wall, const CapacityVector& near,
                                const Rat& epsilon, long long max_a0 = 30);

enum class RestrictionDirection { PlusToMinusOnly, MinusToPlusOnly, Both };

std::string restriction_direction_name(RestrictionDirection d);

// P the closed positive orthant: normal in P allows restriction only from
// the negative-area side toward positive; -normal in P the reverse; both
// directions otherwise.
RestrictionDirection restriction_direction(const std::vector<Rat>& normal);

// ---------------------------------------------------------------------------
// Admissibility

struct AdmissibilityResult {
  bool admissible = false;
  std::string certificate;
  std::optional<HClass> violating_class;
  long long max_a0 = 0;
};

// Positive square 1 - sum delta_i^2 > 0, positive area on every exceptional
// class with a0 <= max_a0, cross-validated by Cremona reduction of
// (1; delta) (which must terminate reduced with positive entries).  The
// exceptional check is bounded, and the bound is part of the certificate.
AdmissibilityResult is_admissible(const CapacityVector& delta, long long max_a0 = 30);

}  // namespace capcone
