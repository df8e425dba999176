#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capcone/wall_crossing.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace capcone;

namespace {

CapacityVector tenths() { return CapacityVector(std::vector<Rat>(9, Rat(1, 10))); }

CapacityVector first_image() {
  // the normalized result of crossing r_123 from (1/10,...,1/10)
  std::vector<Rat> d(9, Rat(1, 17));
  d[0] = d[1] = d[2] = Rat(8, 17);
  return CapacityVector(std::move(d));
}

}  // namespace

TEST_CASE("level bound") {
  CHECK(level_bound(tenths()) == 1);

  // independent recomputation by direct loops over the elementary roots
  const CapacityVector delta = first_image();
  Rat max_abs = 0;
  for (int i = 1; i <= 9; ++i) {
    for (int j = i + 1; j <= 9; ++j) {
      max_abs = std::max(max_abs, rat_abs(delta.delta[i - 1] - delta.delta[j - 1]));
      for (int k = j + 1; k <= 9; ++k) {
        max_abs = std::max(max_abs, rat_abs(Rat(1) - delta.delta[i - 1] -
                                            delta.delta[j - 1] - delta.delta[k - 1]));
      }
    }
  }
  const Rat w_d9 = area(delta, d9_class());
  CHECK(level_bound(delta) == static_cast<long long>(rat_ceil(max_abs / w_d9)));
  CHECK(level_bound(delta) == 1);

  CHECK_THROWS_AS((void)level_bound(CapacityVector(std::vector<Rat>(9, Rat(1, 2)))),
                  math_error);
}

TEST_CASE("chamber signature of the small chamber is all-positive") {
  const ChamberSignature sig = chamber_signature(tenths());
  CHECK(sig.interior());
  CHECK(sig.le3_signs.size() == 437);
  CHECK(sig.root_signs.size() == 84 + 240 * static_cast<std::size_t>(sig.level_bound));
  for (const auto& [cls, s] : sig.le3_signs) CHECK(s == 1);
  for (const auto& [root, s] : sig.root_signs) CHECK(s == 1);
}

TEST_CASE("chamber signature after the first crossing") {
  const ChamberSignature sig = chamber_signature(first_image());

  // the crossed root went negative
  int negative_roots = 0;
  for (const auto& [root, s] : sig.root_signs) {
    if (s == -1) {
      ++negative_roots;
      CHECK(root.cls == rijk_class(1, 2, 3));
    }
  }
  CHECK(negative_roots == 1);

  // the symmetric start lands exactly on the walls r_iju, i<j in {1,2,3},
  // u in {4..9}: 18 of them
  std::set<HClass> expected_on_wall;
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      for (int u = 4; u <= 9; ++u) expected_on_wall.insert(rijk_class(i, j, u));
    }
  }
  CHECK(std::set<HClass>(sig.on_wall.begin(), sig.on_wall.end()) == expected_on_wall);
  CHECK(sig.on_wall.size() == 18);
  CHECK(!sig.interior());

  // 234 of the 382 conic-family walls flip sign at the image point
  int negative_f1a = 0;
  for (const auto& [cls, s] : sig.le3_signs) {
    if (cls.a0 == 1 && s == -1) ++negative_f1a;
  }
  CHECK(negative_f1a == 234);
}

TEST_CASE("the all-positive region is exactly the small simplex") {
  // one of the walls is L - (E1+...+E9) with functional 1 - sum(delta), so
  // an all-positive signature forces the capacity sum below 1; conversely
  // every wall functional is positive on the simplex
  std::mt19937_64 rng(9);
  const HClass full_support(1, std::vector<long long>(9, 1));
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> d(9);
    for (auto& v : d) v = Rat(1 + static_cast<long long>(rng() % 23), 400);
    Rat sum = 0;
    for (const auto& v : d) sum += v;
    REQUIRE(sum < 1);
    const ChamberSignature inside = chamber_signature(CapacityVector(d));
    CHECK(inside.interior());
    for (const auto& [cls, s] : inside.le3_signs) CHECK(s == 1);
    for (const auto& [root, s] : inside.root_signs) CHECK(s == 1);

    // scale the same direction past the simplex: the full-support wall flips
    std::vector<Rat> outside = d;
    const Rat scale = Rat(21, 20) / sum;
    for (auto& v : outside) v *= scale;
    const ChamberSignature out_sig = chamber_signature(CapacityVector(outside));
    bool full_support_negative = false;
    for (const auto& [cls, s] : out_sig.le3_signs) {
      if (cls == full_support) full_support_negative = (s == -1);
    }
    CHECK(full_support_negative);
  }
}

TEST_CASE("exact wall incidence is reported") {
  std::vector<Rat> d(9, Rat(1, 10));
  d[0] = d[1] = Rat(2, 5);
  d[2] = Rat(1, 5);  // delta1+delta2+delta3 = 1
  const ChamberSignature sig = chamber_signature(CapacityVector(d));
  CHECK(std::find(sig.on_wall.begin(), sig.on_wall.end(), rijk_class(1, 2, 3)) !=
        sig.on_wall.end());
}

TEST_CASE("separating walls") {
  CHECK(separating_walls(tenths(), tenths()).empty());

  // between the shipped start and its one-step image: the crossed root is
  // the single (-2)-wall, everything else in the conic family
  const auto records = generate_sequence(default_sequence_start(), 1,
                                         Strategy::FirstPositive, 0);
  const auto walls = separating_walls(default_sequence_start(), records[0].delta);
  int roots = 0;
  for (const auto& cls : walls) {
    const Family f = classify_negative(cls).family;
    if (f == Family::F2a || f == Family::F2b || f == Family::F2c) {
      ++roots;
      CHECK(cls == records[0].crossed);
    } else {
      CHECK(f == Family::F1a);
    }
  }
  CHECK(roots == 1);

  // an endpoint on a wall is an error naming the wall; the 1/23 tail keeps
  // this point off every wall except the one through delta1+delta2+delta3 = 1
  std::vector<Rat> d(9, Rat(1, 23));
  d[0] = d[1] = Rat(2, 5);
  d[2] = Rat(1, 5);
  CHECK_THROWS_WITH_AS((void)separating_walls(CapacityVector(d), tenths()),
                       doctest::Contains("(1;1,1,1,0,0,0,0,0,0)"), math_error);
}

TEST_CASE("wall crossing step") {
  const PDClass start = tenths().pd();
  const HClass r0 = rijk_class(1, 2, 3);
  const PDClass crossed = wall_cross_step(start, r0);

  PDClass expected(Rat(17, 10), std::vector<Rat>(9, Rat(1, 10)));
  expected.c[0] = expected.c[1] = expected.c[2] = Rat(4, 5);
  CHECK(crossed == expected);
  CHECK(pairing(crossed, r0) == -pairing(start, r0));
  CHECK(pairing(start, r0) == Rat(7, 10));

  // pairing flips sign for arbitrary legal crossings
  std::mt19937_64 rng(3);
  const auto roots = enumerate_neg2_roots(2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> c(9);
    for (auto& v : c) v = Rat(1 + static_cast<long long>(rng() % 30), 100);
    const PDClass pd(Rat(1 + static_cast<long long>(rng() % 3)), std::move(c));
    const HClass& root = (*roots)[rng() % roots->size()].cls;
    const Rat before = pairing(pd, root);
    if (before <= 0) continue;
    const PDClass after = wall_cross_step(pd, root);
    CHECK(pairing(after, root) == -before);
    CHECK(after.c0 > pd.c0);
    for (int i = 0; i < 9; ++i) CHECK(after.c[i] >= pd.c[i]);
  }

  CHECK_THROWS_AS((void)wall_cross_step(start, e_class(1)), math_error);  // not a root
  // zero pairing is rejected
  std::vector<Rat> on_wall(9, Rat(1, 10));
  on_wall[0] = on_wall[1] = Rat(2, 5);
  on_wall[2] = Rat(1, 5);
  CHECK_THROWS_AS((void)wall_cross_step(CapacityVector(on_wall).pd(), r0), math_error);
}

TEST_CASE("normalization") {
  PDClass pd(Rat(17, 10), std::vector<Rat>(9, Rat(1, 10)));
  pd.c[0] = pd.c[1] = pd.c[2] = Rat(4, 5);
  CHECK(normalize(pd) == first_image());
  CHECK(normalize(tenths().pd()) == tenths());
  CHECK_THROWS_AS((void)normalize(PDClass(Rat(-1), std::vector<Rat>(9, Rat(1, 10)))),
                  math_error);
}

TEST_CASE("renormalization agrees with the closed forms") {
  std::mt19937_64 rng(4);
  const auto roots = enumerate_neg2_roots(2);
  int trials = 0;
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Rat> c(9);
    for (auto& v : c) v = Rat(1 + static_cast<long long>(rng() % 40), 150);
    const PDClass pd(Rat(1 + static_cast<long long>(rng() % 4)), std::move(c));
    for (const auto& root : *roots) {
      if (pairing(pd, root.cls) <= 0) continue;
      ++trials;
      const auto expected = test_oracles::renormalize_closed_form(pd, root);
      const CapacityVector got = normalize(wall_cross_step(pd, root.cls));
      CHECK(got.delta == expected);
    }
  }
  CHECK(trials > 1000);
}

TEST_CASE("sequence: one step from the symmetric start") {
  const auto records = generate_sequence(tenths(), 1, Strategy::FirstPositive, 0);
  REQUIRE(records.size() == 1);
  CHECK(records[0].crossed == rijk_class(1, 2, 3));
  CHECK(records[0].delta == first_image());
  CHECK(records[0].area_before == Rat(7, 10));
  CHECK(records[0].area_after == Rat(-7, 10));
  CHECK(records[0].invariant_value == 3);
}

TEST_CASE("sequence: the symmetric start degenerates at step two") {
  CHECK_THROWS_WITH_AS(
      (void)generate_sequence(tenths(), 2, Strategy::FirstPositive, 0),
      doctest::Contains("step 2 lands exactly on the wall of (1;1,1,0,1,0,0,0,0,0)"),
      math_error);
}

TEST_CASE("sequence rejects bad starts") {
  // not in the small chamber
  CHECK_THROWS_AS(
      (void)generate_sequence(CapacityVector(std::vector<Rat>(9, Rat(1, 5))), 1,
                              Strategy::FirstPositive, 0),
      math_error);
  // not reduced (ascending entries)
  std::vector<Rat> ascending;
  for (int i = 1; i <= 9; ++i) ascending.push_back(Rat(i, 100));
  CHECK_THROWS_AS((void)generate_sequence(CapacityVector(ascending), 1,
                                          Strategy::FirstPositive, 0),
                  math_error);
  // on a wall
  std::vector<Rat> on_wall(9, Rat(1, 20));
  on_wall[0] = Rat(2, 5);
  on_wall[1] = Rat(2, 5);
  on_wall[2] = Rat(1, 5);
  CHECK_THROWS_AS((void)generate_sequence(CapacityVector(on_wall), 1,
                                          Strategy::FirstPositive, 0),
                  math_error);
}

TEST_CASE("sequence from the shipped start is sound") {
  const auto records =
      generate_sequence(default_sequence_start(), 30, Strategy::RandomPositive, 1);
  PDClass prev = default_sequence_start().pd();
  for (const auto& rec : records) {
    CHECK(is_positive_root(rec.crossed));
    CHECK(rec.area_before > 0);
    CHECK(rec.area_after == -rec.area_before);
    CHECK(rec.invariant_value == 3);
    CHECK(rec.pd_unnormalized.c0 > prev.c0);
    for (int i = 0; i < 9; ++i) CHECK(rec.pd_unnormalized.c[i] >= prev.c[i]);
    prev = rec.pd_unnormalized;
  }
  // seeded runs replay exactly
  const auto again =
      generate_sequence(default_sequence_start(), 30, Strategy::RandomPositive, 1);
  REQUIRE(again.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(again[i].crossed == records[i].crossed);
    CHECK(again[i].delta == records[i].delta);
  }
}

TEST_CASE("comparable pairs") {
  const HClass wall = rijk_class(1, 2, 3);
  const RestrictionPair pair = comparable_pair(wall, tenths(), Rat(1, 20), 8);

  CHECK(area(pair.x_minus, wall) > 0);
  CHECK(area(pair.x_plus, wall) < 0);
  CHECK(pair.k > 0);

  int strict = 0;
  for (int i = 0; i < 9; ++i) {
    const Rat diff = pair.x_plus.delta[i] - pair.x_minus.delta[i];
    CHECK(diff >= 0);
    CHECK(diff == pair.k * wall.a[i]);
    if (diff > 0) ++strict;
  }
  CHECK(strict == 3);  // the wall's support

  // exactly one separating wall, and it is the requested one
  const auto walls = separating_walls(pair.x_minus, pair.x_plus);
  REQUIRE(walls.size() == 1);
  CHECK(walls[0] == wall);

  CHECK(is_admissible(pair.x_minus, 8).admissible);
  CHECK(is_admissible(pair.x_plus, 8).admissible);

  CHECK_THROWS_AS((void)comparable_pair(e_class(1), tenths(), Rat(1, 20), 8), math_error);
  // 'near' on the wrong side
  CHECK_THROWS_AS((void)comparable_pair(wall, first_image(), Rat(1, 20), 8), math_error);
}

TEST_CASE("comparable pairs across a level-one wall") {
  // the seed-0 random default run crosses -r(789)+1D9 at step 14; build the
  // pair from the previous landing point
  const auto records =
      generate_sequence(default_sequence_start(), 14, Strategy::RandomPositive, 0);
  const HClass& wall = records[13].crossed;
  REQUIRE(wall == -rijk_class(7, 8, 9) + d9_class());
  const CapacityVector& near = records[12].delta;

  const RestrictionPair pair = comparable_pair(wall, near, Rat(1, 200), 12);
  CHECK(area(pair.x_minus, wall) > 0);
  CHECK(area(pair.x_plus, wall) < 0);
  const auto separating = separating_walls(pair.x_minus, pair.x_plus);
  REQUIRE(separating.size() == 1);
  CHECK(separating[0] == wall);
  // this wall's support misses E7, E8, E9, so those capacities stay equal
  CHECK(pair.x_plus.delta[6] == pair.x_minus.delta[6]);
  CHECK(pair.x_plus.delta[0] > pair.x_minus.delta[0]);
}

TEST_CASE("restriction directions") {
  std::vector<Rat> n(9, Rat(0));
  n[0] = n[1] = n[2] = 1;
  CHECK(restriction_direction(n) == RestrictionDirection::PlusToMinusOnly);

  std::vector<Rat> neg(9, Rat(0));
  neg[0] = -1;
  CHECK(restriction_direction(neg) == RestrictionDirection::MinusToPlusOnly);

  std::vector<Rat> mixed(9, Rat(0));
  mixed[0] = 1;
  mixed[1] = -1;
  CHECK(restriction_direction(mixed) == RestrictionDirection::Both);

  CHECK_THROWS_AS((void)restriction_direction(std::vector<Rat>(9, Rat(0))), math_error);
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(tenths(), 8).admissible);

  const auto monotone = is_admissible(CapacityVector(std::vector<Rat>(9, Rat(1, 3))), 8);
  CHECK(!monotone.admissible);
  CHECK(monotone.certificate.find("square") != std::string::npos);

  std::vector<Rat> big(9, Rat(1, 10));
  big[0] = 1;
  const auto fat = is_admissible(CapacityVector(big), 8);
  CHECK(!fat.admissible);
  REQUIRE(fat.violating_class.has_value());
  CHECK(area(CapacityVector(big), *fat.violating_class) <= 0);

  // every point of a default sequence stays admissible
  const auto records =
      generate_sequence(default_sequence_start(), 20, Strategy::RandomPositive, 0);
  for (const auto& rec : records) CHECK(is_admissible(rec.delta, 8).admissible);
}
