#include "capcone/verify.hpp"

#include "capcone/negative_classes.hpp"
#include "capcone/numbers_game.hpp"
#include "capcone/reduction.hpp"
#include "capcone/wall_crossing.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace capcone {

namespace {

CheckResult pass() { return {true, ""}; }

CheckResult fail(const std::string& detail) { return {false, detail}; }

HClass random_class(std::mt19937_64& rng, int lo = -4, int hi = 4) {
  const long long span = hi - lo + 1;
  auto draw = [&] { return lo + static_cast<long long>(rng() % span); };
  std::vector<long long> a(9);
  for (auto& v : a) v = draw();
  return HClass(draw(), std::move(a));
}

Rat random_rat(std::mt19937_64& rng, long long num_lo, long long num_hi,
               long long den_hi = 12) {
  const long long num = num_lo + static_cast<long long>(rng() % (num_hi - num_lo + 1));
  const long long den = 1 + static_cast<long long>(rng() % den_hi);
  return Rat(num, den);
}

// Random capacities with sum < 1, strictly positive.
CapacityVector random_small_capacities(std::mt19937_64& rng) {
  std::vector<Rat> d(9);
  for (auto& v : d) v = Rat(1 + static_cast<long long>(rng() % 40), 400);
  return CapacityVector(std::move(d));
}

int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// --------------------------------------------------------------------------
// lattice

CheckResult check_intersection_form() {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const HClass x = random_class(rng), y = random_class(rng), z = random_class(rng);
    if (intersect(x, y) != intersect(y, x)) return fail("not symmetric");
    if (intersect(x + y, z) != intersect(x, z) + intersect(y, z)) {
      return fail("not bilinear");
    }
  }
  // Gram matrix of {L, E1..E9} is diag(1, -1, ..., -1)
  std::vector<HClass> basis{line_class()};
  for (int i = 1; i <= 9; ++i) basis.push_back(e_class(i));
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const long long expected = (i != j) ? 0 : (i == 0 ? 1 : -1);
      if (intersect(basis[i], basis[j]) != expected) return fail("Gram matrix wrong");
    }
  }
  return pass();
}

CheckResult check_reflection_involution() {
  std::mt19937_64 rng(102);
  const auto roots = enumerate_neg2_roots(2);
  for (int trial = 0; trial < 300; ++trial) {
    const HClass& root = (*roots)[rng() % roots->size()].cls;
    const HClass b = random_class(rng), c = random_class(rng);
    if (reflect(root, reflect(root, b)) != b) return fail("not an involution");
    if (intersect(reflect(root, b), reflect(root, c)) != intersect(b, c)) {
      return fail("not an isometry");
    }
    if (reflect(root, root) != -root) return fail("r_A(A) != -A");
  }
  return pass();
}

CheckResult check_reflection_fixes_d9() {
  const auto roots = enumerate_neg2_roots(2);
  for (const auto& root : *roots) {
    if (intersect(root.cls, d9_class()) != 0) return fail("root with c1 != 0");
    if (reflect(root.cls, d9_class()) != d9_class()) return fail("reflection moves D9");
  }
  return pass();
}

CheckResult check_cremona_reduction() {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rat> c(9);
    for (auto& v : c) v = random_rat(rng, -5, 12);
    const PDClass cls(random_rat(rng, 1, 15), std::move(c));
    const CremonaReduction red = cremona_reduce(cls);
    const bool nonpositive = red.cls.c0 <= 0 ||
                             std::any_of(red.cls.c.begin(), red.cls.c.end(),
                                         [](const Rat& v) { return v <= 0; });
    if (!nonpositive && !is_reduced(red.cls)) {
      return fail("terminal class neither reduced nor out of the positive region: " +
                  format_class(red.cls));
    }
    if (is_reduced(red.cls)) {
      const CremonaReduction again = cremona_reduce(red.cls);
      if (!(again.cls == red.cls) || !again.word.empty()) return fail("not idempotent");
    }
  }
  return pass();
}

CheckResult check_area_closed_form() {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 200; ++trial) {
    const CapacityVector delta = random_small_capacities(rng);
    const HClass cls = random_class(rng);
    Rat direct(cls.a0);
    for (int i = 0; i < 9; ++i) direct -= delta.delta[i] * cls.a[i];
    if (area(delta, cls) != direct) return fail("pairing disagrees with closed form");
    if (area(delta.pd(), cls) != direct) return fail("PD pairing disagrees");
  }
  return pass();
}

// --------------------------------------------------------------------------
// negative_classes

CheckResult check_enumeration_counts() {
  if (enumerate_le_minus3().size() != 437) {
    return fail("le3 count " + std::to_string(enumerate_le_minus3().size()));
  }
  for (long long m = 0; m <= 5; ++m) {
    const auto roots = enumerate_neg2_roots(m);
    const std::size_t expected = 84 + 240 * static_cast<std::size_t>(m);
    if (roots->size() != expected) {
      return fail("neg2(max_m=" + std::to_string(m) + ") count " +
                  std::to_string(roots->size()));
    }
  }
  if (enumerate_exceptional(1)->size() != 45) return fail("exceptional(1) count");
  return pass();
}

CheckResult check_classification_round_trip() {
  std::set<HClass> seen;
  for (const auto& cls : enumerate_le_minus3()) {
    const FamilyTag tag = classify_negative(cls);
    const bool f1 = tag.family == Family::F1a || tag.family == Family::F1b ||
                    tag.family == Family::F1c;
    if (!f1) return fail("le3 class misclassified: " + format_class(cls));
    seen.insert(cls);
  }
  const auto roots = enumerate_neg2_roots(3);
  for (const auto& root : *roots) {
    const FamilyTag tag = classify_negative(root.cls);
    if (!tag.root || !(*tag.root == root)) {
      return fail("root tag not recovered: " + format_root(root));
    }
    if (seen.count(root.cls)) return fail("families overlap");
    seen.insert(root.cls);
  }
  const auto exceptional = enumerate_exceptional(6);
  for (const auto& cls : *exceptional) {
    if (classify_negative(cls).family != Family::Exceptional) {
      return fail("exceptional class misclassified: " + format_class(cls));
    }
    if (seen.count(cls)) return fail("families overlap");
  }
  return pass();
}

CheckResult check_positive_root_equivalence() {
  const auto roots = enumerate_neg2_roots(5);
  for (const auto& root : *roots) {
    const auto inv = class_invariants(root.cls);
    const bool alt = inv.self_int == -2 && *inv.c1 == 0 && root.cls.a0 > 0;
    if (!alt || !is_positive_root(root.cls)) {
      return fail("positivity characterizations disagree on " + format_root(root));
    }
  }
  // negatives of positive roots at disallowed levels are not positive
  if (is_positive_root(-rijk_class(1, 2, 3))) return fail("-r_123 accepted");
  if (is_positive_root(rij_class(1, 2))) return fail("E1-E2 accepted at level 0");
  return pass();
}

CheckResult check_adjunction_consistency() {
  for (const auto& cls : enumerate_le_minus3()) {
    const auto inv = class_invariants(cls);
    if (inv.self_int > -3 || *inv.c1 >= 0 || *inv.genus_defect < 0) {
      return fail("le3 invariant violation: " + format_class(cls));
    }
  }
  for (const auto& root : *enumerate_neg2_roots(3)) {
    const auto inv = class_invariants(root.cls);
    if (inv.self_int != -2 || *inv.c1 != 0 || *inv.genus_defect < 0) {
      return fail("root invariant violation: " + format_root(root));
    }
  }
  for (const auto& cls : *enumerate_exceptional(6)) {
    const auto inv = class_invariants(cls);
    if (inv.self_int != -1 || *inv.c1 != 1 || *inv.genus_defect != 0 || *inv.codim != 0) {
      return fail("exceptional invariant violation: " + format_class(cls));
    }
  }
  return pass();
}

// --------------------------------------------------------------------------
// numbers_game

CheckResult check_e8_graph() {
  const Graph& g = e8_affine_graph();
  const auto& roots = simple_roots().r;
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      const bool edge = std::binary_search(g.adjacency[i].begin(), g.adjacency[i].end(), j);
      const long long ip = intersect(roots[i], roots[j]);
      if (i == j) {
        if (ip != -2) return fail("simple root with square != -2");
      } else if (edge != (ip == 1)) {
        return fail("adjacency disagrees with intersection pattern");
      }
    }
  }
  const std::vector<int> expected_degrees{1, 1, 2, 3, 2, 2, 2, 2, 1};
  for (int i = 0; i < 9; ++i) {
    if (static_cast<int>(g.adjacency[i].size()) != expected_degrees[i]) {
      return fail("degree sequence wrong at r" + std::to_string(i));
    }
  }
  const auto& w = e8_game_weights();
  for (int j = 0; j < 9; ++j) {
    long long nbr = 0;
    for (int i : g.adjacency[j]) nbr += w[i];
    if (2 * w[j] != nbr) return fail("weight vector is not a null vector of the diagram");
  }
  return pass();
}

CheckResult check_invariant_conservation() {
  const auto& w = e8_game_weights();
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    std::mt19937_64 rng(seed);
    GameState state = initial_e8_state();
    if (invariant(state, w) != 3) return fail("initial invariant != 3");
    for (int move = 0; move < 100; ++move) {
      state = fire(state, pick_positive(state.values, Strategy::RandomPositive, rng));
      if (invariant(state, w) != 3) {
        return fail("invariant broke at seed " + std::to_string(seed));
      }
    }
  }
  return pass();
}

CheckResult check_perpetual_playability() {
  for (const Strategy strategy : {Strategy::FirstPositive, Strategy::RandomPositive}) {
    std::mt19937_64 rng(7);
    GameState state = initial_e8_state();
    for (int move = 0; move < 500; ++move) {
      const bool any = std::any_of(state.values.begin(), state.values.end(),
                                   [](long long v) { return v > 0; });
      if (!any) return fail("no positive node at move " + std::to_string(move));
      state = fire(state, pick_positive(state.values, strategy, rng));
    }
  }
  return pass();
}

CheckResult check_non_periodicity() {
  std::mt19937_64 rng(0);
  GameState state = initial_e8_state();
  std::set<std::vector<long long>> seen{state.values};
  for (int move = 0; move < 500; ++move) {
    state = fire(state, pick_positive(state.values, Strategy::FirstPositive, rng));
    if (!seen.insert(state.values).second) {
      return fail("state repeated at move " + std::to_string(move + 1));
    }
  }
  return pass();
}

CheckResult check_lattice_game_equivalence() {
  for (const Strategy strategy : {Strategy::FirstPositive, Strategy::RandomPositive}) {
    std::mt19937_64 rng(11);
    GameState plain = initial_e8_state();
    LatticeGameState lattice = lattice_init();
    for (int move = 0; move < 200; ++move) {
      if (lattice.game_values() != plain.values) {
        return fail("derived values diverged at move " + std::to_string(move));
      }
      const int node = pick_positive(plain.values, strategy, rng);
      auto [next, crossed] = lattice_fire(lattice, node);
      if (!is_positive_root(crossed)) {
        return fail("crossed class is not a positive root: " + format_class(crossed));
      }
      lattice = std::move(next);
      plain = fire(plain, node);
    }
    // reflections are isometries: the intersection pattern never changes
    const auto& roots = simple_roots().r;
    for (int i = 0; i < 9; ++i) {
      for (int j = 0; j < 9; ++j) {
        if (intersect(lattice.node_classes[i], lattice.node_classes[j]) !=
            intersect(roots[i], roots[j])) {
          return fail("intersection pattern changed");
        }
      }
    }
  }
  return pass();
}

// --------------------------------------------------------------------------
// wall_crossing

CheckResult check_signature_completeness() {
  for (const CapacityVector& delta :
       {default_sequence_start(), CapacityVector(std::vector<Rat>(9, Rat(1, 10)))}) {
    const long long bound = level_bound(delta);
    const auto roots = enumerate_neg2_roots(bound + 3);
    for (const auto& root : *roots) {
      if (root.m > bound && area(delta, root.cls) <= 0) {
        return fail("root above the level bound with non-positive area: " +
                    format_root(root));
      }
    }
  }
  return pass();
}

CheckResult check_sequence_soundness() {
  const auto records =
      generate_sequence(default_sequence_start(), 50, Strategy::RandomPositive, 0);
  PDClass prev_pd = default_sequence_start().pd();
  for (const auto& rec : records) {
    if (!is_positive_root(rec.crossed)) return fail("crossed a non-root");
    if (!(rec.area_before > 0) || rec.area_after != -rec.area_before) {
      return fail("area signs wrong at step " + std::to_string(rec.step));
    }
    if (!(rec.pd_unnormalized.c0 > prev_pd.c0)) return fail("c0 not increasing");
    for (int i = 0; i < 9; ++i) {
      if (rec.pd_unnormalized.c[i] < prev_pd.c[i]) return fail("coefficient decreased");
    }
    if (rec.invariant_value != 3) return fail("game invariant drifted");
    prev_pd = rec.pd_unnormalized;
  }

  // consecutive chamber signatures differ in exactly the crossed root sign
  CapacityVector prev = default_sequence_start();
  for (int step = 0; step < 10; ++step) {
    const auto& rec = records[step];
    const long long joint = std::max(level_bound(prev), level_bound(rec.delta));
    for (const auto& root : *enumerate_neg2_roots(joint)) {
      const int s1 = sign_of(area(prev, root.cls));
      const int s2 = sign_of(area(rec.delta, root.cls));
      if (s1 == 0 || s2 == 0) return fail("sequence point on a root wall");
      if (root.cls == rec.crossed) {
        if (!(s1 == 1 && s2 == -1)) return fail("crossed root sign did not flip + to -");
      } else if (s1 != s2) {
        return fail("sign flip off the crossed wall at step " + std::to_string(rec.step));
      }
    }
    prev = rec.delta;
  }
  return pass();
}

// The closed forms of the renormalized capacities after one crossing,
// written directly in terms of the old form; the implementation must agree
// symbolically.
CheckResult check_renormalization_closed_form() {
  std::mt19937_64 rng(105);
  int trials = 0;
  for (int rep = 0; rep < 9; ++rep) {
    std::vector<Rat> c(9);
    for (auto& v : c) v = Rat(1 + static_cast<long long>(rng() % 60), 200);
    const Rat scale = random_rat(rng, 1, 5);
    PDClass pd(scale, c);
    for (auto& v : pd.c) v *= scale / 3;  // keep areas positive at every level

    const auto roots = enumerate_neg2_roots(3);
    for (const auto& root : *roots) {
      const Rat a = pairing(pd, root.cls);
      if (a <= 0) continue;
      ++trials;
      const CapacityVector got = normalize(wall_cross_step(pd, root.cls));

      const long long m = root.m;
      const int sgn = root.kind == RootKind::MinusRijk ? -1 : 1;
      for (int l = 1; l <= 9; ++l) {
        Rat num = pd.c[l - 1], den = pd.c0;
        if (root.kind == RootKind::Rij) {
          den += 3 * m * a;
          if (l == root.i) num += (m - 1) * a;
          else if (l == root.j) num += (m + 1) * a;
          else num += m * a;
        } else {
          den += (3 * m + sgn) * a;
          const bool in_support = l == root.i || l == root.j || l == root.k;
          num += (in_support ? Rat(m + sgn) : Rat(m)) * a;
        }
        if (got.delta[l - 1] != num / den) {
          return fail("closed form mismatch for " + format_root(root));
        }
      }
    }
  }
  if (trials < 100) return fail("too few usable trials");
  return pass();
}

CheckResult check_convergence_trend() {
  const auto records =
      generate_sequence(default_sequence_start(), 50, Strategy::RandomPositive, 0);
  for (const auto& rec : records) {
    if (!is_admissible(rec.delta, 30).admissible) {
      return fail("inadmissible at step " + std::to_string(rec.step));
    }
    if (pairing(rec.pd_unnormalized, d9_class()) <= 0) return fail("D9 area not positive");
  }
  if (!(records[49].sup_distance_to_monotone < records[9].sup_distance_to_monotone)) {
    return fail("sup distance did not shrink between steps 10 and 50");
  }
  return pass();
}

CheckResult check_solstice() {
  // construction + the two-sided postconditions
  const HClass wall = rijk_class(1, 2, 3);
  const RestrictionPair pair =
      comparable_pair(wall, default_sequence_start(), Rat(1, 20), 8);
  if (!(area(pair.x_minus, wall) > 0) || !(area(pair.x_plus, wall) < 0)) {
    return fail("pair on wrong sides");
  }
  int positive_entries = 0;
  for (int i = 0; i < 9; ++i) {
    const Rat d = pair.x_plus.delta[i] - pair.x_minus.delta[i];
    if (d < 0) return fail("difference leaves the positive orthant");
    if (d > 0) ++positive_entries;
    if (d != pair.k * wall.a[i]) return fail("difference is not k * normal");
  }
  if (positive_entries != 3) return fail("difference support should be the wall's");

  // reverse-direction impossibility: any point of the negative side differs
  // from a positive-side point by -k*n + w with w orthogonal to n, and for
  // n in P the difference pairs negatively with n.
  std::mt19937_64 rng(106);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> n(9), x_plus(9), v(9);
    bool nonzero = false;
    for (int i = 0; i < 9; ++i) {
      n[i] = Rat(static_cast<long long>(rng() % 5), 1 + rng() % 3);
      x_plus[i] = random_rat(rng, -9, 9);
      v[i] = random_rat(rng, -9, 9);
      nonzero = nonzero || n[i] > 0;
    }
    if (!nonzero) n[rng() % 9] = 1;
    Rat nn = 0, vn = 0;
    for (int i = 0; i < 9; ++i) {
      nn += n[i] * n[i];
      vn += v[i] * n[i];
    }
    const Rat kk = Rat(1 + rng() % 7, 1 + rng() % 5);
    Rat dot = 0;  // (x_minus - x_plus) . n
    for (int i = 0; i < 9; ++i) {
      const Rat w = v[i] - vn / nn * n[i];
      const Rat x_minus = x_plus[i] - kk * n[i] + w;
      dot += (x_minus - x_plus[i]) * n[i];
    }
    if (!(dot < 0) || dot != -kk * nn) return fail("reverse direction not excluded");
  }

  // directional trichotomy on basis-like normals
  auto unit = [&](int i, int s) {
    std::vector<Rat> v(9, Rat(0));
    v[i] = s;
    return v;
  };
  for (int i = 0; i < 9; ++i) {
    if (restriction_direction(unit(i, 1)) != RestrictionDirection::PlusToMinusOnly ||
        restriction_direction(unit(i, -1)) != RestrictionDirection::MinusToPlusOnly) {
      return fail("basis vector direction wrong");
    }
  }
  std::vector<Rat> mixed(9, Rat(0));
  mixed[0] = 1;
  mixed[1] = -1;
  if (restriction_direction(mixed) != RestrictionDirection::Both) {
    return fail("mixed normal should allow both directions");
  }
  return pass();
}

CheckResult check_admissibility() {
  if (!is_admissible(CapacityVector(std::vector<Rat>(9, Rat(1, 10))), 12).admissible) {
    return fail("small equal capacities should be admissible");
  }
  if (is_admissible(CapacityVector(std::vector<Rat>(9, Rat(1, 3))), 12).admissible) {
    return fail("the monotone point is on the boundary, not inside");
  }
  std::vector<Rat> big(9, Rat(1, 10));
  big[0] = 1;
  if (is_admissible(CapacityVector(big), 12).admissible) {
    return fail("capacity 1 with company should fail");
  }
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 25; ++trial) {
    const auto r = is_admissible(random_small_capacities(rng), 12);
    if (!r.admissible) return fail("random small capacities rejected: " + r.certificate);
  }
  return pass();
}

}  // namespace

CheckResult check_d9_decomposition(const HClass& d9) {
  const auto& roots = simple_roots().r;
  const long long coeff[9] = {3, 2, 4, 6, 5, 4, 3, 2, 1};
  HClass sum;
  for (int i = 0; i < 9; ++i) sum = sum + coeff[i] * roots[i];
  if (!(sum == d9)) {
    return fail("3r0+2r1+4r2+6r3+5r4+4r5+3r6+2r7+r8 = " + format_class(sum) +
                " differs from " + format_class(d9));
  }
  for (int i = 0; i < 9; ++i) {
    const auto inv = class_invariants(roots[i]);
    if (inv.self_int != -2 || *inv.c1 != 0) return fail("simple root invariants wrong");
    if (roots[i].a0 != (i == 0 ? 1 : 0)) return fail("simple root L-coefficient wrong");
  }
  return pass();
}

const std::vector<Check>& verification_checks() {
  static const std::vector<Check> checks = {
      {"lattice", "d9-decomposition", [] { return check_d9_decomposition(d9_class()); }},
      {"lattice", "intersection-form", check_intersection_form},
      {"lattice", "reflection-involution-isometry", check_reflection_involution},
      {"lattice", "reflection-fixes-d9", check_reflection_fixes_d9},
      {"lattice", "cremona-reduction", check_cremona_reduction},
      {"lattice", "area-closed-form", check_area_closed_form},
      {"negative_classes", "enumeration-counts", check_enumeration_counts},
      {"negative_classes", "classification-round-trip", check_classification_round_trip},
      {"negative_classes", "positive-root-equivalence", check_positive_root_equivalence},
      {"negative_classes", "adjunction-consistency", check_adjunction_consistency},
      {"numbers_game", "e8-graph", check_e8_graph},
      {"numbers_game", "invariant-conservation", check_invariant_conservation},
      {"numbers_game", "perpetual-playability", check_perpetual_playability},
      {"numbers_game", "non-periodicity", check_non_periodicity},
      {"numbers_game", "lattice-game-equivalence", check_lattice_game_equivalence},
      {"wall_crossing", "signature-completeness", check_signature_completeness},
      {"wall_crossing", "sequence-soundness", check_sequence_soundness},
      {"wall_crossing", "renormalization-closed-form", check_renormalization_closed_form},
      {"wall_crossing", "convergence-trend", check_convergence_trend},
      {"wall_crossing", "solstice", check_solstice},
      {"wall_crossing", "admissibility", check_admissibility},
  };
  return checks;
}

}  // namespace capcone
