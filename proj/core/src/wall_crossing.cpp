#include "capcone/wall_crossing.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace capcone {

namespace {

int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Rat sum_of(const std::vector<Rat>& v) {
  Rat s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace

long long level_bound(const PDClass& form) {
  if (form.n != 9) throw math_error("level_bound: requires n == 9");
  const Rat w_d9 = pairing(form, d9_class());
  if (w_d9 <= 0) {
    throw math_error("level_bound: area of D9 is " + format_rational(w_d9) +
                     " <= 0; the wall set is not locally finite there");
  }
  Rat max_abs = 0;
  for (const auto& r : elementary_root_classes()) {
    max_abs = std::max(max_abs, rat_abs(pairing(form, r)));
  }
  return static_cast<long long>(rat_ceil(max_abs / w_d9));
}

long long level_bound(const CapacityVector& delta) { return level_bound(delta.pd()); }

ChamberSignature chamber_signature(const CapacityVector& delta) {
  ChamberSignature sig;
  sig.level_bound = level_bound(delta);

  for (const auto& cls : enumerate_le_minus3()) {
    const int s = sign_of(area(delta, cls));
    sig.le3_signs.push_back({cls, s});
    if (s == 0) sig.on_wall.push_back(cls);
  }
  const auto roots = enumerate_neg2_roots(sig.level_bound);
  for (const auto& root : *roots) {
    const int s = sign_of(area(delta, root.cls));
    sig.root_signs.push_back({root, s});
    if (s == 0) sig.on_wall.push_back(root.cls);
  }
  return sig;
}

std::vector<HClass> separating_walls(const CapacityVector& from, const CapacityVector& to) {
  if (from.n() != 9 || to.n() != 9) throw math_error("separating_walls: requires n == 9");
  const long long bound = std::max(level_bound(from), level_bound(to));

  std::vector<HClass> walls;
  auto consider = [&](const HClass& cls) {
    const Rat a1 = area(from, cls);
    const Rat a2 = area(to, cls);
    if (a1 == 0) {
      throw math_error("separating_walls: 'from' lies on the wall of " + format_class(cls));
    }
    if (a2 == 0) {
      throw math_error("separating_walls: 'to' lies on the wall of " + format_class(cls));
    }
    if (sign_of(a1) != sign_of(a2)) walls.push_back(cls);
  };

  for (const auto& cls : enumerate_le_minus3()) consider(cls);
  const auto roots = enumerate_neg2_roots(bound);
  for (const auto& root : *roots) consider(root.cls);
  return walls;
}

PDClass wall_cross_step(const PDClass& form, const HClass& root) {
  if (!is_positive_root(root)) {
    throw math_error("wall_cross_step: " + format_class(root) + " is not a positive root");
  }
  const Rat p = pairing(form, root);
  if (p <= 0) {
    throw math_error("wall_cross_step: area " + format_rational(p) + " of " +
                     format_class(root) + " is not strictly positive");
  }
  return form + p * pd_of(root);
}

CapacityVector normalize(const PDClass& form) {
  if (form.c0 <= 0) {
    throw math_error("normalize: c0 = " + format_rational(form.c0) + " is not positive");
  }
  std::vector<Rat> delta;
  delta.reserve(form.n);
  for (const auto& c : form.c) delta.push_back(c / form.c0);
  return CapacityVector(std::move(delta));
}

const CapacityVector& default_sequence_start() {
  static const CapacityVector delta0 = [] {
    std::vector<Rat> d;
    for (long long num : {196, 176, 133, 105, 95, 70, 45, 22, 17}) d.push_back(Rat(num, 1000));
    return CapacityVector(std::move(d));
  }();
  return delta0;
}

std::vector<SequenceRecord> generate_sequence(const CapacityVector& delta0, int steps,
                                              Strategy strategy, std::uint64_t seed) {
  if (delta0.n() != 9) throw math_error("generate_sequence: requires n == 9");
  if (steps < 0) throw math_error("generate_sequence: negative step count");

  if (sum_of(delta0.delta) >= 1) {
    throw math_error("generate_sequence: delta0 has capacity sum " +
                     format_rational(sum_of(delta0.delta)) +
                     " >= 1, outside the all-positive chamber");
  }
  if (!is_reduced(delta0.pd())) {
    throw math_error("generate_sequence: delta0 is not reduced "
                     "(needs descending entries with delta1+delta2+delta3 <= 1)");
  }
  {
    const ChamberSignature sig = chamber_signature(delta0);
    if (!sig.interior()) {
      throw math_error("generate_sequence: delta0 lies on the wall of " +
                       format_class(sig.on_wall.front()));
    }
  }

  std::mt19937_64 rng(seed);
  LatticeGameState game = lattice_init();
  PDClass pd = delta0.pd();
  const Rat third(1, 3);
  const auto& weights = e8_game_weights();

  std::vector<SequenceRecord> records;
  records.reserve(steps);
  for (int step = 1; step <= steps; ++step) {
    const int node = pick_positive(game.game_values(), strategy, rng);
    auto [next_game, crossed] = lattice_fire(game, node);

    const Rat before = pairing(pd, crossed);
    if (before == 0) {
      throw math_error("generate_sequence: step " + std::to_string(step) +
                       " lands exactly on the wall of " + format_class(crossed) +
                       "; perturb delta0");
    }
    if (before < 0) {
      throw math_error("generate_sequence: step " + std::to_string(step) +
                       " would cross " + format_class(crossed) +
                       " with negative area " + format_rational(before));
    }

    const PDClass next_pd = wall_cross_step(pd, crossed);
    const Rat after = pairing(next_pd, crossed);
    assert(after == -before);

    // unnormalized monotonicity: coefficients weakly increase, c0 strictly
    assert(next_pd.c0 > pd.c0);
    for (int i = 0; i < 9; ++i) assert(next_pd.c[i] >= pd.c[i]);

    long long inv = 0;
    const auto values = next_game.game_values();
    for (int i = 0; i < 9; ++i) inv += weights[i] * values[i];

    CapacityVector delta = normalize(next_pd);
    Rat sup = 0;
    for (const auto& d : delta.delta) sup = std::max(sup, rat_abs(d - third));

    records.push_back(SequenceRecord{step, crossed, next_pd, std::move(delta), before,
                                     after, inv, std::move(sup)});
    pd = records.back().pd_unnormalized;
    game = std::move(next_game);
  }
  return records;
}

RestrictionPair comparable_pair(const HClass& wall, const CapacityVector& near,
                                const Rat& epsilon, long long max_a0) {
  if (!is_positive_root(wall)) {
    throw math_error("comparable_pair: " + format_class(wall) + " is not a positive root");
  }
  if (epsilon <= 0) throw math_error("comparable_pair: epsilon must be positive");

  // normal = the wall's E-coefficient vector; positivity of the root puts it
  // in the closed positive orthant, nonzero.
  std::vector<Rat> normal(wall.a.begin(), wall.a.end());
  Rat norm_sq = 0;
  for (const auto& v : normal) norm_sq += v * v;

  const Rat ar = area(near, wall);
  if (ar <= 0) {
    throw math_error("comparable_pair: 'near' has area " + format_rational(ar) +
                     " on the wall; it must lie strictly on the positive side");
  }
  const Rat t_star = ar / norm_sq;  // crossing parameter along near + t*normal

  auto point_at = [&](const Rat& t) {
    std::vector<Rat> d = near.delta;
    for (int i = 0; i < 9; ++i) d[i] += t * normal[i];
    return CapacityVector(std::move(d));
  };

  Rat s = std::min(epsilon, t_star) / 2;
  for (int attempt = 0; attempt < 128; ++attempt, s /= 2) {
    CapacityVector x_minus = point_at(t_star - s);
    CapacityVector x_plus = point_at(t_star + s);

    // both endpoints need a locally finite wall set
    if (pairing(x_plus.pd(), d9_class()) <= 0) continue;

    const long long bound = std::max(level_bound(x_minus), level_bound(x_plus));
    bool clean = true;
    int flips = 0;
    auto inspect = [&](const HClass& cls) {
      const Rat a1 = area(x_minus, cls);
      const Rat a2 = area(x_plus, cls);
      if (a1 == 0 || a2 == 0) {
        clean = false;
        return;
      }
      if (sign_of(a1) != sign_of(a2)) {
        if (cls == wall) ++flips;
        else clean = false;
      }
    };
    for (const auto& cls : enumerate_le_minus3()) {
      if (!clean) break;
      inspect(cls);
    }
    if (clean) {
      const auto roots = enumerate_neg2_roots(bound);
      for (const auto& root : *roots) {
        if (!clean) break;
        inspect(root.cls);
      }
    }
    if (!clean || flips != 1) continue;

    if (!is_admissible(x_minus, max_a0).admissible) continue;
    if (!is_admissible(x_plus, max_a0).admissible) continue;

    RestrictionPair pair{wall, std::move(x_plus), std::move(x_minus), epsilon, 2 * s};
    return pair;
  }
  throw math_error("comparable_pair: no admissible pair within epsilon of the wall of " +
                   format_class(wall));
}

std::string restriction_direction_name(RestrictionDirection d) {
  switch (d) {
    case RestrictionDirection::PlusToMinusOnly: return "PlusToMinusOnly";
    case RestrictionDirection::MinusToPlusOnly: return "MinusToPlusOnly";
    case RestrictionDirection::Both: return "Both";
  }
  return "?";
}

RestrictionDirection restriction_direction(const std::vector<Rat>& normal) {
  bool any_pos = false, any_neg = false;
  for (const auto& v : normal) {
    if (v > 0) any_pos = true;
    if (v < 0) any_neg = true;
  }
  if (!any_pos && !any_neg) throw math_error("restriction_direction: zero normal vector");
  if (!any_neg) return RestrictionDirection::PlusToMinusOnly;
  if (!any_pos) return RestrictionDirection::MinusToPlusOnly;
  return RestrictionDirection::Both;
}

AdmissibilityResult is_admissible(const CapacityVector& delta, long long max_a0) {
  if (delta.n() != 9) throw math_error("is_admissible: requires n == 9");
  AdmissibilityResult out;
  out.max_a0 = max_a0;

  const auto exceptional = enumerate_exceptional(max_a0);

  // The scan touches every exceptional class up to the bound (825k classes
  // at a0 <= 30), so clear small denominators and test the sign of
  // a0*D - sum ai*pi in integer arithmetic; the rational loop stays as the
  // fallback for huge coordinates.  Both paths are exact.
  Int common_den = 1;
  for (const auto& d : delta.delta) {
    common_den = boost::multiprecision::lcm(common_den, denominator(d));
  }
  const Int limit("1000000000000000");
  bool fast = common_den < limit;
  long long den_ll = 0;
  std::vector<long long> num_ll(9, 0);
  if (fast) {
    den_ll = static_cast<long long>(common_den);
    for (int i = 0; i < 9 && fast; ++i) {
      const Int num = numerator(delta.delta[i]) * (common_den / denominator(delta.delta[i]));
      if (num >= limit) fast = false;
      else num_ll[i] = static_cast<long long>(num);
    }
  }

  const HClass* violated = nullptr;
  if (fast) {
    for (const auto& cls : *exceptional) {
      __int128 s = static_cast<__int128>(cls.a0) * den_ll;
      for (int i = 0; i < 9; ++i) s -= static_cast<__int128>(cls.a[i]) * num_ll[i];
      if (s <= 0) {
        violated = &cls;
        break;
      }
    }
  } else {
    for (const auto& cls : *exceptional) {
      if (area(delta, cls) <= 0) {
        violated = &cls;
        break;
      }
    }
  }
  if (violated) {
    out.certificate = "exceptional class " + format_class(*violated) + " has area " +
                      format_rational(area(delta, *violated)) + " <= 0";
    out.violating_class = *violated;
    return out;
  }

  Rat sq = 1;
  for (const auto& d : delta.delta) sq -= d * d;
  if (sq <= 0) {
    out.certificate = "square 1 - |delta|^2 = " + format_rational(sq) + " is not positive";
    return out;
  }

  // Cross-check: the reduction of (1; delta) must reach a reduced class with
  // positive entries.  Catches violations by exceptional classes beyond the
  // brute-force bound.
  const CremonaReduction red = cremona_reduce(delta.pd());
  const bool positive = red.cls.c0 > 0 &&
                        std::all_of(red.cls.c.begin(), red.cls.c.end(),
                                    [](const Rat& c) { return c > 0; });
  if (!positive || !is_reduced(red.cls)) {
    out.certificate = "cremona reduction terminated at " + format_class(red.cls) +
                      ", outside the positive reduced region";
    return out;
  }

  out.admissible = true;
  out.certificate = "positive square; positive area on all exceptional classes with a0 <= " +
                    std::to_string(max_a0) + "; cremona reduction stays positive";
  return out;
}

}  // namespace capcone
