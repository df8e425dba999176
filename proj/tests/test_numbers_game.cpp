#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capcone/negative_classes.hpp"
#include "capcone/numbers_game.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace capcone;

TEST_CASE("affine E8 diagram") {
  const Graph& g = e8_affine_graph();
  REQUIRE(g.node_count == 9);
  CHECK(g.labels[0] == "r0");
  CHECK(g.labels[8] == "r8");

  const std::vector<int> degrees{1, 1, 2, 3, 2, 2, 2, 2, 1};
  for (int i = 0; i < 9; ++i) CHECK(static_cast<int>(g.adjacency[i].size()) == degrees[i]);

  // adjacency equals the intersection pattern of the simple roots
  const auto& roots = simple_roots().r;
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      if (i == j) continue;
      const bool edge =
          std::find(g.adjacency[i].begin(), g.adjacency[i].end(), j) != g.adjacency[i].end();
      CHECK(edge == (intersect(roots[i], roots[j]) == 1));
    }
  }

  // the weight vector satisfies 2 w_j = sum of neighboring weights
  const auto& w = e8_game_weights();
  for (int j = 0; j < 9; ++j) {
    long long nbr = 0;
    for (int i : g.adjacency[j]) nbr += w[i];
    CHECK(2 * w[j] == nbr);
  }
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS((void)Graph::from_edges(2, {{0, 0}}), math_error);
  CHECK_THROWS_AS((void)Graph::from_edges(4, {{0, 1}, {2, 3}}), math_error);  // disconnected
  CHECK_THROWS_AS((void)Graph::from_edges(2, {{0, 5}}), math_error);
  CHECK_NOTHROW((void)Graph::from_edges(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("firing") {
  GameState s = initial_e8_state();
  CHECK(s.values == std::vector<long long>{1, 0, 0, 0, 0, 0, 0, 0, 0});

  const GameState after = fire(s, 0);
  CHECK(after.values == std::vector<long long>{-1, 0, 0, 1, 0, 0, 0, 0, 0});
  CHECK(after.history == std::vector<int>{0});

  CHECK_THROWS_AS((void)fire(s, 1), math_error);          // value 0
  CHECK_THROWS_AS((void)fire(after, 0), math_error);      // freshly negated
  CHECK_THROWS_AS((void)fire(s, 42), math_error);
}

TEST_CASE("the weighted invariant") {
  const auto& w = e8_game_weights();
  GameState s = initial_e8_state();
  CHECK(invariant(s, w) == 3);
  s = fire(s, 0);
  CHECK(3 * (-1) + 6 * 1 == 3);
  CHECK(invariant(s, w) == 3);

  // linearity
  std::mt19937_64 rng(1);
  GameState x = initial_e8_state(), y = initial_e8_state();
  for (auto& v : x.values) v = static_cast<long long>(rng() % 13) - 6;
  for (auto& v : y.values) v = static_cast<long long>(rng() % 13) - 6;
  GameState sum = x;
  for (int i = 0; i < 9; ++i) sum.values[i] += y.values[i];
  CHECK(invariant(sum, w) == invariant(x, w) + invariant(y, w));

  CHECK_THROWS_AS((void)invariant(s, std::vector<long long>{1, 2, 3}), math_error);
}

TEST_CASE("invariant conservation over random play") {
  const auto& w = e8_game_weights();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(seed);
    GameState s = initial_e8_state();
    for (int move = 0; move < 200; ++move) {
      s = fire(s, pick_positive(s.values, Strategy::RandomPositive, rng));
      CHECK(invariant(s, w) == 3);
    }
  }
}

TEST_CASE("perpetual playability and non-periodicity") {
  std::mt19937_64 rng(0);
  GameState s = initial_e8_state();
  std::set<std::vector<long long>> seen{s.values};
  for (int move = 0; move < 500; ++move) {
    bool any_positive = false;
    for (long long v : s.values) any_positive = any_positive || v > 0;
    REQUIRE(any_positive);
    s = fire(s, pick_positive(s.values, Strategy::FirstPositive, rng));
    CHECK(seen.insert(s.values).second);
  }
}

TEST_CASE("the game runs on arbitrary connected graphs") {
  // on a 4-cycle the all-ones weight vector satisfies 2w_j = sum of
  // neighbors, so the weighted sum is conserved there too
  GameState s;
  s.graph = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  s.values = {5, -2, 0, 1};
  const std::vector<long long> ones(4, 1);
  const long long before = invariant(s, ones);

  std::mt19937_64 rng(3);
  for (int move = 0; move < 50; ++move) {
    bool any = false;
    for (long long v : s.values) any = any || v > 0;
    if (!any) break;
    s = fire(s, pick_positive(s.values, Strategy::RandomPositive, rng));
    CHECK(invariant(s, ones) == before);
  }
  CHECK(s.history.size() == 50);  // invariant 4 > 0 keeps the game alive
}

TEST_CASE("lattice game: first fire") {
  const LatticeGameState s0 = lattice_init();
  CHECK(s0.game_values() == std::vector<long long>{1, 0, 0, 0, 0, 0, 0, 0, 0});

  auto [s1, crossed] = lattice_fire(s0, 0);
  CHECK(crossed == rijk_class(1, 2, 3));
  CHECK(s1.node_classes[0] == -rijk_class(1, 2, 3));
  CHECK(s1.node_classes[3] == rijk_class(1, 2, 3) + rij_class(3, 4));  // L-E1-E2-E4
  CHECK(s1.node_classes[3].a0 == 1);
  CHECK(s1.crossed == std::vector<HClass>{rijk_class(1, 2, 3)});

  CHECK_THROWS_AS((void)lattice_fire(s0, 5), math_error);
  CHECK_THROWS_AS((void)lattice_fire(s1, 0), math_error);
}

TEST_CASE("lattice game tracks the plain game move by move") {
  for (const Strategy strategy : {Strategy::FirstPositive, Strategy::RandomPositive}) {
    std::mt19937_64 rng(99);
    GameState plain = initial_e8_state();
    LatticeGameState lattice = lattice_init();
    for (int move = 0; move < 200; ++move) {
      REQUIRE(lattice.game_values() == plain.values);
      const int node = pick_positive(plain.values, strategy, rng);
      auto [next, crossed] = lattice_fire(lattice, node);
      CHECK(is_positive_root(crossed));
      plain = fire(plain, node);
      lattice = std::move(next);
    }

    // isometry: the multiset of pairwise intersections never changes
    const auto& roots = simple_roots().r;
    std::multiset<long long> before, after;
    for (int i = 0; i < 9; ++i) {
      for (int j = 0; j < 9; ++j) {
        before.insert(intersect(roots[i], roots[j]));
        after.insert(intersect(lattice.node_classes[i], lattice.node_classes[j]));
      }
    }
    CHECK(before == after);
  }
}

TEST_CASE("strategies") {
  CHECK(parse_strategy("first") == Strategy::FirstPositive);
  CHECK(parse_strategy("random") == Strategy::RandomPositive);
  CHECK_THROWS_AS((void)parse_strategy("greedy"), std::invalid_argument);

  std::mt19937_64 rng(1);
  CHECK(pick_positive({0, 3, 0, 2, 0, 0, 0, 0, 0}, Strategy::FirstPositive, rng) == 1);
  CHECK_THROWS_AS((void)pick_positive({0, -1, 0}, Strategy::FirstPositive, rng), math_error);

  // seeded random play is reproducible
  std::mt19937_64 r1(42), r2(42);
  GameState a = initial_e8_state(), b = initial_e8_state();
  for (int move = 0; move < 100; ++move) {
    a = fire(a, pick_positive(a.values, Strategy::RandomPositive, r1));
    b = fire(b, pick_positive(b.values, Strategy::RandomPositive, r2));
  }
  CHECK(a.values == b.values);
  CHECK(a.history == b.history);
}
