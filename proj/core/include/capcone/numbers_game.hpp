#pragma once

// Mozes' game of numbers on a connected graph: a move selects a node with a
// positive value, adds that value to every neighbor, and negates it at the
// selected node.  Specialized here to the affine E8 diagram, plus a
// lattice-tracked variant whose node classes are the images of the simple
// roots under the reflections performed so far.

#include "capcone/hclass.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace capcone {

struct Graph {
  int node_count = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor lists

  // Validates: indices in range, no self-loops, connected.
  static Graph from_edges(int node_count, const std::vector<std::pair<int, int>>& edges,
                          std::vector<std::string> labels = {});
};

// Nodes r0..r8; the chain r1-...-r8 with the extra edge r0-r3.  Equals the
// intersection graph of the simple roots (edge iff r_i . r_j == 1).
const Graph& e8_affine_graph();

// (3,2,4,6,5,4,3,2,1): satisfies 2 w_j = sum of w over neighbors of j at
// every node, which makes <values, w> invariant under every legal move.
const std::array<long long, 9>& e8_game_weights();

struct GameState {
  Graph graph;
  std::vector<long long> values;
  std::vector<int> history;  // fired nodes, for replay
};

// Values (1,0,...,0) on the affine E8 diagram; its invariant is 3.
GameState initial_e8_state();

// One move at `node`; requires values[node] > 0.
GameState fire(const GameState& state, int node);

long long invariant(const GameState& state, std::span<const long long> weights);

// ---------------------------------------------------------------------------
// Lattice-tracked game

struct LatticeGameState {
  std::array<HClass, 9> node_classes;  // images of the simple roots
  std::vector<HClass> crossed;         // reflection history

  // The game number of a node is the L-coefficient of its class.  r0 is the
  // only simple root with a non-zero L-coefficient (namely 1), so this
  // coordinate is exactly the r0-coefficient in the simple-root expansion
  // and no linear solve is needed.
  long long game_number(int node) const { return node_classes[node].a0; }
  std::vector<long long> game_values() const;
};

LatticeGameState lattice_init();

// Reflects every node class in the class at `node` (which must have a
// positive game number) and returns the new state together with the crossed
// class.  Game numbers evolve exactly as fire() evolves the plain game.
std::pair<LatticeGameState, HClass> lattice_fire(const LatticeGameState& state, int node);

// ---------------------------------------------------------------------------
// Strategies

enum class Strategy { FirstPositive, RandomPositive };

Strategy parse_strategy(const std::string& name);  // "first" | "random"
std::string strategy_name(Strategy strategy);

// FirstPositive: the lowest-index node with a positive value.
// RandomPositive: uniform among positive nodes, driven by the caller's rng
// (raw engine output reduced modulo the candidate count, so runs are
// reproducible across platforms for a fixed seed).
int pick_positive(const std::vector<long long>& values, Strategy strategy,
                  std::mt19937_64& rng);

}  // namespace capcone
