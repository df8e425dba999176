#include "capcone/numbers_game.hpp"

#include <algorithm>

namespace capcone {

Graph Graph::from_edges(int node_count, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels) {
  if (node_count <= 0) throw math_error("Graph: node count must be positive");
  Graph g;
  g.node_count = node_count;
  g.adjacency.assign(node_count, {});
  for (auto [x, y] : edges) {
    if (x < 0 || x >= node_count || y < 0 || y >= node_count) {
      throw math_error("Graph: edge endpoint out of range");
    }
    if (x == y) throw math_error("Graph: self-loops are not allowed");
    g.adjacency[x].push_back(y);
    g.adjacency[y].push_back(x);
  }
  for (auto& nbrs : g.adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }

  // connectivity
  std::vector<char> seen(node_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.adjacency[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw math_error("Graph: not connected");
  }

  if (labels.empty()) {
    for (int v = 0; v < node_count; ++v) labels.push_back("v" + std::to_string(v));
  }
  if (static_cast<int>(labels.size()) != node_count) {
    throw math_error("Graph: label count mismatch");
  }
  g.labels = std::move(labels);
  return g;
}

const Graph& e8_affine_graph() {
  static const Graph g = [] {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < 8; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, 3});
    std::vector<std::string> labels;
    for (int i = 0; i < 9; ++i) labels.push_back("r" + std::to_string(i));
    return Graph::from_edges(9, edges, std::move(labels));
  }();
  return g;
}

const std::array<long long, 9>& e8_game_weights() {
  static const std::array<long long, 9> w = {3, 2, 4, 6, 5, 4, 3, 2, 1};
  return w;
}

GameState initial_e8_state() {
  GameState s;
  s.graph = e8_affine_graph();
  s.values.assign(9, 0);
  s.values[0] = 1;
  return s;
}

GameState fire(const GameState& state, int node) {
  if (node < 0 || node >= state.graph.node_count) {
    throw math_error("fire: node index out of range");
  }
  if (state.values[node] <= 0) {
    throw math_error("fire: node " + state.graph.labels[node] + " has value " +
                     std::to_string(state.values[node]) + ", needs > 0");
  }
  GameState out = state;
  const long long v = out.values[node];
  for (int w : out.graph.adjacency[node]) out.values[w] += v;
  out.values[node] = -v;
  out.history.push_back(node);
  return out;
}

long long invariant(const GameState& state, std::span<const long long> weights) {
  if (weights.size() != state.values.size()) {
    throw math_error("invariant: weight vector length mismatch");
  }
  long long s = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * state.values[i];
  return s;
}

std::vector<long long> LatticeGameState::game_values() const {
  std::vector<long long> v;
  v.reserve(9);
  for (const auto& cls : node_classes) v.push_back(cls.a0);
  return v;
}

LatticeGameState lattice_init() {
  LatticeGameState s;
  s.node_classes = simple_roots().r;
  return s;
}

std::pair<LatticeGameState, HClass> lattice_fire(const LatticeGameState& state, int node) {
  if (node < 0 || node >= 9) throw math_error("lattice_fire: node index out of range");
  if (state.game_number(node) <= 0) {
    throw math_error("lattice_fire: node r" + std::to_string(node) +
                     " has game number " + std::to_string(state.game_number(node)) +
                     ", needs > 0");
  }
  const HClass crossed = state.node_classes[node];
  LatticeGameState out = state;
  for (auto& cls : out.node_classes) cls = reflect(crossed, cls);
  out.crossed.push_back(crossed);
  return {std::move(out), crossed};
}

Strategy parse_strategy(const std::string& name) {
  if (name == "first") return Strategy::FirstPositive;
  if (name == "random") return Strategy::RandomPositive;
  throw std::invalid_argument("unknown strategy '" + name + "' (expected first|random)");
}

std::string strategy_name(Strategy strategy) {
  return strategy == Strategy::FirstPositive ? "first" : "random";
}

int pick_positive(const std::vector<long long>& values, Strategy strategy,
                  std::mt19937_64& rng) {
  std::vector<int> positive;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > 0) positive.push_back(static_cast<int>(i));
  }
  if (positive.empty()) throw math_error("pick_positive: no node has a positive value");
  if (strategy == Strategy::FirstPositive) return positive.front();
  return positive[static_cast<std::size_t>(rng() % positive.size())];
}

}  // namespace capcone
