#pragma once

// Worked-example graphs. Vertex v_i of the printed examples is id i-1.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ngsplit/graph.hpp"

namespace fixtures {

using ngsplit::Edge;
using ngsplit::Graph;

inline void add_clique(std::vector<Edge>& e, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) e.emplace_back(vs[i], vs[j]);
  }
}

inline void add_join(std::vector<Edge>& e, const std::vector<int>& xs, const std::vector<int>& ys) {
  for (int x : xs) {
    for (int y : ys) e.emplace_back(x, y);
  }
}

// A = {v4,v5,v6} clique, B = {v1,v2,v3} clique joined to A, C = {v7..v10}.
inline Graph g1() {
  std::vector<Edge> e;
  add_clique(e, {0, 1, 2, 3, 4, 5});
  e.insert(e.end(), {{0, 6}, {0, 7}, {0, 8}, {1, 6}, {1, 7}, {2, 9}});
  return Graph::build(10, e);
}

// g1 without the three edges inside A.
inline Graph g2() {
  std::vector<Edge> e;
  add_clique(e, {0, 1, 2});
  add_join(e, {0, 1, 2}, {3, 4, 5});
  e.insert(e.end(), {{0, 6}, {0, 7}, {0, 8}, {1, 6}, {1, 7}, {2, 9}});
  return Graph::build(10, e);
}

// g1 with A expanded to the 5-cycle v4-v5-v6-v7-v8-v4; C = {v9..v12}.
inline Graph g3() {
  std::vector<Edge> e;
  add_clique(e, {0, 1, 2});
  add_join(e, {0, 1, 2}, {3, 4, 5, 6, 7});
  e.insert(e.end(), {{3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 3}});
  e.insert(e.end(), {{0, 8}, {0, 9}, {0, 10}, {1, 8}, {1, 9}, {2, 11}});
  return Graph::build(12, e);
}

// K = {v1,v2,v3}, S = {v4,v5,v6}, degrees 3,3,2,1,1,0.
inline Graph example_3_5() {
  std::vector<Edge> e;
  add_clique(e, {0, 1, 2});
  e.insert(e.end(), {{0, 3}, {1, 4}});
  return Graph::build(6, e);
}

// A = C5 on 0..4; B = 5,6,7 clique joined to A; C = 8,9; B-C edge b1c1.
inline Graph noninjective_g() {
  std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  add_clique(e, {5, 6, 7});
  add_join(e, {5, 6, 7}, {0, 1, 2, 3, 4});
  e.emplace_back(5, 8);
  return Graph::build(10, e);
}

// A = C5 on 0..4; B = 5,6 joined to A; C = 7,8,9; B-C edges b1c1, b1c3, b2c3.
inline Graph noninjective_h() {
  std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  add_clique(e, {5, 6});
  add_join(e, {5, 6}, {0, 1, 2, 3, 4});
  e.insert(e.end(), {{5, 7}, {5, 9}, {6, 9}});
  return Graph::build(10, e);
}

inline Graph edgeless(int n) { return Graph(n); }

inline Graph two_k2() { return Graph::build(4, {{0, 1}, {2, 3}}); }

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return Graph::build(n, e);
}

}  // namespace fixtures
