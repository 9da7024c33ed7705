#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "../fixtures.hpp"
#include "ngsplit/canonical.hpp"
#include "ngsplit/partition.hpp"

using namespace ngsplit;

namespace {

// Isomorphism by trying every bijection; independent of the canonical form.
bool brute_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (g.relabel(p) == h) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("relabeled cycle has the same code") {
  const Graph a = cycle_graph(5);
  const Graph b = Graph::build(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  CHECK(canonical(a) == canonical(b));
}

TEST_CASE("P4 is isomorphic to its complement") {
  CHECK(isomorphic(path_graph(4), path_graph(4).complement()));
  CHECK_FALSE(isomorphic(path_graph(4), cycle_graph(4)));
}

TEST_CASE("noninjective pair: graphs differ, A-deletions agree") {
  const Graph g = fixtures::noninjective_g();
  const Graph h = fixtures::noninjective_h();
  CHECK_FALSE(isomorphic(g, h));
  const ABCPartition pg = abc_partition(g);
  const ABCPartition ph = abc_partition(h);
  CHECK(pg.a == VertexSet{0, 1, 2, 3, 4});
  CHECK(ph.a == VertexSet{0, 1, 2, 3, 4});
  CHECK(isomorphic(g.remove_vertices(pg.a), h.remove_vertices(ph.a)));
}

TEST_CASE("labeling maps the graph to the code's adjacency") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Graph g = fixtures::random_graph(8, 0.4, rng);
    const CanonicalForm cf = canonical_form(g);
    const Graph c = g.relabel(cf.labeling);
    CHECK(canonical_form(c).code == cf.code);
  }
}

TEST_CASE("property: code invariant under random relabeling") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> dens(0.0, 1.0);
  for (int n = 0; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const Graph g = fixtures::random_graph(n, dens(rng), rng);
      const CanonicalCode code = canonical(g);
      for (int k = 0; k < 100; ++k) REQUIRE(canonical(g.relabel(fixtures::random_permutation(n, rng))) == code);
    }
  }
}

TEST_CASE("property: equal codes iff isomorphic (brute force, n <= 6)") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Graph g = fixtures::random_graph(n, 0.5, rng);
    const Graph h = fixtures::random_graph(n, 0.5, rng);
    REQUIRE((canonical(g) == canonical(h)) == brute_isomorphic(g, h));
  }
}

TEST_CASE("highly symmetric graphs") {
  std::mt19937_64 rng(9);
  // Petersen graph: complement of the line graph of K5.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Edge> e;
  for (int a = 0; a < 10; ++a) {
    for (int b = a + 1; b < 10; ++b) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[b];
      if (i != k && i != l && j != k && j != l) e.emplace_back(a, b);
    }
  }
  const Graph petersen = Graph::build(10, e);
  for (const Graph& g : {petersen, cycle_graph(12), complete_graph(9), Graph(9)}) {
    const CanonicalCode code = canonical(g);
    for (int k = 0; k < 20; ++k) CHECK(canonical(g.relabel(fixtures::random_permutation(g.order(), rng))) == code);
  }
  CHECK_FALSE(isomorphic(cycle_graph(10), petersen));
}

TEST_CASE("vertex colours separate otherwise isomorphic graphs") {
  const Graph p3 = path_graph(3);
  const std::vector<int> end{1, 0, 0};
  const std::vector<int> other_end{0, 0, 1};
  const std::vector<int> center{0, 1, 0};
  CHECK(canonical(p3, end) == canonical(p3, other_end));
  CHECK(canonical(p3, end) != canonical(p3, center));
  CHECK(canonical(p3, end) != canonical(p3));
  CHECK_THROWS_AS(canonical(p3, std::vector<int>{0, 1}), DomainError);
}

TEST_CASE("orders differ, codes differ") {
  CHECK(canonical(Graph(0)) != canonical(Graph(1)));
  CHECK(canonical(Graph(2)) != canonical(complete_graph(2)));
}
