#include "ngsplit/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

namespace ngsplit::oracle {

namespace {

void require_size(const Graph& g, int limit, const char* what) {
  if (g.order() > limit) {
    throw DomainError(std::string(what) + " oracle limited to n <= " + std::to_string(limit) +
                      ", got n=" + std::to_string(g.order()));
  }
}

class StepCounter {
 public:
  explicit StepCounter(StepBudget budget) : budget_(budget) {}
  void tick() {
    if (budget_ && ++steps_ > *budget_) throw BudgetExceeded("oracle step budget exhausted");
  }

 private:
  StepBudget budget_;
  std::uint64_t steps_ = 0;
};

void max_clique(const Graph& g, int size, std::uint64_t cand, int& best, StepCounter& steps) {
  steps.tick();
  if (cand == 0) {
    best = std::max(best, size);
    return;
  }
  while (cand != 0) {
    if (size + std::popcount(cand) <= best) return;
    const Vertex v = std::countr_zero(cand);
    cand &= cand - 1;
    max_clique(g, size + 1, cand & g.row(v), best, steps);
  }
}

class Colorer {
 public:
  Colorer(const Graph& g, int lower, int upper, StepCounter& steps)
      : g_(g), order_(g.order()), classes_(g.order(), 0), lower_(lower), best_(upper), steps_(steps) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  int solve() {
    if (best_ > lower_) assign(0, 0);
    return best_;
  }

 private:
  void assign(std::size_t i, int used) {
    steps_.tick();
    if (used >= best_) return;
    if (i == order_.size()) {
      best_ = used;
      return;
    }
    const Vertex v = order_[i];
    for (int c = 0; c <= used; ++c) {
      if (c == used && used + 1 >= best_) break;
      if ((classes_[c] & g_.row(v)) != 0) continue;
      classes_[c] |= std::uint64_t{1} << v;
      assign(i + 1, std::max(used, c + 1));
      classes_[c] &= ~(std::uint64_t{1} << v);
      if (best_ == lower_) return;
    }
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<std::uint64_t> classes_;
  int lower_;
  int best_;
  StepCounter& steps_;
};

int greedy_colors(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::uint64_t> classes;
  for (Vertex v : order) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](std::uint64_t c) { return (c & g.row(v)) == 0; });
    if (it == classes.end()) {
      classes.push_back(std::uint64_t{1} << v);
    } else {
      *it |= std::uint64_t{1} << v;
    }
  }
  return static_cast<int>(classes.size());
}

bool all_pairs(const Graph& g, VertexSet s, bool want_edge) {
  for (Vertex u : s) {
    for (Vertex v : s) {
      if (u < v && g.adjacent(u, v) != want_edge) return false;
    }
  }
  return true;
}

}  // namespace

int clique_number(const Graph& g, StepBudget budget) {
  require_size(g, kMaxCliqueVertices, "clique");
  StepCounter steps(budget);
  int best = 0;
  max_clique(g, 0, g.vertices().bits(), best, steps);
  return best;
}

int independence_number(const Graph& g, StepBudget budget) {
  return clique_number(g.complement(), budget);
}

int chromatic_number(const Graph& g, StepBudget budget) {
  require_size(g, kMaxChromaticVertices, "chromatic number");
  if (g.order() == 0) return 0;
  StepCounter steps(budget);
  int omega = 0;
  max_clique(g, 0, g.vertices().bits(), omega, steps);
  return Colorer(g, omega, greedy_colors(g), steps).solve();
}

std::vector<std::pair<VertexSet, VertexSet>> all_ks_splits(const Graph& g) {
  require_size(g, kMaxSplitVertices, "split");
  std::vector<std::pair<VertexSet, VertexSet>> out;
  const std::uint64_t all = g.vertices().bits();
  for (std::uint64_t k = 0; k <= all; ++k) {
    const VertexSet ks(k);
    const VertexSet ss(all & ~k);
    if (all_pairs(g, ks, true) && all_pairs(g, ss, false)) out.emplace_back(ks, ss);
  }
  return out;
}

bool is_split_definitional(const Graph& g) { return !all_ks_splits(g).empty(); }

ForbiddenWitness forbidden_subgraph_check(const Graph& g, bool pseudo_split_only) {
  require_size(g, kMaxSplitVertices, "forbidden subgraph");
  const int n = g.order();
  ForbiddenWitness c4;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        for (Vertex d = c + 1; d < n; ++d) {
          const VertexSet s{a, b, c, d};
          std::array<int, 4> deg{};
          int edges = 0;
          int i = 0;
          for (Vertex u : s) {
            deg[i] = (g.neighbors(u) & s).size();
            edges += deg[i++];
          }
          edges /= 2;
          const bool all1 = std::all_of(deg.begin(), deg.end(), [](int x) { return x == 1; });
          const bool all2 = std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; });
          if (edges == 2 && all1) return {Forbidden::TwoK2, s};
          if (edges == 4 && all2 && c4.kind == Forbidden::None) c4 = {Forbidden::C4, s};
        }
      }
    }
  }
  if (c4.kind != Forbidden::None || pseudo_split_only) return c4;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != 5) continue;
    const VertexSet s(mask);
    bool cycle = true;
    for (Vertex u : s) cycle = cycle && (g.neighbors(u) & s).size() == 2;
    if (cycle) return {Forbidden::C5, s};
  }
  return {};
}

NgKind ng_kind_definitional(const Graph& g, int chi) {
  const int n = g.order();
  std::vector<Vertex> a, b, c;
  for (Vertex v = 0; v < n; ++v) {
    int deg = 0;
    for (Vertex u = 0; u < n; ++u) deg += g.adjacent(u, v) ? 1 : 0;
    (deg == chi - 1 ? a : deg > chi - 1 ? b : c).push_back(v);
  }
  auto pairwise = [&](const std::vector<Vertex>& xs, const std::vector<Vertex>& ys, bool want) {
    for (Vertex x : xs) {
      for (Vertex y : ys) {
        if (x != y && g.adjacent(x, y) != want) return false;
      }
    }
    return true;
  };
  if (a.empty() || !pairwise(b, b, true) || !pairwise(c, c, false) || !pairwise(a, b, true) ||
      !pairwise(a, c, false)) {
    return NgKind::None;
  }
  const bool clique = pairwise(a, a, true);
  const bool stable = pairwise(a, a, false);
  if (clique && stable) return NgKind::NG1NG2;
  if (clique) return NgKind::NG1;
  if (stable) return NgKind::NG2;
  if (a.size() == 5) {
    // 2-regular on five vertices means C5.
    bool two = true;
    for (Vertex x : a) {
      int k = 0;
      for (Vertex y : a) k += g.adjacent(x, y) ? 1 : 0;
      two = two && k == 2;
    }
    if (two) return NgKind::NG3;
  }
  return NgKind::None;
}

OracleReport report(const Graph& g, StepBudget budget) {
  OracleReport r;
  const Graph gc = g.complement();
  r.chi = chromatic_number(g, budget);
  r.chi_complement = chromatic_number(gc, budget);
  r.omega = clique_number(g, budget);
  r.alpha = clique_number(gc, budget);
  r.is_ng = r.chi + r.chi_complement == g.order() + 1;
  r.is_split_partition = is_split_definitional(g);
  const auto w = forbidden_subgraph_check(g);
  r.is_split_forbidden = w.kind == Forbidden::None;
  r.is_pseudo_split_forbidden = w.kind != Forbidden::TwoK2 && w.kind != Forbidden::C4;
  r.ng_kind = g.order() == 0 ? NgKind::None : ng_kind_definitional(g, r.chi);
  return r;
}

}  // namespace ngsplit::oracle
