#include "ngsplit/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace ngsplit {

namespace {

// Equitable refinement of an ordered colouring. Colours are kept dense
// (0..k-1); a cell splits by its vertices' neighbour counts into every
// cell, and split cells keep the relative order of their parent.
int refine(const Graph& g, std::vector<int>& color) {
  const int n = g.order();
  std::vector<int> order(n);
  std::vector<std::vector<int>> key(n);
  int k = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  while (true) {
    std::vector<std::uint64_t> cell(k, 0);
    for (Vertex v = 0; v < n; ++v) cell[color[v]] |= std::uint64_t{1} << v;
    for (Vertex v = 0; v < n; ++v) {
      auto& kv = key[v];
      kv.resize(k + 1);
      kv[0] = color[v];
      for (int c = 0; c < k; ++c) kv[c + 1] = std::popcount(g.row(v) & cell[c]);
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
    int next = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && key[order[i]] != key[order[i - 1]]) ++next;
      color[order[i]] = next;
    }
    const int k2 = n == 0 ? 0 : next + 1;
    if (k2 == k) return k;
    k = k2;
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g), n_(g.order()) {}

  void run(std::vector<int> color) { descend(std::move(color), {}); }

  const std::vector<std::uint64_t>& best_rows() const { return best_rows_; }
  const std::vector<Vertex>& best_labeling() const { return best_lab_; }

 private:
  void descend(std::vector<int> color, std::vector<Vertex> prefix) {
    const int k = refine(g_, color);
    if (k == n_) {
      leaf(color);
      return;
    }
    // Target cell: the first non-singleton colour.
    std::vector<int> size(k, 0);
    for (int c : color) ++size[c];
    const int target = static_cast<int>(std::find_if(size.begin(), size.end(),
                                                     [](int s) { return s > 1; }) -
                                        size.begin());
    std::vector<Vertex> explored;
    for (Vertex v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      if (!explored.empty() && equivalent_to_explored(prefix, explored, v)) continue;
      std::vector<int> child(n_);
      for (Vertex u = 0; u < n_; ++u) {
        child[u] = 2 * color[u] + (color[u] == target && u != v ? 1 : 0);
      }
      // Re-densify before refining.
      std::vector<int> vals(child);
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      for (auto& c : child) c = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
      std::vector<Vertex> p2 = prefix;
      p2.push_back(v);
      descend(std::move(child), std::move(p2));
      explored.push_back(v);
    }
  }

  // True when some discovered automorphism fixing `prefix` pointwise maps
  // an already explored sibling onto v; that subtree's leaves repeat.
  bool equivalent_to_explored(const std::vector<Vertex>& prefix,
                              const std::vector<Vertex>& explored, Vertex v) const {
    if (autos_.empty()) return false;
    UnionFind uf(n_);
    bool any = false;
    for (const auto& gamma : autos_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[p] == p; })) continue;
      any = true;
      for (Vertex u = 0; u < n_; ++u) uf.unite(u, gamma[u]);
    }
    if (!any) return false;
    const int rv = uf.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return uf.find(e) == rv; });
  }

  void leaf(const std::vector<int>& lab) {
    std::vector<std::uint64_t> rows(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      std::uint64_t r = 0;
      for (Vertex u : g_.neighbors(v)) r |= std::uint64_t{1} << lab[u];
      rows[lab[v]] = r;
    }
    if (best_lab_.empty() || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_lab_ = lab;
      best_inv_.assign(n_, 0);
      for (Vertex v = 0; v < n_; ++v) best_inv_[best_lab_[v]] = v;
    } else if (rows == best_rows_) {
      std::vector<Vertex> gamma(n_);
      for (Vertex v = 0; v < n_; ++v) gamma[v] = best_inv_[lab[v]];
      autos_.push_back(std::move(gamma));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<Vertex> best_lab_;
  std::vector<Vertex> best_inv_;
  std::vector<std::vector<Vertex>> autos_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
  const int n = g.order();
  if (!colors.empty() && static_cast<int>(colors.size()) != n) {
    throw DomainError("colour vector size does not match vertex count");
  }
  std::vector<int> color(n, 0);
  if (!colors.empty()) {
    std::vector<int> vals(colors.begin(), colors.end());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), colors[v]) - vals.begin());
    }
  }

  CanonicalForm out;
  std::string bytes(1, static_cast<char>(n));
  if (n > 0) {
    Searcher s(g);
    s.run(color);
    out.labeling = s.best_labeling();
    const auto& rows = s.best_rows();
    // Upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed MSB first.
    unsigned acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        acc = (acc << 1) | ((rows[i] >> j) & 1U);
        if (++nbits == 8) {
          bytes.push_back(static_cast<char>(acc));
          acc = 0;
          nbits = 0;
        }
      }
    }
    if (nbits > 0) bytes.push_back(static_cast<char>(acc << (8 - nbits)));
    if (!colors.empty()) {
      std::vector<int> by_pos(n);
      for (Vertex v = 0; v < n; ++v) by_pos[out.labeling[v]] = colors[v];
      for (int c : by_pos) {
        bytes.push_back('|');
        bytes += std::to_string(c);
      }
    }
  }
  out.code = CanonicalCode(std::move(bytes));
  return out;
}

CanonicalCode canonical(const Graph& g) { return canonical_form(g).code; }

CanonicalCode canonical(const Graph& g, std::span<const int> colors) {
  return canonical_form(g, colors).code;
}

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical(g) == canonical(h);
}

}  // namespace ngsplit
