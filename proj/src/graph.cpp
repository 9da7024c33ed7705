#include "ngsplit/graph.hpp"

#include <sstream>

namespace ngsplit {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

// Compresses the bits of `word` selected by `mask` into the low bits (pext).
std::uint64_t extract_bits(std::uint64_t word, std::uint64_t mask) {
  std::uint64_t out = 0;
  int k = 0;
  for (VertexSet::iterator it(mask); it != VertexSet::iterator(); ++it, ++k) {
    if ((word >> *it) & 1U) out |= std::uint64_t{1} << k;
  }
  return out;
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw DomainError("vertex count " + std::to_string(n) + " outside 0.." +
                      std::to_string(kMaxVertices));
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::build(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    g.rows_[u] |= bit(v);
    g.rows_[v] |= bit(u);
  }
  return g;
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
  if (rows.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw DomainError("too many vertices");
  }
  Graph g;
  g.rows_ = std::move(rows);
  const std::uint64_t all = VertexSet::range(g.order()).bits();
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((g.rows_[v] & ~all) != 0 || g.adjacent(v, v)) {
      throw DomainError("invalid adjacency row " + std::to_string(v));
    }
    for (Vertex u : g.neighbors(v)) {
      if (!g.adjacent(u, v)) throw DomainError("asymmetric adjacency");
    }
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for n=" +
                      std::to_string(order()));
  }
}

void Graph::check_subset(VertexSet s) const {
  if (!s.subset_of(vertices())) {
    throw DomainError("vertex set " + to_string(s) + " not within 0.." +
                      std::to_string(order() - 1));
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(rows_.size());
  for (Vertex v = 0; v < order(); ++v) d[v] = degree(v);
  return d;
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : VertexSet(rows_[u] & ~((bit(u) << 1) - 1))) out.emplace_back(u, v);
  }
  return out;
}

bool Graph::is_clique(VertexSet s) const {
  for (Vertex v : s) {
    if (!(s - VertexSet{v}).subset_of(neighbors(v))) return false;
  }
  return true;
}

bool Graph::is_stable(VertexSet s) const {
  for (Vertex v : s) {
    if (!(neighbors(v) & s).empty()) return false;
  }
  return true;
}

Graph Graph::complement() const {
  Graph g(order());
  const std::uint64_t all = vertices().bits();
  for (Vertex v = 0; v < order(); ++v) g.rows_[v] = ~rows_[v] & all & ~bit(v);
  return g;
}

Graph Graph::induced(VertexSet x) const {
  check_subset(x);
  Graph g(x.size());
  int i = 0;
  for (Vertex v : x) g.rows_[i++] = extract_bits(rows_[v], x.bits());
  return g;
}

Graph Graph::remove_vertex(Vertex w) const {
  check_vertex(w);
  return induced(vertices() - VertexSet{w});
}

Graph Graph::add_vertex(VertexSet nbrs) const {
  check_subset(nbrs);
  if (order() >= kMaxVertices) throw DomainError("graph already has 64 vertices");
  Graph g = *this;
  const Vertex w = order();
  g.rows_.push_back(nbrs.bits());
  for (Vertex v : nbrs) g.rows_[v] |= bit(w);
  return g;
}

Graph Graph::relabel(const std::vector<Vertex>& perm) const {
  if (perm.size() != rows_.size()) throw DomainError("permutation size mismatch");
  std::uint64_t seen = 0;
  for (Vertex p : perm) {
    if (p < 0 || p >= order() || ((seen >> p) & 1U)) throw DomainError("relabel needs a permutation of 0..n-1");
    seen |= bit(p);
  }
  Graph g(order());
  for (Vertex v = 0; v < order(); ++v) {
    std::uint64_t r = 0;
    for (Vertex u : neighbors(v)) r |= bit(perm[u]);
    g.rows_[perm[v]] = r;
  }
  return g;
}

VertexSet restrict_to(VertexSet s, VertexSet kept) {
  return VertexSet(extract_bits(s.bits(), kept.bits()));
}

Graph complete_graph(int n) { return Graph(n).complement(); }

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::build(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::build(n, e);
}

std::string to_string(VertexSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace ngsplit
