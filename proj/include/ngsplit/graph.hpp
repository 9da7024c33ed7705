#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ngsplit {

using Vertex = int;

/// Largest vertex count a Graph can hold; one adjacency row is one machine word.
inline constexpr int kMaxVertices = 64;

/// Raised when an operation is applied outside its input domain.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Set of vertex ids in 0..63 stored as a bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  /// Lowest member; -1 when empty.
  constexpr Vertex first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;
   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64.
class Graph {
 public:
  /// Empty (edgeless) graph on n vertices.
  explicit Graph(int n = 0);

  /// Graph with exactly the given edges; duplicates collapse.
  /// Throws DomainError on an out-of-range endpoint or a loop.
  static Graph build(int n, const std::vector<Edge>& edges);

  /// Adopts adjacency rows directly. Rows must be symmetric and loop-free.
  static Graph from_rows(std::vector<std::uint64_t> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(Vertex v) const { return VertexSet(rows_[v]); }
  int degree(Vertex v) const { return std::popcount(rows_[v]); }
  std::vector<int> degrees() const;
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::range(order()); }
  std::uint64_t row(Vertex v) const { return rows_[v]; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }

  /// Edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_clique(VertexSet s) const;
  bool is_stable(VertexSet s) const;

  Graph complement() const;

  /// G[X]; vertices of X are relabeled 0..|X|-1 in ascending order.
  Graph induced(VertexSet x) const;

  /// G - w, later vertices shift down by one.
  Graph remove_vertex(Vertex w) const;
  Graph remove_vertices(VertexSet ws) const { return induced(vertices() - ws); }

  /// Appends vertex n adjacent exactly to the given set.
  Graph add_vertex(VertexSet neighbors) const;

  /// Applies a relabeling: vertex v becomes perm[v].
  Graph relabel(const std::vector<Vertex>& perm) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;
  void check_subset(VertexSet s) const;

  std::vector<std::uint64_t> rows_;
};

/// Position of v within the ascending enumeration of s (v must be in s).
inline int rank_in(VertexSet s, Vertex v) {
  return std::popcount(s.bits() & ((std::uint64_t{1} << v) - 1));
}

/// Re-expresses a set of original ids in the labels of induced(kept).
VertexSet restrict_to(VertexSet s, VertexSet kept);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

std::string to_string(VertexSet s);

}  // namespace ngsplit
