#include "ngsplit/bijection.hpp"

#include <vector>

#include "ngsplit/degree.hpp"

namespace ngsplit {

namespace {

ABCPartition ng_partition(const Graph& g, const char* what) {
  ABCPartition p = abc_partition(g);
  if (p.ng_kind == NgKind::None) throw DomainError(std::string(what) + ": input is not an NG graph");
  return p;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

// Appends `count` vertices; `inner(i, j)` decides edges among them and
// each new vertex is joined to `attach`.
Graph append_block(const Graph& h, int count, VertexSet attach, auto inner) {
  const int base = h.order();
  std::vector<std::uint64_t> rows(h.rows());
  rows.resize(static_cast<std::size_t>(base + count), 0);
  auto link = [&](Vertex u, Vertex v) {
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  };
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if (inner(i, j)) link(base + i, base + j);
    }
    for (Vertex v : attach) link(base + i, v);
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace

Ng1Case ng1_case(const Graph& g) {
  require(classify(g).ng1, "ng1_case: input is not NG-1");
  const ABCPartition p = abc_partition(g);
  if (p.a.size() >= 3) return Ng1Case::ManyA;
  if (p.a.size() == 1) return Ng1Case::SingleA;
  return derived_sets(g, p).c_prime.empty() ? Ng1Case::TwoANoCPrime : Ng1Case::TwoAWithCPrime;
}

Graph ng1_remove(const Graph& g) {
  require(g.order() >= 1 && classify(g).ng1, "ng1_remove: input is not NG-1");
  return g.remove_vertex(abc_partition(g).a.first());
}

Graph split_to_ng1(const Graph& h) {
  const ClassLabel label = classify(h);
  require(label.split, "split_to_ng1: input is not split");
  if (label.balanced) return h.add_vertex(kmax_partition(h, profile(h)).k);
  const ABCPartition p = abc_partition(h);
  if (label.ng2) return h.add_vertex(VertexSet{p.a.first()} | p.b);
  return h.add_vertex(p.a | p.b);
}

Graph ng1_to_ng2(const Graph& g) {
  require(classify(g).ng1, "ng1_to_ng2: input is not NG-1");
  return g.complement();
}

Graph ng2_to_ng1(const Graph& g) {
  require(classify(g).ng2, "ng2_to_ng1: input is not NG-2");
  return g.complement();
}

Graph ng3_shrink(const Graph& g) {
  require(classify(g).ng3, "ng3_shrink: input is not NG-3");
  const ABCPartition p = abc_partition(g);
  const Vertex a1 = p.a.first();
  const Vertex a2 = (g.neighbors(a1) & p.a).first();
  return ng3_shrink(g, {a1, a2});
}

Graph ng3_shrink(const Graph& g, Edge a_edge) {
  require(classify(g).ng3, "ng3_shrink: input is not NG-3");
  const ABCPartition p = ng_partition(g, "ng3_shrink");
  const auto [a1, a2] = a_edge;
  require(a1 >= 0 && a2 >= 0 && a1 < g.order() && a2 < g.order() && p.a.contains(a1) && p.a.contains(a2) &&
              g.adjacent(a1, a2),
          "ng3_shrink: chosen pair is not an edge of the 5-cycle");
  return g.induced(VertexSet{a1, a2} | p.b | p.c);
}

Graph ng3_grow(const Graph& h, int target_n) {
  const ClassLabel label = classify(h);
  require(label.ng1 && !label.ng2, "ng3_grow: input is not in NG-1 minus NG-2");
  require(target_n == h.order() + 3, "ng3_grow: target must be |V(H)| + 3");
  const ABCPartition p = abc_partition(h);
  const Vertex a1 = p.a.first();
  const Vertex a2 = (p.a - VertexSet{a1}).first();
  const VertexSet attach = (p.a - VertexSet{a1, a2}) | p.b;
  // New vertices y1, y2, y3 at ids n, n+1, n+2 form the path a2-y1-y2-y3-a1.
  const Vertex y1 = h.order();
  const Vertex y3 = y1 + 2;
  Graph g = append_block(h, 3, attach, [](int i, int j) { return j == i + 1; });
  std::vector<std::uint64_t> rows(g.rows());
  rows[a2] |= std::uint64_t{1} << y1;
  rows[y1] |= std::uint64_t{1} << a2;
  rows[a1] |= std::uint64_t{1} << y3;
  rows[y3] |= std::uint64_t{1} << a1;
  return Graph::from_rows(std::move(rows));
}

Graph drop_a(const Graph& g) {
  const ABCPartition p = ng_partition(g, "drop_a");
  return g.induced(p.b | p.c);
}

Graph strip_a(const Graph& g) {
  const ClassLabel label = classify(g);
  require(label.ng1 && !label.ng2, "strip_a: input is not in NG-1 minus NG-2");
  return drop_a(g);
}

Graph rebuild_a(const Graph& h, int target_n) {
  require(classify(h).split, "rebuild_a: input is not split");
  require(target_n >= h.order() + 2, "rebuild_a: target must be at least |V(H)| + 2");
  const KSPartition ks = smax_partition(h);
  return append_block(h, target_n - h.order(), ks.k, [](int, int) { return true; });
}

Graph strip_ab(const Graph& g) {
  require(classify(g).ng3, "strip_ab: input is not NG-3");
  const ABCPartition p = abc_partition(g);
  const DerivedSets d = derived_sets(g, p);
  return g.induced((p.b - d.b_prime) | p.c);
}

Graph rebuild_d(const Graph& h, int target_n) {
  require(classify(h).split, "rebuild_d: input is not split");
  require(target_n >= h.order() + 5, "rebuild_d: target must be at least |V(H)| + 5");
  const KSPartition ks = smax_partition(h);
  // Among the first five new vertices the cycle edges i~i+1 (mod 5) are missing.
  auto on_cycle = [](int i, int j) { return i < 5 && j < 5 && (j == i + 1 || (i == 0 && j == 4)); };
  return append_block(h, target_n - h.order(), ks.k, [&](int i, int j) { return !on_cycle(i, j); });
}

void validate(const KSTriple& t) {
  const KSKind actual = ks_kind(t.graph, t.partition.k, t.partition.s);
  if (actual != t.partition.kind) {
    throw DomainError("triple tagged " + to_string(t.partition.kind) + " but partition is " + to_string(actual));
  }
}

KSTriple phi(const KSTriple& t) {
  validate(t);
  const Vertex w = t.graph.order();
  KSTriple out{t.graph.add_vertex(t.partition.k), {t.partition.k | VertexSet{w}, t.partition.s, KSKind::KMax}};
  validate(out);
  return out;
}

KSTriple psi(const KSTriple& t) {
  validate(t);
  require(t.partition.kind == KSKind::KMax, "psi: triple is not a K-max partition of an unbalanced graph");
  Vertex w = -1;
  for (Vertex k : t.partition.k) {
    if ((t.graph.neighbors(k) & t.partition.s).empty()) {
      w = k;
      break;
    }
  }
  require(w >= 0, "psi: no vertex of K can join S");
  const VertexSet kept = t.graph.vertices() - VertexSet{w};
  KSTriple out{t.graph.remove_vertex(w), {}};
  out.partition.k = restrict_to(t.partition.k - VertexSet{w}, kept);
  out.partition.s = restrict_to(t.partition.s, kept);
  out.partition.kind = ks_kind(out.graph, out.partition.k, out.partition.s);
  return out;
}

CanonicalCode canonical(const KSTriple& t) {
  std::vector<int> colors(static_cast<std::size_t>(t.graph.order()), 0);
  for (Vertex k : t.partition.k) colors[k] = 1;
  return canonical(t.graph, colors);
}

std::string to_string(Ng1Case c) {
  switch (c) {
    case Ng1Case::ManyA: return "many-a";
    case Ng1Case::TwoANoCPrime: return "two-a-no-c-prime";
    case Ng1Case::TwoAWithCPrime: return "two-a-with-c-prime";
    case Ng1Case::SingleA: return "single-a";
  }
  return "?";
}

}  // namespace ngsplit
