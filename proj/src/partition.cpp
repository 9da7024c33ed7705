#include "ngsplit/partition.hpp"

namespace ngsplit {

ABCPartition abc_partition(const Graph& g, int chi) {
  const int n = g.order();
  if (chi < 1 || chi > n) {
    throw DomainError("chromatic number " + std::to_string(chi) + " outside 1.." + std::to_string(n));
  }
  ABCPartition p;
  p.chi = chi;
  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d == chi - 1) {
      p.a.insert(v);
    } else if (d > chi - 1) {
      p.b.insert(v);
    } else {
      p.c.insert(v);
    }
  }
  p.ng_kind = verify_ng_structure(g, p);
  return p;
}

NgKind verify_ng_structure(const Graph& g, const ABCPartition& p) {
  if (p.a.empty() || !g.is_clique(p.b) || !g.is_stable(p.c)) return NgKind::None;
  for (Vertex a : p.a) {
    if (!p.b.subset_of(g.neighbors(a))) return NgKind::None;
    if (!(g.neighbors(a) & p.c).empty()) return NgKind::None;
  }
  if (p.a.size() == 1) return NgKind::NG1NG2;
  if (g.is_clique(p.a)) return NgKind::NG1;
  if (g.is_stable(p.a)) return NgKind::NG2;
  if (p.a.size() == 5) {
    bool two_regular = true;
    for (Vertex a : p.a) two_regular = two_regular && (g.neighbors(a) & p.a).size() == 2;
    // A 2-regular graph on five vertices is C5.
    if (two_regular) return NgKind::NG3;
  }
  return NgKind::None;
}

std::optional<int> degree_chromatic_number(const DegreeProfile& p) {
  if (p.n() == 0) return std::nullopt;
  if (is_split(p) || is_ng3(p)) return p.m;
  return std::nullopt;
}

ABCPartition abc_partition(const Graph& g) {
  const auto chi = degree_chromatic_number(profile(g));
  if (!chi) throw DomainError("chromatic number not derivable from degrees (graph is neither split nor NG-3)");
  return abc_partition(g, *chi);
}

KSPartition kmax_partition(const Graph& g, const DegreeProfile& p) {
  if (!is_split(p)) throw DomainError("K-max partition requested for a non-split graph");
  if (p.n() != g.order()) throw DomainError("profile does not belong to graph");
  KSPartition ks;
  for (int i = 0; i < p.n(); ++i) (i < p.m ? ks.k : ks.s).insert(p.order[i]);
  ks.kind = classify_split_kind(p) == SplitKind::Balanced ? KSKind::Both : KSKind::KMax;
  return ks;
}

std::vector<KSPartition> all_ks_partitions(const Graph& g) {
  const DegreeProfile p = profile(g);
  const SplitKind kind = classify_split_kind(p);
  if (kind == SplitKind::NotSplit) throw DomainError("KS-partitions requested for a non-split graph");
  if (kind == SplitKind::Balanced) return {kmax_partition(g, p)};

  const ABCPartition abc = abc_partition(g, p.m);
  std::vector<KSPartition> out;
  if (kind == SplitKind::UnbalancedNG1 || kind == SplitKind::UnbalancedNG1NG2) {
    const VertexSet clique = abc.a | abc.b;
    out.push_back({clique, abc.c, KSKind::KMax});
    for (Vertex a : abc.a) out.push_back({clique - VertexSet{a}, abc.c | VertexSet{a}, KSKind::SMax});
  } else {
    const VertexSet stable = abc.a | abc.c;
    for (Vertex a : abc.a) out.push_back({abc.b | VertexSet{a}, stable - VertexSet{a}, KSKind::KMax});
    out.push_back({abc.b, stable, KSKind::SMax});
  }
  return out;
}

KSPartition smax_partition(const Graph& g) {
  for (const auto& ks : all_ks_partitions(g)) {
    if (ks.kind != KSKind::KMax) return ks;
  }
  throw DomainError("no S-max partition");  // unreachable for split graphs
}

DerivedSets derived_sets(const Graph& g, const ABCPartition& p) {
  DerivedSets d;
  for (Vertex c : p.c) {
    if ((g.neighbors(c) & p.b) == p.b && (g.neighbors(c) - p.b).empty()) d.c_prime.insert(c);
  }
  for (Vertex b : p.b) {
    if ((g.neighbors(b) & p.c).empty()) d.b_prime.insert(b);
  }
  return d;
}

KSKind ks_kind(const Graph& g, VertexSet k, VertexSet s) {
  if (!(k & s).empty() || (k | s) != g.vertices() || !g.is_clique(k) || !g.is_stable(s)) {
    throw DomainError("not a KS-partition: K=" + to_string(k) + " S=" + to_string(s));
  }
  const DegreeProfile p = profile(g);
  const int omega = p.m;
  const int alpha = p.n() - p.m + (classify_split_kind(p) == SplitKind::Balanced ? 0 : 1);
  const bool kmax = k.size() == omega;
  const bool smax = s.size() == alpha;
  if (kmax && smax) return KSKind::Both;
  if (kmax) return KSKind::KMax;
  if (smax) return KSKind::SMax;
  throw DomainError("KS-partition is neither K-max nor S-max");  // excluded by the trichotomy
}

std::string to_string(NgKind k) {
  switch (k) {
    case NgKind::None: return "none";
    case NgKind::NG1: return "ng1";
    case NgKind::NG2: return "ng2";
    case NgKind::NG1NG2: return "ng1+ng2";
    case NgKind::NG3: return "ng3";
  }
  return "?";
}

std::string to_string(KSKind k) {
  switch (k) {
    case KSKind::KMax: return "k-max";
    case KSKind::SMax: return "s-max";
    case KSKind::Both: return "both";
  }
  return "?";
}

}  // namespace ngsplit
