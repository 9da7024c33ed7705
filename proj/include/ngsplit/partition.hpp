#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ngsplit/degree.hpp"
#include "ngsplit/graph.hpp"

namespace ngsplit {

enum class NgKind { None, NG1, NG2, NG1NG2, NG3 };

/// Vertices split by degree against chi - 1: A equal, B above, C below.
struct ABCPartition {
  VertexSet a;
  VertexSet b;
  VertexSet c;
  int chi = 0;
  NgKind ng_kind = NgKind::None;
};

enum class KSKind { KMax, SMax, Both };

/// Clique K and stable set S covering V.
struct KSPartition {
  VertexSet k;
  VertexSet s;
  KSKind kind = KSKind::KMax;
  bool operator==(const KSPartition&) const = default;
};

struct DerivedSets {
  VertexSet c_prime;  // C-vertices adjacent to every vertex of B
  VertexSet b_prime;  // B-vertices with no neighbour in C
};

/// `chi` must be the chromatic number of g; throws DomainError outside 1..n.
ABCPartition abc_partition(const Graph& g, int chi);

/// Checks the five NG conditions on the partition: A non-empty and a
/// clique, stable set or 5-cycle; B a clique; C stable; A-B complete;
/// no A-C edges. |A| = 1 counts as both clique and stable set.
NgKind verify_ng_structure(const Graph& g, const ABCPartition& p);

/// Chromatic number read off the degree sequence; defined for split and
/// NG-3 graphs (chi = m), nullopt otherwise.
std::optional<int> degree_chromatic_number(const DegreeProfile& p);

/// ABC-partition with chi from the degree sequence. Throws DomainError
/// unless the graph is split or NG-3.
ABCPartition abc_partition(const Graph& g);

/// First m vertices in sorted degree order versus the rest.
/// Throws DomainError when the profile is not split.
KSPartition kmax_partition(const Graph& g, const DegreeProfile& p);

/// Every labeled KS-partition: K-max partitions first, then S-max ones,
/// each group by ascending id of the moved vertex. Throws on non-split input.
std::vector<KSPartition> all_ks_partitions(const Graph& g);

/// One S-max partition (lowest-id choice of the moved vertex for NG-1).
KSPartition smax_partition(const Graph& g);

DerivedSets derived_sets(const Graph& g, const ABCPartition& p);

/// Tag of a given clique/stable split of a split graph from omega = m and
/// alpha = n - m (+1 when unbalanced). Throws if (k, s) is not a valid
/// KS-partition of g.
KSKind ks_kind(const Graph& g, VertexSet k, VertexSet s);

std::string to_string(NgKind k);
std::string to_string(KSKind k);

}  // namespace ngsplit
