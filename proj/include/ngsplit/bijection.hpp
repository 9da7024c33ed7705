#pragma once

#include <utility>

#include "ngsplit/canonical.hpp"
#include "ngsplit/graph.hpp"
#include "ngsplit/partition.hpp"

// Maps between NG classes and split-graph classes. Every "pick one"
// step resolves to the lowest vertex id (or least adjacent pair), so
// labeled outputs are reproducible; the unlabeled result does not depend
// on the choice.
namespace ngsplit {

/// Sub-case of an NG-1 graph that decides where removing one A-vertex lands.
enum class Ng1Case {
  ManyA,           // |A| >= 3            -> NG-1 minus NG-2
  TwoANoCPrime,    // |A| = 2, C' empty   -> NG-1 and NG-2
  TwoAWithCPrime,  // |A| = 2, C' nonempty -> NG-2 minus NG-1
  SingleA,         // |A| = 1             -> balanced
};

Ng1Case ng1_case(const Graph& g);

/// G - w for the lowest-id w in A. Requires NG-1.
Graph ng1_remove(const Graph& g);
/// Inverse of ng1_remove: adds one vertex to a split graph.
Graph split_to_ng1(const Graph& h);

/// Complementation, NG-1 -> NG-2.
Graph ng1_to_ng2(const Graph& g);
/// Complementation, NG-2 -> NG-1.
Graph ng2_to_ng1(const Graph& g);

/// NG-3 (n) -> NG-1 minus NG-2 (n-3): keep the least adjacent pair of the
/// 5-cycle on A together with B and C.
Graph ng3_shrink(const Graph& g);
/// Same, keeping an explicit edge of G[A].
Graph ng3_shrink(const Graph& g, Edge a_edge);
/// Inverse of ng3_shrink: three new vertices close the two lowest A-vertices
/// into a 5-cycle and are joined to the rest of A and to B.
Graph ng3_grow(const Graph& h, int target_n);

/// G - A for any graph whose chromatic number follows from its degrees
/// and whose ABC-partition is an NG partition. Not injective on NG-3.
Graph drop_a(const Graph& g);
/// NG-1 minus NG-2 (n) -> split graphs on <= n-2 vertices.
Graph strip_a(const Graph& g);
/// Adds a clique of target_n - |V(H)| vertices joined to the K side of an
/// S-max partition of H.
Graph rebuild_a(const Graph& h, int target_n);

/// NG-3 (n) -> split graphs on <= n-5 vertices: drops A and B'.
Graph strip_ab(const Graph& g);
/// Adds target_n - |V(H)| >= 5 vertices inducing a clique minus a 5-cycle,
/// joined to the K side of an S-max partition of H.
Graph rebuild_d(const Graph& h, int target_n);

/// A split graph with one of its KS-partitions and the partition's tag.
struct KSTriple {
  Graph graph;
  KSPartition partition;
};

/// Throws DomainError unless the tag matches the partition's actual
/// omega/alpha status.
void validate(const KSTriple& t);

/// Adds w adjacent to every vertex of K; returns the K-max triple
/// (G + w, K + w, S).
KSTriple phi(const KSTriple& t);
/// Removes the lowest w in K with no neighbour in S from a K-max triple of
/// an unbalanced graph.
KSTriple psi(const KSTriple& t);

/// Isomorphism-class code of a triple (K coloured apart from S).
CanonicalCode canonical(const KSTriple& t);

std::string to_string(Ng1Case c);

}  // namespace ngsplit
