#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "ngsplit/graph.hpp"
#include "ngsplit/partition.hpp"

// Exponential, definition-level reference implementations. They share no
// code path with the degree-sequence recognizers they are used to check.
namespace ngsplit::oracle {

inline constexpr int kMaxChromaticVertices = 16;
inline constexpr int kMaxCliqueVertices = 20;
inline constexpr int kMaxSplitVertices = 16;

/// Search exceeded its step budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Optional cap on search nodes; nullopt means unbounded.
using StepBudget = std::optional<std::uint64_t>;

/// Exact chromatic number by branch and bound (vertices coloured in
/// non-increasing degree order, clique-size lower bound). n <= 16.
int chromatic_number(const Graph& g, StepBudget budget = std::nullopt);

int clique_number(const Graph& g, StepBudget budget = std::nullopt);
/// alpha(G) = omega(complement G)
int independence_number(const Graph& g, StepBudget budget = std::nullopt);

/// Tries every vertex subset as K. n <= 16.
bool is_split_definitional(const Graph& g);
/// All (K, S) with K a clique, S = V - K stable, in ascending order of K's bitmask.
std::vector<std::pair<VertexSet, VertexSet>> all_ks_splits(const Graph& g);

enum class Forbidden { None, TwoK2, C4, C5 };

struct ForbiddenWitness {
  Forbidden kind = Forbidden::None;
  VertexSet where;
};

/// First induced 2K2, then C4, then C5 found by scanning 4- and 5-subsets.
/// With `pseudo_split_only` the C5 scan is skipped.
ForbiddenWitness forbidden_subgraph_check(const Graph& g, bool pseudo_split_only = false);

struct OracleReport {
  int chi = 0;
  int chi_complement = 0;
  int omega = 0;
  int alpha = 0;
  bool is_ng = false;
  bool is_split_partition = false;
  bool is_split_forbidden = false;
  bool is_pseudo_split_forbidden = false;
  /// NG type from the definitional ABC-partition (oracle chi) checked
  /// condition by condition.
  NgKind ng_kind = NgKind::None;
};

OracleReport report(const Graph& g, StepBudget budget = std::nullopt);

/// ABC-partition for the oracle chi and the five NG conditions, written
/// against raw adjacency.
NgKind ng_kind_definitional(const Graph& g, int chi);

}  // namespace ngsplit::oracle
