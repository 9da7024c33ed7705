#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ngsplit/graph.hpp"

namespace ngsplit::census {

using Count = std::int64_t;

inline constexpr int kMaxDedupVertices = 7;
inline constexpr int kMaxEnumerateVertices = 9;

/// One representative per isomorphism class on n vertices (each in its
/// canonical labeling), sorted by canonical code. Each level augments the
/// (n-1)-vertex classes by one vertex with canonical-parent acceptance.
/// `jobs` worker threads split the parents; the result does not depend on
/// `jobs`.
std::vector<Graph> enumerate(int n, int jobs = 1);

/// Canonical dedup of all 2^(n(n-1)/2) labeled graphs. n <= 7; an
/// independent check on the augmentation.
std::vector<Graph> enumerate_by_dedup(int n);

/// Children of the given (n-1)-vertex class representatives.
std::vector<Graph> enumerate_by_augmentation(std::span<const Graph> parents, int jobs = 1);

/// catalog[n] = enumerate(n) for n = 0..max_n, each level built from the
/// previous one where augmentation applies.
std::vector<std::vector<Graph>> enumerate_all(int max_n, int jobs = 1);

struct CensusRow {
  int n = 0;
  Count graphs = 0;
  Count split = 0;
  Count balanced = 0;
  Count unbalanced = 0;
  Count ng1 = 0;
  Count ng2 = 0;
  Count ng3 = 0;
  Count ng = 0;
  Count pseudo_split = 0;
  Count ng1_and_ng2 = 0;
  /// Split graphs on at most n vertices; set only when every smaller n is
  /// present in the table.
  std::optional<Count> t_cum;

  Count ng1_only() const { return ng1 - ng1_and_ng2; }
  Count ng2_only() const { return ng2 - ng1_and_ng2; }
};

using CensusTable = std::vector<CensusRow>;

/// Classifies pairwise non-isomorphic graphs on a common n. Throws
/// DomainError on mixed orders or a repeated isomorphism class.
CensusRow tally(int n, std::span<const Graph> graphs);

/// Sorts rows by n and fills t_cum along the contiguous prefix from n = 0.
void fill_cumulative(CensusTable& table);

CensusTable census(const std::vector<std::vector<Graph>>& catalog);

/// Reads a graph6 stream, groups by vertex count and tallies each group.
CensusTable census_from_graph6(std::istream& in);

/// Counts implied by the split-graph counts S_0..S_n alone.
struct FormulaRow {
  int n = 0;
  Count split = 0;
  Count t_cum = 0;
  Count unbalanced = 0;
  Count balanced = 0;
  Count ng1 = 0;
  Count ng2 = 0;
  Count ng1_and_ng2 = 0;
  Count ng1_only = 0;
  Count ng3 = 0;
  Count ng = 0;
  Count pseudo_split = 0;
};

/// Row for n from S_0..S_n; throws DomainError when the prefix is too short.
FormulaRow formula_row(std::span<const Count> split_counts, int n);
std::vector<FormulaRow> formulas(std::span<const Count> split_counts);

struct Ratio {
  int n = 0;
  Count balanced = 0;
  Count split = 0;
  int hundredths = 0;  // round-half-up of 100 * balanced / split
  std::string text() const;  // "0.11"
};

/// Exact-integer rounding, half up.
int ratio_hundredths(Count balanced, Count split);
std::vector<Ratio> ratio_table(const CensusTable& table);

/// Known per-n class counts for n = 0..11.
struct KnownRow {
  int n;
  Count split, t_cum, unbalanced, balanced, ng, pseudo_split;
};
std::span<const KnownRow> known_counts();

struct Check {
  std::string identity;
  int n = 0;
  Count lhs = 0;
  Count rhs = 0;
  bool pass() const { return lhs == rhs; }
};

struct VerifyReport {
  std::vector<Check> checks;
  bool ok() const;
  std::vector<Check> failures() const;
};

/// Enumerated counts against the formulas and the known table, plus the
/// per-n identities between classes.
VerifyReport verify(const CensusTable& table);

/// One row per class (n, graphs, S, T, U, B, NG1, NG2, NG3, NG, PS) and the
/// rounded ratio B/S, one right-aligned column per n.
std::string format_table(const CensusTable& table);

}  // namespace ngsplit::census
