#pragma once

#include <string>
#include <vector>

#include "ngsplit/graph.hpp"

namespace ngsplit {

/// Degree sequence sorted non-increasing, with the split index and the
/// sorting permutation.
struct DegreeProfile {
  std::vector<int> d;        // d[0] >= d[1] >= ... (d[i] is d_{i+1})
  int m = 0;                 // max{i : d_i >= i-1}, 1-based; 0 for the empty graph
  std::vector<Vertex> order; // order[i] = original vertex at sorted position i

  int n() const { return static_cast<int>(d.size()); }
  /// 1-based accessor matching d_1 >= ... >= d_n.
  int at(int i) const { return d[static_cast<std::size_t>(i - 1)]; }
};

/// Linear time: stable counting sort on degrees.
DegreeProfile profile(const Graph& g);
DegreeProfile profile_from_degrees(const std::vector<int>& degrees);

/// Sum_{i<=m} d_i == m(m-1) + Sum_{i>m} d_i. The empty profile is split.
bool is_split(const DegreeProfile& p);

enum class SplitKind { Balanced, UnbalancedNG1, UnbalancedNG2, UnbalancedNG1NG2, NotSplit };

SplitKind classify_split_kind(const DegreeProfile& p);

/// The two degree conditions characterizing NG-3 graphs, reported separately.
struct Ng3Conditions {
  bool sum_identity = false;  // Sum_{i<=m+2} d_i == (m+2)(m+1) - 10 + Sum_{i>m+2} d_i
  bool middle_run = false;    // d_i == m-1 exactly for m-2 <= i <= m+2
  long long head = 0;         // Sum_{i<=m+2} d_i
  long long constant = 0;     // (m+2)(m+1) - 10
  long long tail = 0;         // Sum_{i>m+2} d_i
  bool holds() const { return sum_identity && middle_run; }
};

/// Both conditions are false (sums zero) when n < 5 or m-2..m+2 leaves 1..n.
Ng3Conditions ng3_conditions(const DegreeProfile& p);
bool is_ng3(const DegreeProfile& p);

/// d_{m-1} = d_m = d_{m+1} (all three indices in range). Split graphs never
/// have this.
bool has_flat_middle(const DegreeProfile& p);

struct ClassLabel {
  bool split = false;
  bool balanced = false;
  bool unbalanced = false;
  bool ng1 = false;
  bool ng2 = false;
  bool ng3 = false;
  bool ng = false;
  bool pseudo_split = false;

  bool operator==(const ClassLabel&) const = default;

  /// Set flags in the fixed order split, balanced, unbalanced, ng1, ng2,
  /// ng3, ng, pseudo_split.
  std::vector<std::string> names() const;
  std::string joined() const;
  /// Checks the implications between flags.
  bool consistent() const;
};

ClassLabel classify(const DegreeProfile& p);
ClassLabel classify(const Graph& g);

std::string to_string(SplitKind k);

}  // namespace ngsplit
