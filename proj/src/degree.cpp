#include "ngsplit/degree.hpp"

namespace ngsplit {

DegreeProfile profile_from_degrees(const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  DegreeProfile p;
  p.d.resize(n);
  p.order.resize(n);
  if (n == 0) return p;

  // Counting sort, descending degree, ties by ascending original id.
  std::vector<int> start(n + 1, 0);
  for (int deg : degrees) {
    if (deg < 0 || deg >= n) throw DomainError("degree " + std::to_string(deg) + " impossible for n=" + std::to_string(n));
    ++start[deg];
  }
  int acc = 0;
  for (int deg = n - 1; deg >= 0; --deg) {
    const int c = start[deg];
    start[deg] = acc;
    acc += c;
  }
  for (Vertex v = 0; v < n; ++v) {
    const int pos = start[degrees[v]]++;
    p.d[pos] = degrees[v];
    p.order[pos] = v;
  }

  // {i : d_i >= i-1} is a prefix since d_i falls while i-1 rises.
  int m = 0;
  while (m < n && p.d[m] >= m) ++m;
  p.m = m;
  return p;
}

DegreeProfile profile(const Graph& g) { return profile_from_degrees(g.degrees()); }

bool is_split(const DegreeProfile& p) {
  if (p.n() == 0) return true;
  long long head = 0;
  long long tail = 0;
  for (int i = 1; i <= p.n(); ++i) (i <= p.m ? head : tail) += p.at(i);
  return head == static_cast<long long>(p.m) * (p.m - 1) + tail;
}

SplitKind classify_split_kind(const DegreeProfile& p) {
  if (!is_split(p)) return SplitKind::NotSplit;
  if (p.n() == 0) return SplitKind::Balanced;
  const int m = p.m;
  if (p.at(m) > m - 1) return SplitKind::Balanced;
  // d_m == m-1 here (d_m >= m-1 by definition of m).
  const bool largest = m == p.n() || p.at(m + 1) != m - 1;
  const bool smallest = m == 1 || p.at(m - 1) != m - 1;
  if (largest && smallest) return SplitKind::UnbalancedNG1NG2;
  if (largest) return SplitKind::UnbalancedNG1;
  if (smallest) return SplitKind::UnbalancedNG2;
  // A run of m-1 straddling m cannot satisfy the split identity.
  throw DomainError("split profile with d_{m-1} = d_m = d_{m+1}");
}

Ng3Conditions ng3_conditions(const DegreeProfile& p) {
  Ng3Conditions c;
  const int n = p.n();
  const int m = p.m;
  if (n < 5 || m - 2 < 1 || m + 2 > n) return c;

  for (int i = 1; i <= n; ++i) (i <= m + 2 ? c.head : c.tail) += p.at(i);
  c.constant = static_cast<long long>(m + 2) * (m + 1) - 10;
  c.sum_identity = c.head == c.constant + c.tail;

  bool run = true;
  for (int i = m - 2; i <= m + 2; ++i) run = run && p.at(i) == m - 1;
  if (m - 3 >= 1 && p.at(m - 3) == m - 1) run = false;
  if (m + 3 <= n && p.at(m + 3) == m - 1) run = false;
  c.middle_run = run;
  return c;
}

bool is_ng3(const DegreeProfile& p) { return ng3_conditions(p).holds(); }

bool has_flat_middle(const DegreeProfile& p) {
  const int m = p.m;
  if (m - 1 < 1 || m + 1 > p.n()) return false;
  return p.at(m - 1) == p.at(m) && p.at(m) == p.at(m + 1);
}

ClassLabel classify(const DegreeProfile& p) {
  ClassLabel c;
  switch (classify_split_kind(p)) {
    case SplitKind::Balanced:
      c.split = c.balanced = true;
      break;
    case SplitKind::UnbalancedNG1:
      c.split = c.unbalanced = c.ng1 = true;
      break;
    case SplitKind::UnbalancedNG2:
      c.split = c.unbalanced = c.ng2 = true;
      break;
    case SplitKind::UnbalancedNG1NG2:
      c.split = c.unbalanced = c.ng1 = c.ng2 = true;
      break;
    case SplitKind::NotSplit:
      c.ng3 = is_ng3(p);
      break;
  }
  c.ng = c.ng1 || c.ng2 || c.ng3;
  c.pseudo_split = c.split || c.ng3;
  return c;
}

ClassLabel classify(const Graph& g) { return classify(profile(g)); }

std::vector<std::string> ClassLabel::names() const {
  std::vector<std::string> out;
  if (split) out.emplace_back("split");
  if (balanced) out.emplace_back("balanced");
  if (unbalanced) out.emplace_back("unbalanced");
  if (ng1) out.emplace_back("ng1");
  if (ng2) out.emplace_back("ng2");
  if (ng3) out.emplace_back("ng3");
  if (ng) out.emplace_back("ng");
  if (pseudo_split) out.emplace_back("pseudo_split");
  return out;
}

std::string ClassLabel::joined() const {
  std::string s;
  for (const auto& name : names()) {
    if (!s.empty()) s += ',';
    s += name;
  }
  return s;
}

bool ClassLabel::consistent() const {
  return split == (balanced != unbalanced) && !(balanced && unbalanced) &&
         ng == (ng1 || ng2 || ng3) && unbalanced == (ng1 || ng2) &&
         pseudo_split == (split || ng3) && !(ng3 && split);
}

std::string to_string(SplitKind k) {
  switch (k) {
    case SplitKind::Balanced: return "balanced";
    case SplitKind::UnbalancedNG1: return "unbalanced-ng1";
    case SplitKind::UnbalancedNG2: return "unbalanced-ng2";
    case SplitKind::UnbalancedNG1NG2: return "unbalanced-ng1-ng2";
    case SplitKind::NotSplit: return "not-split";
  }
  return "?";
}

}  // namespace ngsplit
