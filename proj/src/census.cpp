#include "ngsplit/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "ngsplit/canonical.hpp"
#include "ngsplit/codec.hpp"
#include "ngsplit/degree.hpp"

namespace ngsplit::census {

namespace {

struct Keyed {
  CanonicalCode code;
  Graph graph;
};

Graph canonical_representative(const Graph& g, const CanonicalForm& cf) { return g.relabel(cf.labeling); }

std::vector<Graph> sorted_graphs(std::vector<Keyed> items) {
  std::sort(items.begin(), items.end(), [](const Keyed& a, const Keyed& b) { return a.code < b.code; });
  std::vector<Graph> out;
  out.reserve(items.size());
  for (auto& k : items) out.push_back(std::move(k.graph));
  return out;
}

// Children of one parent accepted under the canonical-parent rule: the
// deleted vertex must be interchangeable with the vertex the canonical
// labeling puts last, tested as isomorphism of the two deletions.
std::vector<Keyed> children_of(const Graph& parent) {
  const int n = parent.order() + 1;
  const CanonicalCode parent_code = canonical(parent);
  const Vertex added = n - 1;
  std::vector<Keyed> out;
  std::unordered_set<CanonicalCode> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    const Graph child = parent.add_vertex(VertexSet(mask));
    CanonicalForm cf = canonical_form(child);
    const Vertex last = static_cast<Vertex>(std::find(cf.labeling.begin(), cf.labeling.end(), n - 1) -
                                            cf.labeling.begin());
    if (last != added) {
      if (child.degree(last) != child.degree(added)) continue;
      if (canonical(child.remove_vertex(last)) != parent_code) continue;
    }
    if (!seen.insert(cf.code).second) continue;
    Graph rep = canonical_representative(child, cf);
    out.push_back({std::move(cf.code), std::move(rep)});
  }
  return out;
}

void require_range(int n, int hi) {
  if (n < 0 || n > hi) {
    throw DomainError("enumeration supports 0 <= n <= " + std::to_string(hi) + ", got " + std::to_string(n));
  }
}

}  // namespace

std::vector<Graph> enumerate_by_dedup(int n) {
  require_range(n, kMaxDedupVertices);
  const int bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::unordered_map<CanonicalCode, Graph> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int b = 0; b < bits; ++b) {
      if ((mask >> b) & 1U) {
        auto [i, j] = pairs[b];
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
    const Graph g = Graph::from_rows(std::move(rows));
    CanonicalForm cf = canonical_form(g);
    if (classes.contains(cf.code)) continue;
    classes.emplace(std::move(cf.code), canonical_representative(g, cf));
  }
  std::vector<Keyed> items;
  for (auto& [code, g] : classes) items.push_back({code, g});
  return sorted_graphs(std::move(items));
}

std::vector<Graph> enumerate_by_augmentation(std::span<const Graph> parents, int jobs) {
  std::vector<std::vector<Keyed>> per_parent(parents.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < parents.size(); i = next++) per_parent[i] = children_of(parents[i]);
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  std::vector<Keyed> all;
  for (auto& v : per_parent) {
    for (auto& k : v) all.push_back(std::move(k));
  }
  return sorted_graphs(std::move(all));
}

std::vector<Graph> enumerate(int n, int jobs) {
  require_range(n, kMaxEnumerateVertices);
  if (n <= 1) return enumerate_by_dedup(n);
  return enumerate_by_augmentation(enumerate(n - 1, jobs), jobs);
}

std::vector<std::vector<Graph>> enumerate_all(int max_n, int jobs) {
  require_range(max_n, kMaxEnumerateVertices);
  std::vector<std::vector<Graph>> catalog;
  for (int n = 0; n <= max_n; ++n) {
    catalog.push_back(n <= 1 ? enumerate_by_dedup(n) : enumerate_by_augmentation(catalog.back(), jobs));
  }
  return catalog;
}

CensusRow tally(int n, std::span<const Graph> graphs) {
  CensusRow row;
  row.n = n;
  std::unordered_set<CanonicalCode> seen;
  for (const Graph& g : graphs) {
    if (g.order() != n) {
      throw DomainError("tally for n=" + std::to_string(n) + " received a graph on " + std::to_string(g.order()) +
                        " vertices");
    }
    if (!seen.insert(canonical(g)).second) {
      throw DomainError("tally for n=" + std::to_string(n) + ": duplicate isomorphism class " + emit_graph6(g));
    }
    const ClassLabel c = classify(g);
    ++row.graphs;
    row.split += c.split;
    row.balanced += c.balanced;
    row.unbalanced += c.unbalanced;
    row.ng1 += c.ng1;
    row.ng2 += c.ng2;
    row.ng3 += c.ng3;
    row.ng += c.ng;
    row.pseudo_split += c.pseudo_split;
    row.ng1_and_ng2 += c.ng1 && c.ng2;
  }
  return row;
}

void fill_cumulative(CensusTable& table) {
  std::sort(table.begin(), table.end(), [](const CensusRow& a, const CensusRow& b) { return a.n < b.n; });
  Count running = 0;
  int expect = 0;
  for (auto& row : table) {
    if (row.n == expect) {
      running += row.split;
      row.t_cum = running;
      ++expect;
    } else {
      row.t_cum.reset();
      expect = -1;
    }
  }
}

CensusTable census(const std::vector<std::vector<Graph>>& catalog) {
  CensusTable table;
  for (std::size_t n = 0; n < catalog.size(); ++n) table.push_back(tally(static_cast<int>(n), catalog[n]));
  fill_cumulative(table);
  return table;
}

CensusTable census_from_graph6(std::istream& in) {
  std::map<int, std::vector<Graph>> groups;
  Graph6Reader reader(in);
  while (auto rec = reader.next()) {
    try {
      Graph g = parse_graph6(rec->text);
      groups[g.order()].push_back(std::move(g));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), rec->line);
    }
  }
  CensusTable table;
  for (const auto& [n, graphs] : groups) table.push_back(tally(n, graphs));
  fill_cumulative(table);
  return table;
}

FormulaRow formula_row(std::span<const Count> s, int n) {
  if (n < 0 || static_cast<std::size_t>(n) >= s.size()) {
    throw DomainError("formulas for n=" + std::to_string(n) + " need split counts S_0..S_" + std::to_string(n) +
                      ", have " + std::to_string(s.size()));
  }
  // T(k) = S_0 + ... + S_k, zero for k < 0.
  auto t = [&](int k) {
    Count sum = 0;
    for (int i = 0; i <= k; ++i) sum += s[static_cast<std::size_t>(i)];
    return sum;
  };
  FormulaRow r;
  r.n = n;
  r.split = s[static_cast<std::size_t>(n)];
  r.t_cum = t(n);
  r.unbalanced = t(n - 1);
  r.balanced = r.split - r.unbalanced;
  r.ng1 = r.ng2 = n >= 1 ? s[static_cast<std::size_t>(n - 1)] : 0;
  r.ng1_and_ng2 = n >= 1 ? s[static_cast<std::size_t>(n - 1)] - t(n - 2) : 0;
  r.ng1_only = t(n - 2);
  r.ng3 = t(n - 5);
  r.ng = r.unbalanced + r.ng3;
  r.pseudo_split = r.split + r.ng3;
  return r;
}

std::vector<FormulaRow> formulas(std::span<const Count> split_counts) {
  if (split_counts.empty()) throw DomainError("formulas need at least S_0");
  std::vector<FormulaRow> out;
  for (std::size_t n = 0; n < split_counts.size(); ++n) out.push_back(formula_row(split_counts, static_cast<int>(n)));
  return out;
}

int ratio_hundredths(Count balanced, Count split) {
  if (split <= 0) throw DomainError("ratio undefined for zero split graphs");
  return static_cast<int>((200 * balanced + split) / (2 * split));
}

std::string Ratio::text() const {
  std::ostringstream os;
  os << hundredths / 100 << '.' << std::setw(2) << std::setfill('0') << hundredths % 100;
  return os.str();
}

std::vector<Ratio> ratio_table(const CensusTable& table) {
  std::vector<Ratio> out;
  for (const auto& row : table) {
    if (row.split == 0) continue;
    out.push_back({row.n, row.balanced, row.split, ratio_hundredths(row.balanced, row.split)});
  }
  return out;
}

std::span<const KnownRow> known_counts() {
  // n, S_n, T_{<=n}, U_n, B_n, NG_n, PS_n
  static constexpr std::array<KnownRow, 12> kRows{{
      {0, 1, 1, 0, 1, 0, 1},
      {1, 1, 2, 1, 0, 1, 1},
      {2, 2, 4, 2, 0, 2, 2},
      {3, 4, 8, 4, 0, 4, 4},
      {4, 9, 17, 8, 1, 8, 9},
      {5, 21, 38, 17, 4, 18, 22},
      {6, 56, 94, 38, 18, 40, 58},
      {7, 164, 258, 94, 70, 98, 168},
      {8, 557, 815, 258, 299, 266, 565},
      {9, 2223, 3038, 815, 1408, 832, 2240},
      {10, 10766, 13804, 3038, 7728, 3076, 10804},
      {11, 64956, 78760, 13804, 51152, 13898, 65050},
  }};
  return kRows;
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

std::vector<Check> VerifyReport::failures() const {
  std::vector<Check> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const Check& c) { return !c.pass(); });
  return out;
}

VerifyReport verify(const CensusTable& table) {
  VerifyReport rep;
  std::map<int, const CensusRow*> by_n;
  for (const auto& row : table) by_n[row.n] = &row;
  auto at = [&](int n) -> const CensusRow* {
    auto it = by_n.find(n);
    return it == by_n.end() ? nullptr : it->second;
  };
  auto add = [&](std::string id, int n, Count lhs, Count rhs) { rep.checks.push_back({std::move(id), n, lhs, rhs}); };

  for (const auto& r : table) {
    const int n = r.n;
    add("S = U + B", n, r.split, r.unbalanced + r.balanced);
    add("NG = U + NG3", n, r.ng, r.unbalanced + r.ng3);
    add("PS = S + NG3", n, r.pseudo_split, r.split + r.ng3);
    add("NG1 = NG2", n, r.ng1, r.ng2);
    add("U = NG1 + NG2 - NG1&NG2", n, r.unbalanced, r.ng1 + r.ng2 - r.ng1_and_ng2);
    if (n < 5) add("NG3 = 0 below five vertices", n, r.ng3, 0);

    if (const CensusRow* p = at(n - 1)) {
      add("NG1_n = S_{n-1}", n, r.ng1, p->split);
      add("NG2_n = S_{n-1}", n, r.ng2, p->split);
      add("NG1&NG2_n = B_{n-1}", n, r.ng1_and_ng2, p->balanced);
      add("NG1-NG2_n = U_{n-1}", n, r.ng1_only(), p->unbalanced);
      add("NG2-NG1_n = U_{n-1}", n, r.ng2_only(), p->unbalanced);
      add("U_n = U_{n-1} + S_{n-1}", n, r.unbalanced, p->unbalanced + p->split);
      if (p->t_cum) add("U_n = T_{<=n-1}", n, r.unbalanced, *p->t_cum);
    }
    if (const CensusRow* p = at(n - 2); p && p->t_cum) add("NG1-NG2_n = T_{<=n-2}", n, r.ng1_only(), *p->t_cum);
    if (const CensusRow* p = at(n - 4)) add("NG3_n = U_{n-4}", n, r.ng3, p->unbalanced);
    if (const CensusRow* p = at(n - 5); p && p->t_cum) add("NG3_n = T_{<=n-5}", n, r.ng3, *p->t_cum);
  }

  // Formula counts from the enumerated S prefix.
  std::vector<Count> s;
  for (int n = 0; at(n) != nullptr; ++n) s.push_back(at(n)->split);
  for (int n = 0; n < static_cast<int>(s.size()); ++n) {
    const FormulaRow f = formula_row(s, n);
    const CensusRow& r = *at(n);
    add("formula T_{<=n}", n, r.t_cum.value_or(-1), f.t_cum);
    add("formula U_n", n, r.unbalanced, f.unbalanced);
    add("formula B_n", n, r.balanced, f.balanced);
    add("formula NG1_n", n, r.ng1, f.ng1);
    add("formula NG2_n", n, r.ng2, f.ng2);
    add("formula NG1&NG2_n", n, r.ng1_and_ng2, f.ng1_and_ng2);
    add("formula NG1-NG2_n", n, r.ng1_only(), f.ng1_only);
    add("formula NG3_n", n, r.ng3, f.ng3);
    add("formula NG_n", n, r.ng, f.ng);
    add("formula PS_n", n, r.pseudo_split, f.pseudo_split);
  }

  for (const KnownRow& k : known_counts()) {
    const CensusRow* r = at(k.n);
    if (r == nullptr) continue;
    add("known S_n", k.n, r->split, k.split);
    if (r->t_cum) add("known T_{<=n}", k.n, *r->t_cum, k.t_cum);
    add("known U_n", k.n, r->unbalanced, k.unbalanced);
    add("known B_n", k.n, r->balanced, k.balanced);
    add("known NG_n", k.n, r->ng, k.ng);
    add("known PS_n", k.n, r->pseudo_split, k.pseudo_split);
  }
  return rep;
}

std::string format_table(const CensusTable& table) {
  struct Line {
    std::string label;
    std::vector<std::string> cells;
  };
  auto num = [](Count c) { return std::to_string(c); };
  std::vector<Line> lines = {{"n", {}},   {"graphs", {}}, {"S", {}},   {"T", {}},  {"U", {}}, {"B", {}},
                             {"NG1", {}}, {"NG2", {}},    {"NG3", {}}, {"NG", {}}, {"PS", {}}, {"B/S", {}}};
  for (const auto& r : table) {
    lines[0].cells.push_back(num(r.n));
    lines[1].cells.push_back(num(r.graphs));
    lines[2].cells.push_back(num(r.split));
    lines[3].cells.push_back(r.t_cum ? num(*r.t_cum) : "-");
    lines[4].cells.push_back(num(r.unbalanced));
    lines[5].cells.push_back(num(r.balanced));
    lines[6].cells.push_back(num(r.ng1));
    lines[7].cells.push_back(num(r.ng2));
    lines[8].cells.push_back(num(r.ng3));
    lines[9].cells.push_back(num(r.ng));
    lines[10].cells.push_back(num(r.pseudo_split));
    lines[11].cells.push_back(r.split > 0 ? Ratio{r.n, r.balanced, r.split, ratio_hundredths(r.balanced, r.split)}.text()
                                          : "-");
  }
  std::size_t label_w = 0;
  for (const auto& l : lines) label_w = std::max(label_w, l.label.size());
  std::vector<std::size_t> col_w(table.size(), 0);
  for (const auto& l : lines) {
    for (std::size_t c = 0; c < l.cells.size(); ++c) col_w[c] = std::max(col_w[c], l.cells[c].size());
  }
  std::ostringstream os;
  for (const auto& l : lines) {
    os << std::left << std::setw(static_cast<int>(label_w)) << l.label;
    for (std::size_t c = 0; c < l.cells.size(); ++c) {
      os << ' ' << std::right << std::setw(static_cast<int>(col_w[c])) << l.cells[c];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ngsplit::census
