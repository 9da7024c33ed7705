// One PASS/FAIL line per acceptance criterion. Usage: acceptance [--criterion N]

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../fixtures.hpp"
#include "ngsplit/bijection.hpp"
#include "ngsplit/canonical.hpp"
#include "ngsplit/census.hpp"
#include "ngsplit/codec.hpp"
#include "ngsplit/degree.hpp"
#include "ngsplit/oracle.hpp"
#include "ngsplit/partition.hpp"
#include "ngsplit/sweep.hpp"

using namespace ngsplit;
using census::Count;

namespace {

// Published per-n counts, n = 0..11.
constexpr std::array<Count, 12> kS{1, 1, 2, 4, 9, 21, 56, 164, 557, 2223, 10766, 64956};
constexpr std::array<Count, 12> kU{0, 1, 2, 4, 8, 17, 38, 94, 258, 815, 3038, 13804};
constexpr std::array<Count, 12> kB{1, 0, 0, 0, 1, 4, 18, 70, 299, 1408, 7728, 51152};
constexpr std::array<Count, 12> kNG{0, 1, 2, 4, 8, 18, 40, 98, 266, 832, 3076, 13898};
constexpr std::array<Count, 12> kPS{1, 1, 2, 4, 9, 22, 58, 168, 565, 2240, 10804, 65050};
// Published B/S ratios in hundredths for n = 4..11.
constexpr std::array<int, 8> kRatio{11, 19, 32, 42, 54, 63, 72, 79};

constexpr int kEnumerateMax = 8;
constexpr double kEnumerateSeconds = 600.0;
constexpr double kOracleSeconds = 60.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<std::vector<Graph>>& catalog() {
  static const auto c = census::enumerate_all(kEnumerateMax);
  return c;
}

struct Outcome {
  std::vector<std::string> failures;
  std::ostringstream detail;
  bool pass() const { return failures.empty(); }
  void fail(const std::string& why) { failures.push_back(why); }
};

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto table = census::census(census::enumerate_all(kEnumerateMax));
  const double secs = seconds_since(t0);
  for (const auto& r : table) {
    const std::size_t n = static_cast<std::size_t>(r.n);
    if (r.split != kS[n] || r.unbalanced != kU[n] || r.balanced != kB[n] || r.ng != kNG[n] ||
        r.pseudo_split != kPS[n]) {
      std::ostringstream s;
      s << "n=" << n << " got S,U,B,NG,PS=" << r.split << ',' << r.unbalanced << ',' << r.balanced << ',' << r.ng
        << ',' << r.pseudo_split;
      o.fail(s.str());
    }
  }
  const auto f = census::formulas(kS);
  for (std::size_t n = 9; n <= 11; ++n) {
    if (f[n].unbalanced != kU[n] || f[n].balanced != kB[n] || f[n].ng != kNG[n] || f[n].pseudo_split != kPS[n]) {
      o.fail("formula mismatch at n=" + std::to_string(n));
    }
  }
  if (secs > kEnumerateSeconds) o.fail("enumeration took " + std::to_string(secs) + "s");
  o.detail << "enumerated n<=" << kEnumerateMax << " in " << secs << "s; formulas n=9..11 U_11=" << f[11].unbalanced
           << " B_11=" << f[11].balanced << " NG_11=" << f[11].ng << " PS_11=" << f[11].pseudo_split;
  return o;
}

Outcome criterion2() {
  Outcome o;
  // n <= 8 from enumeration, n = 9..11 from the formulas.
  const auto table = census::census(catalog());
  const auto f = census::formulas(kS);
  for (int n = 4; n <= 11; ++n) {
    const Count b = n <= kEnumerateMax ? table[n].balanced : f[n].balanced;
    const Count s = n <= kEnumerateMax ? table[n].split : f[n].split;
    const int got = census::ratio_hundredths(b, s);
    const int want = kRatio[static_cast<std::size_t>(n - 4)];
    o.detail << "n=" << n << ":" << census::Ratio{n, b, s, got}.text() << ' ';
    if (got != want) {
      std::ostringstream why;
      why << "n=" << n << " " << b << "/" << s << " rounds to ." << got << ", expected ." << want;
      o.fail(why.str());
    }
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  const DegreeProfile p1 = profile(fixtures::g1());
  if (classify_split_kind(p1) != SplitKind::UnbalancedNG1 || p1.m != 6 || !classify(p1).ng1) o.fail("G1");
  const DegreeProfile p2 = profile(fixtures::g2());
  if (classify_split_kind(p2) != SplitKind::UnbalancedNG2 || p2.m != 4 || !classify(p2).ng2) o.fail("G2");
  const DegreeProfile p3 = profile(fixtures::g3());
  const Ng3Conditions c3 = ng3_conditions(p3);
  if (!c3.holds() || p3.m != 6 || c3.head != 52 || c3.constant != 46 || c3.tail != 6 || !classify(p3).ng3) {
    o.fail("G3");
  }
  const DegreeProfile p35 = profile(fixtures::example_3_5());
  const Ng3Conditions c35 = ng3_conditions(p35);
  if (!is_split(p35) || p35.m != 3 || !c35.sum_identity || c35.middle_run) o.fail("split graph with (i) and not (ii)");
  o.detail << "G1 m=" << p1.m << " " << to_string(classify_split_kind(p1)) << "; G2 m=" << p2.m << " "
           << to_string(classify_split_kind(p2)) << "; G3 m=" << p3.m << " " << c3.head << "=" << c3.constant << "+"
           << c3.tail << "; six-vertex split graph (i)=" << c35.sum_identity << " (ii)=" << c35.middle_run;
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto t0 = Clock::now();
  long checked = 0;
  long disagreements = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : catalog()[n]) {
      ++checked;
      const ClassLabel c = classify(g);
      const oracle::OracleReport r = oracle::report(g);
      NgKind want = NgKind::None;
      if (c.ng3) {
        want = NgKind::NG3;
      } else if (c.ng1 && c.ng2) {
        want = NgKind::NG1NG2;
      } else if (c.ng1) {
        want = NgKind::NG1;
      } else if (c.ng2) {
        want = NgKind::NG2;
      }
      const bool agree = c.split == r.is_split_partition && c.split == r.is_split_forbidden && c.ng == r.is_ng &&
                         c.pseudo_split == r.is_pseudo_split_forbidden && want == r.ng_kind;
      if (!agree) {
        ++disagreements;
        if (disagreements <= 3) o.fail("disagreement on " + emit_graph6(g));
      }
    }
  }
  const double secs = seconds_since(t0);
  if (checked != 1 + 2 + 4 + 11 + 34 + 156 + 1044) o.fail("unexpected class count " + std::to_string(checked));
  if (secs > kOracleSeconds) o.fail("took " + std::to_string(secs) + "s");
  o.detail << checked << " classes, " << disagreements << " disagreements, " << secs << "s";
  return o;
}

Outcome criterion5() {
  Outcome o;
  long graphs = 0;
  for (int n = 0; n <= 7; ++n) {
    for (const Graph& g : catalog()[n]) {
      const ClassLabel c = classify(g);
      if (!c.split) continue;
      ++graphs;
      const auto splits = oracle::all_ks_splits(g);
      const int a_size = c.unbalanced ? abc_partition(g).a.size() : 0;
      const std::size_t labeled = c.unbalanced ? static_cast<std::size_t>(a_size + 1) : 1;
      std::set<CanonicalCode> classes;
      const int omega = oracle::clique_number(g);
      const int alpha = oracle::independence_number(g);
      bool tri = true;
      for (const auto& [k, s] : splits) {
        std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
        for (Vertex v : k) colors[v] = 1;
        classes.insert(canonical(g, colors));
        const bool both = k.size() == omega && s.size() == alpha;
        const bool kmax = k.size() == omega && s.size() == alpha - 1;
        const bool smax = k.size() == omega - 1 && s.size() == alpha;
        tri = tri && (both + kmax + smax == 1);
      }
      const std::size_t unlabeled = c.unbalanced ? 2 : 1;
      if (splits.size() != labeled || classes.size() != unlabeled || !tri || all_ks_partitions(g).size() != labeled) {
        o.fail("KS structure broken on " + emit_graph6(g));
      }
    }
  }
  o.detail << graphs << " split graphs with n<=7";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto results = sweep::run_range(catalog());
  long bad = 0;
  for (const auto& r : results) {
    if (!r.ok()) {
      ++bad;
      o.fail(sweep::format(r));
    }
  }
  const Graph g = fixtures::noninjective_g();
  const Graph h = fixtures::noninjective_h();
  const bool collision = !isomorphic(g, h) && isomorphic(drop_a(g), drop_a(h)) && !isomorphic(strip_ab(g), strip_ab(h));
  if (!collision) o.fail("noninjective pair no longer collides under A-deletion");
  o.detail << results.size() << " sweeps over n<=" << kEnumerateMax << ", " << bad << " failed; A-deletion collision "
           << (collision ? "reproduced" : "missing");
  return o;
}

Outcome criterion7() {
  Outcome o;
  long split = 0;
  for (const auto& level : catalog()) {
    for (const Graph& g : level) {
      std::vector<int> d = g.degrees();
      std::sort(d.rbegin(), d.rend());
      const int n = static_cast<int>(d.size());
      int m = 0;
      for (int i = 1; i <= n; ++i) {
        if (d[i - 1] >= i - 1) m = i;
      }
      long lhs = 0;
      long rhs = static_cast<long>(m) * (m - 1);
      for (int i = 1; i <= n; ++i) (i <= m ? lhs : rhs) += d[i - 1];
      if (lhs != rhs) continue;
      ++split;
      if (m >= 2 && m + 1 <= n && d[m - 2] == d[m - 1] && d[m - 1] == d[m]) o.fail("flat middle in " + emit_graph6(g));
    }
  }
  o.detail << split << " graphs satisfy the split identity, none with d_{m-1}=d_m=d_{m+1}";
  return o;
}

Outcome criterion8() {
  Outcome o;
  long total = 0;
  for (const auto& level : catalog()) {
    for (const Graph& g : level) {
      ++total;
      if (parse_graph6(emit_graph6(g)) != g) o.fail("round-trip failed for " + emit_graph6(g));
    }
  }
  if (parse_graph6("@") != Graph(1)) o.fail("@");
  if (parse_graph6("D??") != Graph(5)) o.fail("D??");
  if (parse_graph6("Dhc") != cycle_graph(5)) o.fail("Dhc");
  o.detail << total << " graphs round-tripped; fixtures @, D??, Dhc";
  return o;
}

const std::vector<std::function<Outcome()>> kCriteria = {criterion1, criterion2, criterion3, criterion4,
                                                         criterion5, criterion6, criterion7, criterion8};

bool report(int i) {
  Outcome o;
  try {
    o = kCriteria[static_cast<std::size_t>(i - 1)]();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  std::cout << "criterion " << i << ": " << (o.pass() ? "PASS" : "FAIL") << " - " << o.detail.str();
  for (const auto& f : o.failures) std::cout << " | " << f;
  std::cout << std::endl;
  return o.pass();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      which.push_back(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (which.empty()) {
    for (int i = 1; i <= static_cast<int>(kCriteria.size()); ++i) which.push_back(i);
  }
  bool ok = true;
  for (int i : which) {
    if (i < 1 || i > static_cast<int>(kCriteria.size())) {
      std::cerr << "no criterion " << i << '\n';
      return 2;
    }
    ok = report(i) && ok;
  }
  return ok ? 0 : 1;
}
