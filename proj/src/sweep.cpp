#include "ngsplit/sweep.hpp"

#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ngsplit/bijection.hpp"
#include "ngsplit/canonical.hpp"
#include "ngsplit/degree.hpp"
#include "ngsplit/partition.hpp"

namespace ngsplit::sweep {

namespace {

template <class T>
struct Side {
  std::vector<T> members;
  std::function<bool(const T&)> contains;
};

template <class T>
SweepResult run(std::string name, int n, const Side<T>& dom, const Side<T>& cod,
                const std::function<T(const T&)>& fwd, const std::function<T(const T&)>& inv,
                const std::function<CanonicalCode(const T&)>& code) {
  SweepResult r;
  r.map = std::move(name);
  r.n = n;
  r.domain = static_cast<Count>(dom.members.size());
  r.codomain = static_cast<Count>(cod.members.size());
  std::unordered_set<CanonicalCode> images;
  auto leg = [&](const T& x, const auto& there, const auto& back, const Side<T>& target, bool record) {
    try {
      const T y = there(x);
      if (!target.contains(y)) {
        ++r.misclassified;
        return;
      }
      if (record) images.insert(code(y));
      if (code(back(y)) != code(x)) ++r.round_trip_failures;
    } catch (const DomainError&) {
      ++r.misclassified;
    }
  };
  for (const T& g : dom.members) leg(g, fwd, inv, cod, true);
  for (const T& h : cod.members) leg(h, inv, fwd, dom, false);
  r.distinct_images = static_cast<Count>(images.size());
  return r;
}

using Pred = std::function<bool(const ClassLabel&)>;

// Labels of every catalogued graph, computed once per level.
class Catalog {
 public:
  explicit Catalog(const std::vector<std::vector<Graph>>& levels) : levels_(levels) {
    for (const auto& level : levels) {
      auto& out = labels_.emplace_back();
      for (const Graph& g : level) out.push_back(classify(g));
    }
  }

  std::vector<Graph> select(int k, const Pred& pred) const {
    std::vector<Graph> out;
    if (k < 0) return out;
    for (std::size_t i = 0; i < levels_[k].size(); ++i) {
      if (pred(labels_[k][i])) out.push_back(levels_[k][i]);
    }
    return out;
  }

  std::vector<Graph> split_up_to(int k) const {
    std::vector<Graph> out;
    for (int j = 0; j <= k; ++j) {
      auto level = select(j, [](const ClassLabel& c) { return c.split; });
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

 private:
  const std::vector<std::vector<Graph>>& levels_;
  std::vector<std::vector<ClassLabel>> labels_;
};

Side<Graph> graphs_of(std::vector<Graph> members, int order, Pred pred) {
  return {std::move(members), [order, pred](const Graph& g) { return g.order() == order && pred(classify(g)); }};
}

Side<Graph> split_up_to(const Catalog& cat, int k) {
  return {cat.split_up_to(k), [k](const Graph& g) { return g.order() <= k && classify(g).split; }};
}

std::vector<KSTriple> triples_of(const std::vector<Graph>& graphs, bool kmax_only) {
  std::vector<KSTriple> out;
  std::unordered_set<CanonicalCode> seen;
  for (const Graph& g : graphs) {
    for (const KSPartition& p : all_ks_partitions(g)) {
      if (kmax_only && p.kind != KSKind::KMax) continue;
      KSTriple t{g, p};
      if (seen.insert(canonical(t)).second) out.push_back(std::move(t));
    }
  }
  return out;
}

const Pred kSplit = [](const ClassLabel& c) { return c.split; };
const Pred kBalanced = [](const ClassLabel& c) { return c.balanced; };
const Pred kUnbalanced = [](const ClassLabel& c) { return c.unbalanced; };
const Pred kNg1 = [](const ClassLabel& c) { return c.ng1; };
const Pred kNg2 = [](const ClassLabel& c) { return c.ng2; };
const Pred kNg1Ng2 = [](const ClassLabel& c) { return c.ng1 && c.ng2; };
const Pred kNg1Only = [](const ClassLabel& c) { return c.ng1 && !c.ng2; };
const Pred kNg2Only = [](const ClassLabel& c) { return c.ng2 && !c.ng1; };
const Pred kNg3 = [](const ClassLabel& c) { return c.ng3; };

std::vector<SweepResult> run_level(const Catalog& cat, int n) {
  using GMap = std::function<Graph(const Graph&)>;
  const std::function<CanonicalCode(const Graph&)> gcode = [](const Graph& g) { return canonical(g); };
  auto side = [&](int k, const Pred& p) { return graphs_of(cat.select(k, p), k, p); };

  std::vector<SweepResult> out;
  const GMap remove = ng1_remove;
  const GMap add = split_to_ng1;
  out.push_back(run<Graph>("ng1-remove", n, side(n, kNg1), side(n - 1, kSplit), remove, add, gcode));
  out.push_back(run<Graph>("ng1-remove on ng1&ng2", n, side(n, kNg1Ng2), side(n - 1, kBalanced), remove, add, gcode));
  out.push_back(run<Graph>("complement", n, side(n, kNg1), side(n, kNg2), GMap(ng1_to_ng2), GMap(ng2_to_ng1), gcode));
  out.push_back(run<Graph>("complement on ng1-ng2", n, side(n, kNg1Only), side(n, kNg2Only), GMap(ng1_to_ng2),
                           GMap(ng2_to_ng1), gcode));
  if (n >= 2) {
    out.push_back(run<Graph>("strip-a", n, side(n, kNg1Only), split_up_to(cat, n - 2), GMap(strip_a),
                             [n](const Graph& h) { return rebuild_a(h, n); }, gcode));
  }
  if (n >= 5) {
    out.push_back(run<Graph>("ng3-shrink", n, side(n, kNg3), side(n - 3, kNg1Only), GMap([](const Graph& g) {
                               return ng3_shrink(g);
                             }),
                             [n](const Graph& h) { return ng3_grow(h, n); }, gcode));
    out.push_back(run<Graph>("strip-ab", n, side(n, kNg3), split_up_to(cat, n - 5), GMap(strip_ab),
                             [n](const Graph& h) { return rebuild_d(h, n); }, gcode));
  }

  const std::function<CanonicalCode(const KSTriple&)> tcode = [](const KSTriple& t) { return canonical(t); };
  Side<KSTriple> before{triples_of(cat.select(n - 1, kSplit), false), [n](const KSTriple& t) {
                          return t.graph.order() == n - 1 && classify(t.graph).split;
                        }};
  Side<KSTriple> after{triples_of(cat.select(n, kUnbalanced), true), [n](const KSTriple& t) {
                         return t.graph.order() == n && classify(t.graph).unbalanced && t.partition.kind == KSKind::KMax;
                       }};
  out.push_back(run<KSTriple>("phi", n, before, after, phi, psi, tcode));
  return out;
}

}  // namespace

std::vector<SweepResult> run_all(const std::vector<std::vector<Graph>>& catalog, int n) {
  if (n < 1 || static_cast<std::size_t>(n) >= catalog.size()) {
    throw DomainError("sweep at n=" + std::to_string(n) + " needs catalog levels 0.." + std::to_string(n));
  }
  return run_level(Catalog(catalog), n);
}

std::vector<SweepResult> run_range(const std::vector<std::vector<Graph>>& catalog) {
  const Catalog cat(catalog);
  std::vector<SweepResult> out;
  for (int n = 1; n < static_cast<int>(catalog.size()); ++n) {
    auto level = run_level(cat, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string format(const SweepResult& r) {
  std::ostringstream os;
  os << r.map << " n=" << r.n << " domain=" << r.domain << " codomain=" << r.codomain
     << " images=" << r.distinct_images << " misclassified=" << r.misclassified
     << " round_trip_failures=" << r.round_trip_failures << (r.ok() ? " ok" : " FAIL");
  return os.str();
}

}  // namespace ngsplit::sweep
