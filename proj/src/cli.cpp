#include "ngsplit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "ngsplit/bijection.hpp"
#include "ngsplit/canonical.hpp"
#include "ngsplit/census.hpp"
#include "ngsplit/codec.hpp"
#include "ngsplit/degree.hpp"
#include "ngsplit/oracle.hpp"
#include "ngsplit/partition.hpp"
#include "ngsplit/sweep.hpp"

namespace ngsplit::cli {

namespace {

using json = nlohmann::ordered_json;

struct InputOptions {
  std::string path;
  std::string format = "g6";
};

struct Item {
  int index = 0;
  Graph graph;
};

// Reads every graph from the input. Parse failures are reported to `err`
// and counted; good records are still returned.
struct Input {
  std::vector<Item> items;
  int parse_failures = 0;
};

class Source {
 public:
  Source(const std::string& path, std::istream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) throw ParseError("cannot open " + path);
      stream_ = &file_;
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

Input read_input(const InputOptions& opt, std::istream& in, std::ostream& err) {
  Source src(opt.path, in);
  Input result;
  if (opt.format == "edges") {
    std::ostringstream text;
    text << src.get().rdbuf();
    if (text.str().find_first_not_of(" \t\r\n") == std::string::npos) return result;
    std::vector<std::string> warnings;
    try {
      result.items.push_back({1, parse_edge_list(text.str(), &warnings)});
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      ++result.parse_failures;
    }
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    return result;
  }
  Graph6Reader reader(src.get());
  int index = 0;
  while (auto rec = reader.next()) {
    ++index;
    try {
      result.items.push_back({index, parse_graph6(rec->text)});
    } catch (const std::exception& e) {
      err << "error: line " << rec->line << ": " << e.what() << '\n';
      ++result.parse_failures;
    }
  }
  return result;
}

std::string vertex_list(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    out += 'v' + std::to_string(v + 1);
    first = false;
  }
  return out + '}';
}

json vertex_array(VertexSet s) {
  json a = json::array();
  for (Vertex v : s) a.push_back("v" + std::to_string(v + 1));
  return a;
}

int finish(int parse_failures, int domain_failures) {
  if (parse_failures > 0) return kParseError;
  return domain_failures > 0 ? kFailure : kOk;
}

int default_jobs() {
  if (const char* env = std::getenv("NG_SPLIT_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

// ---- classify ---------------------------------------------------------

struct ClassifyOptions {
  InputOptions input;
  bool json = false;
  bool oracle = false;
};

int cmd_classify(const ClassifyOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  Input input = read_input(opt.input, in, err);
  int failures = 0;
  if (!opt.json && !input.items.empty()) out << "index\tn\tm\tlabels\tchi\n";
  for (const Item& item : input.items) {
    try {
      const DegreeProfile p = profile(item.graph);
      const ClassLabel label = classify(p);
      std::optional<int> chi = degree_chromatic_number(p);
      if (opt.oracle) chi = oracle::chromatic_number(item.graph);
      if (opt.json) {
        json rec{{"index", item.index}, {"n", p.n()},           {"m", p.m},
                 {"labels", label.joined()}, {"chi", chi ? json(*chi) : json(nullptr)}};
        out << rec.dump() << '\n';
      } else {
        out << item.index << '\t' << p.n() << '\t' << p.m << '\t' << label.joined() << '\t'
            << (chi ? std::to_string(*chi) : "") << '\n';
      }
    } catch (const DomainError& e) {
      err << "error: record " << item.index << ": " << e.what() << '\n';
      ++failures;
    }
  }
  return finish(input.parse_failures, failures);
}

// ---- partition --------------------------------------------------------

struct PartitionOptions {
  InputOptions input;
  std::string kind = "abc";
  bool json = false;
  bool oracle = false;
  bool unlabeled = false;
};

int cmd_partition(const PartitionOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  Input input = read_input(opt.input, in, err);
  int failures = 0;
  for (const Item& item : input.items) {
    try {
      const Graph& g = item.graph;
      if (opt.kind == "abc") {
        std::optional<int> chi = degree_chromatic_number(profile(g));
        if (!chi) {
          if (!opt.oracle) throw DomainError("graph is neither split nor NG-3; chromatic number needs --oracle");
          chi = oracle::chromatic_number(g);
        }
        const ABCPartition p = abc_partition(g, *chi);
        if (opt.json) {
          out << json{{"index", item.index},          {"chi", p.chi},
                      {"a", vertex_array(p.a)},       {"b", vertex_array(p.b)},
                      {"c", vertex_array(p.c)},       {"ng_kind", to_string(p.ng_kind)}}
                     .dump()
              << '\n';
        } else {
          out << item.index << "\tchi=" << p.chi << "\tA=" << vertex_list(p.a) << "\tB=" << vertex_list(p.b)
              << "\tC=" << vertex_list(p.c) << '\t' << to_string(p.ng_kind) << '\n';
        }
        continue;
      }
      std::vector<KSPartition> parts = all_ks_partitions(g);
      if (opt.unlabeled) {
        std::unordered_set<CanonicalCode> seen;
        std::erase_if(parts, [&](const KSPartition& p) { return !seen.insert(canonical(KSTriple{g, p})).second; });
      }
      if (opt.json) {
        json list = json::array();
        for (const auto& p : parts) {
          list.push_back({{"k", vertex_array(p.k)}, {"s", vertex_array(p.s)}, {"kind", to_string(p.kind)}});
        }
        out << json{{"index", item.index}, {"count", parts.size()}, {"partitions", list}}.dump() << '\n';
      } else {
        out << item.index << "\tcount=" << parts.size() << '\n';
        for (const auto& p : parts) {
          out << item.index << "\tK=" << vertex_list(p.k) << "\tS=" << vertex_list(p.s) << '\t'
              << to_string(p.kind) << '\n';
        }
      }
    } catch (const DomainError& e) {
      err << "error: record " << item.index << ": " << e.what() << '\n';
      ++failures;
    }
  }
  return finish(input.parse_failures, failures);
}

// ---- map --------------------------------------------------------------

struct MapOptions {
  InputOptions input;
  std::string map;
  std::optional<int> target_n;
  int ks_index = 0;
};

const std::vector<std::string> kMapNames = {"ng1-remove", "split-to-ng1", "ng1-to-ng2", "ng2-to-ng1",
                                            "ng3-shrink", "ng3-grow",     "strip-a",    "rebuild-a",
                                            "strip-ab",   "rebuild-d",    "phi",        "psi"};

bool needs_target(const std::string& name) {
  return name == "ng3-grow" || name == "rebuild-a" || name == "rebuild-d";
}

void print_triple(const KSTriple& t, std::ostream& out) {
  out << emit_graph6(t.graph) << '\n'
      << "# " << classify(t.graph).joined() << " K=" << vertex_list(t.partition.k)
      << " S=" << vertex_list(t.partition.s) << ' ' << to_string(t.partition.kind) << '\n';
}

void apply_map(const MapOptions& opt, const Graph& g, std::ostream& out) {
  const std::string& name = opt.map;
  if (name == "phi" || name == "psi") {
    const std::vector<KSPartition> parts = all_ks_partitions(g);
    if (name == "psi") {
      auto it = std::find_if(parts.begin(), parts.end(), [](const KSPartition& p) { return p.kind == KSKind::KMax; });
      if (it == parts.end()) throw DomainError("psi: graph has no K-max partition of an unbalanced graph");
      print_triple(psi(KSTriple{g, *it}), out);
      return;
    }
    if (opt.ks_index < 0 || opt.ks_index >= static_cast<int>(parts.size())) {
      throw DomainError("--ks-index " + std::to_string(opt.ks_index) + " outside 0.." +
                        std::to_string(parts.size() - 1));
    }
    print_triple(phi(KSTriple{g, parts[static_cast<std::size_t>(opt.ks_index)]}), out);
    return;
  }
  const int target = opt.target_n.value_or(0);
  const std::map<std::string, std::function<Graph(const Graph&)>> maps = {
      {"ng1-remove", ng1_remove},
      {"split-to-ng1", split_to_ng1},
      {"ng1-to-ng2", ng1_to_ng2},
      {"ng2-to-ng1", ng2_to_ng1},
      {"ng3-shrink", [](const Graph& x) { return ng3_shrink(x); }},
      {"ng3-grow", [&](const Graph& x) { return ng3_grow(x, target); }},
      {"strip-a", strip_a},
      {"rebuild-a", [&](const Graph& x) { return rebuild_a(x, target); }},
      {"strip-ab", strip_ab},
      {"rebuild-d", [&](const Graph& x) { return rebuild_d(x, target); }},
  };
  const Graph image = maps.at(name)(g);
  out << emit_graph6(image) << '\n' << "# " << classify(image).joined() << '\n';
}

int cmd_map(const MapOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  if (needs_target(opt.map) && !opt.target_n) {
    err << "error: --map=" << opt.map << " requires --target-n\n";
    return kParseError;
  }
  Input input = read_input(opt.input, in, err);
  int failures = 0;
  for (const Item& item : input.items) {
    try {
      apply_map(opt, item.graph, out);
    } catch (const DomainError& e) {
      err << "error: record " << item.index << ": " << e.what() << '\n';
      ++failures;
    }
  }
  return finish(input.parse_failures, failures);
}

// ---- census -----------------------------------------------------------

struct CensusOptions {
  std::optional<int> max_n;
  std::string input;
  bool verify = false;
  bool json = false;
  int jobs = 1;
};

json row_json(const census::CensusRow& r) {
  return json{{"n", r.n},
              {"graphs", r.graphs},
              {"split", r.split},
              {"balanced", r.balanced},
              {"unbalanced", r.unbalanced},
              {"ng1", r.ng1},
              {"ng2", r.ng2},
              {"ng3", r.ng3},
              {"ng", r.ng},
              {"pseudo_split", r.pseudo_split},
              {"t_cum", r.t_cum ? json(*r.t_cum) : json(nullptr)}};
}

int cmd_census(const CensusOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<std::vector<Graph>> catalog;
  census::CensusTable table;
  if (opt.max_n) {
    if (*opt.max_n < 0 || *opt.max_n > census::kMaxEnumerateVertices) {
      err << "error: --max-n must be in 0.." << census::kMaxEnumerateVertices
          << "; feed larger n through --input\n";
      return kFailure;
    }
    catalog = census::enumerate_all(*opt.max_n, opt.jobs);
    table = census::census(catalog);
  } else {
    Source src(opt.input, in);
    std::map<int, std::vector<Graph>> groups;
    Graph6Reader reader(src.get());
    while (auto rec = reader.next()) {
      try {
        Graph g = parse_graph6(rec->text);
        groups[g.order()].push_back(std::move(g));
      } catch (const ParseError& e) {
        err << "error: line " << rec->line << ": " << e.what() << '\n';
        return kParseError;
      }
    }
    for (const auto& [n, graphs] : groups) table.push_back(census::tally(n, graphs));
    census::fill_cumulative(table);
    // Sweeps need every level from 0 upward.
    int expect = 0;
    for (const auto& [n, graphs] : groups) {
      if (n != expect++) break;
      catalog.push_back(graphs);
    }
  }

  if (opt.json) {
    for (const auto& r : table) out << row_json(r).dump() << '\n';
  } else {
    out << census::format_table(table);
  }
  if (!opt.verify) return kOk;

  const census::VerifyReport report = census::verify(table);
  const auto failed = report.failures();
  std::vector<sweep::SweepResult> sweeps;
  if (catalog.size() >= 2) sweeps = sweep::run_range(catalog);
  const auto bad_sweeps = std::count_if(sweeps.begin(), sweeps.end(), [](const auto& s) { return !s.ok(); });

  if (opt.json) {
    json fails = json::array();
    for (const auto& c : failed) fails.push_back({{"identity", c.identity}, {"n", c.n}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    json sw = json::array();
    for (const auto& s : sweeps) {
      sw.push_back({{"map", s.map},
                    {"n", s.n},
                    {"domain", s.domain},
                    {"codomain", s.codomain},
                    {"images", s.distinct_images},
                    {"misclassified", s.misclassified},
                    {"round_trip_failures", s.round_trip_failures},
                    {"ok", s.ok()}});
    }
    out << json{{"verify", {{"checks", report.checks.size()}, {"failures", fails}, {"sweeps", sw}}}}.dump() << '\n';
  } else {
    out << "verify: " << report.checks.size() << " identities, " << failed.size() << " failed\n";
    for (const auto& c : failed) {
      out << "  FAIL " << c.identity << " at n=" << c.n << ": " << c.lhs << " != " << c.rhs << '\n';
    }
    out << "sweeps: " << sweeps.size() << " maps, " << bad_sweeps << " failed\n";
    for (const auto& s : sweeps) {
      if (!s.ok()) out << "  FAIL " << sweep::format(s) << '\n';
    }
  }
  return failed.empty() && bad_sweeps == 0 ? kOk : kFailure;
}

void add_input(CLI::App* cmd, InputOptions& opt) {
  cmd->add_option("input", opt.path, "Input file (stdin when omitted)");
  cmd->add_option("--format", opt.format, "Input format")->check(CLI::IsMember({"g6", "edges"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Split and NG graph recognition, partitions, bijections and census"};
  app.require_subcommand(1);

  ClassifyOptions copt;
  auto* classify_cmd = app.add_subcommand("classify", "Class labels per graph");
  add_input(classify_cmd, copt.input);
  classify_cmd->add_flag("--json", copt.json, "JSON lines output");
  classify_cmd->add_flag("--oracle", copt.oracle, "Exact chromatic number for every graph (n <= 16)");

  PartitionOptions popt;
  auto* partition_cmd = app.add_subcommand("partition", "ABC- or KS-partitions per graph");
  add_input(partition_cmd, popt.input);
  partition_cmd->add_option("--kind", popt.kind, "Partition kind")->check(CLI::IsMember({"abc", "ks"}));
  partition_cmd->add_flag("--json", popt.json, "JSON lines output");
  partition_cmd->add_flag("--oracle", popt.oracle, "Exact chromatic number when degrees do not determine it");
  partition_cmd->add_flag("--unlabeled", popt.unlabeled, "KS-partitions up to isomorphism of the triple");

  MapOptions mopt;
  auto* map_cmd = app.add_subcommand("map", "Apply a class bijection");
  add_input(map_cmd, mopt.input);
  map_cmd->add_option("--map", mopt.map, "Map name")->required()->check(CLI::IsMember(kMapNames));
  map_cmd->add_option("--target-n", mopt.target_n, "Vertex count of the image for growth maps");
  map_cmd->add_option("--ks-index", mopt.ks_index, "Which KS-partition phi acts on (partition --kind=ks order)");

  CensusOptions nopt;
  nopt.jobs = default_jobs();
  auto* census_cmd = app.add_subcommand("census", "Class counts per n");
  auto* max_n = census_cmd->add_option("--max-n", nopt.max_n, "Enumerate all graphs on 0..k vertices");
  census_cmd->add_option("--input", nopt.input, "graph6 stream to tally instead of enumerating")->excludes(max_n);
  census_cmd->add_flag("--verify", nopt.verify, "Check identities, formulas, known counts and bijections");
  census_cmd->add_flag("--json", nopt.json, "One JSON record per n");
  census_cmd->add_option("--jobs", nopt.jobs, "Worker threads (default NG_SPLIT_JOBS or 1)")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << '\n';
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(copt, in, out, err);
    if (partition_cmd->parsed()) return cmd_partition(popt, in, out, err);
    if (map_cmd->parsed()) return cmd_map(mopt, in, out, err);
    return cmd_census(nopt, in, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace ngsplit::cli
