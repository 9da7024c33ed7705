#include "ngsplit/codec.hpp"

#include <charconv>
#include <sstream>

namespace ngsplit {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int sextet(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) {
    throw ParseError("graph6 byte " + std::to_string(u) + " outside 63..126");
  }
  return u - 63;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

long long to_int(std::string_view tok, int line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
  }
  return v;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw ParseError("empty graph6 record");

  std::size_t pos = 0;
  long long n = 0;
  if (line[0] != '~') {
    n = sextet(line[0]);
    pos = 1;
  } else {
    const bool huge = line.size() > 1 && line[1] == '~';
    const std::size_t start = huge ? 2 : 1;
    const std::size_t digits = huge ? 6 : 3;
    if (line.size() < start + digits) throw ParseError("truncated graph6 size header");
    for (std::size_t i = 0; i < digits; ++i) n = (n << 6) | sextet(line[start + i]);
    pos = start + digits;
  }
  if (n > kMaxVertices) {
    throw ParseError("graph6 record declares " + std::to_string(n) + " vertices; at most " +
                     std::to_string(kMaxVertices) + " supported");
  }

  const long long nbits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() != expected) {
    throw ParseError("graph6 record length " + std::to_string(line.size()) + " but n=" +
                     std::to_string(n) + " needs " + std::to_string(expected));
  }

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(line[pos + static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  for (std::size_t i = pos + static_cast<std::size_t>(k / 6); i < line.size(); ++i) sextet(line[i]);
  return Graph::from_rows(std::move(rows));
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings) {
  std::vector<std::pair<int, std::string_view>> lines;
  int lineno = 0;
  std::size_t i = 0;
  while (i <= text.size()) {
    const std::size_t j = std::min(text.find('\n', i), text.size());
    ++lineno;
    auto toks = split_ws(text.substr(i, j - i));
    if (!toks.empty()) lines.emplace_back(lineno, text.substr(i, j - i));
    i = j + 1;
  }
  if (lines.empty()) throw ParseError("missing \"n m\" header");

  auto header = split_ws(lines[0].second);
  if (header.size() != 2) throw ParseError("header must be \"n m\"", lines[0].first);
  const long long n = to_int(header[0], lines[0].first);
  const long long m = to_int(header[1], lines[0].first);
  if (n < 0 || n > kMaxVertices) {
    throw ParseError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices),
                     lines[0].first);
  }
  if (m < 0) throw ParseError("negative edge count", lines[0].first);
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                     std::to_string(lines.size() - 1) + " edge lines follow",
                     lines.size() - 1 > static_cast<std::size_t>(m) ? lines[m + 1].first : lines.back().first);
  }

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (std::size_t e = 1; e < lines.size(); ++e) {
    const int ln = lines[e].first;
    auto toks = split_ws(lines[e].second);
    if (toks.size() != 2) throw ParseError("edge line must be \"u v\"", ln);
    const long long u = to_int(toks[0], ln);
    const long long v = to_int(toks[1], ln);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge endpoint out of range for n=" + std::to_string(n), ln);
    }
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), ln);
    if ((rows[u] >> v) & 1U) {
      if (warnings != nullptr) {
        warnings->push_back("line " + std::to_string(ln) + ": duplicate edge " + std::to_string(u) + " " +
                            std::to_string(v) + " collapsed");
      }
      continue;
    }
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  }
  return Graph::from_rows(std::move(rows));
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  const auto es = g.edges();
  os << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) os << u << ' ' << v << '\n';
  return os.str();
}

std::optional<Graph6Record> Graph6Reader::next() {
  std::string raw;
  while (std::getline(in_, raw)) {
    ++line_;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view s = raw;
    if (s.starts_with(kGraph6Header)) s.remove_prefix(kGraph6Header.size());
    if (s.empty() || s.front() == '#') continue;
    return Graph6Record{line_, std::string(s)};
  }
  return std::nullopt;
}

}  // namespace ngsplit
