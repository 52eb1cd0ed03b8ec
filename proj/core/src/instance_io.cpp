#include "localcc/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <tuple>
#include <sstream>
#include <utility>
#include <vector>

namespace localcc {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
      ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::size_t parse_count(std::string_view tok, std::size_t line_no, const char* what) {
  std::size_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line_no, std::string("expected a nonnegative integer for ") + what +
                                  ", got '" + std::string(tok) + "'");
  return value;
}

Sign parse_sign(std::string_view tok, std::size_t line_no) {
  if (tok == "+") return Sign::positive;
  if (tok == "-") return Sign::negative;
  throw ParseError(line_no, "expected '+' or '-', got '" + std::string(tok) + "'");
}

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

}  // namespace

SignedGraph parse_instance(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError(0, "empty instance");

  const Line& header = lines[0];
  if (header.tokens.size() < 2 || header.tokens[0] != "graph")
    throw ParseError(header.number, "malformed header, expected 'graph complete|bipartite ...'");

  bool bipartite = false;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  if (header.tokens[1] == "complete") {
    if (header.tokens.size() != 3)
      throw ParseError(header.number, "malformed header, expected 'graph complete <n>'");
    n1 = parse_count(header.tokens[2], header.number, "vertex count");
    if (n1 == 0) throw ParseError(header.number, "vertex count must be positive");
  } else if (header.tokens[1] == "bipartite") {
    if (header.tokens.size() != 4)
      throw ParseError(header.number, "malformed header, expected 'graph bipartite <n1> <n2>'");
    bipartite = true;
    n1 = parse_count(header.tokens[2], header.number, "n1");
    n2 = parse_count(header.tokens[3], header.number, "n2");
    if (n1 == 0 || n2 == 0) throw ParseError(header.number, "both sides must be nonempty");
  } else {
    throw ParseError(header.number,
                     "unknown graph kind '" + std::string(header.tokens[1]) + "'");
  }

  if (lines.size() < 2) throw ParseError(header.number, "missing 'default <+|->' line");
  const Line& dflt = lines[1];
  if (dflt.tokens.size() != 2 || dflt.tokens[0] != "default")
    throw ParseError(dflt.number, "malformed default line, expected 'default <+|->'");
  const Sign fill = parse_sign(dflt.tokens[1], dflt.number);

  std::set<std::pair<std::size_t, std::size_t>> seen;
  auto exceptions = std::vector<std::tuple<Sign, std::size_t, std::size_t>>{};
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 3) throw ParseError(l.number, "expected '<+|-> <u> <v>'");
    const Sign s = parse_sign(l.tokens[0], l.number);
    std::size_t u = parse_count(l.tokens[1], l.number, "u");
    std::size_t v = parse_count(l.tokens[2], l.number, "v");
    if (bipartite) {
      if (u >= n1 || v >= n2) throw ParseError(l.number, "vertex index out of range");
    } else {
      if (u >= n1 || v >= n1) throw ParseError(l.number, "vertex index out of range");
      if (u == v) throw ParseError(l.number, "self-loop line");
      if (u > v) std::swap(u, v);
    }
    if (!seen.insert({u, v}).second) throw ParseError(l.number, "duplicate pair line");
    exceptions.emplace_back(s, u, v);
  }

  if (bipartite) {
    SignedBipartiteGraph g(n1, n2, fill);
    for (const auto& [s, u, v] : exceptions) g.set_sign(u, v, s);
    return g;
  }
  SignedCompleteGraph g(n1, fill);
  for (const auto& [s, u, v] : exceptions) g.set_sign(u, v, s);
  return g;
}

SignedGraph read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

namespace {

Sign majority(std::size_t positives, std::size_t total) {
  return 2 * positives >= total ? Sign::positive : Sign::negative;
}

void write_exception(std::ostringstream& out, Sign s, std::size_t u, std::size_t v) {
  out << sign_char(s) << ' ' << u << ' ' << v << '\n';
}

}  // namespace

std::string serialize_instance(const SignedCompleteGraph& g) {
  const std::size_t n = g.size();
  const Sign fill = majority(g.positive_edge_count(), pair_count(n));
  std::ostringstream out;
  out << "graph complete " << n << '\n' << "default " << sign_char(fill) << '\n';
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.sign(u, v) != fill) write_exception(out, g.sign(u, v), u, v);
  return out.str();
}

std::string serialize_instance(const SignedBipartiteGraph& g) {
  const std::size_t n1 = g.left_size();
  const std::size_t n2 = g.right_size();
  const Sign fill = majority(g.positive_edge_count(), n1 * n2);
  std::ostringstream out;
  out << "graph bipartite " << n1 << ' ' << n2 << '\n' << "default " << sign_char(fill) << '\n';
  for (Vertex i = 0; i < n1; ++i)
    for (Vertex j = 0; j < n2; ++j)
      if (g.sign(i, j) != fill) write_exception(out, g.sign(i, j), i, j);
  return out.str();
}

std::string serialize_instance(const SignedGraph& g) {
  return std::visit([](const auto& graph) { return serialize_instance(graph); }, g);
}

}  // namespace localcc
