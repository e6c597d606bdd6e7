#include "homcount/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "homcount/errors.hpp"

namespace homcount {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

AnyGraph parse_graph(std::istream& in) {
  enum class Kind { none, general, bipartite } kind = Kind::none;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = split_ws(line);
    if (toks.empty()) continue;

    if (kind == Kind::none) {
      if (toks[0] == "bipartite" && toks.size() == 3) {
        kind = Kind::bipartite;
        n1 = parse_count(toks[1], lineno, "left size");
        n2 = parse_count(toks[2], lineno, "right size");
      } else if (toks[0] == "graph" && toks.size() == 2) {
        kind = Kind::general;
        n1 = parse_count(toks[1], lineno, "vertex count");
      } else {
        throw ParseError(lineno, "malformed header, expected 'bipartite <n1> <n2>' or 'graph <n>'");
      }
      continue;
    }

    if (toks[0] != "e" || toks.size() != 3) {
      throw ParseError(lineno, "expected 'e <u> <v>'");
    }
    auto a = parse_count(toks[1], lineno, "vertex id");
    auto b = parse_count(toks[2], lineno, "vertex id");
    if (kind == Kind::bipartite) {
      if (a < 1 || a > n1 || b < 1 || b > n2) {
        throw ParseError(lineno, "endpoint out of range: e " + std::to_string(a) + " " + std::to_string(b));
      }
    } else {
      if (a < 1 || a > n1 || b < 1 || b > n1) {
        throw ParseError(lineno, "endpoint out of range: e " + std::to_string(a) + " " + std::to_string(b));
      }
      if (a == b) throw ParseError(lineno, "loop at vertex " + std::to_string(a));
      if (a > b) std::swap(a, b);
    }
    if (!seen.emplace(a, b).second) {
      throw ParseError(lineno, "duplicate edge e " + std::to_string(a) + " " + std::to_string(b));
    }
    edges.push_back({a - 1, b - 1});
  }

  if (kind == Kind::none) throw ParseError(lineno, "missing header");
  if (kind == Kind::bipartite) return BipartiteGraph(n1, n2, edges);
  return SimpleGraph(n1, edges);
}

AnyGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

AnyGraph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFound(path.string());
  return parse_graph(in);
}

void write_graph(const SimpleGraph& g, std::ostream& out) {
  out << "graph " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.a + 1 << ' ' << e.b + 1 << '\n';
}

void write_graph(const BipartiteGraph& g, std::ostream& out) {
  out << "bipartite " << g.n1() << ' ' << g.n2() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.a + 1 << ' ' << e.b + 1 << '\n';
}

void write_graph(const AnyGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FileNotFound(path.string());
  std::visit([&](const auto& x) { write_graph(x, out); }, g);
}

SimpleGraph as_simple(const AnyGraph& g) {
  if (const auto* b = std::get_if<BipartiteGraph>(&g)) return b->to_simple();
  return std::get<SimpleGraph>(g);
}

BipartiteGraph as_bipartite(const AnyGraph& g) {
  if (const auto* b = std::get_if<BipartiteGraph>(&g)) return *b;
  auto parts = bipartition_of(std::get<SimpleGraph>(g));
  if (!parts) throw std::invalid_argument("graph is not bipartite");
  return std::move(parts->graph);
}

}  // namespace homcount
