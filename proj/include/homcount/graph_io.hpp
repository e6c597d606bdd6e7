#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <variant>

#include "homcount/graph.hpp"

namespace homcount {

/// Text format ('#' starts a comment, blank lines ignored, 1-based ids):
///
///     bipartite <n1> <n2>        graph <n>
///     e <u> <v>                  e <i> <j>      (i < j)
using AnyGraph = std::variant<SimpleGraph, BipartiteGraph>;

AnyGraph parse_graph(std::istream& in);
AnyGraph parse_graph(std::string_view text);
/// Throws FileNotFound or ParseError.
AnyGraph read_graph(const std::filesystem::path& path);

void write_graph(const SimpleGraph& g, std::ostream& out);
void write_graph(const BipartiteGraph& g, std::ostream& out);
void write_graph(const AnyGraph& g, const std::filesystem::path& path);

SimpleGraph as_simple(const AnyGraph& g);
/// General graphs are 2-colored with bipartition_of; throws
/// std::invalid_argument if that fails.
BipartiteGraph as_bipartite(const AnyGraph& g);

}  // namespace homcount
