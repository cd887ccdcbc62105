#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rcheck/graph.hpp"

namespace rcheck {

// External degree of a vertex; kExInf stands for an unbounded number of
// precolored outside neighbours.
inline constexpr int kExInf = -1;

// One `graph` or `config` block of a fixture file, as written.
struct FixtureBlock {
  enum class Kind { Graph, Config };
  Kind kind = Kind::Graph;
  std::string name;
  int line = 0;  // line of the opening keyword
  Graph graph;
  std::vector<FaceWalk> faces;
  std::vector<Edge> orientation;  // `orient u v`, u -> v
  std::vector<int> precolored;    // `precolor v ...`
  std::vector<int> x;             // config only
  std::vector<int> ex;            // config only, per vertex; kExInf outside X
};

// Parses the line-oriented fixture format. `#` starts a comment. Throws
// ParseError carrying the offending line number.
std::vector<FixtureBlock> parse_fixtures(std::string_view text);

// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace rcheck
