#include "rcheck/fixture.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "rcheck/error.hpp"

namespace rcheck {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view tok, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

struct Pending {
  FixtureBlock block;
  std::optional<int> vertices;
  std::vector<bool> ex_seen;
  std::vector<bool> in_x;
};

int vertex_arg(const Pending& p, std::string_view tok, int line) {
  if (!p.vertices) throw ParseError(line, "'vertices' must come first");
  const int v = to_int(tok, line);
  if (v < 0 || v >= *p.vertices) {
    throw ParseError(line, "vertex " + std::to_string(v) + " out of range");
  }
  return v;
}

void finish(Pending& p, int line, std::vector<FixtureBlock>& out) {
  if (!p.vertices) throw ParseError(line, "block '" + p.block.name + "' has no 'vertices'");
  if (p.block.kind == FixtureBlock::Kind::Config) {
    for (int v = 0; v < *p.vertices; ++v) {
      if (p.in_x[v] && !p.ex_seen[v]) {
        throw ParseError(line, "vertex " + std::to_string(v) + " of X in '" + p.block.name +
                                   "' has no 'ex' line");
      }
      if (p.in_x[v] && p.block.ex[v] == kExInf) {
        throw ParseError(line, "vertex " + std::to_string(v) + " of X in '" + p.block.name +
                                   "' cannot have ex inf");
      }
      if (!p.in_x[v] && p.ex_seen[v] && p.block.ex[v] != kExInf) {
        throw ParseError(line, "vertex " + std::to_string(v) + " outside X in '" +
                                   p.block.name + "' must have ex inf");
      }
    }
  }
  out.push_back(std::move(p.block));
}

}  // namespace

std::vector<FixtureBlock> parse_fixtures(std::string_view text) {
  std::vector<FixtureBlock> out;
  std::optional<Pending> cur;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = split(line);
    if (tok.empty()) continue;
    const std::string_view key = tok[0];

    if (key == "graph" || key == "config") {
      if (cur) throw ParseError(line_no, "block '" + cur->block.name + "' is missing 'end'");
      if (tok.size() != 2) throw ParseError(line_no, "expected '" + std::string(key) + " <name>'");
      cur.emplace();
      cur->block.kind = key == "graph" ? FixtureBlock::Kind::Graph : FixtureBlock::Kind::Config;
      cur->block.name = std::string(tok[1]);
      cur->block.line = line_no;
      continue;
    }
    if (!cur) throw ParseError(line_no, "'" + std::string(key) + "' outside a block");
    Pending& p = *cur;
    const bool config = p.block.kind == FixtureBlock::Kind::Config;

    if (key == "end") {
      if (tok.size() != 1) throw ParseError(line_no, "trailing tokens after 'end'");
      finish(p, line_no, out);
      cur.reset();
    } else if (key == "vertices") {
      if (p.vertices) throw ParseError(line_no, "duplicate 'vertices'");
      if (tok.size() != 2) throw ParseError(line_no, "expected 'vertices <n>'");
      const int n = to_int(tok[1], line_no);
      if (n < 0 || n > Graph::kMaxVertices) {
        throw ParseError(line_no, "vertex count " + std::to_string(n) + " out of range");
      }
      p.vertices = n;
      p.block.graph = Graph(n);
      p.block.ex.assign(n, kExInf);
      p.ex_seen.assign(n, false);
      p.in_x.assign(n, false);
    } else if (key == "edge") {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'edge <u> <v>'");
      const int u = vertex_arg(p, tok[1], line_no), v = vertex_arg(p, tok[2], line_no);
      try {
        p.block.graph.add_edge(u, v);
      } catch (const InputError& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (key == "face") {
      if (tok.size() < 2) throw ParseError(line_no, "empty face");
      FaceWalk w;
      for (std::size_t i = 1; i < tok.size(); ++i) w.push_back(vertex_arg(p, tok[i], line_no));
      p.block.faces.push_back(std::move(w));
    } else if (key == "orient") {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'orient <u> <v>'");
      p.block.orientation.push_back({vertex_arg(p, tok[1], line_no), vertex_arg(p, tok[2], line_no)});
    } else if (key == "precolor") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        p.block.precolored.push_back(vertex_arg(p, tok[i], line_no));
      }
    } else if (key == "label") {
      if (tok.size() < 3) throw ParseError(line_no, "expected 'label <v> <text>'");
      const int v = vertex_arg(p, tok[1], line_no);
      std::string text;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        if (i > 2) text += ' ';
        text += tok[i];
      }
      p.block.graph.set_label(v, std::move(text));
    } else if (key == "x" && config) {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const int v = vertex_arg(p, tok[i], line_no);
        if (p.in_x[v]) throw ParseError(line_no, "vertex " + std::to_string(v) + " repeated in X");
        p.in_x[v] = true;
        p.block.x.push_back(v);
      }
    } else if (key == "ex" && config) {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'ex <v> <0|1|2|inf>'");
      const int v = vertex_arg(p, tok[1], line_no);
      const std::string_view val = tok[2];
      int ex = 0;
      if (val == "inf") {
        ex = kExInf;
      } else if (val == "0" || val == "1" || val == "2") {
        ex = val[0] - '0';
      } else {
        throw ParseError(line_no, "malformed ex value '" + std::string(val) + "'");
      }
      if (p.ex_seen[v]) throw ParseError(line_no, "duplicate ex for vertex " + std::to_string(v));
      p.ex_seen[v] = true;
      p.block.ex[v] = ex;
    } else {
      throw ParseError(line_no, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (cur) throw ParseError(line_no, "block '" + cur->block.name + "' is missing 'end'");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace rcheck
