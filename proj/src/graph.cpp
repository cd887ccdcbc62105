#include "rcheck/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>

#include "rcheck/error.hpp"

namespace rcheck {

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(vertex_count) + " outside 0.." +
                     std::to_string(kMaxVertices));
  }
  adj_.assign(n_, 0);
  labels_.assign(n_, std::string());
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InputError("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n_) + ")");
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw InputError("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_[u] |= VertexMask{1} << v;
  adj_[v] |= VertexMask{1} << u;
  edges_.push_back({u, v});
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1U;
}

VertexMask Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

std::vector<int> Graph::neighbor_list(int v) const {
  std::vector<int> out;
  for (VertexMask m = neighbors(v); m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void Graph::set_label(int v, std::string label) {
  check_vertex(v);
  labels_[v] = std::move(label);
}

const std::string& Graph::label(int v) const {
  check_vertex(v);
  return labels_[v];
}

int Graph::edge_index(int u, int v) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return static_cast<int>(i);
  }
  return -1;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  VertexMask seen = 1, frontier = 1;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m; m &= m - 1) next |= adj_[std::countr_zero(m)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n_;
}

int Graph::distance(int from, int to) const {
  check_vertex(from);
  check_vertex(to);
  VertexMask seen = VertexMask{1} << from, frontier = seen;
  for (int d = 0; frontier; ++d) {
    if ((frontier >> to) & 1U) return d;
    VertexMask next = 0;
    for (VertexMask m = frontier; m; m &= m - 1) next |= adj_[std::countr_zero(m)];
    frontier = next & ~seen;
    seen |= next;
  }
  return -1;
}

int degree(const Graph& g, int v) { return g.degree(v); }

namespace {

// Extends `path` (starting at path[0], the minimum vertex) and emits every
// cycle closing back at the start whose length lies in [min_len, max_len].
void extend_cycles(const Graph& g, std::vector<int>& path, VertexMask used, int min_len,
                   int max_len, std::vector<Cycle>& out) {
  const int start = path.front();
  const int last = path.back();
  const int len = static_cast<int>(path.size());
  if (len >= min_len && len >= 3 && g.has_edge(last, start) && path[1] < last) {
    out.push_back(path);
  }
  if (len == max_len) return;
  // Only vertices above the start may appear, so the start is the minimum.
  VertexMask cand = g.neighbors(last) & ~used & ~((VertexMask{2} << start) - 1);
  for (; cand; cand &= cand - 1) {
    const int w = std::countr_zero(cand);
    path.push_back(w);
    extend_cycles(g, path, used | (VertexMask{1} << w), min_len, max_len, out);
    path.pop_back();
  }
}

std::vector<Cycle> cycles_between(const Graph& g, int min_len, int max_len) {
  std::vector<Cycle> out;
  std::vector<int> path;
  for (int s = 0; s < g.vertex_count(); ++s) {
    path.assign(1, s);
    extend_cycles(g, path, VertexMask{1} << s, min_len, max_len, out);
  }
  return out;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len) {
  if (max_len < 3) throw InputError("max_len must be at least 3");
  return cycles_between(g, 3, max_len);
}

std::vector<Cycle> enumerate_cycles_of_length(const Graph& g, int len) {
  if (len < 3) throw InputError("cycle length must be at least 3");
  return cycles_between(g, len, len);
}

int chord_count(const Graph& g, const Cycle& c) {
  const int k = static_cast<int>(c.size());
  int chords = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.has_edge(c[i], c[j])) ++chords;
    }
  }
  return chords;
}

bool contains_chorded_cycle(const Graph& g, int len) {
  if (len < 4) throw InputError("chorded cycles need length at least 4");
  for (const Cycle& c : enumerate_cycles_of_length(g, len)) {
    if (chord_count(g, c) >= 1) return true;
  }
  return false;
}

bool contains_doubly_chorded_cycle(const Graph& g, int len) {
  if (len < 5) throw InputError("doubly-chorded cycles need length at least 5");
  for (const Cycle& c : enumerate_cycles_of_length(g, len)) {
    if (chord_count(g, c) >= 2) return true;
  }
  return false;
}

Graph identify_vertices(const Graph& g, int a, int b, std::vector<int>* relabel) {
  if (a == b) throw InputError("cannot identify a vertex with itself");
  const int keep = std::min(a, b), gone = std::max(a, b);
  std::vector<int> map(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    map[v] = v == gone ? keep : (v > gone ? v - 1 : v);
  }
  Graph out(g.vertex_count() - 1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v != gone && !g.label(v).empty()) out.set_label(map[v], g.label(v));
  }
  for (const Edge& e : g.edges()) {
    const int u = map[e.u], v = map[e.v];
    if (u != v && !out.has_edge(u, v)) out.add_edge(u, v);
  }
  if (relabel) *relabel = std::move(map);
  return out;
}

PlaneGraph::PlaneGraph(Graph g, std::vector<FaceWalk> faces)
    : g_(std::move(g)), faces_(std::move(faces)) {
  if (!g_.is_connected()) throw AuditError("plane graph is disconnected");
  std::map<std::pair<int, int>, int> uses;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const FaceWalk& w = faces_[f];
    if (w.empty()) throw AuditError("face " + std::to_string(f) + " is empty");
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int u = w[i], v = w[(i + 1) % w.size()];
      if (u < 0 || u >= g_.vertex_count() || v < 0 || v >= g_.vertex_count() || u == v ||
          !g_.has_edge(u, v)) {
        throw AuditError("face " + std::to_string(f) + " walks a non-edge " + std::to_string(u) +
                         "-" + std::to_string(v));
      }
      ++uses[{std::min(u, v), std::max(u, v)}];
    }
  }
  for (const Edge& e : g_.edges()) {
    const auto it = uses.find({std::min(e.u, e.v), std::max(e.u, e.v)});
    const int count = it == uses.end() ? 0 : it->second;
    if (count != 2) {
      throw AuditError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " appears " +
                       std::to_string(count) + " times on face boundaries (expected 2)");
    }
  }
  const int euler = g_.vertex_count() - g_.edge_count() + face_count();
  if (euler != 2) {
    throw AuditError("Euler characteristic is " + std::to_string(euler) + ", expected 2");
  }
}

}  // namespace rcheck
