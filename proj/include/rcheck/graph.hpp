#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rcheck {

using VertexMask = std::uint64_t;

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph on at most 64 vertices. Edges keep insertion order;
// orientation vectors and fixture round-trips index into that order.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Throws InputError on loops, repeated edges or out-of-range endpoints.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  VertexMask neighbors(int v) const;
  int degree(int v) const;
  std::vector<int> neighbor_list(int v) const;

  void set_label(int v, std::string label);
  const std::string& label(int v) const;

  // Index of edge {u,v} in edges(), or -1.
  int edge_index(int u, int v) const;

  bool is_connected() const;
  // BFS distance, or -1 when unreachable.
  int distance(int from, int to) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexMask> adj_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

int degree(const Graph& g, int v);

// A simple cycle in canonical form: starts at its smallest vertex and the
// second vertex is smaller than the last one.
using Cycle = std::vector<int>;

// All simple cycles of length 3..max_len, each exactly once.
std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len);
// Cycles of exactly `len` vertices.
std::vector<Cycle> enumerate_cycles_of_length(const Graph& g, int len);

// Number of edges of g joining two non-consecutive vertices of the cycle.
int chord_count(const Graph& g, const Cycle& c);

bool contains_chorded_cycle(const Graph& g, int len);
bool contains_doubly_chorded_cycle(const Graph& g, int len);

// Graph with vertices a and b identified. The survivor is min(a,b); vertices
// above the removed one shift down by one. Loops and parallel edges vanish.
// `relabel` (optional) receives old-index -> new-index.
Graph identify_vertices(const Graph& g, int a, int b, std::vector<int>* relabel = nullptr);

// Face boundary walks; ℓ(f) is the walk length.
using FaceWalk = std::vector<int>;

class PlaneGraph {
 public:
  PlaneGraph() = default;
  // Validates the embedding: walks follow edges, every edge is traversed
  // exactly twice, the graph is connected and |V|-|E|+|F| = 2.
  PlaneGraph(Graph g, std::vector<FaceWalk> faces);

  const Graph& graph() const noexcept { return g_; }
  const std::vector<FaceWalk>& faces() const noexcept { return faces_; }
  int face_length(int f) const { return static_cast<int>(faces_.at(f).size()); }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }

 private:
  Graph g_;
  std::vector<FaceWalk> faces_;
};

}  // namespace rcheck
