#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rcheck/graph.hpp"

namespace rcheck {

// Direction per edge of `base`, indexed like base.edges(). reversed[i] false
// means edges()[i].u -> edges()[i].v.
struct Orientation {
  Graph base;
  std::vector<bool> reversed;

  // Builds from explicit arcs; every edge must be named exactly once.
  static Orientation from_arcs(const Graph& g, std::span<const Edge> arcs);

  Edge arc(int i) const;
  std::vector<Edge> arcs() const;
  std::vector<int> out_degrees() const;
  std::vector<int> in_degrees() const;
  Orientation reverse() const;
};

struct EulerianParity {
  std::uint64_t ee = 0;
  std::uint64_t eo = 0;
  friend bool operator==(const EulerianParity&, const EulerianParity&) = default;
};

inline constexpr int kMaxEulerianEdges = 30;
inline constexpr int kMaxSweepEdges = 20;

// Counts edge subsets in which every vertex has equal in- and out-degree,
// split by parity of size. Throws BudgetError above kMaxEulerianEdges edges.
EulerianParity eulerian_counts(const Orientation& d);

bool is_alon_tarsi(const Orientation& d, std::span<const int> f);

// First orientation, in lexicographic order of reversal bits (edge 0 most
// significant), with out-degrees below f and EE != EO. Throws BudgetError
// above kMaxSweepEdges edges.
std::optional<Orientation> find_at_orientation(const Graph& g, std::span<const int> f);

}  // namespace rcheck
