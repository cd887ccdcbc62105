#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rcheck/config.hpp"
#include "rcheck/graph.hpp"

namespace rcheck {

// Colours are 0..63; a list is a bitmask of them.
using ColorSet = std::uint64_t;
using ListAssignment = std::vector<ColorSet>;

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ULL;

// Exact backtracking. Vertices are tried by decreasing degree, ties by index;
// colours in increasing order. Returns the colour of each vertex.
std::optional<std::vector<int>> find_coloring(const Graph& g, const ListAssignment& lists);

// Visits every (f,s)-list assignment once per colour-permutation class, in
// canonical form: lists are built over vertices 0..n-1 and colours are
// numbered in first-use order. `visit` returns false to stop early.
// Requires 1 <= f(v) <= 4, s in {0,1,2}, sum f <= 64.
void enumerate_assignments(const Graph& g, std::span<const int> f, int s,
                           const std::function<bool(const ListAssignment&)>& visit);
std::vector<ListAssignment> all_assignments(const Graph& g, std::span<const int> f, int s);

// Renumbers colours in first-use order over vertices 0..n-1.
ListAssignment canonical_lists(const ListAssignment& lists);

struct SearchStats {
  std::uint64_t nodes = 0;      // list choices made
  std::uint64_t leaves = 0;     // complete assignments reached
  std::uint64_t colorings = 0;  // partial colourings extended
  std::uint64_t memo_hits = 0;
};

struct ChoosabilityVerdict {
  bool choosable = false;
  std::optional<ListAssignment> witness;  // canonical, set when not choosable
  SearchStats stats;
};

// Decides whether g is L-colourable for every (f,s)-assignment L. The search
// adds vertices one at a time and tracks, for the processed vertices that
// still have unprocessed neighbours, the set of their colourings that extend
// to everything processed so far. An empty set is a failure; the witness is
// the lists chosen so far completed with fresh colours. Throws BudgetError
// past `node_budget` list choices.
ChoosabilityVerdict is_fs_choosable(const Graph& g, std::span<const int> f, int s,
                                    std::uint64_t node_budget = kDefaultNodeBudget);
ChoosabilityVerdict is_reducible(const Configuration& conf,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

// Order in which is_fs_choosable adds vertices.
std::vector<int> search_order(const Graph& g, std::span<const int> f);

// Odd cycle with 2-lists: colourable unless every list is the same.
bool odd_cycle_2list_colorable(std::span<const ColorSet> lists);

// A special path (lists[0] = u, lists.back() = v, internal 2-lists) or an
// extra-special one: internal positions tripod and tripod+1 carry 3-lists
// and share a neighbour z with a 1-list.
struct PathInstance {
  std::vector<ColorSet> lists;
  int tripod = -1;  // path index of x, or -1 for a special path
  ColorSet z_list = 0;

  bool extra_special() const { return tripod >= 0; }
};

enum class PathEnd { U, V };

// Colours b at the other end such that fixing this end to `a` and the other
// end to b leaves no colouring of the path (and z). Throws InputError on a
// malformed path or a not in the endpoint's list.
ColorSet path_block_set(const PathInstance& p, PathEnd end, int a);

}  // namespace rcheck
