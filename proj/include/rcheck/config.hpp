#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcheck/fixture.hpp"
#include "rcheck/graph.hpp"

namespace rcheck {

// A configuration (C, X, ex). ex is stored for every vertex; vertices outside
// X carry kExInf.
struct Configuration {
  std::string name;
  Graph c;
  VertexMask x = 0;
  std::vector<int> ex;

  bool in_x(int v) const { return (x >> v) & 1U; }
  // 4 - ex(v) on X, 1 elsewhere.
  int list_size(int v) const;
  std::vector<int> list_sizes() const;
  // Throws InputError when ex and X disagree or a list size would be < 1.
  void validate() const;
};

Configuration configuration_from_block(const FixtureBlock& block);
std::vector<Configuration> load_catalog(std::string_view text);
// FNV-1a 64 over the fixture text with comments and blank lines stripped.
std::uint64_t catalog_checksum(std::string_view text);

// Adds the edge uv and lowers ex at both ends. Requires u, v in X,
// non-adjacent, ex >= 1 on both.
Configuration apply_iteration(const Configuration& conf, int u, int v);
// Every pair apply_iteration accepts, in lexicographic order.
std::vector<std::pair<int, int>> legal_iteration_pairs(const Configuration& conf);

// Canonical form under vertex relabelling, X and ex included. Brute force
// over permutations refined by (ex, degree); fine up to about a dozen
// vertices.
std::string canonical_form(const Configuration& conf);
bool isomorphic(const Configuration& a, const Configuration& b);

enum class MergeTag { TooClose, CreatesChord, Candidate };
std::string_view merge_tag_name(MergeTag tag);

struct MergeClassification {
  MergeTag tag = MergeTag::TooClose;
  std::optional<Configuration> merged;  // set for Candidate
};

// Identifies a and b (survivor min(a,b)). The merged vertex keeps
// min(ex(a) - d(b), ex(b) - d(a)) as its external degree. TooClose covers
// pairs at distance at most 2 and pairs whose merged vertex would need a
// negative external degree; neither can occur in the host graph.
MergeClassification merge_pair(const Configuration& conf, int a, int b, int forbidden_chorded_len);

struct PairRecord {
  int a = 0, b = 0;
  MergeTag tag = MergeTag::TooClose;
};

struct MergeList {
  // Pairs in the vertex numbering of the original configuration.
  std::vector<std::pair<int, int>> pairs;
  Configuration merged;
};

struct MergeReport {
  std::vector<PairRecord> pairs;  // first-level classification of X pairs
  std::vector<MergeList> lists;   // valid nonempty lists, one per isomorphism class
  bool no_identifiable_triple = true;
  std::vector<int> triple;        // offending triple when the check fails
};

MergeReport enumerate_merge_lists(const Configuration& conf, int forbidden_chorded_len);

enum class TemplateKind { B1, B2 };

// p1_len internal vertices on the extra-special path (tripod pair at
// internal positions p1_tripod_pos, p1_tripod_pos+1), p2_len internal
// vertices on the special path.
Configuration build_template(TemplateKind kind, int p1_len, int p1_tripod_pos, int p2_len);

}  // namespace rcheck
