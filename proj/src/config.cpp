#include "rcheck/config.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "rcheck/error.hpp"

namespace rcheck {

int Configuration::list_size(int v) const {
  if (v < 0 || v >= c.vertex_count()) throw InputError("vertex out of range");
  return in_x(v) ? 4 - ex[v] : 1;
}

std::vector<int> Configuration::list_sizes() const {
  std::vector<int> f(c.vertex_count());
  for (int v = 0; v < c.vertex_count(); ++v) f[v] = list_size(v);
  return f;
}

void Configuration::validate() const {
  const int n = c.vertex_count();
  if (static_cast<int>(ex.size()) != n) throw InputError(name + ": ex is not defined on every vertex");
  if (n < 64 && (x >> n) != 0) throw InputError(name + ": X contains a vertex out of range");
  for (int v = 0; v < n; ++v) {
    if (in_x(v) && (ex[v] < 0 || ex[v] > 2)) {
      throw InputError(name + ": vertex " + std::to_string(v) + " in X needs ex in {0,1,2}");
    }
    if (!in_x(v) && ex[v] != kExInf) {
      throw InputError(name + ": vertex " + std::to_string(v) + " outside X needs ex inf");
    }
  }
}

Configuration configuration_from_block(const FixtureBlock& block) {
  if (block.kind != FixtureBlock::Kind::Config) {
    throw InputError("block '" + block.name + "' is not a config block");
  }
  Configuration conf;
  conf.name = block.name;
  conf.c = block.graph;
  for (int v : block.x) conf.x |= VertexMask{1} << v;
  conf.ex = block.ex;
  conf.validate();
  return conf;
}

std::vector<Configuration> load_catalog(std::string_view text) {
  std::vector<Configuration> out;
  for (const FixtureBlock& b : parse_fixtures(text)) {
    if (b.kind != FixtureBlock::Kind::Config) continue;
    try {
      out.push_back(configuration_from_block(b));
    } catch (const InputError& e) {
      throw ParseError(b.line, e.what());
    }
  }
  return out;
}

std::uint64_t catalog_checksum(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](char ch) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
      line.remove_suffix(1);
    }
    if (line.empty()) continue;
    for (char ch : line) feed(ch);
    feed('\n');
  }
  return h;
}

Configuration apply_iteration(const Configuration& conf, int u, int v) {
  const int n = conf.c.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw InputError("iteration needs two distinct vertices");
  if (!conf.in_x(u) || !conf.in_x(v)) throw InputError("iteration endpoints must lie in X");
  if (conf.c.has_edge(u, v)) throw InputError("iteration endpoints are already adjacent");
  if (conf.ex[u] < 1 || conf.ex[v] < 1) throw InputError("iteration needs ex >= 1 at both endpoints");
  Configuration out = conf;
  out.c.add_edge(u, v);
  --out.ex[u];
  --out.ex[v];
  return out;
}

std::vector<std::pair<int, int>> legal_iteration_pairs(const Configuration& conf) {
  std::vector<std::pair<int, int>> out;
  const int n = conf.c.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (conf.in_x(u) && conf.in_x(v) && !conf.c.has_edge(u, v) && conf.ex[u] >= 1 &&
          conf.ex[v] >= 1) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

namespace {

// Colour refinement seeded with (ex, degree); returns a class id per vertex.
// Class ids are ordered by signature, so they are isomorphism-invariant.
std::vector<int> refine(const Configuration& conf) {
  const int n = conf.c.vertex_count();
  std::vector<int> cls(n);
  {
    std::map<std::pair<int, int>, int> ids;
    for (int v = 0; v < n; ++v) ids[{conf.ex[v], conf.c.degree(v)}];
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) cls[v] = ids[{conf.ex[v], conf.c.degree(v)}];
  }
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(cls[v]);
      std::vector<int> nb;
      for (int w : conf.c.neighbor_list(v)) nb.push_back(cls[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < n; ++v) ids[sig[v]];
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    std::vector<int> ncls(n);
    for (int v = 0; v < n; ++v) ncls[v] = ids[sig[v]];
    const int before = static_cast<int>(std::set<int>(cls.begin(), cls.end()).size());
    cls = std::move(ncls);
    if (next == before) return cls;
  }
}

std::string encode(const Configuration& conf, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::string s;
  for (int v : order) s += conf.ex[v] == kExInf ? 'i' : static_cast<char>('0' + conf.ex[v]);
  s += ':';
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) s += conf.c.has_edge(order[i], order[j]) ? '1' : '0';
  }
  return s;
}

}  // namespace

std::string canonical_form(const Configuration& conf) {
  const int n = conf.c.vertex_count();
  const std::vector<int> cls = refine(conf);
  std::vector<std::vector<int>> groups;
  for (int v = 0; v < n; ++v) {
    if (cls[v] >= static_cast<int>(groups.size())) groups.resize(cls[v] + 1);
    groups[cls[v]].push_back(v);
  }
  std::string best;
  std::vector<int> order;
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == groups.size()) {
      std::string s = encode(conf, order);
      if (best.empty() || s < best) best = std::move(s);
      return;
    }
    std::vector<int> perm = groups[g];
    do {
      order.insert(order.end(), perm.begin(), perm.end());
      rec(g + 1);
      order.resize(order.size() - perm.size());
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(0);
  return std::to_string(n) + "/" + best;
}

bool isomorphic(const Configuration& a, const Configuration& b) {
  return a.c.vertex_count() == b.c.vertex_count() && a.c.edge_count() == b.c.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

std::string_view merge_tag_name(MergeTag tag) {
  switch (tag) {
    case MergeTag::TooClose: return "too-close";
    case MergeTag::CreatesChord: return "creates-chord";
    case MergeTag::Candidate: return "candidate";
  }
  return "?";
}

namespace {

constexpr int kUnbounded = 1 << 20;

// External degree left to the merged vertex: the neighbours b brings along
// are outside edges from a's point of view, and vice versa. Negative means
// the merged vertex would exceed a degree cap, so the merge cannot occur.
int merged_allowance(const Configuration& conf, int a, int b) {
  const int from_a = conf.ex[a] == kExInf ? kUnbounded : conf.ex[a] - conf.c.degree(b);
  const int from_b = conf.ex[b] == kExInf ? kUnbounded : conf.ex[b] - conf.c.degree(a);
  return std::min(from_a, from_b);
}

Configuration merged_configuration(const Configuration& conf, int a, int b, std::vector<int>* relabel) {
  std::vector<int> map;
  Configuration out;
  out.name = conf.name;
  out.c = identify_vertices(conf.c, a, b, &map);
  out.ex.assign(out.c.vertex_count(), kExInf);
  for (int v = 0; v < conf.c.vertex_count(); ++v) {
    if (conf.in_x(v)) {
      out.x |= VertexMask{1} << map[v];
      out.ex[map[v]] = conf.ex[v];
    }
  }
  const int merged = merged_allowance(conf, a, b);
  out.ex[map[a]] = merged == kUnbounded ? kExInf : merged;
  if (relabel) *relabel = std::move(map);
  return out;
}

}  // namespace

MergeClassification merge_pair(const Configuration& conf, int a, int b, int forbidden_chorded_len) {
  const int n = conf.c.vertex_count();
  if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw InputError("merge needs two distinct vertices");
  if (!conf.in_x(a) || !conf.in_x(b)) throw InputError("merged vertices must lie in X");
  MergeClassification out;
  const int d = conf.c.distance(a, b);
  if ((d >= 0 && d <= 2) || merged_allowance(conf, a, b) < 0) {
    out.tag = MergeTag::TooClose;
    return out;
  }
  Configuration merged = merged_configuration(conf, a, b, nullptr);
  if (contains_chorded_cycle(merged.c, forbidden_chorded_len)) {
    out.tag = MergeTag::CreatesChord;
    return out;
  }
  out.tag = MergeTag::Candidate;
  out.merged = std::move(merged);
  return out;
}

MergeReport enumerate_merge_lists(const Configuration& conf, int forbidden_chorded_len) {
  MergeReport report;
  const int n = conf.c.vertex_count();
  std::vector<int> xs;
  for (int v = 0; v < n; ++v) {
    if (conf.in_x(v)) xs.push_back(v);
  }
  std::map<std::pair<int, int>, bool> candidate;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const MergeTag tag = merge_pair(conf, xs[i], xs[j], forbidden_chorded_len).tag;
      report.pairs.push_back({xs[i], xs[j], tag});
      candidate[{xs[i], xs[j]}] = tag == MergeTag::Candidate;
    }
  }
  for (std::size_t i = 0; i < xs.size() && report.no_identifiable_triple; ++i) {
    for (std::size_t j = i + 1; j < xs.size() && report.no_identifiable_triple; ++j) {
      for (std::size_t k = j + 1; k < xs.size(); ++k) {
        if (candidate[{xs[i], xs[j]}] && candidate[{xs[i], xs[k]}] && candidate[{xs[j], xs[k]}]) {
          report.no_identifiable_triple = false;
          report.triple = {xs[i], xs[j], xs[k]};
          break;
        }
      }
    }
  }

  // Depth-first over pair lists. `owner[w]` is the smallest original vertex
  // merged into current vertex w.
  std::set<std::string> seen;
  std::vector<std::pair<int, int>> pairs;
  std::function<void(const Configuration&, const std::vector<int>&)> rec =
      [&](const Configuration& cur, const std::vector<int>& owner) {
        const int m = cur.c.vertex_count();
        for (int a = 0; a < m; ++a) {
          for (int b = a + 1; b < m; ++b) {
            if (!cur.in_x(a) || !cur.in_x(b)) continue;
            MergeClassification mc = merge_pair(cur, a, b, forbidden_chorded_len);
            if (mc.tag != MergeTag::Candidate) continue;
            std::vector<int> map;
            Configuration next = merged_configuration(cur, a, b, &map);
            std::vector<int> next_owner(next.c.vertex_count(), n);
            for (int w = 0; w < m; ++w) next_owner[map[w]] = std::min(next_owner[map[w]], owner[w]);
            pairs.emplace_back(owner[a], owner[b]);
            if (seen.insert(canonical_form(next)).second) {
              report.lists.push_back({pairs, next});
              rec(next, next_owner);
            }
            pairs.pop_back();
          }
        }
      };
  std::vector<int> owner(n);
  for (int v = 0; v < n; ++v) owner[v] = v;
  rec(conf, owner);
  return report;
}

Configuration build_template(TemplateKind kind, int p1_len, int p1_tripod_pos, int p2_len) {
  if (p1_len < 2) throw InputError("extra-special path needs at least two internal vertices");
  if (p1_tripod_pos < 0 || p1_tripod_pos + 1 >= p1_len) {
    throw InputError("tripod position " + std::to_string(p1_tripod_pos) +
                     " does not index a consecutive internal pair");
  }
  if (p2_len < 1) throw InputError("special path needs at least one internal vertex");
  const bool b1 = kind == TemplateKind::B1;
  const int base = b1 ? 3 : 4;
  const int n = base + p1_len + 1 + p2_len;
  if (n > Graph::kMaxVertices) throw InputError("template too large");

  Configuration conf;
  conf.name = std::string(b1 ? "B1" : "B2") + "-" + std::to_string(p1_len) + "-" +
              std::to_string(p1_tripod_pos) + "-" + std::to_string(p2_len);
  conf.c = Graph(n);
  conf.ex.assign(n, kExInf);
  auto put = [&conf](int v, int ex) {
    conf.x |= VertexMask{1} << v;
    conf.ex[v] = ex;
  };
  int u, v, w;
  if (b1) {
    u = 0, v = 1, w = 2;
    conf.c.add_edge(u, v);
    conf.c.add_edge(v, w);
    conf.c.add_edge(u, w);
    put(u, 2), put(v, 0), put(w, 2);
  } else {
    v = 0, w = 1;
    const int r = 2;
    u = 3;
    conf.c.add_edge(v, w);
    conf.c.add_edge(w, r);
    conf.c.add_edge(r, v);
    conf.c.add_edge(u, v);
    put(v, 0), put(w, 1), put(u, 2);
  }
  const int p1 = base;
  const int z = p1 + p1_len;
  const int p2 = z + 1;
  int prev = u;
  for (int i = 0; i < p1_len; ++i) {
    conf.c.add_edge(prev, p1 + i);
    const bool tripod = i == p1_tripod_pos || i == p1_tripod_pos + 1;
    put(p1 + i, tripod ? 1 : 2);
    prev = p1 + i;
  }
  conf.c.add_edge(prev, v);
  conf.c.add_edge(z, p1 + p1_tripod_pos);
  conf.c.add_edge(z, p1 + p1_tripod_pos + 1);
  prev = v;
  for (int i = 0; i < p2_len; ++i) {
    conf.c.add_edge(prev, p2 + i);
    put(p2 + i, 2);
    prev = p2 + i;
  }
  conf.c.add_edge(prev, w);
  conf.validate();
  return conf;
}

}  // namespace rcheck
