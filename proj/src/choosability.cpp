#include "rcheck/choosability.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <numeric>
#include <string>
#include <unordered_set>

#include "rcheck/error.hpp"

namespace rcheck {

namespace {

void check_sizes(const Graph& g, std::span<const int> f, int s) {
  if (static_cast<int>(f.size()) != g.vertex_count()) {
    throw InputError("list-size function must cover every vertex");
  }
  if (s < 0 || s > 2) throw InputError("separation s must be 0, 1 or 2");
  int total = 0;
  for (int k : f) {
    if (k < 1 || k > 4) throw InputError("list sizes must lie in 1..4");
    total += k;
  }
  // A canonical assignment never uses more colours than sum f; the colour
  // masks are 64 bits wide.
  if (total > 64) throw InputError("sum of list sizes exceeds the 64-colour universe");
}

int cap(std::span<const int> f, int s, int u, int w) { return f[u] == 1 && f[w] == 1 ? 0 : s; }

}  // namespace

std::optional<std::vector<int>> find_coloring(const Graph& g, const ListAssignment& lists) {
  const int n = g.vertex_count();
  if (static_cast<int>(lists.size()) != n) throw InputError("one list per vertex required");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&g](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(n, -1);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    const int v = order[i];
    ColorSet avail = lists[v];
    for (VertexMask m = g.neighbors(v); m; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (color[w] >= 0) avail &= ~(ColorSet{1} << color[w]);
    }
    for (; avail; avail &= avail - 1) {
      color[v] = std::countr_zero(avail);
      if (self(self, i + 1)) return true;
    }
    color[v] = -1;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return color;
}

void enumerate_assignments(const Graph& g, std::span<const int> f, int s,
                           const std::function<bool(const ListAssignment&)>& visit) {
  check_sizes(g, f, s);
  const int n = g.vertex_count();
  ListAssignment lists(n, 0);
  std::vector<VertexMask> holders;  // per colour, vertices whose list holds it

  auto vertex = [&](auto&& self, int v) -> bool {
    if (v == n) return visit(lists);
    // Colours held by exactly the same processed vertices are interchangeable.
    std::vector<std::vector<int>> classes;
    std::vector<VertexMask> class_mask;
    for (int c = 0; c < static_cast<int>(holders.size()); ++c) {
      const auto it = std::find(class_mask.begin(), class_mask.end(), holders[c]);
      if (it == class_mask.end()) {
        classes.push_back({c});
        class_mask.push_back(holders[c]);
      } else {
        classes[it - class_mask.begin()].push_back(c);
      }
    }
    std::vector<int> earlier;
    for (int w : g.neighbor_list(v)) {
      if (w < v) earlier.push_back(w);
    }
    std::vector<int> shared(earlier.size(), 0);
    ColorSet chosen = 0;

    auto pick = [&](auto&& pself, std::size_t j, int remaining) -> bool {
      if (j == classes.size()) {
        const int base = static_cast<int>(holders.size());
        ColorSet fresh = 0;
        for (int k = 0; k < remaining; ++k) fresh |= ColorSet{1} << (base + k);
        lists[v] = chosen | fresh;
        std::vector<VertexMask> saved = holders;
        for (ColorSet m = lists[v]; m; m &= m - 1) {
          const int c = std::countr_zero(m);
          if (c >= static_cast<int>(holders.size())) holders.resize(c + 1, 0);
          holders[c] |= VertexMask{1} << v;
        }
        const bool go_on = self(self, v + 1);
        holders = std::move(saved);
        lists[v] = 0;
        return go_on;
      }
      const int size = static_cast<int>(classes[j].size());
      for (int k = 0; k <= std::min(size, remaining); ++k) {
        bool ok = true;
        for (std::size_t e = 0; e < earlier.size(); ++e) {
          if ((class_mask[j] >> earlier[e]) & 1U) {
            if (shared[e] + k > cap(f, s, v, earlier[e])) ok = false;
          }
        }
        if (!ok) break;
        for (std::size_t e = 0; e < earlier.size(); ++e) {
          if ((class_mask[j] >> earlier[e]) & 1U) shared[e] += k;
        }
        ColorSet add = 0;
        for (int t = 0; t < k; ++t) add |= ColorSet{1} << classes[j][t];
        chosen |= add;
        const bool go_on = pself(pself, j + 1, remaining - k);
        chosen &= ~add;
        for (std::size_t e = 0; e < earlier.size(); ++e) {
          if ((class_mask[j] >> earlier[e]) & 1U) shared[e] -= k;
        }
        if (!go_on) return false;
      }
      return true;
    };
    return pick(pick, 0, f[v]);
  };
  vertex(vertex, 0);
}

std::vector<ListAssignment> all_assignments(const Graph& g, std::span<const int> f, int s) {
  std::vector<ListAssignment> out;
  enumerate_assignments(g, f, s, [&out](const ListAssignment& l) {
    out.push_back(l);
    return true;
  });
  return out;
}

ListAssignment canonical_lists(const ListAssignment& lists) {
  std::vector<int> map(64, -1);
  int next = 0;
  ListAssignment out(lists.size(), 0);
  for (std::size_t v = 0; v < lists.size(); ++v) {
    for (ColorSet m = lists[v]; m; m &= m - 1) {
      const int c = std::countr_zero(m);
      if (map[c] < 0) map[c] = next++;
    }
    for (ColorSet m = lists[v]; m; m &= m - 1) out[v] |= ColorSet{1} << map[std::countr_zero(m)];
  }
  return out;
}

std::vector<int> search_order(const Graph& g, std::span<const int> f) {
  const int n = g.vertex_count();
  if (static_cast<int>(f.size()) != n) throw InputError("list-size function must cover every vertex");
  // Weight of a processed set: total list size over its vertices that still
  // have unprocessed neighbours. That bounds the colours the search must
  // track, so orders minimising the largest weight (then the total) are
  // searched. Exact over subsets for small graphs, greedy otherwise.
  auto weight = [&](VertexMask done) {
    int w = 0;
    for (VertexMask m = done; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (g.neighbors(v) & ~done) w += f[v];
    }
    return w;
  };
  std::vector<int> order;
  if (n <= 20) {
    const std::size_t full = std::size_t{1} << n;
    std::vector<std::pair<int, int>> best(full, {1 << 30, 1 << 30});
    std::vector<signed char> last(full, -1);
    best[0] = {0, 0};
    for (std::size_t m = 0; m < full; ++m) {
      if (best[m].first == (1 << 30)) continue;
      for (int v = 0; v < n; ++v) {
        if ((m >> v) & 1U) continue;
        const std::size_t next = m | (std::size_t{1} << v);
        const int w = weight(next);
        const std::pair<int, int> cand{std::max(best[m].first, w), best[m].second + w};
        if (cand < best[next]) {
          best[next] = cand;
          last[next] = static_cast<signed char>(v);
        }
      }
    }
    for (std::size_t m = full - 1; m != 0; m &= ~(std::size_t{1} << last[m])) {
      order.push_back(last[m]);
    }
    std::reverse(order.begin(), order.end());
    return order;
  }
  VertexMask done = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_w = 0;
    for (int v = 0; v < n; ++v) {
      if ((done >> v) & 1U) continue;
      const int w = weight(done | (VertexMask{1} << v));
      if (best < 0 || w < best_w) best = v, best_w = w;
    }
    order.push_back(best);
    done |= VertexMask{1} << best;
  }
  return order;
}

namespace {

constexpr int kBits = 6;
constexpr int kMaxActive = 10;
using Packed = std::uint64_t;

int slot(Packed p, int i) { return static_cast<int>((p >> (kBits * i)) & 63U); }

class Search {
 public:
  Search(const Graph& g, std::span<const int> f, int s, std::uint64_t budget)
      : g_(g), f_(f), s_(s), budget_(budget), n_(g.vertex_count()) {
    order_ = search_order(g, f);
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[order_[i]] = i;
    active_.resize(n_ + 1);
    for (int i = 0; i <= n_; ++i) {
      for (int j = 0; j < i; ++j) {
        const int v = order_[j];
        bool open = false;
        for (int w : g.neighbor_list(v)) open |= pos[w] >= i;
        if (open) active_[i].push_back(v);
      }
      std::sort(active_[i].begin(), active_[i].end());
      if (static_cast<int>(active_[i].size()) > kMaxActive) {
        throw BudgetError("search frontier wider than " + std::to_string(kMaxActive) + " vertices");
      }
    }
    lists_.assign(n_, 0);
    safe_.resize(n_ + 1);
  }

  ChoosabilityVerdict run() {
    ChoosabilityVerdict verdict;
    if (n_ == 0) {
      verdict.choosable = true;
      return verdict;
    }
    verdict.choosable = explore(0, {0});
    verdict.stats = stats_;
    if (!verdict.choosable) verdict.witness = canonical_lists(witness_);
    return verdict;
  }

 private:
  // Colours of active vertex lists grouped into classes whose members can be
  // swapped without changing the state.
  std::vector<std::vector<int>> classes(int i, const std::vector<Packed>& S) const {
    const auto& act = active_[i];
    std::vector<std::vector<int>> out;
    std::vector<std::uint32_t> out_mask;
    ColorSet used = 0;
    for (int v : act) used |= lists_[v];
    for (ColorSet m = used; m; m &= m - 1) {
      const int c = std::countr_zero(m);
      std::uint32_t mask = 0;
      for (std::size_t p = 0; p < act.size(); ++p) {
        if ((lists_[act[p]] >> c) & 1U) mask |= 1U << p;
      }
      bool placed = false;
      for (std::size_t k = 0; k < out.size() && !placed; ++k) {
        if (out_mask[k] == mask && swap_invariant(S, static_cast<int>(act.size()), out[k][0], c)) {
          out[k].push_back(c);
          placed = true;
        }
      }
      if (!placed) {
        out.push_back({c});
        out_mask.push_back(mask);
      }
    }
    return out;
  }

  static bool swap_invariant(const std::vector<Packed>& S, int width, int a, int b) {
    std::vector<Packed> t;
    t.reserve(S.size());
    for (Packed p : S) {
      Packed q = 0;
      for (int i = 0; i < width; ++i) {
        int c = slot(p, i);
        if (c == a) c = b;
        else if (c == b) c = a;
        q |= static_cast<Packed>(c) << (kBits * i);
      }
      t.push_back(q);
    }
    std::sort(t.begin(), t.end());
    return t == S;
  }

  std::string memo_key(int i, const std::vector<Packed>& S) const {
    const auto& act = active_[i];
    const int width = static_cast<int>(act.size());
    ColorSet used = 0;
    for (int v : act) used |= lists_[v];
    // Colours are ordered by an invariant signature (which active lists hold
    // them, how often each position uses them in S) so that relabelled
    // copies of a state usually map to the same key.
    std::uint32_t uses[64][kMaxActive] = {};
    for (Packed p : S) {
      for (int k = 0; k < width; ++k) ++uses[slot(p, k)][k];
    }
    std::vector<std::pair<std::array<std::uint32_t, kMaxActive + 1>, int>> keyed;
    for (ColorSet m = used; m; m &= m - 1) {
      const int c = std::countr_zero(m);
      std::array<std::uint32_t, kMaxActive + 1> sig{};
      for (int k = 0; k < width; ++k) {
        if ((lists_[act[k]] >> c) & 1U) sig[0] |= 1U << k;
        sig[k + 1] = uses[c][k];
      }
      keyed.emplace_back(sig, c);
    }
    std::sort(keyed.begin(), keyed.end());
    int relabel[64];
    for (std::size_t r = 0; r < keyed.size(); ++r) relabel[keyed[r].second] = static_cast<int>(r);
    std::vector<Packed> words;
    for (int v : act) {
      Packed l = 0;
      for (ColorSet m = lists_[v]; m; m &= m - 1) l |= Packed{1} << relabel[std::countr_zero(m)];
      words.push_back(l);
    }
    std::vector<Packed> t;
    t.reserve(S.size());
    for (Packed p : S) {
      Packed q = 0;
      for (std::size_t k = 0; k < act.size(); ++k) {
        q |= static_cast<Packed>(relabel[slot(p, static_cast<int>(k))]) << (kBits * k);
      }
      t.push_back(q);
    }
    std::sort(t.begin(), t.end());
    words.insert(words.end(), t.begin(), t.end());
    std::string key(words.size() * sizeof(Packed), '\0');
    std::memcpy(key.data(), words.data(), key.size());
    return key;
  }

  // Feasible colourings of active_[i+1] once order_[i] is coloured from its
  // current list.
  std::vector<Packed> extend(int i, const std::vector<Packed>& S) {
    const int v = order_[i];
    const auto& from = active_[i];
    const auto& to = active_[i + 1];
    std::vector<int> nb_slots;
    for (std::size_t p = 0; p < from.size(); ++p) {
      if (g_.has_edge(v, from[p])) nb_slots.push_back(static_cast<int>(p));
    }
    std::vector<int> src(to.size());
    for (std::size_t q = 0; q < to.size(); ++q) {
      if (to[q] == v) {
        src[q] = -1;
      } else {
        src[q] = static_cast<int>(std::find(from.begin(), from.end(), to[q]) - from.begin());
      }
    }
    std::vector<Packed> out;
    for (Packed p : S) {
      ColorSet avail = lists_[v];
      for (int sl : nb_slots) avail &= ~(ColorSet{1} << slot(p, sl));
      for (; avail; avail &= avail - 1) {
        const int c = std::countr_zero(avail);
        ++stats_.colorings;
        Packed q = 0;
        for (std::size_t k = 0; k < to.size(); ++k) {
          const int col = src[k] < 0 ? c : slot(p, src[k]);
          q |= static_cast<Packed>(col) << (kBits * k);
        }
        out.push_back(q);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool explore(int i, const std::vector<Packed>& S) {
    const int v = order_[i];
    const auto cls = classes(i, S);
    std::vector<int> nbrs;
    for (int w : active_[i]) {
      if (g_.has_edge(v, w)) nbrs.push_back(w);
    }
    std::vector<int> shared(nbrs.size(), 0);
    ColorSet chosen = 0;

    auto pick = [&](auto&& self, std::size_t j, int remaining) -> bool {
      if (j == cls.size()) return try_list(i, S, chosen, remaining);
      const int size = static_cast<int>(cls[j].size());
      const int c0 = cls[j][0];
      for (int k = 0; k <= std::min(size, remaining); ++k) {
        bool ok = true;
        for (std::size_t e = 0; e < nbrs.size(); ++e) {
          if (((lists_[nbrs[e]] >> c0) & 1U) && shared[e] + k > cap(f_, s_, v, nbrs[e])) ok = false;
        }
        if (!ok) break;
        ColorSet add = 0;
        for (int t = 0; t < k; ++t) add |= ColorSet{1} << cls[j][t];
        for (std::size_t e = 0; e < nbrs.size(); ++e) {
          if ((lists_[nbrs[e]] >> c0) & 1U) shared[e] += k;
        }
        chosen |= add;
        const bool safe = self(self, j + 1, remaining - k);
        chosen &= ~add;
        for (std::size_t e = 0; e < nbrs.size(); ++e) {
          if ((lists_[nbrs[e]] >> c0) & 1U) shared[e] -= k;
        }
        if (!safe) return false;
      }
      return true;
    };
    return pick(pick, 0, f_[v]);
  }

  // Installs `chosen` plus `fresh` new colours on order_[i]; false on failure.
  bool try_list(int i, const std::vector<Packed>& S, ColorSet chosen, int fresh) {
    if (++stats_.nodes > budget_) {
      throw BudgetError("node budget of " + std::to_string(budget_) + " exhausted");
    }
    const int v = order_[i];
    ColorSet all = 0;
    for (ColorSet l : lists_) all |= l;
    ColorSet add = 0;
    for (int c = 0; c < 64 && fresh > 0; ++c) {
      if (!((all >> c) & 1U)) {
        add |= ColorSet{1} << c;
        --fresh;
      }
    }
    if (fresh > 0) throw BudgetError("colour universe exhausted");
    lists_[v] = chosen | add;
    const std::vector<Packed> next = extend(i, S);
    bool safe = true;
    if (next.empty()) {
      record_witness(i);
      safe = false;
    } else if (i + 1 == n_) {
      ++stats_.leaves;
    } else {
      std::string key = memo_key(i + 1, next);
      if (safe_[i + 1].count(key)) {
        ++stats_.memo_hits;
      } else if (explore(i + 1, next)) {
        safe_[i + 1].insert(std::move(key));
      } else {
        safe = false;
      }
    }
    lists_[v] = 0;
    return safe;
  }

  void record_witness(int i) {
    witness_ = lists_;
    ColorSet all = 0;
    for (ColorSet l : witness_) all |= l;
    int c = 0;
    for (int j = i + 1; j < n_; ++j) {
      const int v = order_[j];
      for (int k = 0; k < f_[v]; ++k) {
        while ((all >> c) & 1U) ++c;
        witness_[v] |= ColorSet{1} << c;
        all |= ColorSet{1} << c;
      }
    }
  }

  const Graph& g_;
  std::span<const int> f_;
  int s_;
  std::uint64_t budget_;
  int n_;
  std::vector<int> order_;
  std::vector<std::vector<int>> active_;
  ListAssignment lists_;
  ListAssignment witness_;
  std::vector<std::unordered_set<std::string>> safe_;
  SearchStats stats_;
};

}  // namespace

ChoosabilityVerdict is_fs_choosable(const Graph& g, std::span<const int> f, int s,
                                    std::uint64_t node_budget) {
  check_sizes(g, f, s);
  // A vertex with more colours than neighbours can always be coloured last,
  // so it never decides the verdict. Strip such vertices repeatedly.
  const int n = g.vertex_count();
  VertexMask keep = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (((keep >> v) & 1U) && f[v] > std::popcount(g.neighbors(v) & keep)) {
        keep &= ~(VertexMask{1} << v);
        changed = true;
      }
    }
  }
  std::vector<int> index(n, -1), kept;
  for (int v = 0; v < n; ++v) {
    if ((keep >> v) & 1U) {
      index[v] = static_cast<int>(kept.size());
      kept.push_back(v);
    }
  }
  Graph core(static_cast<int>(kept.size()));
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) core.add_edge(index[e.u], index[e.v]);
  }
  std::vector<int> core_f;
  for (int v : kept) core_f.push_back(f[v]);
  Search search(core, core_f, s, node_budget);
  ChoosabilityVerdict verdict = search.run();
  if (verdict.witness) {
    ListAssignment full(n, 0);
    ColorSet all = 0;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      full[kept[i]] = (*verdict.witness)[i];
      all |= full[kept[i]];
    }
    int c = 0;
    for (int v = 0; v < n; ++v) {
      if (index[v] >= 0) continue;
      for (int k = 0; k < f[v]; ++k) {
        while ((all >> c) & 1U) ++c;
        full[v] |= ColorSet{1} << c;
        all |= ColorSet{1} << c;
      }
    }
    verdict.witness = canonical_lists(full);
  }
  return verdict;
}

ChoosabilityVerdict is_reducible(const Configuration& conf, std::uint64_t node_budget) {
  conf.validate();
  const std::vector<int> f = conf.list_sizes();
  return is_fs_choosable(conf.c, f, 2, node_budget);
}

bool odd_cycle_2list_colorable(std::span<const ColorSet> lists) {
  if (lists.size() < 3 || lists.size() % 2 == 0) {
    throw InputError("odd cycle needs an odd number (>= 3) of lists");
  }
  for (ColorSet l : lists) {
    if (std::popcount(l) != 2) throw InputError("every list must have exactly two colours");
  }
  return !std::all_of(lists.begin(), lists.end(), [&](ColorSet l) { return l == lists[0]; });
}

ColorSet path_block_set(const PathInstance& p, PathEnd end, int a) {
  const int len = static_cast<int>(p.lists.size());
  if (len < 3) throw InputError("path needs at least one internal vertex");
  if (p.extra_special()) {
    if (p.tripod < 1 || p.tripod + 1 > len - 2) throw InputError("tripod pair must be internal");
    if (std::popcount(p.z_list) != 1) throw InputError("tripod apex z needs a 1-list");
  }
  for (int i = 1; i + 1 < len; ++i) {
    const bool wide = p.extra_special() && (i == p.tripod || i == p.tripod + 1);
    if (std::popcount(p.lists[i]) != (wide ? 3 : 2)) {
      throw InputError("internal vertex " + std::to_string(i) + " has the wrong list size");
    }
  }
  if (p.lists.front() == 0 || p.lists.back() == 0) throw InputError("endpoint lists must be nonempty");
  for (int i = 0; i + 1 < len; ++i) {
    if (std::popcount(p.lists[i] & p.lists[i + 1]) > 2) {
      throw InputError("adjacent lists share more than two colours");
    }
  }

  std::vector<ColorSet> lists = p.lists;
  int tripod = p.tripod;
  if (end == PathEnd::V) {
    std::reverse(lists.begin(), lists.end());
    if (tripod >= 0) tripod = len - 2 - tripod;
  }
  if (a < 0 || a >= 64 || !((lists.front() >> a) & 1U)) {
    throw InputError("colour " + std::to_string(a) + " is not in the endpoint list");
  }
  // With z present its single colour is forced; remove it from x and y.
  if (tripod >= 0) {
    lists[tripod] &= ~p.z_list;
    lists[tripod + 1] &= ~p.z_list;
  }
  ColorSet blocked = 0;
  for (ColorSet m = lists.back(); m; m &= m - 1) {
    const int b = std::countr_zero(m);
    auto rec = [&](auto&& self, int i, int prev) -> bool {
      if (i == len - 1) return prev != b;
      for (ColorSet c = lists[i] & ~(ColorSet{1} << prev); c; c &= c - 1) {
        if (self(self, i + 1, std::countr_zero(c))) return true;
      }
      return false;
    };
    if (!rec(rec, 1, a)) blocked |= ColorSet{1} << b;
  }
  return blocked;
}

}  // namespace rcheck
