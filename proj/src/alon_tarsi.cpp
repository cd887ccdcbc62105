#include "rcheck/alon_tarsi.hpp"

#include <map>

#include "rcheck/error.hpp"

namespace rcheck {

Orientation Orientation::from_arcs(const Graph& g, std::span<const Edge> arcs) {
  Orientation d{g, std::vector<bool>(g.edge_count(), false)};
  std::vector<bool> seen(g.edge_count(), false);
  for (const Edge& a : arcs) {
    const int i = g.edge_index(a.u, a.v);
    if (i < 0) {
      throw InputError("arc " + std::to_string(a.u) + "->" + std::to_string(a.v) + " is not an edge");
    }
    if (seen[i]) {
      throw InputError("edge " + std::to_string(a.u) + "-" + std::to_string(a.v) + " oriented twice");
    }
    seen[i] = true;
    d.reversed[i] = g.edges()[i].u != a.u;
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!seen[i]) {
      throw InputError("edge " + std::to_string(g.edges()[i].u) + "-" +
                       std::to_string(g.edges()[i].v) + " has no orientation");
    }
  }
  return d;
}

Edge Orientation::arc(int i) const {
  const Edge& e = base.edges().at(i);
  return reversed[i] ? Edge{e.v, e.u} : e;
}

std::vector<Edge> Orientation::arcs() const {
  std::vector<Edge> out;
  for (int i = 0; i < base.edge_count(); ++i) out.push_back(arc(i));
  return out;
}

std::vector<int> Orientation::out_degrees() const {
  std::vector<int> out(base.vertex_count(), 0);
  for (int i = 0; i < base.edge_count(); ++i) ++out[arc(i).u];
  return out;
}

std::vector<int> Orientation::in_degrees() const {
  std::vector<int> in(base.vertex_count(), 0);
  for (int i = 0; i < base.edge_count(); ++i) ++in[arc(i).v];
  return in;
}

Orientation Orientation::reverse() const {
  Orientation r = *this;
  r.reversed.flip();
  return r;
}

EulerianParity eulerian_counts(const Orientation& d) {
  const Graph& g = d.base;
  const int m = g.edge_count();
  if (m > kMaxEulerianEdges) {
    throw BudgetError("Eulerian count limited to " + std::to_string(kMaxEulerianEdges) + " edges");
  }
  const int n = g.vertex_count();
  // last[v]: index of the last edge touching v; past it v's balance is final.
  std::vector<int> last(n, -1);
  for (int i = 0; i < m; ++i) {
    last[g.edges()[i].u] = i;
    last[g.edges()[i].v] = i;
  }
  // Sweep edges, keeping per-vertex balance (out - in) of the chosen subset.
  // Vertices whose edges are all decided must balance to zero and are
  // dropped from the key.
  using Key = std::vector<signed char>;
  std::map<Key, EulerianParity> states{{Key(n, 0), EulerianParity{1, 0}}};
  for (int i = 0; i < m; ++i) {
    const Edge a = d.arc(i);
    std::map<Key, EulerianParity> next;
    for (const auto& [key, cnt] : states) {
      for (int take = 0; take < 2; ++take) {
        Key k = key;
        if (take) {
          ++k[a.u];
          --k[a.v];
        }
        bool ok = true;
        for (int v : {a.u, a.v}) {
          if (last[v] == i) {
            if (k[v] != 0) ok = false;
          }
        }
        if (!ok) continue;
        EulerianParity& dst = next[k];
        if (take) {
          dst.ee += cnt.eo;
          dst.eo += cnt.ee;
        } else {
          dst.ee += cnt.ee;
          dst.eo += cnt.eo;
        }
      }
    }
    states = std::move(next);
  }
  EulerianParity total;
  for (const auto& [key, cnt] : states) {
    total.ee += cnt.ee;
    total.eo += cnt.eo;
  }
  return total;
}

bool is_alon_tarsi(const Orientation& d, std::span<const int> f) {
  if (static_cast<int>(f.size()) != d.base.vertex_count()) {
    throw InputError("list-size function must cover every vertex");
  }
  const std::vector<int> out = d.out_degrees();
  for (int v = 0; v < d.base.vertex_count(); ++v) {
    if (out[v] > f[v] - 1) return false;
  }
  const EulerianParity p = eulerian_counts(d);
  return p.ee != p.eo;
}

std::optional<Orientation> find_at_orientation(const Graph& g, std::span<const int> f) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  if (static_cast<int>(f.size()) != n) throw InputError("list-size function must cover every vertex");
  if (m > kMaxSweepEdges) {
    throw BudgetError("orientation sweep limited to " + std::to_string(kMaxSweepEdges) + " edges");
  }
  long capacity = 0;
  for (int v = 0; v < n; ++v) capacity += std::max(0, f[v] - 1);
  if (capacity < m) return std::nullopt;

  Orientation d{g, std::vector<bool>(m, false)};
  std::vector<int> out(n, 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == m) {
      const EulerianParity p = eulerian_counts(d);
      return p.ee != p.eo;
    }
    const Edge& e = g.edges()[i];
    for (int bit = 0; bit < 2; ++bit) {
      const int tail = bit ? e.v : e.u;
      if (out[tail] + 1 > f[tail] - 1) continue;
      d.reversed[i] = bit != 0;
      ++out[tail];
      const bool found = self(self, i + 1);
      --out[tail];
      if (found) return true;
    }
    d.reversed[i] = false;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return d;
}

}  // namespace rcheck
