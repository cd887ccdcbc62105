#include <doctest.h>

#include <random>

#include "rcheck/alon_tarsi.hpp"
#include "rcheck/choosability.hpp"
#include "rcheck/config.hpp"
#include "rcheck/error.hpp"
#include "rcheck/fixture.hpp"

using namespace rcheck;

namespace {

// Every arc subset, checked for in = out at each vertex.
EulerianParity brute_eulerian(const Orientation& d) {
  const int m = d.base.edge_count();
  const int n = d.base.vertex_count();
  EulerianParity p;
  for (std::uint32_t s = 0; s < (1U << m); ++s) {
    std::vector<int> bal(n, 0);
    for (int i = 0; i < m; ++i) {
      if (!((s >> i) & 1U)) continue;
      const Edge a = d.arc(i);
      ++bal[a.u];
      --bal[a.v];
    }
    bool ok = true;
    for (int b : bal) ok &= b == 0;
    if (!ok) continue;
    (std::popcount(s) % 2 ? p.eo : p.ee) += 1;
  }
  return p;
}

Graph random_graph(std::mt19937& rng, int n, int percent) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("Eulerian parity counts match subset enumeration") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = random_graph(rng, 5 + trial % 3, 55);
    if (g.edge_count() > 16) continue;
    Orientation d;
    d.base = g;
    for (int i = 0; i < g.edge_count(); ++i) d.reversed.push_back(rng() % 2);
    CHECK(eulerian_counts(d) == brute_eulerian(d));
    CHECK(eulerian_counts(d.reverse()) == brute_eulerian(d.reverse()));
  }
}

TEST_CASE("orientation basics") {
  Graph c4(4);
  for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  const std::vector<Edge> arcs = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  const Orientation d = Orientation::from_arcs(c4, arcs);
  CHECK(d.out_degrees() == std::vector<int>{1, 1, 1, 1});
  CHECK(eulerian_counts(d) == EulerianParity{2, 0});
  CHECK(is_alon_tarsi(d, std::vector<int>{2, 2, 2, 2}));
  CHECK_FALSE(is_alon_tarsi(d, std::vector<int>{2, 1, 2, 2}));
  const std::vector<Edge> missing = {{0, 1}, {1, 2}, {2, 3}};
  CHECK_THROWS_AS(Orientation::from_arcs(c4, missing), InputError);
  const std::vector<Edge> bogus = {{0, 1}, {1, 2}, {2, 3}, {0, 2}};
  CHECK_THROWS_AS(Orientation::from_arcs(c4, bogus), InputError);

  Graph c3(3);
  for (int i = 0; i < 3; ++i) c3.add_edge(i, (i + 1) % 3);
  CHECK_FALSE(find_at_orientation(c3, std::vector<int>{2, 2, 2}).has_value());
  CHECK(find_at_orientation(c4, std::vector<int>{2, 2, 2, 2}).has_value());

  Graph k55(10);
  for (int i = 0; i < 5; ++i)
    for (int j = 5; j < 10; ++j) k55.add_edge(i, j);
  CHECK_THROWS_AS(find_at_orientation(k55, std::vector<int>(10, 4)), BudgetError);
}

TEST_CASE("an Alon-Tarsi orientation implies choosability") {
  std::mt19937 rng(43);
  int found = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = random_graph(rng, 4 + trial % 3, 50);
    std::vector<int> f(g.vertex_count());
    for (int& k : f) k = 1 + static_cast<int>(rng() % 3);
    const auto d = find_at_orientation(g, f);
    if (!d) continue;
    ++found;
    CHECK(is_alon_tarsi(*d, f));
    CHECK(is_fs_choosable(g, f, 2).choosable);
    CHECK(is_fs_choosable(g, f, 0).choosable);
  }
  CHECK(found > 20);
}

TEST_CASE("shipped orientations certify their catalog entries") {
  const std::string dir = RCHECK_FIXTURES_DIR;
  const std::vector<Configuration> catalog = load_catalog(read_file(dir + "/catalog.fix"));
  const std::vector<FixtureBlock> blocks = parse_fixtures(read_file(dir + "/orientations.fix"));
  CHECK(blocks.size() == 11);
  for (const FixtureBlock& b : blocks) {
    CAPTURE(b.name);
    const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const Configuration& c) { return c.name == b.name; });
    REQUIRE(it != catalog.end());
    CHECK(it->c.edges() == b.graph.edges());
    const Orientation d = Orientation::from_arcs(it->c, b.orientation);
    const std::vector<int> f = it->list_sizes();
    CHECK(is_alon_tarsi(d, f));
    CHECK(eulerian_counts(d) == brute_eulerian(d));
    CHECK(is_reducible(*it).choosable);
  }
}
