// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "rcheck/alon_tarsi.hpp"
#include "rcheck/choosability.hpp"
#include "rcheck/config.hpp"
#include "rcheck/discharging.hpp"
#include "rcheck/fixture.hpp"

using namespace rcheck;

namespace {

const std::string kDir = RCHECK_FIXTURES_DIR;
constexpr double kCatalogSeconds = 600;  // criterion 1 wall-clock cap

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int n, const char* title, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = Clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("error: ") + e.what();
  }
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("criterion %d: %-28s %s  (%s; %.1fs)\n", n, title, ok ? "PASS" : "FAIL", detail.c_str(), s);
  std::fflush(stdout);
  if (!ok) ++failures;
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

std::vector<ColorSet> subsets(int palette, int size) {
  std::vector<ColorSet> out;
  for (ColorSet m = 1; m < (ColorSet{1} << palette); ++m)
    if (size == 0 || std::popcount(m) == size) out.push_back(m);
  return out;
}

// Fixes the colour of vertex 0 and pushes the reachable colour sets round
// the cycle.
bool walk_colorable(const ListAssignment& l) {
  const std::size_t n = l.size();
  for (ColorSet m = l[0]; m; m &= m - 1) {
    const ColorSet a = m & -m;
    ColorSet reach = a;
    for (std::size_t i = 1; i < n && reach; ++i) reach = std::popcount(reach) == 1 ? l[i] & ~reach : l[i];
    if (reach & ~a) return true;
  }
  return false;
}

// Every path instance over a 4-colour palette with 1-4 internal vertices;
// checks |g| ≤ 1 and g_u(a) = {b} ⇒ g_v(b) = {a}.
bool path_properties(long& instances, long& violations) {
  constexpr int kPalette = 4;
  const auto ends = subsets(kPalette, 0);
  const auto two = subsets(kPalette, 2);
  const auto three = subsets(kPalette, 3);
  const auto one = subsets(kPalette, 1);
  auto check = [&](const PathInstance& p) {
    for (std::size_t i = 0; i + 1 < p.lists.size(); ++i)
      if (std::popcount(p.lists[i] & p.lists[i + 1]) > 2) return;
    ++instances;
    for (ColorSet m = p.lists.front(); m; m &= m - 1) {
      const int a = std::countr_zero(m);
      const ColorSet g = path_block_set(p, PathEnd::U, a);
      if (std::popcount(g) > 1) ++violations;
      if (std::popcount(g) == 1 && path_block_set(p, PathEnd::V, std::countr_zero(g)) != (ColorSet{1} << a)) {
        ++violations;
      }
    }
  };
  for (int internal = 1; internal <= 4; ++internal) {
    for (int tripod = -1; tripod < internal; ++tripod) {
      if (tripod == 0 || (tripod > 0 && tripod + 1 > internal)) continue;
      PathInstance p;
      p.tripod = tripod;
      p.lists.assign(internal + 2, 0);
      const std::vector<ColorSet> zs = tripod > 0 ? one : std::vector<ColorSet>{0};
      auto rec = [&](auto&& self, int i) -> void {
        if (i == internal + 2) {
          for (ColorSet z : zs) {
            p.z_list = z;
            check(p);
          }
          return;
        }
        const bool end = i == 0 || i == internal + 1;
        const bool wide = tripod > 0 && (i == tripod || i == tripod + 1);
        for (ColorSet l : end ? ends : wide ? three : two) {
          p.lists[i] = l;
          self(self, i + 1);
        }
      };
      rec(rec, 0);
    }
  }
  return violations == 0;
}

}  // namespace

int main() {
  const std::string catalog_text = read_file(kDir + "/catalog.fix");
  const std::vector<Configuration> catalog = load_catalog(catalog_text);
  auto entry = [&](const std::string& name) -> const Configuration& {
    const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const Configuration& c) { return c.name == name; });
    if (it == catalog.end()) throw std::runtime_error("missing catalog entry " + name);
    return *it;
  };

  report(1, "catalog reducibility", [&](std::string& d) {
    const auto start = Clock::now();
    int reducible = 0;
    for (const Configuration& c : catalog) reducible += is_reducible(c).choosable;
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    d = std::to_string(reducible) + "/" + std::to_string(catalog.size()) + " reducible, limit " +
        std::to_string(static_cast<int>(kCatalogSeconds)) + "s";
    return reducible == static_cast<int>(catalog.size()) && s < kCatalogSeconds;
  });

  report(2, "Alon-Tarsi bridge", [&](std::string& d) {
    int certified = 0, disagreements = 0;
    for (const FixtureBlock& b : parse_fixtures(read_file(kDir + "/orientations.fix"))) {
      const Configuration& c = entry(b.name);
      const std::vector<int> f = c.list_sizes();
      const auto found = find_at_orientation(c.c, f);
      const bool shipped = is_alon_tarsi(Orientation::from_arcs(c.c, b.orientation), f);
      const bool red = is_reducible(c).choosable;
      if (found && shipped && red) ++certified;
      if ((found || shipped) && !red) ++disagreements;
      if (!found || !shipped) ++disagreements;
    }
    d = std::to_string(certified) + " entries certified, " + std::to_string(disagreements) + " disagreements";
    return certified == 11 && disagreements == 0;
  });

  report(3, "odd cycle 2-list closed form", [&](std::string& d) {
    long total = 0, bad = 0;
    for (int n : {3, 5, 7, 9}) {
      const Graph g = cycle(n);
      enumerate_assignments(g, std::vector<int>(n, 2), 2, [&](const ListAssignment& l) {
        ++total;
        const bool closed = odd_cycle_2list_colorable(l);
        bad += closed != walk_colorable(l);
        if (n <= 7) bad += closed != find_coloring(g, l).has_value();
        return true;
      });
    }
    d = std::to_string(total) + " assignments, " + std::to_string(bad) + " mismatches";
    return total > 0 && bad == 0;
  });

  report(4, "template lemmas", [&](std::string& d) {
    int built = 0, reducible = 0;
    for (TemplateKind k : {TemplateKind::B1, TemplateKind::B2}) {
      const int base = k == TemplateKind::B1 ? 4 : 5;
      for (int p1 = 2; base + p1 + 1 <= 10; ++p1)
        for (int pos = 0; pos + 1 < p1; ++pos)
          for (int p2 = 1; base + p1 + p2 <= 10; ++p2) {
            ++built;
            reducible += is_reducible(build_template(k, p1, pos, p2)).choosable;
          }
    }
    long instances = 0, violations = 0;
    const bool paths = path_properties(instances, violations);
    d = std::to_string(reducible) + "/" + std::to_string(built) + " templates reducible, " +
        std::to_string(instances) + " path instances, " + std::to_string(violations) + " violations";
    return built > 0 && reducible == built && paths;
  });

  report(5, "charge sums", [&](std::string& d) {
    int exact[4] = {0, 0, 0, 0}, pre_ok = 0, pre_total = 0;
    bool ok = true;
    const Variant vs[] = {Variant::C5, Variant::CC6, Variant::DCC67, Variant::CC7};
    for (const FixtureBlock& b : parse_fixtures(read_file(kDir + "/plane.fix"))) {
      const PlaneGraph pg(b.graph, b.faces);
      if (!b.precolored.empty()) {
        ++pre_total;
        pre_ok += audit_initial_sum(pg, Variant::CC7, b.precolored) <= Rational(-1);
        continue;
      }
      for (int i = 0; i < 4; ++i) {
        const Rational want = vs[i] == Variant::C5 ? Rational(-12) : Rational(-8);
        if (audit_initial_sum(pg, vs[i]) == want) ++exact[i];
        else ok = false;
      }
    }
    d = "c5 " + std::to_string(exact[0]) + ", cc6 " + std::to_string(exact[1]) + ", dcc67 " +
        std::to_string(exact[2]) + " exact; cc7 precolored " + std::to_string(pre_ok) + "/" + std::to_string(pre_total);
    return ok && exact[0] >= 5 && exact[1] >= 5 && exact[2] >= 5 && pre_total > 0 && pre_ok == pre_total;
  });

  report(6, "ledger suite", [&](std::string& d) {
    const std::vector<ChargeLedger> ledgers = parse_ledgers(read_file(kDir + "/ledgers.fix"));
    int cases = 0, passed = 0, intermediate = 0;
    bool conserved = true;
    for (Variant v : {Variant::C5, Variant::CC6, Variant::DCC67, Variant::CC7}) {
      conserved &= run_case_suite(ledgers, v).conservation_gaps.empty();
    }
    for (const ChargeLedger& l : ledgers) {
      // States recorded before a later top-up carry no sign obligation.
      if (!l.require_nonneg) {
        ++intermediate;
        continue;
      }
      ++cases;
      const LedgerVerdict c = check_ledger(l);
      passed += c.passed() && c.final_charge >= Rational(0) ? 1 : 0;
    }
    auto value = [&](const std::string& name) {
      for (const ChargeLedger& l : ledgers)
        if (l.name == name) return evaluate_ledger(l);
      throw std::runtime_error("missing ledger " + name);
    };
    const bool printed = value("cc6-K3") == Rational(0) && value("dcc67-5face") == Rational(2, 9) &&
                         value("cc7-6face-R1c") == Rational(-1, 4) &&
                         value("cc7-6face-R1c-then-R3") == Rational(0);
    int mutants = 0, caught = 0;
    for (const ChargeLedger& l : ledgers) {
      for (std::size_t i = 0; i <= l.entries.size(); ++i) {
        for (const Rational delta : {Rational(1, 72), Rational(-1, 72)}) {
          ChargeLedger m = l;
          (i == l.entries.size() ? m.initial : m.entries[i].amount) += delta;
          ++mutants;
          caught += !check_ledger(m).passed();
        }
      }
    }
    d = std::to_string(passed) + "/" + std::to_string(cases) + " cases >= 0, " + std::to_string(intermediate) +
        " pre-top-up states, " +
        "mutants caught " + std::to_string(caught) + "/" + std::to_string(mutants) +
        (conserved ? ", conserved" : ", conservation gaps");
    return cases == passed && intermediate <= 1 && printed && conserved && caught == mutants;
  });

  report(7, "LP audit", [&](std::string& d) {
    const LpReport lp = audit_lp(60);
    d = "integer " + to_string(lp.integer_minimum) + ", relaxed " + to_string(lp.relaxed_minimum) +
        ", printed rows " + to_string(lp.printed_row_with_5) + " / " + to_string(lp.printed_row_with_4) +
        ", certificate objective " + to_string(lp.certificate_objective);
    return lp.integer_minimum == Rational(17, 4) && lp.relaxed_minimum == Rational(161, 40) &&
           !lp.printed_feasible_5 && !lp.printed_feasible_4 && lp.certificate_feasible &&
           lp.certificate_objective > Rational(4);
  });

  report(8, "vertex and face bounds", [&](std::string& d) {
    bool ok = true;
    Rational low(100);
    for (Variant v : {Variant::C5, Variant::CC6, Variant::DCC67, Variant::CC7}) {
      for (int x = 4; x <= 60; ++x) {
        const Rational vb = verify_vertex_bound(v, x), fb = worst_face_bound(v, x);
        ok &= vb >= Rational(0) && fb >= Rational(0);
        if (v == Variant::CC7 && x >= 7) ok &= vb > Rational(0);
        low = std::min({low, vb, fb});
      }
      for (const LinearBound& t : {vertex_tail_bound(v), face_tail_bound(v)}) {
        ok &= t.slope > Rational(0) && t.at(t.start) >= Rational(0);
      }
    }
    const Rational cc6_6 = verify_vertex_bound(Variant::CC6, 6);
    d = "min " + to_string(low) + " over 4..60, cc6 d=6 " + to_string(cc6_6) + ", linear tails nonnegative";
    return ok && cc6_6 == Rational(2, 9);
  });

  report(9, "merge tables", [&](std::string& d) {
    int entries = 0, pairs = 0, lists = 0, reducible = 0;
    bool partition = true, triples = true;
    for (const std::string& name : {"d2", "d11", "d1", "d9", "d7", "bigneedy", "d5", "d6", "d8", "d4", "d4b", "lastconf"}) {
      const Configuration& c = entry(name);
      const MergeReport m = enumerate_merge_lists(c, 5);
      const int x = std::popcount(c.x);
      partition &= static_cast<int>(m.pairs.size()) == x * (x - 1) / 2;
      ++entries;
      pairs += static_cast<int>(m.pairs.size());
      for (const MergeList& l : m.lists) {
        ++lists;
        reducible += is_reducible(l.merged).choosable;
      }
      triples &= m.no_identifiable_triple;
    }
    d = std::to_string(entries) + " entries, " + std::to_string(pairs) + " pairs, " + std::to_string(reducible) +
        "/" + std::to_string(lists) + " lists reducible" + (triples ? ", no triple" : ", triple found");
    return partition && reducible == lists && triples;
  });

  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
