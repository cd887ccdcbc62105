#include "rcheck/discharging.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "rcheck/error.hpp"

namespace rcheck {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::C5: return "c5";
    case Variant::CC6: return "cc6";
    case Variant::DCC67: return "dcc67";
    case Variant::CC7: return "cc7";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  if (name == "c5") return Variant::C5;
  if (name == "cc6") return Variant::CC6;
  if (name == "dcc67") return Variant::DCC67;
  if (name == "cc7") return Variant::CC7;
  throw InputError("unknown variant '" + std::string(name) + "'");
}

ChargeSpec charge_spec(Variant v) {
  ChargeSpec s;
  s.variant = v;
  if (v == Variant::C5) {
    s.av = 1, s.bv = 6, s.af = 2, s.bf = 6;
  } else {
    s.av = 1, s.bv = 4, s.af = 1, s.bf = 4;
  }
  if (v == Variant::CC7) {
    s.precolored_vertex_bonus = 2;
    s.precolored_face_bonus = 1;
  }
  return s;
}

Rational vertex_charge(const ChargeSpec& spec, int degree, bool precolored) {
  Rational r = spec.av * degree - spec.bv;
  if (precolored) r += spec.precolored_vertex_bonus;
  return r;
}

Rational face_charge(const ChargeSpec& spec, int length, bool precolored_face) {
  Rational r = spec.af * length - spec.bf;
  if (precolored_face) r += spec.precolored_face_bonus;
  return r;
}

Rational euler_charge_sum(Variant variant) {
  const ChargeSpec s = charge_spec(variant);
  if (s.bv != s.bf || 2 * s.av + 2 * s.af != s.bv) {
    throw AuditError(std::string("charge spec of ") + variant_name(variant) +
                     " is not of the form av·d - b, af·ℓ - b with 2av + 2af = b");
  }
  return -2 * s.bv;
}

namespace {

Rational charge_sum(const PlaneGraph& pg, const ChargeSpec& spec, VertexMask pre) {
  const Graph& g = pg.graph();
  Rational sum = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    sum += vertex_charge(spec, g.degree(v), (pre >> v) & 1U);
  }
  for (const FaceWalk& w : pg.faces()) {
    VertexMask on = 0;
    for (int v : w) on |= VertexMask{1} << v;
    sum += face_charge(spec, static_cast<int>(w.size()), pre != 0 && on == pre);
  }
  return sum;
}

}  // namespace

Rational initial_charge_sum(const PlaneGraph& pg, const ChargeSpec& spec) {
  if (!pg.graph().is_connected()) throw AuditError("plane graph is disconnected");
  return charge_sum(pg, spec, 0);
}

Rational audit_initial_sum(const PlaneGraph& pg, Variant variant,
                           const std::optional<std::vector<int>>& precolored) {
  const Graph& g = pg.graph();
  VertexMask pre = 0;
  if (precolored && !precolored->empty()) {
    if (variant != Variant::CC7) {
      throw InputError(std::string("precolored vertices only exist for cc7, not ") + variant_name(variant));
    }
    const std::vector<int>& p = *precolored;
    if (p.size() > 3) throw InputError("precolored subgraph has more than 3 vertices");
    for (int v : p) {
      if (v < 0 || v >= g.vertex_count()) throw InputError("precolored vertex out of range");
      if ((pre >> v) & 1U) throw InputError("precolored vertex repeated");
      pre |= VertexMask{1} << v;
    }
    int inside = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) inside += g.has_edge(p[i], p[j]) ? 1 : 0;
    }
    // P1 needs nothing, P2 one edge, P3 two edges, K3 three.
    if (static_cast<int>(p.size()) - 1 > inside) {
      throw InputError("precolored vertices do not span a path or a triangle");
    }
    const bool common = std::any_of(pg.faces().begin(), pg.faces().end(), [&](const FaceWalk& w) {
      VertexMask on = 0;
      for (int v : w) on |= VertexMask{1} << v;
      return (on & pre) == pre;
    });
    if (!common) throw InputError("precolored vertices do not share a face");
  }
  const Rational sum = charge_sum(pg, charge_spec(variant), pre);
  const Rational expected = euler_charge_sum(variant);
  if (pre == 0 && sum != expected) {
    throw AuditError(std::string("initial charge sum ") + to_string(sum) + " differs from " +
                     to_string(expected) + " for " + variant_name(variant));
  }
  if (pre != 0 && sum > Rational(-1)) {
    throw AuditError("initial charge sum " + to_string(sum) + " with precolored vertices exceeds -1");
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Ledgers

namespace {

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Rational rational_at(std::string_view tok, int line) {
  try {
    return parse_rational(tok);
  } catch (const InputError& e) {
    throw ParseError(line, e.what());
  }
}

const std::set<std::string, std::less<>> kRoles = {"full", "heavy", "needy", "precolored"};

}  // namespace

std::vector<ChargeLedger> parse_ledgers(std::string_view text) {
  std::vector<ChargeLedger> out;
  std::optional<ChargeLedger> cur;
  bool have_initial = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = words(line);
    if (tok.empty()) continue;
    const std::string_view key = tok[0];
    if (key == "case") {
      if (cur) throw ParseError(line_no, "'case' inside case '" + cur->name + "'");
      if (tok.size() != 4 || tok[2] != "variant") {
        throw ParseError(line_no, "expected 'case <name> variant <v>'");
      }
      cur.emplace();
      cur->name = std::string(tok[1]);
      cur->line = line_no;
      try {
        cur->variant = parse_variant(tok[3]);
      } catch (const InputError& e) {
        throw ParseError(line_no, e.what());
      }
      have_initial = false;
      continue;
    }
    if (!cur) throw ParseError(line_no, "'" + std::string(key) + "' outside a case");
    if (key == "initial") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'initial <p/q>'");
      if (have_initial) throw ParseError(line_no, "repeated 'initial'");
      cur->initial = rational_at(tok[1], line_no);
      have_initial = true;
    } else if (key == "gain") {
      if (tok.size() < 6 || tok[2] != "x" || tok[4] != "via") {
        throw ParseError(line_no, "expected 'gain <p/q> x <count> via <rule> [note]'");
      }
      LedgerEntry e;
      e.amount = rational_at(tok[1], line_no);
      const Rational count = rational_at(tok[3], line_no);
      if (count.denominator() != 1 || count.numerator() < 1) {
        throw ParseError(line_no, "count must be a positive integer");
      }
      e.count = static_cast<int>(count.numerator());
      e.rule = std::string(tok[5]);
      for (std::size_t i = 6; i < tok.size(); ++i) {
        if (!e.note.empty()) e.note += ' ';
        e.note += tok[i];
      }
      e.line = line_no;
      cur->entries.push_back(std::move(e));
    } else if (key == "role") {
      if (tok.size() < 3) throw ParseError(line_no, "expected 'role <tag> <object>...'");
      if (!kRoles.contains(tok[1])) throw ParseError(line_no, "unknown role '" + std::string(tok[1]) + "'");
      for (std::size_t i = 2; i < tok.size(); ++i) cur->roles.emplace_back(tok[1], tok[i]);
    } else if (key == "expect") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'expect <p/q>'");
      cur->expect = rational_at(tok[1], line_no);
    } else if (key == "require") {
      if (tok.size() != 2 || tok[1] != "nonneg") throw ParseError(line_no, "expected 'require nonneg'");
      cur->require_nonneg = true;
    } else if (key == "end") {
      if (!have_initial) throw ParseError(line_no, "case '" + cur->name + "' has no 'initial'");
      out.push_back(std::move(*cur));
      cur.reset();
    } else {
      throw ParseError(line_no, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (cur) throw ParseError(line_no, "case '" + cur->name + "' is not closed");
  return out;
}

const std::vector<std::string>& rule_tags(Variant v) {
  static const std::vector<std::string> c5 = {"R1", "R2", "R3", "R4"};
  static const std::vector<std::string> cc6 = {"R1", "R1a", "R1b", "R2", "R2a", "R2b", "R3"};
  static const std::vector<std::string> cc7 = {"R0", "R1", "R1a", "R1b", "R1c", "R2", "R2a", "R2b", "R3"};
  switch (v) {
    case Variant::C5: return c5;
    case Variant::CC6:
    case Variant::DCC67: return cc6;
    case Variant::CC7: return cc7;
  }
  return c5;
}

std::vector<Rational> rule_amounts(Variant v, std::string_view rule) {
  using R = Rational;
  if (v == Variant::C5) {
    if (rule == "R1") return {R(1), R(1, 2)};
    if (rule == "R2" || rule == "R3" || rule == "R4") return {R(1, 2)};
    return {};
  }
  if (v == Variant::CC6 || v == Variant::DCC67) {
    // R1 through an edge is R1a or three R1b pulls; R3 only averages
    // inside a cluster, which the cluster totals already express.
    if (rule == "R1" || rule == "R1a") return {R(1, 3)};
    if (rule == "R1b") return {R(1, 9)};
    if (rule == "R2" || rule == "R2a") return {R(1, 3)};
    if (rule == "R2b") return {R(4, 9)};
    return {};
  }
  if (rule == "R0") return {R(1, 2)};
  if (rule == "R1" || rule == "R1a") return {R(3, 8)};
  if (rule == "R1b") return {R(1, 8)};
  if (rule == "R1c") return {R(3, 16)};
  if (rule == "R2") return {R(1, 3)};
  if (rule == "R2a") return {R(1, 3), R(1, 4), R(1, 5)};
  if (rule == "R2b") return {R(1, 2)};
  if (rule == "R3") return {R(1, 4)};
  return {};
}

bool is_aggregate_rule(Variant v, std::string_view rule) {
  return v != Variant::C5 && (rule == "R1" || rule == "R2");
}

Rational evaluate_ledger(const ChargeLedger& ledger) {
  const auto& tags = rule_tags(ledger.variant);
  Rational total = ledger.initial;
  for (const LedgerEntry& e : ledger.entries) {
    if (std::find(tags.begin(), tags.end(), e.rule) == tags.end()) {
      throw LedgerError("case '" + ledger.name + "' line " + std::to_string(e.line) + ": rule " + e.rule +
                        " is not a " + variant_name(ledger.variant) + " rule");
    }
    total += e.amount * e.count;
  }
  return total;
}

LedgerVerdict check_ledger(const ChargeLedger& ledger) {
  LedgerVerdict out;
  out.name = ledger.name;
  out.variant = ledger.variant;
  out.final_charge = evaluate_ledger(ledger);
  for (const LedgerEntry& e : ledger.entries) {
    const auto allowed = rule_amounts(ledger.variant, e.rule);
    const Rational mag = e.amount < Rational(0) ? -e.amount : e.amount;
    if (std::find(allowed.begin(), allowed.end(), mag) == allowed.end()) {
      out.amounts_ok = false;
      out.detail += "line " + std::to_string(e.line) + ": " + e.rule + " never moves " + to_string(mag) + "; ";
    }
  }
  if (ledger.require_nonneg && out.final_charge < Rational(0)) {
    out.nonneg_ok = false;
    out.detail += "final charge " + to_string(out.final_charge) + " is negative; ";
  }
  if (ledger.expect && *ledger.expect != out.final_charge) {
    out.expect_ok = false;
    out.detail += "final charge " + to_string(out.final_charge) + " != expected " + to_string(*ledger.expect) + "; ";
  }
  if (!out.detail.empty()) out.detail.resize(out.detail.size() - 2);
  return out;
}

std::vector<std::string> conservation_gaps(const std::vector<ChargeLedger>& ledgers, Variant v) {
  std::set<std::pair<std::string, Rational>> gained, sent;
  for (const ChargeLedger& l : ledgers) {
    if (l.variant != v) continue;
    for (const LedgerEntry& e : l.entries) {
      if (is_aggregate_rule(v, e.rule) || e.amount == Rational(0)) continue;
      if (e.amount > Rational(0)) {
        gained.insert({e.rule, e.amount});
      } else {
        sent.insert({e.rule, -e.amount});
      }
    }
  }
  std::vector<std::string> gaps;
  for (const auto& [rule, amount] : gained) {
    if (!sent.contains({rule, amount})) gaps.push_back(rule + " " + to_string(amount) + " received, never sent");
  }
  for (const auto& [rule, amount] : sent) {
    if (!gained.contains({rule, amount})) gaps.push_back(rule + " " + to_string(amount) + " sent, never received");
  }
  return gaps;
}

bool CaseSuiteReport::passed() const {
  if (cases.empty() || !conservation_gaps.empty()) return false;
  return std::all_of(cases.begin(), cases.end(), [](const LedgerVerdict& c) { return c.passed(); });
}

CaseSuiteReport run_case_suite(const std::vector<ChargeLedger>& ledgers, Variant v) {
  CaseSuiteReport report;
  report.variant = v;
  for (const ChargeLedger& l : ledgers) {
    if (l.variant == v) report.cases.push_back(check_ledger(l));
  }
  report.conservation_gaps = conservation_gaps(ledgers, v);
  return report;
}

// ---------------------------------------------------------------------------
// Closed-form bounds

namespace {

// Cyclic face patterns around a d-vertex: bit i set = the i-th face is a
// 3-face. Three consecutive 3-faces close a chorded 5-cycle.
std::vector<unsigned> c5_patterns(int d) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1U << d); ++m) {
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      const bool a = (m >> i) & 1U, b = (m >> ((i + 1) % d)) & 1U, c = (m >> ((i + 2) % d)) & 1U;
      if (a && b && c) ok = false;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

Rational c5_vertex_bound(int d) {
  if (d >= 6) return Rational(d - 6);
  const ChargeSpec spec = charge_spec(Variant::C5);
  std::optional<Rational> best;
  for (unsigned m : c5_patterns(d)) {
    const auto tri = [&](int i) { return ((m >> (((i % d) + d) % d)) & 1U) != 0; };
    Rational mu = vertex_charge(spec, d);
    if (d == 4) {
      for (int i = 0; i < d; ++i) {
        if (tri(i)) continue;
        mu += (tri(i - 1) || tri(i + 1)) ? Rational(1) : Rational(1, 2);
      }
      if (!best || mu < *best) best = mu;
      continue;
    }
    int big = 0, t3 = 0;
    for (int i = 0; i < d; ++i) (tri(i) ? t3 : big)++;
    mu += Rational(big, 2);
    // Needy 5-faces: 4⁺ positions, no two consecutive (two adjacent needy
    // 5-faces form d1); with two or more 3-faces only one is possible.
    for (unsigned needy = 0; needy < (1U << d); ++needy) {
      if (needy & m) continue;
      bool ok = true;
      for (int i = 0; i < d; ++i) {
        if (((needy >> i) & 1U) && ((needy >> ((i + 1) % d)) & 1U)) ok = false;
      }
      const int k = std::popcount(needy);
      if (!ok || (t3 >= 2 && k > 1)) continue;
      Rational final_charge = mu - Rational(k, 2);
      if (final_charge < Rational(0)) {
        if (t3 != 3 || k != 1) continue;  // the needy-vertex claim excludes it
        final_charge += Rational(1, 2);    // R4
      }
      if (!best || final_charge < *best) best = final_charge;
    }
  }
  return *best;
}

Rational cc6_vertex_bound(int d) {
  if (d == 4) return 0;
  if (d == 5) return Rational(1) - 3 * Rational(1, 3);
  return Rational(d - 4) - Rational(4, 9) * ((3 * d) / 4);
}

Rational cc7_vertex_bound(int d) {
  if (d == 4) return 0;
  std::optional<Rational> best;
  auto take = [&](Rational r) {
    if (!best || r < *best) best = r;
  };
  if (d == 5) {
    for (int t3 = 0; t3 <= 5; ++t3) {
      for (int r3 = 0; r3 <= (t3 <= 2 ? 1 : 0); ++r3) {
        take(Rational(1) - Rational(t3, std::max(3, t3)) - Rational(r3, 4));
      }
    }
    return *best;
  }
  const int kmax = (4 * d) / 5;
  for (int k = 0; k <= kmax; ++k) {
    for (int l = 0; k + 2 * l <= d; ++l) {
      if (d == 6 && k + l > 4) continue;
      take(Rational(d - 4) - Rational(k, 2) - Rational(l, 4));
    }
  }
  return *best;
}

std::vector<Rational> face_amounts(Variant v) {
  switch (v) {
    case Variant::C5: return {Rational(1), Rational(1, 2)};
    case Variant::CC6:
    case Variant::DCC67: return {Rational(1, 3), Rational(1, 9)};
    case Variant::CC7: return {Rational(3, 8), Rational(3, 16), Rational(1, 8)};
  }
  return {};
}

}  // namespace

Rational verify_vertex_bound(Variant v, int d) {
  if (d < 4) throw InputError("vertex bound needs d >= 4");
  switch (v) {
    case Variant::C5: return c5_vertex_bound(d);
    case Variant::CC6:
    case Variant::DCC67: return cc6_vertex_bound(d);
    case Variant::CC7: return cc7_vertex_bound(d);
  }
  return 0;
}

Rational verify_face_bound(Variant v, int length, const FaceProfile& profile) {
  if (length < 4) throw InputError("face bound needs length >= 4");
  const auto allowed = face_amounts(v);
  int used = 0;
  Rational charge = face_charge(charge_spec(v), length);
  for (const auto& [amount, count] : profile.losses) {
    if (count < 0) throw InputError("negative count in face profile");
    if (std::find(allowed.begin(), allowed.end(), amount) == allowed.end()) {
      throw InputError(std::string(variant_name(v)) + " faces never lose " + to_string(amount));
    }
    used += count;
    charge -= amount * count;
  }
  if (used > length) throw InputError("face profile has more entries than the face has slots");
  if (v == Variant::C5 && length == 5 && charge == Rational(-1, 2)) charge += Rational(1, 2);
  if (v == Variant::CC7 && length == 6 && charge < Rational(0)) charge += Rational(1, 4);
  return charge;
}

Rational worst_face_bound(Variant v, int length) {
  if (length < 4) throw InputError("face bound needs length >= 4");
  // Which per-slot amounts the argument allows on an ℓ-face, and caps on
  // how many slots may carry the first of them.
  std::vector<Rational> amounts = face_amounts(v);
  int first_cap = length;
  switch (v) {
    case Variant::C5:
      if (length == 4) amounts = {Rational(1, 2)};
      if (length == 5) first_cap = 4;  // five 4-vertices at 1 form d11
      break;
    case Variant::CC6:
      if (length == 4) amounts.clear();
      if (length == 5) amounts = {Rational(1, 9)};
      break;
    case Variant::DCC67:
      if (length == 4) amounts.clear();
      if (length == 5) first_cap = 1;
      break;
    case Variant::CC7:
      if (length == 4) amounts.clear();
      if (length == 5) amounts = {Rational(3, 8)}, first_cap = 1;
      if (length == 6) amounts = {Rational(3, 8), Rational(1, 8)};
      break;
  }
  std::optional<Rational> best;
  FaceProfile p;
  // Top-up rules only touch 5- and 6-faces, so past ℓ = 8 losses are
  // monotone and the all-maximum profile is the worst one.
  if (length > 8 && !amounts.empty()) {
    p.losses = {{amounts.front(), std::min(first_cap, length)}};
    if (first_cap < length && amounts.size() > 1) p.losses.push_back({amounts[1], length - first_cap});
    return verify_face_bound(v, length, p);
  }
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == amounts.size()) {
      const Rational r = verify_face_bound(v, length, p);
      if (!best || r < *best) best = r;
      return;
    }
    const int cap = i == 0 ? std::min(left, first_cap) : left;
    for (int c = 0; c <= cap; ++c) {
      p.losses.push_back({amounts[i], c});
      rec(i + 1, left - c);
      p.losses.pop_back();
    }
  };
  rec(0, length);
  return *best;
}

// ---------------------------------------------------------------------------
// Linear program for 7⁺-vertices

namespace {

using Vec3 = std::array<Rational, 3>;

struct Row {
  Vec3 a;
  Rational b;  // a·x >= b
};

std::optional<Vec3> solve3(const Row& r0, const Row& r1, const Row& r2) {
  auto det = [](const Vec3& x, const Vec3& y, const Vec3& z) {
    return x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) +
           x[2] * (y[0] * z[1] - y[1] * z[0]);
  };
  const Rational D = det(r0.a, r1.a, r2.a);
  if (D == Rational(0)) return std::nullopt;
  Vec3 out;
  for (int c = 0; c < 3; ++c) {
    Vec3 x = r0.a, y = r1.a, z = r2.a;
    x[c] = r0.b, y[c] = r1.b, z[c] = r2.b;
    out[c] = det(x, y, z) / D;
  }
  return out;
}

// Optimum of objective·x over {rows} (a bounded polyhedron in R^3) by
// visiting every vertex. `maximize` flips the sense.
std::pair<Rational, Vec3> vertex_optimum(const std::vector<Row>& rows, const Vec3& objective, bool maximize) {
  std::optional<std::pair<Rational, Vec3>> best;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      for (std::size_t k = j + 1; k < rows.size(); ++k) {
        const auto x = solve3(rows[i], rows[j], rows[k]);
        if (!x) continue;
        const bool feasible = std::all_of(rows.begin(), rows.end(), [&](const Row& r) {
          return r.a[0] * (*x)[0] + r.a[1] * (*x)[1] + r.a[2] * (*x)[2] >= r.b;
        });
        if (!feasible) continue;
        const Rational val = objective[0] * (*x)[0] + objective[1] * (*x)[1] + objective[2] * (*x)[2];
        if (!best || (maximize ? val > best->first : val < best->first)) best = {{val, *x}};
      }
    }
  }
  if (!best) throw AuditError("linear program has no vertex");
  return *best;
}

// Dual of min d - k/2 - ℓ/4 s.t. d ≥ 7, c·d - 5k ≥ 0, d - k - 2ℓ ≥ 0,
// written as "≥" rows over (a1, a2, a3).
std::vector<Row> dual_rows(int c) {
  using R = Rational;
  return {
      {{R(-1), R(-c), R(-1)}, R(-1)},       // a1 + c·a2 + a3 ≤ 1
      {{R(0), R(5), R(1)}, R(1, 2)},        // 5a2 + a3 ≥ 1/2
      {{R(0), R(0), R(2)}, R(1, 4)},        // 2a3 ≥ 1/4
      {{R(1), R(0), R(0)}, R(0)},
      {{R(0), R(1), R(0)}, R(0)},
      {{R(0), R(0), R(1)}, R(0)},
  };
}

bool dual_feasible(const Vec3& a, int c) {
  for (const Row& r : dual_rows(c)) {
    if (r.a[0] * a[0] + r.a[1] * a[1] + r.a[2] * a[2] < r.b) return false;
  }
  return true;
}

}  // namespace

LpReport audit_lp(int max_d) {
  if (max_d < 7) throw InputError("LP range must include d = 7");
  using R = Rational;
  LpReport rep;
  bool first = true;
  for (int d = 7; d <= max_d; ++d) {
    for (int k = 0; 5 * k <= 4 * d; ++k) {
      for (int l = 0; k + 2 * l <= d; ++l) {
        const R val = R(d) - R(k, 2) - R(l, 4);
        if (first || val < rep.integer_minimum) {
          rep.integer_minimum = val;
          rep.integer_argmin = {d, k, l};
          first = false;
        }
      }
    }
  }

  const std::vector<Row> primal = {
      {{R(1), R(0), R(0)}, R(7)},        {{R(4), R(-5), R(0)}, R(0)}, {{R(1), R(-1), R(-2)}, R(0)},
      {{R(0), R(1), R(0)}, R(0)},        {{R(0), R(0), R(1)}, R(0)},  {{R(-1), R(0), R(0)}, R(-max_d)},
  };
  rep.relaxed_minimum = vertex_optimum(primal, {R(1), R(-1, 2), R(-1, 4)}, false).first;

  rep.printed_certificate = {R(23, 40), R(1, 20), R(1, 4)};
  const Vec3& pc = rep.printed_certificate;
  rep.printed_row_with_5 = pc[0] + 5 * pc[1] + pc[2];
  rep.printed_row_with_4 = pc[0] + 4 * pc[1] + pc[2];
  rep.printed_feasible_5 = dual_feasible(pc, 5);
  rep.printed_feasible_4 = dual_feasible(pc, 4);

  rep.dual_optimum_5 = vertex_optimum(dual_rows(5), {R(7), R(0), R(0)}, true).first;
  const auto [best4, cert] = vertex_optimum(dual_rows(4), {R(7), R(0), R(0)}, true);
  rep.dual_optimum_4 = best4;
  rep.certificate = cert;
  rep.certificate_objective = 7 * cert[0];
  rep.certificate_feasible = dual_feasible(cert, 4);
  return rep;
}

LinearBound vertex_tail_bound(Variant v) {
  switch (v) {
    case Variant::C5: return {Rational(1), Rational(-6), 6};  // receives only
    case Variant::CC6:
    case Variant::DCC67:
      // d - 4 minus at most 4/9 on each of ⌊3d/4⌋ incident faces
      return {Rational(2, 3), Rational(-4), 6};
    case Variant::CC7:
      // weak duality: d - k/2 - l/4 ≥ a1·d on the LP region
      return {audit_lp().certificate[0], Rational(-4), 7};
  }
  return {};
}

LinearBound face_tail_bound(Variant v) {
  switch (v) {
    case Variant::C5: return {Rational(1), Rational(-6), 6};  // 2l - 6 - l
    case Variant::CC6:
    case Variant::DCC67: return {Rational(2, 3), Rational(-4), 6};  // l - 4 - l/3
    case Variant::CC7: return {Rational(5, 8), Rational(-4), 7};    // l - 4 - 3l/8
  }
  return {};
}

}  // namespace rcheck
