#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcheck/graph.hpp"
#include "rcheck/rational.hpp"

namespace rcheck {

enum class Variant { C5, CC6, DCC67, CC7 };

const char* variant_name(Variant v);
// "c5", "cc6", "dcc67", "cc7"; InputError otherwise.
Variant parse_variant(std::string_view name);

// μ(v) = av·d(v) - bv + 2δ(v), ν(f) = af·ℓ(f) - bf + ε(f). The δ/ε terms
// only exist for cc7.
struct ChargeSpec {
  Variant variant = Variant::CC6;
  Rational av, bv, af, bf;
  Rational precolored_vertex_bonus;  // 2 for cc7, else 0
  Rational precolored_face_bonus;    // 1 for cc7, else 0
};

ChargeSpec charge_spec(Variant v);
Rational vertex_charge(const ChargeSpec& spec, int degree, bool precolored = false);
Rational face_charge(const ChargeSpec& spec, int length, bool precolored_face = false);

// Sum of initial charges with no precolored vertices.
Rational initial_charge_sum(const PlaneGraph& pg, const ChargeSpec& spec);

// Same, with δ on `precolored` and ε on faces whose vertex set is exactly
// it. P must span a path on 1-3 vertices or a triangle, on one common face,
// and is only accepted for cc7. Throws InputError for an illegal P and
// AuditError when the sum is not -12 (c5), -8 (cc6, dcc67) or ≤ -1 (cc7).
Rational audit_initial_sum(const PlaneGraph& pg, Variant variant,
                           const std::optional<std::vector<int>>& precolored = std::nullopt);

// -2b from av·d - b, af·ℓ - b with 2av + 2af = b.
Rational euler_charge_sum(Variant variant);

struct LedgerEntry {
  std::string rule;
  Rational amount;  // per application; negative on the sending side
  int count = 1;
  std::string note;
  int line = 0;
};

struct ChargeLedger {
  std::string name;
  Variant variant = Variant::CC6;
  Rational initial;
  std::vector<LedgerEntry> entries;
  bool require_nonneg = false;
  std::optional<Rational> expect;  // exact final charge, when pinned
  std::vector<std::pair<std::string, std::string>> roles;  // (role, object)
  int line = 0;
};

// `case <name> variant <v>` / `initial p/q` / `gain p/q x n via R [note]` /
// `role full|heavy|needy|precolored <object>...` / `expect p/q` /
// `require nonneg` / `end`. Throws ParseError.
std::vector<ChargeLedger> parse_ledgers(std::string_view text);

// Tags each variant defines. R1 and R2 in cc6/cc7 stand for "some R1x" and
// "some R2x or R0" where the argument only uses a lower bound.
const std::vector<std::string>& rule_tags(Variant v);
// Allowed per-application magnitudes of a rule.
std::vector<Rational> rule_amounts(Variant v, std::string_view rule);
bool is_aggregate_rule(Variant v, std::string_view rule);

// initial + Σ amount·count. Throws LedgerError on a tag the variant lacks.
Rational evaluate_ledger(const ChargeLedger& ledger);

struct LedgerVerdict {
  std::string name;
  Variant variant = Variant::CC6;
  Rational final_charge;
  bool amounts_ok = true;  // every |amount| is a rule amount
  bool nonneg_ok = true;
  bool expect_ok = true;
  std::string detail;
  bool passed() const { return amounts_ok && nonneg_ok && expect_ok; }
};

LedgerVerdict check_ledger(const ChargeLedger& ledger);

// For every (rule, amount) received somewhere in the variant's ledgers
// there is a ledger sending that amount by that rule, and vice versa.
// Aggregate tags are exempt. Returns the unmatched pairs.
std::vector<std::string> conservation_gaps(const std::vector<ChargeLedger>& ledgers, Variant v);

struct CaseSuiteReport {
  Variant variant = Variant::CC6;
  std::vector<LedgerVerdict> cases;
  std::vector<std::string> conservation_gaps;
  bool passed() const;
};

CaseSuiteReport run_case_suite(const std::vector<ChargeLedger>& ledgers, Variant v);

// Smallest final charge of a d-vertex under the variant's rules, over every
// arrangement the argument allows. d ≥ 4.
Rational verify_vertex_bound(Variant v, int d);

// Per-edge (or, for c5, per-vertex) losses of a face, keyed by amount.
struct FaceProfile {
  std::vector<std::pair<Rational, int>> losses;
};

// Final charge of an ℓ-face losing `profile`, including the late top-up
// rules (c5 R3 on a needy 5-face, cc7 R3 on a negative 6-face). Throws
// InputError when the profile uses amounts the variant does not send or
// more than ℓ slots.
Rational verify_face_bound(Variant v, int length, const FaceProfile& profile);

// Worst case of verify_face_bound over profiles the argument allows.
Rational worst_face_bound(Variant v, int length);

struct LpReport {
  Rational integer_minimum;
  std::array<int, 3> integer_argmin{};  // (d, k, ℓ)
  Rational relaxed_minimum;
  std::array<Rational, 3> printed_certificate;
  Rational printed_row_with_5;  // a1 + 5a2 + a3
  Rational printed_row_with_4;  // a1 + 4a2 + a3
  bool printed_feasible_5 = false;
  bool printed_feasible_4 = false;
  Rational dual_optimum_5;  // best 7a1 under the printed first row
  Rational dual_optimum_4;  // best 7a1 under the row derived from 4d - 5k
  std::array<Rational, 3> certificate;
  Rational certificate_objective;
  bool certificate_feasible = false;
};

// The 7⁺-vertex linear program for cc7 over 7 ≤ d ≤ max_d.
LpReport audit_lp(int max_d = 60);

// Floor-free lower bound slope·x + offset on the final charge of a vertex of
// degree x (or a face of length x), valid for every x ≥ start. Covers the
// range past the enumerated one.
struct LinearBound {
  Rational slope, offset;
  int start = 0;
  Rational at(int x) const { return slope * x + offset; }
};

LinearBound vertex_tail_bound(Variant v);
LinearBound face_tail_bound(Variant v);

}  // namespace rcheck
