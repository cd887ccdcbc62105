#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "rcheck/error.hpp"
#include "rcheck/report.hpp"

using namespace rcheck;

namespace {

const std::string kDir = RCHECK_FIXTURES_DIR;

std::string temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("rcheck-" + name);
  std::ofstream(p) << text;
  return p.string();
}

const ReportItem* item(const RunReport& r, const std::string& suite, const std::string& name) {
  for (const ReportItem& i : r.items)
    if (i.suite == suite && i.item == name) return &i;
  return nullptr;
}

}  // namespace

TEST_CASE("report rendering and exit status") {
  RunReport r;
  CHECK(r.passed());
  CHECK(r.exit_status() == 0);
  ReportItem a;
  a.suite = "s";
  a.item = "with\ttab";
  a.verdict = "pass";
  a.value = "1/2";
  a.passed = true;
  a.seconds = 1.5;
  r.items.push_back(a);
  CHECK(r.render_records() == "s\twith tab\tpass\t1/2\t\n");
  CHECK(r.render_text().find("1 items, 0 failed") != std::string::npos);
  ReportItem b = a;
  b.passed = false;
  b.budget = true;
  r.items.push_back(b);
  CHECK(r.exit_status() == 3);
  CHECK(r.budget_exceeded());
  ReportItem c = a;
  c.passed = false;
  r.items.push_back(c);
  CHECK(r.exit_status() == 1);
  CHECK_FALSE(r.passed());
}

TEST_CASE("catalog command") {
  const RunReport r = cmd_verify_catalog({kDir + "/catalog.fix"}, kDir + "/orientations.fix", {});
  CHECK(r.passed());
  CHECK(r.items.size() == 1 + 22 + 11);
  CHECK(r.render_records() == cmd_verify_catalog({kDir + "/catalog.fix"}, kDir + "/orientations.fix", {}).render_records());

  const RunReport bad = cmd_verify_catalog({kDir + "/small.fix"}, std::nullopt, {});
  CHECK(bad.exit_status() == 1);
  const ReportItem* tri = item(bad, "catalog", "triangle-f2");
  REQUIRE(tri);
  CHECK(tri->verdict == "not-reducible");
  CHECK(tri->detail == "v0={0,1} v1={0,1} v2={0,1}");
  CHECK(item(bad, "catalog", "single-x")->passed);

  CHECK_THROWS_AS(cmd_verify_catalog({kDir + "/missing.fix"}, std::nullopt, {}), InputError);
  CHECK_THROWS_AS(cmd_verify_catalog({}, std::nullopt, {}), InputError);
  const std::string broken = temp_file("broken.fix", "config x\nvertices two\nend\n");
  CHECK_THROWS_AS(cmd_verify_catalog({broken}, std::nullopt, {}), ParseError);

  RunOptions tiny;
  tiny.node_budget = 5;
  const RunReport stopped = cmd_verify_catalog({kDir + "/catalog.fix"}, std::nullopt, tiny);
  CHECK(stopped.budget_exceeded());
  CHECK(stopped.exit_status() == 3);
}

TEST_CASE("merge command") {
  const RunReport d1 = cmd_verify_merges(kDir + "/catalog.fix", {"d1"}, 5, {});
  CHECK(d1.passed());
  REQUIRE(item(d1, "merges", "d1 3-6"));
  CHECK(item(d1, "merges", "d1 3-6")->verdict == "candidate");
  CHECK(item(d1, "merges", "d1 list 3-6")->verdict == "reducible");
  CHECK(item(d1, "merges", "d1 triples")->verdict == "none");

  const RunReport single = cmd_verify_merges(kDir + "/small.fix", {"single-x"}, 5, {});
  REQUIRE(single.items.size() == 1);
  CHECK(single.items[0].item == "single-x triples");
  CHECK(single.passed());

  CHECK_THROWS_AS(cmd_verify_merges(kDir + "/catalog.fix", {"d1"}, 3, {}), InputError);
  CHECK_THROWS_AS(cmd_verify_merges(kDir + "/catalog.fix", {"nope"}, 5, {}), InputError);
  CHECK(default_merge_entries().size() == 12);
}

TEST_CASE("discharging command") {
  const RunReport cc6 = cmd_audit_discharging(kDir, Variant::CC6);
  CHECK(cc6.passed());
  CHECK(item(cc6, "cc6", "cc6-K3")->value == "0");
  CHECK(item(cc6, "cc6", "conservation")->passed);
  CHECK(item(cc6, "cc6", "vertex-bound 4..60")->value == "0");
  CHECK(item(cc6, "cc6", "charge-sum tetrahedron")->value == "-8");
  CHECK(item(cc6, "cc6", "charge-sum tetrahedron-K3") == nullptr);
  CHECK(item(cc6, "cc6", "lp certificate") == nullptr);

  const RunReport cc7 = cmd_audit_discharging(kDir, Variant::CC7);
  CHECK(cc7.passed());
  const ReportItem* printed = item(cc7, "cc7", "lp printed certificate");
  REQUIRE(printed);
  CHECK(printed->verdict == "discrepancy");
  CHECK(printed->detail.find("43/40") != std::string::npos);
  CHECK(item(cc7, "cc7", "lp certificate")->value == "23/40,3/40,1/8");
  CHECK(item(cc7, "cc7", "lp integer minimum")->value == "17/4");
  CHECK(item(cc7, "cc7", "charge-sum tetrahedron-K3")->value == "-1");

  const RunReport all = cmd_audit_discharging(kDir, std::nullopt);
  CHECK(all.passed());
  CHECK(all.render_records() == cmd_audit_discharging(kDir, std::nullopt).render_records());
  CHECK_THROWS_AS(cmd_audit_discharging("/nonexistent", std::nullopt), InputError);
}

TEST_CASE("find-at command") {
  const RunReport sq = cmd_find_at(kDir + "/small.fix", "square", "2");
  CHECK(sq.passed());
  CHECK(sq.items[0].value == "EE=2 EO=0");
  const RunReport tri = cmd_find_at(kDir + "/small.fix", "triangle", "2");
  CHECK(tri.items[0].verdict == "none");
  CHECK(tri.exit_status() == 1);
  CHECK(cmd_find_at(kDir + "/catalog.fix", "d1", "").passed());
  CHECK(cmd_find_at(kDir + "/small.fix", "square", "2,2,2,2").passed());
  CHECK_THROWS_AS(cmd_find_at(kDir + "/small.fix", "k55", "3"), BudgetError);
  CHECK_THROWS_AS(cmd_find_at(kDir + "/small.fix", "square", "2,2"), InputError);
  CHECK_THROWS_AS(cmd_find_at(kDir + "/small.fix", "square", "x"), InputError);
  CHECK_THROWS_AS(cmd_find_at(kDir + "/small.fix", "square", ""), InputError);
  CHECK_THROWS_AS(cmd_find_at(kDir + "/small.fix", "missing", "2"), InputError);
}
