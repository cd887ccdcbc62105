// Command-line driver. Talks to the library only through rcheck.h.

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcheck/rcheck.h"

namespace {

struct Globals {
  std::string fixtures = RCHECK_FIXTURES_DIR;
  std::string format = "text";
  std::uint64_t budget = 0;
};

std::string in_fixtures(const Globals& g, const char* file) {
  return (std::filesystem::path(g.fixtures) / file).string();
}

// Prints the report (if any) and folds its status into `worst`.
void emit(rc_status s, rc_report* r, const Globals& g, int& worst) {
  if (r) {
    std::fputs(rc_report_render(r, g.format == "record" ? RC_FORMAT_RECORD : RC_FORMAT_TEXT), stdout);
    rc_report_free(r);
  }
  if (s != RC_OK && s != RC_VERIFY_FAILED) std::fprintf(stderr, "rcheck: %s\n", rc_last_error());
  // A failed verdict outranks a budget stop; usage and internal errors
  // outrank both.
  auto rank = [](int c) { return c == 0 ? 0 : c == 3 ? 1 : c == 1 ? 2 : 3; };
  if (rank(s) > rank(worst)) worst = s;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const std::string& s : v) out.push_back(s.c_str());
  return out;
}

int verify_catalog(const Globals& g, std::vector<std::string> paths, bool with_arcs) {
  std::string arcs;
  if (paths.empty()) {
    paths.push_back(in_fixtures(g, "catalog.fix"));
    if (with_arcs) arcs = in_fixtures(g, "orientations.fix");
  }
  const auto p = c_strings(paths);
  rc_report* r = nullptr;
  int worst = 0;
  const rc_status s = rc_verify_catalog(p.data(), p.size(), arcs.empty() ? nullptr : arcs.c_str(), g.budget, &r);
  emit(s, r, g, worst);
  return worst;
}

int verify_merges(const Globals& g, const std::vector<std::string>& names, int len) {
  const auto n = c_strings(names);
  const std::string cat = in_fixtures(g, "catalog.fix");
  rc_report* r = nullptr;
  int worst = 0;
  const rc_status s = rc_verify_merges(cat.c_str(), n.data(), n.size(), len, g.budget, &r);
  emit(s, r, g, worst);
  return worst;
}

int audit(const Globals& g, const std::string& variant) {
  rc_report* r = nullptr;
  int worst = 0;
  const rc_status s = rc_audit_discharging(g.fixtures.c_str(), variant.empty() ? nullptr : variant.c_str(), &r);
  emit(s, r, g, worst);
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reducibility and discharging checks for (4,2)-choosability"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  Globals g;
  app.add_option("--fixtures", g.fixtures, "Fixture directory")->capture_default_str();
  app.add_option("--format", g.format, "text or record")
      ->check(CLI::IsMember({"text", "record"}))
      ->capture_default_str();
  app.add_option("--budget", g.budget, "Node budget per choosability search (0 = default)");
  app.add_flag_callback("--version", [] {
    std::printf("%s\n", rc_version());
    throw CLI::Success();
  });

  auto* cat = app.add_subcommand("verify-catalog", "Check every catalog entry is reducible");
  std::vector<std::string> paths;
  bool no_arcs = false;
  cat->add_option("paths", paths, "Catalog files (default: the shipped catalog)");
  cat->add_flag("--no-orientations", no_arcs, "Skip the Alon-Tarsi certificates");

  auto* merges = app.add_subcommand("verify-merges", "Classify vertex identifications of large entries");
  std::vector<std::string> names;
  int len = 5;
  merges->add_option("entries", names, "Catalog entries (default: the large ones)");
  merges->add_option("--forbidden-len", len, "Length of the forbidden chorded cycle")->capture_default_str();

  auto* dis = app.add_subcommand("audit-discharging", "Evaluate charge ledgers, bounds and the LP");
  std::string variant;
  dis->add_option("--variant", variant, "c5, cc6, dcc67 or cc7 (default: all)")
      ->check(CLI::IsMember({"c5", "cc6", "dcc67", "cc7"}));

  auto* at = app.add_subcommand("find-at", "Search for an Alon-Tarsi orientation");
  std::string graph, name, f;
  at->add_option("--graph", graph, "Fixture file")->required();
  at->add_option("--name", name, "Block name")->required();
  at->add_option("--f", f, "List size, one value or one per vertex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : RC_USAGE;
  }

  if (*cat) return verify_catalog(g, paths, !no_arcs);
  if (*merges) return verify_merges(g, names, len);
  if (*dis) return audit(g, variant);
  if (*at) {
    rc_report* r = nullptr;
    int worst = 0;
    const rc_status s = rc_find_at(graph.c_str(), name.c_str(), f.c_str(), &r);
    emit(s, r, g, worst);
    return worst;
  }

  // No subcommand: the full shipped suite.
  int worst = 0;
  for (int code : {verify_catalog(g, {}, true), verify_merges(g, {}, 5), audit(g, "")}) {
    auto rank = [](int c) { return c == 0 ? 0 : c == 3 ? 1 : c == 1 ? 2 : 3; };
    if (rank(code) > rank(worst)) worst = code;
  }
  return worst;
}
