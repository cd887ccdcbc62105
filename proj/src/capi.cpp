#include "rcheck/rcheck.h"

#include <new>
#include <optional>
#include <string>
#include <vector>

#include "rcheck/choosability.hpp"
#include "rcheck/config.hpp"
#include "rcheck/error.hpp"
#include "rcheck/fixture.hpp"
#include "rcheck/graph.hpp"
#include "rcheck/report.hpp"

struct rc_report {
  rcheck::RunReport report;
  std::string rendered;
};

struct rc_graph {
  rcheck::Graph g;
};

struct rc_catalog {
  std::vector<rcheck::Configuration> entries;
};

namespace {

thread_local std::string last_error;

rc_status fail(rc_status s, const char* what) {
  last_error = what;
  return s;
}

// Runs `body`, mapping the exception hierarchy onto status codes.
template <class F>
rc_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const rcheck::BudgetError& e) {
    return fail(RC_BUDGET, e.what());
  } catch (const rcheck::AuditError& e) {
    return fail(RC_VERIFY_FAILED, e.what());
  } catch (const rcheck::Error& e) {
    return fail(RC_USAGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RC_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RC_INTERNAL, e.what());
  } catch (...) {
    return fail(RC_INTERNAL, "unknown failure");
  }
}

rcheck::RunOptions options(rc_budget budget) {
  rcheck::RunOptions o;
  if (budget) o.node_budget = budget;
  return o;
}

rc_status hand_over(rcheck::RunReport report, rc_report** out) {
  const int status = report.exit_status();
  *out = new rc_report{std::move(report), {}};
  if (status == 1) last_error = "verification failed";
  if (status == 3) last_error = "search budget exceeded";
  return static_cast<rc_status>(status);
}

}  // namespace

extern "C" {

const char* rc_version(void) { return "1.0.0"; }

const char* rc_last_error(void) { return last_error.c_str(); }

rc_status rc_verify_catalog(const char* const* paths, size_t n_paths, const char* orientations_path,
                            rc_budget budget, rc_report** out) {
  if (!out) return fail(RC_USAGE, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    std::vector<std::string> p;
    for (size_t i = 0; i < n_paths; ++i) {
      if (!paths[i]) throw rcheck::InputError("null catalog path");
      p.emplace_back(paths[i]);
    }
    std::optional<std::string> arcs;
    if (orientations_path) arcs = orientations_path;
    return hand_over(rcheck::cmd_verify_catalog(p, arcs, options(budget)), out);
  });
}

rc_status rc_verify_merges(const char* catalog_path, const char* const* names, size_t n_names,
                           int forbidden_len, rc_budget budget, rc_report** out) {
  if (!out) return fail(RC_USAGE, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    if (!catalog_path) throw rcheck::InputError("null catalog path");
    std::vector<std::string> n;
    for (size_t i = 0; names && i < n_names; ++i) {
      if (!names[i]) throw rcheck::InputError("null entry name");
      n.emplace_back(names[i]);
    }
    return hand_over(rcheck::cmd_verify_merges(catalog_path, n, forbidden_len, options(budget)), out);
  });
}

rc_status rc_audit_discharging(const char* fixtures_dir, const char* variant, rc_report** out) {
  if (!out) return fail(RC_USAGE, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    if (!fixtures_dir) throw rcheck::InputError("null fixtures directory");
    std::optional<rcheck::Variant> v;
    if (variant) v = rcheck::parse_variant(variant);
    return hand_over(rcheck::cmd_audit_discharging(fixtures_dir, v), out);
  });
}

rc_status rc_find_at(const char* path, const char* name, const char* f_spec, rc_report** out) {
  if (!out) return fail(RC_USAGE, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    if (!path || !name) throw rcheck::InputError("null path or name");
    return hand_over(rcheck::cmd_find_at(path, name, f_spec ? f_spec : ""), out);
  });
}

int rc_report_passed(const rc_report* r) { return r && r->report.passed() ? 1 : 0; }

size_t rc_report_item_count(const rc_report* r) { return r ? r->report.items.size() : 0; }

const char* rc_report_field(const rc_report* r, size_t index, int field) {
  if (!r || index >= r->report.items.size()) return nullptr;
  const rcheck::ReportItem& i = r->report.items[index];
  switch (field) {
    case 0: return i.suite.c_str();
    case 1: return i.item.c_str();
    case 2: return i.verdict.c_str();
    case 3: return i.value.c_str();
    case 4: return i.detail.c_str();
    default: return nullptr;
  }
}

int rc_report_item_passed(const rc_report* r, size_t index) {
  if (!r || index >= r->report.items.size()) return 0;
  return r->report.items[index].passed ? 1 : 0;
}

const char* rc_report_render(rc_report* r, rc_format format) {
  if (!r) return nullptr;
  r->rendered = format == RC_FORMAT_RECORD ? r->report.render_records() : r->report.render_text();
  return r->rendered.c_str();
}

void rc_report_free(rc_report* r) { delete r; }

rc_status rc_graph_load(const char* path, const char* name, rc_graph** out) {
  if (!out) return fail(RC_USAGE, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    if (!path || !name) throw rcheck::InputError("null path or name");
    for (const rcheck::FixtureBlock& b : rcheck::parse_fixtures(rcheck::read_file(path))) {
      if (b.name == name) {
        *out = new rc_graph{b.graph};
        return RC_OK;
      }
    }
    throw rcheck::InputError(std::string("no block named '") + name + "'");
  });
}

int rc_graph_vertex_count(const rc_graph* g) { return g ? g->g.vertex_count() : 0; }

int rc_graph_edge_count(const rc_graph* g) { return g ? g->g.edge_count() : 0; }

int rc_graph_degree(const rc_graph* g, int v) {
  if (!g || v < 0 || v >= g->g.vertex_count()) return -1;
  return g->g.degree(v);
}

rc_status rc_graph_contains_chorded_cycle(const rc_graph* g, int len, int* out) {
  if (!g || !out) return fail(RC_USAGE, "null argument");
  return guarded([&] {
    if (len < 4) throw rcheck::InputError("a chorded cycle has at least 4 vertices");
    *out = rcheck::contains_chorded_cycle(g->g, len) ? 1 : 0;
    return RC_OK;
  });
}

void rc_graph_free(rc_graph* g) { delete g; }

rc_status rc_catalog_load(const char* path, rc_catalog** out) {
  if (!out) return fail(RC_USAGE, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    if (!path) throw rcheck::InputError("null path");
    *out = new rc_catalog{rcheck::load_catalog(rcheck::read_file(path))};
    return RC_OK;
  });
}

size_t rc_catalog_size(const rc_catalog* c) { return c ? c->entries.size() : 0; }

const char* rc_catalog_name(const rc_catalog* c, size_t index) {
  if (!c || index >= c->entries.size()) return nullptr;
  return c->entries[index].name.c_str();
}

rc_status rc_catalog_is_reducible(const rc_catalog* c, size_t index, rc_budget budget, int* out) {
  if (!c || !out) return fail(RC_USAGE, "null argument");
  if (index >= c->entries.size()) return fail(RC_USAGE, "catalog index out of range");
  return guarded([&] {
    *out = rcheck::is_reducible(c->entries[index], options(budget).node_budget).choosable ? 1 : 0;
    return RC_OK;
  });
}

void rc_catalog_free(rc_catalog* c) { delete c; }

}  // extern "C"
