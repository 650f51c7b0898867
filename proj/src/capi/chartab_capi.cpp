#include "chartab/chartab.h"

#include "derivation.hpp"
#include "errors.hpp"
#include "indres.hpp"
#include "io.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct chartab_group {
  chartab::GroupPtr group;
};

struct chartab_table {
  std::string name;
  chartab::Derivation derivation;
};

namespace {

thread_local std::string last_error;

chartab_status fail(chartab_status s, const std::string& message)
{
  last_error = message;
  return s;
}

char* dup(const std::string& s)
{
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s)
{
  if (out)
    *out = dup(s);
}

chartab::Format to_format(chartab_format f)
{
  switch (f) {
  case CHARTAB_FORMAT_TEXT:
    return chartab::Format::text;
  case CHARTAB_FORMAT_JSON:
    return chartab::Format::json;
  case CHARTAB_FORMAT_CSV:
    return chartab::Format::csv;
  }
  throw std::invalid_argument("unknown output format");
}

// Maps the core exception hierarchy onto status codes. Order matters:
// ParseError derives from std::invalid_argument.
template <class F>
chartab_status guarded(F&& body)
{
  try {
    last_error.clear();
    return body();
  } catch (const chartab::ParseError& e) {
    return fail(CHARTAB_E_PARSE, e.what());
  } catch (const chartab::IoError& e) {
    return fail(CHARTAB_E_IO, e.what());
  } catch (const chartab::VerificationError& e) {
    return fail(CHARTAB_E_VERIFY, e.what());
  } catch (const chartab::CapacityError& e) {
    return fail(CHARTAB_E_CAPACITY, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CHARTAB_E_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(CHARTAB_E_INTERNAL, e.what());
  } catch (...) {
    return fail(CHARTAB_E_INTERNAL, "unknown exception");
  }
}

std::string lines(const std::vector<std::string>& v)
{
  std::string s;
  for (const auto& l : v)
    s += l + '\n';
  return s;
}

std::string render_sylow(const chartab::SylowReport& r, chartab::Format f)
{
  using nlohmann::json;
  json census = json::object();
  for (const auto& [ord, n] : r.order_census)
    census[std::to_string(ord)] = n;
  std::vector<std::string> gens;
  for (const auto& g : r.generators)
    gens.push_back(g.to_string());
  if (f == chartab::Format::json) {
    json j = {{"prime", r.p},           {"order", r.order},           {"abelian", r.abelian},
              {"exponent", r.exponent}, {"order_census", census},     {"orbit_sizes", r.orbit_sizes},
              {"generators", gens}};
    return j.dump(2) + '\n';
  }
  if (f == chartab::Format::csv) {
    std::string s = "element_order,count\n";
    for (const auto& [ord, n] : r.order_census)
      s += std::to_string(ord) + ',' + std::to_string(n) + '\n';
    return s;
  }
  std::string s = "Sylow " + std::to_string(r.p) + "-subgroup: order " + std::to_string(r.order) + ", " +
                  (r.abelian ? "abelian" : "non-abelian") + ", exponent " + std::to_string(r.exponent) + '\n';
  s += "element orders:";
  for (const auto& [ord, n] : r.order_census)
    s += ' ' + std::to_string(ord) + 'x' + std::to_string(n);
  s += "\norbits:";
  for (int o : r.orbit_sizes)
    s += ' ' + std::to_string(o);
  s += "\ngenerators:\n";
  for (const auto& g : gens)
    s += "  " + g + '\n';
  return s;
}

} // namespace

extern "C" {

const char* chartab_last_error(void) { return last_error.c_str(); }

const char* chartab_status_name(chartab_status status)
{
  switch (status) {
  case CHARTAB_OK:
    return "ok";
  case CHARTAB_E_PARSE:
    return "parse error";
  case CHARTAB_E_IO:
    return "i/o error";
  case CHARTAB_E_VERIFY:
    return "verification failed";
  case CHARTAB_E_CAPACITY:
    return "capacity exceeded";
  case CHARTAB_E_ARGUMENT:
    return "invalid argument";
  case CHARTAB_E_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

void chartab_string_free(char* s) { std::free(s); }

chartab_status chartab_group_load(const char* fixture_path, chartab_group** out)
{
  return guarded([&] {
    if (!fixture_path || !out)
      return fail(CHARTAB_E_ARGUMENT, "null argument");
    const auto fx = chartab::load_fixture(fixture_path);
    *out = new chartab_group{chartab::group_closure(fx.generators)};
    return CHARTAB_OK;
  });
}

chartab_status chartab_group_from_text(const char* fixture_text, chartab_group** out)
{
  return guarded([&] {
    if (!fixture_text || !out)
      return fail(CHARTAB_E_ARGUMENT, "null argument");
    const auto fx = chartab::parse_fixture(fixture_text);
    *out = new chartab_group{chartab::group_closure(fx.generators)};
    return CHARTAB_OK;
  });
}

void chartab_group_free(chartab_group* g) { delete g; }

int chartab_group_degree(const chartab_group* g) { return g ? g->group->degree() : 0; }

uint64_t chartab_group_order(const chartab_group* g) { return g ? g->group->order() : 0; }

size_t chartab_group_class_count(const chartab_group* g) { return g ? g->group->class_count() : 0; }

chartab_status chartab_group_check_sharp(const chartab_group* g, int k, char** detail)
{
  return guarded([&] {
    if (!g)
      return fail(CHARTAB_E_ARGUMENT, "null group");
    const auto rep = chartab::verify_sharp_transitivity(*g->group, k);
    const std::string msg = "sharply " + std::to_string(k) + "-transitive: " +
                            (rep.ok ? std::string("yes") : chartab::to_string(rep.reason)) +
                            (rep.detail.empty() ? "" : " (" + rep.detail + ")");
    put(detail, msg);
    return rep.ok ? CHARTAB_OK : fail(CHARTAB_E_VERIFY, msg);
  });
}

chartab_status chartab_group_render_classes(const chartab_group* g, const char* name, chartab_format format,
                                            char** out)
{
  return guarded([&] {
    if (!g || !out)
      return fail(CHARTAB_E_ARGUMENT, "null argument");
    *out = dup(chartab::render_classes(*g->group, name ? name : "", to_format(format)));
    return CHARTAB_OK;
  });
}

chartab_status chartab_group_compare_classes(const chartab_group* g, const char* golden_path, char** diff)
{
  return guarded([&] {
    if (!g || !golden_path)
      return fail(CHARTAB_E_ARGUMENT, "null argument");
    const auto cmp = chartab::compare_classes(*g->group, chartab::load_golden(golden_path));
    put(diff, lines(cmp.diffs));
    return cmp.ok ? CHARTAB_OK : fail(CHARTAB_E_VERIFY, "classes differ from " + std::string(golden_path));
  });
}

chartab_status chartab_group_sylow(const chartab_group* g, int p, uint64_t seed, chartab_format format, char** out)
{
  return guarded([&] {
    if (!g || !out)
      return fail(CHARTAB_E_ARGUMENT, "null argument");
    *out = dup(render_sylow(chartab::sylow_probe(*g->group, p, seed), to_format(format)));
    return CHARTAB_OK;
  });
}

chartab_status chartab_derive(const chartab_group* g, const char* name, const char* references_path,
                              chartab_table** out, char** failure_log)
{
  return guarded([&] {
    if (!g || !name || !out)
      return fail(CHARTAB_E_ARGUMENT, "null argument");
    chartab::References refs;
    if (references_path)
      refs = chartab::load_references(references_path);
    try {
      auto d = chartab::derive(name, g->group, references_path ? &refs : nullptr);
      *out = new chartab_table{name, std::move(d)};
    } catch (const chartab::DerivationError& e) {
      put(failure_log, e.log.to_text());
      throw;
    }
    return CHARTAB_OK;
  });
}

void chartab_table_free(chartab_table* t) { delete t; }

size_t chartab_table_size(const chartab_table* t) { return t ? t->derivation.table.rows.size() : 0; }

chartab_status chartab_table_render(const chartab_table* t, chartab_format format, char** out)
{
  return guarded([&] {
    if (!t || !out)
      return fail(CHARTAB_E_ARGUMENT, "null argument");
    *out = dup(chartab::render_table(t->derivation.table, t->name, to_format(format)));
    return CHARTAB_OK;
  });
}

chartab_status chartab_table_log(const chartab_table* t, chartab_format format, char** out)
{
  return guarded([&] {
    if (!t || !out)
      return fail(CHARTAB_E_ARGUMENT, "null argument");
    *out = dup(chartab::render_log(t->derivation.log, to_format(format)));
    return CHARTAB_OK;
  });
}

size_t chartab_table_divergences(const chartab_table* t, const char* kind, int documented)
{
  if (!t)
    return 0;
  size_t n = 0;
  for (const auto& d : t->derivation.log.divergences) {
    if (kind && chartab::to_string(d.kind) != kind)
      continue;
    if (documented >= 0 && d.documented != (documented != 0))
      continue;
    ++n;
  }
  return n;
}

chartab_status chartab_table_check(const chartab_table* t, char** report)
{
  return guarded([&] {
    if (!t)
      return fail(CHARTAB_E_ARGUMENT, "null table");
    const auto& table = t->derivation.table;
    const auto orth = chartab::verify_orthogonality(table);
    const auto central = chartab::central_character_check(table, chartab::default_central_pairs(*table.group));
    std::string s = "orthogonality: " + std::to_string(orth.row_pairs) + " row pairs, " +
                    std::to_string(orth.column_pairs) + " column pairs, " +
                    (orth.ok ? "ok" : std::to_string(orth.violations.size()) + " violations") + '\n';
    for (const auto& v : orth.violations) {
      s += std::string("  ") + (v.row ? "row " : "column ") + std::to_string(v.r) + "," + std::to_string(v.s) +
           ": expected " + v.expected.to_string() + ", got " + v.actual.to_string() + '\n';
    }
    s += "central characters: " + std::to_string(central.pairs.size()) + " class pairs, " +
         (central.ok ? "ok" : std::to_string(central.violations.size()) + " violations") + '\n';
    for (const auto& v : central.violations)
      s += "  " + v.character + " at (" + std::to_string(v.j) + "," + std::to_string(v.k) + "): " + v.what + '\n';
    put(report, s);
    return orth.ok && central.ok ? CHARTAB_OK : fail(CHARTAB_E_VERIFY, "table verification failed");
  });
}

chartab_status chartab_table_structure(const chartab_table* t, chartab_format format, char** out)
{
  return guarded([&] {
    if (!t || !out)
      return fail(CHARTAB_E_ARGUMENT, "null argument");
    const auto& table = t->derivation.table;
    const auto rep = chartab::structure_report(table);
    if (format == CHARTAB_FORMAT_JSON) {
      *out = dup(chartab::structure_to_json(rep, *table.group).dump(2) + '\n');
      return CHARTAB_OK;
    }
    if (format != CHARTAB_FORMAT_TEXT)
      return fail(CHARTAB_E_ARGUMENT, "structure reports are written as text or json");
    std::string s = "structure: " + rep.summary + '\n';
    for (const auto& k : rep.kernels)
      s += "  ker " + k.character + ": order " + std::to_string(k.order) + '\n';
    *out = dup(s);
    return CHARTAB_OK;
  });
}

chartab_status chartab_table_compare_golden(const chartab_table* t, const char* golden_path, char** diff)
{
  return guarded([&] {
    if (!t || !golden_path)
      return fail(CHARTAB_E_ARGUMENT, "null argument");
    const auto cmp = chartab::compare_table(t->derivation.table, chartab::load_golden(golden_path));
    put(diff, lines(cmp.diffs));
    return cmp.ok ? CHARTAB_OK : fail(CHARTAB_E_VERIFY, "table differs from " + std::string(golden_path));
  });
}

chartab_status chartab_mn_value(const char* lambda, const char* mu, long* out)
{
  return guarded([&] {
    if (!lambda || !mu || !out)
      return fail(CHARTAB_E_ARGUMENT, "null argument");
    const auto l = chartab::Partition::parse(lambda);
    const auto m = chartab::Partition::parse(mu);
    if (l.weight() != m.weight()) {
      return fail(CHARTAB_E_ARGUMENT, "partitions " + l.to_string() + " and " + m.to_string() +
                                          " have different weights");
    }
    *out = chartab::mn_value(l, m);
    return CHARTAB_OK;
  });
}

} // extern "C"
