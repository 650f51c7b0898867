// Command-line front end. Links only the C API.
#include "chartab/chartab.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string group;
  std::string fixture;
  std::string format = "text";
  std::string output;
  std::string log;
  bool golden = false;
  std::string golden_file;
  std::uint64_t seed = 0;
  int verbose = 0;
  std::string lambda;
  std::string mu;
  int prime = 0;
};

struct Failure {
  int code;
};

struct StringDeleter {
  void operator()(char* s) const { chartab_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GroupDeleter {
  void operator()(chartab_group* g) const { chartab_group_free(g); }
};
struct TableDeleter {
  void operator()(chartab_table* t) const { chartab_table_free(t); }
};

int exit_code(chartab_status s)
{
  return s == CHARTAB_OK ? kExitOk : s == CHARTAB_E_VERIFY ? kExitVerify : kExitUsage;
}

// Throws Failure after reporting anything but OK.
void check(chartab_status s, const std::string& what)
{
  if (s == CHARTAB_OK)
    return;
  std::cerr << "chartab: " << what << ": " << chartab_last_error() << '\n';
  throw Failure{exit_code(s)};
}

std::string take(char* s)
{
  CString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string fixture_dir()
{
  if (const char* env = std::getenv("CHARTAB_FIXTURES"); env && *env)
    return env;
  return CHARTAB_FIXTURE_DIR;
}

chartab_format format_of(const std::string& name)
{
  if (name == "json")
    return CHARTAB_FORMAT_JSON;
  if (name == "csv")
    return CHARTAB_FORMAT_CSV;
  return CHARTAB_FORMAT_TEXT;
}

void emit(const Config& cfg, const std::string& content)
{
  if (cfg.output.empty()) {
    std::cout << content << std::flush;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out || !(out << content)) {
    std::cerr << "chartab: cannot write " << cfg.output << '\n';
    throw Failure{kExitUsage};
  }
}

void write_side_file(const std::string& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) {
    std::cerr << "chartab: cannot write " << path << '\n';
    throw Failure{kExitUsage};
  }
}

std::string fixture_path(const Config& cfg)
{
  return cfg.fixture.empty() ? fixture_dir() + "/" + cfg.group + ".gens" : cfg.fixture;
}

std::string golden_path(const Config& cfg)
{
  return cfg.golden_file.empty() ? fixture_dir() + "/golden/" + cfg.group + ".json" : cfg.golden_file;
}

std::optional<std::string> references_path()
{
  const std::string p = fixture_dir() + "/golden/steps.json";
  if (std::filesystem::exists(p))
    return p;
  return std::nullopt;
}

std::unique_ptr<chartab_group, GroupDeleter> load_group(const Config& cfg)
{
  chartab_group* g = nullptr;
  check(chartab_group_load(fixture_path(cfg).c_str(), &g), "loading fixture");
  return std::unique_ptr<chartab_group, GroupDeleter>(g);
}

int sharp_k(const Config& cfg) { return std::stoi(cfg.group.substr(1)) - 7; }

std::unique_ptr<chartab_table, TableDeleter> run_derivation(const Config& cfg, const chartab_group* g)
{
  const auto refs = references_path();
  chartab_table* t = nullptr;
  char* failure_log = nullptr;
  const chartab_status s = chartab_derive(g, cfg.group.c_str(), refs ? refs->c_str() : nullptr, &t, &failure_log);
  const std::string partial = take(failure_log);
  if (s != CHARTAB_OK && !partial.empty()) {
    if (!cfg.log.empty())
      write_side_file(cfg.log, partial);
    std::cerr << partial;
  }
  check(s, "deriving " + cfg.group);
  return std::unique_ptr<chartab_table, TableDeleter>(t);
}

int cmd_classes(const Config& cfg)
{
  auto g = load_group(cfg);
  char* text = nullptr;
  check(chartab_group_render_classes(g.get(), cfg.group.c_str(), format_of(cfg.format), &text), "rendering classes");
  emit(cfg, take(text));

  int rc = kExitOk;
  char* detail = nullptr;
  const chartab_status sharp = chartab_group_check_sharp(g.get(), sharp_k(cfg), &detail);
  const std::string sharp_text = take(detail);
  if (sharp != CHARTAB_OK) {
    std::cerr << "chartab: " << (sharp_text.empty() ? chartab_last_error() : sharp_text) << '\n';
    rc = exit_code(sharp);
  } else if (cfg.verbose) {
    std::cerr << sharp_text << '\n';
  }
  if (cfg.golden) {
    char* diff = nullptr;
    const chartab_status s = chartab_group_compare_classes(g.get(), golden_path(cfg).c_str(), &diff);
    const std::string d = take(diff);
    if (s != CHARTAB_OK) {
      std::cerr << "chartab: " << chartab_last_error() << '\n' << d;
      rc = std::max(rc, exit_code(s));
    } else if (cfg.verbose) {
      std::cerr << "classes agree with " << golden_path(cfg) << '\n';
    }
  }
  return rc;
}

int cmd_derive(const Config& cfg)
{
  auto g = load_group(cfg);
  auto t = run_derivation(cfg, g.get());
  char* text = nullptr;
  check(chartab_table_render(t.get(), format_of(cfg.format), &text), "rendering table");
  emit(cfg, take(text));

  const chartab_format log_format = cfg.format == "json" ? CHARTAB_FORMAT_JSON : CHARTAB_FORMAT_TEXT;
  if (!cfg.log.empty() || cfg.verbose) {
    char* log = nullptr;
    check(chartab_table_log(t.get(), log_format, &log), "rendering log");
    const std::string l = take(log);
    if (!cfg.log.empty())
      write_side_file(cfg.log, l);
    else
      std::cerr << l;
  }
  if (!cfg.golden)
    return kExitOk;
  char* diff = nullptr;
  const chartab_status s = chartab_table_compare_golden(t.get(), golden_path(cfg).c_str(), &diff);
  const std::string d = take(diff);
  if (s != CHARTAB_OK) {
    std::cerr << "chartab: " << chartab_last_error() << '\n' << d;
    return exit_code(s);
  }
  if (cfg.verbose)
    std::cerr << "table agrees with " << golden_path(cfg) << '\n';
  return kExitOk;
}

int cmd_verify(const Config& cfg)
{
  auto g = load_group(cfg);
  int rc = kExitOk;
  std::string report;
  auto record = [&](chartab_status s, const std::string& text) {
    report += text;
    if (s != CHARTAB_OK) {
      if (text.empty())
        report += std::string("FAILED: ") + chartab_last_error() + '\n';
      rc = std::max(rc, exit_code(s));
    }
  };

  char* detail = nullptr;
  const chartab_status sharp = chartab_group_check_sharp(g.get(), sharp_k(cfg), &detail);
  record(sharp, take(detail) + '\n');

  auto t = run_derivation(cfg, g.get());
  char* check_report = nullptr;
  const chartab_status checked = chartab_table_check(t.get(), &check_report);
  record(checked, take(check_report));

  char* structure = nullptr;
  check(chartab_table_structure(t.get(), CHARTAB_FORMAT_TEXT, &structure), "structure report");
  report += take(structure);

  const std::size_t undocumented = chartab_table_divergences(t.get(), "inner_product", 0);
  const std::size_t all = chartab_table_divergences(t.get(), nullptr, -1);
  const std::size_t documented = chartab_table_divergences(t.get(), nullptr, 1);
  report += "replay: " + std::to_string(all) + " divergences from printed values, " + std::to_string(documented) +
            " documented, " + std::to_string(undocumented) + " undocumented inner products\n";

  if (cfg.golden) {
    char* diff = nullptr;
    chartab_status s = chartab_group_compare_classes(g.get(), golden_path(cfg).c_str(), &diff);
    std::string d = take(diff);
    record(s, std::string("classes vs golden: ") + (s == CHARTAB_OK ? "agree\n" : "differ\n") + d);
    s = chartab_table_compare_golden(t.get(), golden_path(cfg).c_str(), &diff);
    d = take(diff);
    record(s, std::string("table vs golden: ") + (s == CHARTAB_OK ? "agree\n" : "differ\n") + d);
    if (undocumented > 0)
      rc = std::max(rc, kExitVerify);
  }
  report += rc == kExitOk ? "verify: ok\n" : "verify: FAILED\n";
  emit(cfg, report);
  return rc;
}

int cmd_mn(const Config& cfg)
{
  long v = 0;
  check(chartab_mn_value(cfg.lambda.c_str(), cfg.mu.c_str(), &v), "mn");
  emit(cfg, std::to_string(v) + '\n');
  return kExitOk;
}

int cmd_sylow(const Config& cfg)
{
  auto g = load_group(cfg);
  char* text = nullptr;
  check(chartab_group_sylow(g.get(), cfg.prime, cfg.seed, format_of(cfg.format), &text), "sylow probe");
  emit(cfg, take(text));
  return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact character tables of the small sharply transitive groups"};
  app.require_subcommand(1);
  Config cfg;

  const auto groups = CLI::IsMember({"g9", "g10", "g11", "g12"});
  const auto formats = CLI::IsMember({"text", "json", "csv"});
  auto common = [&](CLI::App* sub, bool needs_group) {
    auto* opt = sub->add_option("--group", cfg.group, "g9, g10, g11 or g12")->check(groups);
    if (needs_group)
      opt->required();
    sub->add_option("--fixture", cfg.fixture, "generator file (default: <fixtures>/<group>.gens)");
    sub->add_option("--format", cfg.format, "text, json or csv")->check(formats);
    sub->add_option("--output", cfg.output, "write the report here instead of stdout");
    sub->add_flag("-v,--verbose", cfg.verbose, "progress and logs on stderr");
  };
  auto golden = [&](CLI::App* sub) {
    sub->add_flag("--golden", cfg.golden, "compare against the golden file");
    sub->add_option("--golden-file", cfg.golden_file, "golden JSON (default: <fixtures>/golden/<group>.json)");
  };

  auto* classes = app.add_subcommand("classes", "conjugacy classes of a fixture group");
  common(classes, true);
  golden(classes);

  auto* derive = app.add_subcommand("derive", "derive the character table and its log");
  common(derive, true);
  golden(derive);
  derive->add_option("--log", cfg.log, "write the derivation log here");

  auto* verify = app.add_subcommand("verify", "orthogonality, class algebra, structure and replay checks");
  common(verify, true);
  golden(verify);
  verify->add_option("--log", cfg.log, "write the failure log here");

  auto* mn = app.add_subcommand("mn", "symmetric-group character value");
  mn->add_option("--lambda", cfg.lambda, "partition, e.g. 9,3")->required();
  mn->add_option("--mu", cfg.mu, "cycle type, e.g. 2,2,2,2,1,1,1,1")->required();
  mn->add_option("--output", cfg.output, "write the value here instead of stdout");

  auto* sylow = app.add_subcommand("sylow", "seeded Sylow subgroup probe");
  common(sylow, true);
  sylow->add_option("--prime", cfg.prime, "prime dividing the group order")->required();
  sylow->add_option("--seed", cfg.seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classes)
      return cmd_classes(cfg);
    if (*derive)
      return cmd_derive(cfg);
    if (*verify)
      return cmd_verify(cfg);
    if (*mn)
      return cmd_mn(cfg);
    return cmd_sylow(cfg);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "chartab: " << e.what() << '\n';
    return kExitUsage;
  }
}
