#include "support.hpp"

#include <doctest.h>

#include <regex>
#include <set>

using namespace chartab;
using testing::derived;
using testing::group;
using testing::references;

namespace {

std::vector<long> degrees(const CharacterTable& t)
{
  std::vector<long> d;
  for (const auto& r : t.rows)
    d.push_back(r.chi.degree());
  return d;
}

const StepCheck* find_check(const DerivationLog& log, const std::string& key)
{
  for (const auto& s : log.steps)
    for (const auto& c : s.checks)
      if (c.key == key)
        return &c;
  return nullptr;
}

TableComparison against_golden(const std::string& name)
{
  return compare_table(derived(name).table, load_golden(testing::fixture("golden/" + name + ".json")));
}

} // namespace

TEST_CASE("G9")
{
  const auto& t = derived("g9").table;
  CHECK(degrees(t) == std::vector<long>{1, 1, 1, 1, 2, 8});
  CHECK(t.at("chi_5") == ClassFunction(t.group, testing::ints({8, 0, -1, 0, 0, 0})));
  CHECK(verify_orthogonality(t).ok);
  CHECK(against_golden("g9").ok);
}

TEST_CASE("G10")
{
  const auto d = derive("g10", group("g10"), &references());
  CHECK(degrees(d.table) == std::vector<long>{1, 1, 9, 9, 10, 10, 10, 16});
  const auto a = static_cast<std::size_t>(testing::class_index(*d.table.group, "2^1 8^1_A"));
  const auto b = static_cast<std::size_t>(testing::class_index(*d.table.group, "2^1 8^1_B"));
  CHECK(d.table.at("chi_5")[a] == sqrt_rational(-2));
  CHECK(d.table.at("chi_5")[b] == -sqrt_rational(-2));
  CHECK(d.table.at("chi_6")[a] == -sqrt_rational(-2));

  const auto* cd = find_check(d.log, "g10.ip.chi_C.chi_D");
  REQUIRE(cd != nullptr);
  CHECK(cd->computed == "2");
  CHECK(cd->matches);
  CHECK(against_golden("g10").ok);
}

TEST_CASE("G11")
{
  const auto d = derive("g11", group("g11"), &references());
  const auto* lin = find_check(d.log, "g11.col.2^4.linear");
  REQUIRE(lin != nullptr);
  CHECK(lin->computed == "5x+8y=-10");
  CHECK(lin->matches);
  const auto* y7 = find_check(d.log, "g11.value.y7");
  REQUIRE(y7 != nullptr);
  CHECK(CycNum::parse(y7->computed) == gauss_quadratic(11));
  CHECK(find_check(d.log, "g11.degrees")->computed == "10,16");
  CHECK(against_golden("g11").ok);
}

TEST_CASE("G12")
{
  const auto d = derive("g12", group("g12"), &references());
  const auto& t = d.table;
  CHECK(t.rows.size() == 15);
  CHECK(t.at("chi_3").degree() == 16);
  const auto e = static_cast<std::size_t>(testing::class_index(*t.group, "11^1_A"));
  CHECK(t.at("chi_3")[e] == gauss_quadratic(11));
  CHECK(t.at("chi_4")[e] == gauss_quadratic(11).conj());
  CHECK(verify_orthogonality(t).ok);

  // The golden table disagrees only in chi_8 and chi_9 at the two order-4
  // classes, and the golden rows there fail orthogonality.
  const auto cmp = against_golden("g12");
  CHECK_FALSE(cmp.ok);
  CHECK(cmp.rows_matched == 13);
  CHECK(cmp.diffs.size() == 4);
  const auto golden = load_golden(testing::fixture("golden/g12.json"));
  CharacterTable printed{t.group, {}};
  for (const auto& [name, lits] : golden.rows) {
    std::vector<CycNum> v;
    for (const auto& l : lits)
      v.push_back(CycNum::parse(l));
    printed.rows.push_back({name, ClassFunction(t.group, v)});
  }
  CHECK_FALSE(verify_orthogonality(printed).ok);
}

TEST_CASE("G12 replay divergences are frozen")
{
  const auto d = derive("g12", group("g12"), &references());
  std::set<std::string> documented, inner;
  for (const auto& v : d.log.divergences) {
    if (v.documented)
      documented.insert(v.key);
    if (v.kind == DivergenceKind::inner_product)
      inner.insert(v.key);
  }
  CHECK(documented == std::set<std::string>{"g12.overlap.chi_F", "g12.row.chi_1"});
  CHECK(inner == std::set<std::string>{"g12.ip.chi_(7,5).chi_6", "g12.ip.chi_(7,5).chi_8", "g12.ip.chi_V.chi_5",
                                       "g12.ip.chi_V.chi_9"});
  const auto* gram = find_check(d.log, "g12.ip.chi_W.chi_W");
  REQUIRE(gram != nullptr);
  CHECK(gram->computed == "4");
  CHECK(gram->matches);
  const auto* f = find_check(d.log, "g12.overlap.chi_F");
  REQUIRE(f != nullptr);
  CHECK(f->computed == "delta+epsilon");
  CHECK(*f->printed == "gamma+epsilon");
}

TEST_CASE("log format")
{
  const std::string text = derived("g10").log.to_text();
  const std::regex step(R"(STEP \d+: .+ \[cite: g(9|10):[a-z0-9-]+\] -> .+ \(degree (\d+|-), norm (\d+|-)\))");
  int steps = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("STEP ", 0) == 0) {
      CHECK(std::regex_match(line, step));
      ++steps;
    }
  }
  CHECK(steps > 5);
  CHECK(text.find("(degree 16, norm 1)") != std::string::npos);
}

TEST_CASE("structure reports")
{
  const auto r12 = structure_report(derived("g12").table);
  CHECK(r12.simple);
  CHECK(r12.summary == "simple: all 14 nontrivial irreducibles faithful");
  CHECK(structure_report(derived("g11").table).simple);

  const auto r10 = structure_report(derived("g10").table);
  CHECK_FALSE(r10.simple);
  CHECK(r10.index2_kernel == 360u);
  CHECK(r10.unique_proper_kernel);
  CHECK(r10.no_involution_outside);

  const auto r9 = structure_report(derived("g9").table);
  CHECK_FALSE(r9.simple);
  CHECK(r9.proper_kernel_orders == std::vector<std::uint64_t>{9, 36, 36, 36});
}

TEST_CASE("row ordering and column permutations")
{
  CharacterTable t = derived("g10").table;
  std::swap(t.rows[1], t.rows[6]);
  std::swap(t.rows[5], t.rows[6]);
  sort_rows(t);
  const auto& ref = derived("g10").table;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    CHECK(t.rows[i].name == ref.rows[i].name);

  const auto perms = column_permutations(*group("g9"));
  CHECK(perms.size() == 6);
  CHECK(perms.front() == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(column_permutations(*group("g12")).size() == 2);
}

TEST_CASE("derivations are deterministic")
{
  const auto a = derive("g12", group("g12"), &references());
  const auto b = derive("g12", group("g12"), &references());
  CHECK(a.log.to_text() == b.log.to_text());
  CHECK(render_table(a.table, "g12", Format::json) == render_table(b.table, "g12", Format::json));
  CHECK(log_to_json(a.log).dump() == log_to_json(b.log).dump());
}

TEST_CASE("derivation on the wrong group fails at the first structural check")
{
  CHECK_THROWS_AS(derive("g13", group("g9")), std::invalid_argument);
  for (const auto& [name, host] : std::vector<std::pair<std::string, std::string>>{{"g9", "g10"}, {"g11", "g10"}}) {
    try {
      derive(name, group(host));
      FAIL("expected a derivation error");
    } catch (const DerivationError& e) {
      CHECK(std::string(e.what()).rfind("g9: fixed-point-free", 0) == 0);
    }
  }
}
