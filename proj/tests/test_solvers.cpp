#include "support.hpp"

#include <doctest.h>

using namespace chartab;
using testing::derived;
using testing::group;

namespace {

CharacterTable keep(const CharacterTable& t, const std::vector<std::string>& names)
{
  CharacterTable out{t.group, {}};
  for (const auto& n : names)
    out.rows.push_back({n, t.at(n)});
  return out;
}

const ColumnEquation& column(const ConjugateColumnsReport& r, const std::string& label)
{
  for (const auto& eq : r.real_columns)
    if (eq.column == label)
      return eq;
  throw std::invalid_argument("no column " + label);
}

} // namespace

TEST_CASE("degree pairs")
{
  CHECK(solve_degree_pair(712, 2) == std::vector<std::vector<long>>{{10, 16}});
  CHECK(solve_degree_pair(16, 2) == std::vector<std::vector<long>>{{2, 2}});
  CHECK(solve_degree_pair(50, 2) == std::vector<std::vector<long>>{{3, 4}});
  CHECK(solve_degree_pair(100, 2) == std::vector<std::vector<long>>{{1, 7}, {5, 5}});
  CHECK(solve_degree_pair(200, 1) == std::vector<std::vector<long>>{{10}});
  CHECK(solve_degree_pair(6, 2).empty());
  CHECK_THROWS_AS(solve_degree_pair(711, 2), std::invalid_argument);
  CHECK_THROWS_AS(solve_degree_pair(-4, 2), std::invalid_argument);
}

TEST_CASE("conjugate columns of G11")
{
  const auto& full = derived("g11").table;
  const auto partial = keep(full, {"chi_0", "chi_1", "chi_4", "chi_7", "chi_8", "chi_9"});
  ConjugateColumnsReport report;
  const auto solved =
      solve_conjugate_columns(partial, {{10, "chi_2", "chi_3"}, {16, "chi_5", "chi_6"}}, &report);

  const auto& c24 = column(report, "2^4");
  CHECK(c24.linear == "5x+8y=-10");
  CHECK(c24.quadratic == "x^2+y^2=4");
  CHECK(c24.admissible == std::vector<std::string>{"(-2,0)"});
  CHECK(c24.rejected == std::vector<std::string>{"(78/89,-160/89)"});
  CHECK(report.solutions == 1);

  const auto& g = *full.group;
  const auto a = static_cast<std::size_t>(testing::class_index(g, "2^1 8^1_A"));
  const auto e = static_cast<std::size_t>(testing::class_index(g, "11^1_A"));
  CHECK(solved.at("chi_2")[a] == sqrt_rational(-2));
  CHECK(solved.at("chi_2")[e] == CycNum(-1L));
  CHECK(solved.at("chi_5")[a] == CycNum(0L));
  CHECK(solved.at("chi_5")[e] == gauss_quadratic(11));
  for (const auto& r : full.rows)
    CHECK(solved.at(r.name) == r.chi);
}

TEST_CASE("conjugate columns of G10")
{
  const auto& full = derived("g10").table;
  const auto partial = keep(full, {"chi_0", "chi_1", "chi_2", "chi_3", "chi_4", "chi_7"});
  const auto solved = solve_conjugate_columns(partial, {{10, "chi_5", "chi_6"}});
  const auto a = static_cast<std::size_t>(testing::class_index(*full.group, "2^1 8^1_A"));
  CHECK(solved.at("chi_5")[a] == sqrt_rational(-2));
  CHECK(solved.at("chi_6")[a] == -sqrt_rational(-2));
  CHECK(solved.at("chi_5")[0] == CycNum(10L));
}

TEST_CASE("conjugate columns reject inconsistent degrees")
{
  const auto& full = derived("g10").table;
  const auto partial = keep(full, {"chi_0", "chi_1", "chi_2", "chi_3", "chi_4", "chi_7"});
  CHECK_THROWS_AS(solve_conjugate_columns(partial, {{9, "chi_5", "chi_6"}}), VerificationError);
}

TEST_CASE("overlap system of G12")
{
  const auto& t = derived("g12").table;
  const auto g = t.group;
  const auto h = stabilizer(g, {12});
  const auto v = induce(derive("g11", h).table.at("chi_9"), fusion_map(*h, *g), g);
  REQUIRE(v.degree() == 660);

  const std::vector<ClassFunction> compounds{
      restrict_symmetric(Partition({9, 3}), g),
      restrict_symmetric(Partition({7, 5}), g) - t.at("chi_1") - t.at("chi_8"),
      restrict_symmetric(Partition({9, 2, 1}), g),
      restrict_symmetric(Partition({8, 1, 1, 1, 1}), g) - t.at("chi_12"),
      v - t.at("chi_9") - t.at("chi_12"),
  };
  const auto sol = resolve_overlap_system(compounds);
  CHECK(sol.gram == std::vector<std::vector<long>>{
                        {2, 1, 0, 0, 1}, {1, 2, 1, 0, 1}, {0, 1, 2, 1, 2}, {0, 0, 1, 2, 2}, {1, 1, 2, 2, 4}});
  CHECK(sol.degrees == std::vector<long>{99, 55, 176, 144, 66});
  CHECK(sol.membership == std::vector<std::vector<int>>{
                              {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}, {1, 0, 1, 1, 1}});
  const std::vector<std::string> expected{"chi_11", "chi_7", "chi_14", "chi_13", "chi_10"};
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(sol.irreducibles[i] == t.at(expected[i]));
  CHECK(sol.gram_assignments >= 1);

  const auto alpha = CycNum(Rational(1, 2)) * (compounds[4] - compounds[3] + compounds[0] - compounds[1]);
  CHECK(alpha == sol.irreducibles[0]);
}

TEST_CASE("overlap system without shared constituents is unresolvable")
{
  const auto& t = derived("g9").table;
  const std::vector<ClassFunction> compounds{t.at("chi_0") + t.at("chi_1"), t.at("chi_2") + t.at("chi_3")};
  CHECK_THROWS_AS(resolve_overlap_system(compounds), VerificationError);
}
