#include "support.hpp"

#include <doctest.h>

using namespace chartab;
using testing::class_index;
using testing::derived;
using testing::group;
using testing::ints;

namespace {

ClassFunction row(const std::string& g, std::initializer_list<long> v) { return ClassFunction(group(g), ints(v)); }

} // namespace

TEST_CASE("inner products")
{
  const auto g = group("g12");
  CHECK(norm(ClassFunction::trivial(g)) == CycNum(1L));
  CHECK(norm(row("g10", {36, -4, 0, 0, 0, 1, 0, 0})) == CycNum(3L));
  const auto s = sym_alt_square(perm_character(group("g11")), SquarePart::symmetric);
  CHECK(norm(s) == CycNum(3L));
}

TEST_CASE("permutation characters")
{
  const auto& g12 = *group("g12");
  const auto p12 = perm_character(group("g12"));
  CHECK(p12.degree() == 11);
  CHECK(p12[static_cast<std::size_t>(class_index(g12, "2^4"))] == CycNum(3L));
  CHECK(p12[static_cast<std::size_t>(class_index(g12, "2^6"))] == CycNum(-1L));
  CHECK(perm_character(group("g11")) == row("g11", {10, 2, 1, 2, 0, -1, 0, 0, -1, -1}));
  CHECK(perm_character(group("g9")).degree() == 8);
}

TEST_CASE("tensor products")
{
  const auto chi1 = perm_character(group("g11"));
  CHECK(tensor(chi1, ClassFunction::trivial(group("g11"))) == chi1);
  CHECK(tensor(chi1, chi1).degree() == 100);
  const auto lin = row("g9", {1, 1, 1, -1, 1, -1});
  CHECK(tensor(lin, lin) == ClassFunction::trivial(group("g9")));
}

TEST_CASE("symmetric and antisymmetric squares")
{
  const auto chi2 = row("g10", {9, 1, 0, 1, 1, -1, -1, -1});
  CHECK(sym_alt_square(chi2, SquarePart::antisymmetric) == row("g10", {36, -4, 0, 0, 0, 1, 0, 0}));
  CHECK(sym_alt_square(perm_character(group("g11")), SquarePart::antisymmetric) ==
        row("g11", {45, -3, 0, 1, 0, 0, -1, -1, 1, 1}));
  const auto one = ClassFunction::trivial(group("g12"));
  CHECK(sym_alt_square(one, SquarePart::symmetric) == one);
}

TEST_CASE("square degree identities hold for every derived irreducible")
{
  for (const char* name : {"g9", "g10", "g11", "g12"}) {
    const auto& t = derived(name).table;
    const auto& g = *t.group;
    for (const auto& r : t.rows) {
      const long d = r.chi.degree();
      const auto s = sym_alt_square(r.chi, SquarePart::symmetric);
      const auto a = sym_alt_square(r.chi, SquarePart::antisymmetric);
      CHECK(s.degree() == d * (d + 1) / 2);
      CHECK(a.degree() == d * (d - 1) / 2);
      CHECK(s + a == tensor(r.chi, r.chi));
      for (const auto& c : g.classes()) {
        const auto i = static_cast<std::size_t>(c.id);
        CHECK(s[i] - a[i] == r.chi[static_cast<std::size_t>(g.power_class(c.id, 2))]);
      }
      // Squares of characters are characters: multiplicities are integers.
      std::vector<ClassFunction> basis;
      for (const auto& b : t.rows)
        basis.push_back(b.chi);
      CHECK(reduce_by_known(s, basis).residual == ClassFunction::zero(t.group));
      CHECK(reduce_by_known(a, basis).residual == ClassFunction::zero(t.group));
    }
  }
}

TEST_CASE("reduce_by_known")
{
  const auto g = group("g11");
  const auto chi1 = perm_character(g);
  const auto s = sym_alt_square(chi1, SquarePart::symmetric);
  const auto r = reduce_by_known(s, {ClassFunction::trivial(g), chi1});
  CHECK(r.multiplicities == std::vector<long>{1, 1});
  CHECK(r.residual == row("g11", {44, 4, -1, 0, -1, 1, 0, 0, 0, 0}));

  const auto e = row("g10", {45, -3, 0, 1, -1, 0, 1, 1});
  const auto d = row("g10", {36, -4, 0, 0, 0, 1, 0, 0});
  CHECK(norm(e - d) == CycNum(1L));

  const auto self = reduce_by_known(chi1, {chi1});
  CHECK(self.multiplicities == std::vector<long>{1});
  CHECK(self.residual == ClassFunction::zero(g));
}

TEST_CASE("orthogonality of derived tables and of a perturbed table")
{
  for (const char* name : {"g9", "g10", "g11", "g12"}) {
    const auto rep = verify_orthogonality(derived(name).table);
    CHECK(rep.ok);
    CHECK(rep.row_pairs == rep.column_pairs);
  }

  const auto& t9 = derived("g9").table;
  const auto inv = static_cast<std::size_t>(class_index(*t9.group, "2^4"));
  CycNum col(0L);
  for (const auto& r : t9.rows)
    col += r.chi[inv] * r.chi[inv].conj();
  CHECK(col == CycNum(8L));
  CHECK(t9.group->classes()[inv].centralizer_order == 8);

  CharacterTable bad = t9;
  auto v = bad.rows[5].chi.values;
  v[2] = -v[2];
  bad.rows[5].chi = ClassFunction(bad.group, v);
  const auto rep = verify_orthogonality(bad);
  CHECK_FALSE(rep.ok);
  bool row_flagged = false;
  for (const auto& x : rep.violations)
    row_flagged = row_flagged || (x.row && (x.r == 5 || x.s == 5));
  CHECK(row_flagged);
}

TEST_CASE("central characters")
{
  const auto& t9 = derived("g9").table;
  const auto all = default_central_pairs(*t9.group);
  CHECK(all.size() == 21);
  CHECK(central_character_check(t9, all).ok);

  const auto& t12 = derived("g12").table;
  auto ten = default_central_pairs(*t12.group);
  ten.resize(10);
  CHECK(central_character_check(t12, ten).ok);

  CharacterTable bad = t9;
  auto v = bad.rows[4].chi.values;
  v[1] = CycNum(2L);
  bad.rows[4].chi = ClassFunction(bad.group, v);
  CHECK_FALSE(central_character_check(bad, all).ok);
}

TEST_CASE("kernels")
{
  const auto& t10 = derived("g10").table;
  const auto k = kernel_classes(t10.at("chi_1"));
  std::uint64_t size = 0;
  std::vector<std::string> labels;
  for (int c : k) {
    size += t10.group->classes()[static_cast<std::size_t>(c)].size;
    labels.push_back(t10.group->classes()[static_cast<std::size_t>(c)].label);
  }
  CHECK(size == 360);
  CHECK(labels == std::vector<std::string>{"1^10", "2^4", "3^3", "4^2_A", "5^2"});

  const auto& t12 = derived("g12").table;
  CHECK(kernel_classes(t12.at("chi_7")) == std::vector<int>{0});
  CHECK(kernel_classes(t12.at("chi_0")).size() == 15);
}

TEST_CASE("class functions reject mismatched groups")
{
  CHECK_THROWS(inner_product(ClassFunction::trivial(group("g9")), ClassFunction::trivial(group("g10"))));
  CHECK_THROWS_AS(ClassFunction(group("g9"), ints({1, 2})), std::invalid_argument);
}
