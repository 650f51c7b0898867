#include "support.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace chartab;
using testing::class_index;
using testing::group;

namespace {

// Conjugacy classes by brute force: orbit of each element under conjugation
// by every element. Returns element index -> orbit id (first element index).
std::vector<std::uint32_t> brute_classes(const GroupData& g)
{
  const auto& el = g.elements();
  std::vector<std::uint32_t> orbit(el.size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < el.size(); ++i) {
    if (orbit[i] != UINT32_MAX)
      continue;
    for (const auto& x : el)
      orbit[*g.index_of(x.inverse() * el[i] * x)] = i;
  }
  return orbit;
}

Perm cyclic12()
{
  std::vector<int> img(12);
  std::iota(img.begin(), img.end(), 2);
  img.back() = 1;
  return Perm::from_images(img);
}

} // namespace

TEST_CASE("parse_perm")
{
  const Perm p = parse_perm("(1,2,3)(4,5)", 9);
  CHECK(p(1) == 2);
  CHECK(p(3) == 1);
  CHECK(p(5) == 4);
  for (int i = 6; i <= 9; ++i)
    CHECK(p(i) == i);
  CHECK(p.cycle_type() == std::vector<int>{3, 2, 1, 1, 1, 1});
  CHECK(parse_perm("()", 12).is_identity());
  CHECK_THROWS_AS(parse_perm("(1,1,2)", 9), ParseError);
  CHECK_THROWS_AS(parse_perm("(1,10)", 9), ParseError);
  CHECK_THROWS_AS(parse_perm("(1,2", 9), ParseError);
  CHECK(parse_perm("(1,2)", 4) * parse_perm("(2,3)", 4) == parse_perm("(1,3,2)", 4));
}

TEST_CASE("closure orders")
{
  CHECK(group("g9")->order() == 72);
  CHECK(group("g10")->order() == 720);
  CHECK(group("g11")->order() == 7920);
  CHECK(group("g12")->order() == 95040);
  CHECK(group_closure({cyclic12()})->order() == 12);
  CHECK_THROWS_AS(group_closure(group("g12")->generators(), 1000), CapacityError);
}

TEST_CASE("sharp transitivity")
{
  CHECK(verify_sharp_transitivity(*group("g12"), 5).ok);
  CHECK(verify_sharp_transitivity(*group("g9"), 2).ok);
  CHECK(group("g9")->order() == 9 * 8);
  CHECK(verify_sharp_transitivity(*group("g11"), 4).ok);
  CHECK(verify_sharp_transitivity(*group("g10"), 3).ok);
  const auto cyc = verify_sharp_transitivity(*group_closure({cyclic12()}), 2);
  CHECK_FALSE(cyc.ok);
  CHECK(cyc.reason == SharpReason::order_mismatch);
}

TEST_CASE("class data")
{
  std::vector<std::uint64_t> sizes;
  for (const auto& c : group("g9")->classes())
    sizes.push_back(c.size);
  CHECK(sizes == std::vector<std::uint64_t>{1, 9, 8, 18, 18, 18});
  CHECK(group("g9")->classes()[3].label == "4^2_A");

  CHECK(group("g11")->classes()[class_index(*group("g11"), "2^1 3^1 6^1")].size == 1320);

  const auto& g12 = *group("g12");
  CHECK(g12.class_count() == 15);
  std::uint64_t total = 0;
  int nonreal = 0;
  for (const auto& c : g12.classes()) {
    total += c.size;
    if (!c.real) {
      ++nonreal;
      CHECK(c.size == 8640);
      CHECK(c.element_order == 11);
    }
  }
  CHECK(total == 95040);
  CHECK(nonreal == 2);
}

TEST_CASE("classes agree with brute-force conjugation orbits")
{
  for (const char* name : {"g9", "g10"}) {
    const auto& g = *group(name);
    const auto orbit = brute_classes(g);
    std::set<std::uint32_t> orbits(orbit.begin(), orbit.end());
    CHECK(orbits.size() == g.class_count());
    for (std::uint32_t i = 0; i < orbit.size(); ++i)
      REQUIRE(g.class_of_index(i) == g.class_of_index(orbit[i]));
    for (const auto& c : g.classes()) {
      CHECK(c.size * c.centralizer_order == g.order());
      CHECK(g.class_of(c.representative) == c.id);
    }
  }
}

TEST_CASE("power maps and inverse classes agree with representatives")
{
  for (const char* name : {"g10", "g12"}) {
    const auto& g = *group(name);
    for (const auto& c : g.classes()) {
      for (const auto& [p, target] : c.power_map)
        CHECK(g.class_of(c.representative.pow(p)) == target);
      CHECK(g.class_of(c.representative.inverse()) == c.inverse_class);
      CHECK(g.power_class(c.id, -1) == c.inverse_class);
    }
  }
}

TEST_CASE("stabilizers")
{
  const auto g11 = stabilizer(group("g12"), {12});
  CHECK(g11->order() == 7920);
  CHECK(g11->degree() == 11);
  CHECK(verify_sharp_transitivity(*g11, 4).ok);
  CHECK(stabilizer(group("g10"), {10})->order() == 72);
  CHECK(stabilizer(group("g9"), {1, 2})->order() == 1);
}

TEST_CASE("fusion maps agree with membership in the brute-force classes")
{
  const auto g = group("g10");
  const auto h = stabilizer(g, {10});
  const auto f = fusion_map(*h, *g);
  CHECK(f[0] == 0);
  for (const auto& c : h->classes()) {
    const Perm lifted = h->lift(c.representative);
    REQUIRE(g->contains(lifted));
    CHECK(g->class_of(lifted) == f[static_cast<std::size_t>(c.id)]);
    CHECK(g->classes()[static_cast<std::size_t>(f[static_cast<std::size_t>(c.id)])].element_order ==
          c.element_order);
  }

  // Two steps down the chain still share the root point set.
  const auto g12 = group("g12");
  const auto g10 = stabilizer(stabilizer(g12, {12}), {11});
  const auto f2 = fusion_map(*g10, *g12);
  CHECK(f2.size() == g10->class_count());
  CHECK(f2[0] == 0);
}

TEST_CASE("class multiplication coefficients")
{
  const auto& g = *group("g9");
  const int inv = class_index(g, "2^4");
  for (int k = 0; k < static_cast<int>(g.class_count()); ++k) {
    CHECK(class_mult_coeff(g, 0, k, k) == 1);
    for (int l = 0; l < static_cast<int>(g.class_count()); ++l)
      if (l != k)
        CHECK(class_mult_coeff(g, 0, k, l) == 0);
  }
  CHECK(class_mult_coeff(g, inv, inv, 0) == 9);

  // Direct enumeration over element pairs.
  const auto& el = g.elements();
  for (int j = 0; j < 6; ++j)
    for (int k = 0; k < 6; ++k)
      for (int l = 0; l < 6; ++l) {
        const Perm z = g.classes()[static_cast<std::size_t>(l)].representative;
        std::uint64_t n = 0;
        for (std::uint32_t x : g.class_elements(j))
          n += g.class_of(el[x].inverse() * z) == k ? 1 : 0;
        REQUIRE(class_mult_coeff(g, j, k, l) == n);
      }
}

TEST_CASE("Sylow probes")
{
  const auto s3 = sylow_probe(*group("g12"), 3, 1);
  CHECK(s3.order == 27);
  CHECK_FALSE(s3.abelian);
  CHECK(s3.exponent == 3);

  const auto s2 = sylow_probe(*group("g10"), 2, 1);
  CHECK(s2.order == 16);
  CHECK(s2.orbit_sizes == std::vector<int>{2, 8});

  const auto s2_12 = sylow_probe(*group("g12"), 2, 1);
  CHECK(s2_12.order == 64);
  CHECK(s2_12.orbit_sizes == std::vector<int>{4, 8});

  CHECK_THROWS_AS(sylow_probe(*group("g9"), 5), std::invalid_argument);
  const auto a = sylow_probe(*group("g12"), 3, 9), b = sylow_probe(*group("g12"), 3, 9);
  REQUIRE(a.generators.size() == b.generators.size());
  for (std::size_t i = 0; i < a.generators.size(); ++i)
    CHECK(a.generators[i] == b.generators[i]);
}
