#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

using namespace chartab;
using testing::class_index;
using testing::derived;
using testing::group;
using testing::ints;

namespace {

// Frobenius formula: chi^lambda(mu) is the coefficient of x^(lambda+delta) in
// a_delta * p_mu, using l = len(lambda) variables. The coefficient of a
// monomial in p_mu counts the ways to drop each part of mu onto one variable.
long frobenius_oracle(const std::vector<int>& lambda, const std::vector<int>& mu)
{
  const int l = static_cast<int>(lambda.size());
  std::vector<int> target(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i)
    target[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (l - 1 - i);

  std::map<std::pair<std::size_t, std::vector<int>>, long> memo;
  auto ways = [&](auto&& self, std::size_t part, std::vector<int>& rest) -> long {
    if (part == mu.size())
      return std::all_of(rest.begin(), rest.end(), [](int r) { return r == 0; }) ? 1 : 0;
    const auto key = std::make_pair(part, rest);
    if (auto it = memo.find(key); it != memo.end())
      return it->second;
    long total = 0;
    for (auto& r : rest) {
      if (r < mu[part])
        continue;
      r -= mu[part];
      total += self(self, part + 1, rest);
      r += mu[part];
    }
    memo[key] = total;
    return total;
  };

  std::vector<int> sigma(static_cast<std::size_t>(l));
  std::iota(sigma.begin(), sigma.end(), 0);
  long sum = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        inversions += sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)] ? 1 : 0;
    std::vector<int> rest(static_cast<std::size_t>(l));
    bool ok = true;
    for (int i = 0; i < l && ok; ++i) {
      rest[static_cast<std::size_t>(i)] = target[static_cast<std::size_t>(i)] - (l - 1 - sigma[static_cast<std::size_t>(i)]);
      ok = rest[static_cast<std::size_t>(i)] >= 0;
    }
    if (ok)
      sum += (inversions % 2 ? -1 : 1) * ways(ways, 0, rest);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long hook_degree(const std::vector<int>& lambda)
{
  const Partition conj = Partition(lambda).conjugate();
  long prod = 1;
  int n = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    n += lambda[i];
    for (int j = 0; j < lambda[i]; ++j)
      prod *= (lambda[i] - j - 1) + (conj.parts()[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
  }
  return factorial(n) / prod;
}

long class_size_sym(const Partition& mu)
{
  std::map<int, int> mult;
  for (int p : mu.parts())
    ++mult[p];
  long denom = 1;
  for (const auto& [p, m] : mult)
    for (int i = 0; i < m; ++i)
      denom *= p * (i + 1);
  return factorial(mu.weight()) / denom;
}

// Induction by the defining sum (1/|H|) sum_x psi(x g x^-1) over all of G.
ClassFunction induce_oracle(const ClassFunction& psi, const GroupPtr& h, const GroupPtr& g)
{
  std::unordered_map<std::uint64_t, int> h_class;
  for (std::uint32_t i = 0; i < h->order(); ++i)
    h_class[h->lift(h->elements()[i]).key()] = h->class_of_index(i);
  std::vector<CycNum> out;
  for (const auto& c : g->classes()) {
    CycNum s(0L);
    for (const auto& x : g->elements()) {
      const Perm y = x * c.representative * x.inverse();
      if (auto it = h_class.find(y.key()); it != h_class.end())
        s += psi[static_cast<std::size_t>(it->second)];
    }
    out.push_back(s / CycNum(static_cast<long>(h->order())));
  }
  return ClassFunction(g, out);
}

} // namespace

TEST_CASE("partitions")
{
  CHECK(Partition::parse("9,1,1,1").parts() == std::vector<int>{9, 1, 1, 1});
  CHECK(Partition::parse("1,3,2").parts() == std::vector<int>{3, 2, 1});
  CHECK(Partition({3, 1}).conjugate().parts() == std::vector<int>{2, 1, 1});
  CHECK(partitions_of(12).size() == 77);
  CHECK(partitions_of(5).front().parts() == std::vector<int>{5});
  CHECK_THROWS_AS(Partition::parse("3,,1"), ParseError);
  CHECK_THROWS_AS(Partition::parse("3,-1"), ParseError);
}

TEST_CASE("Murnaghan-Nakayama values")
{
  CHECK(mn_value(Partition({11, 1}), Partition(std::vector<int>(12, 1))) == 11);
  CHECK(mn_value(Partition({9, 3}), Partition({2, 2, 2, 2, 1, 1, 1, 1})) == 10);
  CHECK(mn_value(Partition({12}), Partition({11, 1})) == 1);
  CHECK(mn_value(Partition({7}), Partition({3, 2, 2})) == 1);
  CHECK_THROWS_AS(mn_value(Partition({2, 1}), Partition({4})), std::invalid_argument);
}

TEST_CASE("Murnaghan-Nakayama agrees with the Frobenius formula for n <= 7")
{
  MurnaghanNakayama mn;
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n))
        REQUIRE(mn.value(lambda, mu) == frobenius_oracle(lambda.parts(), mu.parts()));
}

TEST_CASE("Sym(n) tables are orthogonal and degrees match hook lengths")
{
  MurnaghanNakayama mn;
  for (int n = 1; n <= 7; ++n) {
    const auto parts = partitions_of(n);
    long sq = 0;
    for (const auto& a : parts) {
      const long d = mn.value(a, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
      sq += d * d;
      for (const auto& b : parts) {
        long ip = 0;
        for (const auto& mu : parts)
          ip += class_size_sym(mu) * mn.value(a, mu) * mn.value(b, mu);
        REQUIRE(ip == (a == b ? factorial(n) : 0));
      }
    }
    CHECK(sq == factorial(n));
  }
  for (const auto& lambda : partitions_of(12))
    REQUIRE(mn.value(lambda, Partition(std::vector<int>(12, 1))) == hook_degree(lambda.parts()));
}

TEST_CASE("restrictions of Sym(12) characters")
{
  const auto g = group("g12");
  CHECK(restrict_symmetric(Partition({9, 1, 1, 1}), g) ==
        ClassFunction(g, ints({165, -11, 5, 3, 3, 1, 1, 0, 1, -1, -1, -1, 0, 0, 0})));
  const auto r75 = restrict_symmetric(Partition({7, 5}), g);
  CHECK(r75.degree() == 297);
  CHECK(r75[static_cast<std::size_t>(class_index(*g, "2^6"))] == CycNum(-15L));
  CHECK(restrict_symmetric(Partition({12}), g) == ClassFunction::trivial(g));
  CHECK(restrict_symmetric(Partition({11, 1}), g) == perm_character(g));
  CHECK_THROWS_AS(restrict_symmetric(Partition({10}), g), std::invalid_argument);
}

TEST_CASE("induction")
{
  const auto g10 = group("g10");
  const auto h = stabilizer(g10, {10});
  const auto f = fusion_map(*h, *g10);
  const auto chi1 = ClassFunction(h, ints({1, 1, 1, -1, 1, -1}));
  const auto up = induce(chi1, f, g10);
  CHECK(up == ClassFunction(g10, ints({10, 2, 1, -2, 0, 0, 0, 0})));
  CHECK(up == induce_oracle(chi1, h, g10));

  const auto hd = derive("g9", h);
  for (const auto& r : hd.table.rows)
    CHECK(induce(r.chi, f, g10) == induce_oracle(r.chi, h, g10));

  const auto g12 = group("g12");
  const auto h11 = stabilizer(g12, {12});
  const auto up0 = induce(ClassFunction::trivial(h11), fusion_map(*h11, *g12), g12);
  CHECK(up0 == ClassFunction::trivial(g12) + perm_character(g12));
}

TEST_CASE("restriction")
{
  const auto g12 = group("g12");
  const auto h = stabilizer(g12, {12});
  const auto f = fusion_map(*h, *g12);
  CHECK(restrict_to(ClassFunction::trivial(g12), f, h) == ClassFunction::trivial(h));
  const auto res = restrict_to(perm_character(g12), f, h);
  CHECK(res.degree() == 11);
  CHECK(res == ClassFunction::trivial(h) + perm_character(h));
}

TEST_CASE("Frobenius reciprocity, 10 pairs per chain link")
{
  std::mt19937_64 rng(7);
  for (const auto& [big, small] : std::vector<std::pair<std::string, std::string>>{
           {"g10", "g9"}, {"g11", "g10"}, {"g12", "g11"}}) {
    const auto g = group(big);
    const auto h = stabilizer(g, {g->degree()});
    const auto f = fusion_map(*h, *g);
    const auto& tg = derived(big).table;
    const auto th = derive(small, h).table;
    for (int i = 0; i < 10; ++i) {
      const auto& psi = th.rows[rng() % th.rows.size()].chi;
      const auto& chi = tg.rows[rng() % tg.rows.size()].chi;
      const CycNum lhs = inner_product(induce(psi, f, g), chi);
      const CycNum rhs = inner_product(psi, restrict_to(chi, f, h));
      REQUIRE(lhs == rhs);
      CHECK(lhs.rational_integer().has_value());
    }
  }
}
