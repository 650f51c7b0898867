#include "permgroup.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace chartab {

Perm Perm::identity(int degree)
{
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("permutation degree must be in 1.." + std::to_string(kMaxDegree));
  Perm p;
  p.degree_ = degree;
  for (int i = 0; i < degree; ++i)
    p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

Perm Perm::from_images(const std::vector<int>& images)
{
  Perm p = identity(static_cast<int>(images.size()));
  std::vector<bool> hit(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int v = images[i];
    if (v < 1 || v > p.degree_ || hit[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("image list is not a permutation");
    hit[static_cast<std::size_t>(v - 1)] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Perm Perm::operator*(const Perm& other) const
{
  if (degree_ != other.degree_)
    throw std::invalid_argument("permutation degrees differ");
  Perm r;
  r.degree_ = degree_;
  for (int i = 0; i < degree_; ++i)
    r.img_[static_cast<std::size_t>(i)] = other.img_[img_[static_cast<std::size_t>(i)]];
  return r;
}

Perm Perm::inverse() const
{
  Perm r;
  r.degree_ = degree_;
  for (int i = 0; i < degree_; ++i)
    r.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return r;
}

Perm Perm::pow(long k) const
{
  const int ord = order();
  long e = k % ord;
  if (e < 0)
    e += ord;
  Perm result = identity(degree_);
  Perm base = *this;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::vector<int> Perm::cycle_type() const
{
  std::vector<int> lengths;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < degree_; ++i) {
    if (seen[static_cast<std::size_t>(i)])
      continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int Perm::order() const
{
  int ord = 1;
  for (int len : cycle_type())
    ord = std::lcm(ord, len);
  return ord;
}

int Perm::fixed_points() const
{
  int count = 0;
  for (int i = 0; i < degree_; ++i)
    count += img_[static_cast<std::size_t>(i)] == i ? 1 : 0;
  return count;
}

bool Perm::is_even() const
{
  int transpositions = 0;
  for (int len : cycle_type())
    transpositions += len - 1;
  return transpositions % 2 == 0;
}

bool Perm::is_identity() const
{
  return fixed_points() == degree_;
}

std::uint64_t Perm::key() const
{
  std::uint64_t k = 0;
  for (int i = degree_ - 1; i >= 0; --i)
    k = (k << 4) | img_[static_cast<std::size_t>(i)];
  return k;
}

std::string Perm::to_string() const
{
  std::string out;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < degree_; ++i) {
    if (seen[static_cast<std::size_t>(i)] || img_[static_cast<std::size_t>(i)] == i)
      continue;
    out += '(';
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      if (j != i)
        out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm parse_perm(std::string_view text, int degree)
{
  if (degree < 1 || degree > kMaxDegree)
    throw ParseError("degree must be in 1.." + std::to_string(kMaxDegree));
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  const auto fail = [&](const std::string& why) {
    throw ParseError("permutation '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos == text.size())
    fail("empty input");
  while (pos < text.size()) {
    if (text[pos] != '(')
      fail("expected '('");
    ++pos;
    skip_ws();
    std::vector<int> cycle;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_ws();
      continue;
    }
    for (;;) {
      skip_ws();
      const std::size_t start = pos;
      long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 1000)
          fail("point out of range");
        ++pos;
      }
      if (pos == start)
        fail("expected a point");
      if (v < 1 || v > degree)
        fail("point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
      if (used[static_cast<std::size_t>(v - 1)])
        fail("repeated point " + std::to_string(v));
      used[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(static_cast<int>(v));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Perm::from_images(images);
}

std::optional<std::uint32_t> GroupData::index_of(const Perm& p) const
{
  if (p.degree() != degree_)
    return std::nullopt;
  auto it = index_.find(p.key());
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

int GroupData::class_of(const Perm& p) const
{
  auto idx = index_of(p);
  if (!idx)
    throw std::invalid_argument("permutation " + p.to_string() + " is not a group element");
  return class_of_[*idx];
}

int GroupData::power_class(int c, long k) const
{
  return class_of(classes_[static_cast<std::size_t>(c)].representative.pow(k));
}

Perm GroupData::lift(const Perm& p) const
{
  if (parent_degree_ == degree_)
    return p;
  std::vector<int> images(static_cast<std::size_t>(parent_degree_));
  std::iota(images.begin(), images.end(), 1);
  for (int i = 1; i <= degree_; ++i)
    images[static_cast<std::size_t>(support_[static_cast<std::size_t>(i - 1)] - 1)] =
        support_[static_cast<std::size_t>(p(i) - 1)];
  return Perm::from_images(images);
}

namespace {

std::vector<int> primes_dividing(std::uint64_t n)
{
  std::vector<int> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<int>(p));
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    out.push_back(static_cast<int>(n));
  return out;
}

std::string cycle_label(const std::vector<int>& type, int degree)
{
  std::map<int, int> counts;
  for (int len : type) {
    if (len > 1)
      ++counts[len];
  }
  if (counts.empty())
    return "1^" + std::to_string(degree);
  std::string out;
  for (const auto& [len, count] : counts) {
    if (!out.empty())
      out += ' ';
    out += std::to_string(len) + "^" + std::to_string(count);
  }
  return out;
}

} // namespace

void GroupData::compute_classes()
{
  const std::size_t n = elements_.size();
  std::vector<int> raw(n, -1);
  std::vector<Perm> inv_gens;
  for (const auto& g : generators_)
    inv_gens.push_back(g.inverse());

  struct Raw {
    std::uint32_t first;
    std::uint64_t size;
  };
  std::vector<Raw> raws;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (raw[i] != -1)
      continue;
    const int id = static_cast<int>(raws.size());
    raw[i] = id;
    queue.assign(1, i);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Perm& x = elements_[queue[q]];
      for (std::size_t g = 0; g < generators_.size(); ++g) {
        const std::uint32_t y = index_.at((inv_gens[g] * x * generators_[g]).key());
        if (raw[y] == -1) {
          raw[y] = id;
          queue.push_back(y);
        }
      }
    }
    raws.push_back({i, queue.size()});
  }

  // Canonical order: element order, fixed points (descending), size, p-power
  // classes for primes dividing the element order, first element index.
  // Power targets have smaller element order, so layers by order suffice.
  const std::size_t k = raws.size();
  std::vector<int> rep_order(k), rep_fixed(k);
  for (std::size_t c = 0; c < k; ++c) {
    rep_order[c] = elements_[raws[c].first].order();
    rep_fixed[c] = elements_[raws[c].first].fixed_points();
  }
  std::vector<int> canon(k, -1);
  std::vector<int> orders(rep_order);
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  int next = 0;
  for (int ord : orders) {
    using Key = std::tuple<int, std::uint64_t, std::vector<int>, std::uint32_t>;
    std::vector<std::pair<Key, std::size_t>> layer;
    for (std::size_t c = 0; c < k; ++c) {
      if (rep_order[c] != ord)
        continue;
      std::vector<int> targets;
      for (int p : primes_dividing(static_cast<std::uint64_t>(ord))) {
        const Perm y = elements_[raws[c].first].pow(p);
        targets.push_back(canon[static_cast<std::size_t>(raw[index_.at(y.key())])]);
      }
      layer.push_back({Key{-rep_fixed[c], raws[c].size, targets, raws[c].first}, c});
    }
    std::sort(layer.begin(), layer.end());
    for (const auto& entry : layer)
      canon[entry.second] = next++;
  }

  class_of_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    class_of_[i] = canon[static_cast<std::size_t>(raw[i])];
  class_elements_.assign(k, {});
  for (std::uint32_t i = 0; i < n; ++i)
    class_elements_[static_cast<std::size_t>(class_of_[i])].push_back(i);

  classes_.assign(k, {});
  const auto primes = primes_dividing(order());
  for (std::size_t r = 0; r < k; ++r) {
    ClassData& cd = classes_[static_cast<std::size_t>(canon[r])];
    cd.id = canon[r];
    cd.representative = elements_[raws[r].first];
    cd.size = raws[r].size;
    cd.cycle_type = cd.representative.cycle_type();
    cd.element_order = rep_order[r];
    cd.fixed_points = rep_fixed[r];
    cd.centralizer_order = order() / cd.size;
  }
  for (auto& cd : classes_) {
    for (int p : primes)
      cd.power_map[p] = class_of(cd.representative.pow(p));
    cd.inverse_class = class_of(cd.representative.inverse());
    cd.real = cd.inverse_class == cd.id;
  }

  std::map<std::string, std::vector<int>> by_type;
  for (auto& cd : classes_) {
    cd.label = cycle_label(cd.cycle_type, degree_);
    by_type[cd.label].push_back(cd.id);
  }
  for (const auto& [label, ids] : by_type) {
    if (ids.size() < 2)
      continue;
    for (std::size_t i = 0; i < ids.size(); ++i)
      classes_[static_cast<std::size_t>(ids[i])].label += std::string("_") + static_cast<char>('A' + i);
  }
}

GroupPtr build_group(int degree, std::vector<Perm> generators, std::vector<Perm> elements,
                     std::vector<int> support, int parent_degree)
{
  auto g = std::make_shared<GroupData>();
  g->degree_ = degree;
  g->generators_ = std::move(generators);
  g->elements_ = std::move(elements);
  g->index_.reserve(g->elements_.size() * 2);
  for (std::uint32_t i = 0; i < g->elements_.size(); ++i)
    g->index_.emplace(g->elements_[i].key(), i);
  if (support.empty()) {
    support.resize(static_cast<std::size_t>(degree));
    std::iota(support.begin(), support.end(), 1);
    parent_degree = degree;
  }
  g->support_ = std::move(support);
  g->parent_degree_ = parent_degree;
  g->compute_classes();
  return g;
}

namespace {

std::vector<Perm> closure_elements(int degree, const std::vector<Perm>& gens, std::uint64_t cap)
{
  std::vector<Perm> elements{Perm::identity(degree)};
  std::unordered_set<std::uint64_t> seen{elements[0].key()};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Perm y = elements[i] * g;
      if (seen.insert(y.key()).second) {
        if (elements.size() >= cap)
          throw CapacityError("group closure exceeded the cap of " + std::to_string(cap) +
                              " elements");
        elements.push_back(y);
      }
    }
  }
  return elements;
}

} // namespace

GroupPtr group_closure(const std::vector<Perm>& generators, std::uint64_t cap)
{
  if (generators.empty())
    throw std::invalid_argument("group_closure needs at least one generator");
  const int degree = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generators have different degrees");
  }
  auto elements = closure_elements(degree, generators, cap);
  return build_group(degree, generators, std::move(elements), {}, degree);
}

const std::vector<ClassData>& conjugacy_classes(const GroupData& g)
{
  return g.classes();
}

std::string to_string(SharpReason r)
{
  switch (r) {
  case SharpReason::ok:
    return "ok";
  case SharpReason::bad_k:
    return "bad_k";
  case SharpReason::order_mismatch:
    return "order_mismatch";
  case SharpReason::not_transitive:
    return "not_transitive";
  case SharpReason::odd_generator:
    return "odd_generator";
  }
  return "unknown";
}

SharpReport verify_sharp_transitivity(const GroupData& g, int k)
{
  SharpReport rep;
  const int n = g.degree();
  if (k < 1 || k > n) {
    rep.reason = SharpReason::bad_k;
    rep.detail = "k must lie in 1.." + std::to_string(n);
    return rep;
  }
  std::uint64_t tuples = 1;
  for (int i = 0; i < k; ++i)
    tuples *= static_cast<std::uint64_t>(n - i);
  if (g.order() != tuples) {
    rep.reason = SharpReason::order_mismatch;
    rep.detail = "|G| = " + std::to_string(g.order()) + " but n(n-1)...(n-k+1) = " +
                 std::to_string(tuples);
    return rep;
  }
  for (const auto& gen : g.generators()) {
    if (!gen.is_even()) {
      rep.reason = SharpReason::odd_generator;
      rep.detail = "generator " + gen.to_string() + " is odd";
      return rep;
    }
  }
  // Orbit of (1,...,k); transitive on k-tuples and |G| = #tuples gives
  // trivial k-point stabilizers.
  const auto encode = [](const std::vector<int>& t) {
    std::uint64_t code = 0;
    for (int x : t)
      code = (code << 4) | static_cast<std::uint64_t>(x - 1);
    return code;
  };
  std::vector<int> start(static_cast<std::size_t>(k));
  std::iota(start.begin(), start.end(), 1);
  std::unordered_set<std::uint64_t> seen{encode(start)};
  std::vector<std::vector<int>> queue{start};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& gen : g.generators()) {
      std::vector<int> t(queue[q]);
      for (int& x : t)
        x = gen(x);
      if (seen.insert(encode(t)).second)
        queue.push_back(std::move(t));
    }
  }
  if (queue.size() != tuples) {
    rep.reason = SharpReason::not_transitive;
    rep.detail = "orbit of (1..k) has size " + std::to_string(queue.size()) + " of " +
                 std::to_string(tuples);
    return rep;
  }
  rep.ok = true;
  rep.reason = SharpReason::ok;
  return rep;
}

GroupPtr stabilizer(const GroupPtr& g, const std::vector<int>& points)
{
  const int n = g->degree();
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  for (int p : points) {
    if (p < 1 || p > n)
      throw std::invalid_argument("stabilizer point out of range");
    if (removed[static_cast<std::size_t>(p - 1)])
      throw std::invalid_argument("stabilizer points must be distinct");
    removed[static_cast<std::size_t>(p - 1)] = true;
  }
  std::vector<int> support;
  std::vector<int> relabel(static_cast<std::size_t>(n), 0);
  for (int p = 1; p <= n; ++p) {
    if (!removed[static_cast<std::size_t>(p - 1)]) {
      support.push_back(g->support()[static_cast<std::size_t>(p - 1)]);
      relabel[static_cast<std::size_t>(p - 1)] = static_cast<int>(support.size());
    }
  }
  const int m = static_cast<int>(support.size());
  if (m == 0)
    throw std::invalid_argument("stabilizer of every point has degree 0");
  std::vector<Perm> elements;
  for (const auto& x : g->elements()) {
    bool fixes = true;
    for (int p : points)
      fixes = fixes && x(p) == p;
    if (!fixes)
      continue;
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(m));
    for (int p = 1; p <= n; ++p) {
      if (!removed[static_cast<std::size_t>(p - 1)])
        images.push_back(relabel[static_cast<std::size_t>(x(p) - 1)]);
    }
    elements.push_back(Perm::from_images(images));
  }
  // Greedy generating set in element order.
  std::vector<Perm> gens;
  std::unordered_set<std::uint64_t> span{elements.front().key()};
  for (const auto& x : elements) {
    if (span.count(x.key()))
      continue;
    gens.push_back(x);
    span.clear();
    for (const auto& y : closure_elements(m, gens, elements.size()))
      span.insert(y.key());
  }
  if (gens.empty())
    gens.push_back(Perm::identity(m));
  return build_group(m, std::move(gens), std::move(elements), std::move(support),
                     g->parent_degree());
}

std::vector<int> fusion_map(const GroupData& h, const GroupData& g)
{
  // Both point sets are read through their support maps into the common
  // root; points of g outside h's support are fixed.
  if (h.parent_degree() != g.parent_degree())
    throw std::invalid_argument("fusion_map: subgroup does not act on the group's points");
  std::vector<int> g_point(static_cast<std::size_t>(g.parent_degree()) + 1, 0);
  for (int i = 1; i <= g.degree(); ++i)
    g_point[static_cast<std::size_t>(g.support()[static_cast<std::size_t>(i - 1)])] = i;
  std::vector<int> h_to_g;
  for (int j = 1; j <= h.degree(); ++j) {
    const int gp = g_point[static_cast<std::size_t>(h.support()[static_cast<std::size_t>(j - 1)])];
    if (gp == 0)
      throw std::invalid_argument("fusion_map: subgroup does not act on the group's points");
    h_to_g.push_back(gp);
  }
  std::vector<int> out;
  for (const auto& cd : h.classes()) {
    std::vector<int> images(static_cast<std::size_t>(g.degree()));
    for (int i = 1; i <= g.degree(); ++i)
      images[static_cast<std::size_t>(i - 1)] = i;
    for (int j = 1; j <= h.degree(); ++j)
      images[static_cast<std::size_t>(h_to_g[static_cast<std::size_t>(j - 1)] - 1)] =
          h_to_g[static_cast<std::size_t>(cd.representative(j) - 1)];
    const Perm x = Perm::from_images(images);
    auto idx = g.index_of(x);
    if (!idx)
      throw std::invalid_argument("fusion_map: element " + x.to_string() +
                                  " of the subgroup is not in the group");
    out.push_back(g.class_of_index(*idx));
  }
  return out;
}

std::uint64_t class_mult_coeff(const GroupData& g, int j, int k, int l)
{
  const int count = static_cast<int>(g.class_count());
  if (j < 0 || k < 0 || l < 0 || j >= count || k >= count || l >= count)
    throw std::invalid_argument("class_mult_coeff: class id out of range");
  const Perm& z = g.classes()[static_cast<std::size_t>(l)].representative;
  std::uint64_t total = 0;
  for (std::uint32_t xi : g.class_elements(j)) {
    const Perm y = g.elements()[xi].inverse() * z;
    if (g.class_of(y) == k)
      ++total;
  }
  return total;
}

namespace {

bool is_prime(int p)
{
  if (p < 2)
    return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0)
      return false;
  }
  return true;
}

} // namespace

SylowReport sylow_probe(const GroupData& g, int p, std::uint64_t seed)
{
  if (!is_prime(p) || g.order() % static_cast<std::uint64_t>(p) != 0)
    throw std::invalid_argument("sylow_probe: p must be a prime dividing |G|");
  std::uint64_t target = 1;
  for (std::uint64_t n = g.order(); n % static_cast<std::uint64_t>(p) == 0;
       n /= static_cast<std::uint64_t>(p))
    target *= static_cast<std::uint64_t>(p);

  const auto is_p_power = [p](int n) {
    while (n % p == 0)
      n /= p;
    return n == 1;
  };

  std::mt19937_64 rng(seed);
  std::vector<Perm> gens;
  std::vector<Perm> members{Perm::identity(g.degree())};
  std::unordered_set<std::uint64_t> in_p{members[0].key()};
  while (members.size() < target) {
    // p-elements normalizing P but outside it; any one extends P to a
    // larger p-group.
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t i = 0; i < g.elements().size(); ++i) {
      const Perm& x = g.elements()[i];
      if (in_p.count(x.key()) || !is_p_power(x.order()))
        continue;
      const Perm xi = x.inverse();
      bool normalizes = true;
      for (const auto& s : gens) {
        if (!in_p.count((xi * s * x).key())) {
          normalizes = false;
          break;
        }
      }
      if (normalizes)
        candidates.push_back(i);
    }
    if (candidates.empty())
      throw std::logic_error("sylow_probe: no p-element in the normalizer");
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    gens.push_back(g.elements()[candidates[pick(rng)]]);
    members = closure_elements(g.degree(), gens, target);
    in_p.clear();
    for (const auto& x : members)
      in_p.insert(x.key());
  }

  SylowReport rep;
  rep.p = p;
  rep.order = members.size();
  rep.generators = gens;
  rep.abelian = true;
  for (std::size_t a = 0; a < gens.size() && rep.abelian; ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (!(gens[a] * gens[b] == gens[b] * gens[a])) {
        rep.abelian = false;
        break;
      }
    }
  }
  for (const auto& x : members) {
    const int o = x.order();
    ++rep.order_census[o];
    rep.exponent = std::max(rep.exponent, o);
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.degree()), false);
  for (int start = 1; start <= g.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)])
      continue;
    std::vector<int> orbit{start};
    seen[static_cast<std::size_t>(start - 1)] = true;
    for (std::size_t q = 0; q < orbit.size(); ++q) {
      for (const auto& s : gens) {
        const int y = s(orbit[q]);
        if (!seen[static_cast<std::size_t>(y - 1)]) {
          seen[static_cast<std::size_t>(y - 1)] = true;
          orbit.push_back(y);
        }
      }
    }
    rep.orbit_sizes.push_back(static_cast<int>(orbit.size()));
  }
  std::sort(rep.orbit_sizes.begin(), rep.orbit_sizes.end());
  return rep;
}

} // namespace chartab
