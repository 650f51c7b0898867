#include "indres.hpp"

#include "errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace chartab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
  for (int p : parts_) {
    if (p <= 0)
      throw std::invalid_argument("partition parts must be positive");
    weight_ += p;
  }
  std::sort(parts_.rbegin(), parts_.rend());
}

Partition Partition::parse(std::string_view text)
{
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view piece = text.substr(pos, comma - pos);
    while (!piece.empty() && piece.front() == ' ')
      piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ')
      piece.remove_suffix(1);
    if (piece.empty() || piece.size() > 6 ||
        !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("malformed partition '" + std::string(text) + "'");
    const int v = std::stoi(std::string(piece));
    if (v <= 0)
      throw ParseError("partition parts must be positive in '" + std::string(text) + "'");
    parts.push_back(v);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const
{
  std::vector<int> out;
  if (parts_.empty())
    return Partition();
  for (int i = 1; i <= parts_.front(); ++i) {
    int count = 0;
    for (int p : parts_)
      count += p >= i ? 1 : 0;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

int Partition::sign() const
{
  int transpositions = 0;
  for (int p : parts_)
    transpositions += p - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

std::string Partition::to_string() const
{
  std::string out;
  for (int p : parts_) {
    if (!out.empty())
      out += ',';
    out += std::to_string(p);
  }
  return out;
}

std::vector<Partition> partitions_of(int n)
{
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      current.push_back(k);
      rec(remaining - k, k);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

long MurnaghanNakayama::value(const Partition& lambda, const Partition& mu)
{
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("mn_value: weights differ (" + std::to_string(lambda.weight()) +
                                " vs " + std::to_string(mu.weight()) + ")");
  return eval(lambda.parts(), mu.parts(), 0);
}

// Removes border strips of length mu[from] (largest remaining part first)
// using beta-numbers: a strip of length r is a bead moved from b to b - r
// onto an empty position; its height is the number of beads jumped.
long MurnaghanNakayama::eval(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t from)
{
  if (from == mu.size())
    return lambda.empty() ? 1 : 0;
  std::vector<int> rest(mu.begin() + static_cast<long>(from), mu.end());
  auto key = std::make_pair(lambda, rest);
  if (auto it = memo_.find(key); it != memo_.end())
    return it->second;

  const int r = mu[from];
  const std::size_t len = lambda.size();
  std::vector<int> beta(len);
  for (std::size_t i = 0; i < len; ++i)
    beta[i] = lambda[i] + static_cast<int>(len - 1 - i);
  const std::set<int> occupied(beta.begin(), beta.end());
  long total = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0 || occupied.count(target))
      continue;
    int height = 0;
    for (int c : beta)
      height += (c > target && c < b) ? 1 : 0;
    std::vector<int> moved(beta);
    moved[i] = target;
    std::sort(moved.rbegin(), moved.rend());
    std::vector<int> next;
    const std::size_t m = moved.size();
    for (std::size_t j = 0; j < m; ++j) {
      const int part = moved[j] - static_cast<int>(m - 1 - j);
      if (part > 0)
        next.push_back(part);
    }
    const long sub = eval(next, mu, from + 1);
    total += height % 2 == 0 ? sub : -sub;
  }
  memo_.emplace(std::move(key), total);
  return total;
}

long mn_value(const Partition& lambda, const Partition& mu)
{
  MurnaghanNakayama evaluator;
  return evaluator.value(lambda, mu);
}

ClassFunction induce(const ClassFunction& chi, const std::vector<int>& fusion, const GroupPtr& g)
{
  const GroupData& h = *chi.group;
  if (fusion.size() != h.class_count())
    throw std::invalid_argument("induce: fusion map length differs from the subgroup class count");
  if (g->order() % h.order() != 0)
    throw std::invalid_argument("induce: subgroup order does not divide the group order");
  std::vector<CycNum> sums(g->class_count());
  std::vector<std::uint64_t> fused_size(g->class_count(), 0);
  for (std::size_t c = 0; c < fusion.size(); ++c) {
    const int target = fusion[c];
    if (target < 0 || static_cast<std::size_t>(target) >= g->class_count())
      throw std::invalid_argument("induce: fusion target out of range");
    const auto& hc = h.classes()[c];
    sums[static_cast<std::size_t>(target)] +=
        chi[c] * CycNum(Rational(1, static_cast<unsigned long>(hc.centralizer_order)));
    fused_size[static_cast<std::size_t>(target)] += hc.size;
  }
  std::vector<CycNum> values;
  for (std::size_t x = 0; x < g->class_count(); ++x) {
    const auto& gc = g->classes()[x];
    // |H meet x^G| <= |x^G|, and every H-element lies in some G-class.
    if (fused_size[x] > gc.size)
      throw std::invalid_argument("induce: inconsistent fusion data at class " + gc.label);
    values.push_back(CycNum(static_cast<long>(gc.centralizer_order)) * sums[x]);
  }
  return ClassFunction(g, std::move(values));
}

ClassFunction restrict_to(const ClassFunction& chi, const std::vector<int>& fusion, const GroupPtr& h)
{
  if (fusion.size() != h->class_count())
    throw std::invalid_argument("restrict: fusion map length differs from the subgroup class count");
  std::vector<CycNum> values;
  for (int target : fusion)
    values.push_back(chi.values.at(static_cast<std::size_t>(target)));
  return ClassFunction(h, std::move(values));
}

ClassFunction restrict_symmetric(const Partition& lambda, const GroupPtr& g, MurnaghanNakayama* evaluator)
{
  if (lambda.weight() != g->degree())
    throw std::invalid_argument("restrict_symmetric: partition weight differs from the degree");
  MurnaghanNakayama local;
  MurnaghanNakayama& mn = evaluator ? *evaluator : local;
  std::vector<CycNum> values;
  for (const auto& cd : g->classes())
    values.emplace_back(mn.value(lambda, Partition(cd.cycle_type)));
  return ClassFunction(g, std::move(values));
}

} // namespace chartab
