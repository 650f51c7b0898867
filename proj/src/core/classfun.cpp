#include "classfun.hpp"

#include "errors.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace chartab {

namespace {

void require_same_group(const ClassFunction& a, const ClassFunction& b)
{
  if (a.group != b.group)
    throw std::invalid_argument("class functions belong to different groups");
}

} // namespace

ClassFunction::ClassFunction(GroupPtr g, std::vector<CycNum> v) : group(std::move(g)), values(std::move(v))
{
  if (!group || values.size() != group->class_count())
    throw std::invalid_argument("class function length differs from the class count");
}

ClassFunction ClassFunction::trivial(const GroupPtr& g)
{
  return ClassFunction(g, std::vector<CycNum>(g->class_count(), CycNum(1L)));
}

ClassFunction ClassFunction::zero(const GroupPtr& g)
{
  return ClassFunction(g, std::vector<CycNum>(g->class_count(), CycNum()));
}

long ClassFunction::degree() const
{
  auto d = values.at(0).rational_integer();
  if (!d)
    throw VerificationError("value at the identity is not a rational integer: " +
                            values.at(0).to_string());
  return *d;
}

bool ClassFunction::is_real() const
{
  for (const auto& v : values) {
    if (v != v.conj())
      return false;
  }
  return true;
}

ClassFunction ClassFunction::conj() const
{
  std::vector<CycNum> out;
  out.reserve(values.size());
  for (const auto& v : values)
    out.push_back(v.conj());
  return ClassFunction(group, std::move(out));
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b)
{
  require_same_group(a, b);
  std::vector<CycNum> out(a.values);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += b.values[i];
  return ClassFunction(a.group, std::move(out));
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b)
{
  require_same_group(a, b);
  std::vector<CycNum> out(a.values);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] -= b.values[i];
  return ClassFunction(a.group, std::move(out));
}

ClassFunction operator*(const CycNum& s, const ClassFunction& a)
{
  std::vector<CycNum> out(a.values);
  for (auto& v : out)
    v *= s;
  return ClassFunction(a.group, std::move(out));
}

bool operator==(const ClassFunction& a, const ClassFunction& b)
{
  return a.group == b.group && a.values == b.values;
}

const NamedCharacter* CharacterTable::find(const std::string& name) const
{
  for (const auto& row : rows) {
    if (row.name == name)
      return &row;
  }
  return nullptr;
}

const ClassFunction& CharacterTable::at(const std::string& name) const
{
  const auto* row = find(name);
  if (!row)
    throw std::out_of_range("no character named " + name);
  return row->chi;
}

CycNum inner_product(const ClassFunction& chi, const ClassFunction& phi)
{
  require_same_group(chi, phi);
  CycNum sum;
  const auto& classes = chi.group->classes();
  for (std::size_t c = 0; c < chi.size(); ++c) {
    if (chi[c].is_zero() || phi[c].is_zero())
      continue;
    sum += chi[c] * phi[c].conj() *
           CycNum(Rational(1, static_cast<unsigned long>(classes[c].centralizer_order)));
  }
  return sum;
}

ClassFunction perm_character(const GroupPtr& g)
{
  std::vector<CycNum> values;
  for (const auto& cd : g->classes())
    values.emplace_back(static_cast<long>(cd.fixed_points - 1));
  ClassFunction chi(g, std::move(values));
  const CycNum n = norm(chi);
  if (n != CycNum(1L))
    throw VerificationError("fix-1 has norm " + n.to_string() + ", so the action is not 2-transitive");
  return chi;
}

ClassFunction tensor(const ClassFunction& chi, const ClassFunction& phi)
{
  require_same_group(chi, phi);
  std::vector<CycNum> out;
  out.reserve(chi.size());
  for (std::size_t c = 0; c < chi.size(); ++c)
    out.push_back(chi[c] * phi[c]);
  return ClassFunction(chi.group, std::move(out));
}

ClassFunction sym_alt_square(const ClassFunction& chi, SquarePart part)
{
  const auto& classes = chi.group->classes();
  const CycNum half(Rational(1, 2));
  std::vector<CycNum> out;
  out.reserve(chi.size());
  for (std::size_t c = 0; c < chi.size(); ++c) {
    auto it = classes[c].power_map.find(2);
    const int sq = it != classes[c].power_map.end() ? it->second
                                                     : chi.group->power_class(static_cast<int>(c), 2);
    const CycNum& at_square = chi[static_cast<std::size_t>(sq)];
    const CycNum squared = chi[c] * chi[c];
    out.push_back(half * (part == SquarePart::symmetric ? squared + at_square : squared - at_square));
  }
  return ClassFunction(chi.group, std::move(out));
}

Reduction reduce_by_known(const ClassFunction& compound, const std::vector<ClassFunction>& known)
{
  Reduction r{compound, {}};
  for (const auto& chi : known) {
    const CycNum m = inner_product(compound, chi);
    auto mi = m.rational_integer();
    if (!mi || *mi < 0)
      throw VerificationError("multiplicity " + m.to_string() + " is not a nonnegative integer");
    r.multiplicities.push_back(*mi);
    if (*mi != 0)
      r.residual = r.residual - CycNum(*mi) * chi;
  }
  return r;
}

OrthogonalityReport verify_orthogonality(const CharacterTable& t)
{
  OrthogonalityReport rep;
  const std::size_t n = t.rows.size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = r; s < n; ++s) {
      ++rep.row_pairs;
      const CycNum got = inner_product(t.rows[r].chi, t.rows[s].chi);
      const CycNum want(r == s ? 1L : 0L);
      if (got != want) {
        rep.ok = false;
        rep.violations.push_back({true, static_cast<int>(r), static_cast<int>(s), want, got});
      }
    }
  }
  const auto& classes = t.group->classes();
  const std::size_t k = classes.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      ++rep.column_pairs;
      CycNum got;
      for (const auto& row : t.rows)
        got += row.chi[a] * row.chi[b].conj();
      const CycNum want(a == b ? static_cast<long>(classes[a].centralizer_order) : 0L);
      if (got != want) {
        rep.ok = false;
        rep.violations.push_back({false, static_cast<int>(a), static_cast<int>(b), want, got});
      }
    }
  }
  return rep;
}

std::vector<std::pair<int, int>> default_central_pairs(const GroupData& g)
{
  const int k = static_cast<int>(g.class_count());
  std::vector<std::pair<int, int>> all;
  for (int j = 0; j < k; ++j)
    for (int l = j; l < k; ++l)
      all.emplace_back(j, l);
  if (g.order() <= 10000)
    return all;
  std::mt19937_64 rng(0x5eed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(20, all.size()));
  std::sort(all.begin(), all.end());
  return all;
}

CentralReport central_character_check(const CharacterTable& t,
                                      const std::vector<std::pair<int, int>>& pairs)
{
  CentralReport rep;
  rep.pairs = pairs;
  const GroupData& g = *t.group;
  const auto& classes = g.classes();
  const std::size_t k = classes.size();
  std::vector<std::vector<CycNum>> omega;
  for (const auto& row : t.rows) {
    const CycNum inv_deg = CycNum(row.chi[0]).inverse();
    std::vector<CycNum> w;
    for (std::size_t c = 0; c < k; ++c) {
      w.push_back(CycNum(static_cast<long>(classes[c].size)) * row.chi[c] * inv_deg);
      if (!w.back().is_algebraic_integer()) {
        rep.ok = false;
        rep.violations.push_back({row.name, static_cast<int>(c), -1,
                                  "omega(" + classes[c].label + ") = " + w.back().to_string() +
                                      " is not an algebraic integer"});
      }
    }
    omega.push_back(std::move(w));
  }
  for (const auto& [j, kk] : pairs) {
    std::vector<std::uint64_t> a(k);
    for (std::size_t l = 0; l < k; ++l)
      a[l] = class_mult_coeff(g, j, kk, static_cast<int>(l));
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      CycNum rhs;
      for (std::size_t l = 0; l < k; ++l) {
        if (a[l] != 0)
          rhs += CycNum(static_cast<long>(a[l])) * omega[r][l];
      }
      const CycNum lhs = omega[r][static_cast<std::size_t>(j)] * omega[r][static_cast<std::size_t>(kk)];
      if (lhs != rhs) {
        rep.ok = false;
        rep.violations.push_back({t.rows[r].name, j, kk,
                                  "omega(j)omega(k) = " + lhs.to_string() + " but sum a_jkl omega(l) = " +
                                      rhs.to_string()});
      }
    }
  }
  return rep;
}

std::vector<int> kernel_classes(const ClassFunction& chi)
{
  std::vector<int> out;
  for (std::size_t c = 0; c < chi.size(); ++c) {
    if (chi[c] == chi[0])
      out.push_back(static_cast<int>(c));
  }
  return out;
}

} // namespace chartab
