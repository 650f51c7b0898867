#pragma once

#include "derivation.hpp"
#include "io.hpp"

#include <map>
#include <string>
#include <vector>

namespace testing {

inline std::string fixture(const std::string& rel) { return std::string(CHARTAB_FIXTURE_DIR) + "/" + rel; }

// Groups and derivations are built once per test binary.
inline chartab::GroupPtr group(const std::string& name)
{
  static std::map<std::string, chartab::GroupPtr> cache;
  auto& g = cache[name];
  if (!g)
    g = chartab::group_closure(chartab::load_fixture(fixture(name + ".gens")).generators);
  return g;
}

inline const chartab::Derivation& derived(const std::string& name)
{
  static std::map<std::string, chartab::Derivation> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, chartab::derive(name, group(name))).first;
  return it->second;
}

inline const chartab::References& references()
{
  static const chartab::References r = chartab::load_references(fixture("golden/steps.json"));
  return r;
}

inline std::vector<chartab::CycNum> ints(std::initializer_list<long> v)
{
  return {v.begin(), v.end()};
}

inline int class_index(const chartab::GroupData& g, const std::string& label)
{
  for (const auto& c : g.classes())
    if (c.label == label)
      return c.id;
  throw std::invalid_argument("no class " + label);
}

} // namespace testing
