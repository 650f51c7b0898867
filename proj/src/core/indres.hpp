#pragma once

#include "classfun.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chartab {

class Partition {
public:
  Partition() = default;
  /// Sorts the parts into non-increasing order; throws std::invalid_argument
  /// on a non-positive part.
  explicit Partition(std::vector<int> parts);
  /// Comma-separated parts, e.g. "9,1,1,1".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  Partition conjugate() const;
  /// Sign of the permutations with this cycle type.
  int sign() const;
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// Murnaghan-Nakayama evaluation with a private memo table. Not safe for
/// concurrent use; give each thread its own evaluator.
class MurnaghanNakayama {
public:
  /// chi^lambda on cycle type mu. Throws std::invalid_argument on a weight
  /// mismatch.
  long value(const Partition& lambda, const Partition& mu);

private:
  long eval(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t from);
  std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo_;
};

long mn_value(const Partition& lambda, const Partition& mu);

/// (chi up G)(x) = |C_G(x)| sum chi(x_i)/|C_H(x_i)| over H-classes fusing to x.
ClassFunction induce(const ClassFunction& chi, const std::vector<int>& fusion, const GroupPtr& g);

ClassFunction restrict_to(const ClassFunction& chi, const std::vector<int>& fusion, const GroupPtr& h);

/// Restriction of the symmetric-group character lambda to a permutation group
/// of degree weight(lambda), reading each class's cycle type (fixed points as
/// parts of size 1).
ClassFunction restrict_symmetric(const Partition& lambda, const GroupPtr& g,
                                 MurnaghanNakayama* evaluator = nullptr);

} // namespace chartab
