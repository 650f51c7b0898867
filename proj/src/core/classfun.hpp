#pragma once

#include "cyclotomic.hpp"
#include "permgroup.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chartab {

/// Values on the conjugacy classes of one group, in its canonical class order.
struct ClassFunction {
  GroupPtr group;
  std::vector<CycNum> values;

  ClassFunction() = default;
  ClassFunction(GroupPtr g, std::vector<CycNum> v);
  static ClassFunction trivial(const GroupPtr& g);
  static ClassFunction zero(const GroupPtr& g);

  const CycNum& operator[](std::size_t c) const { return values[c]; }
  std::size_t size() const { return values.size(); }
  /// Value at the identity class; throws VerificationError unless it is a
  /// rational integer.
  long degree() const;
  bool is_real() const;
  ClassFunction conj() const;

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const CycNum& s, const ClassFunction& a);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
};

struct NamedCharacter {
  std::string name;
  ClassFunction chi;
};

/// Rows are irreducible characters, each with a name (chi_0, chi_1, ...).
struct CharacterTable {
  GroupPtr group;
  std::vector<NamedCharacter> rows;

  const NamedCharacter* find(const std::string& name) const;
  const ClassFunction& at(const std::string& name) const;
};

CycNum inner_product(const ClassFunction& chi, const ClassFunction& phi);
inline CycNum norm(const ClassFunction& chi) { return inner_product(chi, chi); }

/// fix(g) - 1. Throws VerificationError when its norm is not 1.
ClassFunction perm_character(const GroupPtr& g);

ClassFunction tensor(const ClassFunction& chi, const ClassFunction& phi);

enum class SquarePart { symmetric, antisymmetric };
ClassFunction sym_alt_square(const ClassFunction& chi, SquarePart part);

struct Reduction {
  ClassFunction residual;
  std::vector<long> multiplicities;
};

/// compound - sum <compound, chi_i> chi_i. Throws VerificationError when a
/// multiplicity is not a nonnegative rational integer.
Reduction reduce_by_known(const ClassFunction& compound, const std::vector<ClassFunction>& known);

struct OrthogonalityViolation {
  bool row = true; // false: column relation
  int r = 0;
  int s = 0;
  CycNum expected;
  CycNum actual;
};

struct OrthogonalityReport {
  bool ok = true;
  std::size_t row_pairs = 0;
  std::size_t column_pairs = 0;
  std::vector<OrthogonalityViolation> violations;
};

/// Row relation <chi_r, chi_s> = delta_rs and column relation
/// sum_i chi_i(g_r) conj(chi_i(g_s)) = delta_rs |C(g_r)|, all pairs.
OrthogonalityReport verify_orthogonality(const CharacterTable& t);

struct CentralViolation {
  std::string character;
  int j = 0;
  int k = 0;
  std::string what;
};

struct CentralReport {
  bool ok = true;
  std::vector<std::pair<int, int>> pairs;
  std::vector<CentralViolation> violations;
};

/// Default sampling: every pair j <= k when |G| <= 10^4, otherwise 20 pairs
/// from a fixed-seed generator.
std::vector<std::pair<int, int>> default_central_pairs(const GroupData& g);

/// omega(c) = |c| chi(c) / chi(1) must satisfy
/// omega(j) omega(k) = sum_l a_jkl omega(l) and be an algebraic integer.
CentralReport central_character_check(const CharacterTable& t,
                                      const std::vector<std::pair<int, int>>& pairs);

/// Classes c with chi(c) = chi(1).
std::vector<int> kernel_classes(const ClassFunction& chi);

} // namespace chartab
