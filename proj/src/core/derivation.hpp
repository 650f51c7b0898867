#pragma once

#include "classfun.hpp"
#include "errors.hpp"
#include "indres.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace chartab {

/// Printed values the replay is compared against, keyed by step identifier
/// ("g10.ip.chi_D.chi_D", "g12.row.chi_V", ...). Rows are lists of literals in
/// canonical class order; scalars are one-element lists.
struct References {
  std::map<std::string, std::vector<std::string>> values;
  /// Keys whose printed value is already known to disagree.
  std::set<std::string> documented;

  const std::vector<std::string>* find(const std::string& key) const;
};

enum class DivergenceKind { inner_product, row, decomposition, equation, value, label };

std::string to_string(DivergenceKind k);

struct StepCheck {
  std::string key;
  DivergenceKind kind = DivergenceKind::inner_product;
  std::string computed;
  std::optional<std::string> printed;
  bool matches = true;
  /// Column permutation (same cycle type) needed for a row match, if any.
  std::string note;
};

struct DerivationStep {
  int index = 0;
  std::string section;
  std::string action;
  std::string cite;
  std::string output;
  std::optional<long> degree;
  std::optional<std::string> norm;
  std::vector<StepCheck> checks;
  std::vector<std::string> notes;
};

struct Divergence {
  std::string key;
  DivergenceKind kind = DivergenceKind::inner_product;
  std::string printed;
  std::string computed;
  bool documented = false;
};

struct DerivationLog {
  std::vector<DerivationStep> steps;
  std::vector<Divergence> divergences;

  /// `STEP k: <action> [cite: <location>] -> <name> (degree d, norm m)` lines,
  /// each followed by its indented checks and notes.
  std::string to_text() const;
};

struct Derivation {
  CharacterTable table;
  DerivationLog log;
};

/// A failed check during replay; carries the log up to the failure.
class DerivationError : public VerificationError {
public:
  DerivationError(const std::string& what, DerivationLog partial)
      : VerificationError(what), log(std::move(partial))
  {
  }
  DerivationLog log;
};

/// Representations of residual/2 as a sum of pair_count positive squares,
/// as non-decreasing degree lists. Throws std::invalid_argument when the
/// residual is odd or negative.
std::vector<std::vector<long>> solve_degree_pair(long residual, int pair_count);

struct ConjugatePair {
  long degree = 0;
  std::string name;
  std::string partner;
};

struct ColumnEquation {
  std::string column;
  std::string linear;
  std::string quadratic;
  std::vector<std::string> admissible;
  std::vector<std::string> rejected;
};

struct ConjugateColumnsReport {
  std::vector<ColumnEquation> real_columns;
  std::vector<std::string> notes;
  std::size_t solutions = 0;
};

/// Completes a table whose missing rows form complex-conjugate pairs of the
/// given degrees. Real columns: one linear and one norm relation per column,
/// candidates filtered to Z[zeta_m]. Non-real columns: real parts from the
/// linear row and column relations, moduli from the norm relations, then a
/// full orthogonality check on every candidate table. Throws
/// VerificationError unless exactly one table survives.
CharacterTable solve_conjugate_columns(const CharacterTable& partial, const std::vector<ConjugatePair>& pairs,
                                       ConjugateColumnsReport* report = nullptr);

struct OverlapSolution {
  /// membership[i][j] = 1 when irreducible j is a constituent of compound i.
  std::vector<std::vector<int>> membership;
  std::vector<long> degrees;
  std::vector<ClassFunction> irreducibles;
  std::vector<std::vector<long>> gram;
  /// 0/1 assignments consistent with the Gram matrix before the degree and
  /// character filters.
  std::size_t gram_assignments = 0;
};

/// Each compound is a sum of distinct irreducibles. Searches every 0/1
/// membership matrix with distinct columns whose Gram matrix matches, keeps
/// those with positive integral degrees whose extracted rows have norm 1, and
/// requires exactly one. Irreducibles are ordered by the first compound
/// containing them, ties broken by the last compound containing them
/// (later first).
OverlapSolution resolve_overlap_system(const std::vector<ClassFunction>& compounds);

struct KernelInfo {
  std::string character;
  std::vector<int> classes;
  std::uint64_t order = 0;
};

struct StructureReport {
  std::vector<KernelInfo> kernels; // nontrivial characters only
  bool simple = false;
  /// Distinct proper nontrivial kernels, by order.
  std::vector<std::uint64_t> proper_kernel_orders;
  std::optional<std::uint64_t> index2_kernel;
  bool unique_proper_kernel = false;
  /// No element of order 2 outside the index-2 kernel.
  bool no_involution_outside = false;
  std::string summary;
};

StructureReport structure_report(const CharacterTable& t);

/// Degree ascending; ties broken at the first differing column, larger real
/// value first, then positive imaginary part first.
void sort_rows(CharacterTable& t);

/// Permutations of same-cycle-type columns, identity first. perm[c] is the
/// reference column compared against computed column c.
std::vector<std::vector<int>> column_permutations(const GroupData& g);

Derivation derive_g9(const GroupPtr& g, const References* refs = nullptr);
Derivation derive_g10(const GroupPtr& g, const References* refs = nullptr);
Derivation derive_g11(const GroupPtr& g, const References* refs = nullptr);
Derivation derive_g12(const GroupPtr& g, const References* refs = nullptr);

/// Dispatches on "g9" .. "g12".
Derivation derive(const std::string& group, const GroupPtr& g, const References* refs = nullptr);

} // namespace chartab
