#include "derivation.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace chartab {

const std::vector<std::string>* References::find(const std::string& key) const
{
  auto it = values.find(key);
  return it == values.end() ? nullptr : &it->second;
}

std::string to_string(DivergenceKind k)
{
  switch (k) {
  case DivergenceKind::inner_product:
    return "inner_product";
  case DivergenceKind::row:
    return "row";
  case DivergenceKind::decomposition:
    return "decomposition";
  case DivergenceKind::equation:
    return "equation";
  case DivergenceKind::value:
    return "value";
  case DivergenceKind::label:
    return "label";
  }
  return "unknown";
}

std::string DerivationLog::to_text() const
{
  std::string out;
  std::string section;
  for (const auto& s : steps) {
    if (s.section != section) {
      section = s.section;
      out += "== " + section + " ==\n";
    }
    out += "STEP " + std::to_string(s.index) + ": " + s.action + " [cite: " + s.cite + "] -> " + s.output +
           " (degree " + (s.degree ? std::to_string(*s.degree) : std::string("-")) + ", norm " +
           (s.norm ? *s.norm : std::string("-")) + ")\n";
    for (const auto& c : s.checks) {
      out += "    check " + c.key + " = " + c.computed;
      if (c.printed)
        out += c.matches ? " (printed value agrees)" : " (PRINTED " + *c.printed + ")";
      if (!c.note.empty())
        out += " [" + c.note + "]";
      out += '\n';
    }
    for (const auto& n : s.notes)
      out += "    note: " + n + '\n';
  }
  if (!divergences.empty()) {
    out += "== divergences ==\n";
    for (const auto& d : divergences) {
      out += "DIVERGENCE " + d.key + " [" + to_string(d.kind) + (d.documented ? ", documented" : "") +
             "]: printed " + d.printed + ", computed " + d.computed + '\n';
    }
  }
  return out;
}

std::vector<std::vector<int>> column_permutations(const GroupData& g)
{
  const auto& classes = g.classes();
  std::map<std::vector<int>, std::vector<int>> groups;
  for (const auto& cd : classes)
    groups[cd.cycle_type].push_back(cd.id);
  std::vector<std::vector<int>> blocks;
  for (auto& [type, ids] : groups) {
    if (ids.size() > 1)
      blocks.push_back(ids);
  }
  std::vector<int> identity(classes.size());
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> out{identity};
  for (const auto& block : blocks) {
    std::vector<std::vector<int>> next;
    for (const auto& base : out) {
      std::vector<int> images(block);
      do {
        std::vector<int> p(base);
        for (std::size_t i = 0; i < block.size(); ++i)
          p[static_cast<std::size_t>(block[i])] = images[i];
        next.push_back(std::move(p));
      } while (std::next_permutation(images.begin(), images.end()));
    }
    out = std::move(next);
  }
  return out;
}

void sort_rows(CharacterTable& t)
{
  auto before = [](const NamedCharacter& a, const NamedCharacter& b) {
    const long da = a.chi.degree(), db = b.chi.degree();
    if (da != db)
      return da < db;
    for (std::size_t c = 0; c < a.chi.size(); ++c) {
      if (a.chi[c] == b.chi[c])
        continue;
      // Distinct exact values; the numeric image only orders them.
      const auto x = a.chi[c].numeric(), y = b.chi[c].numeric();
      if (std::abs(x.real() - y.real()) > 1e-9)
        return x.real() > y.real();
      return x.imag() > y.imag();
    }
    return a.name < b.name;
  };
  std::stable_sort(t.rows.begin(), t.rows.end(), before);
}

namespace {

std::string row_string(const ClassFunction& chi)
{
  std::string out = "(";
  for (std::size_t c = 0; c < chi.size(); ++c)
    out += (c ? "," : "") + chi[c].to_string();
  return out + ")";
}

std::string join(const std::vector<std::string>& v)
{
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + v[i];
  return out + ")";
}

std::string class_list(const GroupData& g, const std::vector<int>& ids)
{
  std::string out;
  for (int c : ids)
    out += (out.empty() ? "" : ",") + g.classes()[static_cast<std::size_t>(c)].label;
  return out;
}

// Records steps and compares each computed value with its printed
// counterpart, when one is available.
class Replay {
public:
  Replay(DerivationLog& log, const References* refs, std::string section)
      : log_(log), refs_(refs), section_(std::move(section))
  {
  }

  DerivationStep& step(std::string action, std::string stage, std::string output,
                       const ClassFunction* chi = nullptr)
  {
    DerivationStep s;
    s.index = static_cast<int>(log_.steps.size()) + 1;
    s.section = section_;
    s.action = std::move(action);
    s.cite = section_ + ":" + stage;
    s.output = std::move(output);
    if (chi) {
      s.degree = chi->degree();
      s.norm = norm(*chi).to_string();
    }
    log_.steps.push_back(std::move(s));
    return log_.steps.back();
  }

  void note(std::string text) { current().notes.push_back(std::move(text)); }

  CycNum ip(const std::string& a, const std::string& b, const ClassFunction& x, const ClassFunction& y)
  {
    const CycNum v = inner_product(x, y);
    scalar("ip." + a + "." + b, v, DivergenceKind::inner_product);
    return v;
  }

  void scalar(const std::string& suffix, const CycNum& v, DivergenceKind kind)
  {
    StepCheck c{key(suffix), kind, v.to_string(), std::nullopt, true, {}};
    if (const auto* printed = lookup(c.key); printed && printed->size() == 1) {
      c.printed = printed->front();
      c.matches = CycNum::parse(printed->front()) == v;
    }
    record(std::move(c));
  }

  void text(const std::string& suffix, const std::string& computed, DivergenceKind kind)
  {
    StepCheck c{key(suffix), kind, computed, std::nullopt, true, {}};
    if (const auto* printed = lookup(c.key); printed && printed->size() == 1) {
      c.printed = printed->front();
      c.matches = printed->front() == computed;
    }
    record(std::move(c));
  }

  // Rows may match after exchanging columns of the same cycle type, since
  // the _A/_B suffixes are a naming choice.
  void row(const std::string& name, const ClassFunction& chi)
  {
    StepCheck c{key("row." + name), DivergenceKind::row, row_string(chi), std::nullopt, true, {}};
    if (const auto* printed = lookup(c.key)) {
      c.printed = join(*printed);
      c.matches = false;
      if (printed->size() == chi.size()) {
        std::vector<CycNum> ref;
        for (const auto& lit : *printed)
          ref.push_back(CycNum::parse(lit));
        for (const auto& perm : column_permutations(*chi.group)) {
          bool eq = true;
          for (std::size_t k = 0; k < chi.size() && eq; ++k)
            eq = chi[k] == ref[static_cast<std::size_t>(perm[k])];
          if (eq) {
            c.matches = true;
            if (!std::is_sorted(perm.begin(), perm.end()))
              c.note = "matches after exchanging same-type columns";
            break;
          }
        }
      }
    }
    record(std::move(c));
  }

  // Requires a norm-1 class function of positive degree.
  void accept(const std::string& name, const ClassFunction& chi)
  {
    const CycNum n = norm(chi);
    const long d = chi.degree();
    if (n != CycNum(1L) || d <= 0)
      throw VerificationError(section_ + ": " + name + " is not irreducible (norm " + n.to_string() +
                              ", degree " + std::to_string(d) + ")");
    note(name + " has norm 1 and degree " + std::to_string(d) + " > 0: irreducible");
  }

  // "chi_0+chi_1" from multiplicities against the named known characters.
  std::string decompose(const std::string& suffix, const ClassFunction& chi,
                        const std::vector<std::pair<std::string, ClassFunction>>& known, Reduction* out = nullptr)
  {
    std::vector<ClassFunction> basis;
    for (const auto& k : known)
      basis.push_back(k.second);
    Reduction r = reduce_by_known(chi, basis);
    std::string s;
    for (std::size_t i = 0; i < known.size(); ++i) {
      const long m = r.multiplicities[i];
      if (m == 0)
        continue;
      s += (s.empty() ? "" : "+") + (m == 1 ? std::string() : std::to_string(m) + "*") + known[i].first;
    }
    std::string shown = s;
    if (r.residual != ClassFunction::zero(chi.group))
      shown += (shown.empty() ? "" : "+") + std::string("rest(") + std::to_string(r.residual.degree()) + ")";
    text(suffix, shown.empty() ? "0" : shown, DivergenceKind::decomposition);
    if (out)
      *out = std::move(r);
    return s;
  }

private:
  DerivationStep& current()
  {
    if (log_.steps.empty())
      throw std::logic_error("replay check before any step");
    return log_.steps.back();
  }

  std::string key(const std::string& suffix) const { return section_ + "." + suffix; }

  const std::vector<std::string>* lookup(const std::string& k) const { return refs_ ? refs_->find(k) : nullptr; }

  void record(StepCheck c)
  {
    if (c.printed && !c.matches) {
      log_.divergences.push_back({c.key, c.kind, *c.printed, c.computed,
                                  refs_ && refs_->documented.count(c.key) > 0});
    }
    current().checks.push_back(std::move(c));
  }

  DerivationLog& log_;
  const References* refs_;
  std::string section_;
};

std::vector<int> classes_of_order(const GroupData& g, int order)
{
  std::vector<int> out;
  for (const auto& cd : g.classes()) {
    if (cd.element_order == order)
      out.push_back(cd.id);
  }
  return out;
}

void require_complete(const CharacterTable& t, const std::string& section)
{
  const GroupData& g = *t.group;
  if (t.rows.size() != g.class_count())
    throw VerificationError(section + ": " + std::to_string(t.rows.size()) + " characters for " +
                            std::to_string(g.class_count()) + " classes");
  std::uint64_t sum = 0;
  for (const auto& r : t.rows)
    sum += static_cast<std::uint64_t>(r.chi.degree() * r.chi.degree());
  if (sum != g.order())
    throw VerificationError(section + ": sum of squared degrees " + std::to_string(sum) + " differs from |G|");
  const auto rep = verify_orthogonality(t);
  if (!rep.ok)
    throw VerificationError(section + ": derived table fails orthogonality");
}

// Real characters are counted against real classes; the remainder pair up.
std::size_t pending_pairs(const CharacterTable& partial)
{
  const GroupData& g = *partial.group;
  std::size_t real_classes = 0;
  for (const auto& cd : g.classes())
    real_classes += cd.real ? 1 : 0;
  for (const auto& r : partial.rows) {
    if (!r.chi.is_real())
      throw VerificationError("known character " + r.name + " is not real");
  }
  if (partial.rows.size() != real_classes)
    throw VerificationError("real characters found do not account for every real class");
  return (g.class_count() - real_classes) / 2;
}

long residual_of(const CharacterTable& partial)
{
  long r = static_cast<long>(partial.group->order());
  for (const auto& row : partial.rows)
    r -= row.chi.degree() * row.chi.degree();
  return r;
}

const char* const kGreek[] = {"alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta"};

CharacterTable run_g9(const GroupPtr& gp, const References* refs, DerivationLog& log)
{
  CharacterTable table{gp, {}};
  Replay rp(log, refs, "g9");
  const GroupData& g = *gp;
  const auto& el = g.elements();

  std::vector<std::uint32_t> n_idx;
  for (std::uint32_t i = 0; i < el.size(); ++i) {
    if (el[i].is_identity() || el[i].fixed_points() == 0)
      n_idx.push_back(i);
  }
  std::vector<bool> in_n(el.size(), false);
  for (auto i : n_idx)
    in_n[i] = true;
  if (n_idx.size() != 9)
    throw VerificationError("g9: fixed-point-free elements plus identity number " + std::to_string(n_idx.size()));
  for (auto a : n_idx) {
    for (auto b : n_idx) {
      if (!in_n[*g.index_of(el[a] * el[b])])
        throw VerificationError("g9: fixed-point-free elements do not form a subgroup");
    }
  }
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const auto& members = g.class_elements(static_cast<int>(c));
    const bool first = in_n[members.front()];
    for (auto m : members) {
      if (in_n[m] != first)
        throw VerificationError("g9: N is not a union of classes");
    }
  }
  rp.step("regular normal subgroup N = fixed-point-free elements and 1", "normal-subgroup", "N");
  rp.note("|N| = 9, closed under products, union of classes");

  // Point stabilizer H is a complement to N, so G/N is H.
  std::vector<std::uint32_t> h_idx;
  for (std::uint32_t i = 0; i < el.size(); ++i) {
    if (el[i](1) == 1)
      h_idx.push_back(i);
  }
  if (h_idx.size() * n_idx.size() != el.size())
    throw VerificationError("g9: quotient does not have order 8");
  int involutions = 0, order4 = 0;
  for (auto i : h_idx) {
    const int o = el[i].order();
    involutions += o == 2 ? 1 : 0;
    order4 += o == 4 ? 1 : 0;
  }
  if (involutions != 1 || order4 != 6)
    throw VerificationError("g9: quotient is not quaternion");
  // Q8 classes: 0 = 1, 1 = -1, 2..4 = {h, h^-1} ordered by least element index.
  std::map<std::uint32_t, int> q8_class;
  std::vector<std::uint32_t> pair_min;
  for (auto i : h_idx) {
    const int o = el[i].order();
    if (o == 1)
      q8_class[i] = 0;
    else if (o == 2)
      q8_class[i] = 1;
    else
      pair_min.push_back(std::min(i, *g.index_of(el[i].inverse())));
  }
  std::sort(pair_min.begin(), pair_min.end());
  pair_min.erase(std::unique(pair_min.begin(), pair_min.end()), pair_min.end());
  for (auto i : h_idx) {
    if (el[i].order() == 4) {
      const auto m = std::min(i, *g.index_of(el[i].inverse()));
      q8_class[i] = 2 + static_cast<int>(std::find(pair_min.begin(), pair_min.end(), m) - pair_min.begin());
    }
  }
  // Class c -> Q8 class of the H-element in the coset of its representative.
  std::vector<int> fusion;
  for (const auto& cd : g.classes()) {
    int found = -1;
    for (auto h : h_idx) {
      if (in_n[*g.index_of(cd.representative * el[h].inverse())]) {
        found = q8_class.at(h);
        break;
      }
    }
    fusion.push_back(found);
  }
  rp.step("class fusion into G/N = Q8", "quotient", "q");
  {
    std::string f;
    for (std::size_t c = 0; c < fusion.size(); ++c)
      f += (c ? ", " : "") + g.classes()[c].label + "->" + std::to_string(fusion[c]);
    rp.note(f);
  }

  // Columns 1, -1, i, j, k.
  static const int kQ8[5][5] = {
      {1, 1, 1, 1, 1}, {1, 1, 1, -1, -1}, {1, 1, -1, 1, -1}, {1, 1, -1, -1, 1}, {2, -2, 0, 0, 0}};
  std::vector<ClassFunction> lifts;
  for (const auto& psi : kQ8) {
    std::vector<CycNum> v;
    for (int q : fusion)
      v.emplace_back(static_cast<long>(psi[q]));
    lifts.emplace_back(gp, std::move(v));
  }
  const auto four = classes_of_order(g, 4);
  if (four.size() != 3)
    throw VerificationError("g9: expected three classes of elements of order 4");
  auto linear_with_plus_at = [&](int cls) -> const ClassFunction& {
    for (int i = 1; i <= 3; ++i) {
      if (lifts[static_cast<std::size_t>(i)][static_cast<std::size_t>(cls)] == CycNum(1L))
        return lifts[static_cast<std::size_t>(i)];
    }
    throw VerificationError("g9: no linear lift is 1 on " + g.classes()[static_cast<std::size_t>(cls)].label);
  };
  const std::vector<std::pair<std::string, ClassFunction>> named = {
      {"chi_0", lifts[0]},
      {"chi_1", linear_with_plus_at(four[1])},
      {"chi_2", linear_with_plus_at(four[0])},
      {"chi_3", linear_with_plus_at(four[2])},
      {"chi_4", lifts[4]},
  };
  for (const auto& [name, chi] : named) {
    rp.step("lift from Q8", "lift", name, &chi);
    rp.accept(name, chi);
    rp.row(name, chi);
    table.rows.push_back({name, chi});
  }
  const ClassFunction perm = perm_character(gp);
  rp.step("permutation character fix-1", "permutation-character", "chi_5", &perm);
  rp.accept("chi_5", perm);
  rp.row("chi_5", perm);
  table.rows.push_back({"chi_5", perm});

  require_complete(table, "g9");
  rp.step("table complete: 6 characters, sum of squared degrees 72, orthogonality holds", "complete", "G9");
  sort_rows(table);
  return table;
}

CharacterTable run_g10(const GroupPtr& gp, const References* refs, DerivationLog& log)
{
  const GroupPtr hp = stabilizer(gp, {gp->degree()});
  CharacterTable sub = run_g9(hp, refs, log);
  CharacterTable table{gp, {}};
  Replay rp(log, refs, "g10");
  const GroupData& g = *gp;
  const GroupData& h = *hp;
  const auto fusion = fusion_map(h, g);

  rp.step("point stabilizer and class fusion", "fusion", "G9 -> G10");
  {
    std::string f;
    for (std::size_t c = 0; c < fusion.size(); ++c)
      f += (c ? ", " : "") + h.classes()[c].label + "->" + g.classes()[static_cast<std::size_t>(fusion[c])].label;
    rp.note(f);
  }

  const ClassFunction chi0 = ClassFunction::trivial(gp);
  rp.step("trivial character", "trivial", "chi_0", &chi0);
  const ClassFunction chi2 = perm_character(gp);
  rp.step("permutation character fix-1", "permutation-character", "chi_2", &chi2);
  rp.accept("chi_2", chi2);
  rp.row("chi_2", chi2);

  // The order-4 class of G9 that fuses alone.
  const auto four = classes_of_order(h, 4);
  int alone = -1;
  for (int c : four) {
    int same = 0;
    for (int o : four)
      same += fusion[static_cast<std::size_t>(o)] == fusion[static_cast<std::size_t>(c)] ? 1 : 0;
    if (same == 1)
      alone = c;
  }
  if (alone < 0)
    throw VerificationError("g10: no order-4 class of the stabilizer fuses alone");
  const ClassFunction* lam_a = nullptr;
  const ClassFunction* lam_b = nullptr;
  for (const char* name : {"chi_1", "chi_2", "chi_3"}) {
    const ClassFunction& chi = sub.at(name);
    const CycNum v = chi[static_cast<std::size_t>(alone)];
    if (v == CycNum(-1L) && !lam_a)
      lam_a = &chi;
    if (v == CycNum(1L) && !lam_b)
      lam_b = &chi;
  }
  if (!lam_a || !lam_b)
    throw VerificationError("g10: linear characters of the stabilizer do not separate the fused classes");

  const ClassFunction chi_a = induce(*lam_a, fusion, gp);
  rp.step("induce linear character of G9 that is -1 on the unfused order-4 class", "induction", "chi_A", &chi_a);
  rp.row("chi_A", chi_a);
  rp.ip("chi_A", "chi_A", chi_a, chi_a);
  const ClassFunction chi_b = induce(*lam_b, fusion, gp);
  rp.step("induce the other nontrivial linear character of G9", "induction", "chi_B", &chi_b);
  rp.row("chi_B", chi_b);
  rp.ip("chi_B", "chi_B", chi_b, chi_b);
  const ClassFunction chi_c = induce(sub.at("chi_4"), fusion, gp);
  rp.step("induce the 2-dimensional character of G9", "induction", "chi_C", &chi_c);
  rp.row("chi_C", chi_c);
  rp.ip("chi_C", "chi_C", chi_c, chi_c);

  const ClassFunction& chi4 = chi_a;
  rp.step("relabel chi_A", "relabel", "chi_4", &chi4);
  rp.accept("chi_4", chi4);

  const ClassFunction chi_d = sym_alt_square(chi2, SquarePart::antisymmetric);
  rp.step("antisymmetric square of chi_2", "antisymmetric-square", "chi_D", &chi_d);
  rp.row("chi_D", chi_d);
  rp.ip("chi_D", "chi_D", chi_d, chi_d);
  rp.ip("chi_C", "chi_D", chi_c, chi_d);
  const ClassFunction chi_e = sym_alt_square(chi4, SquarePart::antisymmetric);
  rp.step("antisymmetric square of chi_4", "antisymmetric-square", "chi_E", &chi_e);
  rp.row("chi_E", chi_e);

  const ClassFunction chi7 = chi_d - chi_c;
  rp.step("chi_D - chi_C", "subtraction", "chi_7", &chi7);
  rp.ip("chi_7", "chi_7", chi7, chi7);
  rp.accept("chi_7", chi7);
  rp.row("chi_7", chi7);

  rp.step("inner products of chi_E", "antisymmetric-square", "chi_E", &chi_e);
  rp.ip("chi_E", "chi_E", chi_e, chi_e);
  rp.ip("chi_7", "chi_E", chi7, chi_e);
  rp.ip("chi_B", "chi_E", chi_b, chi_e);
  rp.ip("chi_C", "chi_E", chi_c, chi_e);
  const ClassFunction chi3 = chi_e - chi7 - chi_c;
  if (chi3 != chi_e - chi_d)
    throw VerificationError("g10: chi_E - chi_7 - chi_C differs from chi_E - chi_D");
  rp.step("chi_E - chi_7 - chi_C = chi_E - chi_D", "subtraction", "chi_3", &chi3);
  rp.ip("chi_3", "chi_3", chi3, chi3);
  rp.accept("chi_3", chi3);
  rp.row("chi_3", chi3);

  rp.step("inner product with chi_B", "subtraction", "chi_B", &chi_b);
  rp.ip("chi_B", "chi_3", chi_b, chi3);
  const ClassFunction chi1 = chi_b - chi3;
  rp.step("chi_B - chi_3", "subtraction", "chi_1", &chi1);
  rp.accept("chi_1", chi1);
  rp.row("chi_1", chi1);

  CharacterTable partial{gp, {{"chi_0", chi0}, {"chi_1", chi1}, {"chi_2", chi2}, {"chi_3", chi3}, {"chi_4", chi4},
                              {"chi_7", chi7}}};
  const std::size_t np = pending_pairs(partial);
  const long residual = residual_of(partial);
  rp.step("real characters match real classes; remaining characters form conjugate pairs", "conjugate-pairs",
          std::to_string(np) + " pair(s)");
  const auto degs = solve_degree_pair(residual, static_cast<int>(np));
  rp.note("residual " + std::to_string(residual) + " gives " + std::to_string(degs.size()) + " degree solution(s)");
  if (degs.size() != 1)
    throw VerificationError("g10: degree equation has " + std::to_string(degs.size()) + " solutions");
  rp.text("degrees", std::to_string(degs[0][0]), DivergenceKind::value);

  ConjugateColumnsReport report;
  CharacterTable full = solve_conjugate_columns(partial, {{degs[0][0], "chi_5", "chi_6"}}, &report);
  const ClassFunction& chi5 = full.at("chi_5");
  rp.step("orthogonality relations on the remaining columns", "orthogonality", "chi_5, chi_6", &chi5);
  for (const auto& eq : report.real_columns)
    rp.note(eq.column + ": " + eq.linear + ", " + eq.quadratic + " -> " +
            (eq.admissible.empty() ? "none" : eq.admissible.front()));
  for (const auto& n : report.notes)
    rp.note(n);
  rp.row("chi_5", chi5);
  rp.row("chi_6", full.at("chi_6"));
  const int eight = classes_of_order(g, 8).front();
  rp.scalar("value.omega", chi5[static_cast<std::size_t>(eight)], DivergenceKind::value);

  require_complete(full, "g10");
  rp.step("table complete: 8 characters, orthogonality holds", "complete", "G10");
  table = std::move(full);
  sort_rows(table);
  return table;
}

CharacterTable run_g11(const GroupPtr& gp, const References* refs, DerivationLog& log)
{
  const GroupPtr hp = stabilizer(gp, {gp->degree()});
  CharacterTable sub = run_g10(hp, refs, log);
  CharacterTable table{gp, {}};
  Replay rp(log, refs, "g11");
  const GroupData& g = *gp;
  const auto fusion = fusion_map(*hp, g);
  rp.step("point stabilizer and class fusion", "fusion", "G10 -> G11");

  const ClassFunction chi0 = ClassFunction::trivial(gp);
  rp.step("trivial character", "trivial", "chi_0", &chi0);
  const ClassFunction chi1 = perm_character(gp);
  rp.step("permutation character fix-1", "permutation-character", "chi_1", &chi1);
  rp.accept("chi_1", chi1);
  rp.row("chi_1", chi1);

  const ClassFunction s = sym_alt_square(chi1, SquarePart::symmetric);
  const ClassFunction a = sym_alt_square(chi1, SquarePart::antisymmetric);
  rp.step("symmetric square of chi_1", "tensor-square", "chi_S", &s);
  rp.row("chi_S", s);
  rp.ip("chi_S", "chi_S", s, s);
  rp.ip("chi_S", "chi_0", s, chi0);
  rp.ip("chi_S", "chi_1", s, chi1);
  rp.step("antisymmetric square of chi_1", "tensor-square", "chi_A", &a);
  rp.row("chi_A", a);
  rp.ip("chi_A", "chi_A", a, a);

  const ClassFunction& chi8 = a;
  rp.step("chi_A", "tensor-square", "chi_8", &chi8);
  rp.accept("chi_8", chi8);
  rp.row("chi_8", chi8);
  const ClassFunction chi7 = s - chi0 - chi1;
  rp.step("chi_S - chi_0 - chi_1", "tensor-square", "chi_7", &chi7);
  rp.ip("chi_7", "chi_7", chi7, chi7);
  rp.accept("chi_7", chi7);
  rp.row("chi_7", chi7);

  const ClassFunction chi4 = induce(sub.at("chi_1"), fusion, gp);
  rp.step("induce the nontrivial linear character of G10", "induction", "chi_4", &chi4);
  rp.ip("chi_4", "chi_4", chi4, chi4);
  rp.accept("chi_4", chi4);
  rp.row("chi_4", chi4);
  const ClassFunction chi9 = sym_alt_square(chi4, SquarePart::antisymmetric);
  rp.step("antisymmetric square of chi_4", "induction", "chi_9", &chi9);
  rp.ip("chi_9", "chi_9", chi9, chi9);
  rp.accept("chi_9", chi9);
  rp.row("chi_9", chi9);

  CharacterTable partial{gp, {{"chi_0", chi0}, {"chi_1", chi1}, {"chi_4", chi4}, {"chi_7", chi7}, {"chi_8", chi8},
                              {"chi_9", chi9}}};
  const std::size_t np = pending_pairs(partial);
  const long residual = residual_of(partial);
  rp.step("real characters match real classes; remaining characters form conjugate pairs", "conjugate-pairs",
          std::to_string(np) + " pair(s)");
  rp.text("residual", std::to_string(residual), DivergenceKind::value);
  const auto degs = solve_degree_pair(residual, static_cast<int>(np));
  rp.step("exhaustive search for pair degrees", "degree-equation", "d_1, d_2");
  rp.note(std::to_string(residual / 2) + " as a sum of " + std::to_string(np) + " squares: " +
          std::to_string(degs.size()) + " way(s)");
  if (degs.size() != 1)
    throw VerificationError("g11: degree equation has " + std::to_string(degs.size()) + " solutions");
  std::string deg_text;
  for (long v : degs[0])
    deg_text += (deg_text.empty() ? "" : ",") + std::to_string(v);
  rp.text("degrees", deg_text, DivergenceKind::value);

  ConjugateColumnsReport report;
  CharacterTable full = solve_conjugate_columns(
      partial, {{degs[0][0], "chi_2", "chi_3"}, {degs[0][1], "chi_5", "chi_6"}}, &report);
  rp.step("column relations on the real columns", "column-relations", "x_i, y_i");
  for (const auto& eq : report.real_columns) {
    const std::string base = "col." + eq.column;
    rp.text(base + ".linear", eq.linear, DivergenceKind::equation);
    rp.text(base + ".quadratic", eq.quadratic, DivergenceKind::equation);
    rp.text(base + ".solution", eq.admissible.size() == 1 ? eq.admissible.front() : "ambiguous",
            DivergenceKind::equation);
    if (!eq.rejected.empty()) {
      std::string rej;
      for (const auto& r : eq.rejected)
        rej += (rej.empty() ? "" : ";") + r;
      rp.text(base + ".rejected", rej, DivergenceKind::equation);
      rp.note(eq.column + ": rejected " + rej + " (not in Z[zeta_m])");
    }
  }
  const ClassFunction& chi2 = full.at("chi_2");
  const ClassFunction& chi5 = full.at("chi_5");
  rp.step("row and column relations on the non-real columns", "non-real-columns", "chi_2, chi_3, chi_5, chi_6",
          &chi2);
  for (const auto& n : report.notes)
    rp.note(n);
  const auto eight = static_cast<std::size_t>(classes_of_order(g, 8).front());
  const auto eleven = static_cast<std::size_t>(classes_of_order(g, 11).front());
  rp.scalar("value.x6", chi2[eight], DivergenceKind::value);
  rp.scalar("value.x7", chi2[eleven], DivergenceKind::value);
  rp.scalar("value.y6", chi5[eight], DivergenceKind::value);
  rp.scalar("value.y7", chi5[eleven], DivergenceKind::value);
  for (const char* name : {"chi_2", "chi_3", "chi_5", "chi_6"})
    rp.row(name, full.at(name));

  require_complete(full, "g11");
  rp.step("table complete: 10 characters, orthogonality holds", "complete", "G11");
  table = std::move(full);
  sort_rows(table);
  return table;
}

CharacterTable run_g12(const GroupPtr& gp, const References* refs, DerivationLog& log)
{
  const GroupPtr hp = stabilizer(gp, {gp->degree()});
  CharacterTable sub = run_g11(hp, refs, log);
  CharacterTable table{gp, {}};
  Replay rp(log, refs, "g12");
  const GroupData& g = *gp;
  const auto fusion = fusion_map(*hp, g);
  rp.step("point stabilizer and class fusion", "fusion", "G11 -> G12");

  std::vector<std::pair<std::string, ClassFunction>> known;
  auto add = [&](const std::string& name, const ClassFunction& chi) {
    known.emplace_back(name, chi);
    std::sort(known.begin(), known.end(), [](const auto& x, const auto& y) {
      return std::stoi(x.first.substr(4)) < std::stoi(y.first.substr(4));
    });
  };

  const ClassFunction chi0 = ClassFunction::trivial(gp);
  rp.step("trivial character", "trivial", "chi_0", &chi0);
  add("chi_0", chi0);
  const ClassFunction chi1 = perm_character(gp);
  rp.step("permutation character fix-1", "permutation-character", "chi_1", &chi1);
  rp.accept("chi_1", chi1);
  rp.row("chi_1", chi1);
  add("chi_1", chi1);

  const ClassFunction s = sym_alt_square(chi1, SquarePart::symmetric);
  const ClassFunction a = sym_alt_square(chi1, SquarePart::antisymmetric);
  rp.step("symmetric square of chi_1", "tensor-square", "chi_S", &s);
  rp.row("chi_S", s);
  rp.ip("chi_S", "chi_S", s, s);
  rp.ip("chi_S", "chi_0", s, chi0);
  rp.ip("chi_S", "chi_1", s, chi1);
  rp.step("antisymmetric square of chi_1", "tensor-square", "chi_A", &a);
  rp.row("chi_A", a);
  rp.ip("chi_A", "chi_A", a, a);
  const ClassFunction& chi8 = a;
  rp.step("chi_A", "tensor-square", "chi_8", &chi8);
  rp.accept("chi_8", chi8);
  rp.row("chi_8", chi8);
  add("chi_8", chi8);
  const ClassFunction chi6 = s - chi0 - chi1;
  rp.step("chi_S - chi_0 - chi_1", "tensor-square", "chi_6", &chi6);
  rp.accept("chi_6", chi6);
  rp.row("chi_6", chi6);
  add("chi_6", chi6);

  // Induction from G11.
  const CharacterTable& h = sub;
  const ClassFunction ind0 = induce(h.at("chi_0"), fusion, gp);
  rp.step("induce the trivial character of G11", "induction", "ind(chi_0)", &ind0);
  rp.decompose("decomp.ind(chi_0)", ind0, known);
  const ClassFunction ind1 = induce(h.at("chi_1"), fusion, gp);
  rp.step("induce the rational 10-dimensional character of G11", "induction", "ind(chi_1)", &ind1);
  rp.decompose("decomp.ind(chi_1)", ind1, known);

  const ClassFunction chi12 = induce(h.at("chi_2"), fusion, gp);
  rp.step("induce a non-real 10-dimensional character of G11", "induction", "chi_12", &chi12);
  rp.ip("chi_12", "chi_12", chi12, chi12);
  rp.accept("chi_12", chi12);
  rp.row("chi_12", chi12);
  add("chi_12", chi12);

  const ClassFunction chi_v = induce(h.at("chi_9"), fusion, gp);
  rp.step("induce the 55-dimensional character of G11", "induction", "chi_V", &chi_v);
  rp.row("chi_V", chi_v);
  rp.ip("chi_V", "chi_V", chi_v, chi_v);
  for (const auto& [name, chi] : known)
    rp.ip("chi_V", name, chi_v, chi);

  // The 16-dimensional character whose induction has positive imaginary
  // part on the first 11-class.
  const auto eleven = classes_of_order(g, 11);
  ClassFunction chi_b;
  for (const char* name : {"chi_5", "chi_6"}) {
    ClassFunction cand = induce(h.at(name), fusion, gp);
    if (cand[static_cast<std::size_t>(eleven.front())].numeric().imag() > 0) {
      chi_b = std::move(cand);
      break;
    }
  }
  if (!chi_b.group)
    throw VerificationError("g12: no induced 16-dimensional character is non-real on the 11-classes");
  rp.step("induce a non-real 16-dimensional character of G11", "induction", "chi_B", &chi_b);
  rp.row("chi_B", chi_b);
  rp.ip("chi_B", "chi_B", chi_b, chi_b);
  for (const auto& [name, chi] : known)
    rp.ip("chi_B", name, chi_b, chi);

  // Restrictions from Sym(12).
  MurnaghanNakayama mn;
  for (const std::string part : {"11,1", "10,2", "10,1,1"}) {
    const ClassFunction r = restrict_symmetric(Partition::parse(part), gp, &mn);
    std::string label = "none";
    for (const auto& [name, chi] : known) {
      if (chi == r)
        label = name;
    }
    rp.step("restrict the Sym(12) character (" + part + ")", "restriction", "(" + part + ")", &r);
    rp.text("restrict.(" + part + ")", label, DivergenceKind::label);
  }

  // Printed degree-320 row: -4 on the 3-classes, 1 on the 11-classes.
  std::vector<CycNum> target_vals;
  for (const auto& cd : g.classes()) {
    if (cd.id == 0)
      target_vals.emplace_back(320L);
    else if (cd.element_order == 3)
      target_vals.emplace_back(-4L);
    else if (cd.element_order == 11)
      target_vals.emplace_back(1L);
    else
      target_vals.emplace_back(0L);
  }
  const ClassFunction target(gp, std::move(target_vals));
  std::vector<Partition> e_matches;
  for (const auto& p : partitions_of(g.degree())) {
    if (restrict_symmetric(p, gp, &mn) == target)
      e_matches.push_back(p);
  }
  rp.step("search all partitions of 12 for the degree-320 row", "restriction", "chi_E", &target);
  {
    std::string m;
    for (const auto& p : e_matches)
      m += (m.empty() ? "" : "; ") + std::string("(") + p.to_string() + ")";
    rp.note(std::to_string(partitions_of(g.degree()).size()) + " partitions searched, matches: " +
            (m.empty() ? "none" : m));
  }
  if (e_matches.empty())
    throw VerificationError("g12: no partition of 12 restricts to the degree-320 row");
  rp.text("partition.chi_E", e_matches.front().to_string(), DivergenceKind::label);

  struct Restricted {
    std::string name;
    Partition part;
  };
  const std::vector<Restricted> six = {{"chi_(9,3)", Partition({9, 3})},
                                       {"chi_lambdaA", Partition({9, 1, 1, 1})},
                                       {"chi_(8,4)", Partition({8, 4})},
                                       {"chi_(7,5)", Partition({7, 5})},
                                       {"chi_E", e_matches.front()},
                                       {"chi_lambdaB", Partition({8, 1, 1, 1, 1})}};
  std::map<std::string, ClassFunction> res;
  for (const auto& r : six) {
    res[r.name] = restrict_symmetric(r.part, gp, &mn);
    rp.step("restrict the Sym(12) character (" + r.part.to_string() + ")", "restriction", r.name, &res[r.name]);
    rp.row(r.name, res[r.name]);
  }

  const ClassFunction& lam_a = res["chi_lambdaA"];
  rp.step("inner products of chi_lambdaA", "restriction", "chi_lambdaA", &lam_a);
  rp.ip("chi_lambdaA", "chi_lambdaA", lam_a, lam_a);
  rp.ip("chi_lambdaA", "chi_12", lam_a, chi12);
  const ClassFunction chi5 = lam_a - chi12;
  rp.step("chi_lambdaA - chi_12", "subtraction", "chi_5", &chi5);
  rp.ip("chi_5", "chi_5", chi5, chi5);
  rp.accept("chi_5", chi5);
  rp.row("chi_5", chi5);
  add("chi_5", chi5);

  const ClassFunction& lam_b = res["chi_lambdaB"];
  rp.step("inner products of chi_lambdaB", "restriction", "chi_lambdaB", &lam_b);
  rp.ip("chi_lambdaB", "chi_lambdaB", lam_b, lam_b);
  rp.ip("chi_lambdaB", "chi_12", lam_b, chi12);
  const ClassFunction chi_x = lam_b - chi12;
  rp.step("chi_lambdaB - chi_12", "subtraction", "chi_X", &chi_x);
  rp.row("chi_X", chi_x);
  const ClassFunction& r84 = res["chi_(8,4)"];
  rp.step("inner products of chi_(8,4)", "restriction", "chi_(8,4)", &r84);
  rp.ip("chi_(8,4)", "chi_(8,4)", r84, r84);
  rp.ip("chi_(8,4)", "chi_6", r84, chi6);
  const ClassFunction chi_y = r84 - chi6;
  rp.step("chi_(8,4) - chi_6", "subtraction", "chi_Y", &chi_y);
  rp.row("chi_Y", chi_y);
  rp.ip("chi_X", "chi_X", chi_x, chi_x);
  rp.ip("chi_Y", "chi_Y", chi_y, chi_y);
  rp.ip("chi_X", "chi_Y", chi_x, chi_y);
  const ClassFunction chi2 = chi_y - chi_x;
  rp.step("chi_Y - chi_X", "subtraction", "chi_2", &chi2);
  rp.ip("chi_2", "chi_2", chi2, chi2);
  rp.accept("chi_2", chi2);
  rp.row("chi_2", chi2);
  add("chi_2", chi2);

  const ClassFunction s2 = sym_alt_square(chi2, SquarePart::symmetric);
  rp.step("symmetric square of chi_2", "tensor-square", "chi_S'", &s2);
  rp.decompose("decomp.sym(chi_2)", s2, known);
  const ClassFunction chi9 = sym_alt_square(chi2, SquarePart::antisymmetric);
  rp.step("antisymmetric square of chi_2", "tensor-square", "chi_9", &chi9);
  rp.accept("chi_9", chi9);
  rp.row("chi_9", chi9);
  add("chi_9", chi9);

  // Inner products of the restrictions and chi_V with every known irreducible.
  rp.step("inner products with the known irreducibles", "inner-product-table", "multiplicities");
  std::vector<std::pair<std::string, const ClassFunction*>> table_rows;
  for (const auto& r : six)
    table_rows.emplace_back(r.name, &res[r.name]);
  table_rows.emplace_back("chi_V", &chi_v);
  for (const auto& [rn, rc] : table_rows) {
    for (const auto& [kn, kc] : known)
      rp.ip(rn, kn, *rc, kc);
  }

  // Compounds: each restriction minus its known constituents.
  const std::vector<std::pair<std::string, std::string>> compound_src = {{"chi_C", "chi_(9,3)"},
                                                                         {"chi_D", "chi_(7,5)"},
                                                                         {"chi_E", "chi_E"},
                                                                         {"chi_F", "chi_lambdaB"},
                                                                         {"chi_W", "chi_V"}};
  std::vector<ClassFunction> compounds;
  std::vector<std::string> compound_names;
  for (const auto& [cn, src] : compound_src) {
    const ClassFunction& base = src == "chi_V" ? chi_v : res[src];
    Reduction red;
    rp.step("remove known constituents from " + src, "compounds", cn, &base);
    const std::string parts = rp.decompose("decomp." + src, base, known, &red);
    rp.note(cn + " = " + src + (parts.empty() ? "" : " - (" + parts + ")"));
    compounds.push_back(red.residual);
    compound_names.push_back(cn);
    rp.step("compound", "compounds", cn, &compounds.back());
    rp.row(cn, compounds.back());
  }

  rp.step("Gram matrix of the compounds", "gram", "Gram(C,D,E,F,W)");
  for (std::size_t i = 0; i < compounds.size(); ++i) {
    for (std::size_t j = i; j < compounds.size(); ++j)
      rp.ip(compound_names[i], compound_names[j], compounds[i], compounds[j]);
  }
  const OverlapSolution ov = resolve_overlap_system(compounds);
  rp.step("resolve compounds into distinct irreducibles", "overlap-system", "alpha..epsilon");
  rp.note(std::to_string(ov.gram_assignments) + " membership assignment(s) fit the Gram matrix; degrees leave one");
  for (std::size_t i = 0; i < compounds.size(); ++i) {
    std::string m;
    for (std::size_t j = 0; j < ov.membership[i].size(); ++j) {
      if (ov.membership[i][j])
        m += (m.empty() ? "" : "+") + std::string(kGreek[j]);
    }
    rp.text("overlap." + compound_names[i], m, DivergenceKind::decomposition);
  }
  {
    std::string degs;
    for (long v : ov.degrees)
      degs += (degs.empty() ? "" : ",") + std::to_string(v);
    rp.text("overlap.degrees", degs, DivergenceKind::value);
  }
  if (ov.irreducibles.size() != 5)
    throw VerificationError("g12: overlap system produced " + std::to_string(ov.irreducibles.size()) +
                            " irreducibles, expected 5");
  const ClassFunction half_formula =
      CycNum(Rational(1, 2)) * (compounds[4] - compounds[3] + compounds[0] - compounds[1]);
  rp.note(std::string("alpha = 1/2(chi_W - chi_F + chi_C - chi_D): ") +
          (half_formula == ov.irreducibles[0] ? "holds" : "fails"));

  const std::vector<std::string> greek_names = {"chi_11", "chi_7", "chi_14", "chi_13", "chi_10"};
  for (std::size_t j = 0; j < 5; ++j) {
    const ClassFunction& chi = ov.irreducibles[j];
    rp.step(std::string("extract ") + kGreek[j], "overlap-system", greek_names[j], &chi);
    rp.accept(greek_names[j], chi);
    rp.row(greek_names[j], chi);
    add(greek_names[j], chi);
  }

  const ClassFunction& chi14 = ov.irreducibles[2];
  rp.step("inner product of chi_B with chi_14", "final-pair", "chi_B", &chi_b);
  rp.ip("chi_B", "chi_14", chi_b, chi14);
  ClassFunction chi3 = chi_b - chi14;
  ClassFunction chi4 = chi3.conj();
  for (std::size_t c = 0; c < chi3.size(); ++c) {
    if (chi3[c] != chi4[c]) {
      if (chi3[c].numeric().imag() < 0)
        std::swap(chi3, chi4);
      break;
    }
  }
  rp.step("chi_B - chi_14", "final-pair", "chi_3", &chi3);
  rp.accept("chi_3", chi3);
  rp.row("chi_3", chi3);
  rp.step("complex conjugate of chi_3", "final-pair", "chi_4", &chi4);
  rp.accept("chi_4", chi4);
  rp.row("chi_4", chi4);
  add("chi_3", chi3);
  add("chi_4", chi4);

  for (const auto& [name, chi] : known)
    table.rows.push_back({name, chi});
  require_complete(table, "g12");
  rp.step("table complete: 15 characters, orthogonality holds", "complete", "G12");
  sort_rows(table);
  return table;
}

template <class Run>
Derivation run_logged(Run run, const GroupPtr& g, const References* refs)
{
  Derivation d;
  try {
    d.table = run(g, refs, d.log);
  } catch (const VerificationError& e) {
    throw DerivationError(e.what(), std::move(d.log));
  }
  return d;
}

} // namespace

Derivation derive_g9(const GroupPtr& g, const References* refs) { return run_logged(run_g9, g, refs); }
Derivation derive_g10(const GroupPtr& g, const References* refs) { return run_logged(run_g10, g, refs); }
Derivation derive_g11(const GroupPtr& g, const References* refs) { return run_logged(run_g11, g, refs); }
Derivation derive_g12(const GroupPtr& g, const References* refs) { return run_logged(run_g12, g, refs); }

Derivation derive(const std::string& group, const GroupPtr& g, const References* refs)
{
  if (group == "g9")
    return derive_g9(g, refs);
  if (group == "g10")
    return derive_g10(g, refs);
  if (group == "g11")
    return derive_g11(g, refs);
  if (group == "g12")
    return derive_g12(g, refs);
  throw std::invalid_argument("unknown group '" + group + "' (expected g9, g10, g11 or g12)");
}

StructureReport structure_report(const CharacterTable& t)
{
  StructureReport rep;
  const GroupData& g = *t.group;
  const auto& classes = g.classes();
  std::set<std::vector<int>> proper;
  for (const auto& row : t.rows) {
    const auto ker = kernel_classes(row.chi);
    if (ker.size() == classes.size())
      continue;
    std::uint64_t order = 0;
    for (int c : ker)
      order += classes[static_cast<std::size_t>(c)].size;
    rep.kernels.push_back({row.name, ker, order});
    if (order > 1)
      proper.insert(ker);
  }
  rep.simple = proper.empty();
  for (const auto& ker : proper) {
    std::uint64_t order = 0;
    for (int c : ker)
      order += classes[static_cast<std::size_t>(c)].size;
    rep.proper_kernel_orders.push_back(order);
    if (order * 2 == g.order()) {
      rep.index2_kernel = order;
      bool clean = true;
      for (const auto& cd : classes) {
        if (cd.element_order == 2 && std::find(ker.begin(), ker.end(), cd.id) == ker.end())
          clean = false;
      }
      rep.no_involution_outside = clean;
    }
  }
  std::sort(rep.proper_kernel_orders.begin(), rep.proper_kernel_orders.end());
  rep.unique_proper_kernel = proper.size() == 1;
  if (rep.simple) {
    rep.summary = "simple: all " + std::to_string(rep.kernels.size()) + " nontrivial irreducibles faithful";
  } else {
    rep.summary = "not simple: " + std::to_string(proper.size()) + " distinct proper nontrivial kernel(s)";
    for (const auto& ker : proper) {
      std::uint64_t order = 0;
      for (int c : ker)
        order += classes[static_cast<std::size_t>(c)].size;
      rep.summary += "; order " + std::to_string(order) + " {" + class_list(g, ker) + "}";
    }
    if (rep.index2_kernel && rep.unique_proper_kernel)
      rep.summary += rep.no_involution_outside ? "; index 2, no involutions outside (non-split)"
                                               : "; index 2, involutions outside (split)";
  }
  return rep;
}

} // namespace chartab
