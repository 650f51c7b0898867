#include "derivation.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace chartab {

namespace {

struct LinearSolution {
  bool consistent = true;
  std::vector<CycNum> particular;             // free variables set to 0
  std::vector<int> free_vars;
  std::vector<std::vector<CycNum>> null_basis; // one vector per free variable
};

LinearSolution solve_linear(std::vector<std::vector<CycNum>> a, std::vector<CycNum> b, std::size_t unknowns)
{
  LinearSolution out;
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < unknowns && row < a.size(); ++col) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][col].is_zero())
      ++piv;
    if (piv == a.size())
      continue;
    std::swap(a[piv], a[row]);
    std::swap(b[piv], b[row]);
    const CycNum inv = a[row][col].inverse();
    for (auto& v : a[row])
      v *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero())
        continue;
      const CycNum f = a[r][col];
      for (std::size_t c = 0; c < unknowns; ++c)
        a[r][c] -= f * a[row][c];
      b[r] -= f * b[row];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  for (std::size_t r = row; r < a.size(); ++r) {
    if (!b[r].is_zero())
      out.consistent = false;
  }
  std::vector<bool> is_pivot(unknowns, false);
  for (int c : pivot_col)
    is_pivot[static_cast<std::size_t>(c)] = true;
  out.particular.assign(unknowns, CycNum());
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    out.particular[static_cast<std::size_t>(pivot_col[r])] = b[r];
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f])
      continue;
    out.free_vars.push_back(static_cast<int>(f));
    std::vector<CycNum> v(unknowns);
    v[f] = CycNum(1L);
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[static_cast<std::size_t>(pivot_col[r])] = -a[r][f];
    out.null_basis.push_back(std::move(v));
  }
  return out;
}

Rational as_rational(const CycNum& x, const std::string& what)
{
  auto q = x.rational();
  if (!q)
    throw VerificationError(what + " is irrational: " + x.to_string());
  return *q;
}

bool admissible(const CycNum& v, long order)
{
  return lies_in_cyclotomic_field(v, order) && v.is_algebraic_integer();
}

// "5x+8y=-10" from rational coefficients, scaled to coprime integers.
std::string format_relation(const std::vector<Rational>& coeffs, const std::vector<std::string>& terms,
                            const Rational& rhs)
{
  mpz_class den = rhs.get_den();
  for (const auto& c : coeffs)
    den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> ints;
  for (const auto& c : coeffs)
    ints.push_back(mpz_class(c * den));
  mpz_class r(rhs * den);
  mpz_class g = 0;
  for (const auto& v : ints)
    g = gcd(g, v);
  g = gcd(g, r);
  if (g == 0)
    g = 1;
  std::string out;
  for (std::size_t i = 0; i < ints.size(); ++i) {
    mpz_class v = ints[i] / g;
    if (v == 0)
      continue;
    if (v < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (abs(v) != 1)
      out += mpz_class(abs(v)).get_str();
    out += terms[i];
  }
  return (out.empty() ? "0" : out) + "=" + mpz_class(r / g).get_str();
}

std::string tuple_string(const std::vector<CycNum>& v)
{
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + v[i].to_string();
  return out + ")";
}

bool is_square(long v, long& root)
{
  if (v < 0)
    return false;
  long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v)
    --r;
  while ((r + 1) * (r + 1) <= v)
    ++r;
  root = r;
  return r * r == v;
}

} // namespace

std::vector<std::vector<long>> solve_degree_pair(long residual, int pair_count)
{
  if (residual < 0 || residual % 2 != 0)
    throw std::invalid_argument("solve_degree_pair: residual " + std::to_string(residual) +
                                " is not a nonnegative even number");
  if (pair_count < 1)
    throw std::invalid_argument("solve_degree_pair: pair_count must be positive");
  // Each pair contributes 2 d^2.
  const long target = residual / 2;
  std::vector<std::vector<long>> out;
  std::vector<long> current;
  std::function<void(long, long, int)> rec = [&](long remaining, long min_d, int left) {
    if (left == 1) {
      long r = 0;
      if (is_square(remaining, r) && r >= min_d) {
        current.push_back(r);
        out.push_back(current);
        current.pop_back();
      }
      return;
    }
    for (long d = min_d; d * d * left <= remaining; ++d) {
      current.push_back(d);
      rec(remaining - d * d, d, left - 1);
      current.pop_back();
    }
  };
  rec(target, 1, pair_count);
  return out;
}

CharacterTable solve_conjugate_columns(const CharacterTable& partial, const std::vector<ConjugatePair>& pairs,
                                       ConjugateColumnsReport* report)
{
  ConjugateColumnsReport local;
  ConjugateColumnsReport& rep = report ? *report : local;
  const GroupPtr& gp = partial.group;
  const GroupData& g = *gp;
  const auto& classes = g.classes();
  const std::size_t k = classes.size();
  const std::size_t np = pairs.size();
  if (np == 0 || np > 2)
    throw VerificationError("conjugate-column solver handles one or two pairs, got " + std::to_string(np));
  if (partial.rows.size() + 2 * np != k)
    throw VerificationError("known rows plus conjugate pairs do not match the class count");

  std::vector<const ClassFunction*> known;
  for (const auto& r : partial.rows)
    known.push_back(&r.chi);

  // Identity column.
  {
    Rational total = 0;
    for (const auto* chi : known)
      total += Rational(chi->degree() * chi->degree());
    for (const auto& p : pairs)
      total += Rational(2 * p.degree * p.degree);
    if (total != Rational(static_cast<unsigned long>(g.order())))
      throw VerificationError("degrees do not satisfy sum d^2 = |G|");
  }

  std::vector<int> real_cols;
  std::vector<int> nonreal_reps;
  for (std::size_t c = 1; c < k; ++c) {
    if (classes[c].real)
      real_cols.push_back(static_cast<int>(c));
    else if (static_cast<int>(c) < classes[c].inverse_class)
      nonreal_reps.push_back(static_cast<int>(c));
  }

  // Real columns: sum_p 2 d_p x_p = -S, sum_p 2 x_p^2 = N.
  std::vector<std::vector<std::vector<CycNum>>> real_cands;
  const std::vector<std::string> vars = np == 1 ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "y"};
  for (int c : real_cols) {
    const auto& cd = classes[static_cast<std::size_t>(c)];
    CycNum s, nn(static_cast<long>(cd.centralizer_order));
    for (const auto* chi : known) {
      s += CycNum(chi->degree()) * (*chi)[static_cast<std::size_t>(c)];
      nn -= (*chi)[static_cast<std::size_t>(c)] * (*chi)[static_cast<std::size_t>(c)].conj();
    }
    const Rational rhs = -as_rational(s, "column sum at " + cd.label);
    const Rational n = as_rational(nn, "column norm at " + cd.label);
    ColumnEquation eq;
    eq.column = cd.label;
    std::vector<Rational> lin;
    for (const auto& p : pairs)
      lin.push_back(Rational(2 * p.degree));
    eq.linear = format_relation(lin, vars, rhs);
    eq.quadratic = format_relation(std::vector<Rational>(np, Rational(2)),
                                   np == 1 ? std::vector<std::string>{"x^2"} : std::vector<std::string>{"x^2", "y^2"},
                                   n);
    std::vector<std::vector<CycNum>> sols;
    if (np == 1) {
      const Rational x = rhs / lin[0];
      if (2 * x * x == n)
        sols.push_back({CycNum(x)});
    } else {
      // a1 x + a2 y = rhs, x^2 + y^2 = r.
      const Rational a1 = lin[0], a2 = lin[1], r = n / 2;
      const Rational qa = a1 * a1 + a2 * a2;
      const Rational qb = -2 * a1 * rhs;
      const Rational qc = rhs * rhs - r * a2 * a2;
      const Rational disc = qb * qb - 4 * qa * qc;
      if (disc >= 0) {
        const CycNum sq = sqrt_rational(disc);
        std::vector<CycNum> xs{(CycNum(-qb) + sq) / CycNum(Rational(2 * qa))};
        if (disc != 0)
          xs.push_back((CycNum(-qb) - sq) / CycNum(Rational(2 * qa)));
        for (const auto& x : xs)
          sols.push_back({x, (CycNum(rhs) - CycNum(a1) * x) / CycNum(a2)});
      }
    }
    std::vector<std::vector<CycNum>> keep;
    for (auto& s2 : sols) {
      const bool ok = std::all_of(s2.begin(), s2.end(),
                                  [&](const CycNum& v) { return admissible(v, cd.element_order); });
      (ok ? eq.admissible : eq.rejected).push_back(tuple_string(s2));
      if (ok)
        keep.push_back(std::move(s2));
    }
    rep.real_columns.push_back(eq);
    if (keep.empty())
      throw VerificationError("no admissible values in column " + cd.label + " (" + eq.linear + ", " +
                              eq.quadratic + ")");
    real_cands.push_back(std::move(keep));
  }

  for (int c : nonreal_reps) {
    for (const auto* chi : known) {
      if ((*chi)[static_cast<std::size_t>(c)] != (*chi)[static_cast<std::size_t>(c)].conj())
        throw VerificationError("known row is not real at " + classes[static_cast<std::size_t>(c)].label);
    }
  }

  const std::size_t nr = nonreal_reps.size();
  std::map<std::string, CharacterTable> solutions;

  auto name_rows = [&](std::vector<NamedCharacter>& rows_out, const std::vector<ClassFunction>& us) {
    for (std::size_t p = 0; p < np; ++p) {
      const ClassFunction& u = us[p];
      const ClassFunction ub = u.conj();
      bool u_first = true;
      for (std::size_t c = 0; c < k; ++c) {
        if (u[c] != ub[c]) {
          u_first = u[c].numeric().imag() > 0;
          break;
        }
      }
      rows_out.push_back({pairs[p].name, u_first ? u : ub});
      rows_out.push_back({pairs[p].partner, u_first ? ub : u});
    }
  };

  std::vector<std::size_t> pick(real_cols.size(), 0);
  for (;;) {
    // x[p][c] for real columns and the identity.
    std::vector<std::vector<CycNum>> x(np, std::vector<CycNum>(k));
    for (std::size_t p = 0; p < np; ++p)
      x[p][0] = CycNum(pairs[p].degree);
    for (std::size_t i = 0; i < real_cols.size(); ++i) {
      for (std::size_t p = 0; p < np; ++p)
        x[p][static_cast<std::size_t>(real_cols[i])] = real_cands[i][pick[i]][p];
    }

    // Real parts a[p][r]: column relation against the identity and row
    // relations against every known row.
    const std::size_t na = np * nr;
    std::vector<std::vector<CycNum>> am;
    std::vector<CycNum> ab;
    for (std::size_t r = 0; r < nr; ++r) {
      const auto c = static_cast<std::size_t>(nonreal_reps[r]);
      std::vector<CycNum> row(na);
      CycNum s;
      for (const auto* chi : known)
        s += CycNum(chi->degree()) * (*chi)[c];
      for (std::size_t p = 0; p < np; ++p)
        row[p * nr + r] = CycNum(2 * pairs[p].degree);
      am.push_back(row);
      ab.push_back(-s);
    }
    for (std::size_t p = 0; p < np; ++p) {
      for (const auto* chi : known) {
        std::vector<CycNum> row(na);
        CycNum rhs;
        for (std::size_t c = 0; c < k; ++c) {
          if (c != 0 && !classes[c].real)
            continue;
          rhs -= CycNum(static_cast<long>(classes[c].size)) * x[p][c] * (*chi)[c].conj();
        }
        for (std::size_t r = 0; r < nr; ++r) {
          const auto c = static_cast<std::size_t>(nonreal_reps[r]);
          row[p * nr + r] = CycNum(static_cast<long>(2 * classes[c].size)) * (*chi)[c];
        }
        am.push_back(row);
        ab.push_back(rhs);
      }
    }
    const LinearSolution asol = solve_linear(am, ab, na);
    if (!asol.consistent)
      throw VerificationError("real parts of the non-real columns are inconsistent");
    if (!asol.free_vars.empty())
      throw VerificationError("real parts of the non-real columns are underdetermined");
    const std::vector<CycNum>& a = asol.particular;

    // Moduli t[p][r] = |z|^2.
    const std::size_t nt = np * nr;
    std::vector<std::vector<CycNum>> tm;
    std::vector<CycNum> tb;
    std::vector<Rational> bound(nr);
    for (std::size_t r = 0; r < nr; ++r) {
      const auto c = static_cast<std::size_t>(nonreal_reps[r]);
      const auto cb = static_cast<std::size_t>(classes[c].inverse_class);
      CycNum norm_rhs(static_cast<long>(classes[c].centralizer_order));
      CycNum cross;
      CycNum asq;
      for (const auto* chi : known) {
        norm_rhs -= (*chi)[c] * (*chi)[c].conj();
        cross += (*chi)[c] * (*chi)[cb].conj();
      }
      for (std::size_t p = 0; p < np; ++p)
        asq += CycNum(4L) * a[p * nr + r] * a[p * nr + r];
      std::vector<CycNum> row(nt);
      for (std::size_t p = 0; p < np; ++p)
        row[p * nr + r] = CycNum(2L);
      tm.push_back(row);
      tb.push_back(norm_rhs);
      // Column c against its inverse class: sum_p 2 (2 a^2 - t) = -cross.
      tm.push_back(row);
      tb.push_back(asq + cross);
      bound[r] = as_rational(norm_rhs, "column norm") / 2;
    }
    for (std::size_t p = 0; p < np; ++p) {
      std::vector<CycNum> row(nt);
      CycNum rhs(static_cast<long>(g.order()));
      for (std::size_t c = 0; c < k; ++c) {
        if (c == 0 || classes[c].real)
          rhs -= CycNum(static_cast<long>(classes[c].size)) * x[p][c] * x[p][c].conj();
      }
      for (std::size_t r = 0; r < nr; ++r) {
        const auto c = static_cast<std::size_t>(nonreal_reps[r]);
        row[p * nr + r] = CycNum(static_cast<long>(2 * classes[c].size));
      }
      tm.push_back(row);
      tb.push_back(rhs);
    }
    const LinearSolution tsol = solve_linear(tm, tb, nt);
    if (!tsol.consistent)
      throw VerificationError("moduli of the non-real columns are inconsistent");
    if (tsol.free_vars.size() > 2)
      throw VerificationError("moduli of the non-real columns have too many free parameters");

    // t is a rational algebraic integer, hence a nonnegative integer bounded
    // by its column norm.
    std::vector<std::vector<long>> t_options;
    std::vector<long> free_val(tsol.free_vars.size(), 0);
    std::function<void(std::size_t)> enum_free = [&](std::size_t f) {
      if (f == free_val.size()) {
        std::vector<long> t(nt);
        for (std::size_t u = 0; u < nt; ++u) {
          CycNum v = tsol.particular[u];
          for (std::size_t j = 0; j < free_val.size(); ++j)
            v += CycNum(free_val[j]) * tsol.null_basis[j][u];
          auto vi = v.rational_integer();
          if (!vi || *vi < 0 || Rational(*vi) > bound[u % nr])
            return;
          t[u] = *vi;
        }
        t_options.push_back(std::move(t));
        return;
      }
      const auto u = static_cast<std::size_t>(tsol.free_vars[f]);
      const long hi = mpz_class(bound[u % nr].get_num() / bound[u % nr].get_den()).get_si();
      for (long v = 0; v <= hi; ++v) {
        free_val[f] = v;
        enum_free(f + 1);
      }
    };
    enum_free(0);
    rep.notes.push_back("non-real columns: " + std::to_string(t_options.size()) +
                        " integral modulus assignment(s) from " + std::to_string(tsol.free_vars.size()) +
                        " free parameter(s)");

    for (const auto& t : t_options) {
      // z = a +- sqrt(a^2 - t), admissible in Z[zeta_m].
      std::vector<std::vector<CycNum>> zc(nt);
      bool viable = true;
      for (std::size_t u = 0; u < nt && viable; ++u) {
        const auto c = static_cast<std::size_t>(nonreal_reps[u % nr]);
        const Rational av = as_rational(a[u], "real part");
        const Rational d = av * av - Rational(t[u]);
        if (d > 0) {
          viable = false;
          break;
        }
        const CycNum root = sqrt_rational(d);
        std::vector<CycNum> opts{CycNum(av) + root};
        if (d != 0)
          opts.push_back(CycNum(av) - root);
        for (auto& z : opts) {
          if (admissible(z, classes[c].element_order))
            zc[u].push_back(z);
        }
        viable = !zc[u].empty();
      }
      if (!viable)
        continue;
      std::vector<std::size_t> zi(nt, 0);
      for (;;) {
        std::vector<ClassFunction> us;
        for (std::size_t p = 0; p < np; ++p) {
          std::vector<CycNum> vals = x[p];
          for (std::size_t r = 0; r < nr; ++r) {
            const auto c = static_cast<std::size_t>(nonreal_reps[r]);
            const CycNum& z = zc[p * nr + r][zi[p * nr + r]];
            vals[c] = z;
            vals[static_cast<std::size_t>(classes[c].inverse_class)] = z.conj();
          }
          us.emplace_back(gp, std::move(vals));
        }
        CharacterTable full{gp, partial.rows};
        name_rows(full.rows, us);
        if (verify_orthogonality(full).ok) {
          std::string key;
          for (std::size_t i = partial.rows.size(); i < full.rows.size(); ++i) {
            key += full.rows[i].name + ":";
            for (const auto& v : full.rows[i].chi.values)
              key += v.to_string() + ",";
          }
          solutions.emplace(std::move(key), std::move(full));
        }
        std::size_t u = 0;
        while (u < nt && ++zi[u] == zc[u].size())
          zi[u++] = 0;
        if (u == nt)
          break;
      }
    }

    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == real_cands[i].size())
      pick[i++] = 0;
    if (i == pick.size())
      break;
  }

  rep.solutions = solutions.size();
  if (solutions.size() != 1)
    throw VerificationError("conjugate-column system has " + std::to_string(solutions.size()) +
                            " admissible completions, expected exactly one");
  return solutions.begin()->second;
}

OverlapSolution resolve_overlap_system(const std::vector<ClassFunction>& compounds)
{
  const std::size_t n = compounds.size();
  if (n == 0 || n > 8)
    throw std::invalid_argument("overlap system needs between 1 and 8 compounds");
  OverlapSolution out;
  out.gram.assign(n, std::vector<long>(n, 0));
  std::vector<long> deg(n);
  for (std::size_t i = 0; i < n; ++i) {
    deg[i] = compounds[i].degree();
    for (std::size_t j = 0; j < n; ++j) {
      auto v = inner_product(compounds[i], compounds[j]).rational_integer();
      if (!v || *v < 0)
        throw VerificationError("Gram matrix entry is not a nonnegative integer");
      out.gram[i][j] = *v;
    }
  }
  long total = 0;
  for (std::size_t i = 0; i < n; ++i)
    total += out.gram[i][i];

  // Columns as bit masks, bit (n-1-i) set when compound i contains the
  // irreducible; chosen in descending order so each set is visited once.
  const unsigned top = (1u << n) - 1;
  std::vector<OverlapSolution> valid;
  std::vector<unsigned> chosen;
  std::vector<std::vector<long>> shared(n, std::vector<long>(n, 0));
  std::function<void(unsigned, long)> rec = [&](unsigned below, long ones) {
    // shared[i][j] never exceeds the Gram entry, so equal diagonal totals
    // leave only the off-diagonal check.
    if (ones == total) {
      if (shared != out.gram)
        return;
      ++out.gram_assignments;
      const std::size_t m = chosen.size();
      if (m > n)
        return;
      std::vector<std::vector<CycNum>> mm(n, std::vector<CycNum>(m));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
          mm[i][j] = CycNum(static_cast<long>((chosen[j] >> (n - 1 - i)) & 1u));
      std::vector<CycNum> db;
      for (long d : deg)
        db.emplace_back(d);
      const LinearSolution ds = solve_linear(mm, db, m);
      if (!ds.consistent || !ds.free_vars.empty())
        return;
      std::vector<long> degrees;
      for (const auto& d : ds.particular) {
        auto di = d.rational_integer();
        if (!di || *di <= 0)
          return;
        degrees.push_back(*di);
      }
      // Extract each irreducible with the same elimination applied to the
      // class-function columns.
      std::vector<ClassFunction> irr;
      const std::size_t k = compounds[0].size();
      std::vector<std::vector<CycNum>> vals(m, std::vector<CycNum>(k));
      for (std::size_t c = 0; c < k; ++c) {
        std::vector<CycNum> col;
        for (const auto& comp : compounds)
          col.push_back(comp[c]);
        const LinearSolution cs = solve_linear(mm, col, m);
        if (!cs.consistent)
          return;
        for (std::size_t j = 0; j < m; ++j)
          vals[j][c] = cs.particular[j];
      }
      for (std::size_t j = 0; j < m; ++j) {
        ClassFunction chi(compounds[0].group, vals[j]);
        if (norm(chi) != CycNum(1L))
          return;
        for (const auto& v : chi.values) {
          if (!v.is_algebraic_integer())
            return;
        }
        irr.push_back(std::move(chi));
      }
      auto first_last = [&](unsigned mask) {
        int first = -1, last = -1;
        for (std::size_t i = 0; i < n; ++i) {
          if ((mask >> (n - 1 - i)) & 1u) {
            first = first < 0 ? static_cast<int>(i) : first;
            last = static_cast<int>(i);
          }
        }
        return std::make_pair(first, -last);
      };
      std::vector<std::size_t> order(m);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::size_t x, std::size_t y) { return first_last(chosen[x]) < first_last(chosen[y]); });
      OverlapSolution s;
      s.membership.assign(n, std::vector<int>(m, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
          s.membership[i][j] = static_cast<int>((chosen[order[j]] >> (n - 1 - i)) & 1u);
      for (std::size_t j = 0; j < m; ++j) {
        s.degrees.push_back(degrees[order[j]]);
        s.irreducibles.push_back(irr[order[j]]);
      }
      valid.push_back(std::move(s));
      return;
    }
    for (unsigned mask = below; mask >= 1; --mask) {
      const long bits = static_cast<long>(__builtin_popcount(mask));
      if (ones + bits > total)
        continue;
      bool fits = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (((mask >> (n - 1 - i)) & 1u) && ((mask >> (n - 1 - j)) & 1u) && ++shared[i][j] > out.gram[i][j])
            fits = false;
      if (fits) {
        chosen.push_back(mask);
        rec(mask - 1, ones + bits);
        chosen.pop_back();
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (((mask >> (n - 1 - i)) & 1u) && ((mask >> (n - 1 - j)) & 1u))
            --shared[i][j];
    }
  };
  rec(top, 0);

  if (valid.size() != 1)
    throw VerificationError("overlap system admits " + std::to_string(valid.size()) +
                            " consistent decompositions, expected exactly one");
  OverlapSolution s = std::move(valid.front());
  s.gram = std::move(out.gram);
  s.gram_assignments = out.gram_assignments;
  return s;
}

} // namespace chartab
