#include "cyclotomic.hpp"

#include "errors.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace chartab {

namespace {

struct FieldInfo {
  long n = 1;
  long phi = 1;
  std::vector<long> cyclo; // monic Phi_n, cyclo[i] is the x^i coefficient
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den)
{
  // Both monic integer polynomials, den divides num.
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    quot[i - dn] = c;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j <= dn; ++j)
      num[i - dn + j] -= c * den[j];
  }
  return quot;
}

const FieldInfo& field(long n)
{
  static std::mutex mutex;
  static std::map<long, std::unique_ptr<FieldInfo>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end())
      return *it->second;
  }
  auto info = std::make_unique<FieldInfo>();
  info->n = n;
  info->phi = euler_phi(n);
  std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0)
      poly = poly_divide_exact(poly, field(d).cyclo);
  }
  info->cyclo = std::move(poly);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(info));
  return *it->second;
}

// Reduces an exponent-indexed polynomial modulo Phi_n in place, leaving phi(n)
// coefficients.
void reduce_mod_cyclotomic(long n, std::vector<Rational>& poly)
{
  const FieldInfo& f = field(n);
  const auto phi = static_cast<std::size_t>(f.phi);
  for (std::size_t d = poly.size(); d-- > phi;) {
    if (sgn(poly[d]) == 0)
      continue;
    const Rational c = poly[d];
    for (std::size_t i = 0; i <= phi; ++i) {
      if (f.cyclo[i] != 0)
        poly[d - phi + i] -= c * f.cyclo[i];
    }
  }
  poly.resize(phi);
}

long mod(long a, long n)
{
  long r = a % n;
  return r < 0 ? r + n : r;
}

std::vector<long> prime_factors(long n)
{
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

// Left inverse for the embedding Q(zeta_e) -> Q(zeta_n), restricted to a set
// of pivot rows.
struct Descent {
  std::vector<std::size_t> rows;
  std::vector<std::vector<Rational>> inverse; // phi(e) x phi(e)
};

const Descent& descent(long n, long e)
{
  static std::mutex mutex;
  static std::map<std::pair<long, long>, std::unique_ptr<Descent>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, e}); it != cache.end())
      return *it->second;
  }
  const auto phin = static_cast<std::size_t>(euler_phi(n));
  const auto phie = static_cast<std::size_t>(euler_phi(e));
  // columns: images of zeta_e^i
  std::vector<std::vector<Rational>> cols;
  for (std::size_t i = 0; i < phie; ++i) {
    std::vector<Rational> poly(static_cast<std::size_t>(n), 0);
    poly[static_cast<std::size_t>(mod(static_cast<long>(i) * (n / e), n))] = 1;
    reduce_mod_cyclotomic(n, poly);
    cols.push_back(std::move(poly));
  }
  // Row-reduce A^T to find pivot rows of A.
  std::vector<std::vector<Rational>> a(phin, std::vector<Rational>(phie));
  for (std::size_t r = 0; r < phin; ++r)
    for (std::size_t c = 0; c < phie; ++c)
      a[r][c] = cols[c][r];
  auto d = std::make_unique<Descent>();
  {
    std::vector<std::vector<Rational>> basis; // echelon rows chosen so far
    std::vector<std::size_t> lead;
    for (std::size_t r = 0; r < phin && d->rows.size() < phie; ++r) {
      std::vector<Rational> v = a[r];
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (sgn(v[lead[b]]) != 0) {
          const Rational f = v[lead[b]] / basis[b][lead[b]];
          for (std::size_t c = 0; c < phie; ++c)
            v[c] -= f * basis[b][c];
        }
      }
      std::size_t pivot = phie;
      for (std::size_t c = 0; c < phie; ++c) {
        if (sgn(v[c]) != 0) {
          pivot = c;
          break;
        }
      }
      if (pivot == phie)
        continue;
      basis.push_back(std::move(v));
      lead.push_back(pivot);
      d->rows.push_back(r);
    }
  }
  if (d->rows.size() != phie)
    throw std::logic_error("cyclotomic descent: embedding is not injective");
  // Invert the square submatrix by Gauss-Jordan.
  std::vector<std::vector<Rational>> m(phie, std::vector<Rational>(2 * phie));
  for (std::size_t i = 0; i < phie; ++i) {
    for (std::size_t j = 0; j < phie; ++j)
      m[i][j] = a[d->rows[i]][j];
    m[i][phie + i] = 1;
  }
  for (std::size_t c = 0; c < phie; ++c) {
    std::size_t p = c;
    while (sgn(m[p][c]) == 0)
      ++p;
    std::swap(m[p], m[c]);
    const Rational inv = 1 / m[c][c];
    for (auto& x : m[c])
      x *= inv;
    for (std::size_t r = 0; r < phie; ++r) {
      if (r == c || sgn(m[r][c]) == 0)
        continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k < 2 * phie; ++k)
        m[r][k] -= f * m[c][k];
    }
  }
  d->inverse.assign(phie, std::vector<Rational>(phie));
  for (std::size_t i = 0; i < phie; ++i)
    for (std::size_t j = 0; j < phie; ++j)
      d->inverse[i][j] = m[i][phie + j];
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::make_pair(n, e), std::move(d));
  return *it->second;
}

std::vector<Rational> galois_coeffs(long n, const std::vector<Rational>& coeffs, long k)
{
  std::vector<Rational> poly(static_cast<std::size_t>(n), 0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (sgn(coeffs[j]) != 0)
      poly[static_cast<std::size_t>(mod(static_cast<long>(j) * k, n))] += coeffs[j];
  }
  reduce_mod_cyclotomic(n, poly);
  return poly;
}

} // namespace

long euler_phi(long n)
{
  if (n < 1)
    throw std::invalid_argument("euler_phi: n must be positive");
  long result = n;
  for (long p : prime_factors(n))
    result = result / p * (p - 1);
  return result;
}

std::string rational_to_string(const Rational& q)
{
  return q.get_str();
}

Rational parse_rational(std::string_view text)
{
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  if (sgn(q.get_den()) == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

CycNum::CycNum() : conductor_(1), coeffs_{Rational(0)} {}

CycNum::CycNum(long value) : conductor_(1), coeffs_{Rational(value)} {}

// mpq_class(num, den) does not reduce; every stored coefficient must.
CycNum::CycNum(const Rational& value) : conductor_(1), coeffs_{value} { coeffs_[0].canonicalize(); }

CycNum::CycNum(long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs))
{
}

CycNum CycNum::from_exponent_sum(long n, std::vector<Rational> by_exponent)
{
  if (n % 4 == 2) {
    // zeta_n = -zeta_m^((m+1)/2) with m = n/2 odd
    const long m = n / 2;
    std::vector<Rational> folded(static_cast<std::size_t>(m), 0);
    for (long k = 0; k < n; ++k) {
      const Rational& c = by_exponent[static_cast<std::size_t>(k)];
      if (sgn(c) == 0)
        continue;
      const auto e = static_cast<std::size_t>(mod(k * ((m + 1) / 2), m));
      if (k % 2 == 0)
        folded[e] += c;
      else
        folded[e] -= c;
    }
    n = m;
    by_exponent = std::move(folded);
  }
  reduce_mod_cyclotomic(n, by_exponent);
  CycNum out(n, std::move(by_exponent));
  out.canonicalize();
  return out;
}

CycNum CycNum::make(long conductor, const std::vector<std::pair<long, Rational>>& terms)
{
  if (conductor < 1)
    throw std::invalid_argument("cyclotomic conductor must be positive");
  std::vector<Rational> poly(static_cast<std::size_t>(conductor), 0);
  for (const auto& [e, c] : terms) {
    Rational reduced = c;
    reduced.canonicalize();
    poly[static_cast<std::size_t>(mod(e, conductor))] += reduced;
  }
  return from_exponent_sum(conductor, std::move(poly));
}

CycNum CycNum::root_of_unity(long n, long k)
{
  return make(n, {{k, Rational(1)}});
}

void CycNum::canonicalize()
{
  for (;;) {
    bool rational = true;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) != 0) {
        rational = false;
        break;
      }
    }
    if (rational) {
      Rational c0 = coeffs_.empty() ? Rational(0) : coeffs_[0];
      conductor_ = 1;
      coeffs_.assign(1, c0);
      return;
    }
    const long n = conductor_;
    bool lowered = false;
    for (long p : prime_factors(n)) {
      long e = n / p;
      if (e % 4 == 2)
        e /= 2;
      // x lies in Q(zeta_e) iff it is fixed by every k = 1 mod e.
      bool fixed = true;
      for (long k = 1 + e; k < n && fixed; k += e) {
        if (std::gcd(k, n) != 1)
          continue;
        fixed = galois_coeffs(n, coeffs_, k) == coeffs_;
      }
      if (!fixed)
        continue;
      const Descent& d = descent(n, e);
      const std::size_t phie = d.rows.size();
      std::vector<Rational> lowered_coeffs(phie, 0);
      for (std::size_t i = 0; i < phie; ++i)
        for (std::size_t j = 0; j < phie; ++j)
          lowered_coeffs[i] += d.inverse[i][j] * coeffs_[d.rows[j]];
      conductor_ = e;
      coeffs_ = std::move(lowered_coeffs);
      lowered = true;
      break;
    }
    if (!lowered)
      return;
  }
}

std::vector<Rational> CycNum::lifted(long target) const
{
  std::vector<Rational> poly(static_cast<std::size_t>(target), 0);
  const long step = target / conductor_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    poly[static_cast<std::size_t>(static_cast<long>(i) * step)] = coeffs_[i];
  return poly;
}

bool CycNum::is_zero() const
{
  return conductor_ == 1 && sgn(coeffs_[0]) == 0;
}

std::optional<Rational> CycNum::rational() const
{
  if (!is_rational())
    return std::nullopt;
  return coeffs_[0];
}

std::optional<long> CycNum::rational_integer() const
{
  if (!is_rational() || coeffs_[0].get_den() != 1 || !coeffs_[0].get_num().fits_slong_p())
    return std::nullopt;
  return coeffs_[0].get_num().get_si();
}

bool CycNum::is_algebraic_integer() const
{
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1)
      return false;
  }
  return true;
}

CycNum CycNum::galois(long k) const
{
  if (is_rational())
    return *this;
  if (std::gcd(mod(k, conductor_), conductor_) != 1)
    throw std::invalid_argument("galois: exponent not coprime to conductor");
  return CycNum(conductor_, galois_coeffs(conductor_, coeffs_, k));
}

CycNum CycNum::conj() const
{
  return galois(-1);
}

CycNum CycNum::inverse() const
{
  if (is_zero())
    throw std::domain_error("cyclotomic division by zero");
  if (is_rational())
    return CycNum(Rational(1 / coeffs_[0]));
  CycNum others(1L);
  for (long k = 2; k < conductor_; ++k) {
    if (std::gcd(k, conductor_) == 1)
      others *= galois(k);
  }
  const CycNum norm = *this * others;
  if (!norm.is_rational())
    throw std::logic_error("cyclotomic norm is not rational");
  return others * CycNum(Rational(1 / norm.coeffs_[0]));
}

std::complex<double> CycNum::numeric() const
{
  std::complex<double> sum = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0)
      continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(conductor_);
    sum += coeffs_[k].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

std::string CycNum::to_string() const
{
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0)
      continue;
    std::string term;
    if (k == 0) {
      term = rational_to_string(c);
    } else {
      std::string root = "E(" + std::to_string(conductor_) + ")";
      if (k > 1)
        root += "^" + std::to_string(k);
      if (c == 1)
        term = root;
      else if (c == -1)
        term = "-" + root;
      else
        term = rational_to_string(c) + "*" + root;
    }
    if (!out.empty() && term.front() != '-')
      out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

namespace {

class LiteralParser {
public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  CycNum parse()
  {
    skip_ws();
    if (at_end())
      fail("empty literal");
    CycNum total;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      CycNum term = parse_term();
      total += sign < 0 ? -term : term;
      first = false;
      skip_ws();
    }
    return total;
  }

private:
  CycNum parse_term()
  {
    if (peek() == 'E')
      return parse_root();
    Rational coeff = parse_number();
    skip_ws();
    if (!at_end() && peek() == '*') {
      get();
      skip_ws();
      return CycNum(coeff) * parse_root();
    }
    return CycNum(coeff);
  }

  CycNum parse_root()
  {
    expect('E');
    expect('(');
    const long n = parse_integer();
    expect(')');
    long k = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      k = parse_integer();
    }
    if (n < 1)
      fail("conductor must be positive");
    return CycNum::root_of_unity(n, k);
  }

  Rational parse_number()
  {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
        ++pos_;
    }
    if (pos_ == start)
      fail("expected a number");
    return parse_rational(text_.substr(start, pos_ - start));
  }

  long parse_integer()
  {
    skip_ws();
    bool neg = false;
    if (!at_end() && peek() == '-') {
      neg = true;
      get();
    }
    const std::size_t start = pos_;
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + (get() - '0');
    if (pos_ == start)
      fail("expected an integer");
    skip_ws();
    return neg ? -v : v;
  }

  void expect(char c)
  {
    skip_ws();
    if (at_end() || get() != c)
      fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const
  {
    throw ParseError("cyclotomic literal '" + std::string(text_) + "': " + what);
  }

  void skip_ws()
  {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

CycNum CycNum::parse(std::string_view text)
{
  return LiteralParser(text).parse();
}

CycNum operator+(const CycNum& a, const CycNum& b)
{
  if (a.is_rational() && b.is_rational())
    return CycNum(Rational(a.coeffs_[0] + b.coeffs_[0]));
  if (a.conductor_ == b.conductor_) {
    std::vector<Rational> sum(a.coeffs_);
    for (std::size_t i = 0; i < sum.size(); ++i)
      sum[i] += b.coeffs_[i];
    CycNum out(a.conductor_, std::move(sum));
    out.canonicalize();
    return out;
  }
  const long l = std::lcm(a.conductor_, b.conductor_);
  std::vector<Rational> pa = a.lifted(l);
  const std::vector<Rational> pb = b.lifted(l);
  for (std::size_t i = 0; i < pa.size(); ++i)
    pa[i] += pb[i];
  return CycNum::from_exponent_sum(l, std::move(pa));
}

CycNum CycNum::operator-() const
{
  std::vector<Rational> neg(coeffs_);
  for (auto& c : neg)
    c = -c;
  return CycNum(conductor_, std::move(neg));
}

CycNum operator-(const CycNum& a, const CycNum& b)
{
  return a + (-b);
}

CycNum operator*(const CycNum& a, const CycNum& b)
{
  if (a.is_rational() && b.is_rational())
    return CycNum(Rational(a.coeffs_[0] * b.coeffs_[0]));
  if (a.is_rational() || b.is_rational()) {
    const CycNum& scalar = a.is_rational() ? a : b;
    const CycNum& other = a.is_rational() ? b : a;
    if (sgn(scalar.coeffs_[0]) == 0)
      return CycNum();
    std::vector<Rational> scaled(other.coeffs_);
    for (auto& c : scaled)
      c *= scalar.coeffs_[0];
    return CycNum(other.conductor_, std::move(scaled));
  }
  const long l = std::lcm(a.conductor_, b.conductor_);
  const long sa = l / a.conductor_;
  const long sb = l / b.conductor_;
  std::vector<Rational> prod(static_cast<std::size_t>(l), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0)
        continue;
      const long e = mod(static_cast<long>(i) * sa + static_cast<long>(j) * sb, l);
      prod[static_cast<std::size_t>(e)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycNum::from_exponent_sum(l, std::move(prod));
}

CycNum operator/(const CycNum& a, const CycNum& b)
{
  return a * b.inverse();
}

bool operator==(const CycNum& a, const CycNum& b)
{
  return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

namespace {

bool is_prime(long p)
{
  if (p < 2)
    return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0)
      return false;
  }
  return true;
}

long legendre(long a, long p)
{
  a = mod(a, p);
  if (a == 0)
    return 0;
  for (long x = 1; x < p; ++x) {
    if (x * x % p == a)
      return 1;
  }
  return -1;
}

CycNum sqrt_prime(long p)
{
  if (p == 2)
    return CycNum::make(8, {{1, Rational(1)}, {7, Rational(1)}});
  std::vector<std::pair<long, Rational>> terms;
  for (long t = 1; t < p; ++t)
    terms.emplace_back(t, Rational(legendre(t, p)));
  CycNum gauss = CycNum::make(p, terms);
  if (p % 4 == 1)
    return gauss;
  // gauss = i*sqrt(p) here
  return -(CycNum::root_of_unity(4) * gauss);
}

} // namespace

CycNum gauss_quadratic(long p)
{
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("gauss_quadratic: p must be an odd prime");
  std::vector<bool> residue(static_cast<std::size_t>(p), false);
  for (long x = 1; x < p; ++x)
    residue[static_cast<std::size_t>(x * x % p)] = true;
  std::vector<std::pair<long, Rational>> terms;
  for (long t = 1; t < p; ++t) {
    if (residue[static_cast<std::size_t>(t)])
      terms.emplace_back(t, Rational(1));
  }
  return CycNum::make(p, terms);
}

CycNum sqrt_rational(const Rational& q)
{
  if (sgn(q) == 0)
    return CycNum();
  Rational a = abs(q);
  // sqrt(num/den) = sqrt(num*den)/den
  mpz_class radicand = a.get_num() * a.get_den();
  mpz_class outside = 1;
  CycNum root(1L);
  for (long p = 2; radicand > 1; ++p) {
    if (p * p > radicand && radicand.fits_slong_p() && is_prime(radicand.get_si())) {
      root *= sqrt_prime(radicand.get_si());
      break;
    }
    int count = 0;
    while (radicand % p == 0) {
      radicand /= p;
      ++count;
    }
    for (int i = 0; i + 1 < count; i += 2)
      outside *= p;
    if (count % 2 == 1)
      root *= sqrt_prime(p);
  }
  CycNum result = root * CycNum(Rational(outside, a.get_den()));
  if (sgn(q) < 0)
    result = result * CycNum::root_of_unity(4);
  return result;
}

bool lies_in_cyclotomic_field(const CycNum& x, long m)
{
  return m >= 1 && m % x.conductor() == 0;
}

} // namespace chartab
