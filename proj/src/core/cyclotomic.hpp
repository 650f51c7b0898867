#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace chartab {

using Rational = mpq_class;

/// Exact element of a cyclotomic field Q(zeta_n).
///
/// Values are stored in the power basis 1, zeta, ..., zeta^(phi(n)-1) of the
/// smallest cyclotomic field containing them, so structural equality is value
/// equality. Every constructor and arithmetic operation returns canonical
/// form; instances are immutable once built.
class CycNum {
public:
  CycNum();
  CycNum(long value); // NOLINT(google-explicit-constructor)
  CycNum(const Rational& value); // NOLINT(google-explicit-constructor)

  /// Builds sum(c * zeta_n^e) from (exponent, coefficient) terms. Exponents
  /// are taken modulo n; throws std::invalid_argument for n < 1.
  static CycNum make(long conductor,
                     const std::vector<std::pair<long, Rational>>& terms);
  static CycNum root_of_unity(long n, long k = 1);
  /// Parses the literal grammar produced by to_string().
  static CycNum parse(std::string_view text);

  long conductor() const { return conductor_; }
  /// Coefficients in the power basis of Q(zeta_conductor), length phi(conductor).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  std::optional<Rational> rational() const;
  /// Returns the value when it is a rational integer.
  std::optional<long> rational_integer() const;
  /// True when every basis coefficient is an integer, i.e. the value lies in
  /// Z[zeta_n], the ring of integers of Q(zeta_n).
  bool is_algebraic_integer() const;

  CycNum conj() const;
  /// Image under zeta_n -> zeta_n^k, gcd(k, n) = 1.
  CycNum galois(long k) const;
  CycNum inverse() const;
  std::complex<double> numeric() const;

  /// Literal such as `E(8)+E(8)^3` or `-1/2*E(11)`.
  std::string to_string() const;

  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

private:
  CycNum(long conductor, std::vector<Rational> coeffs);
  static CycNum from_exponent_sum(long n, std::vector<Rational> by_exponent);
  void canonicalize();
  std::vector<Rational> lifted(long target) const;

  long conductor_ = 1;
  std::vector<Rational> coeffs_;
};

/// Euler's totient.
long euler_phi(long n);

/// Sum of zeta_p^t over the nonzero quadratic residues t mod p. For p = 3 mod 4
/// this equals (-1 + sqrt(-p)) / 2. Throws std::invalid_argument unless p is
/// an odd prime.
CycNum gauss_quadratic(long p);

/// Exact sqrt(q) for rational q, realised inside a cyclotomic field; the
/// principal branch (nonnegative, or positive imaginary for q < 0).
CycNum sqrt_rational(const Rational& q);

/// Element of Q(zeta_m)?  Accounts for Q(zeta_m) = Q(zeta_2m) when m is odd.
bool lies_in_cyclotomic_field(const CycNum& x, long m);

std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

} // namespace chartab
