#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace twistzhu {

/// Raised on division by an exact zero (rational or cyclotomic).
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Thin value wrapper around GMP's mpq_class.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class q);

  /// Parses "7", "-3/4", "+2" (surrounding whitespace allowed).
  static Scalar parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Throws std::domain_error unless the value is an integer fitting in long.
  long to_long() const;

  Scalar inverse() const;
  Scalar pow(long exponent) const;

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return q_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  mpq_class q_{0};
};

/// binom(alpha, m) = prod_{i<m} (alpha - i) / (i + 1); binom(alpha, 0) = 1.
Scalar rational_binomial(const Scalar& alpha, long m);

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. Trailing zeros are always trimmed, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  static Polynomial constant(const Scalar& c);
  /// c * y^n, n >= 0.
  static Polynomial monomial(const Scalar& c, int n);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coefficient(int n) const;
  const Scalar& leading() const { return c_.back(); }

  Polynomial pow(unsigned exponent) const;
  Polynomial shifted(int n) const;  // multiply by y^n, n >= 0

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& s);
  Polynomial operator-() const;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& quotient,
                     Polynomial& remainder);

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string to_string(std::string_view var = "y") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

int euler_phi(int k);

/// The k-th cyclotomic polynomial Phi_k (monic, integer coefficients).
const Polynomial& cyclotomic_polynomial(int k);

/// Element of Q(eta_k), eta_k = exp(2 pi i / k), stored as a polynomial in
/// eta reduced modulo Phi_k. The representation is canonical: the coefficient
/// vector always has length euler_phi(k), so equality is coefficient-wise.
///
/// Values with conductor 1 are plain rationals; mixing them with any other
/// conductor promotes them. Mixing two distinct conductors > 1 throws.
class CycloScalar {
 public:
  CycloScalar() : CycloScalar(1, Scalar(0)) {}
  CycloScalar(const Scalar& q) : CycloScalar(1, q) {}  // NOLINT(google-explicit-constructor)
  CycloScalar(long q) : CycloScalar(1, Scalar(q)) {}   // NOLINT(google-explicit-constructor)
  CycloScalar(int k, const Scalar& q);

  /// Reduces an arbitrary polynomial in eta modulo Phi_k.
  static CycloScalar from_polynomial(int k, const Polynomial& p);

  int conductor() const { return k_; }
  std::span<const Scalar> coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; equals the value when is_rational().
  const Scalar& rational_part() const { return c_.front(); }

  /// Re-expresses this value in Q(eta_k); requires conductor 1 or k.
  CycloScalar promoted(int k) const;

  CycloScalar inverse() const;
  CycloScalar pow(long e) const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator/=(const CycloScalar& o);
  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
  friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }

  friend bool operator==(const CycloScalar& a, const CycloScalar& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const CycloScalar& s);

 private:
  Polynomial as_polynomial() const;
  static int common_conductor(const CycloScalar& a, const CycloScalar& b);

  int k_;
  std::vector<Scalar> c_;
};

/// eta_k^e; eta_power(k, e) == eta_power(k, e mod k).
CycloScalar eta_power(int k, long e);

}  // namespace twistzhu
