#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "twistzhu/exactnum.hpp"

namespace twistzhu {

/// A coefficient that is needed lies outside the window on which a series is
/// known exactly. The caller must enlarge the expansion order.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// compose(g, f) with f(0) != 0 or f'(0) == 0.
class InvalidSubstitution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Truncated formal Laurent series sum_e c_e z^e with integer exponents.
///
/// The window [lo, hi] says what is known: every coefficient below `lo` is
/// zero, coefficients in [lo, hi] are exact, and everything above `hi` is
/// unknown. Reading an unknown coefficient throws TruncationError.
template <class C>
class Series {
 public:
  using coeff_type = C;

  Series(int lo, int hi) : lo_(lo), hi_(hi) {}

  /// c z^e, exact through `hi`.
  static Series monomial(int e, const C& c, int hi) {
    Series s(e, hi);
    s.set(e, c);
    return s;
  }

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const std::map<int, C>& terms() const { return coeffs_; }

  C coefficient(int e) const {
    if (e > hi_)
      throw TruncationError("coefficient of z^" + std::to_string(e) +
                            " requested but the series is only exact through z^" +
                            std::to_string(hi_));
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? C() : it->second;
  }

  void set(int e, const C& c) {
    if (e < lo_ || e > hi_)
      throw std::out_of_range("Series::set: exponent " + std::to_string(e) + " outside window");
    if (c.is_zero())
      coeffs_.erase(e);
    else
      coeffs_[e] = c;
  }

  void add(int e, const C& c) {
    if (e > hi_ || c.is_zero()) return;
    if (e < lo_) throw std::out_of_range("Series::add: exponent below window");
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }

  /// Drops knowledge above `hi` (never widens).
  Series truncated(int hi) const {
    Series out(lo_, std::min(hi, hi_));
    for (const auto& [e, c] : coeffs_)
      if (e <= out.hi_) out.coeffs_.emplace(e, c);
    return out;
  }

  Series derivative() const {
    Series out(lo_ - 1, hi_ - 1);
    for (const auto& [e, c] : coeffs_)
      if (e != 0) out.add(e - 1, c * Scalar(e));
    return out;
  }

  Series& operator+=(const Series& o) {
    Series out(std::min(lo_, o.lo_), std::min(hi_, o.hi_));
    for (const auto& [e, c] : coeffs_) out.add(e, c);
    for (const auto& [e, c] : o.coeffs_) out.add(e, c);
    return *this = std::move(out);
  }
  Series& operator-=(const Series& o) { return *this += -o; }
  Series operator-() const {
    Series out(lo_, hi_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
    return out;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  /// Coefficientwise scaling by a scalar-like value.
  template <class S>
  Series scaled(const S& s) const {
    Series out(lo_, hi_);
    for (const auto& [e, c] : coeffs_) out.add(e, c * s);
    return out;
  }

  /// Equality of the known data: windows and coefficients.
  friend bool operator==(const Series& a, const Series& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::map<int, C> coeffs_;
  int lo_;
  int hi_;
};

/// Cauchy product. The result window is the tightest one on which every
/// contributing pair of coefficients is known.
template <class C, class S>
Series<C> operator*(const Series<C>& a, const Series<S>& b) {
  Series<C> out(a.lo() + b.lo(), std::min(a.lo() + b.hi(), b.lo() + a.hi()));
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
      if (ea + eb <= out.hi()) out.add(ea + eb, ca * cb);
  return out;
}

/// Coefficientwise equality on [from, to]; throws if `to` exceeds either window.
template <class C>
bool equal_on(const Series<C>& a, const Series<C>& b, int from, int to) {
  for (int e = from; e <= to; ++e)
    if (!(a.coefficient(e) == b.coefficient(e))) return false;
  return true;
}

/// sum_{m=0}^{order} binom(gamma, m) z^m, window [0, order].
Series<Scalar> binomial_series(const Scalar& gamma, int order);

/// Exact polynomial as a series with window [lo-of-support, hi].
Series<Scalar> polynomial_series(const std::map<int, Scalar>& coeffs, int hi);

/// Coefficient of z^{-1}.
template <class C>
C residue(const Series<C>& s) {
  if (s.hi() < -1)
    throw TruncationError("residue needs z^-1 but the series is only exact through z^" +
                          std::to_string(s.hi()) + "; enlarge the expansion order");
  return s.coefficient(-1);
}

namespace detail {
/// (1 + h)^m truncated at x^n where h has no constant term.
Series<Scalar> unit_power(const Series<Scalar>& h, long m, int n);
}  // namespace detail

/// g(f(x)) = sum_m g_m f(x)^m with f(x)^m expanded as
/// (a1 x)^m (1 + sum_{i>=2} (a_i/a1) x^{i-1})^m via binomial series, so negative
/// m are handled exactly. Requires f(0) = 0 and a1 != 0.
template <class C>
Series<C> compose(const Series<C>& g, const Series<Scalar>& f) {
  if (f.hi() < 1) throw TruncationError("compose: inner series must be known through x^1");
  if (f.lo() < 1 && !f.coefficient(0).is_zero())
    throw InvalidSubstitution("compose: inner series has a nonzero constant term");
  for (const auto& [e, c] : f.terms())
    if (e < 0) throw InvalidSubstitution("compose: inner series has negative powers");
  const Scalar a1 = f.coefficient(1);
  if (a1.is_zero()) throw InvalidSubstitution("compose: inner series has zero linear term");

  // h(x) = sum_{i>=2} (a_i / a1) x^{i-1}, exact through x^{f.hi - 1}
  Series<Scalar> h(1, f.hi() - 1);
  for (const auto& [e, c] : f.terms())
    if (e >= 2) h.add(e - 1, c / a1);

  const int lo = g.lo();
  const int hi = std::min(g.hi(), lo + f.hi() - 1);
  Series<C> out(lo, hi);
  for (const auto& [m, gm] : g.terms()) {
    if (m > hi) break;
    const Scalar lead = a1.pow(m);
    auto tail = detail::unit_power(h, m, hi - m);
    for (const auto& [j, c] : tail.terms()) out.add(m + j, gm * (lead * c));
  }
  return out;
}

/// (Res_z g(z), Res_x g(f(x)) f'(x)); the two agree for every admissible pair.
template <class C>
std::pair<C, C> change_of_var_residues(const Series<C>& g, const Series<Scalar>& f) {
  C left = residue(g);
  C right = residue(compose(g, f) * f.derivative());
  return {left, right};
}

/// Quotient of two polynomials in y = 1 + z. Exponents of y may be negative
/// on construction; they are absorbed into the denominator.
class RationalFn {
 public:
  RationalFn() : num_(), den_(Polynomial::constant(Scalar(1))) {}
  RationalFn(Polynomial num, Polynomial den);
  static RationalFn power(const Scalar& c, int exponent);  // c y^exponent
  static RationalFn poly(const Polynomial& p) { return RationalFn(p, Polynomial::constant(Scalar(1))); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }

  /// Decided by cross-multiplication.
  friend bool operator==(const RationalFn& a, const RationalFn& b);

 private:
  Polynomial num_;
  Polynomial den_;
};

/// The rational-function identity
///   ( 1/((1+z)^k-1)^2 + sum_{t=1}^{k-1} ((t/k)(1+z)^{t-k} + (1-t/k)(1+z)^t)/((1+z)^k-1)^2 )
///     * k (1+z)^{k-1} = 1/z^2,
/// decided exactly after clearing denominators.
bool double_pole_identity_check(int k);

/// z * sum_{t=0}^{k-1} (1+z)^t == (1+z)^k - 1 as polynomials.
bool geometric_identity_check(int k);

}  // namespace twistzhu
