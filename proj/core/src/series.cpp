#include "twistzhu/series.hpp"

namespace twistzhu {

Series<Scalar> binomial_series(const Scalar& gamma, int order) {
  if (order < 0) throw std::invalid_argument("binomial_series: negative order");
  Series<Scalar> s(0, order);
  Scalar c(1);
  for (int m = 0; m <= order; ++m) {
    s.set(m, c);
    c = c * (gamma - Scalar(m)) / Scalar(m + 1);
  }
  return s;
}

Series<Scalar> polynomial_series(const std::map<int, Scalar>& coeffs, int hi) {
  int lo = 0;
  bool found = false;
  for (const auto& [e, c] : coeffs) {
    if (c.is_zero()) continue;
    lo = found ? std::min(lo, e) : e;
    found = true;
  }
  Series<Scalar> s(std::min(lo, hi), hi);
  for (const auto& [e, c] : coeffs)
    if (e <= hi) s.add(e, c);
  return s;
}

namespace detail {

Series<Scalar> unit_power(const Series<Scalar>& h, long m, int n) {
  Series<Scalar> out(0, n);
  if (n < 0) return out;
  out.set(0, Scalar(1));
  Series<Scalar> h_pow(0, n);  // h^j, truncated to x^n
  h_pow.set(0, Scalar(1));
  // Callers keep n <= h.hi(), so every power of h below is exact through x^n.
  const Series<Scalar> h_trunc = h.truncated(n);
  for (int j = 1; j <= n; ++j) {
    Series<Scalar> next(0, n);
    for (const auto& [ea, ca] : h_pow.terms())
      for (const auto& [eb, cb] : h_trunc.terms())
        if (ea + eb <= n) next.add(ea + eb, ca * cb);
    h_pow = std::move(next);
    if (h_pow.terms().empty()) break;
    const Scalar b = rational_binomial(Scalar(m), j);
    for (const auto& [e, c] : h_pow.terms()) out.add(e, b * c);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------

RationalFn::RationalFn(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("RationalFn with zero denominator");
}

RationalFn RationalFn::power(const Scalar& c, int exponent) {
  if (exponent >= 0) return {Polynomial::monomial(c, exponent), Polynomial::constant(Scalar(1))};
  return {Polynomial::constant(c), Polynomial::monomial(Scalar(1), -exponent)};
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) {
  return *this += RationalFn(-o.num_, o.den_);
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
  if (o.num_.is_zero()) throw DivisionByZero("RationalFn division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  return *this;
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool double_pole_identity_check(int k) {
  if (k < 1) throw std::invalid_argument("double_pole_identity_check: k must be positive");
  const Scalar kk(k);
  // y = 1 + z
  const RationalFn one = RationalFn::power(Scalar(1), 0);
  const RationalFn d = RationalFn::power(Scalar(1), k) - one;  // y^k - 1
  const RationalFn d2 = d * d;

  RationalFn bracket = one / d2;
  for (int t = 1; t < k; ++t) {
    const Scalar frac = Scalar(t) / kk;
    RationalFn term = RationalFn::power(frac, t - k) + RationalFn::power(Scalar(1) - frac, t);
    bracket += term / d2;
  }
  const RationalFn lhs = bracket * RationalFn::power(kk, k - 1);

  const RationalFn z = RationalFn::power(Scalar(1), 1) - one;
  const RationalFn rhs = one / (z * z);
  return lhs == rhs;
}

bool geometric_identity_check(int k) {
  if (k < 1) throw std::invalid_argument("geometric_identity_check: k must be positive");
  // Polynomials in z.
  const Polynomial z = Polynomial::monomial(Scalar(1), 1);
  const Polynomial one_plus_z({Scalar(1), Scalar(1)});
  Polynomial sum;
  for (int t = 0; t < k; ++t) sum += one_plus_z.pow(static_cast<unsigned>(t));
  return z * sum == one_plus_z.pow(static_cast<unsigned>(k)) - Polynomial::constant(Scalar(1));
}

}  // namespace twistzhu
