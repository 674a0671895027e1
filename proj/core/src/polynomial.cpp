#include <sstream>

#include "twistzhu/exactnum.hpp"

namespace twistzhu {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Scalar& c, int n) {
  if (n < 0) throw std::invalid_argument("Polynomial::monomial: negative degree");
  std::vector<Scalar> v(static_cast<size_t>(n) + 1, Scalar(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::coefficient(int n) const {
  if (n < 0 || n >= static_cast<int>(c_.size())) return Scalar(0);
  return c_[static_cast<size_t>(n)];
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(Polynomial a, const Scalar& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(Scalar(1)), base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    base = base * base;
    exponent >>= 1U;
  }
  return result;
}

Polynomial Polynomial::shifted(int n) const {
  if (n < 0) throw std::invalid_argument("Polynomial::shifted: negative shift");
  if (is_zero()) return {};
  std::vector<Scalar> out(static_cast<size_t>(n), Scalar(0));
  out.insert(out.end(), c_.begin(), c_.end());
  return Polynomial(std::move(out));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& quotient,
                        Polynomial& remainder) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  remainder = a;
  quotient = Polynomial();
  if (a.degree() < b.degree()) return;
  std::vector<Scalar> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Scalar(0));
  const Scalar lead_inv = b.leading().inverse();
  while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
    int shift = remainder.degree() - b.degree();
    Scalar factor = remainder.leading() * lead_inv;
    q[static_cast<size_t>(shift)] = factor;
    remainder -= (b * factor).shifted(shift);
  }
  quotient = Polynomial(std::move(q));
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    Scalar c = c_[i];
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c == Scalar(-1))
      os << '-';
    else if (!c.is_one())
      os << c << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace twistzhu
