#include "twistzhu/exactnum.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace twistzhu {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string_view num = std::string_view(s).substr(0, slash);
  std::string_view den = slash == std::string::npos ? std::string_view("1")
                                                    : std::string_view(s).substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-')
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw DivisionByZero("rational literal with zero denominator");
  return Scalar(mpq_class(n, d));
}

long Scalar::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    throw std::domain_error("scalar " + to_string() + " is not a machine integer");
  return q_.get_num().get_si();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Scalar(mpq_class(1) / q_);
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Scalar(mpq_class(n, d));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  q_ += o.q_;
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  q_ -= o.q_;
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  q_ *= o.q_;
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar rational_binomial(const Scalar& alpha, long m) {
  if (m < 0) return Scalar(0);
  Scalar result(1);
  for (long i = 0; i < m; ++i) result *= (alpha - Scalar(i)) / Scalar(i + 1);
  return result;
}

// ---------------------------------------------------------------------------
// Cyclotomic field

int euler_phi(int k) {
  if (k < 1) throw std::invalid_argument("euler_phi: k must be positive");
  int result = k;
  int n = k;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const Polynomial& cyclotomic_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic_polynomial: k must be positive");
  static std::mutex mutex;
  static std::map<int, Polynomial> cache;
  std::lock_guard lock(mutex);
  // x^n - 1 = prod_{d | n} Phi_d(x); fill every conductor up to k in order.
  for (int n = 1; n <= k; ++n) {
    if (cache.contains(n)) continue;
    std::vector<Scalar> c(static_cast<size_t>(n) + 1, Scalar(0));
    c.front() = Scalar(-1);
    c.back() = Scalar(1);
    Polynomial p(std::move(c));
    for (int d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      Polynomial q, r;
      Polynomial::divmod(p, cache.at(d), q, r);
      p = std::move(q);
    }
    cache.emplace(n, std::move(p));
  }
  return cache.at(k);
}

CycloScalar::CycloScalar(int k, const Scalar& q) : k_(k) {
  if (k < 1) throw std::invalid_argument("CycloScalar: conductor must be positive");
  c_.assign(static_cast<size_t>(euler_phi(k)), Scalar(0));
  c_.front() = q;
}

CycloScalar CycloScalar::from_polynomial(int k, const Polynomial& p) {
  Polynomial q, r;
  Polynomial::divmod(p, cyclotomic_polynomial(k), q, r);
  CycloScalar out(k, Scalar(0));
  for (size_t i = 0; i < r.coeffs().size(); ++i) out.c_[i] = r.coeffs()[i];
  return out;
}

Polynomial CycloScalar::as_polynomial() const { return Polynomial(c_); }

bool CycloScalar::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycloScalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

int CycloScalar::common_conductor(const CycloScalar& a, const CycloScalar& b) {
  if (a.k_ == b.k_) return a.k_;
  if (a.k_ == 1 || a.is_rational()) return b.k_;
  if (b.k_ == 1 || b.is_rational()) return a.k_;
  throw std::invalid_argument("CycloScalar: mixing conductors " + std::to_string(a.k_) +
                              " and " + std::to_string(b.k_));
}

CycloScalar CycloScalar::promoted(int k) const {
  if (k == k_) return *this;
  if (!is_rational())
    throw std::invalid_argument("CycloScalar: cannot move an irrational value to conductor " +
                                std::to_string(k));
  return CycloScalar(k, c_.front());
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  int k = common_conductor(*this, o);
  *this = promoted(k);
  CycloScalar rhs = o.promoted(k);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  int k = common_conductor(*this, o);
  if (o.is_rational()) {
    *this = promoted(k);
    const Scalar& s = o.c_.front();
    for (auto& c : c_) c *= s;
    return *this;
  }
  if (is_rational()) {
    Scalar s = c_.front();
    *this = o.promoted(k);
    for (auto& c : c_) c *= s;
    return *this;
  }
  *this = from_polynomial(k, as_polynomial() * o.as_polynomial());
  return *this;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(eta_" + std::to_string(k_) + ")");
  if (is_rational()) return CycloScalar(k_, c_.front().inverse());
  // Extended Euclid: s * a + t * Phi = g, with g a nonzero constant because
  // Phi_k is irreducible and deg a < deg Phi_k.
  Polynomial r0 = cyclotomic_polynomial(k_), r1 = as_polynomial();
  Polynomial s0, s1 = Polynomial::constant(Scalar(1));
  while (!r1.is_zero()) {
    Polynomial q, r;
    Polynomial::divmod(r0, r1, q, r);
    Polynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::logic_error("cyclotomic inverse: non-unit gcd");
  return from_polynomial(k_, s0 * r0.leading().inverse());
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& o) { return *this *= o.inverse(); }

CycloScalar CycloScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloScalar result(k_, Scalar(1)), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  if (a.k_ == b.k_) return a.c_ == b.c_;
  if (!a.is_rational() || !b.is_rational()) return false;
  return a.c_.front() == b.c_.front();
}

std::string CycloScalar::to_string() const {
  if (is_rational()) return c_.front().to_string();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Scalar c = c_[i];
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    } else if (c.sign() < 0 && i > 0) {
      os << '-';
      c = -c;
    }
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (!c.is_one()) os << c << '*';
    os << "eta";
    if (i > 1) os << '^' << i;
  }
  return "(" + os.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const CycloScalar& s) { return os << s.to_string(); }

CycloScalar eta_power(int k, long e) {
  if (k < 1) throw std::invalid_argument("eta_power: k must be positive");
  long r = ((e % k) + k) % k;
  return CycloScalar::from_polynomial(k, Polynomial::monomial(Scalar(1), static_cast<int>(r)));
}

}  // namespace twistzhu
