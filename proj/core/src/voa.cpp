#include "twistzhu/voa.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

namespace twistzhu {

FockMonomial::FockMonomial(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("FockMonomial: parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int FockMonomial::multiplicity(int n) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), n));
}

FockMonomial FockMonomial::with_part(int n) const {
  std::vector<int> p = parts_;
  p.push_back(n);
  return FockMonomial(std::move(p));
}

FockMonomial FockMonomial::without_part(int n) const {
  std::vector<int> p = parts_;
  auto it = std::find(p.begin(), p.end(), n);
  if (it == p.end()) throw std::invalid_argument("FockMonomial::without_part: part not present");
  p.erase(it);
  FockMonomial out;
  out.parts_ = std::move(p);
  out.weight_ = weight_ - n;
  return out;
}

std::string FockMonomial::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size();) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    os << "a(-" << parts_[i] << ")";
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  os << "|0>";
  return os.str();
}

std::strong_ordering operator<=>(const FockMonomial& a, const FockMonomial& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return a.parts_ <=> b.parts_;
}

Vector vacuum_vector() { return Vector(FockMonomial()); }

Vector fock_vector(std::vector<int> parts, const Scalar& coeff) {
  Vector v;
  v.add(FockMonomial(std::move(parts)), coeff);
  return v;
}

std::vector<FockMonomial> fock_basis(int weight) {
  std::vector<FockMonomial> out;
  if (weight < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(weight, weight);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FockMonomial> fock_basis_up_to(int max_weight) {
  std::vector<FockMonomial> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto b = fock_basis(w);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::string to_string(const Vector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
    Scalar c = it->second;
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    first = false;
    if (c == Scalar(-1))
      os << '-';
    else if (!c.is_one())
      os << c << '*';
    os << it->first.to_string();
  }
  return os.str();
}

Vector generator_mode(long m, const Vector& v) {
  Vector out;
  if (m == 0) return out;
  for (const auto& [mono, c] : v) {
    if (m < 0) {
      out.add(mono.with_part(static_cast<int>(-m)), c);
      continue;
    }
    int mult = mono.multiplicity(static_cast<int>(m));
    if (mult == 0) continue;
    out.add(mono.without_part(static_cast<int>(m)), c * Scalar(m * mult));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Model helpers

Vector Model::mode_action(const Vector& u, long n, const Vector& v) const {
  Vector out;
  for (const auto& [mu, cu] : u)
    for (const auto& [mv, cv] : v) out.add_scaled(mode(mu, n, mv), cu * cv);
  return out;
}

Vector Model::l_action(long n, const Vector& v) const {
  return mode_action(conformal_vector(), n + 1, v);
}

Series<Vector> Model::vertex_series(const Vector& u, const Vector& v, int hi) const {
  const int lo = -(std::max(max_weight(u), 0) + std::max(max_weight(v), 0));
  Series<Vector> s(std::min(lo, hi), hi);
  if (u.is_zero() || v.is_zero()) return s;
  for (int e = lo; e <= hi; ++e) s.add(e, mode_action(u, -e - 1, v));
  return s;
}

Vector Model::residue_pairing(const Vector& u, const Vector& v, const Series<Scalar>& s) const {
  Vector out;
  if (u.is_zero() || v.is_zero()) return out;
  // u_n v vanishes for n > wt u + wt v - 1.
  const long top = max_weight(u) + max_weight(v) - 1;
  if (s.hi() < top)
    throw TruncationError("residue pairing needs the weight series through z^" +
                          std::to_string(top) + " but it is only exact through z^" +
                          std::to_string(s.hi()));
  for (const auto& [n, c] : s.terms()) {
    if (n > top) break;
    out.add_scaled(mode_action(u, n, v), c);
  }
  return out;
}

Series<Scalar> shifted_binomial(const Scalar& gamma, int p, int hi) {
  Series<Scalar> out(-p, hi);
  if (hi + p < 0) return out;
  const auto b = binomial_series(gamma, hi + p);
  for (const auto& [e, c] : b.terms()) out.add(e - p, c);
  return out;
}

// ---------------------------------------------------------------------------
// Heisenberg

namespace {

using ModeKey = std::tuple<std::vector<int>, long, std::vector<int>>;

// Memo for basis mode actions. The vertex algebra structure does not depend
// on the conformal shift, so one cache serves every HeisenbergModel.
thread_local std::map<ModeKey, Vector> mode_cache;

Vector heisenberg_mode(const FockMonomial& u, long n, const FockMonomial& v) {
  if (n > static_cast<long>(u.weight()) + v.weight() - 1) return {};
  if (u.is_vacuum()) return n == -1 ? Vector(v) : Vector();

  ModeKey key{u.parts(), n, v.parts()};
  if (auto it = mode_cache.find(key); it != mode_cache.end()) return it->second;

  // u = a(-m) w. Iterate formula:
  // (a(-m) w)_n v = sum_{i>=0} binom(m+i-1, i) [ a(-m-i) w_{n+i} v
  //                                              - (-1)^m w_{n-m-i} a(i) v ]
  const int m = u.parts().front();
  const FockMonomial w = u.without_part(m);
  const Vector v_vec(v);
  Vector out;

  for (long i = 0; n + i <= static_cast<long>(w.weight()) + v.weight() - 1; ++i) {
    Vector inner = heisenberg_mode(w, n + i, v);
    if (inner.is_zero()) continue;
    out.add_scaled(generator_mode(-(m + i), inner), rational_binomial(Scalar(m + i - 1), i));
  }
  const Scalar sign = (m % 2 == 0) ? Scalar(-1) : Scalar(1);  // -(-1)^m
  const int top = v.is_vacuum() ? 0 : v.parts().front();
  for (int i = 1; i <= top; ++i) {
    Vector contracted = generator_mode(i, v_vec);
    if (contracted.is_zero()) continue;
    const Scalar coeff = sign * rational_binomial(Scalar(m + i - 1), i);
    for (const auto& [mono, c] : contracted)
      out.add_scaled(heisenberg_mode(w, n - m - i, mono), coeff * c);
  }

  mode_cache.emplace(std::move(key), out);
  return out;
}

}  // namespace

HeisenbergModel::HeisenbergModel(Scalar shift) : shift_(std::move(shift)) {
  omega_ = fock_vector({1, 1}, Scalar(1, 2));
  omega_.add(FockMonomial({2}), shift_);
}

std::string HeisenbergModel::name() const {
  if (shift_.is_zero()) return "heisenberg";
  return "heisenberg(shift=" + shift_.to_string() + ")";
}

Scalar HeisenbergModel::central_charge() const { return Scalar(1) - Scalar(12) * shift_ * shift_; }

Vector HeisenbergModel::mode(const FockMonomial& u, long n, const FockMonomial& v) const {
  return heisenberg_mode(u, n, v);
}

const HeisenbergModel& heisenberg() {
  static const HeisenbergModel model;
  return model;
}

}  // namespace twistzhu
