#include "twistzhu/tensor.hpp"

#include <functional>
#include <sstream>

namespace twistzhu {

TensorMonomial::TensorMonomial(std::vector<FockMonomial> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("TensorMonomial: need at least one slot");
  for (const auto& f : factors_) weight_ += f.weight();
}

std::string TensorMonomial::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += " | ";
    out += factors_[i].to_string();
  }
  return out + "]";
}

std::strong_ordering operator<=>(const TensorMonomial& a, const TensorMonomial& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return a.factors_ <=> b.factors_;
}

std::map<int, TensorVector> weight_components(const TensorVector& v) {
  std::map<int, TensorVector> out;
  for (const auto& [m, c] : v) out[m.weight()].add(m, c);
  return out;
}

int max_weight(const TensorVector& v) {
  return v.is_zero() ? -1 : std::prev(v.end())->first.weight();
}

std::string to_string(const TensorVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
    const CycloScalar& c = it->second;
    if (c.is_rational()) {
      Scalar q = c.rational_part();
      if (!first) {
        os << (q.sign() < 0 ? " - " : " + ");
        if (q.sign() < 0) q = -q;
      }
      if (q == Scalar(-1))
        os << '-';
      else if (!q.is_one())
        os << q << '*';
    } else {
      if (!first) os << " + ";
      os << c.to_string() << '*';
    }
    first = false;
    os << it->first.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------

TensorPower::TensorPower(const Model& model, int k) : model_(&model), k_(k) {
  if (k < 1) throw std::invalid_argument("TensorPower: k must be positive");
}

TensorVector TensorPower::vacuum() const {
  return TensorVector(TensorMonomial(std::vector<FockMonomial>(static_cast<size_t>(k_))),
                      CycloScalar(1));
}

TensorVector TensorPower::one_tensor(const Vector& u, int slot) const {
  if (slot < 1 || slot > k_)
    throw std::out_of_range("one_tensor: slot " + std::to_string(slot) + " outside 1.." +
                            std::to_string(k_));
  TensorVector out;
  for (const auto& [m, c] : u) {
    std::vector<FockMonomial> f(static_cast<size_t>(k_));
    f[static_cast<size_t>(slot - 1)] = m;
    out.add(TensorMonomial(std::move(f)), CycloScalar(c));
  }
  return out;
}

TensorVector TensorPower::two_tensor(const Vector& u, int a, const Vector& v, int b) const {
  if (a == b) throw std::invalid_argument("two_tensor: slots must differ");
  if (a < 1 || a > k_ || b < 1 || b > k_) throw std::out_of_range("two_tensor: slot out of range");
  std::vector<Vector> slots(static_cast<size_t>(k_), vacuum_vector());
  slots[static_cast<size_t>(a - 1)] = u;
  slots[static_cast<size_t>(b - 1)] = v;
  return tensor_product(slots);
}

TensorVector TensorPower::tensor_product(const std::vector<Vector>& slots) const {
  if (static_cast<int>(slots.size()) != k_)
    throw std::invalid_argument("tensor_product: expected " + std::to_string(k_) + " slots");
  std::vector<std::pair<std::vector<FockMonomial>, Scalar>> partial{{{}, Scalar(1)}};
  for (const auto& slot : slots) {
    std::vector<std::pair<std::vector<FockMonomial>, Scalar>> next;
    for (const auto& [prefix, coeff] : partial)
      for (const auto& [m, c] : slot) {
        auto f = prefix;
        f.push_back(m);
        next.emplace_back(std::move(f), coeff * c);
      }
    partial = std::move(next);
  }
  TensorVector out;
  for (auto& [f, c] : partial) out.add(TensorMonomial(std::move(f)), CycloScalar(c));
  return out;
}

TensorVector TensorPower::orbit_sum(const Vector& u) const {
  TensorVector out;
  for (int a = 1; a <= k_; ++a) out += one_tensor(u, a);
  return out;
}

TensorVector TensorPower::twisted_orbit_sum(const Vector& u, int s) const {
  TensorVector out;
  for (int a = 1; a <= k_; ++a) out.add_scaled(one_tensor(u, a), eta_power(k_, -(a - 1) * s));
  return out;
}

TensorVector TensorPower::lift(const TensorVector& w) const {
  return w.converted<CycloScalar>([this](const CycloScalar& c) { return c.promoted(k_); });
}

TensorVector TensorPower::cycle_apply(const TensorVector& w, int power) const {
  const int shift = ((power % k_) + k_) % k_;
  if (shift == 0) return w;
  TensorVector out;
  for (const auto& [m, c] : w) {
    if (m.k() != k_) throw std::invalid_argument("cycle_apply: tensor has wrong number of slots");
    std::vector<FockMonomial> f(static_cast<size_t>(k_));
    for (int a = 0; a < k_; ++a) f[static_cast<size_t>((a + shift) % k_)] = m.factors()[static_cast<size_t>(a)];
    out.add(TensorMonomial(std::move(f)), c);
  }
  return out;
}

TensorVector TensorPower::eigencomponent(const TensorVector& w, int r) const {
  TensorVector out;
  for (int m = 0; m < k_; ++m) out.add_scaled(cycle_apply(w, m), eta_power(k_, -static_cast<long>(r) * m));
  out *= CycloScalar(Scalar(1, k_));
  return out;
}

TensorVector TensorPower::monomial_mode(const TensorMonomial& u, long n, const TensorMonomial& v) const {
  // Coefficient of z^{-n-1} in prod_a Y(u_a, z) v_a. Slot a contributes
  // exponents e_a >= -(wt u_a + wt v_a); a vacuum slot contributes only e_a = 0.
  const long target = -n - 1;
  std::vector<long> low(static_cast<size_t>(k_));
  long low_total = 0;
  for (int a = 0; a < k_; ++a) {
    const auto& ua = u.factors()[static_cast<size_t>(a)];
    const auto& va = v.factors()[static_cast<size_t>(a)];
    low[static_cast<size_t>(a)] = ua.is_vacuum() ? 0 : -(static_cast<long>(ua.weight()) + va.weight());
    low_total += low[static_cast<size_t>(a)];
  }
  TensorVector out;
  if (target < low_total) return out;

  // Exponents are assigned slot by slot; the last slot takes what is left.
  std::function<void(int, long, std::vector<FockMonomial>&, const Scalar&)> rec =
      [&](int a, long spent, std::vector<FockMonomial>& prefix, const Scalar& coeff) {
        if (a == k_) {
          if (spent == target) out.add(TensorMonomial(prefix), CycloScalar(coeff));
          return;
        }
        const auto& ua = u.factors()[static_cast<size_t>(a)];
        const auto& va = v.factors()[static_cast<size_t>(a)];
        long rest_low = 0;
        for (int b = a + 1; b < k_; ++b) rest_low += low[static_cast<size_t>(b)];
        const long e_min = low[static_cast<size_t>(a)];
        const long e_max = ua.is_vacuum() ? 0 : target - spent - rest_low;
        for (long e = e_min; e <= e_max; ++e) {
          Vector piece = ua.is_vacuum() ? Vector(va) : model_->mode(ua, -e - 1, va);
          for (const auto& [m, c] : piece) {
            prefix.push_back(m);
            rec(a + 1, spent + e, prefix, coeff * c);
            prefix.pop_back();
          }
        }
      };
  std::vector<FockMonomial> prefix;
  rec(0, 0, prefix, Scalar(1));
  return out;
}

TensorVector TensorPower::mode_action(const TensorVector& u, long n, const TensorVector& v) const {
  TensorVector out;
  for (const auto& [mu, cu] : u)
    for (const auto& [mv, cv] : v) out.add_scaled(monomial_mode(mu, n, mv), cu * cv);
  return out;
}

TensorVector TensorPower::residue_pairing(const TensorVector& u, const TensorVector& v,
                                          const Series<Scalar>& s) const {
  TensorVector out;
  if (u.is_zero() || v.is_zero()) return out;
  const long top = max_weight(u) + max_weight(v) - 1;
  if (s.hi() < top)
    throw TruncationError("tensor residue pairing needs the weight series through z^" +
                          std::to_string(top));
  for (const auto& [n, c] : s.terms()) {
    if (n > top) break;
    out.add_scaled(mode_action(u, n, v), CycloScalar(c));
  }
  return out;
}

TensorVector TensorPower::circ_g(const TensorVector& u, const TensorVector& v) const {
  TensorVector out;
  if (v.is_zero()) return out;
  for (int r = 0; r < k_; ++r) {
    const TensorVector part = k_ == 1 ? u : eigencomponent(u, r);
    for (const auto& [w, c] : weight_components(part)) {
      const int hi = w + max_weight(v);
      const auto s = r == 0 ? shifted_binomial(Scalar(w), 2, hi)
                            : shifted_binomial(Scalar(w - 1) + Scalar(r, k_), 1, hi);
      out += residue_pairing(c, v, s);
    }
  }
  return out;
}

TensorVector TensorPower::star_g(const TensorVector& u, const TensorVector& v) const {
  TensorVector out;
  if (v.is_zero()) return out;
  const TensorVector invariant = k_ == 1 ? u : eigencomponent(u, 0);
  for (const auto& [w, c] : weight_components(invariant))
    out += residue_pairing(c, v, shifted_binomial(Scalar(w), 1, w + max_weight(v)));
  return out;
}

}  // namespace twistzhu
