#include "twistzhu/zhu.hpp"

namespace twistzhu {

namespace {

Vector weighted_product(const Model& model, const Vector& u, const Vector& v, int pole) {
  Vector out;
  if (v.is_zero()) return out;
  const int vw = max_weight(v);
  for (const auto& [w, c] : weight_components(u))
    out += model.residue_pairing(c, v, shifted_binomial(Scalar(w), pole, w + vw));
  return out;
}

}  // namespace

Vector circ(const Model& model, const Vector& u, const Vector& v) {
  return weighted_product(model, u, v, 2);
}

Vector star(const Model& model, const Vector& u, const Vector& v) {
  return weighted_product(model, u, v, 1);
}

Vector circ_by_series(const Model& model, const Vector& u, const Vector& v) {
  Vector out;
  if (u.is_zero() || v.is_zero()) return out;
  const int vw = max_weight(v);
  for (const auto& [w, c] : weight_components(u)) {
    auto y = model.vertex_series(c, v, 1);
    auto b = binomial_series(Scalar(w), w + vw + 1);
    Series<Scalar> weight_factor(-2, w + vw - 1);
    for (const auto& [e, coeff] : b.terms()) weight_factor.add(e - 2, coeff);
    out += residue(y * weight_factor);
  }
  return out;
}

void OvWitness::add(Vector left, Vector right, Scalar coeff) {
  if (coeff.is_zero() || left.is_zero() || right.is_zero()) return;
  triples.push_back({std::move(left), std::move(right), std::move(coeff)});
}

void OvWitness::append(const OvWitness& other, const Scalar& scale) {
  for (const auto& t : other.triples) add(t.left, t.right, t.coeff * scale);
}

Vector witness_eval(const Model& model, const OvWitness& w) {
  Vector out;
  for (const auto& t : w.triples) out.add_scaled(circ(model, t.left, t.right), t.coeff);
  return out;
}

namespace {

// L(-1)^m x = sum_{i<m} c_i (L(-1)^i x) o 1 + rho x for homogeneous x of weight w,
// from L(-1)y = y o 1 - wt(y) y. Records the circ terms scaled by `scale` and
// returns scale * rho * x.
Vector reduce_translation(const Model& model, const Vector& x, int w, int m, const Scalar& scale,
                          OvWitness& witness) {
  std::vector<Vector> powers{x};
  for (int i = 1; i < m; ++i) powers.push_back(model.l_action(-1, powers.back()));
  Scalar s = scale;
  for (int level = m; level >= 1; --level) {
    witness.add(powers[static_cast<size_t>(level - 1)], vacuum_vector(), s);
    s *= Scalar(-(w + level - 1));
  }
  return x * s;
}

}  // namespace

SkewReduction skew_star(const Model& model, const Vector& u, const Vector& v) {
  SkewReduction out;
  if (u.is_zero() || v.is_zero()) return out;
  const auto wu = homogeneous_weight(u);
  const auto wv = homogeneous_weight(v);
  if (!wu || !wv) throw std::invalid_argument("skew_star: arguments must be homogeneous");

  // v * u = sum_{n >= -1} sum_{m=0}^{n+1} (-1)^{n+1} binom(wt v, n+1-m) / m! L(-1)^m u_n v
  for (long n = -1; n <= *wu + *wv - 1; ++n) {
    const Vector x = model.mode_action(u, n, v);
    if (x.is_zero()) continue;
    const int wx = static_cast<int>(*wu - n - 1 + *wv);
    const Scalar sign = (n + 1) % 2 == 0 ? Scalar(1) : Scalar(-1);
    Scalar m_factorial(1);
    for (long m = 0; m <= n + 1; ++m) {
      if (m > 0) m_factorial *= Scalar(m);
      const Scalar c = sign * rational_binomial(Scalar(*wv), n + 1 - m) / m_factorial;
      if (c.is_zero()) continue;
      out.reduced += reduce_translation(model, x, wx, static_cast<int>(m), c, out.witness);
    }
  }
  return out;
}

OvWitness omega_commutator_witness(const Model& model, const Vector& v) {
  OvWitness w;
  w.add(v, vacuum_vector(), Scalar(1));
  w.append(skew_star(model, model.conformal_vector(), v).witness, Scalar(-1));
  return w;
}

}  // namespace twistzhu
