#include "twistzhu/iso.hpp"

namespace twistzhu {

namespace {

int require_homogeneous(const Vector& u, const char* who) {
  const auto w = homogeneous_weight(u);
  if (!w) throw std::invalid_argument(std::string(who) + ": left argument must be homogeneous");
  return *w;
}

}  // namespace

ReductionResult reduce_star(const Model& model, const Vector& u, const Vector& v, int k) {
  ReductionResult out;
  if (u.is_zero() || v.is_zero()) return out;
  const int wu = require_homogeneous(u, "reduce_star");
  const int hi = wu + max_weight(v);
  out.representative = star(model, u, v);
  for (int t = 1; t < k; ++t) {
    const Scalar gamma = Scalar(wu - 1) + Scalar(t, k);
    Vector r = model.residue_pairing(u, v, shifted_binomial(gamma, 1, hi));
    out.representative += r;
    out.corrections.push_back(std::move(r));
  }
  return out;
}

ReductionResult reduce_circ(const Model& model, const Vector& u, const Vector& v, int k) {
  ReductionResult out;
  if (u.is_zero() || v.is_zero()) return out;
  const int wu = require_homogeneous(u, "reduce_circ");
  const int hi = wu + max_weight(v);
  out.representative = circ(model, u, v);
  for (int t = 1; t < k; ++t) {
    const Scalar frac(t, k);
    Vector r = model.residue_pairing(u, v, shifted_binomial(Scalar(wu) + frac, 2, hi));
    r.add_scaled(model.residue_pairing(u, v, shifted_binomial(Scalar(wu - 1) + frac, 1, hi)),
                 -frac);
    out.representative += r;
    out.corrections.push_back(std::move(r));
  }
  return out;
}

Vector phi(const Model& model, const Vector& w, const AjTable& table) {
  return delta1(model, w, table) * Scalar(table.k);
}

TensorVector psi(const TensorPower& tensor, const Vector& u, const AjTable& table) {
  if (tensor.k() != table.k) throw std::invalid_argument("psi: table and tensor power disagree on k");
  TensorVector out = tensor.orbit_sum(delta1_inv(tensor.model(), u, table));
  out *= CycloScalar(Scalar(1, tensor.k()));
  return out;
}

Vector orbit_representative(const TensorPower& tensor, const TensorVector& orbit) {
  Vector rep;
  for (const auto& [m, c] : orbit) {
    if (!c.is_rational())
      throw std::invalid_argument("orbit_representative: irrational coefficient " + c.to_string());
    int occupied = 0;
    int slot = 0;
    for (int a = 1; a <= tensor.k(); ++a)
      if (!m.slot(a).is_vacuum()) {
        ++occupied;
        slot = a;
      }
    if (occupied == 0)
      rep.add(FockMonomial(), c.rational_part() / Scalar(tensor.k()));
    else if (occupied == 1 && slot == 1)
      rep.add(m.slot(1), c.rational_part());
    else if (occupied > 1)
      throw std::invalid_argument("orbit_representative: " + m.to_string() + " is not a one-tensor");
  }
  if (!(tensor.orbit_sum(rep) == orbit))
    throw std::invalid_argument("orbit_representative: input is not an orbit sum");
  return rep;
}

ChainCheck verify_circ_chain(const Model& model, const Vector& u, const Vector& v,
                             const AjTable& table) {
  ChainCheck out;
  const int k = table.k;
  out.lhs = phi(model, reduce_circ(model, u, v, k).representative, table);
  if (u.is_zero() || v.is_zero()) {
    out.pass = out.lhs.is_zero();
    return out;
  }
  const int wu = require_homogeneous(u, "verify_circ_chain");
  const Vector dv = delta1(model, v, table);
  const Scalar scale = Scalar(k).pow(1 - wu);
  const int hi = wu + max_weight(dv);
  for (const auto& [vec, drop] : exp_weighted_l(model, u, table).parts) {
    // A weight-zero part is a multiple of the vacuum, and 1 o x = 0.
    if (wu - drop == 0) continue;
    out.rhs.add_scaled(
        model.residue_pairing(vec, dv, shifted_binomial(Scalar(wu - drop), 2, hi)), scale);
    out.witness.add(vec, dv, scale);
  }
  out.witness_value = witness_eval(model, out.witness);
  out.pass = out.lhs == out.rhs && out.witness_value == out.rhs;
  return out;
}

ChainCheck verify_star_chain(const Model& model, const Vector& u, const Vector& v,
                             const AjTable& table) {
  ChainCheck out;
  const int k = table.k;
  if (!u.is_zero()) require_homogeneous(u, "verify_star_chain");
  out.lhs = phi(model, reduce_star(model, u, v, k).representative, table);
  out.rhs = star(model, delta1(model, u, table) * Scalar(k), delta1(model, v, table) * Scalar(k));
  out.pass = out.lhs == out.rhs;
  return out;
}

TensorCongruence verify_tensor_congruence(const TensorPower& tensor, const Vector& u,
                                          const Vector& v) {
  TensorCongruence out;
  const Model& model = tensor.model();
  const int k = tensor.k();
  const int wu = require_homogeneous(u, "verify_tensor_congruence");
  const Vector lu = model.l_action(-1, u);

  auto twisted_circ = [&](const Vector& left, int t) {
    return tensor.circ_g(tensor.twisted_orbit_sum(left, t), tensor.twisted_orbit_sum(v, -t));
  };

  const auto ws = reduce_star(model, u, v, k);
  const auto wc = reduce_circ(model, u, v, k);
  const TensorVector ubar = tensor.orbit_sum(u);
  const TensorVector vbar = tensor.orbit_sum(v);

  std::vector<TensorVector> c_u, c_lu;
  for (int t = 1; t < k; ++t) {
    c_u.push_back(twisted_circ(u, t));
    c_lu.push_back(twisted_circ(lu, t));
  }

  TensorVector star_rhs = tensor.orbit_sum(ws.representative);
  TensorVector circ_rhs = tensor.orbit_sum(wc.representative);
  for (int t = 1; t < k; ++t) {
    star_rhs -= c_u[static_cast<size_t>(t - 1)];
    circ_rhs.add_scaled(c_u[static_cast<size_t>(t - 1)], CycloScalar(-wu));
    circ_rhs -= c_lu[static_cast<size_t>(t - 1)];
  }
  out.star_pass = tensor.star_g(ubar, vbar) == star_rhs;
  out.circ_pass = tensor.circ_g(ubar, vbar) == circ_rhs;
  out.witness_terms = 3 * static_cast<std::size_t>(k - 1);

  if (k < 2) {
    out.cross_terms_pass = out.eta_solution_pass = true;
    return out;
  }

  // x_i = sum_a x^{a, a+i}: u in slot a, v in slot a+i (mod k).
  std::vector<TensorVector> x;
  for (int i = 1; i < k; ++i) {
    TensorVector xi;
    for (int a = 1; a <= k; ++a) xi += tensor.two_tensor(u, a, v, (a - 1 + i) % k + 1);
    x.push_back(tensor.lift(xi));
  }
  std::vector<TensorVector> rhs;
  out.cross_terms_pass = true;
  for (int t = 1; t < k; ++t) {
    TensorVector ut = -tensor.orbit_sum(ws.corrections[static_cast<size_t>(t - 1)]);
    TensorVector lhs;
    for (int i = 1; i < k; ++i)
      lhs.add_scaled(x[static_cast<size_t>(i - 1)], eta_power(k, static_cast<long>(i) * t));
    const TensorVector& ct = c_u[static_cast<size_t>(t - 1)];
    out.cross_terms_pass = out.cross_terms_pass && lhs - ut == ct;
    rhs.push_back(ct + ut);
  }
  const auto solved = solve_eta_system(rhs, k);
  out.eta_solution_pass = true;
  for (int i = 1; i < k; ++i)
    out.eta_solution_pass =
        out.eta_solution_pass && solved[static_cast<size_t>(i - 1)] == x[static_cast<size_t>(i - 1)];
  return out;
}

}  // namespace twistzhu
