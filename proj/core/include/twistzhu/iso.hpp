#pragma once

#include <stdexcept>
#include <vector>

#include "twistzhu/delta.hpp"
#include "twistzhu/exactnum.hpp"
#include "twistzhu/tensor.hpp"
#include "twistzhu/voa.hpp"
#include "twistzhu/zhu.hpp"

namespace twistzhu {

/// Closed-form solution of the root-of-unity system
///   sum_{i=1}^{k-1} eta^{is} x_i = u_s,   s = 1..k-1,
/// namely x_i = sum_t (1/k)(eta^{-it} - 1) u_t. M is any module over
/// CycloScalar with a zero default value, + and right scalar multiplication.
template <class M>
std::vector<M> solve_eta_system(const std::vector<M>& u, int k) {
  if (k < 2) throw std::invalid_argument("solve_eta_system: k must be at least 2");
  if (static_cast<int>(u.size()) != k - 1)
    throw std::invalid_argument("solve_eta_system: expected k-1 right-hand sides");
  const CycloScalar inv_k = CycloScalar(Scalar(1, k)).promoted(k);
  std::vector<M> x(static_cast<size_t>(k - 1));
  for (int i = 1; i < k; ++i)
    for (int t = 1; t < k; ++t)
      x[static_cast<size_t>(i - 1)] =
          x[static_cast<size_t>(i - 1)] +
          u[static_cast<size_t>(t - 1)] * ((eta_power(k, -static_cast<long>(i) * t) - CycloScalar(1)) * inv_k);
  return x;
}

/// The left-hand sides sum_i eta^{is} x_i for s = 1..k-1.
template <class M>
std::vector<M> eta_system_apply(const std::vector<M>& x, int k) {
  std::vector<M> out(static_cast<size_t>(k - 1));
  for (int s = 1; s < k; ++s)
    for (int i = 1; i < k; ++i)
      out[static_cast<size_t>(s - 1)] =
          out[static_cast<size_t>(s - 1)] + x[static_cast<size_t>(i - 1)] * eta_power(k, static_cast<long>(i) * s);
  return out;
}

/// A one-tensor representative w, so that the class of a two-tensor
/// expression is [sum_a w^a]. corrections[t-1] holds the per-t residue
/// term added to the untwisted product.
struct ReductionResult {
  Vector representative;
  std::vector<Vector> corrections;
};

/// Representative of the class of (sum_a u^a) *_g (sum_b v^b):
///   w = u*v + sum_{t=1}^{k-1} Res_z Y(u,z)v (1+z)^{wt u - 1 + t/k} / z.
ReductionResult reduce_star(const Model& model, const Vector& u, const Vector& v, int k);

/// Representative of the class of (sum_a u^a) o_g (sum_b v^b):
///   w = u o v - sum_{t=1}^{k-1} Res_z Y(u,z)v [(t/k)(1+z)^{wt u-1+t/k}/z - (1+z)^{wt u+t/k}/z^2].
ReductionResult reduce_circ(const Model& model, const Vector& u, const Vector& v, int k);

/// phi([sum_a w^a]) = k Delta_k(1) w.
Vector phi(const Model& model, const Vector& w, const AjTable& table);

/// psi(u) = (1/k) sum_a (Delta_k(1)^{-1} u)^a.
TensorVector psi(const TensorPower& tensor, const Vector& u, const AjTable& table);

/// Recovers w from an orbit sum sum_a w^a of one-tensors with rational
/// coefficients. Throws std::invalid_argument for anything else.
Vector orbit_representative(const TensorPower& tensor, const TensorVector& orbit);

struct ChainCheck {
  bool pass = false;
  Vector lhs;  // phi of the reduced representative
  Vector rhs;  // closed form on the A(V) side
  OvWitness witness;
  Vector witness_value;
};

/// phi(reduce_circ(u,v)) against k^{1-wt u} sum_p Res_z Y(vec_p,z) Delta(1)v (1+z)^{wt u-m_p} z^{-2}
/// over the parts of exp_weighted_l(u). Each summand is vec_p o Delta(1)v, so
/// the witness has triples (vec_p, Delta(1)v, k^{1-wt u}); it must evaluate to rhs.
ChainCheck verify_circ_chain(const Model& model, const Vector& u, const Vector& v,
                             const AjTable& table);

/// phi(reduce_star(u,v)) against (k Delta(1)u) * (k Delta(1)v).
ChainCheck verify_star_chain(const Model& model, const Vector& u, const Vector& v,
                             const AjTable& table);

/// Tensor-level certificate for the one-tensor reductions. With
///   C_t(u,v) = (sum_a eta^{-(a-1)t} u^a) o_g (sum_b eta^{(b-1)t} v^b),
/// which lies in O_g, the identities
///   ubar *_g vbar = sum_a (w_star)^a - sum_t C_t(u,v)
///   ubar o_g vbar = sum_a (w_circ)^a - sum_t (wt u C_t(u,v) + C_t(L(-1)u,v))
/// hold exactly in the tensor power.
struct TensorCongruence {
  bool star_pass = false;
  bool circ_pass = false;
  /// sum_i eta^{it} x_i - u_t == C_t for every t, where x_i = sum_a x^{a,a+i}
  /// and u_t = -sum_a (R_t)^a.
  bool cross_terms_pass = false;
  /// solve_eta_system(C_t + u_t) reproduces every x_i.
  bool eta_solution_pass = false;
  std::size_t witness_terms = 0;
};
TensorCongruence verify_tensor_congruence(const TensorPower& tensor, const Vector& u,
                                          const Vector& v);

}  // namespace twistzhu
