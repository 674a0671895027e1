#pragma once

#include <vector>

#include "twistzhu/exactnum.hpp"
#include "twistzhu/voa.hpp"

namespace twistzhu {

/// u o v = Res_z Y(u,z)v (1+z)^{wt u} / z^2 = sum_j binom(wt u, j) u_{j-2} v.
/// An inhomogeneous u is split by weight, each component using its own weight.
Vector circ(const Model& model, const Vector& u, const Vector& v);

/// u * v = Res_z Y(u,z)v (1+z)^{wt u} / z = sum_j binom(wt u, j) u_{j-1} v,
/// componentwise in the weight of u.
Vector star(const Model& model, const Vector& u, const Vector& v);

/// circ computed as the z^-1 coefficient of the product of the series
/// Y(u,z)v and (1+z)^{wt u} z^-2 rather than by the closed binomial sum.
Vector circ_by_series(const Model& model, const Vector& u, const Vector& v);

struct OvTriple {
  Vector left;
  Vector right;
  Scalar coeff;
};

/// Certificate that sum_i coeff_i (left_i o right_i) equals some vector.
struct OvWitness {
  std::vector<OvTriple> triples;

  void add(Vector left, Vector right, Scalar coeff);
  void append(const OvWitness& other, const Scalar& scale = Scalar(1));
  bool empty() const { return triples.empty(); }
  std::size_t size() const { return triples.size(); }
};

Vector witness_eval(const Model& model, const OvWitness& w);

/// v * u rewritten through skew symmetry Y(v,z)u = e^{zL(-1)} Y(u,-z) v and
/// the congruence L(-1)x = x o 1 - wt(x) x. For homogeneous u and v,
///   v * u = reduced + witness_eval(witness)
/// holds exactly, with `reduced` a combination of the modes u_n v.
struct SkewReduction {
  Vector reduced;
  OvWitness witness;
};
SkewReduction skew_star(const Model& model, const Vector& u, const Vector& v);

/// Witness W with omega * v - v * omega = witness_eval(W) for homogeneous v.
/// Built from Res_z (1+z) Y(omega,z)v = v o 1 and skew_star.
OvWitness omega_commutator_witness(const Model& model, const Vector& v);

}  // namespace twistzhu
