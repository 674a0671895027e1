#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "twistzhu/exactnum.hpp"
#include "twistzhu/linear_combination.hpp"
#include "twistzhu/voa.hpp"

namespace twistzhu {

/// k-fold tensor of Fock monomials; slot a (1-based) holds factors()[a-1].
class TensorMonomial {
 public:
  explicit TensorMonomial(std::vector<FockMonomial> factors);

  int k() const { return static_cast<int>(factors_.size()); }
  const std::vector<FockMonomial>& factors() const { return factors_; }
  const FockMonomial& slot(int a) const { return factors_.at(static_cast<size_t>(a - 1)); }
  int weight() const { return weight_; }

  std::string to_string() const;

  friend bool operator==(const TensorMonomial&, const TensorMonomial&) = default;
  friend std::strong_ordering operator<=>(const TensorMonomial& a, const TensorMonomial& b);

 private:
  std::vector<FockMonomial> factors_;
  int weight_ = 0;
};

using TensorVector = LinearCombination<TensorMonomial, CycloScalar>;

std::map<int, TensorVector> weight_components(const TensorVector& v);
int max_weight(const TensorVector& v);
std::string to_string(const TensorVector& v);

/// V^{(x)k} for a model V, with the k-cycle g = (1 2 ... k) acting by moving
/// the factor in slot a to slot a+1 (mod k). Under this convention
/// sum_a eta^{-(a-1)s} u^a lies in the eta^s eigenspace.
class TensorPower {
 public:
  TensorPower(const Model& model, int k);

  int k() const { return k_; }
  const Model& model() const { return *model_; }

  TensorVector vacuum() const;
  /// u in slot a, vacuum elsewhere (1 <= a <= k).
  TensorVector one_tensor(const Vector& u, int slot) const;
  /// u in slot a, v in slot b, vacuum elsewhere (a != b).
  TensorVector two_tensor(const Vector& u, int a, const Vector& v, int b) const;
  /// Multilinear expansion of slot vectors v_1 (x) ... (x) v_k.
  TensorVector tensor_product(const std::vector<Vector>& slots) const;
  /// sum_{a=1}^k u^a
  TensorVector orbit_sum(const Vector& u) const;
  /// sum_{a=1}^k eta^{-(a-1)s} u^a, an eigenvector of g with eigenvalue eta^s.
  TensorVector twisted_orbit_sum(const Vector& u, int s) const;
  /// Rational coefficients embedded into Q(eta_k).
  TensorVector lift(const TensorVector& w) const;

  /// g^power applied to w.
  TensorVector cycle_apply(const TensorVector& w, int power = 1) const;
  /// (1/k) sum_m eta^{-rm} g^m w: the projection onto the eta^r eigenspace.
  TensorVector eigencomponent(const TensorVector& w, int r) const;

  /// u_n v for the tensor vertex operator Y(u1 (x) ... (x) uk, z) =
  /// Y(u1, z) (x) ... (x) Y(uk, z).
  TensorVector mode_action(const TensorVector& u, long n, const TensorVector& v) const;
  /// Res_z Y(u,z)v s(z).
  TensorVector residue_pairing(const TensorVector& u, const TensorVector& v,
                               const Series<Scalar>& s) const;

  /// Twisted products. u is split into components homogeneous in weight and
  /// in g-eigenvalue; a component of weight w in eigenspace r contributes
  ///   r = 0:  Res_z Y(c,z)v (1+z)^w / z^2        (circ_g)
  ///           Res_z Y(c,z)v (1+z)^w / z          (star_g)
  ///   r != 0: Res_z Y(c,z)v (1+z)^{w-1+r/k} / z  (circ_g), 0 (star_g).
  TensorVector circ_g(const TensorVector& u, const TensorVector& v) const;
  TensorVector star_g(const TensorVector& u, const TensorVector& v) const;

 private:
  TensorVector monomial_mode(const TensorMonomial& u, long n, const TensorMonomial& v) const;

  const Model* model_;
  int k_;
};

}  // namespace twistzhu
