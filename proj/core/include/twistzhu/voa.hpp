#pragma once

#include <compare>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistzhu/exactnum.hpp"
#include "twistzhu/linear_combination.hpp"
#include "twistzhu/series.hpp"

namespace twistzhu {

/// Basis monomial a(-n1) a(-n2) ... a(-nr)|0> of the rank-one Fock space,
/// stored with n1 >= n2 >= ... >= nr >= 1. The empty monomial is the vacuum.
class FockMonomial {
 public:
  FockMonomial() = default;
  /// Parts may be given in any order; each must be positive.
  explicit FockMonomial(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  bool is_vacuum() const { return parts_.empty(); }
  int multiplicity(int n) const;

  FockMonomial with_part(int n) const;
  /// Removes one copy of n; n must be present.
  FockMonomial without_part(int n) const;

  std::string to_string() const;

  friend bool operator==(const FockMonomial&, const FockMonomial&) = default;
  /// Orders by weight first, then by parts.
  friend std::strong_ordering operator<=>(const FockMonomial& a, const FockMonomial& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

template <class F>
using BasicVector = LinearCombination<FockMonomial, F>;
using Vector = BasicVector<Scalar>;

Vector vacuum_vector();
Vector fock_vector(std::vector<int> parts, const Scalar& coeff = Scalar(1));

/// Homogeneous components keyed by weight.
template <class F>
std::map<int, BasicVector<F>> weight_components(const BasicVector<F>& v) {
  std::map<int, BasicVector<F>> out;
  for (const auto& [m, c] : v) out[m.weight()].add(m, c);
  return out;
}

/// The weight of a nonzero homogeneous vector; nullopt otherwise.
template <class F>
std::optional<int> homogeneous_weight(const BasicVector<F>& v) {
  if (v.is_zero()) return std::nullopt;
  int w = v.begin()->first.weight();
  for (const auto& [m, c] : v)
    if (m.weight() != w) return std::nullopt;
  return w;
}

/// Largest weight occurring in v, or -1 for the zero vector.
template <class F>
int max_weight(const BasicVector<F>& v) {
  return v.is_zero() ? -1 : std::prev(v.end())->first.weight();
}

/// All monomials of the given weight (partitions of `weight`).
std::vector<FockMonomial> fock_basis(int weight);
/// All monomials of weight 0..max_weight, by increasing weight.
std::vector<FockMonomial> fock_basis_up_to(int max_weight);

/// Canonical rendering, highest weight first, e.g. "2*a(-1)^2|0> - 1/8*|0>".
std::string to_string(const Vector& v);

/// The Heisenberg generator a(m): creation for m < 0, contraction for m > 0
/// with [a(m), a(n)] = m delta_{m+n,0}, and a(0) = 0 on the vacuum module.
Vector generator_mode(long m, const Vector& v);

/// A vertex operator algebra realized on the Fock basis. Implementations
/// supply the mode action on basis monomials and a conformal vector; the
/// shared helpers build everything else (L(n), Y(u,z)v, residue pairings).
///
/// Every model must satisfy the mode-calculus property suite in tests/.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string name() const = 0;
  virtual Vector conformal_vector() const = 0;
  virtual Scalar central_charge() const = 0;
  /// u_n v for basis monomials.
  virtual Vector mode(const FockMonomial& u, long n, const FockMonomial& v) const = 0;
  virtual int weight(const FockMonomial& m) const { return m.weight(); }

  Vector vacuum() const { return vacuum_vector(); }

  /// u_n v, bilinear in u and v.
  Vector mode_action(const Vector& u, long n, const Vector& v) const;

  /// L(n) v = omega_{n+1} v.
  Vector l_action(long n, const Vector& v) const;

  /// Y(u,z)v = sum_n u_n v z^{-n-1}, exact on [-(wt u + wt v), hi].
  Series<Vector> vertex_series(const Vector& u, const Vector& v, int hi) const;

  /// Res_z Y(u,z)v s(z) = sum_n s_n u_n v. Throws TruncationError when s is
  /// not known far enough to cover every nonzero mode.
  Vector residue_pairing(const Vector& u, const Vector& v, const Series<Scalar>& s) const;
};

/// The rank-one Heisenberg vertex operator algebra with conformal vector
/// omega = 1/2 a(-1)^2|0> + shift * a(-2)|0>, central charge 1 - 12 shift^2.
/// shift = 0 is the free boson with c = 1. The grading is the same for every
/// shift; only L(n) for n != 0, -1 changes.
class HeisenbergModel final : public Model {
 public:
  explicit HeisenbergModel(Scalar shift = Scalar(0));

  std::string name() const override;
  Vector conformal_vector() const override { return omega_; }
  Scalar central_charge() const override;
  Vector mode(const FockMonomial& u, long n, const FockMonomial& v) const override;

  const Scalar& shift() const { return shift_; }

 private:
  Scalar shift_;
  Vector omega_;
};

/// The c = 1 free boson.
const HeisenbergModel& heisenberg();

/// (1+z)^gamma z^{-p}, exact on [-p, hi].
Series<Scalar> shifted_binomial(const Scalar& gamma, int p, int hi);

}  // namespace twistzhu
