#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twistzhu/exactnum.hpp"
#include "twistzhu/series.hpp"
#include "twistzhu/voa.hpp"

namespace twistzhu {

/// Coefficients a_1..a_N of the operator
///   Delta_k(z) = exp(sum_j a_j z^{-j/k} L(j)) k^{-L(0)} z^{(1/k - 1) L(0)}
/// fixed by exp(-sum_j a_j x^{j+1} d/dx) x = ((1+x)^k - 1) / k.
struct AjTable {
  int k = 1;
  int order = 0;
  std::vector<Scalar> a;  // a[j-1] = a_j

  /// a_j for 1 <= j <= order; throws std::out_of_range otherwise.
  const Scalar& at(int j) const;
  /// Copy with a_j replaced by a_j + delta (fault injection).
  AjTable corrupted(int j, const Scalar& delta = Scalar(1)) const;
};

/// Triangular solve order by order, validated by recompose() before
/// returning. Throws std::logic_error if validation fails.
AjTable solve_aj(int k, int order);

/// Coefficients of exp(-sum_j a_j x^{j+1} d/dx) x through x^{degree}, index = power of x.
std::vector<Scalar> recompose(const AjTable& table, int degree);

/// Coefficients of ((1+x)^k - 1) / k through x^{degree}.
std::vector<Scalar> aj_target(int k, int degree);

/// Delta_k(1) u = exp(sum_j a_j L(j)) k^{-L(0)} u.
Vector delta1(const Model& model, const Vector& u, const AjTable& table);

/// The two-sided inverse k^{L(0)} exp(-sum_j a_j L(j)) u.
Vector delta1_inv(const Model& model, const Vector& u, const AjTable& table);

/// exp(sum_j a_j y^{-j} L(j)) u for homogeneous u, collected by total power
/// of y^{-1}: the result is sum_p vec_p y^{-m_p} with wt vec_p = wt u - m_p.
struct WeightedVector {
  std::vector<std::pair<Vector, int>> parts;  // (vec_p, m_p), increasing m_p
};
WeightedVector exp_weighted_l(const Model& model, const Vector& u, const AjTable& table);

/// Delta_k(1+x) u as a series in x, exact on [0, order].
Series<Vector> delta_at_one_plus_x(const Model& model, const Vector& u, const AjTable& table,
                                   int order);

/// Both sides of the conjugation formula at z = 1,
///   Delta_k(1) Y(u,x) Delta_k(1)^{-1} v  and  Y(Delta_k(1+x) u, (1+x)^{1/k} - 1) v,
/// compared coefficientwise on [lo, order].
struct ConjugationCheck {
  bool pass = false;
  int lo = 0;
  int hi = 0;
  Series<Vector> lhs{0, -1};
  Series<Vector> rhs{0, -1};
  /// Exponents at which the sides differ (empty on success).
  std::vector<int> mismatches;
};
ConjugationCheck conjugation_check_at_one(const Model& model, const Vector& u, const Vector& v,
                                          const AjTable& table, int order);

}  // namespace twistzhu
