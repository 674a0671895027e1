#include "twistzhu/delta.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twistzhu {

const Scalar& AjTable::at(int j) const {
  if (j < 1 || j > order)
    throw std::out_of_range("a_" + std::to_string(j) + " requested from a table of order " +
                            std::to_string(order));
  return a[static_cast<size_t>(j - 1)];
}

AjTable AjTable::corrupted(int j, const Scalar& delta) const {
  AjTable out = *this;
  if (j < 1 || j > order) throw std::out_of_range("corrupted: index outside the table");
  out.a[static_cast<size_t>(j - 1)] += delta;
  return out;
}

namespace {

// D p = sum_j a_j x^{j+1} p'(x), truncated at x^degree.
std::vector<Scalar> apply_derivation(const std::vector<Scalar>& a, const std::vector<Scalar>& p,
                                     int degree) {
  std::vector<Scalar> out(static_cast<size_t>(degree) + 1);
  for (int d = 1; d <= degree; ++d) {
    const Scalar& pd = p[static_cast<size_t>(d)];
    if (pd.is_zero()) continue;
    for (int j = 1; j <= static_cast<int>(a.size()) && d + j <= degree; ++j)
      out[static_cast<size_t>(d + j)] += a[static_cast<size_t>(j - 1)] * pd * Scalar(d);
  }
  return out;
}

std::vector<Scalar> exp_minus_d_of_x(const std::vector<Scalar>& a, int degree) {
  std::vector<Scalar> term(static_cast<size_t>(degree) + 1);
  if (degree >= 1) term[1] = Scalar(1);
  std::vector<Scalar> sum = term;
  for (int n = 1; n <= degree; ++n) {
    term = apply_derivation(a, term, degree);
    const Scalar scale = Scalar(-1) / Scalar(n);
    bool zero = true;
    for (auto& c : term) {
      c *= scale;
      zero = zero && c.is_zero();
    }
    if (zero) break;
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += term[i];
  }
  return sum;
}

}  // namespace

std::vector<Scalar> aj_target(int k, int degree) {
  std::vector<Scalar> out(static_cast<size_t>(std::max(degree, 0)) + 1);
  for (int d = 1; d <= degree; ++d)
    out[static_cast<size_t>(d)] = rational_binomial(Scalar(k), d) / Scalar(k);
  return out;
}

std::vector<Scalar> recompose(const AjTable& table, int degree) {
  return exp_minus_d_of_x(table.a, degree);
}

AjTable solve_aj(int k, int order) {
  if (k < 1) throw std::invalid_argument("solve_aj: k must be positive");
  if (order < 1) throw std::invalid_argument("solve_aj: order must be positive");
  AjTable table{k, order, std::vector<Scalar>(static_cast<size_t>(order))};
  const auto target = aj_target(k, order + 1);
  // The x^{m+1} coefficient of exp(-D)x is -a_m plus terms in a_1..a_{m-1}.
  for (int m = 1; m <= order; ++m) {
    const auto current = exp_minus_d_of_x(table.a, m + 1);
    table.a[static_cast<size_t>(m - 1)] = current[static_cast<size_t>(m + 1)] -
                                          target[static_cast<size_t>(m + 1)];
  }
  if (recompose(table, order + 1) != target)
    throw std::logic_error("solve_aj: solution for k = " + std::to_string(k) +
                           " fails recomposition");
  return table;
}

namespace {

void require_order(const AjTable& table, const Vector& u, const char* who) {
  if (max_weight(u) > table.order)
    throw std::invalid_argument(std::string(who) + ": table of order " +
                                std::to_string(table.order) + " is too short for weight " +
                                std::to_string(max_weight(u)));
}

// sign * sum_j a_j L(j) x
Vector raising_sum(const Model& model, const Vector& x, const AjTable& table, const Scalar& sign) {
  Vector out;
  const int top = std::min(table.order, max_weight(x));
  for (int j = 1; j <= top; ++j) {
    const Scalar& aj = table.a[static_cast<size_t>(j - 1)];
    if (aj.is_zero()) continue;
    out.add_scaled(model.l_action(j, x), aj * sign);
  }
  return out;
}

Vector exp_raising(const Model& model, const Vector& x, const AjTable& table, const Scalar& sign) {
  Vector sum = x;
  Vector term = x;
  for (int n = 1; !term.is_zero(); ++n) {
    term = raising_sum(model, term, table, sign) * (Scalar(1) / Scalar(n));
    sum += term;
  }
  return sum;
}

Vector scale_by_weight(const Vector& u, const Scalar& base) {
  Vector out;
  for (const auto& [m, c] : u) out.add(m, c * base.pow(m.weight()));
  return out;
}

}  // namespace

Vector delta1(const Model& model, const Vector& u, const AjTable& table) {
  require_order(table, u, "delta1");
  return exp_raising(model, scale_by_weight(u, Scalar(1, table.k)), table, Scalar(1));
}

Vector delta1_inv(const Model& model, const Vector& u, const AjTable& table) {
  require_order(table, u, "delta1_inv");
  return scale_by_weight(exp_raising(model, u, table, Scalar(-1)), Scalar(table.k));
}

WeightedVector exp_weighted_l(const Model& model, const Vector& u, const AjTable& table) {
  require_order(table, u, "exp_weighted_l");
  std::map<int, Vector> total{{0, u}};
  std::map<int, Vector> term{{0, u}};
  for (int n = 1; !term.empty(); ++n) {
    std::map<int, Vector> next;
    for (const auto& [drop, x] : term) {
      const int top = std::min(table.order, max_weight(x));
      for (int j = 1; j <= top; ++j) {
        const Scalar& aj = table.a[static_cast<size_t>(j - 1)];
        if (aj.is_zero()) continue;
        Vector y = model.l_action(j, x);
        if (y.is_zero()) continue;
        next[drop + j].add_scaled(y, aj / Scalar(n));
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [drop, x] : next) total[drop] += x;
    term = std::move(next);
  }
  WeightedVector out;
  for (auto& [drop, x] : total)
    if (!x.is_zero()) out.parts.emplace_back(std::move(x), drop);
  return out;
}

Series<Vector> delta_at_one_plus_x(const Model& model, const Vector& u, const AjTable& table,
                                   int order) {
  Series<Vector> out(0, order);
  const Scalar inv_k(1, table.k);
  for (const auto& [w, c] : weight_components(u)) {
    const Scalar k_pow = inv_k.pow(w);
    for (const auto& [vec, drop] : exp_weighted_l(model, c, table).parts) {
      const Scalar gamma = (inv_k - Scalar(1)) * Scalar(w) - Scalar(drop) * inv_k;
      const auto b = binomial_series(gamma, order);
      for (const auto& [e, be] : b.terms()) out.add(e, vec * (be * k_pow));
    }
  }
  return out;
}

ConjugationCheck conjugation_check_at_one(const Model& model, const Vector& u, const Vector& v,
                                          const AjTable& table, int order) {
  ConjugationCheck out;
  out.hi = order;

  // Delta(1) Y(u,x) Delta(1)^{-1} v
  const Vector v_inv = delta1_inv(model, v, table);
  const auto y = model.vertex_series(u, v_inv, order);
  Series<Vector> lhs(y.lo(), order);
  for (const auto& [e, c] : y.terms()) lhs.add(e, delta1(model, c, table));

  // Y(Delta(1+x)u, (1+x)^{1/k} - 1) v: for each part vec_p (1+x)^{-m_p/k} of
  // the exponential, k^{-w} (1+x)^{(1/k-1)w - m_p/k} Y(vec_p, f(x)) v.
  const Scalar inv_k(1, table.k);
  Series<Vector> rhs(lhs.lo(), order);
  for (const auto& [w, c] : weight_components(u)) {
    const Scalar k_pow = inv_k.pow(w);
    for (const auto& [vec, drop] : exp_weighted_l(model, c, table).parts) {
      const auto g = model.vertex_series(vec, v, order);
      const int lo = g.lo();
      Series<Scalar> f(1, order - lo + 1);
      const auto root = binomial_series(inv_k, order - lo + 1);
      for (const auto& [e, b] : root.terms())
        if (e >= 1) f.add(e, b);
      const Scalar gamma = (inv_k - Scalar(1)) * Scalar(w) - Scalar(drop) * inv_k;
      auto part = compose(g, f) * binomial_series(gamma, order - lo);
      rhs += part.scaled(k_pow);
    }
  }
  if (rhs.hi() < order || lhs.hi() < order)
    throw TruncationError("conjugation check: expansions do not reach x^" + std::to_string(order));

  out.lo = std::min(lhs.lo(), rhs.lo());
  for (int e = out.lo; e <= order; ++e)
    if (!(lhs.coefficient(e) == rhs.coefficient(e))) out.mismatches.push_back(e);
  out.pass = out.mismatches.empty();
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  return out;
}

}  // namespace twistzhu
