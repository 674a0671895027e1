#pragma once

#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <utility>

namespace twistzhu {

/// Finite formal sum of basis keys with exact coefficients. Zero coefficients
/// are never stored, so two combinations are equal iff their maps are equal.
template <class Key, class Coeff>
class LinearCombination {
 public:
  using key_type = Key;
  using coeff_type = Coeff;
  using map_type = std::map<Key, Coeff>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(const Key& key, Coeff coeff = Coeff(1)) { add(key, std::move(coeff)); }

  void add(const Key& key, const Coeff& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// this += scale * other
  template <class S>
  void add_scaled(const LinearCombination& other, const S& scale) {
    if (scale.is_zero()) return;
    for (const auto& [key, coeff] : other.terms_) add(key, coeff * scale);
  }

  Coeff coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [key, coeff] : o.terms_) add(key, coeff);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [key, coeff] : o.terms_) add(key, -coeff);
    return *this;
  }
  template <class S>
  LinearCombination& operator*=(const S& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = it->second * s;
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  LinearCombination operator-() const {
    LinearCombination out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, -coeff);
    return out;
  }
  template <class S>
    requires(!std::is_same_v<S, LinearCombination>)
  friend LinearCombination operator*(LinearCombination a, const S& s) { return a *= s; }
  template <class S>
    requires(!std::is_same_v<S, LinearCombination>)
  friend LinearCombination operator*(const S& s, LinearCombination a) { return a *= s; }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

  /// Keeps only the terms whose key satisfies `pred`.
  template <class Pred>
  LinearCombination filtered(Pred pred) const {
    LinearCombination out;
    for (const auto& [key, coeff] : terms_)
      if (pred(key)) out.terms_.emplace(key, coeff);
    return out;
  }

  /// Applies a coefficient-type conversion termwise.
  template <class To, class Fn>
  LinearCombination<Key, To> converted(Fn fn) const {
    LinearCombination<Key, To> out;
    for (const auto& [key, coeff] : terms_) out.add(key, fn(coeff));
    return out;
  }

 private:
  map_type terms_;
};

}  // namespace twistzhu
