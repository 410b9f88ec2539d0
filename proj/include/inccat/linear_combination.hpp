#pragma once

#include <map>
#include <utility>

#include "inccat/rational.hpp"

namespace inccat {

/// A finitely supported function Key -> Q. Zero coefficients are never
/// stored, so structural equality is equality of functions.
template <class Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, Rational>;

  LinearCombination() = default;
  static LinearCombination basis(Key key, Rational coefficient = 1) {
    LinearCombination out;
    out.add(std::move(key), coefficient);
    return out;
  }

  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Key& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  bool operator==(const LinearCombination&) const = default;

 private:
  Terms terms_;
};

}  // namespace inccat
