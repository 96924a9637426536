#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wreath/errors.hpp"
#include "wreath/partition.hpp"
#include "wreath/rational.hpp"

namespace wreath {

// Exponent vector of a monomial in formal scalar variables (t, or u and v),
// trailing zeros stripped so that the constant monomial is the empty vector.
using Exponents = std::vector<int>;

inline Exponents exponents(std::vector<int> e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

template <class Key>
struct SeriesKeyTraits;

template <>
struct SeriesKeyTraits<Exponents> {
  static int degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  static Exponents merge(const Exponents& a, const Exponents& b) {
    Exponents out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
  }
};

// Power-sum keys: p_a * p_b = p_{a u b}.
template <>
struct SeriesKeyTraits<Multipartition> {
  static int degree(const Multipartition& m) { return m.total_size(); }
  static Multipartition merge(const Multipartition& a, const Multipartition& b) { return wreath::merge(a, b); }
};

/// Truncated power series with keys graded by SeriesKeyTraits and
/// coefficients in a possibly noncommutative algebra. Coefficients need +, -,
/// *, scaling by Rational and is_zero(); `one` supplies the algebra context.
template <class Key, class Coeff>
class GradedSeries {
 public:
  using Traits = SeriesKeyTraits<Key>;

  GradedSeries(Coeff one, int truncation) : one_(std::move(one)), truncation_(truncation) {}

  int truncation() const { return truncation_; }
  const Coeff& one() const { return one_; }
  Coeff zero() const { return one_ * Rational(0); }
  const std::map<Key, Coeff>& terms() const { return terms_; }

  Coeff coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? zero() : it->second;
  }

  void add(const Key& k, const Coeff& c) {
    if (Traits::degree(k) > truncation_ || c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  bool is_zero() const { return terms_.empty(); }

  GradedSeries& operator+=(const GradedSeries& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  GradedSeries& operator-=(const GradedSeries& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add(k, c * Rational(-1));
    return *this;
  }
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(const GradedSeries& a, const Rational& q) {
    GradedSeries out(a.one_, a.truncation_);
    for (const auto& [k, c] : a.terms_) out.add(k, c * q);
    return out;
  }
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    a.check(b);
    GradedSeries out(a.one_, a.truncation_);
    for (const auto& [ka, ca] : a.terms_) {
      const int da = Traits::degree(ka);
      for (const auto& [kb, cb] : b.terms_)
        if (da + Traits::degree(kb) <= a.truncation_) out.add(Traits::merge(ka, kb), ca * cb);
    }
    return out;
  }
  bool operator==(const GradedSeries& o) const { return truncation_ == o.truncation_ && terms_ == o.terms_; }

  static GradedSeries constant(const Coeff& one, int truncation) {
    GradedSeries s(one, truncation);
    s.add(Key(), one);
    return s;
  }

  // x = 1 + y  ->  sum_k (-y)^k
  GradedSeries inverse() const {
    GradedSeries y = without_unit_constant("inverse");
    GradedSeries result = constant(one_, truncation_);
    GradedSeries power = result;
    for (int k = 1; k <= truncation_; ++k) {
      power = power * y * Rational(-1);
      if (power.is_zero()) break;
      result += power;
    }
    return result;
  }

  // log(1 + y) = sum_k (-1)^{k+1} y^k / k
  GradedSeries log() const {
    GradedSeries y = without_unit_constant("log");
    GradedSeries result(one_, truncation_);
    GradedSeries power = constant(one_, truncation_);
    for (int k = 1; k <= truncation_; ++k) {
      power = power * y;
      if (power.is_zero()) break;
      result += power * frac(k % 2 ? 1 : -1, k);
    }
    return result;
  }

  GradedSeries exp() const {
    if (!coefficient(Key()).is_zero()) throw DomainError("exp: argument has a constant term");
    GradedSeries result = constant(one_, truncation_);
    GradedSeries power = result;
    for (int k = 1; k <= truncation_; ++k) {
      power = power * *this * frac(1, k);
      if (power.is_zero()) break;
      result += power;
    }
    return result;
  }

  template <class NewCoeff, class F>
  GradedSeries<Key, NewCoeff> map_coefficients(const NewCoeff& new_one, F f) const {
    GradedSeries<Key, NewCoeff> out(new_one, truncation_);
    for (const auto& [k, c] : terms_) out.add(k, f(c));
    return out;
  }

 private:
  void check(const GradedSeries& o) const {
    if (truncation_ != o.truncation_) throw DomainError("series truncation degrees differ");
  }
  GradedSeries without_unit_constant(const char* what) const {
    if (!(coefficient(Key()) == one_))
      throw DomainError(std::string(what) + ": constant term must be the identity");
    GradedSeries y = *this;
    y.terms_.erase(Key());
    return y;
  }

  Coeff one_;
  int truncation_;
  std::map<Key, Coeff> terms_;
};

}  // namespace wreath
