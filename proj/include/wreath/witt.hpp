#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wreath/base_ring.hpp"
#include "wreath/errors.hpp"
#include "wreath/groth_ring.hpp"
#include "wreath/partition.hpp"
#include "wreath/rational.hpp"

namespace wreath {

/// e_index of variable set `label` on side x (0), y (1) or z (2).
struct LawSymbol {
  int side = 0;
  int label = 0;
  int index = 1;
  auto operator<=>(const LawSymbol&) const = default;
};

// Sorted multiset of symbols.
using Monomial = std::vector<LawSymbol>;
int monomial_weight(const Monomial& m);

// Weight (sum of indices) first, then lexicographic.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Integer polynomial in law symbols.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT: constants convert implicitly, as for Integer
  explicit Polynomial(const Integer& c);
  static Polynomial symbol(const LawSymbol& s);

  const std::map<Monomial, Integer, MonomialOrder>& terms() const { return terms_; }
  Integer coefficient(const Monomial& m) const;
  void add(const Monomial& m, const Integer& c);
  bool is_zero() const { return terms_.empty(); }
  Polynomial truncated(int weight) const;
  Polynomial part_of_weight(int weight) const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  std::map<Monomial, Integer, MonomialOrder> terms_;
};

// Products truncated at the given weight.
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int weight);
// Replace every symbol by a polynomial, truncating at the weight.
Polynomial substitute(const Polynomial& p, const std::function<Polynomial(const LawSymbol&)>& image, int weight);
std::string to_string(const Polynomial& p, const std::vector<std::string>& labels);

/// Truncated big Witt vector (a_1, ..., a_n): the images of e_1..e_n.
template <class A>
struct WittVector {
  std::vector<A> a;
  int length() const { return static_cast<int>(a.size()); }
  bool operator==(const WittVector&) const = default;
};

namespace detail {
template <class A>
A component(const WittVector<A>& x, int i) {
  return i == 0 ? A(1) : x.a[i - 1];
}
template <class A>
void require_same_length(const WittVector<A>& x, const WittVector<A>& y) {
  if (x.length() != y.length()) throw DomainError("Witt vectors have different lengths");
}
// s_lam evaluated at e_i -> a_i.
template <class A>
A schur_at(const Partition& lam, const WittVector<A>& x) {
  A total(0);
  for (const auto& [idx, c] : schur_in_elementaries(lam)) {
    A term(1);
    for (int r : idx.parts()) term = term * x.a[r - 1];
    total = total + term * A(c);
  }
  return total;
}
}  // namespace detail

// E_{a+b}(t) = E_a(t) E_b(t)
template <class A>
WittVector<A> witt_add(const WittVector<A>& x, const WittVector<A>& y) {
  detail::require_same_length(x, y);
  WittVector<A> out;
  for (int n = 1; n <= x.length(); ++n) {
    A c(0);
    for (int i = 0; i <= n; ++i) c = c + detail::component(x, i) * detail::component(y, n - i);
    out.a.push_back(c);
  }
  return out;
}

// Component n is sum_{lam |- n} s_lam(a) s_{lam'}(b).
template <class A>
WittVector<A> witt_mul(const WittVector<A>& x, const WittVector<A>& y) {
  detail::require_same_length(x, y);
  WittVector<A> out;
  for (int n = 1; n <= x.length(); ++n) {
    A c(0);
    for (const auto& lam : partitions_of(n)) c = c + detail::schur_at(lam, x) * detail::schur_at(conjugate(lam), y);
    out.a.push_back(c);
  }
  return out;
}

// Images of p_1..p_n by Newton's identities.
template <class A>
std::vector<A> ghost_components(const WittVector<A>& x) {
  std::vector<A> p;
  for (int n = 1; n <= x.length(); ++n) {
    A c = x.a[n - 1] * A(n % 2 ? n : -n);
    for (int i = 1; i < n; ++i) c = c + x.a[i - 1] * p[n - i - 1] * A(i % 2 ? 1 : -1);
    p.push_back(c);
  }
  return p;
}

template <class A>
A ghost(const WittVector<A>& x, int n) {
  if (n < 1 || n > x.length()) throw DomainError("ghost component out of range");
  return ghost_components(x)[n - 1];
}

WittVector<Integer> parse_witt(const std::string& text);
std::string to_string(const WittVector<Integer>& x);

/// F_{i,U} = e_i(x_U, y_U, (+)_{V,W} (x_V y_W)^{N_{VW}^U}) in the e_j(x_V), e_k(y_W).
class GroupLaw {
 public:
  GroupLaw(std::vector<std::string> labels, int degree) : labels_(std::move(labels)), degree_(degree) {}

  const std::vector<std::string>& labels() const { return labels_; }
  int degree() const { return degree_; }
  const Polynomial& component(int i, int u) const;
  void set_component(int i, int u, Polynomial p) { components_[{i, u}] = std::move(p); }
  const std::map<std::pair<int, int>, Polynomial>& components() const { return components_; }

 private:
  std::vector<std::string> labels_;
  int degree_;
  std::map<std::pair<int, int>, Polynomial> components_;
};

GroupLaw formal_group_law(const BaseRing& ring, int degree);
// p_n as a polynomial in e_1..e_n of one variable set.
Polynomial power_sum_in_elementaries(int n, int side, int label);

// F(F(a, b), c) and F(a, F(b, c)) for component (i, U), sides x, y, z.
Polynomial law_left_nested(const GroupLaw& law, int i, int u);
Polynomial law_right_nested(const GroupLaw& law, int i, int u);
std::string dump(const GroupLaw& law);

}  // namespace wreath
