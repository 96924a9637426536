#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wreath/rational.hpp"

namespace wreath {

/// Integer combination of basis elements, zero entries absent.
class RingElement {
 public:
  RingElement() = default;
  static RingElement basis(int index, const Integer& c = 1);

  const std::map<int, Integer>& coeffs() const { return coeffs_; }
  Integer coefficient(int index) const;
  void add(int index, const Integer& c);
  bool is_zero() const { return coeffs_.empty(); }
  // Index U when the element is exactly the basis element U.
  std::optional<int> as_basis_element() const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const Integer& c);
  auto operator<=>(const RingElement&) const = default;

 private:
  std::map<int, Integer> coeffs_;
};

RingElement operator+(RingElement a, const RingElement& b);
RingElement operator-(RingElement a, const RingElement& b);
RingElement operator*(RingElement a, const Integer& c);
RingElement operator-(const RingElement& a);

/// Ring free over Z with finite basis, given by its structure tensor.
class BaseRing {
 public:
  // table[v][w] = v * w. Without an explicit unit one is solved for; if none
  // exists the ring is kept but validate() reports it.
  BaseRing(std::vector<std::string> labels, std::vector<std::vector<RingElement>> table,
           std::optional<RingElement> unit = std::nullopt);

  const std::vector<std::string>& labels() const { return labels_; }
  int rank() const { return static_cast<int>(labels_.size()); }
  std::optional<int> find_label(const std::string& name) const;
  int index_of(const std::string& name) const;

  const RingElement& product(int v, int w) const { return table_[v][w]; }
  bool has_unit() const { return unit_.has_value(); }
  const RingElement& unit() const;
  // The basis index of the unit, if the unit is a basis element.
  std::optional<int> unit_index() const;
  RingElement multiply(const RingElement& a, const RingElement& b) const;
  RingElement power(const RingElement& a, int n) const;
  bool is_commutative() const;

  // Adams operations psi_d given by their images of the basis; psi_1 is the
  // identity whether or not it is listed.
  void set_adams(int d, std::vector<RingElement> images);
  bool has_adams() const { return !adams_.empty(); }
  bool has_adams(int d) const { return d == 1 || adams_.count(d) > 0; }
  const std::map<int, std::vector<RingElement>>& adams_table() const { return adams_; }
  RingElement adams_apply(int d, const RingElement& a) const;

  // table[U][r] = lambda^r(U) for r = 0..r_max.
  void set_lambda(std::vector<std::vector<RingElement>> table);
  bool has_lambda() const { return !lambda_.empty(); }
  int lambda_max() const;
  const std::vector<std::vector<RingElement>>& lambda_table() const { return lambda_; }
  RingElement lambda_apply(int n, const RingElement& a) const;

  std::string format(const RingElement& a) const;
  // Literal grammar: signed integer combinations such as "2*e - g"; a bare
  // integer n means n times the unit.
  RingElement parse(const std::string& text) const;

  std::string name;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<RingElement>> table_;
  std::optional<RingElement> unit_;
  std::map<int, std::vector<RingElement>> adams_;
  std::vector<std::vector<RingElement>> lambda_;
};

struct Violation {
  std::string kind;
  std::string message;
};

// Exhaustive check of the ring axioms and of the optional Adams/lambda data.
std::vector<Violation> validate(const BaseRing& ring);
bool is_monomial_algebra(const BaseRing& ring);

BaseRing builtin_integers();
// Cayley table over elements 0..n-1; element 0 must be the identity.
BaseRing builtin_group_algebra(const std::vector<std::string>& names,
                               const std::vector<std::vector<int>>& cayley);
BaseRing builtin_cyclic_group(int n);
BaseRing builtin_matrix_ring(int n);
// Z[x]/(x^2 - a x - b) with basis {1, x}.
BaseRing builtin_quadratic(int a, int b);
// Names: integers, cyclic:N (alias zc2), matrix:N (alias mat2), golden.
BaseRing builtin(const std::string& name);

BaseRing parse_ring_config(const std::string& json_text);
BaseRing load_ring(const std::string& source);  // path or builtin:NAME

// The same ring presented in a new basis; new_basis[i] is written in the old
// basis and the transition matrix must be invertible over Z.
BaseRing rebase(const BaseRing& ring, std::vector<std::string> labels,
                const std::vector<RingElement>& new_basis);

}  // namespace wreath
