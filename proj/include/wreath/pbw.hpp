#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "wreath/base_ring.hpp"
#include "wreath/graded_series.hpp"
#include "wreath/groth_ring.hpp"
#include "wreath/partition.hpp"
#include "wreath/rational.hpp"

namespace wreath {

class PbwAlgebra;

// T_l(U) as (level l, basis index U).
using PbwLetter = std::pair<int, int>;
using PbwWord = std::vector<PbwLetter>;
using PbwTerms = std::map<PbwWord, Rational>;

int word_degree(const PbwWord& w);

/// Element of the rational algebra generated by the T_l(U), stored in the
/// normal-ordered basis (letters sorted by level, then basis index).
class PbwElement {
 public:
  explicit PbwElement(std::shared_ptr<const PbwAlgebra> alg) : alg_(std::move(alg)) {}
  PbwElement(std::shared_ptr<const PbwAlgebra> alg, PbwTerms terms);

  const PbwAlgebra& algebra() const { return *alg_; }
  const std::shared_ptr<const PbwAlgebra>& algebra_ptr() const { return alg_; }
  const PbwTerms& terms() const { return terms_; }

  Rational coefficient(const PbwWord& w) const;
  // The word must already be normal ordered.
  void add(const PbwWord& w, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  // Largest filtration degree (sum of levels), -1 for zero.
  int degree() const;
  PbwElement part_of_degree(int d) const;
  PbwElement truncated(int d) const;

  PbwElement& operator+=(const PbwElement& o);
  PbwElement& operator-=(const PbwElement& o);
  bool operator==(const PbwElement& o) const { return terms_ == o.terms_; }

 private:
  std::shared_ptr<const PbwAlgebra> alg_;
  PbwTerms terms_;
};

PbwElement operator+(PbwElement a, const PbwElement& b);
PbwElement operator-(PbwElement a, const PbwElement& b);
PbwElement operator*(const PbwElement& a, const Rational& c);
PbwElement operator*(const PbwElement& a, const PbwElement& b);

/// Element of Q (x) R, used as the coefficient ring before T_l is applied.
class QElement {
 public:
  explicit QElement(const BaseRing* ring) : ring_(ring) {}
  QElement(const BaseRing* ring, const RingElement& x);

  const std::map<int, Rational>& coeffs() const { return c_; }
  void add(int index, const Rational& v);
  bool is_zero() const { return c_.empty(); }
  bool operator==(const QElement& o) const { return c_ == o.c_; }

  friend QElement operator+(QElement a, const QElement& b);
  friend QElement operator*(const QElement& a, const Rational& q);
  friend QElement operator*(const QElement& a, const QElement& b);

 private:
  const BaseRing* ring_;
  std::map<int, Rational> c_;
};

// Power-sum keyed series with PBW coefficients.
using MixedSeries = GradedSeries<Multipartition, PbwElement>;
// Series in formal scalar variables with PBW coefficients.
using PbwSeries = GradedSeries<Exponents, PbwElement>;

class PbwAlgebra : public std::enable_shared_from_this<PbwAlgebra> {
 public:
  static std::shared_ptr<const PbwAlgebra> create(std::shared_ptr<const GrothRing> groth);

  const GrothRing& groth() const { return *groth_; }
  const std::shared_ptr<const GrothRing>& groth_ptr() const { return groth_; }
  const BaseRing& base() const { return groth_->base(); }

  PbwElement zero() const;
  PbwElement one() const;
  PbwElement generator(int l, int u) const;
  // T_l extended linearly.
  PbwElement t(int l, const RingElement& w) const;
  PbwElement t(int l, const QElement& q) const;
  QElement qone() const;

  // Normal form of an arbitrary word. Rewrites the leftmost descent first and
  // memoizes; the alternative rewrites the rightmost descent and does not.
  PbwElement normal_order(const PbwWord& w) const;
  PbwElement normal_order_alternative(const PbwWord& w) const;
  PbwElement multiply(const PbwElement& a, const PbwElement& b) const;

  // Theta_l(x) = exp(T_l(log x)).
  template <class Key>
  GradedSeries<Key, PbwElement> theta(int l, const GradedSeries<Key, QElement>& x) const {
    auto lg = x.log();
    auto mapped = lg.template map_coefficients<PbwElement>(one(), [&](const QElement& q) { return t(l, q); });
    return mapped.exp();
  }

  // prod_{l <= degree} Theta_l(1 + sum_U p_l^(U) U).
  MixedSeries z_generating_function(int degree) const;
  PbwElement z_element(const Multipartition& lam) const;
  // Rational coefficients; peels off top filtration degrees.
  GrothElement to_z_basis(const PbwElement& x) const;
  GrothElement oracle_multiply(const Multipartition& mu, const Multipartition& nu) const;

  // E_w(t) = prod_l Theta_l(1 - (-t)^l w).
  PbwSeries e_series(const RingElement& w, int degree) const;
  // sum_i T_i(w) t^i, checked against the Moebius/log definition.
  PbwSeries f_series(const RingElement& w, int degree) const;
  PbwSeries f_series_moebius(const RingElement& w, int degree) const;

  // Psi_m on generators, extended multiplicatively. With degree < 0 nothing is
  // dropped; otherwise words above the degree are discarded after each step,
  // which is only an algebra map when the T's commute.
  PbwElement adams(int m, const PbwElement& x, int degree = -1) const;
  GrothElement adams_z(int m, const GrothElement& x) const;
  // t^n coefficient of prod_l Theta_l(sum_r (-1)^{r(l-1)} t^{rl} lambda^r(u)).
  PbwElement lambda_on_e1_pbw(int n, const RingElement& u) const;
  GrothElement lambda_on_e1(int n, const RingElement& u) const;

  std::string format(const PbwElement& x) const;
  std::string format_word(const PbwWord& w) const;

 private:
  explicit PbwAlgebra(std::shared_ptr<const GrothRing> groth) : groth_(std::move(groth)) {}

  PbwTerms normal_terms(const PbwWord& w) const;

  std::shared_ptr<const GrothRing> groth_;
  mutable std::mutex order_mutex_;
  mutable std::map<PbwWord, PbwTerms> order_cache_;
  mutable std::mutex z_mutex_;
  mutable int gf_degree_ = -1;
  mutable std::map<Multipartition, PbwTerms> gf_cache_;
  mutable std::map<Multipartition, PbwTerms> z_cache_;
};

}  // namespace wreath
