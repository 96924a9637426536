#pragma once

#include <map>
#include <string>
#include <vector>

#include "wreath/partition.hpp"
#include "wreath/rational.hpp"

namespace wreath {

enum class SymBasis { Schur, PowerSum };

/// Truncated symmetric function in several labelled variable sets.
///
/// A key assigns a partition to each label; in the Schur basis it stands for
/// the product of the s_lambda(x_label), in the power-sum basis for the product
/// of the p_lambda(x_label). Keys of total size above the truncation are
/// dropped on insertion.
class SymSeries {
 public:
  SymSeries(std::vector<std::string> labels, SymBasis basis, int truncation);

  const std::vector<std::string>& labels() const { return labels_; }
  int nlabels() const { return static_cast<int>(labels_.size()); }
  SymBasis basis() const { return basis_; }
  int truncation() const { return truncation_; }
  const std::map<Multipartition, Rational>& terms() const { return terms_; }

  Rational coefficient(const Multipartition& key) const;
  void add(const Multipartition& key, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;
  // Degree-homogeneous part.
  SymSeries part_of_degree(int d) const;
  SymSeries with_truncation(int d) const;

  SymSeries& operator+=(const SymSeries& other);
  SymSeries& operator-=(const SymSeries& other);
  SymSeries& operator*=(const Rational& c);
  bool operator==(const SymSeries& other) const;

 private:
  std::vector<std::string> labels_;
  SymBasis basis_;
  int truncation_;
  std::map<Multipartition, Rational> terms_;
};

SymSeries operator+(SymSeries a, const SymSeries& b);
SymSeries operator-(SymSeries a, const SymSeries& b);
SymSeries operator*(SymSeries a, const Rational& c);
SymSeries operator*(const SymSeries& a, const SymSeries& b);

// Single-term constructors; elementary/complete/power return power-sum form.
SymSeries sym_one(const std::vector<std::string>& labels, SymBasis basis, int truncation);
SymSeries schur_term(const std::vector<std::string>& labels, int truncation, const Multipartition& key);
SymSeries power_term(const std::vector<std::string>& labels, int truncation, const Multipartition& key);
SymSeries elementary(const std::vector<std::string>& labels, int truncation, int label, int n);
SymSeries complete(const std::vector<std::string>& labels, int truncation, int label, int n);
SymSeries power_sum(const std::vector<std::string>& labels, int truncation, int label, int n);

// s_lambda = sum_mu chi^lambda_mu / z_mu p_mu, nonzero entries only.
const std::vector<std::pair<Partition, Rational>>& schur_in_powers(const Partition& lam);
// p_mu = sum_lambda chi^lambda_mu s_lambda, nonzero entries only.
const std::vector<std::pair<Partition, Integer>>& power_in_schurs(const Partition& mu);

SymSeries schur_to_power(const SymSeries& s);
SymSeries power_to_schur(const SymSeries& s);
SymSeries to_basis(const SymSeries& s, SymBasis basis);

SymSeries multiply(const SymSeries& a, const SymSeries& b);
// exp(y) and log(1 + y) for y without constant term; power-sum in and out.
SymSeries sym_exp(const SymSeries& y);
SymSeries sym_log(const SymSeries& x);

Integer lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lam);
Integer kronecker_coefficient(const Partition& mu, const Partition& nu, const Partition& lam);

/// One summand of a substitution: multiplicity * p_l(product of output sets).
/// An empty monomial stands for the one-point set {1}, so p_l maps to the
/// multiplicity itself.
struct PlanTarget {
  std::vector<int> monomial;
  Integer multiplicity;
};
// Indexed by input label.
using SubstitutionPlan = std::vector<std::vector<PlanTarget>>;

SymSeries substitute_variable_sets(const SymSeries& f, const SubstitutionPlan& plan,
                                   const std::vector<std::string>& out_labels, int out_truncation);

SymSeries omega(const SymSeries& f, int label);

// Sets the variables of `label` to (t^r, 0, 0, ...). Result maps the power of t
// to a series in the remaining labels (same label list, `label` unused).
std::map<int, SymSeries> evaluate_geometric(const SymSeries& f, int label, int r);

Rational hall_pairing(const SymSeries& a, const SymSeries& b);

// exp(sum_l p_l(x) p_l(y) / l) over labels {x, y}, truncated at total degree D.
SymSeries cauchy_kernel(int truncation);

std::string to_string(const SymSeries& s);

}  // namespace wreath
