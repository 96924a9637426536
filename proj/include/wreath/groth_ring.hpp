#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "wreath/base_ring.hpp"
#include "wreath/graded_series.hpp"
#include "wreath/partition.hpp"
#include "wreath/rational.hpp"
#include "wreath/symfun.hpp"

namespace wreath {

class GrothRing;

/// Element of the limiting Grothendieck ring, in the Z basis. Scalars are
/// multiples of Z_{} (the identity).
class GrothElement {
 public:
  explicit GrothElement(std::shared_ptr<const GrothRing> ring) : ring_(std::move(ring)) {}

  const GrothRing& ring() const { return *ring_; }
  const std::shared_ptr<const GrothRing>& ring_ptr() const { return ring_; }
  const std::map<Multipartition, Rational>& terms() const { return terms_; }

  Rational coefficient(const Multipartition& key) const;
  void add(const Multipartition& key, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;
  // Largest total size among the keys, -1 for zero.
  int filtration_degree() const;
  GrothElement part_of_degree(int d) const;

  GrothElement& operator+=(const GrothElement& o);
  GrothElement& operator-=(const GrothElement& o);
  bool operator==(const GrothElement& o) const { return terms_ == o.terms_; }

 private:
  std::shared_ptr<const GrothRing> ring_;
  std::map<Multipartition, Rational> terms_;
};

GrothElement operator+(GrothElement a, const GrothElement& b);
GrothElement operator-(GrothElement a, const GrothElement& b);
GrothElement operator-(const GrothElement& a);
GrothElement operator*(const GrothElement& a, const Rational& c);
GrothElement operator*(const GrothElement& a, const GrothElement& b);

std::string to_string(const GrothElement& x);

// Power series in formal variables with Grothendieck-ring coefficients.
using GenSeries = GradedSeries<Exponents, GrothElement>;

/// Ordered product of generators e_r(U): pairs (r, U).
using GeneratorWord = std::vector<std::pair<int, int>>;
struct GeneratorTerm {
  Integer coeff;
  GeneratorWord word;
};

struct CommutationReport {
  bool holds = true;
  std::string witness;
  int commutator_degree = -1;
};

class GrothRing : public std::enable_shared_from_this<GrothRing> {
 public:
  static std::shared_ptr<const GrothRing> create(BaseRing base);

  const BaseRing& base() const { return base_; }
  const std::vector<std::string>& labels() const { return base_.labels(); }

  GrothElement zero() const;
  GrothElement one() const;
  GrothElement scalar(const Rational& c) const;
  GrothElement z(const Multipartition& key) const;

  // a_{mu,nu}^{lam} through plethystic substitution and the Hall pairing.
  Integer structure_constant(const Multipartition& mu, const Multipartition& nu, const Multipartition& lam) const;
  // Z_mu Z_nu, computed from the adjoint of the same substitution (see the
  // source for the matching expansion); cached.
  const std::map<Multipartition, Integer>& basis_product(const Multipartition& mu, const Multipartition& nu) const;
  GrothElement z_multiply(const GrothElement& a, const GrothElement& b) const;

  GrothElement e_generator(int r, const RingElement& w) const;
  GrothElement h_element(int n, const RingElement& w) const;
  // e_n(w) in the Z basis for arbitrary w, from the Moebius/log identity.
  GrothElement decompose_e(int n, const RingElement& w) const;
  // E_w(t) = sum_r e_r(w) t^r to the given degree.
  GenSeries e_series(const RingElement& w, int degree) const;

  // [e_i(U), e_j(V)] identity with h_k, plus the filtration bound.
  CommutationReport verify_commutation(int i, int j, const RingElement& u, const RingElement& v) const;
  // Coefficientwise check of E_U(u) E_{VU}(-uv)^{-1} E_V(v) = E_V(v) E_{UV}(-uv)^{-1} E_U(u)
  // for all u^i v^j with i, j <= bidegree, inverting the middle factor as a series.
  CommutationReport verify_commutation_series(const RingElement& u, const RingElement& v, int bidegree) const;

  // Z_lam built from another basis of R (new_basis[j] written in the current
  // basis), expanded in the current Z basis.
  GrothElement z_in_basis(const std::vector<RingElement>& new_basis, const Multipartition& lam) const;

  // Requires the unit to be a basis element.
  GrothElement x_basis_element(const Multipartition& lam) const;
  // Ordered products of e_i(U), i <= k, of total degree <= degree; identity first.
  std::vector<GrothElement> gk_spanning_set(int k, int degree) const;
  std::vector<GeneratorWord> gk_words(int k, int degree) const;

  GrothElement evaluate_word(const GeneratorWord& w) const;
  // Writes x as an integer combination of ordered products of e_r(U), words
  // sorted by label then decreasing r, peeling off the top filtration degree
  // each round. Throws IntegralityError for elements outside the integral form.
  std::vector<GeneratorTerm> to_generator_polynomial(const GrothElement& x) const;
  // Image of the top-degree part in the associated graded: Z_lam -> prod_U s_{lam(U)}.
  SymSeries leading_term(const GrothElement& x) const;

  std::string format_word(const GeneratorWord& w) const;

 private:
  explicit GrothRing(BaseRing base) : base_(std::move(base)) {}

  std::map<Multipartition, Integer> compute_basis_product(const Multipartition& mu, const Multipartition& nu) const;
  std::vector<GrothElement> e_values(const RingElement& w, int n) const;
  GrothElement log_coefficient(const RingElement& y, int k, bool drop_top) const;
  GrothElement f_coefficient(const RingElement& v, int m) const;

  BaseRing base_;
  mutable std::mutex product_mutex_;
  mutable std::map<std::pair<Multipartition, Multipartition>, std::map<Multipartition, Integer>> products_;
  mutable std::recursive_mutex e_mutex_;
  // Raw terms, so the cache does not keep the ring alive.
  mutable std::map<RingElement, std::vector<std::map<Multipartition, Rational>>> e_cache_;
};

// Integer polynomial in e_1, e_2, ... for s_lam: keys are multisets of indices.
const std::map<Partition, Integer>& schur_in_elementaries(const Partition& lam);
int moebius(int n);

}  // namespace wreath
