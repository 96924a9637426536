#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "wreath/groth_ring.hpp"
#include "wreath/pbw.hpp"
#include "wreath/symfun.hpp"

namespace wreath {

using KeyPair = std::pair<Multipartition, Multipartition>;

/// Element of G (x) G in the basis Z_mu (x) Z_nu.
class TensorGrothElement {
 public:
  explicit TensorGrothElement(std::shared_ptr<const GrothRing> ring) : ring_(std::move(ring)) {}

  const GrothRing& ring() const { return *ring_; }
  const std::shared_ptr<const GrothRing>& ring_ptr() const { return ring_; }
  const std::map<KeyPair, Rational>& terms() const { return terms_; }

  Rational coefficient(const Multipartition& a, const Multipartition& b) const;
  void add(const Multipartition& a, const Multipartition& b, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;
  bool operator==(const TensorGrothElement& o) const { return terms_ == o.terms_; }

  TensorGrothElement& operator+=(const TensorGrothElement& o);
  TensorGrothElement& operator-=(const TensorGrothElement& o);

 private:
  std::shared_ptr<const GrothRing> ring_;
  std::map<KeyPair, Rational> terms_;
};

TensorGrothElement operator*(const TensorGrothElement& a, const Rational& c);
// (a (x) b)(c (x) d) = ac (x) bd
TensorGrothElement operator*(const TensorGrothElement& a, const TensorGrothElement& b);
TensorGrothElement tensor(const GrothElement& a, const GrothElement& b);
std::string to_string(const TensorGrothElement& x);

// Delta(Z_lam) = sum prod_U c^{lam(U)}_{mu(U), nu(U)} Z_mu (x) Z_nu.
TensorGrothElement comultiply(const GrothElement& x);
Rational counit(const GrothElement& x);
// Rational side: S(T_l(U)) = -T_l(U), extended as an anti-automorphism.
PbwElement pbw_antipode(const PbwElement& x);
GrothElement antipode(const PbwAlgebra& alg, const GrothElement& x);

// (id (x) f) and (f (x) id) for linear maps f on G, and multiplication G (x) G -> G.
GrothElement multiply_out(const TensorGrothElement& x);
template <class F>
TensorGrothElement apply_left(const TensorGrothElement& x, F f) {
  TensorGrothElement out(x.ring_ptr());
  for (const auto& [k, c] : x.terms()) out += tensor(f(x.ring().z(k.first)), x.ring().z(k.second)) * c;
  return out;
}

// Dual algebra Q: Y_lam pairs with Z_lam and is identified with prod_U s_{lam(U)}(x_U).
std::map<Multipartition, Integer> dual_multiply(const GrothRing& ring, const Multipartition& mu,
                                                const Multipartition& nu);
// Coefficients of Y_mu (x) Y_nu in s_lam(x_U, y_U, (+)_{V,W} (x_V y_W)^{N_{VW}^U}).
std::map<KeyPair, Integer> dual_comultiply(const GrothRing& ring, const Multipartition& lam);
// Component U of sum_{r >= 1} (-1)^r (sum_U p_l(x_U) U)^r, power-sum form, degree <= D.
std::vector<SymSeries> dual_antipode_power_sum(const GrothRing& ring, int l, int degree);
// The antipode of Q applied to s_lam, truncated at the degree, in Schur form.
SymSeries dual_antipode(const GrothRing& ring, const Multipartition& lam, int degree);

enum class Twist { Forward, Inverse };
// Forward removes the value 1 from the unit's variable set, p_l -> p_l - 1;
// Inverse adds it back.
SymSeries theta_twist(const GrothRing& ring, const SymSeries& f, Twist direction);
// Value of f with the unit's variable set specialised to {1, 0, 0, ...}.
SymSeries specialise_unit_to_one(const GrothRing& ring, const SymSeries& f);

}  // namespace wreath
