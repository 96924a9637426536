#include "wreath/hopf.hpp"

#include <algorithm>
#include <functional>

#include "wreath/errors.hpp"
#include "wreath/format.hpp"

namespace wreath {

Rational TensorGrothElement::coefficient(const Multipartition& a, const Multipartition& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorGrothElement::add(const Multipartition& a, const Multipartition& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(KeyPair{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool TensorGrothElement::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return is_integer(kv.second); });
}

TensorGrothElement& TensorGrothElement::operator+=(const TensorGrothElement& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorGrothElement& TensorGrothElement::operator-=(const TensorGrothElement& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

TensorGrothElement operator*(const TensorGrothElement& a, const Rational& c) {
  TensorGrothElement out(a.ring_ptr());
  if (c == 0) return out;
  for (const auto& [k, v] : a.terms()) out.add(k.first, k.second, v * c);
  return out;
}

TensorGrothElement operator*(const TensorGrothElement& a, const TensorGrothElement& b) {
  const GrothRing& r = a.ring();
  TensorGrothElement out(a.ring_ptr());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const auto& left = r.basis_product(ka.first, kb.first);
      const auto& right = r.basis_product(ka.second, kb.second);
      const Rational c = ca * cb;
      for (const auto& [l, nl] : left)
        for (const auto& [m, nm] : right) out.add(l, m, c * nl * nm);
    }
  return out;
}

TensorGrothElement tensor(const GrothElement& a, const GrothElement& b) {
  TensorGrothElement out(a.ring_ptr());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add(ka, kb, ca * cb);
  return out;
}

std::string to_string(const TensorGrothElement& x) {
  std::vector<std::pair<Rational, std::string>> items;
  const auto& labels = x.ring().labels();
  for (const auto& [k, c] : x.terms())
    items.emplace_back(c, "Z" + to_string(k.first, labels) + " (x) Z" + to_string(k.second, labels));
  return format_linear_combination(items);
}

TensorGrothElement comultiply(const GrothElement& x) {
  TensorGrothElement out(x.ring_ptr());
  for (const auto& [lam, c] : x.terms()) {
    // Splits of each label's partition, with their LR multiplicities.
    std::vector<Multipartition::Entry> left, right;
    std::function<void(std::size_t, Integer)> rec = [&](std::size_t i, Integer mult) {
      if (i == lam.entries().size()) {
        out.add(Multipartition(left), Multipartition(right), c * mult);
        return;
      }
      const auto& [u, part] = lam.entries()[i];
      for (int a = 0; a <= part.size(); ++a)
        for (const auto& alpha : partitions_of(a))
          for (const auto& beta : partitions_of(part.size() - a)) {
            Integer m = lr_coefficient(alpha, beta, part);
            if (m == 0) continue;
            if (a > 0) left.emplace_back(u, alpha);
            if (a < part.size()) right.emplace_back(u, beta);
            rec(i + 1, mult * m);
            if (a > 0) left.pop_back();
            if (a < part.size()) right.pop_back();
          }
    };
    rec(0, 1);
  }
  return out;
}

Rational counit(const GrothElement& x) { return x.coefficient(Multipartition()); }

PbwElement pbw_antipode(const PbwElement& x) {
  const PbwAlgebra& alg = x.algebra();
  PbwElement out = alg.zero();
  for (const auto& [w, c] : x.terms()) {
    PbwWord rev(w.rbegin(), w.rend());
    out += alg.normal_order(rev) * (w.size() % 2 ? -c : c);
  }
  return out;
}

GrothElement antipode(const PbwAlgebra& alg, const GrothElement& x) {
  GrothElement out = alg.groth().zero();
  for (const auto& [lam, c] : x.terms()) out += alg.to_z_basis(pbw_antipode(alg.z_element(lam))) * c;
  if (!out.is_integral()) throw IntegralityError("antipode image is not integral");
  return out;
}

GrothElement multiply_out(const TensorGrothElement& x) {
  const GrothRing& r = x.ring();
  GrothElement out = r.zero();
  for (const auto& [k, c] : x.terms())
    for (const auto& [l, n] : r.basis_product(k.first, k.second)) out.add(l, c * n);
  return out;
}

namespace {

std::map<Multipartition, Integer> integral_terms(const SymSeries& s, const char* what) {
  std::map<Multipartition, Integer> out;
  for (const auto& [k, c] : s.terms()) {
    if (!is_integer(c)) throw IntegralityError(std::string(what) + ": non-integral coefficient");
    out.emplace(k, c.get_num());
  }
  return out;
}

int require_unit_index(const GrothRing& ring, const char* what) {
  auto u = ring.base().unit_index();
  if (!u) throw DomainError(std::string(what) + ": the unit of R must be a basis element");
  return *u;
}

}  // namespace

std::map<Multipartition, Integer> dual_multiply(const GrothRing& ring, const Multipartition& mu,
                                                const Multipartition& nu) {
  const int n = mu.total_size() + nu.total_size();
  SymSeries a = schur_term(ring.labels(), n, mu), b = schur_term(ring.labels(), n, nu);
  return integral_terms(to_basis(multiply(a, b), SymBasis::Schur), "dual_multiply");
}

std::map<KeyPair, Integer> dual_comultiply(const GrothRing& ring, const Multipartition& lam) {
  const int k = ring.base().rank();
  SubstitutionPlan plan(k);
  for (int u = 0; u < k; ++u) {
    plan[u].push_back({{u}, 1});
    plan[u].push_back({{k + u}, 1});
  }
  for (int v = 0; v < k; ++v)
    for (int w = 0; w < k; ++w)
      for (const auto& [u, n] : ring.base().product(v, w).coeffs()) plan[u].push_back({{v, k + w}, n});
  std::vector<std::string> doubled;
  for (const auto& l : ring.labels()) doubled.push_back("x_" + l);
  for (const auto& l : ring.labels()) doubled.push_back("y_" + l);
  // x_V y_W has degree two, so everything lives below twice |lam|.
  SymSeries image = substitute_variable_sets(schur_term(ring.labels(), lam.total_size(), lam), plan, doubled,
                                             2 * lam.total_size());
  std::map<KeyPair, Integer> out;
  for (const auto& [key, c] : integral_terms(power_to_schur(image), "dual_comultiply")) {
    std::vector<Multipartition::Entry> left, right;
    for (const auto& [label, p] : key.entries()) {
      if (label < k) left.emplace_back(label, p);
      else right.emplace_back(label - k, p);
    }
    out.emplace(KeyPair{Multipartition(left), Multipartition(right)}, c);
  }
  return out;
}

std::vector<SymSeries> dual_antipode_power_sum(const GrothRing& ring, int l, int degree) {
  require_unit_index(ring, "dual_antipode_power_sum");
  const int k = ring.base().rank();
  const auto& labels = ring.labels();
  std::vector<SymSeries> base, power, total;
  for (int u = 0; u < k; ++u) {
    SymSeries p(labels, SymBasis::PowerSum, degree);
    p.add(Multipartition::single(u, Partition{l}), 1);
    base.push_back(p);
    total.emplace_back(labels, SymBasis::PowerSum, degree);
  }
  power = base;
  for (int r = 1; r * l <= degree; ++r) {
    for (int u = 0; u < k; ++u) total[u] = total[u] + power[u] * Rational(r % 2 ? -1 : 1);
    // power <- power * (sum_U p_l(x_U) U), using the multiplication of R.
    std::vector<SymSeries> next(k, SymSeries(labels, SymBasis::PowerSum, degree));
    for (int v = 0; v < k; ++v) {
      if (power[v].is_zero()) continue;
      for (int w = 0; w < k; ++w)
        for (const auto& [u, n] : ring.base().product(v, w).coeffs())
          next[u] = next[u] + multiply(power[v], base[w]) * Rational(n);
    }
    power = std::move(next);
  }
  return total;
}

SymSeries dual_antipode(const GrothRing& ring, const Multipartition& lam, int degree) {
  if (degree < lam.total_size()) throw DomainError("dual_antipode: degree below the key size");
  const auto& labels = ring.labels();
  std::map<int, std::vector<SymSeries>> images;
  SymSeries acc(labels, SymBasis::PowerSum, degree);
  const SymSeries expansion = schur_to_power(schur_term(labels, degree, lam));
  for (const auto& [key, c] : expansion.terms()) {
    SymSeries prod = sym_one(labels, SymBasis::PowerSum, degree);
    for (const auto& [u, part] : key.entries())
      for (int l : part.parts()) {
        auto it = images.find(l);
        if (it == images.end()) it = images.emplace(l, dual_antipode_power_sum(ring, l, degree)).first;
        prod = multiply(prod, it->second[u]);
      }
    acc = acc + prod * c;
  }
  return power_to_schur(acc);
}

SymSeries theta_twist(const GrothRing& ring, const SymSeries& f, Twist direction) {
  const int unit = require_unit_index(ring, "theta_twist");
  const int k = ring.base().rank();
  SubstitutionPlan plan(k);
  for (int u = 0; u < k; ++u) plan[u].push_back({{u}, 1});
  plan[unit].push_back({{}, direction == Twist::Forward ? -1 : 1});
  return to_basis(substitute_variable_sets(f, plan, f.labels(), f.truncation()), f.basis());
}

SymSeries specialise_unit_to_one(const GrothRing& ring, const SymSeries& f) {
  const int unit = require_unit_index(ring, "specialise_unit_to_one");
  const int k = ring.base().rank();
  SubstitutionPlan plan(k);
  for (int u = 0; u < k; ++u)
    if (u != unit) plan[u].push_back({{u}, 1});
  plan[unit].push_back({{}, 1});
  return to_basis(substitute_variable_sets(f, plan, f.labels(), f.truncation()), f.basis());
}

}  // namespace wreath
