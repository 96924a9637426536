#include "wreath/pbw.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "wreath/errors.hpp"
#include "wreath/format.hpp"
#include "wreath/symfun.hpp"

namespace wreath {

int word_degree(const PbwWord& w) {
  int d = 0;
  for (const auto& [l, u] : w) d += l;
  return d;
}

namespace {

void accumulate(PbwTerms& into, const PbwWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

std::size_t first_descent(const PbwWord& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] < w[i]) return i;
  return w.size();
}

std::size_t last_descent(const PbwWord& w) {
  for (std::size_t i = w.size(); i-- > 1;)
    if (w[i] < w[i - 1]) return i - 1;
  return w.size();
}

}  // namespace

PbwElement::PbwElement(std::shared_ptr<const PbwAlgebra> alg, PbwTerms terms)
    : alg_(std::move(alg)), terms_(std::move(terms)) {}

Rational PbwElement::coefficient(const PbwWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PbwElement::add(const PbwWord& w, const Rational& c) { accumulate(terms_, w, c); }

int PbwElement::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, word_degree(w));
  return d;
}

PbwElement PbwElement::part_of_degree(int d) const {
  PbwElement out(alg_);
  for (const auto& [w, c] : terms_)
    if (word_degree(w) == d) out.terms_.emplace(w, c);
  return out;
}

PbwElement PbwElement::truncated(int d) const {
  PbwElement out(alg_);
  for (const auto& [w, c] : terms_)
    if (word_degree(w) <= d) out.terms_.emplace(w, c);
  return out;
}

PbwElement& PbwElement::operator+=(const PbwElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

PbwElement& PbwElement::operator-=(const PbwElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }

PbwElement operator*(const PbwElement& a, const Rational& c) {
  PbwElement out(a.algebra_ptr());
  if (c == 0) return out;
  for (const auto& [w, v] : a.terms()) out.add(w, v * c);
  return out;
}

PbwElement operator*(const PbwElement& a, const PbwElement& b) { return a.algebra().multiply(a, b); }

QElement::QElement(const BaseRing* ring, const RingElement& x) : ring_(ring) {
  for (const auto& [u, c] : x.coeffs()) add(u, Rational(c));
}

void QElement::add(int index, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = c_.emplace(index, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }
}

QElement operator+(QElement a, const QElement& b) {
  for (const auto& [u, c] : b.c_) a.add(u, c);
  return a;
}

QElement operator*(const QElement& a, const Rational& q) {
  QElement out(a.ring_);
  if (q == 0) return out;
  for (const auto& [u, c] : a.c_) out.add(u, c * q);
  return out;
}

QElement operator*(const QElement& a, const QElement& b) {
  QElement out(a.ring_);
  for (const auto& [v, cv] : a.c_)
    for (const auto& [w, cw] : b.c_)
      for (const auto& [u, n] : a.ring_->product(v, w).coeffs()) out.add(u, cv * cw * n);
  return out;
}

std::shared_ptr<const PbwAlgebra> PbwAlgebra::create(std::shared_ptr<const GrothRing> groth) {
  return std::shared_ptr<const PbwAlgebra>(new PbwAlgebra(std::move(groth)));
}

PbwElement PbwAlgebra::zero() const { return PbwElement(shared_from_this()); }

PbwElement PbwAlgebra::one() const {
  PbwElement x = zero();
  x.add({}, 1);
  return x;
}

PbwElement PbwAlgebra::generator(int l, int u) const {
  if (l < 1 || u < 0 || u >= base().rank()) throw DomainError("generator T_l(U) out of range");
  PbwElement x = zero();
  x.add({{l, u}}, 1);
  return x;
}

PbwElement PbwAlgebra::t(int l, const RingElement& w) const { return t(l, QElement(&base(), w)); }

PbwElement PbwAlgebra::t(int l, const QElement& q) const {
  PbwElement x = zero();
  for (const auto& [u, c] : q.coeffs()) x.add({{l, u}}, c);
  return x;
}

QElement PbwAlgebra::qone() const {
  if (!base().has_unit()) throw DomainError("the rational algebra needs a unit in R");
  return QElement(&base(), base().unit());
}

// [T_l(a), T_l(b)] = T_l(ab - ba); distinct levels commute.
PbwTerms PbwAlgebra::normal_terms(const PbwWord& w) const {
  const std::size_t i = first_descent(w);
  if (i == w.size()) return {{w, 1}};
  {
    std::lock_guard lock(order_mutex_);
    auto it = order_cache_.find(w);
    if (it != order_cache_.end()) return it->second;
  }
  PbwWord swapped = w;
  std::swap(swapped[i], swapped[i + 1]);
  PbwTerms out = normal_terms(swapped);
  const auto [l, a] = w[i];
  const auto [l2, b] = w[i + 1];
  if (l == l2) {
    auto correction = [&](const RingElement& x, int sign) {
      for (const auto& [u, c] : x.coeffs()) {
        PbwWord shorter(w.begin(), w.begin() + i);
        shorter.emplace_back(l, u);
        shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
        for (const auto& [nw, nc] : normal_terms(shorter)) accumulate(out, nw, nc * c * sign);
      }
    };
    correction(base().product(a, b), 1);
    correction(base().product(b, a), -1);
  }
  std::lock_guard lock(order_mutex_);
  order_cache_.emplace(w, out);
  return out;
}

PbwElement PbwAlgebra::normal_order(const PbwWord& w) const { return PbwElement(shared_from_this(), normal_terms(w)); }

PbwElement PbwAlgebra::normal_order_alternative(const PbwWord& w) const {
  const std::size_t i = last_descent(w);
  if (i == w.size()) return PbwElement(shared_from_this(), {{w, 1}});
  PbwWord swapped = w;
  std::swap(swapped[i], swapped[i + 1]);
  PbwElement out = normal_order_alternative(swapped);
  const auto [l, a] = w[i];
  const auto [l2, b] = w[i + 1];
  if (l == l2) {
    RingElement diff = base().product(a, b) - base().product(b, a);
    for (const auto& [u, c] : diff.coeffs()) {
      PbwWord shorter(w.begin(), w.begin() + i);
      shorter.emplace_back(l, u);
      shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
      out += normal_order_alternative(shorter) * Rational(c);
    }
  }
  return out;
}

PbwElement PbwAlgebra::multiply(const PbwElement& a, const PbwElement& b) const {
  PbwTerms out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      const Rational c = ca * cb;
      if (wa.empty() || wb.empty() || !(wb.front() < wa.back())) {
        PbwWord w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        accumulate(out, w, c);
        continue;
      }
      PbwWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      for (const auto& [nw, nc] : normal_terms(w)) accumulate(out, nw, nc * c);
    }
  return PbwElement(shared_from_this(), std::move(out));
}

MixedSeries PbwAlgebra::z_generating_function(int degree) const {
  {
    std::lock_guard lock(z_mutex_);
    if (gf_degree_ >= degree) {
      MixedSeries g(one(), degree);
      for (const auto& [k, terms] : gf_cache_) g.add(k, PbwElement(shared_from_this(), terms));
      return g;
    }
  }
  MixedSeries g = MixedSeries::constant(one(), degree);
  // Levels above the degree only contribute to higher symmetric degree.
  for (int l = 1; l <= degree; ++l) {
    GradedSeries<Multipartition, QElement> x = GradedSeries<Multipartition, QElement>::constant(qone(), degree);
    for (int u = 0; u < base().rank(); ++u) x.add(Multipartition::single(u, Partition{l}), QElement(&base(), RingElement::basis(u)));
    g = g * theta(l, x);
  }
  std::lock_guard lock(z_mutex_);
  if (degree > gf_degree_) {
    gf_degree_ = degree;
    gf_cache_.clear();
    for (const auto& [k, c] : g.terms()) gf_cache_.emplace(k, c.terms());
  }
  return g;
}

// With G = sum_rho p_rho G_rho = sum_lam s_lam Z_lam, orthogonality of
// characters gives Z_lam = sum_rho prod_U chi^{lam(U)}_{rho(U)} G_rho.
PbwElement PbwAlgebra::z_element(const Multipartition& lam) const {
  {
    std::lock_guard lock(z_mutex_);
    auto it = z_cache_.find(lam);
    if (it != z_cache_.end()) return PbwElement(shared_from_this(), it->second);
  }
  MixedSeries g = z_generating_function(lam.total_size());
  PbwElement out = zero();
  std::vector<Multipartition::Entry> rho;
  std::function<void(std::size_t, Integer)> rec = [&](std::size_t i, Integer chi) {
    if (i == lam.entries().size()) {
      out += g.coefficient(Multipartition(rho)) * Rational(chi);
      return;
    }
    const auto& [u, part] = lam.entries()[i];
    for (const auto& r : partitions_of(part.size())) {
      Integer c = mn_character(part, r);
      if (c == 0) continue;
      rho.emplace_back(u, r);
      rec(i + 1, chi * c);
      rho.pop_back();
    }
  };
  rec(0, 1);
  std::lock_guard lock(z_mutex_);
  z_cache_.emplace(lam, out.terms());
  return out;
}

// The top filtration part of a word maps to prod p_l^(U) / l, which is the
// leading term of sum_lam c_lam Z_lam when it equals sum_lam c_lam s_lam.
GrothElement PbwAlgebra::to_z_basis(const PbwElement& x) const {
  GrothElement out = groth_->zero();
  PbwElement rem = x;
  while (!rem.is_zero()) {
    const int d = rem.degree();
    SymSeries f(groth_->labels(), SymBasis::PowerSum, d);
    for (const auto& [w, c] : rem.terms()) {
      if (word_degree(w) != d) continue;
      std::map<int, std::vector<int>> parts;
      Rational weight = c;
      for (const auto& [l, u] : w) {
        parts[u].push_back(l);
        weight /= l;
      }
      std::vector<Multipartition::Entry> entries;
      for (auto& [u, p] : parts) entries.emplace_back(u, Partition::from_multiset(p));
      f.add(Multipartition(std::move(entries)), weight);
    }
    const SymSeries s = power_to_schur(f);
    for (const auto& [lam, a] : s.terms()) {
      out.add(lam, a);
      rem -= z_element(lam) * a;
    }
    if (rem.degree() >= d) throw std::logic_error("to_z_basis: leading terms failed to cancel");
  }
  return out;
}

GrothElement PbwAlgebra::oracle_multiply(const Multipartition& mu, const Multipartition& nu) const {
  GrothElement out = to_z_basis(z_element(mu) * z_element(nu));
  if (!out.is_integral()) throw IntegralityError("oracle product is not integral");
  return out;
}

PbwSeries PbwAlgebra::e_series(const RingElement& w, int degree) const {
  using QSeries = GradedSeries<Exponents, QElement>;
  PbwSeries out = PbwSeries::constant(one(), degree);
  for (int l = 1; l <= degree; ++l) {
    QSeries x = QSeries::constant(qone(), degree);
    x.add(exponents({l}), QElement(&base(), w) * Rational(l % 2 ? 1 : -1));
    out = out * theta(l, x);
  }
  return out;
}

PbwSeries PbwAlgebra::f_series_moebius(const RingElement& w, int degree) const {
  PbwSeries out(one(), degree);
  for (int r = 1; r <= degree; ++r) {
    const int mu = moebius(r);
    if (mu == 0) continue;
    const int k = degree / r;
    PbwSeries e = e_series(base().power(w, r), k);
    PbwSeries neg(one(), k);
    for (const auto& [ex, c] : e.terms()) neg.add(ex, c * Rational(!ex.empty() && ex[0] % 2 ? -1 : 1));
    const PbwSeries lg = neg.log();
    for (const auto& [ex, c] : lg.terms()) out.add(exponents({r * ex[0]}), c * frac(-mu, r));
  }
  return out;
}

PbwSeries PbwAlgebra::f_series(const RingElement& w, int degree) const {
  PbwSeries closed(one(), degree);
  for (int i = 1; i <= degree; ++i) closed.add(exponents({i}), t(i, w));
  if (!(closed == f_series_moebius(w, degree)))
    throw std::logic_error("f_series: Moebius form disagrees with sum_i T_i(w) t^i");
  return closed;
}

// Psi_m(T_l(U)) = sum_{d | m, gcd(d, l) = 1} (m/d) T_{lm/d}(psi_d U)
PbwElement PbwAlgebra::adams(int m, const PbwElement& x, int degree) const {
  if (m < 1) throw DomainError("adams: index must be positive");
  for (int d = 2; d <= m; ++d)
    if (m % d == 0 && !base().has_adams(d))
      throw MissingDataError("ring has no Adams operation psi_" + std::to_string(d));
  std::map<PbwLetter, PbwElement> images;
  auto image = [&](const PbwLetter& letter) -> const PbwElement& {
    auto it = images.find(letter);
    if (it != images.end()) return it->second;
    const auto [l, u] = letter;
    PbwElement img = zero();
    for (int d = 1; d <= m; ++d) {
      if (m % d || std::gcd(d, l) != 1) continue;
      const int level = l * (m / d);
      if (degree >= 0 && level > degree) continue;
      img += t(level, base().adams_apply(d, RingElement::basis(u))) * Rational(m / d);
    }
    return images.emplace(letter, std::move(img)).first->second;
  };
  PbwElement out = zero();
  for (const auto& [w, c] : x.terms()) {
    PbwElement img = one();
    for (const auto& letter : w) {
      img = img * image(letter);
      if (degree >= 0) img = img.truncated(degree);
    }
    out += img * c;
  }
  return out;
}

GrothElement PbwAlgebra::adams_z(int m, const GrothElement& x) const {
  GrothElement out = groth_->zero();
  for (const auto& [lam, c] : x.terms()) out += to_z_basis(adams(m, z_element(lam))) * c;
  return out;
}

PbwElement PbwAlgebra::lambda_on_e1_pbw(int n, const RingElement& u) const {
  if (!base().has_lambda() || base().lambda_max() < n)
    throw MissingDataError("ring has no lambda^" + std::to_string(n) + " data");
  using QSeries = GradedSeries<Exponents, QElement>;
  PbwSeries prod = PbwSeries::constant(one(), n);
  for (int l = 1; l <= n; ++l) {
    QSeries x = QSeries::constant(qone(), n);
    for (int r = 1; r * l <= n; ++r)
      x.add(exponents({r * l}), QElement(&base(), base().lambda_apply(r, u)) * Rational((r * (l - 1)) % 2 ? -1 : 1));
    prod = prod * theta(l, x);
  }
  return prod.coefficient(exponents({n}));
}

GrothElement PbwAlgebra::lambda_on_e1(int n, const RingElement& u) const {
  GrothElement out = to_z_basis(lambda_on_e1_pbw(n, u));
  if (!out.is_integral()) throw IntegralityError("lambda^" + std::to_string(n) + "(e_1) is not integral");
  return out;
}

std::string PbwAlgebra::format_word(const PbwWord& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& [l, u] : w) {
    if (!s.empty()) s += "*";
    s += "T" + std::to_string(l) + "(" + base().labels()[u] + ")";
  }
  return s;
}

std::string PbwAlgebra::format(const PbwElement& x) const {
  std::vector<std::pair<Rational, std::string>> items;
  for (const auto& [w, c] : x.terms()) items.emplace_back(c, format_word(w));
  return format_linear_combination(items);
}

}  // namespace wreath
