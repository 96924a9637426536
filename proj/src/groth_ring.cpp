#include "wreath/groth_ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wreath/errors.hpp"
#include "wreath/format.hpp"

namespace wreath {

Rational GrothElement::coefficient(const Multipartition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GrothElement::add(const Multipartition& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool GrothElement::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return is_integer(kv.second); });
}

int GrothElement::filtration_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.total_size());
  return d;
}

GrothElement GrothElement::part_of_degree(int d) const {
  GrothElement out(ring_);
  for (const auto& [k, c] : terms_)
    if (k.total_size() == d) out.terms_.emplace(k, c);
  return out;
}

GrothElement& GrothElement::operator+=(const GrothElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

GrothElement& GrothElement::operator-=(const GrothElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

GrothElement operator+(GrothElement a, const GrothElement& b) { return a += b; }
GrothElement operator-(GrothElement a, const GrothElement& b) { return a -= b; }
GrothElement operator-(const GrothElement& a) { return a * Rational(-1); }

GrothElement operator*(const GrothElement& a, const Rational& c) {
  GrothElement out(a.ring_ptr());
  if (c == 0) return out;
  for (const auto& [k, v] : a.terms()) out.add(k, v * c);
  return out;
}

GrothElement operator*(const GrothElement& a, const GrothElement& b) {
  if (a.ring_ptr() != b.ring_ptr()) throw DomainError("product of elements over different rings");
  return a.ring().z_multiply(a, b);
}

std::string to_string(const GrothElement& x) {
  std::vector<std::pair<Rational, std::string>> items;
  for (const auto& [k, c] : x.terms()) items.emplace_back(c, "Z" + to_string(k, x.ring().labels()));
  return format_linear_combination(items);
}

std::shared_ptr<const GrothRing> GrothRing::create(BaseRing base) {
  return std::shared_ptr<const GrothRing>(new GrothRing(std::move(base)));
}

GrothElement GrothRing::zero() const { return GrothElement(shared_from_this()); }

GrothElement GrothRing::one() const { return z(Multipartition()); }

GrothElement GrothRing::scalar(const Rational& c) const { return one() * c; }

GrothElement GrothRing::z(const Multipartition& key) const {
  if (!key.empty() && key.entries().back().first >= base_.rank())
    throw DomainError("multipartition label outside the ring basis");
  GrothElement x = zero();
  x.add(key, 1);
  return x;
}

namespace {

// Variable sets x_U (index U) and y_U (index rank + U).
std::vector<std::string> doubled_labels(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back("x_" + l);
  for (const auto& l : labels) out.push_back("y_" + l);
  return out;
}

Multipartition shift_labels(const Multipartition& m, int offset) {
  std::vector<Multipartition::Entry> e;
  for (const auto& [l, p] : m.entries()) e.emplace_back(l + offset, p);
  return Multipartition(std::move(e));
}

std::vector<std::pair<Multipartition, Rational>> schur_as_powers(const Multipartition& key, int nlabels) {
  std::vector<std::string> labels(nlabels);
  SymSeries p = schur_to_power(schur_term(labels, key.total_size(), key));
  return {p.terms().begin(), p.terms().end()};
}

bool within_support(const Multipartition& mu, const Multipartition& nu, const Multipartition& lam) {
  const int a = mu.total_size(), b = nu.total_size(), c = lam.total_size();
  return c <= a + b && c >= std::max(a, b);
}

}  // namespace

Integer GrothRing::structure_constant(const Multipartition& mu, const Multipartition& nu,
                                      const Multipartition& lam) const {
  if (!within_support(mu, nu, lam)) return 0;
  const int k = base_.rank();
  const int degree = mu.total_size() + nu.total_size();
  // p_l(x_U) -> p_l(x_U) + p_l(y_U) + sum_{V,W} N_{V,W}^U p_l(x_V) p_l(y_W)
  SubstitutionPlan plan(k);
  for (int u = 0; u < k; ++u) {
    plan[u].push_back({{u}, 1});
    plan[u].push_back({{k + u}, 1});
  }
  for (int v = 0; v < k; ++v)
    for (int w = 0; w < k; ++w)
      for (const auto& [u, n] : base_.product(v, w).coeffs()) plan[u].push_back({{v, k + w}, n});
  const auto out_labels = doubled_labels(labels());
  SymSeries f = schur_term(labels(), lam.total_size(), lam);
  SymSeries substituted = substitute_variable_sets(f, plan, out_labels, degree);
  SymSeries target = schur_term(out_labels, degree, merge(mu, shift_labels(nu, k)));
  Rational a = hall_pairing(substituted, target);
  if (!is_integer(a)) throw IntegralityError("structure constant is not integral");
  return a.get_num();
}

// Z_mu Z_nu = sum_lam a^lam Z_lam with a^lam = <s_mu(x) s_nu(y), Phi(s_lam)>, Phi
// the substitution above. Summing against s_lam(z) turns this into
// <s_mu(x) s_nu(y), Phi_w(Cauchy(w, z))>. Expanding both Schur functions in power
// sums, the pairing of p_alpha(x) p_beta(y) with the exponential kernel is a sum
// over partial matchings between equal parts of alpha and beta: an unmatched
// part l at label V gives p_l(z_V), a matched pair (l, V, W) gives
// l * sum_U N_{V,W}^U p_l(z_U).
std::map<Multipartition, Integer> GrothRing::compute_basis_product(const Multipartition& mu,
                                                                   const Multipartition& nu) const {
  if (mu.empty()) return {{nu, 1}};
  if (nu.empty()) return {{mu, 1}};
  const int k = base_.rank();
  struct Token {
    int part;
    int label;
  };
  auto tokens = [](const Multipartition& m) {
    std::vector<Token> t;
    for (const auto& [label, p] : m.entries())
      for (int l : p.parts()) t.push_back({l, label});
    return t;
  };

  std::map<Multipartition, Rational> powers;
  std::vector<int> parts_unmatched;  // flattened (label, part) pairs
  for (const auto& [alpha, ca] : schur_as_powers(mu, k)) {
    const auto xt = tokens(alpha);
    for (const auto& [beta, cb] : schur_as_powers(nu, k)) {
      const auto yt = tokens(beta);
      const Rational coeff = ca * cb;
      std::vector<bool> used(yt.size(), false);
      std::vector<std::vector<int>> unmatched(k);
      std::vector<std::tuple<int, int, int>> pairs;

      auto leaf = [&]() {
        std::vector<std::vector<int>> base = unmatched;
        for (std::size_t j = 0; j < yt.size(); ++j)
          if (!used[j]) base[yt[j].label].push_back(yt[j].part);
        // Expand the matched factors.
        std::function<void(std::size_t, std::vector<std::vector<int>>&, Rational)> expand =
            [&](std::size_t i, std::vector<std::vector<int>>& cur, Rational c) {
              if (i == pairs.size()) {
                std::vector<Multipartition::Entry> e;
                for (int u = 0; u < k; ++u)
                  if (!cur[u].empty()) e.emplace_back(u, Partition::from_multiset(cur[u]));
                Multipartition key(std::move(e));
                auto [it, ins] = powers.emplace(key, c);
                if (!ins) it->second += c;
                return;
              }
              auto [l, v, w] = pairs[i];
              for (const auto& [u, n] : base_.product(v, w).coeffs()) {
                cur[u].push_back(l);
                expand(i + 1, cur, c * n * l);
                cur[u].pop_back();
              }
            };
        expand(0, base, coeff);
      };

      std::function<void(std::size_t)> match = [&](std::size_t i) {
        if (i == xt.size()) {
          leaf();
          return;
        }
        unmatched[xt[i].label].push_back(xt[i].part);
        match(i + 1);
        unmatched[xt[i].label].pop_back();
        for (std::size_t j = 0; j < yt.size(); ++j) {
          if (used[j] || yt[j].part != xt[i].part) continue;
          used[j] = true;
          pairs.emplace_back(xt[i].part, xt[i].label, yt[j].label);
          match(i + 1);
          pairs.pop_back();
          used[j] = false;
        }
      };
      match(0);
    }
  }

  SymSeries p(labels(), SymBasis::PowerSum, mu.total_size() + nu.total_size());
  for (const auto& [key, c] : powers) p.add(key, c);
  SymSeries s = power_to_schur(p);
  std::map<Multipartition, Integer> out;
  for (const auto& [key, c] : s.terms()) {
    if (!is_integer(c)) throw IntegralityError("Z-basis product has a non-integral coefficient");
    out.emplace(key, c.get_num());
  }
  return out;
}

const std::map<Multipartition, Integer>& GrothRing::basis_product(const Multipartition& mu,
                                                                   const Multipartition& nu) const {
  auto key = std::make_pair(mu, nu);
  {
    std::lock_guard lock(product_mutex_);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
  }
  auto value = compute_basis_product(mu, nu);
  std::lock_guard lock(product_mutex_);
  return products_.emplace(key, std::move(value)).first->second;
}

GrothElement GrothRing::z_multiply(const GrothElement& a, const GrothElement& b) const {
  std::map<Multipartition, Rational> acc;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Rational c = ca * cb;
      for (const auto& [kl, n] : basis_product(ka, kb)) {
        auto [it, ins] = acc.emplace(kl, c * n);
        if (!ins) it->second += c * n;
      }
    }
  GrothElement out = zero();
  for (const auto& [k, c] : acc) out.add(k, c);
  return out;
}

int moebius(int n) {
  if (n < 1) throw DomainError("moebius: argument must be positive");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<GrothElement> GrothRing::e_values(const RingElement& w, int n) const {
  std::lock_guard lock(e_mutex_);
  auto it = e_cache_.find(w);
  if (it == e_cache_.end()) it = e_cache_.emplace(w, std::vector<std::map<Multipartition, Rational>>{one().terms()}).first;
  auto& vec = it->second;
  while (static_cast<int>(vec.size()) <= n) {
    const int m = static_cast<int>(vec.size());
    if (w.is_zero()) {
      vec.emplace_back();
      continue;
    }
    if (auto u = w.as_basis_element()) {
      vec.push_back(z(Multipartition::single(*u, Partition(std::vector<int>(m, 1)))).terms());
      continue;
    }
    // F_w(t) = sum_U a_U F_U(t), F_v(t) = -sum_r mu(r)/r log E_{v^r}(-t^r).
    // Only the r = 1, first-order log term of F_w involves e_m(w), with
    // coefficient -(-1)^m; everything else uses lower e's.
    GrothElement target = zero();
    for (const auto& [u, a] : w.coeffs()) target += f_coefficient(RingElement::basis(u), m) * Rational(a);
    GrothElement rest = log_coefficient(w, m, true);
    for (int r = 2; r <= m; ++r) {
      if (m % r || moebius(r) == 0) continue;
      rest += log_coefficient(base_.power(w, r), m / r, false) * frac(moebius(r), r);
    }
    GrothElement em = (target + rest) * Rational(m % 2 ? 1 : -1);
    if (!em.is_integral())
      throw IntegralityError("e_" + std::to_string(m) + "(" + base_.format(w) + ") is not integral");
    vec.push_back(em.terms());
  }
  std::vector<GrothElement> out;
  for (int r = 0; r <= n; ++r) {
    GrothElement x = zero();
    for (const auto& [k, c] : vec[r]) x.add(k, c);
    out.push_back(std::move(x));
  }
  return out;
}

// [s^k] log E_y(-s); with drop_top the e_k(y) contribution is left out.
GrothElement GrothRing::log_coefficient(const RingElement& y, int k, bool drop_top) const {
  if (k == 0) return zero();
  std::vector<GrothElement> vals = e_values(y, drop_top ? k - 1 : k);
  GenSeries e(one(), k);
  for (int j = 0; j < static_cast<int>(vals.size()) && j <= k; ++j) e.add(exponents({j}), vals[j] * Rational(j % 2 ? -1 : 1));
  return e.log().coefficient(exponents({k}));
}

GrothElement GrothRing::f_coefficient(const RingElement& v, int m) const {
  GrothElement out = zero();
  for (int r = 1; r <= m; ++r) {
    if (m % r || moebius(r) == 0) continue;
    out -= log_coefficient(base_.power(v, r), m / r, false) * frac(moebius(r), r);
  }
  return out;
}

GrothElement GrothRing::e_generator(int r, const RingElement& w) const {
  if (r < 0) throw DomainError("e_generator: negative index");
  return e_values(w, r)[r];
}

GrothElement GrothRing::decompose_e(int n, const RingElement& w) const { return e_generator(n, w); }

GrothElement GrothRing::h_element(int n, const RingElement& w) const {
  if (n < 0) throw DomainError("h_element: negative index");
  // Expansion of det(e_{1+j-i}(w)) along its first row: h_n = sum_k (-1)^{k+1} e_k h_{n-k}.
  std::vector<GrothElement> e = e_values(w, n);
  std::vector<GrothElement> h{one()};
  for (int m = 1; m <= n; ++m) {
    GrothElement hm = zero();
    for (int k = 1; k <= m; ++k) hm += (e[k] * h[m - k]) * Rational(k % 2 ? 1 : -1);
    h.push_back(std::move(hm));
  }
  return h[n];
}

GenSeries GrothRing::e_series(const RingElement& w, int degree) const {
  std::vector<GrothElement> vals = e_values(w, degree);
  GenSeries s(one(), degree);
  for (int r = 0; r <= degree; ++r) s.add(exponents({r}), vals[r]);
  return s;
}

namespace {

std::string first_difference(const GrothElement& a, const GrothElement& b) {
  GrothElement d = a - b;
  if (d.is_zero()) return "";
  const auto& [k, c] = *d.terms().begin();
  return "coefficient of Z" + to_string(k, a.ring().labels()) + ": " + to_string(a.coefficient(k)) + " vs " +
         to_string(b.coefficient(k));
}

}  // namespace

CommutationReport GrothRing::verify_commutation(int i, int j, const RingElement& u, const RingElement& v) const {
  CommutationReport report;
  const RingElement vu = base_.multiply(v, u), uv = base_.multiply(u, v);
  GrothElement lhs = zero(), rhs = zero();
  for (int k = 0; k <= std::min(i, j); ++k) {
    lhs += e_generator(i - k, u) * h_element(k, vu) * e_generator(j - k, v);
    rhs += e_generator(j - k, v) * h_element(k, uv) * e_generator(i - k, u);
  }
  if (!(lhs == rhs)) {
    report.holds = false;
    report.witness = "e_" + std::to_string(i) + "(" + base_.format(u) + "), e_" + std::to_string(j) + "(" +
                     base_.format(v) + "): " + first_difference(lhs, rhs);
  }
  GrothElement comm = e_generator(i, u) * e_generator(j, v) - e_generator(j, v) * e_generator(i, u);
  report.commutator_degree = comm.filtration_degree();
  if (i + j >= 1 && report.commutator_degree > i + j - 1) {
    report.holds = false;
    report.witness += (report.witness.empty() ? "" : "; ") + std::string("commutator has filtration degree ") +
                      std::to_string(report.commutator_degree);
  }
  return report;
}

CommutationReport GrothRing::verify_commutation_series(const RingElement& u, const RingElement& v,
                                                       int bidegree) const {
  CommutationReport report;
  auto middle = [&](const RingElement& w) {
    // E_w(-s)^{-1} as a series in s = uv.
    GenSeries e = e_series(w, bidegree);
    GenSeries neg(one(), bidegree);
    for (const auto& [ex, c] : e.terms()) neg.add(ex, c * Rational(SeriesKeyTraits<Exponents>::degree(ex) % 2 ? -1 : 1));
    return neg.inverse();
  };
  GenSeries m_vu = middle(base_.multiply(v, u));
  GenSeries m_uv = middle(base_.multiply(u, v));
  std::vector<GrothElement> eu = e_values(u, bidegree), ev = e_values(v, bidegree);
  for (int i = 0; i <= bidegree; ++i)
    for (int j = 0; j <= bidegree; ++j) {
      GrothElement lhs = zero(), rhs = zero();
      for (int k = 0; k <= std::min(i, j); ++k) {
        lhs += eu[i - k] * m_vu.coefficient(exponents({k})) * ev[j - k];
        rhs += ev[j - k] * m_uv.coefficient(exponents({k})) * eu[i - k];
      }
      if (!(lhs == rhs) && report.holds) {
        report.holds = false;
        report.witness = "u^" + std::to_string(i) + " v^" + std::to_string(j) + ": " + first_difference(lhs, rhs);
      }
    }
  return report;
}

GrothElement GrothRing::x_basis_element(const Multipartition& lam) const {
  auto unit = base_.unit_index();
  if (!unit) throw DomainError("X basis needs the unit to be a basis element");
  const Partition& at_unit = lam.at(*unit);
  GrothElement out = zero();
  // X_lam = sum_{r, mu} (-1)^r c^{lam(1)}_{mu(1), (1^r)} Z_{mu}, mu = lam away from the unit.
  for (int r = 0; r <= at_unit.size(); ++r) {
    Partition column(std::vector<int>(r, 1));
    for (const auto& mu0 : partitions_of(at_unit.size() - r)) {
      Integer c = lr_coefficient(mu0, column, at_unit);
      if (c != 0) out.add(lam.with(*unit, mu0), Rational(r % 2 ? -c : c));
    }
  }
  return out;
}

std::vector<GeneratorWord> GrothRing::gk_words(int k, int degree) const {
  // Generators ordered by label, then decreasing index.
  std::vector<std::pair<int, int>> gens;
  for (int u = 0; u < base_.rank(); ++u)
    for (int i = k; i >= 1; --i) gens.emplace_back(i, u);
  std::vector<GeneratorWord> out;
  GeneratorWord cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    out.push_back(cur);
    for (std::size_t g = start; g < gens.size(); ++g) {
      if (gens[g].first > left) continue;
      cur.push_back(gens[g]);
      rec(g, left - gens[g].first);
      cur.pop_back();
    }
  };
  rec(0, degree);
  std::stable_sort(out.begin(), out.end(), [](const GeneratorWord& a, const GeneratorWord& b) {
    int da = 0, db = 0;
    for (auto& g : a) da += g.first;
    for (auto& g : b) db += g.first;
    return da < db;
  });
  return out;
}

std::vector<GrothElement> GrothRing::gk_spanning_set(int k, int degree) const {
  std::vector<GrothElement> out;
  for (const auto& w : gk_words(k, degree)) out.push_back(evaluate_word(w));
  return out;
}

GrothElement GrothRing::evaluate_word(const GeneratorWord& w) const {
  GrothElement x = one();
  for (const auto& [r, u] : w) x = x * e_generator(r, RingElement::basis(u));
  return x;
}

std::string GrothRing::format_word(const GeneratorWord& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& [r, u] : w) {
    if (!s.empty()) s += "*";
    s += "e" + std::to_string(r) + "(" + labels()[u] + ")";
  }
  return s;
}

namespace {

std::mutex g_jt_mutex;
std::map<Partition, std::map<Partition, Integer>> g_jt_cache;

}  // namespace

const std::map<Partition, Integer>& schur_in_elementaries(const Partition& lam) {
  {
    std::lock_guard lock(g_jt_mutex);
    auto it = g_jt_cache.find(lam);
    if (it != g_jt_cache.end()) return it->second;
  }
  // s_lam = det(e_{lam'_i - i + j}), i, j = 1..lam_1.
  Partition conj = conjugate(lam);
  const int m = conj.length();
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Partition, Integer> out;
  do {
    std::vector<int> idx;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      int e = conj[i] - i + perm[i];
      if (e < 0) ok = false;
      else if (e > 0) idx.push_back(e);
    }
    if (!ok) continue;
    int inversions = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (perm[a] > perm[b]) ++inversions;
    out[Partition::from_multiset(idx)] += inversions % 2 ? -1 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  std::lock_guard lock(g_jt_mutex);
  return g_jt_cache.emplace(lam, std::move(out)).first->second;
}

SymSeries GrothRing::leading_term(const GrothElement& x) const {
  const int d = std::max(0, x.filtration_degree());
  SymSeries out(labels(), SymBasis::Schur, d);
  for (const auto& [k, c] : x.terms())
    if (k.total_size() == d) out.add(k, c);
  return out;
}

std::vector<GeneratorTerm> GrothRing::to_generator_polynomial(const GrothElement& x) const {
  std::map<GeneratorWord, Integer> words;
  GrothElement rem = x;
  while (!rem.is_zero()) {
    const int d = rem.filtration_degree();
    std::map<GeneratorWord, Integer> round;
    for (const auto& [key, c] : rem.terms()) {
      if (key.total_size() != d) continue;
      if (!is_integer(c)) throw IntegralityError("element is not in the integral form");
      // Product over labels of the Jacobi-Trudi expansions.
      std::vector<std::pair<GeneratorWord, Integer>> acc{{{}, c.get_num()}};
      for (const auto& [u, part] : key.entries()) {
        std::vector<std::pair<GeneratorWord, Integer>> next;
        for (const auto& [w, a] : acc)
          for (const auto& [idx, b] : schur_in_elementaries(part)) {
            GeneratorWord nw = w;
            for (int r : idx.parts()) nw.emplace_back(r, u);
            next.emplace_back(std::move(nw), a * b);
          }
        acc = std::move(next);
      }
      for (auto& [w, a] : acc) round[w] += a;
    }
    for (const auto& [w, a] : round) {
      if (a == 0) continue;
      rem -= evaluate_word(w) * Rational(a);
      words[w] += a;
    }
    if (rem.filtration_degree() >= d) throw IntegralityError("generator expansion failed to lower the degree");
  }
  std::vector<GeneratorTerm> out;
  for (const auto& [w, a] : words)
    if (a != 0) out.push_back({a, w});
  std::sort(out.begin(), out.end(), [](const GeneratorTerm& a, const GeneratorTerm& b) {
    int da = 0, db = 0;
    for (auto& g : a.word) da += g.first;
    for (auto& g : b.word) db += g.first;
    return da != db ? da < db : a.word < b.word;
  });
  return out;
}

}  // namespace wreath

namespace wreath {

// The generating function sum_lam s_lam(x) Z_lam is unchanged when p_l(x_U) is
// replaced by sum_j a_{jU} p_l(y_j), with U'_j = sum_U a_{jU} U.
GrothElement GrothRing::z_in_basis(const std::vector<RingElement>& new_basis, const Multipartition& lam) const {
  const int k = base_.rank();
  if (static_cast<int>(new_basis.size()) != k) throw DomainError("z_in_basis: basis has the wrong size");
  SubstitutionPlan plan(k);
  for (int u = 0; u < k; ++u)
    for (int j = 0; j < k; ++j) {
      Integer a = new_basis[j].coefficient(u);
      if (a != 0) plan[u].push_back({{j}, a});
    }
  const int n = lam.total_size();
  std::vector<std::string> ylabels;
  for (int j = 0; j < k; ++j) ylabels.push_back("y" + std::to_string(j));
  SymSeries target = schur_term(ylabels, n, lam);
  GrothElement out = zero();
  for (const auto& mu : enumerate_multipartitions(k, n)) {
    SymSeries image = substitute_variable_sets(schur_term(labels(), n, mu), plan, ylabels, n);
    out.add(mu, hall_pairing(target, image));
  }
  return out;
}

}  // namespace wreath
