#include "wreath/witt.hpp"

#include <algorithm>
#include <sstream>

#include "wreath/format.hpp"
#include "wreath/symfun.hpp"

namespace wreath {

int monomial_weight(const Monomial& m) {
  int w = 0;
  for (const auto& s : m) w += s.index;
  return w;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int wa = monomial_weight(a), wb = monomial_weight(b);
  return wa != wb ? wa < wb : a < b;
}

Polynomial::Polynomial(long c) { add({}, Integer(c)); }

Polynomial::Polynomial(const Integer& c) { add({}, c); }

Polynomial Polynomial::symbol(const LawSymbol& s) {
  Polynomial p;
  p.add({s}, 1);
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::truncated(int weight) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (monomial_weight(m) <= weight) out.terms_.emplace(m, c);
  return out;
}

Polynomial Polynomial::part_of_weight(int weight) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (monomial_weight(m) == weight) out.terms_.emplace(m, c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply_truncated(a, b, -1); }

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int weight) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (weight >= 0 && monomial_weight(ma) + monomial_weight(mb) > weight) continue;
      out.add(merge_monomials(ma, mb), ca * cb);
    }
  return out;
}

Polynomial substitute(const Polynomial& p, const std::function<Polynomial(const LawSymbol&)>& image, int weight) {
  std::map<LawSymbol, Polynomial> cache;
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(c);
    for (const auto& s : m) {
      auto it = cache.find(s);
      if (it == cache.end()) it = cache.emplace(s, image(s)).first;
      term = multiply_truncated(term, it->second, weight);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& labels) {
  static const char* sides[] = {"x", "y", "z"};
  std::vector<std::pair<Rational, std::string>> items;
  for (const auto& [m, c] : p.terms()) {
    std::string name;
    for (const auto& s : m) {
      if (!name.empty()) name += "*";
      name += "e" + std::to_string(s.index) + "(" + sides[s.side] + "_" + labels.at(s.label) + ")";
    }
    items.emplace_back(Rational(c), name.empty() ? "1" : name);
  }
  return format_linear_combination(items);
}

WittVector<Integer> parse_witt(const std::string& text) {
  WittVector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) throw ParseError("bad Witt vector component '" + item + "'");
    out.a.push_back(v);
  }
  if (out.a.empty()) throw ParseError("empty Witt vector");
  return out;
}

std::string to_string(const WittVector<Integer>& x) {
  std::string s;
  for (const auto& v : x.a) {
    if (!s.empty()) s += ",";
    s += v.get_str();
  }
  return s;
}

const Polynomial& GroupLaw::component(int i, int u) const {
  auto it = components_.find({i, u});
  if (it == components_.end()) throw DomainError("group law component out of range");
  return it->second;
}

// p_n = sum_{i<n} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n
Polynomial power_sum_in_elementaries(int n, int side, int label) {
  std::vector<Polynomial> p;
  for (int m = 1; m <= n; ++m) {
    Polynomial c = Polynomial::symbol({side, label, m}) * Polynomial(long(m % 2 ? m : -m));
    for (int i = 1; i < m; ++i) c += Polynomial::symbol({side, label, i}) * p[m - i - 1] * Polynomial(long(i % 2 ? 1 : -1));
    p.push_back(c);
  }
  return p[n - 1];
}

GroupLaw formal_group_law(const BaseRing& ring, int degree) {
  const int k = ring.rank();
  SubstitutionPlan plan(k);
  for (int u = 0; u < k; ++u) {
    plan[u].push_back({{u}, 1});
    plan[u].push_back({{k + u}, 1});
  }
  for (int v = 0; v < k; ++v)
    for (int w = 0; w < k; ++w)
      for (const auto& [u, n] : ring.product(v, w).coeffs()) plan[u].push_back({{v, k + w}, n});
  std::vector<std::string> doubled;
  for (const auto& l : ring.labels()) doubled.push_back("x_" + l);
  for (const auto& l : ring.labels()) doubled.push_back("y_" + l);

  std::map<std::pair<int, int>, Polynomial> newton;
  auto p_of = [&](int l, int out_label) -> const Polynomial& {
    auto key = std::make_pair(l, out_label);
    auto it = newton.find(key);
    if (it == newton.end())
      it = newton.emplace(key, power_sum_in_elementaries(l, out_label < k ? 0 : 1, out_label % k)).first;
    return it->second;
  };

  GroupLaw law(ring.labels(), degree);
  for (int u = 0; u < k; ++u)
    for (int i = 1; i <= degree; ++i) {
      SymSeries image = substitute_variable_sets(elementary(ring.labels(), i, u, i), plan, doubled, degree);
      // Accumulate with rational coefficients, then insist on integers.
      std::map<Monomial, Rational> acc;
      for (const auto& [key, c] : image.terms()) {
        Polynomial term(1);
        for (const auto& [label, part] : key.entries())
          for (int l : part.parts()) term = term * p_of(l, label);
        for (const auto& [m, v] : term.terms()) acc[m] += c * v;
      }
      Polynomial poly;
      for (const auto& [m, v] : acc) {
        if (v == 0) continue;
        if (!is_integer(v)) throw IntegralityError("group law has a non-integral coefficient");
        poly.add(m, v.get_num());
      }
      law.set_component(i, u, std::move(poly));
    }
  return law;
}

namespace {

LawSymbol shifted(LawSymbol s, int by) {
  s.side += by;
  return s;
}

Polynomial shift_sides(const Polynomial& p, int by) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Monomial n;
    for (const auto& s : m) n.push_back(shifted(s, by));
    std::sort(n.begin(), n.end());
    out.add(n, c);
  }
  return out;
}

}  // namespace

Polynomial law_left_nested(const GroupLaw& law, int i, int u) {
  return substitute(
      law.component(i, u),
      [&](const LawSymbol& s) {
        if (s.side == 0) return law.component(s.index, s.label);
        return Polynomial::symbol(shifted(s, 1));
      },
      law.degree());
}

Polynomial law_right_nested(const GroupLaw& law, int i, int u) {
  return substitute(
      law.component(i, u),
      [&](const LawSymbol& s) {
        if (s.side == 0) return Polynomial::symbol(s);
        return shift_sides(law.component(s.index, s.label), 1);
      },
      law.degree());
}

std::string dump(const GroupLaw& law) {
  std::string out;
  for (int u = 0; u < static_cast<int>(law.labels().size()); ++u)
    for (int i = 1; i <= law.degree(); ++i)
      out += "F[e" + std::to_string(i) + "(" + law.labels()[u] + ")] = " + to_string(law.component(i, u), law.labels()) +
             "\n";
  return out;
}

}  // namespace wreath
