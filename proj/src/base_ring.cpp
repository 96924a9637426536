#include "wreath/base_ring.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wreath/errors.hpp"
#include "wreath/format.hpp"
#include "wreath/linear_algebra.hpp"

namespace wreath {

RingElement RingElement::basis(int index, const Integer& c) {
  RingElement r;
  r.add(index, c);
  return r;
}

Integer RingElement::coefficient(int index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void RingElement::add(int index, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::optional<int> RingElement::as_basis_element() const {
  if (coeffs_.size() == 1 && coeffs_.begin()->second == 1) return coeffs_.begin()->first;
  return std::nullopt;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  for (const auto& [i, c] : o.coeffs_) add(i, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  for (const auto& [i, c] : o.coeffs_) add(i, -c);
  return *this;
}

RingElement& RingElement::operator*=(const Integer& c) {
  if (c == 0) coeffs_.clear();
  for (auto& [i, v] : coeffs_) v *= c;
  return *this;
}

RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
RingElement operator*(RingElement a, const Integer& c) { return a *= c; }
RingElement operator-(const RingElement& a) { return a * Integer(-1); }

namespace {

// Solves u * V = V = V * u for all basis V.
std::optional<RingElement> solve_unit(int n, const std::vector<std::vector<RingElement>>& table) {
  Matrix a;
  std::vector<Rational> b;
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      std::vector<Rational> left(n), right(n);
      for (int i = 0; i < n; ++i) {
        left[i] = Rational(table[i][v].coefficient(w));
        right[i] = Rational(table[v][i].coefficient(w));
      }
      a.push_back(left);
      b.push_back(v == w ? 1 : 0);
      a.push_back(right);
      b.push_back(v == w ? 1 : 0);
    }
  auto x = solve_linear(a, b);
  if (!x) return std::nullopt;
  RingElement u;
  for (int i = 0; i < n; ++i) {
    if (!is_integer((*x)[i])) return std::nullopt;
    u.add(i, (*x)[i].get_num());
  }
  return u;
}

bool is_identifier_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

BaseRing::BaseRing(std::vector<std::string> labels, std::vector<std::vector<RingElement>> table,
                   std::optional<RingElement> unit)
    : labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
  const int n = rank();
  if (n == 0) throw DomainError("ring basis must be nonempty");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty() || !std::all_of(l.begin(), l.end(), is_identifier_char))
      throw ParseError("invalid basis label '" + l + "'");
    if (!seen.insert(l).second) throw ParseError("repeated basis label '" + l + "'");
  }
  if (static_cast<int>(table_.size()) != n) throw DomainError("structure tensor has wrong shape");
  for (const auto& row : table_)
    if (static_cast<int>(row.size()) != n) throw DomainError("structure tensor has wrong shape");
  if (!unit_) unit_ = solve_unit(n, table_);
}

std::optional<int> BaseRing::find_label(const std::string& name) const {
  for (int i = 0; i < rank(); ++i)
    if (labels_[i] == name) return i;
  return std::nullopt;
}

int BaseRing::index_of(const std::string& name) const {
  auto i = find_label(name);
  if (!i) throw ParseError("unknown basis label '" + name + "'");
  return *i;
}

const RingElement& BaseRing::unit() const {
  if (!unit_) throw DomainError("ring has no unit");
  return *unit_;
}

std::optional<int> BaseRing::unit_index() const {
  if (!unit_) return std::nullopt;
  return unit_->as_basis_element();
}

RingElement BaseRing::multiply(const RingElement& a, const RingElement& b) const {
  RingElement out;
  for (const auto& [v, cv] : a.coeffs())
    for (const auto& [w, cw] : b.coeffs())
      for (const auto& [u, n] : table_[v][w].coeffs()) out.add(u, cv * cw * n);
  return out;
}

RingElement BaseRing::power(const RingElement& a, int n) const {
  RingElement r = unit();
  for (int i = 0; i < n; ++i) r = multiply(r, a);
  return r;
}

bool BaseRing::is_commutative() const {
  for (int v = 0; v < rank(); ++v)
    for (int w = v + 1; w < rank(); ++w)
      if (table_[v][w] != table_[w][v]) return false;
  return true;
}

void BaseRing::set_adams(int d, std::vector<RingElement> images) {
  if (d < 1) throw DomainError("Adams index must be positive");
  if (static_cast<int>(images.size()) != rank()) throw DomainError("Adams table has wrong size");
  adams_[d] = std::move(images);
}

RingElement BaseRing::adams_apply(int d, const RingElement& a) const {
  if (d == 1 && !adams_.count(1)) return a;
  auto it = adams_.find(d);
  if (it == adams_.end()) throw MissingDataError("ring has no Adams operation psi_" + std::to_string(d));
  RingElement out;
  for (const auto& [u, c] : a.coeffs()) out += it->second[u] * c;
  return out;
}

void BaseRing::set_lambda(std::vector<std::vector<RingElement>> table) {
  if (static_cast<int>(table.size()) != rank()) throw DomainError("lambda table has wrong size");
  std::size_t len = table[0].size();
  for (const auto& row : table)
    if (row.size() != len || len < 2) throw DomainError("lambda table rows must cover r = 0..r_max");
  lambda_ = std::move(table);
}

int BaseRing::lambda_max() const {
  if (lambda_.empty()) throw MissingDataError("ring has no lambda-operations");
  return static_cast<int>(lambda_[0].size()) - 1;
}

RingElement BaseRing::lambda_apply(int n, const RingElement& a) const {
  if (lambda_.empty()) throw MissingDataError("ring has no lambda-operations");
  if (n < 0) throw DomainError("lambda_apply: negative index");
  if (n > lambda_max())
    throw MissingDataError("lambda^" + std::to_string(n) + " exceeds the declared r_max = " +
                           std::to_string(lambda_max()));
  // lambda_t(sum a_U U) = prod_U lambda_t(U)^{a_U}, truncated at t^n.
  using Poly = std::vector<RingElement>;
  auto mul = [&](const Poly& x, const Poly& y) {
    Poly z(n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) z[i + j] += multiply(x[i], y[j]);
    return z;
  };
  Poly result(n + 1);
  result[0] = unit();
  for (const auto& [u, c] : a.coeffs()) {
    Poly base(n + 1);
    for (int r = 0; r <= n; ++r) base[r] = lambda_[u][r];
    if (c < 0) {
      // (1 + y)^{-1} = sum_k (-y)^k
      Poly y = base;
      y[0] = RingElement();
      Poly inv(n + 1), term(n + 1);
      inv[0] = term[0] = unit();
      for (int k = 1; k <= n; ++k) {
        term = mul(term, y);
        for (int i = 0; i <= n; ++i) inv[i] += k % 2 ? -term[i] : term[i];
      }
      base = inv;
    }
    Integer reps = abs(c);
    for (Integer k = 0; k < reps; ++k) result = mul(result, base);
  }
  return result[n];
}

std::string BaseRing::format(const RingElement& a) const {
  std::vector<std::pair<Rational, std::string>> items;
  for (const auto& [u, c] : a.coeffs()) items.emplace_back(Rational(c), labels_[u]);
  return format_linear_combination(items);
}

RingElement BaseRing::parse(const std::string& text) const {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("cannot parse ring element '" + text + "': " + why);
  };
  auto read_token = [&] {
    std::size_t start = pos;
    while (pos < text.size() && is_identifier_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  };
  auto is_number = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };

  RingElement out;
  skip();
  if (pos == text.size()) throw fail("empty literal");
  bool first = true;
  while (true) {
    skip();
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-' at position " + std::to_string(pos));
    }
    first = false;
    std::string tok = read_token();
    if (tok.empty()) throw fail("expected a term at position " + std::to_string(pos));
    auto label = find_label(tok);
    if (label) {
      out.add(*label, sign);
    } else if (is_number(tok)) {
      Integer c(tok);
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
        std::string name = read_token();
        auto l = find_label(name);
        if (!l) throw fail("unknown basis label '" + name + "'");
        out.add(*l, c * sign);
      } else {
        out += unit() * Integer(c * sign);
      }
    } else {
      throw fail("unknown basis label '" + tok + "'");
    }
    skip();
    if (pos == text.size()) break;
  }
  return out;
}

std::vector<Violation> validate(const BaseRing& ring) {
  std::vector<Violation> out;
  const int n = ring.rank();
  const auto& L = ring.labels();
  auto basis = [](int i) { return RingElement::basis(i); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        RingElement left = ring.multiply(ring.product(a, b), basis(c));
        RingElement right = ring.multiply(basis(a), ring.product(b, c));
        if (left != right)
          out.push_back({"associativity", "(" + L[a] + "*" + L[b] + ")*" + L[c] + " = " + ring.format(left) +
                                              " but " + L[a] + "*(" + L[b] + "*" + L[c] + ") = " +
                                              ring.format(right)});
      }
  if (!ring.has_unit()) {
    out.push_back({"unit", "no unit: no integral element u satisfies u*V = V = V*u for every basis V"});
  } else {
    for (int v = 0; v < n; ++v) {
      if (ring.multiply(ring.unit(), basis(v)) != basis(v) || ring.multiply(basis(v), ring.unit()) != basis(v))
        out.push_back({"unit", "declared unit " + ring.format(ring.unit()) + " is not an identity for " + L[v]});
    }
  }
  for (const auto& [d, images] : ring.adams_table()) {
    if (d == 1) {
      for (int u = 0; u < n; ++u)
        if (images[u] != basis(u)) out.push_back({"adams", "psi_1(" + L[u] + ") != " + L[u]});
    }
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        RingElement lhs = ring.adams_apply(d, ring.product(v, w));
        RingElement rhs = ring.multiply(images[v], images[w]);
        if (lhs != rhs)
          out.push_back({"adams", "psi_" + std::to_string(d) + " is not multiplicative on (" + L[v] + ", " + L[w] + ")"});
      }
    if (ring.has_unit() && ring.adams_apply(d, ring.unit()) != ring.unit())
      out.push_back({"adams", "psi_" + std::to_string(d) + " does not fix the unit"});
    for (const auto& [e, images2] : ring.adams_table()) {
      if (!ring.has_adams(d * e)) continue;
      for (int u = 0; u < n; ++u) {
        RingElement lhs = ring.adams_apply(d, ring.adams_apply(e, basis(u)));
        RingElement rhs = ring.adams_apply(d * e, basis(u));
        if (lhs != rhs)
          out.push_back({"adams", "psi_" + std::to_string(d) + " o psi_" + std::to_string(e) + " != psi_" +
                                      std::to_string(d * e) + " on " + L[u]});
      }
    }
  }
  if (ring.has_lambda()) {
    for (int u = 0; u < n; ++u) {
      if (!ring.has_unit() || ring.lambda_table()[u][0] != ring.unit())
        out.push_back({"lambda", "lambda^0(" + L[u] + ") is not the unit"});
      if (ring.lambda_table()[u][1] != basis(u))
        out.push_back({"lambda", "lambda^1(" + L[u] + ") != " + L[u]});
    }
  }
  return out;
}

bool is_monomial_algebra(const BaseRing& ring) {
  for (int v = 0; v < ring.rank(); ++v)
    for (int w = 0; w < ring.rank(); ++w) {
      const auto& p = ring.product(v, w);
      if (!p.is_zero() && !p.as_basis_element()) return false;
    }
  return true;
}

BaseRing builtin_integers() {
  BaseRing r({"1"}, {{RingElement::basis(0)}}, RingElement::basis(0));
  r.name = "integers";
  for (int d = 1; d <= 12; ++d) r.set_adams(d, {RingElement::basis(0)});
  // lambda_t(1) = 1 + t
  std::vector<RingElement> row(9);
  row[0] = row[1] = RingElement::basis(0);
  r.set_lambda({row});
  return r;
}

BaseRing builtin_group_algebra(const std::vector<std::string>& names,
                               const std::vector<std::vector<int>>& cayley) {
  const int n = static_cast<int>(names.size());
  if (static_cast<int>(cayley.size()) != n) throw DomainError("Cayley table: wrong number of rows");
  for (const auto& row : cayley) {
    if (static_cast<int>(row.size()) != n) throw DomainError("Cayley table: wrong row length");
    std::set<int> seen(row.begin(), row.end());
    if (static_cast<int>(seen.size()) != n || *seen.begin() < 0 || *seen.rbegin() >= n)
      throw DomainError("Cayley table: rows must be permutations of the elements");
  }
  for (int j = 0; j < n; ++j) {
    std::set<int> col;
    for (int i = 0; i < n; ++i) col.insert(cayley[i][j]);
    if (static_cast<int>(col.size()) != n) throw DomainError("Cayley table: columns must be permutations");
  }
  for (int i = 0; i < n; ++i)
    if (cayley[0][i] != i || cayley[i][0] != i) throw DomainError("Cayley table: element 0 is not the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          throw DomainError("Cayley table: operation is not associative");
  std::vector<std::vector<RingElement>> table(n, std::vector<RingElement>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = RingElement::basis(cayley[a][b]);
  BaseRing r(names, table, RingElement::basis(0));
  r.name = "group_algebra";
  return r;
}

BaseRing builtin_cyclic_group(int n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "e" : (n == 2 ? "g" : "g" + std::to_string(i)));
    for (int j = 0; j < n; ++j) cayley[i][j] = (i + j) % n;
  }
  BaseRing r = builtin_group_algebra(names, cayley);
  r.name = "cyclic:" + std::to_string(n);
  // Read as the representation ring of C_n: every basis element is a
  // one-dimensional character, so psi_d(g) = g^d and lambda_t(g) = 1 + t g.
  for (int d = 1; d <= 12; ++d) {
    std::vector<RingElement> images;
    for (int i = 0; i < n; ++i) images.push_back(RingElement::basis((i * d) % n));
    r.set_adams(d, images);
  }
  std::vector<std::vector<RingElement>> lam(n, std::vector<RingElement>(9));
  for (int i = 0; i < n; ++i) {
    lam[i][0] = RingElement::basis(0);
    lam[i][1] = RingElement::basis(i);
  }
  r.set_lambda(lam);
  return r;
}

BaseRing builtin_matrix_ring(int n) {
  if (n < 1) throw DomainError("matrix size must be positive");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) names.push_back("E" + std::to_string(i) + std::to_string(j));
  const int m = n * n;
  std::vector<std::vector<RingElement>> table(m, std::vector<RingElement>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j == k) table[i * n + j][k * n + l] = RingElement::basis(i * n + l);
  RingElement unit;
  for (int i = 0; i < n; ++i) unit.add(i * n + i, 1);
  BaseRing r(names, table, unit);
  r.name = "matrix:" + std::to_string(n);
  return r;
}

BaseRing builtin_quadratic(int a, int b) {
  std::vector<std::vector<RingElement>> table(2, std::vector<RingElement>(2));
  table[0][0] = RingElement::basis(0);
  table[0][1] = table[1][0] = RingElement::basis(1);
  table[1][1] = RingElement::basis(0, b) + RingElement::basis(1, a);
  BaseRing r({"1", "x"}, table, RingElement::basis(0));
  r.name = "quadratic:" + std::to_string(a) + "," + std::to_string(b);
  return r;
}

BaseRing builtin(const std::string& name) {
  auto suffix_int = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      return std::stoi(name.substr(prefix.size()));
    } catch (const std::exception&) {
      throw ParseError("bad builtin ring parameter in '" + name + "'");
    }
  };
  if (name == "integers") return builtin_integers();
  if (name == "zc2") return builtin_cyclic_group(2);
  if (name == "mat2") return builtin_matrix_ring(2);
  if (name == "golden") {
    BaseRing r = builtin_quadratic(1, 1);
    r.name = "golden";
    return r;
  }
  if (auto n = suffix_int("cyclic:")) return builtin_cyclic_group(*n);
  if (auto n = suffix_int("matrix:")) return builtin_matrix_ring(*n);
  throw ParseError("unknown builtin ring '" + name + "'");
}

namespace {

RingElement element_from_json(const BaseRing& ring, const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) return ring.parse(j.get<std::string>());
  if (!j.is_object()) throw ParseError(where + ": expected an object of label: integer pairs");
  RingElement r;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_integer()) throw ParseError(where + ": coefficient of '" + k + "' is not an integer");
    r.add(ring.index_of(k), Integer(v.get<long>()));
  }
  return r;
}

}  // namespace

BaseRing parse_ring_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("ring config is not valid JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("basis") || !j.contains("mult"))
      throw ParseError("ring config needs 'basis' and 'mult'");
    auto labels = j.at("basis").get<std::vector<std::string>>();
    const int n = static_cast<int>(labels.size());
    // A label-only ring gives us the element parser for the table entries.
    std::vector<std::vector<RingElement>> empty(n, std::vector<RingElement>(n));
    BaseRing shell(labels, empty, RingElement());
    std::vector<std::vector<std::optional<RingElement>>> table(n, std::vector<std::optional<RingElement>>(n));
    for (const auto& entry : j.at("mult")) {
      int l = shell.index_of(entry.at("left").get<std::string>());
      int r = shell.index_of(entry.at("right").get<std::string>());
      if (table[l][r]) throw ParseError("mult: product " + labels[l] + "*" + labels[r] + " given twice");
      table[l][r] = element_from_json(shell, entry.at("out"), "mult " + labels[l] + "*" + labels[r]);
    }
    std::vector<std::vector<RingElement>> full(n, std::vector<RingElement>(n));
    for (int l = 0; l < n; ++l)
      for (int r = 0; r < n; ++r) {
        if (!table[l][r]) throw ParseError("mult: missing product " + labels[l] + "*" + labels[r]);
        full[l][r] = *table[l][r];
      }
    std::optional<RingElement> unit;
    if (j.contains("unit")) unit = element_from_json(shell, j.at("unit"), "unit");
    BaseRing ring(labels, full, unit);
    ring.name = j.value("name", std::string("config"));
    if (j.contains("adams")) {
      for (const auto& [dkey, images] : j.at("adams").items()) {
        int d = std::stoi(dkey);
        std::vector<RingElement> imgs(n);
        std::vector<bool> seen(n, false);
        for (const auto& [label, img] : images.items()) {
          int u = ring.index_of(label);
          imgs[u] = element_from_json(ring, img, "adams " + dkey);
          seen[u] = true;
        }
        for (int u = 0; u < n; ++u)
          if (!seen[u]) throw ParseError("adams " + dkey + ": missing image of " + labels[u]);
        ring.set_adams(d, imgs);
      }
    }
    if (j.contains("lambda")) {
      int rmax = j.value("lambda_max", 0);
      for (const auto& [label, rows] : j.at("lambda").items())
        for (const auto& [rkey, v] : rows.items()) rmax = std::max(rmax, std::stoi(rkey));
      rmax = std::max(rmax, 1);
      std::vector<std::vector<RingElement>> lam(n, std::vector<RingElement>(rmax + 1));
      std::vector<std::vector<bool>> seen(n, std::vector<bool>(rmax + 1, false));
      for (int u = 0; u < n; ++u) {
        lam[u][0] = ring.unit();
        lam[u][1] = RingElement::basis(u);
        seen[u][0] = seen[u][1] = true;
      }
      for (const auto& [label, rows] : j.at("lambda").items()) {
        int u = ring.index_of(label);
        for (const auto& [rkey, v] : rows.items()) {
          int r = std::stoi(rkey);
          if (r < 0) throw ParseError("lambda: negative index");
          lam[u][r] = element_from_json(ring, v, "lambda " + label + " " + rkey);
          seen[u][r] = true;
        }
      }
      for (int u = 0; u < n; ++u)
        for (int r = 2; r <= rmax; ++r)
          if (!seen[u][r])
            throw ParseError("lambda: missing lambda^" + std::to_string(r) + "(" + labels[u] + ")");
      ring.set_lambda(lam);
    }
    return ring;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ring config: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed ring config: non-numeric index");
  }
}

BaseRing load_ring(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) return builtin(source.substr(8));
  std::ifstream in(source);
  if (!in) throw ParseError("cannot read ring config '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ring_config(buf.str());
}

BaseRing rebase(const BaseRing& ring, std::vector<std::string> labels, const std::vector<RingElement>& new_basis) {
  const int n = ring.rank();
  if (static_cast<int>(new_basis.size()) != n || static_cast<int>(labels.size()) != n)
    throw DomainError("rebase: new basis must have the same size");
  // Columns of m are the new basis vectors in old coordinates.
  Matrix m(n, std::vector<Rational>(n, 0));
  for (int j = 0; j < n; ++j)
    for (const auto& [i, c] : new_basis[j].coeffs()) m[i][j] = Rational(c);
  auto inv = invert(m);
  if (!inv) throw DomainError("rebase: transition matrix is singular");
  auto to_new = [&](const RingElement& old) {
    RingElement out;
    for (int i = 0; i < n; ++i) {
      Rational s = 0;
      for (const auto& [k, c] : old.coeffs()) s += (*inv)[i][k] * c;
      if (!is_integer(s)) throw DomainError("rebase: transition matrix is not invertible over Z");
      out.add(i, s.get_num());
    }
    return out;
  };
  std::vector<std::vector<RingElement>> table(n, std::vector<RingElement>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = to_new(ring.multiply(new_basis[a], new_basis[b]));
  BaseRing out(std::move(labels), table, to_new(ring.unit()));
  out.name = ring.name + ":rebased";
  return out;
}

}  // namespace wreath
