#include "wreath/symfun.hpp"

#include <mutex>

#include "wreath/errors.hpp"
#include "wreath/format.hpp"

namespace wreath {

namespace {

void require_compatible(const SymSeries& a, const SymSeries& b, const char* what) {
  if (a.labels() != b.labels()) throw DomainError(std::string(what) + ": label sets differ");
  if (a.truncation() != b.truncation())
    throw DomainError(std::string(what) + ": truncation degrees differ (" +
                      std::to_string(a.truncation()) + " vs " + std::to_string(b.truncation()) + ")");
}

// Expands a product over labels of per-label linear combinations.
template <class Row, class Emit>
void expand_rows(const std::vector<std::pair<int, const Row*>>& rows, std::size_t i,
                 std::vector<Multipartition::Entry>& cur, const Rational& coeff, Emit& emit) {
  if (i == rows.size()) {
    emit(Multipartition(cur), coeff);
    return;
  }
  for (const auto& [part, c] : *rows[i].second) {
    cur.emplace_back(rows[i].first, part);
    expand_rows(rows, i + 1, cur, coeff * c, emit);
    cur.pop_back();
  }
}

std::mutex g_row_mutex;
std::map<Partition, std::vector<std::pair<Partition, Rational>>> g_schur_rows;
std::map<Partition, std::vector<std::pair<Partition, Integer>>> g_power_rows;

std::mutex g_lr_mutex;
std::map<std::tuple<Partition, Partition, Partition>, Integer> g_lr_cache;

}  // namespace

SymSeries::SymSeries(std::vector<std::string> labels, SymBasis basis, int truncation)
    : labels_(std::move(labels)), basis_(basis), truncation_(truncation) {
  if (truncation < 0) throw DomainError("truncation degree must be nonnegative");
}

Rational SymSeries::coefficient(const Multipartition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymSeries::add(const Multipartition& key, const Rational& c) {
  if (c == 0 || key.total_size() > truncation_) return;
  if (!key.empty() && key.entries().back().first >= nlabels())
    throw DomainError("series key uses a label outside the label set");
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SymSeries::is_integral() const {
  for (const auto& [k, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

SymSeries SymSeries::part_of_degree(int d) const {
  SymSeries out(labels_, basis_, truncation_);
  for (const auto& [k, c] : terms_)
    if (k.total_size() == d) out.terms_.emplace(k, c);
  return out;
}

SymSeries SymSeries::with_truncation(int d) const {
  SymSeries out(labels_, basis_, d);
  for (const auto& [k, c] : terms_) out.add(k, c);
  return out;
}

SymSeries& SymSeries::operator+=(const SymSeries& other) {
  require_compatible(*this, other, "addition");
  if (basis_ != other.basis_) throw DomainError("addition: bases differ");
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

SymSeries& SymSeries::operator-=(const SymSeries& other) {
  require_compatible(*this, other, "subtraction");
  if (basis_ != other.basis_) throw DomainError("subtraction: bases differ");
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

SymSeries& SymSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

bool SymSeries::operator==(const SymSeries& other) const {
  return labels_ == other.labels_ && basis_ == other.basis_ && truncation_ == other.truncation_ &&
         terms_ == other.terms_;
}

SymSeries operator+(SymSeries a, const SymSeries& b) { return a += b; }
SymSeries operator-(SymSeries a, const SymSeries& b) { return a -= b; }
SymSeries operator*(SymSeries a, const Rational& c) { return a *= c; }
SymSeries operator*(const SymSeries& a, const SymSeries& b) { return multiply(a, b); }

SymSeries sym_one(const std::vector<std::string>& labels, SymBasis basis, int truncation) {
  SymSeries s(labels, basis, truncation);
  s.add(Multipartition(), 1);
  return s;
}

SymSeries schur_term(const std::vector<std::string>& labels, int truncation, const Multipartition& key) {
  SymSeries s(labels, SymBasis::Schur, truncation);
  s.add(key, 1);
  return s;
}

SymSeries power_term(const std::vector<std::string>& labels, int truncation, const Multipartition& key) {
  SymSeries s(labels, SymBasis::PowerSum, truncation);
  s.add(key, 1);
  return s;
}

SymSeries elementary(const std::vector<std::string>& labels, int truncation, int label, int n) {
  SymSeries s(labels, SymBasis::PowerSum, truncation);
  for (const auto& mu : partitions_of(n))
    s.add(Multipartition::single(label, mu), frac(epsilon_sign(mu), z_factor(mu)));
  return s;
}

SymSeries complete(const std::vector<std::string>& labels, int truncation, int label, int n) {
  SymSeries s(labels, SymBasis::PowerSum, truncation);
  for (const auto& mu : partitions_of(n)) s.add(Multipartition::single(label, mu), frac(1, z_factor(mu)));
  return s;
}

SymSeries power_sum(const std::vector<std::string>& labels, int truncation, int label, int n) {
  return power_term(labels, truncation, Multipartition::single(label, Partition{n}));
}

const std::vector<std::pair<Partition, Rational>>& schur_in_powers(const Partition& lam) {
  {
    std::lock_guard lock(g_row_mutex);
    auto it = g_schur_rows.find(lam);
    if (it != g_schur_rows.end()) return it->second;
  }
  std::vector<std::pair<Partition, Rational>> row;
  for (const auto& mu : partitions_of(lam.size())) {
    Integer chi = mn_character(lam, mu);
    if (chi != 0) {
      Rational q(chi, z_factor(mu));
      q.canonicalize();
      row.emplace_back(mu, q);
    }
  }
  std::lock_guard lock(g_row_mutex);
  return g_schur_rows.emplace(lam, std::move(row)).first->second;
}

const std::vector<std::pair<Partition, Integer>>& power_in_schurs(const Partition& mu) {
  {
    std::lock_guard lock(g_row_mutex);
    auto it = g_power_rows.find(mu);
    if (it != g_power_rows.end()) return it->second;
  }
  std::vector<std::pair<Partition, Integer>> row;
  for (const auto& lam : partitions_of(mu.size())) {
    Integer chi = mn_character(lam, mu);
    if (chi != 0) row.emplace_back(lam, chi);
  }
  std::lock_guard lock(g_row_mutex);
  return g_power_rows.emplace(mu, std::move(row)).first->second;
}

SymSeries schur_to_power(const SymSeries& s) {
  if (s.basis() != SymBasis::Schur) throw DomainError("schur_to_power: series is not in the Schur basis");
  SymSeries out(s.labels(), SymBasis::PowerSum, s.truncation());
  auto emit = [&](const Multipartition& k, const Rational& c) { out.add(k, c); };
  for (const auto& [key, c] : s.terms()) {
    std::vector<std::pair<int, const std::vector<std::pair<Partition, Rational>>*>> rows;
    for (const auto& [label, part] : key.entries()) rows.emplace_back(label, &schur_in_powers(part));
    std::vector<Multipartition::Entry> cur;
    expand_rows(rows, 0, cur, c, emit);
  }
  return out;
}

SymSeries power_to_schur(const SymSeries& s) {
  if (s.basis() != SymBasis::PowerSum)
    throw DomainError("power_to_schur: series is not in the power-sum basis");
  SymSeries out(s.labels(), SymBasis::Schur, s.truncation());
  auto emit = [&](const Multipartition& k, const Rational& c) { out.add(k, c); };
  for (const auto& [key, c] : s.terms()) {
    std::vector<std::pair<int, const std::vector<std::pair<Partition, Integer>>*>> rows;
    for (const auto& [label, part] : key.entries()) rows.emplace_back(label, &power_in_schurs(part));
    std::vector<Multipartition::Entry> cur;
    expand_rows(rows, 0, cur, c, emit);
  }
  return out;
}

SymSeries to_basis(const SymSeries& s, SymBasis basis) {
  if (s.basis() == basis) return s;
  return basis == SymBasis::Schur ? power_to_schur(s) : schur_to_power(s);
}

SymSeries multiply(const SymSeries& a, const SymSeries& b) {
  require_compatible(a, b, "multiply");
  if (a.basis() != b.basis()) throw DomainError("multiply: bases differ");
  if (a.basis() == SymBasis::Schur) return power_to_schur(multiply(schur_to_power(a), schur_to_power(b)));
  SymSeries out(a.labels(), SymBasis::PowerSum, a.truncation());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      if (ka.total_size() + kb.total_size() <= a.truncation()) out.add(merge(ka, kb), ca * cb);
  return out;
}

SymSeries sym_exp(const SymSeries& y) {
  SymSeries p = to_basis(y, SymBasis::PowerSum);
  if (p.coefficient(Multipartition()) != 0) throw DomainError("sym_exp: argument has a constant term");
  SymSeries result = sym_one(p.labels(), SymBasis::PowerSum, p.truncation());
  SymSeries power = result;
  for (int k = 1; k <= p.truncation(); ++k) {
    power = multiply(power, p) * Rational(1, k);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

SymSeries sym_log(const SymSeries& x) {
  SymSeries p = to_basis(x, SymBasis::PowerSum);
  if (p.coefficient(Multipartition()) != 1) throw DomainError("sym_log: constant term must be 1");
  SymSeries y = p - sym_one(p.labels(), SymBasis::PowerSum, p.truncation());
  SymSeries result(p.labels(), SymBasis::PowerSum, p.truncation());
  SymSeries power = sym_one(p.labels(), SymBasis::PowerSum, p.truncation());
  for (int k = 1; k <= p.truncation(); ++k) {
    power = multiply(power, y);
    if (power.is_zero()) break;
    result += power * Rational(k % 2 ? 1 : -1, k);
  }
  return result;
}

Integer lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lam) {
  if (mu.size() + nu.size() != lam.size()) return 0;
  auto key = std::make_tuple(mu, nu, lam);
  {
    std::lock_guard lock(g_lr_mutex);
    auto it = g_lr_cache.find(key);
    if (it != g_lr_cache.end()) return it->second;
  }
  // <s_mu s_nu, s_lam> through power sums.
  Rational total = 0;
  for (const auto& [alpha, ca] : schur_in_powers(mu))
    for (const auto& [beta, cb] : schur_in_powers(nu)) total += ca * cb * mn_character(lam, merge(alpha, beta));
  if (!is_integer(total)) throw IntegralityError("lr_coefficient: non-integral result");
  Integer value = total.get_num();
  std::lock_guard lock(g_lr_mutex);
  g_lr_cache.emplace(key, value);
  return value;
}

Integer kronecker_coefficient(const Partition& mu, const Partition& nu, const Partition& lam) {
  if (mu.size() != nu.size() || nu.size() != lam.size()) return 0;
  Rational total = 0;
  for (const auto& rho : partitions_of(lam.size()))
    total += Rational(mn_character(mu, rho) * mn_character(nu, rho) * mn_character(lam, rho), z_factor(rho));
  total.canonicalize();
  if (!is_integer(total)) throw IntegralityError("kronecker_coefficient: non-integral result");
  return total.get_num();
}

SymSeries substitute_variable_sets(const SymSeries& f, const SubstitutionPlan& plan,
                                   const std::vector<std::string>& out_labels, int out_truncation) {
  if (static_cast<int>(plan.size()) != f.nlabels())
    throw DomainError("substitute_variable_sets: plan must cover every input label");
  SymSeries p = to_basis(f, SymBasis::PowerSum);
  using Acc = std::map<Multipartition, Rational>;
  Acc total;
  for (const auto& [key, c] : p.terms()) {
    Acc acc{{Multipartition(), c}};
    for (const auto& [label, part] : key.entries()) {
      const auto& targets = plan[label];
      for (int l : part.parts()) {
        // Image of p_l(x_label) as a list of power-sum keys.
        std::vector<std::pair<Multipartition, Rational>> image;
        for (const auto& t : targets) {
          if (t.multiplicity == 0) continue;
          std::map<int, std::vector<int>> bylabel;
          for (int o : t.monomial) {
            if (o < 0 || o >= static_cast<int>(out_labels.size()))
              throw DomainError("substitute_variable_sets: target label out of range");
            bylabel[o].push_back(l);
          }
          std::vector<Multipartition::Entry> entries;
          for (auto& [o, parts] : bylabel) entries.emplace_back(o, Partition(parts));
          image.emplace_back(Multipartition(std::move(entries)), Rational(t.multiplicity));
        }
        Acc next;
        for (const auto& [ka, ca] : acc)
          for (const auto& [kb, cb] : image) {
            if (ka.total_size() + kb.total_size() > out_truncation) continue;
            Rational v = ca * cb;
            auto [it, ins] = next.emplace(merge(ka, kb), v);
            if (!ins) it->second += v;
          }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        acc = std::move(next);
        if (acc.empty()) break;
      }
      if (acc.empty()) break;
    }
    for (const auto& [k, v] : acc) {
      auto [it, ins] = total.emplace(k, v);
      if (!ins) it->second += v;
    }
  }
  SymSeries out(out_labels, SymBasis::PowerSum, out_truncation);
  for (const auto& [k, v] : total) out.add(k, v);
  return out;
}

SymSeries omega(const SymSeries& f, int label) {
  SymSeries out(f.labels(), f.basis(), f.truncation());
  for (const auto& [key, c] : f.terms()) {
    const Partition& part = key.at(label);
    if (f.basis() == SymBasis::Schur) out.add(key.with(label, conjugate(part)), c);
    else out.add(key, c * epsilon_sign(part));
  }
  return out;
}

std::map<int, SymSeries> evaluate_geometric(const SymSeries& f, int label, int r) {
  if (r < 1) throw DomainError("evaluate_geometric: exponent must be positive");
  SymSeries p = to_basis(f, SymBasis::PowerSum);
  std::map<int, SymSeries> out;
  for (const auto& [key, c] : p.terms()) {
    int power = r * key.at(label).size();
    auto it = out.try_emplace(power, p.labels(), SymBasis::PowerSum, p.truncation()).first;
    it->second.add(key.with(label, Partition()), c);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Rational hall_pairing(const SymSeries& a, const SymSeries& b) {
  require_compatible(a, b, "hall_pairing");
  if (a.basis() == SymBasis::Schur && b.basis() == SymBasis::Schur) {
    Rational total = 0;
    for (const auto& [k, c] : a.terms()) total += c * b.coefficient(k);
    return total;
  }
  SymSeries pa = to_basis(a, SymBasis::PowerSum);
  SymSeries pb = to_basis(b, SymBasis::PowerSum);
  Rational total = 0;
  for (const auto& [k, c] : pa.terms()) {
    auto it = pb.terms().find(k);
    if (it == pb.terms().end()) continue;
    Integer z = 1;
    for (const auto& e : k.entries()) z *= z_factor(e.second);
    total += c * it->second * z;
  }
  return total;
}

SymSeries cauchy_kernel(int truncation) {
  std::vector<std::string> labels{"x", "y"};
  SymSeries arg(labels, SymBasis::PowerSum, truncation);
  for (int l = 1; 2 * l <= truncation; ++l)
    arg.add(Multipartition({{0, Partition{l}}, {1, Partition{l}}}), Rational(1, l));
  return sym_exp(arg);
}

std::string to_string(const SymSeries& s) {
  const std::string tag = s.basis() == SymBasis::Schur ? "s" : "p";
  std::vector<std::pair<Rational, std::string>> items;
  for (const auto& [k, c] : s.terms()) items.emplace_back(c, tag + to_string(k, s.labels()));
  return format_linear_combination(items);
}

}  // namespace wreath
