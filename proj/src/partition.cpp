#include "wreath/partition.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <numeric>

#include "wreath/errors.hpp"

namespace wreath {

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { canonicalize(); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { canonicalize(); }

Partition Partition::from_multiset(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

void Partition::canonicalize() {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  size_ = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  if (size_ != other.size_) return size_ <=> other.size_;
  // Reverse-lex within a size: [n] comes first.
  return other.parts_ <=> parts_;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  if (p.empty()) return Partition();
  for (int j = 1; j <= p[0]; ++j) {
    int c = 0;
    for (int part : p.parts())
      if (part >= j) ++c;
    out.push_back(c);
  }
  return Partition(std::move(out));
}

Integer z_factor(const Partition& p) {
  Integer z = 1;
  const auto& v = p.parts();
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    int m = static_cast<int>(j - i);
    for (int k = 1; k <= m; ++k) z *= k * v[i];
    i = j;
  }
  return z;
}

int epsilon_sign(const Partition& p) { return (p.size() - p.length()) % 2 == 0 ? 1 : -1; }

Partition pad_first_row(const Partition& p, int n) {
  int first = p.empty() ? 0 : p[0];
  int minimal = p.size() + first;
  if (n < minimal)
    throw DomainError("pad_first_row: n = " + std::to_string(n) + " too small for " + to_string(p) +
                      ", minimal admissible n is " + std::to_string(minimal));
  std::vector<int> parts{n - p.size()};
  parts.insert(parts.end(), p.parts().begin(), p.parts().end());
  return Partition(std::move(parts));
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> out;
  out.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(out), std::greater<>());
  return Partition(std::move(out));
}

namespace {

std::mutex g_char_mutex;
std::map<std::pair<Partition, Partition>, Integer> g_char_cache;

std::mutex g_part_mutex;
std::vector<std::vector<Partition>> g_partitions;

void generate(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    generate(n - k, k, cur, out);
    cur.pop_back();
  }
}

// Remove rim hooks of length mu[0] using beta-numbers, recurse on the rest of mu.
Integer mn_rec(const Partition& lam, const Partition& mu) {
  if (lam.empty()) return 1;
  {
    std::lock_guard lock(g_char_mutex);
    auto it = g_char_cache.find({lam, mu});
    if (it != g_char_cache.end()) return it->second;
  }
  const int k = mu[0];
  Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  const int len = lam.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lam[i] + (len - 1 - i);

  Integer total = 0;
  for (int i = 0; i < len; ++i) {
    int b = beta[i] - k;
    if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > b && x < beta[i]) ++between;
    std::vector<int> nb = beta;
    nb[i] = b;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts(len);
    for (int j = 0; j < len; ++j) parts[j] = nb[j] - (len - 1 - j);
    Integer sub = mn_rec(Partition(std::move(parts)), rest);
    if (between % 2) total -= sub;
    else total += sub;
  }
  std::lock_guard lock(g_char_mutex);
  g_char_cache.emplace(std::make_pair(lam, mu), total);
  return total;
}

}  // namespace

Integer mn_character(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size())
    throw DomainError("mn_character: |lambda| = " + std::to_string(lam.size()) +
                      " but |mu| = " + std::to_string(mu.size()));
  return mn_rec(lam, mu);
}

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of: negative size");
  std::lock_guard lock(g_part_mutex);
  while (static_cast<int>(g_partitions.size()) <= n) {
    int m = static_cast<int>(g_partitions.size());
    std::vector<Partition> out;
    std::vector<int> cur;
    generate(m, m, cur, out);
    g_partitions.push_back(std::move(out));
  }
  return g_partitions[n];
}

std::vector<Partition> enumerate_partitions(int n) { return partitions_of(n); }

std::string to_string(const Partition& p) {
  std::string s = "[";
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

Multipartition::Multipartition(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (e.first < 0) throw DomainError("multipartition label index must be nonnegative");
    if (!entries_.empty() && entries_.back().first == e.first)
      throw DomainError("multipartition has a repeated label");
    if (e.second.empty()) continue;
    total_ += e.second.size();
    entries_.push_back(std::move(e));
  }
}

Multipartition Multipartition::single(int label, Partition p) {
  return Multipartition({{label, std::move(p)}});
}

const Partition& Multipartition::at(int label) const {
  static const Partition kEmpty;
  for (const auto& e : entries_)
    if (e.first == label) return e.second;
  return kEmpty;
}

Multipartition Multipartition::with(int label, Partition p) const {
  std::vector<Entry> out;
  for (const auto& e : entries_)
    if (e.first != label) out.push_back(e);
  out.emplace_back(label, std::move(p));
  return Multipartition(std::move(out));
}

std::strong_ordering Multipartition::operator<=>(const Multipartition& other) const {
  if (total_ != other.total_) return total_ <=> other.total_;
  // Walk the union of labels; the first label with different size decides,
  // the side carrying more boxes there comes first.
  auto walk_sizes = [&]() -> std::strong_ordering {
    std::size_t i = 0, j = 0;
    while (i < entries_.size() || j < other.entries_.size()) {
      int la = i < entries_.size() ? entries_[i].first : INT_MAX;
      int lb = j < other.entries_.size() ? other.entries_[j].first : INT_MAX;
      int label = std::min(la, lb);
      int sa = la == label ? entries_[i].second.size() : 0;
      int sb = lb == label ? other.entries_[j].second.size() : 0;
      if (sa != sb) return sb <=> sa;
      if (la == label) ++i;
      if (lb == label) ++j;
    }
    return std::strong_ordering::equal;
  };
  auto c = walk_sizes();
  if (c != std::strong_ordering::equal) return c;
  // Same label support and sizes from here on.
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto pc = entries_[i].second <=> other.entries_[i].second;
    if (pc != std::strong_ordering::equal) return pc;
  }
  return std::strong_ordering::equal;
}

Multipartition merge(const Multipartition& a, const Multipartition& b) {
  std::vector<Multipartition::Entry> out;
  std::size_t i = 0, j = 0;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      out.push_back(ea[i++]);
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      out.push_back(eb[j++]);
    } else {
      out.emplace_back(ea[i].first, merge(ea[i].second, eb[j].second));
      ++i;
      ++j;
    }
  }
  return Multipartition(std::move(out));
}

namespace {

void distribute(int nlabels, int label, int remaining, std::vector<Multipartition::Entry>& cur,
                std::vector<Multipartition>& out) {
  if (label == nlabels - 1) {
    for (const auto& p : partitions_of(remaining)) {
      auto entries = cur;
      entries.emplace_back(label, p);
      out.emplace_back(std::move(entries));
    }
    return;
  }
  for (int s = 0; s <= remaining; ++s) {
    for (const auto& p : partitions_of(s)) {
      cur.emplace_back(label, p);
      distribute(nlabels, label + 1, remaining - s, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Multipartition> enumerate_multipartitions(int nlabels, int n) {
  std::vector<Multipartition> out;
  if (nlabels <= 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<Multipartition::Entry> cur;
  distribute(nlabels, 0, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multipartition> enumerate_multipartitions_upto(int nlabels, int max_size) {
  std::vector<Multipartition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = enumerate_multipartitions(nlabels, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string to_string(const Multipartition& m, const std::vector<std::string>& labels) {
  std::string s = "{";
  bool first = true;
  for (const auto& [label, part] : m.entries()) {
    if (!first) s += ";";
    first = false;
    s += label < static_cast<int>(labels.size()) ? labels[label] : "#" + std::to_string(label);
    s += ":" + to_string(part);
  }
  return s + "}";
}

}  // namespace wreath
