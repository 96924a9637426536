#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wreath/rational.hpp"

namespace wreath {

/// Integer partition with strictly positive, weakly decreasing parts.
class Partition {
 public:
  Partition() = default;
  // Parts must be weakly decreasing; trailing zeros are dropped.
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);
  // Any order, zeros allowed; the parts are sorted.
  static Partition from_multiset(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  // Multiplicity of part value i.
  int multiplicity(int i) const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  // Graded reverse-lexicographic: smaller size first, then larger parts first.
  std::strong_ordering operator<=>(const Partition& other) const;

 private:
  void canonicalize();
  std::vector<int> parts_;
  int size_ = 0;
};

Partition conjugate(const Partition& p);
Integer z_factor(const Partition& p);
int epsilon_sign(const Partition& p);
// lambda[n] = (n - |lambda|, lambda_1, lambda_2, ...); needs n >= |lambda| + lambda_1.
Partition pad_first_row(const Partition& p, int n);
// Union of parts, as used for power-sum products p_a p_b = p_{a u b}.
Partition merge(const Partition& a, const Partition& b);

/// Symmetric-group character value, Murnaghan-Nakayama with a shared memo.
Integer mn_character(const Partition& lam, const Partition& mu);

// All partitions of n in graded reverse-lex order ([n] first, [1^n] last).
const std::vector<Partition>& partitions_of(int n);
std::vector<Partition> enumerate_partitions(int n);

std::string to_string(const Partition& p);

/// Finite-support assignment label index -> Partition, empty partitions absent.
class Multipartition {
 public:
  using Entry = std::pair<int, Partition>;

  Multipartition() = default;
  explicit Multipartition(std::vector<Entry> entries);
  static Multipartition single(int label, Partition p);

  const std::vector<Entry>& entries() const { return entries_; }
  const Partition& at(int label) const;
  int size_at(int label) const { return at(label).size(); }
  int total_size() const { return total_; }
  bool empty() const { return entries_.empty(); }
  Multipartition with(int label, Partition p) const;

  bool operator==(const Multipartition& other) const { return entries_ == other.entries_; }
  // Total size, then per-label sizes with earlier labels heavier, then
  // per-label partition order.
  std::strong_ordering operator<=>(const Multipartition& other) const;

 private:
  std::vector<Entry> entries_;
  int total_ = 0;
};

// Label-wise union of parts.
Multipartition merge(const Multipartition& a, const Multipartition& b);

// All multipartitions over labels 0..nlabels-1 with total size n, sorted.
std::vector<Multipartition> enumerate_multipartitions(int nlabels, int n);
// Same, for every total size 0..max_size.
std::vector<Multipartition> enumerate_multipartitions_upto(int nlabels, int max_size);

std::string to_string(const Multipartition& m, const std::vector<std::string>& labels);

}  // namespace wreath
