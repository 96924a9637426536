#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wreath/rational.hpp"

namespace wreath {

using Matrix = std::vector<std::vector<Rational>>;

// Some solution of A x = b, or nothing when the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(Matrix a, std::vector<Rational> b);
std::optional<Matrix> invert(const Matrix& a);

/// Row space of sparse vectors kept in echelon form. Pivots are the smallest
/// keys, so elimination only ever touches keys at or after the pivot.
template <class Key>
class RowSpace {
 public:
  using Vector = std::map<Key, Rational>;

  // Residual of v modulo the span.
  Vector reduce(Vector v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      Key k = it->first;
      Rational factor = it->second;  // pivot entries are normalised to 1
      for (const auto& [rk, rc] : row->second) {
        auto [pos, inserted] = v.emplace(rk, -factor * rc);
        if (!inserted) {
          pos->second -= factor * rc;
          if (pos->second == 0) v.erase(pos);
        }
      }
      it = v.upper_bound(k);
    }
    return v;
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }

  // Returns true when v was independent of the current span.
  bool insert(const Vector& v) {
    Vector r = reduce(v);
    if (r.empty()) return false;
    Rational lead = r.begin()->second;
    for (auto& [k, c] : r) c /= lead;
    rows_.emplace(r.begin()->first, std::move(r));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<Key, Vector>& rows() const { return rows_; }

 private:
  std::map<Key, Vector> rows_;
};

}  // namespace wreath
