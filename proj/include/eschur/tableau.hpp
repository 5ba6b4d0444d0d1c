#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "eschur/composition.hpp"

namespace eschur {

/// A box of a composition diagram in French notation: row 1 is the bottom row.
struct Box {
  int row = 0;
  int col = 0;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// A bijective filling of D(shape) with 1..n whose rows increase left to right.
/// Columns are unconstrained; standard extended tableaux are the subclass whose
/// columns also increase bottom to top.
class Tableau {
public:
  /// Rows are given bottom-up. Throws std::invalid_argument unless the rows
  /// match the shape, form a bijection onto 1..n and increase along rows.
  Tableau(Composition shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() != shape_.length()) {
      throw std::invalid_argument("tableau: row count does not match shape");
    }
    const int n = shape_.weight();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (static_cast<int>(rows_[r].size()) != shape_.parts()[r]) {
        throw std::invalid_argument("tableau: row " + std::to_string(r + 1) +
                                    " does not match shape");
      }
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        const int v = rows_[r][c];
        if (v < 1 || v > n || seen[v]) {
          throw std::invalid_argument("tableau: entries must be a bijection onto 1..n");
        }
        seen[v] = true;
        if (c > 0 && rows_[r][c - 1] >= v) {
          throw std::invalid_argument("tableau: rows must increase left to right");
        }
      }
    }
    index_positions();
  }

  const Composition& shape() const noexcept { return shape_; }
  /// Bottom-up rows; rows()[0] is row 1.
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int size() const noexcept { return static_cast<int>(where_.size()) - 1; }

  int at(Box b) const { return rows_.at(b.row - 1).at(b.col - 1); }

  /// Location of entry v in 1..n.
  Box position(int v) const { return where_.at(v); }

  /// Entries read row by row, bottom row first.
  std::vector<int> reading_word() const {
    std::vector<int> word;
    word.reserve(where_.size() - 1);
    for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
    return word;
  }

  /// s_i(T): the filling with entries i and i+1 exchanged. The result is only
  /// guaranteed row-increasing when i and i+1 lie in different rows.
  Tableau swapped(int i) const {
    Tableau out = *this;
    const Box a = where_.at(i);
    const Box b = where_.at(i + 1);
    out.rows_[a.row - 1][a.col - 1] = i + 1;
    out.rows_[b.row - 1][b.col - 1] = i;
    out.where_[i] = b;
    out.where_[i + 1] = a;
    return out;
  }

  // Ordering is by shape, then lexicographic on the bottom-up reading word.
  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.shape_ == b.shape_ && a.rows_ == b.rows_;
  }
  friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
    if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

private:
  void index_positions() {
    where_.assign(static_cast<std::size_t>(shape_.weight()) + 1, Box{});
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        where_[rows_[r][c]] = Box{static_cast<int>(r) + 1, static_cast<int>(c) + 1};
      }
    }
  }

  Composition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<Box> where_;  // where_[v] = box holding v; index 0 unused
};

/// d_T: entry j is the sum of all entries in rows 1..j.
struct RowSumVector {
  std::vector<long long> sums;
  friend bool operator==(const RowSumVector&, const RowSumVector&) = default;
  friend auto operator<=>(const RowSumVector&, const RowSumVector&) = default;

  /// Entrywise comparison: every entry of *this is >= the matching entry of other.
  bool dominates(const RowSumVector& other) const {
    if (sums.size() != other.sums.size()) return false;
    for (std::size_t j = 0; j < sums.size(); ++j) {
      if (sums[j] < other.sums[j]) return false;
    }
    return true;
  }
};

/// Column-strictness: every column of the left-justified diagram increases
/// bottom to top, including across rows too short to reach that column.
inline bool is_standard_extended(const Tableau& t) {
  const auto& rows = t.rows();
  std::vector<int> last_in_column;
  for (const auto& row : rows) {
    if (row.size() > last_in_column.size()) last_in_column.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] <= last_in_column[c]) return false;
      last_in_column[c] = row[c];
    }
  }
  return true;
}

/// Des(T): i is a descent iff i lies weakly to the right of i+1 (column test).
inline Composition descent_composition(const Tableau& t) {
  const int n = t.size();
  std::vector<int> descents;
  for (int i = 1; i < n; ++i) {
    if (t.position(i).col >= t.position(i + 1).col) descents.push_back(i);
  }
  return composition_of_subset(DescentSubset(n, std::move(descents)));
}

/// Row i holds alpha_1 + ... + alpha_{i-1} + 1 through alpha_1 + ... + alpha_i.
inline Tableau super_standard(const Composition& alpha) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int part : alpha.parts()) {
    std::vector<int> row(static_cast<std::size_t>(part));
    for (int& v : row) v = next++;
    rows.push_back(std::move(row));
  }
  return Tableau(alpha, std::move(rows));
}

inline RowSumVector row_sum_vector(const Tableau& t) {
  RowSumVector d;
  long long running = 0;
  for (const auto& row : t.rows()) {
    for (int v : row) running += v;
    d.sums.push_back(running);
  }
  return d;
}

namespace detail {

// Chooses row r's entries from the unused values as an increasing subset, rows
// bottom-up; combinations come out in lexicographic order, so the tableaux do too.
inline void srit_rec(const Composition& alpha, std::size_t r, std::vector<bool>& used,
                     std::vector<std::vector<int>>& rows, std::vector<Tableau>& out) {
  const int n = alpha.weight();
  if (r == alpha.length()) {
    out.emplace_back(alpha, rows);
    return;
  }
  const int need = alpha.parts()[r];
  std::vector<int>& row = rows[r];
  row.clear();
  auto choose = [&](auto&& self, int from) -> void {
    if (static_cast<int>(row.size()) == need) {
      srit_rec(alpha, r + 1, used, rows, out);
      return;
    }
    for (int v = from; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      row.push_back(v);
      self(self, v + 1);
      row.pop_back();
      used[v] = false;
    }
  };
  choose(choose, 1);
}

// Places 1..n one at a time. Value v may occupy the next free box (r, c) of row r
// only if every box below it in column c is already filled and none above it is.
inline void set_rec(const Composition& alpha, int v, std::vector<int>& filled,
                    std::vector<std::vector<int>>& rows, std::vector<Tableau>& out) {
  const int n = alpha.weight();
  if (v > n) {
    out.emplace_back(alpha, rows);
    return;
  }
  const std::size_t len = alpha.length();
  for (std::size_t r = 0; r < len; ++r) {
    const int c = filled[r];  // 0-based column of the next box in row r
    if (c >= alpha.parts()[r]) continue;
    bool ok = true;
    for (std::size_t below = 0; below < r && ok; ++below) {
      if (alpha.parts()[below] > c && filled[below] <= c) ok = false;
    }
    for (std::size_t above = r + 1; above < len && ok; ++above) {
      if (filled[above] > c) ok = false;
    }
    if (!ok) continue;
    rows[r].push_back(v);
    ++filled[r];
    set_rec(alpha, v + 1, filled, rows, out);
    --filled[r];
    rows[r].pop_back();
  }
}

}  // namespace detail

/// SRIT(alpha), lexicographic on the bottom-up reading word.
inline std::vector<Tableau> enumerate_srit(const Composition& alpha) {
  std::vector<Tableau> out;
  std::vector<bool> used(static_cast<std::size_t>(alpha.weight()) + 1, false);
  std::vector<std::vector<int>> rows(alpha.length());
  detail::srit_rec(alpha, 0, used, rows, out);
  return out;
}

/// SET(alpha), lexicographic on the bottom-up reading word.
inline std::vector<Tableau> enumerate_set(const Composition& alpha) {
  std::vector<Tableau> out;
  std::vector<int> filled(alpha.length(), 0);
  std::vector<std::vector<int>> rows(alpha.length());
  detail::set_rec(alpha, 1, filled, rows, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eschur
