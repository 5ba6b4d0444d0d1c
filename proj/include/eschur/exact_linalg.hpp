#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eschur {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Row-major dense matrix over an exact scalar type.
template <typename T>
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw std::invalid_argument("matrix difference: dimension mismatch");
    }
    DenseMatrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T(0); });
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename To, typename From>
DenseMatrix<To> matrix_cast(const DenseMatrix<From>& m) {
  DenseMatrix<To> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = To(m(r, c));
  }
  return out;
}

/// Determinant by Bareiss fraction-free elimination; every division is exact.
inline Integer bareiss_determinant(DenseMatrix<Integer> m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Integer(1);
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Integer(0);
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Sparse integer row: (column, coefficient) pairs with strictly increasing
/// columns and no zero coefficients.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

namespace detail {

// Sorts by column, merges repeated columns and drops zeros.
inline SparseRow canonical(SparseRow row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& [col, v] : row) {
    if (!out.empty() && out.back().first == col) {
      out.back().second += v;
      if (out.back().second == 0) out.pop_back();
    } else if (v != 0) {
      out.emplace_back(col, std::move(v));
    }
  }
  return out;
}

// Divides out the content and makes the leading coefficient positive.
inline void normalize(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [col, v] : row) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [col, v] : row) v /= g;
  }
}

// a*x - b*y, merged over columns, zeros dropped.
inline SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b,
                         const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t p = 0;
  std::size_t q = 0;
  while (p < x.size() || q < y.size()) {
    if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
      out.emplace_back(x[p].first, a * x[p].second);
      ++p;
    } else if (p == x.size() || y[q].first < x[p].first) {
      out.emplace_back(y[q].first, -b * y[q].second);
      ++q;
    } else {
      Integer v = a * x[p].second - b * y[q].second;
      if (v != 0) out.emplace_back(x[p].first, std::move(v));
      ++p;
      ++q;
    }
  }
  return out;
}

}  // namespace detail

/// Row echelon form over the integers built incrementally, one equation at a
/// time, with cross-multiplication instead of division (fraction-free).
class IntegerEchelon {
public:
  explicit IntegerEchelon(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const noexcept { return unknowns_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

  /// Reduces `row` against the pivots found so far and keeps any remainder.
  /// Returns true when the row was independent of the previous ones.
  bool add(SparseRow row) {
    for (const auto& [col, v] : row) {
      if (col >= unknowns_) throw std::out_of_range("equation references unknown column");
    }
    row = detail::canonical(std::move(row));
    detail::normalize(row);
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        pivots_.emplace(row.front().first, std::move(row));
        return true;
      }
      const SparseRow& pivot = it->second;
      const Integer g = boost::multiprecision::gcd(pivot.front().second, row.front().second);
      row = detail::combine(pivot.front().second / g, row, row.front().second / g, pivot);
      detail::normalize(row);
    }
    return false;
  }

  /// Basis of the solution space of the accumulated homogeneous system: one
  /// vector per free column, that column set to 1 and the other free columns 0.
  std::vector<std::vector<Rational>> nullspace() const {
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < unknowns_; ++c) {
      if (!pivots_.contains(c)) free_cols.push_back(c);
    }
    std::vector<std::vector<Rational>> basis;
    basis.reserve(free_cols.size());
    for (std::size_t f : free_cols) {
      std::vector<Rational> x(unknowns_, Rational(0));
      x[f] = 1;
      // Each pivot row only involves columns at or after its pivot.
      for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        const SparseRow& row = it->second;
        Rational acc = 0;
        for (std::size_t k = 1; k < row.size(); ++k) {
          const Rational& xv = x[row[k].first];
          if (xv != 0) acc += Rational(row[k].second) * xv;
        }
        x[it->first] = -acc / Rational(row.front().second);
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

private:
  std::size_t unknowns_;
  std::map<std::size_t, SparseRow> pivots_;
};

/// Exact basis of {x : A x = 0} for the given sparse equations.
inline std::vector<std::vector<Rational>> nullspace(const std::vector<SparseRow>& equations,
                                                    std::size_t unknowns) {
  IntegerEchelon echelon(unknowns);
  for (const SparseRow& eq : equations) echelon.add(eq);
  return echelon.nullspace();
}

}  // namespace eschur
