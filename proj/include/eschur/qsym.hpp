#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eschur/composition.hpp"
#include "eschur/exact_linalg.hpp"
#include "eschur/tableau.hpp"

namespace eschur {

enum class Basis { monomial, fundamental };

inline const char* basis_tag(Basis b) { return b == Basis::monomial ? "M" : "F"; }

/// A homogeneous quasisymmetric function of fixed degree, written in the
/// monomial or fundamental basis. Zero coefficients are never stored.
class QSymElement {
public:
  using Terms = std::map<Composition, Integer>;

  QSymElement(int degree, Basis basis) : degree_(degree), basis_(basis) {
    if (degree < 0) throw std::invalid_argument("qsym: negative degree");
  }

  static QSymElement basis_element(Basis basis, const Composition& alpha) {
    QSymElement x(alpha.weight(), basis);
    x.add_term(alpha, 1);
    return x;
  }

  int degree() const noexcept { return degree_; }
  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Composition& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Composition& alpha, const Integer& c) {
    if (alpha.weight() != degree_) {
      throw std::invalid_argument("qsym: term of degree " + std::to_string(alpha.weight()) +
                                  " added to element of degree " + std::to_string(degree_));
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  QSymElement& operator+=(const QSymElement& other) {
    check_compatible(other);
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
    return *this;
  }

  QSymElement& operator-=(const QSymElement& other) {
    check_compatible(other);
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
    return *this;
  }

  friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
  friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }

  friend QSymElement operator*(const Integer& k, QSymElement x) {
    if (k == 0) {
      x.terms_.clear();
      return x;
    }
    for (auto& [alpha, c] : x.terms_) c *= k;
    return x;
  }

  friend bool operator==(const QSymElement&, const QSymElement&) = default;

private:
  void check_compatible(const QSymElement& other) const {
    if (other.degree_ != degree_) throw std::invalid_argument("qsym: mixed-degree sum");
    if (other.basis_ != basis_) throw std::invalid_argument("qsym: mixed-basis sum");
  }

  int degree_;
  Basis basis_;
  Terms terms_;
};

/// F_alpha = sum of M_beta over the refinements beta of alpha, extended linearly.
inline QSymElement fundamental_to_monomial(const QSymElement& x) {
  if (x.basis() != Basis::fundamental) {
    throw std::invalid_argument("fundamental_to_monomial: element is not in the F basis");
  }
  QSymElement out(x.degree(), Basis::monomial);
  for (const auto& [alpha, c] : x.terms()) {
    for (const Composition& beta : refinements(alpha)) out.add_term(beta, c);
  }
  return out;
}

/// Unitriangular solve against the refinement matrix. Taking the shortest
/// remaining composition each round is safe: F_alpha only adds M-terms that
/// are strictly longer than alpha.
inline QSymElement monomial_to_fundamental(const QSymElement& x) {
  if (x.basis() != Basis::monomial) {
    throw std::invalid_argument("monomial_to_fundamental: element is not in the M basis");
  }
  QSymElement out(x.degree(), Basis::fundamental);
  QSymElement residual = x;
  while (!residual.is_zero()) {
    const auto shortest = std::min_element(
        residual.terms().begin(), residual.terms().end(), [](const auto& a, const auto& b) {
          return a.first.length() < b.first.length();
        });
    const Composition alpha = shortest->first;
    const Integer c = shortest->second;
    out.add_term(alpha, c);
    for (const Composition& beta : refinements(alpha)) residual.add_term(beta, -c);
  }
  return out;
}

/// E_alpha = sum over T in SET(alpha) of F_{Des(T)}.
inline QSymElement extended_schur_in_F(const Composition& alpha) {
  QSymElement out(alpha.weight(), Basis::fundamental);
  for (const Tableau& t : enumerate_set(alpha)) out.add_term(descent_composition(t), 1);
  return out;
}

inline QSymElement extended_schur_in_M(const Composition& alpha) {
  return fundamental_to_monomial(extended_schur_in_F(alpha));
}

/// Restriction of a monomial-basis element to the variables x_1..x_k: each
/// M_alpha contributes x_{i_1}^{alpha_1} ... x_{i_l}^{alpha_l} for every
/// increasing i_1 < ... < i_l in [k]. Keys are exponent vectors of length k.
inline std::map<std::vector<int>, Integer> specialize(const QSymElement& x, int k) {
  if (x.basis() != Basis::monomial) {
    throw std::invalid_argument("specialize: element is not in the M basis");
  }
  if (k < 0) throw std::invalid_argument("specialize: negative variable count");
  std::map<std::vector<int>, Integer> poly;
  for (const auto& [alpha, c] : x.terms()) {
    const std::size_t len = alpha.length();
    if (len > static_cast<std::size_t>(k)) continue;
    // Walk the increasing index tuples of length len in [0, k).
    std::vector<std::size_t> idx(len);
    for (std::size_t p = 0; p < len; ++p) idx[p] = p;
    while (true) {
      std::vector<int> exponent(static_cast<std::size_t>(k), 0);
      for (std::size_t p = 0; p < len; ++p) exponent[idx[p]] = alpha.parts()[p];
      Integer& slot = poly[exponent];
      slot += c;
      if (slot == 0) poly.erase(exponent);
      std::size_t p = len;
      while (p > 0 && idx[p - 1] == static_cast<std::size_t>(k) - len + p - 1) --p;
      if (p == 0) break;
      ++idx[p - 1];
      for (std::size_t q = p; q < len; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  return poly;
}

/// K_{alpha,beta} = #{T in SET(alpha) : Des(T) = beta}, rows and columns over
/// compositions_of(n) in lexicographic order.
struct KMatrix {
  int n = 0;
  std::vector<Composition> index;
  DenseMatrix<Integer> entries;

  std::size_t position(const Composition& alpha) const {
    auto it = std::lower_bound(index.begin(), index.end(), alpha);
    if (it == index.end() || *it != alpha) {
      throw std::out_of_range("composition " + to_string(alpha) + " is not of degree " +
                              std::to_string(n));
    }
    return static_cast<std::size_t>(it - index.begin());
  }

  Integer at(const Composition& alpha, const Composition& beta) const {
    return entries(position(alpha), position(beta));
  }

  Integer determinant() const { return bareiss_determinant(entries); }
};

inline KMatrix k_matrix(int n) {
  if (n < 1) throw std::invalid_argument("k_matrix: n must be at least 1");
  KMatrix k;
  k.n = n;
  k.index = compositions_of(n);
  k.entries = DenseMatrix<Integer>(k.index.size(), k.index.size());
  for (std::size_t r = 0; r < k.index.size(); ++r) {
    for (const Tableau& t : enumerate_set(k.index[r])) {
      k.entries(r, k.position(descent_composition(t))) += 1;
    }
  }
  return k;
}

/// Shin-basis coefficients of the ribbon r_beta: alpha -> K_{alpha,beta}, nonzero only.
inline std::map<Composition, Integer> ribbon_in_shin(const Composition& beta) {
  std::map<Composition, Integer> out;
  const int n = beta.weight();
  for (const Composition& alpha : compositions_of(n)) {
    Integer count = 0;
    for (const Tableau& t : enumerate_set(alpha)) {
      if (descent_composition(t) == beta) ++count;
    }
    if (count != 0) out.emplace(alpha, count);
  }
  return out;
}

/// Standard Young tableaux of a partition, rows bottom-up (longest row first),
/// grown by adding each value at an outer corner of the current shape.
inline std::vector<std::vector<std::vector<int>>> standard_young_tableaux(
    const Composition& lambda) {
  if (!is_partition(lambda)) {
    throw std::invalid_argument("standard_young_tableaux: " + to_string(lambda) +
                                " is not a partition");
  }
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> rows(lambda.length());
  const int n = lambda.weight();
  auto grow = [&](auto&& self, int v) -> void {
    if (v > n) {
      out.push_back(rows);
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const bool room = static_cast<int>(rows[r].size()) < lambda.parts()[r];
      const bool corner = r == 0 || rows[r - 1].size() > rows[r].size();
      if (!room || !corner) continue;
      rows[r].push_back(v);
      self(self, v + 1);
      rows[r].pop_back();
    }
  };
  grow(grow, 1);
  return out;
}

/// Schur function s_lambda in the F basis from standard Young tableaux, with
/// i a descent exactly when i+1 sits in a strictly higher row than i.
inline QSymElement schur_in_F(const Composition& lambda) {
  QSymElement out(lambda.weight(), Basis::fundamental);
  const int n = lambda.weight();
  for (const auto& syt : standard_young_tableaux(lambda)) {
    std::vector<std::size_t> row_of(static_cast<std::size_t>(n) + 1);
    for (std::size_t r = 0; r < syt.size(); ++r) {
      for (int v : syt[r]) row_of[v] = r;
    }
    std::vector<int> descents;
    for (int i = 1; i < n; ++i) {
      if (row_of[i + 1] > row_of[i]) descents.push_back(i);
    }
    out.add_term(composition_of_subset(DescentSubset(n, std::move(descents))), 1);
  }
  return out;
}

}  // namespace eschur
