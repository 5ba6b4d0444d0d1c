#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eschur/composition.hpp"
#include "eschur/tableau.hpp"

namespace eschur {

/// Which module the operators act on: V_alpha (all row-increasing tableaux)
/// or the quotient X_alpha with basis SET(alpha).
enum class ActionKind { full, quotient };

enum class Outcome { fixed, zero, swapped };

/// Result of one operator on a quotient basis element. `image` is empty exactly
/// when the outcome is zero.
struct ActionResult {
  Outcome outcome;
  std::optional<Tableau> image;

  bool is_zero() const noexcept { return outcome == Outcome::zero; }
};

namespace detail {

inline void check_letter(int i, const Tableau& t) {
  if (i < 1 || i > t.size() - 1) {
    throw std::out_of_range("operator index " + std::to_string(i) + " outside [1, " +
                            std::to_string(t.size() - 1) + "]");
  }
}

// Operator on a tableau already known to be standard extended.
inline std::optional<Tableau> quotient_step(int i, const Tableau& t) {
  const int left = t.position(i).col;
  const int right = t.position(i + 1).col;
  if (left < right) return t;
  if (left == right) return std::nullopt;
  return t.swapped(i);
}

}  // namespace detail

/// pi_i on V_alpha: identity when i sits in a row weakly above i+1, else s_i.
inline Tableau pi_full(int i, const Tableau& t) {
  detail::check_letter(i, t);
  if (t.position(i).row >= t.position(i + 1).row) return t;
  return t.swapped(i);
}

/// pi_i on X_alpha: fixed when i is strictly left of i+1, zero when they share
/// a column, s_i(T) when i is strictly right of i+1.
inline ActionResult pi_quotient(int i, const Tableau& t) {
  detail::check_letter(i, t);
  if (!is_standard_extended(t)) {
    throw std::invalid_argument("pi_quotient: tableau is not standard extended");
  }
  const int left = t.position(i).col;
  const int right = t.position(i + 1).col;
  if (left < right) return {Outcome::fixed, t};
  if (left == right) return {Outcome::zero, std::nullopt};
  return {Outcome::swapped, t.swapped(i)};
}

/// Applies the letters of `word` in order, first letter first. In quotient
/// mode a zero result is absorbing and returned as std::nullopt.
inline std::optional<Tableau> apply_word(std::span<const int> word, const Tableau& t,
                                         ActionKind kind) {
  if (kind == ActionKind::quotient && !is_standard_extended(t)) {
    throw std::invalid_argument("apply_word: quotient action needs a standard extended tableau");
  }
  std::optional<Tableau> cur = t;
  for (int i : word) {
    detail::check_letter(i, t);
    if (!cur) continue;
    if (kind == ActionKind::full) {
      cur = pi_full(i, *cur);
    } else {
      cur = detail::quotient_step(i, *cur);
    }
  }
  return cur;
}

inline std::optional<Tableau> apply_word(std::initializer_list<int> word, const Tableau& t,
                                         ActionKind kind) {
  return apply_word(std::span<const int>(word.begin(), word.size()), t, kind);
}

/// One failed 0-Hecke relation: "idempotent" (i == j), "commute" (|i-j| >= 2)
/// or "braid" (j == i+1), observed on `tableau`.
struct RelationViolation {
  std::string relation;
  int i;
  int j;
  Tableau tableau;
};

/// Basis of the chosen module: SRIT(alpha) for full, SET(alpha) for quotient.
inline std::vector<Tableau> module_basis(const Composition& alpha, ActionKind kind) {
  return kind == ActionKind::full ? enumerate_srit(alpha) : enumerate_set(alpha);
}

/// Checks pi_i^2 = pi_i, pi_i pi_j = pi_j pi_i for |i-j| >= 2 and the braid
/// relation on every basis tableau. An empty result means all relations hold.
inline std::vector<RelationViolation> verify_relations(const Composition& alpha,
                                                       ActionKind kind) {
  std::vector<RelationViolation> violations;
  const int n = alpha.weight();
  for (const Tableau& t : module_basis(alpha, kind)) {
    auto run = [&](std::initializer_list<int> word) { return apply_word(word, t, kind); };
    for (int i = 1; i < n; ++i) {
      if (run({i, i}) != run({i})) violations.push_back({"idempotent", i, i, t});
      for (int j = i + 2; j < n; ++j) {
        if (run({i, j}) != run({j, i})) violations.push_back({"commute", i, j, t});
      }
      if (i + 1 < n && run({i, i + 1, i}) != run({i + 1, i, i + 1})) {
        violations.push_back({"braid", i, i + 1, t});
      }
    }
  }
  return violations;
}

/// Every tableau reachable from t by quotient operators, zero results dropped.
inline std::set<Tableau> quotient_orbit(const Tableau& t) {
  std::set<Tableau> seen{t};
  std::deque<Tableau> frontier{t};
  const int n = t.size();
  while (!frontier.empty()) {
    Tableau cur = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 1; i < n; ++i) {
      auto next = detail::quotient_step(i, cur);
      if (next && seen.insert(*next).second) frontier.push_back(std::move(*next));
    }
  }
  return seen;
}

/// S precedes T when S is reachable from T by a (possibly empty) operator sequence.
inline bool preceq(const Tableau& s, const Tableau& t) {
  if (s.shape() != t.shape()) throw std::invalid_argument("preceq: shape mismatch");
  if (!is_standard_extended(s) || !is_standard_extended(t)) {
    throw std::invalid_argument("preceq: tableaux must be standard extended");
  }
  return quotient_orbit(t).contains(s);
}

/// A word w with apply_word(w, super_standard(alpha), quotient) == s.
///
/// Works backwards from s: at the earliest box (rows bottom-up, left to right)
/// where s disagrees with the super-standard tableau, holding entry j, the entry
/// j-1 sits strictly above and left, so s = pi_{j-1}(s_{j-1}(s)). Repeating
/// walks the entry of that box down to the super-standard value, then moves on
/// to the next disagreeing box.
inline std::vector<int> generation_path(const Tableau& s) {
  if (!is_standard_extended(s)) {
    throw std::invalid_argument("generation_path: tableau is not standard extended");
  }
  const Tableau target = super_standard(s.shape());
  std::vector<int> letters;  // outermost operator first
  Tableau cur = s;
  for (std::size_t r = 0; r < cur.rows().size(); ++r) {
    for (std::size_t c = 0; c < cur.rows()[r].size(); ++c) {
      while (cur.rows()[r][c] != target.rows()[r][c]) {
        const int j = cur.rows()[r][c];
        const Box here = cur.position(j);
        const Box prev = cur.position(j - 1);
        if (!(prev.row > here.row && prev.col < here.col)) {
          throw std::logic_error("generation_path: entry j-1 is not above-left of j");
        }
        letters.push_back(j - 1);
        cur = cur.swapped(j - 1);
      }
    }
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

/// SET(alpha) listed as T_1, ..., T_m so that each operator sends T_j to zero,
/// to T_j, or to some T_k with k < j.
class Filtration {
public:
  Filtration(Composition alpha, std::vector<Tableau> order)
      : alpha_(std::move(alpha)), order_(std::move(order)) {
    for (std::size_t k = 0; k < order_.size(); ++k) index_.emplace(order_[k], k);
  }

  const Composition& alpha() const noexcept { return alpha_; }
  const std::vector<Tableau>& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  const Tableau& operator[](std::size_t k) const { return order_.at(k); }

  /// 0-based position of t in the order.
  std::size_t index_of(const Tableau& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw std::out_of_range("tableau not in filtration");
    return it->second;
  }

private:
  Composition alpha_;
  std::vector<Tableau> order_;
  std::map<Tableau, std::size_t> index_;
};

/// Linear extension of the operator order: descending lexicographic row-sum
/// vector, ties broken by ascending reading word. Operators only raise row
/// sums, so images always land earlier.
inline Filtration filtration(const Composition& alpha) {
  std::vector<Tableau> set = enumerate_set(alpha);
  std::vector<std::pair<RowSumVector, std::size_t>> keyed;
  keyed.reserve(set.size());
  for (std::size_t k = 0; k < set.size(); ++k) keyed.emplace_back(row_sum_vector(set[k]), k);
  // set is already sorted by reading word, so a stable sort keeps the tie-break.
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Tableau> order;
  order.reserve(set.size());
  for (const auto& [d, k] : keyed) order.push_back(set[k]);
  return Filtration(alpha, std::move(order));
}

}  // namespace eschur
