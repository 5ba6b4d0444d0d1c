#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eschur {

/// A finite sequence of positive integers. The empty sequence is the unique
/// composition of 0.
class Composition {
public:
  Composition() = default;

  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 1) {
        throw std::invalid_argument("composition parts must be positive, got " +
                                    std::to_string(p));
      }
    }
  }

  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-based part access, matching the row numbering of diagrams.
  int part(std::size_t row) const { return parts_.at(row - 1); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

private:
  std::vector<int> parts_;
};

/// A subset of [n-1] = {1, ..., n-1}, stored as a strictly increasing list.
class DescentSubset {
public:
  DescentSubset() = default;

  DescentSubset(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
    if (n_ < 0) throw std::invalid_argument("descent subset: negative n");
    int prev = 0;
    for (int m : members_) {
      if (m <= prev || m > n_ - 1) {
        throw std::invalid_argument("descent subset members must be strictly increasing in [1, n-1]");
      }
      prev = m;
    }
  }

  int n() const noexcept { return n_; }
  const std::vector<int>& members() const noexcept { return members_; }

  bool contains(int i) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), i);
  }

  bool includes(const DescentSubset& other) const noexcept {
    return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                         other.members_.end());
  }

  friend bool operator==(const DescentSubset&, const DescentSubset&) = default;
  friend auto operator<=>(const DescentSubset&, const DescentSubset&) = default;

private:
  int n_ = 0;
  std::vector<int> members_;
};

/// S(alpha): the partial sums alpha_1, alpha_1 + alpha_2, ... excluding the total.
inline DescentSubset descent_subset(const Composition& alpha) {
  std::vector<int> members;
  int sum = 0;
  for (std::size_t k = 0; k + 1 < alpha.length(); ++k) {
    sum += alpha.parts()[k];
    members.push_back(sum);
  }
  return DescentSubset(alpha.weight(), std::move(members));
}

inline Composition composition_of_subset(const DescentSubset& s) {
  if (s.n() == 0) return Composition{};
  std::vector<int> parts;
  int prev = 0;
  for (int m : s.members()) {
    parts.push_back(m - prev);
    prev = m;
  }
  parts.push_back(s.n() - prev);
  return Composition(std::move(parts));
}

/// True iff alpha is obtained from beta by summing runs of consecutive parts.
inline bool refines(const Composition& beta, const Composition& alpha) {
  std::size_t k = 0;
  for (int target : alpha.parts()) {
    int run = 0;
    while (run < target && k < beta.length()) run += beta.parts()[k++];
    if (run != target) return false;
  }
  return k == beta.length();
}

inline bool is_partition(const Composition& alpha) {
  return std::is_sorted(alpha.parts().rbegin(), alpha.parts().rend());
}

namespace detail {
inline void compositions_rec(int remaining, std::vector<int>& prefix,
                             std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    compositions_rec(remaining - first, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// All 2^(n-1) compositions of n in lexicographic order of part sequences.
inline std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative n");
  std::vector<Composition> out;
  out.reserve(n == 0 ? 1 : std::size_t{1} << (n - 1));
  std::vector<int> prefix;
  detail::compositions_rec(n, prefix, out);
  return out;
}

/// Every composition beta of weight(alpha) that refines alpha, lexicographic.
inline std::vector<Composition> refinements(const Composition& alpha) {
  std::vector<Composition> out;
  const DescentSubset base = descent_subset(alpha);
  const int n = alpha.weight();
  if (n == 0) return {alpha};
  // Subsets of [n-1] containing S(alpha), enumerated through the free positions.
  std::vector<int> free;
  for (int i = 1; i < n; ++i) {
    if (!base.contains(i)) free.push_back(i);
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
    std::vector<int> members = base.members();
    for (std::size_t b = 0; b < free.size(); ++b) {
      if (mask & (std::size_t{1} << b)) members.push_back(free[b]);
    }
    std::sort(members.begin(), members.end());
    out.push_back(composition_of_subset(DescentSubset(n, std::move(members))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All partitions (weakly decreasing compositions) of n, lexicographic.
inline std::vector<Composition> partitions_of(int n) {
  std::vector<Composition> out;
  for (auto& c : compositions_of(n)) {
    if (is_partition(c)) out.push_back(std::move(c));
  }
  return out;
}

/// "2,1,3" form; the empty string is the empty composition.
inline std::string to_string(const Composition& alpha) {
  std::string s;
  for (std::size_t k = 0; k < alpha.length(); ++k) {
    if (k) s += ',';
    s += std::to_string(alpha.parts()[k]);
  }
  return s;
}

inline Composition parse_composition(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Composition{};
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (token.empty() || token.size() > 6) {
      throw std::invalid_argument("malformed composition: \"" + std::string(text) + "\"");
    }
    int value = 0;
    for (char ch : token) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument("malformed composition: \"" + std::string(text) + "\"");
      }
      value = value * 10 + (ch - '0');
    }
    if (value < 1) {
      throw std::invalid_argument("composition parts must be positive: \"" + std::string(text) + "\"");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Composition(std::move(parts));
}

}  // namespace eschur
