#pragma once

// Bruhat order on the symmetric group.
//
// Two production criteria (dot counts and the tableau criterion) and a
// subword oracle used by the tests. They must agree on every pair.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "twinv/perm.hpp"

namespace twinv {

enum class OrderMethod { dot_count_criterion, tableau_criterion };

/// x <= y iff x[i,j] <= y[i,j] for all i, j, where w[i,j] counts the dots
/// weakly southeast of (i,j). Rows are scanned bottom-up with running
/// suffix counts so a violation exits early.
inline bool leq_dots(const Perm& x, const Perm& y) {
  require_same_window(x, y);
  const int n = x.window();
  std::array<int, kMaxWindow> cx{};
  std::array<int, kMaxWindow> cy{};
  for (int i = n - 1; i >= 0; --i) {
    // cx[j] holds |{k >= i : x(k) <= j}| after the update (0-based j).
    for (int j = x.at0(i); j < n; ++j) ++cx[j];
    for (int j = y.at0(i); j < n; ++j) ++cy[j];
    for (int j = 0; j < n; ++j)
      if (cx[j] > cy[j]) return false;
  }
  return true;
}

/// Tableau criterion: x_{i,k} <= y_{i,k} for every descent s_k of x and
/// i <= k, where w_{i,k} is the i-th smallest of w(1..k).
inline bool leq_tableau(const Perm& x, const Perm& y) {
  require_same_window(x, y);
  const int n = x.window();
  std::array<int, kMaxWindow> px{};
  std::array<int, kMaxWindow> py{};
  for (int k = 1; k < n; ++k) {
    if (!is_right_descent(x, k)) continue;
    for (int i = 0; i < k; ++i) {
      px[i] = x.at0(i);
      py[i] = y.at0(i);
    }
    std::sort(px.begin(), px.begin() + k);
    std::sort(py.begin(), py.begin() + k);
    for (int i = 0; i < k; ++i)
      if (px[i] > py[i]) return false;
  }
  return true;
}

inline bool leq(const Perm& x, const Perm& y,
                OrderMethod method = OrderMethod::dot_count_criterion) {
  return method == OrderMethod::dot_count_criterion ? leq_dots(x, y) : leq_tableau(x, y);
}

/// A reduced word for w, built by stripping the smallest right descent.
/// Composing the generators left to right gives w back.
inline std::vector<int> reduced_word(const Perm& w) {
  std::vector<int> rev;
  Perm cur = w;
  while (true) {
    int s = 0;
    for (int i = 1; i < cur.window(); ++i) {
      if (is_right_descent(cur, i)) {
        s = i;
        break;
      }
    }
    if (s == 0) break;
    rev.push_back(s);
    cur = swap_positions(cur, s, s + 1);
  }
  return {rev.rbegin(), rev.rend()};
}

inline constexpr int kSubwordOracleMaxWindow = 8;

/// All products of subwords of one fixed reduced word for y. The subword
/// sets are accumulated letter by letter instead of enumerating all 2^l(y)
/// subsets, which is equivalent and keeps 2n = 6 exhaustive runs cheap.
inline std::unordered_set<Perm> subword_products(const Perm& y) {
  if (y.window() > kSubwordOracleMaxWindow) {
    throw std::invalid_argument("subword oracle limited to windows <= " +
                                std::to_string(kSubwordOracleMaxWindow));
  }
  std::unordered_set<Perm> reach{Perm::identity(y.window())};
  for (int letter : reduced_word(y)) {
    std::vector<Perm> next;
    next.reserve(reach.size());
    for (const Perm& p : reach) next.push_back(swap_positions(p, letter, letter + 1));
    reach.insert(next.begin(), next.end());
  }
  return reach;
}

/// Test oracle: x <= y iff x is a subword product of a reduced word of y.
inline bool subword_oracle(const Perm& x, const Perm& y) {
  require_same_window(x, y);
  if (length(x) > length(y)) return false;
  return subword_products(y).contains(x);
}

/// x ⋖ y in the Bruhat order on the symmetric group.
inline bool is_cover_W(const Perm& x, const Perm& y) {
  return x.window() == y.window() && length(y) == length(x) + 1 && leq_dots(x, y);
}

}  // namespace twinv
