#pragma once

// Finite graded intervals of Br(ι) and Br(I(θ)) with explicit Hasse
// diagrams, rank-2 profiles, isomorphism search, and DOT/JSON export.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "twinv/bruhat.hpp"
#include "twinv/perm.hpp"
#include "twinv/twisted.hpp"

namespace twinv {

enum class Ground { iota, twisted };

inline const char* to_string(Ground g) { return g == Ground::iota ? "iota" : "twisted"; }

/// An interval [u,w] ∩ ground. Elements are stored in lexicographic order of
/// their one-line notation; every index handed out refers to that order.
class IntervalPoset {
 public:
  Ground ground() const { return ground_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[i]; }

  /// Rank normalized so that the bottom has rank 0.
  int rank(int i) const { return rank_[i]; }
  const std::vector<int>& ranks() const { return rank_; }
  /// ρ of the element in the ambient poset.
  int absolute_rank(int i) const { return rank_[i] + base_rank_; }
  int max_rank() const { return rank_[top_]; }

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const std::vector<int>& up_covers(int i) const { return up_[i]; }
  const std::vector<int>& down_covers(int i) const { return down_[i]; }

  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * size() + b]; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  /// a ⋖ b.
  bool covers(int a, int b) const { return leq(a, b) && rank_[b] == rank_[a] + 1; }

  /// Index of p, or -1 when p lies outside the interval.
  int index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
  }

  /// Elements grouped by normalized rank.
  std::vector<std::vector<int>> layers() const {
    std::vector<std::vector<int>> out(max_rank() + 1);
    for (int i = 0; i < size(); ++i) out[rank_[i]].push_back(i);
    return out;
  }

  int cover_count() const {
    int c = 0;
    for (const auto& u : up_) c += static_cast<int>(u.size());
    return c;
  }

  friend IntervalPoset build_interval(const Perm& u, const Perm& w, Ground ground);

 private:
  Ground ground_ = Ground::iota;
  std::vector<Perm> elements_;
  std::vector<int> rank_;
  int base_rank_ = 0;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<char> leq_;
  std::unordered_map<Perm, int> index_;
  int bottom_ = 0;
  int top_ = 0;
};

inline bool in_ground(const Perm& p, Ground g) {
  return g == Ground::iota ? is_twisted_identity(p) : is_twisted_involution(p);
}

inline const std::vector<Perm>& ground_elements(int window, Ground g) {
  return g == Ground::iota ? iota_elements(window) : twisted_involution_elements(window);
}

/// ρ on either ground. On ι this is ℓ/2.
inline int ground_rank(const Perm& p, Ground g) {
  return g == Ground::iota ? length(p) / 2 : twisted_rank(p);
}

inline IntervalPoset build_interval(const Perm& u, const Perm& w, Ground ground) {
  require_same_window(u, w);
  if (!in_ground(u, ground) || !in_ground(w, ground)) {
    throw std::invalid_argument(std::string("interval endpoints must lie in ") +
                                to_string(ground));
  }
  if (!leq_dots(u, w)) {
    throw std::invalid_argument("interval endpoints not comparable: " + u.to_string() +
                                " is not below " + w.to_string());
  }
  IntervalPoset P;
  P.ground_ = ground;
  for (const Perm& x : ground_elements(u.window(), ground)) {
    if (leq_dots(u, x) && leq_dots(x, w)) P.elements_.push_back(x);
  }
  const int n = P.size();
  P.base_rank_ = ground_rank(u, ground);
  P.rank_.resize(n);
  for (int i = 0; i < n; ++i) {
    P.rank_[i] = ground_rank(P.elements_[i], ground) - P.base_rank_;
    P.index_.emplace(P.elements_[i], i);
  }
  P.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (P.rank_[a] <= P.rank_[b])
        P.leq_[static_cast<std::size_t>(a) * n + b] = leq_dots(P.elements_[a], P.elements_[b]);
  P.up_.assign(n, {});
  P.down_.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (P.covers(a, b)) {
        P.up_[a].push_back(b);
        P.down_[b].push_back(a);
      }
  P.bottom_ = P.index_.at(u);
  P.top_ = P.index_.at(w);
  return P;
}

inline IntervalPoset lower_interval(const Perm& w, Ground ground = Ground::iota) {
  return build_interval(Perm::identity(w.window()), w, ground);
}

/// All y ∈ ι with x ⋖ y <= w_cap, by rank and comparability.
inline std::vector<Perm> covers_in_iota(const Perm& x, const Perm& w_cap) {
  require_same_window(x, w_cap);
  if (!is_twisted_identity(x)) throw std::invalid_argument("not in ι: " + x.to_string());
  const int target = length(x) + 2;
  std::vector<Perm> out;
  for (const Perm& y : iota_elements(x.window())) {
    if (length(y) == target && leq_dots(x, y) && leq_dots(y, w_cap)) out.push_back(y);
  }
  return out;
}

/// The candidates {x ⋊ t : t a transposition} lying in ι one rank above x
/// and below w_cap. Every ι-cover arises this way.
inline std::vector<Perm> transposition_cover_candidates(const Perm& x, const Perm& w_cap) {
  const int window = x.window();
  const int target = length(x) + 2;
  std::set<Perm> out;
  for (int i = 1; i <= window; ++i)
    for (int j = i + 1; j <= window; ++j) {
      Perm y = twisted_conjugate_by_transposition(x, i, j);
      if (length(y) == target && is_twisted_identity(y) && leq_dots(y, w_cap)) out.insert(y);
    }
  return {out.begin(), out.end()};
}

/// Sizes of all intervals [x,y] of P with rank gap 2, as a multiset
/// size -> count.
inline std::map<int, int> rank2_interval_profile(const IntervalPoset& P) {
  std::map<int, int> profile;
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < P.size(); ++y) {
      if (P.rank(y) != P.rank(x) + 2 || !P.leq(x, y)) continue;
      int count = 2;
      for (int z : P.up_covers(x)) count += P.leq(z, y);
      ++profile[count];
    }
  return profile;
}

// Isomorphism search.

namespace detail {

// Joint colour refinement on both Hasse diagrams, seeded with
// (rank, up-degree, down-degree). Colours are comparable across P and Q.
inline std::pair<std::vector<int>, std::vector<int>> refine_colours(const IntervalPoset& P,
                                                                    const IntervalPoset& Q) {
  using Sig = std::vector<int>;
  auto seed = [](const IntervalPoset& X, int i) {
    return Sig{X.rank(i), static_cast<int>(X.up_covers(i).size()),
               static_cast<int>(X.down_covers(i).size())};
  };
  std::vector<Sig> sp(P.size()), sq(Q.size());
  for (int i = 0; i < P.size(); ++i) sp[i] = seed(P, i);
  for (int i = 0; i < Q.size(); ++i) sq[i] = seed(Q, i);
  std::vector<int> cp(P.size()), cq(Q.size());
  int classes = -1;
  while (true) {
    std::map<Sig, int> ids;
    for (const auto& s : sp) ids.emplace(s, 0);
    for (const auto& s : sq) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int i = 0; i < P.size(); ++i) cp[i] = ids[sp[i]];
    for (int i = 0; i < Q.size(); ++i) cq[i] = ids[sq[i]];
    if (next == classes) break;
    classes = next;
    auto lift = [](const IntervalPoset& X, const std::vector<int>& col, int i) {
      Sig s{col[i], -1};
      std::vector<int> up, down;
      for (int j : X.up_covers(i)) up.push_back(col[j]);
      for (int j : X.down_covers(i)) down.push_back(col[j]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      s.insert(s.end(), up.begin(), up.end());
      s.push_back(-2);
      s.insert(s.end(), down.begin(), down.end());
      return s;
    };
    for (int i = 0; i < P.size(); ++i) sp[i] = lift(P, cp, i);
    for (int i = 0; i < Q.size(); ++i) sq[i] = lift(Q, cq, i);
  }
  return {cp, cq};
}

}  // namespace detail

/// Calls visit(mapping) for every order isomorphism P -> Q, where
/// mapping[i] is the image of P's element i. Stops when visit returns false.
/// Returns the number of isomorphisms visited.
inline long for_each_isomorphism(const IntervalPoset& P, const IntervalPoset& Q,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
  if (P.size() != Q.size() || P.max_rank() != Q.max_rank() ||
      P.cover_count() != Q.cover_count()) {
    return 0;
  }
  auto [cp, cq] = detail::refine_colours(P, Q);
  {
    std::vector<int> hp = cp, hq = cq;
    std::sort(hp.begin(), hp.end());
    std::sort(hq.begin(), hq.end());
    if (hp != hq) return 0;
  }
  const int n = P.size();
  // Rank order: each element is placed after all of its lower covers.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return P.rank(a) < P.rank(b); });
  std::vector<int> map(n, -1), used(n, 0);
  long found = 0;
  bool stop = false;

  std::function<void(int)> place = [&](int depth) {
    if (stop) return;
    if (depth == n) {
      ++found;
      if (!visit(map)) stop = true;
      return;
    }
    const int p = order[depth];
    for (int q = 0; q < n && !stop; ++q) {
      if (used[q] || cq[q] != cp[p]) continue;
      // Lower covers of p are already placed; they must map exactly onto the
      // lower covers of q. Upper covers are checked when they are placed.
      const auto& dp = P.down_covers(p);
      const auto& dq = Q.down_covers(q);
      if (dp.size() != dq.size()) continue;
      bool ok = true;
      for (int a : dp) {
        if (std::find(dq.begin(), dq.end(), map[a]) == dq.end()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[p] = q;
      used[q] = 1;
      place(depth + 1);
      used[q] = 0;
      map[p] = -1;
    }
  };
  place(0);
  return found;
}

/// A rank-preserving order isomorphism P -> Q, or nullopt.
inline std::optional<std::vector<int>> find_isomorphism(const IntervalPoset& P,
                                                        const IntervalPoset& Q) {
  std::optional<std::vector<int>> result;
  for_each_isomorphism(P, Q, [&](const std::vector<int>& m) {
    result = m;
    return false;
  });
  return result;
}

/// True iff mapping is a bijection with a <= b  <=>  f(a) <= f(b).
inline bool is_order_isomorphism(const IntervalPoset& P, const IntervalPoset& Q,
                                 const std::vector<int>& mapping) {
  if (P.size() != Q.size() || static_cast<int>(mapping.size()) != P.size()) return false;
  std::vector<char> hit(Q.size(), 0);
  for (int m : mapping) {
    if (m < 0 || m >= Q.size() || hit[m]) return false;
    hit[m] = 1;
  }
  for (int a = 0; a < P.size(); ++a)
    for (int b = 0; b < P.size(); ++b)
      if (P.leq(a, b) != Q.leq(mapping[a], mapping[b])) return false;
  return true;
}

// Export.

/// One node per element labelled with its one-line notation and rank, one
/// edge per cover drawn upward.
inline void write_dot(std::ostream& os, const IntervalPoset& P, const std::string& name = "interval") {
  os << "digraph " << name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (int i = 0; i < P.size(); ++i) {
    os << "  n" << i << " [label=\"" << P.element(i).to_string() << "\\nrho " << P.rank(i)
       << "\"];\n";
  }
  for (int a = 0; a < P.size(); ++a)
    for (int b : P.up_covers(a)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
}

inline nlohmann::ordered_json to_json(const IntervalPoset& P) {
  auto elements = nlohmann::ordered_json::array();
  auto ranks = nlohmann::ordered_json::array();
  auto covers = nlohmann::ordered_json::array();
  for (int i = 0; i < P.size(); ++i) {
    elements.push_back(P.element(i).to_string());
    ranks.push_back(P.rank(i));
  }
  for (int a = 0; a < P.size(); ++a)
    for (int b : P.up_covers(a)) covers.push_back({a, b});
  nlohmann::ordered_json j;
  j["ground"] = to_string(P.ground());
  j["elements"] = std::move(elements);
  j["rank"] = std::move(ranks);
  j["covers"] = std::move(covers);
  return j;
}

}  // namespace twinv
