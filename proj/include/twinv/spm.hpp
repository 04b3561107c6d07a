#pragma once

// Special partial matchings (SPMs) of lower intervals ι[e,w].
//
// An SPM of a poset with maximum 1̂ is an involution M with M(1̂) ⋖ 1̂ that
// moves each element by at most one cover step, such that x ⋖ y and
// M(x) != y imply M(x) < M(y).

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "twinv/error.hpp"
#include "twinv/poset.hpp"
#include "twinv/twisted.hpp"

namespace twinv {

enum class SpmTag { down, fixed, up };

struct Spm {
  std::shared_ptr<const IntervalPoset> interval;
  std::vector<int> match;

  SpmTag tag(int i) const {
    const IntervalPoset& P = *interval;
    if (match[i] == i) return SpmTag::fixed;
    return P.rank(match[i]) < P.rank(i) ? SpmTag::down : SpmTag::up;
  }

  /// Matched pairs (i, M(i)) with i < M(i), ascending.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(match.size()); ++i)
      if (i < match[i]) out.emplace_back(i, match[i]);
    return out;
  }

  std::vector<int> fixed_points() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(match.size()); ++i)
      if (match[i] == i) out.push_back(i);
    return out;
  }

  bool operator==(const Spm& o) const { return interval == o.interval && match == o.match; }
};

enum class SpmViolation {
  none,
  not_involutive,
  top_not_lowered,   // M(1̂) ⋖ 1̂ fails
  not_a_cover_move,  // M(x) is neither x nor a cover/cocover of x
  order_violation,   // x ⋖ y, M(x) != y, but M(x) < M(y) fails
};

inline const char* to_string(SpmViolation v) {
  switch (v) {
    case SpmViolation::none: return "none";
    case SpmViolation::not_involutive: return "not_involutive";
    case SpmViolation::top_not_lowered: return "top_not_lowered";
    case SpmViolation::not_a_cover_move: return "not_a_cover_move";
    case SpmViolation::order_violation: return "order_violation";
  }
  return "?";
}

/// First violated axiom, checked in definition order. Throws
/// std::invalid_argument when the mapping is not total on P.
inline SpmViolation check_spm(const IntervalPoset& P, const std::vector<int>& match) {
  const int n = P.size();
  if (static_cast<int>(match.size()) != n) {
    throw std::invalid_argument("matching size differs from poset size");
  }
  for (int m : match)
    if (m < 0 || m >= n) throw std::invalid_argument("matching image out of range");
  for (int x = 0; x < n; ++x)
    if (match[match[x]] != x) return SpmViolation::not_involutive;
  if (!P.covers(match[P.top()], P.top())) return SpmViolation::top_not_lowered;
  for (int x = 0; x < n; ++x) {
    const int m = match[x];
    if (m != x && !P.covers(m, x) && !P.covers(x, m)) return SpmViolation::not_a_cover_move;
  }
  for (int x = 0; x < n; ++x)
    for (int y : P.up_covers(x))
      if (match[x] != y && !P.less(match[x], match[y])) return SpmViolation::order_violation;
  return SpmViolation::none;
}

inline bool is_spm(const IntervalPoset& P, const std::vector<int>& match) {
  return check_spm(P, match) == SpmViolation::none;
}

namespace detail {

inline void require_lower_iota_interval(const IntervalPoset& P) {
  if (P.ground() != Ground::iota || P.element(P.bottom()) != Perm::identity(P.element(0).window())) {
    throw std::invalid_argument("expected a lower interval ι[e,w]");
  }
}

}  // namespace detail

/// x ↦ x ⋊ s_gen on ι[e,w]; gen must be a right descent of w.
inline Spm conjugation_spm(std::shared_ptr<const IntervalPoset> P, int gen) {
  detail::require_lower_iota_interval(*P);
  const Perm& w = P->element(P->top());
  require_generator(w.window(), gen);
  if (!is_right_descent(w, gen)) {
    throw std::invalid_argument("s_" + std::to_string(gen) + " is not a descent of " +
                                w.to_string());
  }
  Spm M{P, std::vector<int>(P->size())};
  for (int x = 0; x < P->size(); ++x) {
    const int y = P->index_of(twisted_conjugate(P->element(x), gen));
    if (y < 0) throw theorem_violation("twisted conjugation leaves the interval");
    M.match[x] = y;
  }
  if (auto v = check_spm(*P, M.match); v != SpmViolation::none) {
    throw theorem_violation(std::string("conjugation map is not an SPM: ") + to_string(v));
  }
  return M;
}

inline Spm conjugation_spm(const Perm& w, int gen) {
  return conjugation_spm(std::make_shared<const IntervalPoset>(lower_interval(w)), gen);
}

/// All SPMs of a lower interval ι[e,w].
///
/// Elements are visited by decreasing rank, starting at the top, which must
/// pair with a coatom. An unvisited element is either fixed or paired with a
/// still-free lower cover; pairing with an upper cover happened when that
/// cover was visited. The order axiom is checked for each cover pair as soon
/// as both images are known.
inline std::vector<Spm> enumerate_spms(std::shared_ptr<const IntervalPoset> P) {
  detail::require_lower_iota_interval(*P);
  const int n = P->size();
  std::vector<Spm> out;
  if (n < 2) return out;

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return P->rank(a) > P->rank(b); });

  std::vector<int> match(n, -1);
  std::set<std::vector<std::pair<int, int>>> seen;

  auto consistent_at = [&](int z) {
    for (int y : P->up_covers(z)) {
      if (match[y] < 0 || match[z] == y) continue;
      if (!P->less(match[z], match[y])) return false;
    }
    for (int x : P->down_covers(z)) {
      if (match[x] < 0 || match[x] == z) continue;
      if (!P->less(match[x], match[z])) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      Spm M{P, match};
      if (check_spm(*P, M.match) != SpmViolation::none) {
        throw std::logic_error("SPM search produced an invalid matching");
      }
      if (seen.insert(M.pairs()).second) out.push_back(std::move(M));
      return;
    }
    const int x = order[depth];
    if (match[x] >= 0) {
      self(self, depth + 1);
      return;
    }
    if (x != P->top()) {
      match[x] = x;
      if (consistent_at(x)) self(self, depth + 1);
      match[x] = -1;
    }
    for (int y : P->down_covers(x)) {
      if (match[y] >= 0) continue;
      match[x] = y;
      match[y] = x;
      if (consistent_at(x) && consistent_at(y)) self(self, depth + 1);
      match[x] = -1;
      match[y] = -1;
    }
  };
  search(search, 0);
  return out;
}

inline std::vector<Spm> enumerate_spms(const Perm& w) {
  return enumerate_spms(std::make_shared<const IntervalPoset>(lower_interval(w)));
}

enum class SpmKind { conjugation, non_conjugation };

inline const char* to_string(SpmKind k) {
  return k == SpmKind::conjugation ? "conjugation" : "non_conjugation";
}

struct SpmClass {
  SpmKind kind = SpmKind::conjugation;
  /// Generators i with M(x) = x ⋊ s_i on the whole interval.
  std::vector<int> witnesses;
  /// For non-conjugation SPMs: M(e) = s̲_i, and which of the two atom
  /// patterns (1 or 2) holds.
  int index = 0;
  int variant = 0;
};

/// Generators i such that M agrees with x ↦ x ⋊ s_i everywhere.
inline std::vector<int> conjugation_witnesses(const Spm& M) {
  const IntervalPoset& P = *M.interval;
  const int window = P.element(0).window();
  std::vector<int> out;
  for (int i = 1; i < window; ++i) {
    bool all = true;
    for (int x = 0; x < P.size() && all; ++x)
      all = P.index_of(twisted_conjugate(P.element(x), i)) == M.match[x];
    if (all) out.push_back(i);
  }
  return out;
}

/// Conjugation SPMs report their witnesses. Any other SPM must have
/// M(e) = s̲_i with 2 <= i <= n-2 and one of the two atom patterns
///   (1) M(s̲_{i-1}) = s̲_{i-1}s̲_i, M(s̲_{i+1}) = s̲_i s̲_{i+1}, s̲_{i+1}s̲_i s̲_{i-1} ≰ w
///   (2) M(s̲_{i-1}) = s̲_i s̲_{i-1}, M(s̲_{i+1}) = s̲_{i+1}s̲_i, s̲_{i-1}s̲_i s̲_{i+1} ≰ w
/// otherwise theorem_violation is thrown.
inline SpmClass classify_spm(const Spm& M) {
  const IntervalPoset& P = *M.interval;
  SpmClass c;
  c.witnesses = conjugation_witnesses(M);
  if (!c.witnesses.empty()) return c;
  c.kind = SpmKind::non_conjugation;

  const int window = P.element(0).window();
  const int n = window / 2;
  const Perm& w = P.element(P.top());
  const Perm image_of_e = P.element(M.match[P.bottom()]);
  int i = 0;
  for (int k = 1; k < n; ++k)
    if (eval_sword({k}, window) == image_of_e) i = k;
  if (i < 2 || i > n - 2) {
    throw theorem_violation("non-conjugation SPM with M(e) = " + image_of_e.to_string());
  }
  auto idx = [&](const SWord& word) { return P.index_of(eval_sword(word, window)); };
  auto maps = [&](const SWord& from, const SWord& to) {
    const int a = idx(from);
    const int b = idx(to);
    return a >= 0 && b >= 0 && M.match[a] == b;
  };
  if (maps({i - 1}, {i - 1, i}) && maps({i + 1}, {i, i + 1}) &&
      !leq_dots(eval_sword({i + 1, i, i - 1}, window), w)) {
    c.index = i;
    c.variant = 1;
  } else if (maps({i - 1}, {i, i - 1}) && maps({i + 1}, {i + 1, i}) &&
             !leq_dots(eval_sword({i - 1, i, i + 1}, window), w)) {
    c.index = i;
    c.variant = 2;
  } else {
    throw theorem_violation("non-conjugation SPM outside both atom patterns");
  }
  return c;
}

/// For a non-conjugation SPM: a descent s of w with w ⋊ s != M(w), no fixed
/// points of ⋊ s in the interval, and M(u ⋊ s) = M(u) ⋊ s throughout.
inline int find_commuting_descent(const Spm& M) {
  const IntervalPoset& P = *M.interval;
  if (!conjugation_witnesses(M).empty()) {
    throw std::invalid_argument("find_commuting_descent needs a non-conjugation SPM");
  }
  const Perm& w = P.element(P.top());
  for (int s : right_descents(w)) {
    if (P.index_of(twisted_conjugate(w, s)) == M.match[P.top()]) continue;
    bool ok = true;
    for (int u = 0; u < P.size() && ok; ++u) {
      const int us = P.index_of(twisted_conjugate(P.element(u), s));
      if (us < 0 || us == u) {
        ok = false;
        break;
      }
      ok = P.index_of(twisted_conjugate(P.element(M.match[u]), s)) == M.match[us];
    }
    if (ok) return s;
  }
  throw theorem_violation("no commuting descent for a non-conjugation SPM");
}

/// M restricted to the principal ideal below x, re-indexed on ι[e,x].
/// Needs M(x) <= x.
/// `sub` may supply ι[e,x] when the caller already has it.
inline Spm restrict_spm(const Spm& M, int x, std::shared_ptr<const IntervalPoset> sub = nullptr) {
  const IntervalPoset& P = *M.interval;
  if (!P.leq(M.match[x], x)) throw std::invalid_argument("restriction needs M(x) <= x");
  if (!sub) {
    sub = std::make_shared<const IntervalPoset>(lower_interval(P.element(x)));
  } else if (sub->element(sub->top()) != P.element(x) || sub->rank(sub->bottom()) != 0 ||
             sub->element(sub->bottom()) != Perm::identity(P.element(x).window())) {
    throw std::invalid_argument("supplied interval is not the ideal below x");
  }
  Spm R{sub, std::vector<int>(sub->size())};
  for (int i = 0; i < sub->size(); ++i) {
    const int src = P.index_of(sub->element(i));
    const int img = sub->index_of(P.element(M.match[src]));
    if (img < 0) throw theorem_violation("SPM does not preserve a principal ideal");
    R.match[i] = img;
  }
  return R;
}

inline nlohmann::ordered_json to_json(const Spm& M, const SpmClass& c) {
  const IntervalPoset& P = *M.interval;
  nlohmann::ordered_json interval;
  interval["u"] = P.element(P.bottom()).to_string();
  interval["w"] = P.element(P.top()).to_string();
  auto pairs = nlohmann::ordered_json::array();
  for (auto [a, b] : M.pairs()) pairs.push_back({a, b});
  nlohmann::ordered_json j;
  j["interval"] = std::move(interval);
  j["pairs"] = std::move(pairs);
  j["fixed"] = M.fixed_points();
  j["class"] = to_string(c.kind);
  j["witnesses"] = c.witnesses;
  if (c.kind == SpmKind::non_conjugation) {
    j["index"] = c.index;
    j["variant"] = c.variant;
  }
  return j;
}

}  // namespace twinv
