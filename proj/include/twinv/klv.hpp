#pragma once

// Q-, R- and KLV P-polynomials indexed by pairs of twisted identities.
//
//   Q_{u,u} = 1, Q_{u,w} = 0 unless u <= w, and for s ∈ D_R(w)
//     Q_{u,w} = Q_{u⋊s, w⋊s}                       if u⋊s ⋖ u
//             = q Q_{u⋊s, w⋊s} + (q-1) Q_{u, w⋊s}  if u⋊s ⋗ u
//             = q Q_{u, w⋊s}                        if u⋊s = u
//   R_{u,w}(q) = (-q)^{ρ(w)-ρ(u)} Q_{u,w}(q^{-1})
//   q^{ρ(w)-ρ(u)} P_{u,w}(q^{-1}) = Σ_{u<=v<=w} P_{v,w}(q) Q_{u,v}(q),
//     P_{w,w} = 1, deg P_{u,w} <= (ρ(w)-ρ(u)-1)/2.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "twinv/error.hpp"
#include "twinv/poset.hpp"
#include "twinv/polynomial.hpp"
#include "twinv/spm.hpp"
#include "twinv/twisted.hpp"

namespace twinv {

/// Per-window tables over ι, indexed in lexicographic element order.
///
/// Q is filled eagerly on construction. P is filled one column (fixed w) at
/// a time on first request; columns are independent and may be requested
/// from several threads.
class KlvContext {
 public:
  explicit KlvContext(int window)
      : window_(window), elements_(iota_elements(window)), p_once_(elements_.size()),
        p_cols_(elements_.size()) {
    const int n = size();
    rank_.resize(n);
    for (int i = 0; i < n; ++i) {
      rank_[i] = length(elements_[i]) / 2;
      index_.emplace(elements_[i], i);
    }
    leq_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (rank_[a] <= rank_[b]) leq_[cell(a, b)] = leq_dots(elements_[a], elements_[b]);
    conj_.assign(static_cast<std::size_t>(n) * window, -1);
    for (int x = 0; x < n; ++x)
      for (int i = 1; i < window; ++i)
        conj_[static_cast<std::size_t>(x) * window + i] =
            index_.at(twisted_conjugate(elements_[x], i));
    fill_q();
  }

  int window() const { return window_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[i]; }
  int rank(int i) const { return rank_[i]; }

  /// Index of x in ι; throws std::invalid_argument for non-members.
  int index_of(const Perm& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw std::invalid_argument("not a twisted identity: " + x.to_string());
    return it->second;
  }

  bool contains(const Perm& x) const { return index_.contains(x); }

  bool leq(int u, int w) const { return leq_[cell(u, w)]; }

  /// Index of x ⋊ s_gen.
  int conj(int x, int gen) const { return conj_[static_cast<std::size_t>(x) * window_ + gen]; }

  bool is_descent(int x, int gen) const { return is_right_descent(elements_[x], gen); }

  const IntPoly& q(int u, int w) const { return q_[cell(u, w)]; }

  /// One recurrence step at w using the given descent, inner values from
  /// the table. Used to check that the choice of descent does not matter.
  IntPoly q_using_descent(int u, int w, int gen) const {
    if (!is_descent(w, gen)) throw std::invalid_argument("not a descent of w");
    return recurrence_step(u, w, gen);
  }

  IntPoly r(int u, int w) const {
    const IntPoly& qq = q(u, w);
    if (qq.is_zero()) return {};
    const int d = rank_[w] - rank_[u];
    IntPoly r = reverse_scaled(qq, d).to_poly();
    return d % 2 == 0 ? r : -r;
  }

  const std::vector<IntPoly>& p_column(int w) const {
    std::call_once(p_once_[w], [&] { p_cols_[w] = compute_p_column(w); });
    return p_cols_[w];
  }

  const IntPoly& p(int u, int w) const { return p_column(w)[u]; }

 private:
  std::size_t cell(int a, int b) const { return static_cast<std::size_t>(a) * size() + b; }

  IntPoly recurrence_step(int u, int w, int gen) const {
    if (!leq(u, w)) return {};
    if (u == w) return IntPoly::one();
    const int ws = conj(w, gen);
    const int us = conj(u, gen);
    static const IntPoly kQ = IntPoly::q();
    static const IntPoly kQm1{-1, 1};
    if (us == u) return kQ * q(u, ws);
    if (rank_[us] < rank_[u]) return q(us, ws);
    return kQ * q(us, ws) + kQm1 * q(u, ws);
  }

  void fill_q() {
    const int n = size();
    q_.assign(static_cast<std::size_t>(n) * n, IntPoly{});
    std::vector<int> by_rank(n);
    for (int i = 0; i < n; ++i) by_rank[i] = i;
    std::stable_sort(by_rank.begin(), by_rank.end(),
                     [&](int a, int b) { return rank_[a] < rank_[b]; });
    for (int w : by_rank) {
      int gen = 0;
      for (int i = 1; i < window_ && gen == 0; ++i)
        if (is_descent(w, i)) gen = i;
      for (int u = 0; u < n; ++u) {
        if (!leq(u, w)) continue;
        q_[cell(u, w)] = u == w ? IntPoly::one() : recurrence_step(u, w, gen);
      }
    }
  }

  // Descending induction on u within [e,w]: with d = ρ(w)-ρ(u) and
  // f = Σ_{u<v<=w} Q_{u,v} P_{v,w}, P_{u,w} is minus the part of f of degree
  // <= (d-1)/2, and q^d P_{u,w}(q^{-1}) = P_{u,w} + f must then hold exactly.
  std::vector<IntPoly> compute_p_column(int w) const {
    const int n = size();
    std::vector<IntPoly> col(n);
    std::vector<int> below;
    for (int u = 0; u < n; ++u)
      if (leq(u, w)) below.push_back(u);
    std::stable_sort(below.begin(), below.end(),
                     [&](int a, int b) { return rank_[a] > rank_[b]; });
    for (int u : below) {
      if (u == w) {
        col[u] = IntPoly::one();
        continue;
      }
      IntPoly f;
      for (int v : below)
        if (v != u && leq(u, v)) f += q(u, v) * col[v];
      const int d = rank_[w] - rank_[u];
      IntPoly pu = -truncate_to_degree(f, (d - 1) / 2);
      if (reverse_scaled(pu, d) != LaurentPoly(pu + f)) {
        throw theorem_violation("P-polynomial identity fails at u=" + elements_[u].to_string() +
                                " w=" + elements_[w].to_string());
      }
      col[u] = std::move(pu);
    }
    return col;
  }

  int window_;
  const std::vector<Perm>& elements_;
  std::vector<int> rank_;
  std::unordered_map<Perm, int> index_;
  std::vector<char> leq_;
  std::vector<int> conj_;
  std::vector<IntPoly> q_;
  mutable std::vector<std::once_flag> p_once_;
  mutable std::vector<std::vector<IntPoly>> p_cols_;
};

/// Shared per-window context, built once.
inline const KlvContext& klv_context(int window) {
  static std::map<int, std::unique_ptr<KlvContext>> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto& slot = cache[window];
  if (!slot) slot = std::make_unique<KlvContext>(window);
  return *slot;
}

inline void require_iota_pair(const Perm& u, const Perm& w) {
  require_same_window(u, w);
  if (!is_twisted_identity(u) || !is_twisted_identity(w)) {
    throw std::invalid_argument("expected twisted identities");
  }
}

inline IntPoly q_poly(const Perm& u, const Perm& w) {
  require_iota_pair(u, w);
  const KlvContext& ctx = klv_context(u.window());
  return ctx.q(ctx.index_of(u), ctx.index_of(w));
}

inline IntPoly r_poly(const Perm& u, const Perm& w) {
  require_iota_pair(u, w);
  const KlvContext& ctx = klv_context(u.window());
  return ctx.r(ctx.index_of(u), ctx.index_of(w));
}

inline IntPoly p_poly(const Perm& u, const Perm& w) {
  require_iota_pair(u, w);
  const KlvContext& ctx = klv_context(u.window());
  return ctx.p(ctx.index_of(u), ctx.index_of(w));
}

/// One step of the SPM recurrence at the top of ι[e,w] for the element u
/// (an index of M's interval); inner values come from the Q table.
inline IntPoly q_poly_via_spm(const KlvContext& ctx, const Spm& M, int u) {
  const IntervalPoset& P = *M.interval;
  if (P.ground() != Ground::iota || P.rank(P.bottom()) != 0 ||
      P.element(P.bottom()) != Perm::identity(ctx.window())) {
    throw std::invalid_argument("SPM must live on a lower interval ι[e,w]");
  }
  if (!is_spm(P, M.match)) throw std::invalid_argument("not an SPM of its interval");
  const int top = P.top();
  const int cu = ctx.index_of(P.element(u));
  const int cmu = ctx.index_of(P.element(M.match[u]));
  const int cmw = ctx.index_of(P.element(M.match[top]));
  static const IntPoly kQ = IntPoly::q();
  static const IntPoly kQm1{-1, 1};
  switch (M.tag(u)) {
    case SpmTag::down: return ctx.q(cmu, cmw);
    case SpmTag::up: return kQ * ctx.q(cmu, cmw) + kQm1 * ctx.q(cu, cmw);
    case SpmTag::fixed: return kQ * ctx.q(cu, cmw);
  }
  return {};
}

inline IntPoly q_poly_via_spm(const Perm& u, const Perm& w, const Spm& M) {
  require_iota_pair(u, w);
  const IntervalPoset& P = *M.interval;
  if (P.element(P.top()) != w) throw std::invalid_argument("SPM is not on ι[e,w]");
  const int ui = P.index_of(u);
  if (ui < 0) throw std::invalid_argument("u is not below w");
  return q_poly_via_spm(klv_context(u.window()), M, ui);
}

struct VoganCheck {
  bool ok = true;
  std::optional<Perm> failing_u;
};

/// The coefficient identity
///   q^{-ρ(w)} P_{u,w}(q) = Σ_{u<=v<=w} (-1)^{ρ(u)-ρ(v)} q^{-ρ(v)} P_{v,w}(q^{-1}) R_{u,v}(q)
/// for every u <= w, in exact Laurent arithmetic.
inline VoganCheck verify_vogan_identity(const KlvContext& ctx, int w) {
  const auto& col = ctx.p_column(w);
  for (int u = 0; u < ctx.size(); ++u) {
    if (!ctx.leq(u, w)) continue;
    const LaurentPoly lhs = LaurentPoly(col[u]).shifted(-ctx.rank(w));
    LaurentPoly rhs;
    for (int v = 0; v < ctx.size(); ++v) {
      if (!ctx.leq(u, v) || !ctx.leq(v, w)) continue;
      LaurentPoly term =
          LaurentPoly(col[v]).invert_variable().shifted(-ctx.rank(v)) * LaurentPoly(ctx.r(u, v));
      rhs = (ctx.rank(u) - ctx.rank(v)) % 2 == 0 ? rhs + term : rhs - term;
    }
    if (lhs != rhs) return {false, ctx.element(u)};
  }
  return {};
}

inline VoganCheck verify_vogan_identity(const Perm& w) {
  if (!is_twisted_identity(w)) throw std::invalid_argument("not a twisted identity");
  const KlvContext& ctx = klv_context(w.window());
  return verify_vogan_identity(ctx, ctx.index_of(w));
}

}  // namespace twinv
