#pragma once

// Exhaustive property suites over a whole window 2n. Each suite returns a
// report with summary lines and (capped) failure witnesses; the CLI `verify`
// command and the acceptance binary both drive these.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "twinv/bruhat.hpp"
#include "twinv/classical.hpp"
#include "twinv/error.hpp"
#include "twinv/klv.hpp"
#include "twinv/parallel.hpp"
#include "twinv/poset.hpp"
#include "twinv/spm.hpp"
#include "twinv/twisted.hpp"

namespace twinv {

struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string check) : name(std::move(check)) {}

  std::string name;
  bool passed = true;
  long failure_count = 0;
  std::vector<std::string> info;
  std::vector<std::string> failures;

  static constexpr std::size_t kMaxWitnesses = 20;

  void fail(std::string what) {
    passed = false;
    ++failure_count;
    if (failures.size() < kMaxWitnesses) failures.push_back(std::move(what));
  }

  void note(std::string line) { info.push_back(std::move(line)); }

  void merge(const CheckReport& other) {
    failure_count += other.failure_count;
    passed = passed && other.passed;
    for (const auto& f : other.failures)
      if (failures.size() < kMaxWitnesses) failures.push_back(f);
  }
};

namespace detail {

template <class... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

inline std::string profile_text(const std::map<int, int>& profile) {
  std::string s;
  for (auto [size, count] : profile) {
    if (!s.empty()) s += ", ";
    s += std::to_string(size) + ":" + std::to_string(count);
  }
  return "{" + s + "}";
}

}  // namespace detail

/// leq_dots, leq_tableau and the subword oracle agree on every pair of S_window.
inline CheckReport check_bruhat_criteria(int window) {
  CheckReport rep{"bruhat"};
  std::vector<Perm> all;
  std::vector<int> img(window);
  for (int i = 0; i < window; ++i) img[i] = i + 1;
  do {
    all.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  long pairs = 0;
  for (const Perm& y : all) {
    const auto below = subword_products(y);
    for (const Perm& x : all) {
      ++pairs;
      const bool d = leq_dots(x, y);
      const bool t = leq_tableau(x, y);
      const bool s = below.contains(x);
      if (d != t || d != s) {
        rep.fail(detail::cat("x=", x.to_string(), " y=", y.to_string(), " dots=", d,
                             " tableau=", t, " subword=", s));
      }
    }
  }
  rep.note(detail::cat("pairs compared: ", pairs));
  return rep;
}

/// Gradedness, ρ = ℓ/2, small structural facts about ι and its covers, and
/// the behaviour of descents under the underline action.
inline CheckReport check_structure(int window) {
  CheckReport rep{"structure"};
  const int n = window / 2;
  const Perm e = Perm::identity(window);
  const IntervalPoset iota = lower_interval(iota_max(window), Ground::iota);
  const IntervalPoset twist = lower_interval(longest_element(window), Ground::twisted);

  // Gradedness: strict monotonicity of ρ, and every relation of rank gap
  // >= 2 is refined through an element one rank up.
  for (const IntervalPoset* P : {&iota, &twist}) {
    const char* g = to_string(P->ground());
    if (P->rank(P->bottom()) != 0) rep.fail(detail::cat(g, ": bottom rank nonzero"));
    for (int a = 0; a < P->size(); ++a)
      for (int b = 0; b < P->size(); ++b) {
        if (!P->less(a, b)) continue;
        if (P->rank(a) >= P->rank(b)) {
          rep.fail(detail::cat(g, ": rank not increasing ", P->element(a).to_string(), " < ",
                               P->element(b).to_string()));
          continue;
        }
        if (P->rank(b) - P->rank(a) < 2) continue;
        bool refined = false;
        for (int c : P->up_covers(a)) refined = refined || P->less(c, b);
        if (!refined) {
          rep.fail(detail::cat(g, ": no element between ", P->element(a).to_string(), " and ",
                               P->element(b).to_string()));
        }
      }
  }
  for (int i = 0; i < iota.size(); ++i) {
    const Perm& w = iota.element(i);
    if (2 * twisted_rank(w) != length(w)) rep.fail(detail::cat("2rho != l at ", w.to_string()));
    for (int s = 1; s < window; ++s) {
      const bool fixed = twisted_conjugate(w, s) == w;
      if (fixed && is_right_descent(w, s)) {
        rep.fail(detail::cat("fixed by s_", s, " but s is a descent of ", w.to_string()));
      }
      if (is_right_descent(w, s) && !is_twisted_identity(underline_act(w, s))) {
        rep.fail(detail::cat("underline action at a descent leaves iota: ", w.to_string()));
      }
    }
  }

  // Three-element rank-2 intervals never share exactly two elements.
  std::vector<std::vector<int>> triples;
  for (int x = 0; x < iota.size(); ++x)
    for (int y = 0; y < iota.size(); ++y) {
      if (iota.rank(y) != iota.rank(x) + 2 || !iota.leq(x, y)) continue;
      std::vector<int> members{x, y};
      for (int z : iota.up_covers(x))
        if (iota.leq(z, y)) members.push_back(z);
      if (members.size() == 3) {
        std::sort(members.begin(), members.end());
        triples.push_back(members);
      }
    }
  for (std::size_t a = 0; a < triples.size(); ++a)
    for (std::size_t b = a + 1; b < triples.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(triples[a].begin(), triples[a].end(), triples[b].begin(),
                            triples[b].end(), std::back_inserter(common));
      if (common.size() == 2) rep.fail("two 3-element rank-2 intervals share exactly 2 elements");
    }
  rep.note(detail::cat("3-element rank-2 intervals: ", triples.size()));

  // Elements covering exactly one element.
  const Perm special = n >= 2 ? eval_sword({n - 1, n}, window) : e;
  for (int w = 0; w < iota.size(); ++w) {
    if (iota.down_covers(w).size() != 1) continue;
    if (iota.rank(w) != 1 && iota.element(w) != special) {
      rep.fail(detail::cat("covers exactly one element: ", iota.element(w).to_string()));
    }
  }

  // Common covers of s̲_i s̲_{i-1} s̲_i and s̲_i s̲_{i+1} s̲_i.
  for (int i = 2; i <= n - 2; ++i) {
    const int a = iota.index_of(eval_sword({i, i - 1, i}, window));
    const int b = iota.index_of(eval_sword({i, i + 1, i}, window));
    const int c = iota.index_of(eval_sword({i, i - 1, i + 1, i}, window));
    std::vector<int> common;
    for (int y : iota.up_covers(a))
      if (iota.covers(b, y)) common.push_back(y);
    if (common != std::vector<int>{c}) {
      rep.fail(detail::cat("common covers at i=", i, " are not exactly s_i s_{i-1} s_{i+1} s_i"));
    }
  }

  // Distinct elements with the same lower covers have equal rank <= 2.
  for (int v = 0; v < iota.size(); ++v)
    for (int w = v + 1; w < iota.size(); ++w) {
      if (iota.down_covers(v) != iota.down_covers(w)) continue;
      if (iota.rank(v) != iota.rank(w) || iota.rank(v) > 2) {
        rep.fail(detail::cat("same lower covers: ", iota.element(v).to_string(), " and ",
                             iota.element(w).to_string()));
      }
    }

  // Twisted involutions outside ι cover at most one element of ι.
  for (int w = 0; w < twist.size(); ++w) {
    if (is_twisted_identity(twist.element(w))) continue;
    int k = 0;
    for (int u : twist.down_covers(w)) k += is_twisted_identity(twist.element(u));
    if (k > 1) rep.fail(detail::cat(twist.element(w).to_string(), " covers ", k, " elements of iota"));
  }

  // τ = s̲_{i+1}s̲_i s̲_{i-1} ≰ w  iff  w([i-1]) ⊆ [i+1], on all of I(θ).
  for (int i = 2; i <= n - 2; ++i) {
    const Perm tau = eval_sword({i + 1, i, i - 1}, window);
    for (const Perm& w : twist.elements()) {
      bool inside = true;
      for (int k = 1; k <= i - 1; ++k) inside = inside && w(k) <= i + 1;
      if (!leq_dots(tau, w) != inside) {
        rep.fail(detail::cat("diagonal criterion fails at i=", i, " w=", w.to_string()));
      }
    }
  }
  rep.note(detail::cat("|iota| = ", iota.size(), ", |I(theta)| = ", twist.size()));
  return rep;
}

/// Rank-2 intervals: four elements in I(θ), three or four in ι.
inline CheckReport check_subthin(int window) {
  CheckReport rep{"subthin"};
  const auto iota = rank2_interval_profile(lower_interval(iota_max(window), Ground::iota));
  const auto twist =
      rank2_interval_profile(lower_interval(longest_element(window), Ground::twisted));
  for (auto [size, count] : iota)
    if (size != 3 && size != 4) rep.fail(detail::cat("iota rank-2 interval of size ", size));
  for (auto [size, count] : twist)
    if (size != 4) rep.fail(detail::cat("I(theta) rank-2 interval of size ", size));
  rep.note("iota rank-2 profile " + detail::profile_text(iota));
  rep.note("I(theta) rank-2 profile " + detail::profile_text(twist));
  return rep;
}

/// Lifting property on I(θ): for u <= w and s ∈ D_R(w),
/// u s̲ <= w; s ∈ D_R(u) ⟹ u s̲ <= w s̲; s ∉ D_R(u) ⟹ u <= w s̲.
inline CheckReport check_lifting(int window) {
  CheckReport rep{"lifting"};
  const IntervalPoset P = lower_interval(longest_element(window), Ground::twisted);
  std::vector<int> act(static_cast<std::size_t>(P.size()) * window, -1);
  for (int x = 0; x < P.size(); ++x)
    for (int s = 1; s < window; ++s)
      act[static_cast<std::size_t>(x) * window + s] = P.index_of(underline_act(P.element(x), s));
  long triples = 0;
  for (int w = 0; w < P.size(); ++w)
    for (int s : right_descents(P.element(w))) {
      const int ws = act[static_cast<std::size_t>(w) * window + s];
      for (int u = 0; u < P.size(); ++u) {
        if (!P.leq(u, w)) continue;
        ++triples;
        const int us = act[static_cast<std::size_t>(u) * window + s];
        bool ok = P.leq(us, w);
        ok = ok && (is_right_descent(P.element(u), s) ? P.leq(us, ws) : P.leq(u, ws));
        if (!ok) {
          rep.fail(detail::cat("u=", P.element(u).to_string(), " w=", P.element(w).to_string(),
                               " s=", s));
        }
      }
    }
  rep.note(detail::cat("(u, w, s) triples: ", triples));
  return rep;
}

/// Order-theoretic ι-covers coincide with twisted conjugates by
/// transpositions one rank up.
inline CheckReport check_covers(int window) {
  CheckReport rep{"covers"};
  const Perm top = iota_max(window);
  long covers = 0;
  for (const Perm& x : iota_elements(window)) {
    const auto by_order = covers_in_iota(x, top);
    const auto by_conj = transposition_cover_candidates(x, top);
    covers += static_cast<long>(by_order.size());
    if (by_order != by_conj) rep.fail("cover sets differ at " + x.to_string());
  }
  rep.note(detail::cat("iota covers: ", covers));
  return rep;
}

/// Lower intervals ι[e,w] for every w, in element order.
inline std::vector<std::shared_ptr<const IntervalPoset>> all_lower_intervals(int window, int jobs) {
  const auto& elems = iota_elements(window);
  std::vector<std::shared_ptr<const IntervalPoset>> out(elems.size());
  parallel_for(static_cast<int>(elems.size()), jobs, [&](int i) {
    out[i] = std::make_shared<const IntervalPoset>(lower_interval(elems[i]));
  });
  return out;
}

/// Structure of SPMs of every lower interval: conjugation maps are SPMs and
/// are found by the enumeration; restriction to principal ideals; the
/// fixed-point criterion; atom determinacy; conjugation extension from the
/// atoms; and the classification of non-conjugation SPMs with their
/// commuting descents.
inline CheckReport check_spm_structure(int window, int jobs = 1) {
  CheckReport rep{"spm"};
  const auto intervals = all_lower_intervals(window, jobs);
  const int count = static_cast<int>(intervals.size());
  const auto& elems = iota_elements(window);
  auto ideal = [&](const Perm& x) {
    return intervals[std::lower_bound(elems.begin(), elems.end(), x) - elems.begin()];
  };
  std::vector<CheckReport> parts(count);
  std::vector<std::array<long, 3>> tallies(count, {0, 0, 0});

  parallel_for(count, jobs, [&](int wi) {
    const auto& P = intervals[wi];
    CheckReport& r = parts[wi];
    const std::string wname = P->element(P->top()).to_string();
    std::vector<Spm> spms;
    try {
      spms = enumerate_spms(P);
    } catch (const std::exception& ex) {
      r.fail("w=" + wname + ": enumeration failed: " + ex.what());
      return;
    }
    tallies[wi][0] = static_cast<long>(spms.size());

    for (int s : right_descents(P->element(P->top()))) {
      try {
        Spm c = conjugation_spm(P, s);
        if (std::find(spms.begin(), spms.end(), c) == spms.end()) {
          r.fail(detail::cat("w=", wname, ": conjugation SPM for s_", s, " not enumerated"));
        }
      } catch (const theorem_violation& ex) {
        r.fail(detail::cat("w=", wname, " s_", s, ": ", ex.what()));
      }
    }

    for (const Spm& M : spms) {
      SpmClass cls;
      try {
        cls = classify_spm(M);
      } catch (const theorem_violation& ex) {
        r.fail("w=" + wname + ": " + ex.what());
        continue;
      }
      if (cls.kind == SpmKind::conjugation) {
        ++tallies[wi][1];
      } else {
        ++tallies[wi][2];
        if (!M.fixed_points().empty()) r.fail("w=" + wname + ": non-conjugation SPM has fixed points");
        try {
          find_commuting_descent(M);
        } catch (const theorem_violation& ex) {
          r.fail("w=" + wname + ": " + ex.what());
        }
      }

      for (int x = 0; x < P->size(); ++x) {
        if (M.tag(x) != SpmTag::down) continue;
        try {
          Spm R = restrict_spm(M, x, ideal(P->element(x)));
          if (!is_spm(*R.interval, R.match)) {
            r.fail("w=" + wname + ": restriction below " + P->element(x).to_string() +
                   " is not an SPM");
          }
        } catch (const std::exception& ex) {
          r.fail("w=" + wname + ": restriction failed: " + ex.what());
        }
      }

      for (int u = 0; u < P->size(); ++u) {
        if (P->rank(u) < 2) continue;
        bool some_up = false;
        for (int v : P->down_covers(u)) some_up = some_up || M.tag(v) == SpmTag::up;
        if ((M.match[u] == u) == some_up) {
          r.fail("w=" + wname + ": fixed-point criterion fails at " + P->element(u).to_string());
        }
      }

      // Agreement with x ↦ x ⋊ s on ranks <= 1 forces agreement everywhere.
      for (int s = 1; s < window; ++s) {
        bool low_agree = true;
        for (int x = 0; x < P->size() && low_agree; ++x)
          if (P->rank(x) <= 1)
            low_agree = P->index_of(twisted_conjugate(P->element(x), s)) == M.match[x];
        if (!low_agree) continue;
        bool all_agree = true;
        for (int x = 0; x < P->size() && all_agree; ++x)
          all_agree = P->index_of(twisted_conjugate(P->element(x), s)) == M.match[x];
        if (!all_agree) {
          r.fail(detail::cat("w=", wname, ": agrees with conjugation by s_", s,
                             " on atoms only"));
        }
      }
    }

    for (std::size_t a = 0; a < spms.size(); ++a)
      for (std::size_t b = a + 1; b < spms.size(); ++b) {
        bool same_low = true;
        for (int x = 0; x < P->size() && same_low; ++x)
          if (P->rank(x) <= 1) same_low = spms[a].match[x] == spms[b].match[x];
        if (same_low) r.fail("w=" + wname + ": distinct SPMs agree on ranks <= 1");
      }
  });

  long total = 0, conj = 0, nonconj = 0;
  for (int wi = 0; wi < count; ++wi) {
    rep.merge(parts[wi]);
    total += tallies[wi][0];
    conj += tallies[wi][1];
    nonconj += tallies[wi][2];
  }
  rep.note(detail::cat("lower intervals: ", count, ", SPMs: ", total, " (conjugation ", conj,
                       ", non_conjugation ", nonconj, ")"));
  return rep;
}

struct SpmTheoremReport {
  long spm_count = 0;
  long pairs_checked = 0;
  std::vector<std::string> mismatches;
};

/// For every SPM M of ι[e,w] and every u <= w, one step of the SPM
/// recurrence reproduces Q_{u,w}.
inline SpmTheoremReport verify_spm_theorem(const KlvContext& ctx,
                                           std::shared_ptr<const IntervalPoset> P) {
  SpmTheoremReport rep;
  const int w = ctx.index_of(P->element(P->top()));
  for (const Spm& M : enumerate_spms(P)) {
    ++rep.spm_count;
    for (int u = 0; u < P->size(); ++u) {
      ++rep.pairs_checked;
      const IntPoly via = q_poly_via_spm(ctx, M, u);
      const IntPoly& direct = ctx.q(ctx.index_of(P->element(u)), w);
      if (via != direct) {
        rep.mismatches.push_back(detail::cat("w=", P->element(P->top()).to_string(),
                                             " u=", P->element(u).to_string(), " spm=", via,
                                             " recurrence=", direct));
      }
    }
  }
  return rep;
}

inline SpmTheoremReport verify_spm_theorem(const Perm& w) {
  return verify_spm_theorem(klv_context(w.window()),
                            std::make_shared<const IntervalPoset>(lower_interval(w)));
}

inline CheckReport check_spm_theorem(int window, int jobs = 1) {
  CheckReport rep{"spm-theorem"};
  const KlvContext& ctx = klv_context(window);
  const auto intervals = all_lower_intervals(window, jobs);
  std::vector<SpmTheoremReport> parts(intervals.size());
  parallel_for(static_cast<int>(intervals.size()), jobs,
               [&](int i) { parts[i] = verify_spm_theorem(ctx, intervals[i]); });
  long spms = 0, pairs = 0;
  for (const auto& p : parts) {
    spms += p.spm_count;
    pairs += p.pairs_checked;
    for (const auto& m : p.mismatches) rep.fail(m);
  }
  rep.note(detail::cat("SPMs: ", spms, ", (SPM, u) pairs: ", pairs));
  return rep;
}

struct InvarianceReport {
  int intervals = 0;
  int classes = 0;
  long isomorphisms_checked = 0;
  bool automorphism_cap_hit = false;
  std::vector<std::string> mismatches;
};

inline constexpr long kAutomorphismCap = 100000;

/// Partitions {ι[e,w]} into isomorphism classes and checks that Q, R and P
/// transport along every class isomorphism to the representative and along
/// every automorphism of the representative. Together these cover all
/// isomorphisms between members of a class.
inline InvarianceReport verify_invariance(const KlvContext& ctx, int jobs = 1) {
  InvarianceReport rep;
  const auto intervals = all_lower_intervals(ctx.window(), jobs);
  rep.intervals = static_cast<int>(intervals.size());

  std::vector<std::vector<int>> classes;  // member interval indices; front is the representative
  std::vector<std::vector<int>> class_maps;
  std::vector<std::vector<std::vector<int>>> isos;  // isos[c][k]: rep -> member k
  for (int i = 0; i < rep.intervals; ++i) {
    const IntervalPoset& P = *intervals[i];
    bool placed = false;
    for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
      auto f = find_isomorphism(*intervals[classes[c].front()], P);
      if (f) {
        classes[c].push_back(i);
        isos[c].push_back(*f);
        placed = true;
      }
    }
    if (!placed) {
      classes.push_back({i});
      std::vector<int> id(P.size());
      for (int k = 0; k < P.size(); ++k) id[k] = k;
      isos.push_back({id});
    }
  }
  rep.classes = static_cast<int>(classes.size());

  std::vector<InvarianceReport> parts(classes.size());
  parallel_for(static_cast<int>(classes.size()), jobs, [&](int c) {
    InvarianceReport& part = parts[c];
    const IntervalPoset& R = *intervals[classes[c].front()];
    std::vector<int> rctx(R.size());
    for (int k = 0; k < R.size(); ++k) rctx[k] = ctx.index_of(R.element(k));
    const int rw = rctx[R.top()];

    auto compare = [&](const IntervalPoset& T, const std::vector<int>& f) {
      ++part.isomorphisms_checked;
      if (!is_order_isomorphism(R, T, f)) {
        part.mismatches.push_back("isomorphism search returned a non-isomorphism");
        return;
      }
      const int tw = ctx.index_of(T.element(T.top()));
      for (int v = 0; v < R.size(); ++v) {
        const int a = rctx[v];
        const int b = ctx.index_of(T.element(f[v]));
        const char* kind = nullptr;
        if (ctx.q(a, rw) != ctx.q(b, tw)) kind = "Q";
        else if (ctx.r(a, rw) != ctx.r(b, tw)) kind = "R";
        else if (ctx.p(a, rw) != ctx.p(b, tw)) kind = "P";
        if (kind) {
          part.mismatches.push_back(detail::cat(kind, " differs: w=", R.element(R.top()).to_string(),
                                                " v=", R.element(v).to_string(), " w'=",
                                                T.element(T.top()).to_string(), " f(v)=",
                                                T.element(f[v]).to_string()));
        }
      }
    };

    for (std::size_t k = 1; k < classes[c].size(); ++k)
      compare(*intervals[classes[c][k]], isos[c][k]);
    long autos = for_each_isomorphism(R, R, [&](const std::vector<int>& a) {
      compare(R, a);
      return part.isomorphisms_checked < kAutomorphismCap;
    });
    if (autos >= kAutomorphismCap) part.automorphism_cap_hit = true;
  });

  for (const auto& part : parts) {
    rep.isomorphisms_checked += part.isomorphisms_checked;
    rep.automorphism_cap_hit = rep.automorphism_cap_hit || part.automorphism_cap_hit;
    rep.mismatches.insert(rep.mismatches.end(), part.mismatches.begin(), part.mismatches.end());
  }
  return rep;
}

inline CheckReport check_invariance(int window, int jobs = 1) {
  CheckReport rep{"invariance"};
  const InvarianceReport r = verify_invariance(klv_context(window), jobs);
  for (const auto& m : r.mismatches) rep.fail(m);
  // A truncated automorphism search leaves isomorphisms unchecked.
  if (r.automorphism_cap_hit) rep.fail(detail::cat("automorphism cap ", kAutomorphismCap, " reached"));
  rep.note(detail::cat("lower intervals: ", r.intervals, ", isomorphism classes: ", r.classes,
                       ", isomorphisms checked: ", r.isomorphisms_checked));
  return rep;
}

/// The Laurent identity relating P and R, for every w (sample = 0) or for
/// `sample` evenly spaced w.
inline CheckReport check_vogan(int window, int jobs = 1, int sample = 0) {
  CheckReport rep{"vogan"};
  const KlvContext& ctx = klv_context(window);
  std::vector<int> ws;
  if (sample <= 0 || sample >= ctx.size()) {
    for (int w = 0; w < ctx.size(); ++w) ws.push_back(w);
  } else {
    for (int k = 0; k < sample; ++k)
      ws.push_back(static_cast<int>(static_cast<long>(k) * ctx.size() / sample));
  }
  std::vector<VoganCheck> parts(ws.size());
  parallel_for(static_cast<int>(ws.size()), jobs,
               [&](int k) { parts[k] = verify_vogan_identity(ctx, ws[k]); });
  for (std::size_t k = 0; k < ws.size(); ++k) {
    if (!parts[k].ok) {
      rep.fail("w=" + ctx.element(ws[k]).to_string() + " u=" + parts[k].failing_u->to_string());
    }
  }
  rep.note(detail::cat("w checked: ", ws.size()));
  return rep;
}

/// Σn against S_n: φ is an order isomorphism onto S_n, and Q and P on Σn
/// equal the ordinary R- and KL polynomials.
inline CheckReport check_sigma(int window) {
  CheckReport rep{"sigma"};
  const int n = window / 2;
  const KlvContext& ctx = klv_context(window);
  const classical::SymmetricGroupKL oracle(n);
  std::vector<int> sigma;
  for (int i = 0; i < ctx.size(); ++i)
    if (in_sigma_n(ctx.element(i))) sigma.push_back(i);
  if (static_cast<int>(sigma.size()) != oracle.size()) {
    rep.fail(detail::cat("|Sigma_n| = ", sigma.size(), ", n! = ", oracle.size()));
    return rep;
  }
  std::vector<Perm> images;
  for (int i : sigma) {
    Perm p = phi(ctx.element(i));
    images.push_back(p);
    if (phi_inverse(p).perm != ctx.element(i)) rep.fail("phi_inverse(phi(w)) != w at " + ctx.element(i).to_string());
  }
  if (std::set<Perm>(images.begin(), images.end()).size() != images.size()) rep.fail("phi not injective");
  long one_plus_q = 0;
  const IntPoly target{1, 1};
  for (std::size_t a = 0; a < sigma.size(); ++a)
    for (std::size_t b = 0; b < sigma.size(); ++b) {
      const int u = sigma[a];
      const int w = sigma[b];
      if (ctx.leq(u, w) != leq_tableau(images[a], images[b])) {
        rep.fail("phi does not preserve order at " + ctx.element(u).to_string() + ", " +
                 ctx.element(w).to_string());
      }
      if (ctx.q(u, w) != oracle.r(images[a], images[b])) {
        rep.fail("Q != ordinary R at " + ctx.element(u).to_string() + ", " + ctx.element(w).to_string());
      }
      const IntPoly& p = ctx.p(u, w);
      if (p != oracle.p(images[a], images[b])) {
        rep.fail("P != ordinary KL at " + ctx.element(u).to_string() + ", " + ctx.element(w).to_string());
      }
      one_plus_q += p == target;
    }
  rep.note(detail::cat("|Sigma_n| = ", sigma.size(), ", pairs with P = 1 + q: ", one_plus_q));
  return rep;
}

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"spm-theorem", "invariance", "vogan",  "subthin",
                                              "lifting",     "covers",     "structure", "spm",
                                              "sigma",       "bruhat"};
  return names;
}

/// Runs one named suite; throws std::invalid_argument for unknown names.
inline CheckReport run_check(const std::string& name, int window, int jobs = 1) {
  if (name == "spm-theorem") return check_spm_theorem(window, jobs);
  if (name == "invariance") return check_invariance(window, jobs);
  if (name == "vogan") return check_vogan(window, jobs);
  if (name == "subthin") return check_subthin(window);
  if (name == "lifting") return check_lifting(window);
  if (name == "covers") return check_covers(window);
  if (name == "structure") return check_structure(window);
  if (name == "spm") return check_spm_structure(window, jobs);
  if (name == "sigma") return check_sigma(window);
  if (name == "bruhat") return check_bruhat_criteria(window);
  throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace twinv
