#pragma once

// Twisted involutions I(θ) and twisted identities ι of S_{2n}.
//
// θ is conjugation by w0, so θ(s_i) = s_{2n-i}. The twisted conjugation
// action is x ⋊ w = θ(w^{-1}) x w, and the underline action x·s̲ multiplies
// by s when s fixes x under ⋊ and twisted-conjugates otherwise.

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "twinv/bruhat.hpp"
#include "twinv/perm.hpp"

namespace twinv {

/// Largest window accepted by the cached enumerations.
inline constexpr int kMaxEnumWindow = 12;

using SWord = std::vector<int>;

inline void require_even_window(int window) {
  if (window < 2 || window % 2 != 0) {
    throw std::invalid_argument("window must be even and >= 2, got " + std::to_string(window));
  }
}

inline void require_generator(int window, int i) {
  if (i < 1 || i >= window) {
    throw std::invalid_argument("generator index " + std::to_string(i) +
                                " out of range for window " + std::to_string(window));
  }
}

/// θ(s_i)·x·s_i.
inline Perm twisted_conjugate(const Perm& x, int i) {
  const int window = x.window();
  require_even_window(window);
  require_generator(window, i);
  return swap_values(swap_positions(x, i, i + 1), window - i, window - i + 1);
}

/// θ(t)·x·t for the transposition t = (i j).
inline Perm twisted_conjugate_by_transposition(const Perm& x, int i, int j) {
  const int window = x.window();
  return swap_values(swap_positions(x, i, j), window + 1 - i, window + 1 - j);
}

inline bool is_twisted_involution(const Perm& x) {
  return x.window() % 2 == 0 && theta(inverse(x)) == x;
}

inline bool is_fpf_involution(const Perm& y) {
  for (int i = 1; i <= y.window(); ++i) {
    if (y(i) == i || y(y(i)) != i) return false;
  }
  return true;
}

/// x ∈ ι iff w0·x is a fixed-point-free involution.
inline bool is_twisted_identity(const Perm& x) {
  if (x.window() % 2 != 0) return false;
  return is_fpf_involution(compose(longest_element(x.window()), x));
}

inline Perm underline_act(const Perm& x, int i) {
  if (!is_twisted_involution(x)) {
    throw std::invalid_argument("underline action needs a twisted involution, got " +
                                x.to_string());
  }
  Perm c = twisted_conjugate(x, i);
  return c == x ? swap_positions(x, i, i + 1) : c;
}

/// e·s̲_{i1}···s̲_{ik}, folded left to right.
inline Perm eval_sword(const SWord& word, int window) {
  require_even_window(window);
  Perm x = Perm::identity(window);
  for (int i : word) x = underline_act(x, i);
  return x;
}

/// A reduced S̲-expression for w ∈ I(θ): the smallest right descent is
/// stripped at every step.
inline SWord reduced_sword(const Perm& w) {
  if (!is_twisted_involution(w)) {
    throw std::invalid_argument("not a twisted involution: " + w.to_string());
  }
  SWord rev;
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
    cur = underline_act(cur, s);
  }
  return {rev.rbegin(), rev.rend()};
}

/// ρ(w) for w ∈ I(θ).
inline int twisted_rank(const Perm& w) { return static_cast<int>(reduced_sword(w).size()); }

struct TwistedElement {
  Perm perm;
  int rank = 0;
  bool in_iota = false;

  static TwistedElement of(const Perm& p) {
    if (!is_twisted_involution(p)) {
      throw std::invalid_argument("not a twisted involution: " + p.to_string());
    }
    return {p, twisted_rank(p), is_twisted_identity(p)};
  }

  bool operator==(const TwistedElement&) const = default;
};

inline int rank(const TwistedElement& w) { return w.rank; }

/// The maximum of ι: w0·s_1 s_3 ··· s_{2n-1}.
inline Perm iota_max(int window) {
  require_even_window(window);
  Perm p = longest_element(window);
  for (int i = 1; i < window; i += 2) p = swap_positions(p, i, i + 1);
  return p;
}

inline Perm to_fpf(const Perm& x) {
  if (!is_twisted_identity(x)) {
    throw std::invalid_argument("not a twisted identity: " + x.to_string());
  }
  return compose(longest_element(x.window()), x);
}

inline Perm from_fpf(const Perm& y) {
  if (y.window() % 2 != 0 || !is_fpf_involution(y)) {
    throw std::invalid_argument("not a fixed-point-free involution: " + y.to_string());
  }
  return compose(longest_element(y.window()), y);
}

namespace detail {

inline void check_enum_window(int window) {
  require_even_window(window);
  if (window > kMaxEnumWindow) {
    throw std::invalid_argument("window " + std::to_string(window) + " exceeds enumeration cap " +
                                std::to_string(kMaxEnumWindow));
  }
}

inline void fpf_rec(std::vector<int>& img, std::vector<Perm>& out) {
  const int n = static_cast<int>(img.size());
  int first = -1;
  for (int i = 0; i < n; ++i) {
    if (img[i] == 0) {
      first = i;
      break;
    }
  }
  if (first < 0) {
    out.push_back(Perm::from_images(img));
    return;
  }
  for (int j = first + 1; j < n; ++j) {
    if (img[j] != 0) continue;
    img[first] = j + 1;
    img[j] = first + 1;
    fpf_rec(img, out);
    img[first] = 0;
    img[j] = 0;
  }
}

inline void involution_rec(std::vector<int>& img, std::vector<Perm>& out) {
  const int n = static_cast<int>(img.size());
  int first = -1;
  for (int i = 0; i < n; ++i) {
    if (img[i] == 0) {
      first = i;
      break;
    }
  }
  if (first < 0) {
    out.push_back(Perm::from_images(img));
    return;
  }
  img[first] = first + 1;
  involution_rec(img, out);
  for (int j = first + 1; j < n; ++j) {
    if (img[j] != 0) continue;
    img[first] = j + 1;
    img[j] = first + 1;
    involution_rec(img, out);
    img[j] = 0;
  }
  img[first] = 0;
}

template <class Compute>
const std::vector<Perm>& cached(std::map<int, std::unique_ptr<std::vector<Perm>>>& cache,
                                std::mutex& mu, int window, Compute compute) {
  std::lock_guard lock(mu);
  auto& slot = cache[window];
  if (!slot) slot = std::make_unique<std::vector<Perm>>(compute(window));
  return *slot;
}

}  // namespace detail

/// All fixed-point-free involutions of [window], sorted.
inline std::vector<Perm> enumerate_fpf(int window) {
  detail::check_enum_window(window);
  std::vector<int> img(window, 0);
  std::vector<Perm> out;
  detail::fpf_rec(img, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// ι as the orbit of e under x ↦ x ⋊ s_i, sorted.
inline std::vector<Perm> iota_by_orbit(int window) {
  detail::check_enum_window(window);
  std::unordered_set<Perm> seen{Perm::identity(window)};
  std::deque<Perm> queue{Perm::identity(window)};
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (int i = 1; i < window; ++i) {
      Perm y = twisted_conjugate(x, i);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// ι = w0·F_{2n}, sorted.
inline std::vector<Perm> iota_by_fpf(int window) {
  std::vector<Perm> out;
  const Perm w0 = longest_element(window);
  for (const Perm& y : enumerate_fpf(window)) out.push_back(compose(w0, y));
  std::sort(out.begin(), out.end());
  return out;
}

/// The twisted identities of S_{window} in lexicographic order. Both
/// constructions run on first use and must agree. Cached per window.
inline const std::vector<Perm>& iota_elements(int window) {
  static std::map<int, std::unique_ptr<std::vector<Perm>>> cache;
  static std::mutex mu;
  detail::check_enum_window(window);
  return detail::cached(cache, mu, window, [](int win) {
    auto orbit = iota_by_orbit(win);
    if (orbit != iota_by_fpf(win)) {
      throw std::logic_error("twisted identity enumerations disagree");
    }
    return orbit;
  });
}

/// I(θ) = w0·{involutions}, sorted. Cached per window.
inline const std::vector<Perm>& twisted_involution_elements(int window) {
  static std::map<int, std::unique_ptr<std::vector<Perm>>> cache;
  static std::mutex mu;
  detail::check_enum_window(window);
  return detail::cached(cache, mu, window, [](int win) {
    std::vector<int> img(win, 0);
    std::vector<Perm> invols;
    detail::involution_rec(img, invols);
    const Perm w0 = longest_element(win);
    std::vector<Perm> out;
    for (const Perm& y : invols) out.push_back(compose(w0, y));
    std::sort(out.begin(), out.end());
    return out;
  });
}

inline std::vector<TwistedElement> enumerate_iota(int window) {
  std::vector<TwistedElement> out;
  for (const Perm& p : iota_elements(window)) out.push_back({p, length(p) / 2, true});
  return out;
}

// Σn and the bijection φ: Σn -> S_n.

inline bool in_sigma_n(const Perm& w) {
  if (!is_twisted_identity(w)) return false;
  const int n = w.window() / 2;
  return !leq_dots(Perm::generator(w.window(), n), w);
}

inline bool in_sigma_n(const TwistedElement& w) { return w.in_iota && in_sigma_n(w.perm); }

/// Strips the underlines of a reduced S̲-expression all of whose letters
/// are below n.
inline Perm phi(const Perm& w) {
  if (!in_sigma_n(w)) throw std::invalid_argument("not in Σn: " + w.to_string());
  const int n = w.window() / 2;
  Perm p = Perm::identity(n);
  for (int letter : reduced_sword(w)) {
    if (letter >= n) {
      throw std::logic_error("reduced S̲-expression of a Σn element uses letter " +
                             std::to_string(letter));
    }
    p = swap_positions(p, letter, letter + 1);
  }
  return p;
}

inline Perm phi(const TwistedElement& w) { return phi(w.perm); }

inline TwistedElement phi_inverse(const Perm& p) {
  const int window = 2 * p.window();
  Perm w = eval_sword(reduced_word(p), window);
  return {w, length(w) / 2, true};
}

}  // namespace twinv
