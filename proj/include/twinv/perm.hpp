#pragma once

// Permutations in one-line notation and their basic statistics.
//
// Conventions used throughout the library:
//   * external indices and values are 1-based, as in one-line notation;
//   * composition is (u∘v)(i) = u(v(i));
//   * the generator s_i is the adjacent transposition (i i+1).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twinv {

inline constexpr int kMaxWindow = 16;

/// A permutation of {1,...,window}.
///
/// Values are immutable once constructed. All twisted-involution machinery
/// works on even windows 2n; odd windows exist only for the symmetric group
/// S_n targets of the Σn correspondence and the classical KL oracle.
class Perm {
 public:
  Perm() = default;

  static Perm identity(int window) {
    check_window(window);
    Perm p;
    p.n_ = static_cast<std::uint8_t>(window);
    for (int i = 0; i < window; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
    return p;
  }

  /// Builds from 1-based images; throws std::invalid_argument unless they
  /// form a bijection of {1,...,size}.
  static Perm from_images(std::span<const int> images) {
    const int window = static_cast<int>(images.size());
    check_window(window);
    Perm p;
    p.n_ = static_cast<std::uint8_t>(window);
    std::array<bool, kMaxWindow> seen{};
    for (int i = 0; i < window; ++i) {
      const int v = images[i];
      if (v < 1 || v > window || seen[v - 1]) {
        throw std::invalid_argument("not a permutation: image " + std::to_string(v) +
                                    " at position " + std::to_string(i + 1));
      }
      seen[v - 1] = true;
      p.img_[i] = static_cast<std::uint8_t>(v - 1);
    }
    return p;
  }

  static Perm from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }

  /// The transposition exchanging i and j (1-based).
  static Perm transposition(int window, int i, int j) {
    Perm p = identity(window);
    p.check_index(i);
    p.check_index(j);
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
  }

  /// The Coxeter generator s_i = (i i+1), 1 <= i < window.
  static Perm generator(int window, int i) {
    if (i < 1 || i >= window) {
      throw std::invalid_argument("generator index " + std::to_string(i) +
                                  " out of range for window " + std::to_string(window));
    }
    return transposition(window, i, i + 1);
  }

  int window() const { return n_; }

  /// w(i), 1-based.
  int operator()(int i) const { return img_[i - 1] + 1; }

  /// 0-based access used by the hot loops.
  int at0(int i) const { return img_[i]; }

  std::vector<int> images() const {
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = img_[i] + 1;
    return out;
  }

  /// Space-separated one-line notation, e.g. "3 4 1 2".
  std::string to_string() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (i) s += ' ';
      s += std::to_string(img_[i] + 1);
    }
    return s;
  }

  /// Compact one-line notation without separators ("3412"); only
  /// unambiguous for windows below 10.
  std::string compact() const {
    std::string s;
    for (int i = 0; i < n_; ++i) s += std::to_string(img_[i] + 1);
    return s;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (int i = 0; i < n_; ++i) h = h * 131 + img_[i];
    return h;
  }

  bool operator==(const Perm&) const = default;
  // Window first, then lexicographic on one-line notation.
  auto operator<=>(const Perm&) const = default;

 private:
  friend Perm compose(const Perm& u, const Perm& v);
  friend Perm inverse(const Perm& w);
  friend Perm swap_positions(const Perm& w, int i, int j);
  friend Perm swap_values(const Perm& w, int a, int b);

  static void check_window(int window) {
    if (window < 1 || window > kMaxWindow) {
      throw std::invalid_argument("window " + std::to_string(window) + " outside [1, " +
                                  std::to_string(kMaxWindow) + "]");
    }
  }

  void check_index(int i) const {
    if (i < 1 || i > n_) {
      throw std::invalid_argument("index " + std::to_string(i) + " out of range");
    }
  }

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxWindow> img_{};
};

inline void require_same_window(const Perm& u, const Perm& v) {
  if (u.window() != v.window()) {
    throw std::invalid_argument("window mismatch: " + std::to_string(u.window()) + " vs " +
                                std::to_string(v.window()));
  }
}

inline Perm compose(const Perm& u, const Perm& v) {
  require_same_window(u, v);
  Perm r;
  r.n_ = u.n_;
  for (int i = 0; i < u.n_; ++i) r.img_[i] = u.img_[v.img_[i]];
  return r;
}

inline Perm inverse(const Perm& w) {
  Perm r;
  r.n_ = w.n_;
  for (int i = 0; i < w.n_; ++i) r.img_[w.img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

/// w∘(i j): exchanges the entries at positions i and j (1-based).
inline Perm swap_positions(const Perm& w, int i, int j) {
  Perm r = w;
  std::swap(r.img_[i - 1], r.img_[j - 1]);
  return r;
}

/// (a b)∘w: exchanges the values a and b (1-based).
inline Perm swap_values(const Perm& w, int a, int b) {
  Perm r = w;
  for (int k = 0; k < r.n_; ++k) {
    if (r.img_[k] == a - 1) {
      r.img_[k] = static_cast<std::uint8_t>(b - 1);
    } else if (r.img_[k] == b - 1) {
      r.img_[k] = static_cast<std::uint8_t>(a - 1);
    }
  }
  return r;
}

/// Number of inversions.
inline int length(const Perm& w) {
  int inv = 0;
  const int n = w.window();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) inv += w.at0(i) > w.at0(j);
  return inv;
}

inline bool is_right_descent(const Perm& w, int i) { return w(i) > w(i + 1); }

/// {i : w(i) > w(i+1)}, ascending.
inline std::vector<int> right_descents(const Perm& w) {
  std::vector<int> out;
  for (int i = 1; i < w.window(); ++i)
    if (is_right_descent(w, i)) out.push_back(i);
  return out;
}

/// The reverse permutation w0(i) = window + 1 - i.
inline Perm longest_element(int window) {
  std::vector<int> img(window);
  for (int i = 0; i < window; ++i) img[i] = window - i;
  return Perm::from_images(img);
}

/// θ(w) = w0 w w0, the diagram rotated by 180 degrees.
inline Perm theta(const Perm& w) {
  const int n = w.window();
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = n + 1 - w(n + 1 - i);
  return Perm::from_images(img);
}

/// |{k >= i : w(k) <= j}|.
inline int dot_count(const Perm& w, int i, int j) {
  const int n = w.window();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::invalid_argument("dot_count index out of range");
  }
  int c = 0;
  for (int k = i; k <= n; ++k) c += w(k) <= j;
  return c;
}

/// Parses space-separated one-line notation. When expected_window > 0 the
/// size must match.
inline Perm parse_perm(std::string_view text, int expected_window = 0) {
  std::istringstream in{std::string(text)};
  std::vector<int> img;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad permutation token '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad permutation token '" + tok + "'");
    img.push_back(v);
  }
  if (img.empty()) throw std::invalid_argument("empty permutation");
  if (expected_window > 0 && static_cast<int>(img.size()) != expected_window) {
    throw std::invalid_argument("expected " + std::to_string(expected_window) +
                                " entries, got " + std::to_string(img.size()));
  }
  return Perm::from_images(img);
}

}  // namespace twinv

template <>
struct std::hash<twinv::Perm> {
  std::size_t operator()(const twinv::Perm& p) const noexcept { return p.hash(); }
};
