#pragma once

// Ordinary Kazhdan-Lusztig R- and P-polynomials of S_n, computed with the
// classical descent recurrences. Used as an independent oracle for the
// restriction of the twisted-identity tables to Σn.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "twinv/bruhat.hpp"
#include "twinv/perm.hpp"
#include "twinv/polynomial.hpp"

namespace twinv::classical {

class SymmetricGroupKL {
 public:
  explicit SymmetricGroupKL(int n) : n_(n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
      elems_.push_back(Perm::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    const int N = size();
    len_.resize(N);
    for (int i = 0; i < N; ++i) {
      index_.emplace(elems_[i], i);
      len_[i] = length(elems_[i]);
    }
    // The tableau criterion, so this oracle shares no order code with the
    // dot-count default used by the twisted tables.
    leq_.assign(static_cast<std::size_t>(N) * N, 0);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) leq_[cell(a, b)] = leq_tableau(elems_[a], elems_[b]);
    right_mult_.assign(static_cast<std::size_t>(N) * n, -1);
    for (int x = 0; x < N; ++x)
      for (int s = 1; s < n; ++s)
        right_mult_[static_cast<std::size_t>(x) * n + s] =
            index_.at(swap_positions(elems_[x], s, s + 1));
    fill();
  }

  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<Perm>& elements() const { return elems_; }
  int index_of(const Perm& p) const { return index_.at(p); }

  IntPoly r(const Perm& x, const Perm& y) const { return r_[cell(index_of(x), index_of(y))]; }
  IntPoly p(const Perm& x, const Perm& y) const { return p_[cell(index_of(x), index_of(y))]; }

 private:
  std::size_t cell(int a, int b) const { return static_cast<std::size_t>(a) * size() + b; }
  int mult(int x, int s) const { return right_mult_[static_cast<std::size_t>(x) * n_ + s]; }
  int first_descent(int w) const {
    for (int s = 1; s < n_; ++s)
      if (len_[mult(w, s)] < len_[w]) return s;
    return 0;
  }

  // μ(z,v): coefficient of q^{(ℓ(v)-ℓ(z)-1)/2} in P_{z,v} when the length
  // difference is odd.
  Coeff mu(int z, int v) const {
    const int d = len_[v] - len_[z];
    if (d <= 0 || d % 2 == 0 || !leq_[cell(z, v)]) return 0;
    return p_[cell(z, v)].coeff((d - 1) / 2);
  }

  void fill() {
    const int N = size();
    r_.assign(static_cast<std::size_t>(N) * N, IntPoly{});
    p_.assign(static_cast<std::size_t>(N) * N, IntPoly{});
    std::vector<int> by_len(N);
    std::iota(by_len.begin(), by_len.end(), 0);
    std::stable_sort(by_len.begin(), by_len.end(), [&](int a, int b) { return len_[a] < len_[b]; });
    const IntPoly q = IntPoly::q();
    const IntPoly qm1{-1, 1};
    for (int w : by_len) {
      const int s = first_descent(w);
      const int ws = s ? mult(w, s) : -1;
      for (int x = 0; x < N; ++x) {
        if (!leq_[cell(x, w)]) continue;
        if (x == w) {
          r_[cell(x, w)] = IntPoly::one();
          p_[cell(x, w)] = IntPoly::one();
          continue;
        }
        const int xs = mult(x, s);
        const bool x_desc = len_[xs] < len_[x];
        // R_{x,w} = R_{xs,ws} if xs < x, else (q-1) R_{x,ws} + q R_{xs,ws}.
        r_[cell(x, w)] = x_desc ? r_[cell(xs, ws)] : qm1 * r_[cell(x, ws)] + q * r_[cell(xs, ws)];
        // P_{x,w} = q^{1-c} P_{xs,v} + q^c P_{x,v}
        //           - Σ_{z<v, zs<z} μ(z,v) q^{(ℓ(w)-ℓ(z))/2} P_{x,z},
        // with v = ws and c = 1 iff xs < x.
        const int v = ws;
        const int c = x_desc ? 1 : 0;
        IntPoly acc = IntPoly::monomial(1, 1 - c) * p_[cell(xs, v)] +
                      IntPoly::monomial(1, c) * p_[cell(x, v)];
        for (int z = 0; z < N; ++z) {
          if (z == v || !leq_[cell(x, z)] || !leq_[cell(z, v)]) continue;
          if (len_[mult(z, s)] > len_[z]) continue;
          const Coeff m = mu(z, v);
          if (m == 0) continue;
          acc = acc - IntPoly::monomial(m, (len_[w] - len_[z]) / 2) * p_[cell(x, z)];
        }
        p_[cell(x, w)] = acc;
      }
    }
  }

  int n_;
  std::vector<Perm> elems_;
  std::vector<int> len_;
  std::unordered_map<Perm, int> index_;
  std::vector<char> leq_;
  std::vector<int> right_mult_;
  std::vector<IntPoly> r_;
  std::vector<IntPoly> p_;
};

inline IntPoly ordinary_r_poly(const Perm& x, const Perm& y) {
  require_same_window(x, y);
  return SymmetricGroupKL(x.window()).r(x, y);
}

inline IntPoly ordinary_kl_poly(const Perm& x, const Perm& y) {
  require_same_window(x, y);
  return SymmetricGroupKL(x.window()).p(x, y);
}

}  // namespace twinv::classical
