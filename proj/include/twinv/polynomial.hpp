#pragma once

// Exact polynomials and Laurent polynomials in q with int64 coefficients.
// Every coefficient operation is overflow-checked and throws
// std::overflow_error instead of wrapping.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace twinv {

using Coeff = std::int64_t;

namespace detail {

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

inline Coeff checked_neg(Coeff a) { return checked_mul(a, -1); }

// Sparse descending text, lowest exponent `low`: "q^2 - q", "-q^-1 + 1", "0".
inline std::string format_terms(const std::vector<Coeff>& c, int low) {
  std::string out;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    Coeff v = c[k];
    if (v == 0) continue;
    const int e = low + k;
    const bool neg = v < 0;
    // |INT64_MIN| is not representable; print it through unsigned.
    const std::uint64_t mag = neg ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += 'q';
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

/// Polynomial in q; coeffs()[d] is the coefficient of q^d. No trailing
/// zeros, so the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Coeff> ascending) : c_(ascending) { normalize(); }
  explicit IntPoly(std::vector<Coeff> ascending) : c_(std::move(ascending)) { normalize(); }

  static IntPoly constant(Coeff v) { return IntPoly{v}; }
  static IntPoly monomial(Coeff v, int degree) {
    std::vector<Coeff> c(degree + 1, 0);
    c[degree] = v;
    return IntPoly(std::move(c));
  }
  static IntPoly q() { return monomial(1, 1); }
  static IntPoly one() { return constant(1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Coeff coeff(int d) const { return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : 0; }
  std::span<const Coeff> coeffs() const { return c_; }
  Coeff leading() const { return c_.empty() ? 0 : c_.back(); }

  std::string to_string() const { return detail::format_terms(c_, 0); }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Coeff> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::checked_add(a.coeff(i), b.coeff(i));
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a) {
    std::vector<Coeff> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::checked_neg(a.c_[i]);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = detail::checked_add(c[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
    return IntPoly(std::move(c));
  }

  IntPoly& operator+=(const IntPoly& b) { return *this = *this + b; }
  IntPoly& operator*=(const IntPoly& b) { return *this = *this * b; }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

/// Laurent polynomial: coefficient of q^(offset + k) is coeffs()[k].
/// Normalized at both ends; the zero polynomial has offset 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int offset, std::vector<Coeff> coeffs) : off_(offset), c_(std::move(coeffs)) {
    normalize();
  }
  LaurentPoly(const IntPoly& p)  // NOLINT: implicit embedding of polynomials
      : LaurentPoly(0, std::vector<Coeff>(p.coeffs().begin(), p.coeffs().end())) {}

  static LaurentPoly monomial(Coeff v, int exponent) { return {exponent, {v}}; }

  bool is_zero() const { return c_.empty(); }
  int low_degree() const { return off_; }
  int high_degree() const { return off_ + static_cast<int>(c_.size()) - 1; }
  Coeff coeff(int e) const {
    const int k = e - off_;
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0;
  }

  bool is_polynomial() const { return is_zero() || off_ >= 0; }

  IntPoly to_poly() const {
    if (!is_polynomial()) throw std::domain_error("negative powers in " + to_string());
    if (is_zero()) return {};
    std::vector<Coeff> c(off_ + c_.size(), 0);
    std::copy(c_.begin(), c_.end(), c.begin() + off_);
    return IntPoly(std::move(c));
  }

  /// p(q^{-1}).
  LaurentPoly invert_variable() const {
    if (is_zero()) return {};
    return {-high_degree(), std::vector<Coeff>(c_.rbegin(), c_.rend())};
  }

  LaurentPoly shifted(int k) const { return is_zero() ? LaurentPoly{} : LaurentPoly{off_ + k, c_}; }

  std::string to_string() const { return detail::format_terms(c_, off_); }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int lo = std::min(a.off_, b.off_);
    const int hi = std::max(a.high_degree(), b.high_degree());
    std::vector<Coeff> c(hi - lo + 1, 0);
    for (int e = lo; e <= hi; ++e) c[e - lo] = detail::checked_add(a.coeff(e), b.coeff(e));
    return {lo, std::move(c)};
  }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    std::vector<Coeff> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::checked_neg(a.c_[i]);
    return {a.off_, std::move(c)};
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = detail::checked_add(c[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
    return {a.off_ + b.off_, std::move(c)};
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      off_ = 0;
      return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    off_ += static_cast<int>(lead);
  }

  int off_ = 0;
  std::vector<Coeff> c_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.to_string();
}

/// q^d · p(q^{-1}).
inline LaurentPoly reverse_scaled(const IntPoly& p, int d) {
  return LaurentPoly(p).invert_variable().shifted(d);
}

/// Drops every term of degree > k; k = -1 gives 0.
inline IntPoly truncate_to_degree(const IntPoly& p, int k) {
  if (k < -1) throw std::invalid_argument("truncation degree below -1");
  std::vector<Coeff> c(p.coeffs().begin(),
                       p.coeffs().begin() + std::min<int>(k + 1, p.degree() + 1));
  return IntPoly(std::move(c));
}

inline Coeff eval_at_one(const IntPoly& p) {
  Coeff s = 0;
  for (Coeff c : p.coeffs()) s = detail::checked_add(s, c);
  return s;
}

inline Coeff eval_at_one(const LaurentPoly& p) {
  Coeff s = 0;
  for (int e = p.low_degree(); !p.is_zero() && e <= p.high_degree(); ++e)
    s = detail::checked_add(s, p.coeff(e));
  return s;
}

}  // namespace twinv
