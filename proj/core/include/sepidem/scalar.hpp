// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scalar.hpp
 * @brief Scalar backends for all algebra computations.
 *
 * Two backends are provided:
 *  - GaussianRational: exact elements of Q(i), stored as a pair of GMP rationals.
 *    Equality is literal and every operation is exact.
 *  - Complex (std::complex<double>): floating point, compared with a relative
 *    tolerance that is configurable process-wide (default 1e-9).
 *
 * Generic code reaches the backend through scalar_traits<F>, so that the same
 * algorithms run unchanged in both modes.
 */

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sepidem {

/// Exact element of the Gaussian rationals Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT: implicit from integers
  explicit GaussianRational(mpq_class re, mpq_class im = 0);

  /// Parses "p/q", "-7", "1.25" or "3e-2" into an exact rational.
  static mpq_class parse_rational(std::string_view text);
  static GaussianRational parse(std::string_view re, std::string_view im = "0");

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return GaussianRational(re_, -im_); }
  /// |x|^2, always rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Real part as "p/q" (or "p"); imaginary part omitted when zero, e.g. "1/2+3/4i".
  std::string to_string() const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

using Complex = std::complex<double>;

/// Relative tolerance used by every float-mode comparison.
double float_tolerance();
void set_float_tolerance(double tol);

/// Sets the float tolerance for the lifetime of the guard.
class ScopedFloatTolerance {
 public:
  explicit ScopedFloatTolerance(double tol) : previous_(float_tolerance()) { set_float_tolerance(tol); }
  ~ScopedFloatTolerance() { set_float_tolerance(previous_); }
  ScopedFloatTolerance(const ScopedFloatTolerance&) = delete;
  ScopedFloatTolerance& operator=(const ScopedFloatTolerance&) = delete;

 private:
  double previous_;
};

template <class F>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "exact";

  static bool is_zero(const GaussianRational& x, double /*scale*/ = 1.0) { return x.is_zero(); }
  static bool equal(const GaussianRational& a, const GaussianRational& b, double /*scale*/ = 1.0) {
    return a == b;
  }
  static GaussianRational conj(const GaussianRational& x) { return x.conj(); }
  static double magnitude(const GaussianRational& x) { return std::abs(x.to_complex()); }
  /// Sign of the real part; exact.
  static int real_sign(const GaussianRational& x, double /*scale*/ = 1.0) { return sgn(x.real()); }
  static bool is_real(const GaussianRational& x, double /*scale*/ = 1.0) { return x.is_real(); }
  static GaussianRational from_exact(const GaussianRational& x) { return x; }
};

template <>
struct scalar_traits<Complex> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "float64";

  static double threshold(double scale) { return float_tolerance() * (scale > 1.0 ? scale : 1.0); }
  static bool is_zero(const Complex& x, double scale = 1.0) { return std::abs(x) <= threshold(scale); }
  static bool equal(const Complex& a, const Complex& b, double scale = 1.0) {
    const double s = std::max({scale, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= threshold(s);
  }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static int real_sign(const Complex& x, double scale = 1.0) {
    if (std::abs(x.real()) <= threshold(scale)) return 0;
    return x.real() > 0 ? 1 : -1;
  }
  static bool is_real(const Complex& x, double scale = 1.0) { return std::abs(x.imag()) <= threshold(scale); }
  static Complex from_exact(const GaussianRational& x) { return x.to_complex(); }
};

/// A scalar backend usable by the algebra kernels.
template <class F>
concept Scalar = requires(const F& a, const F& b) {
  { scalar_traits<F>::exact } -> std::convertible_to<bool>;
  { scalar_traits<F>::is_zero(a) } -> std::convertible_to<bool>;
  { scalar_traits<F>::equal(a, b) } -> std::convertible_to<bool>;
  { scalar_traits<F>::conj(a) } -> std::convertible_to<F>;
  { a + b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
};

template <Scalar F>
F scalar_cast(const GaussianRational& x) {
  return scalar_traits<F>::from_exact(x);
}

template <Scalar F>
bool is_zero(const F& x, double scale = 1.0) {
  return scalar_traits<F>::is_zero(x, scale);
}

/// True only for an exact zero representation (no tolerance); cheap sparsity test.
inline bool literally_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool literally_zero(const Complex& x) { return x.real() == 0.0 && x.imag() == 0.0; }

template <Scalar F>
F conj(const F& x) {
  return scalar_traits<F>::conj(x);
}

std::string to_string(const Complex& x);
inline std::string to_string(const GaussianRational& x) { return x.to_string(); }

}  // namespace sepidem
