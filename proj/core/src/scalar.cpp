// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepidem/scalar.hpp"

#include <atomic>
#include <cmath>
#include <cctype>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sepidem {

namespace {

std::atomic<double> g_float_tolerance{1e-9};

mpq_class pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return mpq_class(p);
  return mpq_class(mpz_class(1), p);
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string rational_string(const mpq_class& q) { return q.get_str(10); }

}  // namespace

double float_tolerance() { return g_float_tolerance.load(std::memory_order_relaxed); }

void set_float_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw std::invalid_argument("float tolerance must be positive and finite");
  g_float_tolerance.store(tol, std::memory_order_relaxed);
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

mpq_class GaussianRational::parse_rational(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (s.find('/') != std::string::npos) {
    const auto slash = s.find('/');
    const std::string num = trim(std::string_view(s).substr(0, slash));
    const std::string den = trim(std::string_view(s).substr(slash + 1));
    mpz_class n;
    mpz_class d;
    if (num.empty() || den.empty() || n.set_str(num[0] == '+' ? num.substr(1) : num, 10) != 0 ||
        d.set_str(den, 10) != 0) {
      throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }

  // Decimal with optional exponent, converted exactly.
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::size_t used = 0;
    try {
      exponent = std::stol(s.substr(i), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent in '" + s + "'");
    }
    i += used;
  }
  if (!any_digit || i != s.size()) throw std::invalid_argument("malformed number literal '" + s + "'");
  mpz_class mant(digits, 10);
  mpq_class q = mpq_class(mant) * pow10(exponent - frac_digits);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

GaussianRational GaussianRational::parse(std::string_view re, std::string_view im) {
  return GaussianRational(parse_rational(re), parse_rational(im));
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero Gaussian rational");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  const mpq_class d = o.norm();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / d;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return rational_string(re_);
  std::string out;
  if (sgn(re_) != 0) out = rational_string(re_);
  const bool negative = sgn(im_) < 0;
  if (!out.empty()) out += negative ? "-" : "+";
  else if (negative) out += "-";
  const mpq_class mag = abs(im_);
  if (mag != 1) out += rational_string(mag);
  out += "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

std::string to_string(const Complex& x) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << x.real();
  if (x.imag() != 0.0) os << (x.imag() < 0 ? "-" : "+") << std::abs(x.imag()) << "i";
  return os.str();
}

}  // namespace sepidem
