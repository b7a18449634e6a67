// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepidem/random_instances.hpp"

#include "sepidem/linalg.hpp"

namespace sepidem {

mpq_class RationalSampler::rational() {
  std::uniform_int_distribution<long> num(-bound_, bound_);
  std::uniform_int_distribution<long> den(1, bound_);
  mpq_class q(num(rng_), den(rng_));
  q.canonicalize();
  return q;
}

mpq_class RationalSampler::nonzero_rational() {
  for (;;) {
    mpq_class q = rational();
    if (sgn(q) != 0) return q;
  }
}

GaussianRational RationalSampler::scalar(bool complex) {
  if (complex && (rng_() & 1U)) return GaussianRational(rational(), rational());
  return GaussianRational(rational());
}

template <Scalar F>
Vec<F> random_element(const Algebra<F>& a, RationalSampler& rs, bool complex) {
  Vec<F> v(a.dim());
  for (auto& x : v) x = scalar_cast<F>(rs.scalar(complex));
  return v;
}

namespace {

Matrix<GaussianRational> exact_invertible(std::size_t n, RationalSampler& rs, bool complex) {
  for (;;) {
    Matrix<GaussianRational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rs.scalar(complex);
    if (rank(m) == n) return m;
  }
}

/// Rational point P + t d on the sphere |x|^2 = |P|^2, t = -2 (P.d) / |d|^2.
std::vector<mpq_class> sphere_point(const std::vector<mpq_class>& p, RationalSampler& rs) {
  for (;;) {
    std::vector<mpq_class> d(p.size());
    mpq_class pd = 0;
    mpq_class dd = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      d[i] = rs.rational();
      pd += p[i] * d[i];
      dd += d[i] * d[i];
    }
    if (sgn(dd) == 0 || sgn(pd) == 0) continue;
    const mpq_class t = -2 * pd / dd;
    std::vector<mpq_class> x(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) x[i] = p[i] + t * d[i];
    return x;
  }
}

template <Scalar F>
Matrix<F> cast(const Matrix<GaussianRational>& m) {
  return cast_matrix<F>(m);
}

}  // namespace

template <Scalar F>
Matrix<F> random_invertible(std::size_t n, RationalSampler& rs, bool complex) {
  return cast<F>(exact_invertible(n, rs, complex));
}

template <Scalar F>
TwistPair<F> random_twist_pair(std::size_t n, RationalSampler& rs) {
  for (;;) {
    Matrix<GaussianRational> r = exact_invertible(n, rs, false);
    Matrix<GaussianRational> s = exact_invertible(n, rs, false);
    const GaussianRational t = (s * r).trace();
    if (t.is_zero()) continue;
    s *= GaussianRational(static_cast<long>(n)) / t;
    return {cast<F>(r), cast<F>(s)};
  }
}

template <Scalar F>
Matrix<F> random_involutive_diagonal(std::size_t n, RationalSampler& rs) {
  for (;;) {
    const std::vector<mpq_class> x = sphere_point(std::vector<mpq_class>(n, mpq_class(1)), rs);
    bool invertible = true;
    for (const auto& v : x) invertible = invertible && sgn(v) != 0;
    if (!invertible) continue;
    Matrix<GaussianRational> r(n, n);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = GaussianRational(x[i]);
    return cast<F>(r);
  }
}

template <Scalar F>
Matrix<F> random_involutive(std::size_t n, RationalSampler& rs) {
  std::vector<mpq_class> id(n * n, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  for (;;) {
    const std::vector<mpq_class> x = sphere_point(id, rs);
    Matrix<GaussianRational> r(n, n);
    for (std::size_t k = 0; k < n * n; ++k) r(k / n, k % n) = GaussianRational(x[k]);
    if (rank(r) == n) return cast<F>(r);
  }
}

template <Scalar F>
F random_nonzero_scalar(RationalSampler& rs) {
  return scalar_cast<F>(GaussianRational(rs.nonzero_rational()));
}

#define SEPIDEM_INSTANTIATE_RANDOM(F)                                                     \
  template Vec<F> random_element<F>(const Algebra<F>&, RationalSampler&, bool);           \
  template Matrix<F> random_invertible<F>(std::size_t, RationalSampler&, bool);           \
  template TwistPair<F> random_twist_pair<F>(std::size_t, RationalSampler&);              \
  template Matrix<F> random_involutive_diagonal<F>(std::size_t, RationalSampler&);        \
  template Matrix<F> random_involutive<F>(std::size_t, RationalSampler&);                 \
  template F random_nonzero_scalar<F>(RationalSampler&);

SEPIDEM_INSTANTIATE_RANDOM(GaussianRational)
SEPIDEM_INSTANTIATE_RANDOM(Complex)

}  // namespace sepidem
