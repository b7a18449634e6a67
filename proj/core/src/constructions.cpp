// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepidem/constructions.hpp"

#include "sepidem/linalg.hpp"
#include "sepidem/separability.hpp"

namespace sepidem {

namespace {

template <Scalar F>
void require_square(const Matrix<F>& m, const char* name) {
  if (m.rows() == 0 || m.rows() != m.cols()) throw Error(Errc::dimension_mismatch, std::string(name) + " must be square");
}

template <Scalar F>
Matrix<F> require_inverse(const Matrix<F>& m, const char* name) {
  auto inv = inverse(m);
  if (!inv) throw Error(Errc::not_invertible, std::string(name) + " is not invertible");
  return std::move(*inv);
}

template <Scalar F>
Matrix<F> unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix<F> m(n, n);
  m(i, j) = F(1);
  return m;
}

/// Matrix of x -> f(x) on M_n for f given on n x n matrices.
template <Scalar F, class Fn>
Matrix<F> map_matrix(std::size_t n, Fn f) {
  Matrix<F> out(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_column(i * n + j, matrix_to_coeffs(f(unit_matrix<F>(n, i, j))));
  return out;
}

}  // namespace

template <Scalar F>
Vec<F> matrix_to_coeffs(const Matrix<F>& m) {
  return m.data();
}

template <Scalar F>
Matrix<F> coeffs_to_matrix(const Vec<F>& v, std::size_t n) {
  if (v.size() != n * n) throw Error(Errc::dimension_mismatch, "coefficient vector is not n^2 long");
  Matrix<F> m(n, n);
  for (std::size_t k = 0; k < v.size(); ++k) m(k / n, k % n) = v[k];
  return m;
}

template <Scalar F>
TensorElement<F> make_canonical_idempotent(std::size_t n) {
  const Algebra<F> a = make_matrix_algebra<F>(n, true);
  Matrix<F> x(n * n, n * n);
  const F w = F(1) / F(static_cast<long>(n));
  for (std::size_t k = 0; k < n * n; ++k) x(k, k) = w;
  return {a, a, std::move(x)};
}

template <Scalar F>
Matrix<F> twisted_coefficients(const Matrix<F>& r, const Matrix<F>& s) {
  require_square(r, "r");
  require_square(s, "s");
  const std::size_t n = r.rows();
  if (s.rows() != n) throw Error(Errc::dimension_mismatch, "r and s must have the same size");
  const F w = F(1) / F(static_cast<long>(n));
  Matrix<F> x(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      if (literally_zero(r(a, i))) continue;
      const F ra = r(a, i) * w;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t j = 0; j < n; ++j)
          if (!literally_zero(s(j, b))) x(a * n + b, i * n + j) = ra * s(j, b);
    }
  return x;
}

template <Scalar F>
TensorElement<F> make_twisted(const Matrix<F>& r, const Matrix<F>& s, bool normalize) {
  require_square(r, "r");
  require_square(s, "s");
  (void)require_inverse(r, "r");
  (void)require_inverse(s, "s");
  const std::size_t n = r.rows();
  Matrix<F> s2 = s;
  if (normalize) {
    const F t = (s * r).trace();
    if (!scalar_traits<F>::is_zero(t, s.max_abs() * r.max_abs())) s2 *= F(static_cast<long>(n)) / t;
  }
  const Algebra<F> a = make_matrix_algebra<F>(n, true);
  return {a, a, twisted_coefficients(r, s2)};
}

template <Scalar F>
ClosedForms<F> twisted_closed_forms(const Matrix<F>& r, const Matrix<F>& s) {
  require_square(r, "r");
  const std::size_t n = r.rows();
  const Algebra<F> a = make_matrix_algebra<F>(n, true);
  const Matrix<F> rinv = require_inverse(r, "r");
  const Matrix<F> sinv = require_inverse(s, "s");
  Matrix<F> p = require_inverse(Matrix<F>(r * s), "rs");
  Matrix<F> q = require_inverse(Matrix<F>(s * r), "sr").transpose();
  const Matrix<F> pinv = require_inverse(p, "p");
  const Matrix<F> qinv = require_inverse(q, "q");

  const F nn = F(static_cast<long>(n));
  Vec<F> phi(n * n);
  Vec<F> psi(n * n);
  // Tr(q e_ij) = q_ji
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      phi[i * n + j] = nn * q(j, i);
      psi[i * n + j] = nn * p(j, i);
    }

  ClosedForms<F> out{
      p,
      q,
      {a, a, map_matrix<F>(n, [&](const Matrix<F>& b) { return Matrix<F>(s * b * sinv).transpose(); }),
       MapKind::anti_multiplicative, true},
      {a, a, map_matrix<F>(n, [&](const Matrix<F>& c) { return Matrix<F>(r * c.transpose() * rinv); }),
       MapKind::anti_multiplicative, true},
      {a, std::move(phi)},
      {a, std::move(psi)},
      {a, a, map_matrix<F>(n, [&](const Matrix<F>& c) { return Matrix<F>(q * c * qinv); }), MapKind::multiplicative,
       true},
      {a, a, map_matrix<F>(n, [&](const Matrix<F>& b) { return Matrix<F>(p * b * pinv); }), MapKind::multiplicative,
       true},
  };
  return out;
}

template <Scalar F>
InvolutiveInstance<F> make_involutive_twisted(const Matrix<F>& r) {
  require_square(r, "r");
  const std::size_t n = r.rows();
  const Matrix<F> rs = r.adjoint();
  const F t = (rs * r).trace();
  if (!scalar_traits<F>::equal(t, F(static_cast<long>(n)), static_cast<double>(n))) {
    throw Error(Errc::normalization_violated, "Tr(r* r) = " + to_string(t) + ", expected " + std::to_string(n));
  }
  TensorElement<F> e = make_twisted(r, rs, false);
  return {std::move(e), r, twisted_closed_forms(r, rs)};
}

template <Scalar F>
TensorElement<F> make_direct_sum_element(const std::vector<TensorElement<F>>& components) {
  if (components.empty()) throw Error(Errc::incompatible_components, "no components");
  std::vector<Algebra<F>> lefts;
  std::vector<Algebra<F>> rights;
  std::size_t nb = 0;
  std::size_t nc = 0;
  for (std::size_t k = 0; k < components.size(); ++k) {
    const auto& c = components[k];
    const std::string where = "component " + std::to_string(k + 1);
    if (!is_full(c)) throw Error(Errc::incompatible_components, where + " is not full");
    const auto kind = verify_idempotent(c).kind;
    if (kind != IdempotencyKind::idempotent && kind != IdempotencyKind::nilpotent_square_zero) {
      throw Error(Errc::incompatible_components, where + " is neither idempotent nor square-zero");
    }
    try {
      (void)derive_antipode_bc(c);
      (void)derive_antipode_cb(c);
    } catch (const Error& err) {
      throw Error(Errc::incompatible_components, where + ": " + err.what());
    }
    lefts.push_back(c.left);
    rights.push_back(c.right);
    nb += c.left.dim();
    nc += c.right.dim();
  }
  Matrix<F> x(nb, nc);
  std::size_t ob = 0;
  std::size_t oc = 0;
  for (const auto& c : components) {
    for (std::size_t i = 0; i < c.coeffs.rows(); ++i)
      for (std::size_t j = 0; j < c.coeffs.cols(); ++j) x(ob + i, oc + j) = c.coeffs(i, j);
    ob += c.left.dim();
    oc += c.right.dim();
  }
  return {make_direct_sum(lefts), make_direct_sum(rights), std::move(x)};
}

template <Scalar F>
TensorElement<F> make_nonfull_counterexample(std::size_t n) {
  if (n < 2) throw Error(Errc::precondition_failed, "counterexample needs n >= 2");
  const Algebra<F> a = make_matrix_algebra<F>(n, true);
  Matrix<F> x(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) x(i * n, i * n) = F(1);
  return {a, a, std::move(x)};
}

#define SEPIDEM_INSTANTIATE_CONSTRUCTIONS(F)                                                   \
  template Vec<F> matrix_to_coeffs<F>(const Matrix<F>&);                                       \
  template Matrix<F> coeffs_to_matrix<F>(const Vec<F>&, std::size_t);                          \
  template TensorElement<F> make_canonical_idempotent<F>(std::size_t);                         \
  template Matrix<F> twisted_coefficients<F>(const Matrix<F>&, const Matrix<F>&);              \
  template TensorElement<F> make_twisted<F>(const Matrix<F>&, const Matrix<F>&, bool);         \
  template ClosedForms<F> twisted_closed_forms<F>(const Matrix<F>&, const Matrix<F>&);         \
  template InvolutiveInstance<F> make_involutive_twisted<F>(const Matrix<F>&);                 \
  template TensorElement<F> make_direct_sum_element<F>(const std::vector<TensorElement<F>>&);  \
  template TensorElement<F> make_nonfull_counterexample<F>(std::size_t);

SEPIDEM_INSTANTIATE_CONSTRUCTIONS(GaussianRational)
SEPIDEM_INSTANTIATE_CONSTRUCTIONS(Complex)

}  // namespace sepidem
