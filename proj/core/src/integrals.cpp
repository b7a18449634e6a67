// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepidem/integrals.hpp"

#include "sepidem/linalg.hpp"

namespace sepidem {

namespace {

/// Solves M w = lambda * u for (w, lambda); the solution space must be a line
/// with lambda != 0, normalized to lambda = 1.
template <Scalar F>
Vec<F> normalized_line(const Matrix<F>& m, const Vec<F>& u, const char* name) {
  const std::size_t n = m.cols();
  Matrix<F> aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = -u[i];
  }
  const Matrix<F> kernel = nullspace(aug);
  if (kernel.cols() != 1) {
    throw Error(Errc::solution_space_dimension_not_one,
                std::string(name) + ": solution space has dimension " + std::to_string(kernel.cols()));
  }
  const F lambda = kernel(n, 0);
  if (scalar_traits<F>::is_zero(lambda, kernel.max_abs())) {
    throw Error(Errc::no_solution, std::string(name) + ": slice cannot reach the unit");
  }
  Vec<F> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = kernel(j, 0) / lambda;
  return w;
}

template <Scalar F>
void require_faithful(const LinearFunctional<F>& f, const char* name) {
  if (!f.is_faithful()) throw Error(Errc::not_faithful, std::string(name) + " is not faithful");
}

template <Scalar F>
void require_integral_mode(const TensorElement<F>& e) {
  if (!is_full(e)) throw Error(Errc::precondition_failed, "integrals require a full element");
  const auto v = verify_idempotent(e);
  if (v.kind == IdempotencyKind::nilpotent_square_zero) {
    throw Error(Errc::refused_for_mode, "E^2 = 0: certificate mode is nilpotent_variant, integrals are not derived");
  }
  if (v.kind != IdempotencyKind::idempotent) {
    throw Error(Errc::refused_for_mode, "E is not idempotent: " + v.witness);
  }
}

/// Rows of the pairing matrix against a map: entry (i, j) = f(x_j m(x_i)).
template <Scalar F>
CheckReport kms_report(const LinearFunctional<F>& f, const LinearMap<F>& m, const char* law) {
  CheckReport report;
  const Matrix<F> p = f.pairing_matrix();
  // f(x_j m(x_i)) = (P M)(j, i)
  const Matrix<F> pm = p * m.matrix;
  const double scale = std::max(p.max_abs(), pm.max_abs());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (!scalar_traits<F>::equal(p(i, j), pm(j, i), scale))
        report.fail({law, {i, j}, f.algebra.label(i) + ", " + f.algebra.label(j)});
  return report;
}

template <Scalar F>
void compare_covectors(CheckReport& report, const Vec<F>& got, const Vec<F>& want, const Algebra<F>& a,
                       const char* law) {
  const double scale = std::max(max_abs(got), max_abs(want));
  for (std::size_t k = 0; k < got.size(); ++k)
    if (!scalar_traits<F>::equal(got[k], want[k], scale)) report.fail({law, {k}, a.label(k)});
}

template <Scalar F>
CheckReport relative_commutation(const Algebra<F>& a, const Vec<F>& q, const LinearMap<F>& sigma, const char* law) {
  CheckReport report;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const Vec<F> x = a.basis(k);
    if (!approx_equal(a.multiply(x, q), a.multiply(q, sigma.matrix.column(k)))) report.fail({law, {k}, a.label(k)});
  }
  return report;
}

template <Scalar F>
bool try_invert(const Element<F>& x) {
  try {
    (void)invert(x);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

namespace detail {

template <Scalar F>
LinearFunctional<F> solve_left_integral(const TensorElement<F>& e) {
  LinearFunctional<F> phi{e.right, normalized_line(e.coeffs, e.left.unit(), "left integral")};
  require_faithful(phi, "left integral");
  return phi;
}

template <Scalar F>
LinearFunctional<F> solve_right_integral(const TensorElement<F>& e) {
  LinearFunctional<F> psi{e.left, normalized_line(e.coeffs.transpose(), e.right.unit(), "right integral")};
  require_faithful(psi, "right integral");
  return psi;
}

}  // namespace detail

template <Scalar F>
LinearFunctional<F> derive_left_integral(const TensorElement<F>& e) {
  require_integral_mode(e);
  return detail::solve_left_integral(e);
}

template <Scalar F>
LinearFunctional<F> derive_right_integral(const TensorElement<F>& e) {
  require_integral_mode(e);
  return detail::solve_right_integral(e);
}

template <Scalar F>
CheckReport check_kms(const LinearFunctional<F>& phi, const LinearMap<F>& sigma, const LinearFunctional<F>& psi,
                      const LinearMap<F>& sigma_prime) {
  CheckReport report = kms_report(phi, sigma, "phi(c c') = phi(c' sigma(c))");
  report.merge(kms_report(psi, sigma_prime, "psi(b b') = psi(b' sigma'(b))"));
  return report;
}

template <Scalar F>
ModularPair<F> modular_automorphisms(const LinearMap<F>& s, const LinearMap<F>& sp, const LinearFunctional<F>& phi,
                                     const LinearFunctional<F>& psi) {
  const Matrix<F> sigma = s.matrix * sp.matrix;
  auto sigma_prime = inverse(sp.matrix * s.matrix);
  if (!sigma_prime) throw Error(Errc::not_bijective, "S' S is not invertible");
  ModularPair<F> out{make_map(s.target, s.target, sigma, MapKind::multiplicative, true, "sigma"),
                     make_map(s.source, s.source, std::move(*sigma_prime), MapKind::multiplicative, true, "sigma'")};
  const CheckReport kms = check_kms(phi, out.modular_c, psi, out.modular_b);
  if (!kms) throw Error(Errc::kms_violation, kms.summary());
  return out;
}

template <Scalar F>
CheckReport check_integral_transport(const LinearFunctional<F>& phi, const LinearFunctional<F>& psi,
                                     const LinearMap<F>& s, const LinearMap<F>& sp) {
  CheckReport report;
  compare_covectors(report, sp.matrix.transpose().apply(psi.covector), phi.covector, phi.algebra, "psi S' = phi");
  compare_covectors(report, s.matrix.transpose().apply(phi.covector), psi.covector, psi.algebra, "phi S = psi");
  const Matrix<F> sigma = s.matrix * sp.matrix;
  const Matrix<F> inv_sigma_prime = sp.matrix * s.matrix;
  compare_covectors(report, sigma.transpose().apply(phi.covector), phi.covector, phi.algebra, "phi (S S') = phi");
  compare_covectors(report, inv_sigma_prime.transpose().apply(psi.covector), psi.covector, psi.algebra,
                    "psi (S' S) = psi");
  return report;
}

template <Scalar F>
DerivedStructure<F> derive_structure(const TensorElement<F>& e) {
  require_integral_mode(e);
  LinearMap<F> s = derive_antipode_bc(e);
  LinearMap<F> sp = derive_antipode_cb(e);
  LinearFunctional<F> phi = detail::solve_left_integral(e);
  LinearFunctional<F> psi = detail::solve_right_integral(e);
  ModularPair<F> mod = modular_automorphisms(s, sp, phi, psi);
  return {e, std::move(s), std::move(sp), std::move(phi), std::move(psi), std::move(mod.modular_c),
          std::move(mod.modular_b)};
}

template <Scalar F>
CheckReport check_tracial(const LinearFunctional<F>& tau) {
  CheckReport report;
  const Matrix<F> p = tau.pairing_matrix();
  const double scale = p.max_abs();
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = i + 1; j < p.cols(); ++j)
      if (!scalar_traits<F>::equal(p(i, j), p(j, i), scale))
        report.fail({"tau(xy) = tau(yx)", {i, j}, tau.algebra.label(i) + ", " + tau.algebra.label(j)});
  return report;
}

template <Scalar F>
Element<F> q_from_trace(const DerivedStructure<F>& d, const LinearFunctional<F>& tau) {
  require_same(tau.algebra, d.e.left, "q_from_trace: trace must live on B");
  const CheckReport tr = check_tracial(tau);
  if (!tr) throw Error(Errc::not_a_trace, tr.summary());
  Element<F> q = slice_left(tau, d.e);
  const CheckReport comm = relative_commutation(d.e.right, q.coeffs, d.modular_c, "c q = q sigma(c)");
  if (!comm) throw Error(Errc::relative_commutation_fails, comm.summary());
  const Vec<F> back = d.right_integral.left_weighted(d.antipode_cb(q.coeffs)).covector;
  if (!approx_equal(back, tau.covector)) throw Error(Errc::reconstruction_mismatch, "psi(S'(q) .) != tau");
  return q;
}

template <Scalar F>
TraceFromElement<F> trace_from_q(const DerivedStructure<F>& d, const Element<F>& q) {
  require_same(q.algebra, d.e.right, "trace_from_q: q must live in C");
  const CheckReport comm = relative_commutation(d.e.right, q.coeffs, d.modular_c, "c q = q sigma(c)");
  if (!comm) throw Error(Errc::relative_commutation_fails, comm.summary());
  TraceFromElement<F> out{d.right_integral.left_weighted(d.antipode_cb(q.coeffs)), false, false};
  const CheckReport tr = check_tracial(out.trace);
  if (!tr) throw Error(Errc::not_a_trace, tr.summary());
  out.faithful = out.trace.is_faithful();
  out.element_invertible = try_invert(q);
  if (out.faithful != out.element_invertible) {
    throw Error(Errc::not_faithful, "faithfulness of the trace disagrees with invertibility of q");
  }
  return out;
}

template <Scalar F>
Element<F> p_from_trace(const DerivedStructure<F>& d, const LinearFunctional<F>& tau) {
  require_same(tau.algebra, d.e.right, "p_from_trace: trace must live on C");
  const CheckReport tr = check_tracial(tau);
  if (!tr) throw Error(Errc::not_a_trace, tr.summary());
  Element<F> p = slice_right(d.e, tau);
  const CheckReport comm = relative_commutation(d.e.left, p.coeffs, d.modular_b, "b p = p sigma'(b)");
  if (!comm) throw Error(Errc::relative_commutation_fails, comm.summary());
  const Vec<F> back = d.left_integral.right_weighted(d.antipode_bc(p.coeffs)).covector;
  if (!approx_equal(back, tau.covector)) throw Error(Errc::reconstruction_mismatch, "phi(. S(p)) != tau");
  return p;
}

template <Scalar F>
TraceFromElement<F> trace_from_p(const DerivedStructure<F>& d, const Element<F>& p) {
  require_same(p.algebra, d.e.left, "trace_from_p: p must live in B");
  const CheckReport comm = relative_commutation(d.e.left, p.coeffs, d.modular_b, "b p = p sigma'(b)");
  if (!comm) throw Error(Errc::relative_commutation_fails, comm.summary());
  TraceFromElement<F> out{d.left_integral.right_weighted(d.antipode_bc(p.coeffs)), false, false};
  const CheckReport tr = check_tracial(out.trace);
  if (!tr) throw Error(Errc::not_a_trace, tr.summary());
  out.faithful = out.trace.is_faithful();
  out.element_invertible = try_invert(p);
  if (out.faithful != out.element_invertible) {
    throw Error(Errc::not_faithful, "faithfulness of the trace disagrees with invertibility of p");
  }
  return out;
}

#define SEPIDEM_INSTANTIATE_INTEGRALS(F)                                                                         \
  template LinearFunctional<F> detail::solve_left_integral<F>(const TensorElement<F>&);                          \
  template LinearFunctional<F> detail::solve_right_integral<F>(const TensorElement<F>&);                         \
  template LinearFunctional<F> derive_left_integral<F>(const TensorElement<F>&);                                 \
  template LinearFunctional<F> derive_right_integral<F>(const TensorElement<F>&);                                \
  template CheckReport check_kms<F>(const LinearFunctional<F>&, const LinearMap<F>&, const LinearFunctional<F>&, \
                                    const LinearMap<F>&);                                                        \
  template ModularPair<F> modular_automorphisms<F>(const LinearMap<F>&, const LinearMap<F>&,                     \
                                                   const LinearFunctional<F>&, const LinearFunctional<F>&);      \
  template CheckReport check_integral_transport<F>(const LinearFunctional<F>&, const LinearFunctional<F>&,       \
                                                   const LinearMap<F>&, const LinearMap<F>&);                    \
  template DerivedStructure<F> derive_structure<F>(const TensorElement<F>&);                                     \
  template CheckReport check_tracial<F>(const LinearFunctional<F>&);                                             \
  template Element<F> q_from_trace<F>(const DerivedStructure<F>&, const LinearFunctional<F>&);                   \
  template TraceFromElement<F> trace_from_q<F>(const DerivedStructure<F>&, const Element<F>&);                   \
  template Element<F> p_from_trace<F>(const DerivedStructure<F>&, const LinearFunctional<F>&);                   \
  template TraceFromElement<F> trace_from_p<F>(const DerivedStructure<F>&, const Element<F>&);

SEPIDEM_INSTANTIATE_INTEGRALS(GaussianRational)
SEPIDEM_INSTANTIATE_INTEGRALS(Complex)

}  // namespace sepidem
