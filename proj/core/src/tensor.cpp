// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepidem/tensor.hpp"

#include "sepidem/linalg.hpp"

namespace sepidem {

template <Scalar F>
TensorElement<F> make_tensor(const Algebra<F>& b, const Algebra<F>& c, Matrix<F> coeffs) {
  if (coeffs.rows() != b.dim() || coeffs.cols() != c.dim()) {
    throw Error(Errc::dimension_mismatch, "coefficient matrix shape does not match dim(B) x dim(C)");
  }
  return {b, c, std::move(coeffs)};
}

template <Scalar F>
TensorElement<F> simple_tensor(const Element<F>& b, const Element<F>& c) {
  Matrix<F> m(b.algebra.dim(), c.algebra.dim());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (literally_zero(b.coeffs[i])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = b.coeffs[i] * c.coeffs[j];
  }
  return {b.algebra, c.algebra, std::move(m)};
}

template <Scalar F>
TensorElement<F> tensor_mul(const TensorElement<F>& x, const TensorElement<F>& y) {
  require_same(x.left, y.left, "tensor product (left factor)");
  require_same(x.right, y.right, "tensor product (right factor)");
  const std::size_t nb = x.left.dim();
  const std::size_t nc = x.right.dim();
  Matrix<F> out(nb, nc);
  for (std::size_t a = 0; a < nb; ++a) {
    for (std::size_t c = 0; c < nb; ++c) {
      const auto& tb = x.left.terms(a, c);
      if (tb.empty()) continue;
      for (std::size_t b = 0; b < nc; ++b) {
        const F& xab = x.coeffs(a, b);
        if (literally_zero(xab)) continue;
        for (std::size_t d = 0; d < nc; ++d) {
          const auto& tc = x.right.terms(b, d);
          if (tc.empty()) continue;
          const F& ycd = y.coeffs(c, d);
          if (literally_zero(ycd)) continue;
          const F w = xab * ycd;
          for (const auto& s : tb)
            for (const auto& t : tc) out(s.index, t.index) += w * s.value * t.value;
        }
      }
    }
  }
  return {x.left, x.right, std::move(out)};
}

template <Scalar F>
Subspace<F> left_leg(const TensorElement<F>& e) {
  return {e.left, column_basis(e.coeffs)};
}

template <Scalar F>
Subspace<F> right_leg(const TensorElement<F>& e) {
  return {e.right, column_basis(e.coeffs.transpose())};
}

template <Scalar F>
bool is_full(const TensorElement<F>& e) {
  const std::size_t r = rank(e.coeffs);
  return r == e.left.dim() && r == e.right.dim();
}

template <Scalar F>
Element<F> slice_left(const LinearFunctional<F>& omega, const TensorElement<F>& e) {
  require_same(omega.algebra, e.left, "left slice");
  return {e.right, e.coeffs.transpose().apply(omega.covector)};
}

template <Scalar F>
Element<F> slice_right(const TensorElement<F>& e, const LinearFunctional<F>& omega) {
  require_same(omega.algebra, e.right, "right slice");
  return {e.left, e.coeffs.apply(omega.covector)};
}

template <Scalar F>
TensorElement<F> mult_sided(const TensorElement<F>& e, Placement where, const Element<F>& x) {
  const bool on_b = where == Placement::b_on_left || where == Placement::b_on_right;
  require_same(x.algebra, on_b ? e.left : e.right, "one-sided product");
  switch (where) {
    case Placement::b_on_left: return {e.left, e.right, e.left.left_mult(x.coeffs) * e.coeffs};
    case Placement::b_on_right: return {e.left, e.right, e.left.right_mult(x.coeffs) * e.coeffs};
    case Placement::c_on_left: return {e.left, e.right, e.coeffs * e.right.left_mult(x.coeffs).transpose()};
    case Placement::c_on_right: return {e.left, e.right, e.coeffs * e.right.right_mult(x.coeffs).transpose()};
  }
  return e;
}

template <Scalar F>
TensorElement<F> swap_and_map(const TensorElement<F>& e, const LinearMap<F>& f, const LinearMap<F>& g) {
  require_same(f.source, e.left, "swap_and_map: f source");
  require_same(f.target, e.right, "swap_and_map: f target");
  require_same(g.source, e.right, "swap_and_map: g source");
  require_same(g.target, e.left, "swap_and_map: g target");
  // sum X_ab g(c_b) (x) f(b_a)  ->  G X^T F^T
  return {e.left, e.right, g.matrix * e.coeffs.transpose() * f.matrix.transpose()};
}

#define SEPIDEM_INSTANTIATE_TENSOR(F)                                                                    \
  template TensorElement<F> make_tensor<F>(const Algebra<F>&, const Algebra<F>&, Matrix<F>);             \
  template TensorElement<F> simple_tensor<F>(const Element<F>&, const Element<F>&);                      \
  template TensorElement<F> tensor_mul<F>(const TensorElement<F>&, const TensorElement<F>&);             \
  template Subspace<F> left_leg<F>(const TensorElement<F>&);                                             \
  template Subspace<F> right_leg<F>(const TensorElement<F>&);                                            \
  template bool is_full<F>(const TensorElement<F>&);                                                     \
  template Element<F> slice_left<F>(const LinearFunctional<F>&, const TensorElement<F>&);                \
  template Element<F> slice_right<F>(const TensorElement<F>&, const LinearFunctional<F>&);               \
  template TensorElement<F> mult_sided<F>(const TensorElement<F>&, Placement, const Element<F>&);        \
  template TensorElement<F> swap_and_map<F>(const TensorElement<F>&, const LinearMap<F>&, const LinearMap<F>&);

SEPIDEM_INSTANTIATE_TENSOR(GaussianRational)
SEPIDEM_INSTANTIATE_TENSOR(Complex)

}  // namespace sepidem
