// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepidem/duality.hpp"

#include <algorithm>

#include "sepidem/star.hpp"

namespace sepidem {

std::string_view to_string(DualSide side) { return side == DualSide::b_dual ? "B-dual" : "C-dual"; }

namespace {

template <Scalar F>
Matrix<F> checked_inverse(const Matrix<F>& m, Errc code, const char* what) {
  auto inv = inverse(m);
  if (!inv) throw Error(code, std::string(what) + " is singular");
  return *inv;
}

template <Scalar F>
Vec<F> conj_vec(Vec<F> v) {
  for (auto& x : v) x = scalar_traits<F>::conj(x);
  return v;
}

template <Scalar F>
void require_side(const DualElement<F>& w, DualSide side, const char* op) {
  if (w.side != side) {
    throw Error(Errc::side_mismatch,
                std::string(op) + ": expected " + std::string(to_string(side)) + ", got " + std::string(to_string(w.side)));
  }
}

}  // namespace

template <Scalar F>
DualContext<F>::DualContext(DerivedStructure<F> d) : d_(std::move(d)) {
  s_inv_ = checked_inverse(d_.antipode_bc.matrix, Errc::not_invertible, "S");
  sp_inv_ = checked_inverse(d_.antipode_cb.matrix, Errc::not_invertible, "S'");
  gram_b_inv_ = checked_inverse(d_.right_integral.pairing_matrix().transpose(), Errc::not_faithful, "psi pairing");
  gram_c_inv_ = checked_inverse(d_.left_integral.pairing_matrix(), Errc::not_faithful, "phi pairing");
  self_adjoint_ = d_.e.left.has_star() && d_.e.right.has_star() && check_self_adjoint(d_.e).passed;
}

template <Scalar F>
DualElement<F> DualContext<F>::fourier_b(const Vec<F>& b) const {
  // psi(b x_j) = (L_b^T psi)_j
  const Matrix<F> lb = d_.e.left.left_mult(b);
  return {DualSide::b_dual, b, lb.transpose().apply(d_.right_integral.covector)};
}

template <Scalar F>
DualElement<F> DualContext<F>::fourier_c(const Vec<F>& c) const {
  // phi(y_j c) = (R_c^T phi)_j
  const Matrix<F> rc = d_.e.right.right_mult(c);
  return {DualSide::c_dual, c, rc.transpose().apply(d_.left_integral.covector)};
}

template <Scalar F>
DualElement<F> DualContext<F>::from_covector(DualSide side, const Vec<F>& covector) const {
  const Matrix<F>& g = side == DualSide::b_dual ? gram_b_inv_ : gram_c_inv_;
  return {side, g.apply(covector), covector};
}

template <Scalar F>
F DualContext<F>::pairing(const DualElement<F>& bhat, const DualElement<F>& chat) const {
  require_side(bhat, DualSide::b_dual, "pairing");
  require_side(chat, DualSide::c_dual, "pairing");
  const F direct = dot(bhat.covector, d_.e.coeffs.apply(chat.covector));
  const Algebra<F>& b = d_.e.left;
  const Algebra<F>& c = d_.e.right;
  const F via_phi = d_.left_integral(c.multiply(sp_inv_.apply(bhat.representing), chat.representing));
  const F via_psi = d_.right_integral(b.multiply(bhat.representing, s_inv_.apply(chat.representing)));
  const double scale = std::max({1.0, scalar_traits<F>::magnitude(direct), scalar_traits<F>::magnitude(via_phi)});
  if (!scalar_traits<F>::equal(direct, via_phi, scale) || !scalar_traits<F>::equal(direct, via_psi, scale)) {
    throw Error(Errc::reconstruction_mismatch, "pairing reductions disagree: " + to_string(direct) + ", " +
                                                   to_string(via_phi) + ", " + to_string(via_psi));
  }
  return direct;
}

template <Scalar F>
DualElement<F> DualContext<F>::dual_antipode(const DualElement<F>& w) const {
  DualElement<F> out;
  Vec<F> expected;
  if (w.side == DualSide::c_dual) {
    out = from_covector(DualSide::b_dual, d_.antipode_bc.matrix.transpose().apply(w.covector));
    expected = s_inv_.apply(w.representing);
  } else {
    out = from_covector(DualSide::c_dual, d_.antipode_cb.matrix.transpose().apply(w.covector));
    expected = sp_inv_.apply(w.representing);
  }
  if (!approx_equal(out.representing, expected)) {
    throw Error(Errc::reconstruction_mismatch, "dual antipode does not match the inverse antipode transform");
  }
  return out;
}

template <Scalar F>
DualElement<F> DualContext<F>::dual_star(const DualElement<F>& w) const {
  if (!self_adjoint_) {
    if (!d_.e.left.has_star() || !d_.e.right.has_star())
      throw Error(Errc::no_star_structure, "dual star needs star structures on both algebras");
    throw Error(Errc::precondition_failed, "dual star needs a self-adjoint element");
  }
  const Algebra<F>& b = d_.e.left;
  const Algebra<F>& c = d_.e.right;
  // covector of x -> conj(w(T(x)*)) is T^T conj(K)^T conj(w)
  auto raw = [&](const DualElement<F>& v) {
    if (v.side == DualSide::c_dual) {
      const Matrix<F> m = d_.antipode_bc.matrix.transpose() * c.star_matrix().conjugate().transpose();
      return from_covector(DualSide::b_dual, m.apply(conj_vec(v.covector)));
    }
    const Matrix<F> m = d_.antipode_cb.matrix.transpose() * b.star_matrix().conjugate().transpose();
    return from_covector(DualSide::c_dual, m.apply(conj_vec(v.covector)));
  };
  DualElement<F> out = raw(w);
  const Vec<F> expected = w.side == DualSide::c_dual ? d_.antipode_cb(c.star(w.representing))
                                                     : d_.antipode_bc(b.star(w.representing));
  if (!approx_equal(out.representing, expected)) {
    throw Error(Errc::reconstruction_mismatch, "dual star does not match the transformed adjoint");
  }
  if (!raw(out).same_as(w)) throw Error(Errc::reconstruction_mismatch, "dual star is not involutive");
  return out;
}

template <Scalar F>
F DualContext<F>::plancherel_form(const DualElement<F>& c1hat, const DualElement<F>& c2hat) const {
  require_side(c1hat, DualSide::c_dual, "plancherel_form");
  require_side(c2hat, DualSide::c_dual, "plancherel_form");
  const DualElement<F> c2star = dual_star(c2hat);
  const F direct = dot(c2star.covector, d_.e.coeffs.apply(c1hat.covector));
  const Algebra<F>& c = d_.e.right;
  const F expected = d_.left_integral(c.multiply(c.star(c2hat.representing), c1hat.representing));
  const double scale = std::max(1.0, scalar_traits<F>::magnitude(expected));
  if (!scalar_traits<F>::equal(direct, expected, scale)) {
    throw Error(Errc::reconstruction_mismatch,
                "Plancherel form " + to_string(direct) + " differs from phi(c2* c1) = " + to_string(expected));
  }
  return direct;
}

template class DualContext<GaussianRational>;
template class DualContext<Complex>;

}  // namespace sepidem
