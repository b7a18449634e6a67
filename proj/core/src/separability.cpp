// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepidem/separability.hpp"

#include <sstream>

#include "sepidem/integrals.hpp"
#include "sepidem/linalg.hpp"

namespace sepidem {

std::string_view to_string(IdempotencyKind kind) {
  switch (kind) {
    case IdempotencyKind::idempotent: return "idempotent";
    case IdempotencyKind::scalar_multiple: return "scalar_multiple";
    case IdempotencyKind::nilpotent_square_zero: return "nilpotent_square_zero";
    case IdempotencyKind::other: return "other";
  }
  return "other";
}

std::string_view to_string(CertificateMode mode) {
  switch (mode) {
    case CertificateMode::separability_idempotent: return "separability_idempotent";
    case CertificateMode::nilpotent_variant: return "nilpotent_variant";
    case CertificateMode::rejected: return "rejected";
  }
  return "rejected";
}

namespace {

/// Nonzero entries of a matrix as (row, col, value).
template <Scalar F>
struct SparseEntry {
  std::size_t row;
  std::size_t col;
  F value;
};

template <Scalar F>
std::vector<SparseEntry<F>> sparse_entries(const Matrix<F>& m) {
  std::vector<SparseEntry<F>> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!literally_zero(m(i, j))) out.push_back({i, j, m(i, j)});
  return out;
}

/// sum_ab Y_ab u_a v_b in `a`, where u_a = U[:,a] and v_b = V[:,b]
/// (V = nullptr means v_b is the basis element b).
template <Scalar F>
Vec<F> contract(const Algebra<F>& alg, const Matrix<F>& u, const Matrix<F>& y, const Matrix<F>* v) {
  const Matrix<F> w = u * y;
  Vec<F> out(alg.dim(), F(0));
  for (std::size_t b = 0; b < w.cols(); ++b) {
    if (v) {
      out = out + alg.multiply(w.column(b), v->column(b));
    } else {
      for (std::size_t i = 0; i < w.rows(); ++i) {
        if (literally_zero(w(i, b))) continue;
        for (const auto& t : alg.terms(i, b)) out[t.index] += w(i, b) * t.value;
      }
    }
  }
  return out;
}

template <Scalar F>
bool matrix_is_zero(const Matrix<F>& m, double scale) {
  for (const auto& x : m.data())
    if (!scalar_traits<F>::is_zero(x, scale)) return false;
  return true;
}

template <Scalar F>
Matrix<F> invert_coefficients(const TensorElement<F>& e) {
  auto inv = inverse(e.coeffs);
  if (!inv) throw Error(Errc::not_full, "coefficient matrix is not invertible");
  return std::move(*inv);
}

template <Scalar F>
void require_full(const TensorElement<F>& e, const char* what) {
  if (!is_full(e)) throw Error(Errc::not_full, std::string(what) + " requires a full element");
}

}  // namespace

template <Scalar F>
IdempotencyVerdict<F> verify_idempotent(const TensorElement<F>& e) {
  IdempotencyVerdict<F> v;
  const Matrix<F> sq = tensor_mul(e, e).coeffs;
  const double scale = std::max(e.coeffs.max_abs(), sq.max_abs());
  if (approx_equal(sq, e.coeffs)) {
    v.kind = IdempotencyKind::idempotent;
    v.lambda = F(1);
    return v;
  }
  if (matrix_is_zero(sq, scale)) {
    v.kind = IdempotencyKind::nilpotent_square_zero;
    v.lambda = F(0);
    return v;
  }
  // Candidate lambda from the largest coefficient of E.
  std::size_t best = 0;
  double best_abs = -1.0;
  for (std::size_t k = 0; k < e.coeffs.data().size(); ++k) {
    const double a = scalar_traits<F>::magnitude(e.coeffs.data()[k]);
    if (a > best_abs) {
      best_abs = a;
      best = k;
    }
  }
  if (literally_zero(e.coeffs.data()[best])) {
    v.kind = IdempotencyKind::other;
    v.witness = "E = 0 but E^2 != 0";
    return v;
  }
  const F lambda = sq.data()[best] / e.coeffs.data()[best];
  if (approx_equal(sq, e.coeffs * lambda)) {
    v.kind = IdempotencyKind::scalar_multiple;
    v.lambda = lambda;
    v.witness = "E^2 = " + to_string(lambda) + " E";
    return v;
  }
  v.kind = IdempotencyKind::other;
  v.witness = "E^2 is not a scalar multiple of E";
  return v;
}

template <Scalar F>
LinearMap<F> derive_antipode_bc(const TensorElement<F>& e) {
  require_full(e, "derivation of S");
  const Algebra<F>& b = e.left;
  const Algebra<F>& c = e.right;
  const Matrix<F>& x = e.coeffs;
  // R_b X = X R_c^T with X invertible gives R_c^T = X^-1 R_b X, and c = R_c 1.
  const Matrix<F> xinv = invert_coefficients(e);
  const Vec<F> v = xinv.transpose().apply(c.unit());
  const Matrix<F> xt = x.transpose();
  Matrix<F> s(c.dim(), b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const Matrix<F> rb = b.right_mult_basis(i);
    const Vec<F> img = xt.apply(rb.transpose().apply(v));
    if (!approx_equal(rb * x, x * c.right_mult(img).transpose())) {
      throw Error(Errc::no_solution, "E(b (x) 1) is not in E(1 (x) C) for b = " + b.label(i));
    }
    s.set_column(i, img);
  }
  return make_map(b, c, std::move(s), MapKind::anti_multiplicative, true, "S");
}

template <Scalar F>
LinearMap<F> derive_antipode_cb(const TensorElement<F>& e) {
  require_full(e, "derivation of S'");
  const Algebra<F>& b = e.left;
  const Algebra<F>& c = e.right;
  const Matrix<F>& x = e.coeffs;
  // X L_c^T = L_b X gives L_b = X L_c^T X^-1, and b = L_b 1.
  const Matrix<F> xinv = invert_coefficients(e);
  const Vec<F> w = xinv.apply(b.unit());
  Matrix<F> sp(b.dim(), c.dim());
  for (std::size_t k = 0; k < c.dim(); ++k) {
    const Matrix<F> lct = c.left_mult_basis(k).transpose();
    const Vec<F> img = x.apply(lct.apply(w));
    if (!approx_equal(x * lct, b.left_mult(img) * x)) {
      throw Error(Errc::no_solution, "(1 (x) c)E is not in (B (x) 1)E for c = " + c.label(k));
    }
    sp.set_column(k, img);
  }
  return make_map(c, b, std::move(sp), MapKind::anti_multiplicative, true, "S'");
}

template <Scalar F>
LinearMap<F> derive_one_sided(const TensorElement<F>& e, Absorption given) {
  require_full(e, "one-sided derivation");
  if (verify_idempotent(e).kind != IdempotencyKind::idempotent) {
    throw Error(Errc::precondition_failed, "one-sided derivation requires an idempotent");
  }
  const Matrix<F>& x = e.coeffs;
  const Matrix<F> xinv = invert_coefficients(e);

  if (given == Absorption::c_side) {
    LinearMap<F> sp = [&] {
      try {
        return derive_antipode_cb(e);
      } catch (const Error& err) {
        throw Error(Errc::one_sided_condition_fails, err.what());
      }
    }();
    // S = X^T (X S'^T)^-1
    auto core = inverse(x * sp.matrix.transpose());
    if (!core) throw Error(Errc::one_sided_condition_fails, "X S'^T is singular");
    Matrix<F> s = x.transpose() * *core;
    for (std::size_t i = 0; i < e.left.dim(); ++i) {
      if (!approx_equal(e.left.right_mult_basis(i) * x, x * e.right.right_mult(s.column(i)).transpose())) {
        throw Error(Errc::one_sided_condition_fails,
                    "recovered S violates E(b (x) 1) = E(1 (x) S(b)) at " + e.left.label(i));
      }
    }
    LinearMap<F> out = make_map(e.left, e.right, std::move(s), MapKind::anti_multiplicative, true, "S");
    if (!maps_equal(out, derive_antipode_bc(e))) {
      throw Error(Errc::reconstruction_mismatch, "recovered S differs from the direct derivation");
    }
    return out;
  }

  LinearMap<F> s = [&] {
    try {
      return derive_antipode_bc(e);
    } catch (const Error& err) {
      throw Error(Errc::one_sided_condition_fails, err.what());
    }
  }();
  // S' = X S^-T X^-T
  auto sinv = inverse(s.matrix);
  if (!sinv) throw Error(Errc::one_sided_condition_fails, "S is singular");
  Matrix<F> sp = x * sinv->transpose() * xinv.transpose();
  for (std::size_t k = 0; k < e.right.dim(); ++k) {
    if (!approx_equal(x * e.right.left_mult_basis(k).transpose(), e.left.left_mult(sp.column(k)) * x)) {
      throw Error(Errc::one_sided_condition_fails,
                  "recovered S' violates (1 (x) c)E = (S'(c) (x) 1)E at " + e.right.label(k));
    }
  }
  LinearMap<F> out = make_map(e.right, e.left, std::move(sp), MapKind::anti_multiplicative, true, "S'");
  if (!maps_equal(out, derive_antipode_cb(e))) {
    throw Error(Errc::reconstruction_mismatch, "recovered S' differs from the direct derivation");
  }
  return out;
}

template <Scalar F>
CheckReport counit_identities(const TensorElement<F>& e, const LinearMap<F>& s, const LinearMap<F>& sp) {
  CheckReport report;
  const Algebra<F>& b = e.left;
  const Algebra<F>& c = e.right;
  for (std::size_t k = 0; k < c.dim(); ++k) {
    const Matrix<F> y = e.coeffs * c.right_mult_basis(k).transpose();
    const Vec<F> got = contract(c, s.matrix, y, static_cast<const Matrix<F>*>(nullptr));
    if (!approx_equal(got, c.basis(k))) report.fail({"m(S (x) id)(E(1 (x) c)) = c", {k}, c.label(k)});
  }
  const Matrix<F> id = Matrix<F>::identity(b.dim());
  for (std::size_t k = 0; k < b.dim(); ++k) {
    const Matrix<F> y = b.left_mult_basis(k) * e.coeffs;
    const Vec<F> got = contract(b, id, y, &sp.matrix);
    if (!approx_equal(got, b.basis(k))) report.fail({"m(id (x) S')((b (x) 1)E) = b", {k}, b.label(k)});
  }
  return report;
}

template <Scalar F>
Element<F> central_element(const TensorElement<F>& e, const LinearMap<F>& s) {
  const Algebra<F>& c = e.right;
  Element<F> z{c, contract(c, s.matrix, e.coeffs, static_cast<const Matrix<F>*>(nullptr))};
  for (std::size_t k = 0; k < c.dim(); ++k) {
    const Vec<F> bk = c.basis(k);
    if (!approx_equal(c.multiply(z.coeffs, bk), c.multiply(bk, z.coeffs))) {
      throw Error(Errc::centrality_violation, "e does not commute with " + c.label(k));
    }
  }
  return z;
}

template <Scalar F>
CheckReport swap_identity(const TensorElement<F>& e, const LinearMap<F>& s, const LinearMap<F>& sp) {
  CheckReport report;
  const TensorElement<F> flipped = swap_and_map(e, s, sp);
  if (!approx_equal(flipped.coeffs, e.coeffs)) {
    for (std::size_t i = 0; i < e.coeffs.rows(); ++i)
      for (std::size_t j = 0; j < e.coeffs.cols(); ++j)
        if (!scalar_traits<F>::equal(flipped.coeffs(i, j), e.coeffs(i, j), e.coeffs.max_abs()))
          report.fail({"(S (x) S')E = flip(E)", {i, j}, e.left.label(i) + " (x) " + e.right.label(j)});
  }
  return report;
}

template <Scalar F>
CheckReport splitting_check(const TensorElement<F>& e, const LinearMap<F>& s) {
  CheckReport report;
  const Algebra<F>& b = e.left;
  const Algebra<F>& c = e.right;
  const Matrix<F>& x = e.coeffs;
  const std::size_t nb = b.dim();
  const std::size_t nc = c.dim();

  // gamma(c_k) = X R_{c_k}^T
  std::vector<Matrix<F>> gamma(nc);
  std::vector<std::vector<SparseEntry<F>>> rc(nc);
  for (std::size_t k = 0; k < nc; ++k) {
    const Matrix<F> r = c.right_mult_basis(k);
    gamma[k] = x * r.transpose();
    rc[k] = sparse_entries(r);
  }

  // m(gamma(c)) = c
  for (std::size_t k = 0; k < nc; ++k) {
    const Vec<F> got = contract(c, s.matrix, gamma[k], static_cast<const Matrix<F>*>(nullptr));
    if (!approx_equal(got, c.basis(k))) report.fail({"m(gamma(c)) = c", {k}, c.label(k)});
  }

  double scale = 0.0;
  for (const auto& g : gamma) scale = std::max(scale, g.max_abs());

  Matrix<F> diff(nb, nc);
  for (std::size_t bi = 0; bi < nb; ++bi) {
    const Vec<F> sb = s.matrix.column(bi);
    // lhs_y = gamma(S(b) c_y)
    std::vector<Matrix<F>> lhs(nc);
    double lscale = scale;
    for (std::size_t y = 0; y < nc; ++y) {
      Vec<F> z(nc, F(0));
      for (std::size_t i = 0; i < nc; ++i) {
        if (literally_zero(sb[i])) continue;
        for (const auto& t : c.terms(i, y)) z[t.index] += sb[i] * t.value;
      }
      Matrix<F> acc(nb, nc);
      for (std::size_t k = 0; k < nc; ++k) {
        if (literally_zero(z[k])) continue;
        Matrix<F> term = gamma[k];
        term *= z[k];
        acc += term;
      }
      lscale = std::max(lscale, acc.max_abs());
      lhs[y] = std::move(acc);
    }
    const auto rb = sparse_entries(b.right_mult_basis(bi));

    for (std::size_t xi = 0; xi < nc; ++xi) {
      const Matrix<F>& gx = gamma[xi];
      for (std::size_t ci = 0; ci < nc; ++ci) {
        const auto& xc = c.terms(xi, ci);
        // rhs = R_b gamma(x) R_c^T, entry (i, j) = sum R_b(i, a) gamma(x)(a, l) R_c(j, l)
        if (xc.empty()) {
          bool ok = true;
          for (const auto& p : rb) {
            for (const auto& q : rc[ci]) {
              const F& g = gx(p.col, q.col);
              if (literally_zero(g)) continue;
              diff(p.row, q.row) += p.value * g * q.value;
            }
          }
          for (const auto& p : rb) {
            for (const auto& q : rc[ci]) {
              if (!scalar_traits<F>::is_zero(diff(p.row, q.row), lscale)) ok = false;
              diff(p.row, q.row) = F(0);
            }
          }
          if (!ok) report.fail({"gamma(S(b) x c) = gamma(x)(b (x) c)", {bi, xi, ci}, "lhs vanishes, rhs does not"});
          continue;
        }
        for (std::size_t p = 0; p < nb; ++p)
          for (std::size_t q = 0; q < nc; ++q) diff(p, q) = F(0);
        for (const auto& t : xc) {
          const Matrix<F>& l = lhs[t.index];
          for (std::size_t p = 0; p < nb; ++p)
            for (std::size_t q = 0; q < nc; ++q)
              if (!literally_zero(l(p, q))) diff(p, q) += t.value * l(p, q);
        }
        for (const auto& p : rb) {
          for (const auto& q : rc[ci]) {
            const F& g = gx(p.col, q.col);
            if (literally_zero(g)) continue;
            diff(p.row, q.row) -= p.value * g * q.value;
          }
        }
        if (!matrix_is_zero(diff, lscale)) {
          report.fail({"gamma(S(b) x c) = gamma(x)(b (x) c)", {bi, xi, ci},
                       b.label(bi) + ", " + c.label(xi) + ", " + c.label(ci)});
        }
      }
    }
    for (std::size_t p = 0; p < nb; ++p)
      for (std::size_t q = 0; q < nc; ++q) diff(p, q) = F(0);
  }
  return report;
}

namespace {

template <Scalar F>
DeterminacyResult determinacy_from_maps(const TensorElement<F>& e, const TensorElement<F>& f, const LinearMap<F>& se,
                                        const LinearMap<F>& spe, const LinearMap<F>& sf, const LinearMap<F>& spf) {
  DeterminacyResult r;
  r.applicable = maps_equal(se, sf) && maps_equal(spe, spf);
  if (!r.applicable) {
    r.passed = true;
    return r;
  }
  const TensorElement<F> ef = tensor_mul(e, f);
  r.elements_equal = e == f;
  r.ef_equals_e = ef == e;
  r.ef_equals_f = ef == f;
  r.passed = r.elements_equal && r.ef_equals_e && r.ef_equals_f;
  return r;
}

}  // namespace

template <Scalar F>
DeterminacyResult determinacy_check(const TensorElement<F>& e, const TensorElement<F>& f) {
  return determinacy_from_maps(e, f, derive_antipode_bc(e), derive_antipode_cb(e), derive_antipode_bc(f),
                               derive_antipode_cb(f));
}

template <Scalar F>
LinearMap<F> conjugacy_transport(const TensorElement<F>& e1, const TensorElement<F>& e2,
                                 const LinearMap<F>& alpha_b) {
  require_same(e1.left, e2.left, "conjugacy transport (B)");
  require_same(e1.right, e2.right, "conjugacy transport (C)");
  require_same(alpha_b.source, e1.left, "conjugacy transport (alpha_B source)");
  require_same(alpha_b.target, e1.left, "conjugacy transport (alpha_B target)");
  const CheckReport mult = check_map_kind(alpha_b.source, alpha_b.target, alpha_b.matrix, MapKind::multiplicative,
                                          "alpha_B");
  if (!mult) throw Error(Errc::not_multiplicative, mult.summary());
  if (rank(alpha_b.matrix) != alpha_b.matrix.rows()) throw Error(Errc::not_bijective, "alpha_B is not bijective");

  const auto s1 = derive_antipode_bc(e1);
  const auto sp1 = derive_antipode_cb(e1);
  const auto s2 = derive_antipode_bc(e2);
  const auto sp2 = derive_antipode_cb(e2);
  const Matrix<F> m1 = sp1.matrix * s1.matrix;
  const Matrix<F> m2 = sp2.matrix * s2.matrix;
  if (!approx_equal(m2 * alpha_b.matrix, alpha_b.matrix * m1)) {
    throw Error(Errc::intertwiner_condition_fails, "S'_2 S_2 alpha_B != alpha_B S'_1 S_1");
  }
  auto sp2inv = inverse(sp2.matrix);
  if (!sp2inv) throw Error(Errc::not_invertible, "S'_2 is singular");
  Matrix<F> alpha_c = *sp2inv * alpha_b.matrix * sp1.matrix;
  if (!approx_equal(e2.coeffs, alpha_b.matrix * e1.coeffs * alpha_c.transpose())) {
    throw Error(Errc::transport_mismatch, "E_2 != (alpha_B (x) alpha_C)E_1");
  }
  return make_map(e1.right, e1.right, std::move(alpha_c), MapKind::multiplicative, true, "alpha_C");
}

template <Scalar F>
SeparabilityCertificate<F> certify(const TensorElement<F>& e, CertifyOptions options) {
  SeparabilityCertificate<F> cert;
  cert.notes.push_back("regularity: automatic (E lies in B (x) C at finite dimension)");
  cert.notes.push_back("local units: automatic (unital algebras)");

  cert.idempotency = verify_idempotent(e);
  cert.full = is_full(e);
  if (!cert.full) {
    cert.reason = "not full";
    return cert;
  }
  try {
    cert.antipode_bc = derive_antipode_bc(e);
    cert.absorption_b_side = true;
  } catch (const Error& err) {
    cert.reason = std::string("absorption E(B (x) 1) = E(1 (x) C) fails: ") + err.what();
    return cert;
  }
  try {
    cert.antipode_cb = derive_antipode_cb(e);
    cert.absorption_c_side = true;
  } catch (const Error& err) {
    cert.reason = std::string("absorption (B (x) 1)E = (1 (x) C)E fails: ") + err.what();
    return cert;
  }
  const LinearMap<F>& s = *cert.antipode_bc;
  const LinearMap<F>& sp = *cert.antipode_cb;

  cert.counit = counit_identities(e, s, sp);
  try {
    cert.central = central_element(e, s);
  } catch (const Error& err) {
    cert.centrality.fail({"central element", {}, err.what()});
  }
  cert.swap = swap_identity(e, s, sp);
  cert.splitting = splitting_check(e, s);
  const DeterminacyResult det = determinacy_from_maps(e, e, s, sp, s, sp);
  if (!det.passed) cert.determinacy.fail({"E determined by (S, S')", {}, "EF != E or EF != F for F = E"});

  switch (cert.idempotency.kind) {
    case IdempotencyKind::nilpotent_square_zero:
      cert.mode = CertificateMode::nilpotent_variant;
      cert.reason = "E^2 = 0";
      return cert;
    case IdempotencyKind::scalar_multiple:
      cert.reason = "not idempotent: " + cert.idempotency.witness;
      return cert;
    case IdempotencyKind::other:
      cert.reason = "not idempotent: " + cert.idempotency.witness;
      return cert;
    case IdempotencyKind::idempotent:
      break;
  }

  const std::pair<const char*, const CheckReport*> checks[] = {
      {"counit identities", &cert.counit}, {"centrality", &cert.centrality}, {"swap identity", &cert.swap},
      {"splitting", &cert.splitting},      {"determinacy", &cert.determinacy}};
  for (const auto& [name, rep] : checks) {
    if (!*rep) {
      cert.reason = std::string("identity check failed: ") + name + " (" + rep->summary() + ")";
      return cert;
    }
  }
  cert.mode = CertificateMode::separability_idempotent;

  if (options.derive_integrals) {
    try {
      cert.left_integral = detail::solve_left_integral(e);
      cert.right_integral = detail::solve_right_integral(e);
      auto mod = modular_automorphisms(s, sp, *cert.left_integral, *cert.right_integral);
      cert.modular_c = std::move(mod.modular_c);
      cert.modular_b = std::move(mod.modular_b);
      cert.integrals = check_integral_transport(*cert.left_integral, *cert.right_integral, s, sp);
    } catch (const Error& err) {
      cert.integrals.fail({"integral derivation", {}, err.what()});
    }
    if (!cert.integrals) {
      cert.mode = CertificateMode::rejected;
      cert.reason = "identity check failed: integrals (" + cert.integrals.summary() + ")";
    }
  }
  return cert;
}

#define SEPIDEM_INSTANTIATE_SEPARABILITY(F)                                                                   \
  template IdempotencyVerdict<F> verify_idempotent<F>(const TensorElement<F>&);                               \
  template LinearMap<F> derive_antipode_bc<F>(const TensorElement<F>&);                                       \
  template LinearMap<F> derive_antipode_cb<F>(const TensorElement<F>&);                                       \
  template LinearMap<F> derive_one_sided<F>(const TensorElement<F>&, Absorption);                             \
  template CheckReport counit_identities<F>(const TensorElement<F>&, const LinearMap<F>&, const LinearMap<F>&); \
  template Element<F> central_element<F>(const TensorElement<F>&, const LinearMap<F>&);                       \
  template CheckReport swap_identity<F>(const TensorElement<F>&, const LinearMap<F>&, const LinearMap<F>&);   \
  template CheckReport splitting_check<F>(const TensorElement<F>&, const LinearMap<F>&);                      \
  template DeterminacyResult determinacy_check<F>(const TensorElement<F>&, const TensorElement<F>&);          \
  template LinearMap<F> conjugacy_transport<F>(const TensorElement<F>&, const TensorElement<F>&,              \
                                               const LinearMap<F>&);                                          \
  template SeparabilityCertificate<F> certify<F>(const TensorElement<F>&, CertifyOptions);

SEPIDEM_INSTANTIATE_SEPARABILITY(GaussianRational)
SEPIDEM_INSTANTIATE_SEPARABILITY(Complex)

}  // namespace sepidem
