// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepidem/star.hpp"

#include <algorithm>
#include <future>

#include "sepidem/constructions.hpp"
#include "sepidem/random_instances.hpp"

namespace sepidem {

namespace {

template <Scalar F>
F conj_of(const F& x) {
  return scalar_traits<F>::conj(x);
}

/// lhs <= rhs for values that should be real; imaginary parts must vanish.
template <Scalar F>
bool real_leq(const F& lhs, const F& rhs) {
  if constexpr (scalar_traits<F>::exact) {
    return lhs.is_real() && rhs.is_real() && lhs.real() <= rhs.real();
  } else {
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    const double tol = float_tolerance() * scale;
    return std::abs(lhs.imag()) <= tol && std::abs(rhs.imag()) <= tol && lhs.real() <= rhs.real() + tol;
  }
}

template <Scalar F>
Matrix<F> gram_matrix(const LinearFunctional<F>& f) {
  const Algebra<F>& a = f.algebra;
  const std::size_t n = a.dim();
  std::vector<Vec<F>> stars(n);
  for (std::size_t i = 0; i < n; ++i) stars[i] = a.star(a.basis(i));
  Matrix<F> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = f(a.multiply(stars[i], a.basis(j)));
  return g;
}

template <Scalar F>
std::size_t block_of(const Algebra<F>& a, std::size_t index) {
  const auto& blocks = a.blocks();
  for (std::size_t k = blocks.size(); k-- > 0;)
    if (index >= a.block_offset(k)) return k;
  return 0;
}

template <Scalar F>
Matrix<F> submatrix(const Matrix<F>& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  Matrix<F> out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(r0 + i, c0 + j);
  return out;
}

/// The map restricted to block k must vanish off the block and agree with `local`.
template <Scalar F>
void require_blockwise(const Matrix<F>& global, const Matrix<F>& local, std::size_t offset, const char* name,
                       std::size_t block) {
  const std::size_t m = local.rows();
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < global.rows(); ++i) {
      const bool inside = i >= offset && i < offset + m;
      const F& g = global(i, offset + j);
      const bool ok = inside ? scalar_traits<F>::equal(g, local(i - offset, j), global.max_abs())
                             : scalar_traits<F>::is_zero(g, global.max_abs());
      if (!ok) {
        throw Error(Errc::reconstruction_mismatch,
                    std::string(name) + " does not restrict to block " + std::to_string(block + 1));
      }
    }
  }
}

template <Scalar F>
void require_blockwise(const Vec<F>& global, const Vec<F>& local, std::size_t offset, const char* name,
                       std::size_t block) {
  const double scale = max_abs(global);
  for (std::size_t j = 0; j < local.size(); ++j) {
    if (!scalar_traits<F>::equal(global[offset + j], local[j], scale)) {
      throw Error(Errc::reconstruction_mismatch,
                  std::string(name) + " does not restrict to block " + std::to_string(block + 1));
    }
  }
}

/// Basis of the common kernel of (L_{f(b)} - R_b) over all basis b; must be a line.
template <Scalar F>
Vec<F> intertwiner(const Algebra<F>& a, const Matrix<F>& f, const char* name) {
  const std::size_t d = a.dim();
  Matrix<F> system(d * d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const Matrix<F> block = a.left_mult(f.column(k)) - a.right_mult_basis(k);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) system(k * d + i, j) = block(i, j);
  }
  const Matrix<F> kernel = nullspace(system);
  if (kernel.cols() != 1) {
    throw Error(Errc::solution_space_dimension_not_one,
                std::string(name) + ": intertwiner space has dimension " + std::to_string(kernel.cols()));
  }
  return kernel.column(0);
}

}  // namespace

template <Scalar F>
CheckReport check_self_adjoint(const TensorElement<F>& e) {
  CheckReport report;
  const Matrix<F>& kb = e.left.star_matrix();
  const Matrix<F>& kc = e.right.star_matrix();
  const Matrix<F> es = kb * e.coeffs.conjugate() * kc.transpose();
  const double scale = e.coeffs.max_abs();
  for (std::size_t i = 0; i < es.rows(); ++i)
    for (std::size_t j = 0; j < es.cols(); ++j)
      if (!scalar_traits<F>::equal(es(i, j), e.coeffs(i, j), scale))
        report.fail({"E* = E", {i, j}, e.left.label(i) + " (x) " + e.right.label(j)});
  return report;
}

template <Scalar F>
CheckReport check_star_antipode(const LinearMap<F>& s, const LinearMap<F>& sp) {
  CheckReport report;
  const Algebra<F>& b = s.source;
  const Algebra<F>& c = s.target;
  for (std::size_t k = 0; k < b.dim(); ++k) {
    const Vec<F> got = b.star(sp(c.star(s.matrix.column(k))));
    if (!approx_equal(got, b.basis(k))) report.fail({"S'(S(b)*)* = b", {k}, b.label(k)});
  }
  for (std::size_t k = 0; k < c.dim(); ++k) {
    const Vec<F> got = c.star(s(b.star(sp.matrix.column(k))));
    if (!approx_equal(got, c.basis(k))) report.fail({"S(S'(c)*)* = c", {k}, c.label(k)});
  }
  return report;
}

template <Scalar F>
CheckReport check_integral_star(const LinearFunctional<F>& f, const LinearMap<F>& modular) {
  CheckReport report;
  const Algebra<F>& a = f.algebra;
  const double scale = max_abs(f.covector);
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const F lhs = f(a.star(a.basis(k)));
    if (!scalar_traits<F>::equal(lhs, conj_of(f.covector[k]), scale))
      report.fail({"f(x*) = conj f(x)", {k}, a.label(k)});
  }
  auto inv = inverse(modular.matrix);
  if (!inv) {
    report.fail({"modular map invertible", {}, "singular"});
    return report;
  }
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const Vec<F> lhs = modular(a.star(a.basis(k)));
    const Vec<F> rhs = a.star(inv->column(k));
    if (!approx_equal(lhs, rhs)) report.fail({"m(x*) = (m^-1(x))*", {k}, a.label(k)});
  }
  return report;
}

template <Scalar F>
PositivityResult<F> check_positive(const LinearFunctional<F>& f) {
  PositivityResult<F> out;
  out.gram = gram_matrix(f);
  out.psd = psd_test(out.gram);
  return out;
}

template <Scalar F>
CheckReport check_positivity_transfer(const DerivedStructure<F>& d, const std::vector<Vec<F>>& extra) {
  CheckReport report;
  const Algebra<F>& b = d.e.left;
  const Algebra<F>& c = d.e.right;
  auto one = [&](const Vec<F>& x, std::size_t idx, const std::string& label) {
    const F lhs = d.right_integral(b.multiply(b.star(x), x));
    const Vec<F> sx = d.antipode_bc(x);
    const F rhs = d.left_integral(c.multiply(c.star(sx), sx));
    if (!scalar_traits<F>::equal(lhs, rhs)) report.fail({"psi(b* b) = phi(S(b)* S(b))", {idx}, label});
  };
  for (std::size_t k = 0; k < b.dim(); ++k) one(b.basis(k), k, b.label(k));
  for (std::size_t k = 0; k < extra.size(); ++k) one(extra[k], k, "sample " + std::to_string(k));
  return report;
}

template <Scalar F>
CheckReport check_cauchy_bound(const DerivedStructure<F>& d, std::size_t samples, std::uint64_t seed) {
  CheckReport report;
  RationalSampler rs(seed);
  auto side = [&](const Algebra<F>& a, const LinearFunctional<F>& f, const Vec<F>& x, const Vec<F>& x1,
                  std::size_t k, const char* law) {
    const Vec<F> xs = a.star(x);
    const Vec<F> x1s = a.star(x1);
    const Vec<F> inner = a.multiply(a.multiply(x1s, x1), x);
    const F lhs = f(a.multiply(xs, inner));
    const F rhs = f(a.multiply(x1, x1s)) * f(a.multiply(xs, x));
    if (!real_leq(lhs, rhs)) {
      report.fail({law, {k}, "lhs " + to_string(lhs) + " > rhs " + to_string(rhs)});
    }
  };
  const Algebra<F>& b = d.e.left;
  const Algebra<F>& c = d.e.right;
  for (std::size_t k = 0; k <= samples; ++k) {
    const bool zero_case = k == samples;
    const Vec<F> x = random_element(c, rs, true);
    const Vec<F> x1 = zero_case ? c.zero() : random_element(c, rs, true);
    side(c, d.left_integral, x, x1, k, "phi(c* c1* c1 c) <= phi(c1 c1*) phi(c* c)");
    const Vec<F> y = random_element(b, rs, true);
    const Vec<F> y1 = zero_case ? b.zero() : random_element(b, rs, true);
    side(b, d.right_integral, y, y1, k, "psi(b* b1* b1 b) <= psi(b1 b1*) psi(b* b)");
  }
  return report;
}

template <Scalar F>
GnsData<F> gns_data(const LinearFunctional<F>& f, std::size_t samples, std::uint64_t seed) {
  const Algebra<F>& a = f.algebra;
  const std::size_t n = a.dim();
  GnsData<F> out;
  const PositivityResult<F> pos = check_positive(f);
  if (!pos.positive() || pos.psd.rank != n) {
    throw Error(Errc::gram_not_positive_definite, "Gram matrix of the functional is not positive definite");
  }
  out.gram = pos.gram;
  const Matrix<F>& g = out.gram;
  for (std::size_t k = 0; k < n; ++k) out.operators.push_back(a.left_mult_basis(k));
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix<F> pis = a.left_mult(a.star(a.basis(k)));
    if (!approx_equal(Matrix<F>(g * pis), Matrix<F>(out.operators[k].adjoint() * g)))
      out.adjoint_law.fail({"pi(x*) = pi(x)^dagger", {k}, a.label(k)});
  }
  // |pi(x) L(y)|^2 = f((xy)* xy)
  auto bound = [&](const Vec<F>& x, const Vec<F>& y, std::size_t k) {
    const Vec<F> xy = a.multiply(x, y);
    const F lhs = f(a.multiply(a.star(xy), xy));
    const F rhs = f(a.multiply(x, a.star(x))) * f(a.multiply(a.star(y), y));
    if (!real_leq(lhs, rhs)) out.norm_bound.fail({"|pi(x) L(y)|^2 <= f(x x*) |L(y)|^2", {k}, to_string(lhs)});
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bound(a.basis(i), a.basis(j), i * n + j);
  RationalSampler rs(seed);
  for (std::size_t k = 0; k < samples; ++k) bound(random_element(a, rs, true), random_element(a, rs, true), k);
  return out;
}

template <Scalar F>
TwistData<F> recover_twist(const TensorElement<F>& e) {
  if (!e.left.has_blocks() || !e.right.has_blocks() || e.left.blocks().size() != 1 ||
      e.right.blocks().size() != 1 || e.left.blocks()[0] != e.right.blocks()[0]) {
    throw Error(Errc::precondition_failed, "twist recovery needs M_n (x) M_n; decompose direct sums first");
  }
  const std::size_t n = e.left.blocks()[0];
  const Algebra<F>& a = e.left;
  const LinearMap<F> s_map = derive_antipode_bc(e);
  const LinearMap<F> sp_map = derive_antipode_cb(e);
  const LinearMap<F> transpose = transpose_anti_map(a);

  // S'(S0(b)) r = r b and S0(S(b)) s = s b
  Vec<F> r = intertwiner(a, Matrix<F>(sp_map.matrix * transpose.matrix), "r");
  Vec<F> s = intertwiner(a, Matrix<F>(transpose.matrix * s_map.matrix), "s");

  std::size_t first = 0;
  while (first < r.size() && scalar_traits<F>::is_zero(r[first], max_abs(r))) ++first;
  const F lead = r[first];
  for (auto& x : r) x /= lead;

  TwistData<F> out{n, coeffs_to_matrix(r, n), coeffs_to_matrix(s, n)};
  const F tr = Matrix<F>(out.s * out.r).trace();
  const double scale = out.s.max_abs() * out.r.max_abs();
  if (!scalar_traits<F>::is_zero(tr, scale)) {
    out.s *= F(static_cast<long>(n)) / tr;
  } else {
    // Tr(sr) = 0: fit the scale of s against E directly.
    const Matrix<F> base = twisted_coefficients(out.r, out.s);
    std::size_t k = 0;
    double best = -1.0;
    for (std::size_t p = 0; p < base.data().size(); ++p) {
      const double m = scalar_traits<F>::magnitude(base.data()[p]);
      if (m > best) {
        best = m;
        k = p;
      }
    }
    out.s *= e.coeffs.data()[k] / base.data()[k];
  }
  if (!approx_equal(twisted_coefficients(out.r, out.s), e.coeffs)) {
    throw Error(Errc::reconstruction_mismatch, "E != (r (x) 1) E0 (s (x) 1) after normalization");
  }
  return out;
}

template <Scalar F>
std::vector<BlockData<F>> decompose_blocks(const TensorElement<F>& e) {
  if (!e.left.has_blocks() || !e.right.has_blocks() || e.left.blocks() != e.right.blocks()) {
    throw Error(Errc::precondition_failed, "decomposition needs aligned block presentations on B and C");
  }
  const auto& sizes = e.left.blocks();
  for (std::size_t i = 0; i < e.coeffs.rows(); ++i) {
    for (std::size_t j = 0; j < e.coeffs.cols(); ++j) {
      if (literally_zero(e.coeffs(i, j))) continue;
      const std::size_t bi = block_of(e.left, i);
      const std::size_t bj = block_of(e.right, j);
      if (bi != bj && !scalar_traits<F>::is_zero(e.coeffs(i, j), e.coeffs.max_abs())) {
        throw Error(Errc::cross_block_leakage, "blocks (" + std::to_string(bi + 1) + "," + std::to_string(bj + 1) +
                                                   ") at " + e.left.label(i) + " (x) " + e.right.label(j));
      }
    }
  }

  const bool idempotent = verify_idempotent(e).kind == IdempotencyKind::idempotent;
  const LinearMap<F> s = derive_antipode_bc(e);
  const LinearMap<F> sp = derive_antipode_cb(e);

  std::vector<std::future<BlockData<F>>> jobs;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    jobs.push_back(std::async(std::launch::async, [&e, &sizes, k] {
      const std::size_t n = sizes[k];
      const std::size_t off = e.left.block_offset(k);
      const Algebra<F> local = make_matrix_algebra<F>(n, e.left.has_star() && e.right.has_star());
      TensorElement<F> component{local, local, submatrix(e.coeffs, off, e.right.block_offset(k), n * n, n * n)};
      SeparabilityCertificate<F> cert = certify(component);
      TwistData<F> twist = recover_twist(component);
      return BlockData<F>{k, n, std::move(component), std::move(cert), std::move(twist)};
    }));
  }
  std::vector<BlockData<F>> out;
  for (auto& j : jobs) out.push_back(j.get());

  std::optional<DerivedStructure<F>> global;
  if (idempotent) global = derive_structure(e);
  for (const auto& block : out) {
    const std::size_t off = e.left.block_offset(block.index);
    const auto& cert = block.certificate;
    if (!cert.antipode_bc || !cert.antipode_cb) {
      throw Error(Errc::reconstruction_mismatch, "block " + std::to_string(block.index + 1) + " is not certified");
    }
    require_blockwise(s.matrix, cert.antipode_bc->matrix, off, "S", block.index);
    require_blockwise(sp.matrix, cert.antipode_cb->matrix, off, "S'", block.index);
    if (global && cert.left_integral && cert.right_integral && cert.modular_c && cert.modular_b) {
      require_blockwise(global->left_integral.covector, cert.left_integral->covector, off, "phi", block.index);
      require_blockwise(global->right_integral.covector, cert.right_integral->covector, off, "psi", block.index);
      require_blockwise(global->modular_c.matrix, cert.modular_c->matrix, off, "sigma", block.index);
      require_blockwise(global->modular_b.matrix, cert.modular_b->matrix, off, "sigma'", block.index);
    }
  }
  return out;
}

#define SEPIDEM_INSTANTIATE_STAR(F)                                                                           \
  template CheckReport check_self_adjoint<F>(const TensorElement<F>&);                                        \
  template CheckReport check_star_antipode<F>(const LinearMap<F>&, const LinearMap<F>&);                      \
  template CheckReport check_integral_star<F>(const LinearFunctional<F>&, const LinearMap<F>&);               \
  template PositivityResult<F> check_positive<F>(const LinearFunctional<F>&);                                 \
  template CheckReport check_positivity_transfer<F>(const DerivedStructure<F>&, const std::vector<Vec<F>>&);  \
  template CheckReport check_cauchy_bound<F>(const DerivedStructure<F>&, std::size_t, std::uint64_t);         \
  template GnsData<F> gns_data<F>(const LinearFunctional<F>&, std::size_t, std::uint64_t);                    \
  template TwistData<F> recover_twist<F>(const TensorElement<F>&);                                            \
  template std::vector<BlockData<F>> decompose_blocks<F>(const TensorElement<F>&);

SEPIDEM_INSTANTIATE_STAR(GaussianRational)
SEPIDEM_INSTANTIATE_STAR(Complex)

}  // namespace sepidem
