// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepidem/algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "sepidem/linalg.hpp"

namespace sepidem {

namespace {

std::string unit_label(std::size_t n, std::size_t i, std::size_t j) {
  std::ostringstream os;
  if (n < 10)
    os << 'e' << i + 1 << j + 1;
  else
    os << "e(" << i + 1 << ',' << j + 1 << ')';
  return os.str();
}

template <Scalar F>
void accumulate(Vec<F>& out, const std::vector<ProductTerm<F>>& terms, const F& scale) {
  for (const auto& t : terms) out[t.index] += scale * t.value;
}

template <Scalar F>
bool vec_equal(const Vec<F>& a, const Vec<F>& b) {
  return approx_equal(a, b);
}

/// Float products cancel at the size of their factors, so compare against that.
template <Scalar F>
bool vec_equal(const Vec<F>& a, const Vec<F>& b, double scale) {
  if constexpr (scalar_traits<F>::exact) {
    return a == b;
  } else {
    if (a.size() != b.size()) return false;
    scale = std::max({scale, max_abs(a), max_abs(b)});
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!scalar_traits<F>::equal(a[k], b[k], scale)) return false;
    return true;
  }
}

}  // namespace

template <Scalar F>
Vec<F> Algebra<F>::basis(std::size_t i) const {
  Vec<F> v(dim(), F(0));
  v.at(i) = F(1);
  return v;
}

template <Scalar F>
Vec<F> Algebra<F>::multiply(const Vec<F>& x, const Vec<F>& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw Error(Errc::dimension_mismatch, "element length does not match algebra");
  Vec<F> out(n, F(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (literally_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (literally_zero(y[j])) continue;
      const auto& ts = terms(i, j);
      if (ts.empty()) continue;
      const F xy = x[i] * y[j];
      for (const auto& t : ts) out[t.index] += xy * t.value;
    }
  }
  return out;
}

template <Scalar F>
Matrix<F> Algebra<F>::left_mult(const Vec<F>& x) const {
  const std::size_t n = dim();
  Matrix<F> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (literally_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : terms(i, j)) m(t.index, j) += x[i] * t.value;
  }
  return m;
}

template <Scalar F>
Matrix<F> Algebra<F>::right_mult(const Vec<F>& x) const {
  const std::size_t n = dim();
  Matrix<F> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (literally_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : terms(j, i)) m(t.index, j) += x[i] * t.value;
  }
  return m;
}

template <Scalar F>
Matrix<F> Algebra<F>::left_mult_basis(std::size_t i) const {
  const std::size_t n = dim();
  Matrix<F> m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& t : terms(i, j)) m(t.index, j) += t.value;
  return m;
}

template <Scalar F>
Matrix<F> Algebra<F>::right_mult_basis(std::size_t i) const {
  const std::size_t n = dim();
  Matrix<F> m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& t : terms(j, i)) m(t.index, j) += t.value;
  return m;
}

template <Scalar F>
const Matrix<F>& Algebra<F>::star_matrix() const {
  if (!d_->star) throw Error(Errc::no_star_structure, "algebra carries no star operation");
  return *d_->star;
}

template <Scalar F>
Vec<F> Algebra<F>::star(const Vec<F>& x) const {
  const auto& k = star_matrix();
  Vec<F> c(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) c[i] = scalar_traits<F>::conj(x[i]);
  return k.apply(c);
}

template <Scalar F>
const std::vector<std::size_t>& Algebra<F>::blocks() const {
  if (d_->blocks.empty()) throw Error(Errc::no_block_presentation, "algebra has no multi-matrix presentation");
  return d_->blocks;
}

template <Scalar F>
std::size_t Algebra<F>::unit_index(std::size_t block, std::size_t i, std::size_t j) const {
  const std::size_t n = blocks().at(block);
  if (i >= n || j >= n) throw std::out_of_range("matrix unit index outside block");
  return d_->block_offsets[block] + i * n + j;
}

template <Scalar F>
bool Algebra<F>::same_as(const Algebra& other) const {
  if (d_ == other.d_) return true;
  const Data& a = *d_;
  const Data& b = *other.d_;
  if (a.dim != b.dim || a.star.has_value() != b.star.has_value()) return false;
  if (!vec_equal(a.unit, b.unit)) return false;
  if (a.star && !approx_equal(*a.star, *b.star)) return false;
  for (std::size_t p = 0; p < a.terms.size(); ++p) {
    Vec<F> x(a.dim, F(0));
    Vec<F> y(a.dim, F(0));
    accumulate(x, a.terms[p], F(1));
    accumulate(y, b.terms[p], F(1));
    if (!vec_equal(x, y)) return false;
  }
  return true;
}

template <Scalar F>
Algebra<F> Algebra<F>::validated(Data data) {
  const std::size_t n = data.dim;
  if (n == 0) throw Error(Errc::dimension_mismatch, "algebra dimension must be positive");
  if (data.unit.size() != n) throw Error(Errc::dimension_mismatch, "unit length does not match dimension");
  if (data.labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) data.labels.push_back("b" + std::to_string(i + 1));
  }
  Algebra a(std::make_shared<const Data>(std::move(data)));

  // Associativity on all basis triples.
  Vec<F> lhs(n, F(0));
  Vec<F> rhs(n, F(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(lhs.begin(), lhs.end(), F(0));
        std::fill(rhs.begin(), rhs.end(), F(0));
        for (const auto& t : a.terms(i, j)) accumulate(lhs, a.terms(t.index, k), t.value);
        for (const auto& t : a.terms(j, k)) accumulate(rhs, a.terms(i, t.index), t.value);
        if (!vec_equal(lhs, rhs)) {
          std::ostringstream os;
          os << "(b" << i << " b" << j << ") b" << k << " != b" << i << " (b" << j << " b" << k << ")";
          throw Error(Errc::associativity_violation, os.str());
        }
      }
    }
  }

  // Non-degeneracy: x -> L_x and x -> R_x injective.
  for (int side = 0; side < 2; ++side) {
    Matrix<F> stacked(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix<F> m = side == 0 ? a.left_mult_basis(i) : a.right_mult_basis(i);
      for (std::size_t p = 0; p < n * n; ++p) stacked(p, i) = m.data()[p];
    }
    const Matrix<F> kernel = nullspace(stacked);
    if (kernel.cols() > 0) {
      std::ostringstream os;
      os << (side == 0 ? "left" : "right") << " multiplication annihilated by element with coefficients (";
      for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << to_string(kernel(i, 0));
      os << ")";
      throw Error(Errc::degenerate_product, os.str());
    }
  }

  // Unit law.
  for (std::size_t i = 0; i < n; ++i) {
    const Vec<F> b = a.basis(i);
    if (!vec_equal(a.multiply(a.unit(), b), b) || !vec_equal(a.multiply(b, a.unit()), b)) {
      throw Error(Errc::not_unital, "unit fails on basis element " + a.label(i));
    }
  }

  // Star: antilinear involution reversing products.
  if (a.has_star()) {
    const Matrix<F>& k = a.star_matrix();
    if (k.rows() != n || k.cols() != n) throw Error(Errc::dimension_mismatch, "star matrix has wrong shape");
    if (!approx_equal(k * k.conjugate(), Matrix<F>::identity(n))) {
      throw Error(Errc::star_violation, "star is not an involution");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Vec<F> l = a.star(a.multiply(a.basis(i), a.basis(j)));
        const Vec<F> r = a.multiply(k.column(j), k.column(i));
        if (!vec_equal(l, r)) {
          throw Error(Errc::star_violation, "(xy)* != y* x* for x=" + a.label(i) + ", y=" + a.label(j));
        }
      }
    }
  }
  return a;
}

template <Scalar F>
Algebra<F> Algebra<F>::matrix(std::size_t n, bool with_star) {
  if (n == 0) throw Error(Errc::dimension_mismatch, "matrix algebra size must be at least 1");
  // Immutable, so one validated instance per (n, star) is shared.
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, bool>, Algebra> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, with_star});
    if (it != cache.end()) return it->second;
  }
  Data d;
  d.dim = n * n;
  d.terms.resize(d.dim * d.dim);
  d.unit.assign(d.dim, F(0));
  for (std::size_t i = 0; i < n; ++i) {
    d.unit[i * n + i] = F(1);
    for (std::size_t j = 0; j < n; ++j) {
      d.labels.push_back(unit_label(n, i, j));
      for (std::size_t l = 0; l < n; ++l) {
        // e_ij e_jl = e_il
        d.terms[(i * n + j) * d.dim + (j * n + l)].push_back({i * n + l, F(1)});
      }
    }
  }
  if (with_star) {
    Matrix<F> k(d.dim, d.dim);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) k(j * n + i, i * n + j) = F(1);
    d.star = std::move(k);
  }
  d.blocks = {n};
  d.block_offsets = {0};
  Algebra a = validated(std::move(d));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::make_pair(n, with_star), a).first->second;
}

template <Scalar F>
Algebra<F> Algebra<F>::direct_sum(const std::vector<Algebra>& blocks) {
  if (blocks.empty()) throw Error(Errc::dimension_mismatch, "direct sum needs at least one summand");
  Data d;
  bool all_star = true;
  bool all_blocks = true;
  for (const auto& b : blocks) {
    d.dim += b.dim();
    all_star = all_star && b.has_star();
    all_blocks = all_blocks && b.has_blocks();
  }
  d.terms.resize(d.dim * d.dim);
  d.unit.assign(d.dim, F(0));
  if (all_star) d.star = Matrix<F>(d.dim, d.dim);

  std::size_t offset = 0;
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    const Algebra& b = blocks[a];
    const std::size_t m = b.dim();
    for (std::size_t i = 0; i < m; ++i) {
      d.unit[offset + i] = b.unit()[i];
      d.labels.push_back("[" + std::to_string(a + 1) + "]" + b.label(i));
      for (std::size_t j = 0; j < m; ++j) {
        auto& out = d.terms[(offset + i) * d.dim + offset + j];
        for (const auto& t : b.terms(i, j)) out.push_back({offset + t.index, t.value});
        if (all_star) (*d.star)(offset + i, offset + j) = b.star_matrix()(i, j);
      }
    }
    if (all_blocks) {
      for (std::size_t k = 0; k < b.blocks().size(); ++k) {
        d.block_offsets.push_back(offset + b.block_offset(k));
        d.blocks.push_back(b.blocks()[k]);
      }
    }
    offset += m;
  }
  return validated(std::move(d));
}

template <Scalar F>
Algebra<F> Algebra<F>::from_structure_constants(std::size_t dim, const std::vector<StructureEntry<F>>& constants,
                                                const Vec<F>& unit, std::optional<Matrix<F>> star,
                                                std::vector<std::string> labels) {
  Data d;
  d.dim = dim;
  d.terms.resize(dim * dim);
  for (const auto& [i, j, k, v] : constants) {
    if (i >= dim || j >= dim || k >= dim) throw Error(Errc::dimension_mismatch, "structure constant index out of range");
    if (literally_zero(v)) continue;
    auto& ts = d.terms[i * dim + j];
    bool merged = false;
    for (auto& t : ts) {
      if (t.index == k) {
        t.value += v;
        merged = true;
      }
    }
    if (!merged) ts.push_back({k, v});
  }
  d.unit = unit;
  d.star = std::move(star);
  if (!labels.empty() && labels.size() != dim) throw Error(Errc::dimension_mismatch, "label count does not match dimension");
  d.labels = std::move(labels);
  return validated(std::move(d));
}

template <Scalar F>
void require_same(const Algebra<F>& a, const Algebra<F>& b, const char* context) {
  if (!a.same_as(b)) throw Error(Errc::algebra_mismatch, context);
}

template <Scalar F>
Element<F> Element<F>::operator*(const Element& o) const {
  require_same(algebra, o.algebra, "element product");
  return {algebra, algebra.multiply(coeffs, o.coeffs)};
}

template <Scalar F>
Element<F> Element<F>::operator+(const Element& o) const {
  require_same(algebra, o.algebra, "element sum");
  return {algebra, coeffs + o.coeffs};
}

template <Scalar F>
Element<F> Element<F>::operator-(const Element& o) const {
  require_same(algebra, o.algebra, "element difference");
  return {algebra, coeffs - o.coeffs};
}

template <Scalar F>
Element<F> Element<F>::operator*(const F& s) const {
  return {algebra, scaled(coeffs, s)};
}

template <Scalar F>
Matrix<F> LinearFunctional<F>::pairing_matrix() const {
  const std::size_t n = algebra.dim();
  Matrix<F> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : algebra.terms(i, j))
        if (!literally_zero(covector[t.index])) m(i, j) += t.value * covector[t.index];
  return m;
}

template <Scalar F>
bool LinearFunctional<F>::is_faithful() const {
  return rank(pairing_matrix()) == algebra.dim();
}

template <Scalar F>
LinearFunctional<F> LinearFunctional<F>::left_weighted(const Vec<F>& a) const {
  // f(a b_k) = (L_a^T w)_k
  return {algebra, algebra.left_mult(a).transpose().apply(covector)};
}

template <Scalar F>
LinearFunctional<F> LinearFunctional<F>::right_weighted(const Vec<F>& a) const {
  return {algebra, algebra.right_mult(a).transpose().apply(covector)};
}

template <Scalar F>
Element<F> LinearMap<F>::operator()(const Element<F>& x) const {
  require_same(source, x.algebra, "map application");
  return {target, matrix.apply(x.coeffs)};
}

template <Scalar F>
CheckReport check_map_kind(const Algebra<F>& source, const Algebra<F>& target, const Matrix<F>& m, MapKind kind,
                           const std::string& name) {
  CheckReport report;
  if (kind == MapKind::linear) return report;
  const std::size_t n = source.dim();
  std::vector<Vec<F>> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = m.column(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec<F> prod(n, F(0));
      accumulate(prod, source.terms(i, j), F(1));
      const Vec<F> lhs = m.apply(prod);
      const Vec<F> rhs = kind == MapKind::multiplicative ? target.multiply(images[i], images[j])
                                                         : target.multiply(images[j], images[i]);
      if (!vec_equal(lhs, rhs, max_abs(images[i]) * max_abs(images[j]))) {
        report.fail({name + (kind == MapKind::multiplicative ? " multiplicative" : " anti-multiplicative"),
                     {i, j},
                     source.label(i) + ", " + source.label(j)});
      }
    }
  }
  return report;
}

template <Scalar F>
LinearMap<F> make_map(const Algebra<F>& source, const Algebra<F>& target, Matrix<F> m, MapKind kind,
                      bool require_bijective, const std::string& name) {
  if (m.rows() != target.dim() || m.cols() != source.dim()) {
    throw Error(Errc::dimension_mismatch, name + ": matrix shape does not match algebras");
  }
  const CheckReport law = check_map_kind(source, target, m, kind, name);
  if (!law) {
    throw Error(kind == MapKind::multiplicative ? Errc::not_multiplicative : Errc::not_anti_multiplicative,
                law.summary());
  }
  const bool bij = m.rows() == m.cols() && rank(m) == m.rows();
  if (require_bijective && !bij) throw Error(Errc::not_bijective, name + " is not bijective");
  return {source, target, std::move(m), kind, bij};
}

template <Scalar F>
LinearMap<F> compose(const LinearMap<F>& g, const LinearMap<F>& f) {
  require_same(g.source, f.target, "map composition");
  MapKind kind = MapKind::linear;
  if (f.kind != MapKind::linear && g.kind != MapKind::linear)
    kind = f.kind == g.kind ? MapKind::multiplicative : MapKind::anti_multiplicative;
  return {f.source, g.target, g.matrix * f.matrix, kind, f.bijective && g.bijective};
}

template <Scalar F>
LinearMap<F> inverse_map(const LinearMap<F>& f) {
  auto inv = inverse(f.matrix);
  if (!inv) throw Error(Errc::not_invertible, "linear map is not invertible");
  return {f.target, f.source, std::move(*inv), f.kind, true};
}

template <Scalar F>
LinearMap<F> identity_map(const Algebra<F>& a) {
  return {a, a, Matrix<F>::identity(a.dim()), MapKind::multiplicative, true};
}

template <Scalar F>
bool maps_equal(const LinearMap<F>& f, const LinearMap<F>& g) {
  return f.source.same_as(g.source) && f.target.same_as(g.target) && approx_equal(f.matrix, g.matrix);
}

template <Scalar F>
LinearMap<F> transpose_anti_map(const Algebra<F>& a) {
  const auto& blocks = a.blocks();
  Matrix<F> m(a.dim(), a.dim());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t i = 0; i < blocks[b]; ++i)
      for (std::size_t j = 0; j < blocks[b]; ++j) m(a.unit_index(b, j, i), a.unit_index(b, i, j)) = F(1);
  return make_map(a, a, std::move(m), MapKind::anti_multiplicative, true, "transpose");
}

template <Scalar F>
Element<F> invert(const Element<F>& x) {
  const auto& a = x.algebra;
  auto inv = inverse(a.left_mult(x.coeffs));
  if (!inv) throw Error(Errc::not_invertible, "left multiplication matrix is singular");
  Element<F> y{a, inv->apply(a.unit())};
  if (!approx_equal(a.multiply(x.coeffs, y.coeffs), a.unit()) ||
      !approx_equal(a.multiply(y.coeffs, x.coeffs), a.unit())) {
    throw Error(Errc::not_invertible, "one-sided inverse only");
  }
  return y;
}

template <Scalar F>
LinearFunctional<F> trace_functional(const Algebra<F>& a) {
  const auto& blocks = a.blocks();
  Vec<F> w(a.dim(), F(0));
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t i = 0; i < blocks[b]; ++i) w[a.unit_index(b, i, i)] = F(1);
  return {a, std::move(w)};
}

#define SEPIDEM_INSTANTIATE_ALGEBRA(F)                                                                       \
  template class Algebra<F>;                                                                                 \
  template struct Element<F>;                                                                                \
  template struct LinearFunctional<F>;                                                                       \
  template struct LinearMap<F>;                                                                              \
  template void require_same<F>(const Algebra<F>&, const Algebra<F>&, const char*);                          \
  template CheckReport check_map_kind<F>(const Algebra<F>&, const Algebra<F>&, const Matrix<F>&, MapKind,    \
                                         const std::string&);                                                \
  template LinearMap<F> make_map<F>(const Algebra<F>&, const Algebra<F>&, Matrix<F>, MapKind, bool,          \
                                    const std::string&);                                                     \
  template LinearMap<F> compose<F>(const LinearMap<F>&, const LinearMap<F>&);                                \
  template LinearMap<F> inverse_map<F>(const LinearMap<F>&);                                                 \
  template LinearMap<F> identity_map<F>(const Algebra<F>&);                                                  \
  template bool maps_equal<F>(const LinearMap<F>&, const LinearMap<F>&);                                     \
  template LinearMap<F> transpose_anti_map<F>(const Algebra<F>&);                                            \
  template Element<F> invert<F>(const Element<F>&);                                                          \
  template LinearFunctional<F> trace_functional<F>(const Algebra<F>&);

SEPIDEM_INSTANTIATE_ALGEBRA(GaussianRational)
SEPIDEM_INSTANTIATE_ALGEBRA(Complex)

}  // namespace sepidem
