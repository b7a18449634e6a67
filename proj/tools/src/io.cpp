// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepidem_cli/io.hpp"

#include <algorithm>

namespace sepidem::cli {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + "/" + key, "missing field");
  return *it;
}

std::size_t size_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_unsigned()) throw InputError(where + "/" + key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

mpq_class decode_rational(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return GaussianRational::parse_rational(j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned()) return GaussianRational::parse_rational(j.dump());
    if (j.is_number_float()) return GaussianRational::parse_rational(j.dump());
  } catch (const std::exception& e) {
    throw InputError(where, std::string("bad rational: ") + e.what());
  }
  throw InputError(where, "expected a rational string or number");
}

json encode_rational(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

AlgebraSpec algebra_from_json(const json& j, const std::string& where) {
  AlgebraSpec spec;
  if (!j.is_object()) throw InputError(where, "expected an object");
  if (j.contains("blocks")) {
    const json& b = j.at("blocks");
    if (!b.is_array() || b.empty()) throw InputError(where + "/blocks", "expected a non-empty array of sizes");
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (!b[k].is_number_unsigned() || b[k].get<std::size_t>() == 0)
        throw InputError(where + "/blocks/" + std::to_string(k), "expected a positive integer");
      spec.blocks.push_back(b[k].get<std::size_t>());
    }
    if (j.contains("star")) spec.star = j.at("star").get<bool>();
    return spec;
  }
  StructureSpec s;
  s.dim = size_field(j, "dim", where);
  s.unit = decode_vector<GaussianRational>(field(j, "unit", where), where + "/unit");
  const json& c = field(j, "constants", where);
  if (!c.is_array()) throw InputError(where + "/constants", "expected an array of [i, j, k, value]");
  for (std::size_t t = 0; t < c.size(); ++t) {
    const std::string at = where + "/constants/" + std::to_string(t);
    if (!c[t].is_array() || c[t].size() != 4) throw InputError(at, "expected [i, j, k, value]");
    for (std::size_t m = 0; m < 3; ++m)
      if (!c[t][m].is_number_unsigned() || c[t][m].get<std::size_t>() >= s.dim)
        throw InputError(at + "/" + std::to_string(m), "basis index out of range");
    s.constants.emplace_back(c[t][0].get<std::size_t>(), c[t][1].get<std::size_t>(), c[t][2].get<std::size_t>(),
                             decode_exact(c[t][3], at + "/3"));
  }
  if (j.contains("star")) s.star = decode_matrix<GaussianRational>(j.at("star"), where + "/star");
  if (j.contains("labels")) s.labels = j.at("labels").get<std::vector<std::string>>();
  spec.star = s.star.has_value();
  spec.structure = std::move(s);
  return spec;
}

json algebra_to_json(const AlgebraSpec& spec) {
  if (!spec.structure) return {{"blocks", spec.blocks}, {"star", spec.star}};
  const StructureSpec& s = *spec.structure;
  json c = json::array();
  for (const auto& [i, j, k, v] : s.constants) c.push_back({i, j, k, encode_scalar(v)});
  json out = {{"dim", s.dim}, {"unit", encode_vector(s.unit)}, {"constants", c}};
  if (s.star) out["star"] = encode_matrix(*s.star);
  if (!s.labels.empty()) out["labels"] = s.labels;
  return out;
}

ConstructionSpec construction_from_json(const json& j, const std::string& where) {
  ConstructionSpec c;
  const json& kind = field(j, "kind", where);
  if (!kind.is_string()) throw InputError(where + "/kind", "expected a string");
  c.kind = kind.get<std::string>();
  if (c.kind == "E0" || c.kind == "nonfull") {
    c.n = size_field(j, "n", where);
    if (c.n == 0) throw InputError(where + "/n", "must be positive");
  } else if (c.kind == "twisted") {
    c.r = decode_matrix<GaussianRational>(field(j, "r", where), where + "/r");
    c.s = decode_matrix<GaussianRational>(field(j, "s", where), where + "/s");
    if (j.contains("normalize")) c.normalize = j.at("normalize").get<bool>();
  } else if (c.kind == "involutive_twisted") {
    c.r = decode_matrix<GaussianRational>(field(j, "r", where), where + "/r");
  } else if (c.kind == "direct_sum") {
    const json& comps = field(j, "components", where);
    if (!comps.is_array() || comps.empty()) throw InputError(where + "/components", "expected a non-empty array");
    for (std::size_t k = 0; k < comps.size(); ++k)
      c.components.push_back(construction_from_json(comps[k], where + "/components/" + std::to_string(k)));
  } else {
    throw InputError(where + "/kind", "unknown construction '" + c.kind + "'");
  }
  return c;
}

json construction_to_json(const ConstructionSpec& c) {
  json out = {{"kind", c.kind}};
  if (c.kind == "E0" || c.kind == "nonfull") {
    out["n"] = c.n;
  } else if (c.kind == "twisted") {
    out["r"] = encode_matrix(c.r);
    out["s"] = encode_matrix(c.s);
    out["normalize"] = c.normalize;
  } else if (c.kind == "involutive_twisted") {
    out["r"] = encode_matrix(c.r);
  } else if (c.kind == "direct_sum") {
    out["components"] = json::array();
    for (const auto& k : c.components) out["components"].push_back(construction_to_json(k));
  }
  return out;
}

template <Scalar F>
Algebra<F> build_algebra(const AlgebraSpec& spec) {
  if (spec.structure) {
    const StructureSpec& s = *spec.structure;
    std::vector<StructureEntry<F>> constants;
    for (const auto& [i, j, k, v] : s.constants) constants.emplace_back(i, j, k, scalar_cast<F>(v));
    std::optional<Matrix<F>> star;
    if (s.star) star = cast_matrix<F>(*s.star);
    return Algebra<F>::from_structure_constants(s.dim, constants, cast_vector<F>(s.unit), star, s.labels);
  }
  if (spec.blocks.size() == 1) return make_matrix_algebra<F>(spec.blocks[0], spec.star);
  std::vector<Algebra<F>> parts;
  for (std::size_t n : spec.blocks) parts.push_back(make_matrix_algebra<F>(n, spec.star));
  return make_direct_sum(parts);
}

template <Scalar F>
TensorElement<F> build_construction(const ConstructionSpec& c) {
  if (c.kind == "E0") return make_canonical_idempotent<F>(c.n);
  if (c.kind == "nonfull") return make_nonfull_counterexample<F>(c.n);
  if (c.kind == "twisted") return make_twisted(cast_matrix<F>(c.r), cast_matrix<F>(c.s), c.normalize);
  if (c.kind == "involutive_twisted") return make_involutive_twisted(cast_matrix<F>(c.r)).e;
  std::vector<TensorElement<F>> parts;
  for (const auto& k : c.components) parts.push_back(build_construction<F>(k));
  return make_direct_sum_element(parts);
}

AlgebraSpec spec_of(const Algebra<GaussianRational>& a) {
  AlgebraSpec spec;
  if (a.has_blocks()) {
    spec.blocks = a.blocks();
    spec.star = a.has_star();
    return spec;
  }
  StructureSpec s;
  s.dim = a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, v] : a.terms(i, j)) s.constants.emplace_back(i, j, k, v);
  s.unit = a.unit();
  if (a.has_star()) s.star = a.star_matrix();
  s.labels = a.labels();
  spec.star = a.has_star();
  spec.structure = std::move(s);
  return spec;
}

}  // namespace

std::string_view to_string(ScalarMode mode) { return mode == ScalarMode::exact ? "exact" : "float64"; }

ScalarMode parse_scalar_mode(std::string_view text) {
  if (text == "exact") return ScalarMode::exact;
  if (text == "float" || text == "float64") return ScalarMode::float64;
  throw InputError("/mode", "expected exact or float64, got '" + std::string(text) + "'");
}

json encode_scalar(const GaussianRational& x) {
  if (x.is_real()) return encode_rational(x.real());
  return json::array({encode_rational(x.real()), encode_rational(x.imag())});
}

json encode_scalar(const Complex& x) {
  if (x.imag() == 0.0) return x.real();
  return json::array({x.real(), x.imag()});
}

GaussianRational decode_exact(const json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError(where, "complex scalars are [re, im] pairs");
    return GaussianRational(decode_rational(j[0], where + "/0"), decode_rational(j[1], where + "/1"));
  }
  return GaussianRational(decode_rational(j, where));
}

template <Scalar F>
json encode_matrix(const Matrix<F>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(encode_scalar(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

template <Scalar F>
json encode_vector(const Vec<F>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(encode_scalar(x));
  return out;
}

// JSON numbers go straight to double in float mode: the exact detour through
// mpq_get_d truncates and would not round-trip.
template <Scalar F>
F decode_scalar(const json& j, const std::string& where) {
  if constexpr (!scalar_traits<F>::exact) {
    if (j.is_number()) return F(j.get<double>());
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
      return F(j[0].get<double>(), j[1].get<double>());
  }
  return scalar_cast<F>(decode_exact(j, where));
}

template <Scalar F>
Matrix<F> decode_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InputError(where, "expected a non-empty array of rows");
  const std::size_t cols = j[0].size();
  Matrix<F> m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row = where + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != cols) throw InputError(row, "ragged matrix row");
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = decode_scalar<F>(j[i][k], row + "/" + std::to_string(k));
  }
  return m;
}

template <Scalar F>
Vec<F> decode_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected an array");
  Vec<F> v;
  for (std::size_t k = 0; k < j.size(); ++k)
    v.push_back(decode_scalar<F>(j[k], where + "/" + std::to_string(k)));
  return v;
}

InstanceDescription parse_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const std::size_t line = 1 + std::count(text.begin(), text.begin() + pos, '\n');
    const std::size_t nl = text.rfind('\n', pos == 0 ? 0 : pos - 1);
    const std::size_t column = nl == std::string_view::npos ? pos + 1 : pos - nl;
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column), "malformed JSON");
  }
  return instance_from_json(j);
}

InstanceDescription instance_from_json(const json& j) {
  InstanceDescription d;
  if (!j.is_object()) throw InputError("/", "expected an object");
  try {
    if (j.contains("mode")) d.mode = parse_scalar_mode(j.at("mode").get<std::string>());
    if (j.contains("tolerance")) {
      if (!j.at("tolerance").is_number() || j.at("tolerance").get<double>() <= 0.0)
        throw InputError("/tolerance", "expected a positive number");
      d.tolerance = j.at("tolerance").get<double>();
    }
    if (j.contains("algebras")) {
      const json& a = j.at("algebras");
      d.left = algebra_from_json(field(a, "left", "/algebras"), "/algebras/left");
      d.right = algebra_from_json(field(a, "right", "/algebras"), "/algebras/right");
    }
    const json& e = field(j, "element", "");
    if (e.contains("construction") == e.contains("coefficients")) {
      throw InputError("/element", "give exactly one of 'construction' or 'coefficients'");
    }
    if (e.contains("construction")) {
      d.construction = construction_from_json(e.at("construction"), "/element/construction");
    } else {
      if (!d.left) throw InputError("/algebras", "explicit coefficients need algebra specifications");
      d.coefficients = decode_matrix<GaussianRational>(e.at("coefficients"), "/element/coefficients");
    }
  } catch (const json::exception& e) {
    throw InputError("/", std::string("wrong JSON type: ") + e.what());
  }
  return d;
}

json instance_to_json(const InstanceDescription& d) {
  json out = {{"mode", to_string(d.mode)}};
  if (d.tolerance) out["tolerance"] = *d.tolerance;
  if (d.left && d.right) out["algebras"] = {{"left", algebra_to_json(*d.left)}, {"right", algebra_to_json(*d.right)}};
  if (d.construction) {
    out["element"] = {{"construction", construction_to_json(*d.construction)}};
  } else if (d.coefficients) {
    out["element"] = {{"coefficients", encode_matrix(*d.coefficients)}};
  }
  return out;
}

template <Scalar F>
TensorElement<F> build_element(const InstanceDescription& d) {
  try {
    if (d.construction) return build_construction<F>(*d.construction);
    const Algebra<F> left = build_algebra<F>(*d.left);
    const Algebra<F> right = build_algebra<F>(*d.right);
    const Matrix<F> coeffs = cast_matrix<F>(*d.coefficients);
    if (coeffs.rows() != left.dim() || coeffs.cols() != right.dim()) {
      throw InputError("/element/coefficients", "expected a " + std::to_string(left.dim()) + "x" +
                                                    std::to_string(right.dim()) + " matrix");
    }
    return make_tensor(left, right, coeffs);
  } catch (const Error& e) {
    throw InputError(d.construction ? "/element/construction" : "/algebras", e.what());
  }
}

InstanceDescription explicit_form(const InstanceDescription& d) {
  if (!d.construction) return d;
  const TensorElement<GaussianRational> e = build_element<GaussianRational>(d);
  InstanceDescription out;
  out.mode = d.mode;
  out.tolerance = d.tolerance;
  out.left = spec_of(e.left);
  out.right = spec_of(e.right);
  out.coefficients = e.coeffs;
  return out;
}

CheckSummary CheckSummary::from(const CheckReport& r) {
  CheckSummary s{r.passed, r.failures, {}};
  for (const auto& w : r.witnesses) s.witnesses.push_back(w.describe());
  return s;
}

template <Scalar F>
json to_json(const CertificateDocument<F>& doc) {
  json verdict = {{"mode", doc.mode}, {"reason", doc.reason}, {"full", doc.full}, {"idempotency", doc.idempotency}};
  if (doc.lambda) verdict["lambda"] = encode_scalar(*doc.lambda);
  json checks = json::object();
  for (const auto& [name, s] : doc.checks)
    checks[name] = {{"passed", s.passed}, {"failures", s.failures}, {"witnesses", s.witnesses}};
  json derived = json::object();
  auto put_m = [&](const char* key, const std::optional<Matrix<F>>& m) {
    if (m) derived[key] = encode_matrix(*m);
  };
  auto put_v = [&](const char* key, const std::optional<Vec<F>>& v) {
    if (v) derived[key] = encode_vector(*v);
  };
  put_m("antipode_bc", doc.antipode_bc);
  put_m("antipode_cb", doc.antipode_cb);
  put_v("left_integral", doc.left_integral);
  put_v("right_integral", doc.right_integral);
  put_m("modular_c", doc.modular_c);
  put_m("modular_b", doc.modular_b);
  put_v("central", doc.central);
  put_m("pairing", doc.pairing);
  put_m("plancherel", doc.plancherel);
  json blocks = json::array();
  for (const auto& b : doc.blocks)
    blocks.push_back({{"index", b.index}, {"size", b.size}, {"mode", b.mode}, {"r", encode_matrix(b.r)},
                      {"s", encode_matrix(b.s)}});
  return {{"command", doc.command},       {"scalar_mode", doc.scalar_mode}, {"seed", doc.seed},
          {"instance", doc.instance},     {"verdict", verdict},             {"checks", checks},
          {"derived", derived},           {"blocks", blocks},               {"timing", {{"elapsed_ms", doc.elapsed_ms}}}};
}

template <Scalar F>
CertificateDocument<F> certificate_from_json(const json& j) {
  CertificateDocument<F> doc;
  try {
    doc.command = j.at("command").get<std::string>();
    doc.scalar_mode = j.at("scalar_mode").get<std::string>();
    doc.seed = j.at("seed").get<std::uint64_t>();
    doc.instance = j.at("instance");
    const json& v = j.at("verdict");
    doc.mode = v.at("mode").template get<std::string>();
    doc.reason = v.at("reason").template get<std::string>();
    doc.full = v.at("full").template get<bool>();
    doc.idempotency = v.at("idempotency").template get<std::string>();
    if (v.contains("lambda")) doc.lambda = decode_scalar<F>(v.at("lambda"), "/verdict/lambda");
    for (const auto& [name, s] : j.at("checks").items()) {
      doc.checks[name] = {s.at("passed").template get<bool>(), s.at("failures").template get<std::size_t>(),
                          s.at("witnesses").template get<std::vector<std::string>>()};
    }
    const json& d = j.at("derived");
    auto get_m = [&](const char* key, std::optional<Matrix<F>>& m) {
      if (d.contains(key)) m = decode_matrix<F>(d.at(key), std::string("/derived/") + key);
    };
    auto get_v = [&](const char* key, std::optional<Vec<F>>& out) {
      if (d.contains(key)) out = decode_vector<F>(d.at(key), std::string("/derived/") + key);
    };
    get_m("antipode_bc", doc.antipode_bc);
    get_m("antipode_cb", doc.antipode_cb);
    get_v("left_integral", doc.left_integral);
    get_v("right_integral", doc.right_integral);
    get_m("modular_c", doc.modular_c);
    get_m("modular_b", doc.modular_b);
    get_v("central", doc.central);
    get_m("pairing", doc.pairing);
    get_m("plancherel", doc.plancherel);
    for (const auto& b : j.at("blocks")) {
      doc.blocks.push_back({b.at("index").template get<std::size_t>(), b.at("size").template get<std::size_t>(),
                            b.at("mode").template get<std::string>(), decode_matrix<F>(b.at("r"), "/blocks/r"),
                            decode_matrix<F>(b.at("s"), "/blocks/s")});
    }
    doc.elapsed_ms = j.at("timing").at("elapsed_ms").template get<double>();
  } catch (const json::exception& e) {
    throw InputError("/", std::string("malformed certificate: ") + e.what());
  }
  return doc;
}

template <Scalar F>
void fill_from_certificate(CertificateDocument<F>& doc, const SeparabilityCertificate<F>& cert) {
  doc.mode = std::string(to_string(cert.mode));
  doc.reason = cert.reason;
  doc.full = cert.full;
  doc.idempotency = std::string(to_string(cert.idempotency.kind));
  doc.lambda = cert.idempotency.lambda;
  if (cert.antipode_bc && cert.antipode_cb) {
    doc.checks["counit"] = CheckSummary::from(cert.counit);
    doc.checks["centrality"] = CheckSummary::from(cert.centrality);
    doc.checks["swap"] = CheckSummary::from(cert.swap);
    doc.checks["splitting"] = CheckSummary::from(cert.splitting);
    doc.checks["determinacy"] = CheckSummary::from(cert.determinacy);
    doc.antipode_bc = cert.antipode_bc->matrix;
    doc.antipode_cb = cert.antipode_cb->matrix;
  }
  if (cert.central) doc.central = cert.central->coeffs;
  if (cert.left_integral) {
    doc.checks["integrals"] = CheckSummary::from(cert.integrals);
    doc.left_integral = cert.left_integral->covector;
    doc.right_integral = cert.right_integral->covector;
    doc.modular_c = cert.modular_c->matrix;
    doc.modular_b = cert.modular_b->matrix;
  }
}

#define SEPIDEM_CLI_INSTANTIATE(F)                                                          \
  template json encode_matrix<F>(const Matrix<F>&);                                         \
  template json encode_vector<F>(const Vec<F>&);                                            \
  template Matrix<F> decode_matrix<F>(const json&, const std::string&);                     \
  template Vec<F> decode_vector<F>(const json&, const std::string&);                        \
  template TensorElement<F> build_element<F>(const InstanceDescription&);                   \
  template json to_json<F>(const CertificateDocument<F>&);                                  \
  template CertificateDocument<F> certificate_from_json<F>(const json&);                    \
  template void fill_from_certificate<F>(CertificateDocument<F>&, const SeparabilityCertificate<F>&);

SEPIDEM_CLI_INSTANTIATE(GaussianRational)
SEPIDEM_CLI_INSTANTIATE(Complex)

}  // namespace sepidem::cli
