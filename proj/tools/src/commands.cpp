// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepidem_cli/commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sepidem::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InstanceDescription load(const std::string& path, const RunOptions& opts) {
  InstanceDescription d = parse_instance(read_file(path));
  if (opts.mode) d.mode = *opts.mode;
  if (opts.tolerance) d.tolerance = opts.tolerance;
  return d;
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <Scalar F>
CertificateDocument<F> start_document(const InstanceDescription& d, const RunOptions& opts, std::string command) {
  CertificateDocument<F> doc;
  doc.instance = instance_to_json(d);
  doc.scalar_mode = std::string(to_string(d.mode));
  doc.seed = opts.seed;
  doc.command = std::move(command);
  return doc;
}

template <Scalar F>
void add_star_checks(CertificateDocument<F>& doc, const SeparabilityCertificate<F>& cert, const TensorElement<F>& e,
                     const RunOptions& opts) {
  if (!e.left.has_star() || !e.right.has_star()) return;
  doc.checks["star_self_adjoint"] = CheckSummary::from(check_self_adjoint(e));
  if (!cert.antipode_bc || !cert.antipode_cb) return;
  doc.checks["star_antipodes"] = CheckSummary::from(check_star_antipode(*cert.antipode_bc, *cert.antipode_cb));
  if (!cert.left_integral) return;
  doc.checks["star_left_integral"] = CheckSummary::from(check_integral_star(*cert.left_integral, *cert.modular_c));
  doc.checks["star_right_integral"] = CheckSummary::from(check_integral_star(*cert.right_integral, *cert.modular_b));
  auto positivity = [](const LinearFunctional<F>& f) {
    const PositivityResult<F> p = check_positive(f);
    CheckSummary s;
    if (!p.positive()) {
      s.passed = false;
      s.failures = 1;
      s.witnesses.push_back(p.psd.hermitian ? "Gram matrix not positive semidefinite" : "Gram matrix not Hermitian");
    }
    return s;
  };
  doc.checks["positive_left_integral"] = positivity(*cert.left_integral);
  doc.checks["positive_right_integral"] = positivity(*cert.right_integral);
  if (doc.checks["positive_left_integral"].passed && doc.checks["positive_right_integral"].passed) {
    const DerivedStructure<F> d{e,
                                *cert.antipode_bc,
                                *cert.antipode_cb,
                                *cert.left_integral,
                                *cert.right_integral,
                                *cert.modular_c,
                                *cert.modular_b};
    doc.checks["positivity_transfer"] = CheckSummary::from(check_positivity_transfer(d));
    doc.checks["cauchy_bound"] = CheckSummary::from(check_cauchy_bound(d, opts.samples, opts.seed));
  }
}

template <Scalar F>
int emit(const CertificateDocument<F>& doc, CertificateMode mode, std::ostream& out) {
  out << to_json(doc).dump(2) << '\n';
  return exit_code(mode);
}

template <Scalar F>
int verify_impl(const InstanceDescription& d, const RunOptions& opts, std::ostream& out) {
  const auto start = Clock::now();
  const TensorElement<F> e = build_element<F>(d);
  CertificateDocument<F> doc = start_document<F>(d, opts, "verify");
  const SeparabilityCertificate<F> cert = certify(e);
  fill_from_certificate(doc, cert);
  if (cert.mode == CertificateMode::separability_idempotent) add_star_checks(doc, cert, e, opts);
  doc.elapsed_ms = elapsed_ms(start);
  return emit(doc, cert.mode, out);
}

template <Scalar F>
int derive_impl(const InstanceDescription& d, const std::string& what, const RunOptions& opts, std::ostream& out,
                std::ostream& err) {
  const auto start = Clock::now();
  const TensorElement<F> e = build_element<F>(d);
  const SeparabilityCertificate<F> cert = certify(e);
  CertificateDocument<F> doc = start_document<F>(d, opts, "derive:" + what);
  doc.mode = std::string(to_string(cert.mode));
  doc.reason = cert.reason;
  doc.full = cert.full;
  doc.idempotency = std::string(to_string(cert.idempotency.kind));
  doc.lambda = cert.idempotency.lambda;

  if (cert.mode == CertificateMode::rejected) {
    err << "rejected: " << cert.reason << '\n';
  } else if (what == "antipodes") {
    doc.antipode_bc = cert.antipode_bc->matrix;
    doc.antipode_cb = cert.antipode_cb->matrix;
  } else if (cert.mode == CertificateMode::nilpotent_variant) {
    try {
      (void)derive_left_integral(e);
    } catch (const Error& ex) {
      err << ex.what() << '\n';
    }
  } else if (what == "integrals") {
    doc.left_integral = cert.left_integral->covector;
    doc.right_integral = cert.right_integral->covector;
  } else if (what == "modular") {
    doc.modular_c = cert.modular_c->matrix;
    doc.modular_b = cert.modular_b->matrix;
  } else {
    const DualContext<F> ctx(derive_structure(e));
    const std::size_t nb = e.left.dim();
    const std::size_t nc = e.right.dim();
    std::vector<DualElement<F>> chats;
    for (std::size_t j = 0; j < nc; ++j) chats.push_back(ctx.fourier_c(e.right.basis(j)));
    Matrix<F> pairing(nb, nc);
    for (std::size_t i = 0; i < nb; ++i) {
      const DualElement<F> bhat = ctx.fourier_b(e.left.basis(i));
      for (std::size_t j = 0; j < nc; ++j) pairing(i, j) = ctx.pairing(bhat, chats[j]);
    }
    doc.pairing = pairing;
    if (ctx.self_adjoint()) {
      Matrix<F> form(nc, nc);
      for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = 0; j < nc; ++j) form(i, j) = ctx.plancherel_form(chats[j], chats[i]);
      doc.plancherel = form;
    }
  }
  doc.elapsed_ms = elapsed_ms(start);
  return emit(doc, cert.mode, out);
}

template <Scalar F>
int decompose_impl(const InstanceDescription& d, const RunOptions& opts, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const TensorElement<F> e = build_element<F>(d);
  if (!e.left.has_star() || !e.right.has_star()) {
    throw InputError("/algebras", "decompose needs algebras with a star structure");
  }
  CertificateDocument<F> doc = start_document<F>(d, opts, "decompose");
  const SeparabilityCertificate<F> cert = certify(e);
  fill_from_certificate(doc, cert);
  CertificateMode mode = cert.mode;
  try {
    for (const auto& block : decompose_blocks(e)) {
      doc.blocks.push_back({block.index, block.size, std::string(to_string(block.certificate.mode)), block.twist.r,
                            block.twist.s});
    }
  } catch (const Error& ex) {
    if (ex.code() == Errc::precondition_failed) throw InputError("/algebras", ex.what());
    err << ex.what() << '\n';
    doc.reason = doc.reason.empty() ? ex.what() : doc.reason + "; " + ex.what();
    doc.mode = std::string(to_string(CertificateMode::rejected));
    mode = CertificateMode::rejected;
  }
  doc.elapsed_ms = elapsed_ms(start);
  return emit(doc, mode, out);
}

/// Runs `body` in the backend the instance asks for, mapping failures to exit codes.
template <class Body>
int dispatch(const std::string& path, const RunOptions& opts, std::ostream& err, Body body) {
  try {
    const InstanceDescription d = load(path, opts);
    if (d.mode == ScalarMode::exact) return body.template operator()<GaussianRational>(d);
    ScopedFloatTolerance tol(d.tolerance.value_or(float_tolerance()));
    return body.template operator()<Complex>(d);
  } catch (const InputError& e) {
    err << "input error at " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitRejected;
  }
}

std::string atomic_write(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError(path, "cannot write file");
    f << text;
    if (!f) throw InputError(path, "write failed");
  }
  std::filesystem::rename(tmp, target);
  return path;
}

ExactMatrix matrix_option(const std::string& text, const char* name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw InputError(std::string("--") + name, "malformed JSON matrix");
  }
  return decode_matrix<GaussianRational>(j, std::string("--") + name);
}

}  // namespace

int exit_code(CertificateMode mode) {
  switch (mode) {
    case CertificateMode::separability_idempotent:
      return kExitSeparability;
    case CertificateMode::nilpotent_variant:
      return kExitNilpotent;
    case CertificateMode::rejected:
      break;
  }
  return kExitRejected;
}

int run_verify(const std::string& path, const RunOptions& opts, std::ostream& out, std::ostream& err) {
  return dispatch(path, opts, err, [&]<Scalar F>(const InstanceDescription& d) { return verify_impl<F>(d, opts, out); });
}

int run_derive(const std::string& path, const std::string& what, const RunOptions& opts, std::ostream& out,
               std::ostream& err) {
  if (what != "integrals" && what != "antipodes" && what != "modular" && what != "dual") {
    err << "input error at --what: expected integrals, antipodes, modular or dual\n";
    return kExitInputError;
  }
  return dispatch(path, opts, err,
                  [&]<Scalar F>(const InstanceDescription& d) { return derive_impl<F>(d, what, opts, out, err); });
}

int run_decompose(const std::string& path, const RunOptions& opts, std::ostream& out, std::ostream& err) {
  return dispatch(path, opts, err,
                  [&]<Scalar F>(const InstanceDescription& d) { return decompose_impl<F>(d, opts, out, err); });
}

InstanceDescription construct_instance(const ConstructOptions& opts) {
  InstanceDescription d;
  d.mode = opts.mode;
  d.tolerance = opts.tolerance;
  ConstructionSpec c;
  c.kind = opts.kind;
  RationalSampler rs(opts.seed);
  if (opts.kind == "E0" || opts.kind == "nonfull") {
    if (opts.n == 0) throw InputError("--n", "required and positive for " + opts.kind);
    c.n = opts.n;
  } else if (opts.kind == "twisted") {
    c.normalize = opts.normalize;
    if (opts.r && opts.s) {
      c.r = matrix_option(*opts.r, "r");
      c.s = matrix_option(*opts.s, "s");
    } else if (!opts.r && !opts.s) {
      if (opts.n == 0) throw InputError("--n", "required for a random twisted instance");
      TwistPair<GaussianRational> t = random_twist_pair<GaussianRational>(opts.n, rs);
      c.r = t.r;
      c.s = t.s;
    } else {
      throw InputError("--r/--s", "give both twists or neither");
    }
  } else if (opts.kind == "involutive_twisted") {
    if (opts.r) {
      c.r = matrix_option(*opts.r, "r");
    } else {
      if (opts.n == 0) throw InputError("--n", "required for a random involutive instance");
      c.r = random_involutive<GaussianRational>(opts.n, rs);
    }
  } else if (opts.kind == "direct_sum") {
    if (!opts.components) throw InputError("--components", "required for direct_sum");
    json j;
    try {
      j = json::parse(*opts.components);
    } catch (const json::parse_error&) {
      throw InputError("--components", "malformed JSON");
    }
    json doc = {{"element", {{"construction", {{"kind", "direct_sum"}, {"components", j}}}}}};
    c = *instance_from_json(doc).construction;
  } else {
    throw InputError("--kind", "unknown construction '" + opts.kind + "'");
  }
  d.construction = std::move(c);
  // Fails early on singular or unnormalized twists.
  (void)build_element<GaussianRational>(d);
  return opts.explicit_coefficients ? explicit_form(d) : d;
}

int run_construct(const ConstructOptions& opts, std::ostream& err) {
  try {
    if (opts.out_path.empty()) throw InputError("--out", "required");
    const InstanceDescription d = construct_instance(opts);
    atomic_write(opts.out_path, instance_to_json(d).dump(2) + "\n");
    return kExitSeparability;
  } catch (const InputError& e) {
    err << "input error at " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace sepidem::cli
