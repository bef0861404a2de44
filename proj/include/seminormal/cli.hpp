#pragma once

// Command-line front end. `run` is the whole program minus process plumbing,
// so it can be driven in-process by tests.
//
//   seminormal classify  <matrix.json|-> [--tol T]
//   seminormal stampfli  <matrix.json|-> [--tol T]
//   seminormal numrange  <matrix.json|-> [--angles M] [--svg out.svg] [--csv out.csv]
//   seminormal volterra  [--n N] [--phi-samples K] [--export V.json]
//
// Global flags: --seed S (overridden by $SEMINORMAL_SEED).
// Exit codes: 0 ok, 1 usage, 2 parse, 3 dimension, 4 I/O, 5 internal.

#include "seminormal/matrix_file.hpp"
#include "seminormal/numrange.hpp"
#include "seminormal/seminormal.hpp"
#include "seminormal/volterra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace seminormal::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kDimension = 3, kIo = 4, kInternal = 5 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string path;
  double tol = kDefaultTol;
  int angles = kDefaultAngles;
  std::string svg_out;
  std::string csv_out;
  int n = 16;
  int phi_samples = 10;
  int midpoint_grid = 256;
  std::string export_out;
  std::uint64_t seed = 42;
};

using Json = nlohmann::ordered_json;

namespace detail {

struct Input {
  std::string label;
  std::string bytes;
};

inline Input read_input(const std::string& path, std::istream& in) {
  Input input{path, {}};
  if (path == "-") {
    input.bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return input;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open input file '" + path + "'");
  input.bytes.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  return input;
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write output file '" + path + "'");
  f << contents;
  f.flush();
  if (!f) throw IoError("failed writing output file '" + path + "'");
}

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json vector_json(const Vector& v) {
  auto arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(complex_json(v(i)));
  return arr;
}

inline Json header(const std::string& command, const std::vector<std::string>& argv,
                   const Options& opt) {
  Json j;
  j["command"] = command;
  std::string echo;
  for (std::size_t i = 1; i < argv.size(); ++i) {
    if (i > 1) echo += ' ';
    echo += argv[i];
  }
  j["argv"] = echo;
  j["seed"] = opt.seed;
  return j;
}

inline Json input_json(const Input& input, const Operator& a) {
  Json j;
  j["path"] = input.label;
  j["n"] = a.dim();
  j["digest"] = "fnv1a64:" + fnv1a64_hex(input.bytes);
  return j;
}

inline Json classification_json(const ClassificationReport& r) {
  Json j;
  j["class"] = std::string(to_string(r.cls));
  j["c_interval"] = Json::array({r.c_interval.a, r.c_interval.b});
  j["zero_is_extreme"] = r.zero_is_extreme;
  j["product_ab"] = r.product_ab;
  j["scale"] = r.scale;
  j["tol"] = r.tol_used;
  return j;
}

inline Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline std::string boundary_csv(const NumericalRangeBoundary& b) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "theta,support,re,im\n";
  for (const auto& s : b.samples) {
    os << s.theta << ',' << s.support << ',' << s.point.real() << ',' << s.point.imag() << '\n';
  }
  return os.str();
}

/// Fixed 800x800 viewBox; the hull bounding box (origin included) is scaled
/// uniformly into it with a 10% margin.
inline std::string boundary_svg(const NumericalRangeBoundary& b) {
  constexpr double size = 800.0;
  double lo_re = 0.0, hi_re = 0.0, lo_im = 0.0, hi_im = 0.0;
  for (const auto& z : b.hull) {
    lo_re = std::min(lo_re, z.real());
    hi_re = std::max(hi_re, z.real());
    lo_im = std::min(lo_im, z.imag());
    hi_im = std::max(hi_im, z.imag());
  }
  double span = std::max(hi_re - lo_re, hi_im - lo_im);
  if (!(span > 0.0)) span = 1.0;
  const double cx = (lo_re + hi_re) / 2.0;
  const double cy = (lo_im + hi_im) / 2.0;
  const double scale = size / (span * 1.2);
  auto px = [&](double re) { return size / 2.0 + (re - cx) * scale; };
  auto py = [&](double im) { return size / 2.0 - (im - cy) * scale; };
  auto f = [](double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << v;
    return os.str();
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" width=\"800\" height=\"800\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
  os << "  <line class=\"axis\" x1=\"0\" y1=\"" << f(py(0.0)) << "\" x2=\"800\" y2=\"" << f(py(0.0))
     << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  os << "  <line class=\"axis\" x1=\"" << f(px(0.0)) << "\" y1=\"0\" x2=\"" << f(px(0.0))
     << "\" y2=\"800\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  os << "  <polygon class=\"hull\" points=\"";
  for (std::size_t i = 0; i < b.hull.size(); ++i) {
    if (i) os << ' ';
    os << f(px(b.hull[i].real())) << ',' << f(py(b.hull[i].imag()));
  }
  os << "\" fill=\"lightsteelblue\" fill-opacity=\"0.5\" stroke=\"navy\" stroke-width=\"2\"/>\n";
  for (const auto& z : b.hull) {
    os << "  <circle class=\"vertex\" cx=\"" << f(px(z.real())) << "\" cy=\"" << f(py(z.imag()))
       << "\" r=\"3\" fill=\"navy\"/>\n";
  }
  os << "  <circle class=\"origin\" cx=\"" << f(px(0.0)) << "\" cy=\"" << f(py(0.0))
     << "\" r=\"4\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";
  os << "</svg>\n";
  return os.str();
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline int cmd_classify(const Options& opt, const std::vector<std::string>& argv, std::istream& in,
                        std::ostream& out) {
  const Input input = read_input(opt.path, in);
  const Operator a = parse_matrix_document(input.bytes);
  const auto report = classify(a, opt.tol);
  const auto km0 = kernel_equals_m0_check(a, opt.tol, opt.angles);

  Json j = header("classify", argv, opt);
  j["input"] = input_json(input, a);
  j["classification"] = classification_json(report);
  Json k;
  k["equal"] = km0.equal;
  k["reducing"] = km0.reducing;
  k["kernel_dim"] = km0.kernel_dim;
  k["b_range_distance"] = finite_or_null(km0.b_range_distance);
  j["kernel_equals_m0"] = k;
  emit(out, j);
  return kOk;
}

inline int cmd_stampfli(const Options& opt, const std::vector<std::string>& argv, std::istream& in,
                        std::ostream& out) {
  const Input input = read_input(opt.path, in);
  const Operator a = parse_matrix_document(input.bytes);
  const auto verdict = stampfli_equivalence_scan(a, opt.tol);

  Json j = header("stampfli", argv, opt);
  j["input"] = input_json(input, a);
  j["tol"] = opt.tol;
  if (verdict.equivalence_holds) {
    j["verdict"] = "EquivalenceHolds";
  } else {
    j["verdict"] = "Witness";
    const Vector& x = *verdict.witness;
    j["witness"] = vector_json(x);
    j["witness_normalized"] = vector_json(x.normalized());
    j["form_value"] = verdict.form_value;
    j["commutator_image_norm"] = verdict.commutator_image_norm;
    j["lambda_pos"] = verdict.lambda_pos;
    j["lambda_neg"] = verdict.lambda_neg;
  }
  emit(out, j);
  return kOk;
}

inline int cmd_numrange(const Options& opt, const std::vector<std::string>& argv, std::istream& in,
                        std::ostream& out) {
  if (opt.angles < 3) throw UsageError("--angles must be at least 3");
  const Input input = read_input(opt.path, in);
  const Operator a = parse_matrix_document(input.bytes);
  const auto boundary = numerical_range_boundary(a, opt.angles);

  if (!opt.csv_out.empty()) write_file(opt.csv_out, boundary_csv(boundary));
  if (!opt.svg_out.empty()) write_file(opt.svg_out, boundary_svg(boundary));

  Json j = header("numrange", argv, opt);
  j["input"] = input_json(input, a);
  j["angles"] = opt.angles;
  auto hull = Json::array();
  for (const auto& z : boundary.hull) hull.push_back(complex_json(z));
  j["hull"] = hull;
  j["origin_distance"] = boundary.distance_to(Complex(0.0, 0.0));
  if (!opt.csv_out.empty()) j["csv"] = opt.csv_out;
  if (!opt.svg_out.empty()) j["svg"] = opt.svg_out;
  emit(out, j);
  return kOk;
}

inline int cmd_volterra(const Options& opt, const std::vector<std::string>& argv, std::ostream& out) {
  namespace vo = seminormal::volterra;
  if (opt.n < 4) throw UsageError("--n must be at least 4");
  if (opt.phi_samples < 0) throw UsageError("--phi-samples must be non-negative");
  if (opt.midpoint_grid < 2) throw UsageError("--grid must be at least 2");

  const int n = opt.n;
  const auto galerkin = vo::volterra_galerkin(n);
  const Matrix& m = galerkin.op.matrix();
  const auto pair = vo::canonical_pair(n);
  const auto kernel = vo::commutator_kernel_galerkin(n);

  if (!opt.export_out.empty()) write_file(opt.export_out, serialize_matrix(galerkin.op));

  Json j = header("volterra", argv, opt);
  j["n"] = n;
  j["tol"] = opt.tol;

  Json identities;
  identities["rank_one_residual"] = (m + m.adjoint() - pair.e1 * pair.e1.adjoint()).cwiseAbs().maxCoeff();
  identities["canonical_residual"] = vo::canonical_residual(kernel, pair);
  identities["norm_V1"] = (m * pair.e1).norm();
  identities["norm_Vstar1"] = (m.adjoint() * pair.e1).norm();
  identities["norm_expected"] = 1.0 / std::sqrt(3.0);
  j["identities"] = identities;

  const auto spectra = vo::commutator_spectrum_report(n, opt.midpoint_grid);
  Json s;
  s["analytic_extreme"] = spectra.analytic_extreme;
  s["stated_extreme"] = spectra.stated_extreme;
  s["stated_value_mismatch"] = spectra.stated_value_mismatch();
  s["note"] = "canonical form gives eigenvalues +-1/(2 sqrt 3); the stated +-sqrt(6)/2 does not match";
  s["kernel_galerkin"] = spectra.kernel_spectrum;
  s["truncated_galerkin"] = spectra.truncated_spectrum;
  s["midpoint_grid"] = spectra.midpoint_grid;
  s["midpoint_extremes"] = Json::array({spectra.midpoint_spectrum.front(), spectra.midpoint_spectrum.back()});
  j["spectra"] = s;

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  Json e;
  e["e1"] = vo::e_v_membership(pair.e1, pair, opt.tol);
  int passed = 0;
  for (int k = 0; k < opt.phi_samples; ++k) {
    Vector f(n);
    for (int i = 0; i < n; ++i) f(i) = Complex(gauss(rng), gauss(rng));
    f(0) = 0.0;
    if (vo::e_v_membership(f, pair, opt.tol)) ++passed;
  }
  e["orthogonal_to_e1_samples"] = opt.phi_samples;
  e["orthogonal_to_e1_passed"] = passed;
  j["e_membership"] = e;

  Json l;
  auto phis = Json::array();
  int bases_ok = 0;
  for (int k = 0; k < opt.phi_samples; ++k) {
    const double phi = angle(rng);
    phis.push_back(phi);
    const auto basis = vo::l_phi_basis(phi, n);
    bool ok = basis.size() == n - 1;
    for (Eigen::Index c = 0; c < basis.size(); ++c) ok = ok && vo::e_v_membership(basis.vector(c), pair, opt.tol);
    if (ok) ++bases_ok;
  }
  l["samples"] = opt.phi_samples;
  l["passed"] = bases_ok;
  l["phi"] = phis;
  j["l_phi"] = l;
  if (!opt.export_out.empty()) j["export"] = opt.export_out;
  emit(out, j);
  return kOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
  Options opt;
  CLI::App app{"Semi-normality checks for finite-dimensional operators"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", opt.seed, "Seed for sampled checks (SEMINORMAL_SEED overrides)");

  auto* classify_cmd = app.add_subcommand("classify", "Classify A by the spectrum of A*A - AA*");
  classify_cmd->add_option("path", opt.path, "Matrix document, or - for stdin")->required();
  classify_cmd->add_option("--tol", opt.tol, "Relative tolerance")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--angles", opt.angles, "Boundary samples for the kernel/M0 test");

  auto* stampfli_cmd = app.add_subcommand("stampfli", "Check ||Ax|| = ||A*x|| <=> A*Ax = AA*x");
  stampfli_cmd->add_option("path", opt.path, "Matrix document, or - for stdin")->required();
  stampfli_cmd->add_option("--tol", opt.tol, "Relative tolerance")->check(CLI::PositiveNumber);

  auto* numrange_cmd = app.add_subcommand("numrange", "Sample the boundary of W(A)");
  numrange_cmd->add_option("path", opt.path, "Matrix document, or - for stdin")->required();
  numrange_cmd->add_option("--angles", opt.angles, "Number of support directions");
  numrange_cmd->add_option("--svg", opt.svg_out, "Write the hull figure here");
  numrange_cmd->add_option("--csv", opt.csv_out, "Write theta,support,re,im samples here");

  auto* volterra_cmd = app.add_subcommand("volterra", "Reproduce the Volterra operator example");
  volterra_cmd->add_option("--n", opt.n, "Legendre truncation dimension");
  volterra_cmd->add_option("--phi-samples", opt.phi_samples, "Random samples for E(V) and L_phi");
  volterra_cmd->add_option("--grid", opt.midpoint_grid, "Midpoint discretization size");
  volterra_cmd->add_option("--tol", opt.tol, "Membership tolerance")->check(CLI::PositiveNumber);
  volterra_cmd->add_option("--export", opt.export_out, "Write the Galerkin matrix of V here");

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  if (const char* env = std::getenv("SEMINORMAL_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      opt.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "usage error: SEMINORMAL_SEED is not an unsigned integer\n";
      return kUsage;
    }
  }

  try {
    if (*classify_cmd) return detail::cmd_classify(opt, argv, in, out);
    if (*stampfli_cmd) return detail::cmd_stampfli(opt, argv, in, out);
    if (*numrange_cmd) return detail::cmd_numrange(opt, argv, in, out);
    if (*volterra_cmd) return detail::cmd_volterra(opt, argv, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << '\n';
    return kDimension;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace seminormal::cli
