// csym: generate bodies, apply symmetrizations, compute measures, run the
// verification suites and plot their series.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "convexsym/io.hpp"
#include "convexsym/measures.hpp"
#include "convexsym/svg.hpp"
#include "convexsym/symmetrizer.hpp"
#include "convexsym/verify.hpp"

using namespace csym;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedChecks = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// "e1,e3" (one-based axes), "o" for the zero subspace, or an inline JSON
// basis such as "[[1,1,0],[0,0,1]]".
Subspace parse_subspace(const std::string& text, int n) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  if (s.empty() || s == "o") return Subspace(n);
  if (s.front() == '[') {
    Json j;
    try {
      j = Json::parse(s);
    } catch (const nlohmann::json::parse_error&) {
      throw InvalidInput("subspace basis is not valid JSON");
    }
    if (!j.is_array()) throw InvalidInput("subspace basis must be an array of vectors");
    std::vector<Vector> vs;
    for (const auto& row : j) {
      vs.push_back(vector_from_json(row));
      if (vs.back().size() != n) throw InvalidInput("subspace basis vector has the wrong dimension");
    }
    return orthonormalize(vs, n);
  }
  std::vector<int> axes;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    const std::string tok = s.substr(pos, next - pos);
    if (tok.size() < 2 || tok[0] != 'e' || tok.find_first_not_of("0123456789", 1) != std::string::npos) {
      throw InvalidInput("bad subspace token '" + tok + "' (expected e1, e2, ...)");
    }
    const int axis = std::stoi(tok.substr(1));
    if (axis < 1 || axis > n) throw InvalidInput("axis '" + tok + "' outside 1.." + std::to_string(n));
    axes.push_back(axis - 1);
    pos = next + 1;
  }
  return Subspace::coordinate(n, axes);
}

Polytope hull_of(std::vector<Vector> pts) { return Polytope::hull(pts); }

Body generate_body(const std::string& kind, int n, int points, std::uint64_t seed, double scale, double side,
                   const std::vector<double>& sides, double radius, double r, double s, const std::string& subspace) {
  require_dim(n);
  if (kind == "cube" || kind == "box") {
    std::vector<double> len = kind == "cube" ? std::vector<double>(n, side) : sides;
    if (static_cast<int>(len.size()) != n) throw InvalidInput("--sides needs exactly --dim values");
    for (double l : len) {
      if (!(l > 0.0)) throw InvalidInput("side lengths must be positive");
    }
    std::vector<Vector> corners;
    for (int mask = 0; mask < (1 << n); ++mask) {
      Vector v(n);
      for (int k = 0; k < n; ++k) v(k) = (mask >> k) & 1 ? len[k] : 0.0;
      corners.push_back(v);
    }
    return hull_of(corners);
  }
  if (kind == "simplex") {
    std::vector<Vector> pts{Vector::Zero(n)};
    for (int k = 0; k < n; ++k) pts.push_back(side * unit_vector(n, k));
    return hull_of(pts);
  }
  if (kind == "cross") {
    std::vector<Vector> pts;
    for (int k = 0; k < n; ++k) {
      pts.push_back(side * unit_vector(n, k));
      pts.push_back(-side * unit_vector(n, k));
    }
    return hull_of(pts);
  }
  if (kind == "random-hull") {
    if (points < 1) throw InvalidInput("--points must be positive");
    RngStream rng(seed, 0);
    std::vector<Vector> pts;
    for (int i = 0; i < points; ++i) pts.push_back(scale * gaussian_vector(n, rng));
    return hull_of(pts);
  }
  if (kind == "ball") return Ball(Vector::Zero(n), radius);
  if (kind == "cylinder") return SphericalCylinder(parse_subspace(subspace, n), r, s, Vector::Zero(n));
  throw InvalidInput("unknown kind '" + kind + "'");
}

Symmetrizer build_operator(const std::string& op, const std::string& inner, const std::string& subspace, int n,
                           int m_max, double tol) {
  if (op == "natural") {
    return Symmetrizer::natural(build_operator(inner, "", subspace, n, m_max, tol), m_max, tol);
  }
  if (op == "pathological") return Symmetrizer::pathological(parse_subspace(subspace, n));
  if (subspace.empty()) throw InvalidInput("--subspace is required for " + op);
  if (op == "steiner") return Symmetrizer::steiner(parse_subspace(subspace, n));
  if (op == "minkowski") return Symmetrizer::minkowski(parse_subspace(subspace, n));
  throw InvalidInput("unknown operator '" + op + "'");
}

void print_line(const Json& j) { std::cout << j.dump() << std::endl; }

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetrizations of convex bodies: generation, operators, measures and verification"};
  app.require_subcommand(1);

  // gen
  std::string gen_kind, gen_out, gen_subspace = "e1";
  int gen_dim = 2, gen_points = 8;
  std::uint64_t gen_seed = 42;
  double gen_scale = 1.0, gen_side = 1.0, gen_radius = 1.0, gen_r = 1.0, gen_s = 1.0;
  std::vector<double> gen_sides;
  auto* gen = app.add_subcommand("gen", "Write a body file");
  gen->add_option("--kind", gen_kind, "cube, box, simplex, cross, random-hull, ball, cylinder")->required();
  gen->add_option("--dim", gen_dim, "Ambient dimension (1..8)");
  gen->add_option("--points", gen_points, "Number of Gaussian points for random-hull");
  gen->add_option("--seed", gen_seed, "Seed for random-hull");
  gen->add_option("--scale", gen_scale, "Scale of the random-hull points");
  gen->add_option("--side", gen_side, "Edge length for cube, simplex and cross");
  gen->add_option("--sides", gen_sides, "Edge lengths for box");
  gen->add_option("--radius", gen_radius, "Radius for ball");
  gen->add_option("--r", gen_r, "Radius inside H for cylinder");
  gen->add_option("--s", gen_s, "Radius inside H^perp for cylinder");
  gen->add_option("--subspace", gen_subspace, "H for cylinder");
  gen->add_option("--out", gen_out, "Output body file")->required();

  // sym
  std::string sym_op, sym_op_file, sym_inner = "minkowski", sym_subspace, sym_in, sym_out;
  int sym_m_max = 64;
  double sym_tol = 1e-6;
  auto* sym = app.add_subcommand("sym", "Apply a symmetrization to a body file");
  sym->add_option("--op", sym_op, "steiner, minkowski, pathological or natural");
  sym->add_option("--op-file", sym_op_file, "Operator descriptor file (instead of --op)");
  sym->add_option("--inner", sym_inner, "Inner operator for natural");
  sym->add_option("--subspace", sym_subspace, "H as e1,e2 or an inline basis [[...],...]");
  sym->add_option("--m-max", sym_m_max, "Truncation of the natural extension");
  sym->add_option("--tol", sym_tol, "Early-stop tolerance of the natural extension");
  sym->add_option("--in", sym_in, "Input body file")->required();
  sym->add_option("--out", sym_out, "Output body file")->required();

  // measure
  std::string meas_in, meas_what = "vj";
  int meas_j = 1;
  std::uint64_t meas_seed = 42;
  std::int64_t meas_samples = kDefaultSamples;
  auto* measure = app.add_subcommand("measure", "Print an intrinsic volume or the mean width");
  measure->add_option("--in", meas_in, "Body file")->required();
  measure->add_option("--what", meas_what, "vj, width or volume");
  measure->add_option("--j", meas_j, "Index of the intrinsic volume");
  measure->add_option("--seed", meas_seed, "Monte Carlo seed");
  measure->add_option("--samples", meas_samples, "Monte Carlo samples");

  // verify
  std::string ver_suite = "all", ver_out = "report.json";
  RunConfig cfg;
  bool ver_timestamps = false;
  auto* verify = app.add_subcommand("verify", "Run the verification suites and write a report");
  verify->add_option("--suite", ver_suite, "core, fixtures or all");
  verify->add_option("--seed", cfg.seed, "Master seed");
  verify->add_option("--samples", cfg.samples, "Monte Carlo samples per estimate");
  verify->add_option("--tol", cfg.tol, "Relative tolerance of the property checks");
  verify->add_option("--m-max", cfg.m_max, "Truncation of natural extensions");
  verify->add_option("--trials", cfg.trials, "Trials per property");
  verify->add_option("--out", ver_out, "Report file");
  verify->add_flag("--timestamps", ver_timestamps, "Stamp each record with the wall-clock time");

  // plot
  std::string plot_report, plot_kind, plot_out;
  auto* plot = app.add_subcommand("plot", "Plot a series from a report as SVG");
  plot->add_option("--report", plot_report, "Report file")->required();
  plot->add_option("--kind", plot_kind, "ne-convergence or mc-error")->required();
  plot->add_option("--out", plot_out, "SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      const Body k = generate_body(gen_kind, gen_dim, gen_points, gen_seed, gen_scale, gen_side, gen_sides,
                                   gen_radius, gen_r, gen_s, gen_subspace);
      write_text_file(gen_out, dump(body_to_json(k)));
      return kExitOk;
    }
    if (*sym) {
      const Body k = body_from_json(read_json_file(sym_in));
      const int n = ambient_dim(k);
      if (sym_op.empty() == sym_op_file.empty()) throw InvalidInput("give exactly one of --op and --op-file");
      const Symmetrizer op = sym_op_file.empty()
                                 ? build_operator(sym_op, sym_inner, sym_subspace, n, sym_m_max, sym_tol)
                                 : symmetrizer_from_json(read_json_file(sym_op_file));
      const SymmetrizeResult r = apply_reported(op, k);
      write_text_file(sym_out, dump(body_to_json(r.body)));
      Json line{{"operator", symmetrizer_to_json(op)}, {"error", r.error}};
      if (r.extension) {
        line["residual"] = r.extension->residual;
        line["achieved_m"] = r.extension->achieved_m;
      }
      print_line(line);
      return kExitOk;
    }
    if (*measure) {
      if (meas_samples < 1) throw InvalidInput("--samples must be positive");
      const Body k = body_from_json(read_json_file(meas_in));
      const RngStream rng(meas_seed, 0);
      MeasureEstimate e;
      if (meas_what == "vj") {
        e = intrinsic_volume(k, meas_j, meas_samples, rng);
      } else if (meas_what == "width") {
        e = mean_width(k, meas_samples, rng);
      } else if (meas_what == "volume") {
        e.value = body_volume(k);
      } else {
        throw InvalidInput("--what must be vj, width or volume");
      }
      print_line(estimate_to_json(e));
      return kExitOk;
    }
    if (*verify) {
      const std::vector<PropertyReport> reports = run_suite(parse_suite(ver_suite), cfg);
      Json j = reports_to_json(reports);
      if (ver_timestamps) {
        const std::string now = utc_now();
        for (auto& rec : j) rec["generated_at"] = now;
      }
      write_text_file(ver_out, dump(j));
      for (const auto& r : reports) {
        std::printf("%-5s %-4s %-34s violations=%d max=%.3g\n", r.as_expected() ? "ok" : "BAD", to_string(r.verdict),
                    r.property.c_str(), r.violations, r.max_violation);
      }
      return all_as_expected(reports) ? kExitOk : kExitFailedChecks;
    }
    if (*plot) {
      const std::vector<PropertyReport> reports = reports_from_json(read_json_file(plot_report));
      if (plot_kind != "ne-convergence" && plot_kind != "mc-error") {
        throw InvalidInput("--kind must be ne-convergence or mc-error");
      }
      const PropertyReport* found = nullptr;
      for (const auto& r : reports) {
        if (r.type == "series" && r.property == plot_kind) found = &r;
      }
      if (!found) throw InvalidInput("report has no '" + plot_kind + "' series");
      PlotOptions opts;
      opts.log_x = plot_kind == "mc-error";
      write_text_file(plot_out, series_svg(*found, opts));
      return kExitOk;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedDimension& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailedChecks;
  }
  return kExitUsage;
}
