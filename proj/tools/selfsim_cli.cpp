// Command line front end: catalog, curve, certify, dims, sample.
//
// Exit codes: 0 success, 2 validation error, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "selfsim/certification.hpp"
#include "selfsim/curve_analysis.hpp"
#include "selfsim/dimension.hpp"
#include "selfsim/error.hpp"
#include "selfsim/export.hpp"
#include "selfsim/polynomial.hpp"

namespace {

using namespace selfsim;

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

SeqPair read_pair(const std::string& s, const std::string& t) {
  return validate_pair(SignSeq::parse(s), SignSeq::parse(t));
}

void print_point(const char* label, const ParamPoint& p) {
  std::printf("%s(%.17g, %.17g)  |F| = %.3g  in_R = %s\n", label, p.beta1, p.beta2, p.residual,
              p.in_R ? "true" : "false");
}

int run_catalog(int n_min, int n_max, const TraceConfig& cfg, unsigned threads,
                const std::string& json_path, const std::string& csv_path) {
  const auto catalog = build_catalog(n_min, n_max, cfg, threads);
  std::printf("%3s %10s %10s %10s %12s %10s %10s %14s\n", "n", "ordered", "classes", "degenerate",
              "intersect_R", "certified", "condition", "R_without_cond");
  for (const auto& s : catalog.summaries) {
    std::printf("%3d %10zu %10zu %10zu %12zu %10zu %10zu %14zu\n", s.n, s.ordered_pairs,
                s.canonical_classes, s.degenerate_ordered, s.intersecting, s.certified,
                s.condition_holds, s.intersecting_without_condition);
  }
  for (const auto& r : catalog.records) {
    if (!r.intersects_R) continue;
    std::printf("  n=%zu  s=%s  t=%s  condition=%s  f'(1)=%lld  %s\n", r.pair.n(),
                r.pair.s().to_string().c_str(), r.pair.t().to_string().c_str(),
                r.sufficient_condition ? "yes" : "no", static_cast<long long>(r.fprime1),
                r.certificate ? "certified" : "not certified");
  }
  if (!json_path.empty()) open_output(json_path) << dump_json(to_json(catalog)) << '\n';
  if (!csv_path.empty()) {
    auto out = open_output(csv_path);
    write_catalog_csv(out, catalog);
  }
  return 0;
}

int run_curve(const SeqPair& pair, const TraceConfig& cfg, const std::string& svg_path,
              const std::string& csv_path) {
  const auto poly = build_curve_poly(pair);
  const auto f = restrict_y1(poly);
  const auto cond = check_sufficient_condition(pair);
  std::printf("s = %s  t = %s\n", pair.s().to_string().c_str(), pair.t().to_string().c_str());
  std::printf("F(x,y) = %s\n", poly.to_string().c_str());
  std::printf("f(x) = F(x,1): f(0) = %lld  f(1) = %lld  f'(1) = %lld\n",
              static_cast<long long>(f.value_at_zero()), static_cast<long long>(f.value_at_one()),
              static_cast<long long>(derivative_at_one(f)));
  std::printf("sufficient condition: %s (f'(1) = %lld)\n", cond.holds ? "holds" : "fails",
              static_cast<long long>(cond.fprime1));

  const auto points = trace_curve(poly, cfg);
  std::size_t in_r = 0;
  for (const auto& p : points) in_r += p.in_R;
  std::printf("traced points: %zu (%zu in R)\n", points.size(), in_r);
  if (auto w = most_interior_R_point(points)) print_point("R witness: ", *w);

  if (!svg_path.empty()) {
    auto out = open_output(svg_path);
    write_curve_svg(out, points, {800, "c_{s,t} for s=" + pair.s().to_string() + " t=" + pair.t().to_string()});
  }
  if (!csv_path.empty()) {
    auto out = open_output(csv_path);
    write_points_csv(out, points);
  }
  return 0;
}

int run_certify(const SeqPair& pair, const TraceConfig& cfg, const std::string& json_path) {
  const auto cert = certify_exception(pair, cfg);
  const std::string text = dump_json(to_json(cert));
  if (json_path.empty()) {
    std::cout << text << '\n';
  } else {
    open_output(json_path) << text << '\n';
    print_point("point: ", cert.point);
    std::printf("p = %.17g  SD = %.17g  reduced SD = %.17g\n", cert.witness_p, cert.sd, cert.sd_hat);
  }
  return 0;
}

int run_dims(const SeqPair& pair, double beta1, double beta2, int grid, bool profile) {
  if (grid < 1) throw Error(Errc::InvalidConfig, "--p-grid must be positive");
  const double d = solve_d(beta1, beta2);
  std::printf("# d = %.17g\n# p_M = %.17g\n", d, std::pow(beta1, d));
  std::printf("p,sd,sd_hat\n");
  for (int k = 1; k <= grid; ++k) {
    const double p = static_cast<double>(k) / (grid + 1);
    std::printf("%s,%s,%s\n", format_double(p).c_str(),
                format_double(similarity_dimension(beta1, beta2, p)).c_str(),
                format_double(reduced_similarity_dimension(pair, beta1, beta2, p)).c_str());
  }
  if (profile) {
    const auto poly = build_curve_poly(pair);
    const auto prof = exception_window(pair, ParamPoint::on(poly, beta1, beta2));
    std::cerr << dump_json(to_json(prof)) << '\n';
  }
  return 0;
}

int run_sample(double beta1, double beta2, double p, std::size_t count, std::uint64_t seed,
               const std::string& out_path) {
  const auto samples = sample_measure(beta1, beta2, p, count, seed);
  if (out_path.empty()) {
    write_samples(std::cout, samples);
  } else {
    auto out = open_output(out_path);
    write_samples(out, samples);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-overlap exception curves for two-map self-similar measures"};
  app.require_subcommand(1);

  TraceConfig cfg;
  std::string s_text, t_text, json_path, csv_path, svg_path, out_path;
  int n_min = 3, n_max = 6, p_grid = 1000;
  unsigned threads = 0;
  double beta1 = 0.0, beta2 = 0.0, p = 0.0;
  std::size_t count = 100000;
  std::uint64_t seed = 42;
  bool profile = false;

  auto* catalog = app.add_subcommand("catalog", "Enumerate canonical pairs and test them against R");
  catalog->add_option("--n-min", n_min, "Smallest word length")->capture_default_str();
  catalog->add_option("--n-max", n_max, "Largest word length")->capture_default_str();
  catalog->add_option("--json", json_path, "Write the catalog as JSON");
  catalog->add_option("--csv", csv_path, "Write the catalog as CSV");
  catalog->add_option("--y-step", cfg.y_step, "Slice spacing")->capture_default_str();
  catalog->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* curve = app.add_subcommand("curve", "Build and trace one curve");
  curve->add_option("--s", s_text, "First word, e.g. +---+")->required();
  curve->add_option("--t", t_text, "Second word, e.g. -++--")->required();
  curve->add_option("--svg", svg_path, "Write an SVG plot");
  curve->add_option("--csv", csv_path, "Write traced points as CSV");
  curve->add_option("--y-step", cfg.y_step, "Slice spacing")->capture_default_str();

  auto* certify = app.add_subcommand("certify", "Produce an exception certificate");
  certify->add_option("--s", s_text)->required();
  certify->add_option("--t", t_text)->required();
  certify->add_option("--json", json_path, "Write the certificate to a file");
  certify->add_option("--y-step", cfg.y_step, "Slice spacing")->capture_default_str();

  auto* dims = app.add_subcommand("dims", "Tabulate SD and reduced SD over a p grid");
  dims->add_option("--beta1", beta1)->required();
  dims->add_option("--beta2", beta2)->required();
  dims->add_option("--s", s_text)->required();
  dims->add_option("--t", t_text)->required();
  dims->add_option("--p-grid", p_grid, "Number of interior grid points")->capture_default_str();
  dims->add_flag("--profile", profile, "Also search the exception window (point must be on the curve)");

  auto* sample = app.add_subcommand("sample", "Chaos-game samples of the self-similar measure");
  sample->add_option("--beta1", beta1)->required();
  sample->add_option("--beta2", beta2)->required();
  sample->add_option("--p", p)->required();
  sample->add_option("--n", count)->capture_default_str();
  sample->add_option("--seed", seed)->capture_default_str();
  sample->add_option("--out", out_path, "Write samples to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitValidation;
  }

  try {
    if (*catalog) return run_catalog(n_min, n_max, cfg, threads, json_path, csv_path);
    if (*curve) return run_curve(read_pair(s_text, t_text), cfg, svg_path, csv_path);
    if (*certify) return run_certify(read_pair(s_text, t_text), cfg, json_path);
    if (*dims) return run_dims(read_pair(s_text, t_text), beta1, beta2, p_grid, profile);
    if (*sample) return run_sample(beta1, beta2, p, count, seed, out_path);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return is_numerical_failure(e.code()) ? kExitNumerical : kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
