#include "selfsim/dimension.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "selfsim/error.hpp"
#include "selfsim/polynomial.hpp"

namespace selfsim {

namespace {

void require_open_unit(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s = %.17g is outside (0,1)", name, v);
    throw Error(Errc::OutOfDomain, buf);
  }
}

std::uint32_t word_mask(const SignSeq& w) {
  std::uint32_t m = 0;
  for (std::size_t k = 0; k < w.size(); ++k) m = (m << 1) | (w[k] > 0 ? 1u : 0u);
  return m;
}

double word_weight(double p, int ones, int minuses) {
  return std::pow(p, ones) * std::pow(1.0 - p, minuses);
}

double xlogx(double v) { return v > 0.0 ? v * std::log(v) : 0.0; }

// Bisection for a sign change of f on [a, b]; fa = f(a) must be nonzero.
template <typename F>
double bisect(F&& f, double a, double b, double fa, double tol) {
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

[[noreturn]] void window_failure(const std::string& what, const ParamPoint& pt) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), " at (beta1, beta2) = (%.17g, %.17g)", pt.beta1, pt.beta2);
  throw Error(Errc::WindowNotFound, what + buf);
}

}  // namespace

double binary_entropy(double p) { return -xlogx(p) - xlogx(1.0 - p); }

double lyapunov_exponent(double beta1, double beta2, double p) {
  return -p * std::log(beta1) - (1.0 - p) * std::log(beta2);
}

double similarity_dimension(double beta1, double beta2, double p) {
  require_open_unit(beta1, "beta1");
  require_open_unit(beta2, "beta2");
  require_open_unit(p, "p");
  return binary_entropy(p) / lyapunov_exponent(beta1, beta2, p);
}

double merged_probability(const SeqPair& pair, double p) {
  require_open_unit(p, "p");
  return word_weight(p, pair.s().total_ones(), pair.s().total_minuses()) +
         word_weight(p, pair.t().total_ones(), pair.t().total_minuses());
}

double reduced_similarity_dimension(const SeqPair& pair, double beta1, double beta2, double p,
                                    ReducedMethod method) {
  require_open_unit(beta1, "beta1");
  require_open_unit(beta2, "beta2");
  require_open_unit(p, "p");
  const int n = static_cast<int>(pair.n());
  const double ps = word_weight(p, pair.s().total_ones(), pair.s().total_minuses());

  if (method == ReducedMethod::Closed) {
    const double entropy = n * binary_entropy(p) - 2.0 * ps * std::log(2.0);
    return entropy / (n * lyapunov_exponent(beta1, beta2, p));
  }

  if (n > kMaxBruteLength) {
    throw Error(Errc::PairTooLong, "brute enumeration needs n <= " + std::to_string(kMaxBruteLength));
  }
  const std::uint32_t ms = word_mask(pair.s());
  const std::uint32_t mt = word_mask(pair.t());
  const double log_b1 = std::log(beta1);
  const double log_b2 = std::log(beta2);

  std::vector<double> weight(n + 1);
  for (int k = 0; k <= n; ++k) weight[k] = word_weight(p, k, n - k);

  double entropy = 0.0;
  double lyapunov = 0.0;
  const std::uint32_t words = 1u << n;
  for (std::uint32_t r = 0; r < words; ++r) {
    if (r == ms || r == mt) continue;
    const int ones = std::popcount(r);
    const double w = weight[ones];
    entropy -= xlogx(w);
    lyapunov -= w * (ones * log_b1 + (n - ones) * log_b2);
  }
  const int s_ones = pair.s().total_ones();
  const double merged = weight[s_ones] + weight[pair.t().total_ones()];
  entropy -= xlogx(merged);
  lyapunov -= merged * (s_ones * log_b1 + (n - s_ones) * log_b2);
  return entropy / lyapunov;
}

double solve_d(double beta1, double beta2) {
  require_open_unit(beta1, "beta1");
  require_open_unit(beta2, "beta2");
  auto g = [&](double d) { return std::pow(beta1, d) + std::pow(beta2, d) - 1.0; };

  double lo = 0.0;
  double hi = 1.0;
  while (g(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  // Run to the resolution of double rather than a fixed tolerance.
  for (;;) {
    const double m = 0.5 * (lo + hi);
    if (m <= lo || m >= hi) break;
    const double gm = g(m);
    if (gm == 0.0) return m;
    (gm > 0.0 ? lo : hi) = m;
  }
  return std::abs(g(lo)) <= std::abs(g(hi)) ? lo : hi;
}

DimensionProfile exception_window(const SeqPair& pair, const ParamPoint& point,
                                  const WindowConfig& cfg) {
  if (!point.in_R) throw Error(Errc::NotInR, "beta1 + beta2 <= 1");
  const double b1 = point.beta1;
  const double b2 = point.beta2;
  const double residual = std::abs(build_curve_poly(pair).evaluate(b1, b2));
  if (!(residual <= kOnCurveTolerance)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "|F| = %.3g exceeds %.1g", residual, kOnCurveTolerance);
    throw Error(Errc::NotOnCurve, buf);
  }

  DimensionProfile prof{pair, point};
  prof.d = solve_d(b1, b2);
  prof.p_M = std::pow(b1, prof.d);
  if (!(prof.p_M > 0.0 && prof.p_M < 1.0)) window_failure("p_M left (0,1)", point);
  if (std::abs(similarity_dimension(b1, b2, prof.p_M) - prof.d) > 1e-10) {
    window_failure("SD(p_M) does not reproduce d", point);
  }

  auto sd_gap = [&](double p) { return similarity_dimension(b1, b2, p) - 1.0; };
  auto sdhat_gap = [&](double p) { return reduced_similarity_dimension(pair, b1, b2, p) - 1.0; };

  // Largest root of SD = 1 below p_M.
  std::vector<double> grid{prof.p_M * 1e-9};
  for (int k = 1; k * cfg.p_step < prof.p_M; ++k) grid.push_back(k * cfg.p_step);
  grid.push_back(prof.p_M);
  std::ptrdiff_t last_low = -1;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (sd_gap(grid[i]) <= 0.0) last_low = static_cast<std::ptrdiff_t>(i);
  }
  if (last_low < 0) window_failure("SD exceeds 1 on the whole scan below p_M", point);
  const double a = grid[last_low];
  const double fa = sd_gap(a);
  const double p1 = fa == 0.0 ? a : bisect(sd_gap, a, grid[last_low + 1], fa, cfg.bisection_tol);
  prof.sd_roots.push_back(p1);

  // The root of SD = 1 above p_M, when the scan sees one.
  {
    double prev = prof.p_M;
    for (int k = 1;; ++k) {
      double p = prof.p_M + k * cfg.p_step;
      if (p >= 1.0) p = 1.0 - 1e-9;
      if (p <= prev) break;
      const double gp = sd_gap(p);
      if (gp <= 0.0) {
        prof.sd_roots.push_back(gp == 0.0 ? p : bisect(sd_gap, prev, p, sd_gap(prev), cfg.bisection_tol));
        break;
      }
      prev = p;
      if (p == 1.0 - 1e-9) break;
    }
  }

  // Reduced dimension below 1 from p1 up to its first crossing (or p_M).
  if (!(sdhat_gap(p1) < 0.0)) window_failure("reduced dimension is not below 1 at p1", point);
  double hi = prof.p_M;
  double prev = p1;
  for (int k = 1;; ++k) {
    const double p = std::min(p1 + k * cfg.p_step, prof.p_M);
    const double q = sdhat_gap(p);
    if (q >= 0.0) {
      hi = q == 0.0 ? p : bisect(sdhat_gap, prev, p, sdhat_gap(prev), cfg.bisection_tol);
      break;
    }
    if (p == prof.p_M) break;
    prev = p;
  }

  const double mid = 0.5 * (p1 + hi);
  const double sd = similarity_dimension(b1, b2, mid);
  const double sd_hat = reduced_similarity_dimension(pair, b1, b2, mid);
  if (!(sd > 1.0 && sd_hat < 1.0)) window_failure("window midpoint fails SD > 1 > reduced SD", point);

  prof.window = Window{p1, hi};
  prof.witness_p = mid;
  prof.sd_at_witness = sd;
  prof.sdhat_at_witness = sd_hat;
  return prof;
}

std::pair<double, double> attractor_hull(double beta1, double beta2) {
  return {-beta2 / (1.0 - beta2), beta1 / (1.0 - beta1)};
}

SampleSet sample_measure(double beta1, double beta2, double p, std::size_t count,
                         std::uint64_t seed) {
  require_open_unit(beta1, "beta1");
  require_open_unit(beta2, "beta2");
  require_open_unit(p, "p");

  SampleSet out;
  out.seed = seed;
  out.beta1 = beta1;
  out.beta2 = beta2;
  out.p = p;
  if (count == 0) return out;

  std::mt19937_64 rng(seed);
  auto step = [&](double x) {
    // 53-bit uniform in [0,1); spelled out so streams match across standard libraries.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < p ? beta1 * x + beta1 : beta2 * x - beta2;
  };

  double x = 0.0;
  for (int i = 0; i < kSamplerBurnIn; ++i) x = step(x);
  out.points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    x = step(x);
    out.points.push_back(x);
  }
  return out;
}

}  // namespace selfsim
