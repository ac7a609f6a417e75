#include "selfsim/certification.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "selfsim/error.hpp"
#include "selfsim/polynomial.hpp"

namespace selfsim {

namespace {

void require_contraction(double beta, const char* name) {
  if (!(beta > 0.0 && beta < 1.0)) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s = %.17g is outside (0,1)", name, beta);
    throw Error(Errc::OutOfDomain, buf);
  }
}

double term(const SignSeq& r, std::size_t k, double beta1, double beta2) {
  return std::pow(beta1, r.ones()[k]) * std::pow(beta2, r.minuses()[k]);
}

double offset_magnitude(const SignSeq& r, double beta1, double beta2) {
  double sum = 0.0;
  for (std::size_t k = 0; k < r.size(); ++k) sum += term(r, k, beta1, beta2);
  return sum;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

AffineMap compose_affine(const SignSeq& r, double beta1, double beta2) {
  require_contraction(beta1, "beta1");
  require_contraction(beta2, "beta2");
  AffineMap map;
  // The slope depends on the counts only, so equal counts give bitwise equal slopes.
  map.slope = std::pow(beta1, r.total_ones()) * std::pow(beta2, r.total_minuses());
  for (std::size_t k = 0; k < r.size(); ++k) map.offset += r[k] * term(r, k, beta1, beta2);
  return map;
}

double verify_exact_overlap(const SeqPair& pair, const ParamPoint& point) {
  const double b1 = point.beta1;
  const double b2 = point.beta2;
  const double gap = compose_affine(pair.s(), b1, b2).offset - compose_affine(pair.t(), b1, b2).offset;
  const double f = build_curve_poly(pair).evaluate(b1, b2);
  const double scale = offset_magnitude(pair.s(), b1, b2) + offset_magnitude(pair.t(), b1, b2);
  if (std::abs(gap - f) > kOverlapConsistencyTol * std::max(1.0, scale)) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "offset gap %.17g disagrees with F = %.17g", gap, f);
    throw Error(Errc::InconsistentOverlap, buf);
  }
  return std::abs(gap);
}

std::string config_digest(const TraceConfig& trace, const WindowConfig& window) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), ";p_step=%.17g;window_tol=%.17g", window.p_step,
                window.bisection_tol);
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(fnv1a(trace.canonical_string() + buf)));
  return hex;
}

namespace {

ExceptionCertificate certify_at(const SeqPair& pair, const ParamPoint& point, const TraceConfig& cfg,
                                const WindowConfig& window_cfg) {
  const double overlap = verify_exact_overlap(pair, point);
  if (!(overlap <= kOnCurveTolerance)) {
    throw Error(Errc::NotOnCurve, "overlap residual exceeds tolerance for " + pair.to_string());
  }
  const auto prof = exception_window(pair, point, window_cfg);

  ExceptionCertificate cert{pair, point};
  cert.d = prof.d;
  cert.p_M = prof.p_M;
  cert.witness_p = *prof.witness_p;
  cert.sd = prof.sd_at_witness;
  cert.sd_hat = prof.sdhat_at_witness;
  cert.overlap_residual = overlap;
  cert.window = *prof.window;
  cert.tool_version = kToolVersion;
  cert.config_digest = config_digest(cfg, window_cfg);

  if (!(cert.sd >= 1.0 + kCertificateMargin && cert.sd_hat <= 1.0 - kCertificateMargin)) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "margins too thin at p = %.17g (SD = %.17g, reduced SD = %.17g)",
                  cert.witness_p, cert.sd, cert.sd_hat);
    throw Error(Errc::WindowNotFound, buf);
  }
  return cert;
}

// R points on the trace, most interior first (the order used by most_interior_R_point).
std::vector<ParamPoint> ranked_R_points(const std::vector<ParamPoint>& trace) {
  std::vector<ParamPoint> out;
  for (const auto& p : trace) {
    if (p.in_R && p.residual <= kOnCurveTolerance) out.push_back(p);
  }
  std::stable_sort(out.begin(), out.end(), [](const ParamPoint& a, const ParamPoint& b) {
    const double sa = a.beta1 + a.beta2;
    const double sb = b.beta1 + b.beta2;
    if (sa != sb) return sa > sb;
    if (a.beta2 != b.beta2) return a.beta2 < b.beta2;
    return a.beta1 < b.beta1;
  });
  return out;
}

}  // namespace

ExceptionCertificate certify_exception(const SeqPair& pair, const TraceConfig& cfg,
                                       const WindowConfig& window_cfg) {
  const auto candidates = ranked_R_points(trace_curve(build_curve_poly(pair), cfg));
  if (candidates.empty()) {
    throw Error(Errc::NoIntersectionWithR, "no traced point of " + pair.to_string() + " lies in R");
  }
  // Near the edges of the square the window can shrink below double
  // resolution, so later candidates are tried when the preferred one fails.
  std::optional<Error> first_failure;
  for (const auto& point : candidates) {
    try {
      return certify_at(pair, point, cfg, window_cfg);
    } catch (const Error& e) {
      if (e.code() != Errc::WindowNotFound) throw;
      if (!first_failure) first_failure = e;
    }
  }
  throw Error(Errc::WindowNotFound, "no traced R point of " + pair.to_string() +
                                        " admits a window; first attempt: " + first_failure->what());
}

CatalogRecord analyze_pair(const SeqPair& canonical, const TraceConfig& cfg) {
  CatalogRecord rec{canonical};
  rec.fprime1 = check_sufficient_condition(canonical).fprime1;
  for (const auto& member : symmetry_orbit(canonical)) {
    const auto cond = check_sufficient_condition(member);
    if (cond.holds) {
      rec.sufficient_condition = true;
      rec.fprime1 = cond.fprime1;
      break;
    }
  }

  rec.witness_point = intersects_R(build_curve_poly(canonical), cfg);
  rec.intersects_R = rec.witness_point.has_value();
  if (rec.intersects_R) {
    try {
      rec.certificate = certify_exception(canonical, cfg);
    } catch (const Error& e) {
      rec.certificate_error = e.what();
    }
  }
  return rec;
}

Catalog build_catalog(int n_min, int n_max, const TraceConfig& cfg, unsigned threads,
                      int max_length) {
  if (n_min < 3) throw Error(Errc::TooShort, "n_min = " + std::to_string(n_min) + " < 3");
  if (n_max > max_length) {
    throw Error(Errc::LimitExceeded,
                "n_max = " + std::to_string(n_max) + " exceeds " + std::to_string(max_length));
  }
  if (n_min > n_max) throw Error(Errc::InvalidConfig, "n_min > n_max");
  cfg.validate();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  Catalog catalog;
  catalog.config = cfg;
  for (int n = n_min; n <= n_max; ++n) {
    auto en = enumerate_pairs(n, max_length);

    std::vector<std::optional<CatalogRecord>> slots(en.pairs.size());
    std::atomic<std::size_t> next{0};
    {
      std::vector<std::jthread> pool;
      const unsigned workers = std::min<std::size_t>(threads, std::max<std::size_t>(1, slots.size()));
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < slots.size(); i = next++) {
            slots[i] = analyze_pair(en.pairs[i], cfg);
          }
        });
      }
    }

    CatalogSummary sum;
    sum.n = n;
    sum.ordered_pairs = en.ordered_pairs;
    sum.canonical_classes = en.pairs.size();
    sum.degenerate_ordered = en.degenerate_ordered;
    for (auto& slot : slots) {
      auto& rec = *slot;
      sum.intersecting += rec.intersects_R;
      sum.certified += rec.certificate.has_value();
      sum.condition_holds += rec.sufficient_condition;
      sum.intersecting_without_condition += rec.intersects_R && !rec.sufficient_condition;
      catalog.records.push_back(std::move(rec));
    }
    catalog.summaries.push_back(sum);
  }
  return catalog;
}

}  // namespace selfsim
