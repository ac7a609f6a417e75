#include "selfsim/curve_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "selfsim/error.hpp"

namespace selfsim {

namespace {

bool open_unit(double v) { return v > 0.0 && v < 1.0; }

bool strictly_interior(double v) {
  return v > kBoundaryTolerance && v < 1.0 - kBoundaryTolerance;
}

int cells_for(double width, double step) {
  return std::max(1, static_cast<int>(std::ceil(width / step - 1e-9)));
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

double bisect(const BiPoly& poly, double y, double a, double b, double fa, double tol) {
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = poly.evaluate(m, y);
    if (fm == 0.0) return m;
    if (sign_of(fm) == sign_of(fa)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

struct Interval {
  double lo;
  double hi;
};

struct SliceScan {
  std::vector<double> roots;
  std::vector<Interval> near_misses;
};

// Scans x in [x_lo, x_hi] on `cells` uniform cells at height y. Near misses
// are grid-local minima of |F| below `threshold` with no sign change in
// either adjacent cell; each is reported as its two-cell neighbourhood.
SliceScan scan_slice(const BiPoly& poly, double y, double x_lo, double x_hi, int cells, double tol,
                     double threshold) {
  std::vector<double> xs(cells + 1);
  std::vector<double> fs(cells + 1);
  for (int k = 0; k <= cells; ++k) {
    xs[k] = k == cells ? x_hi : x_lo + (x_hi - x_lo) * k / cells;
    fs[k] = poly.evaluate(xs[k], y);
  }

  SliceScan out;
  for (int k = 0; k <= cells; ++k) {
    if (fs[k] == 0.0) {
      out.roots.push_back(xs[k]);
      continue;
    }
    if (k < cells && fs[k + 1] != 0.0 && sign_of(fs[k]) != sign_of(fs[k + 1])) {
      out.roots.push_back(bisect(poly, y, xs[k], xs[k + 1], fs[k], tol));
    }
  }

  if (threshold > 0.0) {
    auto changes = [&](int k) {  // cell [k, k+1]
      return k >= 0 && k < cells && sign_of(fs[k]) * sign_of(fs[k + 1]) <= 0;
    };
    for (int k = 0; k <= cells; ++k) {
      const double a = std::abs(fs[k]);
      if (!(a < threshold)) continue;
      if (k > 0 && std::abs(fs[k - 1]) < a) continue;
      if (k < cells && std::abs(fs[k + 1]) < a) continue;
      if (changes(k - 1) || changes(k)) continue;
      out.near_misses.push_back({xs[std::max(0, k - 1)], xs[std::min(cells, k + 1)]});
    }
  }
  return out;
}

void keep_interior(std::vector<double>& roots, int cap) {
  std::erase_if(roots, [](double x) { return !strictly_interior(x); });
  std::sort(roots.begin(), roots.end());
  if (static_cast<int>(roots.size()) > cap) roots.resize(cap);
}

std::vector<Interval> merge_intervals(std::vector<Interval> v) {
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (const auto& iv : v) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

}  // namespace

ParamPoint ParamPoint::make(double beta1, double beta2, double residual) {
  if (!open_unit(beta1) || !open_unit(beta2)) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "(%.17g, %.17g) is not inside (0,1)^2", beta1, beta2);
    throw Error(Errc::OutOfDomain, buf);
  }
  if (!(residual >= 0.0)) throw Error(Errc::OutOfDomain, "residual must be non-negative");
  return {beta1, beta2, residual, beta1 + beta2 > 1.0};
}

ParamPoint ParamPoint::on(const BiPoly& poly, double beta1, double beta2) {
  return make(beta1, beta2, std::abs(poly.evaluate(beta1, beta2)));
}

void TraceConfig::validate() const {
  if (!(y_step > 0.0 && y_step < 1.0)) throw Error(Errc::InvalidConfig, "y_step must lie in (0,1)");
  if (!(bisection_tol > 0.0)) throw Error(Errc::InvalidConfig, "bisection_tol must be positive");
  if (max_roots_per_slice < 1) throw Error(Errc::InvalidConfig, "max_roots_per_slice must be >= 1");
  if (refine) {
    if (!(refine_step > 0.0 && refine_step <= y_step)) {
      throw Error(Errc::InvalidConfig, "refine_step must lie in (0, y_step]");
    }
    if (!(refine_threshold > 0.0)) throw Error(Errc::InvalidConfig, "refine_threshold must be positive");
  }
}

std::string TraceConfig::canonical_string() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "y_step=%.17g;bisection_tol=%.17g;max_roots_per_slice=%d;refine=%d;refine_step=%.17g;"
                "refine_threshold=%.17g",
                y_step, bisection_tol, max_roots_per_slice, refine ? 1 : 0, refine_step,
                refine_threshold);
  return buf;
}

SufficientCondition check_sufficient_condition(const SeqPair& pair) {
  const auto& s = pair.s();
  const auto& t = pair.t();
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  for (std::size_t k = 0; k < pair.n(); ++k) {
    lhs += s[k] * s.ones()[k];
    rhs += t[k] * t.ones()[k];
  }
  const bool prefixes = s[0] == 1 && s[1] == -1 && t[0] == -1 && t[1] == 1;
  return {prefixes && lhs > rhs, lhs - rhs};
}

std::vector<double> solve_x_given_y(const BiPoly& poly, double y, const TraceConfig& cfg) {
  if (!open_unit(y)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "y = %.17g is outside (0,1)", y);
    throw Error(Errc::InvalidSlice, buf);
  }
  cfg.validate();
  auto scan = scan_slice(poly, y, 0.0, 1.0, cells_for(1.0, cfg.y_step), cfg.bisection_tol, 0.0);
  keep_interior(scan.roots, cfg.max_roots_per_slice);
  return scan.roots;
}

std::vector<ParamPoint> trace_curve(const BiPoly& poly, const TraceConfig& cfg) {
  if (poly.is_zero()) throw Error(Errc::DegenerateCurve, "the zero polynomial has no proper zero set");
  cfg.validate();

  const int rows = cells_for(1.0, cfg.y_step);
  const int sub = cfg.refine ? cells_for(1.0 / rows, cfg.refine_step) : 1;
  const long fine_rows = static_cast<long>(rows) * sub;
  const double threshold = cfg.refine ? cfg.refine_threshold : 0.0;

  std::vector<ParamPoint> points;
  auto emit = [&](double y, std::vector<double>& roots) {
    keep_interior(roots, cfg.max_roots_per_slice);
    if (!strictly_interior(y)) return;
    for (double x : roots) points.push_back(ParamPoint::on(poly, x, y));
  };

  // Fine row index -> x neighbourhoods still to be rescanned.
  std::map<long, std::vector<Interval>> pending;
  for (int k = 1; k < rows; ++k) {
    const double y = static_cast<double>(k) / rows;
    auto scan = scan_slice(poly, y, 0.0, 1.0, rows, cfg.bisection_tol, threshold);
    emit(y, scan.roots);
    for (const auto& iv : scan.near_misses) {
      const long centre = static_cast<long>(k) * sub;
      for (long q = centre - sub + 1; q <= centre + sub - 1; ++q) {
        if (q > 0 && q < fine_rows) pending[q].push_back(iv);
      }
    }
  }

  for (auto& [q, intervals] : pending) {
    const double y = static_cast<double>(q) / fine_rows;
    std::vector<double> roots;
    for (const auto& iv : merge_intervals(std::move(intervals))) {
      auto scan = scan_slice(poly, y, iv.lo, iv.hi, cells_for(iv.hi - iv.lo, cfg.refine_step),
                             cfg.bisection_tol, 0.0);
      roots.insert(roots.end(), scan.roots.begin(), scan.roots.end());
    }
    emit(y, roots);
  }

  std::sort(points.begin(), points.end(), [](const ParamPoint& a, const ParamPoint& b) {
    if (a.beta2 != b.beta2) return a.beta2 < b.beta2;
    return a.beta1 < b.beta1;
  });
  return points;
}

std::optional<ParamPoint> most_interior_R_point(const std::vector<ParamPoint>& points) {
  std::optional<ParamPoint> best;
  for (const auto& p : points) {
    if (!p.in_R || !(p.residual <= kOnCurveTolerance)) continue;
    if (!best) {
      best = p;
      continue;
    }
    const double s = p.beta1 + p.beta2;
    const double bs = best->beta1 + best->beta2;
    if (s > bs || (s == bs && (p.beta2 < best->beta2 ||
                               (p.beta2 == best->beta2 && p.beta1 < best->beta1)))) {
      best = p;
    }
  }
  return best;
}

std::optional<ParamPoint> intersects_R(const BiPoly& poly, const TraceConfig& cfg) {
  return most_interior_R_point(trace_curve(poly, cfg));
}

std::vector<std::vector<ParamPoint>> link_branches(const std::vector<ParamPoint>& points,
                                                   double max_jump) {
  // Rows closer than this in beta2 are treated as neighbours.
  constexpr double kMaxRowGap = 2.5e-3;

  std::vector<std::vector<ParamPoint>> branches;
  std::vector<std::size_t> open;
  std::size_t i = 0;
  while (i < points.size()) {
    std::size_t j = i;
    while (j < points.size() && points[j].beta2 == points[i].beta2) ++j;
    const double y = points[i].beta2;

    std::erase_if(open, [&](std::size_t b) { return y - branches[b].back().beta2 > kMaxRowGap; });
    std::vector<bool> taken(open.size(), false);
    std::vector<std::size_t> next_open;
    for (std::size_t k = i; k < j; ++k) {
      const auto& p = points[k];
      std::size_t pick = open.size();
      double best = max_jump;
      for (std::size_t o = 0; o < open.size(); ++o) {
        if (taken[o]) continue;
        const double dx = std::abs(branches[open[o]].back().beta1 - p.beta1);
        if (dx <= best) {
          best = dx;
          pick = o;
        }
      }
      if (pick < open.size()) {
        taken[pick] = true;
        branches[open[pick]].push_back(p);
        next_open.push_back(open[pick]);
      } else {
        branches.push_back({p});
        next_open.push_back(branches.size() - 1);
      }
    }
    for (std::size_t o = 0; o < open.size(); ++o) {
      if (!taken[o]) next_open.push_back(open[o]);
    }
    open = std::move(next_open);
    i = j;
  }
  return branches;
}

}  // namespace selfsim
