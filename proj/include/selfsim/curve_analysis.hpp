#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selfsim/combinatorics.hpp"
#include "selfsim/polynomial.hpp"

namespace selfsim {

/// Points closer than this to the boundary of the unit square are discarded.
inline constexpr double kBoundaryTolerance = 1e-9;
/// Largest |F| accepted for a point to count as lying on the curve.
inline constexpr double kOnCurveTolerance = 1e-9;

/// A parameter point (beta1, beta2) strictly inside the unit square.
struct ParamPoint {
  double beta1 = 0.5;
  double beta2 = 0.5;
  double residual = 0.0;  // |F(beta1, beta2)|
  bool in_R = false;      // beta1 + beta2 > 1

  /// Validates 0 < beta < 1 and residual >= 0; throws OutOfDomain.
  static ParamPoint make(double beta1, double beta2, double residual);
  /// Convenience: residual taken from the polynomial.
  static ParamPoint on(const BiPoly& poly, double beta1, double beta2);
};

struct TraceConfig {
  double y_step = 1e-3;
  double bisection_tol = 1e-12;
  int max_roots_per_slice = 16;
  // Local refinement around near-misses: grid cells with |F| below
  // refine_threshold and no sign change are rescanned at refine_step.
  bool refine = true;
  double refine_step = 1e-4;
  double refine_threshold = 1e-2;

  /// Throws InvalidConfig.
  void validate() const;
  /// Stable textual form of every field, used for config digests.
  std::string canonical_string() const;
};

struct SufficientCondition {
  bool holds = false;
  std::int64_t fprime1 = 0;
};

/// s starts (1,-1), t starts (-1,1) and f'(1) = sum s_k #_k(s) - sum t_k #_k(t) > 0.
SufficientCondition check_sufficient_condition(const SeqPair& pair);

/// Roots of x -> F(x, y) in (0,1): sign-change scan with step cfg.y_step,
/// bisection to cfg.bisection_tol. Zeros without a sign change are missed.
/// Throws InvalidSlice for y outside (0,1).
std::vector<double> solve_x_given_y(const BiPoly& poly, double y, const TraceConfig& cfg = {});

/// Point cloud of the zero set in (0,1)^2, ordered by (beta2, beta1).
/// Throws DegenerateCurve for the zero polynomial.
std::vector<ParamPoint> trace_curve(const BiPoly& poly, const TraceConfig& cfg = {});

/// Picks the traced point in R maximizing beta1 + beta2 (ties: smallest beta2).
std::optional<ParamPoint> intersects_R(const BiPoly& poly, const TraceConfig& cfg = {});
std::optional<ParamPoint> most_interior_R_point(const std::vector<ParamPoint>& points);

/// Splits a trace into polylines by linking roots on consecutive slices.
std::vector<std::vector<ParamPoint>> link_branches(const std::vector<ParamPoint>& points,
                                                   double max_jump = 0.05);

}  // namespace selfsim
