#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "selfsim/combinatorics.hpp"
#include "selfsim/curve_analysis.hpp"

namespace selfsim {

/// x -> slope * x + offset, with 0 < slope < 1.
struct AffineMap {
  double slope = 0.5;
  double offset = 0.0;

  double operator()(double x) const { return slope * x + offset; }
};

/// -p log p - (1-p) log(1-p), natural logarithm.
double binary_entropy(double p);

/// -p log beta1 - (1-p) log beta2.
double lyapunov_exponent(double beta1, double beta2, double p);

/// SD = H(p) / (-p log beta1 - (1-p) log beta2). Throws OutOfDomain.
double similarity_dimension(double beta1, double beta2, double p);

/// Total weight of the two words whose maps coincide:
/// p^{#_n(s)} (1-p)^{~#_n(s)} + p^{#_n(t)} (1-p)^{~#_n(t)}.
double merged_probability(const SeqPair& pair, double p);

enum class ReducedMethod { Brute, Closed };

inline constexpr int kMaxBruteLength = 24;

/// Similarity dimension of the n-fold system after merging the maps of s
/// and t. Brute enumerates all 2^n words (entropy and Lyapunov sums both);
/// Closed uses n H(p) - 2 P(s) log 2 over n chi.
double reduced_similarity_dimension(const SeqPair& pair, double beta1, double beta2, double p,
                                    ReducedMethod method = ReducedMethod::Closed);

/// The unique d > 0 with beta1^d + beta2^d = 1.
double solve_d(double beta1, double beta2);

struct Window {
  double lo = 0.0;
  double hi = 0.0;
};

struct DimensionProfile {
  SeqPair pair;
  ParamPoint point;
  double d = 0.0;
  double p_M = 0.0;
  std::vector<double> sd_roots;  // where SD = 1; the one below p_M first
  std::optional<Window> window;
  std::optional<double> witness_p;
  double sd_at_witness = 0.0;
  double sdhat_at_witness = 0.0;
};

struct WindowConfig {
  double p_step = 1e-3;
  double bisection_tol = 1e-12;
};

/// Locates an interval of p on which SD > 1 and the reduced dimension < 1.
/// Throws NotInR, NotOnCurve, or WindowNotFound.
DimensionProfile exception_window(const SeqPair& pair, const ParamPoint& point,
                                  const WindowConfig& cfg = {});

struct SampleSet {
  std::vector<double> points;
  std::uint64_t seed = 0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double p = 0.0;
};

inline constexpr int kSamplerBurnIn = 64;

/// Chaos game for mu = p T1(mu) + (1-p) T2(mu): one orbit from x = 0,
/// burn-in of kSamplerBurnIn steps, then every iterate recorded.
SampleSet sample_measure(double beta1, double beta2, double p, std::size_t count,
                         std::uint64_t seed);

/// [-beta2/(1-beta2), beta1/(1-beta1)], the fixed points of T2 and T1.
std::pair<double, double> attractor_hull(double beta1, double beta2);

}  // namespace selfsim
