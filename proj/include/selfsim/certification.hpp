#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selfsim/combinatorics.hpp"
#include "selfsim/curve_analysis.hpp"
#include "selfsim/dimension.hpp"

namespace selfsim {

inline constexpr const char* kToolVersion = "selfsim 1.0.0";
inline constexpr double kCertificateMargin = 1e-6;
inline constexpr double kOverlapConsistencyTol = 1e-12;

/// T_r with the offset sum_k r_k beta1^{#_k(r)} beta2^{~#_k(r)}, i.e. T_{r_1}
/// applied last. Throws OutOfDomain.
AffineMap compose_affine(const SignSeq& r, double beta1, double beta2);

/// |offset(T_s) - offset(T_t)|. Cross-checked against |F(beta1,beta2)|;
/// throws InconsistentOverlap if the two disagree beyond kOverlapConsistencyTol
/// relative to the term magnitudes.
double verify_exact_overlap(const SeqPair& pair, const ParamPoint& point);

struct ExceptionCertificate {
  SeqPair pair;
  ParamPoint point;
  double d = 0.0;
  double p_M = 0.0;
  double witness_p = 0.0;
  double sd = 0.0;
  double sd_hat = 0.0;
  double overlap_residual = 0.0;
  Window window;
  std::string tool_version;
  std::string config_digest;
};

/// 64-bit FNV-1a of the trace and window configurations, hex encoded.
std::string config_digest(const TraceConfig& trace, const WindowConfig& window = {});

/// Throws NoIntersectionWithR, WindowNotFound, or a sub-error.
ExceptionCertificate certify_exception(const SeqPair& pair, const TraceConfig& cfg = {},
                                       const WindowConfig& window_cfg = {});

struct CatalogRecord {
  SeqPair pair;  // canonical
  // Whether some member of the symmetry orbit meets the sufficient
  // condition; fprime1 is that member's value (the canonical pair's own
  // value if none does).
  bool sufficient_condition = false;
  std::int64_t fprime1 = 0;
  bool intersects_R = false;
  std::optional<ParamPoint> witness_point;
  std::optional<ExceptionCertificate> certificate;
  std::optional<std::string> certificate_error;
};

struct CatalogSummary {
  int n = 0;
  std::size_t ordered_pairs = 0;
  std::size_t canonical_classes = 0;
  std::size_t degenerate_ordered = 0;
  std::size_t intersecting = 0;
  std::size_t certified = 0;
  std::size_t condition_holds = 0;
  std::size_t intersecting_without_condition = 0;
};

struct Catalog {
  TraceConfig config;
  std::vector<CatalogSummary> summaries;
  std::vector<CatalogRecord> records;  // sorted by (n, pair)
};

/// Throws TooShort or LimitExceeded. threads == 0 picks the hardware count.
Catalog build_catalog(int n_min, int n_max, const TraceConfig& cfg = {}, unsigned threads = 0,
                      int max_length = kDefaultMaxLength);

CatalogRecord analyze_pair(const SeqPair& canonical, const TraceConfig& cfg);

}  // namespace selfsim
