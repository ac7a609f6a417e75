#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "selfsim/certification.hpp"
#include "selfsim/curve_analysis.hpp"
#include "selfsim/dimension.hpp"
#include "selfsim/polynomial.hpp"

namespace selfsim {

using Json = nlohmann::ordered_json;

/// %.17g, the format used for every floating point value written out.
std::string format_double(double value);

/// Serializes like Json::dump(indent) but with floats at 17 significant digits.
std::string dump_json(const Json& value, int indent = 2);

Json to_json(const SeqPair& pair);
Json to_json(const ParamPoint& point);
Json to_json(const BiPoly& poly);  // [{i, j, c}, ...]
Json to_json(const DimensionProfile& profile);
Json to_json(const ExceptionCertificate& cert);
Json to_json(const CatalogRecord& record);
Json to_json(const Catalog& catalog);

SeqPair pair_from_json(const Json& value);
ExceptionCertificate certificate_from_json(const Json& value);

void write_points_csv(std::ostream& out, const std::vector<ParamPoint>& points);
void write_catalog_csv(std::ostream& out, const Catalog& catalog);
void write_samples(std::ostream& out, const SampleSet& samples);

struct SvgOptions {
  int size = 800;
  std::string title;
};

/// Unit square mapped onto a size x size canvas with R shaded, x+y=1 dashed
/// and one polyline per linked branch.
void write_curve_svg(std::ostream& out, const std::vector<ParamPoint>& points,
                     const SvgOptions& opts = {});

}  // namespace selfsim
