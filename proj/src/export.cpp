#include "selfsim/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "selfsim/error.hpp"

namespace selfsim {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

void dump_into(std::string& out, const Json& v, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out.push_back('\n');
    out.append(static_cast<std::size_t>(indent) * d, ' ');
  };

  switch (v.type()) {
    case Json::value_t::number_float: {
      const double x = v.get<double>();
      out += std::isfinite(x) ? format_double(x) : "null";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out.push_back('[');
      bool first = true;
      for (const auto& item : v) {
        if (!first) out.push_back(',');
        first = false;
        newline(depth + 1);
        dump_into(out, item, indent, depth + 1);
      }
      newline(depth);
      out.push_back(']');
      return;
    }
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out.push_back('{');
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += pretty ? ": " : ":";
        dump_into(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out.push_back('}');
      return;
    }
    default:
      out += v.dump();
  }
}

Json optional_point(const std::optional<ParamPoint>& p) { return p ? to_json(*p) : Json(nullptr); }

}  // namespace

std::string dump_json(const Json& value, int indent) {
  std::string out;
  dump_into(out, value, indent, 0);
  return out;
}

Json to_json(const SeqPair& pair) {
  return {{"s", pair.s().to_string()}, {"t", pair.t().to_string()}};
}

Json to_json(const ParamPoint& point) {
  return {{"beta1", point.beta1},
          {"beta2", point.beta2},
          {"residual", point.residual},
          {"in_R", point.in_R}};
}

Json to_json(const BiPoly& poly) {
  std::vector<std::pair<Exponent, std::int64_t>> terms(poly.terms().begin(), poly.terms().end());
  std::reverse(terms.begin(), terms.end());  // same order as BiPoly::to_string
  Json out = Json::array();
  for (const auto& [e, c] : terms) out.push_back({{"i", e.x}, {"j", e.y}, {"c", c}});
  return out;
}

Json to_json(const DimensionProfile& prof) {
  Json out;
  out["pair"] = to_json(prof.pair);
  out["beta1"] = prof.point.beta1;
  out["beta2"] = prof.point.beta2;
  out["d"] = prof.d;
  out["p_M"] = prof.p_M;
  out["sd_roots"] = prof.sd_roots;
  out["window"] = prof.window ? Json{{"lo", prof.window->lo}, {"hi", prof.window->hi}} : Json(nullptr);
  out["witness_p"] = prof.witness_p ? Json(*prof.witness_p) : Json(nullptr);
  out["sd_at_witness"] = prof.sd_at_witness;
  out["sdhat_at_witness"] = prof.sdhat_at_witness;
  return out;
}

Json to_json(const ExceptionCertificate& cert) {
  Json out;
  out["pair"] = to_json(cert.pair);
  out["polynomial"] = build_curve_poly(cert.pair).to_string();
  out["point"] = to_json(cert.point);
  out["d"] = cert.d;
  out["p_M"] = cert.p_M;
  out["window"] = {{"lo", cert.window.lo}, {"hi", cert.window.hi}};
  out["witness_p"] = cert.witness_p;
  out["sd"] = cert.sd;
  out["sd_hat"] = cert.sd_hat;
  out["overlap_residual"] = cert.overlap_residual;
  out["tool_version"] = cert.tool_version;
  out["config_digest"] = cert.config_digest;
  return out;
}

Json to_json(const CatalogRecord& rec) {
  Json out;
  out["n"] = rec.pair.n();
  out["pair"] = to_json(rec.pair);
  out["polynomial"] = build_curve_poly(rec.pair).to_string();
  out["sufficient_condition"] = rec.sufficient_condition;
  out["fprime1"] = rec.fprime1;
  out["intersects_R"] = rec.intersects_R;
  out["witness_point"] = optional_point(rec.witness_point);
  out["certificate"] = rec.certificate ? to_json(*rec.certificate) : Json(nullptr);
  if (rec.certificate_error) out["certificate_error"] = *rec.certificate_error;
  return out;
}

Json to_json(const Catalog& catalog) {
  const auto& c = catalog.config;
  Json out;
  out["tool_version"] = kToolVersion;
  out["config"] = {{"y_step", c.y_step},
                   {"bisection_tol", c.bisection_tol},
                   {"max_roots_per_slice", c.max_roots_per_slice},
                   {"refine", c.refine},
                   {"refine_step", c.refine_step},
                   {"refine_threshold", c.refine_threshold}};
  out["config_digest"] = config_digest(c);
  Json sums = Json::array();
  for (const auto& s : catalog.summaries) {
    sums.push_back({{"n", s.n},
                    {"ordered_pairs", s.ordered_pairs},
                    {"canonical_classes", s.canonical_classes},
                    {"degenerate_ordered", s.degenerate_ordered},
                    {"intersecting", s.intersecting},
                    {"certified", s.certified},
                    {"condition_holds", s.condition_holds},
                    {"intersecting_without_condition", s.intersecting_without_condition}});
  }
  out["summaries"] = std::move(sums);
  Json recs = Json::array();
  for (const auto& r : catalog.records) recs.push_back(to_json(r));
  out["records"] = std::move(recs);
  return out;
}

SeqPair pair_from_json(const Json& value) {
  return validate_pair(SignSeq::parse(value.at("s").get<std::string>()),
                       SignSeq::parse(value.at("t").get<std::string>()));
}

ExceptionCertificate certificate_from_json(const Json& value) {
  const auto& pt = value.at("point");
  ExceptionCertificate cert{
      pair_from_json(value.at("pair")),
      ParamPoint::make(pt.at("beta1").get<double>(), pt.at("beta2").get<double>(),
                       pt.at("residual").get<double>())};
  cert.d = value.at("d").get<double>();
  cert.p_M = value.at("p_M").get<double>();
  cert.window = {value.at("window").at("lo").get<double>(), value.at("window").at("hi").get<double>()};
  cert.witness_p = value.at("witness_p").get<double>();
  cert.sd = value.at("sd").get<double>();
  cert.sd_hat = value.at("sd_hat").get<double>();
  cert.overlap_residual = value.at("overlap_residual").get<double>();
  cert.tool_version = value.at("tool_version").get<std::string>();
  cert.config_digest = value.at("config_digest").get<std::string>();
  return cert;
}

void write_points_csv(std::ostream& out, const std::vector<ParamPoint>& points) {
  out << "beta1,beta2,residual,in_R\n";
  for (const auto& p : points) {
    out << format_double(p.beta1) << ',' << format_double(p.beta2) << ','
        << format_double(p.residual) << ',' << (p.in_R ? "true" : "false") << '\n';
  }
}

void write_catalog_csv(std::ostream& out, const Catalog& catalog) {
  out << "n,s,t,sufficient_condition,fprime1,intersects_R,beta1,beta2,witness_p,sd,sd_hat\n";
  for (const auto& r : catalog.records) {
    out << r.pair.n() << ',' << r.pair.s().to_string() << ',' << r.pair.t().to_string() << ','
        << (r.sufficient_condition ? "true" : "false") << ',' << r.fprime1 << ','
        << (r.intersects_R ? "true" : "false") << ',';
    if (r.witness_point) {
      out << format_double(r.witness_point->beta1) << ',' << format_double(r.witness_point->beta2);
    } else {
      out << ',';
    }
    out << ',';
    if (r.certificate) {
      out << format_double(r.certificate->witness_p) << ',' << format_double(r.certificate->sd) << ','
          << format_double(r.certificate->sd_hat);
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

void write_samples(std::ostream& out, const SampleSet& samples) {
  for (double x : samples.points) out << format_double(x) << '\n';
}

void write_curve_svg(std::ostream& out, const std::vector<ParamPoint>& points,
                     const SvgOptions& opts) {
  const double size = opts.size;
  char buf[160];
  auto px = [&](double x) { return x * size; };
  auto py = [&](double y) { return (1.0 - y) * size; };

  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                "viewBox=\"0 0 %d %d\">\n",
                opts.size, opts.size, opts.size, opts.size);
  out << buf;
  if (!opts.title.empty()) {
    std::string t;
    for (char c : opts.title) {
      if (c == '&') t += "&amp;";
      else if (c == '<') t += "&lt;";
      else if (c == '>') t += "&gt;";
      else t.push_back(c);
    }
    out << "  <title>" << t << "</title>\n";
  }
  out << "  <rect x=\"0\" y=\"0\" width=\"" << opts.size << "\" height=\"" << opts.size
      << "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";

  // R: the triangle above the anti-diagonal.
  std::snprintf(buf, sizeof(buf),
                "  <polygon points=\"%.3f,%.3f %.3f,%.3f %.3f,%.3f\" fill=\"#dbe9f6\" "
                "fill-opacity=\"0.8\" stroke=\"none\"/>\n",
                px(0), py(1), px(1), py(0), px(1), py(1));
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "  <line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"gray\" "
                "stroke-width=\"1.5\" stroke-dasharray=\"8,6\"/>\n",
                px(0), py(1), px(1), py(0));
  out << buf;

  for (const auto& branch : link_branches(points)) {
    if (branch.size() == 1) {
      std::snprintf(buf, sizeof(buf), "  <circle cx=\"%.3f\" cy=\"%.3f\" r=\"1.5\" fill=\"#c0392b\"/>\n",
                    px(branch[0].beta1), py(branch[0].beta2));
      out << buf;
      continue;
    }
    out << "  <polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < branch.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%s%.3f,%.3f", i ? " " : "", px(branch[i].beta1),
                    py(branch[i].beta2));
      out << buf;
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace selfsim
