#include "selfsim/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace selfsim {

BiPoly::BiPoly(const Terms& terms) {
  for (const auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, c);
  }
  for (const auto& [e, c] : terms_) {
    deg_x_ = std::max(deg_x_, e.x);
    deg_y_ = std::max(deg_y_, e.y);
  }
  if (!terms_.empty()) {
    dense_.assign(static_cast<std::size_t>(deg_x_ + 1) * (deg_y_ + 1), 0.0);
    for (const auto& [e, c] : terms_) {
      dense_[static_cast<std::size_t>(e.x) * (deg_y_ + 1) + e.y] = static_cast<double>(c);
    }
  }
}

std::int64_t BiPoly::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x + e.y);
  return d;
}

double BiPoly::evaluate(double x, double y) const {
  if (terms_.empty()) return 0.0;
  const std::size_t stride = deg_y_ + 1;
  double acc = 0.0;
  for (int i = deg_x_; i >= 0; --i) {
    const double* row = dense_.data() + static_cast<std::size_t>(i) * stride;
    double inner = 0.0;
    for (int j = deg_y_; j >= 0; --j) inner = inner * y + row[j];
    acc = acc * x + inner;
  }
  return acc;
}

double BiPoly::magnitude(double x, double y) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    sum += std::abs(static_cast<double>(c)) * std::pow(std::abs(x), e.x) * std::pow(std::abs(y), e.y);
  }
  return sum;
}

BiPoly BiPoly::operator-() const {
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace(e, -c);
  return BiPoly(out);
}

BiPoly BiPoly::operator+(const BiPoly& other) const {
  Terms out = terms_;
  for (const auto& [e, c] : other.terms_) out[e] += c;
  return BiPoly(out);
}

BiPoly BiPoly::transposed() const {
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace(Exponent{e.y, e.x}, c);
  return BiPoly(out);
}

namespace {

void append_power(std::ostringstream& os, char var, int exp) {
  if (exp == 0) return;
  os << var;
  if (exp > 1) os << '^' << exp;
}

}  // namespace

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, std::int64_t>> sorted(terms_.begin(), terms_.end());
  // x exponent descending, then y exponent descending: the order in which
  // the curve equations are usually printed.
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = e.x == 0 && e.y == 0;
    if (mag != 1 || constant) os << mag;
    append_power(os, 'x', e.x);
    append_power(os, 'y', e.y);
  }
  return os.str();
}

UniPoly::UniPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

double UniPoly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<double>(*it);
  return acc;
}

std::int64_t UniPoly::value_at_one() const {
  std::int64_t sum = 0;
  for (auto c : coeffs_) sum += c;
  return sum;
}

BiPoly curve_poly_from(const SignSeq& s, const SignSeq& t) {
  BiPoly::Terms terms;
  for (std::size_t k = 0; k < s.size(); ++k) terms[{s.ones()[k], s.minuses()[k]}] += s[k];
  for (std::size_t k = 0; k < t.size(); ++k) terms[{t.ones()[k], t.minuses()[k]}] -= t[k];
  return BiPoly(terms);
}

BiPoly build_curve_poly(const SeqPair& pair) { return curve_poly_from(pair.s(), pair.t()); }

UniPoly restrict_y1(const BiPoly& poly) {
  std::vector<std::int64_t> coeffs;
  for (const auto& [e, c] : poly.terms()) {
    if (coeffs.size() <= static_cast<std::size_t>(e.x)) coeffs.resize(e.x + 1, 0);
    coeffs[e.x] += c;
  }
  return UniPoly(std::move(coeffs));
}

std::int64_t derivative_at_one(const UniPoly& poly) {
  std::int64_t sum = 0;
  for (std::size_t i = 1; i < poly.coeffs().size(); ++i) sum += static_cast<std::int64_t>(i) * poly.coeffs()[i];
  return sum;
}

}  // namespace selfsim
