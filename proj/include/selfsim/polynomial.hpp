#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "selfsim/combinatorics.hpp"

namespace selfsim {

struct Exponent {
  int x = 0;
  int y = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Sparse bivariate polynomial with integer coefficients. Terms are collected
/// and zero coefficients pruned on construction; the object is immutable.
class BiPoly {
 public:
  using Terms = std::map<Exponent, std::int64_t>;

  BiPoly() = default;
  explicit BiPoly(const Terms& terms);

  const Terms& terms() const { return terms_; }
  std::int64_t coefficient(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  /// Double precision nested Horner evaluation (in y, then in x).
  double evaluate(double x, double y) const;

  /// Sum of |c| x^i y^j; scale for relative error estimates.
  double magnitude(double x, double y) const;

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& other) const;
  BiPoly operator-(const BiPoly& other) const { return *this + (-other); }

  /// (i,j) -> (j,i), i.e. the reflection across the diagonal.
  BiPoly transposed() const;

  /// Canonical text form, terms by descending (x exponent, y exponent),
  /// e.g. "2x^2y^3 + x^2y^2 - x^2y - xy^3 - xy^2 - 2xy + x + y".
  std::string to_string() const;

  bool operator==(const BiPoly& other) const { return terms_ == other.terms_; }

 private:
  Terms terms_;
  int deg_x_ = -1;
  int deg_y_ = -1;
  std::vector<double> dense_;  // row-major, (deg_x_+1) x (deg_y_+1)
};

/// Univariate integer polynomial; coeffs()[i] multiplies x^i. Trailing zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  double evaluate(double x) const;
  std::int64_t value_at_zero() const { return (*this)[0]; }
  std::int64_t value_at_one() const;

  bool operator==(const UniPoly& other) const = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// F(x,y) = sum_k s_k x^{#_k(s)} y^{~#_k(s)} - t_k x^{#_k(t)} y^{~#_k(t)}, k = 1..n.
BiPoly build_curve_poly(const SeqPair& pair);

/// Same construction on raw words; used to reject degenerate pairs before a
/// SeqPair exists.
BiPoly curve_poly_from(const SignSeq& s, const SignSeq& t);

inline double evaluate(const BiPoly& poly, double x, double y) { return poly.evaluate(x, y); }

/// f(x) = F(x, 1).
UniPoly restrict_y1(const BiPoly& poly);

/// f'(1) = sum_i i * c_i, exact.
std::int64_t derivative_at_one(const UniPoly& poly);

inline bool is_zero(const BiPoly& poly) { return poly.is_zero(); }

}  // namespace selfsim
