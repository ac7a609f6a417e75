#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>

#include "paper_pairs.hpp"
#include "selfsim/polynomial.hpp"

using namespace selfsim;
using selfsim::testing::make_pair;
using Rational = boost::multiprecision::cpp_rational;

namespace {

// Every double is a dyadic rational, so this is the exact value of F(x,y).
Rational exact_value(const BiPoly& poly, double x, double y) {
  const Rational rx(x);
  const Rational ry(y);
  Rational sum = 0;
  for (const auto& [e, c] : poly.terms()) {
    Rational term = c;
    for (int i = 0; i < e.x; ++i) term *= rx;
    for (int j = 0; j < e.y; ++j) term *= ry;
    sum += term;
  }
  return sum;
}

std::vector<SeqPair> all_valid_pairs(int n) {
  std::vector<SeqPair> out;
  for (int a = 0; a < (1 << n); ++a) {
    for (int b = 0; b < (1 << n); ++b) {
      if (a == b || std::popcount(static_cast<unsigned>(a)) != std::popcount(static_cast<unsigned>(b))) continue;
      std::vector<int> s(n), t(n);
      for (int k = 0; k < n; ++k) {
        s[k] = (a >> k) & 1 ? 1 : -1;
        t[k] = (b >> k) & 1 ? 1 : -1;
      }
      out.push_back(validate_pair(SignSeq(s), SignSeq(t)));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("n = 5 curve polynomial, coefficient by coefficient") {
  const auto poly = build_curve_poly(make_pair("+---+", "-++--"));
  const BiPoly expected({{{2, 3}, 2}, {{2, 2}, 1}, {{2, 1}, -1}, {{1, 3}, -1},
                         {{1, 2}, -1}, {{1, 1}, -2}, {{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(poly == expected);
  CHECK(poly.terms().size() == 8);
  CHECK(poly.to_string() == selfsim::testing::kPairN5.equation);
  CHECK_FALSE(is_zero(poly));
}

TEST_CASE("first n = 6 printed equation") {
  const auto poly = build_curve_poly(make_pair("+--+++", "-++++-"));
  const BiPoly expected({{{4, 2}, 2}, {{4, 1}, -1}, {{3, 2}, 1}, {{3, 1}, -1}, {{2, 2}, 1},
                         {{2, 1}, -1}, {{1, 2}, -1}, {{1, 1}, -2}, {{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(poly == expected);
}

TEST_CASE("text form") {
  CHECK(BiPoly().to_string() == "0");
  CHECK(BiPoly({{{0, 0}, -3}}).to_string() == "-3");
  CHECK(BiPoly({{{0, 0}, 1}, {{1, 0}, -1}}).to_string() == "-x + 1");
  CHECK(BiPoly({{{1, 0}, 1}, {{0, 1}, 1}}).to_string() == "x + y");
}

TEST_CASE("zero polynomial") {
  const auto poly = build_curve_poly(make_pair("+---+", "-++--"));
  CHECK(is_zero(poly - poly));
  CHECK(BiPoly({{{3, 1}, 0}}).is_zero());
  CHECK_FALSE(is_zero(BiPoly({{{1, 0}, 1}, {{0, 1}, 1}})));
  CHECK(evaluate(BiPoly(), 0.3, 0.9) == 0.0);
}

TEST_CASE("evaluation at fixed points") {
  const auto poly = build_curve_poly(make_pair("+---+", "-++--"));
  CHECK(evaluate(poly, 0.0, 1.0) == 1.0);
  CHECK(evaluate(poly, 1.0, 1.0) == 0.0);
  // Printed polynomial written out by hand.
  const double x = 0.9, y = 0.9;
  const double printed = 2 * x * x * y * y * y + x * x * y * y - x * x * y - x * y * y * y - x * y * y -
                         2 * x * y + x + y;
  CHECK(evaluate(poly, x, y) == doctest::Approx(printed).epsilon(1e-14));
}

TEST_CASE("structural invariants over every valid pair up to n = 6") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& pair : all_valid_pairs(n)) {
      const auto poly = build_curve_poly(pair);
      REQUIRE(poly.total_degree() <= n);
      for (const auto& [e, c] : poly.terms()) REQUIRE(std::llabs(c) <= 2 * n);

      REQUIRE(evaluate(poly, 1.0, 1.0) == 0.0);
      REQUIRE(build_curve_poly(pair.swapped()) == -poly);
      // Negating both words swaps the roles of x and y and flips the sign.
      REQUIRE(build_curve_poly(pair.flipped()) == -poly.transposed());
      REQUIRE(build_curve_poly(pair.flipped().swapped()) == poly.transposed());

      const auto f = restrict_y1(poly);
      REQUIRE(f.value_at_one() == 0);
      std::int64_t direct = 0;
      for (std::size_t k = 0; k < pair.n(); ++k) {
        direct += pair.s()[k] * pair.s().ones()[k] - pair.t()[k] * pair.t().ones()[k];
      }
      REQUIRE(derivative_at_one(f) == direct);
    }
  }
}

TEST_CASE("Horner evaluation against exact rational arithmetic") {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int n = 3; n <= 6; ++n) {
    const auto en = enumerate_pairs(n);
    for (int i = 0; i < 1000; ++i) {
      const auto& pair = en.pairs[rng() % en.pairs.size()];
      const auto poly = build_curve_poly(pair);
      const double x = unit(rng);
      const double y = unit(rng);
      const double approx = poly.evaluate(x, y);
      const double exact = static_cast<double>(exact_value(poly, x, y));
      // Relative to the term magnitudes: F itself may be arbitrarily close to 0.
      const double rel = std::abs(approx - exact) / poly.magnitude(x, y);
      worst = std::max(worst, rel);
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("restriction to y = 1") {
  const auto f = restrict_y1(build_curve_poly(make_pair("+---+", "-++--")));
  CHECK(f == UniPoly({1, -3, 2}));
  CHECK(f.value_at_zero() == 1);
  CHECK(f.value_at_one() == 0);
  CHECK(f.evaluate(0.5) == 0.0);

  for (const auto& p : selfsim::testing::kPairsN6) {
    const auto g = restrict_y1(build_curve_poly(make_pair(p)));
    CHECK(g.value_at_zero() == 1);
    CHECK(g.value_at_one() == 0);
  }
}

TEST_CASE("derivative at one") {
  CHECK(derivative_at_one(UniPoly({1, -3, 2})) == 1);
  CHECK(derivative_at_one(UniPoly({7})) == 0);
  CHECK(derivative_at_one(UniPoly({0, 1})) == 1);
  CHECK(derivative_at_one(UniPoly()) == 0);
  CHECK(UniPoly({1, 2, 0, 0}).degree() == 1);

  // Central difference oracle.
  const UniPoly g({3, -5, 0, 4, -1});
  const double h = 1e-5;
  const double fd = (g.evaluate(1 + h) - g.evaluate(1 - h)) / (2 * h);
  CHECK(static_cast<double>(derivative_at_one(g)) == doctest::Approx(fd).epsilon(1e-8));
}
