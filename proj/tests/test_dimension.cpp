#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "paper_pairs.hpp"
#include "selfsim/dimension.hpp"
#include "selfsim/error.hpp"

using namespace selfsim;
using selfsim::testing::make_pair;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidSequence;
}

SeqPair random_pair(std::mt19937_64& rng, int n) {
  for (;;) {
    std::vector<int> s(n), t(n);
    for (int k = 0; k < n; ++k) {
      s[k] = rng() & 1 ? 1 : -1;
      t[k] = rng() & 1 ? 1 : -1;
    }
    if (s == t || std::count(s.begin(), s.end(), 1) != std::count(t.begin(), t.end(), 1)) continue;
    return validate_pair(SignSeq(s), SignSeq(t));
  }
}

}  // namespace

TEST_CASE("similarity dimension values") {
  CHECK(similarity_dimension(0.5, 0.5, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  const double expected = std::log(2.0) / std::log(1.0 / 0.6);
  CHECK(similarity_dimension(0.6, 0.6, 0.5) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected == doctest::Approx(1.356915).epsilon(1e-6));
  CHECK(similarity_dimension(0.6, 0.7, 1e-4) < 0.01);
}

TEST_CASE("similarity dimension domain") {
  CHECK(error_of([] { similarity_dimension(0.5, 0.5, 0.0); }) == Errc::OutOfDomain);
  CHECK(error_of([] { similarity_dimension(0.5, 0.5, 1.0); }) == Errc::OutOfDomain);
  CHECK(error_of([] { similarity_dimension(1.0, 0.5, 0.5); }) == Errc::OutOfDomain);
  CHECK(error_of([] { similarity_dimension(0.5, -0.1, 0.5); }) == Errc::OutOfDomain);
  CHECK(error_of([] { similarity_dimension(0.5, 0.5, std::nan("")); }) == Errc::OutOfDomain);
}

TEST_CASE("similarity dimension vanishes at the ends of (0,1)") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> beta(0.05, 0.95);
  for (int i = 0; i < 100; ++i) {
    const double b1 = beta(rng), b2 = beta(rng);
    CHECK(similarity_dimension(b1, b2, 1e-6) < 0.01);
    CHECK(similarity_dimension(b1, b2, 1 - 1e-6) < 0.01);
  }
}

TEST_CASE("merged probability") {
  const auto pair = make_pair("+---+", "-++--");
  CHECK(merged_probability(pair, 0.5) == 1.0 / 16.0);
  CHECK(error_of([&] { merged_probability(pair, 0.0); }) == Errc::OutOfDomain);
  CHECK(error_of([&] { merged_probability(pair, 1.0); }) == Errc::OutOfDomain);
  for (double p = 0.001; p < 1.0; p += 0.01) {
    const double m = merged_probability(pair, p);
    CHECK(m > 0.0);
    CHECK(m < 1.0);
    CHECK(m == doctest::Approx(2 * std::pow(p, 2) * std::pow(1 - p, 3)).epsilon(1e-14));
  }
}

TEST_CASE("reduced dimension at the symmetric point") {
  const auto pair = make_pair("+---+", "-++--");
  // (5 log 2 - log(2)/16) / (5 log 2) = 79/80.
  CHECK(reduced_similarity_dimension(pair, 0.5, 0.5, 0.5, ReducedMethod::Closed) ==
        doctest::Approx(79.0 / 80.0).epsilon(1e-14));
  CHECK(reduced_similarity_dimension(pair, 0.5, 0.5, 0.5, ReducedMethod::Brute) ==
        doctest::Approx(79.0 / 80.0).epsilon(1e-14));
}

TEST_CASE("brute and closed reduced dimension agree") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(1e-3, 1 - 1e-3);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto pair = random_pair(rng, 3 + static_cast<int>(rng() % 6));
    const double b1 = unit(rng), b2 = unit(rng), p = unit(rng);
    const double brute = reduced_similarity_dimension(pair, b1, b2, p, ReducedMethod::Brute);
    const double closed = reduced_similarity_dimension(pair, b1, b2, p, ReducedMethod::Closed);
    worst = std::max(worst, std::abs(brute - closed));
    REQUIRE(closed < similarity_dimension(b1, b2, p));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("brute enumeration length limit") {
  const std::string s = "+-" + std::string(23, '-');
  const std::string t = "-+" + std::string(23, '-');
  const auto pair = make_pair(s.c_str(), t.c_str());
  CHECK(error_of([&] { reduced_similarity_dimension(pair, 0.5, 0.5, 0.5, ReducedMethod::Brute); }) ==
        Errc::PairTooLong);
  CHECK(reduced_similarity_dimension(pair, 0.5, 0.5, 0.5) < 1.0);
}

TEST_CASE("reduced dimension has no jumps along a p grid") {
  const auto pair = make_pair("+---+", "-++--");
  std::vector<double> v;
  for (int k = 10; k <= 990; ++k) v.push_back(reduced_similarity_dimension(pair, 0.8, 0.7, k / 1000.0));
  for (std::size_t i = 1; i + 2 < v.size(); ++i) {
    const double jump = std::abs(v[i + 1] - v[i]);
    const double neighbours = std::max(std::abs(v[i] - v[i - 1]), std::abs(v[i + 2] - v[i + 1]));
    CHECK(jump <= 10 * neighbours + 1e-12);
  }
}

TEST_CASE("solve_d") {
  CHECK(solve_d(0.5, 0.5) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(solve_d(0.3, 0.7) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(solve_d(0.6, 0.6) == doctest::Approx(std::log(2.0) / std::log(5.0 / 3.0)).epsilon(1e-13));
  CHECK(error_of([] { solve_d(0.0, 0.5); }) == Errc::OutOfDomain);
  CHECK(error_of([] { solve_d(0.5, 1.0); }) == Errc::OutOfDomain);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(1e-6, 1 - 1e-6);
  for (int i = 0; i < 1000; ++i) {
    const double b1 = unit(rng), b2 = unit(rng);
    const double d = solve_d(b1, b2);
    REQUIRE(d > 0.0);
    REQUIRE(std::abs(std::pow(b1, d) + std::pow(b2, d) - 1.0) <= 1e-12);
    REQUIRE((b1 + b2 > 1.0) == (d > 1.0));
  }
}

TEST_CASE("SD at p_M equals d") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  while (checked < 100) {
    const double b1 = unit(rng), b2 = unit(rng);
    if (!(b1 + b2 > 1.0) || b1 <= 0.0 || b2 <= 0.0) continue;
    const double d = solve_d(b1, b2);
    CHECK(std::abs(similarity_dimension(b1, b2, std::pow(b1, d)) - d) <= 1e-10);
    ++checked;
  }
}

TEST_CASE("exception window on the n = 5 curve") {
  const auto pair = make_pair("+---+", "-++--");
  const auto poly = build_curve_poly(pair);
  const auto point = intersects_R(poly);
  REQUIRE(point.has_value());

  const auto prof = exception_window(pair, *point);
  CHECK(std::abs(std::pow(point->beta1, prof.d) + std::pow(point->beta2, prof.d) - 1.0) <= 1e-12);
  CHECK(prof.p_M == std::pow(point->beta1, prof.d));
  CHECK(std::abs(similarity_dimension(point->beta1, point->beta2, prof.p_M) - prof.d) <= 1e-10);
  REQUIRE(prof.window.has_value());
  REQUIRE(prof.witness_p.has_value());
  CHECK(prof.window->lo < prof.window->hi);
  CHECK(prof.window->hi <= prof.p_M);
  CHECK(*prof.witness_p == 0.5 * (prof.window->lo + prof.window->hi));
  CHECK(prof.sd_at_witness >= 1 + 1e-6);
  CHECK(prof.sdhat_at_witness <= 1 - 1e-6);
  REQUIRE_FALSE(prof.sd_roots.empty());
  CHECK(prof.sd_roots[0] == prof.window->lo);
  CHECK(prof.sd_roots[0] < prof.p_M);
  for (double r : prof.sd_roots) {
    CHECK(similarity_dimension(point->beta1, point->beta2, r) == doctest::Approx(1.0).epsilon(1e-8));
  }

  // Every point of the window interior behaves.
  for (int k = 1; k < 20; ++k) {
    const double p = prof.window->lo + (prof.window->hi - prof.window->lo) * k / 20;
    CHECK(similarity_dimension(point->beta1, point->beta2, p) > 1.0);
    CHECK(reduced_similarity_dimension(pair, point->beta1, point->beta2, p) < 1.0);
  }
}

TEST_CASE("exception window also works at a mid-curve point") {
  const auto pair = make_pair("+---+", "-++--");
  const auto poly = build_curve_poly(pair);
  const auto roots = solve_x_given_y(poly, 0.8);
  REQUIRE_FALSE(roots.empty());
  const auto point = ParamPoint::on(poly, roots.front(), 0.8);
  REQUIRE(point.in_R);
  const auto prof = exception_window(pair, point);
  CHECK(prof.sd_at_witness > 1.0);
  CHECK(prof.sdhat_at_witness < 1.0);
}

TEST_CASE("exception window preconditions") {
  const auto pair = make_pair("+---+", "-++--");
  CHECK(error_of([&] { exception_window(pair, ParamPoint::make(0.5, 0.5, 0.0)); }) == Errc::NotInR);
  CHECK(error_of([&] { exception_window(pair, ParamPoint::make(0.9, 0.9, 0.0)); }) == Errc::NotOnCurve);
}

TEST_CASE("chaos game sampler") {
  CHECK(sample_measure(0.6, 0.7, 0.3, 0, 1).points.empty());
  CHECK(error_of([] { sample_measure(1.0, 0.7, 0.3, 10, 1); }) == Errc::OutOfDomain);
  CHECK(error_of([] { sample_measure(0.6, 0.7, 0.0, 10, 1); }) == Errc::OutOfDomain);

  const auto a = sample_measure(0.6, 0.7, 0.3, 20000, 99);
  const auto b = sample_measure(0.6, 0.7, 0.3, 20000, 99);
  const auto c = sample_measure(0.6, 0.7, 0.3, 20000, 100);
  CHECK(a.points == b.points);
  CHECK(a.points != c.points);
  CHECK(a.seed == 99);

  const auto [lo, hi] = attractor_hull(0.6, 0.7);
  CHECK(lo == doctest::Approx(-0.7 / 0.3));
  CHECK(hi == doctest::Approx(0.6 / 0.4));
  for (double x : a.points) {
    REQUIRE(x >= lo);
    REQUIRE(x <= hi);
  }

  // With p close to 1 the orbit sits near the fixed point of T1.
  const auto right = sample_measure(0.9, 0.9, 1 - 1e-12, 1000, 1);
  const auto [lo2, hi2] = attractor_hull(0.9, 0.9);
  for (double x : right.points) {
    REQUIRE(x <= hi2);
    REQUIRE(x >= lo2);
  }
}
