#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "chaobell/errors.hpp"
#include "chaobell/source_model.hpp"

using namespace chaobell;

namespace {

double correlation(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<SourceDraw> draws(std::size_t n, double mean, std::uint64_t seed) {
  std::vector<SourceDraw> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RandomStream rng(seed, i);
    out.push_back(sample_draw(SourceParams{mean}, rng));
  }
  return out;
}

}  // namespace

TEST_CASE("apply_pair_constraints examples") {
  const auto d = apply_pair_constraints(1, 2, 0, 0);
  CHECK(d.i2v == 1.0);
  CHECK(d.i2h == 2.0);
  CHECK(d.phase_diff2 == doctest::Approx(kPi).epsilon(1e-15));

  const auto z = apply_pair_constraints(0, 0, 0.3, 0.7);
  CHECK(z.i2v == 0.0);
  CHECK(z.i2h == 0.0);
  CHECK(z.phase_diff2 == doctest::Approx(std::fmod(-0.4 + kPi, kTwoPi)).epsilon(1e-14));

  CHECK(apply_pair_constraints(5, 5, kPi, kPi).phase_diff2 == doctest::Approx(kPi));
}

TEST_CASE("apply_pair_constraints rejects negative intensity and is idempotent") {
  CHECK_THROWS_AS(apply_pair_constraints(-1e-3, 1, 0, 0), std::domain_error);
  CHECK_THROWS_AS(apply_pair_constraints(1, -1, 0, 0), std::domain_error);
  const auto once = apply_pair_constraints(0.7, 1.9, 2.0, 5.5);
  const auto twice = apply_pair_constraints(once.i1h, once.i1v, once.phase1h, once.phase1v);
  CHECK(once.i2h == twice.i2h);
  CHECK(once.i2v == twice.i2v);
  CHECK(once.phase_diff2 == twice.phase_diff2);
}

TEST_CASE("SourceParams validation") {
  CHECK_NOTHROW(SourceParams{0.1}.validate());
  CHECK_THROWS_AS(SourceParams{0.0}.validate(), ConfigError);
  CHECK_THROWS_AS(SourceParams{-1.0}.validate(), ConfigError);
  CHECK_THROWS_AS(SourceParams{NAN}.validate(), ConfigError);
}

TEST_CASE("wrap_phase lands in [0, 2pi)") {
  for (double x : {-1e-300, -kTwoPi, -0.1, 0.0, kTwoPi, 7.0, 1e6, -1e6}) {
    const double w = wrap_phase(x);
    CHECK(w >= 0.0);
    CHECK(w < kTwoPi);
  }
}

TEST_CASE("every draw satisfies the pairing invariants") {
  for (const auto& d : draws(20000, 1.3, 5)) {
    REQUIRE(d.i2v == d.i1h);
    REQUIRE(d.i2h == d.i1v);
    REQUIRE(d.i1h >= 0.0);
    REQUIRE(d.i1v >= 0.0);
    REQUIRE(d.phase1h >= 0.0);
    REQUIRE(d.phase1h < kTwoPi);
    const double expected = wrap_phase(d.phase1h - d.phase1v + kPi);
    double diff = std::fabs(d.phase_diff2 - expected);
    diff = std::min(diff, kTwoPi - diff);
    REQUIRE(diff < 1e-12);
  }
}

TEST_CASE("intensity moments, independence and phase independence over 1e6 draws") {
  const auto ds = draws(1'000'000, 1.0, 2024);
  std::vector<double> ih, iv, ph;
  ih.reserve(ds.size());
  iv.reserve(ds.size());
  ph.reserve(ds.size());
  for (const auto& d : ds) {
    ih.push_back(d.i1h);
    iv.push_back(d.i1v);
    ph.push_back(d.phase1h);
  }
  double mean = 0;
  for (double x : ih) mean += x;
  mean /= ih.size();
  double var = 0;
  for (double x : ih) var += (x - mean) * (x - mean);
  var /= ih.size() - 1;
  CHECK(std::fabs(mean - 1.0) < 0.003);
  CHECK(std::fabs(var - 1.0) < 0.01);
  CHECK(std::fabs(correlation(ih, iv)) < 0.005);
  CHECK(std::fabs(correlation(ph, ih)) < 0.005);
}

TEST_CASE("i1h passes a Kolmogorov-Smirnov test against Exp(mean) at the 1% level") {
  for (double m : {0.5, 1.0, 3.0}) {
    const auto ds = draws(100'000, m, 77);
    std::vector<double> x;
    x.reserve(ds.size());
    for (const auto& d : ds) x.push_back(d.i1h);
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d_max = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double cdf = 1.0 - std::exp(-x[i] / m);
      d_max = std::max({d_max, std::fabs(cdf - i / n), std::fabs((i + 1) / n - cdf)});
    }
    CAPTURE(m);
    CHECK(d_max < 1.6276 / std::sqrt(n));
  }
}
