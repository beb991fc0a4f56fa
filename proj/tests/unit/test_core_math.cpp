// Copyright 2026 The fairctl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "fairctl/core_math.hpp"
#include "fairctl/rng.hpp"
#include "fairctl/verifier.hpp"
#include "oracles.hpp"

using namespace fairctl;
using doctest::Approx;

namespace {

PExponent P(double p) { return PExponent::finite(p); }
const PExponent kInf = PExponent::infinity();

}  // namespace

TEST_CASE("PExponent parsing and ordering") {
  CHECK(PExponent::parse("inf").is_infinite());
  CHECK(PExponent::parse("INF").is_infinite());
  CHECK(PExponent::parse("Infinity").is_infinite());
  CHECK(PExponent::parse("2.5").value() == 2.5);
  CHECK_THROWS_AS(PExponent::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(PExponent::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(PExponent::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PExponent::finite(std::nan("")), std::invalid_argument);
  CHECK(P(2) < P(3));
  CHECK(P(1e6) < kInf);
  CHECK_FALSE(kInf < kInf);
  CHECK(kInf.to_string() == "inf");
}

TEST_CASE("vector types validate their invariants") {
  CHECK_THROWS_AS(NonNegVector({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(NonNegVector({0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(NonNegVector({1.0, -0.1}), std::invalid_argument);
  CHECK_THROWS_AS(NonNegVector({1.0, INFINITY}), std::invalid_argument);
  CHECK_THROWS_AS(SimplexVector({0.5, 0.6}), std::invalid_argument);
  CHECK_NOTHROW(SimplexVector({0.5, 0.5}));
  CHECK_THROWS_AS(WeightVector({0.5, 0.4}), std::invalid_argument);
  CHECK(SimplexVector::uniform(4)[2] == 0.25);
  CHECK(SimplexVector::vertex(3, 1)[1] == 1.0);
}

TEST_CASE("p_norm examples") {
  CHECK(p_norm(NonNegVector({3, 4}), P(2)) == Approx(5.0).epsilon(1e-15));
  CHECK(p_norm(SimplexVector({0.5, 0.5, 0, 0}), kInf) == 0.5);

  const std::vector<double> x{0.7, 0.3};
  const double v = p_norm(NonNegVector(x), P(1000));
  // (3/7)^1000 underflows, so the exact value rounds to 0.7 itself.
  CHECK(v >= 0.7);
  CHECK(v <= 0.7 * std::pow(2.0, 1.0 / 1000));
  CHECK(std::abs(v - oracle::p_norm_big(x, 1000)) <= 1e-15 * v);
}

TEST_CASE("p_norm survives extreme exponents and magnitudes") {
  const std::vector<double> big{1e300, 1e300};
  CHECK(p_norm(NonNegVector(big), P(2)) == Approx(std::sqrt(2.0) * 1e300).epsilon(1e-14));
  const std::vector<double> tiny{1e-300, 2e-300, 0.0};
  CHECK(p_norm(NonNegVector(tiny), P(4)) == Approx(oracle::p_norm_big(tiny, 4)).epsilon(1e-14));
  const std::vector<double> spread{1.0, 1e-15, 1e-15};
  CHECK(p_norm(NonNegVector(spread), P(1e4)) == 1.0);
}

TEST_CASE("dispersion constant") {
  CHECK(dispersion_constant(4, P(2)) == Approx(1.0).epsilon(1e-15));
  CHECK(dispersion_constant(4, kInf) == 3.0);
  CHECK(dispersion_constant(9, P(2)) == Approx(2.0).epsilon(1e-15));
  for (std::size_t n : {2u, 3u, 10u, 1000u}) {
    for (double p : {2.0, 3.5, 50.0, 1e4}) {
      CHECK(dispersion_constant(n, P(p)) ==
            Approx(oracle::dispersion_big(n, p)).epsilon(1e-14));
    }
  }
}

TEST_CASE("power sum examples") {
  const PowerSum a = power_sum(SimplexVector({0.5, 0.5}), 2);
  CHECK(a.value == Approx(0.5).epsilon(1e-15));
  CHECK(a.derivative == Approx(0.5 * std::log(0.5)).epsilon(1e-14));
  CHECK(a.weights[0] == Approx(0.5));
  CHECK(a.weights[1] == Approx(0.5));

  const PowerSum b = power_sum(SimplexVector::vertex(3, 0), 3);
  CHECK(b.value == 1.0);
  CHECK(b.derivative == 0.0);
  CHECK(b.weights[0] == 1.0);
  CHECK(b.weights[2] == 0.0);
  CHECK_THROWS_AS(power_sum(SimplexVector::uniform(3), 1.5), std::invalid_argument);
}

TEST_CASE("power sum derivative matches a central difference") {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const SimplexVector x = sample_simplex(2 + k % 6, rng);
    const double p = rng.uniform(2.5, 20.0);
    const double h = 1e-5;
    const double fd = (power_sum(x, p + h).value - power_sum(x, p - h).value) / (2 * h);
    const PowerSum s = power_sum(x, p);
    CHECK(s.derivative == Approx(fd).epsilon(1e-6).scale(1e-12));
    CHECK(s.log_value == Approx(std::log(s.value)).epsilon(1e-12));
    CHECK(s.log_derivative == Approx(s.derivative / s.value).epsilon(1e-10));
  }
}

TEST_CASE("entropies") {
  CHECK(shannon_entropy(WeightVector({0.25, 0.25, 0.25, 0.25})) == Approx(std::log(4.0)));
  CHECK(shannon_entropy(WeightVector({1, 0, 0})) == 0.0);
  CHECK(shannon_entropy(WeightVector({0.5, 0.5, 0, 0})) == Approx(std::log(2.0)));
  CHECK(renyi_entropy(WeightVector({0.5, 0.5}), 0.5) == Approx(std::log(2.0)));
  CHECK(renyi_entropy(WeightVector({1, 0}), 0.5) == Approx(0.0).scale(1.0));
  const std::vector<double> u(5, 0.2);
  for (double alpha : {0.1, 0.5, 2.0, 7.0}) {
    CHECK(renyi_entropy(WeightVector(u), alpha) == Approx(std::log(5.0)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(renyi_entropy(WeightVector(u), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(renyi_entropy(WeightVector(u), 0.0), std::invalid_argument);
}

TEST_CASE("normalize examples") {
  const SimplexVector a = normalize(NonNegVector({2, 2, 0, 0}));
  CHECK(a[0] == 0.5);
  CHECK(a[3] == 0.0);
  const SimplexVector b = normalize(NonNegVector({0.2, 0.3, 0.5}));
  CHECK(b[1] == Approx(0.3).epsilon(1e-15));
  const SimplexVector c = normalize(NonNegVector({1, 2, 3, 4}));
  CHECK(c[3] == Approx(0.4).epsilon(1e-15));
}

TEST_CASE("norm ordering and homogeneity on random vectors") {
  Rng rng(11);
  const std::vector<double> ps{1.0, 2.0, 2.5, 3.0, 7.0, 40.0};
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 2 + k % 9;
    std::vector<double> x(n);
    for (auto& v : x) v = rng.exponential();
    for (std::size_t a = 0; a < ps.size(); ++a) {
      for (std::size_t b = a + 1; b < ps.size(); ++b) {
        const double na = power_norm(x, ps[a]);
        const double nb = power_norm(x, ps[b]);
        const double ratio = std::pow(double(n), 1.0 / ps[a] - 1.0 / ps[b]);
        CHECK(nb <= na + 1e-10);
        CHECK(na <= ratio * nb + 1e-10);
      }
    }
    const double t = std::exp(rng.uniform(-20, 20));
    std::vector<double> tx(x);
    for (auto& v : tx) v *= t;
    for (double p : {2.0, 3.0, 100.0}) {
      CHECK(power_norm(tx, p) == Approx(t * power_norm(x, p)).epsilon(1e-12));
    }
  }
}

TEST_CASE("simplex norm lies strictly between the extremes") {
  Rng rng(13);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 2 + k % 7;
    const SimplexVector x = sample_simplex(n, rng);
    for (double p : {2.0, 3.0, 10.0}) {
      const double v = p_norm(x, P(p));
      const double lower = 1.0 / (dispersion_constant(n, P(p)) + 1.0);
      CHECK(v < 1.0);
      CHECK(v > lower);
    }
  }
}

TEST_CASE("entropy sandwich and Renyi ordering") {
  Rng rng(17);
  for (int k = 0; k < 500; ++k) {
    const SimplexVector x = sample_simplex(2 + k % 8, rng);
    const double p = rng.uniform(2.0, 64.0);
    const PowerSum s = power_sum(x, p);
    const double h = shannon_entropy(s.weights);
    CHECK(h >= 0.0);
    CHECK(h <= -(p / (p - 1)) * std::log(p_norm(x, P(p))) + 1e-10);
    CHECK(h <= renyi_entropy(s.weights, 1.0 / p) + 1e-10);
    CHECK(std::abs(s.log_value - p * s.log_derivative - h) <= 1e-9);
  }
}
