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

#include "fairctl/core_math.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fairctl {
namespace {

double x_log_x(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void require_finite_nonneg(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument(std::string(what) +
                                  ": entries must be finite and nonnegative");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// PExponent

PExponent PExponent::finite(double p) {
  if (!std::isfinite(p) || p < 2.0) {
    throw std::invalid_argument("p must be a finite real >= 2 or infinity");
  }
  return PExponent(p);
}

PExponent PExponent::parse(std::string_view token) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
    token.remove_prefix(1);
  }
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
    token.remove_suffix(1);
  }
  std::string lower(token);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "+inf" || lower == "infinity") return infinity();

  double p = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, p);
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw std::invalid_argument("unparseable exponent '" + std::string(token) + "'");
  }
  return finite(p);
}

std::string PExponent::to_string() const {
  if (infinite_) return "inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Vector types

NonNegVector::NonNegVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw std::invalid_argument("NonNegVector: dimension must be >= 2");
  require_finite_nonneg(values_, "NonNegVector");
  if (std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; })) {
    throw std::invalid_argument("NonNegVector: the zero vector is not admissible");
  }
}

NonNegVector NonNegVector::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw std::invalid_argument("NonNegVector::unit: index out of range");
  std::vector<double> v(n, 0.0);
  v[i] = 1.0;
  return NonNegVector(std::move(v));
}

NonNegVector NonNegVector::ones(std::size_t n) { return NonNegVector(std::vector<double>(n, 1.0)); }

SimplexVector::SimplexVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw std::invalid_argument("SimplexVector: dimension must be >= 2");
  require_finite_nonneg(values_, "SimplexVector");
  const double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSimplexSumTolerance) {
    throw std::invalid_argument("SimplexVector: entries must sum to 1");
  }
}

SimplexVector SimplexVector::uniform(std::size_t n) {
  return SimplexVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

SimplexVector SimplexVector::vertex(std::size_t n, std::size_t i) {
  if (i >= n) throw std::invalid_argument("SimplexVector::vertex: index out of range");
  std::vector<double> v(n, 0.0);
  v[i] = 1.0;
  return SimplexVector(std::move(v));
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("WeightVector: empty");
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
      throw std::invalid_argument("WeightVector: weights must lie in [0,1]");
    }
  }
  const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSimplexSumTolerance) {
    throw std::invalid_argument("WeightVector: weights must sum to 1");
  }
}

// ---------------------------------------------------------------------------
// Norms

double power_norm(std::span<const double> x, double p) {
  if (x.empty()) return 0.0;
  const double m = *std::max_element(x.begin(), x.end());
  if (m == 0.0 || std::isinf(p)) return m;
  if (p == 1.0) return std::accumulate(x.begin(), x.end(), 0.0);
  double s = 0.0;
  for (double v : x) {
    if (v > 0.0) s += std::pow(v / m, p);
  }
  // s lies in [1, n]; pow with exponent 1/p keeps full relative accuracy.
  return m * std::pow(s, 1.0 / p);
}

double p_norm(const NonNegVector& x, PExponent p) {
  return power_norm(x.values(), p.is_infinite() ? std::numeric_limits<double>::infinity()
                                                : p.value());
}

double p_norm(const SimplexVector& x, PExponent p) {
  return power_norm(x.values(), p.is_infinite() ? std::numeric_limits<double>::infinity()
                                                : p.value());
}

double dispersion_constant(std::size_t n, PExponent p) {
  if (n < 2) throw std::invalid_argument("dispersion_constant: n must be >= 2");
  const double nd = static_cast<double>(n);
  if (p.is_infinite()) return nd - 1.0;
  return std::expm1((1.0 - 1.0 / p.value()) * std::log(nd));
}

PowerSum power_sum(const SimplexVector& x, double p) {
  if (!std::isfinite(p) || p < 2.0) {
    throw std::invalid_argument("power_sum: p must be a finite real >= 2");
  }
  const auto v = x.values();
  const double m = *std::max_element(v.begin(), v.end());

  // Scaled terms (x_i/M)^p avoid underflow in the weights and in ln S_p.
  std::vector<double> scaled(v.size(), 0.0);
  double scaled_sum = 0.0;
  double value = 0.0;
  double derivative = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0.0) {
      scaled[i] = std::pow(v[i] / m, p);
      scaled_sum += scaled[i];
      const double term = std::pow(v[i], p);
      value += term;
      derivative += term * std::log(v[i]);
    }
  }

  double log_derivative = 0.0;
  std::vector<double> weights(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (scaled[i] > 0.0) {
      weights[i] = scaled[i] / scaled_sum;
      log_derivative += weights[i] * std::log(v[i]);
    }
  }
  // Division round-off can leave the weight sum a few ulps off 1.
  const double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w = std::min(w / wsum, 1.0);

  return PowerSum{value, derivative, p * std::log(m) + std::log(scaled_sum), log_derivative,
                  WeightVector(std::move(weights))};
}

// ---------------------------------------------------------------------------
// Entropies

double shannon_entropy(const WeightVector& w) {
  double h = 0.0;
  for (double wi : w.values()) h -= x_log_x(wi);
  // -sum w ln w is nonnegative in exact arithmetic; clear a -0 or ulp dip.
  return std::max(h, 0.0);
}

double renyi_entropy(const WeightVector& w, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("renyi_entropy: alpha must be a finite real > 0");
  }
  if (alpha == 1.0) {
    throw std::invalid_argument("renyi_entropy: alpha = 1 is the Shannon entropy");
  }
  double s = 0.0;
  for (double wi : w.values()) {
    if (wi > 0.0) s += std::pow(wi, alpha);
  }
  return std::log(s) / (1.0 - alpha);
}

SimplexVector normalize(const NonNegVector& x) {
  const auto v = x.values();
  const double sum = std::accumulate(v.begin(), v.end(), 0.0);
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [sum](double xi) { return xi / sum; });
  return SimplexVector(std::move(out));
}

}  // namespace fairctl
