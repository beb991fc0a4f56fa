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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fairctl {

/// Absolute tolerance on the component sum accepted by SimplexVector.
inline constexpr double kSimplexSumTolerance = 1e-12;

/// Norm exponent: a finite real p >= 2 or infinity.
class PExponent {
 public:
  /// Throws std::invalid_argument unless p is finite and p >= 2.
  static PExponent finite(double p);
  static PExponent infinity() noexcept { return PExponent(); }

  /// Accepts a decimal real >= 2 or "inf" (any case).
  static PExponent parse(std::string_view token);

  bool is_infinite() const noexcept { return infinite_; }
  /// The finite exponent. Only meaningful when !is_infinite().
  double value() const noexcept { return value_; }

  std::string to_string() const;

  friend bool operator==(const PExponent&, const PExponent&) = default;
  /// Orders by exponent with infinity last.
  friend bool operator<(const PExponent& a, const PExponent& b) noexcept {
    if (a.infinite_ || b.infinite_) return !a.infinite_ && b.infinite_;
    return a.value_ < b.value_;
  }

 private:
  PExponent() noexcept = default;
  explicit PExponent(double p) noexcept : infinite_(false), value_(p) {}

  bool infinite_ = true;
  double value_ = 0.0;
};

/// A non-zero vector in the nonnegative orthant with dimension >= 2.
class NonNegVector {
 public:
  /// Throws std::invalid_argument on n < 2, on negative or non-finite
  /// entries, and on the zero vector.
  explicit NonNegVector(std::vector<double> values);

  static NonNegVector unit(std::size_t n, std::size_t i);
  static NonNegVector ones(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

 private:
  std::vector<double> values_;
};

/// A point of the probability simplex.
class SimplexVector {
 public:
  /// Throws std::invalid_argument unless every entry is finite and >= 0
  /// and |sum - 1| <= kSimplexSumTolerance.
  explicit SimplexVector(std::vector<double> values);

  /// The barycenter e/n.
  static SimplexVector uniform(std::size_t n);
  /// The vertex e_i.
  static SimplexVector vertex(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  NonNegVector as_nonneg() const { return NonNegVector(values_); }

 private:
  std::vector<double> values_;
};

/// A probability vector used as an entropy argument.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> values() const noexcept { return weights_; }
  double operator[](std::size_t i) const noexcept { return weights_[i]; }

 private:
  std::vector<double> weights_;
};

/// Power sum S_p = sum x_i^p, its p-derivative and the induced weights
/// w_i = x_i^p / S_p. `log_value` is ln S_p computed without forming S_p,
/// so it stays finite where S_p itself underflows.
struct PowerSum {
  double value = 0.0;
  double derivative = 0.0;
  double log_value = 0.0;
  /// S_p' / S_p = sum w_i ln x_i, again computed without underflow.
  double log_derivative = 0.0;
  WeightVector weights;
};

/// l_p norm of a nonnegative vector for finite p >= 1 or p = +inf. Evaluated
/// as M * (sum (x_i/M)^p)^(1/p) with M = max x_i.
double power_norm(std::span<const double> x, double p);

double p_norm(const NonNegVector& x, PExponent p);
double p_norm(const SimplexVector& x, PExponent p);

/// D_p = n^(1 - 1/p) - 1, and n - 1 at infinity.
double dispersion_constant(std::size_t n, PExponent p);

/// Throws std::invalid_argument unless p is finite and >= 2. Terms with
/// x_i = 0 contribute nothing to the derivative.
PowerSum power_sum(const SimplexVector& x, double p);

/// -sum w_i ln w_i with 0 ln 0 = 0.
double shannon_entropy(const WeightVector& w);

/// (1/(1-alpha)) ln sum w_i^alpha. Throws std::invalid_argument for
/// alpha <= 0 or alpha == 1.
double renyi_entropy(const WeightVector& w, double alpha);

SimplexVector normalize(const NonNegVector& x);

}  // namespace fairctl
