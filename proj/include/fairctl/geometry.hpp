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

// Euclidean projections onto the simplex, the nonnegative l_p ball, and the
// fair region Y(eps, p) = simplex intersected with the ball of radius
// 1 / (1 + eps D_p).

#pragma once

#include <span>
#include <vector>

#include "fairctl/core_math.hpp"
#include "fairctl/fairness_sets.hpp"

namespace fairctl {

struct LpBallOptions {
  double tol = 1e-10;  ///< on | ||z||_p - radius |
  int max_outer = 200;
  int max_inner = 100;
};

struct ProjectionResult {
  NonNegVector point;
  int iterations = 0;
  double residual = 0.0;  ///< max constraint violation at `point`
  bool converged = true;
};

struct RegionProjectionOptions {
  double tol = 1e-8;
  int max_iter = 5000;
  LpBallOptions ball{};
};

struct RegionProjection {
  SimplexVector point;
  int iterations = 0;
  /// max(0, (1 + eps D_p) ||point||_p - 1); the simplex constraints hold
  /// by construction.
  double residual = 0.0;
  bool converged = true;
};

/// argmin over the simplex of ||z - y||_2 by sort-and-threshold.
/// Throws std::invalid_argument on non-finite entries or size < 2.
SimplexVector project_simplex(std::span<const double> y);

/// argmin over { z >= 0 : ||z||_p <= radius } of ||z - y||_2.
/// Throws std::invalid_argument unless radius > 0.
ProjectionResult project_lp_ball(const NonNegVector& y, PExponent p, double radius,
                                 const LpBallOptions& options = {});

/// Projection onto Y(eps, p) by Dykstra's alternating projections between
/// the simplex and the nonnegative l_p ball. Never throws for finite y of
/// size >= 2; hitting the iteration cap is reported via `converged`.
RegionProjection project_fair_region(std::span<const double> y, const FairnessSpec& spec,
                                     const RegionProjectionOptions& options = {});

namespace detail {

struct BallStep {
  std::vector<double> point;
  int iterations = 0;
  bool converged = true;
};

/// Ball projection on arbitrary real input; nonpositive coordinates map to
/// zero. Used by the Dykstra loop, whose shifted iterates leave the orthant.
BallStep project_lp_ball_raw(std::span<const double> y, PExponent p, double radius,
                             const LpBallOptions& options);

}  // namespace detail

}  // namespace fairctl
