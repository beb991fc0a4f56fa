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

// Projected gradient ascent over Y(eps, p) and the efficiency-vs-fairness
// frontier traced by sweeping eps.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fairctl/core_math.hpp"
#include "fairctl/fairness_sets.hpp"
#include "fairctl/geometry.hpp"

namespace fairctl {

/// Linear objective c^T x.
class LinearObjective {
 public:
  /// Throws std::invalid_argument on non-finite coefficients or size < 2.
  explicit LinearObjective(std::vector<double> coefficients);

  std::size_t size() const noexcept { return c_.size(); }
  std::span<const double> coefficients() const noexcept { return c_; }

  double value(std::span<const double> x) const;
  /// Constant for a linear objective.
  std::span<const double> gradient(std::span<const double> /*x*/) const noexcept { return c_; }

 private:
  std::vector<double> c_;
};

struct SolveOptions {
  /// Defaults to 1 / (1 + ||c||_2).
  std::optional<double> step;
  double tol = 1e-8;
  int max_iter = 20000;
  /// Halve the step after this many iterations without objective gain.
  int stall_window = 50;
  /// Keep every iterate in SolveResult::trace.
  bool record_trace = false;
  /// Inner projection settings; `tol` is tightened to at most 1/100 of the
  /// outer tolerance so projection noise does not mask convergence. The cap
  /// is higher than the standalone default because Dykstra slows down as
  /// eps approaches 1, where the ball is nearly tangent to the simplex.
  RegionProjectionOptions projection{1e-8, 50000, {}};
};

struct TracePoint {
  int iteration = 0;
  double objective = 0.0;
  double change = 0.0;  ///< ||x_k - x_{k-1}||_inf
  std::vector<double> point;
};

struct SolveResult {
  SimplexVector x_opt;
  double objective_value = 0.0;
  int iterations = 0;
  bool converged = false;
  double eps_max_at_opt = 0.0;
  double cv_at_opt = 0.0;
  /// max(0, (1 + eps D_p) ||x_opt||_p - 1)
  double fairness_residual = 0.0;
  /// The fairness constraint binds at x_opt (eps_max_at_opt within 1e-7 of eps).
  bool fairness_active = false;
  double final_step = 0.0;
  std::vector<TracePoint> trace;
};

/// Maximizes c^T x over Y(eps, p) starting from e/n. Throws
/// std::invalid_argument on invalid options; non-convergence is reported via
/// SolveResult::converged with the best iterate.
SolveResult solve(const LinearObjective& objective, const FairnessSpec& spec,
                  const SolveOptions& options = {});

struct ParetoPoint {
  double epsilon = 0.0;
  double objective_value = 0.0;
  double cv = 0.0;
  double cv_bound = 0.0;
  bool converged = false;
  int iterations = 0;
};

struct SweepOptions {
  SolveOptions solve{};
  /// Worker threads; results do not depend on this value.
  unsigned threads = 1;
};

/// One solve per grid value. Throws std::invalid_argument unless the grid is
/// non-empty, ascending, and inside [0, 1].
std::vector<ParetoPoint> pareto_sweep(const LinearObjective& objective, PExponent p,
                                      std::span<const double> eps_grid,
                                      const SweepOptions& options = {});

/// start, start + step, ... up to stop; stop is included when it lies on the
/// grid up to round-off.
/// Throws std::invalid_argument on step <= 0, stop < start, or values outside
/// [0, 1].
std::vector<double> make_eps_grid(double start, double stop, double step);

}  // namespace fairctl
