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

#include "fairctl/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace fairctl {

LinearObjective::LinearObjective(std::vector<double> coefficients) : c_(std::move(coefficients)) {
  if (c_.size() < 2) throw std::invalid_argument("objective: dimension must be >= 2");
  for (double v : c_) {
    if (!std::isfinite(v)) throw std::invalid_argument("objective: non-finite coefficient");
  }
}

double LinearObjective::value(std::span<const double> x) const {
  if (x.size() != c_.size()) throw std::invalid_argument("objective: dimension mismatch");
  return std::inner_product(c_.begin(), c_.end(), x.begin(), 0.0);
}

SolveResult solve(const LinearObjective& objective, const FairnessSpec& spec,
                  const SolveOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("solve: tol must be positive");
  if (options.max_iter < 1) throw std::invalid_argument("solve: max_iter must be >= 1");
  const std::size_t n = objective.size();
  const auto c = objective.coefficients();

  double step = options.step.value_or(
      1.0 / (1.0 + std::sqrt(std::inner_product(c.begin(), c.end(), c.begin(), 0.0))));
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("solve: step must be a positive finite real");
  }

  RegionProjectionOptions proj = options.projection;
  proj.tol = std::min(proj.tol, options.tol * 1e-2);

  SimplexVector x = SimplexVector::uniform(n);
  double value = objective.value(x.values());
  SimplexVector best = x;
  double best_value = value;
  int since_gain = 0;

  SolveResult result{x, value, 0, false, 0.0, 0.0, 0.0, false, step, {}};
  if (options.record_trace) {
    result.trace.push_back({0, value, 0.0, std::vector<double>(x.values().begin(), x.values().end())});
  }

  std::vector<double> y(n);
  int iter = 0;
  bool converged = false;
  bool projection_ok = true;
  while (iter < options.max_iter) {
    ++iter;
    const auto g = objective.gradient(x.values());
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + step * g[i];
    RegionProjection next = project_fair_region(y, spec, proj);
    projection_ok = next.converged;

    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(next.point[i] - x[i]));
    x = std::move(next.point);
    value = objective.value(x.values());

    if (options.record_trace) {
      result.trace.push_back(
          {iter, value, change, std::vector<double>(x.values().begin(), x.values().end())});
    }

    if (value > best_value) {
      best = x;
      best_value = value;
      since_gain = 0;
    } else if (++since_gain >= options.stall_window) {
      step *= 0.5;
      since_gain = 0;
    }

    if (change <= options.tol && projection_ok) {
      converged = true;
      break;
    }
  }

  if (!converged || best_value > value) {
    // Ascent with exact projections is monotone; keep the best iterate seen.
    x = best;
    value = best_value;
  }
  result.x_opt = x;
  result.objective_value = value;
  result.iterations = iter;
  result.converged = converged;
  result.eps_max_at_opt = eps_max(x, spec.p());
  result.cv_at_opt = coefficient_of_variation(x);
  result.fairness_residual =
      std::max(0.0, spec.factor(n) * p_norm(x, spec.p()) - 1.0);
  result.fairness_active = result.eps_max_at_opt <= spec.epsilon() + 1e-7;
  result.final_step = step;
  return result;
}

std::vector<ParetoPoint> pareto_sweep(const LinearObjective& objective, PExponent p,
                                      std::span<const double> eps_grid,
                                      const SweepOptions& options) {
  if (eps_grid.empty()) throw std::invalid_argument("pareto_sweep: empty grid");
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] >= 0.0 && eps_grid[i] <= 1.0)) {
      throw std::invalid_argument("pareto_sweep: grid values must lie in [0, 1]");
    }
    if (i > 0 && eps_grid[i] < eps_grid[i - 1]) {
      throw std::invalid_argument("pareto_sweep: grid must be ascending");
    }
  }

  const std::size_t n = objective.size();
  std::vector<ParetoPoint> points(eps_grid.size());
  auto evaluate = [&](std::size_t k) {
    const FairnessSpec spec(eps_grid[k], p);
    SolveResult r = solve(objective, spec, options.solve);
    points[k] = {eps_grid[k], r.objective_value, r.cv_at_opt, cv_bound(n, spec), r.converged,
                 r.iterations};
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(eps_grid.size())));
  if (workers == 1) {
    for (std::size_t k = 0; k < eps_grid.size(); ++k) evaluate(k);
    return points;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < eps_grid.size(); k = next++) evaluate(k);
    });
  }
  for (auto& t : pool) t.join();
  return points;
}

std::vector<double> make_eps_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("eps grid: step must be positive");
  }
  if (!(start >= 0.0 && stop <= 1.0 && start <= stop)) {
    throw std::invalid_argument("eps grid: need 0 <= start <= stop <= 1");
  }
  const double span = (stop - start) / step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(count + 1);
  for (std::size_t k = 0; k < count; ++k) {
    grid.push_back(std::min(stop, start + static_cast<double>(k) * step));
  }
  // Snap a last value that lands within round-off of stop.
  if (std::abs(grid.back() - stop) <= 1e-9 * step) {
    grid.back() = stop;
  }
  return grid;
}

}  // namespace fairctl
