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

#include "fairctl/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fairctl {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(std::span<const double> y, const char* what) {
  if (y.size() < 2) throw std::invalid_argument(std::string(what) + ": dimension must be >= 2");
  for (double v : y) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
  }
}

/// Root of z + lambda * p * z^(p-1) = u on [0, u] for u > 0, lambda > 0.
/// The left side is convex and increasing, so Newton started to the right of
/// the root descends monotonically; bisection takes over if a step leaves the
/// bracket or stalls.
double solve_coordinate(double u, double lambda, double p, int max_inner) {
  const double c = lambda * p;
  double lo = 0.0;
  // Root of c z^(p-1) = u bounds the true root from above.
  double z = std::min(u, std::pow(u / c, 1.0 / (p - 1.0)));
  double hi = z;
  for (int it = 0; it < max_inner; ++it) {
    const double zp = std::pow(z, p - 2.0);
    const double hz = z + c * zp * z - u;
    if (hz == 0.0) return z;
    if (hz > 0.0) {
      hi = std::min(hi, z);
    } else {
      lo = std::max(lo, z);
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
    const double dh = 1.0 + c * (p - 1.0) * zp;
    double next = z - hz / dh;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (next == z) break;
    z = next;
  }
  return z;
}

struct DualPoint {
  std::vector<double> z;
  double norm = 0.0;
  double slope = 0.0;  ///< d||z||_p / d lambda
};

DualPoint evaluate_dual(std::span<const double> u, double lambda, double p, int max_inner) {
  DualPoint out;
  out.z.assign(u.size(), 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0.0) out.z[i] = solve_coordinate(u[i], lambda, p, max_inner);
  }
  out.norm = power_norm(out.z, p);
  if (out.norm > 0.0) {
    double acc = 0.0;
    for (double zi : out.z) {
      if (zi <= 0.0) continue;
      const double zp2 = std::pow(zi, p - 2.0);
      const double dz = -p * zp2 * zi / (1.0 + lambda * p * (p - 1.0) * zp2);
      acc += std::pow(zi / out.norm, p - 1.0) * dz;
    }
    out.slope = acc;
  }
  return out;
}

/// Lagrangian dual for the unit ball: find lambda with ||z(lambda)||_p = 1.
detail::BallStep project_unit_lp_ball(std::span<const double> u, double p,
                                      const LpBallOptions& options, double tol) {
  detail::BallStep step;
  double lo = 0.0;
  double hi = 1.0;
  DualPoint at_hi = evaluate_dual(u, hi, p, options.max_inner);
  int iterations = 1;
  while (at_hi.norm > 1.0 && iterations < options.max_outer) {
    lo = hi;
    hi *= 2.0;
    at_hi = evaluate_dual(u, hi, p, options.max_inner);
    ++iterations;
  }

  DualPoint best = at_hi;
  double lambda = 0.5 * (lo + hi);
  bool converged = at_hi.norm <= 1.0 && 1.0 - at_hi.norm <= tol;
  while (!converged && iterations < options.max_outer) {
    DualPoint cur = evaluate_dual(u, lambda, p, options.max_inner);
    ++iterations;
    const double g = cur.norm - 1.0;
    if (std::abs(g) < std::abs(best.norm - 1.0)) best = cur;
    if (std::abs(g) <= tol) {
      converged = true;
      break;
    }
    if (g > 0.0) {
      lo = lambda;
    } else {
      hi = lambda;
    }
    double next = cur.slope < 0.0 ? lambda - g / cur.slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == lambda || hi - lo <= std::numeric_limits<double>::epsilon() * hi) {
      converged = std::abs(best.norm - 1.0) <= tol;
      break;
    }
    lambda = next;
  }

  step.point = std::move(best.z);
  // A final radial pull-in of at most tol keeps the returned point feasible.
  if (best.norm > 1.0) {
    for (double& zi : step.point) zi /= best.norm;
  }
  step.iterations = iterations;
  step.converged = converged;
  return step;
}

}  // namespace

SimplexVector project_simplex(std::span<const double> y) {
  require_finite(y, "project_simplex");
  std::vector<double> sorted(y.begin(), y.end());
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());

  double cumsum = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumsum += sorted[k];
    const double candidate = (cumsum - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) theta = candidate;
  }

  std::vector<double> z(y.size());
  std::transform(y.begin(), y.end(), z.begin(), [theta](double v) { return std::max(v - theta, 0.0); });
  // Rescale away the round-off in the clipped sum.
  const double sum = std::accumulate(z.begin(), z.end(), 0.0);
  for (double& v : z) v /= sum;
  return SimplexVector(std::move(z));
}

namespace detail {

BallStep project_lp_ball_raw(std::span<const double> y, PExponent p, double radius,
                             const LpBallOptions& options) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("project_lp_ball: radius must be a positive finite real");
  }
  BallStep step;
  step.point.resize(y.size());
  std::transform(y.begin(), y.end(), step.point.begin(), [](double v) { return std::max(v, 0.0); });

  if (p.is_infinite()) {
    for (double& v : step.point) v = std::min(v, radius);
    return step;
  }

  const double norm = power_norm(step.point, p.value());
  if (norm <= radius) return step;

  if (p.value() == 2.0) {
    const double scale = radius / norm;
    for (double& v : step.point) v *= scale;
    return step;
  }

  std::vector<double> scaled(step.point.size());
  std::transform(step.point.begin(), step.point.end(), scaled.begin(),
                 [radius](double v) { return v / radius; });
  BallStep unit = project_unit_lp_ball(scaled, p.value(), options, options.tol / radius);
  for (double& v : unit.point) v *= radius;
  return unit;
}

}  // namespace detail

ProjectionResult project_lp_ball(const NonNegVector& y, PExponent p, double radius,
                                 const LpBallOptions& options) {
  detail::BallStep step = detail::project_lp_ball_raw(y.values(), p, radius, options);
  const double norm = power_norm(step.point, p.is_infinite() ? kInf : p.value());
  const double residual = std::max(0.0, norm - radius);
  return ProjectionResult{NonNegVector(std::move(step.point)), step.iterations, residual,
                          step.converged && residual <= options.tol};
}

RegionProjection project_fair_region(std::span<const double> y, const FairnessSpec& spec,
                                     const RegionProjectionOptions& options) {
  require_finite(y, "project_fair_region");
  const std::size_t n = y.size();
  const double factor = spec.factor(n);
  const double exponent = spec.p().is_infinite() ? kInf : spec.p().value();
  auto residual_of = [&](const SimplexVector& x) {
    return std::max(0.0, factor * power_norm(x.values(), exponent) - 1.0);
  };

  // The two ends of the family have closed forms: eps = 0 leaves the whole
  // simplex, and eps = 1 leaves only the barycenter, where the ball is
  // tangent to the simplex plane and Dykstra would crawl.
  if (spec.epsilon() == 0.0) {
    SimplexVector x = project_simplex(y);
    const double r = residual_of(x);
    return RegionProjection{std::move(x), 1, r, r <= options.tol};
  }
  if (spec.epsilon() == 1.0) {
    SimplexVector x = SimplexVector::uniform(n);
    const double r = residual_of(x);
    return RegionProjection{std::move(x), 1, r, r <= options.tol};
  }

  const double radius = 1.0 / factor;
  std::vector<double> x(y.begin(), y.end());
  std::vector<double> ball_shift(n, 0.0);
  std::vector<double> simplex_shift(n, 0.0);
  std::vector<double> work(n);

  SimplexVector current = SimplexVector::uniform(n);
  double residual = kInf;
  int iter = 0;
  bool converged = false;
  while (iter < options.max_iter) {
    ++iter;
    for (std::size_t i = 0; i < n; ++i) work[i] = x[i] + ball_shift[i];
    detail::BallStep ball = detail::project_lp_ball_raw(work, spec.p(), radius, options.ball);
    // The iterate can stall while the correction terms are still moving, so
    // convergence is judged on the full state.
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double shift = work[i] - ball.point[i];
      change = std::max(change, std::abs(shift - ball_shift[i]));
      ball_shift[i] = shift;
      work[i] = ball.point[i] + simplex_shift[i];
    }
    current = project_simplex(work);
    for (std::size_t i = 0; i < n; ++i) {
      const double shift = work[i] - current[i];
      change = std::max(change, std::abs(shift - simplex_shift[i]));
      change = std::max(change, std::abs(current[i] - x[i]));
      simplex_shift[i] = shift;
      x[i] = current[i];
    }
    residual = residual_of(current);
    if (change <= options.tol && residual <= options.tol) {
      converged = true;
      break;
    }
  }
  return RegionProjection{std::move(current), iter, residual, converged};
}

}  // namespace fairctl
