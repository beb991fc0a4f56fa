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

#include "fairctl/fairness_sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fairctl {
namespace {

constexpr double kClampSlack = 1e-12;

bool fair_impl(std::span<const double> x, const FairnessSpec& spec, double tol) {
  const double l1 = std::accumulate(x.begin(), x.end(), 0.0);
  const double lp = power_norm(x, spec.p().is_infinite()
                                      ? std::numeric_limits<double>::infinity()
                                      : spec.p().value());
  return spec.factor(x.size()) * lp <= l1 * (1.0 + tol);
}

}  // namespace

FairnessSpec::FairnessSpec(double epsilon, PExponent p) : epsilon_(epsilon), p_(p) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
}

double FairnessSpec::factor(std::size_t n) const {
  return 1.0 + epsilon_ * dispersion_constant(n, p_);
}

const char* to_string(ConeKind kind) noexcept {
  switch (kind) {
    case ConeKind::kSecondOrder: return "second-order";
    case ConeKind::kLpCone: return "lp-cone";
    case ConeKind::kLinearSystem: return "linear-system";
  }
  return "unknown";
}

bool LinearFairnessSystem::satisfied_by(std::span<const double> x, double tol) const {
  if (x.size() != n) throw std::invalid_argument("linear system: dimension mismatch");
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  return std::all_of(rows.begin(), rows.end(), [&](const LinearFairnessRow& r) {
    return r.coefficient * x[r.row] <= total * (1.0 + tol);
  });
}

double eps_max(const SimplexVector& x, PExponent p) {
  const std::size_t n = x.size();
  const auto v = x.values();
  const double l1 = std::accumulate(v.begin(), v.end(), 0.0);
  const double lp = p_norm(x, p);
  const double eps = (l1 - lp) / (dispersion_constant(n, p) * lp);
  if (eps < -kClampSlack || eps > 1.0 + kClampSlack) {
    throw std::logic_error("eps_max: threshold outside [0, 1] beyond round-off");
  }
  return std::clamp(eps, 0.0, 1.0);
}

bool is_fair(const NonNegVector& x, const FairnessSpec& spec, double tol) {
  return fair_impl(x.values(), spec, tol);
}

bool is_fair(const SimplexVector& x, const FairnessSpec& spec, double tol) {
  return fair_impl(x.values(), spec, tol);
}

double coefficient_of_variation(const SimplexVector& x) {
  const double l2 = power_norm(x.values(), 2.0);
  const double cv2 = static_cast<double>(x.size()) * l2 * l2 - 1.0;
  return cv2 > 0.0 ? std::sqrt(cv2) : 0.0;
}

double cv_bound(std::size_t n, const FairnessSpec& spec) {
  if (spec.epsilon() == 1.0) return 0.0;
  const double d = dispersion_constant(n, spec.p());
  const double ratio = (d + 1.0) / spec.factor(n);
  return ratio * ratio - 1.0;
}

LinearFairnessSystem linear_system(std::size_t n, double epsilon) {
  if (n < 2) throw std::invalid_argument("linear_system: n must be >= 2");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("linear_system: epsilon must lie in [0, 1]");
  }
  const double coefficient = 1.0 + static_cast<double>(n) * epsilon - epsilon;
  LinearFairnessSystem sys{n, epsilon, {}};
  sys.rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) sys.rows.push_back({i, coefficient});
  return sys;
}

ConeConstraint cone_constraint(std::size_t n, const FairnessSpec& spec) {
  if (n < 2) throw std::invalid_argument("cone_constraint: n must be >= 2");
  ConeKind kind = ConeKind::kLpCone;
  if (spec.p().is_infinite()) {
    kind = ConeKind::kLinearSystem;
  } else if (spec.p().value() == 2.0) {
    kind = ConeKind::kSecondOrder;
  }
  return {kind, spec.p(), n, spec.epsilon(), spec.radius(n)};
}

DispersionReport dispersion_report(const NonNegVector& x, std::vector<PExponent> ps,
                                   double epsilon, double tol) {
  if (ps.empty()) throw std::invalid_argument("dispersion_report: empty exponent list");
  std::stable_sort(ps.begin(), ps.end());

  SimplexVector y = normalize(x);
  const std::size_t n = y.size();
  DispersionReport report{coefficient_of_variation(y), 1.0 / static_cast<double>(n), epsilon,
                          y, {}};
  report.entries.reserve(ps.size());
  for (const PExponent& p : ps) {
    const FairnessSpec spec(epsilon, p);
    report.entries.push_back({p, eps_max(y, p), is_fair(x, spec, tol), cv_bound(n, spec)});
  }
  return report;
}

}  // namespace fairctl
