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

// Membership, thresholds and exportable constraint forms for the family of
// dispersion-control sets
//
//   X(eps, p) = { x >= 0 : (1 + eps * D_p) * ||x||_p <= ||x||_1 }
//   Y(eps, p) = X(eps, p) intersected with the probability simplex.
//
// eps = 0 imposes nothing; eps = 1 forces all components equal.

#pragma once

#include <cstddef>
#include <vector>

#include "fairctl/core_math.hpp"

namespace fairctl {

/// Default relative slack used by is_fair.
inline constexpr double kDefaultMembershipTolerance = 1e-9;

/// One member (eps, p) of the constraint family.
class FairnessSpec {
 public:
  /// Throws std::invalid_argument unless 0 <= epsilon <= 1.
  FairnessSpec(double epsilon, PExponent p);

  double epsilon() const noexcept { return epsilon_; }
  PExponent p() const noexcept { return p_; }

  /// The scaling factor 1 + eps * D_p for dimension n.
  double factor(std::size_t n) const;
  /// Radius 1 / (1 + eps * D_p) of the l_p ball cutting Y(eps, p) out of
  /// the simplex.
  double radius(std::size_t n) const { return 1.0 / factor(n); }

 private:
  double epsilon_;
  PExponent p_;
};

struct DispersionEntry {
  PExponent p;
  double eps_max;
  bool member;
  double bound;  ///< B_p(eps) at the report's eps.
};

struct DispersionReport {
  double cv = 0.0;
  double mean = 0.0;
  double epsilon = 0.0;
  SimplexVector normalized;
  std::vector<DispersionEntry> entries;  ///< ascending p, infinity last
};

/// Sum_j x_j >= coefficient * x_row for every row.
struct LinearFairnessRow {
  std::size_t row;
  double coefficient;
};

struct LinearFairnessSystem {
  std::size_t n;
  double epsilon;
  std::vector<LinearFairnessRow> rows;

  /// Evaluates every row with a relative slack of `tol`.
  bool satisfied_by(std::span<const double> x, double tol = 0.0) const;
};

enum class ConeKind { kSecondOrder, kLpCone, kLinearSystem };

const char* to_string(ConeKind kind) noexcept;

struct ConeConstraint {
  ConeKind kind;
  PExponent p;
  std::size_t n;
  double epsilon;
  /// ||x||_p <= radius on l1-normalized x.
  double radius;
};

/// Largest eps for which x is at least (eps, p)-fair:
/// (1 - ||x||_p) / (D_p ||x||_p). Round-off overshoot up to 1e-12 outside
/// [0, 1] is clamped; anything larger throws std::logic_error.
double eps_max(const SimplexVector& x, PExponent p);

/// (1 + eps D_p) ||x||_p <= ||x||_1 (1 + tol). Invariant under x -> t x.
bool is_fair(const NonNegVector& x, const FairnessSpec& spec,
             double tol = kDefaultMembershipTolerance);
bool is_fair(const SimplexVector& x, const FairnessSpec& spec,
             double tol = kDefaultMembershipTolerance);

/// sqrt(n ||x||_2^2 - 1), the coefficient of variation of a simplex point.
double coefficient_of_variation(const SimplexVector& x);

/// B_p(eps) = (D_p + 1)^2 / (1 + eps D_p)^2 - 1.
double cv_bound(std::size_t n, const FairnessSpec& spec);

LinearFairnessSystem linear_system(std::size_t n, double epsilon);

ConeConstraint cone_constraint(std::size_t n, const FairnessSpec& spec);

/// Normalizes x and evaluates every exponent in `ps` at the level `epsilon`.
/// Throws std::invalid_argument if `ps` is empty.
DispersionReport dispersion_report(const NonNegVector& x, std::vector<PExponent> ps,
                                   double epsilon,
                                   double tol = kDefaultMembershipTolerance);

}  // namespace fairctl
