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

// Seeded sampling checks of the structural results behind the fairness
// family: CV bound, monotonicity and strict inclusion in p, the extreme-eps
// equivalences, the entropy lemmas, and norm equivalence.
//
// Every check has a signed margin (how far inside the claimed inequality the
// sample lies). Three kinds of check exist:
//   identity    |lhs - rhs| <= tol             margin = -|lhs - rhs|
//   non-strict  lhs <= rhs                     pass when margin >= -slack
//   strict      lhs <  rhs                     pass when margin >  strict_margin,
//               evaluated only on samples at least exclusion_radius (l_inf)
//               away from every vertex e_i and from the barycenter e/n.
// Boolean checks (set-membership verdicts) record margin -1 on failure.
//
// Sampling is split into fixed-size chunks; chunk k for dimension n of suite s
// draws from its own generator seeded by derive_seed(seed, {s, n, k}), and
// chunk results are merged in chunk order. Reports therefore do not depend on
// the worker count.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairctl/core_math.hpp"
#include "fairctl/rng.hpp"

namespace fairctl {

enum class Suite : int {
  kCvBound = 0,
  kInclusion,
  kEquivalence,
  kCorner,
  kEntropyIdentity,
  kEntropySandwich,
  kLemmaA1,
  kFDecreasing,
  kNormEquivalence,
  kEpsNesting,
};

const char* suite_name(Suite suite) noexcept;
std::optional<Suite> parse_suite(std::string_view name);
std::vector<Suite> all_suites();

/// Parses "all" or a comma-separated list of suite names. Throws
/// std::invalid_argument naming the first unknown entry.
std::vector<Suite> parse_suite_list(std::string_view list);

/// The default ascending exponent chain 2, 3, 4, 6, 10, 20, 50, inf.
std::vector<PExponent> default_p_chain();

struct VerifyConfig {
  std::vector<Suite> suites = all_suites();
  std::size_t samples = 10000;  ///< per suite and per dimension
  std::vector<std::size_t> n_values{2, 3, 5, 10};
  std::vector<PExponent> p_values = default_p_chain();
  std::uint64_t seed = 42;
  double tol = 1e-9;             ///< identities
  double slack = 1e-10;          ///< non-strict inequalities
  double strict_margin = 1e-12;  ///< strict inequalities
  double exclusion_radius = 1e-6;
  unsigned threads = 1;
  std::size_t chunk_size = 1000;

  /// Throws std::invalid_argument on an empty suite list, samples == 0,
  /// any n < 2, an empty exponent list, or non-positive tolerances.
  void validate() const;
};

struct Counterexample {
  std::vector<double> x;
  std::string check;
  double margin = 0.0;
};

struct SuiteReport {
  Suite suite = Suite::kCvBound;
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// Strict checks skipped because the sample was too close to an
  /// excluded point.
  std::size_t excluded = 0;
  double worst_margin = 0.0;
  std::vector<Counterexample> counterexamples;  ///< at most 10

  bool passed() const noexcept { return failures == 0; }
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<SuiteReport> suites;

  bool passed() const noexcept;
  std::size_t total_failures() const noexcept;
};

inline constexpr std::size_t kMaxCounterexamples = 10;

/// Flat Dirichlet sample: n unit exponentials normalized by their sum.
SimplexVector sample_simplex(std::size_t n, Rng& rng);

/// l_inf distance from x to the nearest of e_1..e_n and e/n.
double distance_to_excluded(const SimplexVector& x);

VerificationReport run_suite(const VerifyConfig& config);

}  // namespace fairctl
