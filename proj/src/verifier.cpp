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

#include "fairctl/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "fairctl/fairness_sets.hpp"

namespace fairctl {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SuiteEntry {
  Suite suite;
  const char* name;
};

constexpr SuiteEntry kSuites[] = {
    {Suite::kCvBound, "cv-bound"},
    {Suite::kInclusion, "inclusion"},
    {Suite::kEquivalence, "equivalence"},
    {Suite::kCorner, "corner"},
    {Suite::kEntropyIdentity, "entropy-identity"},
    {Suite::kEntropySandwich, "entropy-sandwich"},
    {Suite::kLemmaA1, "lemma-a1"},
    {Suite::kFDecreasing, "f-decreasing"},
    {Suite::kNormEquivalence, "norm-equivalence"},
    {Suite::kEpsNesting, "eps-nesting"},
};

double exponent_of(PExponent p) { return p.is_infinite() ? kInf : p.value(); }

std::string label(PExponent p) { return "p=" + p.to_string(); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Check bookkeeping for one (suite, n, chunk) task.
class Checker {
 public:
  Checker(const VerifyConfig& cfg, Suite suite) : cfg_(cfg) { report_.suite = suite; }

  void begin_sample(const SimplexVector& x) {
    x_ = &x;
    far_ = distance_to_excluded(x) >= cfg_.exclusion_radius;
  }
  bool far_from_excluded() const noexcept { return far_; }

  template <class Describe>
  void identity(double lhs, double rhs, Describe&& describe) {
    const double err = std::abs(lhs - rhs);
    record(-err, err <= cfg_.tol, describe);
  }

  /// lhs <= rhs
  template <class Describe>
  void at_most(double lhs, double rhs, Describe&& describe) {
    at_most_within(lhs, rhs, cfg_.slack, describe);
  }

  template <class Describe>
  void at_most_within(double lhs, double rhs, double slack, Describe&& describe) {
    const double margin = rhs - lhs;
    record(margin, margin >= -slack, describe);
  }

  /// lhs < rhs, skipped near excluded points.
  template <class Describe>
  void strictly_less(double lhs, double rhs, Describe&& describe) {
    if (!far_) {
      ++report_.excluded;
      return;
    }
    const double margin = rhs - lhs;
    record(margin, margin > cfg_.strict_margin, describe);
  }

  template <class Describe>
  void holds(bool ok, Describe&& describe) {
    ++report_.checked;
    if (!ok) fail(-1.0, describe);
  }

  SuiteReport take() {
    report_.worst_margin = has_margin_ ? worst_ : 0.0;
    return std::move(report_);
  }
  bool has_margin() const noexcept { return has_margin_; }

 private:
  template <class Describe>
  void record(double margin, bool ok, Describe& describe) {
    ++report_.checked;
    if (!has_margin_ || margin < worst_) {
      worst_ = margin;
      has_margin_ = true;
    }
    if (!ok) fail(margin, describe);
  }

  template <class Describe>
  void fail(double margin, Describe& describe) {
    ++report_.failures;
    if (report_.counterexamples.size() < kMaxCounterexamples) {
      Counterexample ce;
      if (x_ != nullptr) ce.x.assign(x_->values().begin(), x_->values().end());
      ce.check = describe();
      ce.margin = margin;
      report_.counterexamples.push_back(std::move(ce));
    }
  }

  const VerifyConfig& cfg_;
  SuiteReport report_;
  const SimplexVector* x_ = nullptr;
  bool far_ = true;
  bool has_margin_ = false;
  double worst_ = 0.0;
};

struct Context {
  const VerifyConfig& cfg;
  std::size_t n;
  std::vector<PExponent> chain;   ///< ascending, infinity last
  std::vector<PExponent> finite;  ///< finite members of chain
};

/// A flat Dirichlet draw; every fourth draw (n >= 3) is pushed onto a random
/// face by zeroing between 1 and n-2 coordinates.
SimplexVector draw(std::size_t n, Rng& rng, std::size_t index) {
  SimplexVector x = sample_simplex(n, rng);
  if (n < 3 || index % 4 != 3) return x;
  std::vector<double> v(x.values().begin(), x.values().end());
  const auto zeros = 1 + rng.below(n - 2);
  for (std::uint64_t k = 0; k < zeros;) {
    const auto i = rng.below(n);
    if (v[i] != 0.0) {
      v[i] = 0.0;
      ++k;
    }
  }
  return normalize(NonNegVector(std::move(v)));
}

NonNegVector scaled(const SimplexVector& x, double t) {
  std::vector<double> v(x.values().begin(), x.values().end());
  for (double& vi : v) vi *= t;
  return NonNegVector(std::move(v));
}

// --- cv-bound -------------------------------------------------------------

void cv_bound_extras(Checker& ck, const Context& ctx) {
  for (const PExponent& p : ctx.chain) {
    const double d = dispersion_constant(ctx.n, p);
    ck.identity(cv_bound(ctx.n, FairnessSpec(0.0, p)), (d + 1.0) * (d + 1.0) - 1.0,
                [&] { return "B_p(0) = (D_p+1)^2 - 1, " + label(p); });
    ck.identity(cv_bound(ctx.n, FairnessSpec(1.0, p)), 0.0,
                [&] { return "B_p(1) = 0, " + label(p); });
    double prev = cv_bound(ctx.n, FairnessSpec(0.0, p));
    for (int k = 1; k <= 100; ++k) {
      const double eps = k / 100.0;
      const double b = cv_bound(ctx.n, FairnessSpec(eps, p));
      ck.holds(b < prev, [&] { return "B_p strictly decreasing at eps=" + num(eps) + ", " + label(p); });
      prev = b;
    }
  }
}

void cv_bound_sample(Checker& ck, const Context& ctx, const SimplexVector& x, Rng& rng) {
  const double cv = coefficient_of_variation(x);
  const double cv2 = cv * cv;
  for (const PExponent& p : ctx.chain) {
    const double e = eps_max(x, p);
    // Tightest member level first, then a random level below it.
    ck.at_most_within(cv2, cv_bound(ctx.n, FairnessSpec(e, p)), ctx.cfg.tol,
               [&] { return "CV^2 <= B_p(eps_p(x)), " + label(p); });
    const double eps = e * rng.uniform();
    ck.at_most_within(cv2, cv_bound(ctx.n, FairnessSpec(eps, p)), ctx.cfg.tol,
               [&] { return "CV^2 <= B_p(eps), eps=" + num(eps) + ", " + label(p); });
  }
}

// --- inclusion ------------------------------------------------------------

void inclusion_sample(Checker& ck, const Context& ctx, const SimplexVector& x, Rng& rng) {
  std::vector<double> thresholds;
  thresholds.reserve(ctx.chain.size());
  for (const PExponent& p : ctx.chain) thresholds.push_back(eps_max(x, p));
  const double eps = rng.uniform();
  const double l1 = std::accumulate(x.values().begin(), x.values().end(), 0.0);

  for (std::size_t a = 0; a < ctx.chain.size(); ++a) {
    for (std::size_t b = a + 1; b < ctx.chain.size(); ++b) {
      const PExponent& p1 = ctx.chain[a];
      const PExponent& p2 = ctx.chain[b];
      ck.strictly_less(thresholds[b], thresholds[a], [&] {
        return "eps_p2(x) < eps_p1(x), " + label(p1) + " p2=" + p2.to_string();
      });
      if (eps > 0.0 && is_fair(x, FairnessSpec(eps, p2), 0.0)) {
        const FairnessSpec s1(eps, p1);
        ck.at_most(s1.factor(ctx.n) * p_norm(x, p1), l1, [&] {
          return "x in Y(eps,p2) => x in Y(eps,p1), eps=" + num(eps) + ", " + label(p1) +
                 " p2=" + p2.to_string();
        });
      }
    }
  }
}

// --- equivalence ----------------------------------------------------------

constexpr double kRoundoffSlack = 16.0 * std::numeric_limits<double>::epsilon();

void equivalence_extras(Checker& ck, const Context& ctx) {
  const SimplexVector u = SimplexVector::uniform(ctx.n);
  for (const PExponent& p : ctx.chain) {
    ck.holds(is_fair(u, FairnessSpec(1.0, p)), [&] { return "e/n in Y(1,p), " + label(p); });
  }
}

void equivalence_sample(Checker& ck, const Context& ctx, const SimplexVector& x, Rng&) {
  const PExponent two = PExponent::finite(2.0);
  double dev = 0.0;
  for (double xi : x.values()) dev = std::max(dev, std::abs(xi - 1.0 / static_cast<double>(ctx.n)));
  const bool uniform = dev <= 1e-9;
  // Near e/n the constraint at eps = 1 is violated only to second order in
  // the deviation (first order at p = inf), so a 1e-9 slack there would admit
  // points ~1e-5 away from e/n. Membership at eps = 1 uses a round-off slack.
  const double one_tol = kRoundoffSlack * static_cast<double>(ctx.n);
  const bool zero_at_2 = is_fair(x, FairnessSpec(0.0, two), ctx.cfg.tol);
  const bool one_at_2 = is_fair(x, FairnessSpec(1.0, two), one_tol);
  for (const PExponent& p : ctx.chain) {
    const bool zero = is_fair(x, FairnessSpec(0.0, p), ctx.cfg.tol);
    const bool one = is_fair(x, FairnessSpec(1.0, p), one_tol);
    ck.holds(zero, [&] { return "Y(0,p) is the whole simplex, " + label(p); });
    ck.holds(zero == zero_at_2, [&] { return "Y(0,p) = Y(0,2), " + label(p); });
    ck.holds(one == uniform, [&] { return "x in Y(1,p) iff x = e/n, " + label(p); });
    ck.holds(one == one_at_2, [&] { return "Y(1,p) = Y(1,2), " + label(p); });
  }
}

// --- corner ---------------------------------------------------------------

void corner_extras(Checker& ck, const Context& ctx, Rng& rng) {
  const SimplexVector u = SimplexVector::uniform(ctx.n);
  for (const PExponent& p : ctx.chain) {
    for (std::size_t i = 0; i < ctx.n; ++i) {
      const SimplexVector e = SimplexVector::vertex(ctx.n, i);
      ck.identity(eps_max(e, p), 0.0, [&] { return "eps_p(e_i) = 0, i=" + std::to_string(i) + ", " + label(p); });
      ck.holds(is_fair(e, FairnessSpec(0.0, p)), [&] { return "e_i in Y(0,p), " + label(p); });
      const double eps = rng.uniform(1e-3, 1.0);
      ck.holds(!is_fair(e, FairnessSpec(eps, p)), [&] {
        return "e_i in Y(eps,p) => eps = 0, eps=" + num(eps) + ", " + label(p);
      });
    }
    ck.identity(eps_max(u, p), 1.0, [&] { return "eps_p(e/n) = 1, " + label(p); });
    const double eps = rng.uniform();
    ck.holds(is_fair(u, FairnessSpec(eps, p)), [&] { return "e/n in Y(eps,p), eps=" + num(eps) + ", " + label(p); });
  }
}

void corner_sample(Checker& ck, const Context& ctx, const SimplexVector& x, Rng&) {
  for (const PExponent& p : ctx.chain) {
    const double e = eps_max(x, p);
    ck.strictly_less(0.0, e, [&] { return "eps_p(x) > 0 off the vertices, " + label(p); });
    ck.strictly_less(e, 1.0, [&] { return "eps_p(x) < 1 off e/n, " + label(p); });
    if (ck.far_from_excluded()) {
      ck.holds(!is_fair(x, FairnessSpec(1.0, p)), [&] { return "Y(1,p) = {e/n}, " + label(p); });
    }
  }
}

// --- entropy-identity -----------------------------------------------------

void entropy_identity_check(Checker& ck, const SimplexVector& x, PExponent p) {
  const double pv = p.value();
  const PowerSum s = power_sum(x, pv);
  const double lhs = s.log_value - pv * s.log_derivative;
  ck.identity(lhs, shannon_entropy(s.weights),
              [&] { return "ln S_p - p S_p'/S_p = H(w), " + label(p); });
}

void entropy_identity_extras(Checker& ck, const Context& ctx) {
  const SimplexVector u = SimplexVector::uniform(ctx.n);
  const SimplexVector e = SimplexVector::vertex(ctx.n, 0);
  for (const PExponent& p : ctx.finite) {
    entropy_identity_check(ck, u, p);
    entropy_identity_check(ck, e, p);
  }
}

void entropy_identity_sample(Checker& ck, const Context& ctx, const SimplexVector& x, Rng&) {
  for (const PExponent& p : ctx.finite) entropy_identity_check(ck, x, p);
}

// --- entropy-sandwich -----------------------------------------------------

void entropy_sandwich_sample(Checker& ck, const Context& ctx, const SimplexVector& x, Rng&) {
  for (const PExponent& p : ctx.finite) {
    const double pv = p.value();
    const PowerSum s = power_sum(x, pv);
    const double h = shannon_entropy(s.weights);
    const double upper = -(pv / (pv - 1.0)) * std::log(p_norm(x, p));
    const double renyi = renyi_entropy(s.weights, 1.0 / pv);
    ck.at_most(0.0, h, [&] { return "0 <= H(w), " + label(p); });
    ck.at_most(h, upper, [&] { return "H(w) <= -(p/(p-1)) ln ||x||_p, " + label(p); });
    ck.at_most(h, renyi, [&] { return "H(w) <= H_{1/p}(w), " + label(p); });
    ck.identity(renyi, upper, [&] { return "H_{1/p}(w) = -(p/(p-1)) ln ||x||_p, " + label(p); });
  }
}

// --- lemma-a1 -------------------------------------------------------------

double log_bound_expression(std::size_t n, PExponent p, double norm) {
  const double pv = p.value();
  const double d = dispersion_constant(n, p);
  return (pv / (pv - 1.0)) * (-std::log(norm) / (1.0 - norm)) -
         std::log(static_cast<double>(n)) * (1.0 + 1.0 / d);
}

void lemma_a1_extras(Checker& ck, const Context& ctx) {
  const SimplexVector u = SimplexVector::uniform(ctx.n);
  for (const PExponent& p : ctx.finite) {
    ck.identity(log_bound_expression(ctx.n, p, p_norm(u, p)), 0.0,
                [&] { return "log bound is 0 at e/n, " + label(p); });
  }
}

void lemma_a1_sample(Checker& ck, const Context& ctx, const SimplexVector& x, Rng&) {
  for (const PExponent& p : ctx.finite) {
    const double norm = p_norm(x, p);
    if (!(norm < 1.0)) continue;  // only vertices reach 1, and those are excluded
    ck.strictly_less(log_bound_expression(ctx.n, p, norm), 0.0,
                     [&] { return "log bound expression < 0, " + label(p); });
  }
}

// --- f-decreasing ---------------------------------------------------------

void f_decreasing_sample(Checker& ck, const Context& ctx, const SimplexVector& x, Rng&) {
  // The chain plus midpoints between consecutive finite exponents, so
  // non-integer p is exercised too.
  std::vector<PExponent> chain;
  for (std::size_t k = 0; k < ctx.chain.size(); ++k) {
    chain.push_back(ctx.chain[k]);
    if (k + 1 < ctx.chain.size() && !ctx.chain[k + 1].is_infinite()) {
      chain.push_back(PExponent::finite(0.5 * (ctx.chain[k].value() + ctx.chain[k + 1].value())));
    }
  }
  double prev = eps_max(x, chain.front());
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const double cur = eps_max(x, chain[k]);
    ck.strictly_less(cur, prev, [&] {
      return "F strictly decreasing from p=" + chain[k - 1].to_string() + " to p=" + chain[k].to_string();
    });
    prev = cur;
  }
}

// --- norm-equivalence -----------------------------------------------------

void norm_equivalence_sample(Checker& ck, const Context& ctx, const SimplexVector& x, Rng& rng) {
  // Scaled off the simplex; margins are reported back in simplex units.
  const double t = std::exp(rng.uniform(-3.0, 3.0));
  const NonNegVector v = scaled(x, t);
  std::vector<double> exps{1.0};
  std::vector<double> consts{1.0};  // D_1 + 1 = 1
  std::vector<std::string> names{"1"};
  for (const PExponent& p : ctx.chain) {
    exps.push_back(exponent_of(p));
    consts.push_back(dispersion_constant(ctx.n, p) + 1.0);
    names.push_back(p.to_string());
  }
  std::vector<double> norms;
  for (double e : exps) norms.push_back(power_norm(v.values(), e) / t);
  for (std::size_t a = 0; a < exps.size(); ++a) {
    for (std::size_t b = a + 1; b < exps.size(); ++b) {
      ck.at_most(norms[b], norms[a], [&] {
        return "||x||_p2 <= ||x||_p1, p1=" + names[a] + " p2=" + names[b];
      });
      ck.at_most(norms[a], (consts[b] / consts[a]) * norms[b], [&] {
        return "||x||_p1 <= ((D_p2+1)/(D_p1+1)) ||x||_p2, p1=" + names[a] + " p2=" + names[b];
      });
    }
  }
}

// --- eps-nesting ----------------------------------------------------------

void eps_nesting_sample(Checker& ck, const Context& ctx, const SimplexVector& x, Rng& rng) {
  const double t = std::exp(rng.uniform(-3.0, 3.0));
  const NonNegVector v = scaled(x, t);
  const double l1 = std::accumulate(v.values().begin(), v.values().end(), 0.0);
  for (const PExponent& p : ctx.chain) {
    const double e = eps_max(x, p);
    // One unconstrained pair and one pair just inside the threshold.
    double hi1 = rng.uniform();
    double lo1 = hi1 * rng.uniform();
    double hi2 = e * (1.0 - 0.5 * rng.uniform());
    double lo2 = hi2 * rng.uniform();
    for (auto [hi, lo] : {std::pair{hi1, lo1}, std::pair{hi2, lo2}}) {
      if (!(hi > lo)) continue;
      if (!is_fair(v, FairnessSpec(hi, p), 0.0)) {
        ck.holds(true, [] { return std::string(); });
        continue;
      }
      const FairnessSpec lower(lo, p);
      ck.at_most(lower.factor(ctx.n) * p_norm(v, p) / t, l1 / t, [&] {
        return "X(eps1,p) subset X(eps2,p), eps1=" + num(hi) + " eps2=" + num(lo) + ", " + label(p);
      });
    }
  }
}

// --- driver ---------------------------------------------------------------

using SampleFn = void (*)(Checker&, const Context&, const SimplexVector&, Rng&);

SampleFn sample_fn(Suite suite) {
  switch (suite) {
    case Suite::kCvBound: return cv_bound_sample;
    case Suite::kInclusion: return inclusion_sample;
    case Suite::kEquivalence: return equivalence_sample;
    case Suite::kCorner: return corner_sample;
    case Suite::kEntropyIdentity: return entropy_identity_sample;
    case Suite::kEntropySandwich: return entropy_sandwich_sample;
    case Suite::kLemmaA1: return lemma_a1_sample;
    case Suite::kFDecreasing: return f_decreasing_sample;
    case Suite::kNormEquivalence: return norm_equivalence_sample;
    case Suite::kEpsNesting: return eps_nesting_sample;
  }
  return nullptr;
}

void run_extras(Suite suite, Checker& ck, const Context& ctx, Rng& rng) {
  switch (suite) {
    case Suite::kCvBound: cv_bound_extras(ck, ctx); break;
    case Suite::kEquivalence: equivalence_extras(ck, ctx); break;
    case Suite::kCorner: corner_extras(ck, ctx, rng); break;
    case Suite::kEntropyIdentity: entropy_identity_extras(ck, ctx); break;
    case Suite::kLemmaA1: lemma_a1_extras(ck, ctx); break;
    default: break;
  }
}

struct Task {
  std::size_t suite_slot;
  Suite suite;
  std::size_t n;
  std::size_t chunk;
  std::size_t begin;
  std::size_t end;
};

struct Partial {
  SuiteReport report;
  bool has_margin = false;
};

Partial run_task(const VerifyConfig& cfg, const Task& task, const std::vector<PExponent>& chain,
                 const std::vector<PExponent>& finite) {
  Context ctx{cfg, task.n, chain, finite};
  Checker ck(cfg, task.suite);
  Rng rng(derive_seed(cfg.seed, {static_cast<std::uint64_t>(task.suite), task.n, task.chunk}));
  if (task.chunk == 0) run_extras(task.suite, ck, ctx, rng);
  const SampleFn fn = sample_fn(task.suite);
  for (std::size_t i = task.begin; i < task.end; ++i) {
    const SimplexVector x = draw(task.n, rng, i);
    ck.begin_sample(x);
    fn(ck, ctx, x, rng);
  }
  const bool has_margin = ck.has_margin();
  return Partial{ck.take(), has_margin};
}

}  // namespace

const char* suite_name(Suite suite) noexcept {
  for (const auto& e : kSuites) {
    if (e.suite == suite) return e.name;
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& e : kSuites) {
    if (name == e.name) return e.suite;
  }
  return std::nullopt;
}

std::vector<Suite> all_suites() {
  std::vector<Suite> out;
  for (const auto& e : kSuites) out.push_back(e.suite);
  return out;
}

std::vector<Suite> parse_suite_list(std::string_view list) {
  if (list == "all") return all_suites();
  std::vector<Suite> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view token = list.substr(0, comma);
    const auto suite = parse_suite(token);
    if (!suite) throw std::invalid_argument("unknown suite '" + std::string(token) + "'");
    if (std::find(out.begin(), out.end(), *suite) == out.end()) out.push_back(*suite);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument("empty suite list");
  return out;
}

std::vector<PExponent> default_p_chain() {
  std::vector<PExponent> chain;
  for (double p : {2.0, 3.0, 4.0, 6.0, 10.0, 20.0, 50.0}) chain.push_back(PExponent::finite(p));
  chain.push_back(PExponent::infinity());
  return chain;
}

void VerifyConfig::validate() const {
  if (suites.empty()) throw std::invalid_argument("verify: no suites selected");
  if (samples == 0) throw std::invalid_argument("verify: samples must be >= 1");
  if (n_values.empty()) throw std::invalid_argument("verify: no dimensions given");
  for (std::size_t n : n_values) {
    if (n < 2) throw std::invalid_argument("verify: dimensions must be >= 2");
  }
  if (p_values.empty()) throw std::invalid_argument("verify: no exponents given");
  if (!(tol > 0.0) || !(slack >= 0.0) || !(strict_margin >= 0.0) || !(exclusion_radius >= 0.0)) {
    throw std::invalid_argument("verify: tolerances must be nonnegative (tol positive)");
  }
  if (chunk_size == 0) throw std::invalid_argument("verify: chunk_size must be >= 1");
}

bool VerificationReport::passed() const noexcept {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.passed(); });
}

std::size_t VerificationReport::total_failures() const noexcept {
  std::size_t total = 0;
  for (const auto& s : suites) total += s.failures;
  return total;
}

SimplexVector sample_simplex(std::size_t n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("sample_simplex: n must be >= 2");
  std::vector<double> v(n);
  double sum = 0.0;
  for (double& vi : v) {
    vi = rng.exponential();
    sum += vi;
  }
  for (double& vi : v) vi /= sum;
  return SimplexVector(std::move(v));
}

double distance_to_excluded(const SimplexVector& x) {
  const auto v = x.values();
  const double inv_n = 1.0 / static_cast<double>(v.size());
  double to_center = 0.0;
  for (double vi : v) to_center = std::max(to_center, std::abs(vi - inv_n));
  // Nearest vertex is e_k for the largest coordinate k.
  const auto top = std::max_element(v.begin(), v.end());
  double to_vertex = 1.0 - *top;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (it != top) to_vertex = std::max(to_vertex, *it);
  }
  return std::min(to_center, to_vertex);
}

VerificationReport run_suite(const VerifyConfig& config) {
  config.validate();
  std::vector<PExponent> chain = config.p_values;
  std::stable_sort(chain.begin(), chain.end());
  chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
  std::vector<PExponent> finite;
  std::copy_if(chain.begin(), chain.end(), std::back_inserter(finite),
               [](const PExponent& p) { return !p.is_infinite(); });

  std::vector<Task> tasks;
  for (std::size_t s = 0; s < config.suites.size(); ++s) {
    for (std::size_t n : config.n_values) {
      for (std::size_t begin = 0, chunk = 0; begin < config.samples; begin += config.chunk_size, ++chunk) {
        tasks.push_back({s, config.suites[s], n, chunk, begin,
                         std::min(config.samples, begin + config.chunk_size)});
      }
    }
  }

  std::vector<Partial> partials(tasks.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) partials[k] = run_task(config, tasks[k], chain, finite);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
          partials[k] = run_task(config, tasks[k], chain, finite);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  VerificationReport report;
  report.seed = config.seed;
  report.suites.resize(config.suites.size());
  std::vector<bool> has_margin(config.suites.size(), false);
  for (std::size_t s = 0; s < config.suites.size(); ++s) report.suites[s].suite = config.suites[s];
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    SuiteReport& dst = report.suites[tasks[k].suite_slot];
    Partial& src = partials[k];
    dst.checked += src.report.checked;
    dst.failures += src.report.failures;
    dst.excluded += src.report.excluded;
    if (src.has_margin) {
      const std::size_t slot = tasks[k].suite_slot;
      dst.worst_margin = has_margin[slot] ? std::min(dst.worst_margin, src.report.worst_margin)
                                          : src.report.worst_margin;
      has_margin[slot] = true;
    }
    for (auto& ce : src.report.counterexamples) {
      if (dst.counterexamples.size() >= kMaxCounterexamples) break;
      dst.counterexamples.push_back(std::move(ce));
    }
  }
  return report;
}

}  // namespace fairctl
