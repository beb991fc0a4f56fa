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

#include "fairctl/cli.hpp"

namespace fairctl::cli {

// Keys are emitted in insertion order; doubles use the shortest form that
// round-trips, i.e. full double precision.

const char* version() noexcept { return FAIRCTL_VERSION; }

Json to_json(PExponent p) {
  if (p.is_infinite()) return "inf";
  return p.value();
}

Json to_json(const DispersionReport& report) {
  Json j;
  j["normalized"] = std::vector<double>(report.normalized.values().begin(),
                                        report.normalized.values().end());
  j["cv"] = report.cv;
  j["mean"] = report.mean;
  j["epsilon"] = report.epsilon;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json row;
    row["p"] = to_json(e.p);
    row["eps_max"] = e.eps_max;
    row["member"] = e.member;
    row["cv_bound"] = e.bound;
    entries.push_back(std::move(row));
  }
  j["per_p"] = std::move(entries);
  return j;
}

Json to_json(const SolveResult& result) {
  Json j;
  j["x_opt"] = std::vector<double>(result.x_opt.values().begin(), result.x_opt.values().end());
  j["objective_value"] = result.objective_value;
  j["iterations"] = result.iterations;
  j["converged"] = result.converged;
  j["eps_max_at_opt"] = result.eps_max_at_opt;
  j["cv_at_opt"] = result.cv_at_opt;
  j["fairness_residual"] = result.fairness_residual;
  j["fairness_active"] = result.fairness_active;
  j["final_step"] = result.final_step;
  return j;
}

Json to_json(const ParetoPoint& point) {
  Json j;
  j["epsilon"] = point.epsilon;
  j["objective"] = point.objective_value;
  j["cv"] = point.cv;
  j["cv_bound"] = point.cv_bound;
  j["converged"] = point.converged;
  j["iterations"] = point.iterations;
  return j;
}

Json to_json(const VerificationReport& report) {
  Json suites = Json::array();
  for (const auto& s : report.suites) {
    Json j;
    j["suite"] = suite_name(s.suite);
    j["passed"] = s.passed();
    j["checked"] = s.checked;
    j["failures"] = s.failures;
    j["excluded"] = s.excluded;
    j["worst_margin"] = s.worst_margin;
    Json ces = Json::array();
    for (const auto& ce : s.counterexamples) {
      Json c;
      c["x"] = ce.x;
      c["check"] = ce.check;
      c["margin"] = ce.margin;
      ces.push_back(std::move(c));
    }
    j["counterexamples"] = std::move(ces);
    suites.push_back(std::move(j));
  }
  Json out;
  out["passed"] = report.passed();
  out["total_failures"] = report.total_failures();
  out["suites"] = std::move(suites);
  return out;
}

Json make_document(std::string_view command, Json inputs, Json results, const std::uint64_t* seed) {
  Json doc;
  doc["command"] = std::string(command);
  doc["inputs"] = std::move(inputs);
  doc["results"] = std::move(results);
  if (seed != nullptr) doc["seed"] = *seed;
  doc["version"] = version();
  return doc;
}

}  // namespace fairctl::cli
