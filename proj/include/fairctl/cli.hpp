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

// Front end of the fairctl tool: vector CSV files, JSON report documents and
// subcommand dispatch.
//
// Exit codes: 0 success / all pass, 1 semantic negative (a non-member, a
// failed suite, a non-converged solve), 2 usage or input error.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fairctl/core_math.hpp"
#include "fairctl/fairness_sets.hpp"
#include "fairctl/solver.hpp"
#include "fairctl/verifier.hpp"

namespace fairctl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

const char* version() noexcept;

/// Malformed input. `line` is 1-based, 0 when not tied to a line.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& message, std::size_t line = 0)
      : std::runtime_error(message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct VectorRow {
  std::size_t line;
  std::vector<double> values;
};

/// One vector per line, comma-separated decimals. Lines starting with '#'
/// and blank lines are skipped. Throws InputError on unparseable or
/// non-finite values, negative values (unless allowed), dimension changes
/// between rows, or an empty file.
std::vector<VectorRow> parse_vector_csv(std::istream& in, bool allow_negative = false);
std::vector<VectorRow> read_vector_file(const std::string& path, bool allow_negative = false);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);
void write_vector_csv(std::ostream& out, const std::vector<std::vector<double>>& rows);

/// Comma-separated exponents, each a real >= 2 or "inf".
std::vector<PExponent> parse_p_list(std::string_view list);
/// "start:stop:step".
std::vector<double> parse_eps_grid(std::string_view spec);

using Json = nlohmann::ordered_json;

Json to_json(PExponent p);
Json to_json(const DispersionReport& report);
Json to_json(const SolveResult& result);
Json to_json(const ParetoPoint& point);
Json to_json(const VerificationReport& report);

/// The report envelope: command, inputs, results, seed (optional), version.
Json make_document(std::string_view command, Json inputs, Json results,
                   const std::uint64_t* seed = nullptr);

/// Runs one command line (args excludes the program name). Reports go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fairctl::cli
