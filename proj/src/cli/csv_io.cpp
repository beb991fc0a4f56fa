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

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "fairctl/cli.hpp"

namespace fairctl::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_real(std::string_view token, double& value) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

std::vector<VectorRow> parse_vector_csv(std::istream& in, bool allow_negative) {
  std::vector<VectorRow> rows;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;

    VectorRow row{line, {}};
    std::string_view rest = text;
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view token = rest.substr(0, comma);
      double v = 0.0;
      if (!parse_real(token, v)) {
        throw InputError("unparseable value '" + std::string(trim(token)) + "'", line);
      }
      if (!std::isfinite(v)) throw InputError("non-finite value", line);
      if (v < 0.0 && !allow_negative) throw InputError("negative value", line);
      row.values.push_back(v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (!rows.empty() && rows.front().values.size() != row.values.size()) {
      throw InputError("dimension " + std::to_string(row.values.size()) + " differs from " +
                           std::to_string(rows.front().values.size()) + " on earlier rows",
                       line);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("no vectors found");
  return rows;
}

std::vector<VectorRow> read_vector_file(const std::string& path, bool allow_negative) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_vector_csv(in, allow_negative);
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_vector_csv(std::ostream& out, const std::vector<std::vector<double>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
}

std::vector<PExponent> parse_p_list(std::string_view list) {
  std::vector<PExponent> out;
  while (true) {
    const auto comma = list.find(',');
    const std::string_view token = trim(list.substr(0, comma));
    try {
      out.push_back(PExponent::parse(token));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--p: ") + e.what());
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<double> parse_eps_grid(std::string_view spec) {
  double parts[3];
  std::string_view rest = spec;
  for (int i = 0; i < 3; ++i) {
    const auto colon = rest.find(':');
    if ((i < 2) == (colon == std::string_view::npos) || !parse_real(rest.substr(0, colon), parts[i])) {
      throw InputError("--eps-grid: expected start:stop:step, got '" + std::string(spec) + "'");
    }
    rest.remove_prefix(colon == std::string_view::npos ? rest.size() : colon + 1);
  }
  try {
    return make_eps_grid(parts[0], parts[1], parts[2]);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--eps-grid: ") + e.what());
  }
}

}  // namespace fairctl::cli
