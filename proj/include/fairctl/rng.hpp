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

// Pinned pseudo-random source for reproducible sampling.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Distributions are implemented here rather than taken from
// <random>, whose algorithms are implementation-defined:
//   uniform      u = (bits >> 11) * 2^-53, in [0, 1)
//   exponential  -log1p(-u), unit rate
// Substream seeds are derived with the SplitMix64 finalizer.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace fairctl {

/// SplitMix64 finalizer applied to x + golden-ratio increment.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Folds `path` into `base` one SplitMix64 step per element.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double exponential();
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace fairctl
