// Copyright 2026 The aqec Authors
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

#pragma once

#include <cstdint>
#include <random>

#include "aqec/linalg.hpp"

namespace aqec {

/// SplitMix64 finalizer; used to derive independent child seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for the `index`-th stream under a master seed. Parallel work splits
/// the seed space this way instead of sharing one generator.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(master) ^ (index + 1) * 0xd1b54a32d192ed03ULL);
}

/// mt19937_64 with a portable uniform/normal transform, so sampled values are
/// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal (Box-Muller, both variates used).
  double normal();

  /// Real and imaginary parts independent N(0, 1/2).
  Complex complex_normal();

  CMatrix ginibre(Index rows, Index cols);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0;
  bool has_spare_ = false;
};

/// Haar-distributed isometry (first `cols` columns of a Haar unitary on
/// C^rows): QR of a complex Gaussian matrix with R's diagonal made positive.
CMatrix haar_isometry(Index rows, Index cols, Rng& rng);

inline CMatrix haar_unitary(Index dim, Rng& rng) { return haar_isometry(dim, dim, rng); }

/// Haar-random unit vector in C^dim.
CVector haar_state(Index dim, Rng& rng);

}  // namespace aqec
