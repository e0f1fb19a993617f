/**
 * Copyright 2026 grex authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GREX_RNG_HPP
#define GREX_RNG_HPP

#include <cstdint>

namespace grex {

/// splitmix64. Hand-rolled on purpose: std::uniform_int_distribution is
/// implementation-defined, and reports must be byte-identical for a given
/// seed on any platform.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n) by rejection; n must be positive.
  uint64_t below(uint64_t n) {
    uint64_t limit = n * (UINT64_MAX / n);
    uint64_t x;
    do {
      x = u64();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi], inclusive.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  /// Independent stream for trial #idx of a master seed.
  static uint64_t derive(uint64_t master, uint64_t idx) {
    Rng r(master ^ (0x517cc1b727220a95ULL * (idx + 1)));
    return r.u64();
  }

private:
  uint64_t state_;
};

}  // namespace grex

#endif
