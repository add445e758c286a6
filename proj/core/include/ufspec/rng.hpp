/*
   Copyright 2026 The ufspec Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UFSPEC_RNG_HPP
#define UFSPEC_RNG_HPP

#include <cstdint>

namespace ufspec {

/// splitmix64. Used instead of <random> distributions so that seeded runs
/// are byte-identical across platforms and standard library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n); n > 0. Modulo bias is irrelevant for
    /// test-case generation and keeps the stream reproducible.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Value in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(unsigned num, unsigned den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

}  // namespace ufspec

#endif
