// Copyright 2026 The lcsmbqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace lcsmbqc {

constexpr int kDefaultMaxLevel = 4;

/// An exact p-power root of unity exp(2*pi*i * e / p^M).
///
/// Values are always stored in canonical form: either (M, e) = (0, 0), or p does not divide e.
class Phase {
   public:
    /// Builds exp(2*pi*i * e / p^M). `e` may be any integer; it is reduced and canonicalized.
    /// Throws std::invalid_argument if p is not prime, M < 0, or M exceeds `max_level`.
    Phase(int64_t p, int M, int64_t e, int max_level = kDefaultMaxLevel);

    static Phase one(int64_t p);
    /// omega^c with omega = exp(2*pi*i / p).
    static Phase omega(int64_t p, int64_t c = 1);

    int64_t p() const {
        return p_;
    }
    int level() const {
        return level_;
    }
    int64_t num() const {
        return num_;
    }

    Phase operator*(const Phase &other) const;
    Phase &operator*=(const Phase &other);
    Phase pow(int64_t k) const;
    Phase inverse() const;

    bool is_one() const {
        return level_ == 0;
    }
    /// c in [0, p) with *this = omega^c, or nullopt if the level exceeds 1.
    std::optional<int64_t> as_omega_power() const;
    /// Numerator at the requested level: *this = exp(2*pi*i * r / p^level), r in [0, p^level).
    /// Throws std::invalid_argument if the stored level is larger.
    int64_t num_at_level(int level) const;

    bool operator==(const Phase &other) const = default;

    /// Human-readable form, e.g. "1", "w^2", "exp(2pi i 4/9)".
    std::string str() const;

   private:
    int64_t p_;
    int level_;
    int64_t num_;
};

Phase phase_mul(const Phase &a, const Phase &b);
Phase phase_pow(const Phase &a, int64_t k);
std::optional<int64_t> phase_as_omega_power(const Phase &a);

std::ostream &operator<<(std::ostream &out, const Phase &phase);

}  // namespace lcsmbqc
