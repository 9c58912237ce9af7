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


#include "lcsmbqc/cyclo.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lcsmbqc/zp.hpp"

namespace lcsmbqc {

Phase::Phase(int64_t p, int M, int64_t e, int max_level) : p_(p), level_(M), num_(0) {
    if (!is_prime(p)) {
        throw std::invalid_argument("Phase: p=" + std::to_string(p) + " is not prime");
    }
    if (M < 0) {
        throw std::invalid_argument("Phase: negative level");
    }
    if (M > max_level) {
        throw std::invalid_argument(
            "Phase: level " + std::to_string(M) + " exceeds the maximum level " + std::to_string(max_level));
    }
    int64_t modulus = ipow(p, M);
    num_ = mod(e, modulus);
    while (level_ > 0 && num_ % p == 0) {
        num_ /= p;
        level_--;
    }
    if (level_ == 0) {
        num_ = 0;
    }
}

Phase Phase::one(int64_t p) {
    return Phase(p, 0, 0);
}

Phase Phase::omega(int64_t p, int64_t c) {
    return Phase(p, 1, c);
}

Phase Phase::operator*(const Phase &other) const {
    if (p_ != other.p_) {
        throw std::invalid_argument(
            "Phase: prime mismatch (" + std::to_string(p_) + " vs " + std::to_string(other.p_) + ")");
    }
    int lvl = std::max(level_, other.level_);
    return Phase(p_, lvl, num_at_level(lvl) + other.num_at_level(lvl), std::max(lvl, kDefaultMaxLevel));
}

Phase &Phase::operator*=(const Phase &other) {
    *this = *this * other;
    return *this;
}

Phase Phase::pow(int64_t k) const {
    if (level_ == 0) {
        return *this;
    }
    int64_t modulus = ipow(p_, level_);
    int64_t kk = mod(k, modulus);
    return Phase(p_, level_, mod(num_ * kk, modulus), std::max(level_, kDefaultMaxLevel));
}

Phase Phase::inverse() const {
    return pow(-1);
}

std::optional<int64_t> Phase::as_omega_power() const {
    if (level_ > 1) {
        return std::nullopt;
    }
    return num_at_level(1);
}

int64_t Phase::num_at_level(int level) const {
    if (level < level_) {
        throw std::invalid_argument(
            "Phase: " + str() + " is not representable at level " + std::to_string(level));
    }
    return num_ * ipow(p_, level - level_);
}

std::string Phase::str() const {
    if (level_ == 0) {
        return "1";
    }
    std::ostringstream ss;
    if (level_ == 1) {
        ss << "w";
        if (num_ != 1) {
            ss << "^" << num_;
        }
    } else {
        ss << "exp(2pi i " << num_ << "/" << ipow(p_, level_) << ")";
    }
    return ss.str();
}

Phase phase_mul(const Phase &a, const Phase &b) {
    return a * b;
}

Phase phase_pow(const Phase &a, int64_t k) {
    return a.pow(k);
}

std::optional<int64_t> phase_as_omega_power(const Phase &a) {
    return a.as_omega_power();
}

std::ostream &operator<<(std::ostream &out, const Phase &phase) {
    return out << phase.str();
}

}  // namespace lcsmbqc
