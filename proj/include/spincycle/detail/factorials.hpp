// Copyright 2026 The Spincycle Authors
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

#ifndef SPINCYCLE_DETAIL_FACTORIALS_HPP_
#define SPINCYCLE_DETAIL_FACTORIALS_HPP_

#include <array>
#include <cmath>
#include <stdexcept>

namespace spincycle::detail {

/// log(n!) via a cached lgamma table. Large factorial ratios are assembled in
/// log space so they never overflow.
inline double log_factorial(int n) {
    if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
    static const std::array<double, 512> table = [] {
        std::array<double, 512> t{};
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = std::lgamma(static_cast<double>(i) + 1.0);
        return t;
    }();
    if (n < static_cast<int>(table.size())) return table[static_cast<std::size_t>(n)];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

/// base^e for integer e >= 0 with exact sign handling.
inline double int_pow(double base, int e) {
    double r = 1.0;
    double b = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

}  // namespace spincycle::detail

#endif  // SPINCYCLE_DETAIL_FACTORIALS_HPP_
