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

#ifndef SPINCYCLE_HALF_INTEGER_HPP_
#define SPINCYCLE_HALF_INTEGER_HPP_

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace spincycle {

/// Half-integer quantum number stored as twice its value, so j = 3/2 is held
/// exactly as twice() == 3. Keeps m-arithmetic exact for odd atom numbers.
class HalfInteger {
  public:
    constexpr HalfInteger() = default;

    static constexpr HalfInteger from_twice(int twice_value) { return HalfInteger(twice_value); }
    static constexpr HalfInteger from_int(int value) { return HalfInteger(2 * value); }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return twice_ / 2.0; }
    /// m^2 as an exact double (quarter-integers are representable).
    constexpr double squared() const { return static_cast<double>(twice_) * twice_ / 4.0; }

    constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }
    constexpr HalfInteger operator+(HalfInteger o) const { return HalfInteger(twice_ + o.twice_); }
    constexpr HalfInteger operator-(HalfInteger o) const { return HalfInteger(twice_ - o.twice_); }
    constexpr auto operator<=>(const HalfInteger&) const = default;

    HalfInteger abs() const { return HalfInteger(std::abs(twice_)); }

    /// Rational rendering: "2", "-1/2".
    std::string str() const {
        if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    /// Decimal rendering for CSV headers: "2", "-0.5".
    std::string str_decimal() const {
        if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
        std::string s = twice_ < 0 ? "-" : "";
        return s + std::to_string(std::abs(twice_) / 2) + ".5";
    }

  private:
    explicit constexpr HalfInteger(int twice_value) : twice_(twice_value) {}
    int twice_ = 0;
};

/// Total spin of N two-level atoms in the maximal-j subspace: j = N/2.
inline HalfInteger spin_of_atoms(int n_atoms) {
    if (n_atoms < 1) throw std::invalid_argument("spin_of_atoms: need at least one atom");
    return HalfInteger::from_twice(n_atoms);
}

/// True when m lies in the spectrum {-j, -j+1, ..., j} of a spin-j system.
inline bool m_in_spectrum(HalfInteger j, HalfInteger m) {
    return std::abs(m.twice()) <= j.twice() && (j.twice() - m.twice()) % 2 == 0;
}

}  // namespace spincycle

#endif  // SPINCYCLE_HALF_INTEGER_HPP_
