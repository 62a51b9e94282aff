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

#ifndef SPINCYCLE_CLASSIFICATION_HPP_
#define SPINCYCLE_CLASSIFICATION_HPP_

#include "spincycle/half_integer.hpp"

namespace spincycle {

/// Trajectory outcome. SteadyZero: no photon was ever emitted and the state
/// settled on the m = 0 Dicke state (even N only). Cycle(m): the run locked
/// onto the jump-driven alternation between the chi(m) pair; requires at
/// least one jump. Unresolved: neither condition met at the horizon.
struct Classification {
    enum class Kind { SteadyZero, Cycle, Unresolved };

    Kind kind = Kind::Unresolved;
    HalfInteger m;  // cycle label; meaningful only when kind == Cycle
    double dominant_weight = 0.0;
    long jumps_observed = 0;
};

inline const char* to_string(Classification::Kind k) {
    switch (k) {
        case Classification::Kind::SteadyZero: return "steady_zero";
        case Classification::Kind::Cycle: return "cycle";
        default: return "unresolved";
    }
}

}  // namespace spincycle

#endif  // SPINCYCLE_CLASSIFICATION_HPP_
