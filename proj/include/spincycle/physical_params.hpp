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

#ifndef SPINCYCLE_PHYSICAL_PARAMS_HPP_
#define SPINCYCLE_PHYSICAL_PARAMS_HPP_

#include <string>
#include <vector>

#include "spincycle/trajectory.hpp"

namespace spincycle {

/// Cavity-QED inputs behind the effective two-level rates, all in one
/// consistent angular-frequency unit. Each ground state couples to its
/// excited partner through the cavity (g) and a laser (zeta), detuned by
/// delta; kappa is the cavity field decay rate.
struct PhysicalParams {
    double g_r = 0.0;
    double g_s = 0.0;
    double zeta_r = 0.0;
    double zeta_s = 0.0;
    double delta_r = 0.0;
    double delta_s = 0.0;
    double kappa = 0.0;
};

struct RateDerivation {
    CollapseSpec spec;
    /// Length of one scaled time unit, (4 gamma01)^-1, in physical time;
    /// infinite when gamma01 == 0.
    double time_unit = 0.0;
    std::vector<std::string> warnings;
};

/// gamma01 = |zeta_s g_s / (2 delta_s)|^2 / kappa and
/// gamma10 = |zeta_r g_r / (2 delta_r)|^2 / kappa. The scaled flag is set
/// when the two agree to 1e-12 relative. Rejects kappa <= 0 and zero
/// detunings; warns when the adiabatic eliminations look marginal
/// (|delta| < 10 max(|g|, |zeta|), or derived rate > kappa/10).
RateDerivation derive_rates(const PhysicalParams& p);

}  // namespace spincycle

#endif  // SPINCYCLE_PHYSICAL_PARAMS_HPP_
