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

#include "spincycle/physical_params.hpp"

#include <cmath>
#include <limits>

#include "spincycle/errors.hpp"

namespace spincycle {

RateDerivation derive_rates(const PhysicalParams& p) {
    if (!(p.kappa > 0.0)) throw ConfigError("derive_rates: kappa must be positive");
    if (p.delta_r == 0.0 || p.delta_s == 0.0)
        throw ConfigError("derive_rates: detunings must be nonzero");

    RateDerivation out;
    const double amp01 = p.zeta_s * p.g_s / (2.0 * p.delta_s);
    const double amp10 = p.zeta_r * p.g_r / (2.0 * p.delta_r);
    const double gamma01 = amp01 * amp01 / p.kappa;
    const double gamma10 = amp10 * amp10 / p.kappa;

    const double drive_s = std::max(std::abs(p.g_s), std::abs(p.zeta_s));
    const double drive_r = std::max(std::abs(p.g_r), std::abs(p.zeta_r));
    if (std::abs(p.delta_s) < 10.0 * drive_s)
        out.warnings.push_back("adiabatic elimination marginal: |delta_s| < 10 max(|g_s|, |zeta_s|)");
    if (std::abs(p.delta_r) < 10.0 * drive_r)
        out.warnings.push_back("adiabatic elimination marginal: |delta_r| < 10 max(|g_r|, |zeta_r|)");
    if (gamma01 > p.kappa / 10.0)
        out.warnings.push_back("cavity elimination marginal: gamma01 > kappa/10");
    if (gamma10 > p.kappa / 10.0)
        out.warnings.push_back("cavity elimination marginal: gamma10 > kappa/10");

    const double scale = std::max(std::abs(gamma01), std::abs(gamma10));
    const bool equal = std::abs(gamma01 - gamma10) <= 1e-12 * scale;
    out.spec = CollapseSpec{gamma01, gamma10, equal};
    out.time_unit =
        gamma01 > 0.0 ? 1.0 / (4.0 * gamma01) : std::numeric_limits<double>::infinity();
    return out;
}

}  // namespace spincycle
