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

#ifndef SPINCYCLE_CYCLE_ANALYSIS_HPP_
#define SPINCYCLE_CYCLE_ANALYSIS_HPP_

#include <map>
#include <span>
#include <string>

#include "spincycle/trajectory.hpp"

namespace spincycle {

/// Classifies a finished record: SteadyZero when no jump fired and the m = 0
/// weight exceeds 1 - epsilon; Cycle(m) when at least one jump fired and the
/// +-m pair carries more than 1 - epsilon of the weight; Unresolved otherwise
/// (with the best dominant weight reported).
Classification classify(const TrajectoryRecord& record, double epsilon = 1e-6);

/// Probability that a trajectory of even N never jumps and settles on the
/// m = 0 Dicke state: N! / (2^N [(N/2)!]^2), evaluated in log space.
/// Rejects odd N, whose initial state has no m = 0 component.
double p_steady(int n_atoms);

/// Large-N limit sqrt(2 / (pi N)) of p_steady.
double p_steady_stirling(int n_atoms);

/// Probability of locking onto the chi(m) cycle:
/// N! / (2^(N-1) (N/2+m)! (N/2-m)!). Requires m > 0 in the spin-N/2 spectrum.
/// Together with p_steady these sum to 1 over every outcome.
double p_cycle(int n_atoms, HalfInteger m);

/// Gaussian approximation 2 sqrt(2/(pi N)) exp(-m^2/(N/2)); any m >= 0 is
/// accepted so the curve can be plotted between spectrum points.
double p_cycle_gauss(int n_atoms, HalfInteger m);

/// Ratio of photon emission rates between two cycles: (m1/m2)^2.
double jump_rate_ratio(int n_atoms, HalfInteger m1, HalfInteger m2);

/// Genuine N-partite entanglement witness: <Jx^2> < N/4.
bool witness_genuine_entanglement(const SpinState& state, int n_atoms);

/// Sum of p_steady (0 for odd N) and all cycle probabilities; equals 1.
double outcome_probability_sum(int n_atoms);

/// Outcome identity used for tallies: the kind plus, for cycles, the doubled
/// m label.
struct OutcomeKey {
    Classification::Kind kind = Classification::Kind::Unresolved;
    int twice_m = 0;  // nonzero only for cycles

    auto operator<=>(const OutcomeKey&) const = default;

    static OutcomeKey of(const Classification& c) {
        OutcomeKey k;
        k.kind = c.kind;
        k.twice_m = c.kind == Classification::Kind::Cycle ? c.m.twice() : 0;
        return k;
    }

    std::string str() const;
};

struct EnsembleStats {
    struct Outcome {
        long count = 0;
        double probability = 0.0;
        double sigma = 0.0;  // normal-approximation standard error
    };
    /// In-cycle photon rate, estimated as sum(jumps - 1) / sum(t_horizon -
    /// first jump time) over the cycle's records. Jumps recur indefinitely
    /// once one has fired, so the full window after the first jump is live
    /// observation time and the count over it is unbiased; spans between
    /// first and last jump would overestimate by ~1/(jumps per run).
    struct JumpRate {
        double rate = 0.0;
        long jumps = 0;  // post-first jumps entering the estimate
    };

    long total = 0;
    std::map<OutcomeKey, Outcome> outcomes;
    std::map<int, JumpRate> mean_jump_rates;  // keyed by twice_m
};

/// Order-independent tally of classified records; t_horizon is the common
/// trajectory horizon (StepperConfig::t_max) the records were run to.
EnsembleStats aggregate(std::span<const TrajectoryRecord> records, double t_horizon);

}  // namespace spincycle

#endif  // SPINCYCLE_CYCLE_ANALYSIS_HPP_
