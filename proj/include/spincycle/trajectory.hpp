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

#ifndef SPINCYCLE_TRAJECTORY_HPP_
#define SPINCYCLE_TRAJECTORY_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "spincycle/classification.hpp"
#include "spincycle/spin_algebra.hpp"

namespace spincycle {

/// Raman rate pair behind the collapse operator X = sqrt(g01) J+ + sqrt(g10) J-.
/// With scaled == true the rates are equal, time runs in units of
/// (4 gamma01)^-1, and the collapse operator reduces to C = Jx.
struct CollapseSpec {
    double gamma01 = 0.0;
    double gamma10 = 0.0;
    bool scaled = false;

    /// Canonical equal-rate working point in scaled time.
    static CollapseSpec scaled_equal() { return {0.25, 0.25, true}; }
    static CollapseSpec rates(double gamma01, double gamma10) { return {gamma01, gamma10, false}; }

    bool equal_rates() const;
    void validate() const;

    /// X = sqrt(gamma01) J+ + sqrt(gamma10) J- in the Jz eigenbasis.
    OperatorMatrix x_operator(HalfInteger j) const;
};

enum class Sampler { FixedStep, WaitingTime };

/// FixedStep walks the Bernoulli jump loop over increments dt; WaitingTime
/// draws each inter-jump interval directly from the exact survival function
/// (a sum of decaying exponentials, since the no-jump generator is diagonal
/// in the Jx basis).
struct StepperConfig {
    double dt = 1e-3;      // scaled time increment
    double t_max = 25.0;   // scaled horizon
    bool jump_factor_two = true;  // P = 2 <Jx^2> dt; false keeps the literal P = <Jx^2> dt
    Sampler sampler = Sampler::FixedStep;

    /// dt > 0, t_max > 0, and dt * (max jump rate) = dt * 2 (N/2)^2 <= 0.1.
    void validate(HalfInteger j) const;
};

struct TrajectoryRecord {
    std::uint64_t seed = 0;
    int n_atoms = 0;
    std::vector<double> jump_times;  // strictly increasing, in [0, t_max], scaled units
    Classification outcome;
    SpinState final_state;           // Jx eigenbasis, normalized
    double residual_weight = 0.0;    // weight outside the dominant component set
    std::uint64_t wall_steps = 0;
};

/// -i Jx^2 for scaled specs (diagonal -i m^2 in the Jx basis, built exactly);
/// -i X^dagger X for general rate pairs.
OperatorMatrix effective_hamiltonian(const CollapseSpec& spec, HalfInteger j,
                                     Basis basis = Basis::XEigen);

/// Exact no-jump evolution in the Jx eigenbasis: a_m -> a_m exp(-m^2 dt).
/// Not a first-order step; the m = 0 amplitude is untouched. Returns an
/// unnormalized state. Rejects dt < 0 and non-Jx-basis input.
SpinState free_evolve(const SpinState& state, double dt);

/// Per-step collapse probability factor * <Jx^2> * dt, clipped to [0, 1].
double jump_probability(const SpinState& state, double dt, const StepperConfig& config);

/// C|psi>/||C|psi>|| with C = Jx; maps chi^+-(m) exactly onto chi^-+(m).
/// Throws ZeroJumpAmplitude when Jx annihilates the state.
SpinState apply_jump(const SpinState& state);

/// Per-trajectory RNG stream seed derived from (master_seed, index) with
/// SplitMix64, so ensembles parallelize reproducibly over any worker count.
std::uint64_t trajectory_seed(std::uint64_t master_seed, std::uint64_t index);

/// Single trajectory with per-step granularity, used by run_trajectory, the
/// trace subcommand, and instrumented tests. Works in the Jx eigenbasis.
class Trajectory {
  public:
    Trajectory(const SpinState& initial, const CollapseSpec& spec, const StepperConfig& config,
               std::uint64_t seed);

    /// Advances one dt (FixedStep) or to the next jump / the horizon
    /// (WaitingTime). Returns true when a jump fired.
    bool step();
    bool finished() const { return done_; }

    double time() const { return t_; }
    /// Normalized view of the current state.
    SpinState state() const;
    const std::vector<double>& jump_times() const { return jump_times_; }
    std::uint64_t wall_steps() const { return steps_; }

    /// Runs to the horizon and assembles the record, classified with the
    /// given threshold.
    TrajectoryRecord record(double classify_epsilon = 1e-6);

  private:
    bool step_fixed();
    bool step_waiting();
    double uniform01();       // [0, 1)
    double uniform_open01();  // (0, 1)

    CollapseSpec spec_;
    StepperConfig cfg_;
    std::uint64_t seed_;
    SpinState state_;  // Jx basis; always kept normalized
    double t_ = 0.0;
    bool done_ = false;
    std::vector<double> jump_times_;
    std::uint64_t steps_ = 0;
    std::mt19937_64 rng_;
    Eigen::ArrayXd m2_;        // m^2 per amplitude index
    Eigen::ArrayXd decay_dt_;  // exp(-m^2 dt) per index (FixedStep)
    long long full_steps_ = 0;
    double t_rem_ = 0.0;  // partial step landing exactly on t_max
    long long step_index_ = 0;
};

/// One Monte Carlo trajectory from |N/2,-N/2>_z. Deterministic in
/// (seed, config, N). The record's outcome is classified with epsilon.
TrajectoryRecord run_trajectory(int n_atoms, const CollapseSpec& spec, const StepperConfig& config,
                                std::uint64_t seed, double classify_epsilon = 1e-6);

/// Same, from a caller-supplied normalized initial state (any basis).
TrajectoryRecord run_trajectory(const SpinState& initial, const CollapseSpec& spec,
                                const StepperConfig& config, std::uint64_t seed,
                                double classify_epsilon = 1e-6);

}  // namespace spincycle

#endif  // SPINCYCLE_TRAJECTORY_HPP_
