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

#include "spincycle/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "spincycle/cycle_analysis.hpp"
#include "spincycle/errors.hpp"

namespace spincycle {

namespace {

constexpr double kJumpNormFloor = 1e-14;

// Survival probability of the no-jump branch after time tau, given the
// normalized weights at the start of the interval: sum_i w_i exp(-2 m_i^2 tau).
double survival(const Eigen::ArrayXd& weights, const Eigen::ArrayXd& m2, double tau) {
    return (weights * (-2.0 * m2 * tau).exp()).sum();
}

// Solves survival(tau) == target by bisection on (0, hi); the caller
// guarantees survival(hi) < target <= survival(0) = 1.
double solve_jump_time(const Eigen::ArrayXd& weights, const Eigen::ArrayXd& m2, double target,
                       double hi) {
    // Support concentrated on one |m|: single exponential, closed form.
    double single_m2 = -1.0;
    bool single = true;
    for (Eigen::Index i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        if (single_m2 < 0.0) {
            single_m2 = m2[i];
        } else if (m2[i] != single_m2) {
            single = false;
            break;
        }
    }
    if (single && single_m2 > 0.0) {
        return std::min(hi, -std::log(target) / (2.0 * single_m2));
    }

    double lo = 0.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-13 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (survival(weights, m2, mid) >= target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

bool CollapseSpec::equal_rates() const {
    const double scale = std::max(std::abs(gamma01), std::abs(gamma10));
    return std::abs(gamma01 - gamma10) <= 1e-12 * std::max(1.0, scale);
}

void CollapseSpec::validate() const {
    if (gamma01 < 0.0 || gamma10 < 0.0) throw ConfigError("CollapseSpec: rates must be nonnegative");
    if (scaled && !equal_rates())
        throw ConfigError("CollapseSpec: scaled form requires gamma01 == gamma10");
}

OperatorMatrix CollapseSpec::x_operator(HalfInteger j) const {
    validate();
    LadderOperators l = ladder_operators(j);
    return {j, Basis::ZEigen, std::sqrt(gamma01) * l.plus.mat + std::sqrt(gamma10) * l.minus.mat};
}

void StepperConfig::validate(HalfInteger j) const {
    if (!(dt > 0.0)) throw ConfigError("StepperConfig: dt must be positive");
    if (!(t_max > 0.0)) throw ConfigError("StepperConfig: t_max must be positive");
    const double max_rate = 2.0 * j.squared();  // fastest jump rate, at m = +-j
    if (dt * max_rate > 0.1)
        throw ConfigError("StepperConfig: dt * 2 (N/2)^2 must not exceed 0.1; reduce dt");
}

OperatorMatrix effective_hamiltonian(const CollapseSpec& spec, HalfInteger j, Basis basis) {
    spec.validate();
    const Complex minus_i(0.0, -1.0);
    if (spec.scaled) {
        if (basis == Basis::XEigen) {
            const int dim = j.twice() + 1;
            Matrix h = Matrix::Zero(dim, dim);
            for (int i = 0; i < dim; ++i) {
                const int tm = 2 * i - j.twice();
                h(i, i) = minus_i * (static_cast<double>(tm) * tm / 4.0);
            }
            return {j, basis, h};
        }
        const OperatorMatrix jx = ladder_operators(j).x;
        return {j, Basis::ZEigen, minus_i * (jx.mat * jx.mat)};
    }
    const OperatorMatrix x = spec.x_operator(j);
    OperatorMatrix h{j, Basis::ZEigen, minus_i * (x.mat.adjoint() * x.mat)};
    return basis == Basis::ZEigen ? h : change_basis(h, basis);
}

SpinState free_evolve(const SpinState& state, double dt) {
    if (dt < 0.0) throw std::invalid_argument("free_evolve: negative time increment");
    if (state.basis != Basis::XEigen)
        throw std::invalid_argument("free_evolve: no-jump evolution is diagonal only in the Jx eigenbasis");
    if (dt == 0.0) return state;
    SpinState out = state;
    for (int i = 0; i < out.dim(); ++i) {
        const double m2 = out.m_at(i).squared();
        if (m2 != 0.0) out.amps[i] *= std::exp(-m2 * dt);
    }
    out.normalized = false;
    return out;
}

double jump_probability(const SpinState& state, double dt, const StepperConfig& config) {
    if (dt < 0.0) throw std::invalid_argument("jump_probability: negative dt");
    const double factor = config.jump_factor_two ? 2.0 : 1.0;
    return std::clamp(factor * jx_squared_expectation(state) * dt, 0.0, 1.0);
}

SpinState apply_jump(const SpinState& state) {
    SpinState out = state;
    if (state.basis == Basis::XEigen) {
        for (int i = 0; i < out.dim(); ++i) out.amps[i] *= out.m_at(i).value();
    } else {
        out.amps = ladder_operators(state.j).x.mat * state.amps;
    }
    const double n = out.amps.norm();
    if (n <= kJumpNormFloor)
        throw ZeroJumpAmplitude("apply_jump: Jx annihilates this state; no post-jump state exists");
    out.amps /= n;
    out.normalized = true;
    return out;
}

std::uint64_t trajectory_seed(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t x = master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Trajectory::Trajectory(const SpinState& initial, const CollapseSpec& spec,
                       const StepperConfig& config, std::uint64_t seed)
    : spec_(spec), cfg_(config), seed_(seed), rng_(seed) {
    spec_.validate();
    if (!spec_.scaled && !spec_.equal_rates())
        throw ConfigError(
            "Trajectory: unequal Raman rates have no entangled-state cycles; "
            "this engine implements the equal-rate (scaled) dynamics");
    initial.check_consistent(1e-9);
    if (!initial.normalized || std::abs(initial.norm2() - 1.0) > 1e-9)
        throw ConfigError("Trajectory: initial state must be normalized");
    cfg_.validate(initial.j);

    state_ = initial.basis == Basis::XEigen ? initial : change_basis(initial, Basis::XEigen);
    state_.normalized = true;

    const int dim = state_.dim();
    m2_.resize(dim);
    for (int i = 0; i < dim; ++i) m2_[i] = state_.m_at(i).squared();
    decay_dt_ = (-m2_ * cfg_.dt).exp();

    full_steps_ = static_cast<long long>(std::floor(cfg_.t_max / cfg_.dt + 1e-9));
    t_rem_ = cfg_.t_max - static_cast<double>(full_steps_) * cfg_.dt;
    if (t_rem_ < 1e-12 * std::max(1.0, cfg_.t_max)) t_rem_ = 0.0;
}

double Trajectory::uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

double Trajectory::uniform_open01() {
    for (;;) {
        const double u = uniform01();
        if (u > 0.0) return u;
    }
}

SpinState Trajectory::state() const {
    return state_;  // kept normalized by both samplers
}

bool Trajectory::step() {
    if (done_) return false;
    const bool jumped = cfg_.sampler == Sampler::FixedStep ? step_fixed() : step_waiting();
    if (t_ >= cfg_.t_max) done_ = true;
    return jumped;
}

bool Trajectory::step_fixed() {
    const bool partial = step_index_ >= full_steps_;
    const double dt = partial ? t_rem_ : cfg_.dt;
    const double jx2 = (m2_ * state_.amps.array().abs2()).sum();
    const double factor = cfg_.jump_factor_two ? 2.0 : 1.0;
    const double p = std::clamp(factor * jx2 * dt, 0.0, 1.0);
    const double u = uniform01();
    ++steps_;
    ++step_index_;
    t_ = partial ? cfg_.t_max : static_cast<double>(step_index_) * cfg_.dt;
    if (step_index_ >= full_steps_ && t_rem_ == 0.0) t_ = cfg_.t_max;

    if (p > u) {
        state_ = apply_jump(state_);
        jump_times_.push_back(t_);
        return true;
    }
    if (partial) {
        state_.amps.array() *= (-m2_ * dt).exp();
    } else {
        state_.amps.array() *= decay_dt_;
    }
    state_.amps /= state_.amps.norm();
    return false;
}

bool Trajectory::step_waiting() {
    ++steps_;
    const double remaining = cfg_.t_max - t_;
    const double u = uniform_open01();
    // With the factor-two convention the no-jump probability over tau is the
    // squared norm ||psi_bar(tau)||^2; the literal convention integrates the
    // rate <Jx^2>, whose survival works out to ||psi_bar(tau)|| instead.
    const double target = cfg_.jump_factor_two ? u : u * u;
    const Eigen::ArrayXd weights = state_.amps.array().abs2();
    if (survival(weights, m2_, remaining) >= target) {
        state_ = free_evolve(state_, remaining).renormalized();
        t_ = cfg_.t_max;
        return false;
    }
    const double tau = solve_jump_time(weights, m2_, target, remaining);
    state_ = apply_jump(free_evolve(state_, tau));
    t_ += tau;
    jump_times_.push_back(t_);
    return true;
}

TrajectoryRecord Trajectory::record(double classify_epsilon) {
    while (!done_) step();
    TrajectoryRecord rec;
    rec.seed = seed_;
    rec.n_atoms = state_.j.twice();
    rec.jump_times = jump_times_;
    rec.final_state = state_;
    rec.wall_steps = steps_;
    rec.outcome = classify(rec, classify_epsilon);
    rec.residual_weight = std::clamp(1.0 - rec.outcome.dominant_weight, 0.0, 1.0);
    return rec;
}

TrajectoryRecord run_trajectory(int n_atoms, const CollapseSpec& spec, const StepperConfig& config,
                                std::uint64_t seed, double classify_epsilon) {
    const HalfInteger j = spin_of_atoms(n_atoms);
    const SpinState initial = dicke_state(j, -j, Basis::ZEigen);
    return run_trajectory(initial, spec, config, seed, classify_epsilon);
}

TrajectoryRecord run_trajectory(const SpinState& initial, const CollapseSpec& spec,
                                const StepperConfig& config, std::uint64_t seed,
                                double classify_epsilon) {
    Trajectory traj(initial, spec, config, seed);
    return traj.record(classify_epsilon);
}

}  // namespace spincycle
