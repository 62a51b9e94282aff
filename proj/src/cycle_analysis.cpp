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

#include "spincycle/cycle_analysis.hpp"

#include <cmath>
#include <numbers>

#include "spincycle/detail/factorials.hpp"

namespace spincycle {

using detail::log_factorial;

Classification classify(const TrajectoryRecord& record, double epsilon) {
    const SpinState state = record.final_state.basis == Basis::XEigen
                                ? record.final_state
                                : change_basis(record.final_state, Basis::XEigen);
    state.check_consistent(1e-9);
    if (!state.normalized) throw std::invalid_argument("classify: final state must be normalized");

    const HalfInteger j = state.j;
    const Eigen::ArrayXd weights = state.amps.array().abs2();
    const long jumps = static_cast<long>(record.jump_times.size());

    Classification c;
    c.jumps_observed = jumps;

    const bool has_m0 = j.twice() % 2 == 0;
    const double w0 = has_m0 ? weights[j.twice() / 2] : 0.0;

    double best_pair = 0.0;
    int best_tm = 0;
    for (int tm = has_m0 ? 2 : 1; tm <= j.twice(); tm += 2) {
        const double pw = weights[(tm + j.twice()) / 2] + weights[(-tm + j.twice()) / 2];
        if (pw > best_pair) {
            best_pair = pw;
            best_tm = tm;
        }
    }

    if (jumps == 0 && has_m0 && w0 > 1.0 - epsilon) {
        c.kind = Classification::Kind::SteadyZero;
        c.dominant_weight = w0;
    } else if (jumps >= 1 && best_pair > 1.0 - epsilon) {
        c.kind = Classification::Kind::Cycle;
        c.m = HalfInteger::from_twice(best_tm);
        c.dominant_weight = best_pair;
    } else {
        c.kind = Classification::Kind::Unresolved;
        c.dominant_weight = std::max(w0, best_pair);
    }
    return c;
}

double p_steady(int n_atoms) {
    if (n_atoms < 2 || n_atoms % 2 != 0)
        throw std::invalid_argument(
            "p_steady: defined for even N >= 2; odd N has no m = 0 component and always jumps");
    return std::exp(log_factorial(n_atoms) - n_atoms * std::numbers::ln2 -
                    2.0 * log_factorial(n_atoms / 2));
}

double p_steady_stirling(int n_atoms) {
    if (n_atoms < 2) throw std::invalid_argument("p_steady_stirling: need N >= 2");
    return std::sqrt(2.0 / (std::numbers::pi * n_atoms));
}

double p_cycle(int n_atoms, HalfInteger m) {
    const HalfInteger j = spin_of_atoms(n_atoms);
    if (m.twice() <= 0 || !m_in_spectrum(j, m))
        throw std::invalid_argument("p_cycle: m must be a positive element of the spin-N/2 spectrum");
    const int j_plus_m = (n_atoms + m.twice()) / 2;
    const int j_minus_m = (n_atoms - m.twice()) / 2;
    return std::exp(log_factorial(n_atoms) - (n_atoms - 1) * std::numbers::ln2 -
                    log_factorial(j_plus_m) - log_factorial(j_minus_m));
}

double p_cycle_gauss(int n_atoms, HalfInteger m) {
    if (n_atoms < 2) throw std::invalid_argument("p_cycle_gauss: need N >= 2");
    if (m.twice() < 0) throw std::invalid_argument("p_cycle_gauss: need m >= 0");
    return 2.0 * std::sqrt(2.0 / (std::numbers::pi * n_atoms)) *
           std::exp(-m.squared() / (n_atoms / 2.0));
}

double jump_rate_ratio(int n_atoms, HalfInteger m1, HalfInteger m2) {
    const HalfInteger j = spin_of_atoms(n_atoms);
    if (m1.twice() <= 0 || m2.twice() <= 0 || !m_in_spectrum(j, m1) || !m_in_spectrum(j, m2))
        throw std::invalid_argument("jump_rate_ratio: cycle labels must be positive spectrum elements");
    return m1.squared() / m2.squared();
}

bool witness_genuine_entanglement(const SpinState& state, int n_atoms) {
    if (state.j.twice() != n_atoms)
        throw std::invalid_argument("witness_genuine_entanglement: state has j != N/2");
    return jx_squared_expectation(state) < n_atoms / 4.0;
}

double outcome_probability_sum(int n_atoms) {
    double sum = n_atoms % 2 == 0 ? p_steady(n_atoms) : 0.0;
    for (int tm = n_atoms % 2 == 0 ? 2 : 1; tm <= n_atoms; tm += 2)
        sum += p_cycle(n_atoms, HalfInteger::from_twice(tm));
    return sum;
}

std::string OutcomeKey::str() const {
    if (kind == Classification::Kind::Cycle)
        return "cycle(" + HalfInteger::from_twice(twice_m).str() + ")";
    return to_string(kind);
}

EnsembleStats aggregate(std::span<const TrajectoryRecord> records, double t_horizon) {
    EnsembleStats st;
    st.total = static_cast<long>(records.size());

    struct RateAcc {
        double span = 0.0;
        long intervals = 0;
    };
    std::map<int, RateAcc> rates;

    for (const TrajectoryRecord& rec : records) {
        st.outcomes[OutcomeKey::of(rec.outcome)].count += 1;
        if (rec.outcome.kind == Classification::Kind::Cycle && !rec.jump_times.empty()) {
            RateAcc& acc = rates[rec.outcome.m.twice()];
            acc.span += t_horizon - rec.jump_times.front();
            acc.intervals += static_cast<long>(rec.jump_times.size()) - 1;
        }
    }

    for (auto& [key, outcome] : st.outcomes) {
        const double p = st.total > 0 ? static_cast<double>(outcome.count) / st.total : 0.0;
        outcome.probability = p;
        outcome.sigma = st.total > 0 ? std::sqrt(p * (1.0 - p) / st.total) : 0.0;
    }
    for (const auto& [tm, acc] : rates) {
        if (acc.span > 0.0)
            st.mean_jump_rates[tm] = {static_cast<double>(acc.intervals) / acc.span, acc.intervals};
    }
    return st;
}

}  // namespace spincycle
