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

// End-to-end acceptance suite. Each criterion runs at its stated tolerance
// and prints exactly one PASS/FAIL line; the process exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "spincycle/ensemble.hpp"
#include "spincycle/master_equation.hpp"
#include "spincycle/state_catalog.hpp"

using namespace spincycle;

namespace {

constexpr double kPi = std::numbers::pi;

HalfInteger half(int twice) { return HalfInteger::from_twice(twice); }

struct Criterion {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// 1. Rotation-formula correctness against the matrix-exponential referee.
Criterion wigner_agreement() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    double worst_imag = 0.0;
    for (int tj = 1; tj <= 40; ++tj) {
        const HalfInteger j = half(tj);
        for (double beta : {kPi / 2, -kPi / 2, kPi / 4, -kPi / 4, 1.0}) {
            const Eigen::MatrixXd d = wigner_d_matrix(j, beta);
            const OperatorMatrix u = rotation_oracle(j, beta);
            worst = std::max(worst, (u.mat.real() - d).cwiseAbs().maxCoeff());
            worst_imag = std::max(worst_imag, u.mat.imag().cwiseAbs().maxCoeff());
        }
    }
    const double elapsed = seconds_since(t0);
    Criterion c;
    c.pass = worst <= 1e-8 && worst_imag <= 1e-10 && elapsed < 10.0;
    c.detail = "max |formula - exponential| = " + fmt(worst) + " over 2j <= 40, five angles, in " +
               fmt(elapsed) + " s";
    return c;
}

// 2. Catalog round trip: rotated Jx definitions match the printed Jz forms.
Criterion catalog_round_trip() {
    double worst = 1.0;
    std::string worst_name = "-";
    for (int n : {2, 3, 4}) {
        for (const CatalogEntry& x_entry : catalog(n)) {
            if (x_entry.basis != Basis::XEigen) continue;
            for (const CatalogEntry& z_entry : catalog(n)) {
                if (z_entry.basis != Basis::ZEigen || z_entry.name != x_entry.name) continue;
                const double f =
                    fidelity(change_basis(x_entry.state, Basis::ZEigen), z_entry.state);
                if (f < worst) {
                    worst = f;
                    worst_name = "N=" + std::to_string(n) + " " + x_entry.name;
                }
            }
        }
    }
    Criterion c;
    c.pass = worst >= 1.0 - 1e-12;
    c.detail = "min fidelity = " + fmt(worst) + " (worst: " + worst_name + ")";
    return c;
}

SimulationResult ensemble(int n_atoms, long runs, std::uint64_t seed, Sampler sampler,
                          double t_max = 25.0) {
    RunManifest m;
    m.n_atoms = n_atoms;
    m.master_seed = seed;
    m.trajectories = runs;
    m.stepper.sampler = sampler;
    m.stepper.t_max = t_max;
    return simulate(m, 2);
}

double outcome_fraction(const EnsembleStats& st, Classification::Kind kind, int twice_m = 0) {
    const auto it = st.outcomes.find(OutcomeKey{kind, twice_m});
    return it == st.outcomes.end() ? 0.0 : it->second.probability;
}

// 3. Two atoms: half of alltrajectories stay photon-free.
Criterion two_atom_probability(const EnsembleStats& st, double elapsed) {
    const double f = outcome_fraction(st, Classification::Kind::SteadyZero);
    Criterion c;
    c.pass = std::abs(f - 0.5) <= 0.015 && elapsed < 60.0;
    c.detail = "SteadyZero fraction = " + fmt(f) + " (want 0.500 +- 0.015) in " + fmt(elapsed) + " s";
    return c;
}

// 4. Three atoms: cycles at 3/4 and 1/4.
Criterion three_atom_probabilities(const EnsembleStats& st) {
    const double f_half = outcome_fraction(st, Classification::Kind::Cycle, 1);
    const double f_three = outcome_fraction(st, Classification::Kind::Cycle, 3);
    Criterion c;
    c.pass = std::abs(f_half - 0.75) <= 0.013 && std::abs(f_three - 0.25) <= 0.013;
    c.detail = "cycle fractions = (" + fmt(f_half) + ", " + fmt(f_three) +
               ") (want 0.750 +- 0.013, 0.250 +- 0.013)";
    return c;
}

// 5. Four atoms: 3/8 steady, 1/2 and 1/8 cycles, each within 3 binomial sigma.
Criterion four_atom_probabilities(const EnsembleStats& st, long runs) {
    const double f_steady = outcome_fraction(st, Classification::Kind::SteadyZero);
    const double f_one = outcome_fraction(st, Classification::Kind::Cycle, 2);
    const double f_two = outcome_fraction(st, Classification::Kind::Cycle, 4);
    auto within = [&](double got, double want) {
        return std::abs(got - want) <= 3.0 * std::sqrt(want * (1.0 - want) / runs);
    };
    Criterion c;
    c.pass = within(f_steady, 0.375) && within(f_one, 0.5) && within(f_two, 0.125);
    c.detail = "fractions = (" + fmt(f_steady) + ", " + fmt(f_one) + ", " + fmt(f_two) +
               ") (want 0.375, 0.500, 0.125 each +- 3 sigma)";
    return c;
}

// 6. Three atoms: photon rates of the two cycles sit in ratio 9.
Criterion jump_rate_ratio_check(const EnsembleStats& st) {
    Criterion c;
    const auto slow = st.mean_jump_rates.find(1);
    const auto fast = st.mean_jump_rates.find(3);
    if (slow == st.mean_jump_rates.end() || fast == st.mean_jump_rates.end()) {
        c.detail = "missing cycle rate estimates";
        return c;
    }
    const double ratio = fast->second.rate / slow->second.rate;
    c.pass = std::abs(ratio / 9.0 - 1.0) <= 0.05 && slow->second.jumps >= 1000 &&
             fast->second.jumps >= 1000;
    c.detail = "rate(3/2) / rate(1/2) = " + fmt(ratio) + " (want 9 +- 5%), intervals = " +
               std::to_string(slow->second.jumps) + " / " + std::to_string(fast->second.jumps);
    return c;
}

// 7. Closed forms: completeness over N <= 100 and the rotation-element identity.
Criterion closed_form_completeness() {
    double worst_sum = 0.0;
    for (int n = 2; n <= 100; ++n)
        worst_sum = std::max(worst_sum, std::abs(outcome_probability_sum(n) - 1.0));

    double worst_identity = 0.0;
    for (int n = 2; n <= 40; ++n) {
        const HalfInteger j = spin_of_atoms(n);
        for (int tm = n % 2 == 0 ? 2 : 1; tm <= n; tm += 2) {
            const double d = wigner_d(j, half(tm), -j, -kPi / 2);
            worst_identity =
                std::max(worst_identity, std::abs(p_cycle(n, half(tm)) - 2.0 * d * d));
        }
    }
    Criterion c;
    c.pass = worst_sum <= 1e-12 && worst_identity <= 1e-10;
    c.detail = "max |sum - 1| = " + fmt(worst_sum) + " (N <= 100); max |p - 2 d^2| = " +
               fmt(worst_identity) + " (N <= 40)";
    return c;
}

// 8. Stirling and Gaussian limits at N = 40.
Criterion limit_quality() {
    const double stirling_err = std::abs(p_steady_stirling(40) / p_steady(40) - 1.0);
    double worst_gauss = 0.0;
    for (int m = 1; m * m <= 40; ++m) {
        const double rel =
            std::abs(p_cycle_gauss(40, half(2 * m)) / p_cycle(40, half(2 * m)) - 1.0);
        worst_gauss = std::max(worst_gauss, rel);
    }
    Criterion c;
    c.pass = stirling_err <= 0.01 && worst_gauss <= 0.05;
    c.detail = "Stirling rel. err = " + fmt(stirling_err) + " (<= 1%); Gaussian rel. err <= " +
               fmt(worst_gauss) + " for m <= sqrt(40) (<= 5%)";
    return c;
}

// 9. Trajectory ensemble average vs RK4 master equation at t = 1, which also
// certifies the factor-two jump probability convention.
Criterion unraveling_consistency() {
    Criterion c;
    c.pass = true;
    std::string details;
    for (int n : {2, 3, 4}) {
        RunManifest m;
        m.n_atoms = n;
        m.master_seed = 4200 + n;
        m.trajectories = 10000;
        m.stepper.sampler = Sampler::FixedStep;
        m.stepper.t_max = 1.0;
        const SimulationResult result = simulate(m, 2);

        const HalfInteger j = spin_of_atoms(n);
        Matrix mean = Matrix::Zero(n + 1, n + 1);
        for (const TrajectoryRecord& rec : result.records)
            mean += rec.final_state.amps * rec.final_state.amps.adjoint();
        mean /= static_cast<double>(result.records.size());

        const SpinState psi0 = change_basis(dicke_state(j, -j, Basis::ZEigen), Basis::XEigen);
        const DensityMatrix oracle =
            integrate(DensityMatrix::pure(psi0), CollapseSpec::scaled_equal(), 1.0, 1e-3);
        const double td = trace_distance({j, Basis::XEigen, mean}, oracle);
        c.pass = c.pass && td <= 0.02;
        if (!details.empty()) details += ", ";
        details += "N=" + std::to_string(n) + ": " + fmt(td);
    }
    c.detail = "trace distances (10^4 runs, t = 1) = " + details + " (each <= 0.02)";
    return c;
}

// 10. Zero-eigenvalue structure of the dynamics generator.
Criterion liouvillian_structure() {
    Criterion c;
    c.pass = true;
    int checked = 0;
    for (int n = 2; n <= 6; ++n) {
        const HalfInteger j = spin_of_atoms(n);
        const NullspaceResult unequal = liouvillian_nullspace(CollapseSpec::rates(1.0, 0.5), j);
        const NullspaceResult equal = liouvillian_nullspace(CollapseSpec::rates(1.0, 1.0), j);
        const NullspaceResult scaled = liouvillian_nullspace(CollapseSpec::scaled_equal(), j);
        c.pass = c.pass && unequal.zero_count == 1 && equal.zero_count >= 2 &&
                 scaled.zero_count == n + 1 && unequal.max_real_part <= 1e-9 &&
                 equal.max_real_part <= 1e-9 && scaled.max_real_part <= 1e-9;
        ++checked;
    }
    c.detail = "N = 2..6: unequal rates -> 1 zero, equal -> >= 2, scaled -> N + 1 (" +
               std::to_string(checked) + " sizes checked)";
    return c;
}

// 11. Cycle mechanics: the m = 0 amplitude never returns after a jump, and
// consecutive jumps alternate the chi pair.
Criterion cycle_mechanics() {
    Criterion c;

    StepperConfig cfg;
    cfg.t_max = 10.0;
    const HalfInteger j = spin_of_atoms(4);
    const SpinState initial = change_basis(dicke_state(j, -j, Basis::ZEigen), Basis::XEigen);
    bool jumped = false;
    double worst_m0 = 0.0;
    long steps_checked = 0;
    for (std::uint64_t seed = 1; seed <= 50 && !jumped; ++seed) {
        Trajectory traj(initial, CollapseSpec::scaled_equal(), cfg, seed);
        while (!traj.finished()) {
            jumped = traj.step() || jumped;
            if (jumped) {
                worst_m0 = std::max(worst_m0, std::abs(traj.state().amps[2]));
                ++steps_checked;
            }
        }
    }

    double worst_alternation = 0.0;
    for (int n : {2, 3, 4}) {
        for (int tm = n % 2 == 0 ? 2 : 1; tm <= n; tm += 2) {
            const SpinState plus = chi_state(n, half(tm), +1);
            const SpinState once = apply_jump(plus);
            const SpinState twice = apply_jump(once);
            worst_alternation =
                std::max(worst_alternation, 1.0 - fidelity(once, chi_state(n, half(tm), -1)));
            worst_alternation = std::max(worst_alternation, 1.0 - fidelity(twice, plus));
        }
    }

    c.pass = jumped && steps_checked > 1000 && worst_m0 <= 1e-14 && worst_alternation <= 1e-12;
    c.detail = "max |a_0| after first jump = " + fmt(worst_m0) + " over " +
               std::to_string(steps_checked) + " steps; max chi alternation defect = " +
               fmt(worst_alternation);
    return c;
}

// 12. Acceptance suite runtime and bit-identical record streams.
Criterion reproducibility(double elapsed_so_far) {
    RunManifest m;
    m.n_atoms = 3;
    m.master_seed = 31337;
    m.trajectories = 500;
    m.stepper.sampler = Sampler::WaitingTime;
    const std::string first = records_to_jsonl(simulate(m, 2).records);
    const std::string second = records_to_jsonl(simulate(m, 1).records);
    Criterion c;
    c.pass = first == second && !first.empty() && elapsed_so_far < 300.0;
    c.detail = std::string("record streams byte-equal across reruns and worker counts: ") +
               (first == second ? "yes" : "NO") + "; suite elapsed " + fmt(elapsed_so_far) + " s";
    return c;
}

}  // namespace

int main() {
    const auto suite_start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, Criterion>> results;

    results.emplace_back(" 1. rotation formula vs matrix exponential", wigner_agreement());
    results.emplace_back(" 2. catalog round trip (N = 2, 3, 4)", catalog_round_trip());

    const auto t2 = std::chrono::steady_clock::now();
    const SimulationResult n2 = ensemble(2, 10000, 20260808, Sampler::WaitingTime);
    const double n2_elapsed = seconds_since(t2);
    results.emplace_back(" 3. two-atom outcome probabilities", two_atom_probability(n2.stats, n2_elapsed));

    const SimulationResult n3 = ensemble(3, 10000, 20260809, Sampler::WaitingTime);
    results.emplace_back(" 4. three-atom cycle probabilities", three_atom_probabilities(n3.stats));

    const SimulationResult n4 = ensemble(4, 10000, 20260810, Sampler::WaitingTime);
    results.emplace_back(" 5. four-atom outcome probabilities",
                         four_atom_probabilities(n4.stats, 10000));

    results.emplace_back(" 6. cycle jump-rate ratio (N = 3)", jump_rate_ratio_check(n3.stats));
    results.emplace_back(" 7. closed-form completeness", closed_form_completeness());
    results.emplace_back(" 8. Stirling / Gaussian limits", limit_quality());
    results.emplace_back(" 9. unraveling vs master equation", unraveling_consistency());
    results.emplace_back("10. generator null-space structure", liouvillian_structure());
    results.emplace_back("11. cycle mechanics", cycle_mechanics());
    results.emplace_back("12. reproducibility and runtime", reproducibility(seconds_since(suite_start)));

    int failures = 0;
    for (const auto& [name, criterion] : results) {
        std::printf("%s %s - %s\n", criterion.pass ? "PASS" : "FAIL", name.c_str(),
                    criterion.detail.c_str());
        if (!criterion.pass) ++failures;
    }
    std::printf("%d/%zu acceptance criteria passed in %.1f s\n", static_cast<int>(results.size()) - failures,
                results.size(), seconds_since(suite_start));
    return failures == 0 ? 0 : 1;
}
