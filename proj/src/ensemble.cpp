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

#include "spincycle/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "spincycle/errors.hpp"

namespace spincycle {

namespace {

const char* to_string(Sampler s) { return s == Sampler::FixedStep ? "fixed_step" : "waiting_time"; }

Sampler sampler_from_string(const std::string& s) {
    if (s == "fixed_step") return Sampler::FixedStep;
    if (s == "waiting_time") return Sampler::WaitingTime;
    throw ConfigError("unknown sampler: " + s);
}

Basis basis_from_string(const std::string& s) {
    if (s == "z") return Basis::ZEigen;
    if (s == "x") return Basis::XEigen;
    throw ConfigError("unknown basis tag: " + s);
}

}  // namespace

void RunManifest::validate() const {
    if (n_atoms < 1) throw ConfigError("RunManifest: n_atoms must be >= 1");
    if (trajectories < 1) throw ConfigError("RunManifest: trajectories must be >= 1");
    if (!(epsilon > 0.0) || epsilon >= 1.0)
        throw ConfigError("RunManifest: epsilon must lie in (0, 1)");
    stepper.validate(spin_of_atoms(n_atoms));
}

SimulationResult simulate(const RunManifest& manifest, int threads) {
    manifest.validate();
    const HalfInteger j = spin_of_atoms(manifest.n_atoms);
    // Built once; trajectory workers share it read-only.
    const SpinState initial = change_basis(dicke_state(j, -j, Basis::ZEigen), Basis::XEigen);
    const CollapseSpec spec = CollapseSpec::scaled_equal();

    SimulationResult result;
    result.records.resize(static_cast<std::size_t>(manifest.trajectories));

    std::atomic<long> next{0};
    auto worker = [&] {
        for (;;) {
            const long k = next.fetch_add(1, std::memory_order_relaxed);
            if (k >= manifest.trajectories) break;
            result.records[static_cast<std::size_t>(k)] =
                run_trajectory(initial, spec, manifest.stepper,
                               trajectory_seed(manifest.master_seed, static_cast<std::uint64_t>(k)),
                               manifest.epsilon);
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    result.stats = aggregate(result.records, manifest.stepper.t_max);
    return result;
}

Json manifest_to_json(const RunManifest& m) {
    return Json{{"tool_version", m.tool_version},
                {"n_atoms", m.n_atoms},
                {"master_seed", m.master_seed},
                {"trajectories", m.trajectories},
                {"stepper",
                 {{"dt", m.stepper.dt},
                  {"t_max", m.stepper.t_max},
                  {"jump_factor_two", m.stepper.jump_factor_two},
                  {"sampler", to_string(m.stepper.sampler)}}},
                {"epsilon", m.epsilon},
                {"output", m.output}};
}

RunManifest manifest_from_json(const Json& j) {
    RunManifest m;
    m.tool_version = j.value("tool_version", std::string(kToolVersion));
    m.n_atoms = j.at("n_atoms").get<int>();
    m.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.trajectories = j.at("trajectories").get<long>();
    const Json& st = j.at("stepper");
    m.stepper.dt = st.at("dt").get<double>();
    m.stepper.t_max = st.at("t_max").get<double>();
    m.stepper.jump_factor_two = st.at("jump_factor_two").get<bool>();
    m.stepper.sampler = sampler_from_string(st.at("sampler").get<std::string>());
    m.epsilon = j.at("epsilon").get<double>();
    m.output = j.value("output", std::string());
    return m;
}

Json record_to_json(const TrajectoryRecord& rec) {
    Json outcome{{"kind", to_string(rec.outcome.kind)},
                 {"dominant_weight", rec.outcome.dominant_weight},
                 {"jumps", rec.outcome.jumps_observed}};
    if (rec.outcome.kind == Classification::Kind::Cycle) {
        outcome["twice_m"] = rec.outcome.m.twice();
        outcome["m"] = rec.outcome.m.str();
    }
    Json amps = Json::array();
    for (int i = 0; i < rec.final_state.dim(); ++i)
        amps.push_back({rec.final_state.amps[i].real(), rec.final_state.amps[i].imag()});
    return Json{{"seed", rec.seed},
                {"n_atoms", rec.n_atoms},
                {"jump_times", rec.jump_times},
                {"outcome", outcome},
                {"final_state",
                 {{"basis", spincycle::to_string(rec.final_state.basis)},
                  {"twice_j", rec.final_state.j.twice()},
                  {"amps", amps}}},
                {"residual_weight", rec.residual_weight},
                {"wall_steps", rec.wall_steps}};
}

TrajectoryRecord record_from_json(const Json& j) {
    TrajectoryRecord rec;
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.n_atoms = j.at("n_atoms").get<int>();
    rec.jump_times = j.at("jump_times").get<std::vector<double>>();
    const Json& oc = j.at("outcome");
    const std::string kind = oc.at("kind").get<std::string>();
    if (kind == "steady_zero") {
        rec.outcome.kind = Classification::Kind::SteadyZero;
    } else if (kind == "cycle") {
        rec.outcome.kind = Classification::Kind::Cycle;
        rec.outcome.m = HalfInteger::from_twice(oc.at("twice_m").get<int>());
    } else {
        rec.outcome.kind = Classification::Kind::Unresolved;
    }
    rec.outcome.dominant_weight = oc.at("dominant_weight").get<double>();
    rec.outcome.jumps_observed = oc.at("jumps").get<long>();
    const Json& fs = j.at("final_state");
    rec.final_state.j = HalfInteger::from_twice(fs.at("twice_j").get<int>());
    rec.final_state.basis = basis_from_string(fs.at("basis").get<std::string>());
    const Json& amps = fs.at("amps");
    rec.final_state.amps = Vector::Zero(static_cast<Eigen::Index>(amps.size()));
    for (Eigen::Index i = 0; i < rec.final_state.amps.size(); ++i) {
        const Json& pair = amps.at(static_cast<std::size_t>(i));
        rec.final_state.amps[i] = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    rec.final_state.normalized = true;
    rec.residual_weight = j.at("residual_weight").get<double>();
    rec.wall_steps = j.at("wall_steps").get<std::uint64_t>();
    return rec;
}

std::string records_to_jsonl(std::span<const TrajectoryRecord> records) {
    std::string out;
    for (const TrajectoryRecord& rec : records) {
        out += record_to_json(rec).dump();
        out += '\n';
    }
    return out;
}

Json stats_to_json(const EnsembleStats& stats) {
    Json outcomes = Json::array();
    for (const auto& [key, oc] : stats.outcomes) {
        Json row{{"outcome", key.str()},
                 {"count", oc.count},
                 {"probability", oc.probability},
                 {"sigma", oc.sigma}};
        if (key.kind == Classification::Kind::Cycle) row["twice_m"] = key.twice_m;
        outcomes.push_back(std::move(row));
    }
    Json rates = Json::array();
    for (const auto& [tm, jr] : stats.mean_jump_rates) {
        rates.push_back({{"twice_m", tm},
                         {"m", HalfInteger::from_twice(tm).str()},
                         {"rate", jr.rate},
                         {"jump_intervals", jr.jumps}});
    }
    return Json{{"total", stats.total}, {"outcomes", outcomes}, {"mean_jump_rates", rates}};
}

std::vector<ProbabilityRow> probability_table(int n_min, int n_max) {
    if (n_min < 2 || n_max < n_min || n_max > 200)
        throw ConfigError("probability_table: need 2 <= n_min <= n_max <= 200");
    std::vector<ProbabilityRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        ProbabilityRow steady;
        steady.n_atoms = n;
        steady.m = HalfInteger::from_twice(0);
        steady.steady_row = true;
        steady.p_steady = n % 2 == 0 ? p_steady(n) : 0.0;
        steady.gaussian = p_cycle_gauss(n, HalfInteger::from_twice(0));
        steady.stirling = p_steady_stirling(n);
        rows.push_back(steady);
        for (int tm = n % 2 == 0 ? 2 : 1; tm <= n; tm += 2) {
            ProbabilityRow r;
            r.n_atoms = n;
            r.m = HalfInteger::from_twice(tm);
            r.p_cycle = p_cycle(n, r.m);
            r.gaussian = p_cycle_gauss(n, r.m);
            rows.push_back(r);
        }
    }
    return rows;
}

std::string probability_table_csv(const std::vector<ProbabilityRow>& rows) {
    std::ostringstream os;
    os.precision(17);
    os << "N,m,p_steady,p_cycle,gaussian,stirling\n";
    for (const ProbabilityRow& r : rows) {
        os << r.n_atoms << ',' << r.m.str_decimal() << ',';
        if (r.steady_row) os << r.p_steady;
        os << ',';
        if (!r.steady_row) os << r.p_cycle;
        os << ',' << r.gaussian << ',';
        if (r.steady_row) os << r.stirling;
        os << '\n';
    }
    return os.str();
}

}  // namespace spincycle
