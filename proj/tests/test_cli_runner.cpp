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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "spincycle/ensemble.hpp"
#include "spincycle/errors.hpp"
#include "spincycle/physical_params.hpp"

using namespace spincycle;

TEST_CASE("derive_rates") {
    SUBCASE("single-channel magnitude") {
        PhysicalParams p;
        p.zeta_s = p.g_s = 1.0;
        p.delta_s = 10.0;
        p.zeta_r = p.g_r = 1.0;
        p.delta_r = 20.0;
        p.kappa = 1.0;
        const RateDerivation d = derive_rates(p);
        CHECK(d.spec.gamma01 == doctest::Approx(1.0 / 400.0).epsilon(1e-14));
        CHECK(d.spec.gamma10 == doctest::Approx(1.0 / 1600.0).epsilon(1e-14));
        CHECK(!d.spec.scaled);
        CHECK(d.time_unit == doctest::Approx(100.0).epsilon(1e-12));
    }

    SUBCASE("doubling the detuning quarters the rate") {
        PhysicalParams p;
        p.zeta_s = p.g_s = p.zeta_r = p.g_r = 1.0;
        p.delta_s = p.delta_r = 10.0;
        p.kappa = 1.0;
        const double base = derive_rates(p).spec.gamma01;
        p.delta_s = 20.0;
        CHECK(derive_rates(p).spec.gamma01 == doctest::Approx(base / 4.0).epsilon(1e-13));
    }

    SUBCASE("balanced Raman channels set the scaled flag") {
        PhysicalParams p;
        p.zeta_s = 2.0;
        p.g_s = 1.0;
        p.delta_s = 40.0;
        p.zeta_r = 1.0;
        p.g_r = 2.0;
        p.delta_r = 40.0;
        p.kappa = 1.0;
        const RateDerivation d = derive_rates(p);
        CHECK(d.spec.scaled);
        CHECK(d.spec.gamma01 == doctest::Approx(d.spec.gamma10).epsilon(1e-14));
    }

    SUBCASE("rejects bad inputs") {
        PhysicalParams p;
        p.kappa = 0.0;
        p.delta_r = p.delta_s = 10.0;
        CHECK_THROWS_AS(derive_rates(p), ConfigError);
        p.kappa = 1.0;
        p.delta_s = 0.0;
        CHECK_THROWS_AS(derive_rates(p), ConfigError);
    }

    SUBCASE("validity warnings") {
        PhysicalParams p;
        p.zeta_s = p.g_s = p.zeta_r = p.g_r = 1.0;
        p.delta_s = 5.0;  // below the 10x guideline
        p.delta_r = 100.0;
        p.kappa = 1.0;
        const RateDerivation d = derive_rates(p);
        REQUIRE(!d.warnings.empty());
        CHECK(d.warnings.front().find("delta_s") != std::string::npos);

        PhysicalParams q;
        q.zeta_s = q.g_s = q.zeta_r = q.g_r = 1.0;
        q.delta_s = q.delta_r = 100.0;
        q.kappa = 1e-4;  // derived rates comparable to kappa
        bool cavity_warning = false;
        for (const std::string& w : derive_rates(q).warnings)
            cavity_warning = cavity_warning || w.find("kappa/10") != std::string::npos;
        CHECK(cavity_warning);
    }
}

TEST_CASE("trajectory seed streams") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t k = 0; k < 2048; ++k) seen.insert(trajectory_seed(12345, k));
    CHECK(seen.size() == 2048);
    CHECK(trajectory_seed(1, 7) == trajectory_seed(1, 7));
    CHECK(trajectory_seed(1, 7) != trajectory_seed(2, 7));
}

TEST_CASE("manifest JSON round trip") {
    RunManifest m;
    m.n_atoms = 3;
    m.master_seed = 0xDEADBEEF12345678ULL;
    m.trajectories = 777;
    m.stepper.dt = 2e-3;
    m.stepper.t_max = 12.5;
    m.stepper.jump_factor_two = false;
    m.stepper.sampler = Sampler::WaitingTime;
    m.epsilon = 1e-7;
    m.output = "out/records.jsonl";

    const RunManifest back = manifest_from_json(manifest_to_json(m));
    CHECK(back.n_atoms == m.n_atoms);
    CHECK(back.master_seed == m.master_seed);
    CHECK(back.trajectories == m.trajectories);
    CHECK(back.stepper.dt == m.stepper.dt);
    CHECK(back.stepper.t_max == m.stepper.t_max);
    CHECK(back.stepper.jump_factor_two == m.stepper.jump_factor_two);
    CHECK(back.stepper.sampler == m.stepper.sampler);
    CHECK(back.epsilon == m.epsilon);
    CHECK(back.output == m.output);
    CHECK(back.tool_version == m.tool_version);

    CHECK_THROWS_AS([] {
        RunManifest bad;
        bad.trajectories = 0;
        bad.validate();
    }(), ConfigError);
}

TEST_CASE("record JSON round trip is exact") {
    RunManifest m;
    m.n_atoms = 3;
    m.master_seed = 5;
    m.trajectories = 50;
    m.stepper.sampler = Sampler::WaitingTime;
    const SimulationResult result = simulate(m);

    for (const TrajectoryRecord& rec : result.records) {
        const TrajectoryRecord back = record_from_json(record_to_json(rec));
        CHECK(back.seed == rec.seed);
        CHECK(back.n_atoms == rec.n_atoms);
        REQUIRE(back.jump_times.size() == rec.jump_times.size());
        for (std::size_t i = 0; i < rec.jump_times.size(); ++i)
            CHECK(back.jump_times[i] == rec.jump_times[i]);
        CHECK(back.outcome.kind == rec.outcome.kind);
        CHECK(back.outcome.dominant_weight == rec.outcome.dominant_weight);
        CHECK((back.final_state.amps - rec.final_state.amps).norm() == 0.0);
        CHECK(back.residual_weight == rec.residual_weight);
        CHECK(back.wall_steps == rec.wall_steps);
    }

    // Serialization itself is stable.
    CHECK(records_to_jsonl(result.records) == records_to_jsonl(result.records));
}

TEST_CASE("simulate: reproducibility across thread counts") {
    RunManifest m;
    m.n_atoms = 3;
    m.master_seed = 99;
    m.trajectories = 200;
    m.stepper.sampler = Sampler::WaitingTime;

    const SimulationResult serial = simulate(m, 1);
    const SimulationResult threaded = simulate(m, 4);
    CHECK(records_to_jsonl(serial.records) == records_to_jsonl(threaded.records));
    CHECK(stats_to_json(serial.stats) == stats_to_json(threaded.stats));

    SUBCASE("bit-identical rerun of the same manifest") {
        const SimulationResult again = simulate(m, 2);
        CHECK(records_to_jsonl(serial.records) == records_to_jsonl(again.records));
    }

    SUBCASE("summary equals a fresh aggregation of the record stream") {
        const EnsembleStats recounted = aggregate(serial.records, m.stepper.t_max);
        CHECK(stats_to_json(recounted) == stats_to_json(serial.stats));
    }
}

TEST_CASE("measured in-cycle rates match 2 m^2") {
    RunManifest m;
    m.n_atoms = 3;
    m.master_seed = 2026;
    m.trajectories = 2000;
    m.stepper.sampler = Sampler::WaitingTime;
    const EnsembleStats st = simulate(m, 2).stats;
    REQUIRE(st.mean_jump_rates.count(1) == 1);
    REQUIRE(st.mean_jump_rates.count(3) == 1);
    CHECK(st.mean_jump_rates.at(1).jumps >= 1000);
    CHECK(st.mean_jump_rates.at(3).jumps >= 1000);
    CHECK(std::abs(st.mean_jump_rates.at(1).rate / 0.5 - 1.0) <= 0.05);
    CHECK(std::abs(st.mean_jump_rates.at(3).rate / 4.5 - 1.0) <= 0.05);
}

TEST_CASE("probability table") {
    const std::vector<ProbabilityRow> rows = probability_table(2, 12);

    SUBCASE("rows per N sum to one") {
        std::map<int, double> sums;
        for (const ProbabilityRow& r : rows)
            sums[r.n_atoms] += r.steady_row ? r.p_steady : r.p_cycle;
        for (const auto& [n, sum] : sums) {
            INFO("N = ", n);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    SUBCASE("spot values") {
        for (const ProbabilityRow& r : rows) {
            if (r.n_atoms == 4 && r.steady_row) CHECK(r.p_steady == doctest::Approx(0.375));
            if (r.n_atoms == 4 && r.m.twice() == 2) CHECK(r.p_cycle == doctest::Approx(0.5));
            if (r.n_atoms == 3 && r.steady_row) CHECK(r.p_steady == 0.0);
        }
    }

    SUBCASE("CSV shape") {
        const std::string csv = probability_table_csv(probability_table(2, 3));
        std::istringstream is(csv);
        std::string line;
        std::getline(is, line);
        CHECK(line == "N,m,p_steady,p_cycle,gaussian,stirling");
        std::getline(is, line);
        CHECK(line.substr(0, 4) == "2,0,");
        int count = 1;
        while (std::getline(is, line)) ++count;
        CHECK(count == 5);  // N=2: m in {0,1}; N=3: m in {0,1/2,3/2}
    }

    CHECK_THROWS_AS(probability_table(2, 500), ConfigError);
}
