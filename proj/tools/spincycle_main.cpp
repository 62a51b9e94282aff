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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spincycle/ensemble.hpp"
#include "spincycle/master_equation.hpp"
#include "spincycle/physical_params.hpp"
#include "spincycle/state_catalog.hpp"

namespace {

using namespace spincycle;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumericalGuard = 3;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot open output file: " + path);
    os << text;
}

struct SimulateOptions {
    RunManifest manifest;
    std::string sampler = "waiting_time";
    bool appendix_literal = false;
    int threads = 1;
    std::string manifest_path;
};

int run_simulate(SimulateOptions& opt) {
    if (!opt.manifest_path.empty()) {
        std::ifstream is(opt.manifest_path);
        if (!is) throw ConfigError("cannot read manifest: " + opt.manifest_path);
        opt.manifest = manifest_from_json(Json::parse(is));
    } else {
        opt.manifest.stepper.sampler = [&] {
            if (opt.sampler == "fixed") return Sampler::FixedStep;
            if (opt.sampler == "waiting") return Sampler::WaitingTime;
            throw ConfigError("--sampler must be 'fixed' or 'waiting'");
        }();
        if (opt.appendix_literal) opt.manifest.stepper.jump_factor_two = false;
    }

    SimulationResult result = simulate(opt.manifest, opt.threads);

    if (!opt.manifest.output.empty()) {
        write_text(opt.manifest.output, records_to_jsonl(result.records));
        write_text(opt.manifest.output + ".manifest.json", manifest_to_json(opt.manifest).dump(2) + "\n");
    }
    Json summary = stats_to_json(result.stats);
    summary["manifest"] = manifest_to_json(opt.manifest);
    std::cout << summary.dump(2) << '\n';
    return kExitOk;
}

struct TraceOptions {
    int n_atoms = 2;
    std::uint64_t seed = 1;
    double dt = 1e-3;
    double t_max = 25.0;
    bool appendix_literal = false;
    int stride = 10;
    std::string output;
};

// Per-timestep |a_m|^2 in the Jx basis for one seed, as CSV.
int run_trace(const TraceOptions& opt) {
    StepperConfig cfg;
    cfg.dt = opt.dt;
    cfg.t_max = opt.t_max;
    cfg.jump_factor_two = !opt.appendix_literal;
    cfg.sampler = Sampler::FixedStep;

    const HalfInteger j = spin_of_atoms(opt.n_atoms);
    const SpinState initial = change_basis(dicke_state(j, -j, Basis::ZEigen), Basis::XEigen);
    Trajectory traj(initial, CollapseSpec::scaled_equal(), cfg, opt.seed);

    std::ostringstream os;
    os.precision(12);
    os << "t";
    for (int i = 0; i < initial.dim(); ++i) os << ",m=" << initial.m_at(i).str_decimal();
    os << '\n';
    auto emit = [&] {
        const SpinState s = traj.state();
        os << traj.time();
        for (int i = 0; i < s.dim(); ++i) os << ',' << std::norm(s.amps[i]);
        os << '\n';
    };
    emit();
    long steps = 0;
    while (!traj.finished()) {
        traj.step();
        if (++steps % opt.stride == 0 || traj.finished()) emit();
    }
    write_text(opt.output, os.str());
    return kExitOk;
}

struct ProbabilityOptions {
    int n_min = 2;
    int n_max = 40;
    std::string output;
};

int run_probabilities(const ProbabilityOptions& opt) {
    write_text(opt.output, probability_table_csv(probability_table(opt.n_min, opt.n_max)));
    return kExitOk;
}

int run_catalog(int n_atoms, const std::string& output) {
    std::ostringstream os;
    auto dump = [&](int n) {
        for (const CatalogEntry& e : catalog(n)) {
            Json amps = Json::array();
            for (int i = 0; i < e.state.dim(); ++i)
                amps.push_back({e.state.amps[i].real(), e.state.amps[i].imag()});
            os << Json{{"name", e.name},
                       {"n_atoms", e.n_atoms},
                       {"basis", to_string(e.basis)},
                       {"family", to_string(e.family)},
                       {"amps", amps}}
                      .dump()
               << '\n';
        }
    };
    if (n_atoms == 0) {
        for (int n : {2, 3, 4}) dump(n);
    } else {
        dump(n_atoms);
    }
    write_text(output, os.str());
    return kExitOk;
}

struct OracleOptions {
    int n_atoms = 2;
    double t = 1.0;
    long trajectories = 10000;
    std::uint64_t seed = 1;
    double dt = 1e-3;
    bool appendix_literal = false;
    int threads = 1;
};

// Trajectory-ensemble average versus RK4 master-equation propagation.
int run_oracle(const OracleOptions& opt) {
    RunManifest mf;
    mf.n_atoms = opt.n_atoms;
    mf.master_seed = opt.seed;
    mf.trajectories = opt.trajectories;
    mf.stepper.dt = opt.dt;
    mf.stepper.t_max = opt.t;
    mf.stepper.jump_factor_two = !opt.appendix_literal;
    mf.stepper.sampler = Sampler::FixedStep;

    SimulationResult result = simulate(mf, opt.threads);
    const HalfInteger j = spin_of_atoms(opt.n_atoms);
    Matrix mean = Matrix::Zero(j.twice() + 1, j.twice() + 1);
    for (const TrajectoryRecord& rec : result.records)
        mean += rec.final_state.amps * rec.final_state.amps.adjoint();
    mean /= static_cast<double>(result.records.size());
    const DensityMatrix ensemble_avg{j, Basis::XEigen, mean};

    const SpinState initial = change_basis(dicke_state(j, -j, Basis::ZEigen), Basis::XEigen);
    const DensityMatrix oracle =
        integrate(DensityMatrix::pure(initial), CollapseSpec::scaled_equal(), opt.t, opt.dt);

    // Blocked error estimate: spread of per-block trace distances.
    const int blocks = 10;
    const long per_block = opt.trajectories / blocks;
    double sum = 0.0, sum2 = 0.0;
    int used = 0;
    for (int b = 0; b < blocks && per_block > 0; ++b) {
        Matrix bm = Matrix::Zero(mean.rows(), mean.cols());
        for (long k = b * per_block; k < (b + 1) * per_block; ++k)
            bm += result.records[static_cast<std::size_t>(k)].final_state.amps *
                  result.records[static_cast<std::size_t>(k)].final_state.amps.adjoint();
        bm /= static_cast<double>(per_block);
        const double td = trace_distance({j, Basis::XEigen, bm}, oracle);
        sum += td;
        sum2 += td * td;
        ++used;
    }
    double block_sigma = 0.0;
    if (used > 1) {
        const double mean_td = sum / used;
        block_sigma = std::sqrt(std::max(0.0, sum2 / used - mean_td * mean_td) / (used - 1));
    }

    Json out{{"n_atoms", opt.n_atoms},
             {"t", opt.t},
             {"trajectories", opt.trajectories},
             {"jump_factor_two", mf.stepper.jump_factor_two},
             {"trace_distance", trace_distance(ensemble_avg, oracle)},
             {"block_sigma", block_sigma}};
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

struct NullspaceOptions {
    int n_atoms = 2;
    double gamma01 = 1.0;
    double gamma10 = 1.0;
    bool scaled = false;
};

int run_nullspace(const NullspaceOptions& opt) {
    const CollapseSpec spec = opt.scaled ? CollapseSpec::scaled_equal()
                                         : CollapseSpec::rates(opt.gamma01, opt.gamma10);
    const NullspaceResult ns = liouvillian_nullspace(spec, spin_of_atoms(opt.n_atoms));
    Json zeros = Json::array();
    for (Eigen::Index i = 0; i < ns.eigenvalues.size(); ++i)
        if (std::abs(ns.eigenvalues[i]) < 1e-9)
            zeros.push_back({ns.eigenvalues[i].real(), ns.eigenvalues[i].imag()});
    Json out{{"n_atoms", opt.n_atoms},
             {"gamma01", spec.gamma01},
             {"gamma10", spec.gamma10},
             {"scaled", spec.scaled},
             {"zero_eigenvalue_count", ns.zero_count},
             {"max_real_part", ns.max_real_part},
             {"zero_eigenvalues", zeros}};
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spincycle: collective-spin quantum-jump trajectories, entangled-state cycles, "
                 "and their master-equation referee"};
    app.require_subcommand(1);

    SimulateOptions sim;
    sim.manifest.output = "records.jsonl";
    CLI::App* c_sim = app.add_subcommand("simulate", "Run a seeded trajectory ensemble");
    c_sim->add_option("--n-atoms", sim.manifest.n_atoms, "Number of atoms N");
    c_sim->add_option("--trajectories", sim.manifest.trajectories, "Ensemble size");
    c_sim->add_option("--seed", sim.manifest.master_seed, "Master seed");
    c_sim->add_option("--dt", sim.manifest.stepper.dt, "Scaled time step");
    c_sim->add_option("--t-max", sim.manifest.stepper.t_max, "Scaled horizon");
    c_sim->add_option("--sampler", sim.sampler, "'fixed' or 'waiting'");
    c_sim->add_flag("--appendix-literal", sim.appendix_literal,
                    "Literal jump probability <Jx^2> dt instead of 2 <Jx^2> dt");
    c_sim->add_option("--epsilon", sim.manifest.epsilon, "Classification threshold");
    c_sim->add_option("--output", sim.manifest.output, "Records path (JSONL); empty for none");
    c_sim->add_option("--threads", sim.threads, "Worker count (results identical for any value)");
    c_sim->add_option("--manifest", sim.manifest_path, "Re-run a persisted manifest verbatim");

    TraceOptions trace;
    CLI::App* c_trace = app.add_subcommand("trace", "Per-timestep Jx-basis populations for one seed");
    c_trace->add_option("--n-atoms", trace.n_atoms, "Number of atoms N");
    c_trace->add_option("--seed", trace.seed, "Trajectory seed");
    c_trace->add_option("--dt", trace.dt, "Scaled time step");
    c_trace->add_option("--t-max", trace.t_max, "Scaled horizon");
    c_trace->add_flag("--appendix-literal", trace.appendix_literal, "Literal jump probability");
    c_trace->add_option("--stride", trace.stride, "Emit every k-th step")->check(CLI::PositiveNumber);
    c_trace->add_option("--output", trace.output, "CSV path (default stdout)");

    ProbabilityOptions prob;
    CLI::App* c_prob = app.add_subcommand("probabilities", "Closed-form outcome probability table");
    c_prob->add_option("--n-min", prob.n_min, "Smallest N");
    c_prob->add_option("--n-max", prob.n_max, "Largest N (<= 200)");
    c_prob->add_option("--output", prob.output, "CSV path (default stdout)");

    int catalog_n = 0;
    std::string catalog_out;
    CLI::App* c_cat = app.add_subcommand("catalog", "Dump reference states (JSONL)");
    c_cat->add_option("--n-atoms", catalog_n, "2, 3 or 4; default all");
    c_cat->add_option("--output", catalog_out, "Path (default stdout)");

    OracleOptions oracle;
    CLI::App* c_oracle =
        app.add_subcommand("oracle", "Compare the trajectory ensemble with the master equation");
    c_oracle->add_option("--n-atoms", oracle.n_atoms, "Number of atoms N");
    c_oracle->add_option("--t", oracle.t, "Comparison time (scaled)");
    c_oracle->add_option("--trajectories", oracle.trajectories, "Ensemble size");
    c_oracle->add_option("--seed", oracle.seed, "Master seed");
    c_oracle->add_option("--dt", oracle.dt, "Step for both stepper and RK4");
    c_oracle->add_flag("--appendix-literal", oracle.appendix_literal, "Literal jump probability");
    c_oracle->add_option("--threads", oracle.threads, "Worker count");

    NullspaceOptions ns;
    CLI::App* c_ns = app.add_subcommand("nullspace", "Zero eigenvalues of the dynamics generator");
    c_ns->add_option("--n-atoms", ns.n_atoms, "Number of atoms N");
    c_ns->add_option("--gamma01", ns.gamma01, "Raman rate 0 -> 1");
    c_ns->add_option("--gamma10", ns.gamma10, "Raman rate 1 -> 0");
    c_ns->add_flag("--scaled", ns.scaled, "Use the scaled equal-rate form");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (app.got_subcommand(c_sim)) return run_simulate(sim);
        if (app.got_subcommand(c_trace)) return run_trace(trace);
        if (app.got_subcommand(c_prob)) return run_probabilities(prob);
        if (app.got_subcommand(c_cat)) return run_catalog(catalog_n, catalog_out);
        if (app.got_subcommand(c_oracle)) return run_oracle(oracle);
        if (app.got_subcommand(c_ns)) return run_nullspace(ns);
    } catch (const TraceDrift& e) {
        std::cerr << "numerical guard: " << e.what() << '\n';
        return kExitNumericalGuard;
    } catch (const ZeroJumpAmplitude& e) {
        std::cerr << "numerical guard: " << e.what() << '\n';
        return kExitNumericalGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
