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

#ifndef SPINCYCLE_ENSEMBLE_HPP_
#define SPINCYCLE_ENSEMBLE_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "spincycle/cycle_analysis.hpp"
#include "spincycle/version.hpp"

namespace spincycle {

using Json = nlohmann::ordered_json;

/// Everything needed to reproduce an ensemble bit-for-bit on one platform.
struct RunManifest {
    int n_atoms = 2;
    std::uint64_t master_seed = 1;
    long trajectories = 1000;
    StepperConfig stepper;
    double epsilon = 1e-6;
    std::string output;  // records path; empty means in-memory only
    std::string tool_version = kToolVersion;

    void validate() const;
};

struct SimulationResult {
    std::vector<TrajectoryRecord> records;  // in trajectory-index order
    EnsembleStats stats;
};

/// Runs the manifest's ensemble at the scaled equal-rate working point from
/// |N/2,-N/2>_z. Trajectory k always uses the stream derived from
/// (master_seed, k), so results are identical for every worker count.
SimulationResult simulate(const RunManifest& manifest, int threads = 1);

Json manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const Json& j);

Json record_to_json(const TrajectoryRecord& rec);
TrajectoryRecord record_from_json(const Json& j);

/// One JSON object per line, in trajectory order.
std::string records_to_jsonl(std::span<const TrajectoryRecord> records);

Json stats_to_json(const EnsembleStats& stats);

/// Closed-form outcome-probability table rows for one N: the m = 0 row
/// carries p_steady (exactly 0 for odd N) and the Stirling limit; each m > 0
/// row carries p_cycle; the Gaussian approximation fills every row.
struct ProbabilityRow {
    int n_atoms = 0;
    HalfInteger m;
    bool steady_row = false;
    double p_steady = 0.0;   // meaningful on the steady row
    double p_cycle = 0.0;    // meaningful on m > 0 rows
    double gaussian = 0.0;
    double stirling = 0.0;   // meaningful on the steady row
};

std::vector<ProbabilityRow> probability_table(int n_min, int n_max);

/// CSV with header N,m,p_steady,p_cycle,gaussian,stirling; cells that do not
/// apply to a row are left empty.
std::string probability_table_csv(const std::vector<ProbabilityRow>& rows);

}  // namespace spincycle

#endif  // SPINCYCLE_ENSEMBLE_HPP_
