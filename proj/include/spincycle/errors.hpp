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

#ifndef SPINCYCLE_ERRORS_HPP_
#define SPINCYCLE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace spincycle {

/// Invalid run configuration (rates, step sizes, atom counts, paths).
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// The collapse operator annihilated the state; no post-jump state exists.
struct ZeroJumpAmplitude : std::runtime_error {
    explicit ZeroJumpAmplitude(const std::string& what) : std::runtime_error(what) {}
};

/// Density-matrix trace left its guard band during integration.
struct TraceDrift : std::runtime_error {
    explicit TraceDrift(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spincycle

#endif  // SPINCYCLE_ERRORS_HPP_
