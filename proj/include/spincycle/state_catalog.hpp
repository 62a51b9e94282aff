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

#ifndef SPINCYCLE_STATE_CATALOG_HPP_
#define SPINCYCLE_STATE_CATALOG_HPP_

#include <string>
#include <vector>

#include "spincycle/spin_algebra.hpp"

namespace spincycle {

/// Entanglement family of the printed form in the entry's basis. The same
/// state can read as GHZ in one product basis and as a G state in another,
/// so the tag belongs to the (state, basis) pair.
enum class StateFamily { GHZ, W, G, Dicke, ChiPlus, ChiMinus, Product, Superposition };

const char* to_string(StateFamily f);

struct CatalogEntry {
    std::string name;
    int n_atoms = 0;
    Basis basis = Basis::ZEigen;
    StateFamily family = StateFamily::Superposition;
    SpinState state;
};

/// Reference states for N = 2, 3, 4: the m = 0 steady Dicke state and every
/// chi pair, each under two entries sharing a name: its Jx-basis definition
/// and its Jz-basis closed form (product-state sums folded into symmetric
/// Dicke components with sqrt(C(N,k)) weights). Rejects other N.
std::vector<CatalogEntry> catalog(int n_atoms);

/// Entries of catalog(n) with the given name.
std::vector<CatalogEntry> catalog_lookup(int n_atoms, const std::string& name);

/// Global-phase-free overlap |<a|b>|^2 in [0, 1]; bases are auto-aligned.
double fidelity(const SpinState& a, const SpinState& b);

}  // namespace spincycle

#endif  // SPINCYCLE_STATE_CATALOG_HPP_
