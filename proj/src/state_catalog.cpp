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

#include "spincycle/state_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <utility>

namespace spincycle {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kHalfSqrt3 = std::sqrt(3.0) / 2.0;

SpinState make_state(int twice_j, Basis basis,
                     std::initializer_list<std::pair<int, double>> components) {
    SpinState s;
    s.j = HalfInteger::from_twice(twice_j);
    s.basis = basis;
    s.amps = Vector::Zero(twice_j + 1);
    for (const auto& [twice_m, amp] : components)
        s.amps[s.index_of(HalfInteger::from_twice(twice_m))] = amp;
    s.normalized = true;
    return s;
}

CatalogEntry entry(std::string name, int n, Basis basis, StateFamily family, SpinState state) {
    return {std::move(name), n, basis, family, std::move(state)};
}

std::vector<CatalogEntry> catalog2() {
    std::vector<CatalogEntry> out;
    // Steady state |1,0>_x = (|00>_z - |11>_z)/sqrt(2), a Bell state.
    out.push_back(entry("dicke(1,0)", 2, Basis::XEigen, StateFamily::Dicke,
                        make_state(2, Basis::XEigen, {{0, 1.0}})));
    out.push_back(entry("dicke(1,0)", 2, Basis::ZEigen, StateFamily::GHZ,
                        make_state(2, Basis::ZEigen, {{-2, kInvSqrt2}, {2, -kInvSqrt2}})));
    // chi2+(1) = (|00>_z + |11>_z)/sqrt(2).
    out.push_back(entry("chi+(1)", 2, Basis::XEigen, StateFamily::ChiPlus,
                        make_state(2, Basis::XEigen, {{-2, kInvSqrt2}, {2, kInvSqrt2}})));
    out.push_back(entry("chi+(1)", 2, Basis::ZEigen, StateFamily::GHZ,
                        make_state(2, Basis::ZEigen, {{-2, kInvSqrt2}, {2, kInvSqrt2}})));
    // chi2-(1) = |1,0>_z = (|01>_z + |10>_z)/sqrt(2).
    out.push_back(entry("chi-(1)", 2, Basis::XEigen, StateFamily::ChiMinus,
                        make_state(2, Basis::XEigen, {{-2, -kInvSqrt2}, {2, kInvSqrt2}})));
    out.push_back(entry("chi-(1)", 2, Basis::ZEigen, StateFamily::W,
                        make_state(2, Basis::ZEigen, {{0, 1.0}})));
    return out;
}

std::vector<CatalogEntry> catalog3() {
    std::vector<CatalogEntry> out;
    // chi3+-(1/2): G states in the Jx basis, product + W superpositions in Jz.
    // The relative sign in the chi+ closed form is pinned by the jump
    // relation Jx chi+ = (1/2) chi-: the W component enters with -1/2.
    out.push_back(entry("chi+(1/2)", 3, Basis::XEigen, StateFamily::G,
                        make_state(3, Basis::XEigen, {{-1, kInvSqrt2}, {1, kInvSqrt2}})));
    out.push_back(entry("chi+(1/2)", 3, Basis::ZEigen, StateFamily::Superposition,
                        make_state(3, Basis::ZEigen, {{-3, kHalfSqrt3}, {1, -0.5}})));
    out.push_back(entry("chi-(1/2)", 3, Basis::XEigen, StateFamily::G,
                        make_state(3, Basis::XEigen, {{-1, -kInvSqrt2}, {1, kInvSqrt2}})));
    out.push_back(entry("chi-(1/2)", 3, Basis::ZEigen, StateFamily::Superposition,
                        make_state(3, Basis::ZEigen, {{-1, 0.5}, {3, -kHalfSqrt3}})));
    // chi3+-(3/2): GHZ states in the Jx basis.
    out.push_back(entry("chi+(3/2)", 3, Basis::XEigen, StateFamily::GHZ,
                        make_state(3, Basis::XEigen, {{-3, kInvSqrt2}, {3, kInvSqrt2}})));
    out.push_back(entry("chi+(3/2)", 3, Basis::ZEigen, StateFamily::Superposition,
                        make_state(3, Basis::ZEigen, {{-3, 0.5}, {1, kHalfSqrt3}})));
    out.push_back(entry("chi-(3/2)", 3, Basis::XEigen, StateFamily::GHZ,
                        make_state(3, Basis::XEigen, {{-3, -kInvSqrt2}, {3, kInvSqrt2}})));
    out.push_back(entry("chi-(3/2)", 3, Basis::ZEigen, StateFamily::Superposition,
                        make_state(3, Basis::ZEigen, {{-1, kHalfSqrt3}, {3, 0.5}})));
    return out;
}

std::vector<CatalogEntry> catalog4() {
    const double inv_sqrt8 = 1.0 / std::sqrt(8.0);
    const double sqrt_3_8 = std::sqrt(3.0 / 8.0);
    std::vector<CatalogEntry> out;
    // Steady state |2,0>_x; same Jz support as chi4+(2) but different weights.
    out.push_back(entry("dicke(2,0)", 4, Basis::XEigen, StateFamily::Dicke,
                        make_state(4, Basis::XEigen, {{0, 1.0}})));
    out.push_back(entry("dicke(2,0)", 4, Basis::ZEigen, StateFamily::Superposition,
                        make_state(4, Basis::ZEigen, {{-4, sqrt_3_8}, {0, -0.5}, {4, sqrt_3_8}})));
    // m = 1 cycle: GHZ <-> G in the Jz basis.
    out.push_back(entry("chi+(1)", 4, Basis::XEigen, StateFamily::G,
                        make_state(4, Basis::XEigen, {{-2, kInvSqrt2}, {2, kInvSqrt2}})));
    out.push_back(entry("chi+(1)", 4, Basis::ZEigen, StateFamily::GHZ,
                        make_state(4, Basis::ZEigen, {{-4, kInvSqrt2}, {4, -kInvSqrt2}})));
    out.push_back(entry("chi-(1)", 4, Basis::XEigen, StateFamily::G,
                        make_state(4, Basis::XEigen, {{-2, -kInvSqrt2}, {2, kInvSqrt2}})));
    out.push_back(entry("chi-(1)", 4, Basis::ZEigen, StateFamily::G,
                        make_state(4, Basis::ZEigen, {{-2, kInvSqrt2}, {2, -kInvSqrt2}})));
    // m = 2 cycle: equal eight-term superposition <-> G in the Jz basis.
    out.push_back(entry("chi+(2)", 4, Basis::XEigen, StateFamily::GHZ,
                        make_state(4, Basis::XEigen, {{-4, kInvSqrt2}, {4, kInvSqrt2}})));
    out.push_back(entry("chi+(2)", 4, Basis::ZEigen, StateFamily::Superposition,
                        make_state(4, Basis::ZEigen,
                                   {{-4, inv_sqrt8}, {0, std::sqrt(6.0) * inv_sqrt8}, {4, inv_sqrt8}})));
    out.push_back(entry("chi-(2)", 4, Basis::XEigen, StateFamily::GHZ,
                        make_state(4, Basis::XEigen, {{-4, -kInvSqrt2}, {4, kInvSqrt2}})));
    out.push_back(entry("chi-(2)", 4, Basis::ZEigen, StateFamily::G,
                        make_state(4, Basis::ZEigen, {{-2, kInvSqrt2}, {2, kInvSqrt2}})));
    return out;
}

}  // namespace

const char* to_string(StateFamily f) {
    switch (f) {
        case StateFamily::GHZ: return "ghz";
        case StateFamily::W: return "w";
        case StateFamily::G: return "g";
        case StateFamily::Dicke: return "dicke";
        case StateFamily::ChiPlus: return "chi_plus";
        case StateFamily::ChiMinus: return "chi_minus";
        case StateFamily::Product: return "product";
        default: return "superposition";
    }
}

std::vector<CatalogEntry> catalog(int n_atoms) {
    switch (n_atoms) {
        case 2: return catalog2();
        case 3: return catalog3();
        case 4: return catalog4();
        default: throw std::invalid_argument("catalog: reference states exist for N = 2, 3, 4 only");
    }
}

std::vector<CatalogEntry> catalog_lookup(int n_atoms, const std::string& name) {
    std::vector<CatalogEntry> out;
    for (auto& e : catalog(n_atoms))
        if (e.name == name) out.push_back(std::move(e));
    return out;
}

double fidelity(const SpinState& a, const SpinState& b) {
    if (a.j != b.j) throw std::invalid_argument("fidelity: mismatched j");
    if (std::abs(a.norm2() - 1.0) > 1e-9 || std::abs(b.norm2() - 1.0) > 1e-9)
        throw std::invalid_argument("fidelity: both states must be normalized");
    const SpinState b_aligned = b.basis == a.basis ? b : change_basis(b, a.basis);
    return std::clamp(std::norm(inner(a, b_aligned)), 0.0, 1.0);
}

}  // namespace spincycle
