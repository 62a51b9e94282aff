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

#include "spincycle/state_catalog.hpp"

using namespace spincycle;

namespace {

HalfInteger half(int twice) { return HalfInteger::from_twice(twice); }

}  // namespace

TEST_CASE("catalog inventory") {
    CHECK(catalog(2).size() == 6);   // 3 states x 2 bases
    CHECK(catalog(3).size() == 8);   // 4 states x 2 bases
    CHECK(catalog(4).size() == 10);  // 5 states x 2 bases
    CHECK_THROWS_AS(catalog(5), std::invalid_argument);
    CHECK_THROWS_AS(catalog(1), std::invalid_argument);

    for (int n : {2, 3, 4}) {
        for (const CatalogEntry& e : catalog(n)) {
            CHECK(e.n_atoms == n);
            CHECK(e.state.j.twice() == n);
            CHECK(std::abs(e.state.norm2() - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("every Jz entry is the rotation of its Jx definition") {
    for (int n : {2, 3, 4}) {
        const std::vector<CatalogEntry> entries = catalog(n);
        for (const CatalogEntry& x_entry : entries) {
            if (x_entry.basis != Basis::XEigen) continue;
            for (const CatalogEntry& z_entry : entries) {
                if (z_entry.basis != Basis::ZEigen || z_entry.name != x_entry.name) continue;
                const double f = fidelity(change_basis(x_entry.state, Basis::ZEigen), z_entry.state);
                INFO("state ", x_entry.name, " N=", n);
                CHECK(f >= 1.0 - 1e-12);
            }
        }
    }
}

TEST_CASE("printed closed forms") {
    SUBCASE("chi4+(1) in the Jz basis is the four-qubit GHZ combination") {
        const CatalogEntry e = catalog_lookup(4, "chi+(1)").at(1);
        REQUIRE(e.basis == Basis::ZEigen);
        CHECK(std::abs(e.state.amps[0]) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
        CHECK(std::abs(e.state.amps[4]) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
        for (int i : {1, 2, 3}) CHECK(std::abs(e.state.amps[i]) == 0.0);
        CHECK(fidelity(e.state, change_basis(chi_state(4, half(2), +1), Basis::ZEigen)) >=
              1.0 - 1e-12);
    }

    SUBCASE("chi3+(1/2) carries weight sqrt(3)/2 on |000>_z") {
        const CatalogEntry e = catalog_lookup(3, "chi+(1/2)").at(1);
        REQUIRE(e.basis == Basis::ZEigen);
        CHECK(std::abs(e.state.amp(half(-3))) ==
              doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
    }

    SUBCASE("chi4+(2) is the equal eight-term superposition: GHZ plus the double excitation") {
        const CatalogEntry e = catalog_lookup(4, "chi+(2)").at(1);
        REQUIRE(e.basis == Basis::ZEigen);
        CHECK(std::abs(e.state.amps[0]) == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-14));
        CHECK(std::abs(e.state.amps[4]) == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-14));
        CHECK(std::abs(e.state.amps[2]) ==
              doctest::Approx(std::sqrt(6.0) / std::sqrt(8.0)).epsilon(1e-14));
    }

    SUBCASE("|2,0>_x shares the chi4+(2) support with different weights") {
        const SpinState dicke_z = catalog_lookup(4, "dicke(2,0)").at(1).state;
        const SpinState chi_z = catalog_lookup(4, "chi+(2)").at(1).state;
        for (int i = 0; i < 5; ++i) {
            const bool dicke_support = std::abs(dicke_z.amps[i]) > 1e-14;
            const bool chi_support = std::abs(chi_z.amps[i]) > 1e-14;
            CHECK(dicke_support == chi_support);
        }
        const double ratio_edge = std::norm(dicke_z.amps[0]) / std::norm(chi_z.amps[0]);
        const double ratio_mid = std::norm(dicke_z.amps[2]) / std::norm(chi_z.amps[2]);
        CHECK(std::abs(ratio_edge - ratio_mid) > 1.0);  // not proportional
    }

    SUBCASE("closed forms obey the jump relation Jx chi+- = m chi-+") {
        // The relative signs inside the printed Jz expansions are not free:
        // applying Jx to each chi+ entry must land exactly on (m) chi-.
        for (int n : {2, 3, 4}) {
            for (int tm = n % 2 == 0 ? 2 : 1; tm <= n; tm += 2) {
                const std::string plus = "chi+(" + half(tm).str() + ")";
                const std::string minus = "chi-(" + half(tm).str() + ")";
                const SpinState chi_p = catalog_lookup(n, plus).at(1).state;
                const SpinState chi_m = catalog_lookup(n, minus).at(1).state;
                SpinState jumped = chi_p;
                jumped.amps = ladder_operators(chi_p.j).x.mat * chi_p.amps;
                const double norm = jumped.amps.norm();
                CHECK(norm == doctest::Approx(tm / 2.0).epsilon(1e-12));
                jumped.amps /= norm;
                CHECK(fidelity(jumped, chi_m) >= 1.0 - 1e-12);
            }
        }
    }

    SUBCASE("family tags follow the per-basis descriptions") {
        CHECK(catalog_lookup(3, "chi+(3/2)").at(0).family == StateFamily::GHZ);
        CHECK(catalog_lookup(3, "chi+(1/2)").at(0).family == StateFamily::G);
        CHECK(catalog_lookup(4, "chi+(1)").at(1).family == StateFamily::GHZ);
        CHECK(catalog_lookup(2, "chi-(1)").at(1).family == StateFamily::W);
        CHECK(catalog_lookup(4, "dicke(2,0)").at(0).family == StateFamily::Dicke);
    }
}

TEST_CASE("fidelity") {
    const SpinState chi_plus = chi_state(3, half(3), +1);
    const SpinState chi_minus = chi_state(3, half(3), -1);
    CHECK(fidelity(chi_plus, chi_plus) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fidelity(chi_plus, chi_minus) <= 1e-14);

    SUBCASE("global-phase free") {
        SpinState rotated = chi_plus;
        rotated.amps *= std::exp(Complex(0.0, 1.234));
        CHECK(fidelity(chi_plus, rotated) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("auto-aligns bases") {
        const SpinState z = change_basis(chi_minus, Basis::ZEigen);
        CHECK(fidelity(chi_minus, z) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("rejects mismatched j and unnormalized input") {
        CHECK_THROWS_AS(fidelity(chi_plus, chi_state(4, half(2), +1)), std::invalid_argument);
        SpinState bad = chi_plus;
        bad.amps *= 0.5;
        CHECK_THROWS_AS(fidelity(chi_plus, bad), std::invalid_argument);
    }
}
