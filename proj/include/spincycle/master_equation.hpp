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

#ifndef SPINCYCLE_MASTER_EQUATION_HPP_
#define SPINCYCLE_MASTER_EQUATION_HPP_

#include <vector>

#include "spincycle/trajectory.hpp"

namespace spincycle {

/// Collective-spin density matrix over m = -j..+j in a tagged basis.
struct DensityMatrix {
    HalfInteger j;
    Basis basis = Basis::ZEigen;
    Matrix rho;

    int dim() const { return j.twice() + 1; }

    static DensityMatrix pure(const SpinState& s) {
        return {s.j, s.basis, s.amps * s.amps.adjoint()};
    }

    double trace_error() const { return std::abs(rho.trace() - Complex(1.0, 0.0)); }

    /// Hermitian within herm_tol, unit trace within trace_tol, eigenvalues
    /// above eig_floor.
    void check_valid(double herm_tol = 1e-12, double trace_tol = 1e-10,
                     double eig_floor = -1e-10) const;
};

DensityMatrix change_basis(const DensityMatrix& rho, Basis target);

/// Right-hand side 2 X rho X^dag - X^dag X rho - rho X^dag X, with X = Jx in
/// scaled time for equal rates. Traceless and Hermitian.
DensityMatrix lindblad_rhs(const DensityMatrix& rho, const CollapseSpec& spec);

/// Fixed-step RK4 propagation to time t. Throws TraceDrift when the trace
/// leaves 1 by more than 1e-6 anywhere along the way.
DensityMatrix integrate(const DensityMatrix& rho0, const CollapseSpec& spec, double t,
                        double dt = 1e-3);

/// Dense matrix of the generator acting on column-major vec(rho).
Matrix liouvillian_matrix(const CollapseSpec& spec, HalfInteger j, Basis basis = Basis::ZEigen);

struct NullspaceResult {
    int zero_count = 0;                   // eigenvalues with |lambda| < 1e-9
    double max_real_part = 0.0;           // largest Re(lambda) over the spectrum
    Eigen::VectorXcd eigenvalues;
    std::vector<Matrix> stationary_basis;  // null vectors reshaped to matrices
    Basis basis = Basis::ZEigen;
};

/// Dense eigensolve of the generator; guards (2j+1)^2 <= 4096.
NullspaceResult liouvillian_nullspace(const CollapseSpec& spec, HalfInteger j,
                                      Basis basis = Basis::ZEigen);

/// (1/2) ||a - b||_1 over matching bases.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace spincycle

#endif  // SPINCYCLE_MASTER_EQUATION_HPP_
