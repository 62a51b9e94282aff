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

#ifndef SPINCYCLE_SPIN_ALGEBRA_HPP_
#define SPINCYCLE_SPIN_ALGEBRA_HPP_

#include "spincycle/spin_state.hpp"

namespace spincycle {

/// Dense collective-spin operator over m = -j..+j (ascending) in a tagged basis.
struct OperatorMatrix {
    HalfInteger j;
    Basis basis = Basis::ZEigen;
    Matrix mat;

    int dim() const { return j.twice() + 1; }
};

struct LadderOperators {
    OperatorMatrix plus;   // J+
    OperatorMatrix minus;  // J- = (J+)^dagger
    OperatorMatrix x;      // Jx = (J+ + J-)/2
};

/// Collective ladder operators in the Jz eigenbasis,
/// <j,m+1|J+|j,m> = sqrt(j(j+1) - m(m+1)). Rejects 2j <= 0.
LadderOperators ladder_operators(HalfInteger j);

/// Jy = (J+ - J-)/(2i) in the Jz eigenbasis.
OperatorMatrix jy_operator(HalfInteger j);

/// Rotation matrix element d^j_{m,n}(beta) = <j,m|exp(-i beta Jy)|j,n>,
/// evaluated by the factorial sum over all terms with non-negative factorial
/// arguments. Factorials go through log-gamma so large j cannot overflow.
double wigner_d(HalfInteger j, HalfInteger m, HalfInteger n, double beta);

/// Full (2j+1)x(2j+1) real rotation matrix; rows m, columns n, ascending.
/// The matrix is orthogonal: D(beta)^-1 = D(-beta) = D(beta)^T.
Eigen::MatrixXd wigner_d_matrix(HalfInteger j, double beta);

/// Independent referee for wigner_d: exp(-i beta Jy) computed by Hermitian
/// eigendecomposition of Jy. Entries are real up to roundoff.
OperatorMatrix rotation_oracle(HalfInteger j, double beta);

/// Re-expresses a state in the target eigenbasis. The Jx eigenstates are fixed
/// by |j,n>_z = sum_m d^j_{m,n}(-pi/2) |j,m>_x, which pins every sign
/// convention used in this project. Unitary: norms and inner products are
/// preserved, and Z -> X -> Z is the identity.
SpinState change_basis(const SpinState& state, Basis target);

/// Conjugates an operator into the target eigenbasis.
OperatorMatrix change_basis(const OperatorMatrix& op, Basis target);

/// chi state (|j,m>_x + sign |j,-m>_x)/sqrt(2) for j = N/2 and m > 0.
/// The m = 0 Dicke state is not a chi state; m <= 0 is rejected.
SpinState chi_state(int n_atoms, HalfInteger m, int sign);

/// <Jx^2> of a normalized state; equals sum_m m^2 |a_m|^2 in the Jx basis.
/// Rejects unnormalized input.
double jx_squared_expectation(const SpinState& state);

}  // namespace spincycle

#endif  // SPINCYCLE_SPIN_ALGEBRA_HPP_
