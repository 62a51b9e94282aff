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

#include "spincycle/master_equation.hpp"

#include <cmath>

#include "spincycle/errors.hpp"

namespace spincycle {

namespace {

// Collapse operator in the requested basis: Jx for scaled specs, X otherwise.
Matrix collapse_matrix(const CollapseSpec& spec, HalfInteger j, Basis basis) {
    if (spec.scaled) {
        if (basis == Basis::XEigen) {
            const int dim = j.twice() + 1;
            Matrix c = Matrix::Zero(dim, dim);
            for (int i = 0; i < dim; ++i) c(i, i) = (2 * i - j.twice()) / 2.0;
            return c;
        }
        return ladder_operators(j).x.mat;
    }
    OperatorMatrix x = spec.x_operator(j);
    if (basis != Basis::ZEigen) x = change_basis(x, basis);
    return x.mat;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    return out;
}

Matrix rhs_matrix(const Matrix& rho, const Matrix& c, const Matrix& cdc) {
    return 2.0 * (c * rho * c.adjoint()) - cdc * rho - rho * cdc;
}

}  // namespace

void DensityMatrix::check_valid(double herm_tol, double trace_tol, double eig_floor) const {
    if (rho.rows() != dim() || rho.cols() != dim())
        throw std::invalid_argument("DensityMatrix: shape != (2j+1) x (2j+1)");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
        throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
    if (trace_error() > trace_tol)
        throw std::invalid_argument("DensityMatrix: trace differs from 1 beyond tolerance");
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + Matrix(rho.adjoint())),
                                             Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < eig_floor)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue below floor");
}

DensityMatrix change_basis(const DensityMatrix& rho, Basis target) {
    if (rho.basis == target) return rho;
    OperatorMatrix as_op{rho.j, rho.basis, rho.rho};
    OperatorMatrix rotated = change_basis(as_op, target);
    return {rho.j, target, rotated.mat};
}

DensityMatrix lindblad_rhs(const DensityMatrix& rho, const CollapseSpec& spec) {
    spec.validate();
    const Matrix c = collapse_matrix(spec, rho.j, rho.basis);
    const Matrix cdc = c.adjoint() * c;
    return {rho.j, rho.basis, rhs_matrix(rho.rho, c, cdc)};
}

DensityMatrix integrate(const DensityMatrix& rho0, const CollapseSpec& spec, double t, double dt) {
    spec.validate();
    if (t < 0.0) throw std::invalid_argument("integrate: negative time");
    if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");

    const Matrix c = collapse_matrix(spec, rho0.j, rho0.basis);
    const Matrix cdc = c.adjoint() * c;

    DensityMatrix out = rho0;
    auto guard = [&] {
        if (out.trace_error() > 1e-6)
            throw TraceDrift("integrate: density-matrix trace drifted beyond 1e-6");
    };
    guard();

    double remaining = t;
    while (remaining > 0.0) {
        const double h = std::min(dt, remaining);
        const Matrix k1 = rhs_matrix(out.rho, c, cdc);
        const Matrix k2 = rhs_matrix(out.rho + 0.5 * h * k1, c, cdc);
        const Matrix k3 = rhs_matrix(out.rho + 0.5 * h * k2, c, cdc);
        const Matrix k4 = rhs_matrix(out.rho + h * k3, c, cdc);
        out.rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        out.rho = 0.5 * (out.rho + Matrix(out.rho.adjoint()));  // discard roundoff asymmetry
        remaining -= h;
        guard();
    }
    return out;
}

Matrix liouvillian_matrix(const CollapseSpec& spec, HalfInteger j, Basis basis) {
    spec.validate();
    const Matrix c = collapse_matrix(spec, j, basis);
    const Matrix cdc = c.adjoint() * c;
    const Eigen::Index d = c.rows();
    const Matrix id = Matrix::Identity(d, d);
    // Column-major vec: vec(A rho B) = (B^T kron A) vec(rho).
    return 2.0 * kron(c.conjugate(), c) - kron(id, cdc) - kron(cdc.transpose(), id);
}

NullspaceResult liouvillian_nullspace(const CollapseSpec& spec, HalfInteger j, Basis basis) {
    const int dim = j.twice() + 1;
    if (dim * dim > 4096)
        throw ConfigError("liouvillian_nullspace: (2j+1)^2 exceeds the dense eigensolve guard of 4096");

    const Matrix l = liouvillian_matrix(spec, j, basis);
    Eigen::ComplexEigenSolver<Matrix> es(l);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("liouvillian_nullspace: eigensolve failed");

    NullspaceResult out;
    out.basis = basis;
    out.eigenvalues = es.eigenvalues();
    out.max_real_part = es.eigenvalues().real().maxCoeff();
    for (Eigen::Index i = 0; i < out.eigenvalues.size(); ++i) {
        if (std::abs(out.eigenvalues[i]) < 1e-9) {
            ++out.zero_count;
            out.stationary_basis.emplace_back(
                Eigen::Map<const Matrix>(es.eigenvectors().col(i).data(), dim, dim));
        }
    }
    return out;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.j != b.j) throw std::invalid_argument("trace_distance: mismatched j");
    const DensityMatrix b_aligned = b.basis == a.basis ? b : change_basis(b, a.basis);
    Matrix diff = a.rho - b_aligned.rho;
    diff = 0.5 * (diff + Matrix(diff.adjoint()));
    Eigen::SelfAdjointEigenSolver<Matrix> es(diff, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace spincycle
