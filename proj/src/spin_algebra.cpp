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

#include "spincycle/spin_algebra.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "spincycle/detail/factorials.hpp"

namespace spincycle {

namespace {

using detail::int_pow;
using detail::log_factorial;

// d(-pi/2) per j, built once and shared read-only across trajectory workers.
const Matrix& x_rotation(HalfInteger j) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const Matrix>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[j.twice()];
    if (!slot) {
        Eigen::MatrixXd d = wigner_d_matrix(j, -std::numbers::pi / 2.0);
        slot = std::make_unique<const Matrix>(d.cast<Complex>());
    }
    return *slot;
}

}  // namespace

LadderOperators ladder_operators(HalfInteger j) {
    if (j.twice() <= 0) throw std::invalid_argument("ladder_operators: need 2j >= 1");
    const int dim = j.twice() + 1;
    Matrix plus = Matrix::Zero(dim, dim);
    // <m+1|J+|m> = sqrt(j(j+1) - m(m+1)); with doubled integers the radicand
    // is (2j(2j+2) - 2m(2m+2))/4, exact.
    for (int i = 0; i + 1 < dim; ++i) {
        const int tm = 2 * i - j.twice();
        const double radicand = (static_cast<double>(j.twice()) * (j.twice() + 2) -
                                 static_cast<double>(tm) * (tm + 2)) /
                                4.0;
        plus(i + 1, i) = std::sqrt(radicand);
    }
    LadderOperators out;
    out.plus = {j, Basis::ZEigen, plus};
    out.minus = {j, Basis::ZEigen, plus.adjoint()};
    out.x = {j, Basis::ZEigen, 0.5 * (plus + Matrix(plus.adjoint()))};
    return out;
}

OperatorMatrix jy_operator(HalfInteger j) {
    LadderOperators l = ladder_operators(j);
    const Complex half_over_i(0.0, -0.5);  // 1/(2i)
    return {j, Basis::ZEigen, half_over_i * (l.plus.mat - l.minus.mat)};
}

double wigner_d(HalfInteger j, HalfInteger m, HalfInteger n, double beta) {
    if (j.twice() < 0) throw std::invalid_argument("wigner_d: negative j");
    if (!m_in_spectrum(j, m) || !m_in_spectrum(j, n))
        throw std::invalid_argument("wigner_d: m, n must lie in the spin-j spectrum");

    const int jpm = (j.twice() + m.twice()) / 2;
    const int jmm = (j.twice() - m.twice()) / 2;
    const int jpn = (j.twice() + n.twice()) / 2;
    const int jmn = (j.twice() - n.twice()) / 2;
    const int mn = (m.twice() - n.twice()) / 2;  // m - n, an integer

    const double log_pref =
        0.5 * (log_factorial(jpn) + log_factorial(jmn) + log_factorial(jpm) + log_factorial(jmm));
    const double c = std::cos(beta / 2.0);
    const double s = std::sin(beta / 2.0);

    // Only terms whose factorial arguments are all non-negative contribute.
    const int k_lo = std::max(0, -mn);
    const int k_hi = std::min(jpn, jmm);
    double sum = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) {
        const double log_den = log_factorial(k) + log_factorial(jpn - k) + log_factorial(jmm - k) +
                               log_factorial(k + mn);
        const double sign = ((k + mn) % 2 == 0) ? 1.0 : -1.0;
        const int c_exp = j.twice() - 2 * k - mn;
        const int s_exp = 2 * k + mn;
        sum += sign * std::exp(log_pref - log_den) * int_pow(c, c_exp) * int_pow(s, s_exp);
    }
    return sum;
}

Eigen::MatrixXd wigner_d_matrix(HalfInteger j, double beta) {
    const int dim = j.twice() + 1;
    Eigen::MatrixXd d(dim, dim);
    for (int row = 0; row < dim; ++row) {
        const HalfInteger m = HalfInteger::from_twice(2 * row - j.twice());
        for (int col = 0; col < dim; ++col) {
            const HalfInteger n = HalfInteger::from_twice(2 * col - j.twice());
            d(row, col) = wigner_d(j, m, n, beta);
        }
    }
    return d;
}

OperatorMatrix rotation_oracle(HalfInteger j, double beta) {
    if (!std::isfinite(beta)) throw std::invalid_argument("rotation_oracle: beta must be finite");
    const Matrix jy = jy_operator(j).mat;
    Eigen::SelfAdjointEigenSolver<Matrix> es(jy);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("rotation_oracle: eigendecomposition failed");
    const Eigen::VectorXd evals = es.eigenvalues();
    Vector phases(evals.size());
    for (Eigen::Index i = 0; i < evals.size(); ++i)
        phases[i] = std::exp(Complex(0.0, -beta * evals[i]));
    Matrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return {j, Basis::ZEigen, u};
}

SpinState change_basis(const SpinState& state, Basis target) {
    state.check_consistent(1e-9);
    if (state.basis == target) return state;
    const Matrix& w = x_rotation(state.j);
    SpinState out = state;
    out.basis = target;
    if (target == Basis::XEigen) {
        out.amps = w * state.amps;  // x_m = sum_n d_{m,n}(-pi/2) z_n
    } else {
        out.amps = w.transpose() * state.amps;
    }
    return out;
}

OperatorMatrix change_basis(const OperatorMatrix& op, Basis target) {
    if (op.basis == target) return op;
    const Matrix& w = x_rotation(op.j);
    OperatorMatrix out;
    out.j = op.j;
    out.basis = target;
    if (target == Basis::XEigen) {
        out.mat = w * op.mat * w.transpose();
    } else {
        out.mat = w.transpose() * op.mat * w;
    }
    return out;
}

SpinState chi_state(int n_atoms, HalfInteger m, int sign) {
    const HalfInteger j = spin_of_atoms(n_atoms);
    if (sign != 1 && sign != -1) throw std::invalid_argument("chi_state: sign must be +1 or -1");
    if (m.twice() <= 0)
        throw std::invalid_argument("chi_state: m must be positive (the m = 0 Dicke state is not a chi state)");
    if (!m_in_spectrum(j, m))
        throw std::invalid_argument("chi_state: m = " + m.str() + " not in the spectrum of j = " + j.str());
    SpinState s;
    s.j = j;
    s.basis = Basis::XEigen;
    s.amps = Vector::Zero(j.twice() + 1);
    const double r = 1.0 / std::numbers::sqrt2;
    s.amps[s.index_of(m)] = r;
    s.amps[s.index_of(-m)] = sign * r;
    s.normalized = true;
    return s;
}

double jx_squared_expectation(const SpinState& state) {
    if (std::abs(state.norm2() - 1.0) > 1e-9)
        throw std::invalid_argument("jx_squared_expectation: requires a normalized state");
    const SpinState x = state.basis == Basis::XEigen ? state : change_basis(state, Basis::XEigen);
    double sum = 0.0;
    double weight = 0.0;
    for (int i = 0; i < x.dim(); ++i) {
        const double w = std::norm(x.amps[i]);
        sum += x.m_at(i).squared() * w;
        weight += w;
    }
    // Rayleigh quotient: dividing by the actual squared norm keeps spectrum
    // values like m^2 = N/4 exact at the witness boundary.
    return sum / weight;
}

}  // namespace spincycle
