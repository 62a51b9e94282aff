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

#ifndef SPINCYCLE_SPIN_STATE_HPP_
#define SPINCYCLE_SPIN_STATE_HPP_

#include <complex>

#include <Eigen/Dense>

#include "spincycle/errors.hpp"
#include "spincycle/half_integer.hpp"

namespace spincycle {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Eigenbasis tag. Every state and operator carries exactly one; mixed-basis
/// arithmetic is rejected at the call sites that combine objects.
enum class Basis { ZEigen, XEigen };

inline const char* to_string(Basis b) { return b == Basis::ZEigen ? "z" : "x"; }

/// Pure collective-spin state of N = 2j two-level atoms: amplitudes over
/// m = -j..+j (ascending, one shared layout project-wide) in a tagged
/// eigenbasis. States mid no-jump evolution carry normalized == false and a
/// squared norm <= 1.
struct SpinState {
    HalfInteger j;
    Basis basis = Basis::ZEigen;
    Vector amps;
    bool normalized = true;

    int dim() const { return j.twice() + 1; }

    int index_of(HalfInteger m) const {
        if (!m_in_spectrum(j, m))
            throw std::invalid_argument("SpinState: m = " + m.str() + " not in spectrum of j = " + j.str());
        return (m.twice() + j.twice()) / 2;
    }

    HalfInteger m_at(int index) const { return HalfInteger::from_twice(2 * index - j.twice()); }

    Complex amp(HalfInteger m) const { return amps[index_of(m)]; }

    double norm2() const { return amps.squaredNorm(); }

    SpinState renormalized() const {
        SpinState out = *this;
        double n = amps.norm();
        if (n <= 0.0) throw std::invalid_argument("SpinState: cannot renormalize the zero vector");
        out.amps /= n;
        out.normalized = true;
        return out;
    }

    /// Structural invariants: amplitude count, norm consistent with the flag.
    void check_consistent(double tol = 1e-12) const {
        if (amps.size() != dim()) throw std::invalid_argument("SpinState: amplitude count != 2j+1");
        double n2 = norm2();
        if (normalized && std::abs(n2 - 1.0) > tol)
            throw std::invalid_argument("SpinState: normalized flag set but |norm^2 - 1| > tol");
        if (!normalized && n2 > 1.0 + tol)
            throw std::invalid_argument("SpinState: unnormalized norm^2 exceeds 1");
    }
};

/// Basis state |j, m> in the given eigenbasis.
inline SpinState dicke_state(HalfInteger j, HalfInteger m, Basis basis) {
    SpinState s;
    s.j = j;
    s.basis = basis;
    s.amps = Vector::Zero(j.twice() + 1);
    s.amps[s.index_of(m)] = 1.0;
    s.normalized = true;
    return s;
}

/// <a|b>; requires matching j and basis.
inline Complex inner(const SpinState& a, const SpinState& b) {
    if (a.j != b.j) throw std::invalid_argument("inner: mismatched j");
    if (a.basis != b.basis) throw std::invalid_argument("inner: mixed-basis inner product rejected");
    return a.amps.dot(b.amps);
}

}  // namespace spincycle

#endif  // SPINCYCLE_SPIN_STATE_HPP_
