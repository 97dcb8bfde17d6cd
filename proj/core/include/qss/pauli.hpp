// Copyright 2026 The QSS Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSS_PAULI_HPP
#define QSS_PAULI_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "qss/gf.hpp"

namespace qss {

using cx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// p-th root of unity exp(2*pi*i*t/p).
cx root_of_unity(int t, int p);

/// Generalized Pauli word w^t * X^{a_1}Z^{b_1} x ... x X^{a_n}Z^{b_n} on n
/// qupits of dimension p, stored in X-before-Z normal form per coordinate.
/// X shifts |j> to |j+1>, Z multiplies |j> by w^j.  Keeping the phase group
/// at the p-th roots of unity means p = 2 stays in {+1, -1} and no factors
/// of i ever appear.
struct PauliWord {
    int p = 0;
    int n = 0;
    int phase_exp = 0;
    FpVector x;
    FpVector z;

    PauliWord() = default;
    PauliWord(int p, int n, int phase_exp, FpVector x_vec, FpVector z_vec);

    static PauliWord identity(int p, int n);
    static PauliWord x_type(int p, const FpVector& exps, int phase_exp = 0);
    static PauliWord z_type(int p, const FpVector& exps, int phase_exp = 0);

    bool is_identity_up_to_phase() const { return weight(x) == 0 && weight(z) == 0; }
    int support_weight() const;

    /// Text form "w^t X[a1..an] Z[b1..bn]".
    std::string to_string() const;

    bool operator==(const PauliWord& o) const;
};

/// Normal form of the product PQ.  Moving each Z^b in P past an X^c in Q
/// on the same coordinate contributes w^{b*c}.
PauliWord pauli_mul(const PauliWord& lhs, const PauliWord& rhs);
PauliWord pauli_pow(const PauliWord& word, int e);
PauliWord pauli_inverse(const PauliWord& word);

/// Symplectic form sum(a_i d_i - b_i c_i) for lhs = X^a Z^b, rhs = X^c Z^d.
/// Satisfies matrix(rhs) matrix(lhs) = w^exp matrix(lhs) matrix(rhs); zero
/// exactly when the words commute.
int commutation_exponent(const PauliWord& lhs, const PauliWord& rhs);

/// Dense unitary realization on p^n dimensions (capped).
CMatrix pauli_matrix(const PauliWord& word);

/// Abelian group of Pauli words given by independent, pairwise commuting
/// generators.  eigen_exp[i] is the exponent of the desired eigenvalue
/// w^{eigen_exp[i]} of generators[i] on the stabilized subspace; the stored
/// words themselves are phase-free.
struct Stabilizer {
    int p = 0;
    int n = 0;
    std::vector<PauliWord> generators;
    std::vector<int> eigen_exp;

    Stabilizer() = default;
    Stabilizer(int p, int n, std::vector<PauliWord> gens, std::vector<int> eigen_exps);

    int n_generators() const { return static_cast<int>(generators.size()); }
    long long group_size() const;

    /// Group element for a generator-exponent tuple, with the eigenvalue
    /// phases folded in: a generator meant to have eigenvalue w^e enters
    /// the sum as w^{-e} times the phase-free word.
    PauliWord element(const std::vector<int>& exps) const;
};

/// Stabilizer with X-type generators from the rows of x_checks and Z-type
/// generators from the rows of z_checks.  Commutation requires every x-row
/// to be orthogonal to every z-row mod p; violations name the offending
/// pair.
Stabilizer css_stabilizer(const FpMatrix& x_checks, const FpMatrix& z_checks,
                          const std::vector<int>& x_phases, const std::vector<int>& z_phases,
                          int p);

/// Density-normalized projector onto the joint eigenspace: the group
/// average sum_{M in S} M / p^n, which has trace one and equals the
/// projector divided by its rank.
CMatrix stabilizer_projector(const Stabilizer& s);

}  // namespace qss

#endif
