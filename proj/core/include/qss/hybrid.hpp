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

#ifndef QSS_HYBRID_HPP
#define QSS_HYBRID_HPP

#include <set>
#include <vector>

#include "qss/codes.hpp"
#include "qss/pauli.hpp"
#include "qss/qsim.hpp"

namespace qss {

/// (k, n) threshold scheme for a two-pit classical secret carried by one
/// qupit per share: a CSS stabilizer built from the parity checks of
/// D_{r-1} (X side) and of D_s^perp (Z side) with r = k-1, s = n-r-1.  The
/// two secret digits ride on the eigenvalue phases of the distinguished
/// rows R and S.
///
/// Requires n <= 2k-2 and prime p >= n.  p = 2 is admitted: the
/// construction degenerates to the two-qubit case cleanly even though odd
/// p is the typical setting.
struct HybridScheme {
    int p = 0;
    int n = 0;
    int k = 0;
    int r = 0;  // k - 1
    int s = 0;  // n - r - 1
    FpMatrix x_checks;  // parity checks of D_{r-1}; row row_r_index is R
    FpMatrix z_checks;  // generators of D_s; row row_s_index is S
    int row_r_index = -1;
    int row_s_index = -1;

    int n_generators() const { return x_checks.n_rows() + z_checks.n_rows(); }
    SubsystemLayout layout() const;

    /// Stabilizer with eigenvalue phases w^a on R and w^b on S.
    Stabilizer stabilizer(int a, int b) const;
};

HybridScheme build_hybrid(int k, int n, int p);

/// Uniform mixture over the (a, b) stabilizer eigenspace, materialized as
/// the phased group average sum_M M / p^n.
DensityMatrix encode_classical(const HybridScheme& h, int a, int b);

struct ReadoutWords {
    PauliWord word_a;  // X-type, supported in T, R-coefficient coeff_a
    int coeff_a = 0;
    PauliWord word_b;  // Z-type, supported in T, S-coefficient coeff_b
    int coeff_b = 0;
};

/// Stabilizer elements supported inside T whose expansions hit R (resp. S)
/// with a nonzero coefficient; they exist for every |T| >= k.
ReadoutWords find_readout_words(const HybridScheme& h, const std::set<int>& t);

/// Measures the readout-word eigenvalues on the reduced state of T and
/// inverts the phases to the two secret digits.  The reduced state must
/// come from a valid encoding: expectation magnitudes below 0.99 or
/// ambiguous phase angles fail loudly.
std::pair<int, int> reconstruct_classical(const HybridScheme& h, const std::set<int>& t,
                                          const DensityMatrix& rho_t);

/// Discrete log of a measured phase: nearest p-th root of unity, with a
/// 1e-6 angular tolerance on the match.
int phase_dlog(cx value, int p);

}  // namespace qss

#endif
