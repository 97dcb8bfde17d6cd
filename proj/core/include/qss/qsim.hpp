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

#ifndef QSS_QSIM_HPP
#define QSS_QSIM_HPP

#include <cstdint>
#include <vector>

#include "qss/caps.hpp"
#include "qss/pauli.hpp"

namespace qss {

/// Ordered tensor factorization of a Hilbert space into subsystems.
///
/// Indexing is row-major mixed-radix with the MOST SIGNIFICANT factor
/// first: the basis state |d_0 d_1 ... d_{m-1}> has flat index
/// ((d_0 * dim_1 + d_1) * dim_2 + d_2) * ... so dumps and reports are
/// reproducible bit for bit.
struct SubsystemLayout {
    std::vector<std::int64_t> dims;

    SubsystemLayout() = default;
    explicit SubsystemLayout(std::vector<std::int64_t> d);

    int n_subsystems() const { return static_cast<int>(dims.size()); }
    std::int64_t total_dim() const;

    std::int64_t index_of(const std::vector<int>& digits) const;
    std::vector<int> digits_of(std::int64_t index) const;

    /// Dimension of the tensor factor spanned by the given subsystems.
    std::int64_t dim_of(const std::vector<int>& subsystems) const;

    bool operator==(const SubsystemLayout& o) const { return dims == o.dims; }
};

std::vector<int> complement_of(const std::vector<int>& subset, int n);

/// Pure state on a layout; norm 1 within 1e-9 unless built unchecked.
struct StateVector {
    SubsystemLayout layout;
    CVector amps;

    StateVector() = default;
    StateVector(SubsystemLayout l, CVector a);
    static StateVector unchecked(SubsystemLayout l, CVector a);
    static StateVector basis_state(SubsystemLayout l, std::int64_t index);

    std::int64_t dim() const { return amps.size(); }
    double norm() const { return amps.norm(); }
};

/// Sparse pure state: sorted (index, amplitude) pairs.  This is the working
/// representation for code states, whose support is tiny compared to the
/// ambient dimension; it is exempt from the dense-vector cap.
struct SparseState {
    SubsystemLayout layout;
    std::vector<std::pair<std::int64_t, cx>> terms;  // sorted by index, no dups

    SparseState() = default;
    SparseState(SubsystemLayout l, std::vector<std::pair<std::int64_t, cx>> t);
    static SparseState from_dense(const StateVector& v, double cutoff = 1e-14);

    StateVector to_dense() const;  // cap-checked
    double norm() const;
};

/// Density matrix on a layout.  Hermiticity and unit trace are validated on
/// construction; positive semidefiniteness (eigenvalue floor -1e-9) is
/// checked by validate_psd() since it costs a full eigensolve.
struct DensityMatrix {
    SubsystemLayout layout;
    CMatrix m;

    DensityMatrix() = default;
    DensityMatrix(SubsystemLayout l, CMatrix mat);
    static DensityMatrix unchecked(SubsystemLayout l, CMatrix mat);
    static DensityMatrix pure(const StateVector& v);
    static DensityMatrix maximally_mixed(SubsystemLayout l);

    std::int64_t dim() const { return m.rows(); }
    void validate_psd(double floor = -1e-9) const;
};

/// Reduced state on the kept subsystems (in their original order).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);
DensityMatrix partial_trace(const StateVector& psi, const std::vector<int>& keep);
DensityMatrix partial_trace(const SparseState& psi, const std::vector<int>& keep);

/// (op tensor identity) applied to the given subsystems, which may appear
/// in any order; op must have dimension equal to their joint dimension.
StateVector apply_on_subset(const StateVector& psi, const CMatrix& op,
                            const std::vector<int>& where);
DensityMatrix apply_on_subset(const DensityMatrix& rho, const CMatrix& op,
                              const std::vector<int>& where);

/// Permutes computational basis values of the given subsystems:
/// |v> -> |table[v]> in the joint mixed-radix index of `where`.
StateVector apply_basis_permutation(const StateVector& psi,
                                    const std::vector<std::int64_t>& table,
                                    const std::vector<int>& where);
SparseState apply_basis_permutation(const SparseState& psi,
                                    const std::vector<std::int64_t>& table,
                                    const std::vector<int>& where);

cx expectation(const StateVector& psi, const CMatrix& op, const std::vector<int>& where);
cx expectation(const DensityMatrix& rho, const CMatrix& op, const std::vector<int>& where);
/// Pauli-word expectations use the monomial structure directly (no dense
/// operator is materialized).
cx expectation(const DensityMatrix& rho, const PauliWord& word, const std::vector<int>& where);
cx expectation(const StateVector& psi, const PauliWord& word, const std::vector<int>& where);

/// Half the trace norm of rho - sigma, via a Hermitian eigensolve.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
/// <psi| rho |psi>.
double fidelity(const StateVector& psi, const DensityMatrix& rho);
/// |<psi|phi>|^2.
double fidelity(const StateVector& psi, const StateVector& phi);

}  // namespace qss

#endif
