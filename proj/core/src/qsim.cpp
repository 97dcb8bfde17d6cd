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

#include "qss/qsim.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qss/errors.hpp"

namespace qss {

namespace {
std::atomic<std::int64_t> g_max_state_dim{1 << 14};
std::atomic<std::int64_t> g_max_density_dim{1 << 12};
}  // namespace

std::int64_t SimCaps::max_state_dim() { return g_max_state_dim.load(); }
std::int64_t SimCaps::max_density_dim() { return g_max_density_dim.load(); }
void SimCaps::set_max_state_dim(std::int64_t dim) { g_max_state_dim.store(dim); }
void SimCaps::set_max_density_dim(std::int64_t dim) { g_max_density_dim.store(dim); }

void SimCaps::reset() {
    g_max_state_dim.store(1 << 14);
    g_max_density_dim.store(1 << 12);
}

bool SimCaps::apply_env_caps() {
    const char* env = std::getenv("QSS_MAX_DIM");
    if (env == nullptr) {
        return false;
    }
    const std::int64_t dim = std::strtoll(env, nullptr, 10);
    if (dim <= 0) {
        throw ParseError("QSS_MAX_DIM must be a positive integer");
    }
    set_max_state_dim(dim);
    set_max_density_dim(dim);
    return true;
}

void check_state_dim(std::int64_t dim, const char* what) {
    if (dim > SimCaps::max_state_dim()) {
        throw SizeCapError(std::string(what) + ": dimension " + std::to_string(dim) +
                           " exceeds the state cap " + std::to_string(SimCaps::max_state_dim()) +
                           " (override with QSS_MAX_DIM)");
    }
}

void check_density_dim(std::int64_t dim, const char* what) {
    if (dim > SimCaps::max_density_dim()) {
        throw SizeCapError(std::string(what) + ": dimension " + std::to_string(dim) +
                           " exceeds the density cap " +
                           std::to_string(SimCaps::max_density_dim()) +
                           " (override with QSS_MAX_DIM)");
    }
}

SubsystemLayout::SubsystemLayout(std::vector<std::int64_t> d) : dims(std::move(d)) {
    for (auto dim : dims) {
        if (dim < 1) {
            throw std::invalid_argument("subsystem dimensions must be positive");
        }
    }
}

std::int64_t SubsystemLayout::total_dim() const {
    std::int64_t total = 1;
    for (auto d : dims) {
        total *= d;
    }
    return total;
}

std::int64_t SubsystemLayout::index_of(const std::vector<int>& digits) const {
    if (digits.size() != dims.size()) {
        throw std::invalid_argument("digit count does not match the layout");
    }
    std::int64_t idx = 0;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= dims[i]) {
            throw std::invalid_argument("digit out of range for its subsystem");
        }
        idx = idx * dims[i] + digits[i];
    }
    return idx;
}

std::vector<int> SubsystemLayout::digits_of(std::int64_t index) const {
    std::vector<int> digits(dims.size());
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(index % dims[i]);
        index /= dims[i];
    }
    return digits;
}

std::int64_t SubsystemLayout::dim_of(const std::vector<int>& subsystems) const {
    std::int64_t d = 1;
    for (int s : subsystems) {
        if (s < 0 || s >= n_subsystems()) {
            throw std::domain_error("subsystem index out of range");
        }
        d *= dims[s];
    }
    return d;
}

std::vector<int> complement_of(const std::vector<int>& subset, int n) {
    std::vector<bool> in(n, false);
    for (int s : subset) {
        if (s < 0 || s >= n) {
            throw std::domain_error("subsystem index out of range");
        }
        in[s] = true;
    }
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if (!in[i]) {
            out.push_back(i);
        }
    }
    return out;
}

StateVector::StateVector(SubsystemLayout l, CVector a) : layout(std::move(l)), amps(std::move(a)) {
    check_state_dim(layout.total_dim(), "StateVector");
    if (amps.size() != layout.total_dim()) {
        throw std::invalid_argument("amplitude count does not match the layout");
    }
    if (std::abs(amps.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("state vector must be normalized (norm deviates by more than 1e-9)");
    }
}

StateVector StateVector::unchecked(SubsystemLayout l, CVector a) {
    StateVector v;
    v.layout = std::move(l);
    v.amps = std::move(a);
    return v;
}

StateVector StateVector::basis_state(SubsystemLayout l, std::int64_t index) {
    check_state_dim(l.total_dim(), "StateVector");
    CVector a = CVector::Zero(l.total_dim());
    a(index) = 1.0;
    return StateVector(std::move(l), std::move(a));
}

SparseState::SparseState(SubsystemLayout l, std::vector<std::pair<std::int64_t, cx>> t)
    : layout(std::move(l)), terms(std::move(t)) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].first == terms[i - 1].first) {
            throw std::invalid_argument("sparse state has duplicate indices");
        }
    }
}

SparseState SparseState::from_dense(const StateVector& v, double cutoff) {
    std::vector<std::pair<std::int64_t, cx>> terms;
    for (std::int64_t i = 0; i < v.dim(); ++i) {
        if (std::abs(v.amps(i)) > cutoff) {
            terms.emplace_back(i, v.amps(i));
        }
    }
    return SparseState(v.layout, std::move(terms));
}

StateVector SparseState::to_dense() const {
    check_state_dim(layout.total_dim(), "SparseState::to_dense");
    CVector a = CVector::Zero(layout.total_dim());
    for (const auto& [idx, amp] : terms) {
        a(idx) = amp;
    }
    return StateVector::unchecked(layout, std::move(a));
}

double SparseState::norm() const {
    double acc = 0;
    for (const auto& [idx, amp] : terms) {
        acc += std::norm(amp);
    }
    return std::sqrt(acc);
}

DensityMatrix::DensityMatrix(SubsystemLayout l, CMatrix mat)
    : layout(std::move(l)), m(std::move(mat)) {
    check_density_dim(layout.total_dim(), "DensityMatrix");
    if (m.rows() != m.cols() || m.rows() != layout.total_dim()) {
        throw std::invalid_argument("density matrix shape does not match the layout");
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
        throw std::invalid_argument("density matrix must be Hermitian within 1e-9");
    }
    if (std::abs(m.trace() - cx(1.0, 0.0)) > 1e-9) {
        throw std::invalid_argument("density matrix must have unit trace within 1e-9");
    }
}

DensityMatrix DensityMatrix::unchecked(SubsystemLayout l, CMatrix mat) {
    DensityMatrix rho;
    rho.layout = std::move(l);
    rho.m = std::move(mat);
    return rho;
}

DensityMatrix DensityMatrix::pure(const StateVector& v) {
    check_density_dim(v.dim(), "DensityMatrix::pure");
    return DensityMatrix(v.layout, v.amps * v.amps.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(SubsystemLayout l) {
    const std::int64_t d = l.total_dim();
    check_density_dim(d, "DensityMatrix::maximally_mixed");
    return DensityMatrix(std::move(l), CMatrix::Identity(d, d) / static_cast<double>(d));
}

void DensityMatrix::validate_psd(double floor) const {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < floor) {
        throw std::invalid_argument("density matrix has an eigenvalue below the PSD floor");
    }
}

namespace {

struct SplitIndexer {
    // Walks flat indices as (kept part, traced part) for a keep subset.
    std::vector<std::int64_t> keep_stride;   // contribution of each kept digit
    std::vector<std::int64_t> trace_stride;  // contribution of each traced digit
    std::vector<std::int64_t> keep_dims, trace_dims;
    std::int64_t keep_total = 1, trace_total = 1;

    SplitIndexer(const SubsystemLayout& layout, const std::vector<int>& keep) {
        const int n = layout.n_subsystems();
        std::vector<std::int64_t> stride(n, 1);
        for (int i = n - 2; i >= 0; --i) {
            stride[i] = stride[i + 1] * layout.dims[i + 1];
        }
        std::vector<bool> kept(n, false);
        for (int s : keep) {
            if (s < 0 || s >= n) {
                throw std::domain_error("subsystem index out of range");
            }
            if (kept[s]) {
                throw std::domain_error("duplicate subsystem index");
            }
            kept[s] = true;
        }
        for (int s : keep) {
            keep_stride.push_back(stride[s]);
            keep_dims.push_back(layout.dims[s]);
            keep_total *= layout.dims[s];
        }
        for (int i = 0; i < n; ++i) {
            if (!kept[i]) {
                trace_stride.push_back(stride[i]);
                trace_dims.push_back(layout.dims[i]);
                trace_total *= layout.dims[i];
            }
        }
    }

    std::int64_t flat_from(std::int64_t keep_idx, std::int64_t trace_idx) const {
        std::int64_t flat = 0;
        for (int i = static_cast<int>(keep_dims.size()) - 1; i >= 0; --i) {
            flat += (keep_idx % keep_dims[i]) * keep_stride[i];
            keep_idx /= keep_dims[i];
        }
        for (int i = static_cast<int>(trace_dims.size()) - 1; i >= 0; --i) {
            flat += (trace_idx % trace_dims[i]) * trace_stride[i];
            trace_idx /= trace_dims[i];
        }
        return flat;
    }

    /// Splits a flat index into its (keep, trace) components.
    std::pair<std::int64_t, std::int64_t> split(std::int64_t flat,
                                                const SubsystemLayout& layout,
                                                const std::vector<int>& keep) const {
        auto digits = layout.digits_of(flat);
        std::int64_t k = 0;
        for (size_t i = 0; i < keep.size(); ++i) {
            k = k * keep_dims[i] + digits[keep[i]];
        }
        std::vector<bool> kept(layout.n_subsystems(), false);
        for (int s : keep) {
            kept[s] = true;
        }
        std::int64_t t = 0;
        int ti = 0;
        for (int i = 0; i < layout.n_subsystems(); ++i) {
            if (!kept[i]) {
                t = t * trace_dims[ti] + digits[i];
                ++ti;
            }
        }
        return {k, t};
    }

    SubsystemLayout kept_layout() const { return SubsystemLayout(keep_dims); }
};

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    SplitIndexer ix(rho.layout, keep);
    check_density_dim(ix.keep_total, "partial_trace");
    CMatrix out = CMatrix::Zero(ix.keep_total, ix.keep_total);
    for (std::int64_t a = 0; a < ix.keep_total; ++a) {
        for (std::int64_t b = 0; b < ix.keep_total; ++b) {
            cx acc = 0;
            for (std::int64_t t = 0; t < ix.trace_total; ++t) {
                acc += rho.m(ix.flat_from(a, t), ix.flat_from(b, t));
            }
            out(a, b) = acc;
        }
    }
    return DensityMatrix::unchecked(ix.kept_layout(), std::move(out));
}

DensityMatrix partial_trace(const StateVector& psi, const std::vector<int>& keep) {
    SplitIndexer ix(psi.layout, keep);
    check_density_dim(ix.keep_total, "partial_trace");
    CMatrix out = CMatrix::Zero(ix.keep_total, ix.keep_total);
    for (std::int64_t a = 0; a < ix.keep_total; ++a) {
        for (std::int64_t b = 0; b < ix.keep_total; ++b) {
            cx acc = 0;
            for (std::int64_t t = 0; t < ix.trace_total; ++t) {
                acc += psi.amps(ix.flat_from(a, t)) * std::conj(psi.amps(ix.flat_from(b, t)));
            }
            out(a, b) = acc;
        }
    }
    return DensityMatrix::unchecked(ix.kept_layout(), std::move(out));
}

DensityMatrix partial_trace(const SparseState& psi, const std::vector<int>& keep) {
    SplitIndexer ix(psi.layout, keep);
    check_density_dim(ix.keep_total, "partial_trace");
    // Group terms by the traced component, then accumulate outer products of
    // the per-group sparse slices.
    std::vector<std::tuple<std::int64_t, std::int64_t, cx>> split;  // (trace, keep, amp)
    split.reserve(psi.terms.size());
    for (const auto& [idx, amp] : psi.terms) {
        auto [k, t] = ix.split(idx, psi.layout, keep);
        split.emplace_back(t, k, amp);
    }
    std::sort(split.begin(), split.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) {
            return std::get<0>(a) < std::get<0>(b);
        }
        return std::get<1>(a) < std::get<1>(b);
    });
    CMatrix out = CMatrix::Zero(ix.keep_total, ix.keep_total);
    size_t start = 0;
    while (start < split.size()) {
        size_t end = start;
        while (end < split.size() && std::get<0>(split[end]) == std::get<0>(split[start])) {
            ++end;
        }
        for (size_t i = start; i < end; ++i) {
            for (size_t j = start; j < end; ++j) {
                out(std::get<1>(split[i]), std::get<1>(split[j])) +=
                    std::get<2>(split[i]) * std::conj(std::get<2>(split[j]));
            }
        }
        start = end;
    }
    return DensityMatrix::unchecked(ix.kept_layout(), std::move(out));
}

StateVector apply_on_subset(const StateVector& psi, const CMatrix& op,
                            const std::vector<int>& where) {
    SplitIndexer ix(psi.layout, where);
    if (op.rows() != op.cols() || op.rows() != ix.keep_total) {
        throw std::invalid_argument("operator dimension does not match the target subsystems");
    }
    CVector out = CVector::Zero(psi.dim());
    CVector slice(ix.keep_total);
    for (std::int64_t t = 0; t < ix.trace_total; ++t) {
        for (std::int64_t a = 0; a < ix.keep_total; ++a) {
            slice(a) = psi.amps(ix.flat_from(a, t));
        }
        CVector mapped = op * slice;
        for (std::int64_t a = 0; a < ix.keep_total; ++a) {
            out(ix.flat_from(a, t)) = mapped(a);
        }
    }
    return StateVector::unchecked(psi.layout, std::move(out));
}

DensityMatrix apply_on_subset(const DensityMatrix& rho, const CMatrix& op,
                              const std::vector<int>& where) {
    SplitIndexer ix(rho.layout, where);
    if (op.rows() != op.cols() || op.rows() != ix.keep_total) {
        throw std::invalid_argument("operator dimension does not match the target subsystems");
    }
    const std::int64_t dim = rho.dim();
    CMatrix big = CMatrix::Zero(dim, dim);
    // Build (op tensor I) once; density dimensions are cap-bounded.
    for (std::int64_t a = 0; a < ix.keep_total; ++a) {
        for (std::int64_t b = 0; b < ix.keep_total; ++b) {
            if (op(a, b) == cx(0.0, 0.0)) {
                continue;
            }
            for (std::int64_t t = 0; t < ix.trace_total; ++t) {
                big(ix.flat_from(a, t), ix.flat_from(b, t)) = op(a, b);
            }
        }
    }
    return DensityMatrix::unchecked(rho.layout, big * rho.m * big.adjoint());
}

StateVector apply_basis_permutation(const StateVector& psi,
                                    const std::vector<std::int64_t>& table,
                                    const std::vector<int>& where) {
    SplitIndexer ix(psi.layout, where);
    if (static_cast<std::int64_t>(table.size()) != ix.keep_total) {
        throw std::invalid_argument("permutation table size does not match the subsystems");
    }
    CVector out = CVector::Zero(psi.dim());
    for (std::int64_t t = 0; t < ix.trace_total; ++t) {
        for (std::int64_t a = 0; a < ix.keep_total; ++a) {
            out(ix.flat_from(table[a], t)) = psi.amps(ix.flat_from(a, t));
        }
    }
    return StateVector::unchecked(psi.layout, std::move(out));
}

SparseState apply_basis_permutation(const SparseState& psi,
                                    const std::vector<std::int64_t>& table,
                                    const std::vector<int>& where) {
    SplitIndexer ix(psi.layout, where);
    if (static_cast<std::int64_t>(table.size()) != ix.keep_total) {
        throw std::invalid_argument("permutation table size does not match the subsystems");
    }
    std::vector<std::pair<std::int64_t, cx>> terms;
    terms.reserve(psi.terms.size());
    for (const auto& [idx, amp] : psi.terms) {
        auto [k, t] = ix.split(idx, psi.layout, where);
        terms.emplace_back(ix.flat_from(table[k], t), amp);
    }
    return SparseState(psi.layout, std::move(terms));
}

cx expectation(const StateVector& psi, const CMatrix& op, const std::vector<int>& where) {
    StateVector mapped = apply_on_subset(psi, op, where);
    return psi.amps.dot(mapped.amps);  // Eigen's dot conjugates the left side
}

cx expectation(const DensityMatrix& rho, const CMatrix& op, const std::vector<int>& where) {
    DensityMatrix reduced = partial_trace(rho, where);
    return (op * reduced.m).trace();
}

namespace {

/// tr(word * rho) for a monomial word acting on the full layout of rho.
cx monomial_trace(const DensityMatrix& rho, const PauliWord& word) {
    const std::int64_t dim = rho.dim();
    const auto& dims = rho.layout.dims;
    cx acc = 0;
    std::vector<int> digits(word.n);
    for (std::int64_t col = 0; col < dim; ++col) {
        std::int64_t rest = col;
        for (int i = word.n - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(rest % dims[i]);
            rest /= dims[i];
        }
        long long phase = word.phase_exp;
        std::int64_t row = 0;
        for (int i = 0; i < word.n; ++i) {
            phase += static_cast<long long>(word.z[i]) * digits[i];
            row = row * dims[i] + mod_add(digits[i], word.x[i], word.p);
        }
        acc += root_of_unity(mod_reduce(phase, word.p), word.p) * rho.m(col, row);
    }
    return acc;
}

void require_qupit_targets(const SubsystemLayout& layout, const PauliWord& word,
                           const std::vector<int>& where) {
    if (static_cast<int>(where.size()) != word.n) {
        throw std::invalid_argument("Pauli word length does not match the target count");
    }
    for (int s : where) {
        if (s < 0 || s >= layout.n_subsystems() || layout.dims[s] != word.p) {
            throw std::invalid_argument("Pauli word targets must be dimension-p subsystems");
        }
    }
}

}  // namespace

cx expectation(const DensityMatrix& rho, const PauliWord& word, const std::vector<int>& where) {
    require_qupit_targets(rho.layout, word, where);
    DensityMatrix reduced = partial_trace(rho, where);
    return monomial_trace(reduced, word);
}

cx expectation(const StateVector& psi, const PauliWord& word, const std::vector<int>& where) {
    require_qupit_targets(psi.layout, word, where);
    // <psi| E |psi> accumulated monomially: E maps |v> to w^{t+z.v} |v+x>.
    SplitIndexer ix(psi.layout, where);
    cx acc = 0;
    std::vector<int> digits(word.n);
    for (std::int64_t t = 0; t < ix.trace_total; ++t) {
        for (std::int64_t v = 0; v < ix.keep_total; ++v) {
            std::int64_t rest = v;
            for (int i = word.n - 1; i >= 0; --i) {
                digits[i] = static_cast<int>(rest % word.p);
                rest /= word.p;
            }
            long long phase = word.phase_exp;
            std::int64_t target = 0;
            for (int i = 0; i < word.n; ++i) {
                phase += static_cast<long long>(word.z[i]) * digits[i];
                target = target * word.p + mod_add(digits[i], word.x[i], word.p);
            }
            acc += std::conj(psi.amps(ix.flat_from(target, t))) *
                   root_of_unity(mod_reduce(phase, word.p), word.p) *
                   psi.amps(ix.flat_from(v, t));
        }
    }
    return acc;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (!(rho.layout == sigma.layout)) {
        throw std::invalid_argument("trace distance requires identical layouts");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.m - sigma.m, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double fidelity(const StateVector& psi, const DensityMatrix& rho) {
    if (!(psi.layout == rho.layout)) {
        throw std::invalid_argument("fidelity requires identical layouts");
    }
    return std::real(psi.amps.dot(rho.m * psi.amps));
}

double fidelity(const StateVector& psi, const StateVector& phi) {
    if (!(psi.layout == phi.layout)) {
        throw std::invalid_argument("fidelity requires identical layouts");
    }
    return std::norm(psi.amps.dot(phi.amps));
}

}  // namespace qss
