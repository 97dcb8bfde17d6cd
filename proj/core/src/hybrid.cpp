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

#include "qss/hybrid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qss/caps.hpp"
#include "qss/errors.hpp"

namespace qss {

SubsystemLayout HybridScheme::layout() const {
    return SubsystemLayout(std::vector<std::int64_t>(n, p));
}

Stabilizer HybridScheme::stabilizer(int a, int b) const {
    std::vector<int> x_phases(x_checks.n_rows(), 0);
    std::vector<int> z_phases(z_checks.n_rows(), 0);
    x_phases[row_r_index] = mod_reduce(a, p);
    z_phases[row_s_index] = mod_reduce(b, p);
    return css_stabilizer(x_checks, z_checks, x_phases, z_phases, p);
}

HybridScheme build_hybrid(int k, int n, int p) {
    if (k < 2 || n < 2) {
        throw ConstructionError("hybrid schemes need k >= 2 and n >= 2");
    }
    if (n < k) {
        throw ConstructionError("hybrid schemes need n >= k");
    }
    if (n > 2 * k - 2) {
        throw ConstructionError("hybrid construction requires n <= 2k-2; ((" +
                                std::to_string(k) + ", " + std::to_string(n) +
                                ")) violates it (n = " + std::to_string(n) + " > " +
                                std::to_string(2 * k - 2) + ")");
    }
    if (!is_prime(p)) {
        throw ConstructionError("field modulus " + std::to_string(p) + " is not prime");
    }
    if (p < n) {
        throw ConstructionError("hybrid construction requires p >= n");
    }
    const int r = k - 1;
    const int s = n - r - 1;
    LemmaRows rows = lemma_rows(n, r, s, p);
    HybridScheme h;
    h.p = p;
    h.n = n;
    h.k = k;
    h.r = r;
    h.s = s;
    h.x_checks = std::move(rows.x_checks);
    h.z_checks = std::move(rows.z_checks);
    h.row_r_index = h.x_checks.n_rows() - 1;
    h.row_s_index = h.z_checks.n_rows() - 1;
    if (h.n_generators() != 2 * (n - r)) {
        throw std::logic_error("hybrid generator count mismatch");
    }
    return h;
}

DensityMatrix encode_classical(const HybridScheme& h, int a, int b) {
    if (a < 0 || a >= h.p || b < 0 || b >= h.p) {
        throw std::domain_error("classical secret digits must lie in [0, p)");
    }
    Stabilizer s = h.stabilizer(a, b);
    std::int64_t dim = 1;
    for (int i = 0; i < h.n; ++i) {
        dim *= h.p;
    }
    check_density_dim(dim, "encode_classical");
    CMatrix acc = stabilizer_projector(s) ;
    return DensityMatrix(h.layout(), std::move(acc));
}

namespace {

/// Codeword in the row space of `basis` supported inside T whose
/// coefficient on the designated row is nonzero.
std::pair<FpVector, int> supported_with_row(const FpMatrix& basis, int special_row,
                                            const std::set<int>& t, int p,
                                            const char* what) {
    // Coefficient vectors x with (x * basis) vanishing outside T.
    FpMatrix constraints(basis.n_rows());
    for (int j = 0; j < basis.cols; ++j) {
        if (t.count(j)) {
            continue;
        }
        FpVector col(basis.n_rows());
        for (int i = 0; i < basis.n_rows(); ++i) {
            col[i] = basis.rows[i][j];
        }
        constraints.append_row(std::move(col));
    }
    FpMatrix solutions = null_space(constraints, p);
    for (const auto& x : solutions.rows) {
        if (x[special_row] != 0) {
            FpVector word(basis.cols, 0);
            for (int i = 0; i < basis.n_rows(); ++i) {
                for (int j = 0; j < basis.cols; ++j) {
                    word[j] = mod_add(word[j], mod_mul(x[i], basis.rows[i][j], p), p);
                }
            }
            return {word, x[special_row]};
        }
    }
    throw NotFoundError(std::string(what) +
                        ": no supported stabilizer element hits the phase row (need |T| >= k)");
}

}  // namespace

ReadoutWords find_readout_words(const HybridScheme& h, const std::set<int>& t) {
    for (int coord : t) {
        if (coord < 0 || coord >= h.n) {
            throw std::domain_error("share index out of range");
        }
    }
    if (static_cast<int>(t.size()) < h.k) {
        throw NotFoundError("readout needs at least k = " + std::to_string(h.k) + " shares");
    }
    auto [u, ca] = supported_with_row(h.x_checks, h.row_r_index, t, h.p, "X readout");
    auto [v, cb] = supported_with_row(h.z_checks, h.row_s_index, t, h.p, "Z readout");
    ReadoutWords out;
    out.word_a = PauliWord::x_type(h.p, u);
    out.coeff_a = ca;
    out.word_b = PauliWord::z_type(h.p, v);
    out.coeff_b = cb;
    return out;
}

int phase_dlog(cx value, int p) {
    const double mag = std::abs(value);
    if (mag < 0.99) {
        throw std::domain_error("state is not a valid codeword: eigenvalue magnitude " +
                                std::to_string(mag) + " < 0.99");
    }
    const double angle = std::arg(value);
    const double scaled = angle * p / (2.0 * std::numbers::pi);
    const long long nearest = std::llround(scaled);
    const double back = 2.0 * std::numbers::pi * nearest / p;
    double delta = std::abs(angle - back);
    delta = std::min(delta, std::abs(delta - 2.0 * std::numbers::pi));
    if (delta > 1e-6) {
        throw std::domain_error("ambiguous phase: angle is not within 1e-6 of a p-th root");
    }
    return mod_reduce(nearest, p);
}

std::pair<int, int> reconstruct_classical(const HybridScheme& h, const std::set<int>& t,
                                          const DensityMatrix& rho_t) {
    ReadoutWords words = find_readout_words(h, t);
    if (rho_t.layout.n_subsystems() != static_cast<int>(t.size())) {
        throw std::invalid_argument("reduced state must live exactly on the shares of T");
    }
    // Restrict the words to T's coordinates (they are supported there).
    std::vector<int> coords(t.begin(), t.end());
    auto restrict_word = [&](const PauliWord& w) {
        FpVector x(coords.size()), z(coords.size());
        for (size_t i = 0; i < coords.size(); ++i) {
            x[i] = w.x[coords[i]];
            z[i] = w.z[coords[i]];
        }
        return PauliWord(h.p, static_cast<int>(coords.size()), w.phase_exp, std::move(x),
                         std::move(z));
    };
    std::vector<int> all(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) {
        all[i] = static_cast<int>(i);
    }
    const cx val_a = expectation(rho_t, restrict_word(words.word_a), all);
    const cx val_b = expectation(rho_t, restrict_word(words.word_b), all);
    const int a = mod_mul(mod_inv(words.coeff_a, h.p), phase_dlog(val_a, h.p), h.p);
    const int b = mod_mul(mod_inv(words.coeff_b, h.p), phase_dlog(val_b, h.p), h.p);
    return {a, b};
}

}  // namespace qss
