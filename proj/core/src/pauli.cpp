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

#include "qss/pauli.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qss/caps.hpp"
#include "qss/errors.hpp"

namespace qss {

cx root_of_unity(int t, int p) {
    const double angle = 2.0 * std::numbers::pi * mod_reduce(t, p) / p;
    return {std::cos(angle), std::sin(angle)};
}

PauliWord::PauliWord(int p_, int n_, int phase, FpVector x_vec, FpVector z_vec)
    : p(p_), n(n_), phase_exp(mod_reduce(phase, p_)), x(std::move(x_vec)), z(std::move(z_vec)) {
    if (!is_prime(p)) {
        throw std::domain_error("Pauli word modulus must be prime");
    }
    if (static_cast<int>(x.size()) != n || static_cast<int>(z.size()) != n) {
        throw std::invalid_argument("Pauli exponent vectors must have length n");
    }
    for (auto& e : x) {
        e = mod_reduce(e, p);
    }
    for (auto& e : z) {
        e = mod_reduce(e, p);
    }
}

PauliWord PauliWord::identity(int p, int n) {
    return PauliWord(p, n, 0, FpVector(n, 0), FpVector(n, 0));
}

PauliWord PauliWord::x_type(int p, const FpVector& exps, int phase_exp) {
    return PauliWord(p, static_cast<int>(exps.size()), phase_exp, exps,
                     FpVector(exps.size(), 0));
}

PauliWord PauliWord::z_type(int p, const FpVector& exps, int phase_exp) {
    return PauliWord(p, static_cast<int>(exps.size()), phase_exp, FpVector(exps.size(), 0),
                     exps);
}

int PauliWord::support_weight() const {
    int w = 0;
    for (int i = 0; i < n; ++i) {
        if (x[i] != 0 || z[i] != 0) {
            ++w;
        }
    }
    return w;
}

std::string PauliWord::to_string() const {
    std::ostringstream out;
    out << "w^" << phase_exp << " X[";
    for (int i = 0; i < n; ++i) {
        out << (i ? " " : "") << x[i];
    }
    out << "] Z[";
    for (int i = 0; i < n; ++i) {
        out << (i ? " " : "") << z[i];
    }
    out << "]";
    return out.str();
}

bool PauliWord::operator==(const PauliWord& o) const {
    return p == o.p && n == o.n && phase_exp == o.phase_exp && x == o.x && z == o.z;
}

static void require_same_space(const PauliWord& a, const PauliWord& b) {
    if (a.p != b.p || a.n != b.n) {
        throw std::domain_error("Pauli words act on different spaces");
    }
}

PauliWord pauli_mul(const PauliWord& lhs, const PauliWord& rhs) {
    require_same_space(lhs, rhs);
    const int p = lhs.p;
    long long phase = lhs.phase_exp + rhs.phase_exp;
    FpVector x(lhs.n), z(lhs.n);
    for (int i = 0; i < lhs.n; ++i) {
        phase += static_cast<long long>(lhs.z[i]) * rhs.x[i];
        x[i] = mod_add(lhs.x[i], rhs.x[i], p);
        z[i] = mod_add(lhs.z[i], rhs.z[i], p);
    }
    return PauliWord(p, lhs.n, mod_reduce(phase, p), std::move(x), std::move(z));
}

PauliWord pauli_pow(const PauliWord& word, int e) {
    if (e < 0) {
        return pauli_pow(pauli_inverse(word), -e);
    }
    // (w^t X^a Z^b)^e = w^{t e + a.b e(e-1)/2} X^{ae} Z^{be}: each of the
    // e(e-1)/2 reorderings of a Z block past an X block contributes a.b.
    const int p = word.p;
    long long cross = 0;
    for (int i = 0; i < word.n; ++i) {
        cross += static_cast<long long>(word.x[i]) * word.z[i];
    }
    const long long pairs = static_cast<long long>(e) * (e - 1) / 2 % p;
    long long phase = static_cast<long long>(word.phase_exp) * e + cross % p * pairs;
    FpVector x(word.n), z(word.n);
    for (int i = 0; i < word.n; ++i) {
        x[i] = mod_mul(word.x[i], e % p, p);
        z[i] = mod_mul(word.z[i], e % p, p);
    }
    return PauliWord(p, word.n, mod_reduce(phase, p), std::move(x), std::move(z));
}

PauliWord pauli_inverse(const PauliWord& word) {
    const int p = word.p;
    long long phase = -word.phase_exp;
    FpVector x(word.n), z(word.n);
    for (int i = 0; i < word.n; ++i) {
        phase += static_cast<long long>(word.x[i]) * word.z[i];
        x[i] = mod_neg(word.x[i], p);
        z[i] = mod_neg(word.z[i], p);
    }
    return PauliWord(p, word.n, mod_reduce(phase, p), std::move(x), std::move(z));
}

int commutation_exponent(const PauliWord& lhs, const PauliWord& rhs) {
    require_same_space(lhs, rhs);
    long long acc = 0;
    for (int i = 0; i < lhs.n; ++i) {
        acc += static_cast<long long>(lhs.x[i]) * rhs.z[i] -
               static_cast<long long>(lhs.z[i]) * rhs.x[i];
    }
    return mod_reduce(acc, lhs.p);
}

CMatrix pauli_matrix(const PauliWord& word) {
    std::int64_t dim = 1;
    for (int i = 0; i < word.n; ++i) {
        dim *= word.p;
    }
    check_density_dim(dim, "pauli_matrix");
    CMatrix m = CMatrix::Zero(dim, dim);
    std::vector<int> digits(word.n, 0);
    for (std::int64_t col = 0; col < dim; ++col) {
        // Column index digits, most significant coordinate first.
        std::int64_t rest = col;
        for (int i = word.n - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(rest % word.p);
            rest /= word.p;
        }
        long long phase = word.phase_exp;
        std::int64_t row = 0;
        for (int i = 0; i < word.n; ++i) {
            phase += static_cast<long long>(word.z[i]) * digits[i];
            row = row * word.p + mod_add(digits[i], word.x[i], word.p);
        }
        m(row, col) = root_of_unity(mod_reduce(phase, word.p), word.p);
    }
    return m;
}

Stabilizer::Stabilizer(int p_, int n_, std::vector<PauliWord> gens, std::vector<int> eigen_exps)
    : p(p_), n(n_), generators(std::move(gens)), eigen_exp(std::move(eigen_exps)) {
    if (eigen_exp.size() != generators.size()) {
        throw std::invalid_argument("need one eigenvalue exponent per generator");
    }
    FpMatrix symplectic(2 * n);
    for (size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        if (g.p != p || g.n != n) {
            throw std::domain_error("generator acts on the wrong space");
        }
        if (g.phase_exp != 0) {
            throw std::invalid_argument("generators must be stored phase-free");
        }
        for (size_t j = i + 1; j < generators.size(); ++j) {
            if (commutation_exponent(g, generators[j]) != 0) {
                throw std::domain_error("stabilizer generators " + std::to_string(i) + " and " +
                                        std::to_string(j) + " do not commute");
            }
        }
        FpVector row(static_cast<size_t>(2) * n);
        for (int c = 0; c < n; ++c) {
            row[c] = g.x[c];
            row[n + c] = g.z[c];
        }
        symplectic.append_row(std::move(row));
        eigen_exp[i] = mod_reduce(eigen_exp[i], p);
    }
    if (rank(symplectic, p) != static_cast<int>(generators.size())) {
        throw std::domain_error("stabilizer generators are not independent");
    }
}

long long Stabilizer::group_size() const {
    long long size = 1;
    for (int i = 0; i < n_generators(); ++i) {
        size *= p;
    }
    return size;
}

PauliWord Stabilizer::element(const std::vector<int>& exps) const {
    if (exps.size() != generators.size()) {
        throw std::invalid_argument("need one exponent per generator");
    }
    PauliWord acc = PauliWord::identity(p, n);
    long long fold = 0;
    for (size_t i = 0; i < generators.size(); ++i) {
        acc = pauli_mul(acc, pauli_pow(generators[i], exps[i]));
        fold += static_cast<long long>(eigen_exp[i]) * exps[i];
    }
    acc.phase_exp = mod_sub(acc.phase_exp, mod_reduce(fold, p), p);
    return acc;
}

Stabilizer css_stabilizer(const FpMatrix& x_checks, const FpMatrix& z_checks,
                          const std::vector<int>& x_phases, const std::vector<int>& z_phases,
                          int p) {
    if (x_checks.cols != z_checks.cols) {
        throw std::invalid_argument("X and Z check matrices must share the qupit count");
    }
    if (static_cast<int>(x_phases.size()) != x_checks.n_rows() ||
        static_cast<int>(z_phases.size()) != z_checks.n_rows()) {
        throw std::invalid_argument("need one phase exponent per check row");
    }
    const int n = x_checks.cols;
    for (int i = 0; i < x_checks.n_rows(); ++i) {
        for (int j = 0; j < z_checks.n_rows(); ++j) {
            if (dot(x_checks.rows[i], z_checks.rows[j], p) != 0) {
                throw std::domain_error(
                    "CSS checks do not commute: X row " + std::to_string(i) + " vs Z row " +
                    std::to_string(j) + " have nonzero inner product mod " + std::to_string(p));
            }
        }
    }
    std::vector<PauliWord> gens;
    std::vector<int> exps;
    for (int i = 0; i < x_checks.n_rows(); ++i) {
        gens.push_back(PauliWord::x_type(p, x_checks.rows[i]));
        exps.push_back(x_phases[i]);
    }
    for (int j = 0; j < z_checks.n_rows(); ++j) {
        gens.push_back(PauliWord::z_type(p, z_checks.rows[j]));
        exps.push_back(z_phases[j]);
    }
    return Stabilizer(p, n, std::move(gens), std::move(exps));
}

CMatrix stabilizer_projector(const Stabilizer& s) {
    std::int64_t dim = 1;
    for (int i = 0; i < s.n; ++i) {
        dim *= s.p;
    }
    check_density_dim(dim, "stabilizer_projector");
    CMatrix acc = CMatrix::Zero(dim, dim);
    std::vector<cx> roots(s.p);
    for (int t = 0; t < s.p; ++t) {
        roots[t] = root_of_unity(t, s.p);
    }
    std::vector<int> exps(s.n_generators(), 0);
    const long long count = s.group_size();
    std::vector<int> digits(s.n, 0);
    for (long long idx = 0; idx < count; ++idx) {
        PauliWord m = s.element(exps);
        // Monomial accumulate: column v maps to row v + x with phase w^{t + z.v}.
        for (std::int64_t col = 0; col < dim; ++col) {
            std::int64_t rest = col;
            for (int i = s.n - 1; i >= 0; --i) {
                digits[i] = static_cast<int>(rest % s.p);
                rest /= s.p;
            }
            long long phase = m.phase_exp;
            std::int64_t row = 0;
            for (int i = 0; i < s.n; ++i) {
                phase += static_cast<long long>(m.z[i]) * digits[i];
                row = row * s.p + mod_add(digits[i], m.x[i], s.p);
            }
            acc(row, col) += roots[mod_reduce(phase, s.p)];
        }
        for (int i = 0; i < s.n_generators(); ++i) {
            if (++exps[i] < s.p) {
                break;
            }
            exps[i] = 0;
        }
    }
    return acc / static_cast<double>(dim);
}

}  // namespace qss
