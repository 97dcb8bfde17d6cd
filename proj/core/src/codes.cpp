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

#include "qss/codes.hpp"

#include <stdexcept>

#include "qss/errors.hpp"

namespace qss {

LinearCode::LinearCode(FieldModulus modulus, int length, FpMatrix generator, std::string tag)
    : p(modulus), n(length), gen(std::move(generator)), label(std::move(tag)) {
    if (gen.cols != n) {
        throw std::invalid_argument("generator row length must equal the code length");
    }
    if (rank(gen, p.p) != gen.n_rows()) {
        throw std::invalid_argument("generator matrix must have full row rank");
    }
}

LinearCode build_poly_code(int n, int r, int p, const std::vector<int>& alphas) {
    FieldModulus modulus(p);
    if (p < n) {
        throw std::domain_error("need p >= n to pick distinct evaluation points");
    }
    if (r < 0 || r >= n) {
        throw std::domain_error("polynomial degree bound r must satisfy 0 <= r < n");
    }
    std::vector<int> points = alphas;
    if (points.empty()) {
        points.resize(n);
        for (int i = 0; i < n; ++i) {
            points[i] = i;
        }
    }
    if (static_cast<int>(points.size()) != n) {
        throw std::domain_error("need exactly n evaluation points");
    }
    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t j = i + 1; j < points.size(); ++j) {
            if (mod_reduce(points[i], p) == mod_reduce(points[j], p)) {
                throw std::domain_error("evaluation points must be pairwise distinct");
            }
        }
    }
    FpMatrix gen(n);
    for (int d = 0; d <= r; ++d) {
        FpVector row(n);
        for (int i = 0; i < n; ++i) {
            row[i] = mod_pow(points[i], d, p);
        }
        gen.append_row(std::move(row));
    }
    return LinearCode(modulus, n, std::move(gen), "D_" + std::to_string(r));
}

LinearCode dual_code(const LinearCode& c) {
    FpMatrix dual_gen = null_space(c.gen, c.p.p);
    std::string tag = c.label.empty() ? "" : c.label + "^perp";
    return LinearCode(c.p, c.n, std::move(dual_gen), std::move(tag));
}

int min_distance(const LinearCode& c, long long enumeration_cap) {
    const int p = c.p.p;
    const int k = c.dim();
    if (k == 0) {
        throw std::domain_error("minimum distance of the zero code is undefined");
    }
    long long count = 1;
    for (int i = 0; i < k; ++i) {
        count *= p;
        if (count > enumeration_cap) {
            throw SizeCapError("codeword enumeration over " + std::to_string(k) +
                               " message symbols exceeds the cap");
        }
    }
    int best = c.n + 1;
    FpVector msg(k, 0);
    FpVector word(c.n, 0);
    for (long long idx = 1; idx < count; ++idx) {
        // Increment the message counter in base p.
        for (int i = 0; i < k; ++i) {
            if (++msg[i] < p) {
                break;
            }
            msg[i] = 0;
        }
        std::fill(word.begin(), word.end(), 0);
        for (int i = 0; i < k; ++i) {
            if (msg[i] == 0) {
                continue;
            }
            for (int j = 0; j < c.n; ++j) {
                word[j] = mod_add(word[j], mod_mul(msg[i], c.gen.rows[i][j], p), p);
            }
        }
        best = std::min(best, weight(word));
        if (best == 1) {
            break;
        }
    }
    return best;
}

FpVector support_codeword(const LinearCode& c, const std::set<int>& t) {
    const int p = c.p.p;
    for (int coord : t) {
        if (coord < 0 || coord >= c.n) {
            throw std::domain_error("support coordinate out of range");
        }
    }
    // Solve for message vectors whose codeword vanishes outside T.
    FpMatrix constraints(c.dim());
    for (int j = 0; j < c.n; ++j) {
        if (t.count(j)) {
            continue;
        }
        FpVector row(c.dim());
        for (int i = 0; i < c.dim(); ++i) {
            row[i] = c.gen.rows[i][j];
        }
        constraints.append_row(std::move(row));
    }
    FpMatrix solutions = null_space(constraints, p);
    if (solutions.n_rows() == 0) {
        throw NotFoundError("no nonzero codeword supported inside the given coordinate set");
    }
    const FpVector& msg = solutions.rows[0];
    FpVector word(c.n, 0);
    for (int i = 0; i < c.dim(); ++i) {
        for (int j = 0; j < c.n; ++j) {
            word[j] = mod_add(word[j], mod_mul(msg[i], c.gen.rows[i][j], p), p);
        }
    }
    return word;
}

LemmaRows lemma_rows(int n, int r, int s, int p) {
    FieldModulus modulus(p);
    if (s != n - r - 1) {
        throw std::domain_error("need s = n - r - 1");
    }
    if (2 * r < n) {
        throw std::domain_error("need 2r >= n");
    }
    if (p < n) {
        throw std::domain_error("need p >= n");
    }
    if (r < 1) {
        throw std::domain_error("need r >= 1");
    }

    // X side: parity checks of D_{r-1}, i.e. generators of D_{r-1}^perp.
    LinearCode d_rm1 = build_poly_code(n, r - 1, p);
    FpMatrix big_x = dual_code(d_rm1).gen;
    FpMatrix small_x = dual_code(build_poly_code(n, r, p)).gen;  // checks of D_r

    // Z side: generators of D_s (parity checks of D_s^perp) extending D_{s-1}.
    FpMatrix big_z = build_poly_code(n, s, p).gen;
    big_z = rref(big_z, p);
    FpMatrix small_z = s == 0 ? FpMatrix(n) : rref(build_poly_code(n, s - 1, p).gen, p);

    auto extend = [p](const FpMatrix& small, const FpMatrix& big) {
        FpMatrix basis = small;
        FpVector extra;
        for (const auto& row : big.rows) {
            if (!in_row_space(basis, row, p)) {
                extra = row;
                basis.append_row(row);
                break;
            }
        }
        if (extra.empty() || rank(basis, p) != big.n_rows() ||
            static_cast<int>(basis.rows.size()) != big.n_rows()) {
            throw std::domain_error("distinguished row extension failed");
        }
        return std::pair<FpVector, FpMatrix>(extra, basis);
    };

    // The two spaces differ by exactly one dimension, so a single added row
    // completes the basis.
    auto [row_r, x_checks] = extend(small_x, big_x);
    auto [row_s, z_checks] = extend(small_z, big_z);
    return LemmaRows{std::move(row_r), std::move(row_s), std::move(x_checks),
                     std::move(z_checks)};
}

}  // namespace qss
