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

#include <doctest.h>

#include <stdexcept>

#include "qss/pauli.hpp"

using namespace qss;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

std::vector<PauliWord> all_words(int p, int n) {
    std::vector<PauliWord> words;
    const int total = static_cast<int>(std::pow(p, 2 * n));
    for (int idx = 0; idx < total; ++idx) {
        int rest = idx;
        FpVector x(n), z(n);
        for (int i = 0; i < n; ++i) {
            x[i] = rest % p;
            rest /= p;
        }
        for (int i = 0; i < n; ++i) {
            z[i] = rest % p;
            rest /= p;
        }
        words.emplace_back(p, n, 0, x, z);
    }
    return words;
}

}  // namespace

TEST_CASE("single-qupit matrices") {
    const PauliWord x(3, 1, 0, {1}, {0});
    const PauliWord z(3, 1, 0, {0}, {1});
    CMatrix mx = pauli_matrix(x);
    // X: |j> -> |j+1>
    for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(mx((j + 1) % 3, j) - cx(1.0, 0.0)) < 1e-12);
    }
    CMatrix mz = pauli_matrix(z);
    for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(mz(j, j) - root_of_unity(j, 3)) < 1e-12);
    }
}

TEST_CASE("Z times X picks up one phase") {
    const PauliWord x(3, 1, 0, {1}, {0});
    const PauliWord z(3, 1, 0, {0}, {1});
    const PauliWord zx = pauli_mul(z, x);
    CHECK(zx.phase_exp == 1);
    CHECK(zx.x == FpVector{1});
    CHECK(zx.z == FpVector{1});
    CHECK(max_abs(pauli_matrix(zx) - pauli_matrix(z) * pauli_matrix(x)) < 1e-12);
}

TEST_CASE("product against the matrix oracle, exhaustively at p=2 n<=2 and p=3 n=1") {
    auto run = [](int p, int n) {
        const auto words = all_words(p, n);
        for (const auto& a : words) {
            for (const auto& b : words) {
                const PauliWord ab = pauli_mul(a, b);
                CHECK(max_abs(pauli_matrix(ab) - pauli_matrix(a) * pauli_matrix(b)) < 1e-12);
            }
        }
    };
    run(2, 1);
    run(2, 2);
    run(3, 1);
    run(3, 2);
}

TEST_CASE("inverse returns the identity word") {
    for (const auto& w : all_words(3, 2)) {
        const PauliWord id = pauli_mul(w, pauli_inverse(w));
        CHECK(id.phase_exp == 0);
        CHECK(id.is_identity_up_to_phase());
    }
}

TEST_CASE("commutation follows the symplectic form, all 81 pairs at p=3") {
    const auto words = all_words(3, 1);
    for (const auto& a : words) {
        for (const auto& b : words) {
            const int exp = commutation_exponent(a, b);
            CHECK(exp == mod_sub(mod_mul(a.x[0], b.z[0], 3), mod_mul(a.z[0], b.x[0], 3), 3));
            const CMatrix lhs = pauli_matrix(b) * pauli_matrix(a);
            const CMatrix rhs = root_of_unity(exp, 3) * pauli_matrix(a) * pauli_matrix(b);
            CHECK(max_abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("nontrivial words are traceless") {
    for (const auto& w : all_words(3, 1)) {
        const cx tr = pauli_matrix(w).trace();
        if (w.is_identity_up_to_phase()) {
            CHECK(std::abs(tr - cx(3.0, 0.0)) < 1e-12);
        } else {
            CHECK(std::abs(tr) < 1e-12);
        }
    }
    for (const auto& w : all_words(2, 2)) {
        if (!w.is_identity_up_to_phase()) {
            CHECK(std::abs(pauli_matrix(w).trace()) < 1e-12);
        }
    }
}

TEST_CASE("word text form") {
    const PauliWord w(5, 4, 2, {3, 0, 1, 1}, {0, 0, 0, 0});
    CHECK(w.to_string() == "w^2 X[3 0 1 1] Z[0 0 0 0]");
}

TEST_CASE("CSS stabilizer construction") {
    SUBCASE("the four-share five-dimensional example") {
        const FpMatrix x_checks(4, {{2, 4, 1, 3}, {3, 0, 1, 1}});
        const FpMatrix z_checks(4, {{1, 1, 1, 1}, {0, 1, 2, 3}});
        for (int a = 0; a < 5; ++a) {
            for (int b = 0; b < 5; ++b) {
                Stabilizer s = css_stabilizer(x_checks, z_checks, {0, a}, {0, b}, 5);
                CHECK(s.n_generators() == 4);
                CHECK(s.generators[0].x == FpVector{2, 4, 1, 3});
                CHECK(s.generators[1].x == FpVector{3, 0, 1, 1});
                CHECK(s.generators[2].z == FpVector{1, 1, 1, 1});
                CHECK(s.generators[3].z == FpVector{0, 1, 2, 3});
                CHECK(s.eigen_exp == std::vector<int>{0, a, 0, b});
            }
        }
    }
    SUBCASE("orthogonality is what commutation needs") {
        CHECK(dot({1, 1, 1, 1}, {2, 4, 1, 3}, 5) == 0);
        CHECK_THROWS_WITH_AS(
            css_stabilizer(FpMatrix(2, {{1, 0}}), FpMatrix(2, {{1, 0}}), {0}, {0}, 2),
            doctest::Contains("X row 0 vs Z row 0"), std::domain_error);
    }
    SUBCASE("generator independence is enforced") {
        CHECK_THROWS_AS(css_stabilizer(FpMatrix(2, {{1, 1}, {2, 2}}), FpMatrix(2), {0, 0}, {}, 3),
                        std::domain_error);
    }
}

TEST_CASE("stabilizer projector of the Bell family") {
    const FpMatrix xx(2, {{1, 1}});
    const FpMatrix zz(2, {{1, 1}});
    Stabilizer s = css_stabilizer(xx, zz, {0}, {0}, 2);
    CMatrix rho = stabilizer_projector(s);
    CMatrix expected = CMatrix::Zero(4, 4);
    expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 0.5;
    CHECK(max_abs(rho - expected) < 1e-12);
}

TEST_CASE("projector family for the four-share example") {
    const FpMatrix x_checks(4, {{2, 4, 1, 3}, {3, 0, 1, 1}});
    const FpMatrix z_checks(4, {{1, 1, 1, 1}, {0, 1, 2, 3}});
    std::vector<CMatrix> projectors;
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            Stabilizer s = css_stabilizer(x_checks, z_checks, {0, a}, {0, b}, 5);
            CHECK(s.group_size() == 625);
            CMatrix rho = stabilizer_projector(s);
            CHECK(max_abs(rho - rho.adjoint()) < 1e-9);
            CHECK(std::abs(rho.trace() - cx(1.0, 0.0)) < 1e-9);
            // rank one: the code dimension is p^{2r-n} = 1 here, so the
            // Hermitian trace-1 matrix has unit purity
            CHECK(std::abs(rho.squaredNorm() - 1.0) < 1e-9);
            projectors.push_back(std::move(rho));
        }
    }
    // one full idempotence check
    CHECK(max_abs(projectors[7] * projectors[7] - projectors[7]) < 1e-9);
    for (size_t i = 0; i < projectors.size(); ++i) {
        for (size_t j = i + 1; j < projectors.size(); ++j) {
            // tr(A B) without forming the product
            const cx overlap = projectors[i].transpose().cwiseProduct(projectors[j]).sum();
            CHECK(std::abs(overlap) < 1e-9);
        }
    }
}

TEST_CASE("group size accounting") {
    // 2(n - r) generators fix a code of dimension p^{2r-n}.
    const FpMatrix x_checks(4, {{2, 4, 1, 3}, {3, 0, 1, 1}});
    const FpMatrix z_checks(4, {{1, 1, 1, 1}, {0, 1, 2, 3}});
    Stabilizer s = css_stabilizer(x_checks, z_checks, {0, 0}, {0, 0}, 5);
    const int n = 4, r = 2;
    CHECK(s.n_generators() == 2 * (n - r));
    CMatrix projector = stabilizer_projector(s) * static_cast<double>(std::pow(5, n - s.n_generators()));
    // the rescaled sum is idempotent with rank p^{2r-n}
    CHECK(max_abs(projector * projector - projector) < 1e-9);
    CHECK(std::abs(projector.trace() - cx(std::pow(5, 2 * r - n), 0.0)) < 1e-9);
}

TEST_CASE("powers match matrix powers, including exponents past the order") {
    for (int p : {2, 3}) {
        for (const auto& w : all_words(p, 1)) {
            CMatrix m = CMatrix::Identity(p, p);
            const CMatrix base = pauli_matrix(w);
            for (int e = 0; e <= 2 * p; ++e) {
                CHECK(max_abs(pauli_matrix(pauli_pow(w, e)) - m) < 1e-12);
                m = m * base;
            }
            // negative exponents go through the inverse
            CHECK(max_abs(pauli_matrix(pauli_pow(w, -1)) - pauli_matrix(pauli_inverse(w))) <
                  1e-12);
        }
    }
}
