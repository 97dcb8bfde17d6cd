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

#include "qss/codes.hpp"
#include "qss/errors.hpp"
#include "qss/hybrid.hpp"

using namespace qss;

TEST_CASE("hybrid constraints") {
    CHECK_THROWS_WITH_AS(build_hybrid(2, 3, 5), doctest::Contains("n <= 2k-2"),
                         ConstructionError);
    CHECK_THROWS_AS(build_hybrid(3, 4, 4), ConstructionError);   // p not prime
    CHECK_THROWS_AS(build_hybrid(3, 4, 3), ConstructionError);   // p < n
    CHECK_THROWS_AS(build_hybrid(5, 4, 5), ConstructionError);   // n < k
}

TEST_CASE("the four-share five-dimensional scheme matches the stabilizer display") {
    HybridScheme h = build_hybrid(3, 4, 5);
    CHECK(h.r == 2);
    CHECK(h.s == 1);
    CHECK(h.n_generators() == 4);

    // X rows span the checks of D_1, with the first row spanning D_2's.
    LinearCode d1_perp = dual_code(build_poly_code(4, 1, 5));
    LinearCode d2_perp = dual_code(build_poly_code(4, 2, 5));
    CHECK(rref(h.x_checks, 5) == rref(d1_perp.gen, 5));
    CHECK(d2_perp.contains(h.x_checks.rows[0]));
    CHECK_FALSE(d2_perp.contains(h.x_checks.rows[h.row_r_index]));

    // Z rows span D_1, with the first row spanning D_0.
    LinearCode d1 = build_poly_code(4, 1, 5);
    LinearCode d0 = build_poly_code(4, 0, 5);
    CHECK(rref(h.z_checks, 5) == rref(d1.gen, 5));
    CHECK(d0.contains(h.z_checks.rows[0]));
    CHECK_FALSE(d0.contains(h.z_checks.rows[h.row_s_index]));

    // All 25 stabilizers are valid Abelian groups.
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            CHECK(h.stabilizer(a, b).n_generators() == 4);
        }
    }
}

TEST_CASE("the two-qubit case produces the Bell family") {
    HybridScheme h = build_hybrid(2, 2, 2);
    CHECK(h.x_checks.rows == std::vector<FpVector>{{1, 1}});
    CHECK(h.z_checks.rows == std::vector<FpVector>{{1, 1}});

    // (a, b) = (0, 0): (|00> + |11>)/sqrt(2)
    auto bell = [](double x_sign, double z_sign) {
        CVector v = CVector::Zero(4);
        if (z_sign > 0) {
            v(0) = 1 / std::sqrt(2.0);
            v(3) = x_sign / std::sqrt(2.0);
        } else {
            v(1) = 1 / std::sqrt(2.0);
            v(2) = x_sign / std::sqrt(2.0);
        }
        return StateVector(SubsystemLayout({2, 2}), std::move(v));
    };
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            DensityMatrix rho = encode_classical(h, a, b);
            // eigenvalue of XX is (-1)^a, of ZZ is (-1)^b
            StateVector expected = bell(a == 0 ? 1.0 : -1.0, b == 0 ? 1.0 : -1.0);
            CHECK(fidelity(expected, rho) == doctest::Approx(1.0).epsilon(1e-9));
            // each single qubit is completely random
            for (int share : {0, 1}) {
                DensityMatrix reduced = partial_trace(rho, {share});
                CHECK((reduced.m - CMatrix::Identity(2, 2) * 0.5).cwiseAbs().maxCoeff() < 1e-9);
            }
        }
    }
}

TEST_CASE("encodings are orthogonal pure states at n = 2k - 2") {
    HybridScheme h = build_hybrid(3, 4, 5);
    std::vector<DensityMatrix> encodings;
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            DensityMatrix rho = encode_classical(h, a, b);
            CHECK(std::abs(rho.m.trace() - cx(1.0, 0.0)) < 1e-9);
            CHECK(std::abs(rho.m.squaredNorm() - 1.0) < 1e-9);  // pure
            encodings.push_back(std::move(rho));
        }
    }
    for (size_t i = 0; i < encodings.size(); ++i) {
        for (size_t j = i + 1; j < encodings.size(); ++j) {
            const cx overlap = encodings[i].m.transpose().cwiseProduct(encodings[j].m).sum();
            CHECK(std::abs(overlap) < 1e-9);
        }
    }
}

TEST_CASE("readout words live inside the queried shares") {
    HybridScheme h = build_hybrid(3, 4, 5);
    for (const auto& t : {std::set<int>{0, 1, 2}, std::set<int>{0, 1, 3}, std::set<int>{1, 2, 3},
                          std::set<int>{0, 2, 3}, std::set<int>{0, 1, 2, 3}}) {
        ReadoutWords words = find_readout_words(h, t);
        CHECK(words.coeff_a != 0);
        CHECK(words.coeff_b != 0);
        for (int coord = 0; coord < 4; ++coord) {
            if (!t.count(coord)) {
                CHECK(words.word_a.x[coord] == 0);
                CHECK(words.word_b.z[coord] == 0);
            }
        }
        // words commute with every phase-free generator
        Stabilizer s = h.stabilizer(0, 0);
        for (const auto& g : s.generators) {
            CHECK(commutation_exponent(words.word_a, g) == 0);
            CHECK(commutation_exponent(words.word_b, g) == 0);
        }
    }
    CHECK_THROWS_AS(find_readout_words(h, {0, 1}), NotFoundError);
}

TEST_CASE("classical reconstruction is exact for every secret and every large set") {
    HybridScheme h = build_hybrid(3, 4, 5);
    std::vector<std::set<int>> authorized{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                          {0, 1, 2, 3}};
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            DensityMatrix rho = encode_classical(h, a, b);
            for (const auto& t : authorized) {
                std::vector<int> coords(t.begin(), t.end());
                DensityMatrix rho_t = partial_trace(rho, coords);
                auto [ra, rb] = reconstruct_classical(h, t, rho_t);
                CHECK(ra == a);
                CHECK(rb == b);
            }
        }
    }
}

TEST_CASE("small sets see the maximally mixed state") {
    HybridScheme h = build_hybrid(3, 4, 5);
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            DensityMatrix rho = encode_classical(h, a, b);
            for (int i = 0; i < 4; ++i) {
                DensityMatrix reduced = partial_trace(rho, {i});
                CHECK((reduced.m - CMatrix::Identity(5, 5) / 5.0).cwiseAbs().maxCoeff() < 1e-9);
                for (int j = i + 1; j < 4; ++j) {
                    DensityMatrix pair = partial_trace(rho, {i, j});
                    CHECK((pair.m - CMatrix::Identity(25, 25) / 25.0).cwiseAbs().maxCoeff() <
                          1e-9);
                }
            }
        }
    }
}

TEST_CASE("Bell reconstruction recovers two bits from two qubits") {
    HybridScheme h = build_hybrid(2, 2, 2);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            DensityMatrix rho = encode_classical(h, a, b);
            auto [ra, rb] = reconstruct_classical(h, {0, 1}, rho);
            CHECK(ra == a);
            CHECK(rb == b);
        }
    }
    // (0,0) gives expectation exactly one for both words
    ReadoutWords words = find_readout_words(h, {0, 1});
    DensityMatrix rho = encode_classical(h, 0, 0);
    CHECK(std::abs(expectation(rho, words.word_a, {0, 1}) - cx(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(expectation(rho, words.word_b, {0, 1}) - cx(1.0, 0.0)) < 1e-12);
}

TEST_CASE("reconstruction rejects states that are not codewords") {
    HybridScheme h = build_hybrid(2, 2, 2);
    DensityMatrix junk = DensityMatrix::maximally_mixed(SubsystemLayout({2, 2}));
    CHECK_THROWS_WITH_AS(reconstruct_classical(h, {0, 1}, junk),
                         doctest::Contains("not a valid codeword"), std::domain_error);
}

TEST_CASE("phase dlog rounds to the nearest root and flags garbage") {
    CHECK(phase_dlog(root_of_unity(3, 5), 5) == 3);
    CHECK(phase_dlog(cx(1.0, 0.0), 7) == 0);
    CHECK(phase_dlog(root_of_unity(1, 2), 2) == 1);
    CHECK_THROWS_AS(phase_dlog(cx(0.5, 0.0), 5), std::domain_error);
    CHECK_THROWS_AS(phase_dlog(std::polar(1.0, 0.3), 5), std::domain_error);
}

TEST_CASE("a genuinely mixed hybrid family still encodes and reads out") {
    // k = 4, n = 5: 2r = 6 > n, code dimension p^{2r-n} = 5.
    HybridScheme h = build_hybrid(4, 5, 5);
    CHECK(h.n_generators() == 2 * (5 - 3));
    for (int a : {0, 2}) {
        for (int b : {1, 4}) {
            DensityMatrix rho = encode_classical(h, a, b);
            CHECK(std::abs(rho.m.trace() - cx(1.0, 0.0)) < 1e-9);
            // mixed: purity is 1/5
            CHECK(rho.m.squaredNorm() == doctest::Approx(0.2).epsilon(1e-6));
            std::set<int> t{0, 1, 2, 3};
            DensityMatrix rho_t = partial_trace(rho, {0, 1, 2, 3});
            auto [ra, rb] = reconstruct_classical(h, t, rho_t);
            CHECK(ra == a);
            CHECK(rb == b);
        }
    }
}
