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

#include "qss/codes.hpp"
#include "qss/errors.hpp"

using namespace qss;

namespace {

bool same_row_space(const FpMatrix& a, const FpMatrix& b, int p) {
    return rref(a, p) == rref(b, p);
}

}  // namespace

TEST_CASE("polynomial code generators") {
    LinearCode d1 = build_poly_code(4, 1, 5);
    CHECK(d1.gen.rows == std::vector<FpVector>{{1, 1, 1, 1}, {0, 1, 2, 3}});
    CHECK(d1.dim() == 2);

    LinearCode rep = build_poly_code(2, 0, 2);
    CHECK(rep.gen.rows == std::vector<FpVector>{{1, 1}});

    LinearCode d2 = build_poly_code(4, 2, 5);
    CHECK(d2.gen.rows == std::vector<FpVector>{{1, 1, 1, 1}, {0, 1, 2, 3}, {0, 1, 4, 4}});

    CHECK_THROWS_AS(build_poly_code(6, 1, 5), std::domain_error);      // p < n
    CHECK_THROWS_AS(build_poly_code(4, 4, 5), std::domain_error);      // r >= n
    CHECK_THROWS_AS(build_poly_code(4, 1, 5, {0, 1, 2, 2}), std::domain_error);
}

TEST_CASE("dual codes") {
    LinearCode d1 = build_poly_code(4, 1, 5);
    LinearCode dual = dual_code(d1);
    CHECK(same_row_space(dual.gen, FpMatrix(4, {{2, 4, 1, 3}, {3, 0, 1, 1}}), 5));

    // dual of dual returns the original row space
    LinearCode d2 = build_poly_code(4, 2, 5);
    CHECK(same_row_space(dual_code(dual_code(d2)).gen, d2.gen, 5));

    // dim(dual(D_r)) = n - r - 1
    LinearCode d2_n5 = build_poly_code(5, 2, 5);
    CHECK(dual_code(d2_n5).dim() == 2);

    // G * dual(G)^T = 0 for a spread of parameters
    for (int p : {5, 7}) {
        for (int n = 2; n <= std::min(6, p); ++n) {
            for (int r = 0; r < n; ++r) {
                LinearCode c = build_poly_code(n, r, p);
                LinearCode d = dual_code(c);
                for (const auto& row : c.gen.rows) {
                    for (const auto& drow : d.gen.rows) {
                        CHECK(dot(row, drow, p) == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("minimum distance by exhaustive enumeration") {
    CHECK(min_distance(build_poly_code(4, 1, 5)) == 3);
    CHECK(min_distance(build_poly_code(4, 0, 5)) == 4);

    // Singleton bound met with equality, and dual distance r + 2.
    for (int p : {5, 7}) {
        for (int n = 2; n <= std::min(6, p); ++n) {
            for (int r = 0; r < n; ++r) {
                LinearCode c = build_poly_code(n, r, p);
                CHECK(min_distance(c) == n - r);
                if (r < n - 1) {
                    CHECK(min_distance(dual_code(c)) == r + 2);
                }
            }
        }
    }
}

TEST_CASE("minimum distance respects the enumeration cap") {
    CHECK_THROWS_AS(min_distance(build_poly_code(11, 10, 11), 1000), SizeCapError);
}

TEST_CASE("support codewords") {
    LinearCode d1 = build_poly_code(4, 1, 5);
    SUBCASE("support inside a distance-sized set is exact") {
        FpVector w = support_codeword(d1, {0, 1, 3});
        CHECK(d1.contains(w));
        CHECK(weight(w) == 3);
        CHECK(w[2] == 0);
        for (int i : {0, 1, 3}) {
            CHECK(w[i] != 0);
        }
    }
    SUBCASE("repetition code only supports the full set") {
        LinearCode d0 = build_poly_code(4, 0, 5);
        FpVector w = support_codeword(d0, {0, 1, 2, 3});
        CHECK(weight(w) == 4);
        CHECK(d0.contains(w));
        CHECK_THROWS_AS(support_codeword(d0, {0, 1, 2}), NotFoundError);
    }
    SUBCASE("every 3-subset of the dual admits a support codeword") {
        LinearCode dual = dual_code(d1);
        for (int a = 0; a < 4; ++a) {
            for (int b = a + 1; b < 4; ++b) {
                for (int c = b + 1; c < 4; ++c) {
                    FpVector w = support_codeword(dual, {a, b, c});
                    CHECK(weight(w) == 3);
                    CHECK(dual.contains(w));
                }
            }
        }
    }
}

TEST_CASE("lemma rows for the worked four-share example") {
    LemmaRows rows = lemma_rows(4, 2, 1, 5);

    LinearCode d1 = build_poly_code(4, 1, 5);
    LinearCode d2 = build_poly_code(4, 2, 5);
    LinearCode d1_perp = dual_code(d1);
    LinearCode d2_perp = dual_code(d2);
    LinearCode d0 = build_poly_code(4, 0, 5);

    // R spans the gap between the checks of D_2 and D_1.
    CHECK(d1_perp.contains(rows.row_r));
    CHECK_FALSE(d2_perp.contains(rows.row_r));
    // S spans the gap between D_0 and D_1.
    CHECK(d1.contains(rows.row_s));
    CHECK_FALSE(d0.contains(rows.row_s));

    // x_checks: basis of D_1^perp whose leading rows span D_2^perp.
    CHECK(rows.x_checks.n_rows() == 2);
    CHECK(same_row_space(rows.x_checks, d1_perp.gen, 5));
    FpMatrix leading_x(4, {rows.x_checks.rows[0]});
    CHECK(same_row_space(leading_x, d2_perp.gen, 5));
    CHECK(rows.x_checks.rows[1] == rows.row_r);

    // z_checks: basis of D_1 extending D_0.
    CHECK(rows.z_checks.n_rows() == 2);
    CHECK(same_row_space(rows.z_checks, d1.gen, 5));
    FpMatrix leading_z(4, {rows.z_checks.rows[0]});
    CHECK(same_row_space(leading_z, d0.gen, 5));
    CHECK(rows.z_checks.rows[1] == rows.row_s);
}

TEST_CASE("lemma rows in the two-share binary case") {
    LemmaRows rows = lemma_rows(2, 1, 0, 2);
    CHECK(rows.row_r == FpVector{1, 1});
    CHECK(rows.row_s == FpVector{1, 1});
    CHECK(rows.x_checks.rows == std::vector<FpVector>{{1, 1}});
    CHECK(rows.z_checks.rows == std::vector<FpVector>{{1, 1}});
}

TEST_CASE("lemma rows never land in the smaller space") {
    for (int p : {5, 7}) {
        for (int n = 2; n <= std::min(6, p); ++n) {
            for (int r = 1; r < n; ++r) {
                const int s = n - r - 1;
                if (2 * r < n) {
                    continue;
                }
                LemmaRows rows = lemma_rows(n, r, s, p);
                CHECK(dual_code(build_poly_code(n, r - 1, p)).contains(rows.row_r));
                CHECK_FALSE(dual_code(build_poly_code(n, r, p)).contains(rows.row_r));
                CHECK(build_poly_code(n, s, p).contains(rows.row_s));
                if (s > 0) {
                    CHECK_FALSE(build_poly_code(n, s - 1, p).contains(rows.row_s));
                } else {
                    CHECK(weight(rows.row_s) > 0);
                }
            }
        }
    }
    CHECK_THROWS_AS(lemma_rows(4, 1, 2, 5), std::domain_error);  // 2r < n
    CHECK_THROWS_AS(lemma_rows(4, 2, 0, 5), std::domain_error);  // s != n-r-1
}

TEST_CASE("weight-(r+1) codewords of the grown check matrix need the added row") {
    // Every minimum-weight element of D_{r-1}^perp picks up a nonzero
    // coefficient on R when written in the returned basis.
    for (int p : {5, 7}) {
        for (int n = 3; n <= std::min(5, p); ++n) {
            for (int r = 1; r < n - 1; ++r) {
                const int s = n - r - 1;
                if (2 * r < n) {
                    continue;
                }
                LemmaRows rows = lemma_rows(n, r, s, p);
                LinearCode big = dual_code(build_poly_code(n, r - 1, p));
                const int dim = big.dim();
                std::vector<int> msg(dim, 0);
                long long count = 1;
                for (int i = 0; i < dim; ++i) {
                    count *= p;
                }
                for (long long idx = 1; idx < count; ++idx) {
                    for (int i = 0; i < dim; ++i) {
                        if (++msg[i] < p) {
                            break;
                        }
                        msg[i] = 0;
                    }
                    FpVector word(n, 0);
                    for (int i = 0; i < dim; ++i) {
                        for (int j = 0; j < n; ++j) {
                            word[j] = mod_add(word[j], mod_mul(msg[i], big.gen.rows[i][j], p), p);
                        }
                    }
                    if (weight(word) != r + 1) {
                        continue;
                    }
                    auto coeffs = express_in_rows(rows.x_checks, word, p);
                    REQUIRE(coeffs.has_value());
                    CHECK((*coeffs)[rows.x_checks.n_rows() - 1] != 0);
                }
            }
        }
    }
}
