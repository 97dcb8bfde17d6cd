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

#ifndef QSS_GF_HPP
#define QSS_GF_HPP

#include <optional>
#include <utility>
#include <vector>

namespace qss {

bool is_prime(int p);
int smallest_prime_at_least(int n);

/// A prime modulus p >= 2.  Construction runs a deterministic primality
/// check; everything downstream may assume the field is valid.
struct FieldModulus {
    int p;

    FieldModulus() : p(0) {}
    explicit FieldModulus(int prime);

    bool operator==(const FieldModulus& o) const { return p == o.p; }
};

int mod_reduce(long long a, int p);
int mod_add(int a, int b, int p);
int mod_sub(int a, int b, int p);
int mod_mul(int a, int b, int p);
int mod_neg(int a, int p);
int mod_pow(int a, long long e, int p);
/// Multiplicative inverse; throws std::domain_error for a == 0.
int mod_inv(int a, int p);

/// Vector over GF(p): entries reduced to [0, p).
using FpVector = std::vector<int>;

int weight(const FpVector& v);
FpVector vec_add(const FpVector& a, const FpVector& b, int p);
FpVector vec_scale(int c, const FpVector& a, int p);
int dot(const FpVector& a, const FpVector& b, int p);

/// Dense matrix over GF(p) with an explicit column count so that empty
/// matrices (zero codes, trivial duals) stay well-formed.
struct FpMatrix {
    int cols = 0;
    std::vector<FpVector> rows;

    FpMatrix() = default;
    explicit FpMatrix(int n_cols) : cols(n_cols) {}
    FpMatrix(int n_cols, std::vector<FpVector> r);

    int n_rows() const { return static_cast<int>(rows.size()); }
    void append_row(FpVector row);
    bool operator==(const FpMatrix& o) const { return cols == o.cols && rows == o.rows; }
};

/// Reduced row echelon form (zero rows dropped).  Deterministic: pivots are
/// chosen left to right, rows fully reduced.
FpMatrix rref(const FpMatrix& m, int p);
int rank(const FpMatrix& m, int p);

/// Basis of { x : M x^T = 0 }, returned in reduced echelon form.
FpMatrix null_space(const FpMatrix& m, int p);

bool in_row_space(const FpMatrix& m, const FpVector& v, int p);

/// Coefficients c with sum_i c_i * rows_i = v, if v lies in the row space.
std::optional<FpVector> express_in_rows(const FpMatrix& m, const FpVector& v, int p);

/// Horner evaluation of a polynomial given as (c_0, c_1, ..., c_d).
int poly_eval(const FpVector& coeffs, int x, int p);

/// Unique polynomial of degree < points.size() through the given
/// (x, value) pairs.  Repeated x values are a domain error.
FpVector interpolate(const std::vector<std::pair<int, int>>& points, int p);

}  // namespace qss

#endif
