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

#ifndef QSS_CODES_HPP
#define QSS_CODES_HPP

#include <set>
#include <string>
#include <vector>

#include "qss/gf.hpp"

namespace qss {

/// Classical linear code over GF(p), held as a full-row-rank generator
/// matrix.  The zero code (no rows) is allowed so duals of full-space codes
/// stay representable.
struct LinearCode {
    FieldModulus p;
    int n = 0;
    FpMatrix gen;
    std::string label;

    LinearCode() = default;
    LinearCode(FieldModulus modulus, int length, FpMatrix generator, std::string tag = "");

    int dim() const { return gen.n_rows(); }
    bool contains(const FpVector& word) const { return in_row_space(gen, word, p.p); }
};

/// Code generated by evaluations of 1, x, ..., x^r at the points alpha.
/// Default evaluation points are 0, 1, ..., n-1.
LinearCode build_poly_code(int n, int r, int p, const std::vector<int>& alphas = {});

/// Dual code: null space of the generator, rows in reduced echelon form.
LinearCode dual_code(const LinearCode& c);

/// Minimum Hamming weight over the p^dim - 1 nonzero codewords.  Guarded by
/// an enumeration cap; larger instances raise SizeCapError.
int min_distance(const LinearCode& c, long long enumeration_cap = 2'000'000);

/// A nonzero codeword supported inside T (and exactly on T when |T| equals
/// the code distance).  NotFoundError when no such codeword exists.
FpVector support_codeword(const LinearCode& c, const std::set<int>& t);

/// The distinguished rows used by the hybrid construction:
///  - row_r spans the gap between the parity checks of D_r and D_{r-1};
///  - row_s spans the gap between the generators of D_{s-1} and D_s.
/// x_checks is a parity-check basis of D_{r-1} whose leading rows span the
/// checks of D_r and whose final row is row_r; z_checks is a generator basis
/// of D_s extending D_{s-1}, final row row_s.
struct LemmaRows {
    FpVector row_r;
    FpVector row_s;
    FpMatrix x_checks;
    FpMatrix z_checks;
};

LemmaRows lemma_rows(int n, int r, int s, int p);

}  // namespace qss

#endif
