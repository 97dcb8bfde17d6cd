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

#include "qss/gf.hpp"

#include <stdexcept>
#include <string>

namespace qss {

bool is_prime(int p) {
    if (p < 2) {
        return false;
    }
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

int smallest_prime_at_least(int n) {
    int candidate = n < 2 ? 2 : n;
    while (!is_prime(candidate)) {
        ++candidate;
    }
    return candidate;
}

FieldModulus::FieldModulus(int prime) : p(prime) {
    if (!is_prime(prime)) {
        throw std::domain_error("modulus " + std::to_string(prime) + " is not prime");
    }
}

int mod_reduce(long long a, int p) {
    long long r = a % p;
    if (r < 0) {
        r += p;
    }
    return static_cast<int>(r);
}

int mod_add(int a, int b, int p) { return mod_reduce(static_cast<long long>(a) + b, p); }
int mod_sub(int a, int b, int p) { return mod_reduce(static_cast<long long>(a) - b, p); }
int mod_mul(int a, int b, int p) { return mod_reduce(static_cast<long long>(a) * b, p); }
int mod_neg(int a, int p) { return mod_reduce(-static_cast<long long>(a), p); }

int mod_pow(int a, long long e, int p) {
    if (e < 0) {
        return mod_pow(mod_inv(a, p), -e, p);
    }
    long long base = mod_reduce(a, p);
    long long acc = 1;
    while (e > 0) {
        if (e & 1) {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(acc);
}

int mod_inv(int a, int p) {
    a = mod_reduce(a, p);
    if (a == 0) {
        throw std::domain_error("division by zero in GF(" + std::to_string(p) + ")");
    }
    // Extended Euclid.
    int t = 0, new_t = 1;
    int r = p, new_r = a;
    while (new_r != 0) {
        int q = r / new_r;
        int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_reduce(t, p);
}

int weight(const FpVector& v) {
    int w = 0;
    for (int x : v) {
        if (x != 0) {
            ++w;
        }
    }
    return w;
}

FpVector vec_add(const FpVector& a, const FpVector& b, int p) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("vector length mismatch");
    }
    FpVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out[i] = mod_add(a[i], b[i], p);
    }
    return out;
}

FpVector vec_scale(int c, const FpVector& a, int p) {
    FpVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out[i] = mod_mul(c, a[i], p);
    }
    return out;
}

int dot(const FpVector& a, const FpVector& b, int p) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("vector length mismatch");
    }
    long long acc = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        acc += static_cast<long long>(a[i]) * b[i] % p;
    }
    return mod_reduce(acc, p);
}

FpMatrix::FpMatrix(int n_cols, std::vector<FpVector> r) : cols(n_cols), rows(std::move(r)) {
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols) {
            throw std::invalid_argument("matrix rows must have uniform length");
        }
    }
}

void FpMatrix::append_row(FpVector row) {
    if (static_cast<int>(row.size()) != cols) {
        throw std::invalid_argument("matrix rows must have uniform length");
    }
    rows.push_back(std::move(row));
}

FpMatrix rref(const FpMatrix& m, int p) {
    std::vector<FpVector> rows = m.rows;
    for (auto& row : rows) {
        for (auto& x : row) {
            x = mod_reduce(x, p);
        }
    }
    int pivot_row = 0;
    for (int col = 0; col < m.cols && pivot_row < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col] != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) {
            continue;
        }
        std::swap(rows[pivot_row], rows[sel]);
        int inv = mod_inv(rows[pivot_row][col], p);
        for (auto& x : rows[pivot_row]) {
            x = mod_mul(x, inv, p);
        }
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == pivot_row || rows[r][col] == 0) {
                continue;
            }
            int factor = rows[r][col];
            for (int c = 0; c < m.cols; ++c) {
                rows[r][c] = mod_sub(rows[r][c], mod_mul(factor, rows[pivot_row][c], p), p);
            }
        }
        ++pivot_row;
    }
    FpMatrix out(m.cols);
    for (int r = 0; r < pivot_row; ++r) {
        out.append_row(rows[r]);
    }
    return out;
}

int rank(const FpMatrix& m, int p) { return rref(m, p).n_rows(); }

FpMatrix null_space(const FpMatrix& m, int p) {
    FpMatrix red = rref(m, p);
    std::vector<int> pivot_col(red.n_rows(), -1);
    std::vector<bool> is_pivot(m.cols, false);
    for (int r = 0; r < red.n_rows(); ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (red.rows[r][c] != 0) {
                pivot_col[r] = c;
                is_pivot[c] = true;
                break;
            }
        }
    }
    FpMatrix basis(m.cols);
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) {
            continue;
        }
        FpVector v(m.cols, 0);
        v[free_col] = 1;
        for (int r = 0; r < red.n_rows(); ++r) {
            v[pivot_col[r]] = mod_neg(red.rows[r][free_col], p);
        }
        basis.append_row(std::move(v));
    }
    return rref(basis, p);
}

bool in_row_space(const FpMatrix& m, const FpVector& v, int p) {
    FpMatrix extended = m;
    extended.append_row(v);
    return rank(extended, p) == rank(m, p);
}

std::optional<FpVector> express_in_rows(const FpMatrix& m, const FpVector& v, int p) {
    // Solve x * m = v by eliminating on the transposed system [m^T | v^T].
    int n_rows = m.n_rows();
    FpMatrix sys(n_rows + 1);
    for (int c = 0; c < m.cols; ++c) {
        FpVector row(n_rows + 1);
        for (int r = 0; r < n_rows; ++r) {
            row[r] = mod_reduce(m.rows[r][c], p);
        }
        row[n_rows] = mod_reduce(v[c], p);
        sys.append_row(std::move(row));
    }
    FpMatrix red = rref(sys, p);
    FpVector x(n_rows, 0);
    for (const auto& row : red.rows) {
        int pivot = -1;
        for (int c = 0; c <= n_rows; ++c) {
            if (row[c] != 0) {
                pivot = c;
                break;
            }
        }
        if (pivot == n_rows) {
            return std::nullopt;  // inconsistent: v not in the row space
        }
        if (pivot >= 0) {
            x[pivot] = row[n_rows];
        }
    }
    return x;
}

int poly_eval(const FpVector& coeffs, int x, int p) {
    long long acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = (acc * x + *it) % p;
    }
    return mod_reduce(acc, p);
}

FpVector interpolate(const std::vector<std::pair<int, int>>& points, int p) {
    const int k = static_cast<int>(points.size());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (mod_reduce(points[i].first, p) == mod_reduce(points[j].first, p)) {
                throw std::domain_error("interpolation points must be pairwise distinct");
            }
        }
    }
    // Lagrange: sum_i y_i * prod_{j != i} (x - x_j) / (x_i - x_j).
    FpVector coeffs(k, 0);
    for (int i = 0; i < k; ++i) {
        FpVector basis{1};  // polynomial 1, grown by repeated multiplication
        int denom = 1;
        for (int j = 0; j < k; ++j) {
            if (j == i) {
                continue;
            }
            int xj = mod_reduce(points[j].first, p);
            FpVector next(basis.size() + 1, 0);
            for (size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] = mod_add(next[d + 1], basis[d], p);
                next[d] = mod_sub(next[d], mod_mul(xj, basis[d], p), p);
            }
            basis = std::move(next);
            denom = mod_mul(denom, mod_sub(points[i].first, points[j].first, p), p);
        }
        int scale = mod_mul(mod_reduce(points[i].second, p), mod_inv(denom, p), p);
        basis.resize(k, 0);
        for (int d = 0; d < k; ++d) {
            coeffs[d] = mod_add(coeffs[d], mod_mul(scale, basis[d], p), p);
        }
    }
    return coeffs;
}

}  // namespace qss
