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

#include <Eigen/QR>
#include <random>

#include "qss/errors.hpp"
#include "qss/qsim.hpp"

using namespace qss;

namespace {

StateVector random_state(const SubsystemLayout& layout, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    CVector v(layout.total_dim());
    for (std::int64_t i = 0; i < v.size(); ++i) {
        v(i) = cx(gauss(rng), gauss(rng));
    }
    v /= v.norm();
    return StateVector(layout, std::move(v));
}

CMatrix random_unitary(std::int64_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    CMatrix m(dim, dim);
    for (std::int64_t r = 0; r < dim; ++r) {
        for (std::int64_t c = 0; c < dim; ++c) {
            m(r, c) = cx(gauss(rng), gauss(rng));
        }
    }
    return Eigen::HouseholderQR<CMatrix>(m).householderQ();
}

StateVector bell_state(double sign) {
    CVector v = CVector::Zero(4);
    v(0) = 1.0 / std::sqrt(2.0);
    v(3) = sign / std::sqrt(2.0);
    return StateVector(SubsystemLayout({2, 2}), std::move(v));
}

}  // namespace

TEST_CASE("mixed-radix indexing is most significant first") {
    SubsystemLayout layout({2, 3, 5});
    CHECK(layout.total_dim() == 30);
    CHECK(layout.index_of({1, 2, 4}) == 29);
    CHECK(layout.index_of({1, 0, 3}) == 18);
    CHECK(layout.digits_of(18) == std::vector<int>{1, 0, 3});
    CHECK(layout.dim_of({0, 2}) == 10);
}

TEST_CASE("partial trace basics") {
    SUBCASE("one side of a Bell pair is maximally mixed") {
        DensityMatrix rho = partial_trace(bell_state(1.0), {0});
        CHECK((rho.m - CMatrix::Identity(2, 2) * 0.5).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("product states reduce to their factors") {
        StateVector psi = StateVector::basis_state(SubsystemLayout({2, 2}), 1);  // |0>|1>
        DensityMatrix rho = partial_trace(psi, {0});
        CHECK(std::abs(rho.m(0, 0) - cx(1.0, 0.0)) < 1e-12);
        CHECK(std::abs(rho.m(1, 1)) < 1e-12);
    }
    SUBCASE("keeping everything returns the state") {
        StateVector psi = random_state(SubsystemLayout({2, 3}), 7);
        DensityMatrix rho = partial_trace(psi, {0, 1});
        CHECK((rho.m - (psi.amps * psi.amps.adjoint())).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("partial trace composes") {
    SubsystemLayout layout({3, 3, 3});
    StateVector psi = random_state(layout, 11);
    DensityMatrix direct = partial_trace(psi, {0});
    DensityMatrix two_step = partial_trace(partial_trace(psi, {0, 1}), {0});
    CHECK((direct.m - two_step.m).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("apply_on_subset") {
    SubsystemLayout layout({3, 3});
    SUBCASE("identity leaves the state alone") {
        StateVector psi = random_state(layout, 3);
        StateVector out = apply_on_subset(psi, CMatrix::Identity(3, 3), {0});
        CHECK((out.amps - psi.amps).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("a shift on the first qutrit moves |00> to |10>") {
        StateVector psi = StateVector::basis_state(layout, 0);
        CMatrix x = pauli_matrix(PauliWord(3, 1, 0, {1}, {0}));
        StateVector out = apply_on_subset(psi, x, {0});
        CHECK(std::abs(out.amps(layout.index_of({1, 0})) - cx(1.0, 0.0)) < 1e-12);
    }
    SUBCASE("full-space application equals direct matrix-vector product") {
        StateVector psi = random_state(layout, 5);
        CMatrix u = random_unitary(9, 17);
        StateVector via_subset = apply_on_subset(psi, u, {0, 1});
        CVector direct = u * psi.amps;
        CHECK((via_subset.amps - direct).cwiseAbs().maxCoeff() < 1e-10);
    }
    SUBCASE("norm is preserved by unitaries") {
        StateVector psi = random_state(layout, 23);
        StateVector out = apply_on_subset(psi, random_unitary(3, 29), {1});
        CHECK(std::abs(out.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("expectations") {
    const PauliWord zz(2, 2, 0, {0, 0}, {1, 1});
    const PauliWord xx(2, 2, 0, {1, 1}, {0, 0});
    StateVector plus = bell_state(1.0);
    StateVector minus = bell_state(-1.0);
    CHECK(std::abs(expectation(plus, zz, {0, 1}) - cx(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(expectation(plus, xx, {0, 1}) - cx(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(expectation(minus, xx, {0, 1}) - cx(-1.0, 0.0)) < 1e-12);
    CHECK(std::abs(expectation(minus, zz, {0, 1}) - cx(1.0, 0.0)) < 1e-12);

    DensityMatrix rho = DensityMatrix::pure(plus);
    CHECK(std::abs(expectation(rho, zz, {0, 1}) - cx(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(expectation(rho, CMatrix::Identity(2, 2), {1}) - cx(1.0, 0.0)) < 1e-12);

    // Pauli-word and dense-matrix paths agree
    StateVector psi = random_state(SubsystemLayout({2, 2}), 41);
    CHECK(std::abs(expectation(psi, xx, {0, 1}) -
                   expectation(psi, pauli_matrix(xx), {0, 1})) < 1e-12);
}

TEST_CASE("trace distance and fidelity") {
    SubsystemLayout single({2});
    StateVector zero = StateVector::basis_state(single, 0);
    StateVector one = StateVector::basis_state(single, 1);
    DensityMatrix rho0 = DensityMatrix::pure(zero);
    DensityMatrix rho1 = DensityMatrix::pure(one);
    CHECK(trace_distance(rho0, rho0) < 1e-12);
    CHECK(std::abs(trace_distance(rho0, rho1) - 1.0) < 1e-12);
    CHECK(std::abs(fidelity(zero, rho0) - 1.0) < 1e-12);
    CHECK(fidelity(zero, rho1) < 1e-12);
    CHECK(std::abs(fidelity(zero, zero) - 1.0) < 1e-12);
}

TEST_CASE("complementary reductions of a pure state share their spectrum") {
    SubsystemLayout layout({2, 3, 2});
    StateVector psi = random_state(layout, 53);
    DensityMatrix a = partial_trace(psi, {0});
    DensityMatrix b = partial_trace(psi, {1, 2});
    Eigen::SelfAdjointEigenSolver<CMatrix> sa(a.m, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<CMatrix> sb(b.m, Eigen::EigenvaluesOnly);
    // nonzero eigenvalues agree; b has extra zeros
    auto ea = sa.eigenvalues();
    auto eb = sb.eigenvalues();
    for (int i = 0; i < ea.size(); ++i) {
        CHECK(std::abs(ea(ea.size() - 1 - i) - eb(eb.size() - 1 - i)) < 1e-10);
    }
}

TEST_CASE("sparse states round-trip and reduce consistently") {
    SubsystemLayout layout({3, 3, 3});
    StateVector psi = random_state(layout, 61);
    SparseState sparse = SparseState::from_dense(psi);
    CHECK((sparse.to_dense().amps - psi.amps).cwiseAbs().maxCoeff() < 1e-12);
    DensityMatrix dense_red = partial_trace(psi, {0, 2});
    DensityMatrix sparse_red = partial_trace(sparse, {0, 2});
    CHECK((dense_red.m - sparse_red.m).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("caps fail loudly and can be overridden") {
    SimCaps::reset();
    CHECK_THROWS_AS(StateVector::basis_state(SubsystemLayout({2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
                                                              2, 2, 2, 2}),
                                             0),
                    SizeCapError);
    SimCaps::set_max_state_dim(1 << 16);
    CHECK_NOTHROW(StateVector::basis_state(
        SubsystemLayout({2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}), 0));
    SimCaps::reset();
    CHECK_THROWS_AS(DensityMatrix::maximally_mixed(SubsystemLayout({1 << 13})), SizeCapError);
}

TEST_CASE("state validation") {
    SubsystemLayout layout({2});
    CVector bad(2);
    bad << 1.0, 1.0;
    CHECK_THROWS_AS(StateVector(layout, bad), std::invalid_argument);
    CMatrix not_herm(2, 2);
    not_herm << 1.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(DensityMatrix(layout, not_herm), std::invalid_argument);
}

TEST_CASE("PSD validation catches negative eigenvalues") {
    SubsystemLayout layout({2});
    CMatrix ok(2, 2);
    ok << 0.5, 0.0, 0.0, 0.5;
    CHECK_NOTHROW(DensityMatrix(layout, ok).validate_psd());
    CMatrix bad(2, 2);
    bad << 1.5, 0.0, 0.0, -0.5;
    CHECK_THROWS_AS(DensityMatrix(layout, bad).validate_psd(), std::invalid_argument);
}
