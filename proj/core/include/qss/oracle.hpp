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

#ifndef QSS_ORACLE_HPP
#define QSS_ORACLE_HPP

#include <string>
#include <vector>

#include "qss/access.hpp"
#include "qss/hybrid.hpp"
#include "qss/scheme.hpp"

namespace qss {

/// The erasure condition on a leaf set K asks that <phi| E |phi> take a
/// state-independent value c(E) for every operator E on K and every code
/// state |phi|>.
///
/// Because phi -> <phi|E|phi> is a quadratic form, checking it on the p
/// basis-secret encodings plus the p(p-1) equal-weight pairwise
/// superpositions with relative phases 1 and i determines it on the whole
/// code subspace: those states polarize the underlying sesquilinear form
/// <phi_i|E|phi_j>, whose constancy (diagonal equal, off-diagonal zero) is
/// exactly the condition.  The certifier always evaluates the sesquilinear
/// form through the reduced transition matrices tr_{K^c}|phi_j><phi_i| —
/// equality of those matrices is the closure of the word sweep over the
/// full operator algebra on K — and additionally sweeps every generalized
/// Pauli word on K (the operator basis) whenever p^{2|K|} fits under
/// word_sweep_limit, reporting the worst deviation seen by either route.
struct ErasureOptions {
    double tolerance = 1e-9;
    long long word_sweep_limit = 65536;  // max p^{2|K|} for the explicit sweep
};

struct ErasureCheck {
    bool holds = false;
    double max_deviation = 0.0;
    bool word_sweep_ran = false;
};

/// Encoding map consumed by the certifier: basis-secret encodings over all
/// leaves, plus the leaf ownership needed to translate party subsets.  The
/// declared access structure is deliberately absent.
struct EncoderView {
    int p = 0;
    SubsystemLayout layout;
    std::vector<int> leaf_party;  // 0 = environment
    int n_parties = 0;
    std::vector<SparseState> basis_states;  // encodings of |0>, ..., |p-1>
};

EncoderView make_encoder_view(const Scheme& scheme);

ErasureCheck erasure_condition_check(const EncoderView& encoder, const std::vector<int>& k_leaves,
                                     const ErasureOptions& opts = {});

enum class Verdict { Authorized, Unauthorized, Neither };

std::string verdict_name(Verdict v);

struct SubsetVerdict {
    PartySet subset;
    Verdict verdict = Verdict::Neither;
    double deviation_unauthorized = 0.0;  // erasure check on the subset's leaves
    double deviation_authorized = 0.0;    // erasure check on the complement's leaves
};

struct AccessMap {
    int n_parties = 0;
    std::vector<SubsetVerdict> subsets;  // (size, lex) order over all 2^n subsets
    int neither_count = 0;
    double max_deviation = 0.0;
    double runtime_seconds = 0.0;

    const SubsetVerdict& at(const PartySet& t) const;
    bool authorized(const PartySet& t) const { return at(t).verdict == Verdict::Authorized; }

    /// True iff the map has no Neither verdicts and matches the monotone
    /// closure of the given structure.
    bool matches(const AccessStructure& declared) const;
};

/// Classifies every subset of parties by the erasure condition alone:
/// unauthorized iff the condition holds on the subset's leaves, authorized
/// iff it holds on the complement's leaves (environment always counted on
/// the complement side); inconsistent combinations become Neither.
AccessMap access_map(const EncoderView& encoder, const ErasureOptions& opts = {}, int jobs = 1);
AccessMap access_map(const Scheme& scheme, const ErasureOptions& opts = {}, int jobs = 1);

/// Classifies every subset of hybrid shares with the classical-secret
/// conditions over the orthonormal encodings: T unauthorized iff every
/// operator on T has i-independent expectation <psi_i|F|psi_i>; T
/// authorized iff every operator on the complement of T has vanishing
/// cross terms <psi_i|E|psi_j>.  Mixed encodings are purified first, the
/// purifying register always assigned to the complement side.
AccessMap hybrid_check(const HybridScheme& h, const ErasureOptions& opts = {});

struct PartyAudit {
    int party = 0;
    bool important = false;
    int n_leaves = 0;
    long long share_dim = 1;
    long long bound = 1;
    bool ok = true;
};

struct SizeAudit {
    std::vector<PartyAudit> parties;
    bool ok = true;
    std::string note;
};

/// Every important party's total share dimension must reach the secret
/// dimension p.  Violations indicate a construction bug.
SizeAudit size_audit(const Scheme& scheme);

/// Hybrid shares are single qupits; the bound is the square root of the
/// p^2-dimensional secret, met with equality.
SizeAudit size_audit(const HybridScheme& h);

}  // namespace qss

#endif
