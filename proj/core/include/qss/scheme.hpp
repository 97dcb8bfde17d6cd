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

#ifndef QSS_SCHEME_HPP
#define QSS_SCHEME_HPP

#include <optional>
#include <string>
#include <vector>

#include "qss/access.hpp"
#include "qss/qsim.hpp"

namespace qss {

/// Node of a scheme tree.  A leaf is one physical qupit owned by a party
/// (or by the environment, party 0).  An internal node is a threshold
/// encoder: the secret is the degree-(k-1) coefficient of a polynomial
/// whose evaluations at the node's points feed the slots below.
struct SchemeNode {
    int party = -1;              // leaves only; 0 means environment
    int k = 0;                   // internal nodes only
    std::vector<int> alphas;     // evaluation points, one per slot
    std::vector<SchemeNode> slots;

    bool is_leaf() const { return slots.empty(); }

    static SchemeNode leaf(int party);
    static SchemeNode threshold(int k, std::vector<int> alphas, std::vector<SchemeNode> slots);
};

/// A quantum secret sharing scheme: a tree of threshold nodes over physical
/// qupit leaves, a party assignment per leaf, and the declared access
/// structure.  Mixed schemes are always carried as the purified tree with
/// explicit environment leaves.
struct Scheme {
    int p = 0;
    SchemeNode root;
    int n_parties = 0;
    AccessStructure declared;

    int n_leaves() const { return static_cast<int>(leaf_party.size()); }
    SubsystemLayout layout() const;
    std::vector<int> leaves_of(const PartySet& parties) const;
    std::vector<int> environment_leaves() const;
    bool is_pure() const { return environment_leaves().empty(); }

    /// leaf id (depth-first order) -> owning party (0 = environment)
    std::vector<int> leaf_party;

    /// Recomputes leaf_party from the tree; called by every builder.
    void refresh_leaves();
};

/// Pure ((k, 2k-1)) threshold encoder with the last 2k-1-n slots assigned
/// to the environment when n < 2k-1.  Auto-chooses the smallest usable
/// prime when p is omitted.  Rejects k <= n/2 (no-cloning).
Scheme build_threshold(int k, int n, std::optional<int> p = std::nullopt,
                       const std::vector<int>& alphas = {});

/// Encoding isometry applied to a basis secret, as a sparse state over all
/// leaves (environment included).
SparseState encode_basis(const Scheme& scheme, int secret);

/// Encoding isometry applied to an arbitrary p-dimensional secret.
StateVector encode(const Scheme& scheme, const StateVector& secret);
SparseState encode_sparse(const Scheme& scheme, const CVector& secret_amps);

/// Reconstruction: a unitary supported on T's leaves (computed as a chain
/// of computational-basis permutations) that moves the secret onto the
/// lexicographically first leaf of T and leaves the other registers in a
/// deterministic junk state.
struct DecodePlan {
    std::vector<std::pair<std::vector<int>, std::vector<std::int64_t>>> steps;
    int secret_leaf = -1;  // lexicographically first leaf of T
};

DecodePlan decode_plan(const Scheme& scheme, const PartySet& t);

struct DecodeResult {
    StateVector state;      // global state after the decode unitary
    int secret_leaf = -1;   // register now holding the secret
    StateVector secret;     // extracted p-dimensional secret state
    double secret_purity = 0.0;
};

/// Applies the decode unitary for the authorized set T.  Unauthorized sets
/// are refused outright.
DecodeResult decode(const Scheme& scheme, const PartySet& t, const StateVector& global);
SparseState decode_sparse(const Scheme& scheme, const DecodePlan& plan, const SparseState& s);

/// Expands each real share of the outer scheme with the corresponding inner
/// scheme (environment slots stay environment leaves).  The declared
/// structure is recomputed over the union of the inner party sets: T is
/// authorized iff the outer shares whose inner scheme T authorizes form an
/// outer-authorized set.
Scheme concatenate(const Scheme& outer, const std::vector<Scheme>& inners, int n_parties);

struct PurifyResult {
    Scheme scheme;
    bool changed = false;  // false when the input was already pure
    int new_party = 0;
};

/// Bundles the environment leaves as one new party's share.  The declared
/// structure extends so that a set containing the new share is authorized
/// exactly when its complement among the old parties is unauthorized.
PurifyResult purify(const Scheme& scheme, std::optional<int> new_party = std::nullopt);

struct GeneralBuildOptions {
    /// Use the one-party trivial scheme for the completion shares whenever
    /// some party lies in every minimal set.
    bool trivial_completion_when_possible = true;
};

/// Smallest prime usable for every threshold node the recursive builder
/// would create for this structure.
int required_prime(const AccessStructure& s, const GeneralBuildOptions& opts = {});

/// Recursive construction of a scheme for any monotone no-cloning access
/// structure: an outer ((r, 2r-1)) node over the r minimal-set schemes plus
/// r-1 copies of a scheme for a maximal completion (built by dropping the
/// highest-index party, recursing and purifying).  Maximal structures skip
/// the outer layer and go straight to the purification path.
Scheme build_general(const AccessStructure& s, std::optional<int> p = std::nullopt,
                     const GeneralBuildOptions& opts = {});

/// Unitary on T's leaves implementing a logical update: conjugates U on the
/// secret register by the decode network, so that V(encode(x)) equals
/// encode(U x) while every register outside T keeps its reduced state.
StateVector apply_local_update(const Scheme& scheme, const PartySet& t, const CMatrix& u,
                               const StateVector& global);
/// Dense matrix of the same unitary on the joint space of T's leaves
/// (ordered by leaf id); cap-checked.
CMatrix local_update_matrix(const Scheme& scheme, const PartySet& t, const CMatrix& u);

/// Coherently swaps a fresh p-dimensional secret held in an extra register
/// into the scheme through the authorized set T.  Returns the global state
/// (scheme leaves then the ancilla): the scheme now encodes `fresh`, the
/// ancilla holds whatever the scheme encoded before.
StateVector swap_in_secret(const Scheme& scheme, const PartySet& t, const StateVector& global,
                           const CVector& fresh);

}  // namespace qss

#endif
