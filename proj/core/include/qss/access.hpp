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

#ifndef QSS_ACCESS_HPP
#define QSS_ACCESS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace qss {

/// A set of parties.  Parties are 1-based indices; rendering as letters
/// A, B, C, ... happens only in the display layer.
using PartySet = std::set<int>;

std::string party_set_name(const PartySet& s);

/// Monotone access structure on parties {1..n_parties}, represented by its
/// minimal authorized sets, kept in canonical order (size, then
/// lexicographic on the sorted party lists).
struct AccessStructure {
    int n_parties = 0;
    std::vector<PartySet> minimal_sets;

    AccessStructure() = default;
    AccessStructure(int n_parties, std::vector<PartySet> minimal);

    bool operator==(const AccessStructure& o) const {
        return n_parties == o.n_parties && minimal_sets == o.minimal_sets;
    }
};

/// Drops supersets, orders canonically, validates the family.
AccessStructure normalize(int n_parties, const std::vector<PartySet>& sets);

/// T is authorized iff it contains some minimal set.
bool classify_authorized(const AccessStructure& s, const PartySet& t);

/// True iff every pair of minimal sets intersects — equivalently no
/// authorized set fits inside the complement of another.
bool no_cloning_ok(const AccessStructure& s);

/// Throws ConstructionError describing the offending pair when the
/// structure violates no-cloning.
void require_no_cloning(const AccessStructure& s);

/// True iff for every T exactly one of T and its complement is authorized.
bool is_maximal(const AccessStructure& s);

/// Completes the structure to a maximal one by adding authorized sets that
/// keep no-cloning (a candidate is added when it and its complement are both
/// still unauthorized).  Candidates are scanned once in a fixed order
/// (larger sets first, descending lexicographic within a size), after which
/// every complement pair is resolved; the result is deterministic.
AccessStructure maximal_completion(const AccessStructure& s);

/// Keeps only the minimal sets avoiding the dropped party; the party
/// universe is unchanged, the dropped party just becomes unimportant.
AccessStructure restrict_structure(const AccessStructure& s, int dropped_party);

/// A party is important iff it appears in some minimal set.
bool is_important(const AccessStructure& s, int party);

/// All k-subsets of {1..n}.
AccessStructure threshold_structure(int k, int n);

/// All 2^n subsets of {1..n} in (size, lexicographic) order.
std::vector<PartySet> all_subsets(int n_parties);

}  // namespace qss

#endif
