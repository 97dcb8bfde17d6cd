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

#include "qss/access.hpp"

#include <algorithm>
#include <stdexcept>

#include "qss/errors.hpp"

namespace qss {

namespace {

bool subset_of(const PartySet& a, const PartySet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const PartySet& a, const PartySet& b) {
    for (int x : a) {
        if (b.count(x)) {
            return true;
        }
    }
    return false;
}

PartySet complement(const PartySet& t, int n) {
    PartySet out;
    for (int i = 1; i <= n; ++i) {
        if (!t.count(i)) {
            out.insert(i);
        }
    }
    return out;
}

// size first, then lexicographic on the sorted party lists
bool canonical_less(const PartySet& a, const PartySet& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::string party_set_name(const PartySet& s) {
    if (s.empty()) {
        return "{}";
    }
    std::string out = "{";
    bool letters = true;
    for (int x : s) {
        letters = letters && x >= 1 && x <= 26;
    }
    bool first = true;
    for (int x : s) {
        if (!first && !letters) {
            out += ",";
        }
        first = false;
        out += letters ? std::string(1, static_cast<char>('A' + x - 1)) : std::to_string(x);
    }
    return out + "}";
}

AccessStructure::AccessStructure(int n, std::vector<PartySet> minimal)
    : n_parties(n), minimal_sets(std::move(minimal)) {
    if (n_parties < 1) {
        throw std::domain_error("need at least one party");
    }
    if (minimal_sets.empty()) {
        throw std::domain_error("access structure needs at least one authorized set");
    }
    for (const auto& s : minimal_sets) {
        if (s.empty()) {
            throw std::domain_error("authorized sets must be nonempty");
        }
        for (int party : s) {
            if (party < 1 || party > n_parties) {
                throw std::domain_error("party index out of range");
            }
        }
    }
    for (size_t i = 0; i < minimal_sets.size(); ++i) {
        for (size_t j = 0; j < minimal_sets.size(); ++j) {
            if (i != j && subset_of(minimal_sets[i], minimal_sets[j])) {
                throw std::domain_error("minimal sets must be an antichain; call normalize()");
            }
        }
    }
    std::sort(minimal_sets.begin(), minimal_sets.end(), canonical_less);
}

AccessStructure normalize(int n_parties, const std::vector<PartySet>& sets) {
    if (sets.empty()) {
        throw std::domain_error("access structure needs at least one authorized set");
    }
    std::vector<PartySet> minimal;
    for (const auto& candidate : sets) {
        bool has_subset = false;
        for (const auto& other : sets) {
            if (&other != &candidate && subset_of(other, candidate) && other != candidate) {
                has_subset = true;
                break;
            }
        }
        if (!has_subset && std::find(minimal.begin(), minimal.end(), candidate) == minimal.end()) {
            minimal.push_back(candidate);
        }
    }
    return AccessStructure(n_parties, std::move(minimal));
}

bool classify_authorized(const AccessStructure& s, const PartySet& t) {
    for (int party : t) {
        if (party < 1 || party > s.n_parties) {
            throw std::domain_error("party index out of range");
        }
    }
    for (const auto& m : s.minimal_sets) {
        if (subset_of(m, t)) {
            return true;
        }
    }
    return false;
}

bool no_cloning_ok(const AccessStructure& s) {
    for (size_t i = 0; i < s.minimal_sets.size(); ++i) {
        for (size_t j = i + 1; j < s.minimal_sets.size(); ++j) {
            if (!intersects(s.minimal_sets[i], s.minimal_sets[j])) {
                return false;
            }
        }
    }
    return true;
}

void require_no_cloning(const AccessStructure& s) {
    for (size_t i = 0; i < s.minimal_sets.size(); ++i) {
        for (size_t j = i + 1; j < s.minimal_sets.size(); ++j) {
            if (!intersects(s.minimal_sets[i], s.minimal_sets[j])) {
                throw ConstructionError(
                    "no-cloning violation: cannot authorize " +
                    party_set_name(s.minimal_sets[j]) + " because its complement contains " +
                    party_set_name(s.minimal_sets[i]) + ", which is already authorized");
            }
        }
    }
}

bool is_maximal(const AccessStructure& s) {
    for (const auto& t : all_subsets(s.n_parties)) {
        const bool a = classify_authorized(s, t);
        const bool b = classify_authorized(s, complement(t, s.n_parties));
        if (a == b) {
            return false;
        }
    }
    return true;
}

AccessStructure maximal_completion(const AccessStructure& s) {
    if (!no_cloning_ok(s)) {
        throw ConstructionError("maximal completion requires a no-cloning structure");
    }
    std::vector<PartySet> subsets = all_subsets(s.n_parties);
    std::reverse(subsets.begin(), subsets.end());
    std::vector<PartySet> authorized = s.minimal_sets;
    auto is_auth = [&](const PartySet& t) {
        for (const auto& m : authorized) {
            if (subset_of(m, t)) {
                return true;
            }
        }
        return false;
    };
    // One pass suffices: once a set has been scanned, either it or its
    // complement is authorized, and authorization only grows.
    for (const auto& t : subsets) {
        if (t.empty() || static_cast<int>(t.size()) == s.n_parties) {
            continue;
        }
        if (!is_auth(t) && !is_auth(complement(t, s.n_parties))) {
            authorized.push_back(t);
        }
    }
    AccessStructure out = normalize(s.n_parties, std::move(authorized));
    require_no_cloning(out);
    return out;
}

AccessStructure restrict_structure(const AccessStructure& s, int dropped_party) {
    if (dropped_party < 1 || dropped_party > s.n_parties) {
        throw std::domain_error("party index out of range");
    }
    std::vector<PartySet> kept;
    for (const auto& m : s.minimal_sets) {
        if (!m.count(dropped_party)) {
            kept.push_back(m);
        }
    }
    if (kept.empty()) {
        throw ConstructionError("degenerate restriction: party " +
                                party_set_name({dropped_party}) +
                                " appears in every minimal authorized set");
    }
    return AccessStructure(s.n_parties, std::move(kept));
}

bool is_important(const AccessStructure& s, int party) {
    if (party < 1 || party > s.n_parties) {
        throw std::domain_error("party index out of range");
    }
    for (const auto& m : s.minimal_sets) {
        if (m.count(party)) {
            return true;
        }
    }
    return false;
}

AccessStructure threshold_structure(int k, int n) {
    if (k < 1 || k > n) {
        throw std::domain_error("threshold must satisfy 1 <= k <= n");
    }
    std::vector<PartySet> sets;
    for (const auto& t : all_subsets(n)) {
        if (static_cast<int>(t.size()) == k) {
            sets.push_back(t);
        }
    }
    return AccessStructure(n, std::move(sets));
}

std::vector<PartySet> all_subsets(int n_parties) {
    if (n_parties < 0 || n_parties > 20) {
        throw std::domain_error("subset enumeration limited to 20 parties");
    }
    std::vector<PartySet> out;
    out.reserve(1u << n_parties);
    for (std::uint32_t mask = 0; mask < (1u << n_parties); ++mask) {
        PartySet t;
        for (int i = 0; i < n_parties; ++i) {
            if (mask & (1u << i)) {
                t.insert(i + 1);
            }
        }
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace qss
