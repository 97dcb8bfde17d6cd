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

#include "qss/scheme.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "qss/errors.hpp"
#include "qss/gf.hpp"

namespace qss {

SchemeNode SchemeNode::leaf(int party) {
    if (party < 0) {
        throw std::domain_error("leaf party must be >= 0 (0 = environment)");
    }
    SchemeNode node;
    node.party = party;
    return node;
}

SchemeNode SchemeNode::threshold(int k, std::vector<int> alphas, std::vector<SchemeNode> slots) {
    if (k < 1) {
        throw std::domain_error("threshold k must be >= 1");
    }
    if (alphas.size() != slots.size()) {
        throw std::invalid_argument("need one evaluation point per slot");
    }
    if (static_cast<int>(slots.size()) < k) {
        throw std::invalid_argument("threshold node needs at least k slots");
    }
    SchemeNode node;
    node.party = -1;
    node.k = k;
    node.alphas = std::move(alphas);
    node.slots = std::move(slots);
    return node;
}

namespace {

void walk_leaves(const SchemeNode& node, const std::function<void(const SchemeNode&)>& fn) {
    if (node.is_leaf()) {
        fn(node);
        return;
    }
    for (const auto& slot : node.slots) {
        walk_leaves(slot, fn);
    }
}

int leaf_count(const SchemeNode& node) {
    if (node.is_leaf()) {
        return 1;
    }
    int total = 0;
    for (const auto& slot : node.slots) {
        total += leaf_count(slot);
    }
    return total;
}

void validate_tree(const SchemeNode& node, int p) {
    if (node.is_leaf()) {
        return;
    }
    if (node.k < 1 || static_cast<int>(node.slots.size()) < node.k) {
        throw ParseError("threshold node needs k >= 1 and at least k slots");
    }
    for (size_t i = 0; i < node.alphas.size(); ++i) {
        for (size_t j = i + 1; j < node.alphas.size(); ++j) {
            if (mod_reduce(node.alphas[i], p) == mod_reduce(node.alphas[j], p)) {
                throw ParseError("threshold node evaluation points must be distinct mod p");
            }
        }
    }
    for (const auto& slot : node.slots) {
        validate_tree(slot, p);
    }
}

void relabel_parties(SchemeNode& node, const std::vector<int>& map) {
    if (node.is_leaf()) {
        if (node.party > 0) {
            node.party = map[node.party];
        }
        return;
    }
    for (auto& slot : node.slots) {
        relabel_parties(slot, map);
    }
}

}  // namespace

void Scheme::refresh_leaves() {
    validate_tree(root, p);
    leaf_party.clear();
    walk_leaves(root, [&](const SchemeNode& leaf) { leaf_party.push_back(leaf.party); });
    for (int party : leaf_party) {
        if (party > n_parties) {
            throw std::domain_error("leaf owned by a party outside the universe");
        }
    }
}

SubsystemLayout Scheme::layout() const {
    return SubsystemLayout(std::vector<std::int64_t>(leaf_party.size(), p));
}

std::vector<int> Scheme::leaves_of(const PartySet& parties) const {
    std::vector<int> out;
    for (int leaf = 0; leaf < n_leaves(); ++leaf) {
        if (leaf_party[leaf] > 0 && parties.count(leaf_party[leaf])) {
            out.push_back(leaf);
        }
    }
    return out;
}

std::vector<int> Scheme::environment_leaves() const {
    std::vector<int> out;
    for (int leaf = 0; leaf < n_leaves(); ++leaf) {
        if (leaf_party[leaf] == 0) {
            out.push_back(leaf);
        }
    }
    return out;
}

Scheme build_threshold(int k, int n, std::optional<int> p_opt, const std::vector<int>& alphas) {
    if (k < 1 || n < 1) {
        throw std::domain_error("threshold parameters must be positive");
    }
    if (k > n) {
        throw std::domain_error("threshold k cannot exceed the share count n");
    }
    if (2 * k <= n) {
        throw ConstructionError("no ((" + std::to_string(k) + ", " + std::to_string(n) +
                                ")) quantum threshold scheme exists: k <= n/2 would put two "
                                "disjoint authorized sets in the scheme, violating no-cloning "
                                "(need n/2 < k <= n)");
    }
    const int width = 2 * k - 1;
    const int p = p_opt.value_or(smallest_prime_at_least(std::max(2, width)));
    if (!is_prime(p)) {
        throw ConstructionError("field modulus " + std::to_string(p) + " is not prime");
    }
    if (p < width) {
        throw ConstructionError("field too small: a ((" + std::to_string(k) + ", " +
                                std::to_string(n) + ")) scheme needs p >= " +
                                std::to_string(width));
    }
    std::vector<int> points = alphas;
    if (points.empty()) {
        points.resize(width);
        for (int i = 0; i < width; ++i) {
            points[i] = i;
        }
    }
    if (static_cast<int>(points.size()) != width) {
        throw std::invalid_argument("need exactly 2k-1 evaluation points");
    }
    std::vector<SchemeNode> slots;
    for (int i = 0; i < width; ++i) {
        slots.push_back(SchemeNode::leaf(i < n ? i + 1 : 0));
    }
    Scheme scheme;
    scheme.p = p;
    scheme.root = SchemeNode::threshold(k, std::move(points), std::move(slots));
    scheme.n_parties = n;
    scheme.declared = threshold_structure(k, n);
    scheme.refresh_leaves();
    return scheme;
}

namespace {

using Fragment = std::pair<std::vector<int>, double>;  // leaf digits (DFS order), amplitude

std::vector<Fragment> expand_node(const SchemeNode& node, int value, int p) {
    if (node.is_leaf()) {
        return {{std::vector<int>{value}, 1.0}};
    }
    const int k = node.k;
    const int width = static_cast<int>(node.slots.size());
    const double scale = std::pow(static_cast<double>(p), -0.5 * (k - 1));
    std::vector<Fragment> result;
    std::vector<int> coeffs(k, 0);
    coeffs[k - 1] = value;  // the secret rides on the top coefficient
    std::vector<int> free(k - 1, 0);
    long long tuples = 1;
    for (int i = 0; i < k - 1; ++i) {
        tuples *= p;
    }
    for (long long tuple = 0; tuple < tuples; ++tuple) {
        for (int i = 0; i < k - 1; ++i) {
            coeffs[i] = free[i];
        }
        // Cross product of the slot expansions for this polynomial.
        std::vector<Fragment> partial{{std::vector<int>{}, scale}};
        for (int slot = 0; slot < width; ++slot) {
            const int u = poly_eval(coeffs, node.alphas[slot], p);
            std::vector<Fragment> slot_frags = expand_node(node.slots[slot], u, p);
            std::vector<Fragment> next;
            next.reserve(partial.size() * slot_frags.size());
            for (const auto& [digits, amp] : partial) {
                for (const auto& [sub_digits, sub_amp] : slot_frags) {
                    std::vector<int> merged = digits;
                    merged.insert(merged.end(), sub_digits.begin(), sub_digits.end());
                    next.emplace_back(std::move(merged), amp * sub_amp);
                }
            }
            partial = std::move(next);
        }
        for (auto& frag : partial) {
            result.push_back(std::move(frag));
        }
        for (int i = 0; i < k - 1; ++i) {
            if (++free[i] < p) {
                break;
            }
            free[i] = 0;
        }
    }
    return result;
}

}  // namespace

SparseState encode_basis(const Scheme& scheme, int secret) {
    if (secret < 0 || secret >= scheme.p) {
        throw std::domain_error("basis secret out of range");
    }
    SubsystemLayout layout = scheme.layout();
    std::vector<std::pair<std::int64_t, cx>> terms;
    for (const auto& [digits, amp] : expand_node(scheme.root, secret, scheme.p)) {
        terms.emplace_back(layout.index_of(digits), cx(amp, 0.0));
    }
    return SparseState(std::move(layout), std::move(terms));
}

SparseState encode_sparse(const Scheme& scheme, const CVector& secret_amps) {
    if (secret_amps.size() != scheme.p) {
        throw std::invalid_argument("secret dimension must equal the scheme modulus");
    }
    std::vector<std::pair<std::int64_t, cx>> terms;
    SubsystemLayout layout = scheme.layout();
    for (int s = 0; s < scheme.p; ++s) {
        if (std::abs(secret_amps(s)) < 1e-300) {
            continue;
        }
        SparseState basis = encode_basis(scheme, s);
        for (const auto& [idx, amp] : basis.terms) {
            terms.emplace_back(idx, amp * secret_amps(s));
        }
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Basis encodings never collide on indices, but merge defensively.
    std::vector<std::pair<std::int64_t, cx>> merged;
    for (const auto& term : terms) {
        if (!merged.empty() && merged.back().first == term.first) {
            merged.back().second += term.second;
        } else {
            merged.push_back(term);
        }
    }
    return SparseState(std::move(layout), std::move(merged));
}

StateVector encode(const Scheme& scheme, const StateVector& secret) {
    if (secret.layout.total_dim() != scheme.p) {
        throw std::invalid_argument("secret dimension must equal the scheme modulus");
    }
    return encode_sparse(scheme, secret.amps).to_dense();
}

namespace {

struct NodeDecode {
    bool ok = false;
    int secret_reg = -1;
};

struct PlanBuilder {
    const Scheme& scheme;
    const PartySet& t;
    DecodePlan plan;

    NodeDecode descend(const SchemeNode& node, int base, bool emit) {
        if (node.is_leaf()) {
            NodeDecode r;
            r.ok = node.party > 0 && t.count(node.party) > 0;
            r.secret_reg = base;
            return r;
        }
        const int width = static_cast<int>(node.slots.size());
        const int k = node.k;
        std::vector<int> offsets(width + 1, base);
        for (int i = 0; i < width; ++i) {
            offsets[i + 1] = offsets[i] + leaf_count(node.slots[i]);
        }
        std::vector<int> usable;
        for (int i = 0; i < width && static_cast<int>(usable.size()) < k; ++i) {
            if (descend(node.slots[i], offsets[i], false).ok) {
                usable.push_back(i);
            }
        }
        if (static_cast<int>(usable.size()) < k) {
            return {};
        }
        NodeDecode result;
        result.ok = true;
        if (!emit) {
            return result;
        }
        std::vector<int> regs;
        for (int slot : usable) {
            NodeDecode child = descend(node.slots[slot], offsets[slot], true);
            regs.push_back(child.secret_reg);
        }
        plan.steps.emplace_back(regs, node_permutation(node, usable));
        result.secret_reg = regs[0];
        return result;
    }

    /// Basis permutation on the k chosen registers: share values at the
    /// chosen points map to (secret, junk) where the junk coordinates start
    /// with the evaluations at the unchosen points, so they mirror the
    /// registers outside the chosen set exactly and carry no trace of the
    /// secret.
    std::vector<std::int64_t> node_permutation(const SchemeNode& node,
                                               const std::vector<int>& chosen) {
        const int p = scheme.p;
        const int k = node.k;
        const int width = static_cast<int>(node.slots.size());
        std::vector<int> unchosen;
        for (int i = 0; i < width; ++i) {
            if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) {
                unchosen.push_back(i);
            }
        }
        // Junk map on the k-1 free coefficients: evaluation rows at the
        // first unchosen points, completed to an invertible matrix with
        // coordinate rows.
        const int n_free = k - 1;
        const int n_eval = std::min<int>(n_free, static_cast<int>(unchosen.size()));
        FpMatrix junk_matrix(n_free);
        std::vector<int> junk_offset;  // secret-coefficient contribution per junk row
        for (int e = 0; e < n_eval; ++e) {
            const int alpha = node.alphas[unchosen[e]];
            FpVector row(n_free);
            for (int d = 0; d < n_free; ++d) {
                row[d] = mod_pow(alpha, d, p);
            }
            junk_matrix.append_row(std::move(row));
            junk_offset.push_back(mod_pow(alpha, k - 1, p));
        }
        for (int d = 0; d < n_free && junk_matrix.n_rows() < n_free; ++d) {
            FpVector unit(n_free, 0);
            unit[d] = 1;
            FpMatrix trial = junk_matrix;
            trial.append_row(unit);
            if (rank(trial, p) == trial.n_rows()) {
                junk_matrix = std::move(trial);
                junk_offset.push_back(0);
            }
        }
        if (junk_matrix.n_rows() != n_free || rank(junk_matrix, p) != n_free) {
            throw std::logic_error("junk map completion failed");
        }

        std::int64_t local_dim = 1;
        for (int i = 0; i < k; ++i) {
            local_dim *= p;
        }
        std::vector<std::int64_t> table(local_dim);
        std::vector<int> values(k);
        for (std::int64_t in = 0; in < local_dim; ++in) {
            std::int64_t rest = in;
            for (int i = k - 1; i >= 0; --i) {
                values[i] = static_cast<int>(rest % p);
                rest /= p;
            }
            std::vector<std::pair<int, int>> points;
            for (int i = 0; i < k; ++i) {
                points.emplace_back(node.alphas[chosen[i]], values[i]);
            }
            FpVector coeffs = interpolate(points, p);
            const int secret = coeffs[k - 1];
            std::int64_t out = secret;
            for (int row = 0; row < n_free; ++row) {
                long long v = static_cast<long long>(junk_offset[row]) * secret;
                for (int d = 0; d < n_free; ++d) {
                    v += static_cast<long long>(junk_matrix.rows[row][d]) * coeffs[d];
                }
                out = out * p + mod_reduce(v, p);
            }
            table[in] = out;
        }
        return table;
    }
};

}  // namespace

DecodePlan decode_plan(const Scheme& scheme, const PartySet& t) {
    if (!classify_authorized(scheme.declared, t)) {
        throw ConstructionError("refusing to decode: " + party_set_name(t) +
                                " is not an authorized set");
    }
    PlanBuilder builder{scheme, t, {}};
    NodeDecode root = builder.descend(scheme.root, 0, true);
    if (!root.ok) {
        throw ConstructionError("declared structure authorizes " + party_set_name(t) +
                                " but the share tree cannot reconstruct from it");
    }
    std::vector<int> t_leaves = scheme.leaves_of(t);
    const int target = t_leaves.front();
    if (target != root.secret_reg) {
        // Swap the secret onto the lexicographically first leaf of T.
        const int p = scheme.p;
        std::vector<std::int64_t> swap_table(static_cast<std::int64_t>(p) * p);
        for (int a = 0; a < p; ++a) {
            for (int b = 0; b < p; ++b) {
                swap_table[static_cast<std::int64_t>(a) * p + b] =
                    static_cast<std::int64_t>(b) * p + a;
            }
        }
        builder.plan.steps.emplace_back(std::vector<int>{root.secret_reg, target}, swap_table);
    }
    builder.plan.secret_leaf = target;
    return builder.plan;
}

DecodeResult decode(const Scheme& scheme, const PartySet& t, const StateVector& global) {
    if (!(global.layout == scheme.layout())) {
        throw std::invalid_argument("state layout does not match the scheme");
    }
    DecodePlan plan = decode_plan(scheme, t);
    StateVector state = global;
    for (const auto& [regs, table] : plan.steps) {
        state = apply_basis_permutation(state, table, regs);
    }
    DensityMatrix rho = partial_trace(state, {plan.secret_leaf});
    const double purity = std::real((rho.m * rho.m).trace());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.m);
    CVector secret = solver.eigenvectors().col(rho.m.rows() - 1);
    // Deterministic global phase: biggest amplitude made real positive.
    int arg_max = 0;
    for (int i = 1; i < secret.size(); ++i) {
        if (std::abs(secret(i)) > std::abs(secret(arg_max))) {
            arg_max = i;
        }
    }
    if (std::abs(secret(arg_max)) > 0) {
        secret *= std::conj(secret(arg_max)) / std::abs(secret(arg_max));
    }
    DecodeResult result{std::move(state), plan.secret_leaf,
                        StateVector::unchecked(SubsystemLayout({scheme.p}), std::move(secret)),
                        purity};
    return result;
}

SparseState decode_sparse(const Scheme& scheme, const DecodePlan& plan, const SparseState& s) {
    if (!(s.layout == scheme.layout())) {
        throw std::invalid_argument("state layout does not match the scheme");
    }
    SparseState state = s;
    for (const auto& [regs, table] : plan.steps) {
        state = apply_basis_permutation(state, table, regs);
    }
    return state;
}

Scheme concatenate(const Scheme& outer, const std::vector<Scheme>& inners, int n_parties) {
    // Each real share of the outer scheme must be a single leaf.
    std::vector<int> owner_leaf(outer.n_parties + 1, -1);
    for (int leaf = 0; leaf < outer.n_leaves(); ++leaf) {
        const int party = outer.leaf_party[leaf];
        if (party == 0) {
            continue;
        }
        if (owner_leaf[party] != -1) {
            throw std::invalid_argument(
                "concatenate requires the outer scheme to hold one leaf per share");
        }
        owner_leaf[party] = leaf;
    }
    if (static_cast<int>(inners.size()) != outer.n_parties) {
        throw std::invalid_argument("need one inner scheme per outer share");
    }
    for (const auto& inner : inners) {
        if (inner.p != outer.p) {
            throw std::domain_error("concatenation requires one global modulus");
        }
        if (inner.n_parties != n_parties) {
            throw std::invalid_argument("inner schemes must share the combined party universe");
        }
    }

    Scheme out;
    out.p = outer.p;
    out.n_parties = n_parties;
    std::function<SchemeNode(const SchemeNode&)> graft = [&](const SchemeNode& node) {
        if (node.is_leaf()) {
            if (node.party == 0) {
                return node;
            }
            return inners[node.party - 1].root;
        }
        SchemeNode copy = node;
        for (auto& slot : copy.slots) {
            slot = graft(slot);
        }
        return copy;
    };
    out.root = graft(outer.root);

    // Access structure of the composition: T is authorized iff the outer
    // shares whose inner scheme T authorizes form an outer-authorized set.
    std::vector<PartySet> authorized;
    for (const auto& t : all_subsets(n_parties)) {
        PartySet u;
        for (int share = 1; share <= outer.n_parties; ++share) {
            if (classify_authorized(inners[share - 1].declared, t)) {
                u.insert(share);
            }
        }
        if (!u.empty() && classify_authorized(outer.declared, u)) {
            authorized.push_back(t);
        }
    }
    if (authorized.empty()) {
        throw ConstructionError("concatenation produced an empty access structure");
    }
    out.declared = normalize(n_parties, std::move(authorized));
    out.refresh_leaves();
    require_no_cloning(out.declared);
    return out;
}

PurifyResult purify(const Scheme& scheme, std::optional<int> new_party_opt) {
    std::vector<int> env = scheme.environment_leaves();
    if (env.empty()) {
        return PurifyResult{scheme, false, 0};
    }
    const int new_party = new_party_opt.value_or(scheme.n_parties + 1);
    const int universe = std::max(scheme.n_parties, new_party);
    if (new_party < 1) {
        throw std::domain_error("party index out of range");
    }
    PartySet old_owners;
    for (int leaf = 0; leaf < scheme.n_leaves(); ++leaf) {
        if (scheme.leaf_party[leaf] > 0) {
            old_owners.insert(scheme.leaf_party[leaf]);
        }
    }
    if (old_owners.count(new_party)) {
        throw std::domain_error("the purifying party must not already own a share");
    }

    Scheme out;
    out.p = scheme.p;
    out.n_parties = universe;
    out.root = scheme.root;
    std::function<void(SchemeNode&)> claim = [&](SchemeNode& node) {
        if (node.is_leaf()) {
            if (node.party == 0) {
                node.party = new_party;
            }
            return;
        }
        for (auto& slot : node.slots) {
            claim(slot);
        }
    };
    claim(out.root);

    std::vector<PartySet> authorized;
    for (const auto& t : all_subsets(universe)) {
        bool auth;
        if (t.count(new_party)) {
            PartySet rest;
            for (int party : old_owners) {
                if (!t.count(party)) {
                    rest.insert(party);
                }
            }
            auth = !classify_authorized(scheme.declared, rest);
        } else {
            PartySet clipped;
            for (int party : t) {
                if (party <= scheme.declared.n_parties) {
                    clipped.insert(party);
                }
            }
            auth = classify_authorized(scheme.declared, clipped);
        }
        if (auth && !t.empty()) {
            authorized.push_back(t);
        }
    }
    out.declared = normalize(universe, std::move(authorized));
    out.refresh_leaves();
    require_no_cloning(out.declared);
    return PurifyResult{std::move(out), true, new_party};
}

namespace {

int highest_important_party(const AccessStructure& s) {
    for (int party = s.n_parties; party >= 1; --party) {
        if (is_important(s, party)) {
            return party;
        }
    }
    throw std::logic_error("structure with no important party");
}

std::optional<int> common_party(const AccessStructure& s) {
    for (int party = 1; party <= s.n_parties; ++party) {
        bool in_all = true;
        for (const auto& m : s.minimal_sets) {
            if (!m.count(party)) {
                in_all = false;
                break;
            }
        }
        if (in_all) {
            return party;
        }
    }
    return std::nullopt;
}

int required_width(const AccessStructure& s, const GeneralBuildOptions& opts) {
    const int r = static_cast<int>(s.minimal_sets.size());
    if (r == 1) {
        return 2 * static_cast<int>(s.minimal_sets[0].size()) - 1;
    }
    if (is_maximal(s)) {
        return required_width(restrict_structure(s, highest_important_party(s)), opts);
    }
    int w = 2 * r - 1;
    for (const auto& m : s.minimal_sets) {
        w = std::max(w, 2 * static_cast<int>(m.size()) - 1);
    }
    if (!(opts.trivial_completion_when_possible && common_party(s))) {
        w = std::max(w, required_width(restrict_structure(s, highest_important_party(s)), opts));
    }
    return w;
}

Scheme single_set_scheme(const AccessStructure& s, int p) {
    const PartySet& a = s.minimal_sets[0];
    const int k = static_cast<int>(a.size());
    Scheme scheme = build_threshold(k, k, p);
    std::vector<int> map(k + 1, 0);
    int i = 1;
    for (int party : a) {
        map[i++] = party;
    }
    relabel_parties(scheme.root, map);
    scheme.n_parties = s.n_parties;
    scheme.declared = AccessStructure(s.n_parties, {a});
    scheme.refresh_leaves();
    return scheme;
}

Scheme general_rec(const AccessStructure& s, int p, const GeneralBuildOptions& opts) {
    const int r = static_cast<int>(s.minimal_sets.size());
    if (r == 1) {
        return single_set_scheme(s, p);
    }
    if (is_maximal(s)) {
        const int dropped = highest_important_party(s);
        Scheme inner = general_rec(restrict_structure(s, dropped), p, opts);
        PurifyResult pr = purify(inner, dropped);
        if (!pr.changed || !(pr.scheme.declared == s)) {
            throw ConstructionError("purification did not reproduce the maximal structure " +
                                    party_set_name(s.minimal_sets[0]) + "...");
        }
        return pr.scheme;
    }

    Scheme outer = build_threshold(r, 2 * r - 1, p);
    std::vector<Scheme> inners;
    for (const auto& m : s.minimal_sets) {
        inners.push_back(single_set_scheme(AccessStructure(s.n_parties, {m}), p));
    }
    Scheme completion;
    if (auto c = common_party(s); opts.trivial_completion_when_possible && c) {
        completion = single_set_scheme(AccessStructure(s.n_parties, {PartySet{*c}}), p);
    } else {
        const int dropped = highest_important_party(s);
        Scheme inner = general_rec(restrict_structure(s, dropped), p, opts);
        PurifyResult pr = purify(inner, dropped);
        completion = pr.changed ? std::move(pr.scheme) : std::move(inner);
        if (!is_maximal(completion.declared)) {
            throw ConstructionError("completion share is not a maximal structure");
        }
        for (const auto& m : s.minimal_sets) {
            if (!classify_authorized(completion.declared, m)) {
                throw ConstructionError("completion share does not contain the target structure");
            }
        }
    }
    for (int i = r; i < 2 * r - 1; ++i) {
        inners.push_back(completion);
    }
    Scheme out = concatenate(outer, inners, s.n_parties);
    AccessStructure expected = normalize(s.n_parties, s.minimal_sets);
    if (!(out.declared == expected)) {
        throw ConstructionError("concatenated access structure does not match the request");
    }
    return out;
}

}  // namespace

int required_prime(const AccessStructure& s, const GeneralBuildOptions& opts) {
    return smallest_prime_at_least(std::max(2, required_width(s, opts)));
}

Scheme build_general(const AccessStructure& s, std::optional<int> p_opt,
                     const GeneralBuildOptions& opts) {
    AccessStructure target = normalize(s.n_parties, s.minimal_sets);
    require_no_cloning(target);
    const int needed = required_prime(target, opts);
    const int p = p_opt.value_or(needed);
    if (!is_prime(p)) {
        throw ConstructionError("field modulus " + std::to_string(p) + " is not prime");
    }
    if (p < needed) {
        throw ConstructionError("field too small for this access structure: need p >= " +
                                std::to_string(needed));
    }
    return general_rec(target, p, opts);
}

namespace {

std::vector<std::int64_t> invert_table(const std::vector<std::int64_t>& table) {
    std::vector<std::int64_t> inv(table.size());
    for (size_t i = 0; i < table.size(); ++i) {
        inv[table[i]] = static_cast<std::int64_t>(i);
    }
    return inv;
}

}  // namespace

StateVector apply_local_update(const Scheme& scheme, const PartySet& t, const CMatrix& u,
                               const StateVector& global) {
    if (u.rows() != scheme.p || u.cols() != scheme.p) {
        throw std::invalid_argument("logical update must act on the secret dimension");
    }
    DecodePlan plan = decode_plan(scheme, t);
    StateVector state = global;
    for (const auto& [regs, table] : plan.steps) {
        state = apply_basis_permutation(state, table, regs);
    }
    state = apply_on_subset(state, u, {plan.secret_leaf});
    for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it) {
        state = apply_basis_permutation(state, invert_table(it->second), it->first);
    }
    return state;
}

CMatrix local_update_matrix(const Scheme& scheme, const PartySet& t, const CMatrix& u) {
    if (u.rows() != scheme.p || u.cols() != scheme.p) {
        throw std::invalid_argument("logical update must act on the secret dimension");
    }
    DecodePlan plan = decode_plan(scheme, t);
    std::vector<int> regs = scheme.leaves_of(t);
    std::int64_t dim = 1;
    for (size_t i = 0; i < regs.size(); ++i) {
        dim *= scheme.p;
    }
    check_density_dim(dim, "local_update_matrix");
    std::vector<int> reg_pos(scheme.n_leaves(), -1);
    for (size_t i = 0; i < regs.size(); ++i) {
        reg_pos[regs[i]] = static_cast<int>(i);
    }
    const int p = scheme.p;
    const int m = static_cast<int>(regs.size());
    int secret_pos = reg_pos[plan.secret_leaf];

    auto apply_step_local = [&](std::int64_t idx, const std::vector<int>& step_regs,
                                const std::vector<std::int64_t>& table) {
        std::vector<int> digits(m);
        std::int64_t rest = idx;
        for (int i = m - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(rest % p);
            rest /= p;
        }
        std::int64_t local = 0;
        for (int reg : step_regs) {
            local = local * p + digits[reg_pos[reg]];
        }
        std::int64_t mapped = table[local];
        for (int i = static_cast<int>(step_regs.size()) - 1; i >= 0; --i) {
            digits[reg_pos[step_regs[i]]] = static_cast<int>(mapped % p);
            mapped /= p;
        }
        std::int64_t out = 0;
        for (int i = 0; i < m; ++i) {
            out = out * p + digits[i];
        }
        return out;
    };

    // Full decode permutation on T's joint space.
    std::vector<std::int64_t> perm(dim);
    for (std::int64_t idx = 0; idx < dim; ++idx) {
        std::int64_t cur = idx;
        for (const auto& [step_regs, table] : plan.steps) {
            cur = apply_step_local(cur, step_regs, table);
        }
        perm[idx] = cur;
    }
    std::vector<std::int64_t> perm_inv = invert_table(perm);

    std::int64_t secret_stride = 1;
    for (int i = secret_pos + 1; i < m; ++i) {
        secret_stride *= p;
    }
    CMatrix v = CMatrix::Zero(dim, dim);
    for (std::int64_t col = 0; col < dim; ++col) {
        const std::int64_t w = perm[col];
        const int digit = static_cast<int>(w / secret_stride % p);
        const std::int64_t base = w - static_cast<std::int64_t>(digit) * secret_stride;
        for (int out_digit = 0; out_digit < p; ++out_digit) {
            const cx amp = u(out_digit, digit);
            if (amp == cx(0.0, 0.0)) {
                continue;
            }
            v(perm_inv[base + static_cast<std::int64_t>(out_digit) * secret_stride], col) += amp;
        }
    }
    return v;
}

StateVector swap_in_secret(const Scheme& scheme, const PartySet& t, const StateVector& global,
                           const CVector& fresh) {
    if (fresh.size() != scheme.p) {
        throw std::invalid_argument("fresh secret must have the scheme's dimension");
    }
    DecodePlan plan = decode_plan(scheme, t);
    std::vector<std::int64_t> dims = global.layout.dims;
    dims.push_back(scheme.p);
    SubsystemLayout extended(dims);
    check_state_dim(extended.total_dim(), "swap_in_secret");
    CVector amps(extended.total_dim());
    for (std::int64_t i = 0; i < global.dim(); ++i) {
        for (int j = 0; j < scheme.p; ++j) {
            amps(i * scheme.p + j) = global.amps(i) * fresh(j);
        }
    }
    StateVector state = StateVector::unchecked(extended, std::move(amps));
    for (const auto& [regs, table] : plan.steps) {
        state = apply_basis_permutation(state, table, regs);
    }
    const int ancilla = static_cast<int>(dims.size()) - 1;
    std::vector<std::int64_t> swap_table(static_cast<std::int64_t>(scheme.p) * scheme.p);
    for (int a = 0; a < scheme.p; ++a) {
        for (int b = 0; b < scheme.p; ++b) {
            swap_table[static_cast<std::int64_t>(a) * scheme.p + b] =
                static_cast<std::int64_t>(b) * scheme.p + a;
        }
    }
    state = apply_basis_permutation(state, swap_table, {plan.secret_leaf, ancilla});
    for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it) {
        state = apply_basis_permutation(state, invert_table(it->second), it->first);
    }
    return state;
}

}  // namespace qss
