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

#include "qss/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "qss/errors.hpp"

namespace qss {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Authorized:
            return "authorized";
        case Verdict::Unauthorized:
            return "unauthorized";
        default:
            return "NEITHER";
    }
}

EncoderView make_encoder_view(const Scheme& scheme) {
    EncoderView view;
    view.p = scheme.p;
    view.layout = scheme.layout();
    view.leaf_party = scheme.leaf_party;
    view.n_parties = scheme.n_parties;
    for (int s = 0; s < scheme.p; ++s) {
        view.basis_states.push_back(encode_basis(scheme, s));
    }
    return view;
}

namespace {

/// Sparse matrix as a key-sorted, duplicate-free entry list.  Bulk
/// construction (collect, sort, accumulate) keeps allocation pressure low
/// enough for the subset sweeps to parallelize cleanly.
struct SparseMap {
    using Key = std::pair<std::int64_t, std::int64_t>;
    std::vector<std::pair<Key, cx>> entries;

    static SparseMap collect(std::vector<std::pair<Key, cx>> raw) {
        std::sort(raw.begin(), raw.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseMap out;
        out.entries.reserve(raw.size());
        for (auto& [key, val] : raw) {
            if (!out.entries.empty() && out.entries.back().first == key) {
                out.entries.back().second += val;
            } else {
                out.entries.emplace_back(key, val);
            }
        }
        return out;
    }
};

/// Splits flat indices of a layout into (keep, rest) components.
struct KeepSplitter {
    const SubsystemLayout& layout;
    std::vector<int> keep;
    std::vector<std::int64_t> keep_dims;
    std::int64_t keep_total = 1;

    KeepSplitter(const SubsystemLayout& l, const std::vector<int>& k) : layout(l), keep(k) {
        for (int s : keep) {
            if (s < 0 || s >= layout.n_subsystems()) {
                throw std::domain_error("leaf index out of range");
            }
            keep_dims.push_back(layout.dims[s]);
            keep_total *= layout.dims[s];
        }
    }

    std::pair<std::int64_t, std::int64_t> split(std::int64_t flat) const {
        auto digits = layout.digits_of(flat);
        std::int64_t a = 0;
        for (size_t i = 0; i < keep.size(); ++i) {
            a = a * keep_dims[i] + digits[keep[i]];
        }
        std::vector<bool> in(layout.n_subsystems(), false);
        for (int s : keep) {
            in[s] = true;
        }
        std::int64_t rest = 0;
        for (int i = 0; i < layout.n_subsystems(); ++i) {
            if (!in[i]) {
                rest = rest * layout.dims[i] + digits[i];
            }
        }
        return {a, rest};
    }
};

struct SplitTerm {
    std::int64_t rest;
    std::int64_t kept;
    cx amp;
};

std::vector<SplitTerm> split_terms(const SparseState& state, const KeepSplitter& splitter) {
    std::vector<SplitTerm> out;
    out.reserve(state.terms.size());
    for (const auto& [idx, amp] : state.terms) {
        auto [kept, rest] = splitter.split(idx);
        out.push_back({rest, kept, amp});
    }
    std::sort(out.begin(), out.end(), [](const SplitTerm& a, const SplitTerm& b) {
        if (a.rest != b.rest) {
            return a.rest < b.rest;
        }
        return a.kept < b.kept;
    });
    return out;
}

/// tr over the complement of |phi_i><phi_j| on the kept leaves, as a sparse
/// matrix: T[a, b] = sum_rest phi_i[a, rest] * conj(phi_j[b, rest]).
// TODO: when the complement is empty this degenerates to a full outer
// product routed through the map; a dense fast path for that case would
// shave the all-leaves checks on larger trees.
SparseMap transition_matrix(const std::vector<SplitTerm>& ti, const std::vector<SplitTerm>& tj) {
    std::vector<std::pair<SparseMap::Key, cx>> raw;
    size_t i = 0, j = 0;
    while (i < ti.size() && j < tj.size()) {
        if (ti[i].rest < tj[j].rest) {
            ++i;
            continue;
        }
        if (tj[j].rest < ti[i].rest) {
            ++j;
            continue;
        }
        const std::int64_t rest = ti[i].rest;
        size_t i_end = i, j_end = j;
        while (i_end < ti.size() && ti[i_end].rest == rest) {
            ++i_end;
        }
        while (j_end < tj.size() && tj[j_end].rest == rest) {
            ++j_end;
        }
        for (size_t a = i; a < i_end; ++a) {
            for (size_t b = j; b < j_end; ++b) {
                raw.emplace_back(SparseMap::Key{ti[a].kept, tj[b].kept},
                                 ti[a].amp * std::conj(tj[b].amp));
            }
        }
        i = i_end;
        j = j_end;
    }
    return SparseMap::collect(std::move(raw));
}

double max_abs(const SparseMap& m) {
    double best = 0.0;
    for (const auto& [key, val] : m.entries) {
        best = std::max(best, std::abs(val));
    }
    return best;
}

double max_abs_diff(const SparseMap& a, const SparseMap& b) {
    double best = 0.0;
    auto ia = a.entries.begin();
    auto ib = b.entries.begin();
    while (ia != a.entries.end() || ib != b.entries.end()) {
        if (ib == b.entries.end() ||
            (ia != a.entries.end() && ia->first < ib->first)) {
            best = std::max(best, std::abs(ia->second));
            ++ia;
        } else if (ia == a.entries.end() || ib->first < ia->first) {
            best = std::max(best, std::abs(ib->second));
            ++ib;
        } else {
            best = std::max(best, std::abs(ia->second - ib->second));
            ++ia;
            ++ib;
        }
    }
    return best;
}

/// Dense matrix entries grouped by the digitwise difference b - a mod p,
/// ready for monomial sweeps: a word X^x Z^z pairs exactly with the group
/// whose difference equals x.  Entry digit vectors and the p-th roots of
/// unity are precomputed so the sweep stays arithmetic-only.
struct DiffGrouped {
    int p = 0;
    int width = 0;
    struct Entry {
        std::vector<int> v_digits;
        cx value;
    };
    std::unordered_map<std::int64_t, std::vector<Entry>> groups;

    static DiffGrouped from(const SparseMap& m, int p, int width) {
        DiffGrouped out;
        out.p = p;
        out.width = width;
        for (const auto& [key, val] : m.entries) {
            auto [a, b] = key;
            std::int64_t diff = 0;
            std::int64_t ra = a, rb = b;
            std::vector<int> diff_digits(width);
            Entry entry;
            entry.v_digits.resize(width);
            entry.value = val;
            for (int i = width - 1; i >= 0; --i) {
                const int da = static_cast<int>(ra % p);
                diff_digits[i] = mod_sub(static_cast<int>(rb % p), da, p);
                entry.v_digits[i] = da;
                ra /= p;
                rb /= p;
            }
            for (int i = 0; i < width; ++i) {
                diff = diff * p + diff_digits[i];
            }
            out.groups[diff].push_back(std::move(entry));
        }
        return out;
    }

    /// tr(E * M) for E = X^x Z^z acting as |v> -> w^{z.v} |v+x>:
    /// tr(E M) = sum_v w^{z.v} M[v, v+x].
    cx word_trace(std::int64_t x_index, const std::vector<int>& z_digits,
                  const std::vector<cx>& roots) const {
        auto it = groups.find(x_index);
        if (it == groups.end()) {
            return 0.0;
        }
        cx acc = 0.0;
        for (const auto& entry : it->second) {
            int phase = 0;
            for (int i = 0; i < width; ++i) {
                phase += z_digits[i] * entry.v_digits[i];
            }
            acc += roots[phase % p] * entry.value;
        }
        return acc;
    }
};

long long pow_ll(long long base, int e) {
    long long out = 1;
    for (int i = 0; i < e; ++i) {
        out *= base;
    }
    return out;
}

/// Max deviation from word-constancy across a family of matrices: for each
/// Pauli word on the kept leaves, the trace against every matrix must agree
/// with the trace against the first (diag mode), or vanish (zero mode).
double word_sweep(const std::vector<DiffGrouped>& mats, int p, int width, bool zero_mode) {
    const std::int64_t d = pow_ll(p, width);
    double dev = 0.0;
    std::vector<int> z_digits(width, 0);
    std::vector<cx> roots(p);
    for (int t = 0; t < p; ++t) {
        roots[t] = root_of_unity(t, p);
    }
    // Enumerate only x-differences present in some matrix; absent groups
    // give identically zero traces for every state and cannot deviate.
    std::vector<std::int64_t> x_candidates;
    {
        std::unordered_map<std::int64_t, bool> seen;
        for (const auto& m : mats) {
            for (const auto& [diff, group] : m.groups) {
                if (!seen.count(diff)) {
                    seen[diff] = true;
                    x_candidates.push_back(diff);
                }
            }
        }
        std::sort(x_candidates.begin(), x_candidates.end());
    }
    for (std::int64_t x : x_candidates) {
        std::fill(z_digits.begin(), z_digits.end(), 0);
        for (std::int64_t zi = 0; zi < d; ++zi) {
            cx ref = 0.0;
            for (size_t m = 0; m < mats.size(); ++m) {
                const cx val = mats[m].word_trace(x, z_digits, roots);
                if (zero_mode) {
                    dev = std::max(dev, std::abs(val));
                } else if (m == 0) {
                    ref = val;
                } else {
                    dev = std::max(dev, std::abs(val - ref));
                }
            }
            for (int i = width - 1; i >= 0; --i) {
                if (++z_digits[i] < p) {
                    break;
                }
                z_digits[i] = 0;
            }
        }
    }
    return dev;
}

/// Low-rank factorization rho = sum_k b_k b_k^dagger by pivoted Cholesky;
/// the branches b_k purify rho as sum_k b_k tensor |k>.  Deterministic:
/// pivots take the largest remaining diagonal, lowest index first.  Only
/// pivot columns are touched, so the cost is O(dim * rank^2).
std::vector<CVector> purification_branches(const CMatrix& rho, double tol = 1e-10) {
    const std::int64_t d = rho.rows();
    Eigen::VectorXd diag = rho.diagonal().real();
    std::vector<CVector> branches;
    while (true) {
        std::int64_t pivot = 0;
        double best = 0.0;
        for (std::int64_t i = 0; i < d; ++i) {
            if (diag(i) > best + 1e-15) {
                best = diag(i);
                pivot = i;
            }
        }
        if (best <= tol) {
            break;
        }
        CVector column = rho.col(pivot);
        for (const auto& b : branches) {
            column.noalias() -= b * std::conj(b(pivot));
        }
        CVector branch = column / std::sqrt(best);
        for (std::int64_t i = 0; i < d; ++i) {
            diag(i) -= std::norm(branch(i));
        }
        branches.push_back(std::move(branch));
    }
    return branches;
}

SparseMap scale_add(std::initializer_list<std::pair<const SparseMap*, cx>> parts) {
    std::vector<std::pair<SparseMap::Key, cx>> raw;
    for (const auto& [m, c] : parts) {
        for (const auto& [key, val] : m->entries) {
            raw.emplace_back(key, c * val);
        }
    }
    return SparseMap::collect(std::move(raw));
}

SparseMap adjoint_of(const SparseMap& m) {
    std::vector<std::pair<SparseMap::Key, cx>> raw;
    raw.reserve(m.entries.size());
    for (const auto& [key, val] : m.entries) {
        raw.emplace_back(SparseMap::Key{key.second, key.first}, std::conj(val));
    }
    return SparseMap::collect(std::move(raw));
}

struct ErasureEngine {
    const EncoderView& encoder;
    ErasureOptions opts;

    ErasureCheck check(const std::vector<int>& k_leaves) const {
        ErasureCheck result;
        if (k_leaves.empty()) {
            result.holds = true;
            result.word_sweep_ran = true;
            return result;
        }
        const int p = encoder.p;
        KeepSplitter splitter(encoder.layout, k_leaves);
        std::vector<std::vector<SplitTerm>> split;
        split.reserve(p);
        for (const auto& state : encoder.basis_states) {
            split.push_back(split_terms(state, splitter));
        }
        // Sesquilinear form through reduced transition matrices.
        std::vector<std::vector<SparseMap>> t(p);
        for (int i = 0; i < p; ++i) {
            t[i].resize(p);
            for (int j = i; j < p; ++j) {
                t[i][j] = transition_matrix(split[i], split[j]);
            }
        }
        double dev = 0.0;
        for (int i = 0; i < p; ++i) {
            for (int j = i; j < p; ++j) {
                if (i == j) {
                    if (i > 0) {
                        dev = std::max(dev, max_abs_diff(t[i][i], t[0][0]));
                    }
                } else {
                    dev = std::max(dev, max_abs(t[i][j]));
                }
            }
        }
        result.max_deviation = dev;

        const int width = static_cast<int>(k_leaves.size());
        const long long n_words = pow_ll(p, 2 * width);
        if (n_words <= opts.word_sweep_limit) {
            result.word_sweep_ran = true;
            // The spanning set: basis secrets, then pairwise superpositions
            // (|i> + |j>)/sqrt(2) and (|i> + i|j>)/sqrt(2).
            std::vector<DiffGrouped> mats;
            for (int i = 0; i < p; ++i) {
                mats.push_back(DiffGrouped::from(t[i][i], p, width));
            }
            for (int i = 0; i < p; ++i) {
                for (int j = i + 1; j < p; ++j) {
                    SparseMap t_ji = adjoint_of(t[i][j]);
                    for (cx tau : {cx(1.0, 0.0), cx(0.0, 1.0)}) {
                        SparseMap rho = scale_add({{&t[i][i], cx(0.5, 0.0)},
                                                   {&t[j][j], cx(0.5, 0.0)},
                                                   {&t_ji, 0.5 * tau},
                                                   {&t[i][j], 0.5 * std::conj(tau)}});
                        mats.push_back(DiffGrouped::from(rho, p, width));
                    }
                }
            }
            result.max_deviation =
                std::max(result.max_deviation, word_sweep(mats, p, width, false));
        }
        result.holds = result.max_deviation <= opts.tolerance;
        return result;
    }
};

}  // namespace

ErasureCheck erasure_condition_check(const EncoderView& encoder, const std::vector<int>& k_leaves,
                                     const ErasureOptions& opts) {
    return ErasureEngine{encoder, opts}.check(k_leaves);
}

const SubsetVerdict& AccessMap::at(const PartySet& t) const {
    for (const auto& entry : subsets) {
        if (entry.subset == t) {
            return entry;
        }
    }
    throw std::domain_error("subset missing from the access map");
}

bool AccessMap::matches(const AccessStructure& declared) const {
    if (neither_count != 0) {
        return false;
    }
    for (const auto& entry : subsets) {
        const bool expected = classify_authorized(declared, entry.subset);
        if (expected != (entry.verdict == Verdict::Authorized)) {
            return false;
        }
    }
    return true;
}

AccessMap access_map(const EncoderView& encoder, const ErasureOptions& opts, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    AccessMap map;
    map.n_parties = encoder.n_parties;
    std::vector<PartySet> subsets = all_subsets(encoder.n_parties);
    map.subsets.resize(subsets.size());

    const int n_leaves = encoder.layout.n_subsystems();
    ErasureEngine engine{encoder, opts};
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const size_t idx = next.fetch_add(1);
            if (idx >= subsets.size()) {
                return;
            }
            const PartySet& t = subsets[idx];
            std::vector<int> k_unauth;
            for (int leaf = 0; leaf < n_leaves; ++leaf) {
                if (encoder.leaf_party[leaf] > 0 && t.count(encoder.leaf_party[leaf])) {
                    k_unauth.push_back(leaf);
                }
            }
            const std::vector<int> k_auth = complement_of(k_unauth, n_leaves);
            const ErasureCheck unauth = engine.check(k_unauth);
            const ErasureCheck auth = engine.check(k_auth);
            SubsetVerdict verdict;
            verdict.subset = t;
            verdict.deviation_unauthorized = unauth.max_deviation;
            verdict.deviation_authorized = auth.max_deviation;
            if (auth.holds && !unauth.holds) {
                verdict.verdict = Verdict::Authorized;
            } else if (unauth.holds && !auth.holds) {
                verdict.verdict = Verdict::Unauthorized;
            } else {
                verdict.verdict = Verdict::Neither;
            }
            map.subsets[idx] = std::move(verdict);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    for (const auto& entry : map.subsets) {
        if (entry.verdict == Verdict::Neither) {
            ++map.neither_count;
            map.max_deviation = std::max({map.max_deviation, entry.deviation_unauthorized,
                                          entry.deviation_authorized});
        } else {
            // the failing side deviates by design; the statistic tracks how
            // cleanly the holding side passed
            map.max_deviation = std::max(map.max_deviation,
                                         entry.verdict == Verdict::Unauthorized
                                             ? entry.deviation_unauthorized
                                             : entry.deviation_authorized);
        }
    }
    map.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return map;
}

AccessMap access_map(const Scheme& scheme, const ErasureOptions& opts, int jobs) {
    return access_map(make_encoder_view(scheme), opts, jobs);
}

AccessMap hybrid_check(const HybridScheme& h, const ErasureOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const int p = h.p;

    // Orthonormal encodings |psi_ab>; mixed encodings are purified with the
    // rank-sized register appended after the shares.
    std::vector<SparseState> states;
    int purifier_dim = 1;
    {
        std::vector<std::vector<CVector>> branch_sets;
        for (int a = 0; a < p; ++a) {
            for (int b = 0; b < p; ++b) {
                branch_sets.push_back(purification_branches(encode_classical(h, a, b).m));
                purifier_dim = std::max(purifier_dim,
                                        static_cast<int>(branch_sets.back().size()));
            }
        }
        std::vector<std::int64_t> dims(h.n, p);
        if (purifier_dim > 1) {
            dims.push_back(purifier_dim);
        }
        SubsystemLayout layout(dims);
        for (const auto& branches : branch_sets) {
            std::vector<std::pair<std::int64_t, cx>> terms;
            for (size_t slot = 0; slot < branches.size(); ++slot) {
                const CVector& branch = branches[slot];
                for (std::int64_t v = 0; v < branch.size(); ++v) {
                    if (std::abs(branch(v)) > 1e-14) {
                        const std::int64_t idx =
                            purifier_dim > 1 ? v * purifier_dim + static_cast<std::int64_t>(slot)
                                             : v;
                        terms.emplace_back(idx, branch(v));
                    }
                }
            }
            states.emplace_back(layout, std::move(terms));
        }
    }
    const SubsystemLayout layout = states.front().layout;
    const int n_subsystems = layout.n_subsystems();

    AccessMap map;
    map.n_parties = h.n;
    for (const auto& t : all_subsets(h.n)) {
        std::vector<int> t_coords;
        for (int share : t) {
            t_coords.push_back(share - 1);
        }
        // Complement side: remaining shares plus the purifier when present.
        std::vector<int> c_coords = complement_of(t_coords, n_subsystems);

        KeepSplitter t_split(layout, t_coords);
        KeepSplitter c_split(layout, c_coords);
        std::vector<std::vector<SplitTerm>> t_terms, c_terms;
        for (const auto& psi : states) {
            t_terms.push_back(split_terms(psi, t_split));
            c_terms.push_back(split_terms(psi, c_split));
        }

        // No-information condition on T: <psi_i|F|psi_i> independent of i.
        double dev_unauth = 0.0;
        std::vector<SparseMap> diag;
        for (size_t i = 0; i < states.size(); ++i) {
            diag.push_back(transition_matrix(t_terms[i], t_terms[i]));
            if (i > 0) {
                dev_unauth = std::max(dev_unauth, max_abs_diff(diag[i], diag[0]));
            }
        }
        const int t_width = static_cast<int>(t_coords.size());
        if (!t_coords.empty() && pow_ll(p, 2 * t_width) <= opts.word_sweep_limit) {
            std::vector<DiffGrouped> mats;
            for (const auto& m : diag) {
                mats.push_back(DiffGrouped::from(m, p, t_width));
            }
            dev_unauth = std::max(dev_unauth, word_sweep(mats, p, t_width, false));
        }

        // Distinguishability condition on the complement: cross transition
        // matrices must vanish.
        double dev_auth = 0.0;
        std::vector<DiffGrouped> cross_mats;
        const int c_width = static_cast<int>(c_coords.size());
        const bool sweep_cross =
            !c_coords.empty() && pow_ll(p, 2 * c_width) <= opts.word_sweep_limit &&
            layout.dim_of(c_coords) <= SimCaps::max_density_dim();
        for (size_t i = 0; i < states.size(); ++i) {
            for (size_t j = 0; j < states.size(); ++j) {
                if (i == j) {
                    continue;
                }
                SparseMap cross = transition_matrix(c_terms[j], c_terms[i]);
                dev_auth = std::max(dev_auth, max_abs(cross));
                if (sweep_cross) {
                    cross_mats.push_back(DiffGrouped::from(cross, p, c_width));
                }
            }
        }
        if (sweep_cross) {
            dev_auth = std::max(dev_auth, word_sweep(cross_mats, p, c_width, true));
        }

        SubsetVerdict verdict;
        verdict.subset = t;
        verdict.deviation_unauthorized = dev_unauth;
        verdict.deviation_authorized = dev_auth;
        const bool unauth_holds = dev_unauth <= opts.tolerance;
        const bool auth_holds = dev_auth <= opts.tolerance;
        if (auth_holds && !unauth_holds) {
            verdict.verdict = Verdict::Authorized;
        } else if (unauth_holds && !auth_holds) {
            verdict.verdict = Verdict::Unauthorized;
        } else {
            verdict.verdict = Verdict::Neither;
        }
        map.subsets.push_back(std::move(verdict));
    }
    for (const auto& entry : map.subsets) {
        if (entry.verdict == Verdict::Neither) {
            ++map.neither_count;
            map.max_deviation = std::max({map.max_deviation, entry.deviation_unauthorized,
                                          entry.deviation_authorized});
        } else {
            map.max_deviation = std::max(map.max_deviation,
                                         entry.verdict == Verdict::Unauthorized
                                             ? entry.deviation_unauthorized
                                             : entry.deviation_authorized);
        }
    }
    map.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return map;
}

SizeAudit size_audit(const Scheme& scheme) {
    SizeAudit audit;
    for (int party = 1; party <= scheme.n_parties; ++party) {
        PartyAudit entry;
        entry.party = party;
        entry.important = is_important(scheme.declared, party);
        entry.n_leaves = static_cast<int>(scheme.leaves_of({party}).size());
        entry.share_dim = pow_ll(scheme.p, entry.n_leaves);
        entry.bound = scheme.p;  // the secret dimension
        entry.ok = !entry.important || entry.share_dim >= entry.bound;
        audit.ok = audit.ok && entry.ok;
        audit.parties.push_back(entry);
    }
    audit.note = "quantum secret of dimension " + std::to_string(scheme.p) +
                 ": every important share must be at least that large";
    return audit;
}

SizeAudit size_audit(const HybridScheme& h) {
    SizeAudit audit;
    for (int share = 1; share <= h.n; ++share) {
        PartyAudit entry;
        entry.party = share;
        entry.important = true;
        entry.n_leaves = 1;
        entry.share_dim = h.p;
        entry.bound = h.p;  // sqrt of the p^2-dimensional classical secret
        entry.ok = entry.share_dim >= entry.bound;
        audit.ok = audit.ok && entry.ok;
        audit.parties.push_back(entry);
    }
    audit.note =
        "classical secret of dimension p^2 = " + std::to_string(h.p * h.p) +
        " shared with one qupit per share: the quantum bound sqrt(p^2) = " + std::to_string(h.p) +
        " is met with equality; a purely classical scheme would need share dimension >= " +
        std::to_string(h.p * h.p);
    return audit;
}

}  // namespace qss
