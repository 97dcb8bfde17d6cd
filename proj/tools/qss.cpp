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

// Command line front end: builds threshold, general and hybrid schemes,
// encodes and reconstructs secrets, and runs the brute-force certifier.
//
// Exit codes: 0 success, 2 construction rejected, 3 bad input, 4 resource
// cap exceeded.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "qss/errors.hpp"
#include "qss/io.hpp"
#include "qss/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConstruction = 2;
constexpr int kExitInput = 3;
constexpr int kExitCap = 4;

struct CommonOptions {
    double tolerance = 1e-9;
    int jobs = 1;
    std::uint64_t seed = 0;
    bool seeded = false;
};

qss::ErasureOptions erasure_options(const CommonOptions& common) {
    qss::ErasureOptions opts;
    opts.tolerance = common.tolerance;
    return opts;
}

int verify_scheme(const qss::Scheme& scheme, const CommonOptions& common,
                  const std::string& report_path, const std::string& source) {
    qss::AccessMap map = qss::access_map(scheme, erasure_options(common), common.jobs);
    std::cout << qss::io::access_map_to_text(map);
    if (!report_path.empty()) {
        qss::io::write_file(report_path, qss::io::access_map_to_json(map, source));
    }
    if (map.neither_count != 0) {
        std::cerr << "verification failed: " << map.neither_count << " NEITHER verdicts\n";
        return 1;
    }
    if (!map.matches(scheme.declared)) {
        std::cerr << "verification failed: oracle map disagrees with the declared structure\n";
        return 1;
    }
    if (map.max_deviation > 1e-9) {
        std::cout << "warning: holding checks deviate by " << map.max_deviation
                  << " (expected < 1e-9)\n";
    }
    std::cout << "verified: oracle map matches the declared structure\n";
    return 0;
}

int verify_hybrid(const qss::HybridScheme& hybrid, const CommonOptions& common,
                  const std::string& report_path, const std::string& source) {
    qss::AccessMap map = qss::hybrid_check(hybrid, erasure_options(common));
    std::cout << qss::io::access_map_to_text(map);
    if (!report_path.empty()) {
        qss::io::write_file(report_path,
                            qss::io::access_map_to_json(map, source,
                                                        qss::io::hybrid_table_text(hybrid)));
    }
    const qss::AccessStructure expected = qss::threshold_structure(hybrid.k, hybrid.n);
    if (map.neither_count != 0 || !map.matches(expected)) {
        std::cerr << "verification failed: the map is not the (" << hybrid.k << ", " << hybrid.n
                  << ") threshold structure\n";
        return 1;
    }
    if (map.max_deviation > 1e-9) {
        std::cout << "warning: holding checks deviate by " << map.max_deviation
                  << " (expected < 1e-9)\n";
    }
    std::cout << "verified: (" << hybrid.k << ", " << hybrid.n << ") threshold map confirmed\n";
    return 0;
}

int audit_any(const std::string& text) {
    const std::string kind = qss::io::kind_of(text);
    qss::SizeAudit audit;
    if (kind == "scheme") {
        audit = qss::size_audit(qss::io::scheme_from_json(text));
    } else if (kind == "hybrid") {
        audit = qss::size_audit(qss::io::hybrid_from_json(text));
    } else {
        throw qss::ParseError("audit needs a scheme or hybrid descriptor, got \"" + kind + "\"");
    }
    std::cout << qss::io::audit_to_text(audit);
    return audit.ok ? 0 : 1;
}

std::vector<int> parse_party_list(const std::string& csv) {
    std::vector<int> out;
    std::string token;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!token.empty()) {
                out.push_back(std::stoi(token));
                token.clear();
            }
        } else {
            token += c;
        }
    }
    if (out.empty()) {
        throw qss::ParseError("empty party list");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum secret sharing: construction, simulation, certification"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("--tolerance", common.tolerance, "numeric tolerance for verifications")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", common.jobs, "parallel workers for oracle sweeps")
        ->check(CLI::PositiveNumber);
    auto* seed_opt = app.add_option("--seed", common.seed, "seed for the random-secret mode");

    // threshold --k --n [--p] --out
    auto* cmd_threshold = app.add_subcommand("threshold", "build a ((k, n)) threshold scheme");
    int th_k = 0, th_n = 0;
    std::optional<int> th_p;
    std::string th_out, th_report;
    bool th_verify = false, th_audit = false;
    cmd_threshold->add_option("--k", th_k, "reconstruction threshold")->required();
    cmd_threshold->add_option("--n", th_n, "number of shares")->required();
    cmd_threshold->add_option("--p", th_p, "field modulus (default: smallest usable prime)");
    cmd_threshold->add_option("--out", th_out, "write the scheme descriptor here");
    cmd_threshold->add_option("--report", th_report, "write the oracle report here");
    cmd_threshold->add_flag("--verify", th_verify, "run the certifier after building");
    cmd_threshold->add_flag("--audit", th_audit, "run the share-size audit");

    // general --structure [--p] --out
    auto* cmd_general = app.add_subcommand("general", "build a scheme for an access structure");
    std::string gen_structure, gen_out, gen_report;
    std::optional<int> gen_p;
    bool gen_verify = false, gen_audit = false;
    cmd_general->add_option("--structure", gen_structure, "access structure file")->required();
    cmd_general->add_option("--p", gen_p, "field modulus (default: smallest usable prime)");
    cmd_general->add_option("--out", gen_out, "write the scheme descriptor here");
    cmd_general->add_option("--report", gen_report, "write the oracle report here");
    cmd_general->add_flag("--verify", gen_verify, "run the certifier after building");
    cmd_general->add_flag("--audit", gen_audit, "run the share-size audit");

    // hybrid --k --n --p --out
    auto* cmd_hybrid =
        app.add_subcommand("hybrid", "build a (k, n) classical-secret scheme (two pits)");
    int hy_k = 0, hy_n = 0, hy_p = 0;
    std::string hy_out, hy_report;
    bool hy_verify = false, hy_audit = false;
    cmd_hybrid->add_option("--k", hy_k, "reconstruction threshold")->required();
    cmd_hybrid->add_option("--n", hy_n, "number of shares")->required();
    cmd_hybrid->add_option("--p", hy_p, "prime share dimension (p >= n)")->required();
    cmd_hybrid->add_option("--out", hy_out, "write the hybrid descriptor here");
    cmd_hybrid->add_option("--report", hy_report, "write the oracle report here");
    cmd_hybrid->add_flag("--verify", hy_verify, "run the certifier after building");
    cmd_hybrid->add_flag("--audit", hy_audit, "run the share-size audit");

    // encode --in descriptor (--secret s | --secret a,b | --seed) --out state
    auto* cmd_encode = app.add_subcommand("encode", "encode a secret into shares");
    std::string enc_in, enc_out, enc_secret;
    cmd_encode->add_option("--in", enc_in, "scheme or hybrid descriptor")->required();
    cmd_encode->add_option("--secret", enc_secret,
                           "basis secret: one integer (quantum) or a,b (hybrid)");
    cmd_encode->add_option("--out", enc_out, "write the encoded state here")->required();

    // reconstruct --in descriptor --state file --parties list [--secret s]
    auto* cmd_reconstruct =
        app.add_subcommand("reconstruct", "reconstruct a secret from a subset of shares");
    std::string rec_in, rec_state, rec_parties, rec_reference, rec_secret;
    cmd_reconstruct->add_option("--in", rec_in, "scheme or hybrid descriptor")->required();
    cmd_reconstruct->add_option("--state", rec_state, "encoded state file")->required();
    cmd_reconstruct->add_option("--parties", rec_parties, "comma-separated party list")
        ->required();
    cmd_reconstruct->add_option("--reference", rec_reference,
                                "reference secret state file (quantum, for fidelity)");
    cmd_reconstruct->add_option("--secret", rec_secret,
                                "reference basis secret (quantum, for fidelity)");

    // verify --in descriptor [--out report]
    auto* cmd_verify = app.add_subcommand("verify", "run the brute-force certifier");
    std::string ver_in, ver_out;
    cmd_verify->add_option("--in", ver_in, "scheme or hybrid descriptor")->required();
    cmd_verify->add_option("--out", ver_out, "write the oracle report here");

    // audit --in descriptor
    auto* cmd_audit = app.add_subcommand("audit", "run the share-size audit");
    std::string aud_in;
    cmd_audit->add_option("--in", aud_in, "scheme or hybrid descriptor")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }
    common.seeded = seed_opt->count() > 0;

    try {
        qss::SimCaps::apply_env_caps();

        if (cmd_threshold->parsed()) {
            qss::Scheme scheme = qss::build_threshold(th_k, th_n, th_p);
            std::cout << "built ((" << th_k << ", " << th_n << ")) scheme over GF(" << scheme.p
                      << ") with " << scheme.n_leaves() << " leaves ("
                      << scheme.environment_leaves().size() << " environment)\n";
            if (!th_out.empty()) {
                qss::io::write_file(th_out, qss::io::scheme_to_json(scheme));
            }
            int rc = 0;
            if (th_audit) {
                qss::SizeAudit audit = qss::size_audit(scheme);
                std::cout << qss::io::audit_to_text(audit);
                rc |= audit.ok ? 0 : 1;
            }
            if (th_verify) {
                rc |= verify_scheme(scheme, common, th_report, "threshold");
            }
            return rc;
        }

        if (cmd_general->parsed()) {
            qss::AccessStructure structure =
                qss::io::structure_from_json(qss::io::read_file(gen_structure));
            qss::Scheme scheme = qss::build_general(structure, gen_p);
            std::cout << "built scheme over GF(" << scheme.p << ") with " << scheme.n_leaves()
                      << " leaves for structure with " << structure.minimal_sets.size()
                      << " minimal sets\n";
            if (!gen_out.empty()) {
                qss::io::write_file(gen_out, qss::io::scheme_to_json(scheme));
            }
            int rc = 0;
            if (gen_audit) {
                qss::SizeAudit audit = qss::size_audit(scheme);
                std::cout << qss::io::audit_to_text(audit);
                rc |= audit.ok ? 0 : 1;
            }
            if (gen_verify) {
                rc |= verify_scheme(scheme, common, gen_report, "general");
            }
            return rc;
        }

        if (cmd_hybrid->parsed()) {
            qss::HybridScheme hybrid = qss::build_hybrid(hy_k, hy_n, hy_p);
            std::cout << "built (" << hy_k << ", " << hy_n << ") hybrid scheme over GF(" << hy_p
                      << "), " << hybrid.n_generators() << " stabilizer generators\n";
            std::cout << qss::io::hybrid_table_text(hybrid);
            if (!hy_out.empty()) {
                qss::io::write_file(hy_out, qss::io::hybrid_to_json(hybrid));
            }
            int rc = 0;
            if (hy_audit) {
                qss::SizeAudit audit = qss::size_audit(hybrid);
                std::cout << qss::io::audit_to_text(audit);
                rc |= audit.ok ? 0 : 1;
            }
            if (hy_verify) {
                rc |= verify_hybrid(hybrid, common, hy_report, "hybrid");
            }
            return rc;
        }

        if (cmd_encode->parsed()) {
            const std::string text = qss::io::read_file(enc_in);
            const std::string kind = qss::io::kind_of(text);
            if (kind == "scheme") {
                qss::Scheme scheme = qss::io::scheme_from_json(text);
                qss::StateVector secret = [&]() {
                    if (!enc_secret.empty()) {
                        const int s = std::stoi(enc_secret);
                        if (s < 0 || s >= scheme.p) {
                            throw qss::ParseError("basis secret out of range");
                        }
                        return qss::StateVector::basis_state(
                            qss::SubsystemLayout({scheme.p}), s);
                    }
                    if (!common.seeded) {
                        throw qss::ParseError("encode needs --secret or --seed");
                    }
                    std::mt19937_64 rng(common.seed);
                    std::normal_distribution<double> gauss;
                    qss::CVector v(scheme.p);
                    for (int i = 0; i < scheme.p; ++i) {
                        v(i) = qss::cx(gauss(rng), gauss(rng));
                    }
                    v /= v.norm();
                    return qss::StateVector(qss::SubsystemLayout({scheme.p}), std::move(v));
                }();
                qss::StateVector encoded = qss::encode(scheme, secret);
                qss::io::write_file(enc_out, qss::io::state_to_json(encoded));
                std::cout << "encoded a " << scheme.p << "-dimensional secret into "
                          << scheme.n_leaves() << " shares\n";
                return 0;
            }
            if (kind == "hybrid") {
                qss::HybridScheme hybrid = qss::io::hybrid_from_json(text);
                const auto comma = enc_secret.find(',');
                if (enc_secret.empty() || comma == std::string::npos) {
                    throw qss::ParseError("hybrid encode needs --secret a,b");
                }
                const int a = std::stoi(enc_secret.substr(0, comma));
                const int b = std::stoi(enc_secret.substr(comma + 1));
                qss::DensityMatrix rho = qss::encode_classical(hybrid, a, b);
                qss::io::write_file(enc_out, qss::io::density_to_json(rho));
                std::cout << "encoded (" << a << ", " << b << ") into " << hybrid.n
                          << " qupit shares\n";
                return 0;
            }
            throw qss::ParseError("encode needs a scheme or hybrid descriptor");
        }

        if (cmd_reconstruct->parsed()) {
            const std::string text = qss::io::read_file(rec_in);
            const std::string kind = qss::io::kind_of(text);
            const std::vector<int> parties = parse_party_list(rec_parties);
            if (kind == "scheme") {
                qss::Scheme scheme = qss::io::scheme_from_json(text);
                qss::StateVector global =
                    qss::io::state_from_json(qss::io::read_file(rec_state));
                qss::PartySet t(parties.begin(), parties.end());
                qss::DecodeResult result = qss::decode(scheme, t, global);
                std::cout << "decoded onto leaf " << result.secret_leaf << ", purity "
                          << result.secret_purity << "\n";
                std::optional<qss::StateVector> reference;
                if (!rec_reference.empty()) {
                    reference = qss::io::state_from_json(qss::io::read_file(rec_reference));
                } else if (!rec_secret.empty()) {
                    reference = qss::StateVector::basis_state(
                        qss::SubsystemLayout({scheme.p}), std::stoi(rec_secret));
                }
                if (reference) {
                    const double f = qss::fidelity(*reference, result.secret);
                    std::cout << "fidelity with the reference secret: " << f << "\n";
                    return f >= 1.0 - common.tolerance ? 0 : 1;
                }
                return 0;
            }
            if (kind == "hybrid") {
                qss::HybridScheme hybrid = qss::io::hybrid_from_json(text);
                qss::DensityMatrix rho =
                    qss::io::density_from_json(qss::io::read_file(rec_state));
                std::set<int> coords;
                for (int party : parties) {
                    coords.insert(party - 1);  // shares are 1-based on the command line
                }
                qss::DensityMatrix rho_t =
                    rho.layout.n_subsystems() == static_cast<int>(coords.size())
                        ? rho
                        : qss::partial_trace(rho,
                                             std::vector<int>(coords.begin(), coords.end()));
                auto [a, b] = qss::reconstruct_classical(hybrid, coords, rho_t);
                std::cout << "recovered classical secret: " << a << " " << b << "\n";
                return 0;
            }
            throw qss::ParseError("reconstruct needs a scheme or hybrid descriptor");
        }

        if (cmd_verify->parsed()) {
            const std::string text = qss::io::read_file(ver_in);
            const std::string kind = qss::io::kind_of(text);
            if (kind == "scheme") {
                return verify_scheme(qss::io::scheme_from_json(text), common, ver_out, ver_in);
            }
            if (kind == "hybrid") {
                return verify_hybrid(qss::io::hybrid_from_json(text), common, ver_out, ver_in);
            }
            throw qss::ParseError("verify needs a scheme or hybrid descriptor");
        }

        if (cmd_audit->parsed()) {
            return audit_any(qss::io::read_file(aud_in));
        }
    } catch (const qss::ConstructionError& e) {
        std::cerr << "construction rejected: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const qss::SizeCapError& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const qss::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
