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

#include "qss/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "qss/errors.hpp"

namespace qss::io {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "qss/1";

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ParseError("invalid JSON");
    }
    return j;
}

void require_format(const json& j, const std::string& kind) {
    if (!j.is_object() || j.value("format", "") != kFormat) {
        throw ParseError("missing or unsupported format field (want \"qss/1\")");
    }
    if (j.value("kind", "") != kind) {
        throw ParseError("expected kind \"" + kind + "\", found \"" + j.value("kind", "") + "\"");
    }
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

cx amplitude_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw ParseError("amplitudes must be [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const FpMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.rows) {
        rows.push_back(row);
    }
    return rows;
}

FpMatrix matrix_from_json(const json& j, int cols) {
    FpMatrix m(cols);
    if (!j.is_array()) {
        throw ParseError("matrix must be an array of rows");
    }
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            throw ParseError("matrix rows must have uniform length");
        }
        m.append_row(row.get<FpVector>());
    }
    return m;
}

json node_to_json(const SchemeNode& node) {
    if (node.is_leaf()) {
        return json{{"type", "leaf"}, {"party", node.party}};
    }
    json slots = json::array();
    for (const auto& slot : node.slots) {
        slots.push_back(node_to_json(slot));
    }
    return json{{"type", "threshold"}, {"k", node.k}, {"alphas", node.alphas},
                {"slots", std::move(slots)}};
}

SchemeNode node_from_json(const json& j) {
    if (!j.is_object()) {
        throw ParseError("scheme tree nodes must be objects");
    }
    const std::string type = j.value("type", "");
    if (type == "leaf") {
        if (!j.contains("party") || !j["party"].is_number_integer()) {
            throw ParseError("leaf nodes need an integer party");
        }
        return SchemeNode::leaf(j["party"].get<int>());
    }
    if (type == "threshold") {
        if (!j.contains("k") || !j.contains("alphas") || !j.contains("slots")) {
            throw ParseError("threshold nodes need k, alphas and slots");
        }
        std::vector<SchemeNode> slots;
        for (const auto& slot : j["slots"]) {
            slots.push_back(node_from_json(slot));
        }
        try {
            return SchemeNode::threshold(j["k"].get<int>(), j["alphas"].get<std::vector<int>>(),
                                         std::move(slots));
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad threshold node: ") + e.what());
        }
    }
    throw ParseError("unknown node type \"" + type + "\"");
}

json structure_payload(const AccessStructure& s) {
    json sets = json::array();
    for (const auto& m : s.minimal_sets) {
        sets.push_back(std::vector<int>(m.begin(), m.end()));
    }
    return json{{"parties", s.n_parties}, {"minimal_sets", std::move(sets)}};
}

AccessStructure structure_payload_from(const json& j) {
    if (!j.contains("parties") || !j.contains("minimal_sets")) {
        throw ParseError("access structure needs parties and minimal_sets");
    }
    std::vector<PartySet> sets;
    for (const auto& raw : j["minimal_sets"]) {
        PartySet s;
        for (const auto& x : raw) {
            s.insert(x.get<int>());
        }
        sets.push_back(std::move(s));
    }
    try {
        return normalize(j["parties"].get<int>(), std::move(sets));
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad access structure: ") + e.what());
    }
}

}  // namespace

std::string structure_to_json(const AccessStructure& s) {
    json j = structure_payload(s);
    j["format"] = kFormat;
    j["kind"] = "structure";
    return j.dump(2) + "\n";
}

AccessStructure structure_from_json(const std::string& text) {
    json j = parse(text);
    require_format(j, "structure");
    return structure_payload_from(j);
}

std::string code_to_json(const LinearCode& c) {
    json j{{"format", kFormat}, {"kind", "code"},      {"p", c.p.p},
           {"n", c.n},          {"generator", matrix_to_json(c.gen)}, {"label", c.label}};
    return j.dump(2) + "\n";
}

LinearCode code_from_json(const std::string& text) {
    json j = parse(text);
    require_format(j, "code");
    try {
        const int n = j.at("n").get<int>();
        return LinearCode(FieldModulus(j.at("p").get<int>()), n,
                          matrix_from_json(j.at("generator"), n), j.value("label", ""));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad code file: ") + e.what());
    }
}

std::string scheme_to_json(const Scheme& s) {
    json j{{"format", kFormat},
           {"kind", "scheme"},
           {"p", s.p},
           {"parties", s.n_parties},
           {"tree", node_to_json(s.root)},
           {"declared_structure", structure_payload(s.declared)},
           {"environment_leaves", s.environment_leaves()},
           {"share_map", s.leaf_party}};
    return j.dump(2) + "\n";
}

Scheme scheme_from_json(const std::string& text) {
    json j = parse(text);
    require_format(j, "scheme");
    Scheme s;
    try {
        s.p = j.at("p").get<int>();
        if (!is_prime(s.p)) {
            throw ParseError("scheme modulus must be prime");
        }
        s.n_parties = j.at("parties").get<int>();
        s.root = node_from_json(j.at("tree"));
        s.declared = structure_payload_from(j.at("declared_structure"));
        if (s.declared.n_parties != s.n_parties) {
            throw ParseError("declared structure universe disagrees with the scheme");
        }
        s.refresh_leaves();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad scheme file: ") + e.what());
    }
    try {
        require_no_cloning(s.declared);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad scheme file: ") + e.what());
    }
    return s;
}

std::string hybrid_to_json(const HybridScheme& h) {
    json j{{"format", kFormat},
           {"kind", "hybrid"},
           {"p", h.p},
           {"n", h.n},
           {"k", h.k},
           {"xChecks", matrix_to_json(h.x_checks)},
           {"zChecks", matrix_to_json(h.z_checks)},
           {"rowR_index", h.row_r_index},
           {"rowS_index", h.row_s_index}};
    return j.dump(2) + "\n";
}

HybridScheme hybrid_from_json(const std::string& text) {
    json j = parse(text);
    require_format(j, "hybrid");
    try {
        HybridScheme h;
        h.p = j.at("p").get<int>();
        h.n = j.at("n").get<int>();
        h.k = j.at("k").get<int>();
        h.r = h.k - 1;
        h.s = h.n - h.r - 1;
        h.x_checks = matrix_from_json(j.at("xChecks"), h.n);
        h.z_checks = matrix_from_json(j.at("zChecks"), h.n);
        h.row_r_index = j.at("rowR_index").get<int>();
        h.row_s_index = j.at("rowS_index").get<int>();
        if (!is_prime(h.p)) {
            throw ParseError("hybrid modulus must be prime");
        }
        if (h.row_r_index < 0 || h.row_r_index >= h.x_checks.n_rows() || h.row_s_index < 0 ||
            h.row_s_index >= h.z_checks.n_rows()) {
            throw ParseError("phase row indices out of range");
        }
        // Rebuilding the stabilizer validates commutation and independence.
        h.stabilizer(0, 0);
        return h;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad hybrid file: ") + e.what());
    }
}

std::string state_to_json(const StateVector& v) {
    std::ostringstream out;
    out << "{\n  \"format\": \"qss/1\",\n  \"kind\": \"state\",\n  \"dims\": [";
    for (size_t i = 0; i < v.layout.dims.size(); ++i) {
        out << (i ? ", " : "") << v.layout.dims[i];
    }
    out << "],\n  \"amplitudes\": [\n";
    for (std::int64_t i = 0; i < v.dim(); ++i) {
        out << "    [" << fmt17(v.amps(i).real()) << ", " << fmt17(v.amps(i).imag()) << "]"
            << (i + 1 < v.dim() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

StateVector state_from_json(const std::string& text) {
    json j = parse(text);
    require_format(j, "state");
    try {
        SubsystemLayout layout(j.at("dims").get<std::vector<std::int64_t>>());
        const auto& amps = j.at("amplitudes");
        CVector v(amps.size());
        for (size_t i = 0; i < amps.size(); ++i) {
            v(static_cast<std::int64_t>(i)) = amplitude_from_json(amps[i]);
        }
        return StateVector(std::move(layout), std::move(v));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad state file: ") + e.what());
    }
}

std::string density_to_json(const DensityMatrix& rho) {
    std::ostringstream out;
    out << "{\n  \"format\": \"qss/1\",\n  \"kind\": \"density\",\n  \"dims\": [";
    for (size_t i = 0; i < rho.layout.dims.size(); ++i) {
        out << (i ? ", " : "") << rho.layout.dims[i];
    }
    out << "],\n  \"matrix\": [\n";
    for (std::int64_t r = 0; r < rho.dim(); ++r) {
        out << "    [";
        for (std::int64_t c = 0; c < rho.dim(); ++c) {
            out << (c ? ", " : "") << "[" << fmt17(rho.m(r, c).real()) << ", "
                << fmt17(rho.m(r, c).imag()) << "]";
        }
        out << "]" << (r + 1 < rho.dim() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

DensityMatrix density_from_json(const std::string& text) {
    json j = parse(text);
    require_format(j, "density");
    try {
        SubsystemLayout layout(j.at("dims").get<std::vector<std::int64_t>>());
        const auto& rows = j.at("matrix");
        CMatrix m(rows.size(), rows.size());
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != rows.size()) {
                throw ParseError("density matrix must be square");
            }
            for (size_t c = 0; c < rows.size(); ++c) {
                m(static_cast<std::int64_t>(r), static_cast<std::int64_t>(c)) =
                    amplitude_from_json(rows[r][c]);
            }
        }
        return DensityMatrix(std::move(layout), std::move(m));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad density file: ") + e.what());
    }
}

std::string access_map_to_json(const AccessMap& map, const std::string& source,
                               const std::string& stabilizer_table) {
    json subsets = json::array();
    for (const auto& entry : map.subsets) {
        subsets.push_back(json{{"subset", std::vector<int>(entry.subset.begin(), entry.subset.end())},
                               {"verdict", verdict_name(entry.verdict)},
                               {"deviation_unauthorized", entry.deviation_unauthorized},
                               {"deviation_authorized", entry.deviation_authorized}});
    }
    json j{{"format", kFormat},
           {"kind", "report"},
           {"source", source},
           {"parties", map.n_parties},
           {"subsets", std::move(subsets)},
           {"neither_count", map.neither_count},
           {"max_deviation", map.max_deviation},
           {"runtime_seconds", map.runtime_seconds},
           {"summary", map.neither_count == 0 ? "perfect" : "NOT a perfect scheme"}};
    if (!stabilizer_table.empty()) {
        j["stabilizer_table"] = stabilizer_table;
    }
    return j.dump(2) + "\n";
}

std::string access_map_to_text(const AccessMap& map) {
    std::ostringstream out;
    out << "subset        verdict        deviation\n";
    for (const auto& entry : map.subsets) {
        // the deviation of the holding check; for NEITHER, the smaller of
        // the two failures
        double shown;
        switch (entry.verdict) {
            case Verdict::Unauthorized:
                shown = entry.deviation_unauthorized;
                break;
            case Verdict::Authorized:
                shown = entry.deviation_authorized;
                break;
            default:
                shown = std::min(entry.deviation_unauthorized, entry.deviation_authorized);
        }
        std::ostringstream dev;
        dev << std::scientific << std::setprecision(2) << shown;
        out << std::left << std::setw(14) << party_set_name(entry.subset) << std::setw(15)
            << verdict_name(entry.verdict) << dev.str() << "\n";
    }
    out << "neither verdicts: " << map.neither_count << ", max deviation: " << std::scientific
        << std::setprecision(3) << map.max_deviation << ", runtime: " << std::fixed
        << std::setprecision(3) << map.runtime_seconds << " s\n";
    return out.str();
}

std::string audit_to_json(const SizeAudit& audit) {
    json parties = json::array();
    for (const auto& entry : audit.parties) {
        parties.push_back(json{{"party", entry.party},
                               {"important", entry.important},
                               {"leaves", entry.n_leaves},
                               {"share_dim", entry.share_dim},
                               {"bound", entry.bound},
                               {"ok", entry.ok}});
    }
    json j{{"format", kFormat}, {"kind", "audit"},      {"parties", std::move(parties)},
           {"ok", audit.ok},    {"note", audit.note}};
    return j.dump(2) + "\n";
}

std::string audit_to_text(const SizeAudit& audit) {
    std::ostringstream out;
    out << "party  important  share_dim  bound  status\n";
    for (const auto& entry : audit.parties) {
        out << std::left << std::setw(7) << party_set_name({entry.party}) << std::setw(11)
            << (entry.important ? "yes" : "no") << std::setw(11) << entry.share_dim
            << std::setw(7) << entry.bound << (entry.ok ? "ok" : "VIOLATION") << "\n";
    }
    out << audit.note << "\n" << (audit.ok ? "audit passed" : "AUDIT FAILED") << "\n";
    return out.str();
}

std::string hybrid_table_text(const HybridScheme& h) {
    auto cell = [](const char* op, int e) -> std::string {
        if (e == 0) {
            return "I";
        }
        if (e == 1) {
            return op;
        }
        return std::string(op) + "^" + std::to_string(e);
    };
    std::ostringstream out;
    for (int i = 0; i < h.x_checks.n_rows(); ++i) {
        out << std::left << std::setw(6) << (i == h.row_r_index ? "w^a" : "");
        for (int j = 0; j < h.n; ++j) {
            out << std::setw(5) << cell("X", h.x_checks.rows[i][j]);
        }
        out << "\n";
    }
    for (int i = 0; i < h.z_checks.n_rows(); ++i) {
        out << std::left << std::setw(6) << (i == h.row_s_index ? "w^b" : "");
        for (int j = 0; j < h.n; ++j) {
            out << std::setw(5) << cell("Z", h.z_checks.rows[i][j]);
        }
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write " + path);
    }
    out << content;
}

std::string kind_of(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || j.value("format", "") != kFormat) {
        throw ParseError("missing or unsupported format field (want \"qss/1\")");
    }
    return j.value("kind", "");
}

}  // namespace qss::io
