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

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "qss/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("QSS_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "QSS_BIN must point at the qss binary");
    const std::string cmd = std::string(bin) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe) != nullptr) {
        result.output += buf.data();
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("qss_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("threshold subcommand builds, verifies and audits") {
    TempDir dir;
    RunResult r = run("threshold --k 2 --n 3 --out " + dir.file("scheme.json") +
                      " --verify --audit");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("GF(3)") != std::string::npos);
    CHECK(r.output.find("audit passed") != std::string::npos);
    CHECK(r.output.find("verified") != std::string::npos);
    CHECK(fs::exists(dir.file("scheme.json")));
}

TEST_CASE("threshold rejections exit with code 2 and cite no-cloning") {
    RunResult r = run("threshold --k 1 --n 2");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("no-cloning") != std::string::npos);

    RunResult r2 = run("threshold --k 2 --n 5");
    CHECK(r2.exit_code == 2);
    CHECK(r2.output.find("no-cloning") != std::string::npos);
}

TEST_CASE("the trivial one-share scheme builds") {
    TempDir dir;
    RunResult r = run("threshold --k 1 --n 1 --out " + dir.file("trivial.json"));
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir.file("trivial.json")));
}

TEST_CASE("general subcommand verifies the ABC-or-AD structure") {
    TempDir dir;
    qss::AccessStructure s = qss::normalize(4, {{1, 2, 3}, {1, 4}});
    qss::io::write_file(dir.file("abc_ad.json"), qss::io::structure_to_json(s));
    RunResult r = run("general --structure " + dir.file("abc_ad.json") + " --verify --out " +
                      dir.file("scheme.json") + " --report " + dir.file("report.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verified") != std::string::npos);
    CHECK(fs::exists(dir.file("report.json")));
    CHECK(qss::io::read_file(dir.file("report.json")).find("\"summary\": \"perfect\"") !=
          std::string::npos);
}

TEST_CASE("general subcommand rejects no-cloning violations citing the complement") {
    TempDir dir;
    std::string text = R"({"format":"qss/1","kind":"structure","parties":4,)"
                       R"("minimal_sets":[[1,2,3],[1,4],[2,3]]})";
    qss::io::write_file(dir.file("bad.json"), text);
    RunResult r = run("general --structure " + dir.file("bad.json"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("complement") != std::string::npos);
    CHECK(r.output.find("already authorized") != std::string::npos);
}

TEST_CASE("hybrid subcommand confirms the (3,4) map") {
    TempDir dir;
    RunResult r = run("hybrid --k 3 --n 4 --p 5 --verify --audit --out " +
                      dir.file("hybrid.json") + " --report " + dir.file("report.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(3, 4) threshold map confirmed") != std::string::npos);
    CHECK(r.output.find("w^a") != std::string::npos);  // stabilizer table
    CHECK(r.output.find("audit passed") != std::string::npos);
    // the report carries the generator display
    CHECK(qss::io::read_file(dir.file("report.json")).find("stabilizer_table") !=
          std::string::npos);
}

TEST_CASE("hybrid rejections cite the share-count bound") {
    RunResult r = run("hybrid --k 2 --n 3 --p 5");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("n <= 2k-2") != std::string::npos);
}

TEST_CASE("encode then reconstruct round trip, quantum") {
    TempDir dir;
    CHECK(run("threshold --k 2 --n 3 --out " + dir.file("scheme.json")).exit_code == 0);
    CHECK(run("encode --in " + dir.file("scheme.json") + " --secret 2 --out " +
              dir.file("state.json"))
              .exit_code == 0);
    RunResult r = run("reconstruct --in " + dir.file("scheme.json") + " --state " +
                      dir.file("state.json") + " --parties 1,3 --secret 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("fidelity") != std::string::npos);

    // wrong reference fails
    RunResult wrong = run("reconstruct --in " + dir.file("scheme.json") + " --state " +
                          dir.file("state.json") + " --parties 1,3 --secret 0");
    CHECK(wrong.exit_code == 1);
}

TEST_CASE("encode with a seeded random secret is deterministic") {
    TempDir dir;
    CHECK(run("threshold --k 2 --n 3 --out " + dir.file("scheme.json")).exit_code == 0);
    CHECK(run("--seed 42 encode --in " + dir.file("scheme.json") + " --out " +
              dir.file("a.json"))
              .exit_code == 0);
    CHECK(run("--seed 42 encode --in " + dir.file("scheme.json") + " --out " +
              dir.file("b.json"))
              .exit_code == 0);
    CHECK(qss::io::read_file(dir.file("a.json")) == qss::io::read_file(dir.file("b.json")));
}

TEST_CASE("encode then reconstruct round trip, hybrid") {
    TempDir dir;
    CHECK(run("hybrid --k 3 --n 4 --p 5 --out " + dir.file("hybrid.json")).exit_code == 0);
    CHECK(run("encode --in " + dir.file("hybrid.json") + " --secret 3,1 --out " +
              dir.file("rho.json"))
              .exit_code == 0);
    RunResult r = run("reconstruct --in " + dir.file("hybrid.json") + " --state " +
                      dir.file("rho.json") + " --parties 1,2,4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("recovered classical secret: 3 1") != std::string::npos);
}

TEST_CASE("verify is independent of the builder: corrupted descriptors fail") {
    TempDir dir;
    CHECK(run("threshold --k 2 --n 3 --p 5 --out " + dir.file("scheme.json")).exit_code == 0);

    SUBCASE("a lying declared structure is caught") {
        std::string text = qss::io::read_file(dir.file("scheme.json"));
        qss::Scheme scheme = qss::io::scheme_from_json(text);
        scheme.declared = qss::AccessStructure(3, {{1, 2}});
        qss::io::write_file(dir.file("lying.json"), qss::io::scheme_to_json(scheme));
        RunResult r = run("verify --in " + dir.file("lying.json"));
        CHECK(r.exit_code == 1);
        CHECK(r.output.find("disagrees with the declared structure") != std::string::npos);
    }

    SUBCASE("a hand-edited tree that is not a secret sharing scheme earns NEITHER verdicts") {
        // widen the threshold node to four evaluation points, bundling the
        // extra leaf onto party 3: pairs of shares can now reconstruct while
        // their complements still can, so the declared ((2,3)) map is
        // unachievable and the oracle must flag it
        qss::Scheme scheme = qss::io::scheme_from_json(qss::io::read_file(dir.file("scheme.json")));
        scheme.root.alphas = {0, 1, 2, 3};
        scheme.root.slots.push_back(qss::SchemeNode::leaf(3));
        scheme.refresh_leaves();
        qss::io::write_file(dir.file("bogus.json"), qss::io::scheme_to_json(scheme));
        RunResult r = run("verify --in " + dir.file("bogus.json"));
        CHECK(r.exit_code == 1);
        CHECK(r.output.find("NEITHER") != std::string::npos);
    }
}

TEST_CASE("malformed files exit with code 3") {
    TempDir dir;
    qss::io::write_file(dir.file("junk.json"), "{\"format\":\"qss/1\"");
    RunResult r = run("verify --in " + dir.file("junk.json"));
    CHECK(r.exit_code == 3);
    CHECK(run("verify --in " + dir.file("missing.json")).exit_code == 3);
}

TEST_CASE("cap overruns exit with code 4 and QSS_MAX_DIM lifts them") {
    TempDir dir;
    qss::AccessStructure s = qss::normalize(4, {{1, 2, 3}, {1, 4}});
    qss::io::write_file(dir.file("abc_ad.json"), qss::io::structure_to_json(s));
    CHECK(run("general --structure " + dir.file("abc_ad.json") + " --out " +
              dir.file("big.json"))
              .exit_code == 0);
    // encoding 5^9 amplitudes exceeds the default dense cap
    RunResult r = run("encode --in " + dir.file("big.json") + " --secret 0 --out " +
                      dir.file("state.json"));
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("QSS_MAX_DIM") != std::string::npos);
    CHECK_FALSE(fs::exists(dir.file("state.json")));

    // the documented override admits the nine-leaf state
    setenv("QSS_MAX_DIM", "2000000", 1);
    RunResult lifted = run("encode --in " + dir.file("big.json") + " --secret 0 --out " +
                           dir.file("state.json"));
    unsetenv("QSS_MAX_DIM");
    CHECK(lifted.exit_code == 0);
    CHECK(fs::exists(dir.file("state.json")));
}
