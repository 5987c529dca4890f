#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CIRCOL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("circol_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string file(const std::string& name, const std::string& content) const {
        fs::path p = dir / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

const char* kP3 = "p edge 3 2\ne 0 1\ne 1 2\n";
const char* kK2 = "p edge 2 1\ne 0 1\n";
const char* kK3 = "p edge 3 3\ne 0 1\ne 0 2\ne 1 2\n";
const char* kK4 = "p edge 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n";

}  // namespace

TEST_CASE("cli verify") {
    TempDir tmp;
    std::string g = tmp.file("g", kP3);
    SECTION("ok") {
        auto r = run("verify --graph " + g + " --colouring " +
                     tmp.file("c", "colouring 5 2 3\n0 2 4\n"));
        CHECK(r.exit_code == 0);
        CHECK(r.out == "ok\n");
    }
    SECTION("violation printed with exit 2") {
        std::string g2 = tmp.file("g2", kK2);
        auto r = run("verify --graph " + g2 + " --colouring " +
                     tmp.file("c2", "colouring 5 2 2\n0 1\n"));
        CHECK(r.exit_code == 2);
        CHECK(r.out == "violation e 0 1\n");
    }
    SECTION("malformed graph exits 65") {
        std::string bad = tmp.file("bad", "p edge 2 1\ne 0 0\n");
        auto r = run("verify --graph " + bad + " --colouring " +
                     tmp.file("c3", "colouring 5 2 2\n0 2\n"));
        CHECK(r.exit_code == 65);
    }
    SECTION("missing flags exit 64") {
        CHECK(run("verify --graph " + g).exit_code == 64);
    }
}

TEST_CASE("cli reconfigure") {
    TempDir tmp;
    SECTION("yes instance") {
        auto r = run("reconfigure --graph " + tmp.file("g", kP3) + " --from " +
                     tmp.file("f", "colouring 5 2 3\n0 2 4\n") + " --to " +
                     tmp.file("t", "colouring 5 2 3\n0 2 0\n"));
        CHECK(r.exit_code == 0);
        nlohmann::json doc = nlohmann::json::parse(r.out);
        CHECK(doc["result"] == "yes");
        CHECK(doc["sequence"] == nlohmann::json::parse("[[2,0]]"));
    }
    SECTION("no instance carries a cycle-weight certificate") {
        auto r = run("reconfigure --graph " + tmp.file("g", kK3) + " --from " +
                     tmp.file("f", "colouring 7 2 3\n0 2 4\n") + " --to " +
                     tmp.file("t", "colouring 7 2 3\n0 5 3\n"));
        CHECK(r.exit_code == 1);
        nlohmann::json doc = nlohmann::json::parse(r.out);
        CHECK(doc["result"] == "no");
        CHECK(doc["certificate"]["kind"] == "cycle-weight");
    }
    SECTION("parameter gate exits 3") {
        auto r = run("reconfigure --graph " + tmp.file("g", kK2) + " --from " +
                     tmp.file("f", "colouring 9 2 2\n0 3\n") + " --to " +
                     tmp.file("t", "colouring 9 2 2\n0 3\n"));
        CHECK(r.exit_code == 3);
    }
    SECTION("invalid input colouring exits 2") {
        auto r = run("reconfigure --graph " + tmp.file("g", kK2) + " --from " +
                     tmp.file("f", "colouring 5 2 2\n0 1\n") + " --to " +
                     tmp.file("t", "colouring 5 2 2\n0 2\n"));
        CHECK(r.exit_code == 2);
    }
    SECTION("disconnected graphs decompose per component") {
        std::string g = tmp.file("g", "p edge 4 2\ne 0 1\ne 2 3\n");
        auto yes = run("reconfigure --graph " + g + " --from " +
                       tmp.file("f", "colouring 5 2 4\n0 2 0 2\n") + " --to " +
                       tmp.file("t", "colouring 5 2 4\n1 3 0 2\n"));
        CHECK(yes.exit_code == 0);
        auto no = run("reconfigure --graph " + g + " --from " +
                      tmp.file("f2", "colouring 2 1 4\n0 1 0 1\n") + " --to " +
                      tmp.file("t2", "colouring 2 1 4\n0 1 1 0\n"));
        CHECK(no.exit_code == 1);
        nlohmann::json doc = nlohmann::json::parse(no.out);
        // The certificate must reference the second component's vertices.
        CHECK(doc["certificate"]["kind"] == "fixed-vertex");
        CHECK(doc["certificate"]["witness"]["vertex"] == 2);
    }
    SECTION("replaying an emitted sequence verifies") {
        std::string g = tmp.file("g", kP3);
        std::string from = tmp.file("f", "colouring 7 3 3\n0 3 6\n");
        auto r = run("reconfigure --graph " + g + " --from " + from + " --to " +
                     tmp.file("t", "colouring 7 3 3\n3 0 4\n"));
        if (r.exit_code == 0) {
            nlohmann::json doc = nlohmann::json::parse(r.out);
            std::vector<int> cur = {0, 3, 6};
            for (const auto& st : doc["sequence"]) cur[st[0].get<int>()] = st[1].get<int>();
            CHECK(cur == std::vector<int>{3, 0, 4});
        }
    }
}

TEST_CASE("cli oracle") {
    TempDir tmp;
    SECTION("components") {
        auto r = run("oracle --graph " + tmp.file("g", kK2) + " -p 2 -q 1 --components");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "components=2 sizes=1,1 frozen=2\n");
    }
    SECTION("decide yes/no") {
        std::string g = tmp.file("g", kK2);
        auto yes = run("oracle --graph " + g + " -p 5 -q 2 --from " +
                       tmp.file("f", "colouring 5 2 2\n0 2\n") + " --to " +
                       tmp.file("t", "colouring 5 2 2\n2 0\n"));
        CHECK(yes.exit_code == 0);
        CHECK(yes.out.substr(0, 13) == "reachable=yes");
        auto no = run("oracle --graph " + g + " -p 2 -q 1 --from " +
                      tmp.file("f2", "colouring 2 1 2\n0 1\n") + " --to " +
                      tmp.file("t2", "colouring 2 1 2\n1 0\n"));
        CHECK(no.exit_code == 1);
        CHECK(no.out == "reachable=no\n");
    }
    SECTION("threads do not change output") {
        std::string g = tmp.file("g", kP3);
        auto a = run("oracle --graph " + g + " -p 7 -q 2 --components --threads 1");
        auto b = run("oracle --graph " + g + " -p 7 -q 2 --components --threads 4");
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
    SECTION("budget exits 69") {
        std::string g = tmp.file("g", "p edge 4 3\ne 0 1\ne 1 2\ne 2 3\n");
        auto r = run("oracle --graph " + g + " -p 10 -q 3 --budget 3 --from " +
                     tmp.file("f", "colouring 10 3 4\n0 3 6 9\n") + " --to " +
                     tmp.file("t", "colouring 10 3 4\n9 6 3 0\n"));
        CHECK(r.exit_code == 69);
    }
    SECTION("missing mode exits 64") {
        CHECK(run("oracle --graph " + tmp.file("g", kK2) + " -p 5 -q 2").exit_code == 64);
    }
}

TEST_CASE("cli reduce and lift") {
    TempDir tmp;
    std::string g = tmp.file("g", kK2);
    std::string f = tmp.file("f", "colouring 4 1 2\n0 2\n");
    std::string t = tmp.file("t", "colouring 4 1 2\n1 2\n");
    SECTION("reduce writes the instance files") {
        auto r = run("reduce --graph " + g + " --from " + f + " --to " + t +
                     " -p 18 -q 4 --out-prefix " + tmp.path("red"));
        REQUIRE(r.exit_code == 0);
        std::ifstream gp(tmp.path("red.graph"));
        REQUIRE(gp.good());
        std::string header;
        std::getline(gp, header);
        // 1 original edge + 99 clique-copy edges + 12 path edges + 36
        // enforcement edges.
        CHECK(header == "p edge 30 148");
        std::ifstream alpha(tmp.path("red.alpha"));
        std::string aheader;
        std::getline(alpha, aheader);
        CHECK(aheader == "colouring 18 4 30");
        nlohmann::json meta = nlohmann::json::parse(std::ifstream(tmp.path("red.meta.json")));
        CHECK(meta["original"].size() == 2);
        CHECK(meta["pinned"].size() == 18);
        CHECK(meta["paths"].size() == 2);
    }
    SECTION("lift emits a step list") {
        std::string ks = tmp.file("ks", "[[0, 1]]");
        auto r = run("lift --graph " + g + " --from " + f + " --to " + t +
                     " -p 18 -q 4 --ksteps " + ks);
        REQUIRE(r.exit_code == 0);
        nlohmann::json steps = nlohmann::json::parse(r.out);
        CHECK(steps.size() == 18);
    }
    SECTION("invalid k-sequence exits 65") {
        std::string ks = tmp.file("ks", "[[0, 3]]");
        auto r = run("lift --graph " + g + " --from " + f + " --to " + t +
                     " -p 18 -q 4 --ksteps " + ks);
        CHECK(r.exit_code == 65);
    }
}

TEST_CASE("cli cycles and sparse-colour") {
    TempDir tmp;
    SECTION("K4 counts") {
        auto r = run("cycles --graph " + tmp.file("g", kK4) + " -k 3");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "count=4 threshold=1 verdict=at-or-above\n");
    }
    SECTION("tree is below threshold") {
        auto r = run("cycles --graph " + tmp.file("g", kP3) + " -k 3");
        CHECK(r.out == "count=0 threshold=1 verdict=below\n");
    }
    SECTION("sparse-colour success prints a colouring") {
        auto r = run("sparse-colour --graph " + tmp.file("g", kP3) + " -k 3");
        CHECK(r.exit_code == 0);
        CHECK(r.out.substr(0, 16) == "colouring 3 1 3\n");
    }
    SECTION("sparse-colour failure names the edge") {
        auto r = run("sparse-colour --graph " + tmp.file("g", kK4) + " -k 3");
        CHECK(r.exit_code == 1);
        CHECK(r.out == "result=failure edge=2,3 index=5 count=2 threshold=1\n");
    }
}

TEST_CASE("cli determinism: repeated runs are byte-identical") {
    TempDir tmp;
    std::string g = tmp.file("g", kK3);
    std::string f = tmp.file("f", "colouring 7 2 3\n0 2 4\n");
    std::string t = tmp.file("t", "colouring 7 2 3\n2 4 6\n");
    auto a = run("reconfigure --graph " + g + " --from " + f + " --to " + t);
    auto b = run("reconfigure --graph " + g + " --from " + f + " --to " + t);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
}
