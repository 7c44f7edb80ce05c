#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mbkit/graph.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// The binary path arrives via the MBKIT_BIN environment variable (set by the
// test harness); the suite is skipped when it is missing.
std::string binary() {
    const char* p = std::getenv("MBKIT_BIN");
    return p ? p : "";
}

int run(const std::string& args, const std::string& log = "/dev/null") {
    std::string cmd = binary() + " " + args + " >" + log + " 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("mbkit_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("construct and verify round trip") {
        if (binary().empty()) return;
        TempDir tmp;
        std::string cert = (tmp.path / "pp5.json").string();
        CHECK(run("construct path-p2 '{\"n\":5}' --out " + cert) == 0);
        CHECK(run("verify " + cert) == 0);

        // round trip through the file is byte-stable
        std::string again = (tmp.path / "pp5b.json").string();
        CHECK(run("construct path-p2 '{\"n\":5}' --out " + again) == 0);
        CHECK(slurp(cert) == slurp(again));
    }

    TEST_CASE("three-eigenvalue certificates verify too") {
        if (binary().empty()) return;
        TempDir tmp;
        std::string cert = (tmp.path / "mp.json").string();
        CHECK(run("construct multipartite-b '{\"parts\":[2,2]}' --out " + cert) == 0);
        CHECK(run("verify " + cert) == 0);
        json j = json::parse(slurp(cert));
        CHECK(j["kind"] == "three-eigenvalue");
        CHECK(j["eigenvalues"].size() == 3);
        CHECK(j["eigenvalues"][0].get<double>() == doctest::Approx(-1.0));
        CHECK(j["eigenvalues"][2].get<double>() == doctest::Approx(1.0));
    }

    TEST_CASE("search scans every k with --all") {
        if (binary().empty()) return;
        TempDir tmp;
        std::string out = (tmp.path / "all.json").string();
        CHECK(run("search C] --all --restarts 25 --max-iters 300 --seed 2 --out " + out) == 0);
        json j = json::parse(slurp(out));
        CHECK(j["achievable"] == json::array({2}));
    }

    TEST_CASE("verify rejects a zeroed edge entry") {
        if (binary().empty()) return;
        TempDir tmp;
        std::string cert = (tmp.path / "c.json").string();
        REQUIRE(run("construct canonical-blocks '{\"blocks\":[[1,1],[1,1]]}' --out " + cert) == 0);
        json j = json::parse(slurp(cert));
        int n = j["n"].get<int>();
        // zero both triangles of one edge entry
        auto g6 = j["graph6"].get<std::string>();
        (void)g6;
        bool zeroed = false;
        for (int i = 0; i < n && !zeroed; ++i)
            for (int c = i + 1; c < n && !zeroed; ++c) {
                double v = j["matrix"][std::size_t(i) * n + c].get<double>();
                if (std::abs(v) > 1e-6) {
                    j["matrix"][std::size_t(i) * n + c] = 0.0;
                    j["matrix"][std::size_t(c) * n + i] = 0.0;
                    zeroed = true;
                }
            }
        REQUIRE(zeroed);
        std::string bad = (tmp.path / "bad.json").string();
        std::ofstream(bad) << j.dump();
        std::string log = (tmp.path / "log.txt").string();
        CHECK(run("verify " + bad, log) == 1);
        CHECK(slurp(log).find("must-be-nonzero") != std::string::npos);
    }

    TEST_CASE("verify rejects a perturbed spectrum") {
        if (binary().empty()) return;
        TempDir tmp;
        std::string cert = (tmp.path / "c.json").string();
        REQUIRE(run("construct canonical-blocks '{\"blocks\":[[1,1],[1,1]]}' --out " + cert) == 0);
        json j = json::parse(slurp(cert));
        int n = j["n"].get<int>();
        double v = j["matrix"][0].get<double>();
        j["matrix"][0] = v + 0.1;  // diagonal bump: pattern fine, clustering broken
        (void)n;
        std::string bad = (tmp.path / "bad.json").string();
        std::ofstream(bad) << j.dump();
        CHECK(run("verify " + bad) == 1);
    }

    TEST_CASE("usage errors exit with code 2") {
        if (binary().empty()) return;
        CHECK(run("construct ring '{\"k\":6}'") == 2);
        CHECK(run("construct no-such-thing '{}'") == 2);
        CHECK(run("bogus-command") == 2);
    }

    TEST_CASE("bounds exit codes reflect obstructions") {
        if (binary().empty()) return;
        TempDir tmp;
        std::string out = (tmp.path / "b.json").string();
        CHECK(run("bounds DUw --out " + out) == 1);  // 5-cycle: deficits witnessed
        json j = json::parse(slurp(out));
        CHECK(j["status"] == "q-gt-2-witnessed");
        CHECK(run("bounds C] --out " + out) == 0);  // the 4-cycle is clean
        j = json::parse(slurp(out));
        CHECK(j["mb"] == 2);
    }

    TEST_CASE("search exit codes") {
        if (binary().empty()) return;
        CHECK(run("search C] --k 2 --restarts 25 --max-iters 300 --seed 5") == 0);
        CHECK(run("search Ch --k 2 --restarts 10 --max-iters 200 --seed 5") == 1);
    }

    TEST_CASE("atlas runs, resumes and stays byte-identical") {
        if (binary().empty()) return;
        TempDir tmp;
        std::string catalog = (tmp.path / "cat.g6").string();
        {
            std::ofstream out(catalog);
            out << "C]\n";    // 4-cycle
            out << "Cr\n";    // path
            out << "D~{\n";   // K_5
            out << "\n";      // blank lines are skipped silently
        }
        std::string dir = (tmp.path / "out").string();
        std::string flags = " --out-dir " + dir + " --restarts 25 --max-iters 250 --seed 3";
        CHECK(run("atlas " + catalog + flags) == 0);
        std::string first = slurp(dir + "/entries.jsonl");
        CHECK(std::count(first.begin(), first.end(), '\n') == 3);

        // rerun: nothing recomputed, bytes unchanged
        CHECK(run("atlas " + catalog + flags) == 0);
        CHECK(slurp(dir + "/entries.jsonl") == first);

        // the 4-cycle entry is exact with value 2
        std::istringstream lines(first);
        std::string line;
        bool saw_c4 = false;
        while (std::getline(lines, line)) {
            json j = json::parse(line);
            if (j["graph6"] == "C]") {
                saw_c4 = true;
                CHECK(j["mb"]["status"] == "exact");
                CHECK(j["mb"]["value"] == 2);
                CHECK(j["achievable"][0] == 2);
            }
        }
        CHECK(saw_c4);
    }

    TEST_CASE("atlas over the full 5-vertex catalog") {
        if (binary().empty()) return;
        TempDir tmp;
        std::string catalog = (tmp.path / "cat5.g6").string();
        {
            std::ofstream out(catalog);
            for (const mbk::Graph& g : mbk::connected_graph_catalog(5)) out << mbk::encode_graph6(g) << "\n";
        }
        std::string dir = (tmp.path / "out").string();
        CHECK(run("atlas " + catalog + " --out-dir " + dir + " --restarts 40 --max-iters 300 --seed 9") ==
              0);
        std::string entries = slurp(dir + "/entries.jsonl");
        CHECK(std::count(entries.begin(), entries.end(), '\n') == 21);
    }

    TEST_CASE("atlas decides the path complements at 3") {
        if (binary().empty()) return;
        TempDir tmp;
        std::string catalog = (tmp.path / "paths.g6").string();
        {
            std::ofstream out(catalog);
            out << mbk::encode_graph6(mbk::complement(mbk::path_graph(6))) << "\n";
            out << mbk::encode_graph6(mbk::complement(mbk::path_graph(7))) << "\n";
        }
        std::string dir = (tmp.path / "out").string();
        REQUIRE(run("atlas " + catalog + " --out-dir " + dir +
                    " --restarts 120 --max-iters 500 --seed 4") == 0);
        std::istringstream lines(slurp(dir + "/entries.jsonl"));
        std::string line;
        int seen = 0;
        while (std::getline(lines, line)) {
            json j = json::parse(line);
            ++seen;
            CHECK(j["mb"]["status"] == "exact");
            CHECK(j["mb"]["value"] == 3);
        }
        CHECK(seen == 2);
    }

    TEST_CASE("atlas reports malformed lines with a nonzero status") {
        if (binary().empty()) return;
        TempDir tmp;
        std::string catalog = (tmp.path / "cat.g6").string();
        {
            std::ofstream out(catalog);
            out << "C]\n";
            out << "not-a-graph6-line!!!\n";
        }
        std::string dir = (tmp.path / "out").string();
        CHECK(run("atlas " + catalog + " --out-dir " + dir + " --restarts 10 --max-iters 150") == 1);
        std::string entries = slurp(dir + "/entries.jsonl");
        CHECK(std::count(entries.begin(), entries.end(), '\n') == 1);
    }

    TEST_CASE("empty catalog yields zero entries and exit 0") {
        if (binary().empty()) return;
        TempDir tmp;
        std::string catalog = (tmp.path / "cat.g6").string();
        std::ofstream(catalog) << "";
        std::string dir = (tmp.path / "out").string();
        CHECK(run("atlas " + catalog + " --out-dir " + dir) == 0);
        CHECK(slurp(dir + "/entries.jsonl").empty());
    }

    TEST_CASE("constructions are reproducible for a fixed seed") {
        if (binary().empty()) return;
        TempDir tmp;
        std::string a = (tmp.path / "a.json").string(), b = (tmp.path / "b.json").string();
        std::string params = "'{\"a\":[3,3],\"b\":[3,3],\"w\":[1,1]}'";
        CHECK(run("construct two-edges-removed " + params + " --seed 11 --out " + a) == 0);
        CHECK(run("construct two-edges-removed " + params + " --seed 11 --out " + b) == 0);
        CHECK(slurp(a) == slurp(b));
    }
}
