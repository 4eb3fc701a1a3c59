#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI binary with the given arguments, capturing stdout (and
// stderr when merge_stderr).
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd =
        std::string("'") + ASTOWER_CLI_PATH + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        out.push_back(line);
    return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t tab = line.find('\t', pos);
        if (tab == std::string::npos) {
            out.push_back(line.substr(pos));
            break;
        }
        out.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
    return out;
}

std::string temp_path(const std::string& name) {
    const char* t = std::getenv("TMPDIR");
    return std::string(t ? t : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("table for p = 2 through level 2") {
    const RunResult r = run_cli("table --p 2 --max-level 2");
    CHECK(r.exit_code == 0);
    const auto rows = lines_of(r.output);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "i\tN\tfactorization\tM\tO_c\tO_a\tM_eq_N\tcertainty");
    const std::vector<std::vector<std::string>> expected = {
        {"0", "3", "3^1", "3", "3", "3", "yes", "deterministic"},
        {"1", "5", "5^1", "5", "15", "5", "yes", "deterministic"},
        {"2", "17", "17^1", "17", "85", "85", "yes", "deterministic"},
    };
    for (std::size_t k = 0; k < expected.size(); ++k)
        CHECK(split_tabs(rows[k + 1]) == expected[k]);
}

TEST_CASE("empty table at max level -1") {
    const RunResult r = run_cli("table --p 2 --max-level -1");
    CHECK(r.exit_code == 0);
    const auto rows = lines_of(r.output);
    REQUIRE(rows.size() == 1);  // header only
}

TEST_CASE("p = 3 table includes the level-0 row with N = M = O = 13") {
    const RunResult r = run_cli("table --p 3 --max-level 1");
    CHECK(r.exit_code == 0);
    const auto rows = lines_of(r.output);
    REQUIRE(rows.size() == 3);
    const auto row0 = split_tabs(rows[1]);
    CHECK(row0[1] == "13");
    CHECK(row0[3] == "13");
    CHECK(row0[4] == "13");
    CHECK(row0[5] == "13");
}

TEST_CASE("non-prime and unsupported characteristics exit 2") {
    CHECK(run_cli("table --p 4 --max-level 1", true).exit_code == 2);
    CHECK(run_cli("table --p 9 --max-level 1", true).exit_code == 2);
    CHECK(run_cli("table --p 11 --max-level 1", true).exit_code == 2);
    const RunResult r = run_cli("verify --p 4", true);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("prime") != std::string::npos);
}

TEST_CASE("verify passes and names the order-equality exception") {
    const RunResult r = run_cli("verify --p 2 --max-level 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("PASS  order-equality-exception") != std::string::npos);
    CHECK(r.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify emits well-formed json with decimal-string numerics") {
    const RunResult r = run_cli("verify --p 2 --max-level 2 --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.output);
    REQUIRE(doc.contains("config"));
    REQUIRE(doc.contains("rows"));
    REQUIRE(doc.contains("checks"));
    CHECK(doc["config"]["p"] == 2);
    REQUIRE(doc["rows"].size() == 3);
    for (const auto& row : doc["rows"]) {
        CHECK(row["n"].is_string());
        CHECK(row["m"]["divides"].is_string());
        CHECK(row["order_c"]["value"].is_string());
    }
    CHECK(doc["rows"][2]["order_c"]["value"] == "85");
    for (const auto& check : doc["checks"]) {
        CHECK(check.contains("name"));
        CHECK(check.contains("paper_ref"));
        CHECK(check["status"] == "pass");
    }
}

TEST_CASE("repeated runs are byte-identical") {
    const std::string cmd = "table --p 2 --max-level 3 --format json --seed 7";
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const RunResult c = run_cli("verify --p 3 --max-level 1");
    const RunResult d = run_cli("verify --p 3 --max-level 1");
    CHECK(c.exit_code == 0);
    CHECK(c.output == d.output);
}

TEST_CASE("minimal polynomial output") {
    SECTION("c_1 at p = 2 agrees with the closed form") {
        const RunResult r = run_cli("minpoly c 1 --p 2");
        CHECK(r.exit_code == 0);
        const auto rows = lines_of(r.output);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0] == "X^4 + X + 1");
        CHECK(rows[1] == "closed form: X^4 + X + 1");
        CHECK(rows[2] == "EQUAL");
    }
    SECTION("c_0 at p = 3") {
        const RunResult r = run_cli("minpoly c 0 --p 3");
        CHECK(r.exit_code == 0);
        CHECK(lines_of(r.output)[0] == "X^3 + 2X + 2");
    }
    SECTION("c_1 at p = 3") {
        const RunResult r = run_cli("minpoly c 1 --p 3");
        CHECK(r.exit_code == 0);
        const auto rows = lines_of(r.output);
        CHECK(rows[0] == "X^9 + X^6 + X^4 + X^2 + 2X + 2");
        CHECK(rows[2] == "EQUAL");
    }
    SECTION("degree budget exceeded exits 3") {
        CHECK(run_cli("minpoly a 2 --p 7", true).exit_code == 3);
        CHECK(run_cli("minpoly c 7 --p 2", true).exit_code == 3);
    }
    SECTION("bad target exits 2") { CHECK(run_cli("minpoly z 1 --p 2", true).exit_code == 2); }
}

TEST_CASE("factor cache subcommands") {
    const std::string exported = temp_path("astower_test_export.factors");
    const std::string cache = temp_path("astower_test_cache.factors");
    std::remove(exported.c_str());
    std::remove(cache.c_str());

    SECTION("export writes the first composite Fermat factorization") {
        const RunResult r = run_cli("factors export --p 2 --max-level 5 --file '" + exported + "'");
        CHECK(r.exit_code == 0);
        std::ifstream in(exported);
        REQUIRE(in);
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str().find("4294967297 = 641^1 * 6700417^1") != std::string::npos);
    }
    SECTION("import of an empty file is a no-op") {
        std::ofstream(exported).close();
        std::ofstream(cache).close();
        const RunResult r = run_cli("factors import --file '" + exported + "' --cache '" + cache + "'");
        CHECK(r.exit_code == 0);
    }
    SECTION("import rejects a product mismatch, naming the line") {
        std::ofstream bad(exported);
        bad << "15 = 3^1 * 7^1\n";
        bad.close();
        const RunResult r = run_cli("factors import --file '" + exported + "' --cache '" + cache + "'",
                                    true);
        CHECK(r.exit_code == 2);
        CHECK(r.output.find(":1:") != std::string::npos);
    }
    SECTION("show round-trips an imported file") {
        std::ofstream src(exported);
        src << "# seed factors\n15 = 3^1 * 5^1\n";
        src.close();
        REQUIRE(run_cli("factors import --file '" + exported + "' --cache '" + cache + "'").exit_code ==
                0);
        const RunResult r = run_cli("factors show --cache '" + cache + "'");
        CHECK(r.exit_code == 0);
        CHECK(r.output == "15 = 3^1 * 5^1\n");
    }
    std::remove(exported.c_str());
    std::remove(cache.c_str());
}

TEST_CASE("factorization gaps degrade the table and exit 3") {
    const RunResult r = run_cli("table --p 2 --max-level 7 --budget-seconds 0");
    CHECK(r.exit_code == 3);
    const auto rows = lines_of(r.output);
    REQUIRE(rows.size() == 9);
    const auto level7 = split_tabs(rows[8]);
    CHECK(level7[2].find('?') != std::string::npos);  // factorization marked incomplete
    CHECK(level7[3] == "?");
    CHECK(level7[6] == "?");
    // levels below are still exact
    CHECK(split_tabs(rows[7])[3] == "18446744073709551617");
}

TEST_CASE("the shipped Fermat cache short-circuits factoring") {
    const std::string cache = std::string(ASTOWER_DATA_DIR) + "/fermat.factors";
    const RunResult r =
        run_cli("table --p 2 --max-level 6 --budget-seconds 0 --cache '" + cache + "'");
    CHECK(r.exit_code == 0);
    const auto rows = lines_of(r.output);
    REQUIRE(rows.size() == 8);
    const auto level6 = split_tabs(rows[7]);
    CHECK(level6[1] == "18446744073709551617");
    CHECK(level6[2] == "274177^1 * 67280421310721^1");
    CHECK(level6[3] == level6[1]);  // M_6 = N_6
    CHECK(level6[6] == "yes");
    CHECK(level6[7] == "deterministic");
}
