#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + QGAP_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains_line(const std::string& text, const std::string& line) {
    return text.find(line + "\n") != std::string::npos ||
           (text.size() >= line.size() &&
            text.compare(text.size() - line.size(), line.size(), line) == 0);
}

}  // namespace

TEST_CASE("table command") {
    const RunResult r = run_cli("table --family partitions --j 1 --nmax 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("n,m,count\n", 0) == 0);
    CHECK(contains_line(r.out, "7,1,4"));
    CHECK(contains_line(r.out, "5,1,2"));
    CHECK(contains_line(r.out, "0,0,1"));

    const RunResult over = run_cli("table --family overpartitions --j 1 --nmax 4");
    CHECK(over.exit_code == 0);
    CHECK(contains_line(over.out, "4,1,6"));

    const RunResult zero = run_cli("table --nmax 0");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out == "n,m,count\n0,0,1\n");
}

TEST_CASE("table json format") {
    const RunResult r = run_cli("table --nmax 5 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    bool found = false;
    for (const auto& row : j) {
        if (row["n"] == 5 && row["m"] == 1) {
            CHECK(row["count"] == "2");
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("series command and formats") {
    const RunResult bfile = run_cli("series --name gapfree --family overpartitions --nmax 5 --format bfile");
    CHECK(bfile.exit_code == 0);
    CHECK(bfile.out == "0 1\n1 2\n2 2\n3 6\n4 6\n5 10\n");

    const RunResult csv = run_cli("series --name nu-d-lt-k --k 2 --nmax 4 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("n,a\n", 0) == 0);
    CHECK(contains_line(csv.out, "4,9"));

    const RunResult json_run = run_cli("series --name one-missing --nmax 7 --format json");
    CHECK(json_run.exit_code == 0);
    const auto j = nlohmann::json::parse(json_run.out);
    CHECK(j[7]["a"] == "4");

    // the three formats agree on values
    const RunResult as_bfile = run_cli("series --name one-missing --nmax 7 --format bfile");
    CHECK(contains_line(as_bfile.out, "7 4"));
}

TEST_CASE("series nu-d-lt-k rejects the overpartition family") {
    const RunResult r = run_cli("series --name nu-d-lt-k --family overpartitions --k 1 --nmax 5");
    CHECK(r.exit_code != 0);
}

TEST_CASE("verify and scan commands") {
    const RunResult mod3 = run_cli("verify mod3 --nmax 60");
    CHECK(mod3.exit_code == 0);
    const auto j = nlohmann::json::parse(mod3.out);
    CHECK(j["passed"] == true);
    CHECK(j["check_name"] == "congruence-mod3");
    CHECK(j["range"][1] == 60);

    CHECK(run_cli("verify mod4 --nmax 60").exit_code == 0);
    CHECK(run_cli("verify crosscheck-table --j 2 --nmax 12").exit_code == 0);
    CHECK(run_cli("verify crosscheck-table --family overpartitions --nmax 10").exit_code == 0);
    CHECK(run_cli("verify crosscheck-one-double --nmax 14").exit_code == 0);
    CHECK(run_cli("verify crosscheck-nu --kmax 3 --nmax 12").exit_code == 0);
    CHECK(run_cli("verify preliminaries --nmax 60").exit_code == 0);
    CHECK(run_cli("verify crosscheck-table --j 2 --nmax 12 --threads 2").exit_code == 0);

    const RunResult bias = run_cli("scan bias --family overpartitions --nmax 80");
    CHECK(bias.exit_code == 0);
    const auto jb = nlohmann::json::parse(bias.out);
    CHECK(jb["passed"] == true);
    for (const auto& w : jb["witnesses"]) CHECK(w["n"] <= 27);

    CHECK(run_cli("scan bound-vs-distinct --nmax 80").exit_code == 0);
}

TEST_CASE("bad usage exits nonzero") {
    CHECK(run_cli("series --name no-such-series --nmax 5").exit_code != 0);
    CHECK(run_cli("table").exit_code != 0);            // missing --nmax
    CHECK(run_cli("verify no-such-check").exit_code != 0);
    CHECK(run_cli("").exit_code != 0);                 // subcommand required
    CHECK(run_cli("series --name nu-d-lt-k --k 40 --nmax 10").exit_code != 0);  // k > nmax
}

TEST_CASE("oeis export") {
    const RunResult r = run_cli("oeis --id A268498 --nmax 20");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("0 1\n1 1\n2 0\n", 0) == 0);

    const RunResult a = run_cli("oeis --id A090858 --nmax 7");
    CHECK(contains_line(a.out, "7 4"));

    const RunResult over = run_cli("oeis --id A268499 --nmax 4");
    CHECK(over.out.rfind("0 1\n1 2\n", 0) == 0);
}

TEST_CASE("byte-identical reruns") {
    const std::string cmds[] = {
        "series --name parity-diff --nmax 120 --format bfile",
        "table --family overpartitions --nmax 10 --format json",
        "oeis --id A268499 --nmax 60",
    };
    for (const std::string& cmd : cmds) {
        const RunResult first = run_cli(cmd);
        const RunResult second = run_cli(cmd);
        CHECK(first.exit_code == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("atomic file output") {
    namespace fs = std::filesystem;
    const std::string path = "cli_output_check.csv";
    fs::remove(path);

    const RunResult direct = run_cli("table --nmax 6");
    const RunResult to_file = run_cli("table --nmax 6 --output " + path);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());

    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == direct.out);

    // no temp file remains
    for (const auto& entry : fs::directory_iterator(".")) {
        CHECK(entry.path().filename().string().find("cli_output_check.csv.tmp") == std::string::npos);
    }
    fs::remove(path);

    // unwritable target: nonzero exit, no partial file
    const RunResult bad = run_cli("table --nmax 6 --output /no/such/dir/out.csv");
    CHECK(bad.exit_code != 0);
}
