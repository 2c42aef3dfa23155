#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// End-to-end checks of the chi binary: output, JSON schema and exit codes.
// CHI_CLI_PATH is injected by the build.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct CmdResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("chi_cli_tests_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

CmdResult run_cli(const std::string& args) {
    const fs::path out_path = scratch_dir() / "stdout.txt";
    const fs::path err_path = scratch_dir() / "stderr.txt";
    const std::string cmd = std::string(CHI_CLI_PATH) + " " + args + " >" + out_path.string() +
                            " 2>" + err_path.string();
    const int status = std::system(cmd.c_str());
    CmdResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// chi of a derivation node recomputed from its children, bottom-up.
std::int64_t resum(const nlohmann::json& node) {
    const auto& children = node.at("children");
    if (children.empty())
        return node.at("chi").get<std::int64_t>();
    std::int64_t total = 0;
    for (const auto& child : children)
        total += child.at("sign").get<std::int64_t>() * resum(child.at("node"));
    return total;
}

} // namespace

TEST_CASE("eval prints chi and honors --explain") {
    CmdResult r = run_cli("eval 'p'");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "chi = 1"));

    r = run_cli("eval 'S^1(S^1)S^1'");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "chi = 0"));

    r = run_cli("eval 'p(S^1)rosette(4)'");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "chi = -2"));

    // the explained tree shows the worked arithmetic and the fiber levels
    r = run_cli("eval --explain 'p(S^0)p'");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "1 - 2 + 1 = 0"));
    CHECK(contains(r.out, "X0 at level 0"));
    CHECK(contains(r.out, "Y1 at level (0,1)"));
    CHECK(contains(r.out, "[alternating-sum]"));
}

TEST_CASE("eval --json emits the report schema and it re-sums") {
    const CmdResult r = run_cli("eval --json 'M_3'");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json report = nlohmann::json::parse(r.out);
    CHECK(report.at("expr") == "M_3");
    CHECK(report.at("chi") == -4);
    const auto& derivation = report.at("derivation");
    CHECK(derivation.at("rule") == "catalog-expansion");
    CHECK(resum(derivation) == -4);

    // levels mark the alternating-sum children
    const auto& alternating = derivation.at("children")[0].at("node");
    CHECK(alternating.at("rule") == "alternating-sum");
    const auto& first = alternating.at("children")[0];
    CHECK(first.at("level").at("type") == "transitional");
    CHECK(first.at("level").at("at") == 0);
    const auto& second = alternating.at("children")[1];
    CHECK(second.at("level").at("type") == "running");
    CHECK(second.at("level").at("interval") == nlohmann::json({0, 1}));
}

TEST_CASE("eval exit codes distinguish parse, resolution and overflow errors") {
    CmdResult r = run_cli("eval 'p(Q^1)p'");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.err, "unknown space name 'Q'"));
    CHECK(contains(r.err, "^")); // caret marker under the span

    r = run_cli("eval 'p(2p)(3p)p'");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.err, "adjacent running fiber groups"));

    r = run_cli("eval 'N_0'");
    CHECK(r.exit_code == 3);
    CHECK(contains(r.err, "out of domain"));

    r = run_cli("eval 'T^4'");
    CHECK(r.exit_code == 3);

    r = run_cli("eval '5000000000000000000p+5000000000000000000p'");
    CHECK(r.exit_code == 8);
    CHECK(contains(r.err, "overflow"));
}

TEST_CASE("verify sweeps a catalog entry") {
    CmdResult r = run_cli("verify S --max 6");
    CHECK(r.exit_code == 0);
    for (const std::string needle :
         {"S(0)  chi = 2", "S(1)  chi = 0", "S(2)  chi = 2", "S(3)  chi = 0", "S(4)  chi = 2",
          "S(5)  chi = 0", "S(6)  chi = 2"})
        CHECK_MESSAGE(contains(r.out, needle), needle << " missing in:\n" << r.out);
    CHECK(contains(r.out, "all rows PASS"));
    CHECK(!contains(r.out, "FAIL"));

    r = run_cli("verify RP --max 5");
    CHECK(r.exit_code == 0);
    for (const std::string needle : {"RP(0)  chi = 1", "RP(1)  chi = 0", "RP(2)  chi = 1",
                                     "RP(3)  chi = 0", "RP(4)  chi = 1", "RP(5)  chi = 0"})
        CHECK_MESSAGE(contains(r.out, needle), needle << " missing in:\n" << r.out);

    r = run_cli("verify M --max 4");
    CHECK(r.exit_code == 0);
    for (const std::string needle : {"chi = 2", "chi = 0", "chi = -2", "chi = -4", "chi = -6"})
        CHECK_MESSAGE(contains(r.out, needle), needle << " missing in:\n" << r.out);
    CHECK(contains(r.out, "rosette")); // the alternative decomposition column

    r = run_cli("verify N --max 3");
    CHECK(r.exit_code == 0);
    CHECK(!contains(r.out, "N(0)")); // out-of-domain values are skipped

    r = run_cli("verify cw --max 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "oracle/cells"));

    r = run_cli("verify nope");
    CHECK(r.exit_code == 3);

    r = run_cli("verify N --max 0"); // empty sweep
    CHECK(r.exit_code == 3);
}

TEST_CASE("complex subcommand computes chi and homology from files") {
    const fs::path sphere = write_file(
        "s2.json", R"({"maximal_simplices": [[0,1,2],[0,1,3],[0,2,3],[1,2,3]]})");
    CmdResult r = run_cli("complex chi " + sphere.string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "chi(faces) = 2"));
    CHECK(contains(r.out, "chi(betti) = 2"));
    CHECK(contains(r.out, "routes agree"));

    r = run_cli("complex betti " + sphere.string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "betti: (1, 0, 1)"));

    const fs::path circle =
        write_file("circle.json", R"({"maximal_simplices": [[0,1],[1,2],[0,2]]})");
    r = run_cli("complex chi " + circle.string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "chi(faces) = 0"));

    const fs::path cells = write_file("t3.json", R"({"cell_counts": [1,3,3,1]})");
    r = run_cli("complex chi " + cells.string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "chi(cells) = 0"));
}

TEST_CASE("complex subcommand exit codes: io, schema, invalid complex") {
    CmdResult r = run_cli("complex chi " + (scratch_dir() / "missing.json").string());
    CHECK(r.exit_code == 5);

    const fs::path bad_json = write_file("bad.json", "{ not json");
    r = run_cli("complex chi " + bad_json.string());
    CHECK(r.exit_code == 6);

    const fs::path bad_schema = write_file("bad_schema.json", R"({"something": []})");
    r = run_cli("complex chi " + bad_schema.string());
    CHECK(r.exit_code == 6);

    const fs::path bad_types =
        write_file("bad_types.json", R"({"maximal_simplices": [[0, "x"]]})");
    r = run_cli("complex chi " + bad_types.string());
    CHECK(r.exit_code == 6);

    const fs::path dup = write_file("dup.json", R"({"maximal_simplices": [[0,0,1]]})");
    r = run_cli("complex chi " + dup.string());
    CHECK(r.exit_code == 7);
    CHECK(contains(r.err, "duplicate vertex"));

    const fs::path empty_cw = write_file("empty_cw.json", R"({"cell_counts": []})");
    r = run_cli("complex chi " + empty_cw.string());
    CHECK(r.exit_code == 7);
}

TEST_CASE("catalog listing is informative and deterministic") {
    const CmdResult first = run_cli("catalog");
    CHECK(first.exit_code == 0);
    CHECK(contains(first.out, "S^n = p(S^(n-1))p"));
    CHECK(contains(first.out, "N_h"));
    CHECK(contains(first.out, "2-h"));
    CHECK(contains(first.out, "rosette"));
    CHECK(contains(first.out, "cw(a0,...,an)"));
    CHECK(contains(first.out, "domain:"));
    CHECK(contains(first.out, "realization:"));

    const CmdResult second = run_cli("catalog");
    CHECK(first.out == second.out);
}
