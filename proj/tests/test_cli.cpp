#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "ramseyforge/bridges.hpp"
#include "ramseyforge/dimacs.hpp"
#include "ramseyforge/shift.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(RAMSEYFORGE_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

Json parse_report(const std::string& text) { return Json::parse(text); }

std::string strip_elapsed(Json report) {
    report.erase("elapsed_ms");
    return report.dump();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("verify-key reports the key lemma with the fixed schema") {
    const RunResult r = run_cli("bridges verify-key");
    CHECK(r.exit_code == 0);
    const Json report = parse_report(r.out);
    CHECK(report["tool_version"] == "0.1.0");
    CHECK(report["command"] == "bridges verify-key");
    CHECK(report["status"] == "pass");
    CHECK(report["witness"].is_null());
    CHECK(report["counts"]["bridges"] == 1296);
    // fixed field order
    const auto keys_in_order = {"tool_version", "command", "parameters", "status",
                                "witness", "counts", "elapsed_ms"};
    std::size_t at = 0;
    for (const char* key : keys_in_order) {
        const auto pos = r.out.find(std::string("\"") + key + "\"");
        CHECK(pos != std::string::npos);
        CHECK(pos >= at);
        at = pos;
    }
}

TEST_CASE("verify-key flags a failing dimension as a finding, not an error") {
    const RunResult r = run_cli("bridges verify-key --n 2 --c 3");
    CHECK(r.exit_code == 0);
    const Json report = parse_report(r.out);
    CHECK(report["status"] == "fail");
    CHECK_FALSE(report["witness"].is_null());
    CHECK(report["counts"]["bridges"] == 36);
}

TEST_CASE("colorable emits findings, DIMACS artifacts and certificates") {
    const std::string dimacs_path = "cli_b23.cnf";
    const RunResult unsat = run_cli("bridges colorable --n 2 --c 3 --export-dimacs " +
                                    dimacs_path + " --check-exhaustive");
    CHECK(unsat.exit_code == 0);
    const Json unsat_report = parse_report(unsat.out);
    CHECK(unsat_report["status"] == "unsat");
    CHECK(unsat_report["counts"]["variables"] == 9);
    CHECK(unsat_report["counts"]["clauses"] == 72);
    CHECK(unsat_report["counts"]["exhaustive_agrees"] == true);
    CHECK(slurp(dimacs_path) == ramseyforge::write_dimacs(ramseyforge::encode_bridge_cnf(2, 3)));

    const std::string cert_path = "cli_b43_cert.txt";
    const RunResult sat = run_cli("bridges colorable --n 4 --c 3 --out " + cert_path);
    CHECK(sat.exit_code == 0);
    CHECK(parse_report(sat.out)["status"] == "sat");
    int n = 0, c = 0;
    const auto coloring = ramseyforge::read_bridge_coloring(slurp(cert_path), n, c);
    CHECK(n == 4);
    CHECK(c == 3);
    CHECK_FALSE(ramseyforge::has_mono_bridge(coloring, 4, 3).has_value());

    // over the size cap: usage error
    CHECK(run_cli("bridges colorable --n 7 --c 3").exit_code == 1);
}

TEST_CASE("reports are byte-stable apart from elapsed_ms") {
    const RunResult first = run_cli("bridges colorable --n 3 --c 3");
    const RunResult second = run_cli("bridges colorable --n 3 --c 3");
    CHECK(strip_elapsed(parse_report(first.out)) == strip_elapsed(parse_report(second.out)));
}

TEST_CASE("bounds prints tower values and rejects short towers") {
    const Json diag = parse_report(run_cli("bounds --k 16 --kind diag").out);
    CHECK(diag["status"] == "pass");
    CHECK(diag["counts"]["value"] == "8");

    const Json tower = parse_report(run_cli("bounds --tw 6 --x 2").out);
    CHECK(tower["counts"]["value"] == "2^2^65536");
    CHECK(tower["counts"]["exact"] == false);

    CHECK(run_cli("bounds --k 3 --kind s").exit_code == 1);
    CHECK(run_cli("bounds --k 15 --kind diag").exit_code == 1);
}

TEST_CASE("shift subcommands expose chromatic probes and colorings") {
    const Json chromatic = parse_report(run_cli("shift chromatic --N 9 --k 2 --c-max 4").out);
    CHECK(chromatic["status"] == "sat");
    CHECK(chromatic["counts"]["chi"] == 4);

    const std::string coloring_path = "cli_shift82.txt";
    const Json color3 = parse_report(run_cli("shift color3 --N 8 --k 2 --out " + coloring_path).out);
    CHECK(color3["status"] == "sat");
    const auto phi = ramseyforge::read_shift_coloring(slurp(coloring_path));
    CHECK(ramseyforge::is_proper_shift_coloring(phi));

    const Json none = parse_report(run_cli("shift color3 --N 9 --k 2").out);
    CHECK(none["status"] == "unsat");

    const Json s_exact = parse_report(run_cli("shift s-exact --k 2 --n-max 12").out);
    CHECK(s_exact["status"] == "pass");
    CHECK(s_exact["counts"]["value"] == 8);
}

TEST_CASE("the ramsey pipeline round-trips through build and verify") {
    const std::string coloring_path = "cli_ramsey_13_12.txt";
    const Json build = parse_report(
        run_cli("ramsey build --N 13 --k 12 --parts 4 --phi sat --psi key --out " + coloring_path).out);
    CHECK(build["status"] == "pass");
    CHECK(build["counts"]["sets"] == 13);

    const Json verify = parse_report(run_cli("ramsey verify --in " + coloring_path).out);
    CHECK(verify["status"] == "pass");
    CHECK(verify["counts"]["supersets"] == 1);
}

TEST_CASE("paths verify runs the appendix instances") {
    const Json p33 = parse_report(run_cli("paths verify --variant p33 --N 8 --k 3 --phi bit").out);
    CHECK(p33["status"] == "pass");
    CHECK(p33["counts"]["red_scanned"] == 56);

    const Json p23 = parse_report(run_cli("paths verify --variant p23 --N 8 --k 6 --phi bit").out);
    CHECK(p23["status"] == "pass");

    const Json k12k1 =
        parse_report(run_cli("paths verify --variant k1_2k1 --N 8 --k 2 --phi bit").out);
    CHECK(k12k1["status"] == "pass");

    // workers do not change the outcome, whether set by flag or environment
    const Json sharded =
        parse_report(run_cli("paths verify --variant p33 --N 8 --k 3 --phi bit --workers 4").out);
    CHECK(sharded["status"] == "pass");
    const RunResult env_run = run_cli("paths verify --variant p33 --N 8 --k 3 --phi bit");
    CHECK(parse_report(env_run.out)["status"] == "pass");
    CHECK(run_cli("paths verify --variant nope --N 8 --k 3").exit_code == 1);
}

TEST_CASE("RAMSEYFORGE_WORKERS seeds the default worker count") {
    const std::string cmd = std::string("RAMSEYFORGE_WORKERS=4 ") + RAMSEYFORGE_CLI +
                            " bridges verify-key 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    pclose(pipe);
    const Json report = parse_report(out);
    CHECK(report["status"] == "pass");
    CHECK(report["parameters"]["workers"] == 4);
}

TEST_CASE("bridges minimal reports the least colorable dimension") {
    const Json minimal = parse_report(run_cli("bridges minimal --c 3 --n-max 5").out);
    CHECK(minimal["status"] == "sat");
    CHECK(minimal["counts"]["least_n"] == 4);
}

TEST_CASE("oracle subcommands report findings with witnesses") {
    const Json holds = parse_report(run_cli("oracle ramsey2 --l 3 --m 3 --N 6").out);
    CHECK(holds["status"] == "pass");
    CHECK(holds["counts"]["search_space"] == 32768);

    const std::string witness_path = "cli_r33_witness.txt";
    const Json fails =
        parse_report(run_cli("oracle ramsey2 --l 3 --m 3 --N 5 --out " + witness_path).out);
    CHECK(fails["status"] == "fail");
    CHECK_FALSE(fails["witness"].is_null());
    CHECK(slurp(witness_path).substr(0, 16) == "ramseycoloring 5");

    const Json p222 = parse_report(run_cli("oracle p222 --l 1 --n-max 10").out);
    CHECK(p222["status"] == "pass");

    const Json audit = parse_report(run_cli("oracle audit --m 2 --n 2").out);
    CHECK(audit["status"] == "pass");
    CHECK(audit["counts"]["note"] == "P = 5, R = 6");

    CHECK(run_cli("oracle ramsey2 --l 3 --m 3 --N 9").exit_code == 1);
}
