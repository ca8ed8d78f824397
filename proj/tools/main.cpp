#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ramseyforge/bridges.hpp"
#include "ramseyforge/dimacs.hpp"
#include "ramseyforge/kset.hpp"
#include "ramseyforge/oracle.hpp"
#include "ramseyforge/paths.hpp"
#include "ramseyforge/ramsey.hpp"
#include "ramseyforge/shift.hpp"
#include "ramseyforge/solver.hpp"
#include "ramseyforge/tower.hpp"
#include "ramseyforge/version.hpp"
#include "report.hpp"

namespace {

using namespace ramseyforge;
using rfcli::Json;
using rfcli::RunReport;

int resolve_workers(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("RAMSEYFORGE_WORKERS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << bytes;
}

Json json_kset(const KSet& x) { return Json(x.elements()); }
Json json_vector(const ColorVector& v) { return Json(v.coords); }

Json json_bridge(const Bridge& bridge) {
    Json members = Json::array();
    for (const auto& m : bridge.members) members.push_back(json_vector(m));
    return Json{{"a", json_vector(bridge.a)}, {"b", json_vector(bridge.b)}, {"members", members}};
}

// The default coloring family behind `bridges verify-key`: color 1 when
// the full coordinate sum or the odd-position sum vanishes mod c. At
// (n,c) = (4,3) this is exactly the explicit bridge-killing coloring.
std::vector<int> chi_key_like_table(int n, int c) {
    std::uint64_t points = 1;
    for (int i = 0; i < n; ++i) points *= static_cast<std::uint64_t>(c);
    std::vector<int> table(points);
    for (std::uint64_t i = 0; i < points; ++i) {
        const ColorVector v = color_vector_at(i, n, c);
        int full = 0, odd = 0;
        for (int j = 0; j < n; ++j) {
            full += v.coords[static_cast<std::size_t>(j)];
            if (j % 2 == 0) odd += v.coords[static_cast<std::size_t>(j)];
        }
        table[i] = (full % c == 0 || odd % c == 0) ? 1 : 2;
    }
    return table;
}

// phi sources: "bit" (the pair construction), "sat" (solver search with 3
// colors), or a shiftcoloring file path.
ProperColoring load_phi(const std::string& spec, int N, int k, bool& sat_failed) {
    sat_failed = false;
    if (spec == "bit") {
        if (k != 2) throw std::invalid_argument("--phi bit colors pairs only (needs arity 2)");
        return bit_color_pairs(N);
    }
    if (spec == "sat") {
        if (k == 1) return complete_color_singletons(N);
        auto found = find_coloring_sat(N, k, 3);
        if (!found) {
            sat_failed = true;
            return ProperColoring{};
        }
        return *found;
    }
    ProperColoring phi = read_shift_coloring(read_file(spec));
    if (phi.n != N || phi.k != k) {
        throw std::invalid_argument("coloring file does not match the requested N and k");
    }
    if (!is_proper_shift_coloring(phi)) {
        throw std::invalid_argument("coloring file is not a proper shift coloring");
    }
    return phi;
}

int cmd_bridges_verify_key(int n, int c, const std::string& coloring_path, int workers) {
    RunReport report("bridges verify-key",
                     Json{{"n", n},
                          {"c", c},
                          {"coloring", coloring_path.empty() ? Json() : Json(coloring_path)},
                          {"workers", workers}});
    std::vector<int> table;
    if (coloring_path.empty()) {
        table = (n == 4 && c == 3) ? chi_key_table() : chi_key_like_table(n, c);
    } else {
        int file_n = 0, file_c = 0;
        table = read_bridge_coloring(read_file(coloring_path), file_n, file_c);
        if (file_n != n || file_c != c) {
            throw std::invalid_argument("coloring file does not match --n/--c");
        }
    }
    const auto witness = has_mono_bridge(table, n, c, workers);
    report.count("bridges", bridge_count(n, c));
    if (witness) {
        report.set_status("fail");
        report.set_witness(json_bridge(*witness));
    } else {
        report.set_status("pass");
    }
    report.emit(std::cout);
    return 0;
}

int cmd_bridges_colorable(int n, int c, const std::string& dimacs_path,
                          bool check_exhaustive, const std::string& out_path) {
    RunReport report("bridges colorable",
                     Json{{"n", n},
                          {"c", c},
                          {"export_dimacs", dimacs_path.empty() ? Json() : Json(dimacs_path)},
                          {"check_exhaustive", check_exhaustive},
                          {"out", out_path.empty() ? Json() : Json(out_path)}});
    const Cnf cnf = encode_bridge_cnf(n, c);
    report.count("variables", cnf.variable_count);
    report.count("clauses", cnf.clauses.size());
    report.count("bridges", bridge_count(n, c));
    if (!dimacs_path.empty()) write_file(dimacs_path, write_dimacs(cnf));

    const BridgeColorability outcome = bridge_2colorable(n, c);
    if (check_exhaustive) {
        if (cnf.variable_count > 25) {
            throw std::invalid_argument("--check-exhaustive refused above 25 variables");
        }
        const SolveResult brute = exhaustive_check(cnf);
        if (brute.is_sat() != outcome.colorable) {
            throw std::logic_error("solver disagrees with the exhaustive oracle");
        }
        report.count("exhaustive_agrees", true);
    }
    if (outcome.colorable) {
        report.set_status("sat");
        if (!out_path.empty()) {
            write_file(out_path, write_bridge_coloring(outcome.coloring, n, c));
        }
    } else {
        report.set_status("unsat");
    }
    report.emit(std::cout);
    return 0;
}

int cmd_bridges_minimal(int c, int n_max) {
    RunReport report("bridges minimal", Json{{"c", c}, {"n_max", n_max}});
    const MinimalBridgeableResult result = minimal_bridgeable(c, n_max);
    report.count("scanned_to", result.scanned_to);
    if (result.n) {
        report.set_status("sat");
        report.count("least_n", *result.n);
    } else {
        report.set_status(result.scanned_to >= n_max ? "unsat" : "partial");
    }
    report.emit(std::cout);
    return 0;
}

int cmd_shift_chromatic(int N, int k, int c_max) {
    RunReport report("shift chromatic", Json{{"N", N}, {"k", k}, {"c_max", c_max}});
    report.count("vertices", n_choose_k(N, k));
    const auto chi = chromatic_shift(N, k, c_max);
    if (chi) {
        report.set_status("sat");
        report.count("chi", *chi);
    } else {
        report.set_status("unsat");
    }
    report.emit(std::cout);
    return 0;
}

int cmd_shift_color3(int N, int k, const std::string& out_path) {
    RunReport report("shift color3",
                     Json{{"N", N}, {"k", k}, {"out", out_path.empty() ? Json() : Json(out_path)}});
    report.count("vertices", n_choose_k(N, k));
    std::optional<ProperColoring> phi;
    if (k == 1) {
        if (N <= 3) phi = complete_color_singletons(N);
    } else if (k == 2 && N <= 8) {
        phi = bit_color_pairs(N);
    } else {
        phi = find_coloring_sat(N, k, 3);
    }
    if (phi) {
        report.set_status("sat");
        report.count("colors", phi->c);
        if (!out_path.empty()) write_file(out_path, write_shift_coloring(*phi));
    } else {
        report.set_status("unsat");
    }
    report.emit(std::cout);
    return 0;
}

int cmd_shift_s_exact(int k, int n_max) {
    RunReport report("shift s-exact", Json{{"k", k}, {"n_max", n_max}});
    const SExactResult result = s_exact_upto(k, n_max);
    report.count("value", result.value);
    report.count("probed_to", result.probed_to);
    report.set_status(result.exact ? "pass" : "partial");
    report.emit(std::cout);
    return 0;
}

int cmd_ramsey_build(int N, int k, int parts, const std::string& phi_spec,
                     const std::string& psi_spec, const std::string& out_path, int q,
                     int workers) {
    RunReport report("ramsey build", Json{{"N", N},
                                          {"k", k},
                                          {"parts", parts},
                                          {"phi", phi_spec},
                                          {"psi", psi_spec},
                                          {"out", out_path.empty() ? Json() : Json(out_path)},
                                          {"q", q},
                                          {"workers", workers}});
    if (parts < 2 || k % parts != 0) {
        throw std::invalid_argument("--parts must divide --k");
    }
    bool sat_failed = false;
    const ProperColoring phi = load_phi(phi_spec, N, k / parts, sat_failed);
    if (sat_failed) {
        report.set_status("unsat");
        report.count("phi_exists", false);
        report.emit(std::cout);
        return 0;
    }

    std::vector<int> psi;
    if (psi_spec == "key") {
        if (parts != 4 || phi.c != 3) {
            throw std::invalid_argument("--psi key needs parts = 4 and a 3-colored phi");
        }
        psi = chi_key_table();
    } else if (psi_spec == "bridge") {
        const BridgeColorability outcome = bridge_2colorable(parts, phi.c);
        if (!outcome.colorable) {
            report.set_status("unsat");
            report.count("psi_exists", false);
            report.emit(std::cout);
            return 0;
        }
        psi = outcome.coloring;
    } else {
        int file_n = 0, file_c = 0;
        psi = read_bridge_coloring(read_file(psi_spec), file_n, file_c);
        if (file_n != parts || file_c != phi.c) {
            throw std::invalid_argument("--psi file does not match parts and the phi alphabet");
        }
    }

    const RamseyColoring rc = build_coloring(N, k, phi, psi, parts);
    report.count("sets", rc.colors.size());
    if (!out_path.empty()) write_file(out_path, write_ramsey_coloring(N, k, rc.colors));

    const int clique = q > 0 ? q : k + 1;
    const CliqueScanOutcome cliques = verify_no_mono_clique(rc, clique, workers);
    report.count("supersets", cliques.scanned);
    if (cliques.witness) {
        report.set_status("fail");
        report.set_witness(Json{{"superset", json_kset(*cliques.witness)}});
        report.emit(std::cout);
        return 0;
    }
    if (parts == 4) {
        const SpecialFiveOutcome five = verify_special_five(rc, workers);
        report.count("special_five_supersets", five.scanned);
        if (five.witness) {
            report.set_status("fail");
            report.set_witness(Json{{"superset", json_kset(five.witness->superset)},
                                    {"colors", five.witness->colors}});
            report.emit(std::cout);
            return 0;
        }
    }
    report.set_status(cliques.vacuous ? "vacuous" : "pass");
    report.emit(std::cout);
    return 0;
}

int cmd_ramsey_verify(const std::string& in_path, int q, int workers) {
    RunReport report("ramsey verify", Json{{"in", in_path}, {"q", q}, {"workers", workers}});
    int N = 0, k = 0;
    const auto colors = read_ramsey_coloring(read_file(in_path), N, k);
    report.count("N", N);
    report.count("k", k);
    const int clique = q > 0 ? q : k + 1;
    const CliqueScanOutcome scan = mono_clique_witness(N, k, colors, clique, workers);
    report.count("supersets", scan.scanned);
    if (scan.witness) {
        report.set_status("fail");
        report.set_witness(Json{{"superset", json_kset(*scan.witness)}});
    } else {
        report.set_status(scan.vacuous ? "vacuous" : "pass");
    }
    report.emit(std::cout);
    return 0;
}

int cmd_paths_verify(const std::string& variant, int N, int k, const std::string& phi_spec,
                     int workers) {
    RunReport report("paths verify", Json{{"variant", variant},
                                          {"N", N},
                                          {"k", k},
                                          {"phi", phi_spec},
                                          {"workers", workers}});
    int phi_arity = 0;
    if (variant == "p23") phi_arity = k - 4;
    else if (variant == "p33") phi_arity = k - 1;
    else if (variant == "k1_2k1") phi_arity = k;
    else throw std::invalid_argument("unknown --variant (use p23, p33 or k1_2k1)");
    if (phi_arity < 1) throw std::invalid_argument("k is too small for this variant");

    bool sat_failed = false;
    const ProperColoring phi = load_phi(phi_spec, N, phi_arity, sat_failed);
    if (sat_failed) {
        report.set_status("unsat");
        report.count("phi_exists", false);
        report.emit(std::cout);
        return 0;
    }

    PathVerifyReport result;
    if (variant == "p23") result = verify_p23(N, k, phi, workers);
    else if (variant == "p33") result = verify_p33(N, k, phi, workers);
    else result = verify_k1_2k1(N, k, phi, workers);

    report.count("red_scanned", result.red_scanned);
    report.count("blue_scanned", result.blue_scanned);
    report.count("red_vacuous", result.red_vacuous);
    report.count("blue_vacuous", result.blue_vacuous);
    if (result.witness) {
        report.set_status("fail");
        report.set_witness(Json{{"phase", result.witness->phase},
                                {"superset", json_kset(result.witness->superset)}});
    } else if (result.red_vacuous && result.blue_vacuous) {
        report.set_status("vacuous");
    } else {
        report.set_status("pass");
    }
    report.emit(std::cout);
    return 0;
}

int cmd_bounds(int k, const std::string& kind, int tw_height, std::uint64_t tw_base) {
    RunReport report("bounds", Json{{"k", k},
                                    {"kind", kind},
                                    {"tw", tw_height > 0 ? Json(tw_height) : Json()},
                                    {"x", tw_height > 0 ? Json(tw_base) : Json()}});
    TowerValue value;
    if (tw_height > 0) {
        value = tw(tw_height, tw_base);
    } else if (kind == "diag") {
        value = bound_table(k, BoundKind::diag);
    } else if (kind == "k1k2") {
        value = bound_table(k, BoundKind::k1k2);
    } else if (kind == "k2k2") {
        value = bound_table(k, BoundKind::k2k2);
    } else if (kind == "k1_2k1") {
        value = bound_table(k, BoundKind::k1_2k1);
    } else if (kind == "s") {
        value = s_lower(k);
    } else if (kind == "s4") {
        value = s4_lower(k);
    } else {
        throw std::invalid_argument("unknown --kind");
    }
    report.set_status("pass");
    report.count("value", value.str());
    report.count("exact", value.is_exact());
    report.emit(std::cout);
    return 0;
}

const char* oracle_status(OracleReport::Status status) {
    switch (status) {
        case OracleReport::Status::holds: return "pass";
        case OracleReport::Status::fails: return "fail";
        case OracleReport::Status::partial: return "partial";
    }
    return "partial";
}

int emit_oracle(const OracleReport& result, const std::string& command,
                const std::string& witness_out, int witness_k) {
    Json parameters = Json::object();
    for (const auto& [key, value] : result.parameters) parameters[key] = value;
    RunReport report(command, parameters);
    report.set_status(oracle_status(result.status));
    report.count("search_space", result.search_space);
    if (!result.note.empty()) report.count("note", result.note);
    if (result.status == OracleReport::Status::fails && !result.witness_colors) {
        report.set_witness(Json{{"note", result.note}});
    }
    if (result.witness_colors) {
        report.set_witness(Json{{"colors", *result.witness_colors}});
        if (!witness_out.empty()) {
            // replayable witness in the shared two-coloring format
            int N = 2;
            while (n_choose_k(N, witness_k) < result.witness_colors->size()) ++N;
            write_file(witness_out, write_ramsey_coloring(N, witness_k, *result.witness_colors));
        }
    }
    report.emit(std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ramseyforge: exhaustive verification of shift-graph and bridge-hypergraph colorings"};
    app.require_subcommand(1);
    app.fallthrough();
    int workers_flag = 0;
    app.add_option("--workers", workers_flag, "worker threads for verifier scans");

    // bridges
    auto* bridges = app.add_subcommand("bridges", "bridge hypergraphs over Z_c^n");
    bridges->require_subcommand(1);
    bridges->fallthrough();
    auto* verify_key = bridges->add_subcommand("verify-key", "scan a 2-coloring for monochromatic bridges");
    int vk_n = 4, vk_c = 3;
    std::string vk_coloring;
    verify_key->add_option("--n", vk_n, "bridge dimension");
    verify_key->add_option("--c", vk_c, "alphabet size");
    verify_key->add_option("--coloring", vk_coloring, "bridgecoloring file overriding the built-in coloring");

    auto* colorable = bridges->add_subcommand("colorable", "decide 2-colorability via the embedded solver");
    int co_n = 0, co_c = 0;
    std::string co_dimacs, co_out;
    bool co_exhaustive = false;
    colorable->add_option("--n", co_n, "bridge dimension")->required();
    colorable->add_option("--c", co_c, "alphabet size")->required();
    colorable->add_option("--export-dimacs", co_dimacs, "write the CNF in DIMACS format");
    colorable->add_option("--out", co_out, "write a sat certificate as a bridgecoloring file");
    colorable->add_flag("--check-exhaustive", co_exhaustive, "cross-check with the brute-force oracle");

    auto* minimal = bridges->add_subcommand("minimal", "least n with a 2-colorable bridge hypergraph");
    int mi_c = 0, mi_nmax = 0;
    minimal->add_option("--c", mi_c, "alphabet size")->required();
    minimal->add_option("--n-max", mi_nmax, "largest dimension to scan")->required();

    // shift
    auto* shift = app.add_subcommand("shift", "shift graph colorings");
    shift->require_subcommand(1);
    shift->fallthrough();
    auto* chromatic = shift->add_subcommand("chromatic", "least number of colors up to a cap");
    int ch_N = 0, ch_k = 0, ch_cmax = 4;
    chromatic->add_option("--N", ch_N, "ground set size")->required();
    chromatic->add_option("--k", ch_k, "subset arity")->required();
    chromatic->add_option("--c-max", ch_cmax, "color cap");

    auto* color3 = shift->add_subcommand("color3", "find a proper 3-coloring");
    int c3_N = 0, c3_k = 0;
    std::string c3_out;
    color3->add_option("--N", c3_N, "ground set size")->required();
    color3->add_option("--k", c3_k, "subset arity")->required();
    color3->add_option("--out", c3_out, "write the coloring file");

    auto* s_exact = shift->add_subcommand("s-exact", "largest N that three colors still cover");
    int se_k = 0, se_nmax = 0;
    s_exact->add_option("--k", se_k, "subset arity")->required();
    s_exact->add_option("--n-max", se_nmax, "largest N to probe")->required();

    // ramsey
    auto* ramsey = app.add_subcommand("ramsey", "the composite two-coloring pipeline");
    ramsey->require_subcommand(1);
    ramsey->fallthrough();
    auto* build = ramsey->add_subcommand("build", "build psi after lambda and verify it");
    int rb_N = 0, rb_k = 0, rb_parts = 4, rb_q = 0;
    std::string rb_phi = "sat", rb_psi = "key", rb_out;
    build->add_option("--N", rb_N, "ground set size")->required();
    build->add_option("--k", rb_k, "arity of the colored sets")->required();
    build->add_option("--parts", rb_parts, "number of segments");
    build->add_option("--phi", rb_phi, "segment coloring: bit, sat, or a shiftcoloring file");
    build->add_option("--psi", rb_psi, "cube coloring: key, bridge, or a bridgecoloring file");
    build->add_option("--out", rb_out, "write the ramseycoloring file");
    build->add_option("--q", rb_q, "clique size to scan (default k+1)");

    auto* verify = ramsey->add_subcommand("verify", "re-verify a ramseycoloring file");
    std::string rv_in;
    int rv_q = 0;
    verify->add_option("--in", rv_in, "ramseycoloring file")->required();
    verify->add_option("--q", rv_q, "clique size to scan (default k+1)");

    // paths
    auto* paths = app.add_subcommand("paths", "ordered-path colorings");
    paths->require_subcommand(1);
    paths->fallthrough();
    auto* paths_verify = paths->add_subcommand("verify", "verify a path-coloring construction");
    std::string pv_variant, pv_phi = "bit";
    int pv_N = 0, pv_k = 0;
    paths_verify->add_option("--variant", pv_variant, "p23, p33 or k1_2k1")->required();
    paths_verify->add_option("--N", pv_N, "ground set size")->required();
    paths_verify->add_option("--k", pv_k, "arity of the colored sets")->required();
    paths_verify->add_option("--phi", pv_phi, "bit, sat, or a shiftcoloring file");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "tower-function lower bounds");
    int bo_k = 0, bo_tw = 0;
    std::uint64_t bo_x = 2;
    std::string bo_kind = "diag";
    bounds->add_option("--k", bo_k, "uniformity parameter");
    bounds->add_option("--kind", bo_kind, "diag, k1k2, k2k2, k1_2k1, s, or s4");
    bounds->add_option("--tw", bo_tw, "evaluate tw directly at this height");
    bounds->add_option("--x", bo_x, "tower base for --tw");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "independent brute-force ground truth");
    oracle->require_subcommand(1);
    oracle->fallthrough();
    auto* ramsey2 = oracle->add_subcommand("ramsey2", "classical pair Ramsey sweep");
    int o1_l = 0, o1_m = 0, o1_N = 0;
    std::string o1_out;
    ramsey2->add_option("--l", o1_l, "red clique size")->required();
    ramsey2->add_option("--m", o1_m, "blue clique size")->required();
    ramsey2->add_option("--N", o1_N, "ground set size")->required();
    ramsey2->add_option("--out", o1_out, "write a failing witness coloring");

    auto* path_upper = oracle->add_subcommand("path-upper", "P_k(2,2) <= N via the chromatic threshold");
    int o2_k = 0, o2_N = 0;
    std::string o2_out;
    path_upper->add_option("--k", o2_k, "subset arity")->required();
    path_upper->add_option("--N", o2_N, "ground set size")->required();
    path_upper->add_option("--out", o2_out, "write a failing witness coloring");

    auto* p222 = oracle->add_subcommand("p222", "P_l(2,2,2) = s(l) + 1");
    int o3_l = 0, o3_nmax = 0;
    p222->add_option("--l", o3_l, "subset arity")->required();
    p222->add_option("--n-max", o3_nmax, "largest N to probe")->required();

    auto* audit = oracle->add_subcommand("audit", "P_k(m,n) <= R_k(k+m-1,k+n-1) at sweep scale");
    int o4_m = 0, o4_n = 0, o4_cap = 7;
    audit->add_option("--m", o4_m, "red path vertices")->required();
    audit->add_option("--n", o4_n, "blue path vertices")->required();
    audit->add_option("--n-cap", o4_cap, "sweep cap on N");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const int workers = resolve_workers(workers_flag);
    try {
        if (verify_key->parsed()) return cmd_bridges_verify_key(vk_n, vk_c, vk_coloring, workers);
        if (colorable->parsed()) return cmd_bridges_colorable(co_n, co_c, co_dimacs, co_exhaustive, co_out);
        if (minimal->parsed()) return cmd_bridges_minimal(mi_c, mi_nmax);
        if (chromatic->parsed()) return cmd_shift_chromatic(ch_N, ch_k, ch_cmax);
        if (color3->parsed()) return cmd_shift_color3(c3_N, c3_k, c3_out);
        if (s_exact->parsed()) return cmd_shift_s_exact(se_k, se_nmax);
        if (build->parsed())
            return cmd_ramsey_build(rb_N, rb_k, rb_parts, rb_phi, rb_psi, rb_out, rb_q, workers);
        if (verify->parsed()) return cmd_ramsey_verify(rv_in, rv_q, workers);
        if (paths_verify->parsed()) return cmd_paths_verify(pv_variant, pv_N, pv_k, pv_phi, workers);
        if (bounds->parsed()) return cmd_bounds(bo_k, bo_kind, bo_tw, bo_x);
        if (ramsey2->parsed())
            return emit_oracle(ramsey2_holds(o1_l, o1_m, o1_N), "oracle ramsey2", o1_out, 2);
        if (path_upper->parsed())
            return emit_oracle(path_ramsey2_upper(o2_k, o2_N), "oracle path-upper", o2_out, o2_k);
        if (p222->parsed()) return emit_oracle(p222_identity(o3_l, o3_nmax), "oracle p222", "", 0);
        if (audit->parsed())
            return emit_oracle(inequality_audit(2, o4_m, o4_n, o4_cap), "oracle audit", "", 0);
        std::cerr << "no subcommand selected\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
