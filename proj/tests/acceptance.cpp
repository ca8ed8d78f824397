// Acceptance suite: one check per shipped guarantee, each printed as a
// single pass/fail line. Exits nonzero if anything fails. Runtime budgets
// are asserted, not just observed.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ramseyforge/bridges.hpp"
#include "ramseyforge/dimacs.hpp"
#include "ramseyforge/kset.hpp"
#include "ramseyforge/oracle.hpp"
#include "ramseyforge/paths.hpp"
#include "ramseyforge/ramsey.hpp"
#include "ramseyforge/shift.hpp"
#include "ramseyforge/solver.hpp"
#include "ramseyforge/tower.hpp"

using namespace ramseyforge;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, double seconds) {
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str(), seconds);
    std::fflush(stdout);
    if (!ok) ++failures;
}

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

// ---- criterion 1: the explicit coloring kills all 1296 bridges ----
void criterion_1() {
    Timer timer;
    const auto psi = chi_key_table();
    const bool clean = !has_mono_bridge(psi, 4, 3).has_value();
    const bool count_ok = bridge_count(4, 3) == 1296;
    const double s = timer.seconds();
    report(1, "chi_key admits no monochromatic bridge among 1296", clean && count_ok && s < 1.0, s);
}

// ---- criterion 2: the solver-established facts about bridge hypergraphs ----
void criterion_2() {
    bool ok = true;
    Timer total;

    const auto decide = [&ok](int n, int c, bool expect_colorable) {
        Timer timer;
        const BridgeColorability outcome = bridge_2colorable(n, c);
        const double s = timer.seconds();
        bool good = outcome.colorable == expect_colorable && s < 60.0;
        if (expect_colorable && good) {
            good = !has_mono_bridge(outcome.coloring, n, c).has_value();
        }
        std::printf("       B_%d over %d symbols: %s in %.2fs\n", n, c,
                    outcome.colorable ? "2-colorable" : "not 2-colorable", s);
        ok = ok && good;
    };
    decide(2, 3, false);
    decide(3, 3, false);
    decide(4, 3, true);
    decide(4, 4, false);

    // DIMACS artifacts are byte-stable across two independent encodings
    for (int n = 2; n <= 4; ++n) {
        ok = ok && write_dimacs(encode_bridge_cnf(n, 3)) == write_dimacs(encode_bridge_cnf(n, 3));
    }
    ok = ok && write_dimacs(encode_bridge_cnf(4, 4)) == write_dimacs(encode_bridge_cnf(4, 4));
    report(2, "bridge facts: B2/B3 unsat, B4 sat + verified, B4 over [4] unsat", ok,
           total.seconds());
}

// ---- criterion 3: the solver agrees with brute force ----
void criterion_3() {
    Timer timer;
    bool ok = true;

    const Cnf b2 = encode_bridge_cnf(2, 3);
    ok = ok && solve(b2).status == exhaustive_check(b2).status;

    std::mt19937 rng(271828u);
    for (int trial = 0; trial < 200; ++trial) {
        const int vars = 3 + static_cast<int>(rng() % 18);  // up to 20
        const int clause_count = 1 + static_cast<int>(rng() % (3 * vars));
        std::vector<std::vector<int>> raw;
        for (int i = 0; i < clause_count; ++i) {
            const int len = 1 + static_cast<int>(rng() % 4);
            std::vector<int> clause;
            for (int j = 0; j < len; ++j) {
                const int var = 1 + static_cast<int>(rng() % vars);
                clause.push_back(rng() % 2 ? var : -var);
            }
            raw.push_back(std::move(clause));
        }
        const Cnf cnf = make_cnf(vars, std::move(raw));
        const SolveResult fast = solve(cnf);
        if (fast.status != exhaustive_check(cnf).status) ok = false;
        if (fast.is_sat() && !cnf_satisfied(cnf, fast.assignment)) ok = false;
    }
    report(3, "solve == exhaustive_check on B2 and 200 random formulas", ok, timer.seconds());
}

// ---- criterion 4: the five special subsets always span a bridge ----
void criterion_4() {
    Timer timer;
    bool ok = true;

    const auto check = [&](const std::vector<ColorVector>& vectors) {
        const auto witness = is_bridge_set(vectors, 3);
        return witness && witness->first == vectors[4] && witness->second == vectors[0];
    };

    // 10,000 randomized assignments fed through the real phi/lambda path
    // over random supersets. For l = 1 the blocks overlap as sets
    // (A_j = B_{j+1}), so the free values live on the five singletons.
    std::mt19937 rng(314159u);
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        const int l = 1 + static_cast<int>(rng() % 3);
        std::set<int> picked;
        while (static_cast<int>(picked.size()) < 4 * l + 1) {
            picked.insert(1 + static_cast<int>(rng() % 16));
        }
        const KSet y(std::vector<int>(picked.begin(), picked.end()));
        const auto decomposition = blocks(y, l);

        ProperColoring phi;
        phi.n = 16;
        phi.k = l;
        phi.c = 3;
        phi.colors.assign(n_choose_k(16, l), 0);
        if (l == 1) {
            int prev = -1;
            for (int i = 1; i <= 5; ++i) {
                int value = static_cast<int>(rng() % 3);
                while (value == prev) value = static_cast<int>(rng() % 3);
                phi.colors[rank(KSet({y.element(i)}), 16)] = value;
                prev = value;
            }
        } else {
            for (int j = 0; j < 4; ++j) {
                const int va = static_cast<int>(rng() % 3);
                const int vb = (va + 1 + static_cast<int>(rng() % 2)) % 3;
                phi.colors[rank(decomposition.a[static_cast<std::size_t>(j)], 16)] = va;
                phi.colors[rank(decomposition.b[static_cast<std::size_t>(j)], 16)] = vb;
            }
        }
        // the induced block values must disagree per slot by construction
        for (int j = 0; j < 4; ++j) {
            if (phi.color_of(decomposition.a[static_cast<std::size_t>(j)]) ==
                phi.color_of(decomposition.b[static_cast<std::size_t>(j)])) {
                ok = false;
            }
        }
        const auto zs = special_subsets(y, l);
        std::vector<ColorVector> vectors;
        for (const KSet& z : zs) vectors.push_back(lambda_map(z, phi, 4));
        if (!check(vectors)) ok = false;
    }

    // exhaustive sweep of all 1296 block-value patterns: lambda(Z_i) reads
    // the first i values from the B side and the rest from the A side
    int patterns = 0;
    for (int a0 = 0; a0 < 3 && ok; ++a0)
    for (int a1 = 0; a1 < 3 && ok; ++a1)
    for (int a2 = 0; a2 < 3 && ok; ++a2)
    for (int a3 = 0; a3 < 3 && ok; ++a3) {
        for (int d0 = 1; d0 < 3 && ok; ++d0)
        for (int d1 = 1; d1 < 3 && ok; ++d1)
        for (int d2 = 1; d2 < 3 && ok; ++d2)
        for (int d3 = 1; d3 < 3 && ok; ++d3) {
            ++patterns;
            const int va[4] = {a0, a1, a2, a3};
            const int vb[4] = {(a0 + d0) % 3, (a1 + d1) % 3, (a2 + d2) % 3, (a3 + d3) % 3};
            std::vector<ColorVector> vectors;
            for (int i = 0; i <= 4; ++i) {
                ColorVector v;
                for (int j = 0; j < i; ++j) v.coords.push_back(vb[j]);
                for (int j = i; j < 4; ++j) v.coords.push_back(va[j]);
                vectors.push_back(std::move(v));
            }
            if (!check(vectors)) ok = false;
        }
    }
    ok = ok && patterns == 1296;
    report(4, "five special subsets form a bridge: 10000 random + 1296 exhaustive", ok,
           timer.seconds());
}

// ---- criterion 5: the end-to-end construction at N = 13 and 14 ----
void criterion_5() {
    Timer timer;
    bool ok = true;
    for (const int N : {13, 14}) {
        const auto phi = find_coloring_sat(N, 3, 3);
        if (!phi) {
            ok = false;
            std::printf("       Sh(%d,3) unexpectedly has no 3-coloring\n", N);
            continue;
        }
        const RamseyColoring rc = build_coloring(N, 12, *phi, chi_key_table(), 4);
        const auto five = verify_special_five(rc);
        const auto cliques = verify_no_mono_clique(rc, 13);
        const std::uint64_t expect = n_choose_k(N, 13);
        ok = ok && !five.witness && !cliques.witness && !cliques.vacuous &&
             five.scanned == expect && cliques.scanned == expect;
        std::printf("       N=%d: %llu supersets clean\n", N,
                    static_cast<unsigned long long>(cliques.scanned));
    }
    const double s = timer.seconds();
    report(5, "theorem instance at (13,12) and (14,12) via SAT phi and chi_key",
           ok && s < 60.0, s);
}

// ---- criterion 6: appendix item 1 with its three syntactic sweeps ----
void criterion_6() {
    Timer timer;
    bool ok = verify_p23(8, 6, bit_color_pairs(8)).clean();

    const auto type1 = [](const int* c) { return c[1] < c[2] && c[2] > c[3]; };
    const auto type2 = [](const int* c) {
        return c[0] > c[1] && c[1] > c[2] && c[2] < c[3] && c[3] < c[4];
    };

    // all 243 label quintuples: the two red types never overlap
    int quintuples = 0;
    for (int code = 0; code < 243; ++code) {
        int c[5];
        int rest = code;
        for (int i = 0; i < 5; ++i) {
            c[i] = rest % 3 + 1;
            rest /= 3;
        }
        ++quintuples;
        if (type1(c) && type2(c)) ok = false;
    }
    ok = ok && quintuples == 243;

    // 96 consecutive-distinct sextuples: no two reds in shift position
    int sextuples = 0;
    for (int first = 1; first <= 3; ++first) {
        int c[6];
        c[0] = first;
        const auto walk = [&](auto&& self, int at) -> void {
            if (at == 6) {
                ++sextuples;
                const bool left = type1(c) || type2(c);
                const bool right = type1(c + 1) || type2(c + 1);
                if (left && right) ok = false;
                return;
            }
            for (int next = 1; next <= 3; ++next) {
                if (next == c[at - 1]) continue;
                c[at] = next;
                self(self, at + 1);
            }
        };
        walk(walk, 1);
    }
    ok = ok && sextuples == 96;

    // 192 consecutive-distinct septuples: never three blues in a row
    int septuples = 0;
    for (int first = 1; first <= 3; ++first) {
        int c[7];
        c[0] = first;
        const auto walk = [&](auto&& self, int at) -> void {
            if (at == 7) {
                ++septuples;
                const bool blue0 = !type1(c) && !type2(c);
                const bool blue1 = !type1(c + 1) && !type2(c + 1);
                const bool blue2 = !type1(c + 2) && !type2(c + 2);
                if (blue0 && blue1 && blue2) ok = false;
                return;
            }
            for (int next = 1; next <= 3; ++next) {
                if (next == c[at - 1]) continue;
                c[at] = next;
                self(self, at + 1);
            }
        };
        walk(walk, 1);
    }
    ok = ok && septuples == 192;

    const double s = timer.seconds();
    report(6, "P(2,3) instance clean; 243/96/192 syntactic sweeps hold", ok && s < 1.0, s);
}

// ---- criterion 7: appendix item 2 ----
void criterion_7() {
    Timer timer;
    const auto result = verify_p33(8, 3, bit_color_pairs(8));
    const bool ok = result.clean() && result.red_scanned == 56;
    report(7, "P(3,3) instance clean over 56 supersets", ok, timer.seconds());
}

// ---- criterion 8: appendix item 3 plus odd cycles ----
void criterion_8() {
    Timer timer;
    const auto result = verify_k1_2k1(8, 2, bit_color_pairs(8));
    bool ok = result.clean() && result.red_scanned == 56 && result.blue_scanned == 56;

    for (const KSet& y : ksubsets(8, 5)) {
        const auto cycle = odd_cycle_in_shift(y, 2);
        if (cycle.size() < 5 || cycle.size() % 2 == 0) ok = false;
        for (std::size_t i = 0; i < cycle.size() && ok; ++i) {
            const KSet& here = cycle[i];
            const KSet& next = cycle[(i + 1) % cycle.size()];
            if (!is_shift(here, next) && !is_shift(next, here)) ok = false;
        }
    }
    report(8, "R(k+1,2k+1) instance clean; odd cycles found in all 56 5-subsets", ok,
           timer.seconds());
}

// ---- criterion 9: chromatic numbers and the identity P(2,2,2) = s + 1 ----
void criterion_9() {
    Timer timer;
    bool ok = true;
    for (int N = 2; N <= 16; ++N) {
        int ceil_log2 = 0;
        while ((1 << ceil_log2) < N) ++ceil_log2;
        const auto chi = chromatic_shift(N, 2, 4);
        if (!chi || *chi != ceil_log2) {
            ok = false;
            std::printf("       chi(Sh(%d,2)) mismatch\n", N);
        }
    }
    const SExactResult s2 = s_exact_upto(2, 12);
    ok = ok && s2.value == 8 && s2.exact;
    const SExactResult s1 = s_exact_upto(1, 10);
    ok = ok && s1.value == 3 && s1.exact;
    ok = ok && p222_identity(1, 10).status == OracleReport::Status::holds;
    ok = ok && p222_identity(2, 12).status == OracleReport::Status::holds;
    const double s = timer.seconds();
    report(9, "chi(Sh(N,2)) = ceil(log2 N) for N = 2..16; s(1) = 3, s(2) = 8; P = s+1",
           ok && s < 300.0, s);
}

// ---- criterion 10: tower arithmetic ----
void criterion_10() {
    Timer timer;
    bool ok = tw(4, 2) == TowerValue::from_u64(65536);
    ok = ok && s_lower(7) == TowerValue::from_u64(262144);
    ok = ok && bound_table(16, BoundKind::diag) == TowerValue::from_u64(8);
    const TowerValue six = tw(6, 2);
    ok = ok && six.str() == "2^2^65536" && TowerValue::parse(six.str()) == six;
    report(10, "tw(4,2) = 65536; s_lower(7) = 262144; diag(16) = 8; symbolic round-trip", ok,
           timer.seconds());
}

// ---- criterion 11: the classical R(3,3) cross-check ----
void criterion_11() {
    Timer timer;
    bool ok = ramsey2_holds(3, 3, 6).status == OracleReport::Status::holds;

    const OracleReport at5 = ramsey2_holds(3, 3, 5);
    ok = ok && at5.status == OracleReport::Status::fails && at5.witness_colors.has_value();
    if (at5.witness_colors) {
        // re-verify the witness independently: no monochromatic triangle
        const auto& colors = *at5.witness_colors;
        for (const KSet& t : ksubsets(5, 3)) {
            const int e1 = colors[rank(KSet({t.element(1), t.element(2)}), 5)];
            const int e2 = colors[rank(KSet({t.element(1), t.element(3)}), 5)];
            const int e3 = colors[rank(KSet({t.element(2), t.element(3)}), 5)];
            if (e1 == e2 && e2 == e3) ok = false;
        }
    }
    const double s = timer.seconds();
    report(11, "R(3,3) holds at 6 and fails at 5 with a verified witness", ok && s < 10.0, s);
}

// ---- criterion 12: determinism across workers and across runs ----
void criterion_12() {
    Timer timer;
    bool ok = true;

    // worker-count invariance on every verifier
    const auto psi = chi_key_table();
    ok = ok && has_mono_bridge(psi, 4, 3, 1) == has_mono_bridge(psi, 4, 3, 4);
    const std::vector<int> constant(81, 1);
    ok = ok && has_mono_bridge(constant, 4, 3, 1) == has_mono_bridge(constant, 4, 3, 4);

    const auto phi13 = find_coloring_sat(13, 3, 3);
    ok = ok && phi13.has_value();
    if (phi13) {
        const RamseyColoring rc = build_coloring(13, 12, *phi13, psi, 4);
        const auto c1 = verify_no_mono_clique(rc, 13, 1);
        const auto c4 = verify_no_mono_clique(rc, 13, 4);
        ok = ok && c1.witness == c4.witness && c1.vacuous == c4.vacuous;
        const auto f1 = verify_special_five(rc, 1);
        const auto f4 = verify_special_five(rc, 4);
        ok = ok && f1.witness.has_value() == f4.witness.has_value();
    }
    const ProperColoring bits = bit_color_pairs(8);
    const auto p23_1 = verify_p23(8, 6, bits, 1);
    const auto p23_4 = verify_p23(8, 6, bits, 4);
    ok = ok && p23_1.clean() == p23_4.clean();
    const auto p33_1 = verify_p33(8, 3, bits, 1);
    const auto p33_4 = verify_p33(8, 3, bits, 4);
    ok = ok && p33_1.clean() == p33_4.clean();
    const auto k_1 = verify_k1_2k1(8, 2, bits, 1);
    const auto k_4 = verify_k1_2k1(8, 2, bits, 4);
    ok = ok && k_1.clean() == k_4.clean();

    // a witness-producing scan agrees across worker counts
    const std::vector<int> all_red(n_choose_k(8, 2), 1);
    const auto w1 = mono_clique_witness(8, 2, all_red, 3, 1);
    const auto w4 = mono_clique_witness(8, 2, all_red, 3, 4);
    ok = ok && w1.witness == w4.witness;

    // emitted files are byte-identical across independent runs
    const auto cert_a = bridge_2colorable(4, 3);
    const auto cert_b = bridge_2colorable(4, 3);
    ok = ok && write_bridge_coloring(cert_a.coloring, 4, 3) ==
                   write_bridge_coloring(cert_b.coloring, 4, 3);
    const auto phi_a = find_coloring_sat(13, 3, 3);
    const auto phi_b = find_coloring_sat(13, 3, 3);
    ok = ok && phi_a && phi_b && write_shift_coloring(*phi_a) == write_shift_coloring(*phi_b);
    ok = ok && write_dimacs(encode_bridge_cnf(3, 3)) == write_dimacs(encode_bridge_cnf(3, 3));

    report(12, "verifiers worker-invariant; artifacts byte-identical across runs", ok,
           timer.seconds());
}

}  // namespace

int main() {
    const Timer total;
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::printf("%s: %d criterion(s) failed (%.1fs total)\n", failures == 0 ? "OK" : "FAILED",
                failures, total.seconds());
    return failures == 0 ? 0 : 1;
}
