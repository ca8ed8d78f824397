#include "ramseyforge/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ramseyforge {

namespace {

// Conflict-driven clause learning with two watched literals, first-UIP
// learning with recursive clause minimization, LBD-guided database
// reduction and Luby restarts. Every heuristic tie breaks toward the
// lowest variable index and the initial phase is true, so runs are
// bit-reproducible. Unit propagation and pure-literal elimination run to
// fixpoint at the root before the search starts.
class CdclSolver {
public:
    explicit CdclSolver(const Cnf& cnf)
        : cnf_(cnf),
          n_(cnf.variable_count),
          assign_(static_cast<std::size_t>(n_) + 1, 0),
          level_(static_cast<std::size_t>(n_) + 1, 0),
          reason_(static_cast<std::size_t>(n_) + 1, kNoClause),
          seen_(static_cast<std::size_t>(n_) + 1, 0),
          phase_(static_cast<std::size_t>(n_) + 1, 1),
          activity_(static_cast<std::size_t>(n_) + 1, 0.0),
          watches_(2 * (static_cast<std::size_t>(n_) + 1)) {}

    bool solve() {
        for (const auto& clause : cnf_.clauses) {
            if (clause.empty()) return false;
            if (clause.size() == 1) {
                if (!enqueue(clause[0], kNoClause)) return false;
            } else {
                attach(add_clause(clause, false));
            }
        }
        first_learned_ = static_cast<std::uint32_t>(starts_.size());
        if (complement_closed()) {
            for (int v = 1; v <= n_; ++v) {
                if (assign_[static_cast<std::size_t>(v)] == 0) {
                    enqueue(v, kNoClause);
                    break;
                }
            }
        }
        if (propagate() != kNoClause) return false;
        if (!eliminate_root_pures()) return false;
        return search();
    }

    std::vector<bool> model() const {
        std::vector<bool> out(static_cast<std::size_t>(n_) + 1, false);
        for (int v = 1; v <= n_; ++v) out[static_cast<std::size_t>(v)] = assign_[static_cast<std::size_t>(v)] > 0;
        return out;
    }

private:
    static constexpr std::uint32_t kNoClause = 0xffffffffu;

    struct Watch {
        std::uint32_t cref;
        int blocker;
    };

    static std::size_t widx(int lit) {
        return 2 * static_cast<std::size_t>(std::abs(lit)) + (lit < 0 ? 1 : 0);
    }

    int value_of(int lit) const {
        const int v = assign_[static_cast<std::size_t>(std::abs(lit))];
        return lit > 0 ? v : -v;
    }

    std::uint32_t add_clause(const std::vector<int>& lits, bool learned) {
        const auto cref = static_cast<std::uint32_t>(starts_.size());
        starts_.push_back(static_cast<std::uint32_t>(arena_.size()));
        sizes_.push_back(static_cast<std::uint32_t>(lits.size()));
        lbd_.push_back(learned ? current_lbd(lits) : 0);
        dead_.push_back(0);
        arena_.insert(arena_.end(), lits.begin(), lits.end());
        if (learned) ++live_learned_;
        return cref;
    }

    std::uint32_t current_lbd(const std::vector<int>& lits) {
        ++stamp_;
        std::uint32_t distinct = 0;
        for (int lit : lits) {
            const int lvl = level_[static_cast<std::size_t>(std::abs(lit))];
            if (lvl > 0 && level_stamps_touch(lvl)) ++distinct;
        }
        return distinct == 0 ? 1 : distinct;
    }

    bool level_stamps_touch(int lvl) {
        if (level_marks_.size() <= static_cast<std::size_t>(lvl)) {
            level_marks_.resize(static_cast<std::size_t>(lvl) + 1, 0);
        }
        if (level_marks_[static_cast<std::size_t>(lvl)] == stamp_) return false;
        level_marks_[static_cast<std::size_t>(lvl)] = stamp_;
        return true;
    }

    int* lits_of(std::uint32_t cref) { return arena_.data() + starts_[cref]; }
    const int* lits_of(std::uint32_t cref) const { return arena_.data() + starts_[cref]; }
    std::uint32_t size_of(std::uint32_t cref) const { return sizes_[cref]; }

    void attach(std::uint32_t cref) {
        int* lits = lits_of(cref);
        watches_[widx(lits[0])].push_back({cref, lits[1]});
        watches_[widx(lits[1])].push_back({cref, lits[0]});
    }

    bool enqueue(int lit, std::uint32_t reason) {
        const int val = value_of(lit);
        if (val > 0) return true;
        if (val < 0) return false;
        const auto v = static_cast<std::size_t>(std::abs(lit));
        assign_[v] = lit > 0 ? 1 : -1;
        level_[v] = current_level();
        reason_[v] = reason;
        trail_.push_back(lit);
        return true;
    }

    int current_level() const { return static_cast<int>(trail_lim_.size()); }

    // A clause set closed under global literal complementation has its
    // models in complementary pairs, so the lowest variable may be fixed.
    bool complement_closed() const {
        if (cnf_.clauses.empty()) return false;
        std::vector<std::vector<int>> flipped;
        flipped.reserve(cnf_.clauses.size());
        for (const auto& clause : cnf_.clauses) {
            std::vector<int> f;
            f.reserve(clause.size());
            for (int lit : clause) f.push_back(-lit);
            std::sort(f.begin(), f.end(), [](int a, int b) {
                if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
                return a > b;
            });
            flipped.push_back(std::move(f));
        }
        std::sort(flipped.begin(), flipped.end(), [](const auto& a, const auto& b) {
            const std::size_t n = std::min(a.size(), b.size());
            for (std::size_t i = 0; i < n; ++i) {
                const auto ka = (static_cast<std::uint64_t>(std::abs(a[i])) << 1) | (a[i] < 0 ? 1u : 0u);
                const auto kb = (static_cast<std::uint64_t>(std::abs(b[i])) << 1) | (b[i] < 0 ? 1u : 0u);
                if (ka != kb) return ka < kb;
            }
            return a.size() < b.size();
        });
        return flipped == cnf_.clauses;
    }

    // Returns the conflicting clause, or kNoClause.
    std::uint32_t propagate() {
        while (qhead_ < trail_.size()) {
            const int p = trail_[qhead_++];
            auto& watch_list = watches_[widx(-p)];
            std::size_t keep = 0;
            for (std::size_t i = 0; i < watch_list.size(); ++i) {
                const Watch w = watch_list[i];
                if (value_of(w.blocker) > 0) {
                    watch_list[keep++] = w;
                    continue;
                }
                int* lits = lits_of(w.cref);
                const std::uint32_t size = size_of(w.cref);
                if (lits[0] == -p) std::swap(lits[0], lits[1]);
                if (value_of(lits[0]) > 0) {
                    watch_list[keep++] = {w.cref, lits[0]};
                    continue;
                }
                bool moved = false;
                for (std::uint32_t j = 2; j < size; ++j) {
                    if (value_of(lits[j]) >= 0) {
                        std::swap(lits[1], lits[j]);
                        watches_[widx(lits[1])].push_back({w.cref, lits[0]});
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                watch_list[keep++] = {w.cref, lits[0]};
                if (w.cref >= first_learned_) {
                    std::uint32_t fresh = 0;
                    ++stamp_;
                    for (std::uint32_t j = 0; j < size; ++j) {
                        const int lvl = level_[static_cast<std::size_t>(std::abs(lits[j]))];
                        if (lvl > 0 && level_stamps_touch(lvl)) ++fresh;
                    }
                    if (fresh > 0 && fresh < lbd_[w.cref]) lbd_[w.cref] = fresh;
                }
                if (value_of(lits[0]) < 0) {
                    for (std::size_t j = i + 1; j < watch_list.size(); ++j) {
                        watch_list[keep++] = watch_list[j];
                    }
                    watch_list.resize(keep);
                    qhead_ = trail_.size();
                    return w.cref;
                }
                enqueue(lits[0], w.cref);
            }
            watch_list.resize(keep);
        }
        return kNoClause;
    }

    // Root-level pure literals: fix variables whose other polarity appears
    // in no not-yet-satisfied clause; isolated variables default to true.
    bool eliminate_root_pures() {
        while (true) {
            std::vector<int> pos(static_cast<std::size_t>(n_) + 1, 0);
            std::vector<int> neg(static_cast<std::size_t>(n_) + 1, 0);
            for (const auto& clause : cnf_.clauses) {
                bool satisfied = false;
                for (int lit : clause) {
                    if (value_of(lit) > 0) {
                        satisfied = true;
                        break;
                    }
                }
                if (satisfied) continue;
                for (int lit : clause) {
                    if (lit > 0) ++pos[static_cast<std::size_t>(lit)];
                    else ++neg[static_cast<std::size_t>(-lit)];
                }
            }
            bool fixed_any = false;
            for (int v = 1; v <= n_; ++v) {
                if (assign_[static_cast<std::size_t>(v)] != 0) continue;
                if (neg[static_cast<std::size_t>(v)] == 0) {
                    enqueue(v, kNoClause);
                    fixed_any = true;
                } else if (pos[static_cast<std::size_t>(v)] == 0) {
                    enqueue(-v, kNoClause);
                    fixed_any = true;
                }
            }
            if (!fixed_any) return true;
            if (propagate() != kNoClause) return false;
        }
    }

    void bump(int var) {
        activity_[static_cast<std::size_t>(var)] += var_inc_;
        if (activity_[static_cast<std::size_t>(var)] > 1e100) {
            for (int v = 1; v <= n_; ++v) activity_[static_cast<std::size_t>(v)] *= 1e-100;
            var_inc_ *= 1e-100;
        }
    }

    void backtrack(int target_level) {
        if (current_level() <= target_level) return;
        const std::size_t floor = trail_lim_[static_cast<std::size_t>(target_level)];
        for (std::size_t i = trail_.size(); i-- > floor;) {
            const auto v = static_cast<std::size_t>(std::abs(trail_[i]));
            phase_[v] = assign_[v];
            assign_[v] = 0;
            reason_[v] = kNoClause;
        }
        trail_.resize(floor);
        trail_lim_.resize(static_cast<std::size_t>(target_level));
        qhead_ = floor;
    }

    // True when every path from lit's reason bottoms out in the learnt
    // clause or level 0; marks made along the way memoize the cone.
    bool lit_redundant(int lit) {
        analyze_stack_.assign(1, lit);
        const std::size_t top = to_clear_.size();
        while (!analyze_stack_.empty()) {
            const int q = analyze_stack_.back();
            analyze_stack_.pop_back();
            const std::uint32_t cref = reason_[static_cast<std::size_t>(std::abs(q))];
            const int* lits = lits_of(cref);
            const std::uint32_t size = size_of(cref);
            for (std::uint32_t j = 1; j < size; ++j) {
                const int r = lits[j];
                const auto vr = static_cast<std::size_t>(std::abs(r));
                if (level_[vr] == 0 || seen_[vr]) continue;
                if (reason_[vr] == kNoClause) {
                    for (std::size_t i = top; i < to_clear_.size(); ++i) {
                        seen_[static_cast<std::size_t>(to_clear_[i])] = 0;
                    }
                    to_clear_.resize(top);
                    return false;
                }
                seen_[vr] = 1;
                to_clear_.push_back(static_cast<int>(vr));
                analyze_stack_.push_back(r);
            }
        }
        return true;
    }

    // First-UIP learning; fills learnt_ (asserting literal first) and
    // returns the backjump level.
    int analyze(std::uint32_t confl) {
        learnt_.clear();
        learnt_.push_back(0);  // placeholder for the asserting literal
        to_clear_.clear();
        int counter = 0;
        int p = 0;
        std::size_t index = trail_.size();

        do {
            const int* lits = lits_of(confl);
            const std::uint32_t size = size_of(confl);
            for (std::uint32_t j = (p == 0 ? 0 : 1); j < size; ++j) {
                const int q = lits[j];
                const auto v = static_cast<std::size_t>(std::abs(q));
                if (seen_[v] || level_[v] == 0) continue;
                seen_[v] = 1;
                bump(std::abs(q));
                if (level_[v] == current_level()) {
                    ++counter;
                } else {
                    learnt_.push_back(q);
                    to_clear_.push_back(static_cast<int>(v));
                }
            }
            while (!seen_[static_cast<std::size_t>(std::abs(trail_[index - 1]))]) --index;
            p = trail_[index - 1];
            --index;
            seen_[static_cast<std::size_t>(std::abs(p))] = 0;
            confl = reason_[static_cast<std::size_t>(std::abs(p))];
            --counter;
        } while (counter > 0);
        learnt_[0] = -p;

        // recursive minimization: drop literals implied by the rest
        std::size_t kept = 1;
        for (std::size_t i = 1; i < learnt_.size(); ++i) {
            const int q = learnt_[i];
            if (reason_[static_cast<std::size_t>(std::abs(q))] == kNoClause || !lit_redundant(q)) {
                learnt_[kept++] = q;
            }
        }
        learnt_.resize(kept);

        int backjump = 0;
        std::size_t max_at = 1;
        for (std::size_t i = 1; i < learnt_.size(); ++i) {
            const int lvl = level_[static_cast<std::size_t>(std::abs(learnt_[i]))];
            if (lvl > backjump) {
                backjump = lvl;
                max_at = i;
            }
        }
        if (learnt_.size() > 1) std::swap(learnt_[1], learnt_[max_at]);
        for (int v : to_clear_) seen_[static_cast<std::size_t>(v)] = 0;
        for (std::size_t i = 0; i < learnt_.size(); ++i) {
            seen_[static_cast<std::size_t>(std::abs(learnt_[i]))] = 0;
        }
        return backjump;
    }

    int pick_branch() const {
        int best = 0;
        double best_activity = -1.0;
        for (int v = 1; v <= n_; ++v) {
            if (assign_[static_cast<std::size_t>(v)] != 0) continue;
            if (activity_[static_cast<std::size_t>(v)] > best_activity) {
                best_activity = activity_[static_cast<std::size_t>(v)];
                best = v;
            }
        }
        return best;
    }

    bool locked(std::uint32_t cref) const {
        const int head = lits_of(cref)[0];
        const auto v = static_cast<std::size_t>(std::abs(head));
        return assign_[v] != 0 && reason_[v] == cref;
    }

    // Drop the worst half of the removable learned clauses, judged by
    // (lbd, size, recency); glue clauses and locked reasons stay.
    void reduce_db() {
        std::vector<std::uint32_t> cands;
        for (std::uint32_t cref = first_learned_; cref < starts_.size(); ++cref) {
            if (!dead_[cref] && lbd_[cref] > 2 && !locked(cref)) cands.push_back(cref);
        }
        std::sort(cands.begin(), cands.end(), [this](std::uint32_t a, std::uint32_t b) {
            if (lbd_[a] != lbd_[b]) return lbd_[a] > lbd_[b];
            if (sizes_[a] != sizes_[b]) return sizes_[a] > sizes_[b];
            return a < b;  // prefer dropping older clauses
        });
        for (std::size_t i = 0; i < cands.size() / 2; ++i) {
            dead_[cands[i]] = 1;
            --live_learned_;
        }
        rebuild_watches();
    }

    // Safe only at decision level 0 with propagation complete: every live
    // clause is then either satisfied at the root or has two free literals.
    void rebuild_watches() {
        for (auto& wl : watches_) wl.clear();
        for (std::uint32_t cref = 0; cref < starts_.size(); ++cref) {
            if (dead_[cref]) continue;
            int* lits = lits_of(cref);
            const std::uint32_t size = size_of(cref);
            std::uint32_t placed = 0;
            for (std::uint32_t j = 0; j < size && placed < 2; ++j) {
                if (value_of(lits[j]) >= 0) std::swap(lits[placed++], lits[j]);
            }
            attach(cref);
        }
    }

    // the reluctant-doubling sequence 1 1 2 1 1 2 4 ..., 1-based
    static std::uint64_t luby(std::uint64_t i) {
        while (true) {
            std::uint64_t k = 1;
            while ((1ull << k) - 1 < i) ++k;
            if ((1ull << k) - 1 == i) return 1ull << (k - 1);
            i -= (1ull << (k - 1)) - 1;
        }
    }

    bool search() {
        std::uint64_t conflicts_until_restart = 256 * luby(restarts_ + 1);
        while (true) {
            const std::uint32_t confl = propagate();
            if (confl != kNoClause) {
                if (current_level() == 0) return false;
                ++conflicts_;
                const int backjump = analyze(confl);
                backtrack(backjump);
                if (learnt_.size() == 1) {
                    enqueue(learnt_[0], kNoClause);
                } else {
                    const std::uint32_t cref = add_clause(learnt_, true);
                    attach(cref);
                    enqueue(learnt_[0], cref);
                }
                var_inc_ /= 0.95;
                if (conflicts_ >= conflicts_until_restart) {
                    ++restarts_;
                    conflicts_ = 0;
                    conflicts_until_restart = 256 * luby(restarts_ + 1);
                    backtrack(0);
                    if (propagate() != kNoClause) return false;
                    if (live_learned_ > reduce_limit_) {
                        reduce_db();
                        reduce_limit_ = reduce_limit_ * 11 / 10;
                    }
                }
                continue;
            }
            const int v = pick_branch();
            if (v == 0) return true;
            trail_lim_.push_back(trail_.size());
            enqueue(phase_[static_cast<std::size_t>(v)] >= 0 ? v : -v, kNoClause);
        }
    }

    const Cnf& cnf_;
    int n_;
    std::vector<signed char> assign_;
    std::vector<int> level_;
    std::vector<std::uint32_t> reason_;
    std::vector<signed char> seen_;
    std::vector<signed char> phase_;
    std::vector<double> activity_;
    std::vector<std::vector<Watch>> watches_;

    std::vector<int> arena_;
    std::vector<std::uint32_t> starts_;
    std::vector<std::uint32_t> sizes_;
    std::vector<std::uint32_t> lbd_;
    std::vector<signed char> dead_;
    std::uint32_t first_learned_ = 0;
    std::uint64_t live_learned_ = 0;
    std::uint64_t reduce_limit_ = 20000;

    std::vector<int> trail_;
    std::vector<std::size_t> trail_lim_;
    std::size_t qhead_ = 0;

    std::vector<int> learnt_;
    std::vector<int> analyze_stack_;
    std::vector<int> to_clear_;
    std::vector<std::uint64_t> level_marks_;
    std::uint64_t stamp_ = 0;
    double var_inc_ = 1.0;
    std::uint64_t conflicts_ = 0;
    std::uint64_t restarts_ = 0;
};

}  // namespace

SolveResult solve(const Cnf& cnf) {
    CdclSolver engine(cnf);
    if (!engine.solve()) {
        return SolveResult{SolveResult::Status::unsat, {}};
    }
    SolveResult result{SolveResult::Status::sat, engine.model()};
    if (!cnf_satisfied(cnf, result.assignment)) {
        throw std::logic_error("solve: produced assignment fails re-check");
    }
    return result;
}

SolveResult exhaustive_check(const Cnf& cnf) {
    if (cnf.variable_count > 25) {
        throw std::invalid_argument("exhaustive_check: refused above 25 variables");
    }
    const int n = cnf.variable_count;
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<bool> assignment(static_cast<std::size_t>(n) + 1, false);
        for (int v = 1; v <= n; ++v) {
            assignment[static_cast<std::size_t>(v)] = (bits >> (v - 1)) & 1u;
        }
        if (cnf_satisfied(cnf, assignment)) {
            return SolveResult{SolveResult::Status::sat, std::move(assignment)};
        }
    }
    return SolveResult{SolveResult::Status::unsat, {}};
}

}  // namespace ramseyforge
