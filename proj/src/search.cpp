#include "prseq/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "prseq/linalg.hpp"
#include "prseq/minors.hpp"

namespace prseq {

namespace {

// ---------------------------------------------------------------- plumbing

struct Slot {
    int i = 0, k = 0;  // 1-based entry (i,k), i <= k; column k completes at i == k
    bool diagonal() const { return i == k; }
};

std::vector<Slot> slot_layout(int n) {
    std::vector<Slot> slots;
    slots.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= k; ++i) slots.push_back(Slot{i, k});
    return slots;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Per-order pruning constraint derived from the target.
enum class Need : std::uint8_t { Any, AllZero, AllNonzero };

struct TargetPlan {
    bool active = false;
    bool forbid_zero_diagonal = false;  // pr target with r_0 = 0
    std::vector<Need> per_order;        // index 1..n
    std::string want_pr;                // exact match keys, empty if unused
    std::string want_epr;
    std::string want_prefix;
};

TargetPlan make_plan(const SearchSpec& spec) {
    TargetPlan plan;
    plan.per_order.assign(static_cast<std::size_t>(spec.n) + 1, Need::Any);
    int targets = 0;
    if (spec.target_pr) ++targets;
    if (spec.target_epr) ++targets;
    if (spec.target_epr_prefix) ++targets;
    if (targets > 1) throw std::invalid_argument("search: at most one target may be given");
    if (spec.census && targets > 0)
        throw std::invalid_argument("search: census and target are mutually exclusive");
    if (!spec.census && targets == 0)
        throw std::invalid_argument("search: give a target or request a census");
    if (targets == 0) return plan;
    plan.active = true;
    if (spec.target_pr) {
        const auto& p = *spec.target_pr;
        if (p.order() != spec.n) throw std::invalid_argument("search: target order mismatch");
        plan.want_pr = format_pr(p);
        plan.forbid_zero_diagonal = (p.r0() == 0);
        for (int k = 1; k <= spec.n; ++k)
            if (p.term(k) == 0) plan.per_order[static_cast<std::size_t>(k)] = Need::AllZero;
    } else if (spec.target_epr) {
        const auto& e = *spec.target_epr;
        if (e.order() != spec.n) throw std::invalid_argument("search: target order mismatch");
        plan.want_epr = format_epr(e);
        for (int k = 1; k <= spec.n; ++k) {
            if (e.letter(k) == 'N') plan.per_order[static_cast<std::size_t>(k)] = Need::AllZero;
            if (e.letter(k) == 'A') plan.per_order[static_cast<std::size_t>(k)] = Need::AllNonzero;
        }
    } else {
        plan.want_prefix = *spec.target_epr_prefix;
        if (plan.want_prefix.empty() || static_cast<int>(plan.want_prefix.size()) > spec.n)
            throw std::invalid_argument("search: bad epr prefix");
        for (int k = 1; k <= static_cast<int>(plan.want_prefix.size()); ++k) {
            const char c = plan.want_prefix[static_cast<std::size_t>(k - 1)];
            if (c == 'N') plan.per_order[static_cast<std::size_t>(k)] = Need::AllZero;
            if (c == 'A') plan.per_order[static_cast<std::size_t>(k)] = Need::AllNonzero;
        }
    }
    return plan;
}

void validate(const SearchSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("search: order must be positive");
    if (spec.n > 20) throw std::invalid_argument("search: order too large");
    if (spec.diag_alphabet.empty() || spec.offdiag_alphabet.empty())
        throw std::invalid_argument("search: empty alphabet");
    for (const auto* alpha : {&spec.diag_alphabet, &spec.offdiag_alphabet}) {
        if (alpha->size() > 64) throw std::invalid_argument("search: alphabet too large");
        for (std::size_t i = 0; i < alpha->size(); ++i)
            for (std::size_t j = i + 1; j < alpha->size(); ++j)
                if ((*alpha)[i] == (*alpha)[j])
                    throw std::invalid_argument("search: alphabet values must be distinct");
    }
    if (spec.mode == SearchMode::Randomized) {
        if (!spec.seed) throw std::invalid_argument("search: randomized mode requires a seed");
        if (spec.trials == 0) throw std::invalid_argument("search: randomized mode needs trials");
    }
    if (spec.canonicalize) {
        const bool diag_ok = spec.diag_alphabet.size() == 1 && spec.diag_alphabet[0] == Rational(1);
        bool off_ok = true, has_one = false;
        for (const auto& v : spec.offdiag_alphabet) {
            if (v == Rational(1)) has_one = true;
            else if (v != Rational(-1)) off_ok = false;
        }
        if (!diag_ok || !off_ok || !has_one)
            throw std::invalid_argument(
                "search: canonicalization needs diagonal {1} and off-diagonal within {-1,1}");
    }
}

// Alphabet values for each slot; canonicalization pins the first row to 1.
std::vector<std::vector<Rational>> slot_alphabets(const SearchSpec& spec,
                                                  const std::vector<Slot>& slots) {
    std::vector<std::vector<Rational>> per_slot;
    per_slot.reserve(slots.size());
    for (const auto& s : slots) {
        if (spec.canonicalize && s.i == 1 && !s.diagonal())
            per_slot.push_back({Rational(1)});
        else if (s.diagonal())
            per_slot.push_back(spec.diag_alphabet);
        else
            per_slot.push_back(spec.offdiag_alphabet);
    }
    return per_slot;
}

double space_size(const std::vector<std::vector<Rational>>& per_slot) {
    double total = 1.0;
    for (const auto& a : per_slot) total *= static_cast<double>(a.size());
    return total;
}

// ------------------------------------------------------- scalar fast path

// The kernel works over int64 whenever every alphabet value is an integer
// and the Hadamard bound keeps all minors inside int64; otherwise it falls
// back to exact rationals. Products are taken in a wider type before the
// exact Bareiss division.
template <class S>
struct Wide {
    using type = S;
};
template <>
struct Wide<std::int64_t> {
    using type = __int128;
};

template <class S>
S scalar_from_rational(const Rational& v);

template <>
std::int64_t scalar_from_rational<std::int64_t>(const Rational& v) {
    return v.numerator().get_si();
}
template <>
Rational scalar_from_rational<Rational>(const Rational& v) {
    return v;
}

Rational rational_from_scalar(const std::int64_t& v) { return Rational(static_cast<long>(v)); }
Rational rational_from_scalar(const Rational& v) { return v; }

bool int64_path_ok(const SearchSpec& spec) {
    double maxabs = 1.0;
    for (const auto* alpha : {&spec.diag_alphabet, &spec.offdiag_alphabet})
        for (const auto& v : *alpha) {
            if (!v.is_integer()) return false;
            if (!v.numerator().fits_slong_p()) return false;
            maxabs = std::max(maxabs, std::abs(static_cast<double>(v.numerator().get_si())));
        }
    // All minors bounded by (M sqrt(n))^n; keep far under int64.
    const double bound = std::pow(maxabs * std::sqrt(static_cast<double>(spec.n)),
                                  static_cast<double>(spec.n));
    return bound < 4.0e18 / 2.0;
}

// Fraction-free determinant of the principal submatrix on idx[0..k).
template <class S>
bool subset_minor_is_zero(const std::vector<S>& full, int n, const int* idx, int k,
                          std::vector<S>& scratch) {
    using W = typename Wide<S>::type;
    if (k == 0) return false;
    scratch.resize(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            scratch[static_cast<std::size_t>(r * k + c)] =
                full[static_cast<std::size_t>(idx[r] * n + idx[c])];
    auto e = [&](int r, int c) -> S& { return scratch[static_cast<std::size_t>(r * k + c)]; };
    S prev = S(1);
    for (int col = 0; col + 1 < k; ++col) {
        if (e(col, col) == S(0)) {
            int pivot = -1;
            for (int r = col + 1; r < k; ++r)
                if (e(r, col) != S(0)) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return true;  // entire column zero -> singular
            for (int c = 0; c < k; ++c) std::swap(e(col, c), e(pivot, c));
        }
        for (int r = col + 1; r < k; ++r) {
            for (int c = col + 1; c < k; ++c) {
                W t = W(e(r, c)) * W(e(col, col)) - W(e(r, col)) * W(e(col, c));
                e(r, c) = static_cast<S>(t / W(prev));
            }
            e(r, col) = S(0);
        }
        prev = e(col, col);
    }
    return e(k - 1, k - 1) == S(0);
}

// --------------------------------------------------------- result keeping

struct Candidate {
    std::vector<std::uint8_t> assignment;  // alphabet indices, slot order
    std::string pr, epr;
};

struct Accumulator {
    // sequence -> (assignment for lex comparison, matrix)
    std::map<std::string, std::pair<std::vector<std::uint8_t>, SymMatrix>> pr_map, epr_map;
    std::map<std::string, std::uint64_t> pr_count, epr_count;
    std::uint64_t visited = 0;

    void merge(Accumulator&& other) {
        visited += other.visited;
        auto merge_map = [](auto& dst, auto&& src) {
            for (auto& [key, val] : src) {
                auto it = dst.find(key);
                if (it == dst.end() || val.first < it->second.first)
                    dst[key] = std::move(val);
            }
        };
        merge_map(pr_map, std::move(other.pr_map));
        merge_map(epr_map, std::move(other.epr_map));
        for (const auto& [k, c] : other.pr_count) pr_count[k] += c;
        for (const auto& [k, c] : other.epr_count) epr_count[k] += c;
    }
};

SymMatrix matrix_from_assignment(const SearchSpec& spec, const std::vector<Slot>& slots,
                                 const std::vector<std::vector<Rational>>& per_slot,
                                 const std::vector<std::uint8_t>& assignment) {
    SymMatrix m(spec.n);
    for (std::size_t s = 0; s < slots.size(); ++s)
        m.set(slots[s].i, slots[s].k, per_slot[s][assignment[s]]);
    return m;
}

// Verification gate: nothing enters a result without its sequences being
// recomputed through the library path and matching the kernel's claim.
void admit(Accumulator& acc, const SearchSpec& spec, const std::vector<Slot>& slots,
           const std::vector<std::vector<Rational>>& per_slot, const Candidate& cand) {
    acc.pr_count[cand.pr] += 1;
    acc.epr_count[cand.epr] += 1;
    auto consider = [&](auto& map, const std::string& key, const std::string& kind) {
        auto it = map.find(key);
        if (it != map.end() && !(cand.assignment < it->second.first)) return;
        SymMatrix m = matrix_from_assignment(spec, slots, per_slot, cand.assignment);
        const auto tallies = minor_order_tallies_serial(m);
        const std::string check =
            kind == "pr" ? format_pr(pr_from_tallies(m, tallies)) : format_epr(epr_from_tallies(tallies));
        if (check != key)
            throw std::logic_error("search verification gate: kernel/" + kind + " mismatch");
        map[key] = {cand.assignment, std::move(m)};
    };
    consider(acc.pr_map, cand.pr, "pr");
    consider(acc.epr_map, cand.epr, "epr");
}

// ----------------------------------------------------------- DFS machinery

template <class S>
struct Dfs {
    const SearchSpec& spec;
    const TargetPlan& plan;
    const std::vector<Slot>& slots;
    const std::vector<std::vector<Rational>>& per_slot;
    int n;

    std::vector<std::vector<S>> values;  // per-slot scalar alphabets
    std::vector<S> grid;                 // n x n working matrix
    std::vector<std::uint8_t> assignment;
    // Tally snapshots per column depth; tally[k] covers subsets within 1..k.
    std::vector<std::vector<OrderTally>> tally_stack;
    std::vector<int> subset_idx;
    std::vector<S> scratch;
    Accumulator acc;
    bool stop_at_first;
    bool stopped = false;

    Dfs(const SearchSpec& sp, const TargetPlan& pl, const std::vector<Slot>& sl,
        const std::vector<std::vector<Rational>>& pa)
        : spec(sp), plan(pl), slots(sl), per_slot(pa), n(sp.n) {
        values.reserve(per_slot.size());
        for (const auto& alpha : per_slot) {
            std::vector<S> vs;
            vs.reserve(alpha.size());
            for (const auto& v : alpha) vs.push_back(scalar_from_rational<S>(v));
            values.push_back(std::move(vs));
        }
        grid.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), S(0));
        assignment.assign(slots.size(), 0);
        tally_stack.assign(static_cast<std::size_t>(n) + 1,
                           std::vector<OrderTally>(static_cast<std::size_t>(n) + 1));
        subset_idx.assign(static_cast<std::size_t>(n), 0);
        stop_at_first = plan.active && !spec.census;
    }

    void place(std::size_t s, std::uint8_t choice) {
        const auto& slot = slots[s];
        const S v = values[s][choice];
        grid[static_cast<std::size_t>((slot.i - 1) * n + (slot.k - 1))] = v;
        grid[static_cast<std::size_t>((slot.k - 1) * n + (slot.i - 1))] = v;
        assignment[s] = choice;
    }

    // Evaluates every principal minor on subsets of {1..k} containing k,
    // updating tallies; returns false when the target is already dead.
    bool column_feasible(int k) {
        auto& tally = tally_stack[static_cast<std::size_t>(k)];
        tally = tally_stack[static_cast<std::size_t>(k - 1)];
        const std::uint64_t sub_limit = std::uint64_t{1} << (k - 1);
        for (std::uint64_t sub = 0; sub < sub_limit; ++sub) {
            int cnt = 0;
            for (int b = 0; b < k - 1; ++b)
                if (sub & (std::uint64_t{1} << b)) subset_idx[static_cast<std::size_t>(cnt++)] = b;
            subset_idx[static_cast<std::size_t>(cnt++)] = k - 1;
            const bool zero = subset_minor_is_zero(grid, n, subset_idx.data(), cnt, scratch);
            auto& slot = tally[static_cast<std::size_t>(cnt)];
            if (zero)
                slot.any_zero = true;
            else
                slot.any_nonzero = true;
            const Need need = plan.per_order[static_cast<std::size_t>(cnt)];
            if (need == Need::AllZero && !zero) return false;
            if (need == Need::AllNonzero && zero) return false;
        }
        return true;
    }

    void leaf() {
        acc.visited += 1;
        const auto& tally = tally_stack[static_cast<std::size_t>(n)];
        bool zero_diag = false;
        for (int i = 0; i < n; ++i)
            if (grid[static_cast<std::size_t>(i * n + i)] == S(0)) zero_diag = true;
        std::string pr;
        pr.reserve(static_cast<std::size_t>(n) + 2);
        pr.push_back(zero_diag ? '1' : '0');
        pr.push_back(']');
        std::string epr;
        epr.reserve(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k) {
            const auto& t = tally[static_cast<std::size_t>(k)];
            pr.push_back(t.any_nonzero ? '1' : '0');
            if (t.any_zero && t.any_nonzero)
                epr.push_back('S');
            else if (t.any_nonzero)
                epr.push_back('A');
            else
                epr.push_back('N');
        }
        if (plan.active) {
            if (!plan.want_pr.empty() && pr != plan.want_pr) return;
            if (!plan.want_epr.empty() && epr != plan.want_epr) return;
            if (!plan.want_prefix.empty() && epr.compare(0, plan.want_prefix.size(),
                                                         plan.want_prefix) != 0)
                return;
        }
        admit(acc, spec, slots, per_slot, Candidate{assignment, pr, epr});
        if (stop_at_first) stopped = true;
    }

    void dfs(std::size_t s) {
        if (stopped) return;
        if (s == slots.size()) {
            leaf();
            return;
        }
        const auto& slot = slots[s];
        for (std::uint8_t c = 0; c < values[s].size() && !stopped; ++c) {
            if (plan.forbid_zero_diagonal && slot.diagonal() && values[s][c] == S(0)) continue;
            place(s, c);
            if (slot.diagonal() && !column_feasible(slot.k)) continue;
            dfs(s + 1);
        }
    }

    // Continues from a fixed prefix of assignments (already validated).
    bool replay_prefix(const std::vector<std::uint8_t>& prefix) {
        for (std::size_t s = 0; s < prefix.size(); ++s) {
            place(s, prefix[s]);
            if (slots[s].diagonal() && !column_feasible(slots[s].k)) return false;
        }
        return true;
    }
};

// Enumerates assignment prefixes of a fixed slot depth, with pruning.
template <class S>
void enumerate_prefixes(Dfs<S>& probe, std::size_t depth, std::size_t s,
                        std::vector<std::uint8_t>& cur, std::vector<std::vector<std::uint8_t>>& out) {
    if (s == depth) {
        out.push_back(cur);
        return;
    }
    const auto& slot = probe.slots[s];
    for (std::uint8_t c = 0; c < probe.values[s].size(); ++c) {
        if (probe.plan.forbid_zero_diagonal && slot.diagonal() && probe.values[s][c] == S(0))
            continue;
        probe.place(s, c);
        if (slot.diagonal() && !probe.column_feasible(slot.k)) continue;
        cur.push_back(c);
        enumerate_prefixes(probe, depth, s + 1, cur, out);
        cur.pop_back();
    }
}

template <class S>
Accumulator exhaustive_search(const SearchSpec& spec, const TargetPlan& plan,
                              const std::vector<Slot>& slots,
                              const std::vector<std::vector<Rational>>& per_slot, int jobs) {
    // Pick a prefix depth giving enough partitions to spread across threads.
    std::size_t depth = 0;
    double width = 1.0;
    const double want = 64.0 * std::max(1, jobs);
    while (depth < slots.size() && width < want)
        width *= static_cast<double>(per_slot[depth++].size());

    Dfs<S> probe(spec, plan, slots, per_slot);
    std::vector<std::vector<std::uint8_t>> prefixes;
    std::vector<std::uint8_t> cur;
    enumerate_prefixes(probe, depth, 0, cur, prefixes);

    std::vector<Accumulator> partials(prefixes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
#endif
    for (std::int64_t p = 0; p < static_cast<std::int64_t>(prefixes.size()); ++p) {
        Dfs<S> walker(spec, plan, slots, per_slot);
        if (walker.replay_prefix(prefixes[static_cast<std::size_t>(p)]))
            walker.dfs(prefixes[static_cast<std::size_t>(p)].size());
        partials[static_cast<std::size_t>(p)] = std::move(walker.acc);
    }
    Accumulator total;
    for (auto& part : partials) total.merge(std::move(part));
    return total;
}

template <class S>
Accumulator randomized_search(const SearchSpec& spec, const TargetPlan& plan,
                              const std::vector<Slot>& slots,
                              const std::vector<std::vector<Rational>>& per_slot, int jobs) {
    const std::uint64_t seed = *spec.seed;
    const std::int64_t trials = static_cast<std::int64_t>(spec.trials);
    Accumulator total;
#ifdef _OPENMP
#pragma omp parallel num_threads(jobs > 0 ? jobs : omp_get_max_threads())
#endif
    {
        Dfs<S> walker(spec, plan, slots, per_slot);
        walker.stop_at_first = false;  // every sample is evaluated
        Accumulator pruned_only;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (std::int64_t t = 0; t < trials; ++t) {
            bool alive = true;
            for (std::size_t s = 0; s < slots.size() && alive; ++s) {
                const std::uint8_t c = static_cast<std::uint8_t>(
                    mix64(seed, static_cast<std::uint64_t>(t), s) % walker.values[s].size());
                walker.place(s, c);
                if (slots[s].diagonal() && !walker.column_feasible(slots[s].k)) alive = false;
            }
            if (alive)
                walker.leaf();  // counts the sample as visited
            else
                pruned_only.visited += 1;
        }
        pruned_only.merge(std::move(walker.acc));
#ifdef _OPENMP
#pragma omp critical(prseq_search_merge)
#endif
        total.merge(std::move(pruned_only));
    }
    return total;
}

CensusResult publish(Accumulator&& acc) {
    CensusResult res;
    res.visited = acc.visited;
    for (auto& [k, v] : acc.pr_map) res.pr_witness.emplace(k, std::move(v.second));
    for (auto& [k, v] : acc.epr_map) res.epr_witness.emplace(k, std::move(v.second));
    res.pr_count = std::move(acc.pr_count);
    res.epr_count = std::move(acc.epr_count);
    return res;
}

}  // namespace

std::uint64_t mix64(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return splitmix64(splitmix64(seed ^ (stream * 0xd1342543de82ef95ULL)) ^
                      (index * 0xaf251af3b0f025b5ULL));
}

CensusResult run_search(const SearchSpec& spec) {
    validate(spec);
    const TargetPlan plan = make_plan(spec);
    const auto slots = slot_layout(spec.n);
    const auto per_slot = slot_alphabets(spec, slots);
    if (spec.mode == SearchMode::Exhaustive && space_size(per_slot) > spec.space_bound)
        throw std::invalid_argument("search: space too large for exhaustive mode");
    int jobs = spec.jobs;
    if (spec.mode == SearchMode::Exhaustive) {
        if (int64_path_ok(spec))
            return publish(exhaustive_search<std::int64_t>(spec, plan, slots, per_slot, jobs));
        return publish(exhaustive_search<Rational>(spec, plan, slots, per_slot, jobs));
    }
    if (int64_path_ok(spec))
        return publish(randomized_search<std::int64_t>(spec, plan, slots, per_slot, jobs));
    return publish(randomized_search<Rational>(spec, plan, slots, per_slot, jobs));
}

CensusResult run_search_serial(const SearchSpec& spec) {
    validate(spec);
    const TargetPlan plan = make_plan(spec);
    const auto slots = slot_layout(spec.n);
    const auto per_slot = slot_alphabets(spec, slots);
    if (spec.mode == SearchMode::Exhaustive && space_size(per_slot) > spec.space_bound)
        throw std::invalid_argument("search: space too large for exhaustive mode");

    Accumulator acc;
    std::vector<std::uint8_t> assignment(slots.size(), 0);
    auto evaluate = [&](const std::vector<std::uint8_t>& a) {
        acc.visited += 1;
        SymMatrix m = matrix_from_assignment(spec, slots, per_slot, a);
        const auto tallies = minor_order_tallies_serial(m);
        Candidate cand{a, format_pr(pr_from_tallies(m, tallies)),
                       format_epr(epr_from_tallies(tallies))};
        bool keep = true;
        if (plan.active) {
            if (!plan.want_pr.empty()) keep = (cand.pr == plan.want_pr);
            if (!plan.want_epr.empty()) keep = (cand.epr == plan.want_epr);
            if (!plan.want_prefix.empty())
                keep = cand.epr.compare(0, plan.want_prefix.size(), plan.want_prefix) == 0;
        }
        if (keep) admit(acc, spec, slots, per_slot, cand);
        return keep;
    };

    if (spec.mode == SearchMode::Exhaustive) {
        const bool stop_at_first = plan.active && !spec.census;
        // Odometer enumeration in the same lexicographic order as the kernel.
        while (true) {
            if (evaluate(assignment) && stop_at_first) break;
            std::size_t s = slots.size();
            bool carried_out = true;
            while (s > 0) {
                --s;
                if (++assignment[s] < per_slot[s].size()) {
                    carried_out = false;
                    break;
                }
                assignment[s] = 0;
            }
            if (carried_out) break;  // odometer wrapped: space exhausted
        }
        return publish(std::move(acc));
    }

    for (std::uint64_t t = 0; t < spec.trials; ++t) {
        for (std::size_t s = 0; s < slots.size(); ++s)
            assignment[s] =
                static_cast<std::uint8_t>(mix64(*spec.seed, t, s) % per_slot[s].size());
        evaluate(assignment);
    }
    return publish(std::move(acc));
}

CensusResult census(int n, const std::vector<Rational>& diag,
                    const std::vector<Rational>& offdiag, int jobs) {
    SearchSpec spec;
    spec.n = n;
    spec.diag_alphabet = diag;
    spec.offdiag_alphabet = offdiag;
    spec.census = true;
    spec.jobs = jobs;
    return run_search(spec);
}

std::optional<SymMatrix> found_attainer(const SearchSpec& spec, const CensusResult& result) {
    if (spec.target_pr) {
        auto it = result.pr_witness.find(format_pr(*spec.target_pr));
        if (it != result.pr_witness.end()) return it->second;
        return std::nullopt;
    }
    if (spec.target_epr) {
        auto it = result.epr_witness.find(format_epr(*spec.target_epr));
        if (it != result.epr_witness.end()) return it->second;
        return std::nullopt;
    }
    if (spec.target_epr_prefix) {
        for (const auto& [key, m] : result.epr_witness)
            if (key.compare(0, spec.target_epr_prefix->size(), *spec.target_epr_prefix) == 0)
                return m;
        return std::nullopt;
    }
    return std::nullopt;
}

JBlockReport jblock_singularity_probe(int n_even, int trials, std::uint64_t seed) {
    if (n_even < 2 || n_even % 2 != 0)
        throw std::invalid_argument("jblock_singularity_probe: order must be even");
    if (trials < 1) throw std::invalid_argument("jblock_singularity_probe: trials must be >= 1");
    JBlockReport rep;
    rep.n = n_even;
    rep.trials = trials;
    rep.seed = seed;
    const int block = n_even / 2 + 1;
    for (int t = 0; t < trials; ++t) {
        std::uint64_t ctr = 0;
        auto draw = [&](std::uint64_t lim) { return mix64(seed, static_cast<std::uint64_t>(t), ctr++) % lim; };
        // Random block position: choose block indices as a random subset.
        std::vector<int> all(static_cast<std::size_t>(n_even));
        for (int i = 0; i < n_even; ++i) all[static_cast<std::size_t>(i)] = i + 1;
        for (int i = n_even - 1; i > 0; --i)
            std::swap(all[static_cast<std::size_t>(i)],
                      all[static_cast<std::size_t>(draw(static_cast<std::uint64_t>(i + 1)))]);
        std::vector<int> chosen(all.begin(), all.begin() + block);
        std::sort(chosen.begin(), chosen.end());
        SymMatrix m(n_even);
        for (int i = 1; i <= n_even; ++i)
            for (int j = i; j <= n_even; ++j) {
                const long num = static_cast<long>(draw(19)) - 9;  // [-9, 9]
                const long den = static_cast<long>(draw(4)) + 1;   // [1, 4]
                m.set(i, j, Rational(num, den));
            }
        for (int a = 0; a < block; ++a)
            for (int b = a; b < block; ++b)
                m.set(chosen[static_cast<std::size_t>(a)], chosen[static_cast<std::size_t>(b)],
                      Rational(1));
        if (det(m).is_zero()) rep.zero_determinants += 1;
    }
    rep.all_singular = (rep.zero_determinants == trials);
    return rep;
}

}  // namespace prseq
