// SPDX-License-Identifier: MIT
// Acceptance checks. One line per criterion; every comparison is exact integer equality.
// Exit status is 0 when every failing comparison is a listed conflict with a published value.
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "nono/constructions.hpp"
#include "nono/formulas.hpp"
#include "nono/oracle.hpp"
#include "nono/partitions.hpp"
#include "nono/solver.hpp"

using namespace nono;

namespace {

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

std::string show(const mpz_class& v) {
    // powers of two above 2^20 print as 2^k
    if (v > (1 << 20) && mpz_popcount(v.get_mpz_t()) == 1)
        return "2^" + std::to_string(mpz_sizeinbase(v.get_mpz_t(), 2) - 1);
    return v.get_str();
}

struct TableEntry {
    std::int64_t s;
    mpz_class n;
};

// Published S(q,n) and N(q,n), 2 <= q <= 6.
std::map<std::pair<int, int>, TableEntry> published_values() {
    std::map<std::pair<int, int>, TableEntry> t;
    const std::vector<std::vector<std::int64_t>> S{
        {1, 1, 2, 3, 5, 8, 14, 24, 44, 81, 149, 274},
        {4, 8, 17, 41, 99, 247, 656, 1792},
        {9, 27, 81, 251, 829, 2753},
        {18, 64, 256, 1024, 4181},
        {32, 128, 625, 3125},
    };
    const std::vector<std::vector<mpz_class>> N{
        {4, 6, 8, 16, 48, 288, 1132, pow2(15), pow2(26), pow2(46), pow2(83), pow2(151)},
        {6, 6, 12, 12, 12, 36, 6, 6},
        {8, 8, 8, 24, 24, 24},
        {20, 10, 10, 10, 40},
        {30, 30, 12, 12},
    };
    for (int q = 2; q <= 6; ++q)
        for (std::size_t i = 0; i < S[q - 2].size(); ++i) t[{q, 3 + static_cast<int>(i)}] = {S[q - 2][i], N[q - 2][i]};
    return t;
}

// Published entries that the solver and the independent oracles contradict (see README).
const std::set<std::tuple<int, int, char>> kKnownConflicts{
    {2, 9, 'N'}, {2, 17, 'N'}, {2, 18, 'N'}, {2, 19, 'N'}, {2, 20, 'N'}};

struct Outcome {
    int compared = 0;
    std::vector<std::string> mismatches;
    bool unexpected = false;
    bool ok() const { return mismatches.empty(); }
};

void compare_entry(Outcome& o, int q, int n, char what, const mpz_class& expected, const mpz_class& got) {
    ++o.compared;
    if (expected == got) return;
    bool known = kKnownConflicts.count({q, n, what}) != 0;
    std::ostringstream m;
    m << what << "(" << q << "," << n << ") expected " << show(expected) << " computed " << show(got)
      << (known ? " [known conflict]" : "");
    o.mismatches.push_back(m.str());
    if (!known) o.unexpected = true;
}

void check(Outcome& o, bool cond, const std::string& what) {
    ++o.compared;
    if (!cond) {
        o.mismatches.push_back(what);
        o.unexpected = true;
    }
}

struct Solved {
    SolverResult r;
    double ms;
};

std::map<std::pair<int, int>, Solved> g_solved;

const SolverResult& solved(int q, int n) {
    auto it = g_solved.find({q, n});
    if (it != g_solved.end()) return it->second.r;
    auto t0 = std::chrono::steady_clock::now();
    auto r = solve_sqn(q, n);
    expand_optimal_set(r);
    count_maximum(r);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return g_solved.emplace(std::make_pair(q, n), Solved{std::move(r), ms}).first->second.r;
}

bool g_all_expected = true;

void report(int id, const std::string& title, const Outcome& o, double seconds) {
    std::cout << "criterion " << id << ": " << (o.ok() ? "PASS" : "FAIL") << " | " << title << " | " << o.compared
              << " exact comparisons, tol=0";
    if (!o.ok()) {
        std::cout << " | " << o.mismatches.size() << " mismatches: ";
        for (std::size_t i = 0; i < o.mismatches.size() && i < 8; ++i) std::cout << (i ? "; " : "") << o.mismatches[i];
    }
    std::cout << " | " << static_cast<long>(seconds * 1000) << " ms" << std::endl;
    if (o.unexpected) g_all_expected = false;
}

template <class F>
void run(int id, const std::string& title, F f) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        f(o);
    } catch (const std::exception& e) {
        o.mismatches.push_back(std::string("exception: ") + e.what());
        o.unexpected = true;
    }
    report(id, title, o, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

const std::vector<std::pair<int, int>> kDeskScale = [] {
    std::vector<std::pair<int, int>> v;
    const int last[] = {14, 10, 8, 7, 6};
    for (int q = 2; q <= 6; ++q)
        for (int n = 3; n <= last[q - 2]; ++n) v.push_back({q, n});
    return v;
}();

}  // namespace

int main() {
    const auto published = published_values();

    run(1, "published S and N, desk-scale block", [&](Outcome& o) {
        for (auto [q, n] : kDeskScale) {
            const auto& r = solved(q, n);
            const auto& e = published.at({q, n});
            compare_entry(o, q, n, 'S', e.s, r.s);
            compare_entry(o, q, n, 'N', e.n, *r.count);
            check(o, r.complete && r.count_exact, "incomplete run at (" + std::to_string(q) + "," + std::to_string(n) + ")");
        }
        double q2 = 0;
        for (int n = 3; n <= 14; ++n) q2 += g_solved.at({2, n}).ms;
        check(o, q2 <= 60'000, "q=2 block took more than 60 s");
    });

    run(2, "published binary S and N, n = 17..20", [&](Outcome& o) {
        const std::int64_t S[] = {1705, 3160, 5969, 11272};
        const unsigned long E[] = {930, 1677, 3163, 5974};
        for (int n = 17; n <= 20; ++n) {
            const auto& r = solved(2, n);
            compare_entry(o, 2, n, 'S', S[n - 17], r.s);
            compare_entry(o, 2, n, 'N', pow2(E[n - 17]), *r.count);
            check(o, r.complete && r.count_exact, "incomplete run at (2," + std::to_string(n) + ")");
        }
    });

    run(3, "construction gaps and best sets", [&](Outcome& o) {
        struct Row {
            int q, n, gap;
            std::set<std::string> best;
        };
        const std::vector<Row> rows{
            {3, 5, 1, {"C1", "W2", "W4", "C5"}}, {3, 6, 5, {"C5"}},        {3, 7, 11, {"C1", "W4"}},
            {3, 8, 7, {"C1", "W4"}},             {3, 9, 0, {"C1", "W4"}},  {4, 5, 0, {"C1", "W4"}},
            {4, 6, 8, {"C1", "W4"}},             {4, 7, 100, {"C1", "W4"}}, {4, 8, 419, {"C5"}},
        };
        for (const auto& row : rows) {
            auto sw = best_construction_sweep(row.q, row.n, mpz_class(static_cast<long>(solved(row.q, row.n).s)));
            std::string at = "(" + std::to_string(row.q) + "," + std::to_string(row.n) + ")";
            compare_entry(o, row.q, row.n, 'G', row.gap, *sw.gap);
            for (const auto& b : row.best) check(o, sw.best_set.count(b) != 0, b + " missing from best set at " + at);
        }
    });

    run(4, "closed forms, Blackburn k=3 optimum, optimal l", [&](Outcome& o) {
        for (int q = 2; q <= 6; ++q)
            for (int n = 2; n <= 4; ++n) {
                std::string at = "(" + std::to_string(q) + "," + std::to_string(n) + ")";
                SolverResult r = n >= 3 ? solved(q, n) : solve_sqn(q, n);
                if (n == 2) {
                    expand_optimal_set(r);
                    count_maximum(r);
                }
                check(o, s_closed(q, n) == r.s, "s_closed" + at);
                if (n >= 3) check(o, n_closed(q, n) == *r.count, "n_closed" + at);
            }
        for (int q = 4; q <= 12; ++q) {
            mpz_class best = 0;
            for (int l = 1; l < q; ++l) best = std::max(best, blackburn_size_ik(q, 4, 3, l));
            check(o, s_closed(q, 4) == best, "Blackburn k=3 at q=" + std::to_string(q));
        }
        for (int q = 2; q <= 40; ++q)
            for (int n = 2; n <= 20; ++n) {
                auto f = [&](std::int64_t l) -> mpz_class {
                    mpz_class v;
                    mpz_ui_pow_ui(v.get_mpz_t(), l, n - 1);
                    return v * (q - l);
                };
                mpz_class best = 0;
                for (int l = 1; l < q; ++l) best = std::max(best, f(l));
                check(o, f(blackburn_optimal_l(q, n)) == best,
                      "optimal l at (" + std::to_string(q) + "," + std::to_string(n) + ")");
            }
    });

    run(5, "oracle equivalence", [&](Outcome& o) {
        for (auto [q, n] : std::vector<std::pair<int, int>>{
                 {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 3}, {3, 4}, {3, 5}})
            check(o, s_oracle(q, n) == solved(q, n).s, "s_oracle(" + std::to_string(q) + "," + std::to_string(n) + ")");
        for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}})
            check(o, n_oracle(q, n).count == *solved(q, n).count,
                  "n_oracle(" + std::to_string(q) + "," + std::to_string(n) + ")");
        auto oracle = count_maximal_oracle(3, 4, MaximalMode::Partition);
        check(o, oracle == 156, "count_maximal_oracle(3,4) = " + oracle.get_str());
        check(o, count_maximal(3, 4) == oracle, "count_maximal(3,4)");
    });

    run(6, "property suites", [&](Outcome& o) {
        std::mt19937_64 rng(20240601);
        for (int q = 2; q <= 3; ++q)
            for (int n = 3; n <= 7; ++n)
                for (int t = 0; t < 10'000; ++t) {
                    auto pc = random_collection(q, n, rng);
                    Code c = generate_code(pc);
                    ++o.compared;
                    if (!is_nonoverlapping_code(c) ||
                        static_cast<std::int64_t>(c.size()) != size_from_profile(profile_of(pc))) {
                        o.mismatches.push_back("random collection at (" + std::to_string(q) + "," + std::to_string(n) + ")");
                        o.unexpected = true;
                    }
                }
        for (int n : {4, 6, 8})
            for_each_collection(2, n, [&](const PartitionCollection& pc) {
                check(o, is_maximal_structural(pc) == is_maximal_bruteforce(generate_code(pc)),
                      "structural vs brute force at n=" + std::to_string(n));
            });
        auto nonoverlap = [&](const Code& c, const std::string& what) { check(o, is_nonoverlapping_code(c), what); };
        for (int q = 2; q <= 4; ++q)
            for (int n = 2; n <= 8; ++n) {
                std::string at = "(" + std::to_string(q) + "," + std::to_string(n) + ")";
                for (int k = 1; k < n; ++k) {
                    nonoverlap(levenshtein_code(q, n, k), "Levenshtein " + at);
                    for (int l = 1; l < q; ++l)
                        if (blackburn_size_ik(q, n, k, l) <= 5000)
                            nonoverlap(blackburn_code(BlackburnParams::standard(q, n, k, l)), "Blackburn " + at);
                }
                if (n >= 3)
                    for (int a = 1; a < q; ++a) {
                        std::set<Symbol> I;
                        for (int i = 0; i < a; ++i) I.insert(static_cast<Symbol>(i));
                        nonoverlap(wang_lift(bilotta_code(n), q, I), "Wang lift " + at);
                    }
                if (q >= 3 && n >= 3) nonoverlap(barcucci_code(q, n), "colored Motzkin " + at);
            }
        for (int n = 3; n <= 12; ++n) nonoverlap(bilotta_code(n), "Bilotta n=" + std::to_string(n));
        for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 10}, {3, 6}, {4, 5}}) {
            std::vector<SolverResult> rs;
            for (int d = 0; d <= 2; ++d) {
                SolveOptions opt;
                opt.parallel_depth = d;
                auto r = solve_sqn(q, n, opt);
                expand_optimal_set(r);
                count_maximum(r);
                rs.push_back(std::move(r));
            }
            for (int d = 1; d <= 2; ++d)
                check(o,
                      rs[d].s == rs[0].s && rs[d].canonical_profiles == rs[0].canonical_profiles &&
                          rs[d].all_profiles == rs[0].all_profiles && rs[d].count == rs[0].count,
                      "parallel depth " + std::to_string(d) + " at (" + std::to_string(q) + "," + std::to_string(n) + ")");
        }
        for (const auto& [key, sv] : g_solved)
            check(o, sv.r.s <= levenshtein_upper_bound(key.first, key.second),
                  "upper bound at (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    });

    run(7, "duplicate handling for binary even lengths", [&](Outcome& o) {
        const auto& r4 = solved(2, 4);
        check(o, r4.count_raw == 8, "raw sum for (2,4) is " + r4.count_raw.get_str());
        check(o, r4.count_duplicates == 2, "duplicates for (2,4) are " + r4.count_duplicates.get_str());
        check(o, *r4.count == 6, "N(2,4) = " + r4.count->get_str());
        check(o, *solved(2, 6).count == 16, "N(2,6) = " + solved(2, 6).count->get_str());
    });

    std::cout << (g_all_expected ? "all mismatches are listed conflicts with published values" : "unexpected mismatches present")
              << std::endl;
    return g_all_expected ? 0 : 1;
}
