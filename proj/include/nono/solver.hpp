// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nono/partitions.hpp"

namespace nono {

// Per-level flags and conditions for the levels above n/2.
struct ConditionState {
    int n = 2;
    std::vector<int> delta_L;        // -1 unknown, else 0/1; index k in (n/2, n-1]
    std::vector<std::int64_t> c;     // c_i for the same range
    std::vector<std::vector<std::int64_t>> p;  // p[j][k] of the last evaluated anchor

    ConditionState() = default;
    explicit ConditionState(int n);
};

struct SolveOptions {
    int parallel_depth = 1;
    bool reduced = false;
    std::uint64_t node_cap = 0;  // 0: no cap
    double time_cap_s = 0;       // 0: no cap
};

struct SolverStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    double wall_ms = 0;
};

struct SolverResult {
    int q = 2;
    int n = 2;
    std::int64_t s = 0;
    std::set<PartitionProfile> canonical_profiles;
    std::set<PartitionProfile> all_profiles;
    bool expanded = false;
    std::optional<mpz_class> count;
    bool count_exact = true;  // false: count is an upper bound
    mpz_class count_raw = 0;         // sum over profiles before removing duplicates
    mpz_class count_duplicates = 0;  // codes reached from two profiles (q = 2, even n)
    bool reduced = false;
    bool complete = true;
    SolverStats stats;
};

// Row j of the coefficient table anchored at level `anchor`: p_{j,1..j}.
std::vector<std::int64_t> compute_parameters(int anchor, int j, const PartitionProfile& p, const ConditionState& st);
// Full table p[j][k] for 1 <= k <= j <= J.
std::vector<std::vector<std::int64_t>> coefficient_table(int anchor, int J, const PartitionProfile& p,
                                                         const ConditionState& st);

// Evaluates c_i and records delta_L[i] = (c_i >= 0).
std::int64_t compute_conditions(int i, const PartitionProfile& p, ConditionState& st);

void determine_upper_half(PartitionProfile& p, const ConditionState& st);

std::int64_t objective(const PartitionProfile& p);

// Levels above this index are forced to R_i = {} in reduced mode.
bool reduced_forces_left(int q, int n, int i);

SolverResult solve_sqn(int q, int n, const SolveOptions& opt = {});

// Fills all_profiles. Throws ResourceError past max_profiles.
void expand_optimal_set(SolverResult& r, std::size_t max_profiles = 5'000'000);

struct CountOptions {
    std::uint64_t dup_budget = 50'000'000;  // DFS steps for the duplicate term
};

// Exact N(q,n) from all_profiles. Sets r.count and r.count_exact.
mpz_class count_maximum(SolverResult& r, const CountOptions& opt = {});

Code materialize_maximum(int q, int n, const PartitionProfile& p, const Chooser& chooser = lexicographic_chooser());

}  // namespace nono
