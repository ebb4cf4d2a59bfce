// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "nono/core.hpp"

namespace nono {

// Vertices are the self-non-overlapping words of length n; edges join
// mutually non-overlapping pairs.
struct ConflictGraph {
    int q = 2;
    int n = 1;
    std::vector<Word> vertices;
    std::vector<std::vector<std::uint64_t>> adj;  // bitset rows

    bool edge(std::size_t a, std::size_t b) const { return (adj[a][b >> 6] >> (b & 63)) & 1u; }
};

constexpr std::uint64_t kDefaultOracleCap = std::uint64_t(1) << 20;

ConflictGraph build_conflict_graph(int q, int n, std::uint64_t cap = kDefaultOracleCap);

std::int64_t s_oracle(int q, int n, std::uint64_t cap = kDefaultOracleCap);

struct MaximumCodes {
    std::int64_t size = 0;
    mpz_class count = 0;
    std::vector<Code> codes;  // filled while count <= list_limit
    bool listed_all = true;
};

MaximumCodes n_oracle(int q, int n, std::uint64_t cap = kDefaultOracleCap, std::size_t list_limit = 10'000);

enum class MaximalMode { Auto, Clique, Partition };

// Number of maximal codes. Clique mode needs q^n <= 3^5.
mpz_class count_maximal_oracle(int q, int n, MaximalMode mode = MaximalMode::Auto);

}  // namespace nono
