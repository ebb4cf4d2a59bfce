// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nono/core.hpp"

namespace nono {

// Sizes x_i = |L_i|, y_i = |R_i| for levels 1..n-1. Index 0 is unused.
struct PartitionProfile {
    int q = 2;
    int n = 2;
    std::vector<std::int64_t> x, y;

    PartitionProfile() = default;
    PartitionProfile(int q, int n);
    // Convenience: levels given 1-based, as in x=(x_1,...,x_{n-1}).
    PartitionProfile(int q, int n, std::vector<std::int64_t> xs, std::vector<std::int64_t> ys);

    PartitionProfile swapped() const;
    auto operator<=>(const PartitionProfile&) const = default;
};

std::string profile_to_string(const PartitionProfile& p);

// s_i = sum_{j<i} x_j y_{i-j}; s_1 = q.
std::int64_t level_size(const PartitionProfile& p, int i);
bool is_feasible(const PartitionProfile& p);
std::int64_t size_from_profile(const PartitionProfile& p);

struct Level {
    std::set<Word> L, R;
    bool operator==(const Level&) const = default;
};

struct PartitionCollection {
    int q = 2;
    int n = 2;
    std::vector<Level> levels;  // index 1..n-1

    PartitionCollection() = default;
    PartitionCollection(int q, int n);
    Level& operator[](int i) { return levels.at(i); }
    const Level& operator[](int i) const { return levels.at(i); }
    bool operator==(const PartitionCollection&) const = default;
};

// Union of (L_j R_{i-j}) over j < i, or the alphabet when i = 1.
std::set<Word> concatenation_set(const PartitionCollection& pc, int i);
void validate(const PartitionCollection& pc);

Code generate_code(const PartitionCollection& pc);
PartitionProfile profile_of(const PartitionCollection& pc);

// Picks which k of the candidate words (given in canonical order) go to L.
using Chooser = std::function<std::set<Word>(const std::vector<Word>& candidates, std::int64_t k)>;
Chooser lexicographic_chooser();
Chooser random_chooser(std::uint64_t seed);

PartitionCollection instantiate_profile(const PartitionProfile& p,
                                        const Chooser& chooser = lexicographic_chooser());

struct DecompositionTrace {
    Word word;
    std::vector<std::string> steps;
};
DecompositionTrace decompose(const Word& w, const PartitionCollection& pc);

bool is_maximal_structural(const PartitionCollection& pc);
// Prefix-set collection of a code; nullopt when it does not regenerate c (c not maximal).
std::optional<PartitionCollection> partitions_of_maximal(const Code& c);

// Level assignments drawn with a per-level bias so that empty sides occur often.
PartitionCollection random_collection(int q, int n, std::mt19937_64& rng);

// Calls f for every collection over (q, n); returns the number visited.
std::uint64_t for_each_collection(int q, int n, const std::function<void(const PartitionCollection&)>& f);

PartitionCollection read_collection(std::istream& in);
void write_collection(const PartitionCollection& pc, std::ostream& out);

}  // namespace nono
