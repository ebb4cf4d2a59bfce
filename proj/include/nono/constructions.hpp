// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nono/core.hpp"
#include "nono/partitions.hpp"

namespace nono {

// Raised when a construction's output fails its own validation.
struct ConstructionError : std::logic_error {
    std::optional<std::pair<Word, Word>> pair;
    ConstructionError(const std::string& what, std::optional<std::pair<Word, Word>> p = std::nullopt)
        : std::logic_error(what), pair(std::move(p)) {}
};

// F_{k,q}(i) = q^i for i < k, F(m) = (q-1) * sum_{l=1..k} F(m-l).
struct RecurrenceTable {
    int k = 1;
    int q = 2;
    std::vector<mpz_class> values;
};
RecurrenceTable fibonacci_table(int k, int q, int upto);

mpz_class levenshtein_size(int q, int n, int k);
Code levenshtein_code(int q, int n, int k);
// Largest size over k and the k attaining it (smallest such k).
std::pair<mpz_class, int> levenshtein_best(int q, int n);

// Dyck words over {0,1}: 1 opens, 0 closes.
std::vector<Word> dyck_words(int len);
mpz_class catalan(int m);

// Colored Motzkin words over {0..colors+1}: 1 up, 0 down, 2.. are flat colors.
std::vector<Word> motzkin_words(int colors, int len);
std::vector<Word> elevated_motzkin_words(int colors, int len);
mpz_class motzkin_count(int colors, int len);

Code bilotta_code(int n);
// Lift a binary code: 0 -> I, 1 -> J = complement of I.
Code wang_lift(const Code& s, int q, const std::set<Symbol>& I);
// Size of the lifted Bilotta code with |I| = a.
mpz_class wang_bilotta_size(int q, int n, int a);

struct BlackburnParams {
    int q = 2;
    int n = 2;
    int k = 1;
    int l = 1;
    std::set<Symbol> I;              // |I| = l; J is the complement
    std::optional<std::set<Word>> S;  // nullopt means S = I^k

    // I = {0..l-1}, S = I^k.
    static BlackburnParams standard(int q, int n, int k, int l);
};
void validate(const BlackburnParams& p);
Code blackburn_code(const BlackburnParams& p);
mpz_class blackburn_size_ik(int q, int n, int k, int l);
std::int64_t blackburn_optimal_l(std::int64_t q, int n);

// Number of elements (|A|, |B|, |C|) of the colored-Motzkin construction.
struct BarcucciParts {
    mpz_class a, b, c;
    mpz_class total() const { return a + b + c; }
};
BarcucciParts barcucci_parts(int q, int n);
mpz_class barcucci_size(int q, int n);
// Materializes and validates (non-overlap, maximality). Needs q >= 3.
Code barcucci_code(int q, int n);

mpz_class levenshtein_upper_bound(int q, int n);

// For a code from Blackburn's construction given with its collection: true iff R_{k+1} is empty.
bool is_wang_expressible(const Code& c, const PartitionCollection& pc);

struct SweepEntry {
    std::string construction;  // C1, W2, W4, C5
    std::string params;
    mpz_class size;
};
struct SweepRow {
    int q = 2;
    int n = 2;
    std::vector<SweepEntry> entries;
    std::optional<mpz_class> s;
    mpz_class best;
    std::set<std::string> best_set;
    std::optional<mpz_class> gap;
};
SweepRow best_construction_sweep(int q, int n, std::optional<mpz_class> s = std::nullopt);
void write_sweep_csv_header(std::ostream& out);
void write_sweep_csv(const SweepRow& row, std::ostream& out);

}  // namespace nono
