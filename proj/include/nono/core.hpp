// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nono {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

constexpr int kMaxAlphabet = 256;

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& what);
};

void check_alphabet(int q);

// A set of equal-length words over {0..q-1}, kept in lexicographic order.
struct Code {
    int q = 2;
    int n = 1;
    std::set<Word> words;

    Code() = default;
    Code(int q, int n);
    Code(int q, int n, std::initializer_list<Word> ws);

    void insert(const Word& w);
    std::size_t size() const { return words.size(); }
    bool contains(const Word& w) const { return words.count(w) != 0; }
    bool operator==(const Code& o) const = default;
};

bool is_nonoverlapping_pair(const Word& a, const Word& b);
// Same check, additionally validating that every symbol is below q.
bool is_nonoverlapping_pair(const Word& a, const Word& b, int q);

// (a, b) such that a proper prefix of a equals a proper suffix of b.
std::optional<std::pair<Word, Word>> first_overlapping_pair(const Code& c);
bool is_nonoverlapping_code(const Code& c);

// A word that can be added to c, if any. Refuses when q^n > 2^24.
std::optional<Word> extension_witness(const Code& c);
bool is_maximal_bruteforce(const Code& c);

// Digits when every symbol is below 10, dot-separated decimals otherwise.
std::string word_to_string(const Word& w);
// Fixed notation per alphabet: digits for q <= 10, dot-separated decimals above.
std::string word_to_string(const Word& w, int q);
Word word_from_string(std::string_view s, int q);
Word word_from_digits(std::string_view digits);

Code read_code(std::istream& in);
void write_code(const Code& c, std::ostream& out);
Code read_code_file(const std::string& path);

// Helpers shared by the other modules.
Word concat(const Word& a, const Word& b);
bool has_prefix(const Word& w, const Word& p);
bool has_suffix(const Word& w, const Word& s);

}  // namespace nono
