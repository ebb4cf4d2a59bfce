// SPDX-License-Identifier: MIT
#include "nono/core.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace nono {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}

void check_alphabet(int q) {
    if (q < 2 || q > kMaxAlphabet)
        throw InputError("alphabet size must be in 2.." + std::to_string(kMaxAlphabet) +
                         ", got " + std::to_string(q));
}

Code::Code(int q_, int n_) : q(q_), n(n_) {
    check_alphabet(q);
    if (n < 1) throw InputError("word length must be positive");
}

Code::Code(int q_, int n_, std::initializer_list<Word> ws) : Code(q_, n_) {
    for (const auto& w : ws) insert(w);
}

void Code::insert(const Word& w) {
    if (static_cast<int>(w.size()) != n)
        throw InputError("word " + word_to_string(w) + " has length " + std::to_string(w.size()) +
                         ", code length is " + std::to_string(n));
    for (Symbol s : w)
        if (s >= q) throw InputError("symbol " + std::to_string(s) + " not below q=" + std::to_string(q));
    words.insert(w);
}

bool is_nonoverlapping_pair(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw InputError("words differ in length");
    const std::size_t n = a.size();
    for (std::size_t k = 1; k < n; ++k) {
        if (std::equal(a.begin(), a.begin() + k, b.end() - k)) return false;
        if (std::equal(b.begin(), b.begin() + k, a.end() - k)) return false;
    }
    return true;
}

bool is_nonoverlapping_pair(const Word& a, const Word& b, int q) {
    check_alphabet(q);
    for (const Word* w : {&a, &b})
        for (Symbol s : *w)
            if (s >= q) throw InputError("symbol outside the alphabet");
    return is_nonoverlapping_pair(a, b);
}

namespace {

std::string key(const Word& w, std::size_t from, std::size_t len) {
    return std::string(reinterpret_cast<const char*>(w.data()) + from, len);
}

std::unordered_set<std::string> proper_prefixes(const Code& c) {
    std::unordered_set<std::string> out;
    for (const auto& w : c.words)
        for (int k = 1; k < c.n; ++k) out.insert(key(w, 0, k));
    return out;
}

std::unordered_set<std::string> proper_suffixes(const Code& c) {
    std::unordered_set<std::string> out;
    for (const auto& w : c.words)
        for (int k = 1; k < c.n; ++k) out.insert(key(w, c.n - k, k));
    return out;
}

}  // namespace

std::optional<std::pair<Word, Word>> first_overlapping_pair(const Code& c) {
    const auto pre = proper_prefixes(c);
    for (const auto& b : c.words) {
        for (int k = 1; k < c.n; ++k) {
            if (!pre.count(key(b, c.n - k, k))) continue;
            Word suf(b.end() - k, b.end());
            for (const auto& a : c.words)
                if (has_prefix(a, suf)) return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

bool is_nonoverlapping_code(const Code& c) {
    const auto pre = proper_prefixes(c);
    for (const auto& w : c.words)
        for (int k = 1; k < c.n; ++k)
            if (pre.count(key(w, c.n - k, k))) return false;
    return true;
}

std::optional<Word> extension_witness(const Code& c) {
    double space = 1;
    for (int i = 0; i < c.n; ++i) space *= c.q;
    if (space > double(1 << 24))
        throw ResourceError("q^n exceeds 2^24; brute-force maximality refused");
    if (!is_nonoverlapping_code(c)) throw InputError("code is not non-overlapping");

    const auto pre = proper_prefixes(c);
    const auto suf = proper_suffixes(c);
    Word w(c.n, 0);
    while (true) {
        if (!c.contains(w) && is_nonoverlapping_pair(w, w)) {
            bool ok = true;
            for (int k = 1; k < c.n && ok; ++k)
                ok = !suf.count(key(w, 0, k)) && !pre.count(key(w, c.n - k, k));
            if (ok) return w;
        }
        int pos = c.n - 1;
        while (pos >= 0 && w[pos] == c.q - 1) w[pos--] = 0;
        if (pos < 0) break;
        ++w[pos];
    }
    return std::nullopt;
}

bool is_maximal_bruteforce(const Code& c) { return !extension_witness(c).has_value(); }

std::string word_to_string(const Word& w) {
    bool digits = std::all_of(w.begin(), w.end(), [](Symbol s) { return s < 10; });
    return word_to_string(w, digits ? 10 : kMaxAlphabet);
}

std::string word_to_string(const Word& w, int q) {
    const bool digits = q <= 10;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!digits && i) out += '.';
        out += std::to_string(w[i]);
    }
    return out;
}

Word word_from_digits(std::string_view digits) {
    Word w;
    for (char ch : digits) {
        if (ch < '0' || ch > '9') throw InputError("not a digit word: " + std::string(digits));
        w.push_back(static_cast<Symbol>(ch - '0'));
    }
    return w;
}

Word word_from_string(std::string_view s, int q) {
    if (q <= 10) return word_from_digits(s);
    Word w;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find('.', start);
        if (end == std::string_view::npos) end = s.size();
        auto part = s.substr(start, end - start);
        if (part.empty()) throw InputError("empty symbol in " + std::string(s));
        int v = 0;
        for (char ch : part) {
            if (ch < '0' || ch > '9') throw InputError("bad symbol in " + std::string(s));
            v = v * 10 + (ch - '0');
            if (v >= kMaxAlphabet) throw InputError("symbol too large in " + std::string(s));
        }
        w.push_back(static_cast<Symbol>(v));
        start = end + 1;
    }
    return w;
}

Code read_code(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::optional<Code> code;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (!code) {
            int q = 0, n = 0;
            char tail = 0;
            if (std::sscanf(line.c_str() + first, "q=%d n=%d %c", &q, &n, &tail) != 2)
                throw ParseError(lineno, "expected header 'q=<int> n=<int>'");
            try {
                code.emplace(q, n);
            } catch (const InputError& e) {
                throw ParseError(lineno, e.what());
            }
            continue;
        }
        Word w;
        long v;
        while (ls >> v) {
            if (v < 0 || v >= code->q)
                throw ParseError(lineno, "symbol " + std::to_string(v) + " not below q=" +
                                             std::to_string(code->q));
            w.push_back(static_cast<Symbol>(v));
        }
        if (!ls.eof()) throw ParseError(lineno, "non-numeric token");
        if (static_cast<int>(w.size()) != code->n)
            throw ParseError(lineno, "word has " + std::to_string(w.size()) + " symbols, expected " +
                                         std::to_string(code->n));
        code->words.insert(std::move(w));
    }
    if (!code) throw ParseError(lineno, "missing header");
    return *code;
}

void write_code(const Code& c, std::ostream& out) {
    out << "q=" << c.q << " n=" << c.n << '\n';
    for (const auto& w : c.words) {
        for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << int(w[i]);
        out << '\n';
    }
}

Code read_code_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    return read_code(f);
}

Word concat(const Word& a, const Word& b) {
    Word w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

bool has_prefix(const Word& w, const Word& p) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool has_suffix(const Word& w, const Word& s) {
    return s.size() <= w.size() && std::equal(s.begin(), s.end(), w.end() - s.size());
}

}  // namespace nono
