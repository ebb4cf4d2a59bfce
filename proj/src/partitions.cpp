// SPDX-License-Identifier: MIT
#include "nono/partitions.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <istream>
#include <ostream>
#include <sstream>

#include "nono/checked.hpp"

namespace nono {

PartitionProfile::PartitionProfile(int q_, int n_) : q(q_), n(n_), x(n_, 0), y(n_, 0) {
    check_alphabet(q);
    if (n < 2) throw InputError("profiles need n >= 2");
}

PartitionProfile::PartitionProfile(int q_, int n_, std::vector<std::int64_t> xs,
                                   std::vector<std::int64_t> ys)
    : PartitionProfile(q_, n_) {
    if (static_cast<int>(xs.size()) != n - 1 || static_cast<int>(ys.size()) != n - 1)
        throw InputError("profile vectors must have n-1 entries");
    std::copy(xs.begin(), xs.end(), x.begin() + 1);
    std::copy(ys.begin(), ys.end(), y.begin() + 1);
}

PartitionProfile PartitionProfile::swapped() const {
    PartitionProfile p = *this;
    std::swap(p.x, p.y);
    return p;
}

std::string profile_to_string(const PartitionProfile& p) {
    std::ostringstream os;
    auto vec = [&](const std::vector<std::int64_t>& v) {
        os << '(';
        for (int i = 1; i < p.n; ++i) os << (i > 1 ? "," : "") << v[i];
        os << ')';
    };
    os << "x=";
    vec(p.x);
    os << " y=";
    vec(p.y);
    return os.str();
}

std::int64_t level_size(const PartitionProfile& p, int i) {
    if (i == 1) return p.q;
    std::int64_t s = 0;
    for (int j = 1; j < i; ++j) s = checked::add(s, checked::mul(p.x[j], p.y[i - j]));
    return s;
}

bool is_feasible(const PartitionProfile& p) {
    if (p.n < 2 || static_cast<int>(p.x.size()) != p.n || static_cast<int>(p.y.size()) != p.n)
        return false;
    if (p.x[1] < 1 || p.y[1] < 1) return false;
    for (int i = 1; i < p.n; ++i) {
        if (p.x[i] < 0 || p.y[i] < 0) return false;
        if (p.x[i] + p.y[i] != level_size(p, i)) return false;
    }
    return true;
}

std::int64_t size_from_profile(const PartitionProfile& p) {
    if (!is_feasible(p)) throw InputError("infeasible profile " + profile_to_string(p));
    std::int64_t s = 0;
    for (int i = 1; i < p.n; ++i) s = checked::add(s, checked::mul(p.x[i], p.y[p.n - i]));
    return s;
}

PartitionCollection::PartitionCollection(int q_, int n_) : q(q_), n(n_), levels(n_) {
    check_alphabet(q);
    if (n < 2) throw InputError("collections need n >= 2");
}

std::set<Word> concatenation_set(const PartitionCollection& pc, int i) {
    std::set<Word> out;
    if (i == 1) {
        for (int a = 0; a < pc.q; ++a) out.insert(Word{static_cast<Symbol>(a)});
        return out;
    }
    for (int j = 1; j < i; ++j)
        for (const auto& l : pc[j].L)
            for (const auto& r : pc[i - j].R) out.insert(concat(l, r));
    return out;
}

void validate(const PartitionCollection& pc) {
    check_alphabet(pc.q);
    if (pc.n < 2 || static_cast<int>(pc.levels.size()) != pc.n)
        throw InputError("collection must have levels 1..n-1");
    if (pc[1].L.empty() || pc[1].R.empty()) throw InputError("level 1 sides must be non-empty");
    for (int i = 1; i < pc.n; ++i) {
        const auto& lv = pc[i];
        for (const auto& w : lv.L)
            if (lv.R.count(w)) throw InputError("level " + std::to_string(i) + " sides intersect");
        std::set<Word> both = lv.L;
        both.insert(lv.R.begin(), lv.R.end());
        if (both != concatenation_set(pc, i))
            throw InputError("level " + std::to_string(i) + " does not partition its concatenation set");
    }
}

Code generate_code(const PartitionCollection& pc) {
    validate(pc);
    Code c(pc.q, pc.n);
    for (int i = 1; i < pc.n; ++i)
        for (const auto& l : pc[i].L)
            for (const auto& r : pc[pc.n - i].R) c.words.insert(concat(l, r));
    return c;
}

PartitionProfile profile_of(const PartitionCollection& pc) {
    PartitionProfile p(pc.q, pc.n);
    for (int i = 1; i < pc.n; ++i) {
        p.x[i] = static_cast<std::int64_t>(pc[i].L.size());
        p.y[i] = static_cast<std::int64_t>(pc[i].R.size());
    }
    return p;
}

Chooser lexicographic_chooser() {
    return [](const std::vector<Word>& cand, std::int64_t k) {
        return std::set<Word>(cand.begin(), cand.begin() + k);
    };
}

Chooser random_chooser(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](const std::vector<Word>& cand, std::int64_t k) {
        std::vector<Word> pool = cand;
        std::shuffle(pool.begin(), pool.end(), *rng);
        return std::set<Word>(pool.begin(), pool.begin() + k);
    };
}

PartitionCollection instantiate_profile(const PartitionProfile& p, const Chooser& chooser) {
    if (!is_feasible(p)) throw InputError("infeasible profile " + profile_to_string(p));
    PartitionCollection pc(p.q, p.n);
    for (int i = 1; i < p.n; ++i) {
        auto s = concatenation_set(pc, i);
        std::vector<Word> cand(s.begin(), s.end());
        pc[i].L = chooser(cand, p.x[i]);
        for (const auto& w : cand)
            if (!pc[i].L.count(w)) pc[i].R.insert(w);
    }
    return pc;
}

DecompositionTrace decompose(const Word& w, const PartitionCollection& pc) {
    DecompositionTrace t{w, {}};
    if (w.empty()) throw InputError("empty word");
    std::string cur;
    std::vector<Word> seg;
    for (Symbol s : w) {
        Word a{s};
        if (pc[1].L.count(a))
            cur += 'l';
        else if (pc[1].R.count(a))
            cur += 'r';
        else
            throw InputError("letter outside L_1 and R_1");
        seg.push_back(a);
    }
    t.steps.push_back(cur);
    while (cur.size() > 2 || (cur.size() == 2 && cur != "lr")) {
        std::string next;
        std::vector<Word> nseg;
        bool changed = false;
        for (std::size_t k = 0; k < cur.size(); ++k) {
            if (k + 1 < cur.size() && cur[k] == 'l' && cur[k + 1] == 'r') {
                Word sub = concat(seg[k], seg[k + 1]);
                const int len = static_cast<int>(sub.size());
                if (len >= pc.n)
                    throw InputError("subword " + word_to_string(sub) + " is longer than n-1");
                if (pc[len].L.count(sub))
                    next += 'l';
                else if (pc[len].R.count(sub))
                    next += 'r';
                else
                    throw InputError("subword " + word_to_string(sub) + " lies in neither L_" +
                                     std::to_string(len) + " nor R_" + std::to_string(len));
                nseg.push_back(std::move(sub));
                ++k;
                changed = true;
            } else {
                next += cur[k];
                nseg.push_back(seg[k]);
            }
        }
        if (!changed) break;
        cur = std::move(next);
        seg = std::move(nseg);
        t.steps.push_back(cur);
    }
    return t;
}

namespace {

std::set<Word> prefixes_of(const Code& c) {
    std::set<Word> out;
    for (const auto& w : c.words)
        for (int k = 1; k < c.n; ++k) out.insert(Word(w.begin(), w.begin() + k));
    return out;
}

std::set<Word> suffixes_of(const Code& c) {
    std::set<Word> out;
    for (const auto& w : c.words)
        for (int k = 1; k < c.n; ++k) out.insert(Word(w.end() - k, w.end()));
    return out;
}

bool prefix_in_set(const Word& x, const std::set<Word>& s) {
    auto it = s.lower_bound(x);
    return it != s.end() && has_prefix(*it, x);
}

bool suffix_in_set(const Word& x, const std::set<Word>& s) {
    for (const auto& w : s)
        if (has_suffix(w, x)) return true;
    return false;
}

std::set<Word> product(const std::set<Word>& a, const std::set<Word>& b) {
    std::set<Word> out;
    for (const auto& u : a)
        for (const auto& v : b) out.insert(concat(u, v));
    return out;
}

bool all_in(const std::set<Word>& words, const std::set<Word>& pool) {
    return std::all_of(words.begin(), words.end(), [&](const Word& w) { return pool.count(w) != 0; });
}

}  // namespace

bool is_maximal_structural(const PartitionCollection& pc) {
    const Code c = generate_code(pc);
    const int n = pc.n;
    const auto pre = prefixes_of(c);
    const auto suf = suffixes_of(c);
    const bool binary_even = pc.q == 2 && n % 2 == 0;
    const int m = n / 2;

    // (i) and (ii)
    for (int i = 1; i < n; ++i) {
        const auto& L = pc[i].L;
        if (!L.empty() && pc[n - i].R.empty() && !(binary_even && i == m && L.size() == 1)) {
            for (const auto& x : L) {
                bool found = false;
                for (int j = i + 1; j < n && !found; ++j)
                    if (!pc[n - j].R.empty()) found = prefix_in_set(x, pc[j].L);
                if (!found) return false;
            }
        }
        const auto& R = pc[i].R;
        if (!R.empty() && pc[n - i].L.empty() && !(binary_even && i == m && R.size() == 1)) {
            for (const auto& x : R) {
                bool found = false;
                for (int j = i + 1; j < n && !found; ++j)
                    if (!pc[n - j].L.empty()) found = suffix_in_set(x, pc[j].R);
                if (!found) return false;
            }
        }
    }
    if (!binary_even) return true;

    // (iii)
    if (pc[m].L.size() == 1 && !pre.count(*pc[m].L.begin())) {
        const auto& Lm = pc[m].L;
        for (int j = 2; j <= m - 2; ++j)
            if (!pc[j].L.empty() && !all_in(product(pc[j].L, Lm), pre)) return false;
        bool first = all_in(product(pc[1].L, Lm), pre);
        if (!first) {
            bool alt = m - 1 >= 1 && pc[m - 1].L.empty();
            for (int j = 1; j <= m - 2 && alt; ++j)
                if (!pc[j].L.empty()) alt = all_in(product(pc[j].L, product(pc[1].L, Lm)), pre);
            if (!alt) return false;
        }
    }
    // (iv)
    if (pc[m].R.size() == 1 && !suf.count(*pc[m].R.begin())) {
        const auto& Rm = pc[m].R;
        for (int j = 2; j <= m - 2; ++j)
            if (!pc[j].R.empty() && !all_in(product(Rm, pc[j].R), suf)) return false;
        bool first = all_in(product(Rm, pc[1].R), suf);
        if (!first) {
            bool alt = m - 1 >= 1 && pc[m - 1].R.empty();
            for (int j = 1; j <= m - 2 && alt; ++j)
                if (!pc[j].R.empty()) alt = all_in(product(product(Rm, pc[1].R), pc[j].R), suf);
            if (!alt) return false;
        }
    }
    return true;
}

std::optional<PartitionCollection> partitions_of_maximal(const Code& c) {
    if (c.n < 2 || c.words.empty()) return std::nullopt;
    const auto pre = prefixes_of(c);
    PartitionCollection pc(c.q, c.n);
    for (int a = 0; a < c.q; ++a) {
        Word w{static_cast<Symbol>(a)};
        bool starts = std::any_of(c.words.begin(), c.words.end(),
                                  [&](const Word& cw) { return cw[0] == a; });
        (starts ? pc[1].L : pc[1].R).insert(w);
    }
    if (pc[1].L.empty() || pc[1].R.empty()) return std::nullopt;
    for (int i = 2; i < c.n; ++i)
        for (const auto& w : concatenation_set(pc, i)) (pre.count(w) ? pc[i].L : pc[i].R).insert(w);
    if (generate_code(pc) != c) return std::nullopt;
    return pc;
}

PartitionCollection random_collection(int q, int n, std::mt19937_64& rng) {
    PartitionCollection pc(q, n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Word> letters;
    for (int a = 0; a < q; ++a) letters.push_back(Word{static_cast<Symbol>(a)});
    std::shuffle(letters.begin(), letters.end(), rng);
    const int cut = std::uniform_int_distribution<int>(1, q - 1)(rng);
    for (int a = 0; a < q; ++a) (a < cut ? pc[1].L : pc[1].R).insert(letters[a]);
    const double biases[] = {0.0, 1.0, 0.5};
    for (int i = 2; i < n; ++i) {
        const int kind = std::uniform_int_distribution<int>(0, 3)(rng);
        const double bias = kind < 3 ? biases[kind] : unit(rng);
        for (const auto& w : concatenation_set(pc, i)) (unit(rng) < bias ? pc[i].L : pc[i].R).insert(w);
    }
    return pc;
}

namespace {

void enumerate_from(PartitionCollection& pc, int i, std::uint64_t& count,
                    const std::function<void(const PartitionCollection&)>& f) {
    if (i == pc.n) {
        ++count;
        f(pc);
        return;
    }
    auto s = concatenation_set(pc, i);
    std::vector<Word> cand(s.begin(), s.end());
    if (cand.size() > 40) throw ResourceError("level too large to enumerate exhaustively");
    const std::uint64_t total = std::uint64_t{1} << cand.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (i == 1 && (mask == 0 || mask == total - 1)) continue;
        pc[i] = Level{};
        for (std::size_t k = 0; k < cand.size(); ++k) ((mask >> k) & 1 ? pc[i].L : pc[i].R).insert(cand[k]);
        enumerate_from(pc, i + 1, count, f);
    }
    pc[i] = Level{};
}

}  // namespace

std::uint64_t for_each_collection(int q, int n,
                                  const std::function<void(const PartitionCollection&)>& f) {
    PartitionCollection pc(q, n);
    std::uint64_t count = 0;
    enumerate_from(pc, 1, count, f);
    return count;
}

PartitionCollection read_collection(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::optional<PartitionCollection> pc;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        line = line.substr(first);
        if (!pc) {
            int q = 0, n = 0;
            if (std::sscanf(line.c_str(), "q=%d n=%d", &q, &n) != 2)
                throw ParseError(lineno, "expected header 'q=<int> n=<int>'");
            try {
                pc.emplace(q, n);
            } catch (const InputError& e) {
                throw ParseError(lineno, e.what());
            }
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos || colon < 2 || (line[0] != 'L' && line[0] != 'R'))
            throw ParseError(lineno, "expected 'L<i>: ...' or 'R<i>: ...'");
        int level = 0;
        try {
            level = std::stoi(line.substr(1, colon - 1));
        } catch (...) {
            throw ParseError(lineno, "bad level index");
        }
        if (level < 1 || level >= pc->n) throw ParseError(lineno, "level index out of range");
        auto& side = line[0] == 'L' ? (*pc)[level].L : (*pc)[level].R;
        std::string body = line.substr(colon + 1);
        body.erase(std::remove(body.begin(), body.end(), ' '), body.end());
        if (body == "-" || body.empty()) continue;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            Word w;
            try {
                w = word_from_string(tok, pc->q);
            } catch (const InputError& e) {
                throw ParseError(lineno, e.what());
            }
            if (static_cast<int>(w.size()) != level)
                throw ParseError(lineno, "word " + tok + " has wrong length for level " + std::to_string(level));
            for (Symbol s : w)
                if (s >= pc->q) throw ParseError(lineno, "symbol not below q in " + tok);
            side.insert(w);
        }
    }
    if (!pc) throw ParseError(lineno, "missing header");
    return *pc;
}

void write_collection(const PartitionCollection& pc, std::ostream& out) {
    out << "q=" << pc.q << " n=" << pc.n << '\n';
    auto side = [&](char tag, int i, const std::set<Word>& s) {
        out << tag << i << ": ";
        if (s.empty()) out << '-';
        bool first = true;
        for (const auto& w : s) {
            out << (first ? "" : ",") << word_to_string(w, pc.q);
            first = false;
        }
        out << '\n';
    };
    for (int i = 1; i < pc.n; ++i) {
        side('L', i, pc[i].L);
        side('R', i, pc[i].R);
    }
}

}  // namespace nono
