// SPDX-License-Identifier: MIT
#include "nono/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

#include "nono/formulas.hpp"

namespace nono {

namespace {

constexpr unsigned long kMaxMaterialized = 1ul << 24;

void require_materializable(const mpz_class& size) {
    if (size > kMaxMaterialized) throw ResourceError("code too large to materialize (" + size.get_str() + " words)");
}

mpz_class ipow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

void check_q(int q) {
    if (q < 2) throw InputError("alphabet size must be at least 2");
}

}  // namespace

RecurrenceTable fibonacci_table(int k, int q, int upto) {
    if (k < 1) throw InputError("k must be positive");
    check_q(q);
    RecurrenceTable t{k, q, {}};
    for (int i = 0; i <= upto; ++i) {
        if (i < k) {
            t.values.push_back(ipow(q, i));
        } else {
            mpz_class s = 0;
            for (int l = 1; l <= k; ++l) s += t.values[i - l];
            t.values.push_back((q - 1) * s);
        }
    }
    return t;
}

mpz_class levenshtein_size(int q, int n, int k) {
    check_q(q);
    if (n < 2 || k < 1 || k > n - 1) throw InputError("Levenshtein needs n > 1 and 1 <= k <= n-1");
    if (k == n - 1) return q - 1;
    if (k == 1) return ipow(q - 1, n - 1);
    return (q - 1) * (q - 1) * fibonacci_table(k, q, n - k - 2).values.back();
}

Code levenshtein_code(int q, int n, int k) {
    require_materializable(levenshtein_size(q, n, k));
    Code c(q, n);
    const int head = n - k;
    Word w(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int zeros) {
        if (pos == head) {
            c.insert(w);
            return;
        }
        for (int s = 0; s < q; ++s) {
            if (s == 0 && (pos == 0 || pos == head - 1 || zeros + 1 >= k)) continue;
            w[pos] = static_cast<Symbol>(s);
            rec(pos + 1, s == 0 ? zeros + 1 : 0);
        }
        w[pos] = 0;
    };
    rec(0, 0);
    return c;
}

std::pair<mpz_class, int> levenshtein_best(int q, int n) {
    std::pair<mpz_class, int> best{-1, 0};
    for (int k = 1; k < n; ++k) {
        mpz_class s = levenshtein_size(q, n, k);
        if (s > best.first) best = {s, k};
    }
    return best;
}

namespace {

// Paths of length len from height h back to 0 that never go below 0.
void motzkin_rec(int colors, int len, int h, Word& w, std::vector<Word>& out) {
    int pos = static_cast<int>(w.size());
    if (pos == len) {
        if (h == 0) out.push_back(w);
        return;
    }
    int rest = len - pos;
    if (h > rest) return;
    for (int s = 0; s < colors + 2; ++s) {
        int nh = h + (s == 1 ? 1 : s == 0 ? -1 : 0);
        if (nh < 0 || nh > rest - 1) continue;
        w.push_back(static_cast<Symbol>(s));
        motzkin_rec(colors, len, nh, w, out);
        w.pop_back();
    }
}

}  // namespace

std::vector<Word> motzkin_words(int colors, int len) {
    if (colors < 0 || len < 0) throw InputError("bad Motzkin parameters");
    std::vector<Word> out;
    Word w;
    motzkin_rec(colors, len, 0, w, out);
    return out;
}

std::vector<Word> elevated_motzkin_words(int colors, int len) {
    std::vector<Word> out;
    if (len < 2) return out;
    for (auto& a : motzkin_words(colors, len - 2)) {
        Word w{1};
        w.insert(w.end(), a.begin(), a.end());
        w.push_back(0);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Word> dyck_words(int len) { return motzkin_words(0, len); }

mpz_class catalan(int m) {
    if (m < 0) throw InputError("negative Catalan index");
    return binomial(2 * m, m) / (m + 1);
}

namespace {

// Motzkin words of length len in which every arch 1..0 is shorter than max_arch (0: no limit).
mpz_class motzkin_count_limited(int colors, int len, int max_arch) {
    std::vector<mpz_class> g(len + 1, 0);
    g[0] = 1;
    for (int m = 1; m <= len; ++m) {
        mpz_class v = colors * g[m - 1];
        for (int a = 0; a + 2 <= m; ++a) {
            if (max_arch > 0 && a + 2 >= max_arch) continue;
            v += g[a] * g[m - 2 - a];
        }
        g[m] = v;
    }
    return g[len];
}

}  // namespace

mpz_class motzkin_count(int colors, int len) {
    if (colors < 0 || len < 0) throw InputError("bad Motzkin parameters");
    return motzkin_count_limited(colors, len, 0);
}

Code bilotta_code(int n) {
    if (n < 3) throw InputError("Bilotta's construction needs n >= 3");
    const int m = (n - 1) / 2;
    require_materializable(catalan(m));
    Code c(2, n);
    for (const auto& a : dyck_words(2 * m)) {
        Word w{1};
        w.insert(w.end(), a.begin(), a.end());
        if (n % 2 == 0) w.push_back(0);
        c.insert(w);
    }
    return c;
}

Code wang_lift(const Code& s, int q, const std::set<Symbol>& I) {
    check_alphabet(q);
    if (s.q != 2) throw InputError("Wang lift needs a binary code");
    std::vector<Symbol> iv, jv;
    for (int a = 0; a < q; ++a) (I.count(static_cast<Symbol>(a)) ? iv : jv).push_back(static_cast<Symbol>(a));
    if (iv.empty() || jv.empty() || iv.size() + jv.size() != static_cast<std::size_t>(q) ||
        std::any_of(I.begin(), I.end(), [&](Symbol x) { return x >= q; }))
        throw InputError("Wang lift needs a partition of the alphabet into two nonempty parts");
    mpz_class total = 0;
    for (const auto& w : s.words) {
        long z = std::count(w.begin(), w.end(), Symbol{0});
        total += ipow(static_cast<unsigned long>(iv.size()), z) * ipow(static_cast<unsigned long>(jv.size()), w.size() - z);
    }
    require_materializable(total);
    Code out(q, s.n);
    for (const auto& w : s.words) {
        Word y(w.size());
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == w.size()) {
                out.insert(y);
                return;
            }
            for (Symbol v : (w[i] == 0 ? iv : jv)) {
                y[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }
    return out;
}

mpz_class wang_bilotta_size(int q, int n, int a) {
    check_q(q);
    if (n < 3) throw InputError("Bilotta's construction needs n >= 3");
    if (a < 1 || a >= q) throw InputError("|I| must be in 1..q-1");
    const int m = (n - 1) / 2;
    const int ones = m + 1;
    const int zeros = n - ones;
    return catalan(m) * ipow(a, zeros) * ipow(q - a, ones);
}

BlackburnParams BlackburnParams::standard(int q, int n, int k, int l) {
    BlackburnParams p;
    p.q = q;
    p.n = n;
    p.k = k;
    p.l = l;
    for (int a = 0; a < l; ++a) p.I.insert(static_cast<Symbol>(a));
    return p;
}

void validate(const BlackburnParams& p) {
    check_alphabet(p.q);
    if (p.n < 2 || p.k < 1 || p.k > p.n - 1) throw InputError("Blackburn needs 1 <= k <= n-1");
    if (p.l < 1 || p.l > p.q - 1) throw InputError("Blackburn needs 1 <= l <= q-1");
    if (static_cast<int>(p.I.size()) != p.l) throw InputError("|I| must equal l");
    for (Symbol s : p.I)
        if (s >= p.q) throw InputError("I is not a subset of the alphabet");
    if (p.S) {
        if (p.S->empty()) throw InputError("S must be nonempty");
        for (const auto& w : *p.S) {
            if (static_cast<int>(w.size()) != p.k) throw InputError("S words must have length k");
            for (Symbol s : w)
                if (!p.I.count(s)) throw InputError("S must be a subset of I^k");
        }
    }
}

mpz_class blackburn_size_ik(int q, int n, int k, int l) {
    check_q(q);
    if (n < 2 || k < 1 || k > n - 1 || l < 1 || l > q - 1) throw InputError("Blackburn parameters out of range");
    const mpz_class head = ipow(l, k);
    std::vector<mpz_class> c(n + 1, 0);
    for (int m = k + 1; m <= n; ++m) {
        if (m <= k + 2)
            c[m] = head * ipow(q - l, m - k);
        else
            c[m] = q * c[m - 1] - head * (q - l) * c[m - k - 1];
    }
    return c[n];
}

Code blackburn_code(const BlackburnParams& p) {
    validate(p);
    if (!p.S) require_materializable(blackburn_size_ik(p.q, p.n, p.k, p.l));
    std::vector<Symbol> jv;
    for (int a = 0; a < p.q; ++a)
        if (!p.I.count(static_cast<Symbol>(a))) jv.push_back(static_cast<Symbol>(a));
    std::vector<Word> heads;
    if (p.S) {
        heads.assign(p.S->begin(), p.S->end());
    } else {
        std::vector<Symbol> iv(p.I.begin(), p.I.end());
        Word h(p.k);
        std::function<void(int)> rec = [&](int i) {
            if (i == p.k) {
                heads.push_back(h);
                return;
            }
            for (Symbol s : iv) {
                h[i] = s;
                rec(i + 1);
            }
        };
        rec(0);
    }
    const int n = p.n, k = p.k;
    auto in_S = [&](const Word& w, int end) {  // window w[end-k+1..end]
        if (!p.S) {
            for (int i = end - k + 1; i <= end; ++i)
                if (!p.I.count(w[i])) return false;
            return true;
        }
        return p.S->count(Word(w.begin() + end - k + 1, w.begin() + end + 1)) != 0;
    };
    Code out(p.q, n);
    Word w(n);
    std::function<void(int)> rec = [&](int pos) {  // 0-based positions
        if (pos == n) {
            out.insert(w);
            return;
        }
        const bool must_j = pos == k || pos == n - 1;
        for (int s = 0; s < p.q; ++s) {
            if (must_j && p.I.count(static_cast<Symbol>(s))) continue;
            w[pos] = static_cast<Symbol>(s);
            // middle part is positions k+1 .. n-2
            if (pos >= k + 1 && pos <= n - 2 && pos - k + 1 >= k + 1 && in_S(w, pos)) continue;
            rec(pos + 1);
        }
    };
    for (const auto& h : heads) {
        std::copy(h.begin(), h.end(), w.begin());
        rec(k);
    }
    return out;
}

std::int64_t blackburn_optimal_l(std::int64_t q, int n) {
    if (q < 2 || n < 2) throw InputError("blackburn_optimal_l needs q >= 2 and n >= 2");
    const std::int64_t num = (n - 1) * q;
    const std::int64_t fl = num / n, m = num % n;
    if (m == 0) return fl;
    if (m == n - 1) return fl + 1;
    if (2 * m <= n) return fl;
    auto f = [&](std::int64_t l) -> mpz_class { return mpz_class(static_cast<long>(q - l)) * ipow(static_cast<unsigned long>(l), n - 1); };
    if (fl + 1 > q - 1) return fl;
    return f(fl + 1) > f(fl) ? fl + 1 : fl;
}

BarcucciParts barcucci_parts(int q, int n) {
    if (q < 3) throw InputError("the colored Motzkin construction needs q >= 3");
    if (n < 3) throw InputError("the colored Motzkin construction needs n >= 3");
    const int colors = q - 2;
    auto M = [&](int len) { return motzkin_count(colors, len); };
    auto E = [&](int len) { return len < 2 ? mpz_class(0) : M(len - 2); };
    BarcucciParts p;
    for (int i = 0; i <= n - 2 && 2 * i <= n; ++i) p.a += M(i) * E(n - i);
    if (n % 2 == 0) p.a -= E(n / 2) * E(n / 2);
    for (int i = 0; i <= n - 3; ++i)
        if (i < n - 1 - i) p.b += M(i) * E(n - 1 - i);
    p.c = motzkin_count_limited(colors, n - 1, (n + 1) / 2);
    return p;
}

mpz_class barcucci_size(int q, int n) { return barcucci_parts(q, n).total(); }

namespace {

bool has_long_arch(const Word& g, int min_len) {
    const int n = static_cast<int>(g.size());
    for (int a = 0; a < n; ++a) {
        if (g[a] != 1) continue;
        int h = 0;
        for (int b = a; b < n; ++b) {
            h += g[b] == 1 ? 1 : g[b] == 0 ? -1 : 0;
            if (h == 0) {
                if (b - a + 1 >= min_len) return true;
                break;
            }
        }
    }
    return false;
}

}  // namespace

Code barcucci_code(int q, int n) {
    require_materializable(barcucci_size(q, n));
    const int colors = q - 2;
    Code out(q, n);
    for (int i = 0; i <= n - 2 && 2 * i <= n; ++i) {
        auto alphas = motzkin_words(colors, i);
        auto betas = elevated_motzkin_words(colors, n - i);
        std::set<Word> elevated_alpha;
        if (2 * i == n)
            for (auto& e : elevated_motzkin_words(colors, i)) elevated_alpha.insert(e);
        for (const auto& a : alphas) {
            if (elevated_alpha.count(a)) continue;
            for (const auto& b : betas) out.insert(concat(a, b));
        }
    }
    for (int i = 0; i <= n - 3; ++i) {
        if (i >= n - 1 - i) continue;
        auto alphas = motzkin_words(colors, i);
        auto betas = elevated_motzkin_words(colors, n - 1 - i);
        for (const auto& a : alphas)
            for (const auto& b : betas) out.insert(concat(concat(Word{1}, a), b));
    }
    for (const auto& g : motzkin_words(colors, n - 1))
        if (!has_long_arch(g, (n + 1) / 2)) out.insert(concat(g, Word{0}));

    if (auto bad = first_overlapping_pair(out))
        throw ConstructionError("colored Motzkin code overlaps: " + word_to_string(bad->first, q) + " / " +
                                    word_to_string(bad->second, q),
                                bad);
    bool small = true;
    {
        mpz_class total = ipow(q, n);
        small = total <= kMaxMaterialized;
    }
    if (small) {
        if (auto w = extension_witness(out))
            throw ConstructionError("colored Motzkin code is not maximal: " + word_to_string(*w, q) + " can be added");
    } else if (!partitions_of_maximal(out)) {
        throw ConstructionError("colored Motzkin code is not maximal");
    }
    return out;
}

mpz_class levenshtein_upper_bound(int q, int n) {
    check_q(q);
    if (n < 2) throw InputError("upper bound needs n >= 2");
    mpz_class num = ipow(n - 1, n - 1) * ipow(q, n);
    mpz_class den = ipow(n, n);
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

bool is_wang_expressible(const Code& c, const PartitionCollection& pc) {
    if (pc.q != c.q || pc.n != c.n || generate_code(pc) != c) throw InputError("collection does not generate the code");
    const int n = c.n;
    int k = n - 1;
    for (int i = 2; i < n; ++i)
        if (!pc[i].L.empty()) {
            k = i - 1;
            break;
        }
    // Check the code has Blackburn's shape with I = L_1, J = R_1, S = the length-k heads.
    std::set<Symbol> I;
    for (const auto& w : pc[1].L) I.insert(w[0]);
    std::set<Word> S;
    for (const auto& w : c.words) S.insert(Word(w.begin(), w.begin() + k));
    for (const auto& w : c.words) {
        for (int i = 0; i < k; ++i)
            if (!I.count(w[i])) throw InputError("code is not of Blackburn's form");
        if (I.count(w[k]) || I.count(w[n - 1])) throw InputError("code is not of Blackburn's form");
        for (int end = k + 1 + k - 1; end <= n - 2; ++end)
            if (S.count(Word(w.begin() + end - k + 1, w.begin() + end + 1)))
                throw InputError("code is not of Blackburn's form");
    }
    if (k + 1 > n - 1) return true;
    return pc[k + 1].R.empty();
}

SweepRow best_construction_sweep(int q, int n, std::optional<mpz_class> s) {
    check_q(q);
    if (n < 2) throw InputError("sweep needs n >= 2");
    SweepRow row;
    row.q = q;
    row.n = n;
    row.s = s;
    {
        auto [size, k] = levenshtein_best(q, n);
        row.entries.push_back({"C1", "k=" + std::to_string(k), size});
    }
    if (n >= 3) {
        mpz_class best = -1;
        int arg = 0;
        for (int a = 1; a < q; ++a) {
            mpz_class v = wang_bilotta_size(q, n, a);
            if (v > best) {
                best = v;
                arg = a;
            }
        }
        row.entries.push_back({"W2", "|I|=" + std::to_string(arg), best});
    }
    {
        mpz_class best = -1;
        int bk = 0, bl = 0;
        for (int k = 1; k < n; ++k)
            for (int l = 1; l < q; ++l) {
                mpz_class v = blackburn_size_ik(q, n, k, l);
                if (v > best) {
                    best = v;
                    bk = k;
                    bl = l;
                }
            }
        row.entries.push_back({"W4", "k=" + std::to_string(bk) + " l=" + std::to_string(bl), best});
    }
    if (q >= 3 && n >= 3) row.entries.push_back({"C5", "-", barcucci_size(q, n)});
    row.best = -1;
    for (const auto& e : row.entries) row.best = std::max(row.best, e.size);
    for (const auto& e : row.entries)
        if (e.size == row.best) row.best_set.insert(e.construction);
    if (s) row.gap = *s - row.best;
    return row;
}

void write_sweep_csv_header(std::ostream& out) { out << "q,n,construction,params,size,gap\n"; }

void write_sweep_csv(const SweepRow& row, std::ostream& out) {
    for (const auto& e : row.entries) {
        out << row.q << ',' << row.n << ',' << e.construction << ',' << e.params << ',' << e.size << ',';
        if (row.s) out << (*row.s - e.size);
        out << '\n';
    }
}

}  // namespace nono
