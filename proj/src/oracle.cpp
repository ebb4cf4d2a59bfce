// SPDX-License-Identifier: MIT
#include "nono/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "nono/partitions.hpp"

namespace nono {

namespace {

using Bits = std::vector<std::uint64_t>;

std::uint64_t power_capped(int q, int n, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) {
        if (v > cap / static_cast<std::uint64_t>(q)) return cap + 1;
        v *= static_cast<std::uint64_t>(q);
    }
    return v;
}

void set_bit(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t(1) << (i & 63); }
bool any(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

// Greedy coloring of the candidate set; returns vertices in color order with their color numbers.
void color_sort(const ConflictGraph& g, const Bits& cand, std::vector<std::size_t>& order,
                std::vector<int>& colors) {
    order.clear();
    colors.clear();
    Bits left = cand;
    int color = 0;
    while (any(left)) {
        ++color;
        Bits cls = left;
        for (std::size_t w = 0; w < cls.size(); ++w) {
            while (cls[w]) {
                std::size_t v = w * 64 + std::countr_zero(cls[w]);
                cls[w] &= cls[w] - 1;
                left[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
                order.push_back(v);
                colors.push_back(color);
                // remove neighbours of v from this color class
                for (std::size_t k = w; k < cls.size(); ++k) cls[k] &= ~g.adj[v][k];
            }
        }
    }
}

class CliqueSearch {
public:
    explicit CliqueSearch(const ConflictGraph& g) : g_(g), words_((g.vertices.size() + 63) / 64) {}

    std::int64_t maximum() {
        best_ = 0;
        counting_ = false;
        std::vector<std::size_t> cur;
        expand(all(), cur);
        return best_;
    }

    // Every clique of the given size; f receives the vertex list.
    void enumerate(std::int64_t size, const std::function<void(const std::vector<std::size_t>&)>& f) {
        best_ = size;
        counting_ = true;
        visit_ = f;
        std::vector<std::size_t> cur;
        expand(all(), cur);
    }

private:
    const ConflictGraph& g_;
    std::size_t words_;
    std::int64_t best_ = 0;
    bool counting_ = false;
    std::function<void(const std::vector<std::size_t>&)> visit_;

    Bits all() const {
        Bits b(words_, 0);
        for (std::size_t i = 0; i < g_.vertices.size(); ++i) set_bit(b, i);
        return b;
    }

    void expand(Bits cand, std::vector<std::size_t>& cur) {
        std::vector<std::size_t> order;
        std::vector<int> colors;
        color_sort(g_, cand, order, colors);
        for (std::size_t k = order.size(); k-- > 0;) {
            const std::int64_t bound = static_cast<std::int64_t>(cur.size()) + colors[k];
            if (counting_ ? bound < best_ : bound <= best_) return;
            std::size_t v = order[k];
            cur.push_back(v);
            Bits next(words_);
            for (std::size_t w = 0; w < words_; ++w) next[w] = cand[w] & g_.adj[v][w];
            const auto sz = static_cast<std::int64_t>(cur.size());
            if (!any(next)) {
                if (counting_) {
                    if (sz == best_) visit_(cur);
                } else if (sz > best_) {
                    best_ = sz;
                }
            } else if (counting_ && sz == best_) {
                visit_(cur);
            } else {
                expand(next, cur);
            }
            cur.pop_back();
            cand[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
        }
    }
};

}  // namespace

ConflictGraph build_conflict_graph(int q, int n, std::uint64_t cap) {
    check_alphabet(q);
    if (n < 1) throw InputError("n must be positive");
    const std::uint64_t total = power_capped(q, n, cap);
    if (total > cap) throw ResourceError("q^n exceeds the oracle cap");
    ConflictGraph g;
    g.q = q;
    g.n = n;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Word w(n);
        std::uint64_t t = idx;
        for (int i = n - 1; i >= 0; --i) {
            w[i] = static_cast<Symbol>(t % q);
            t /= q;
        }
        if (is_nonoverlapping_pair(w, w)) g.vertices.push_back(std::move(w));
    }
    const std::size_t V = g.vertices.size();
    g.adj.assign(V, Bits((V + 63) / 64, 0));
    for (std::size_t a = 0; a < V; ++a)
        for (std::size_t b = a + 1; b < V; ++b)
            if (is_nonoverlapping_pair(g.vertices[a], g.vertices[b])) {
                set_bit(g.adj[a], b);
                set_bit(g.adj[b], a);
            }
    return g;
}

std::int64_t s_oracle(int q, int n, std::uint64_t cap) {
    ConflictGraph g = build_conflict_graph(q, n, cap);
    return CliqueSearch(g).maximum();
}

MaximumCodes n_oracle(int q, int n, std::uint64_t cap, std::size_t list_limit) {
    ConflictGraph g = build_conflict_graph(q, n, cap);
    CliqueSearch cs(g);
    MaximumCodes out;
    out.size = cs.maximum();
    cs.enumerate(out.size, [&](const std::vector<std::size_t>& clique) {
        out.count += 1;
        if (out.codes.size() < list_limit) {
            Code c(q, n);
            for (auto v : clique) c.insert(g.vertices[v]);
            out.codes.push_back(std::move(c));
        } else {
            out.listed_all = false;
        }
    });
    std::sort(out.codes.begin(), out.codes.end(),
              [](const Code& a, const Code& b) { return a.words < b.words; });
    return out;
}

namespace {

// Bron-Kerbosch with pivoting over bitsets.
void bron_kerbosch(const ConflictGraph& g, Bits p, Bits x, mpz_class& count) {
    if (!any(p) && !any(x)) {
        count += 1;
        return;
    }
    const std::size_t W = p.size();
    std::size_t pivot = 0, best = 0;
    bool have = false;
    for (std::size_t w = 0; w < W; ++w) {
        std::uint64_t m = p[w] | x[w];
        while (m) {
            std::size_t u = w * 64 + std::countr_zero(m);
            m &= m - 1;
            std::size_t c = 0;
            for (std::size_t k = 0; k < W; ++k) c += std::popcount(p[k] & g.adj[u][k]);
            if (!have || c > best) {
                pivot = u;
                best = c;
                have = true;
            }
        }
    }
    Bits cand(W);
    for (std::size_t k = 0; k < W; ++k) cand[k] = p[k] & ~g.adj[pivot][k];
    for (std::size_t w = 0; w < W; ++w) {
        while (cand[w]) {
            std::size_t v = w * 64 + std::countr_zero(cand[w]);
            cand[w] &= cand[w] - 1;
            Bits np(W), nx(W);
            for (std::size_t k = 0; k < W; ++k) {
                np[k] = p[k] & g.adj[v][k];
                nx[k] = x[k] & g.adj[v][k];
            }
            bron_kerbosch(g, np, nx, count);
            p[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
            set_bit(x, v);
        }
    }
}

}  // namespace

mpz_class count_maximal_oracle(int q, int n, MaximalMode mode) {
    check_alphabet(q);
    if (mode == MaximalMode::Auto) mode = n >= 4 ? MaximalMode::Partition : MaximalMode::Clique;
    if (mode == MaximalMode::Clique) {
        if (power_capped(q, n, 243) > 243) throw ResourceError("clique enumeration of maximal codes needs q^n <= 243");
        ConflictGraph g = build_conflict_graph(q, n, 243);
        const std::size_t V = g.vertices.size();
        Bits p((V + 63) / 64, 0), x((V + 63) / 64, 0);
        for (std::size_t i = 0; i < V; ++i) set_bit(p, i);
        mpz_class count = 0;
        if (V) bron_kerbosch(g, p, x, count);
        return count;
    }
    if (n < 2) throw InputError("partition enumeration needs n >= 2");
    std::set<std::set<Word>> codes;
    for_each_collection(q, n, [&](const PartitionCollection& pc) {
        if (is_maximal_structural(pc)) codes.insert(generate_code(pc).words);
    });
    return mpz_class(static_cast<unsigned long>(codes.size()));
}

}  // namespace nono
