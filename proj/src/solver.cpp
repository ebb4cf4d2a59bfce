// SPDX-License-Identifier: MIT
#include "nono/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <stdexcept>

#include "nono/checked.hpp"

namespace nono {

using checked::add;
using checked::mul;
using checked::sub;

ConditionState::ConditionState(int n_) : n(n_), delta_L(n_, -1), c(n_, 0) {}

namespace {

int delta_at(const ConditionState& st, int k) {
    if (k <= st.n / 2 || k >= st.n) throw std::logic_error("delta requested outside the upper half");
    int d = st.delta_L[k];
    if (d < 0) throw std::logic_error("delta at level " + std::to_string(k) + " not yet known");
    return d;
}

// delta_L * y_idx + delta_R * x_idx
std::int64_t side_size(const PartitionProfile& p, const ConditionState& st, int level, int idx) {
    return delta_at(st, level) ? p.y[idx] : p.x[idx];
}

}  // namespace

std::vector<std::vector<std::int64_t>> coefficient_table(int anchor, int J, const PartitionProfile& p,
                                                         const ConditionState& st) {
    std::vector<std::vector<std::int64_t>> t(J + 1, std::vector<std::int64_t>(J + 1, 0));
    for (int j = 1; j <= J; ++j) {
        t[j][j] = 1;
        for (int k = 1; k < j; ++k) {
            std::int64_t v = 0;
            for (int m = k; m < j; ++m) {
                if (t[m][k] == 0) continue;
                v = add(v, mul(side_size(p, st, anchor + m, j - m), t[m][k]));
            }
            t[j][k] = v;
        }
    }
    return t;
}

std::vector<std::int64_t> compute_parameters(int anchor, int j, const PartitionProfile& p, const ConditionState& st) {
    return coefficient_table(anchor, j, p, st)[j];
}

std::int64_t compute_conditions(int i, const PartitionProfile& p, ConditionState& st) {
    const int n = st.n;
    if (i <= n / 2 || i >= n) throw std::logic_error("condition requested outside the upper half");
    const int J = n - 1 - i;
    st.p = coefficient_table(i, J, p, st);
    std::int64_t c = sub(p.y[n - i], p.x[n - i]);
    for (int j = 1; j <= J; ++j) {
        std::int64_t inner = 0;
        for (int l = 1; l <= j; ++l) inner = add(inner, mul(st.p[j][l], sub(p.y[l], p.x[l])));
        c = add(c, mul(side_size(p, st, i + j, n - i - j), inner));
    }
    st.c[i] = c;
    st.delta_L[i] = c >= 0 ? 1 : 0;
    return c;
}

void determine_upper_half(PartitionProfile& p, const ConditionState& st) {
    for (int i = p.n / 2 + 1; i < p.n; ++i) {
        std::int64_t s = level_size(p, i);
        if (delta_at(st, i)) {
            p.x[i] = s;
            p.y[i] = 0;
        } else {
            p.x[i] = 0;
            p.y[i] = s;
        }
    }
}

std::int64_t objective(const PartitionProfile& p) {
    std::int64_t s = 0;
    for (int i = 1; i < p.n; ++i) s = add(s, mul(p.x[i], p.y[p.n - i]));
    return s;
}

bool reduced_forces_left(int q, int n, int i) {
    // i > n/(q+1) + 1
    return static_cast<std::int64_t>(i) * (q + 1) > static_cast<std::int64_t>(n) + q + 1;
}

namespace {

struct Partial {
    std::int64_t best = -1;
    std::set<PartitionProfile> argmax;
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;

    void offer(const PartitionProfile& p, std::int64_t v) {
        if (v > best) {
            best = v;
            argmax.clear();
        }
        if (v == best) argmax.insert(p);
    }
    void merge(Partial&& o) {
        nodes += o.nodes;
        leaves += o.leaves;
        if (o.best > best) {
            best = o.best;
            argmax = std::move(o.argmax);
        } else if (o.best == best) {
            argmax.merge(o.argmax);
        }
    }
};

class Search {
public:
    Search(int q, int n, const SolveOptions& opt)
        : q_(q), n_(n), half_(n / 2), opt_(opt), start_(std::chrono::steady_clock::now()) {}

    Partial run() {
        PartitionProfile p(q_, n_);
        ConditionState st(n_);
        Partial out;
        std::vector<std::int64_t> xs;
        for (std::int64_t v = q_ / 2; v >= 1; --v) xs.push_back(v);
        branch_values(1, xs, p, st, out);
        return out;
    }

    bool aborted() const { return abort_.load(); }

private:
    int q_, n_, half_;
    SolveOptions opt_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> total_nodes_{0};
    std::atomic<bool> abort_{false};

    bool tick() {
        std::uint64_t k = ++total_nodes_;
        if (opt_.node_cap && k > opt_.node_cap) abort_ = true;
        if (opt_.time_cap_s > 0 && (k & 1023) == 0) {
            std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
            if (el.count() > opt_.time_cap_s) abort_ = true;
        }
        return !abort_.load(std::memory_order_relaxed);
    }

    void set_level(int i, std::int64_t xi, std::int64_t si, PartitionProfile& p, ConditionState& st) {
        p.x[i] = xi;
        p.y[i] = si - xi;
        if (2 * i < n_) {
            int up = n_ - i;
            compute_conditions(up, p, st);
            if (opt_.reduced && reduced_forces_left(q_, n_, up)) st.delta_L[up] = 1;
        }
    }

    void leaf(PartitionProfile& p, const ConditionState& st, Partial& out) {
        determine_upper_half(p, st);
        ++out.leaves;
        out.offer(p, objective(p));
    }

    std::vector<std::int64_t> candidates(int i, const PartitionProfile& p) const {
        std::int64_t s = level_size(p, i);
        std::vector<std::int64_t> xs;
        if (opt_.reduced && reduced_forces_left(q_, n_, i)) {
            xs.push_back(s);
            return xs;
        }
        bool symmetric = true;
        for (int k = 1; k < i && symmetric; ++k) symmetric = p.x[k] == p.y[k];
        std::int64_t hi = symmetric ? s / 2 : s;
        for (std::int64_t v = hi; v >= 0; --v) xs.push_back(v);
        return xs;
    }

    void branch_values(int i, const std::vector<std::int64_t>& xs, PartitionProfile& p, ConditionState& st,
                       Partial& out) {
        std::int64_t s = level_size(p, i);
        if (i < opt_.parallel_depth && xs.size() > 1) {
            std::vector<std::future<Partial>> fs;
            for (std::int64_t v : xs) {
                fs.push_back(std::async(std::launch::async, [this, i, v, s, p, st]() mutable {
                    Partial part;
                    set_level(i, v, s, p, st);
                    descend(i, p, st, part);
                    return part;
                }));
            }
            for (auto& f : fs) out.merge(f.get());
            return;
        }
        for (std::int64_t v : xs) {
            if (aborted()) return;
            set_level(i, v, s, p, st);
            descend(i, p, st, out);
        }
    }

    void descend(int i, PartitionProfile& p, ConditionState& st, Partial& out) {
        ++out.nodes;
        if (!tick()) return;
        if (i == half_) {
            PartitionProfile leaf_p = p;
            leaf(leaf_p, st, out);
            return;
        }
        auto xs = candidates(i + 1, p);
        branch_values(i + 1, xs, p, st, out);
        p.x[i + 1] = p.y[i + 1] = 0;
    }
};

}  // namespace

SolverResult solve_sqn(int q, int n, const SolveOptions& opt) {
    check_alphabet(q);
    if (n < 2) throw InputError("n must be at least 2");
    if (opt.parallel_depth < 0) throw InputError("parallel depth must be nonnegative");
    auto t0 = std::chrono::steady_clock::now();
    Search search(q, n, opt);
    Partial part = search.run();
    SolverResult r;
    r.q = q;
    r.n = n;
    r.s = part.best;
    r.canonical_profiles = std::move(part.argmax);
    r.reduced = opt.reduced;
    r.complete = !search.aborted();
    r.stats.nodes = part.nodes;
    r.stats.leaves = part.leaves;
    r.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

namespace {

PartitionProfile lower_half(const PartitionProfile& p) {
    PartitionProfile h = p;
    for (int i = p.n / 2 + 1; i < p.n; ++i) h.x[i] = h.y[i] = 0;
    return h;
}

void swap_levels(PartitionProfile& p, int from, int to) {
    for (int k = from; k <= to; ++k) std::swap(p.x[k], p.y[k]);
}

// Every completion of a lower half that keeps the objective: forced sides where c != 0, free split where c = 0.
void complete_upper(PartitionProfile& p, const std::vector<std::int64_t>& c, int i, std::int64_t s,
                    std::set<PartitionProfile>& out, std::size_t cap) {
    if (i == p.n) {
        if (objective(p) != s) throw std::logic_error("expansion produced a profile off the optimum");
        out.insert(p);
        if (out.size() > cap) throw ResourceError("optimal profile set exceeds the expansion cap");
        return;
    }
    std::int64_t si = level_size(p, i);
    std::int64_t lo = 0, hi = si;
    if (c[i] > 0) lo = si;
    if (c[i] < 0) hi = 0;
    for (std::int64_t v = lo; v <= hi; ++v) {
        p.x[i] = v;
        p.y[i] = si - v;
        complete_upper(p, c, i + 1, s, out, cap);
    }
    p.x[i] = p.y[i] = 0;
}

}  // namespace

void expand_optimal_set(SolverResult& r, std::size_t max_profiles) {
    const int n = r.n, half = n / 2;
    std::set<PartitionProfile> lows;
    std::vector<PartitionProfile> work;
    auto push = [&](const PartitionProfile& h) {
        if (lows.insert(h).second) work.push_back(h);
    };
    for (const auto& p : r.canonical_profiles) push(lower_half(p));
    while (!work.empty()) {
        PartitionProfile h = work.back();
        work.pop_back();
        PartitionProfile full = h;
        swap_levels(full, 1, half);
        push(full);
        for (int i = 1; i < half; ++i) {
            if (h.x[i] != h.y[i]) break;
            PartitionProfile t = h;
            swap_levels(t, i + 1, half);
            push(t);
        }
    }
    r.all_profiles.clear();
    for (const auto& h : lows) {
        ConditionState st(n);
        for (int i = n - 1; i > half; --i) compute_conditions(i, h, st);
        PartitionProfile p = h;
        complete_upper(p, st.c, half + 1, r.s, r.all_profiles, max_profiles);
    }
    r.expanded = true;
}

namespace {

mpz_class binom(std::int64_t n, std::int64_t k) {
    mpz_class b;
    if (k < 0 || k > n) return 0;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

// Number of upper-level splits of a profile with L_m = {u} (m = n/2, q = 2) under which
// u is not a prefix of any code word.
class DupCounter {
public:
    DupCounter(const PartitionProfile& p, std::uint64_t& budget) : p_(p), m_(p.n / 2), t_(p.n, 0), budget_(budget) {}

    std::optional<mpz_class> run() {
        try {
            return go(m_ + 1);
        } catch (const Exhausted&) {
            return std::nullopt;
        }
    }

private:
    struct Exhausted {};
    const PartitionProfile& p_;
    int m_;
    std::vector<std::int64_t> t_;
    std::uint64_t& budget_;
    std::map<std::pair<int, std::vector<std::int64_t>>, mpz_class> memo_;

    mpz_class go(int j) {
        const int n = p_.n;
        if (j == n) return 1;
        if (budget_ == 0) throw Exhausted{};
        --budget_;
        std::vector<std::int64_t> key(t_.begin() + m_ + 1, t_.begin() + j);
        auto it = memo_.find({j, key});
        if (it != memo_.end()) return it->second;

        std::int64_t a = p_.y[j - m_];
        for (int k = m_ + 1; k < j; ++k) a = add(a, mul(t_[k], p_.y[j - k]));
        std::int64_t s = p_.x[j] + p_.y[j];
        std::int64_t x = p_.x[j];
        mpz_class total = 0;
        std::int64_t tmax = p_.y[n - j] > 0 ? 0 : std::min(a, x);
        for (std::int64_t t = 0; t <= tmax; ++t) {
            mpz_class w = binom(a, t) * binom(s - a, x - t);
            if (w == 0) continue;
            t_[j] = t;
            w *= go(j + 1);
            total += w;
        }
        t_[j] = 0;
        memo_.emplace(std::make_pair(j, std::move(key)), total);
        return total;
    }
};

}  // namespace

mpz_class count_maximum(SolverResult& r, const CountOptions& opt) {
    if (!r.expanded) throw InputError("count_maximum needs the expanded profile set");
    mpz_class total = 0;
    for (const auto& p : r.all_profiles) {
        mpz_class t = binom(r.q, p.x[1]);
        for (int i = 2; i < r.n && t != 0; ++i) t *= binom(level_size(p, i), p.x[i]);
        total += t;
    }
    r.count_exact = true;
    r.count_raw = total;
    r.count_duplicates = 0;
    if (r.q == 2 && r.n % 2 == 0 && r.n >= 4) {
        const int m = r.n / 2;
        std::uint64_t budget = opt.dup_budget;
        for (const auto& p : r.all_profiles) {
            if (p.x[m] != 1 || p.y[m] != 0) continue;
            mpz_class lower = binom(2, p.x[1]);
            for (int i = 2; i < m; ++i) lower *= binom(level_size(p, i), p.x[i]);
            auto w = DupCounter(p, budget).run();
            if (!w) {
                r.count_exact = false;
                continue;
            }
            r.count_duplicates += lower * *w;
        }
    }
    total -= r.count_duplicates;
    r.count = total;
    return total;
}

Code materialize_maximum(int q, int n, const PartitionProfile& p, const Chooser& chooser) {
    if (p.q != q || p.n != n) throw InputError("profile does not match (q, n)");
    if (!is_feasible(p)) throw InputError("infeasible profile " + profile_to_string(p));
    return generate_code(instantiate_profile(p, chooser));
}

}  // namespace nono
