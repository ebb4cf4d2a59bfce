// SPDX-License-Identifier: MIT
// Command-line front end: solve, construct, compare, verify, oracle, formula.
#include <cmath>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nono/constructions.hpp"
#include "nono/formulas.hpp"
#include "nono/io.hpp"
#include "nono/oracle.hpp"
#include "nono/solver.hpp"

using namespace nono;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kIncomplete = 3, kParse = 4, kConstruction = 5 };

struct Config {
    std::string output;  // empty: per-command default
    std::string cache_dir;
    bool no_cache = false;
    int parallel_depth = 1;
    std::uint64_t node_cap = 0;
    double time_cap = 0;
    bool quiet = false;
};

void log(const Config& cfg, const std::string& msg) {
    if (!cfg.quiet) std::cerr << "nono: " << msg << '\n';
}

std::string format_of(const Config& cfg, const std::string& fallback) {
    return cfg.output.empty() ? fallback : cfg.output;
}

ResultCache cache_of(const Config& cfg) {
    return ResultCache(cfg.cache_dir.empty() ? ResultCache::default_dir() : std::filesystem::path(cfg.cache_dir));
}

SolveOptions solve_options(const Config& cfg, int n, bool reduced) {
    if (cfg.parallel_depth < 0 || cfg.parallel_depth > n / 2)
        throw InputError("--parallel-depth must be in 0..floor(n/2)");
    SolveOptions opt;
    opt.parallel_depth = cfg.parallel_depth;
    opt.reduced = reduced;
    opt.node_cap = cfg.node_cap;
    opt.time_cap_s = cfg.time_cap;
    return opt;
}

// Cached or fresh result; count is filled when asked for.
SolverResult obtain_result(const Config& cfg, int q, int n, bool reduced, bool want_count) {
    auto cache = cache_of(cfg);
    if (!cfg.no_cache) {
        if (auto hit = cache.load(q, n, reduced); hit && (!want_count || hit->count)) {
            log(cfg, "cache hit " + cache.entry_path(q, n, reduced).string());
            return *hit;
        }
    }
    log(cfg, "solving q=" + std::to_string(q) + " n=" + std::to_string(n) + (reduced ? " (reduced)" : ""));
    auto r = solve_sqn(q, n, solve_options(cfg, n, reduced));
    if (want_count && r.complete) {
        log(cfg, "counting maximum codes");
        try {
            expand_optimal_set(r);
            count_maximum(r);
        } catch (const ResourceError& e) {
            log(cfg, std::string("count abandoned: ") + e.what());
            r.complete = false;
        }
    }
    if (!cfg.no_cache && r.complete && (!want_count || r.count_exact)) cache.store(r);
    return r;
}

int cmd_solve(const Config& cfg, int q, int n, bool count, bool reduced) {
    auto r = obtain_result(cfg, q, n, reduced, count);
    auto fmt = format_of(cfg, "json");
    if (fmt == "json")
        std::cout << result_to_json(r);
    else if (fmt == "csv")
        std::cout << result_csv_header() << result_to_csv(r);
    else
        std::cout << result_to_text(r);
    return r.complete && (!count || r.count_exact) ? kOk : kIncomplete;
}

struct ConstructArgs {
    std::string name;
    int q = 2, n = 0, k = 0, l = 0, a = 0;
};

int cmd_construct(const Config& cfg, const ConstructArgs& c) {
    Code code;
    if (c.name == "levenshtein") {
        code = levenshtein_code(c.q, c.n, c.k);
    } else if (c.name == "bilotta") {
        code = bilotta_code(c.n);
    } else if (c.name == "wang") {
        std::set<Symbol> I;
        for (int i = 0; i < c.a; ++i) I.insert(static_cast<Symbol>(i));
        code = wang_lift(bilotta_code(c.n), c.q, I);
    } else if (c.name == "blackburn") {
        code = blackburn_code(BlackburnParams::standard(c.q, c.n, c.k, c.l));
    } else if (c.name == "barcucci") {
        code = barcucci_code(c.q, c.n);
    } else {
        throw InputError("unknown construction " + c.name);
    }
    auto fmt = format_of(cfg, "text");
    if (fmt == "json") {
        ordered_json words = ordered_json::array();
        for (const auto& w : code.words) words.push_back(word_to_string(w, code.q));
        ordered_json doc{{"construction", c.name}, {"q", code.q}, {"n", code.n}, {"size", code.size()}, {"words", words}};
        std::cout << doc.dump(2) << '\n';
    } else if (fmt == "csv") {
        std::cout << "word\n";
        for (const auto& w : code.words) std::cout << word_to_string(w, code.q) << '\n';
    } else {
        write_code(code, std::cout);
        std::cout << "# size=" << code.size() << '\n';
    }
    return kOk;
}

int cmd_compare(const Config& cfg, int q, int n) {
    std::optional<mpz_class> s;
    bool known = true;
    try {
        auto r = obtain_result(cfg, q, n, false, false);
        if (r.complete)
            s = mpz_class(static_cast<long>(r.s));
        else
            known = false;
    } catch (const ResourceError& e) {
        log(cfg, std::string("S unavailable: ") + e.what());
        known = false;
    }
    auto row = best_construction_sweep(q, n, s);
    auto fmt = format_of(cfg, "csv");
    if (fmt == "json") {
        ordered_json entries = ordered_json::array();
        for (const auto& e : row.entries)
            entries.push_back({{"construction", e.construction}, {"params", e.params}, {"size", e.size.get_str()}});
        ordered_json doc{{"q", q},
                         {"n", n},
                         {"s", s ? ordered_json(s->get_str()) : ordered_json(nullptr)},
                         {"entries", entries},
                         {"best", row.best.get_str()},
                         {"best_set", row.best_set},
                         {"gap", row.gap ? ordered_json(row.gap->get_str()) : ordered_json("unknown")}};
        std::cout << doc.dump(2) << '\n';
    } else if (fmt == "csv") {
        std::ostringstream os;
        write_sweep_csv_header(os);
        write_sweep_csv(row, os);
        std::string body = os.str();
        if (!s) {
            // empty gap cells read as unknown
            std::string out;
            std::istringstream is(body);
            std::string line;
            bool header = true;
            while (std::getline(is, line)) {
                out += line + (header ? "" : "unknown") + "\n";
                header = false;
            }
            body = out;
        }
        std::cout << body;
    } else {
        for (const auto& e : row.entries) std::cout << e.construction << " (" << e.params << "): " << e.size << '\n';
        std::cout << "best: " << row.best << " via";
        for (const auto& b : row.best_set) std::cout << ' ' << b;
        std::cout << '\n';
        if (row.gap)
            std::cout << "S=" << *s << " gap=" << *row.gap << '\n';
        else
            std::cout << "gap: unknown\n";
    }
    return known ? kOk : kIncomplete;
}

int cmd_verify(const Config& cfg, const std::string& path) {
    Code c = read_code_file(path);
    auto bad = first_overlapping_pair(c);
    std::optional<bool> maximal;
    std::string method;
    std::optional<Word> witness;
    if (!bad) {
        double space = std::pow(double(c.q), c.n);
        if (space <= double(1 << 24)) {
            witness = extension_witness(c);
            maximal = !witness;
            method = "brute force";
        } else {
            maximal = partitions_of_maximal(c).has_value();
            method = "structural";
        }
    }
    auto fmt = format_of(cfg, "text");
    if (fmt == "json") {
        ordered_json doc{{"q", c.q}, {"n", c.n}, {"size", c.size()}, {"nonoverlapping", !bad}};
        if (bad)
            doc["offending_pair"] = {word_to_string(bad->first, c.q), word_to_string(bad->second, c.q)};
        doc["maximal"] = maximal ? ordered_json(*maximal) : ordered_json(nullptr);
        if (maximal) doc["method"] = method;
        if (witness) doc["extension_witness"] = word_to_string(*witness, c.q);
        std::cout << doc.dump(2) << '\n';
    } else if (fmt == "csv") {
        std::cout << "q,n,size,nonoverlapping,maximal\n"
                  << c.q << ',' << c.n << ',' << c.size() << ',' << (bad ? "no" : "yes") << ','
                  << (maximal ? (*maximal ? "yes" : "no") : "") << '\n';
    } else {
        std::cout << "size: " << c.size() << '\n';
        std::cout << "non-overlapping: " << (bad ? "no" : "yes");
        if (bad)
            std::cout << ", offending pair (" << word_to_string(bad->first, c.q) << ", "
                      << word_to_string(bad->second, c.q) << ")";
        std::cout << '\n';
        if (maximal) {
            std::cout << "maximal: " << (*maximal ? "yes" : "no") << " (" << method << ")";
            if (witness) std::cout << ", extension witness " << word_to_string(*witness, c.q);
            std::cout << '\n';
        } else {
            std::cout << "maximal: n/a\n";
        }
    }
    return kOk;
}

int cmd_oracle(const Config& cfg, int q, int n, bool count_max, bool count_maximal, const std::string& mode) {
    auto fmt = format_of(cfg, "text");
    ordered_json doc{{"q", q}, {"n", n}};
    std::ostringstream text;
    if (count_maximal) {
        MaximalMode m = mode == "clique" ? MaximalMode::Clique : mode == "partition" ? MaximalMode::Partition
                                                                                       : MaximalMode::Auto;
        log(cfg, "enumerating maximal codes");
        auto v = count_maximal_oracle(q, n, m);
        doc["maximal_count"] = v.get_str();
        text << "maximal codes: " << v << '\n';
    } else if (count_max) {
        log(cfg, "enumerating maximum cliques");
        auto m = n_oracle(q, n);
        doc["s"] = m.size;
        doc["count"] = m.count.get_str();
        text << "s=" << m.size << "\ncount=" << m.count << '\n';
        if (m.listed_all) {
            ordered_json codes = ordered_json::array();
            for (const auto& c : m.codes) {
                ordered_json ws = ordered_json::array();
                std::string line;
                for (const auto& w : c.words) {
                    ws.push_back(word_to_string(w, q));
                    line += (line.empty() ? "" : " ") + word_to_string(w, q);
                }
                codes.push_back(ws);
                text << "{" << line << "}\n";
            }
            doc["codes"] = codes;
        }
    } else {
        log(cfg, "searching for a maximum clique");
        auto s = s_oracle(q, n);
        doc["s"] = s;
        text << "s=" << s << '\n';
    }
    if (fmt == "json")
        std::cout << doc.dump(2) << '\n';
    else if (fmt == "csv") {
        std::cout << "key,value\n";
        for (auto& [k, v] : doc.items())
            if (!v.is_array()) std::cout << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    } else
        std::cout << text.str();
    return kOk;
}

int cmd_formula(const Config& cfg, int q, int n) {
    ordered_json doc{{"q", q}, {"n", n}};
    auto put = [&](const char* key, auto f) {
        try {
            doc[key] = f().get_str();
        } catch (const InputError&) {
            doc[key] = nullptr;
        }
    };
    put("s", [&] { return s_closed(q, n); });
    put("count", [&] { return n_closed(q, n); });
    put("maximal_count", [&] { return count_maximal(q, n); });
    put("upper_bound", [&] { return levenshtein_upper_bound(q, n); });
    auto fmt = format_of(cfg, "text");
    if (fmt == "json") {
        std::cout << doc.dump(2) << '\n';
    } else {
        if (fmt == "csv") std::cout << "key,value\n";
        for (auto& [k, v] : doc.items()) {
            std::string val = v.is_null() ? "n/a" : v.is_string() ? v.get<std::string>() : v.dump();
            std::cout << k << (fmt == "csv" ? "," : ": ") << val << '\n';
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Non-overlapping codes: exact maxima, counts and constructions"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--cache-dir", cfg.cache_dir, "Result cache directory (default $NONO_CACHE_DIR)");
    app.add_flag("--no-cache", cfg.no_cache, "Neither read nor write the cache");
    app.add_option("--parallel-depth", cfg.parallel_depth, "Levels of the search run as parallel tasks")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--node-cap", cfg.node_cap, "Stop the search after this many nodes (0: none)");
    app.add_option("--time-cap", cfg.time_cap, "Stop the search after this many seconds (0: none)")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--quiet", cfg.quiet, "No progress lines on stderr");

    int q = 2, n = 0;
    bool count = false, reduced = false;
    auto* solve = app.add_subcommand("solve", "Maximum code size S(q,n), optionally the count N(q,n)");
    solve->add_option("-q", q, "Alphabet size")->required()->check(CLI::Range(2, 256));
    solve->add_option("-n", n, "Word length")->required()->check(CLI::Range(2, 64));
    solve->add_flag("--count", count, "Also count the maximum codes");
    solve->add_flag("--reduced", reduced, "Restricted search (conjectured to keep the optimum)");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Emit a code from a known construction");
    construct->add_option("name", ca.name, "levenshtein | bilotta | wang | blackburn | barcucci")
        ->required()
        ->check(CLI::IsMember({"levenshtein", "bilotta", "wang", "blackburn", "barcucci"}));
    construct->add_option("-q", ca.q, "Alphabet size")->check(CLI::Range(2, 256));
    construct->add_option("-n", ca.n, "Word length")->required()->check(CLI::Range(2, 64));
    construct->add_option("-k", ca.k, "Levenshtein / Blackburn k");
    construct->add_option("-l", ca.l, "Blackburn l = |I|");
    construct->add_option("-a", ca.a, "Wang lift: |I|, the symbols 0..a-1");

    int cq = 2, cn = 0;
    auto* compare = app.add_subcommand("compare", "Best construction sizes and the gap to S(q,n)");
    compare->add_option("-q", cq, "Alphabet size")->required()->check(CLI::Range(2, 256));
    compare->add_option("-n", cn, "Word length")->required()->check(CLI::Range(2, 64));

    std::string path;
    auto* verify = app.add_subcommand("verify", "Check a code file for non-overlap and maximality");
    verify->add_option("path", path, "Code file")->required();

    int oq = 2, on = 0;
    bool count_max = false, count_maximal_flag = false;
    std::string mode = "auto";
    auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth for tiny instances");
    oracle->add_option("-q", oq, "Alphabet size")->required()->check(CLI::Range(2, 256));
    oracle->add_option("-n", on, "Word length")->required()->check(CLI::Range(2, 64));
    oracle->add_flag("--count-max", count_max, "Count and list the maximum codes");
    oracle->add_flag("--count-maximal", count_maximal_flag, "Count the maximal codes");
    oracle->add_option("--mode", mode, "Maximal-code enumeration: auto | clique | partition")
        ->check(CLI::IsMember({"auto", "clique", "partition"}));

    int fq = 2, fn = 0;
    auto* formula = app.add_subcommand("formula", "Closed forms for short words");
    formula->add_option("-q", fq, "Alphabet size")->required()->check(CLI::Range(2, 1 << 20));
    formula->add_option("-n", fn, "Word length")->required()->check(CLI::Range(2, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*solve) return cmd_solve(cfg, q, n, count, reduced);
        if (*construct) return cmd_construct(cfg, ca);
        if (*compare) return cmd_compare(cfg, cq, cn);
        if (*verify) return cmd_verify(cfg, path);
        if (*oracle) return cmd_oracle(cfg, oq, on, count_max, count_maximal_flag, mode);
        if (*formula) return cmd_formula(cfg, fq, fn);
    } catch (const ParseError& e) {
        std::cerr << "nono: parse error: " << e.what() << '\n';
        return kParse;
    } catch (const InputError& e) {
        std::cerr << "nono: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceError& e) {
        std::cerr << "nono: resource limit: " << e.what() << '\n';
        return kIncomplete;
    } catch (const ConstructionError& e) {
        std::cerr << "nono: construction failed validation: " << e.what() << '\n';
        return kConstruction;
    } catch (const std::exception& e) {
        std::cerr << "nono: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
