// SPDX-License-Identifier: MIT
#include "nono/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nono {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

ordered_json profile_json(const PartitionProfile& p) {
    ordered_json x = ordered_json::array(), y = ordered_json::array();
    for (int i = 1; i < p.n; ++i) {
        x.push_back(p.x[i]);
        y.push_back(p.y[i]);
    }
    return ordered_json{{"x", x}, {"y", y}};
}

PartitionProfile profile_from(const ordered_json& j, int q, int n) {
    auto xs = j.at("x").get<std::vector<std::int64_t>>();
    auto ys = j.at("y").get<std::vector<std::int64_t>>();
    if (static_cast<int>(xs.size()) != n - 1 || static_cast<int>(ys.size()) != n - 1)
        throw ParseError(0, "profile has the wrong number of levels");
    return PartitionProfile(q, n, xs, ys);
}

std::int64_t wall_ms_int(double ms) { return static_cast<std::int64_t>(std::llround(ms)); }

}  // namespace

std::string result_to_json(const SolverResult& r) {
    ordered_json doc;
    doc["q"] = r.q;
    doc["n"] = r.n;
    doc["s"] = r.s >= 0 ? ordered_json(std::to_string(r.s)) : ordered_json(nullptr);  // null: nothing found
    ordered_json profiles = ordered_json::array(), canonical = ordered_json::array();
    for (const auto& p : r.expanded ? r.all_profiles : r.canonical_profiles) profiles.push_back(profile_json(p));
    for (const auto& p : r.canonical_profiles) canonical.push_back(profile_json(p));
    doc["profiles"] = profiles;
    doc["canonical"] = canonical;
    doc["expanded"] = r.expanded;
    doc["count"] = r.count ? ordered_json(r.count->get_str()) : ordered_json(nullptr);
    doc["count_exact"] = r.count_exact;
    doc["reduced"] = r.reduced;
    doc["complete"] = r.complete;
    doc["nodes"] = r.stats.nodes;
    doc["leaves"] = r.stats.leaves;
    doc["wall_ms"] = wall_ms_int(r.stats.wall_ms);
    doc["solver_version"] = kSolverVersion;
    return doc.dump(2) + "\n";
}

SolverResult result_from_json(const std::string& text) {
    try {
        auto doc = ordered_json::parse(text);
        SolverResult r;
        r.q = doc.at("q").get<int>();
        r.n = doc.at("n").get<int>();
        check_alphabet(r.q);
        if (r.n < 2) throw ParseError(0, "n must be at least 2");
        r.s = doc.at("s").is_null() ? -1 : std::stoll(doc.at("s").get<std::string>());
        r.expanded = doc.at("expanded").get<bool>();
        for (const auto& p : doc.at("canonical")) r.canonical_profiles.insert(profile_from(p, r.q, r.n));
        if (r.expanded)
            for (const auto& p : doc.at("profiles")) r.all_profiles.insert(profile_from(p, r.q, r.n));
        if (!doc.at("count").is_null()) r.count = mpz_class(doc.at("count").get<std::string>());
        r.count_exact = doc.at("count_exact").get<bool>();
        r.reduced = doc.at("reduced").get<bool>();
        r.complete = doc.at("complete").get<bool>();
        r.stats.nodes = doc.at("nodes").get<std::uint64_t>();
        r.stats.leaves = doc.at("leaves").get<std::uint64_t>();
        r.stats.wall_ms = static_cast<double>(doc.at("wall_ms").get<std::int64_t>());
        if (doc.at("solver_version").get<int>() != kSolverVersion) throw ParseError(0, "solver version mismatch");
        return r;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(0, std::string("bad result document: ") + e.what());
    }
}

std::string result_csv_header() { return "q,n,s,count,count_exact,reduced,complete,nodes,wall_ms\n"; }

std::string result_to_csv(const SolverResult& r) {
    std::ostringstream os;
    os << r.q << ',' << r.n << ',' << (r.s >= 0 ? std::to_string(r.s) : "") << ',' << (r.count ? r.count->get_str() : "") << ','
       << (r.count_exact ? "true" : "false") << ',' << (r.reduced ? "true" : "false") << ','
       << (r.complete ? "true" : "false") << ',' << r.stats.nodes << ',' << wall_ms_int(r.stats.wall_ms) << '\n';
    return os.str();
}

std::string result_to_text(const SolverResult& r) {
    std::ostringstream os;
    os << "q=" << r.q << " n=" << r.n << '\n';
    if (r.s < 0)
        os << "S=unknown (search incomplete)\n";
    else
        os << "S=" << r.s << (r.complete ? "" : " (lower bound: search incomplete)") << '\n';
    if (r.count) os << "N=" << *r.count << (r.count_exact ? "" : " (upper bound)") << '\n';
    os << "canonical profiles: " << r.canonical_profiles.size() << '\n';
    for (const auto& p : r.canonical_profiles) os << "  " << profile_to_string(p) << '\n';
    if (r.expanded) os << "optimal profiles: " << r.all_profiles.size() << '\n';
    if (r.reduced) os << "reduced search\n";
    os << "nodes=" << r.stats.nodes << " wall_ms=" << wall_ms_int(r.stats.wall_ms) << '\n';
    return os.str();
}

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path ResultCache::default_dir() {
    if (const char* d = std::getenv("NONO_CACHE_DIR"); d && *d) return d;
    if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return fs::path(d) / "nono";
    if (const char* d = std::getenv("HOME"); d && *d) return fs::path(d) / ".cache" / "nono";
    return ".nono-cache";
}

fs::path ResultCache::entry_path(int q, int n, bool reduced) const {
    std::ostringstream name;
    name << "q" << q << "_n" << n << (reduced ? "_reduced" : "") << "_v" << kSolverVersion << ".json";
    return dir_ / name.str();
}

std::optional<SolverResult> ResultCache::load(int q, int n, bool reduced) const {
    std::ifstream in(entry_path(q, n, reduced));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        auto r = result_from_json(buf.str());
        if (r.q != q || r.n != n || r.reduced != reduced || !r.complete) return std::nullopt;
        return r;
    } catch (const ParseError&) {
        return std::nullopt;
    }
}

bool ResultCache::store(const SolverResult& r) const {
    if (!r.complete) return false;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return false;
    const fs::path target = entry_path(r.q, r.n, r.reduced);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return false;
        out << result_to_json(r);
        if (!out) return false;
    }
    fs::rename(tmp, target, ec);
    return !ec;
}

}  // namespace nono
