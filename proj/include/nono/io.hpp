// SPDX-License-Identifier: MIT
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "nono/solver.hpp"

namespace nono {

// Bumped whenever the search or the count changes in a way that could alter results.
constexpr int kSolverVersion = 1;

// JSON document: q, n, s, profiles, canonical, count, count_exact, reduced, complete, nodes, wall_ms.
// Big integers are decimal strings; profiles are {"x": [...], "y": [...]} with 1-based levels.
std::string result_to_json(const SolverResult& r);
SolverResult result_from_json(const std::string& doc);  // throws ParseError

std::string result_csv_header();
std::string result_to_csv(const SolverResult& r);
std::string result_to_text(const SolverResult& r);

// Advisory on-disk cache of result documents.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    // $NONO_CACHE_DIR, else $XDG_CACHE_HOME/nono, else $HOME/.cache/nono, else ./.nono-cache.
    static std::filesystem::path default_dir();

    std::filesystem::path entry_path(int q, int n, bool reduced) const;
    // Missing, unreadable, corrupted or stale entries all read as a miss.
    std::optional<SolverResult> load(int q, int n, bool reduced) const;
    // Only complete results are stored. Returns false when nothing was written.
    bool store(const SolverResult& r) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

}  // namespace nono
