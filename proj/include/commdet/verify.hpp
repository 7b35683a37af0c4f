#pragma once

#include "commdet/report_json.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace commdet {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool within_budget = true;
    double seconds = 0.0; // measured; excluded from the JSON payload
    std::string detail;
    Json data;
};

struct VerifyOutcome {
    std::vector<CriterionResult> results;
    bool all_pass = false;
};

/// Criterion ids for a named suite: "symbolic" (1-4), "numeric" (5-7, 9),
/// "chern" (8), "all" (1-10).
std::vector<int> suite_criteria(const std::string& suite);

/// Runs the requested criteria in ascending id order. Criterion 10 re-runs
/// criteria 1-9 and byte-compares the two JSON payloads. `progress`, when
/// non-null, receives one human-readable line per criterion.
VerifyOutcome run_criteria(const std::vector<int>& ids, std::uint64_t seed,
                           std::ostream* progress);

/// Deterministic JSON for an outcome (no wall times).
Json verify_json(const VerifyOutcome& outcome, std::uint64_t seed, const std::string& suite);

/// Seeded ring property suite (associativity, commutativity, distributivity,
/// unit laws, the defining ideal, parse round-trips). Returns pass + detail.
std::pair<bool, std::string> ring_property_suite(int samples, std::uint64_t seed);

} // namespace commdet
