#pragma once

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "einject/family.hpp"
#include "einject/graph.hpp"
#include "einject/solver.hpp"

namespace einject {

// Closed-form e-injective chromatic number on the covered parameter ranges; nullopt otherwise.
std::optional<int> oracle_chi_ei(const FamilySpec& spec);

// Explicit coloring construction for this instance, if the family has one.
std::optional<Coloring> pattern_coloring(const FamilySpec& spec);

// Conjectured upper bound for planar graphs of the given maximum degree;
// the fixtures are counterexamples to it.
int planar_problem_bound(int max_degree);

enum class CheckStatus { Pass, Fail, Inconclusive, Flagged, NotApplicable };
std::string_view to_string(CheckStatus s);

struct CheckReport {
    std::string claim;
    std::string params;
    std::optional<int> expected;      // oracle value, or the bound for inequality claims
    std::optional<int> computed;      // solver value
    std::optional<bool> pattern_valid;
    std::optional<int> pattern_colors;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    nlohmann::json values = nlohmann::json::object();  // claim-specific numbers
    std::vector<int> certificate;
    std::chrono::microseconds elapsed{0};
};

// Machine form; leaves out timing.
nlohmann::json to_json(const CheckReport& r);
void write_table(const std::vector<CheckReport>& reports, std::ostream& out);

using GraphPair = std::pair<Graph, Graph>;
using ClaimInput = std::variant<FamilySpec, Graph, GraphPair>;

enum class ClaimArity { Family, Graph, Pair };

struct ClaimInfo {
    std::string id;
    ClaimArity arity;
    std::string summary;
};

// Registry in suite order.
const std::vector<ClaimInfo>& claims();
const ClaimInfo& claim_info(std::string_view id);

// Throws std::invalid_argument for an unknown claim, a mismatched input, or
// parameters outside the claim's stated range.
CheckReport check(std::string_view claim, const ClaimInput& input, const SolveOptions& opts = {});

struct IntRange {
    int lo;
    int hi;
};
IntRange parse_range(std::string_view text);  // "a..b" or "a"

struct SuiteFilter {
    std::vector<std::string> claims;
    std::optional<IntRange> m;
    std::optional<IntRange> n;
    std::vector<Graph> graphs;  // inputs for graph claims; pair claims use every i<j pair
};

// Family instances a claim checks; defaults when no range is given.
std::vector<FamilySpec> family_instances(std::string_view claim, std::optional<IntRange> m,
                                         std::optional<IntRange> n);

std::vector<CheckReport> run_suite(const SuiteFilter& filter, const SolveOptions& opts = {},
                                   unsigned jobs = 1);

struct SuiteSummary {
    int pass = 0, fail = 0, inconclusive = 0, flagged = 0, not_applicable = 0;
};
SuiteSummary summarize(const std::vector<CheckReport>& reports);
// Nonzero iff some check failed or was flagged; inconclusive runs do not count.
int suite_exit_status(const std::vector<CheckReport>& reports);

}  // namespace einject
