#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppart/closure.hpp"
#include "ppart/metrics.hpp"

namespace ppart {

/// Defaults match the pinned acceptance bounds of each suite; callers may
/// shrink them for quick runs.
struct SuiteOptions {
    std::optional<int> max_points;
    std::optional<int> intermediate_points;
    std::optional<int> frame;
    std::optional<int> max_iterations;
};

struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    long long checked = 0;
    bool passed = false;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;
    double wall_seconds = 0.0;

    /// Line-delimited key=value records; wall time is excluded so that equal
    /// inputs give byte-equal output.
    std::string to_records() const;
    std::string to_plain() const;
};

const std::vector<std::string>& suite_names();

/// Runs one verification suite. Throws Error for unknown names.
Report run_suite(const std::string& name, const SuiteOptions& options = {});

/// Predicate summary used by the command line: pair/neutral status, sector
/// neutrality, crossing status, the crossing-distance set when defined, the
/// family indices w in 0..16 the partition belongs to, and the semigroup
/// verdict when one is supplied.
std::vector<std::pair<std::string, std::string>> classify_report(
    const Partition& p, const std::optional<SemigroupSpec>& d);

}  // namespace ppart
