#pragma once

#include <unordered_set>
#include <vector>

#include "ppart/brackets.hpp"
#include "ppart/partition.hpp"
#include "ppart/patterns.hpp"

namespace ppart {

struct ClosureConfig {
    /// Retention bound: only partitions with at most this many points are
    /// reported as members.
    int max_points = 8;
    /// Search bound: intermediates up to this size stay in the frontier.
    int intermediate_points = 12;
    /// Round cap; a closure stopped here reports saturated() == false.
    int max_iterations = 64;
};

/// The four partitions every category contains: the two identity strings and
/// the two lower-row pairs.
std::vector<Partition> base_partitions();

/// Deduplicated set of partitions generated from the seed within bounds.
class ClosureSet {
public:
    const ClosureConfig& config() const { return config_; }
    bool saturated() const { return saturated_; }
    int iterations() const { return iterations_; }

    /// Members within the retention bound, in insertion order.
    const std::vector<Partition>& members() const { return members_; }
    bool contains_member(const Partition& p) const { return member_set_.count(p) > 0; }

    /// Members sorted by canonical serialization, one per line.
    std::vector<std::string> sorted_lines() const;

private:
    friend ClosureSet generate(const std::vector<Partition>&, const ClosureConfig&);
    ClosureConfig config_;
    bool saturated_ = false;
    int iterations_ = 0;
    std::vector<Partition> members_;
    std::unordered_set<Partition, PartitionHash> member_set_;
};

/// Worklist fixed point: the seed is the generators plus the base partitions;
/// each round applies involution, verticolor reflection, the four basic
/// rotations, all compositions and all tensor products against everything
/// found so far, keeping results within the intermediate bound. Rotations and
/// verticolor reflections are derived category operations, applied directly
/// to speed saturation. The result is independent of processing order.
ClosureSet generate(const std::vector<Partition>& generators, const ClosureConfig& config);

enum class Containment { Yes, NoWithinBounds };

/// Membership in the computed set. "NoWithinBounds" refutes nothing: the
/// derivation may need larger intermediates. Throws when p exceeds the
/// retention bound.
Containment closure_contains(const ClosureSet& cs, const Partition& p);

/// The patterns whose black bracket lies in the closure, up to frame_bound.
/// Requires 4*(frame_bound+1) <= max_points so the brackets fit; verifies
/// that the result is closed under the pattern operations.
PatternCategory closure_bracket_patterns(const ClosureSet& cs, int frame_bound);

}  // namespace ppart
