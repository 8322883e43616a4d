#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ppart/metrics.hpp"

namespace ppart {

/// Non-empty finite set of positive integers; the frame is its maximum.
class BracketPattern {
public:
    explicit BracketPattern(std::vector<int> elements);

    /// Text form "{1,2,5}".
    static BracketPattern parse(std::string_view text);
    std::string format() const;

    const std::vector<int>& elements() const { return elems_; }
    int frame() const { return elems_.back(); }
    bool contains(int i) const;

    friend auto operator<=>(const BracketPattern&, const BracketPattern&) = default;

private:
    std::vector<int> elems_;  // sorted, unique, >= 1
};

/// Set union.
BracketPattern superpose(const BracketPattern& w, const BracketPattern& v);

/// {i in w : i <= j}; requires j in w.
BracketPattern project(const BracketPattern& w, int j);

/// {frame - i : 0 <= i < frame, i not in w}; same frame, involutive.
BracketPattern dual(const BracketPattern& w);

/// {j - i : j in w, 0 <= i < j, i not in w}; contains w, has minimum 1 and
/// maximum frame(w); idempotent.
BracketPattern completion(const BracketPattern& w);

using PatternCategory = std::set<BracketPattern>;

/// Least set containing the generators and closed under superposition,
/// projections and dualisation (frame never grows, so the fixed point is
/// reached within the finite universe of patterns of bounded frame).
PatternCategory pattern_closure(const std::vector<BracketPattern>& generators);

/// Direct route to the singly generated category: all patterns w' with
/// completion(w') contained in completion(w). Agrees with
/// pattern_closure({w}).
PatternCategory generated_category(const BracketPattern& w);

/// The patterns w with frame <= frame_bound whose completion avoids the
/// monoid m entirely. m must contain zero.
PatternCategory monoid_category(const SemigroupSpec& m, int frame_bound);

/// A submonoid of the non-negative integers given by its finite gap set:
/// the described set is everything except the gaps.
struct MonoidDescription {
    std::vector<int> gaps;  // sorted, positive

    bool contains(int n) const;
    friend bool operator==(const MonoidDescription&, const MonoidDescription&) = default;
};

/// Reads the submonoid off a pattern category as the complement of the union
/// of the completions. Spot-checks that the category is closed under the
/// three operations and throws Error otherwise.
MonoidDescription infer_monoid(const PatternCategory& cat);

/// Minimal generating set of the described monoid (greedy sieve).
std::vector<int> minimal_generators(const MonoidDescription& m);

struct SemigroupData {
    std::vector<int> gap_set;
    int genus = 0;
    int frobenius = 0;
};

/// Gap set, genus and Frobenius number of the numerical semigroup attached
/// to a pattern: the complement of its completion.
SemigroupData numerical_semigroup_data(const BracketPattern& w);

/// All patterns with frame <= frame_bound (there are 2^frame_bound - 1).
std::vector<BracketPattern> patterns_up_to_frame(int frame_bound);

}  // namespace ppart
