#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppart/partition.hpp"

namespace ppart {

/// +1 for normalized white, -1 for normalized black.
int color_weight(const Partition& p, Point q);

int color_sum(const Partition& p, std::span<const Point> pts);

/// Color sum over all points of p.
int total_color_sum(const Partition& p);

bool is_pair(const Partition& p);

/// Pair partition all of whose blocks are neutral.
bool is_pair_neutral(const Partition& p);

/// Signed color distance from a to b: the color sum of the open interval
/// ]a,b[ when the normalized colors differ, of the half-open ]a,b] when they
/// agree. Requires is_pair_neutral(p).
int signed_point_distance(const Partition& p, Point a, Point b);

int point_distance(const Partition& p, Point a, Point b);

/// Fast path for exhaustive sweeps: the caller guarantees is_pair_neutral(p)
/// and supplies a prebuilt orientation of p.
int signed_point_distance(const Partition& p, const Orientation& o, Point a, Point b);

/// Signed color distance between blocks, evaluated at representatives.
/// Requires is_s0(p); only there is the value representative-independent.
int signed_block_distance(const Partition& p, int b1, int b2);

int block_distance(const Partition& p, int b1, int b2);

/// For every 2-element block, the two complementary closed cyclic intervals
/// bounded by it, ordered by block and then by start point.
std::vector<CyclicInterval> sectors(const Partition& p);

/// Pair partition with neutral blocks all of whose sectors are neutral.
bool is_s0(const Partition& p);

/// The set of absolute block distances between crossing block pairs.
/// Requires is_s0(p); empty iff p is non-crossing.
std::set<int> crossing_distances(const Partition& p);

/// Pair partition with neutral blocks such that between the two legs of every
/// block the color sum is a multiple of w (equal to zero when w == 0).
bool in_s_w(const Partition& p, int w);

/// Finite description of an additive subsemigroup of the non-negative
/// integers: the set of all finite non-empty sums of the generators, plus 0
/// when contains_zero is set. Membership decided by coin-problem dynamic
/// programming.
class SemigroupSpec {
public:
    SemigroupSpec(std::vector<int> generators, bool contains_zero);

    /// Text form "D{gens=3,5; zero=1}"; gens may be empty: "D{gens=; zero=0}".
    static SemigroupSpec parse(std::string_view text);
    std::string format() const;

    const std::vector<int>& generators() const { return generators_; }
    bool contains_zero() const { return contains_zero_; }
    bool contains(int n) const;

    friend bool operator==(const SemigroupSpec&, const SemigroupSpec&) = default;

private:
    std::vector<int> generators_;  // sorted, unique, positive
    bool contains_zero_;
};

/// Membership in the family parameterized by d: p lies in S_0 and no two
/// blocks at a distance belonging to d cross each other.
bool in_i_d(const Partition& p, const SemigroupSpec& d);

}  // namespace ppart
