#pragma once

#include <optional>
#include <string_view>

#include "ppart/partition.hpp"
#include "ppart/patterns.hpp"

namespace ppart {

/// The identity string of one color, "U[c] L[c] B{l1,u1}".
Partition identity(Color c);

/// The lower-row pair "U[] L[c c'] B{l1,l2}" with c' the inverse color.
Partition cup(Color first);

/// Three mutually crossing through-strings colored white-black-white; the
/// smallest connected partition whose blocks all sit at color distance zero.
Partition half_liberation();

/// p equals its involution and absorbs itself under composition (loops
/// discarded).
bool is_projective(const Partition& p);

/// Projective partition whose lower row is a sector, i.e. its two end points
/// form a block.
bool is_bracket(const Partition& p);

/// The bracket carrying the same interior structure as the sector s of p:
/// s restricted to p becomes the lower row, mirrored to the upper row, with
/// blocks that cross the sector boundary wired into through-strings.
/// Requires is_pair_neutral(p) and s to be a sector.
Partition associated_bracket(const Partition& p, const CyclicInterval& s);

/// The projective partition left after erasing the outermost point of each
/// row end. Requires is_bracket(p).
Partition bracket_argument(const Partition& p);

/// Wraps a projective argument into a bracket: a non-through pair of colors
/// (c, inverse) is added around each row. Inverse of bracket_argument.
Partition make_bracket(Color c, const Partition& argument);

/// Wraps the whole bracket once more, with the starting color inverted.
Partition weak_inversion(const Partition& p);

/// Re-wraps the argument padded by one identity string on each side, with
/// the starting color inverted; the old outer pair turns into two
/// through-strings.
Partition strong_inversion(const Partition& p);

/// Bracket whose sector structure admits a quarter-turn dual: verticolor-
/// reflexive, every sector neutral, and the two middle interior points of
/// the lower row form a turn lying on through blocks.
bool is_dualizable(const Partition& p);

/// Quarter cyclic rotation (total points / 4 steps); both directions give
/// the same partition, and taking the dual twice returns p.
Partition dual_bracket(const Partition& p);

enum class BracketKind : std::uint8_t {
    NotABracket,
    ResidualFirstKind,
    ResidualSecondKindNonminimal,
    Minimal,
    PlainBracket,
};

std::string_view to_string(BracketKind k);

/// Classification by connectedness and by how many turns the lower row and
/// its interior contain.
BracketKind classify_bracket(const Partition& p);

/// The bracket encoded by a pattern: 2*(frame+1) points per row, left half
/// colored c, right half inverted; position k (counted right to left from
/// the middle of the left half) carries a same-row symmetric arc when k is
/// in the pattern and a mirrored through-string pair otherwise.
Partition build_bracket(Color c, const BracketPattern& w);

/// Reads the pattern back off a bracket of the build_bracket layout;
/// nullopt when the partition is not of that shape.
std::optional<BracketPattern> bracket_pattern_of(const Partition& p);

/// 1-based positions i of the lower row such that points i, i+1 form a turn.
std::vector<int> lower_row_turns(const Partition& p);

}  // namespace ppart
