#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppart {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in the text format; position is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

enum class Color : std::uint8_t { White = 0, Black = 1 };

inline Color invert(Color c) { return c == Color::White ? Color::Black : Color::White; }
inline char color_char(Color c) { return c == Color::White ? 'w' : 'b'; }

enum class Row : std::uint8_t { Lower = 0, Upper = 1 };

/// A point of a partition: row tag plus 1-based index within its row.
/// Ordering puts all lower points before all upper points, then by index;
/// this is the order used everywhere for canonical forms.
struct Point {
    Row row;
    int index;

    friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point lower_point(int i) { return Point{Row::Lower, i}; }
inline Point upper_point(int i) { return Point{Row::Upper, i}; }

std::string to_string(Point p);

/// Two-colored partition: an upper and a lower row of colored points,
/// partitioned into non-empty blocks. Values are immutable once built
/// and always held in canonical form, so equality, hashing and the text
/// serialization all agree byte for byte.
class Partition {
public:
    /// The empty partition (both rows empty, no blocks).
    Partition() = default;

    /// Parses the text format, e.g. "U[wb] L[bw] B{l1,u2;l2,u1}".
    /// Throws ParseError on bad syntax, Error on cover violations or
    /// out-of-range indices.
    static Partition parse(std::string_view text);

    /// Builds a partition from explicit rows and blocks, validating that the
    /// blocks cover every point exactly once.
    static Partition from_blocks(std::vector<Color> lower, std::vector<Color> upper,
                                 const std::vector<std::vector<Point>>& blocks);

    /// Canonical text form; parse(serialize(p)) == p.
    std::string serialize() const;

    int lower_size() const { return static_cast<int>(lower_.size()); }
    int upper_size() const { return static_cast<int>(upper_.size()); }
    int total_points() const { return lower_size() + upper_size(); }
    const std::vector<Color>& lower() const { return lower_; }
    const std::vector<Color>& upper() const { return upper_; }

    bool has_point(Point p) const;
    /// Native color of a point. Throws on unknown points.
    Color color(Point p) const;
    /// Native color on the lower row, inverted color on the upper row.
    Color normalized_color(Point p) const;

    int block_count() const { return block_count_; }
    /// Index of the block containing p, in canonical block order.
    int block_index(Point p) const;
    /// All blocks in canonical order (sorted by first point; points sorted).
    std::vector<std::vector<Point>> blocks() const;
    std::vector<Point> block(int b) const;
    std::vector<Point> points() const;

    friend bool operator==(const Partition&, const Partition&) = default;

    std::size_t hash() const;

    /// Internal: rows plus a block id per point in flat order (all lower
    /// points, then all upper points); ids are renumbered by first occurrence.
    static Partition from_flat(std::vector<Color> lower, std::vector<Color> upper,
                               std::vector<std::uint16_t> block_of);

    int flat_index(Point p) const;
    const std::vector<std::uint16_t>& flat_blocks() const { return block_of_; }

private:
    std::vector<Color> lower_;
    std::vector<Color> upper_;
    std::vector<std::uint16_t> block_of_;
    int block_count_ = 0;

    void renumber_blocks();
    void check_point(Point p) const;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const { return p.hash(); }
};

// --- structural operations ---------------------------------------------

/// Horizontal concatenation: rows of q appended to the rows of p.
Partition tensor(const Partition& p, const Partition& q);

/// Rows exchanged.
Partition involution(const Partition& p);

/// Every point's color flipped.
Partition color_invert(const Partition& p);

/// Both row orders reversed.
Partition reflect(const Partition& p);

/// color_invert(reflect(p)); self-inverse.
Partition verticolor_reflect(const Partition& p);

struct CompositionResult {
    Partition partition;
    int loops = 0;
};

/// True when top can be stacked onto bottom: top's lower row must match
/// bottom's upper row in length and coloration.
bool composable(const Partition& bottom, const Partition& top);

/// Vertical concatenation with top stacked onto bottom. Blocks meeting the
/// identified middle row are merged; merged groups that end up with no
/// surviving point are removed and counted as loops.
/// Throws Error naming the first mismatching middle position.
CompositionResult compose(const Partition& bottom, const Partition& top);

enum class RotationCorner : std::uint8_t {
    UpperLeftDown,
    UpperRightDown,
    LowerLeftUp,
    LowerRightUp,
};

/// Moves one end point to the matching end of the other row, inverting its
/// color; block membership is preserved. Throws Error if the source row is
/// empty. UpperLeftDown/LowerLeftUp are mutually inverse, as are
/// UpperRightDown/LowerRightUp.
Partition rotate(const Partition& p, RotationCorner corner);

enum class RotationDirection : std::uint8_t { Clockwise, CounterClockwise };

/// One clockwise step is LowerLeftUp followed by UpperRightDown; one
/// counter-clockwise step is UpperLeftDown followed by LowerRightUp.
/// Total point count is preserved and the two directions are inverse.
Partition cyclic_rotate(const Partition& p, RotationDirection dir, int steps);

/// Removes the given points and merges the remainders of every touched block
/// into one new block (dropped when empty). Indices are re-compacted.
Partition erase_points(const Partition& p, const std::vector<Point>& s);

// --- cyclic order -------------------------------------------------------

/// The cyclic order on the points: lower row left to right, then upper row
/// right to left, with wraparound.
std::vector<Point> orientation_order(const Partition& p);

/// Materialized cyclic order with O(1) position lookup and prefix sums of
/// the normalized color weights (+1 white, -1 black).
class Orientation {
public:
    explicit Orientation(const Partition& p);

    int size() const { return static_cast<int>(seq_.size()); }
    Point at(int pos) const { return seq_[static_cast<std::size_t>(pos)]; }
    const std::vector<Point>& sequence() const { return seq_; }
    int position(Point p) const;

    /// Sum of normalized color weights over `count` consecutive points
    /// starting at position `from` (cyclically).
    int weight_sum(int from, int count) const;

private:
    std::vector<Point> seq_;
    std::vector<int> pos_of_;    // by flat index
    std::vector<int> prefix_;    // prefix_[i] = weights of seq_[0..i-1]
    int lower_size_;
};

enum class IntervalKind : std::uint8_t { ClosedClosed, OpenOpen, OpenClosed, ClosedOpen };

/// Interval with respect to the cyclic order of a specific partition,
/// walked forward from `first` to `last`.
struct CyclicInterval {
    Point first;
    Point last;
    IntervalKind kind = IntervalKind::ClosedClosed;

    friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;
};

std::vector<Point> interval_points(const Orientation& o, const CyclicInterval& ival);
std::vector<Point> interval_points(const Partition& p, const CyclicInterval& ival);
bool interval_contains(const Orientation& o, const CyclicInterval& ival, Point q);

// --- crossings -----------------------------------------------------------

/// True when four pairwise distinct points, two per block, alternate in the
/// cyclic order. Symmetric, false for b1 == b2. Block arguments are canonical
/// block indices; throws Error when out of range.
bool blocks_cross(const Partition& p, int b1, int b2);

/// Connected components of the transitive closure of the crossing relation,
/// as sets of block indices.
std::vector<std::vector<int>> connected_components(const Partition& p);

bool is_noncrossing(const Partition& p);

bool is_connected(const Partition& p);

// --- enumeration ----------------------------------------------------------

/// Calls fn for every pair partition with neutral blocks having the given
/// total point count, each exactly once, in a fixed generation order
/// (row split, then matching, then coloration).
void for_each_pair_neutral(int total_points, const std::function<void(const Partition&)>& fn);

/// Materialized stream, sorted lexicographically by canonical serialization.
std::vector<Partition> enumerate_pair_neutral(int total_points);

/// All sizes 0, 2, ..., max_points concatenated, each size block sorted.
std::vector<Partition> enumerate_pair_neutral_up_to(int max_points);

}  // namespace ppart
