#include "ppart/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

namespace ppart {

std::string to_string(Point p) {
    return (p.row == Row::Lower ? "l" : "u") + std::to_string(p.index);
}

int Partition::flat_index(Point p) const {
    return p.row == Row::Lower ? p.index - 1 : lower_size() + p.index - 1;
}

bool Partition::has_point(Point p) const {
    if (p.index < 1) return false;
    return p.index <= (p.row == Row::Lower ? lower_size() : upper_size());
}

void Partition::check_point(Point p) const {
    if (!has_point(p)) throw Error("unknown point " + to_string(p));
}

Color Partition::color(Point p) const {
    check_point(p);
    return p.row == Row::Lower ? lower_[static_cast<std::size_t>(p.index - 1)]
                               : upper_[static_cast<std::size_t>(p.index - 1)];
}

Color Partition::normalized_color(Point p) const {
    Color c = color(p);
    return p.row == Row::Lower ? c : invert(c);
}

int Partition::block_index(Point p) const {
    check_point(p);
    return block_of_[static_cast<std::size_t>(flat_index(p))];
}

std::vector<std::vector<Point>> Partition::blocks() const {
    std::vector<std::vector<Point>> out(static_cast<std::size_t>(block_count_));
    for (int i = 1; i <= lower_size(); ++i)
        out[block_of_[static_cast<std::size_t>(i - 1)]].push_back(lower_point(i));
    for (int i = 1; i <= upper_size(); ++i)
        out[block_of_[static_cast<std::size_t>(lower_size() + i - 1)]].push_back(upper_point(i));
    return out;  // flat order scan already yields sorted points and sorted blocks
}

std::vector<Point> Partition::block(int b) const {
    if (b < 0 || b >= block_count_) throw Error("unknown block " + std::to_string(b));
    std::vector<Point> out;
    for (int i = 1; i <= lower_size(); ++i)
        if (block_of_[static_cast<std::size_t>(i - 1)] == b) out.push_back(lower_point(i));
    for (int i = 1; i <= upper_size(); ++i)
        if (block_of_[static_cast<std::size_t>(lower_size() + i - 1)] == b) out.push_back(upper_point(i));
    return out;
}

std::vector<Point> Partition::points() const {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(total_points()));
    for (int i = 1; i <= lower_size(); ++i) out.push_back(lower_point(i));
    for (int i = 1; i <= upper_size(); ++i) out.push_back(upper_point(i));
    return out;
}

void Partition::renumber_blocks() {
    // Canonical ids: order of first occurrence in flat order equals sorting
    // blocks by their least point.
    std::vector<std::uint16_t> remap(block_of_.size(), std::uint16_t(0xffff));
    std::uint16_t next = 0;
    for (auto& id : block_of_) {
        if (remap[id] == 0xffff) remap[id] = next++;
        id = remap[id];
    }
    block_count_ = next;
}

Partition Partition::from_flat(std::vector<Color> lower, std::vector<Color> upper,
                               std::vector<std::uint16_t> block_of) {
    Partition p;
    p.lower_ = std::move(lower);
    p.upper_ = std::move(upper);
    p.block_of_ = std::move(block_of);
    if (p.block_of_.size() != static_cast<std::size_t>(p.total_points()))
        throw Error("block assignment does not cover the points");
    p.renumber_blocks();
    return p;
}

Partition Partition::from_blocks(std::vector<Color> lower, std::vector<Color> upper,
                                 const std::vector<std::vector<Point>>& blocks) {
    const int n = static_cast<int>(lower.size() + upper.size());
    std::vector<std::uint16_t> block_of(static_cast<std::size_t>(n), std::uint16_t(0xffff));
    Partition probe;
    probe.lower_ = std::move(lower);
    probe.upper_ = std::move(upper);
    std::uint16_t id = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw Error("empty block");
        for (Point q : b) {
            if (!probe.has_point(q)) throw Error("point " + to_string(q) + " out of range");
            auto& slot = block_of[static_cast<std::size_t>(probe.flat_index(q))];
            if (slot != 0xffff) throw Error("point " + to_string(q) + " appears in two blocks");
            slot = id;
        }
        ++id;
    }
    for (int i = 0; i < n; ++i) {
        if (block_of[static_cast<std::size_t>(i)] == 0xffff) {
            Point q = i < static_cast<int>(probe.lower_.size())
                          ? lower_point(i + 1)
                          : upper_point(i - static_cast<int>(probe.lower_.size()) + 1);
            throw Error("point " + to_string(q) + " not covered by any block");
        }
    }
    return from_flat(std::move(probe.lower_), std::move(probe.upper_), std::move(block_of));
}

std::size_t Partition::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::size_t>(lower_.size()));
    for (Color c : lower_) mix(static_cast<std::size_t>(c));
    mix(static_cast<std::size_t>(upper_.size()) * 131);
    for (Color c : upper_) mix(static_cast<std::size_t>(c) + 2);
    for (auto b : block_of_) mix(static_cast<std::size_t>(b) + 7);
    return h;
}

// --- text format ----------------------------------------------------------

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        return s_[pos_];
    }
    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    void expect(std::string_view lit) {
        for (char c : lit) expect(c);
    }
    bool try_consume(char c) {
        if (done()) return false;
        if (s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    int integer() {
        skip_ws();
        std::size_t start = pos_;
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000) throw ParseError("index too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected an integer", pos_);
        return static_cast<int>(v);
    }
    std::size_t position() const { return pos_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

std::vector<Color> parse_colors(Cursor& cur) {
    std::vector<Color> out;
    for (;;) {
        char c = cur.peek();
        if (c == 'w') {
            out.push_back(Color::White);
        } else if (c == 'b') {
            out.push_back(Color::Black);
        } else if (c == ']') {
            return out;
        } else {
            throw ParseError("expected 'w', 'b' or ']'", cur.position());
        }
        cur.expect(c);
    }
}

Point parse_point(Cursor& cur) {
    char c = cur.peek();
    if (c != 'l' && c != 'u') throw ParseError("expected 'l' or 'u'", cur.position());
    cur.expect(c);
    int idx = cur.integer();
    if (idx < 1) throw ParseError("point index must be positive", cur.position());
    return Point{c == 'l' ? Row::Lower : Row::Upper, idx};
}

}  // namespace

Partition Partition::parse(std::string_view text) {
    Cursor cur(text);
    cur.expect('U');
    cur.expect('[');
    std::vector<Color> upper = parse_colors(cur);
    cur.expect(']');
    cur.expect('L');
    cur.expect('[');
    std::vector<Color> lower = parse_colors(cur);
    cur.expect(']');
    cur.expect('B');
    cur.expect('{');
    std::vector<std::vector<Point>> blocks;
    if (cur.peek() != '}') {
        for (;;) {
            std::vector<Point> block;
            block.push_back(parse_point(cur));
            while (cur.try_consume(',')) block.push_back(parse_point(cur));
            blocks.push_back(std::move(block));
            if (!cur.try_consume(';')) break;
        }
    }
    cur.expect('}');
    if (!cur.done()) throw ParseError("trailing input", cur.position());
    return from_blocks(std::move(lower), std::move(upper), blocks);
}

std::string Partition::serialize() const {
    std::string out = "U[";
    for (Color c : upper_) out += color_char(c);
    out += "] L[";
    for (Color c : lower_) out += color_char(c);
    out += "] B{";
    bool first_block = true;
    for (const auto& b : blocks()) {
        if (!first_block) out += ';';
        first_block = false;
        bool first_pt = true;
        for (Point q : b) {
            if (!first_pt) out += ',';
            first_pt = false;
            out += to_string(q);
        }
    }
    out += '}';
    return out;
}

// --- structural operations --------------------------------------------------

Partition tensor(const Partition& p, const Partition& q) {
    std::vector<Color> lower = p.lower();
    lower.insert(lower.end(), q.lower().begin(), q.lower().end());
    std::vector<Color> upper = p.upper();
    upper.insert(upper.end(), q.upper().begin(), q.upper().end());

    const int pl = p.lower_size(), pu = p.upper_size();
    const int ql = q.lower_size(), qu = q.upper_size();
    const auto shift = static_cast<std::uint16_t>(p.block_count());
    std::vector<std::uint16_t> block_of(static_cast<std::size_t>(pl + ql + pu + qu));
    const auto& pb = p.flat_blocks();
    const auto& qb = q.flat_blocks();
    for (int i = 0; i < pl; ++i) block_of[static_cast<std::size_t>(i)] = pb[static_cast<std::size_t>(i)];
    for (int i = 0; i < ql; ++i)
        block_of[static_cast<std::size_t>(pl + i)] = static_cast<std::uint16_t>(qb[static_cast<std::size_t>(i)] + shift);
    for (int i = 0; i < pu; ++i)
        block_of[static_cast<std::size_t>(pl + ql + i)] = pb[static_cast<std::size_t>(pl + i)];
    for (int i = 0; i < qu; ++i)
        block_of[static_cast<std::size_t>(pl + ql + pu + i)] =
            static_cast<std::uint16_t>(qb[static_cast<std::size_t>(ql + i)] + shift);
    return Partition::from_flat(std::move(lower), std::move(upper), std::move(block_of));
}

Partition involution(const Partition& p) {
    const int pl = p.lower_size(), pu = p.upper_size();
    std::vector<std::uint16_t> block_of(static_cast<std::size_t>(pl + pu));
    const auto& pb = p.flat_blocks();
    for (int i = 0; i < pu; ++i) block_of[static_cast<std::size_t>(i)] = pb[static_cast<std::size_t>(pl + i)];
    for (int i = 0; i < pl; ++i) block_of[static_cast<std::size_t>(pu + i)] = pb[static_cast<std::size_t>(i)];
    return Partition::from_flat(p.upper(), p.lower(), std::move(block_of));
}

Partition color_invert(const Partition& p) {
    auto flip = [](std::vector<Color> row) {
        for (Color& c : row) c = invert(c);
        return row;
    };
    return Partition::from_flat(flip(p.lower()), flip(p.upper()), p.flat_blocks());
}

Partition reflect(const Partition& p) {
    const int pl = p.lower_size(), pu = p.upper_size();
    std::vector<Color> lower = p.lower(), upper = p.upper();
    std::reverse(lower.begin(), lower.end());
    std::reverse(upper.begin(), upper.end());
    std::vector<std::uint16_t> block_of(static_cast<std::size_t>(pl + pu));
    const auto& pb = p.flat_blocks();
    for (int i = 0; i < pl; ++i) block_of[static_cast<std::size_t>(i)] = pb[static_cast<std::size_t>(pl - 1 - i)];
    for (int i = 0; i < pu; ++i)
        block_of[static_cast<std::size_t>(pl + i)] = pb[static_cast<std::size_t>(pl + pu - 1 - i)];
    return Partition::from_flat(std::move(lower), std::move(upper), std::move(block_of));
}

Partition verticolor_reflect(const Partition& p) { return color_invert(reflect(p)); }

bool composable(const Partition& bottom, const Partition& top) {
    return bottom.upper() == top.lower();
}

CompositionResult compose(const Partition& bottom, const Partition& top) {
    if (bottom.upper_size() != top.lower_size())
        throw Error("not composable: middle rows have sizes " + std::to_string(bottom.upper_size()) +
                    " and " + std::to_string(top.lower_size()));
    for (int i = 0; i < bottom.upper_size(); ++i) {
        if (bottom.upper()[static_cast<std::size_t>(i)] != top.lower()[static_cast<std::size_t>(i)])
            throw Error("not composable: colors differ at middle position " + std::to_string(i + 1));
    }

    const int nb = bottom.block_count(), nt = top.block_count();
    std::vector<int> parent(static_cast<std::size_t>(nb + nt));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    const int mid = bottom.upper_size();
    for (int i = 1; i <= mid; ++i) {
        int a = find(bottom.block_index(upper_point(i)));
        int b = find(nb + top.block_index(lower_point(i)));
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }

    const int rl = bottom.lower_size(), ru = top.upper_size();
    std::vector<std::uint16_t> block_of(static_cast<std::size_t>(rl + ru));
    std::vector<int> class_id(static_cast<std::size_t>(nb + nt), -1);
    std::vector<bool> class_used(static_cast<std::size_t>(nb + nt), false);
    int next = 0;
    auto assign = [&](int node) {
        int r = find(node);
        if (class_id[static_cast<std::size_t>(r)] == -1) class_id[static_cast<std::size_t>(r)] = next++;
        class_used[static_cast<std::size_t>(r)] = true;
        return static_cast<std::uint16_t>(class_id[static_cast<std::size_t>(r)]);
    };
    for (int i = 1; i <= rl; ++i) block_of[static_cast<std::size_t>(i - 1)] = assign(bottom.block_index(lower_point(i)));
    for (int i = 1; i <= ru; ++i)
        block_of[static_cast<std::size_t>(rl + i - 1)] = assign(nb + top.block_index(upper_point(i)));

    int loops = 0;
    for (int node = 0; node < nb + nt; ++node) {
        if (find(node) == node && !class_used[static_cast<std::size_t>(node)]) ++loops;
    }
    return CompositionResult{Partition::from_flat(bottom.lower(), top.upper(), std::move(block_of)), loops};
}

Partition rotate(const Partition& p, RotationCorner corner) {
    const int pl = p.lower_size(), pu = p.upper_size();
    const auto& pb = p.flat_blocks();
    std::vector<Color> lower = p.lower(), upper = p.upper();
    std::vector<std::uint16_t> block_of(pb.size());

    switch (corner) {
        case RotationCorner::UpperLeftDown: {
            if (pu == 0) throw Error("rotate: upper row is empty");
            lower.insert(lower.begin(), invert(upper.front()));
            upper.erase(upper.begin());
            block_of[0] = pb[static_cast<std::size_t>(pl)];
            for (int i = 0; i < pl; ++i) block_of[static_cast<std::size_t>(1 + i)] = pb[static_cast<std::size_t>(i)];
            for (int i = 1; i < pu; ++i)
                block_of[static_cast<std::size_t>(pl + i)] = pb[static_cast<std::size_t>(pl + i)];
            break;
        }
        case RotationCorner::UpperRightDown: {
            if (pu == 0) throw Error("rotate: upper row is empty");
            lower.push_back(invert(upper.back()));
            upper.pop_back();
            for (int i = 0; i < pl; ++i) block_of[static_cast<std::size_t>(i)] = pb[static_cast<std::size_t>(i)];
            block_of[static_cast<std::size_t>(pl)] = pb[static_cast<std::size_t>(pl + pu - 1)];
            for (int i = 0; i < pu - 1; ++i)
                block_of[static_cast<std::size_t>(pl + 1 + i)] = pb[static_cast<std::size_t>(pl + i)];
            break;
        }
        case RotationCorner::LowerLeftUp: {
            if (pl == 0) throw Error("rotate: lower row is empty");
            upper.insert(upper.begin(), invert(lower.front()));
            lower.erase(lower.begin());
            for (int i = 1; i < pl; ++i) block_of[static_cast<std::size_t>(i - 1)] = pb[static_cast<std::size_t>(i)];
            block_of[static_cast<std::size_t>(pl - 1)] = pb[0];
            for (int i = 0; i < pu; ++i)
                block_of[static_cast<std::size_t>(pl + i)] = pb[static_cast<std::size_t>(pl + i)];
            break;
        }
        case RotationCorner::LowerRightUp: {
            if (pl == 0) throw Error("rotate: lower row is empty");
            upper.push_back(invert(lower.back()));
            lower.pop_back();
            for (int i = 0; i < pl - 1; ++i) block_of[static_cast<std::size_t>(i)] = pb[static_cast<std::size_t>(i)];
            for (int i = 0; i < pu; ++i)
                block_of[static_cast<std::size_t>(pl - 1 + i)] = pb[static_cast<std::size_t>(pl + i)];
            block_of[static_cast<std::size_t>(pl - 1 + pu)] = pb[static_cast<std::size_t>(pl - 1)];
            break;
        }
    }
    return Partition::from_flat(std::move(lower), std::move(upper), std::move(block_of));
}

Partition cyclic_rotate(const Partition& p, RotationDirection dir, int steps) {
    if (steps < 0) throw Error("cyclic_rotate: negative step count");
    Partition cur = p;
    for (int s = 0; s < steps; ++s) {
        if (dir == RotationDirection::Clockwise) {
            cur = rotate(rotate(cur, RotationCorner::LowerLeftUp), RotationCorner::UpperRightDown);
        } else {
            cur = rotate(rotate(cur, RotationCorner::UpperLeftDown), RotationCorner::LowerRightUp);
        }
    }
    return cur;
}

Partition erase_points(const Partition& p, const std::vector<Point>& s) {
    std::vector<bool> removed(static_cast<std::size_t>(p.total_points()), false);
    for (Point q : s) {
        if (!p.has_point(q)) throw Error("unknown point " + to_string(q));
        removed[static_cast<std::size_t>(p.flat_index(q))] = true;
    }
    const int nblocks = p.block_count();
    std::vector<bool> touched(static_cast<std::size_t>(nblocks), false);
    for (int i = 0; i < p.total_points(); ++i)
        if (removed[static_cast<std::size_t>(i)]) touched[p.flat_blocks()[static_cast<std::size_t>(i)]] = true;

    // Touched blocks all merge into one; id nblocks stands for the merger.
    std::vector<Color> lower, upper;
    std::vector<std::uint16_t> block_of;
    bool merged_nonempty = false;
    for (int i = 1; i <= p.lower_size(); ++i) {
        int f = p.flat_index(lower_point(i));
        if (removed[static_cast<std::size_t>(f)]) continue;
        lower.push_back(p.lower()[static_cast<std::size_t>(i - 1)]);
        std::uint16_t b = p.flat_blocks()[static_cast<std::size_t>(f)];
        if (touched[b]) {
            block_of.push_back(static_cast<std::uint16_t>(nblocks));
            merged_nonempty = true;
        } else {
            block_of.push_back(b);
        }
    }
    for (int i = 1; i <= p.upper_size(); ++i) {
        int f = p.flat_index(upper_point(i));
        if (removed[static_cast<std::size_t>(f)]) continue;
        upper.push_back(p.upper()[static_cast<std::size_t>(i - 1)]);
        std::uint16_t b = p.flat_blocks()[static_cast<std::size_t>(f)];
        if (touched[b]) {
            block_of.push_back(static_cast<std::uint16_t>(nblocks));
            merged_nonempty = true;
        } else {
            block_of.push_back(b);
        }
    }
    (void)merged_nonempty;  // empty merger simply never appears in block_of
    return Partition::from_flat(std::move(lower), std::move(upper), std::move(block_of));
}

// --- cyclic order -----------------------------------------------------------

std::vector<Point> orientation_order(const Partition& p) {
    std::vector<Point> seq;
    seq.reserve(static_cast<std::size_t>(p.total_points()));
    for (int i = 1; i <= p.lower_size(); ++i) seq.push_back(lower_point(i));
    for (int i = p.upper_size(); i >= 1; --i) seq.push_back(upper_point(i));
    return seq;
}

Orientation::Orientation(const Partition& p)
    : seq_(orientation_order(p)), lower_size_(p.lower_size()) {
    pos_of_.assign(seq_.size(), -1);
    prefix_.assign(seq_.size() + 1, 0);
    for (int i = 0; i < size(); ++i) {
        Point q = seq_[static_cast<std::size_t>(i)];
        int flat = q.row == Row::Lower ? q.index - 1 : lower_size_ + q.index - 1;
        pos_of_[static_cast<std::size_t>(flat)] = i;
        int w = p.normalized_color(q) == Color::White ? 1 : -1;
        prefix_[static_cast<std::size_t>(i + 1)] = prefix_[static_cast<std::size_t>(i)] + w;
    }
}

int Orientation::position(Point p) const {
    int flat = p.row == Row::Lower ? p.index - 1 : lower_size_ + p.index - 1;
    if (flat < 0 || flat >= static_cast<int>(pos_of_.size()) ||
        (p.row == Row::Lower && p.index > lower_size_) || p.index < 1)
        throw Error("unknown point " + to_string(p));
    return pos_of_[static_cast<std::size_t>(flat)];
}

int Orientation::weight_sum(int from, int count) const {
    const int n = size();
    if (count <= 0 || n == 0) return 0;
    from = ((from % n) + n) % n;
    int end = from + count;
    if (end <= n) return prefix_[static_cast<std::size_t>(end)] - prefix_[static_cast<std::size_t>(from)];
    // wraps: total sum of one full cycle is prefix_[n]
    return (prefix_[static_cast<std::size_t>(n)] - prefix_[static_cast<std::size_t>(from)]) +
           prefix_[static_cast<std::size_t>(end - n)];
}

std::vector<Point> interval_points(const Orientation& o, const CyclicInterval& ival) {
    const int n = o.size();
    if (n == 0) return {};
    int a = o.position(ival.first);
    int b = o.position(ival.last);
    int len = ((b - a) % n + n) % n + 1;  // closed walk from first to last
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) pts.push_back(o.at((a + t) % n));
    switch (ival.kind) {
        case IntervalKind::ClosedClosed:
            break;
        case IntervalKind::OpenClosed:
            pts.erase(pts.begin());
            break;
        case IntervalKind::ClosedOpen:
            pts.pop_back();
            break;
        case IntervalKind::OpenOpen:
            pts.erase(pts.begin());
            if (!pts.empty()) pts.pop_back();
            break;
    }
    return pts;
}

std::vector<Point> interval_points(const Partition& p, const CyclicInterval& ival) {
    Orientation o(p);
    return interval_points(o, ival);
}

bool interval_contains(const Orientation& o, const CyclicInterval& ival, Point q) {
    const int n = o.size();
    int a = o.position(ival.first);
    int b = o.position(ival.last);
    int x = o.position(q);
    int span = ((b - a) % n + n) % n;  // offset of last
    int off = ((x - a) % n + n) % n;
    bool inside = off <= span;
    if (!inside) return false;
    bool is_first = off == 0;
    bool is_last = off == span;
    switch (ival.kind) {
        case IntervalKind::ClosedClosed: return true;
        case IntervalKind::OpenClosed: return !is_first;
        case IntervalKind::ClosedOpen: return !is_last;
        case IntervalKind::OpenOpen: return !is_first && !is_last;
    }
    return false;
}

// --- crossings ----------------------------------------------------------------

namespace {

// Positions of a block along the orientation, sorted.
std::vector<int> block_positions(const Orientation& o, const Partition& p, int b) {
    std::vector<int> pos;
    for (Point q : p.block(b)) pos.push_back(o.position(q));
    std::sort(pos.begin(), pos.end());
    return pos;
}

bool cross_by_positions(const std::vector<int>& a, const std::vector<int>& b, int n) {
    // Blocks cross unless all of b lies within a single cyclic gap of a.
    const int k = static_cast<int>(a.size());
    if (k < 2 || b.size() < 2) return false;
    for (int g = 0; g < k; ++g) {
        int lo = a[static_cast<std::size_t>(g)];
        int hi = g + 1 < k ? a[static_cast<std::size_t>(g + 1)] : a[0] + n;
        bool all_inside = true;
        for (int q : b) {
            int qq = q > lo ? q : q + n;
            if (!(lo < qq && qq < hi)) {
                all_inside = false;
                break;
            }
        }
        if (all_inside) return false;
    }
    return true;
}

}  // namespace

bool blocks_cross(const Partition& p, int b1, int b2) {
    if (b1 < 0 || b1 >= p.block_count()) throw Error("unknown block " + std::to_string(b1));
    if (b2 < 0 || b2 >= p.block_count()) throw Error("unknown block " + std::to_string(b2));
    if (b1 == b2) return false;
    Orientation o(p);
    return cross_by_positions(block_positions(o, p, b1), block_positions(o, p, b2), o.size());
}

std::vector<std::vector<int>> connected_components(const Partition& p) {
    const int n = p.block_count();
    Orientation o(p);
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) pos[static_cast<std::size_t>(b)] = block_positions(o, p, b);

    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cross_by_positions(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)], o.size()))
                parent[static_cast<std::size_t>(find(i))] = find(j);

    std::vector<std::vector<int>> comps;
    std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
    for (int b = 0; b < n; ++b) {
        int r = find(b);
        if (comp_of[static_cast<std::size_t>(r)] == -1) {
            comp_of[static_cast<std::size_t>(r)] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(r)])].push_back(b);
    }
    return comps;
}

bool is_noncrossing(const Partition& p) {
    const int n = p.block_count();
    Orientation o(p);
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) pos[static_cast<std::size_t>(b)] = block_positions(o, p, b);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cross_by_positions(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)], o.size()))
                return false;
    return true;
}

bool is_connected(const Partition& p) { return connected_components(p).size() <= 1; }

// --- enumeration ---------------------------------------------------------------

namespace {

// Pair partitions with neutral blocks, one row split at a time: match the
// points recursively, coloring each block in its two neutral ways.
struct PairNeutralGen {
    int lower = 0;
    int upper = 0;
    std::vector<std::uint16_t> block_of;
    std::vector<bool> used;
    std::vector<Color> lcolors, ucolors;
    const std::function<void(const Partition&)>* emit = nullptr;

    bool is_lower(int flat) const { return flat < lower; }

    void color_point(int flat, Color c) {
        if (is_lower(flat))
            lcolors[static_cast<std::size_t>(flat)] = c;
        else
            ucolors[static_cast<std::size_t>(flat - lower)] = c;
    }

    void rec(int next_block) {
        int a = -1;
        const int n = lower + upper;
        for (int i = 0; i < n; ++i)
            if (!used[static_cast<std::size_t>(i)]) {
                a = i;
                break;
            }
        if (a == -1) {
            (*emit)(Partition::from_flat(lcolors, ucolors, block_of));
            return;
        }
        used[static_cast<std::size_t>(a)] = true;
        for (int b = a + 1; b < n; ++b) {
            if (used[static_cast<std::size_t>(b)]) continue;
            used[static_cast<std::size_t>(b)] = true;
            block_of[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(next_block);
            block_of[static_cast<std::size_t>(b)] = static_cast<std::uint16_t>(next_block);
            // neutral colorations: same native color across rows, opposite within a row
            bool same_row = is_lower(a) == is_lower(b);
            for (Color ca : {Color::White, Color::Black}) {
                color_point(a, ca);
                color_point(b, same_row ? invert(ca) : ca);
                rec(next_block + 1);
            }
            used[static_cast<std::size_t>(b)] = false;
        }
        used[static_cast<std::size_t>(a)] = false;
    }
};

}  // namespace

void for_each_pair_neutral(int total_points, const std::function<void(const Partition&)>& fn) {
    if (total_points < 0 || total_points % 2 != 0)
        throw Error("total point count must be even and non-negative");
    if (total_points == 0) {
        fn(Partition());
        return;
    }
    for (int low = total_points; low >= 0; --low) {
        PairNeutralGen gen;
        gen.lower = low;
        gen.upper = total_points - low;
        gen.block_of.assign(static_cast<std::size_t>(total_points), 0);
        gen.used.assign(static_cast<std::size_t>(total_points), false);
        gen.lcolors.assign(static_cast<std::size_t>(low), Color::White);
        gen.ucolors.assign(static_cast<std::size_t>(total_points - low), Color::White);
        gen.emit = &fn;
        gen.rec(0);
    }
}

std::vector<Partition> enumerate_pair_neutral(int total_points) {
    std::vector<Partition> out;
    for_each_pair_neutral(total_points, [&](const Partition& p) { out.push_back(p); });
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.serialize() < b.serialize();
    });
    return out;
}

std::vector<Partition> enumerate_pair_neutral_up_to(int max_points) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_points; n += 2) {
        auto batch = enumerate_pair_neutral(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace ppart
