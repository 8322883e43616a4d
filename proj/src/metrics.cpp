#include "ppart/metrics.hpp"

#include <algorithm>
#include <cctype>

namespace ppart {

int color_weight(const Partition& p, Point q) {
    return p.normalized_color(q) == Color::White ? 1 : -1;
}

int color_sum(const Partition& p, std::span<const Point> pts) {
    int s = 0;
    for (Point q : pts) s += color_weight(p, q);
    return s;
}

int total_color_sum(const Partition& p) {
    int s = 0;
    for (Color c : p.lower()) s += (c == Color::White ? 1 : -1);
    for (Color c : p.upper()) s += (c == Color::White ? -1 : 1);
    return s;
}

bool is_pair(const Partition& p) {
    std::vector<int> sizes(static_cast<std::size_t>(p.block_count()), 0);
    for (auto b : p.flat_blocks()) ++sizes[b];
    return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 2; });
}

bool is_pair_neutral(const Partition& p) {
    std::vector<int> sizes(static_cast<std::size_t>(p.block_count()), 0);
    std::vector<int> sums(static_cast<std::size_t>(p.block_count()), 0);
    for (int i = 1; i <= p.lower_size(); ++i) {
        int b = p.block_index(lower_point(i));
        ++sizes[static_cast<std::size_t>(b)];
        sums[static_cast<std::size_t>(b)] += color_weight(p, lower_point(i));
    }
    for (int i = 1; i <= p.upper_size(); ++i) {
        int b = p.block_index(upper_point(i));
        ++sizes[static_cast<std::size_t>(b)];
        sums[static_cast<std::size_t>(b)] += color_weight(p, upper_point(i));
    }
    for (int b = 0; b < p.block_count(); ++b)
        if (sizes[static_cast<std::size_t>(b)] != 2 || sums[static_cast<std::size_t>(b)] != 0) return false;
    return true;
}

namespace {

int signed_distance_on(const Partition& p, const Orientation& o, Point a, Point b) {
    int pa = o.position(a), pb = o.position(b);
    int n = o.size();
    int steps = ((pb - pa) % n + n) % n;  // length of ]a,b]
    if (p.normalized_color(a) != p.normalized_color(b)) {
        // open interval ]a,b[
        return steps == 0 ? 0 : o.weight_sum(pa + 1, steps - 1);
    }
    return o.weight_sum(pa + 1, steps);
}

}  // namespace

int signed_point_distance(const Partition& p, Point a, Point b) {
    if (!is_pair_neutral(p))
        throw Error("signed color distance requires a pair partition with neutral blocks");
    if (!p.has_point(a)) throw Error("unknown point " + to_string(a));
    if (!p.has_point(b)) throw Error("unknown point " + to_string(b));
    Orientation o(p);
    return signed_distance_on(p, o, a, b);
}

int point_distance(const Partition& p, Point a, Point b) {
    return std::abs(signed_point_distance(p, a, b));
}

int signed_point_distance(const Partition& p, const Orientation& o, Point a, Point b) {
    return signed_distance_on(p, o, a, b);
}

int signed_block_distance(const Partition& p, int b1, int b2) {
    if (!is_s0(p)) throw Error("block distance requires every sector to be neutral");
    Orientation o(p);
    return signed_distance_on(p, o, p.block(b1).front(), p.block(b2).front());
}

int block_distance(const Partition& p, int b1, int b2) {
    return std::abs(signed_block_distance(p, b1, b2));
}

std::vector<CyclicInterval> sectors(const Partition& p) {
    std::vector<CyclicInterval> out;
    for (const auto& b : p.blocks()) {
        if (b.size() != 2) continue;
        out.push_back(CyclicInterval{b[0], b[1], IntervalKind::ClosedClosed});
        out.push_back(CyclicInterval{b[1], b[0], IntervalKind::ClosedClosed});
    }
    return out;
}

bool is_s0(const Partition& p) {
    if (!is_pair_neutral(p)) return false;
    // A sector bounded by the block {a,b} is neutral exactly when the open
    // interval between the legs has sum zero (the block itself is neutral).
    Orientation o(p);
    const int n = o.size();
    for (const auto& b : p.blocks()) {
        int pa = o.position(b[0]), pb = o.position(b[1]);
        int steps = ((pb - pa) % n + n) % n;
        if (steps > 0 && o.weight_sum(pa + 1, steps - 1) != 0) return false;
    }
    return true;
}

std::set<int> crossing_distances(const Partition& p) {
    if (!is_s0(p)) throw Error("crossing distances require every sector to be neutral");
    Orientation o(p);
    const int n = o.size();
    const auto blocks = p.blocks();
    std::vector<std::pair<int, int>> pos;
    pos.reserve(blocks.size());
    for (const auto& b : blocks) {
        int x = o.position(b[0]), y = o.position(b[1]);
        pos.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::set<int> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            auto [a1, a2] = pos[i];
            auto [c1, c2] = pos[j];
            bool in1 = a1 < c1 && c1 < a2;
            bool in2 = a1 < c2 && c2 < a2;
            if (in1 == in2) continue;  // nested or disjoint
            int d = signed_distance_on(p, o, blocks[i][0], blocks[j][0]);
            out.insert(std::abs(d));
        }
    }
    return out;
}

bool in_s_w(const Partition& p, int w) {
    if (w < 0) throw Error("family index must be non-negative");
    if (!is_pair_neutral(p)) return false;
    Orientation o(p);
    const int n = o.size();
    for (const auto& b : p.blocks()) {
        int pa = o.position(b[0]), pb = o.position(b[1]);
        int steps = ((pb - pa) % n + n) % n;
        int s = steps > 0 ? o.weight_sum(pa + 1, steps - 1) : 0;
        if (w == 0 ? s != 0 : s % w != 0) return false;
    }
    return true;
}

// --- semigroups -------------------------------------------------------------

SemigroupSpec::SemigroupSpec(std::vector<int> generators, bool contains_zero)
    : generators_(std::move(generators)), contains_zero_(contains_zero) {
    for (int g : generators_)
        if (g < 1) throw Error("semigroup generators must be positive");
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

bool SemigroupSpec::contains(int n) const {
    if (n < 0) return false;
    if (n == 0) return contains_zero_;
    std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
    reach[0] = 1;
    for (int v = 1; v <= n; ++v) {
        for (int g : generators_) {
            if (g > v) break;
            if (reach[static_cast<std::size_t>(v - g)]) {
                reach[static_cast<std::size_t>(v)] = 1;
                break;
            }
        }
    }
    return reach[static_cast<std::size_t>(n)] != 0;
}

SemigroupSpec SemigroupSpec::parse(std::string_view text) {
    auto fail = [&](const std::string& what, std::size_t at) { throw ParseError(what, at); };
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](std::string_view lit) {
        for (char c : lit) {
            skip();
            if (i >= text.size() || text[i] != c) fail(std::string("expected '") + c + "'", i);
            ++i;
        }
    };
    expect("D{gens=");
    std::vector<int> gens;
    skip();
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == ',')) {
        if (text[i] == ',') {
            ++i;
            skip();
            continue;
        }
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        gens.push_back(v);
        skip();
    }
    expect(";zero=");
    skip();
    if (i >= text.size() || (text[i] != '0' && text[i] != '1')) fail("expected '0' or '1'", i);
    bool zero = text[i] == '1';
    ++i;
    expect("}");
    skip();
    if (i != text.size()) fail("trailing input", i);
    return SemigroupSpec(std::move(gens), zero);
}

std::string SemigroupSpec::format() const {
    std::string out = "D{gens=";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(generators_[i]);
    }
    out += "; zero=";
    out += contains_zero_ ? '1' : '0';
    out += '}';
    return out;
}

bool in_i_d(const Partition& p, const SemigroupSpec& d) {
    if (!is_s0(p)) return false;
    for (int a : crossing_distances(p))
        if (d.contains(a)) return false;
    return true;
}

}  // namespace ppart
