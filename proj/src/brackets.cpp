#include "ppart/brackets.hpp"

#include <algorithm>

#include "ppart/metrics.hpp"

namespace ppart {

Partition identity(Color c) {
    return Partition::from_blocks({c}, {c}, {{lower_point(1), upper_point(1)}});
}

Partition cup(Color first) {
    return Partition::from_blocks({first, invert(first)}, {}, {{lower_point(1), lower_point(2)}});
}

Partition half_liberation() {
    static const Partition p = Partition::parse("U[wbw] L[wbw] B{l1,u3;l2,u2;l3,u1}");
    return p;
}

bool is_projective(const Partition& p) {
    if (involution(p) != p) return false;
    if (!composable(p, p)) return false;
    return compose(p, p).partition == p;
}

bool is_bracket(const Partition& p) {
    const int m = p.lower_size();
    if (m == 0) return false;
    if (!is_projective(p)) return false;
    return p.block_index(lower_point(1)) == p.block_index(lower_point(m)) &&
           static_cast<int>(p.block(p.block_index(lower_point(1))).size()) ==
               (m == 1 ? 1 : 2);
}

Partition associated_bracket(const Partition& p, const CyclicInterval& s) {
    if (!is_pair_neutral(p))
        throw Error("associated bracket requires a pair partition with neutral blocks");
    Orientation o(p);
    std::vector<Point> pts = interval_points(o, s);
    if (pts.size() < 2) throw Error("not a sector: fewer than two points");
    const Point first = pts.front(), last = pts.back();
    if (p.block_index(first) != p.block_index(last) || p.block(p.block_index(first)).size() != 2)
        throw Error("not a sector: boundary points do not form a block");

    const int n = static_cast<int>(pts.size());
    std::vector<Color> row(static_cast<std::size_t>(n));
    std::vector<int> index_in(static_cast<std::size_t>(p.total_points()), 0);
    for (int i = 0; i < n; ++i) {
        row[static_cast<std::size_t>(i)] = p.normalized_color(pts[static_cast<std::size_t>(i)]);
        index_in[static_cast<std::size_t>(p.flat_index(pts[static_cast<std::size_t>(i)]))] = i + 1;
    }

    std::vector<std::vector<Point>> blocks;
    blocks.push_back({lower_point(1), lower_point(n)});
    blocks.push_back({upper_point(1), upper_point(n)});
    for (int i = 2; i <= n - 1; ++i) {
        Point q = pts[static_cast<std::size_t>(i - 1)];
        auto blk = p.block(p.block_index(q));
        Point partner = blk[0] == q ? blk[1] : blk[0];
        int j = index_in[static_cast<std::size_t>(p.flat_index(partner))];
        if (j >= 2 && j <= n - 1 &&
            p.block_index(pts[static_cast<std::size_t>(j - 1)]) == p.block_index(q)) {
            if (j > i) {
                blocks.push_back({lower_point(i), lower_point(j)});
                blocks.push_back({upper_point(i), upper_point(j)});
            }
        } else {
            // partner outside the sector: the block crosses the boundary
            blocks.push_back({lower_point(i), upper_point(i)});
        }
    }
    return Partition::from_blocks(row, row, blocks);
}

Partition bracket_argument(const Partition& p) {
    if (!is_bracket(p)) throw Error("not a bracket");
    const int m = p.lower_size(), k = p.upper_size();
    return erase_points(p, {lower_point(1), lower_point(m), upper_point(1), upper_point(k)});
}

Partition make_bracket(Color c, const Partition& argument) {
    if (!is_projective(argument)) throw Error("bracket argument must be projective");
    if (!is_pair_neutral(argument))
        throw Error("bracket argument must be a pair partition with neutral blocks");
    const int n = argument.lower_size();
    std::vector<Color> row;
    row.reserve(static_cast<std::size_t>(n) + 2);
    row.push_back(c);
    row.insert(row.end(), argument.lower().begin(), argument.lower().end());
    row.push_back(invert(c));

    std::vector<std::vector<Point>> blocks;
    for (auto& b : argument.blocks()) {
        for (auto& q : b) q.index += 1;
        blocks.push_back(std::move(b));
    }
    blocks.push_back({lower_point(1), lower_point(n + 2)});
    blocks.push_back({upper_point(1), upper_point(n + 2)});
    return Partition::from_blocks(row, row, blocks);
}

Partition weak_inversion(const Partition& p) {
    if (!is_bracket(p)) throw Error("not a bracket");
    return make_bracket(invert(p.lower().front()), p);
}

Partition strong_inversion(const Partition& p) {
    if (!is_bracket(p)) throw Error("not a bracket");
    const Color c = p.lower().front();
    const Partition a = bracket_argument(p);
    return make_bracket(invert(c), tensor(tensor(identity(c), a), identity(invert(c))));
}

std::vector<int> lower_row_turns(const Partition& p) {
    std::vector<int> out;
    for (int i = 1; i < p.lower_size(); ++i) {
        if (color_weight(p, lower_point(i)) + color_weight(p, lower_point(i + 1)) == 0)
            out.push_back(i);
    }
    return out;
}

bool is_dualizable(const Partition& p) {
    if (!is_bracket(p)) return false;
    if (!is_s0(p)) return false;
    if (verticolor_reflect(p) != p) return false;
    const int m = p.lower_size();
    if (m <= 2) return false;  // empty interior
    const int a = m / 2, b = m / 2 + 1;
    if (color_weight(p, lower_point(a)) + color_weight(p, lower_point(b)) != 0) return false;
    auto through = [&](int i) {
        for (Point q : p.block(p.block_index(lower_point(i))))
            if (q.row == Row::Upper) return true;
        return false;
    };
    return through(a) && through(b);
}

Partition dual_bracket(const Partition& p) {
    if (!is_dualizable(p)) throw Error("not a dualizable bracket");
    const int n = p.total_points();
    if (n % 4 != 0) throw Error("point count not divisible by four");
    return cyclic_rotate(p, RotationDirection::CounterClockwise, n / 4);
}

std::string_view to_string(BracketKind k) {
    switch (k) {
        case BracketKind::NotABracket: return "not-a-bracket";
        case BracketKind::ResidualFirstKind: return "residual-first-kind";
        case BracketKind::ResidualSecondKindNonminimal: return "residual-second-kind-nonminimal";
        case BracketKind::Minimal: return "minimal";
        case BracketKind::PlainBracket: return "plain-bracket";
    }
    return "?";
}

BracketKind classify_bracket(const Partition& p) {
    if (!is_bracket(p)) return BracketKind::NotABracket;
    const int m = p.lower_size();
    const auto turns = lower_row_turns(p);
    int interior_turns = 0;
    for (int i : turns)
        if (i >= 2 && i + 1 <= m - 1) ++interior_turns;
    const bool connected = is_connected(p);
    if (connected && interior_turns == 0) return BracketKind::ResidualFirstKind;
    if (connected && is_dualizable(p) && interior_turns == 1) {
        if (turns.size() == 1 && p.lower().front() == Color::Black) return BracketKind::Minimal;
        return BracketKind::ResidualSecondKindNonminimal;
    }
    return BracketKind::PlainBracket;
}

Partition build_bracket(Color c, const BracketPattern& w) {
    const int n = w.frame() + 1;  // points per half-row
    std::vector<Color> row(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        row[static_cast<std::size_t>(i)] = c;
        row[static_cast<std::size_t>(n + i)] = invert(c);
    }
    std::vector<std::vector<Point>> blocks;
    for (int k = 0; k <= w.frame(); ++k) {
        const int li = n - k, ri = n + 1 + k;
        if (w.contains(k)) {
            blocks.push_back({lower_point(li), lower_point(ri)});
            blocks.push_back({upper_point(li), upper_point(ri)});
        } else {
            blocks.push_back({lower_point(li), upper_point(li)});
            blocks.push_back({lower_point(ri), upper_point(ri)});
        }
    }
    return Partition::from_blocks(row, row, blocks);
}

std::optional<BracketPattern> bracket_pattern_of(const Partition& p) {
    const int m = p.lower_size();
    if (m < 4 || m % 2 != 0 || p.upper_size() != m) return std::nullopt;
    const int n = m / 2;
    std::vector<int> elems;
    for (int k = 0; k <= n - 1; ++k) {
        const int li = n - k, ri = n + 1 + k;
        const int b = p.block_index(lower_point(li));
        const auto blk = p.block(b);
        if (blk.size() != 2) return std::nullopt;
        const Point partner = blk[0] == lower_point(li) ? blk[1] : blk[0];
        if (partner == lower_point(ri)) {
            elems.push_back(k);
        } else if (partner != upper_point(li)) {
            return std::nullopt;
        }
    }
    if (elems.empty() || elems.front() == 0) return std::nullopt;
    BracketPattern w(std::move(elems));
    if (w.frame() != n - 1) return std::nullopt;
    if (build_bracket(p.lower().front(), w) != p) return std::nullopt;
    return w;
}

}  // namespace ppart
