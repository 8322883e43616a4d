#include "ppart/closure.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "ppart/metrics.hpp"

namespace ppart {

std::vector<Partition> base_partitions() {
    return {identity(Color::White), identity(Color::Black), cup(Color::Black), cup(Color::White)};
}

namespace {

// Row colorations as compact keys; rows in closure searches stay short.
std::uint64_t row_key(const std::vector<Color>& row) {
    std::uint64_t k = static_cast<std::uint64_t>(row.size()) << 48;
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] == Color::Black) k |= std::uint64_t(1) << i;
    return k;
}

struct Engine {
    ClosureConfig cfg;
    std::unordered_set<Partition, PartitionHash> seen;  // owns every element
    std::vector<const Partition*> all;                  // admitted, insertion order
    std::unordered_map<std::uint64_t, std::vector<const Partition*>> by_upper, by_lower;
    std::vector<std::vector<const Partition*>> by_size;  // index: total points
    std::vector<const Partition*> pending;

    void offer(Partition p) {
        if (p.total_points() > cfg.intermediate_points) return;
        auto [it, fresh] = seen.insert(std::move(p));
        if (fresh) pending.push_back(&*it);
    }

    void admit(const Partition* p) {
        all.push_back(p);
        by_upper[row_key(p->upper())].push_back(p);
        by_lower[row_key(p->lower())].push_back(p);
        by_size[static_cast<std::size_t>(p->total_points())].push_back(p);
    }

    void unary_images(const Partition& p) {
        offer(involution(p));
        offer(verticolor_reflect(p));
        if (p.upper_size() > 0) {
            offer(rotate(p, RotationCorner::UpperLeftDown));
            offer(rotate(p, RotationCorner::UpperRightDown));
        }
        if (p.lower_size() > 0) {
            offer(rotate(p, RotationCorner::LowerLeftUp));
            offer(rotate(p, RotationCorner::LowerRightUp));
        }
    }

    void binary_images(const Partition& p) {
        const int budget = cfg.intermediate_points - p.total_points();
        for (int sz = 0; sz <= budget; ++sz) {
            for (const Partition* q : by_size[static_cast<std::size_t>(sz)]) {
                offer(tensor(p, *q));
                offer(tensor(*q, p));
            }
        }
        // p stacked on top of matching bottoms
        if (auto it = by_upper.find(row_key(p.lower())); it != by_upper.end()) {
            for (const Partition* q : it->second) {
                if (q->lower_size() + p.upper_size() > cfg.intermediate_points) continue;
                offer(compose(*q, p).partition);
            }
        }
        // p at the bottom under matching tops
        if (auto it = by_lower.find(row_key(p.upper())); it != by_lower.end()) {
            for (const Partition* q : it->second) {
                if (p.lower_size() + q->upper_size() > cfg.intermediate_points) continue;
                offer(compose(p, *q).partition);
            }
        }
    }
};

}  // namespace

ClosureSet generate(const std::vector<Partition>& generators, const ClosureConfig& config) {
    if (config.max_points < 2) throw Error("retention bound must be at least 2");
    if (config.intermediate_points < config.max_points)
        throw Error("intermediate bound must be at least the retention bound");
    if (config.max_iterations < 1) throw Error("iteration cap must be positive");

    Engine eng;
    eng.cfg = config;
    eng.by_size.resize(static_cast<std::size_t>(config.intermediate_points) + 1);
    for (const Partition& b : base_partitions()) eng.offer(b);
    for (const Partition& g : generators) eng.offer(g);

    bool saturated = false;
    int rounds = 0;
    while (true) {
        if (eng.pending.empty()) {
            saturated = true;
            break;
        }
        if (rounds == config.max_iterations) break;
        ++rounds;
        // admit the frontier first so same-round pairs are visible both ways
        std::size_t first = eng.all.size();
        std::vector<const Partition*> frontier;
        frontier.swap(eng.pending);
        for (const Partition* p : frontier) eng.admit(p);
        for (std::size_t i = first; i < eng.all.size(); ++i) {
            const Partition& p = *eng.all[i];
            eng.unary_images(p);
            eng.binary_images(p);
        }
    }

    ClosureSet out;
    out.config_ = config;
    out.saturated_ = saturated;
    out.iterations_ = rounds;
    auto keep = [&](const Partition& p) {
        if (p.total_points() <= config.max_points && !out.member_set_.count(p)) {
            out.members_.push_back(p);
            out.member_set_.insert(p);
        }
    };
    for (const Partition* p : eng.all) keep(*p);
    for (const Partition* p : eng.pending) keep(*p);  // cap hit before admission
    return out;
}

std::vector<std::string> ClosureSet::sorted_lines() const {
    std::vector<std::string> lines;
    lines.reserve(members_.size());
    for (const Partition& p : members_) lines.push_back(p.serialize());
    std::sort(lines.begin(), lines.end());
    return lines;
}

Containment closure_contains(const ClosureSet& cs, const Partition& p) {
    if (p.total_points() > cs.config().max_points)
        throw Error("partition exceeds the retention bound of the closure");
    return cs.contains_member(p) ? Containment::Yes : Containment::NoWithinBounds;
}

PatternCategory closure_bracket_patterns(const ClosureSet& cs, int frame_bound) {
    if (4 * (frame_bound + 1) > cs.config().max_points)
        throw Error("retention bound too small for brackets of frame " + std::to_string(frame_bound));
    PatternCategory out;
    for (auto& w : patterns_up_to_frame(frame_bound)) {
        if (cs.contains_member(build_bracket(Color::Black, w))) out.insert(std::move(w));
    }
    // must be closed under the three pattern operations
    for (const auto& w : out) {
        if (out.find(dual(w)) == out.end())
            throw Error("bracket patterns of the closure not closed under dualisation");
        for (int j : w.elements())
            if (out.find(project(w, j)) == out.end())
                throw Error("bracket patterns of the closure not closed under projection");
        for (const auto& v : out)
            if (out.find(superpose(w, v)) == out.end())
                throw Error("bracket patterns of the closure not closed under superposition");
    }
    return out;
}

}  // namespace ppart
