#include "ppart/patterns.hpp"

#include <algorithm>
#include <cctype>

namespace ppart {

BracketPattern::BracketPattern(std::vector<int> elements) : elems_(std::move(elements)) {
    if (elems_.empty()) throw Error("bracket pattern must be non-empty");
    for (int e : elems_)
        if (e < 1) throw Error("bracket pattern elements must be positive");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool BracketPattern::contains(int i) const {
    return std::binary_search(elems_.begin(), elems_.end(), i);
}

BracketPattern BracketPattern::parse(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '{') throw ParseError("expected '{'", i);
    ++i;
    std::vector<int> elems;
    skip();
    while (i < text.size() && text[i] != '}') {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a digit", i);
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        elems.push_back(v);
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip();
        }
    }
    if (i >= text.size()) throw ParseError("expected '}'", i);
    ++i;
    skip();
    if (i != text.size()) throw ParseError("trailing input", i);
    return BracketPattern(std::move(elems));
}

std::string BracketPattern::format() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(elems_[i]);
    }
    out += '}';
    return out;
}

BracketPattern superpose(const BracketPattern& w, const BracketPattern& v) {
    std::vector<int> e = w.elements();
    e.insert(e.end(), v.elements().begin(), v.elements().end());
    return BracketPattern(std::move(e));
}

BracketPattern project(const BracketPattern& w, int j) {
    if (!w.contains(j)) throw Error("projection index " + std::to_string(j) + " not in pattern");
    std::vector<int> e;
    for (int i : w.elements())
        if (i <= j) e.push_back(i);
    return BracketPattern(std::move(e));
}

BracketPattern dual(const BracketPattern& w) {
    const int f = w.frame();
    std::vector<int> e;
    for (int i = 0; i < f; ++i)
        if (!w.contains(i)) e.push_back(f - i);
    return BracketPattern(std::move(e));
}

BracketPattern completion(const BracketPattern& w) {
    std::vector<int> e;
    for (int j : w.elements())
        for (int i = 0; i < j; ++i)
            if (!w.contains(i)) e.push_back(j - i);
    return BracketPattern(std::move(e));
}

PatternCategory pattern_closure(const std::vector<BracketPattern>& generators) {
    PatternCategory cur(generators.begin(), generators.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<BracketPattern> fresh;
        for (const auto& w : cur) {
            fresh.push_back(dual(w));
            for (int j : w.elements()) fresh.push_back(project(w, j));
            for (const auto& v : cur) fresh.push_back(superpose(w, v));
        }
        for (auto& w : fresh)
            if (cur.insert(std::move(w)).second) grew = true;
    }
    return cur;
}

std::vector<BracketPattern> patterns_up_to_frame(int frame_bound) {
    if (frame_bound < 1) return {};
    if (frame_bound > 24) throw Error("frame bound too large to enumerate");
    std::vector<BracketPattern> out;
    for (unsigned mask = 1; mask < (1u << frame_bound); ++mask) {
        std::vector<int> e;
        for (int i = 0; i < frame_bound; ++i)
            if (mask >> i & 1u) e.push_back(i + 1);
        out.emplace_back(std::move(e));
    }
    return out;
}

PatternCategory generated_category(const BracketPattern& w) {
    const BracketPattern aw = completion(w);
    PatternCategory out;
    for (auto& cand : patterns_up_to_frame(w.frame())) {
        const auto ac = completion(cand).elements();
        if (std::includes(aw.elements().begin(), aw.elements().end(), ac.begin(), ac.end()))
            out.insert(std::move(cand));
    }
    return out;
}

PatternCategory monoid_category(const SemigroupSpec& m, int frame_bound) {
    if (!m.contains_zero()) throw Error("monoid description must contain zero");
    PatternCategory out;
    for (auto& cand : patterns_up_to_frame(frame_bound)) {
        bool disjoint = true;
        for (int a : completion(cand).elements()) {
            if (m.contains(a)) {
                disjoint = false;
                break;
            }
        }
        if (disjoint) out.insert(std::move(cand));
    }
    return out;
}

bool MonoidDescription::contains(int n) const {
    if (n < 0) return false;
    return !std::binary_search(gaps.begin(), gaps.end(), n);
}

MonoidDescription infer_monoid(const PatternCategory& cat) {
    // closure spot-check
    for (const auto& w : cat) {
        if (cat.find(dual(w)) == cat.end())
            throw Error("pattern set is not closed under dualisation at " + w.format());
        for (int j : w.elements())
            if (cat.find(project(w, j)) == cat.end())
                throw Error("pattern set is not closed under projection at " + w.format());
        for (const auto& v : cat)
            if (cat.find(superpose(w, v)) == cat.end())
                throw Error("pattern set is not closed under superposition at " + w.format());
    }
    std::set<int> gapset;
    for (const auto& w : cat)
        for (int a : completion(w).elements()) gapset.insert(a);
    MonoidDescription out{std::vector<int>(gapset.begin(), gapset.end())};
    // the complement must be additively closed on the represented range
    const int bound = out.gaps.empty() ? 0 : 3 * out.gaps.back();
    for (int x = 0; x <= bound; ++x) {
        if (!out.contains(x)) continue;
        for (int y = x; x + y <= bound; ++y)
            if (out.contains(y) && !out.contains(x + y))
                throw Error("inferred complement is not additively closed at " + std::to_string(x + y));
    }
    return out;
}

std::vector<int> minimal_generators(const MonoidDescription& m) {
    // Greedy: a member is a generator unless it is a sum of two smaller
    // non-zero members. Beyond twice the largest gap everything is reachable.
    std::vector<int> gens;
    const int frob = m.gaps.empty() ? 0 : m.gaps.back();
    const int bound = 2 * frob + 1;
    std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
    for (int n = 1; n <= bound; ++n) member[static_cast<std::size_t>(n)] = m.contains(n) ? 1 : 0;
    for (int n = 1; n <= bound; ++n) {
        if (!member[static_cast<std::size_t>(n)]) continue;
        bool decomposable = false;
        for (int a = 1; a < n; ++a) {
            if (member[static_cast<std::size_t>(a)] && member[static_cast<std::size_t>(n - a)]) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) gens.push_back(n);
    }
    // Generators above the Frobenius number only occur when smaller members
    // cannot reach them; the bound 2*frob+1 covers all such candidates.
    return gens;
}

SemigroupData numerical_semigroup_data(const BracketPattern& w) {
    BracketPattern gaps = completion(w);
    SemigroupData out;
    out.gap_set = gaps.elements();
    out.genus = static_cast<int>(out.gap_set.size());
    out.frobenius = w.frame();
    return out;
}

}  // namespace ppart
