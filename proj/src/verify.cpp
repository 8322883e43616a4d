#include "ppart/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace ppart {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

struct Checker {
    Report report;

    void param(const std::string& k, int v) { report.params.emplace_back(k, std::to_string(v)); }
    void param(const std::string& k, const std::string& v) { report.params.emplace_back(k, v); }
    void note(const std::string& s) { report.notes.push_back(s); }

    void item() { ++report.checked; }
    void require(bool ok, const std::string& witness) {
        ++report.checked;
        if (!ok && report.counterexamples.size() < kMaxCounterexamples)
            report.counterexamples.push_back(witness);
        if (!ok) failed = true;
    }
    bool failed = false;
};

std::string join_ints(const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + "}";
}

std::string join_set(const std::set<int>& s) {
    return join_ints(std::vector<int>(s.begin(), s.end()));
}

Partition fig_example() {
    return Partition::parse("U[wwwbbb] L[wwwbbb] B{l1,l6;l2,l5;l3,u3;l4,u4;u1,u6;u2,u5}");
}

// ---- suite bodies ---------------------------------------------------------

void suite_pseudo_metric(Checker& ck, int max_points) {
    ck.param("max_points", max_points);
    for (int n = 0; n <= max_points; n += 2) {
        for_each_pair_neutral(n, [&](const Partition& p) {
            Orientation o(p);
            const auto pts = p.points();
            auto d = [&](Point a, Point b) { return signed_point_distance(p, o, a, b); };
            bool ok = true;
            for (Point a : pts) {
                if (d(a, a) != 0) ok = false;
                for (Point b : pts) {
                    if (d(a, b) != -d(b, a)) ok = false;
                    for (Point c : pts) {
                        int ab = d(a, b), bc = d(b, c), ac = d(a, c);
                        if (ac != ab + bc) ok = false;
                        if (std::abs(ac) > std::abs(ab) + std::abs(bc)) ok = false;
                    }
                    if (!ok) break;
                }
                if (!ok) break;
            }
            ck.require(ok, p.serialize());
        });
    }
}

void suite_block_distance_representatives(Checker& ck, int max_points) {
    ck.param("max_points", max_points);
    for (int n = 0; n <= max_points; n += 2) {
        for_each_pair_neutral(n, [&](const Partition& p) {
            if (!is_s0(p)) return;
            Orientation o(p);
            const auto blocks = p.blocks();
            bool ok = true;
            for (std::size_t i = 0; i < blocks.size() && ok; ++i) {
                for (std::size_t j = i + 1; j < blocks.size() && ok; ++j) {
                    int ref = signed_point_distance(p, o, blocks[i][0], blocks[j][0]);
                    for (Point a : blocks[i])
                        for (Point b : blocks[j])
                            if (signed_point_distance(p, o, a, b) != ref) ok = false;
                }
            }
            ck.require(ok, p.serialize());
        });
    }
}

void suite_distance_set_operations(Checker& ck, int max_points) {
    ck.param("max_points", max_points);
    std::vector<Partition> s0;
    for (const Partition& p : enumerate_pair_neutral_up_to(max_points))
        if (is_s0(p)) s0.push_back(p);
    ck.note("s0_members=" + std::to_string(s0.size()));
    std::vector<std::set<int>> as;
    as.reserve(s0.size());
    for (const Partition& p : s0) {
        as.push_back(crossing_distances(p));
        ck.require(crossing_distances(involution(p)) == as.back(),
                   "involution changes distances of " + p.serialize());
    }
    for (std::size_t i = 0; i < s0.size(); ++i) {
        for (std::size_t j = 0; j < s0.size(); ++j) {
            std::set<int> both = as[i];
            both.insert(as[j].begin(), as[j].end());
            ck.require(crossing_distances(tensor(s0[i], s0[j])) == both,
                       "tensor of " + s0[i].serialize() + " and " + s0[j].serialize());
            if (composable(s0[i], s0[j])) {
                auto got = crossing_distances(compose(s0[i], s0[j]).partition);
                ck.require(std::includes(both.begin(), both.end(), got.begin(), got.end()),
                           "composition of " + s0[i].serialize() + " and " + s0[j].serialize());
            }
        }
    }
}

void suite_classify_example(Checker& ck) {
    const Partition fig = fig_example();
    const SemigroupSpec d({3, 4, 5}, true);
    auto records = classify_report(fig, d);
    auto value = [&](const std::string& key) -> std::string {
        for (const auto& [k, v] : records)
            if (k == key) return v;
        return "<missing>";
    };
    ck.require(value("distances") == "{1,2}", "distances=" + value("distances"));
    ck.require(value("semigroup_member") == "true", "semigroup_member=" + value("semigroup_member"));
    ck.require(value("sector_neutral") == "true", "sector_neutral=" + value("sector_neutral"));
    ck.require(value("noncrossing") == "false", "noncrossing=" + value("noncrossing"));

    ck.require(crossing_distances(half_liberation()) == std::set<int>{0}, "three-string distances");
    ck.require(!in_i_d(half_liberation(), d), "three-string membership");
    ck.require(crossing_distances(Partition()).empty(), "empty distances");
    ck.require(is_s0(Partition()) && is_noncrossing(Partition()), "empty predicates");
}

void suite_pattern_algebra(Checker& ck, int frame) {
    ck.param("frame", frame);
    ck.require(completion(BracketPattern({4})).elements() == std::vector<int>({1, 2, 3, 4}),
               "completion of {4}");
    ck.require(completion(BracketPattern({1, 2, 4})).elements() == std::vector<int>({1, 2, 4}),
               "completion of {1,2,4}");
    for (const auto& w : patterns_up_to_frame(frame)) {
        const auto wd = dual(w);
        ck.require(wd.frame() == w.frame(), "dual frame of " + w.format());
        ck.require(dual(wd) == w, "dual involution at " + w.format());
        std::vector<int> meet;
        std::set_intersection(w.elements().begin(), w.elements().end(), wd.elements().begin(),
                              wd.elements().end(), std::back_inserter(meet));
        ck.require(dual(superpose(w, wd)).elements() == meet, "meet identity at " + w.format());
        const auto aw = completion(w);
        ck.require(aw.elements().front() == 1 && aw.frame() == w.frame(),
                   "completion range at " + w.format());
        ck.require(std::includes(aw.elements().begin(), aw.elements().end(), w.elements().begin(),
                                 w.elements().end()),
                   "completion extensive at " + w.format());
    }
    for (const auto& w : patterns_up_to_frame(std::max(frame, 12))) {
        ck.require(completion(completion(w)) == completion(w), "idempotency at " + w.format());
    }
}

void suite_pattern_closure_characterization(Checker& ck, int frame) {
    ck.param("frame", frame);
    ck.require(pattern_closure({}).empty(), "closure of nothing");
    for (const auto& w : patterns_up_to_frame(frame)) {
        ck.require(pattern_closure({w}) == generated_category(w), "at " + w.format());
    }
}

void suite_submonoid_correspondence(Checker& ck, int frame) {
    ck.param("frame", frame);
    const int sum_bound = 3 * frame;
    for (const auto& w : patterns_up_to_frame(frame)) {
        const auto gaps = completion(w).elements();
        auto member = [&](int n) { return !std::binary_search(gaps.begin(), gaps.end(), n); };
        bool ok = true;
        for (int x = 0; x <= sum_bound && ok; ++x) {
            if (!member(x)) continue;
            for (int y = x; x + y <= sum_bound; ++y)
                if (member(y) && !member(x + y)) {
                    ok = false;
                    break;
                }
        }
        ck.require(ok, "complement not closed at " + w.format());
    }
    const std::vector<std::vector<int>> gen_sets = {{2, 3}, {3, 5}, {3, 4, 5}, {2}, {}};
    for (const auto& gens : gen_sets) {
        SemigroupSpec m(gens, true);
        auto cat = monoid_category(m, frame);
        auto desc = infer_monoid(cat);
        bool ok = true;
        for (int n = 0; n <= frame; ++n)
            if (desc.contains(n) != m.contains(n)) ok = false;
        ck.require(ok, "round trip at " + m.format());
    }
}

Partition id_power(Color c, int k) {
    Partition p;
    for (int i = 0; i < k; ++i) p = tensor(p, identity(c));
    return p;
}

void suite_bracket_identities(Checker& ck) {
    ck.param("superposition_frame", 5);
    ck.param("dual_frame", 6);
    ck.param("distance_frame", 8);
    for (Color c : {Color::Black, Color::White}) {
        for (const auto& w : patterns_up_to_frame(5)) {
            const Partition bw = build_bracket(c, w);
            for (const auto& v : patterns_up_to_frame(5)) {
                if (v.frame() > w.frame()) continue;
                const int pad = w.frame() - v.frame();
                const Partition top =
                    tensor(tensor(id_power(c, pad), build_bracket(c, v)), id_power(invert(c), pad));
                ck.require(compose(bw, top).partition == build_bracket(c, superpose(w, v)),
                           "superposition at " + w.format() + " " + v.format());
            }
            const int half = w.frame() + 1;
            for (int j : w.elements()) {
                CyclicInterval s{lower_point(half - j), lower_point(half + 1 + j),
                                 IntervalKind::ClosedClosed};
                ck.require(associated_bracket(bw, s) == build_bracket(c, project(w, j)),
                           "sector bracket at " + w.format() + " j=" + std::to_string(j));
            }
        }
        for (const auto& w : patterns_up_to_frame(6)) {
            const Partition bw = build_bracket(c, w);
            const int quarter = bw.total_points() / 4;
            const Partition d = dual_bracket(bw);
            ck.require(d == build_bracket(invert(c), dual(w)), "dual bracket at " + w.format());
            ck.require(cyclic_rotate(bw, RotationDirection::Clockwise, quarter) == d,
                       "rotation directions at " + w.format());
            ck.require(dual_bracket(d) == bw, "dual involution at " + w.format());
        }
    }
    for (const auto& w : patterns_up_to_frame(8)) {
        const auto a = crossing_distances(build_bracket(Color::Black, w));
        const auto c = completion(w).elements();
        ck.require(a == std::set<int>(c.begin(), c.end()), "distance set at " + w.format());
    }
}

// The generator list of the classification, clipped to brackets that fit the
// search bound: black brackets of the truncated complement patterns, plus the
// three-string crossing when the semigroup misses zero.
std::vector<Partition> classification_generators(const SemigroupSpec& d, int intermediate_points) {
    std::vector<Partition> gens;
    std::vector<int> pattern;
    std::vector<int> last;
    const int frame_cap = intermediate_points / 4;  // 4*(frame+1) points per bracket
    for (int v = 1; v <= frame_cap + 1; ++v) {
        if (!d.contains(v)) pattern.push_back(v);
        if (pattern.empty() || pattern == last) continue;
        if (4 * (pattern.back() + 1) > intermediate_points) break;
        gens.push_back(build_bracket(Color::Black, BracketPattern(pattern)));
        last = pattern;
    }
    if (!d.contains(0)) gens.push_back(half_liberation());
    return gens;
}

void suite_generator_soundness(Checker& ck, int max_points, int intermediate, int iterations) {
    ck.param("max_points", max_points);
    ck.param("intermediate_points", intermediate);
    ck.param("max_iterations", iterations);
    const std::vector<SemigroupSpec> ds = {
        SemigroupSpec({2, 3}, true),
        SemigroupSpec({3, 4, 5}, true),
        SemigroupSpec({1}, false),
        SemigroupSpec({3}, true),
    };
    for (const auto& d : ds) {
        ClosureConfig cfg{max_points, intermediate, iterations};
        ClosureSet cs = generate(classification_generators(d, intermediate), cfg);
        ck.note(d.format() + ": members=" + std::to_string(cs.members().size()) +
                " saturated=" + (cs.saturated() ? "1" : "0") +
                " iterations=" + std::to_string(cs.iterations()));
        for (const Partition& p : cs.members()) {
            ck.require(in_i_d(p, d), d.format() + " breached by " + p.serialize());
        }
    }
}

void suite_generator_completeness(Checker& ck, int max_points, int intermediate_start,
                                  int intermediate_limit) {
    ck.param("max_points", max_points);
    ck.param("intermediate_start", intermediate_start);
    ck.param("intermediate_limit", intermediate_limit);
    const std::vector<SemigroupSpec> ds = {
        SemigroupSpec({2, 3}, true),
        SemigroupSpec({3, 4, 5}, true),
        SemigroupSpec({1}, false),
        SemigroupSpec({3}, true),
    };
    const auto universe = enumerate_pair_neutral_up_to(max_points);
    for (const auto& d : ds) {
        std::vector<const Partition*> targets;
        for (const Partition& p : universe)
            if (in_i_d(p, d)) targets.push_back(&p);

        std::size_t missing = targets.size();
        for (int inter = intermediate_start; inter <= intermediate_limit && missing > 0; inter += 4) {
            ClosureConfig cfg{max_points, inter, 64};
            ClosureSet cs = generate(classification_generators(d, inter), cfg);
            missing = 0;
            const Partition* witness = nullptr;
            for (const Partition* t : targets) {
                if (!cs.contains_member(*t)) {
                    ++missing;
                    witness = t;
                }
            }
            ck.note(d.format() + ": targets=" + std::to_string(targets.size()) +
                    " intermediate=" + std::to_string(inter) + " members=" +
                    std::to_string(cs.members().size()) + " missing=" + std::to_string(missing) +
                    " saturated=" + (cs.saturated() ? "1" : "0"));
            if (missing > 0 && inter + 4 > intermediate_limit && witness != nullptr)
                ck.require(false, d.format() + " misses " + witness->serialize());
        }
        ck.require(missing == 0, d.format() + " left " + std::to_string(missing) + " unfound");
    }
}

void suite_noncrossing_base(Checker& ck, int max_points, int intermediate) {
    ck.param("max_points", max_points);
    ck.param("intermediate_points", intermediate);
    ClosureConfig cfg{max_points, intermediate, 64};
    ClosureSet cs = generate({}, cfg);
    ck.note("members=" + std::to_string(cs.members().size()) +
            " saturated=" + (cs.saturated() ? "1" : "0"));
    std::unordered_set<Partition, PartitionHash> expected;
    for (const Partition& p : enumerate_pair_neutral_up_to(max_points))
        if (is_noncrossing(p)) expected.insert(p);
    for (const Partition& p : cs.members()) {
        if (!is_pair_neutral(p)) continue;
        ck.require(expected.count(p) > 0, "unexpected member " + p.serialize());
    }
    for (const Partition& p : expected) {
        ck.require(cs.contains_member(p), "missing member " + p.serialize());
    }
}

void suite_family_ordering(Checker& ck, int max_points, int family_limit) {
    ck.param("max_points", max_points);
    ck.param("family_limit", family_limit);
    for (int n = 0; n <= max_points; n += 2) {
        for_each_pair_neutral(n, [&](const Partition& p) {
            std::vector<bool> in(static_cast<std::size_t>(family_limit) + 1);
            for (int w = 0; w <= family_limit; ++w) in[static_cast<std::size_t>(w)] = in_s_w(p, w);
            bool ok = true;
            for (int w = 0; w <= family_limit; ++w) {
                for (int wp = 0; wp <= family_limit; ++wp) {
                    const bool contained = wp == 0 ? w == 0 : w % wp == 0;
                    if (contained && in[static_cast<std::size_t>(w)] && !in[static_cast<std::size_t>(wp)])
                        ok = false;
                }
            }
            bool all = true;
            for (int w = 1; w <= family_limit; ++w) all = all && in[static_cast<std::size_t>(w)];
            if (in[0] != all) ok = false;
            ck.require(ok, p.serialize());
        });
    }
}

void suite_distinctness_witness(Checker& ck, int max_points) {
    ck.param("max_points", max_points);
    const SemigroupSpec d1({2, 3}, true);    // complement of {1}
    const SemigroupSpec d2({3, 4, 5}, true); // complement of {1,2}
    const Partition witness = build_bracket(Color::Black, BracketPattern({2}));
    ck.require(in_i_d(witness, d2) && !in_i_d(witness, d1),
               "witness fails: " + witness.serialize());
    ck.note("witness=" + witness.serialize());
    // containment direction: d2 is the smaller semigroup, so its family is larger
    for (const Partition& p : enumerate_pair_neutral_up_to(max_points)) {
        if (in_i_d(p, d1))
            ck.require(in_i_d(p, d2), "containment breached by " + p.serialize());
    }
}

void suite_unbounded_generators(Checker& ck, int frame_from, int frame_to) {
    ck.param("frame_from", frame_from);
    ck.param("frame_to", frame_to);
    const SemigroupSpec d({}, true);  // the monoid {0}
    std::set<int> previous;
    for (int f = frame_from; f <= frame_to; ++f) {
        std::vector<Partition> gens;
        std::vector<int> run;
        for (int v = 1; v <= f; ++v) {
            run.push_back(v);
            gens.push_back(build_bracket(Color::Black, BracketPattern(run)));
        }
        const int bound = 4 * (f + 1);
        ClosureConfig cfg{bound, bound, 1};
        ClosureSet cs = generate(gens, cfg);
        std::set<int> reached;
        for (const Partition& p : cs.members()) {
            ck.require(in_i_d(p, d), "member outside the family: " + p.serialize());
            for (int a : crossing_distances(p)) reached.insert(a);
        }
        std::set<int> expected;
        for (int v = 1; v <= f; ++v) expected.insert(v);
        ck.require(reached == expected,
                   "frame " + std::to_string(f) + " reaches " + join_set(reached));
        ck.require(previous.size() < reached.size(),
                   "no growth from frame " + std::to_string(f - 1));
        ck.note("frame=" + std::to_string(f) + " members=" + std::to_string(cs.members().size()) +
                " distances=" + join_set(reached));
        previous = reached;
    }
}

}  // namespace

// ---- public API -------------------------------------------------------------

std::vector<std::pair<std::string, std::string>> classify_report(
    const Partition& p, const std::optional<SemigroupSpec>& d) {
    std::vector<std::pair<std::string, std::string>> out;
    auto flag = [](bool b) { return b ? std::string("true") : std::string("false"); };
    out.emplace_back("partition", p.serialize());
    out.emplace_back("points", std::to_string(p.total_points()));
    out.emplace_back("blocks", std::to_string(p.block_count()));
    const bool pn = is_pair_neutral(p);
    out.emplace_back("pair_neutral", flag(pn));
    const bool s0 = is_s0(p);
    out.emplace_back("sector_neutral", flag(s0));
    out.emplace_back("noncrossing", flag(is_noncrossing(p)));
    if (s0) {
        out.emplace_back("distances", join_set(crossing_distances(p)));
    } else {
        out.emplace_back("distances", "undefined");
    }
    std::vector<int> families;
    for (int w = 0; w <= 16; ++w)
        if (in_s_w(p, w)) families.push_back(w);
    out.emplace_back("families", join_ints(families));
    if (d) {
        out.emplace_back("semigroup", d->format());
        out.emplace_back("semigroup_member", flag(in_i_d(p, *d)));
    }
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "pseudo-metric",
        "block-distance-representatives",
        "distance-set-operations",
        "classify-example",
        "pattern-algebra",
        "pattern-closure-characterization",
        "submonoid-correspondence",
        "bracket-identities",
        "generator-soundness",
        "generator-completeness",
        "noncrossing-base",
        "family-ordering",
        "distinctness-witness",
        "unbounded-generators",
    };
    return names;
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
    Checker ck;
    ck.report.suite = name;
    const auto start = std::chrono::steady_clock::now();

    if (name == "pseudo-metric") {
        suite_pseudo_metric(ck, options.max_points.value_or(8));
    } else if (name == "block-distance-representatives") {
        suite_block_distance_representatives(ck, options.max_points.value_or(8));
    } else if (name == "distance-set-operations") {
        suite_distance_set_operations(ck, options.max_points.value_or(6));
    } else if (name == "classify-example") {
        suite_classify_example(ck);
    } else if (name == "pattern-algebra") {
        suite_pattern_algebra(ck, options.frame.value_or(10));
    } else if (name == "pattern-closure-characterization") {
        suite_pattern_closure_characterization(ck, options.frame.value_or(8));
    } else if (name == "submonoid-correspondence") {
        suite_submonoid_correspondence(ck, options.frame.value_or(12));
    } else if (name == "bracket-identities") {
        suite_bracket_identities(ck);
    } else if (name == "generator-soundness") {
        suite_generator_soundness(ck, options.max_points.value_or(10),
                                  options.intermediate_points.value_or(14),
                                  options.max_iterations.value_or(3));
    } else if (name == "generator-completeness") {
        suite_generator_completeness(ck, options.max_points.value_or(8),
                                     options.intermediate_points.value_or(12), 16);
    } else if (name == "noncrossing-base") {
        suite_noncrossing_base(ck, options.max_points.value_or(8),
                               options.intermediate_points.value_or(12));
    } else if (name == "family-ordering") {
        suite_family_ordering(ck, options.max_points.value_or(8), 6);
    } else if (name == "distinctness-witness") {
        suite_distinctness_witness(ck, options.max_points.value_or(8));
    } else if (name == "unbounded-generators") {
        suite_unbounded_generators(ck, 2, options.frame.value_or(5));
    } else {
        throw Error("unknown suite '" + name + "'");
    }

    ck.report.passed = !ck.failed;
    ck.report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ck.report;
}

std::string Report::to_records() const {
    std::ostringstream out;
    out << "suite=" << suite << "\n";
    for (const auto& [k, v] : params) out << "param." << k << "=" << v << "\n";
    out << "checked=" << checked << "\n";
    for (std::size_t i = 0; i < notes.size(); ++i) out << "note." << i + 1 << "=" << notes[i] << "\n";
    out << "counterexamples=" << counterexamples.size() << "\n";
    for (std::size_t i = 0; i < counterexamples.size(); ++i)
        out << "counterexample." << i + 1 << "=" << counterexamples[i] << "\n";
    out << "result=" << (passed ? "pass" : "fail") << "\n";
    return out.str();
}

std::string Report::to_plain() const {
    std::ostringstream out;
    out << "suite " << suite << ": " << (passed ? "PASS" : "FAIL") << " (checked " << checked << ")";
    for (const auto& n : notes) out << "\n  " << n;
    for (const auto& c : counterexamples) out << "\n  counterexample: " << c;
    return out.str();
}

}  // namespace ppart
