#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppart/brackets.hpp"
#include "ppart/closure.hpp"
#include "ppart/metrics.hpp"
#include "ppart/partition.hpp"
#include "ppart/patterns.hpp"
#include "ppart/verify.hpp"

namespace {

using namespace ppart;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

std::vector<Point> parse_point_list(const std::string& text) {
    std::vector<Point> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        if (item[0] != 'l' && item[0] != 'u') throw Error("bad point '" + item + "'");
        out.push_back(Point{item[0] == 'l' ? Row::Lower : Row::Upper, std::stoi(item.substr(1))});
    }
    return out;
}

std::vector<Partition> read_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::vector<Partition> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
        if (start >= line.size()) continue;
        out.push_back(Partition::parse(line.substr(start)));
    }
    return out;
}

void print_records(const std::vector<std::pair<std::string, std::string>>& records,
                   const std::string& format) {
    if (format == "plain") {
        for (const auto& [k, v] : records) std::cout << k << ": " << v << "\n";
    } else {
        for (const auto& [k, v] : records) std::cout << k << "=" << v << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Calculus of two-colored pair partitions: structural operations,\n"
                 "color-distance invariants, bracket and pattern algebra, bounded\n"
                 "category closures and verification suites."};
    app.require_subcommand(1);
    std::string format = "records";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"records", "plain"}));

    // parse
    auto* cmd_parse = app.add_subcommand("parse", "Validate partitions and echo canonical form");
    std::vector<std::string> parse_texts;
    cmd_parse->add_option("partition", parse_texts, "Partition text")->required()->expected(-1);

    // op
    auto* cmd_op = app.add_subcommand("op", "Apply a structural operation");
    cmd_op->require_subcommand(1);
    std::string op_a, op_b, op_corner, op_direction = "clockwise", op_points;
    int op_steps = 1;
    auto* op_tensor = cmd_op->add_subcommand("tensor", "Horizontal concatenation");
    op_tensor->add_option("p", op_a)->required();
    op_tensor->add_option("q", op_b)->required();
    auto* op_compose = cmd_op->add_subcommand("compose", "Stack q onto p; reports removed loops");
    op_compose->add_option("p", op_a)->required();
    op_compose->add_option("q", op_b)->required();
    auto* op_invol = cmd_op->add_subcommand("involution", "Exchange the rows");
    op_invol->add_option("p", op_a)->required();
    auto* op_cinv = cmd_op->add_subcommand("color-invert", "Flip every color");
    op_cinv->add_option("p", op_a)->required();
    auto* op_refl = cmd_op->add_subcommand("reflect", "Reverse both rows");
    op_refl->add_option("p", op_a)->required();
    auto* op_vrefl = cmd_op->add_subcommand("verticolor-reflect", "Reflect and flip colors");
    op_vrefl->add_option("p", op_a)->required();
    auto* op_rot = cmd_op->add_subcommand("rotate", "Move one end point to the other row");
    op_rot->add_option("p", op_a)->required();
    op_rot->add_option("corner", op_corner, "upper-left-down|upper-right-down|lower-left-up|lower-right-up")
        ->required();
    auto* op_cyc = cmd_op->add_subcommand("cyclic-rotate", "Rotate the whole diagram");
    op_cyc->add_option("p", op_a)->required();
    op_cyc->add_option("--direction", op_direction, "clockwise|counter-clockwise")
        ->check(CLI::IsMember({"clockwise", "counter-clockwise"}));
    op_cyc->add_option("--steps", op_steps, "Number of steps")->check(CLI::NonNegativeNumber);
    auto* op_erase = cmd_op->add_subcommand("erase", "Remove points, merging touched blocks");
    op_erase->add_option("p", op_a)->required();
    op_erase->add_option("points", op_points, "Comma-separated points, e.g. l1,u2")->required();

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "Predicate summary of a partition");
    std::string classify_text, classify_semigroup;
    cmd_classify->add_option("partition", classify_text)->required();
    cmd_classify->add_option("--semigroup", classify_semigroup, "e.g. \"D{gens=3,5; zero=1}\"");

    // bracket
    auto* cmd_bracket = app.add_subcommand("bracket", "Bracket constructions and classification");
    cmd_bracket->require_subcommand(1);
    std::string bracket_color = "b", bracket_pattern, bracket_text;
    auto* br_build = cmd_bracket->add_subcommand("build", "Bracket of a pattern");
    br_build->add_option("--color", bracket_color, "w|b")->check(CLI::IsMember({"w", "b"}));
    br_build->add_option("--pattern", bracket_pattern, "Comma-separated, e.g. 1,2,5")->required();
    auto* br_classify = cmd_bracket->add_subcommand("classify", "Bracket kind of a partition");
    br_classify->add_option("partition", bracket_text)->required();

    // pattern
    auto* cmd_pattern = app.add_subcommand("pattern", "Bracket pattern algebra");
    cmd_pattern->require_subcommand(1);
    std::string pattern_text, monoid_gens;
    int monoid_zero = 1, pattern_frame = 6;
    auto* pt_complete = cmd_pattern->add_subcommand("complete", "Completion of a pattern");
    pt_complete->add_option("pattern", pattern_text, "e.g. {4}")->required();
    auto* pt_dual = cmd_pattern->add_subcommand("dual", "Dual of a pattern");
    pt_dual->add_option("pattern", pattern_text)->required();
    auto* pt_closure = cmd_pattern->add_subcommand("closure", "Generated pattern category");
    pt_closure->add_option("pattern", pattern_text)->required();
    auto* pt_monoid = cmd_pattern->add_subcommand("monoid", "Pattern category of a submonoid");
    pt_monoid->add_option("--gens", monoid_gens, "Comma-separated generators (may be empty)");
    pt_monoid->add_option("--zero", monoid_zero, "Must be 1; monoids contain zero")
        ->check(CLI::IsMember({1}));
    pt_monoid->add_option("--frame", pattern_frame, "Frame bound")->check(CLI::PositiveNumber);

    // closure
    auto* cmd_closure = app.add_subcommand("closure", "Bounded category closure of generators");
    std::string closure_gens_file, closure_emit;
    int closure_max_points = 8, closure_intermediate = 12, closure_iterations = 64;
    cmd_closure->add_option("--gens", closure_gens_file, "Generator list file (one per line)");
    cmd_closure->add_option("--max-points", closure_max_points)->check(CLI::PositiveNumber);
    cmd_closure->add_option("--intermediate", closure_intermediate)->check(CLI::PositiveNumber);
    cmd_closure->add_option("--max-iterations", closure_iterations)->check(CLI::PositiveNumber);
    cmd_closure->add_option("--emit", closure_emit, "Write sorted members to this file");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
    std::string verify_suite;
    SuiteOptions suite_opts;
    int v_max_points = -1, v_intermediate = -1, v_frame = -1, v_iterations = -1;
    cmd_verify->add_option("suite", verify_suite, "Suite name or 'all'")->required();
    cmd_verify->add_option("--max-points", v_max_points);
    cmd_verify->add_option("--intermediate", v_intermediate);
    cmd_verify->add_option("--frame", v_frame);
    cmd_verify->add_option("--max-iterations", v_iterations);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*cmd_parse) {
        for (const auto& t : parse_texts) std::cout << Partition::parse(t).serialize() << "\n";
        return 0;
    }
    if (*cmd_op) {
        if (*op_tensor) {
            std::cout << tensor(Partition::parse(op_a), Partition::parse(op_b)).serialize() << "\n";
        } else if (*op_compose) {
            auto r = compose(Partition::parse(op_a), Partition::parse(op_b));
            std::cout << r.partition.serialize() << "\n" << "loops=" << r.loops << "\n";
        } else if (*op_invol) {
            std::cout << involution(Partition::parse(op_a)).serialize() << "\n";
        } else if (*op_cinv) {
            std::cout << color_invert(Partition::parse(op_a)).serialize() << "\n";
        } else if (*op_refl) {
            std::cout << reflect(Partition::parse(op_a)).serialize() << "\n";
        } else if (*op_vrefl) {
            std::cout << verticolor_reflect(Partition::parse(op_a)).serialize() << "\n";
        } else if (*op_rot) {
            RotationCorner corner;
            if (op_corner == "upper-left-down") corner = RotationCorner::UpperLeftDown;
            else if (op_corner == "upper-right-down") corner = RotationCorner::UpperRightDown;
            else if (op_corner == "lower-left-up") corner = RotationCorner::LowerLeftUp;
            else if (op_corner == "lower-right-up") corner = RotationCorner::LowerRightUp;
            else throw Error("unknown corner '" + op_corner + "'");
            std::cout << rotate(Partition::parse(op_a), corner).serialize() << "\n";
        } else if (*op_cyc) {
            auto dir = op_direction == "clockwise" ? RotationDirection::Clockwise
                                                   : RotationDirection::CounterClockwise;
            std::cout << cyclic_rotate(Partition::parse(op_a), dir, op_steps).serialize() << "\n";
        } else if (*op_erase) {
            std::cout << erase_points(Partition::parse(op_a), parse_point_list(op_points)).serialize()
                      << "\n";
        }
        return 0;
    }
    if (*cmd_classify) {
        std::optional<SemigroupSpec> d;
        if (!classify_semigroup.empty()) d = SemigroupSpec::parse(classify_semigroup);
        print_records(classify_report(Partition::parse(classify_text), d), format);
        return 0;
    }
    if (*cmd_bracket) {
        if (*br_build) {
            BracketPattern w(parse_int_list(bracket_pattern));
            Color c = bracket_color == "b" ? Color::Black : Color::White;
            std::cout << build_bracket(c, w).serialize() << "\n";
        } else if (*br_classify) {
            Partition p = Partition::parse(bracket_text);
            BracketKind kind = classify_bracket(p);
            std::vector<std::pair<std::string, std::string>> records;
            records.emplace_back("kind", std::string(to_string(kind)));
            if (auto w = bracket_pattern_of(p)) records.emplace_back("pattern", w->format());
            print_records(records, format);
        }
        return 0;
    }
    if (*cmd_pattern) {
        if (*pt_complete) {
            std::cout << completion(BracketPattern::parse(pattern_text)).format() << "\n";
        } else if (*pt_dual) {
            std::cout << dual(BracketPattern::parse(pattern_text)).format() << "\n";
        } else if (*pt_closure) {
            for (const auto& w : pattern_closure({BracketPattern::parse(pattern_text)}))
                std::cout << w.format() << "\n";
        } else if (*pt_monoid) {
            SemigroupSpec m(parse_int_list(monoid_gens), true);
            for (const auto& w : monoid_category(m, pattern_frame)) std::cout << w.format() << "\n";
        }
        return 0;
    }
    if (*cmd_closure) {
        std::vector<Partition> gens;
        if (!closure_gens_file.empty()) gens = read_partition_file(closure_gens_file);
        ClosureConfig cfg{closure_max_points, closure_intermediate, closure_iterations};
        ClosureSet cs = generate(gens, cfg);
        std::vector<std::pair<std::string, std::string>> records;
        records.emplace_back("generators", std::to_string(gens.size()));
        records.emplace_back("max_points", std::to_string(cfg.max_points));
        records.emplace_back("intermediate_points", std::to_string(cfg.intermediate_points));
        records.emplace_back("members", std::to_string(cs.members().size()));
        records.emplace_back("saturated", cs.saturated() ? "true" : "false");
        records.emplace_back("iterations", std::to_string(cs.iterations()));
        print_records(records, format);
        if (!closure_emit.empty()) {
            std::ofstream out(closure_emit);
            if (!out) throw Error("cannot write '" + closure_emit + "'");
            for (const auto& line : cs.sorted_lines()) out << line << "\n";
        }
        return 0;
    }
    if (*cmd_verify) {
        if (v_max_points > 0) suite_opts.max_points = v_max_points;
        if (v_intermediate > 0) suite_opts.intermediate_points = v_intermediate;
        if (v_frame > 0) suite_opts.frame = v_frame;
        if (v_iterations > 0) suite_opts.max_iterations = v_iterations;
        std::vector<std::string> names;
        if (verify_suite == "all") {
            names = suite_names();
        } else {
            names.push_back(verify_suite);
        }
        bool all_passed = true;
        for (std::size_t i = 0; i < names.size(); ++i) {
            Report r = run_suite(names[i], suite_opts);
            all_passed = all_passed && r.passed;
            if (format == "plain") {
                std::cout << r.to_plain() << "\n";
            } else {
                if (i) std::cout << "\n";
                std::cout << r.to_records();
            }
            std::cerr << "suite " << r.suite << " wall_seconds=" << r.wall_seconds << "\n";
        }
        return all_passed ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ppart::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
