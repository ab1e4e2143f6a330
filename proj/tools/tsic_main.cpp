#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tsic/codes.hpp"
#include "tsic/coloring.hpp"
#include "tsic/confusion.hpp"
#include "tsic/json_io.hpp"
#include "tsic/model.hpp"
#include "tsic/rates.hpp"
#include "tsic/rng.hpp"
#include "tsic/suites.hpp"

namespace {

using namespace tsic;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;
constexpr int kExitSuiteFailure = 4;

struct CliState {
    RunConfig cfg;
    std::string config_path;
    int cap_mt = 0;  // 0 = untouched
};

void apply_config_file(CliState& state, const CLI::App& app) {
    std::string path = state.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("TSIC_CONFIG")) path = env;
    }
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw input_error(path + ": " + e.what());
    }
    // Command-line flags outrank the file.
    if (app.count("--threads") == 0 && j.contains("threads")) {
        state.cfg.threads = j.at("threads").get<int>();
    }
    if (app.count("--seed") == 0 && j.contains("seed")) {
        state.cfg.seed = j.at("seed").get<unsigned long long>();
    }
    if (app.count("--format") == 0 && j.contains("format")) {
        state.cfg.format = j.at("format").get<std::string>();
    }
    if (app.count("--cap-mt") == 0 && j.contains("cap_mt")) {
        state.cap_mt = j.at("cap_mt").get<int>();
    }
    if (j.contains("caps")) {
        const Json& caps = j.at("caps");
        Caps& c = state.cfg.caps;
        c.materialize_mt = caps.value("materialize_mt", c.materialize_mt);
        c.exact_mt = caps.value("exact_mt", c.exact_mt);
        c.predicate_mt = caps.value("predicate_mt", c.predicate_mt);
        c.chromatic_vertices = caps.value("chromatic_vertices", c.chromatic_vertices);
        c.iso_vertices = caps.value("iso_vertices", c.iso_vertices);
    }
}

void finish_config(CliState& state) {
    if (state.cap_mt > 0) {
        state.cfg.caps.materialize_mt = state.cap_mt;
        state.cfg.caps.exact_mt = state.cap_mt;
    }
    if (state.cfg.caps.materialize_mt < 1 || state.cfg.caps.exact_mt < 1 ||
        state.cfg.caps.predicate_mt < 1 || state.cfg.caps.chromatic_vertices < 1 ||
        state.cfg.caps.iso_vertices < 1 || state.cfg.threads < 1) {
        throw input_error("caps and thread count must be positive");
    }
    if (state.cfg.format != "markdown" && state.cfg.format != "json" &&
        state.cfg.format != "dot") {
        throw input_error("format must be markdown, json, or dot");
    }
}

std::string participation_str(const TuicpInstance& inst) {
    std::string out;
    for (const auto& [arc, level] : participation_map(inst)) {
        if (!out.empty()) out += "; ";
        out += "(" + std::to_string(arc.first) + "," + std::to_string(arc.second) + ") " +
               (level == Participation::Full ? "full" : "partial");
    }
    return out.empty() ? "none" : out;
}

int cmd_classify(const CliState& state, const std::string& file) {
    const TuicpInstance inst = load_instance(file);
    const InteractionMask h = interaction_digraph(inst);
    const CaseLabel label = classify_case(h);
    const std::optional<int> variant = pinned_variant(h);
    const CaseRateRows rows = case_rate_rows(inst, state.cfg.caps);

    if (state.cfg.format == "json") {
        Json j;
        j["interaction_digraph"] = h.str();
        Json parts = Json::object();
        for (const auto& [arc, level] : participation_map(inst)) {
            parts[std::to_string(arc.first) + "->" + std::to_string(arc.second)] =
                level == Participation::Full ? "full" : "partial";
        }
        j["participation"] = std::move(parts);
        j["case"] = label.str();
        j["fully_participated"] = is_fully_participated(inst);
        j["pinned_variant"] = variant ? Json(*variant) : Json(nullptr);
        Json cands = Json::array();
        for (const auto& cand : rows.candidates) {
            cands.push_back({{"case", case_kind_str(cand.kind)},
                             {"expression", cand.expression},
                             {"rate", rational_json(cand.rate)}});
        }
        j["rate_rows"] = std::move(cands);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "# classification\n\n";
    std::cout << "- interaction digraph: " << h.str() << "\n";
    std::cout << "- participation: " << participation_str(inst) << "\n";
    std::cout << "- case: " << label.str() << "\n";
    for (const auto& cand : rows.candidates) {
        std::cout << "- rate row " << case_kind_str(cand.kind) << ": " << cand.expression
                  << " = " << rational_display(cand.rate) << "\n";
    }
    if (variant) {
        std::cout << "- pinned variant: " << *variant
                  << " (block-product construction applies; expected gap to the per-part sum: 0"
                  << " or -1 bits)\n";
    }
    return kExitOk;
}

int cmd_beta(const CliState& state, const std::string& file, bool exact, bool achievable,
             bool bounds) {
    const TuicpInstance inst = load_instance(file);
    const RateReport report = sandwich_check(inst, state.cfg.caps);

    if (exact && !report.exact) {
        if (state.cfg.format == "json") {
            std::cout << report_to_json(report).dump(2) << "\n";
        } else {
            std::cout << report_markdown(report);
        }
        std::cerr << "exact search needs m*t <= " << state.cfg.caps.exact_mt
                  << "; bounds above are still valid\n";
        return kExitResource;
    }

    if (state.cfg.format == "json") {
        Json j;
        if (exact) {
            j["exact"] = rational_json(*report.exact);
        } else if (achievable) {
            j["achievable"] = rational_json(report.achievable);
            j["provenance"] = report.achievable_provenance;
        } else if (bounds) {
            j = report_to_json(report);
            j.erase("exact");
        } else {
            j = report_to_json(report);
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (exact) {
        std::cout << "exact rate: " << rational_display(*report.exact) << "\n";
    } else if (achievable) {
        std::cout << "achievable rate: " << rational_display(report.achievable) << " — "
                  << report.achievable_provenance << "\n";
    } else if (bounds) {
        std::cout << "best floor: " << rational_display(report.lower.best().value) << " — "
                  << report.lower.best().justification << "\n";
        std::cout << "achievable: " << rational_display(report.achievable) << " — "
                  << report.achievable_provenance << "\n";
    } else {
        std::cout << report_markdown(report);
    }
    return kExitOk;
}

int cmd_color(const CliState& state, const std::string& file, bool achievable) {
    const TuicpInstance inst = load_instance(file);
    TwoSenderColoring coloring;
    std::string provenance;
    Rational rate{0, 1};
    if (achievable) {
        const std::optional<int> variant = pinned_variant(interaction_digraph(inst));
        if (!variant) {
            throw precondition_error(
                "no block-product construction for this interaction digraph; use the exact search");
        }
        const AchievableColoring ach = achievable_coloring_case1(inst, *variant, state.cfg.caps);
        coloring = ach.coloring;
        provenance = ach.provenance;
        rate = ach.rate;
    } else {
        const OptimalColoring opt = optimal_two_sender_coloring(inst, state.cfg.caps);
        coloring = opt.coloring;
        provenance = "exhaustive budget sweep; lexicographically least witness";
        rate = opt.rate;
    }
    if (state.cfg.format == "json") {
        Json j = coloring_to_json(coloring);
        j["rate"] = rational_json(rate);
        j["provenance"] = provenance;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "# two-sender coloring\n\n";
    std::cout << "- rate: " << rational_display(rate) << "\n";
    std::cout << "- provenance: " << provenance << "\n";
    std::cout << "- sender-1 palette: " << coloring.num_colors1
              << ", sender-2 palette: " << coloring.num_colors2 << "\n\n";
    const auto print_table = [&](const std::vector<int>& table, int wa, int w3, const char* who) {
        std::cout << "| " << who << " bits | common bits | color |\n|---|---|---|\n";
        for (std::uint32_t a = 0; a < (1u << wa); ++a) {
            for (std::uint32_t k = 0; k < (1u << w3); ++k) {
                std::cout << "| " << bits_to_string(bits_from_uint(a, wa)) << " | "
                          << bits_to_string(bits_from_uint(k, w3)) << " | "
                          << table[(static_cast<std::size_t>(a) << w3) | k] << " |\n";
            }
        }
        std::cout << "\n";
    };
    print_table(coloring.table1, coloring.w1(), coloring.w3(), "part-1");
    print_table(coloring.table2, coloring.w2(), coloring.w3(), "part-2");
    return kExitOk;
}

int cmd_code(const CliState& state, const std::string& file, bool fold, int tail_to) {
    const TuicpInstance inst = load_instance(file);
    TwoSenderCode code;
    if (fold) {
        code = construct_case2e_code(inst, tail_to != 2, state.cfg.caps);
    } else {
        const OptimalColoring opt = optimal_two_sender_coloring(inst, state.cfg.caps);
        code = code_from_coloring(opt.coloring);
        code.provenance = "binary expansion of the exact optimal coloring";
    }
    if (auto collision = verify_decodability(code, inst, state.cfg.caps)) {
        throw std::logic_error("emitted code fails decodability at realization pair " +
                               std::to_string(collision->u) + "," + std::to_string(collision->v));
    }
    if (state.cfg.format == "json") {
        std::cout << code_to_json(code).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "# two-sender code\n\n";
    std::cout << "- per-sender bits: " << code.p1 << " + " << code.p2 << " = "
              << code.total_bits() << " (rate " << rational_display(code.rate()) << ")\n";
    std::cout << "- provenance: " << code.provenance << "\n\n";
    const auto print_words = [&](const std::vector<Codeword>& words, int wa, int w3,
                                 const char* who) {
        std::cout << "| " << who << " bits | common bits | codeword |\n|---|---|---|\n";
        for (std::uint32_t a = 0; a < (1u << wa); ++a) {
            for (std::uint32_t k = 0; k < (1u << w3); ++k) {
                const Codeword& w = words[(static_cast<std::size_t>(a) << w3) | k];
                std::cout << "| " << bits_to_string(bits_from_uint(a, wa)) << " | "
                          << bits_to_string(bits_from_uint(k, w3)) << " | "
                          << (w.empty() ? "(empty)" : bits_to_string(w)) << " |\n";
            }
        }
        std::cout << "\n";
    };
    print_words(code.enc1, code.w1(), code.w3(), "part-1");
    print_words(code.enc2, code.w2(), code.w3(), "part-2");
    return kExitOk;
}

int cmd_confusion(const CliState& state, const std::string& file) {
    const TuicpInstance inst = load_instance(file);
    const ConfusionGraph cg = ConfusionGraph::build(inst, state.cfg.caps, state.cfg.threads);
    if (state.cfg.format == "json") {
        Json j;
        j["vertices"] = cg.num_vertices();
        j["edges"] = cg.num_edges();
        Json deltas = Json::array();
        for (std::uint32_t d : cg.differences()) deltas.push_back(d);
        j["confusable_differences"] = std::move(deltas);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << to_dot(cg);
    return kExitOk;
}

int cmd_verify(const CliState& state, const std::string& suite, int trials) {
    SuiteOptions opt;
    opt.seed = state.cfg.seed;
    opt.trials = trials;
    opt.caps = state.cfg.caps;
    opt.threads = state.cfg.threads;
    const std::vector<SuiteResult> results = run_suites(suite, opt);
    int failures = 0;
    for (const auto& r : results) failures += r.failures;
    if (state.cfg.format == "json") {
        Json j = Json::array();
        for (const auto& r : results) {
            j.push_back({{"suite", r.name},
                         {"trials", r.trials},
                         {"checks", r.checks},
                         {"failures", r.failures},
                         {"notes", r.notes}});
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << suites_report(results);
    }
    return failures == 0 ? kExitOk : kExitSuiteFailure;
}

int cmd_gen(const CliState& state, const std::string& case_name, std::vector<int> sizes,
            const std::string& internal) {
    if (sizes.empty()) sizes = {1, 1, 1};
    if (sizes.size() != 3) throw input_error("--sizes wants exactly three entries a,b,c");
    for (int s : sizes) {
        if (s < 1) throw input_error("part sizes must be at least 1");
    }
    Rng rng(state.cfg.seed);
    const auto internal_digraph = [&](int size) {
        Digraph d(size);
        if (internal == "clique") {
            for (int u = 0; u < size; ++u) {
                for (int v = 0; v < size; ++v) {
                    if (u != v) d.add_edge(u, v);
                }
            }
        } else if (internal == "random") {
            for (int u = 0; u < size; ++u) {
                for (int v = 0; v < size; ++v) {
                    if (u != v && rng.coin()) d.add_edge(u, v);
                }
            }
        } else if (internal != "empty") {
            throw input_error("--internal must be empty, clique, or random");
        }
        return d;
    };

    InteractionMask mask;
    if (case_name == "I") {
        const auto& pinned = pinned_case1_digraphs();
        std::vector<int> variants;
        for (const auto& [variant, h] : pinned) variants.push_back(variant);
        mask = pinned.at(variants[state.cfg.seed % variants.size()]);
    } else {
        std::vector<InteractionMask> masks;
        for (unsigned bits = 0; bits < 64; ++bits) {
            const InteractionMask h(bits);
            if (case_kind_str(classify_case(h).kind) == case_name) masks.push_back(h);
        }
        if (masks.empty()) {
            throw input_error("no interaction digraph is classified as '" + case_name + "'");
        }
        mask = masks[state.cfg.seed % masks.size()];
    }
    const TuicpInstance inst =
        build_fully_participated(internal_digraph(sizes[0]), internal_digraph(sizes[1]),
                                 internal_digraph(sizes[2]), mask, 1);
    std::cout << instance_to_json(inst).dump(2) << "\n";
    return kExitOk;
}

int cmd_report(const CliState& state, const std::string& file) {
    const TuicpInstance inst = load_instance(file);
    const RateReport report = sandwich_check(inst, state.cfg.caps);
    if (state.cfg.format == "json") {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << report_markdown(report);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CliState state;
    CLI::App app{"two-sender index-coding workbench"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global flags after the subcommand too
    app.add_option("--threads", state.cfg.threads, "worker threads (results never depend on it)");
    app.add_option("--seed", state.cfg.seed, "seed for generators and suites");
    app.add_option("--cap-mt", state.cap_mt, "override the materialize and exact m*t caps");
    app.add_option("--config", state.config_path,
                   "JSON config file (or set TSIC_CONFIG); flags win");
    app.add_option("--format", state.cfg.format, "markdown | json | dot (confusion only)");

    std::string file, suite = "all", case_name, internal = "empty";
    std::vector<int> sizes;
    int trials = 0, tail_to = 1;
    bool exact = false, achievable = false, bounds = false, fold = false;

    CLI::App* classify = app.add_subcommand("classify", "interaction digraph and case label");
    classify->add_option("instance", file, "instance JSON file")->required();

    CLI::App* beta = app.add_subcommand("beta", "rate floors, constructions, exact search");
    beta->add_option("instance", file, "instance JSON file")->required();
    beta->add_flag("--exact", exact, "exact optimal rate (within the m*t cap)");
    beta->add_flag("--achievable", achievable, "constructive upper bound only");
    beta->add_flag("--bounds", bounds, "floors and the achievable rate only");

    CLI::App* color = app.add_subcommand("color", "two-sender coloring tables");
    color->add_option("instance", file, "instance JSON file")->required();
    color->add_flag("--achievable", achievable, "block-product construction instead of exact");

    CLI::App* code = app.add_subcommand("code", "two-sender code tables");
    code->add_option("instance", file, "instance JSON file")->required();
    code->add_flag("--fold", fold, "common-part folding construction (two-way interactions)");
    code->add_option("--tail-to", tail_to, "sender carrying leftover common bits (1 or 2)")
        ->check(CLI::Range(1, 2));

    CLI::App* confusion = app.add_subcommand("confusion", "confusion graph (DOT by default)");
    confusion->add_option("instance", file, "instance JSON file")->required();

    CLI::App* verify = app.add_subcommand("verify", "property suites");
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--trials", trials, "override the suite's trial count");

    CLI::App* gen = app.add_subcommand("gen", "emit a fully-participated instance");
    gen->add_option("--case", case_name, "I, II-A, II-B, II-C, II-D, II-E, II-B/E-unresolved")
        ->required();
    gen->add_option("--sizes", sizes, "part sizes a,b,c")->delimiter(',');
    gen->add_option("--internal", internal, "empty | clique | random");

    CLI::App* report = app.add_subcommand("report", "full rate sandwich report");
    report->add_option("instance", file, "instance JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        apply_config_file(state, app);
        finish_config(state);
        if (classify->parsed()) return cmd_classify(state, file);
        if (beta->parsed()) {
            if (exact + achievable + bounds > 1) {
                throw input_error("pick at most one of --exact/--achievable/--bounds");
            }
            return cmd_beta(state, file, exact, achievable, bounds);
        }
        if (color->parsed()) return cmd_color(state, file, achievable);
        if (code->parsed()) return cmd_code(state, file, fold, tail_to);
        if (confusion->parsed()) return cmd_confusion(state, file);
        if (verify->parsed()) return cmd_verify(state, suite, trials);
        if (gen->parsed()) return cmd_gen(state, case_name, sizes, internal);
        if (report->parsed()) return cmd_report(state, file);
        std::cerr << "no command given\n";
        return kExitUsage;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitValidation;
    }
}
