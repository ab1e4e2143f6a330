#include "tsic/suites.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tsic/codes.hpp"
#include "tsic/coloring.hpp"
#include "tsic/confusion.hpp"
#include "tsic/graph_algos.hpp"
#include "tsic/model.hpp"
#include "tsic/rates.hpp"
#include "tsic/rng.hpp"

namespace tsic {

namespace {

constexpr int kMaxNotes = 10;

struct Tally {
    SuiteResult result;

    void check(bool ok, const std::string& what) {
        ++result.checks;
        if (!ok) {
            ++result.failures;
            if (static_cast<int>(result.notes.size()) < kMaxNotes) result.notes.push_back(what);
        }
    }
};

TuicpInstance random_instance(Rng& rng, int max_m, int max_t) {
    const int m = rng.range(2, max_m);
    TuicpInstance inst;
    inst.d = Digraph(m);
    inst.t = rng.range(1, max_t);
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) {
            if (u != v && rng.coin()) inst.d.add_edge(u, v);
        }
    }
    for (int msg = 1; msg <= m; ++msg) {
        const int p = rng.range(1, 3);
        (p == 1 ? inst.part.p1 : p == 2 ? inst.part.p2 : inst.part.p3).push_back(msg);
    }
    return inst;
}

UGraph random_ugraph(Rng& rng, int max_n) {
    const int n = rng.range(1, max_n);
    UGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.coin()) g.add_edge(u, v);
        }
    }
    return g;
}

Digraph internal_digraph(int size, bool clique) {
    Digraph d(size);
    if (clique) {
        for (int u = 0; u < size; ++u) {
            for (int v = 0; v < size; ++v) {
                if (u != v) d.add_edge(u, v);
            }
        }
    }
    return d;
}

// Onto color table with colors renumbered 0..k-1 in ascending first value.
std::pair<std::vector<int>, int> random_table(Rng& rng, std::size_t cells, int palette) {
    std::vector<int> raw(cells);
    for (auto& c : raw) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(palette)));
    std::set<int> used(raw.begin(), raw.end());
    std::map<int, int> remap;
    for (int c : used) remap.emplace(c, static_cast<int>(remap.size()));
    for (auto& c : raw) c = remap.at(c);
    return {raw, static_cast<int>(used.size())};
}

SuiteResult suite_coloring_rules(const SuiteOptions& opt) {
    Tally tally;
    tally.result.name = "coloring-rules";
    const int trials = opt.trials > 0 ? opt.trials : 100;
    tally.result.trials = trials;
    Rng rng(opt.seed * 1000003 + 1);
    for (int trial = 0; trial < trials; ++trial) {
        const std::string tag = "coloring-rules trial " + std::to_string(trial);
        const TuicpInstance inst = random_instance(rng, 3, 1);
        const ConfusionGraph cg = ConfusionGraph::build(inst, opt.caps);

        TwoSenderColoring c;
        c.t = inst.t;
        c.m1 = static_cast<int>(inst.part.p1.size());
        c.m2 = static_cast<int>(inst.part.p2.size());
        c.m3 = static_cast<int>(inst.part.p3.size());
        const int palette = rng.range(1, 4);
        std::tie(c.table1, c.num_colors1) = random_table(rng, c.num_cells1(), palette);
        std::tie(c.table2, c.num_colors2) = random_table(rng, c.num_cells2(), palette);

        // Definition-level recheck: some confusable pair shares its ordered pair.
        bool direct_broken = false;
        for (std::uint32_t u = 0; u < cg.num_vertices() && !direct_broken; ++u) {
            for (std::uint32_t delta : cg.differences()) {
                const std::uint32_t v = u ^ delta;
                if (v < u) continue;
                if (c.table1[c.vertex_cell1(cg, u)] == c.table1[c.vertex_cell1(cg, v)] &&
                    c.table2[c.vertex_cell2(cg, u)] == c.table2[c.vertex_cell2(cg, v)]) {
                    direct_broken = true;
                    break;
                }
            }
        }
        const auto verdict = validate_coloring(c, cg);
        tally.check(verdict.has_value() == direct_broken, tag + ": verdict mismatch");
        if (verdict) {
            const bool really_bad =
                cg.adjacent(verdict->u, verdict->v) &&
                c.table1[c.vertex_cell1(cg, verdict->u)] == c.table1[c.vertex_cell1(cg, verdict->v)] &&
                c.table2[c.vertex_cell2(cg, verdict->u)] == c.table2[c.vertex_cell2(cg, verdict->v)];
            tally.check(really_bad, tag + ": reported edge is not a violation");

            const std::uint32_t d = verdict->u ^ verdict->v;
            const bool di = cg.label(d, 1) != 0;
            const bool dj = cg.label(d, 2) != 0;
            const bool dk = cg.label(d, 3) != 0;
            const std::string expected = dk          ? "common part differs"
                                         : di && dj  ? "both exclusive parts differ"
                                         : di        ? "only exclusive part 1 differs"
                                                     : "only exclusive part 2 differs";
            tally.check(verdict->pattern.find(expected) == 0, tag + ": wrong pattern");
        }
    }
    return tally.result;
}

SuiteResult suite_blocks(const SuiteOptions& opt) {
    Tally tally;
    tally.result.name = "blocks";
    const int trials = opt.trials > 0 ? opt.trials : 200;
    tally.result.trials = trials;
    Rng rng(opt.seed * 1000003 + 2);
    for (int trial = 0; trial < trials; ++trial) {
        const TuicpInstance inst = random_instance(rng, 4, 2);
        const ConfusionGraph cg = ConfusionGraph::build(inst, opt.caps);
        for (int part = 1; part <= 3; ++part) {
            const auto bad = verify_block_isomorphism(cg, part, opt.caps);
            tally.check(!bad.has_value(), "blocks trial " + std::to_string(trial) + ": axis " +
                                              std::to_string(part) + " block " +
                                              std::to_string(bad.value_or(0)) + " differs");
        }
    }
    return tally.result;
}

SuiteResult suite_products(const SuiteOptions& opt) {
    Tally tally;
    tally.result.name = "products";
    const int trials = opt.trials > 0 ? opt.trials : 100;
    tally.result.trials = trials;
    Rng rng(opt.seed * 1000003 + 3);
    for (int trial = 0; trial < trials; ++trial) {
        const std::string tag = "products trial " + std::to_string(trial);
        const UGraph g1 = random_ugraph(rng, 7);
        const UGraph g2 = random_ugraph(rng, 7);
        const UGraph lex = lex_product(g1, g2);
        const UGraph disj = disj_product(g1, g2);

        const int chi1 = chromatic_number(g1, opt.caps.chromatic_vertices).num_colors;
        const int chi2 = chromatic_number(g2, opt.caps.chromatic_vertices).num_colors;
        const int chi_lex = chromatic_number(lex, opt.caps.chromatic_vertices).num_colors;
        const int chi_disj = chromatic_number(disj, opt.caps.chromatic_vertices).num_colors;
        tally.check(chi_lex <= chi1 * chi2, tag + ": ordered-pair bound fails on lex");
        tally.check(chi_disj <= chi1 * chi2, tag + ": ordered-pair bound fails on disj");

        bool members_ok = true, subset_ok = true;
        const int n2 = g2.size();
        for (int a1 = 0; a1 < g1.size() && members_ok; ++a1) {
            for (int b1 = 0; b1 < n2; ++b1) {
                for (int a2 = 0; a2 < g1.size(); ++a2) {
                    for (int b2 = 0; b2 < n2; ++b2) {
                        const int u = a1 * n2 + b1, v = a2 * n2 + b2;
                        if (u == v) continue;
                        const bool lex_def =
                            g1.adjacent(a1, a2) || (a1 == a2 && g2.adjacent(b1, b2));
                        const bool disj_def = g1.adjacent(a1, a2) || g2.adjacent(b1, b2);
                        if (lex.adjacent(u, v) != lex_def || disj.adjacent(u, v) != disj_def) {
                            members_ok = false;
                        }
                        if (lex.adjacent(u, v) && !disj.adjacent(u, v)) subset_ok = false;
                    }
                }
            }
        }
        tally.check(members_ok, tag + ": membership predicate mismatch");
        tally.check(subset_ok, tag + ": lex edge missing from disj");
    }
    return tally.result;
}

SuiteResult suite_case1_rates(const SuiteOptions& opt) {
    Tally tally;
    tally.result.name = "case1-rates";
    const auto& pinned = pinned_case1_digraphs();
    const std::map<int, int> block_base = {{16, 16}, {18, 18}, {23, 23},
                                           {20, 16}, {21, 18}, {25, 23}};
    const int sizes[][3] = {{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
    for (const auto& [variant, mask] : pinned) {
        for (const auto& s : sizes) {
            for (bool clique : {false, true}) {
                if (clique && s[0] == 1 && s[1] == 1 && s[2] == 1) continue;
                ++tally.result.trials;
                std::ostringstream tag;
                tag << "case1-rates variant " << variant << " sizes (" << s[0] << "," << s[1]
                    << "," << s[2] << ") " << (clique ? "clique" : "edgeless");
                const TuicpInstance inst = build_fully_participated(
                    internal_digraph(s[0], clique), internal_digraph(s[1], clique),
                    internal_digraph(s[2], clique), mask, 1);

                const AchievableColoring ach = achievable_coloring_case1(inst, variant, opt.caps);
                const ConfusionGraph cg = ConfusionGraph::build(inst, opt.caps);
                tally.check(!validate_coloring(ach.coloring, cg).has_value(),
                            tag.str() + ": construction does not validate");

                const ConstructionFormula closed = construction_formula(inst, opt.caps);
                tally.check(ach.rate == closed.rate, tag.str() + ": rate != closed form");

                const OptimalColoring exact = optimal_two_sender_coloring(inst, opt.caps);
                tally.check(exact.rate <= ach.rate, tag.str() + ": exact above construction");

                const TuicpInstance block_view =
                    block_base.at(variant) == variant ? inst : swap_labels_12(inst);
                tally.check(
                    !verify_jblock_product_iso(block_view, block_base.at(variant), opt.caps)
                         .has_value(),
                    tag.str() + ": sender-2 blocks are not the stated product");

                int sum_bits = 0;
                for (int part = 1; part <= 3; ++part) {
                    sum_bits += single_sender_code(part_subdigraph(inst, part), 1, opt.caps).p;
                }
                const int eps = static_cast<int>(ach.rate.num) - sum_bits;
                tally.check(eps == 0 || eps == -1,
                            tag.str() + ": gap " + std::to_string(eps) + " outside {-1,0}");
            }
        }
    }
    return tally.result;
}

SuiteResult suite_case2e_codes(const SuiteOptions& opt) {
    Tally tally;
    tally.result.name = "case2e-codes";
    std::vector<InteractionMask> masks;
    for (unsigned bits = 0; bits < 64; ++bits) {
        if (classify_case(InteractionMask(bits)).kind == CaseKind::IIE) {
            masks.push_back(InteractionMask(bits));
        }
    }
    for (const InteractionMask& mask : masks) {
        for (int s1 : {1, 2}) {
            for (int s2 : {1, 2}) {
                for (int s3 : {1, 2}) {
                    for (bool clique : {false, true}) {
                        if (clique && s1 == 1 && s2 == 1 && s3 == 1) continue;
                        for (int t : {1, 2}) {
                            ++tally.result.trials;
                            std::ostringstream tag;
                            tag << "case2e-codes " << mask.str() << " sizes (" << s1 << "," << s2
                                << "," << s3 << ") " << (clique ? "clique" : "edgeless")
                                << " t=" << t;
                            const TuicpInstance inst = build_fully_participated(
                                internal_digraph(s1, clique), internal_digraph(s2, clique),
                                internal_digraph(s3, clique), mask, t);
                            int p[4] = {0, 0, 0, 0};
                            for (int part = 1; part <= 3; ++part) {
                                p[part] =
                                    single_sender_code(part_subdigraph(inst, part), t, opt.caps).p;
                            }
                            const int want = std::max({p[1] + p[2], p[1] + p[3], p[2] + p[3]});
                            for (bool tail1 : {true, false}) {
                                try {
                                    const TwoSenderCode code =
                                        construct_case2e_code(inst, tail1, opt.caps);
                                    tally.check(code.total_bits() == want,
                                                tag.str() + ": length != max pairwise sum");
                                    tally.check(
                                        !verify_decodability(code, inst, opt.caps).has_value(),
                                        tag.str() + ": collision");
                                } catch (const std::exception& e) {
                                    tally.check(false, tag.str() + ": " + e.what());
                                    tally.check(false, tag.str() + ": skipped");
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return tally.result;
}

SuiteResult suite_monotonicity(const SuiteOptions& opt) {
    Tally tally;
    tally.result.name = "monotonicity";
    const int trials = opt.trials > 0 ? opt.trials : 100;
    tally.result.trials = trials;
    Rng rng(opt.seed * 1000003 + 6);
    for (int trial = 0; trial < trials; ++trial) {
        const std::string tag = "monotonicity trial " + std::to_string(trial);
        TuicpInstance inst = random_instance(rng, 3, 1);
        const OptimalColoring base = optimal_two_sender_coloring(inst, opt.caps);

        const Rational single{single_sender_code(inst.d, inst.t, opt.caps).p, inst.t};
        tally.check(single <= base.rate, tag + ": below the one-sender relaxation");

        std::vector<std::pair<int, int>> absent;
        for (int u = 0; u < inst.m(); ++u) {
            for (int v = 0; v < inst.m(); ++v) {
                if (u != v && !inst.d.has_edge(u, v)) absent.emplace_back(u, v);
            }
        }
        if (!absent.empty()) {
            const auto [u, v] = absent[rng.below(absent.size())];
            inst.d.add_edge(u, v);
            const OptimalColoring more = optimal_two_sender_coloring(inst, opt.caps);
            tally.check(more.rate <= base.rate, tag + ": extra side information raised the rate");
        }
    }
    return tally.result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"coloring-rules", "blocks",       "products",
                                                   "case1-rates",    "case2e-codes", "monotonicity"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "coloring-rules") return suite_coloring_rules(opt);
    if (name == "blocks") return suite_blocks(opt);
    if (name == "products") return suite_products(opt);
    if (name == "case1-rates") return suite_case1_rates(opt);
    if (name == "case2e-codes") return suite_case2e_codes(opt);
    if (name == "monotonicity") return suite_monotonicity(opt);
    std::string all;
    for (const auto& n : suite_names()) all += (all.empty() ? "" : ", ") + n;
    throw input_error("unknown suite '" + name + "' (expected one of: " + all + ", all)");
}

std::vector<SuiteResult> run_suites(const std::string& name_or_all, const SuiteOptions& opt) {
    std::vector<SuiteResult> results;
    if (name_or_all == "all") {
        for (const auto& name : suite_names()) results.push_back(run_suite(name, opt));
    } else {
        results.push_back(run_suite(name_or_all, opt));
    }
    return results;
}

std::string suites_report(const std::vector<SuiteResult>& results) {
    std::ostringstream out;
    int checks = 0, failures = 0;
    for (const auto& r : results) {
        out << "suite " << r.name << ": " << r.trials << " trials, " << r.checks << " checks, "
            << r.failures << " failures\n";
        for (const auto& note : r.notes) out << "  note: " << note << "\n";
        checks += r.checks;
        failures += r.failures;
    }
    out << "total: " << results.size() << " suite(s), " << checks << " checks, " << failures
        << " failures\n";
    return out.str();
}

}  // namespace tsic
