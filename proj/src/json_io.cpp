#include "tsic/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tsic/bits.hpp"

namespace tsic {

namespace {

std::vector<int> int_list(const Json& j, const std::string& what) {
    if (!j.is_array()) throw input_error(what + " must be an array of message ids");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw input_error(what + " holds a non-integer entry");
        out.push_back(e.get<int>());
    }
    return out;
}

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

Json cell_table_json(const std::vector<int>& table, int wa, int w3,
                     const char* part_key) {
    Json rows = Json::array();
    for (std::uint32_t a = 0; a < (1u << wa); ++a) {
        for (std::uint32_t k = 0; k < (1u << w3); ++k) {
            Json row;
            row[part_key] = bits_to_string(bits_from_uint(a, wa));
            row["common_bits"] = bits_to_string(bits_from_uint(k, w3));
            row["color"] = table[(static_cast<std::size_t>(a) << w3) | k];
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<int> cell_table_from_json(const Json& rows, int wa, int w3,
                                      const char* part_key, const std::string& what) {
    if (!rows.is_array() || rows.size() != (std::size_t{1} << (wa + w3))) {
        throw input_error(what + " must list every cell exactly once");
    }
    std::vector<int> table(std::size_t{1} << (wa + w3), -1);
    for (const auto& row : rows) {
        const BitVec a = bits_from_string(row.at(part_key).get<std::string>());
        const BitVec k = bits_from_string(row.at("common_bits").get<std::string>());
        if (static_cast<int>(a.size()) != wa || static_cast<int>(k.size()) != w3) {
            throw input_error(what + " cell labels have the wrong widths");
        }
        const std::size_t cell = (bits_to_uint(a) << w3) | bits_to_uint(k);
        if (table[cell] != -1) throw input_error(what + " repeats a cell");
        table[cell] = row.at("color").get<int>();
    }
    return table;
}

Json codeword_table_json(const std::vector<Codeword>& words, int wa, int w3,
                         const char* part_key) {
    Json rows = Json::array();
    for (std::uint32_t a = 0; a < (1u << wa); ++a) {
        for (std::uint32_t k = 0; k < (1u << w3); ++k) {
            Json row;
            row[part_key] = bits_to_string(bits_from_uint(a, wa));
            row["common_bits"] = bits_to_string(bits_from_uint(k, w3));
            row["codeword"] = bits_to_string(words[(static_cast<std::size_t>(a) << w3) | k]);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace

TuicpInstance instance_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("instance JSON must be an object");
    TuicpInstance inst;
    try {
        const int m = j.at("m").get<int>();
        inst.t = j.value("t", 1);
        inst.d = Digraph(m);
        if (j.contains("side_information")) {
            const Json& side = j.at("side_information");
            if (!side.is_object()) throw input_error("side_information must be an object");
            for (const auto& [key, value] : side.items()) {
                int receiver = 0;
                try {
                    receiver = std::stoi(key);
                } catch (const std::exception&) {
                    throw input_error("side_information key is not a receiver id: " + key);
                }
                if (receiver < 1 || receiver > m) {
                    throw input_error("side_information receiver out of range: " + key);
                }
                for (int known : int_list(value, "side_information[" + key + "]")) {
                    if (known < 1 || known > m) {
                        throw input_error("receiver " + key + " cites unknown message " +
                                          std::to_string(known));
                    }
                    inst.d.add_edge(receiver - 1, known - 1);
                }
            }
        }
        const Json& part = j.at("partition");
        inst.part.p1 = int_list(part.value("P1", Json::array()), "partition.P1");
        inst.part.p2 = int_list(part.value("P2", Json::array()), "partition.P2");
        inst.part.p3 = int_list(part.value("P3", Json::array()), "partition.P3");
    } catch (const Json::exception& e) {
        throw input_error(std::string("instance JSON malformed: ") + e.what());
    }
    validate_instance(inst);
    return inst;
}

Json instance_to_json(const TuicpInstance& inst) {
    validate_instance(inst);
    Json j;
    j["m"] = inst.m();
    j["t"] = inst.t;
    Json side = Json::object();
    for (int u = 0; u < inst.m(); ++u) {
        Json known = Json::array();
        std::uint64_t row = inst.d.out_mask(u);
        while (row) {
            known.push_back(__builtin_ctzll(row) + 1);
            row &= row - 1;
        }
        side[std::to_string(u + 1)] = std::move(known);
    }
    j["side_information"] = std::move(side);
    j["partition"] = {{"P1", inst.part.p1}, {"P2", inst.part.p2}, {"P3", inst.part.p3}};
    return j;
}

TuicpInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open instance file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw input_error(path + ": " + e.what());
    }
    try {
        return instance_from_json(j);
    } catch (const input_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

Json coloring_to_json(const TwoSenderColoring& c) {
    Json j;
    j["t"] = c.t;
    j["m1"] = c.m1;
    j["m2"] = c.m2;
    j["m3"] = c.m3;
    j["num_colors1"] = c.num_colors1;
    j["num_colors2"] = c.num_colors2;
    j["table1"] = cell_table_json(c.table1, c.w1(), c.w3(), "part1_bits");
    j["table2"] = cell_table_json(c.table2, c.w2(), c.w3(), "part2_bits");
    return j;
}

TwoSenderColoring coloring_from_json(const Json& j) {
    TwoSenderColoring c;
    try {
        c.t = j.at("t").get<int>();
        c.m1 = j.at("m1").get<int>();
        c.m2 = j.at("m2").get<int>();
        c.m3 = j.at("m3").get<int>();
        c.num_colors1 = j.at("num_colors1").get<int>();
        c.num_colors2 = j.at("num_colors2").get<int>();
        if (c.t < 1 || c.m1 < 0 || c.m2 < 0 || c.m3 < 0) {
            throw input_error("coloring JSON has nonsensical dimensions");
        }
        c.table1 = cell_table_from_json(j.at("table1"), c.w1(), c.w3(), "part1_bits", "table1");
        c.table2 = cell_table_from_json(j.at("table2"), c.w2(), c.w3(), "part2_bits", "table2");
    } catch (const Json::exception& e) {
        throw input_error(std::string("coloring JSON malformed: ") + e.what());
    }
    return c;
}

Json code_to_json(const TwoSenderCode& code) {
    Json j;
    j["t"] = code.t;
    j["m1"] = code.m1;
    j["m2"] = code.m2;
    j["m3"] = code.m3;
    j["p1"] = code.p1;
    j["p2"] = code.p2;
    j["total_bits"] = code.total_bits();
    j["rate"] = rational_json(code.rate());
    j["provenance"] = code.provenance;
    j["sender1"] = codeword_table_json(code.enc1, code.w1(), code.w3(), "part1_bits");
    j["sender2"] = codeword_table_json(code.enc2, code.w2(), code.w3(), "part2_bits");
    return j;
}

Json rational_json(const Rational& r) {
    return Json{{"bits", r.num}, {"t", r.den}, {"decimal", r.value()}};
}

std::string rational_display(const Rational& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den) + " (= " + fixed3(r.value()) + ")";
}

Json report_to_json(const RateReport& report) {
    Json j;
    j["t"] = report.t;
    j["case"] = report.label.str();
    j["variant"] = report.variant ? Json(*report.variant) : Json(nullptr);
    Json floors = Json::array();
    for (const auto& item : report.lower.items) {
        floors.push_back({{"value", rational_json(item.value)},
                          {"justification", item.justification}});
    }
    j["lower_bounds"] = std::move(floors);
    j["best_lower"] = rational_json(report.lower.best().value);
    j["achievable"] = rational_json(report.achievable);
    j["achievable_provenance"] = report.achievable_provenance;
    j["exact"] = report.exact ? rational_json(*report.exact) : Json(nullptr);
    if (report.construction) {
        j["construction_formula"] = {{"variant", report.construction->variant},
                                     {"rate", rational_json(report.construction->rate)},
                                     {"expression", report.construction->expression}};
    } else {
        j["construction_formula"] = nullptr;
    }
    if (report.case_rows) {
        Json cands = Json::array();
        for (const auto& cand : report.case_rows->candidates) {
            cands.push_back({{"case", case_kind_str(cand.kind)},
                             {"expression", cand.expression},
                             {"rate", rational_json(cand.rate)}});
        }
        j["case_rows"] = {{"case", report.case_rows->label.str()},
                          {"b1", rational_json(report.case_rows->b1)},
                          {"b2", rational_json(report.case_rows->b2)},
                          {"b3", rational_json(report.case_rows->b3)},
                          {"candidates", std::move(cands)}};
    } else {
        j["case_rows"] = nullptr;
    }
    j["construction_confirmed"] =
        report.construction_confirmed ? Json(*report.construction_confirmed) : Json(nullptr);
    j["case_rows_confirmed"] =
        report.case_rows_confirmed ? Json(*report.case_rows_confirmed) : Json(nullptr);
    j["eps_achievable"] = report.eps_achievable ? Json(*report.eps_achievable) : Json(nullptr);
    j["eps_exact"] = report.eps_exact ? Json(*report.eps_exact) : Json(nullptr);
    return j;
}

std::string report_markdown(const RateReport& report) {
    std::ostringstream out;
    out << "# rate sandwich (t = " << report.t << ")\n\n";
    out << "- case: " << report.label.str() << "\n";
    if (report.variant) out << "- pinned variant: " << *report.variant << "\n";
    out << "- best floor: " << rational_display(report.lower.best().value) << " — "
        << report.lower.best().justification << "\n";
    out << "- achievable: " << rational_display(report.achievable) << " — "
        << report.achievable_provenance << "\n";
    if (report.exact) {
        out << "- exact: " << rational_display(*report.exact) << "\n";
    } else {
        out << "- exact: skipped (instance exceeds the exact-search cap)\n";
    }
    if (report.construction) {
        out << "- construction rate: " << rational_display(report.construction->rate) << " — "
            << report.construction->expression;
        if (report.construction_confirmed) {
            out << (*report.construction_confirmed ? "; matches exact" : "; differs from exact");
        }
        out << "\n";
    }
    if (report.case_rows) {
        out << "- per-part rates: b1 = " << rational_display(report.case_rows->b1)
            << ", b2 = " << rational_display(report.case_rows->b2)
            << ", b3 = " << rational_display(report.case_rows->b3) << "\n";
        out << "- case formula candidates:\n";
        for (const auto& cand : report.case_rows->candidates) {
            out << "  - " << case_kind_str(cand.kind) << ": " << cand.expression << " = "
                << rational_display(cand.rate);
            if (report.case_rows_confirmed && report.case_rows->candidates.size() == 1) {
                out << (*report.case_rows_confirmed ? "; matches exact" : "; differs from exact");
            }
            out << "\n";
        }
    }
    if (report.eps_achievable) {
        out << "- gap to the per-part sum: " << *report.eps_achievable << " bit(s) achievable";
        if (report.eps_exact) out << ", " << *report.eps_exact << " bit(s) exact";
        out << "\n";
    }
    out << "\n## floors\n";
    for (const auto& item : report.lower.items) {
        out << "- " << rational_display(item.value) << " — " << item.justification << "\n";
    }
    return out.str();
}

}  // namespace tsic
