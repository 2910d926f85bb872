#pragma once

// Verification report serialization. JSON key order is fixed and every
// count travels as a decimal string: several instantiated values overflow
// doubles and some intermediate products overflow 64 bits at k = 22.

#include <fstream>

#include <json.hpp>

#include "srg/verify.hpp"

namespace srg {

using ordered_json = nlohmann::ordered_json;

inline ordered_json assignment_json(const std::vector<AssignmentEntry>& entries) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries) {
        ordered_json j;
        j["index"] = e.formula_index;
        j["class"] = e.class_index;
        j["value"] = e.value.str();
        j["tie_group"] = e.tie_group;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline ordered_json report_to_json(const VerificationReport& r) {
    ordered_json j;
    j["host"] = r.host;
    j["parameters"] = {{"n", r.params.n}, {"k", r.params.k}, {"lambda", r.params.lambda},
                       {"mu", r.params.mu}};
    ordered_json n3;
    n3["measured"] = r.n3_measured.str();
    n3["feasible"] = {{"empty", r.n3_range.empty},
                      {"min", r.n3_range.min.str()},
                      {"max", r.n3_range.max.str()},
                      {"modulus", r.n3_range.modulus.str()},
                      {"residue", r.n3_range.residue.str()}};
    j["n3"] = std::move(n3);
    ordered_json census;
    for (int m = 3; m <= 6; ++m) {
        ordered_json entry;
        entry["total"] = std::to_string(r.totals[m]);
        entry["method"] = r.methods[m];
        census[std::to_string(m)] = std::move(entry);
    }
    j["census"] = std::move(census);
    ordered_json counts6 = ordered_json::array();
    for (auto c : r.counts6) counts6.push_back(std::to_string(c));
    j["order6_counts"] = std::move(counts6);
    j["multiset_match"] = r.multiset_match;
    j["assignment"] = {{"l", assignment_json(r.assign_l)},
                       {"m", assignment_json(r.assign_m)},
                       {"n", assignment_json(r.assign_n)}};
    ordered_json eqs = ordered_json::array();
    for (const auto& e : r.equations) {
        ordered_json je;
        je["name"] = e.name;
        je["display"] = e.display;
        je["symbolic"] = e.symbolic_holds ? "holds" : "fails";
        je["symbolic_residual"] = e.symbolic_residual;
        je["numeric"] = e.numeric_holds ? "pass" : "fail";
        je["numeric_residual"] = e.numeric_residual;
        if (e.printed_reading_differs)
            je["printed_numeric"] = e.printed_numeric_holds ? "pass" : "fail";
        if (!e.note.empty()) je["note"] = e.note;
        eqs.push_back(std::move(je));
    }
    j["equations"] = std::move(eqs);
    j["discrepancies"] = r.discrepancies;
    return j;
}

inline std::vector<AssignmentEntry> assignment_from_json(const ordered_json& arr) {
    std::vector<AssignmentEntry> out;
    for (const auto& je : arr) {
        AssignmentEntry e;
        e.formula_index = je.at("index").get<int>();
        e.class_index = je.at("class").get<int>();
        e.value = Int(je.at("value").get<std::string>());
        e.tie_group = je.at("tie_group").get<std::vector<int>>();
        out.push_back(std::move(e));
    }
    return out;
}

inline VerificationReport report_from_json(const ordered_json& j) {
    VerificationReport r;
    r.host = j.at("host").get<std::string>();
    r.params.n = j.at("parameters").at("n").get<int>();
    r.params.k = j.at("parameters").at("k").get<int>();
    r.params.lambda = j.at("parameters").at("lambda").get<int>();
    r.params.mu = j.at("parameters").at("mu").get<int>();
    r.n3_measured = Int(j.at("n3").at("measured").get<std::string>());
    const auto& f = j.at("n3").at("feasible");
    r.n3_range.empty = f.at("empty").get<bool>();
    r.n3_range.min = Int(f.at("min").get<std::string>());
    r.n3_range.max = Int(f.at("max").get<std::string>());
    r.n3_range.modulus = Int(f.at("modulus").get<std::string>());
    r.n3_range.residue = Int(f.at("residue").get<std::string>());
    for (int m = 3; m <= 6; ++m) {
        const auto& entry = j.at("census").at(std::to_string(m));
        r.totals[m] = std::stoull(entry.at("total").get<std::string>());
        r.methods[m] = entry.at("method").get<std::string>();
    }
    for (const auto& c : j.at("order6_counts"))
        r.counts6.push_back(std::stoull(c.get<std::string>()));
    r.multiset_match = j.at("multiset_match").get<bool>();
    r.assign_l = assignment_from_json(j.at("assignment").at("l"));
    r.assign_m = assignment_from_json(j.at("assignment").at("m"));
    r.assign_n = assignment_from_json(j.at("assignment").at("n"));
    for (const auto& je : j.at("equations")) {
        EquationCheck e;
        e.name = je.at("name").get<std::string>();
        e.display = je.at("display").get<std::string>();
        e.symbolic_holds = je.at("symbolic").get<std::string>() == "holds";
        e.symbolic_residual = je.at("symbolic_residual").get<std::string>();
        e.numeric_holds = je.at("numeric").get<std::string>() == "pass";
        e.numeric_residual = je.at("numeric_residual").get<std::string>();
        if (je.contains("printed_numeric")) {
            e.printed_reading_differs = true;
            e.printed_numeric_holds = je.at("printed_numeric").get<std::string>() == "pass";
        }
        if (je.contains("note")) e.note = je.at("note").get<std::string>();
        r.equations.push_back(std::move(e));
    }
    r.discrepancies = j.at("discrepancies").get<std::vector<std::string>>();
    return r;
}

inline std::string report_to_csv(const VerificationReport& r) {
    std::ostringstream os;
    auto row = [&](const std::string& section, const std::string& key, const std::string& value) {
        os << section << ',' << key << ',' << '"' << value << '"' << '\n';
    };
    os << "section,key,value\n";
    row("host", "name", r.host);
    row("host", "n", std::to_string(r.params.n));
    row("host", "k", std::to_string(r.params.k));
    row("n3", "measured", r.n3_measured.str());
    row("n3", "feasible_min", r.n3_range.min.str());
    row("n3", "feasible_max", r.n3_range.max.str());
    for (int m = 3; m <= 6; ++m) {
        row("census", "total_" + std::to_string(m), std::to_string(r.totals[m]));
        row("census", "method_" + std::to_string(m), r.methods[m]);
    }
    row("verdict", "multiset_match", r.multiset_match ? "pass" : "fail");
    auto assign_rows = [&](const char* kind, const std::vector<AssignmentEntry>& entries) {
        for (const auto& e : entries)
            row("assignment", std::string(kind) + std::to_string(e.formula_index),
                "class=" + std::to_string(e.class_index) + " value=" + e.value.str());
    };
    assign_rows("l", r.assign_l);
    assign_rows("m", r.assign_m);
    assign_rows("n", r.assign_n);
    for (const auto& e : r.equations)
        row("equation", e.name,
            std::string(e.symbolic_holds ? "symbolic=holds" : "symbolic=fails") +
                (e.numeric_holds ? " numeric=pass" : " numeric=fail"));
    for (std::size_t i = 0; i < r.discrepancies.size(); ++i)
        row("discrepancy", std::to_string(i + 1), r.discrepancies[i]);
    return os.str();
}

inline void emit_report(const VerificationReport& r, const std::string& path,
                        const std::string& format = "json") {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write report: " + path);
    if (format == "json")
        out << report_to_json(r).dump(2) << '\n';
    else if (format == "csv")
        out << report_to_csv(r);
    else
        throw error("unknown report format: " + format);
    if (!out) throw io_error("write failure: " + path);
}

inline VerificationReport load_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open report: " + path);
    ordered_json j;
    in >> j;
    return report_from_json(j);
}

}  // namespace srg
