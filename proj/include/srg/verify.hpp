#pragma once

// End-to-end verification of a host graph against the closed-form count
// system: run the censuses, measure the free parameter n3 as the count of
// the prism-minus-edge anchor class, instantiate the 62 formulas at that
// n3, and compare against measurement.
//
// Verification is multiset-first: the binding check is that the instantiated
// formula values plus the forced zeros of the infeasible classes equal the
// measured per-class counts as multisets, which no class numbering can
// perturb. Assigning formula indices to catalog classes is best-effort
// diagnostics seeded by the structural anchors; formulas with identical
// closed forms produce tie groups, reported as sets.
//
// Discrepancies never abort a run: the tool exists to find them.

#include <set>

#include "srg/census.hpp"
#include "srg/identities.hpp"
#include "srg/instances.hpp"

namespace srg {

struct AssignmentEntry {
    int formula_index = 0;            // 1-based formula subscript
    int class_index = -1;           // catalog class, -1 when unmatched
    Int value;                      // instantiated formula value
    std::vector<int> tie_group;     // classes sharing the same count, when ambiguous
};

struct EquationCheck {
    std::string name;
    std::string display;
    std::string note;
    bool symbolic_holds = false;
    std::string symbolic_residual;
    bool numeric_holds = false;
    std::string numeric_residual;
    bool printed_reading_differs = false;
    bool printed_numeric_holds = false;
};

struct VerificationReport {
    std::string host;
    SrgParams params;
    Int n3_measured;
    N3Range n3_range;
    std::array<std::uint64_t, 7> totals{};   // census totals by order (3..6)
    std::array<std::string, 7> methods{};
    std::vector<std::uint64_t> counts6;      // full order-6 census
    bool multiset_match = false;
    std::vector<AssignmentEntry> assign_l, assign_m, assign_n;
    std::vector<EquationCheck> equations;
    std::vector<std::string> discrepancies;

    bool clean() const { return discrepancies.empty(); }
};

inline Int measure_n3(const Graph& host, const CensusResult& census6, const Anchors& anchors) {
    const auto params = is_srg(host);
    if (!params || params->lambda != 1 || params->mu != 2)
        throw error("n3 measurement refused: host is not an srg(n,k,1,2)");
    if (census6.order != 6 || !census6.complete)
        throw error("n3 measurement needs a complete order-6 census");
    return Int(census6.counts.at(anchors.n3));
}

namespace detail {

// match formula values against measured class counts of one order; anchors
// pin individual indices first, the rest matches by value with tie groups
inline std::vector<AssignmentEntry> assign_indices(
    const std::vector<Rat>& values, const std::vector<std::uint64_t>& counts,
    const IsoCatalog& cat, const std::map<int, int>& anchored,  // formula subscript -> class
    std::vector<std::string>& discrepancies, const std::string& kind) {
    std::vector<AssignmentEntry> out;
    std::map<Rat, std::vector<int>> value_groups;   // value -> formula subscripts
    std::map<Rat, std::vector<int>> class_pools;    // count -> feasible classes
    std::set<int> anchored_classes;
    for (const auto& [idx, cls] : anchored) anchored_classes.insert(cls);

    for (int i = 0; i < static_cast<int>(values.size()); ++i)
        if (!anchored.count(i + 1)) value_groups[values[i]].push_back(i + 1);
    for (int c = 0; c < static_cast<int>(cat.size()); ++c)
        if (cat.classes[c].feasible && !anchored_classes.count(c))
            class_pools[Rat(counts[c])].push_back(c);

    for (const auto& [idx, cls] : anchored) {
        AssignmentEntry e;
        e.formula_index = idx;
        e.class_index = cls;
        e.value = is_integer(values[idx - 1]) ? to_int(values[idx - 1]) : Int(-1);
        if (Rat(counts[cls]) != values[idx - 1])
            discrepancies.push_back(kind + std::to_string(idx) + " anchor class " +
                                    std::to_string(cls) + " count " +
                                    std::to_string(counts[cls]) + " != formula value " +
                                    rat_string(values[idx - 1]));
        out.push_back(std::move(e));
    }

    for (const auto& [value, indices] : value_groups) {
        auto pool_it = class_pools.find(value);
        std::vector<int> pool = pool_it == class_pools.end() ? std::vector<int>{} : pool_it->second;
        if (static_cast<int>(pool.size()) < static_cast<int>(indices.size()))
            discrepancies.push_back(kind + " value " + rat_string(value) + " needed by " +
                                    std::to_string(indices.size()) + " indices but only " +
                                    std::to_string(pool.size()) + " classes have that count");
        for (std::size_t t = 0; t < indices.size(); ++t) {
            AssignmentEntry e;
            e.formula_index = indices[t];
            e.value = is_integer(value) ? to_int(value) : Int(-1);
            e.class_index = t < pool.size() ? pool[t] : -1;
            if (indices.size() > 1 || pool.size() > indices.size()) e.tie_group = pool;
            out.push_back(std::move(e));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const AssignmentEntry& a, const AssignmentEntry& b) {
                  return a.formula_index < b.formula_index;
              });
    return out;
}

}  // namespace detail

inline VerificationReport verify(const Graph& host, const CensusContext& ctx,
                                 const CensusOptions& opts = {},
                                 const std::string& host_name = "host") {
    const auto params = is_srg(host);
    if (!params || params->lambda != 1 || params->mu != 2)
        throw error("verify: host is not an srg(n,k,1,2) member");

    VerificationReport report;
    report.host = host_name;
    report.params = *params;

    const auto suite = census_suite(host, ctx, opts, host_name);
    for (int m = 3; m <= 6; ++m) {
        report.totals[m] = suite[m].total();
        report.methods[m] = suite[m].method;
    }
    report.counts6 = suite[6].counts;

    const Anchors anchors = anchor_classes(ctx.cats.at(6));
    report.n3_measured = Int(suite[6].counts[anchors.n3]);
    report.n3_range = feasible_n3_range(params->n, params->k);
    if (!report.n3_range.contains(report.n3_measured))
        report.discrepancies.push_back("measured n3 " + report.n3_measured.str() +
                                       " lies outside the feasible range");

    const FormulaSet fs = eval_formulas(params->n, params->k);
    const Instantiation inst = try_instantiate(fs, report.n3_measured);
    for (const auto& issue : inst.issues)
        report.discrepancies.push_back("instantiation: index " + std::to_string(issue.index) +
                                       " value " + rat_string(issue.value) + " " + issue.reason);

    // infeasible classes must never occur in a family member
    for (int m = 3; m <= 6; ++m)
        for (int c = 0; c < static_cast<int>(suite[m].counts.size()); ++c)
            if (!ctx.cats.at(m).classes[c].feasible && suite[m].counts[c] != 0)
                report.discrepancies.push_back("order-" + std::to_string(m) +
                                               " infeasible class " + std::to_string(c) +
                                               " has count " + std::to_string(suite[m].counts[c]));

    // the binding order-6 check: instantiated values + forced zeros vs counts
    {
        std::multiset<Rat> predicted(inst.values.begin(), inst.values.end());
        for (std::size_t c = 0; c < ctx.cats.at(6).size(); ++c)
            if (!ctx.cats.at(6).classes[c].feasible) predicted.insert(Rat(0));
        std::multiset<Rat> measured;
        for (auto c : suite[6].counts) measured.insert(Rat(c));
        report.multiset_match = predicted == measured;
        if (!report.multiset_match)
            report.discrepancies.push_back("order-6 multiset of instantiated formula values does "
                                           "not match the measured census");
    }

    // index assignments (diagnostics, never pass/fail)
    {
        std::vector<Rat> lvals, mvals;
        for (const auto& v : fs.l) lvals.push_back(Rat(v));
        for (const auto& v : fs.m) mvals.push_back(Rat(v));
        report.assign_l = detail::assign_indices(lvals, suite[4].counts, ctx.cats.at(4), {},
                                                 report.discrepancies, "l");
        report.assign_m = detail::assign_indices(mvals, suite[5].counts, ctx.cats.at(5), {},
                                                 report.discrepancies, "m");
        const std::map<int, int> anchored{
            {1, anchors.n1}, {2, anchors.n2}, {3, anchors.n3}, {12, anchors.n12}};
        report.assign_n = detail::assign_indices(inst.values, suite[6].counts, ctx.cats.at(6),
                                                 anchored, report.discrepancies, "n");
    }

    // numeric verdicts for the whole equation table on measured counts;
    // measured values reach the symbols through the assignment, with the
    // instantiated formula value as fallback for unmatched indices
    {
        SymbolValues vals;
        vals.n = params->n;
        vals.k = params->k;
        // p3, p4, p5 measured directly as the triangle/C4/C5 class counts
        Graph c4(4), c5(5);
        for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
        for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
        vals.p[0] = suite[3].counts[ctx.cats.at(3).class_of(7)];
        vals.p[1] = suite[4].counts[ctx.cats.at(4).class_of(labeled_code(c4))];
        vals.p[2] = suite[5].counts[ctx.cats.at(5).class_of(labeled_code(c5))];
        auto fill = [&](const std::vector<AssignmentEntry>& assign,
                        const std::vector<std::uint64_t>& counts, auto& dest,
                        const std::vector<Rat>& fallback) {
            for (const auto& e : assign)
                dest[e.formula_index - 1] = e.class_index >= 0 ? Int(counts[e.class_index])
                                                             : to_int(fallback[e.formula_index - 1]);
        };
        std::vector<Rat> lvals, mvals;
        for (const auto& v : fs.l) lvals.push_back(Rat(v));
        for (const auto& v : fs.m) mvals.push_back(Rat(v));
        fill(report.assign_l, suite[4].counts, vals.l, lvals);
        fill(report.assign_m, suite[5].counts, vals.m, mvals);
        fill(report.assign_n, suite[6].counts, vals.nv, inst.values);

        for (const Equation& eq : equation_table()) {
            EquationCheck check;
            check.name = eq.name;
            check.display = eq.adopted.display;
            check.note = eq.note;
            const Verdict symbolic = check_reading(eq.adopted, formula_table());
            check.symbolic_holds = symbolic.holds;
            check.symbolic_residual = symbolic.residual.str();
            const NumericVerdict numeric = check_reading_numeric(eq.adopted, vals);
            check.numeric_holds = numeric.holds;
            check.numeric_residual = rat_string(numeric.residual);
            if (eq.printed) {
                check.printed_reading_differs = true;
                check.printed_numeric_holds = check_reading_numeric(*eq.printed, vals).holds;
            }
            if (!check.numeric_holds)
                report.discrepancies.push_back("equation " + eq.name +
                                               " fails on measured counts, residual " +
                                               check.numeric_residual);
            report.equations.push_back(std::move(check));
        }
    }
    return report;
}

}  // namespace srg
