// Command-line frontend: construct family members, list catalogs, evaluate
// the closed-form count system, audit the equation table, run censuses, and
// verify hosts end to end.

#include <CLI11.hpp>
#include <iostream>

#include "srg/report_io.hpp"

namespace {

using namespace srg;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write: " + path);
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    auto out = open_out(path);
    out << text;
}

int cmd_make_graph(const std::string& which, const std::string& out_path) {
    Graph g = which == "rook9" ? rook9() : bvls243();
    write_text(out_path, graph6_write(g) + "\n");
    return 0;
}

int cmd_catalog(int order, bool feasible_only, const std::string& format,
                const std::string& out_path) {
    const IsoCatalog cat = build_catalog(order);
    std::ostringstream os;
    if (format == "csv") {
        os << "index,code,edges,connected,feasible\n";
        for (int i = 0; i < static_cast<int>(cat.size()); ++i) {
            const auto& c = cat.classes[i];
            if (feasible_only && !c.feasible) continue;
            os << i << ',' << std::hex << "0x" << c.code << std::dec << ',' << c.edges << ','
               << (c.connected ? 1 : 0) << ',' << (c.feasible ? 1 : 0) << '\n';
        }
    } else {
        ordered_json arr = ordered_json::array();
        for (int i = 0; i < static_cast<int>(cat.size()); ++i) {
            const auto& c = cat.classes[i];
            if (feasible_only && !c.feasible) continue;
            char hex[16];
            std::snprintf(hex, sizeof hex, "0x%x", c.code);
            arr.push_back({{"index", i},
                           {"code", hex},
                           {"edges", c.edges},
                           {"connected", c.connected},
                           {"feasible", c.feasible}});
        }
        os << arr.dump(2) << '\n';
    }
    write_text(out_path, os.str());
    return 0;
}

int cmd_formulas(int k, long long n3, bool have_n3, const std::string& format,
                 const std::string& out_path) {
    const Int n = order_from_valency(k);
    const FormulaSet fs = eval_formulas(n, k);
    Instantiation inst;
    if (have_n3) inst = try_instantiate(fs, n3);

    struct Row {
        std::string index, a, b, value;
    };
    std::vector<Row> rows;
    for (int i = 0; i < 3; ++i)
        rows.push_back({"p" + std::to_string(i + 3), fs.p[i].str(), "0", fs.p[i].str()});
    for (int i = 0; i < 9; ++i)
        rows.push_back({"l" + std::to_string(i + 1), fs.l[i].str(), "0", fs.l[i].str()});
    for (int i = 0; i < 21; ++i)
        rows.push_back({"m" + std::to_string(i + 1), fs.m[i].str(), "0", fs.m[i].str()});
    for (int i = 0; i < 62; ++i)
        rows.push_back({"n" + std::to_string(i + 1), rat_string(fs.nf[i].a),
                        rat_string(fs.nf[i].b),
                        have_n3 ? rat_string(inst.values[i]) : std::string()});

    std::ostringstream os;
    if (format == "csv") {
        os << "index,a,b,value\n";
        for (const auto& r : rows) os << r.index << ',' << r.a << ',' << r.b << ',' << r.value << '\n';
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j{{"index", r.index}, {"a", r.a}, {"b", r.b}};
            if (!r.value.empty()) j["value"] = r.value;
            arr.push_back(std::move(j));
        }
        ordered_json out;
        out["n"] = n.str();
        out["k"] = k;
        if (have_n3) out["n3"] = n3;
        out["counts"] = std::move(arr);
        os << out.dump(2) << '\n';
    }
    write_text(out_path, os.str());
    if (have_n3 && !inst.ok()) {
        for (const auto& issue : inst.issues)
            std::cerr << "infeasible: index " << issue.index << " value "
                      << rat_string(issue.value) << " (" << issue.reason << ")\n";
        return 2;
    }
    return 0;
}

int cmd_identities(int k, bool have_k, const std::string& out_path) {
    const auto verdicts = check_all();
    ordered_json arr = ordered_json::array();
    int failures = 0;
    for (const auto& v : verdicts) {
        ordered_json j;
        j["name"] = v.name;
        j["display"] = v.display;
        j["holds"] = v.adopted.holds;
        if (!v.adopted.holds) ++failures;
        Poly residual = v.adopted.residual;
        j["residual"] = residual.str();
        if (have_k) {
            const Int n = order_from_valency(k);
            // render the residual at this k as a polynomial in n3
            std::ostringstream rs;
            bool first = true;
            for (int d = 0; d <= residual.degree_n3(); ++d) {
                const Rat c = residual.coeff_n3(d).eval(Rat(n), Rat(k), 0);
                if (c == 0) continue;
                if (!first) rs << " + ";
                rs << rat_string(c);
                if (d >= 1) rs << "*n3";
                if (d > 1) rs << "^" << d;
                first = false;
            }
            j["residual_at_k"] = first ? "0" : rs.str();
        }
        if (v.printed) {
            j["printed_display"] = *v.printed_display;
            j["printed_holds"] = v.printed->holds;
            j["printed_residual"] = v.printed->residual.str();
        }
        if (!v.note.empty()) j["note"] = v.note;
        arr.push_back(std::move(j));
    }
    ordered_json out;
    out["equations"] = std::move(arr);
    out["failures"] = failures;
    write_text(out_path, out.dump(2) + "\n");
    return failures == 0 ? 0 : 2;
}

int cmd_census(const std::string& file, int order, const std::string& method, bool allow_long,
               int threads, const std::string& format, const std::string& out_path,
               bool pentagon) {
    const Graph g = load_host(file);
    CensusOptions opts;
    opts.threads = threads;
    opts.allow_long = allow_long;

    std::ostringstream os;
    if (pentagon) {
        const auto hist = pentagon_profile(g, opts);
        if (format == "csv") {
            os << "pentagons_per_path,paths\n";
            for (const auto& [count, paths] : hist) os << count << ',' << paths << '\n';
        } else {
            ordered_json j;
            for (const auto& [count, paths] : hist)
                j[std::to_string(count)] = std::to_string(paths);
            os << j.dump(2) << '\n';
        }
        write_text(out_path, os.str());
        return 0;
    }

    const CensusContext ctx = make_census_context();
    CensusResult result;
    if (method == "brute") {
        result = brute_census(g, order, ctx.cats.at(order), opts);
    } else {
        // fast path: connected enumeration plus exact completion
        const auto suite = census_suite(g, ctx, opts);
        result = suite[order];
        if (method == "fast" && result.method == "brute") {
            // honor the explicit method request even under budget
            LowerCounts lower(7);
            lower[1] = {Int(g.order())};
            const Int edges = g.edge_count();
            lower[2] = {Int(g.order()) * (g.order() - 1) / 2 - edges, edges};
            for (int m = 3; m < order; ++m)
                lower[m].assign(suite[m].counts.begin(), suite[m].counts.end());
            result = complete_disconnected(esu_census(g, order, ctx.cats.at(order), opts), ctx.cats,
                                           ctx.split.at(order), ctx.overlap.at(order), lower);
        }
    }

    const IsoCatalog& cat = ctx.cats.at(order);
    if (format == "csv") {
        os << "class,code,edges,count\n";
        for (int i = 0; i < static_cast<int>(result.counts.size()); ++i)
            os << i << ',' << std::hex << "0x" << cat.classes[i].code << std::dec << ','
               << cat.classes[i].edges << ',' << result.counts[i] << '\n';
    } else {
        ordered_json arr = ordered_json::array();
        for (int i = 0; i < static_cast<int>(result.counts.size()); ++i)
            arr.push_back({{"class", i}, {"count", std::to_string(result.counts[i])}});
        ordered_json j;
        j["order"] = order;
        j["method"] = result.method;
        j["total"] = std::to_string(result.total());
        j["counts"] = std::move(arr);
        os << j.dump(2) << '\n';
    }
    write_text(out_path, os.str());
    return 0;
}

int cmd_verify(const std::string& file, int threads, bool allow_long, const std::string& out_path,
               const std::string& format) {
    const Graph g = load_host(file);
    CensusOptions opts;
    opts.threads = threads;
    opts.allow_long = allow_long;
    const CensusContext ctx = make_census_context();
    const VerificationReport report = verify(g, ctx, opts, file);
    if (!out_path.empty())
        emit_report(report, out_path, format);
    else
        std::cout << report_to_json(report).dump(2) << '\n';
    std::cerr << (report.clean() ? "verify: all checks passed\n"
                                 : "verify: completed with " +
                                       std::to_string(report.discrepancies.size()) +
                                       " discrepancies\n");
    return report.clean() ? 0 : 2;
}

int cmd_tables(int order, const std::string& kind, const std::string& out_path) {
    const CatalogSet cats = build_catalog_set();
    std::ostringstream os;
    if (kind == "split" || kind == "both") os << to_csv(build_split_coefficients(cats, order));
    if (kind == "overlap" || kind == "both") os << to_csv(build_overlap_coefficients(cats, order));
    write_text(out_path, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for the srg(n,k,1,2) family"};
    app.require_subcommand(1);

    // make-graph
    std::string mg_which, mg_out;
    auto* mg = app.add_subcommand("make-graph", "construct a family member and write graph6");
    mg->add_option("graph", mg_which, "rook9 or bvls243")
        ->required()
        ->check(CLI::IsMember({"rook9", "bvls243"}));
    mg->add_option("--out", mg_out, "output file (stdout when omitted)");

    // catalog
    int cat_order = 6;
    bool cat_feasible = false;
    std::string cat_format = "csv", cat_out;
    auto* cat = app.add_subcommand("catalog", "list isomorphism classes of one order");
    cat->add_option("--order", cat_order, "order 3..6")->required()->check(CLI::Range(3, 6));
    cat->add_flag("--feasible-only", cat_feasible, "restrict to embeddable classes");
    cat->add_option("--format", cat_format)->check(CLI::IsMember({"csv", "json"}));
    cat->add_option("--out", cat_out);

    // formulas
    int f_k = 0;
    long long f_n3 = -1;
    std::string f_format = "csv", f_out;
    auto* form = app.add_subcommand("formulas", "evaluate the closed-form counts at one valency");
    form->add_option("--k", f_k, "valency (even)")->required();
    auto* f_n3_opt = form->add_option("--n3", f_n3, "instantiate the order-6 counts at this n3");
    form->add_option("--format", f_format)->check(CLI::IsMember({"csv", "json"}));
    form->add_option("--out", f_out);

    // identities
    int id_k = 0;
    std::string id_out, id_format = "json";
    auto* ident = app.add_subcommand("identities", "audit the equation table symbolically");
    auto* id_k_opt = ident->add_option("--params", id_k, "additionally evaluate residuals at this valency");
    ident->add_option("--format", id_format)->check(CLI::IsMember({"json"}));
    ident->add_option("--out", id_out);

    // census
    std::string c_file, c_method = "auto", c_format = "csv", c_out;
    int c_order = 6, c_threads = 0;
    bool c_long = false, c_pentagon = false;
    auto* cen = app.add_subcommand("census", "induced-subgraph census of a graph6 host");
    cen->add_option("file", c_file, "graph6 file")->required();
    auto* c_order_opt = cen->add_option("--order", c_order)->check(CLI::Range(3, 6));
    cen->add_option("--method", c_method)->check(CLI::IsMember({"auto", "brute", "fast"}));
    cen->add_flag("--long", c_long, "allow brute censuses up to 10^10 subsets");
    cen->add_option("--threads", c_threads, "worker count (default: hardware)");
    cen->add_option("--format", c_format)->check(CLI::IsMember({"csv", "json"}));
    cen->add_option("--out", c_out);
    cen->add_flag("--pentagon-profile", c_pentagon,
                  "histogram of induced pentagons per induced 3-path instead of a census");

    // verify
    std::string v_file, v_out, v_format = "json";
    int v_threads = 0;
    bool v_long = false;
    auto* ver = app.add_subcommand("verify", "end-to-end verification of a host graph");
    ver->add_option("file", v_file, "graph6 file")->required();
    ver->add_option("--threads", v_threads);
    ver->add_flag("--long", v_long);
    ver->add_option("--out", v_out, "report path (stdout when omitted)");
    ver->add_option("--format", v_format)->check(CLI::IsMember({"json", "csv"}));

    // tables
    int t_order = 6;
    std::string t_kind = "both", t_out;
    auto* tab = app.add_subcommand("tables", "emit the split/overlap coefficient tables");
    tab->add_option("--order", t_order)->check(CLI::Range(3, 6));
    tab->add_option("--kind", t_kind)->check(CLI::IsMember({"split", "overlap", "both"}));
    tab->add_option("--out", t_out);

    CLI11_PARSE(app, argc, argv);

    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    try {
        if (mg->parsed()) return cmd_make_graph(mg_which, mg_out);
        if (cat->parsed()) return cmd_catalog(cat_order, cat_feasible, cat_format, cat_out);
        if (form->parsed())
            return cmd_formulas(f_k, f_n3, f_n3_opt->count() > 0, f_format, f_out);
        if (ident->parsed()) return cmd_identities(id_k, id_k_opt->count() > 0, id_out);
        if (cen->parsed()) {
            if (!c_pentagon && c_order_opt->count() == 0)
                throw error("census: --order is required unless --pentagon-profile is given");
            return cmd_census(c_file, c_order, c_method, c_long,
                              c_threads > 0 ? c_threads : std::max(1, hw), c_format, c_out,
                              c_pentagon);
        }
        if (ver->parsed())
            return cmd_verify(v_file, v_threads > 0 ? v_threads : std::max(1, hw), v_long, v_out,
                              v_format);
        if (tab->parsed()) return cmd_tables(t_order, t_kind, t_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
