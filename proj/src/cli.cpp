// Command-line front end: parse graphs and covers, run computations and
// verification suites, emit text or line-oriented records.

#include "dpcolor/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "dpcolor/chromatic.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/dpsearch.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/verify.hpp"

namespace dpcolor::cli {

namespace {

struct Options {
    std::string graph_path;
    std::string cover_path;
    std::string witness_path;
    std::string format = "text";
    int m = 0;
    long long at = -1;
    unsigned long long budget = kDefaultBudget;
    int jobs = 1;
    unsigned long seed = 0;
};

bool records(const Options& o) { return o.format == "records"; }

std::string coeff_list(const IntPolynomial& p) {
    std::ostringstream ss;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) ss << ",";
        ss << p.coeff(i).get_str();
    }
    return p.is_zero() ? "0" : ss.str();
}

// One-line cover encoding for records output: "u,v:p0.p1..;...".
std::string cover_one_line(const FullCover& h) {
    std::ostringstream ss;
    for (std::size_t e = 0; e < h.graph.edges.size(); ++e) {
        if (e) ss << ";";
        ss << h.graph.edges[e].first << "," << h.graph.edges[e].second << ":";
        for (int i = 0; i < h.m; ++i) {
            if (i) ss << ".";
            ss << h.sigma[e][i];
        }
    }
    return ss.str();
}

void write_witness_file(const std::string& path, const FullCover& h) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open witness output file: " + path);
    write_cover(f, h);
}

int cmd_gen(const std::string& family, const std::vector<int>& params, std::ostream& out) {
    auto kind = family_from_name(family);
    if (!kind) throw ParameterError("unknown family: " + family);
    Graph g = make_family(*kind, params);
    write_graph(out, g);
    return 0;
}

int cmd_chromatic(const Options& o, std::ostream& out) {
    Graph g = read_graph_file(o.graph_path);
    IntPolynomial p = chromatic_polynomial(g);
    if (records(o)) {
        out << "record=chromatic n=" << g.n << " degree=" << p.degree()
            << " coeffs=" << coeff_list(p) << "\n";
        if (o.at >= 0)
            out << "record=evaluation at=" << o.at << " value="
                << p.evaluate(mpz_class(static_cast<long>(o.at))).get_str()
                << "\n";
    } else {
        out << "P(G,m) = " << p.to_string() << "\n";
        out << "coefficients (ascending): " << coeff_list(p) << "\n";
        if (o.at >= 0)
            out << "P(G," << o.at
                << ") = " << p.evaluate(mpz_class(static_cast<long>(o.at))).get_str() << "\n";
    }
    return 0;
}

int cmd_count(const Options& o, std::ostream& out) {
    Graph g = read_graph_file(o.graph_path);
    FullCover h = read_cover_file(g, o.cover_path);
    long long c = count_colorings(h);
    if (records(o))
        out << "record=count m=" << h.m << " value=" << c << "\n";
    else
        out << "colorings = " << c << "\n";
    return 0;
}

int cmd_canonical(const Options& o, std::ostream& out) {
    Graph g = read_graph_file(o.graph_path);
    FullCover h = read_cover_file(g, o.cover_path);
    auto pi = find_canonical_labeling(h);
    if (records(o)) {
        out << "record=canonical found=" << (pi ? "true" : "false");
        if (pi) {
            out << " labeling=";
            for (int v = 0; v < g.n; ++v) {
                if (v) out << ";";
                for (int i = 0; i < h.m; ++i) {
                    if (i) out << ".";
                    out << pi->pi[v][i];
                }
            }
        }
        out << "\n";
    } else if (pi) {
        out << "canonical labeling found\n";
        for (int v = 0; v < g.n; ++v) {
            out << "pi " << v << ":";
            for (int i : pi->pi[v]) out << " " << i;
            out << "\n";
        }
    } else {
        out << "NONE\n";
    }
    return 0;
}

int cmd_dpfn(const Options& o, std::ostream& out) {
    Graph g = read_graph_file(o.graph_path);
    auto res = dp_color_value(g, o.m, {o.budget, o.jobs});
    if (records(o))
        out << "record=dpfn m=" << o.m << " min=" << res.min_count
            << " covers_examined=" << res.covers_examined << " witnesses=" << res.witnesses.size()
            << "\n";
    else {
        out << "P_DP over full covers at m=" << o.m << ": " << res.min_count << "\n";
        out << "covers examined = " << res.covers_examined << "\n";
        out << "minimizing covers = " << res.witnesses.size() << "\n";
    }
    if (!o.witness_path.empty() && !res.witnesses.empty()) {
        write_witness_file(o.witness_path, res.witnesses.front());
        if (!records(o)) out << "witness written to " << o.witness_path << "\n";
    }
    return 0;
}

int cmd_dpchi(const Options& o, std::ostream& out) {
    Graph g = read_graph_file(o.graph_path);
    int m_max = o.m > 0 ? o.m : 8;
    int chi = dp_chromatic_number(g, m_max, {o.budget, o.jobs});
    if (records(o))
        out << "record=dpchi value=" << chi << " m_max=" << m_max << "\n";
    else
        out << "chi_DP = " << chi << " (searched m = 1.." << m_max << ")\n";
    return 0;
}

int cmd_classify(const Options& o, int a1, int a2, int a3, std::ostream& out) {
    Graph g = read_graph_file(o.graph_path);
    FullCover h = read_cover_file(g, o.cover_path);
    auto mq = classify_two_path(h, a1, a2, a3);
    if (records(o)) {
        out << "record=classify";
        for (int q = 0; q < 5; ++q) out << " m" << q + 1 << "=" << mq[q];
        out << "\n";
    } else {
        out << "m_q = (" << mq[0] << ", " << mq[1] << ", " << mq[2] << ", " << mq[3] << ", "
            << mq[4] << ")\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const Options& o, std::ostream& out) {
    auto emit = [&](const CheckReport& r) {
        if (records(o))
            write_records(out, r);
        else
            write_text(out, r);
        return r.overall() ? 0 : 1;
    };

    if (suite == "w4") {
        W4Report w = reproduce_w4_examples(o.budget, o.jobs);
        int rc = emit(w.report);
        for (const auto& h : w.witnesses) {
            if (records(o)) {
                out << "record=witness m=" << h.m << " cover=" << cover_one_line(h) << "\n";
            } else {
                out << "# witness cover, m=" << h.m << ", cover text format:\n";
                write_cover(out, h);
            }
        }
        if (!o.witness_path.empty())
            for (const auto& h : w.witnesses)
                write_witness_file(o.witness_path + "-m" + std::to_string(h.m) + ".cover", h);
        return rc;
    }
    if (suite == "chromatic-bounds") return emit(check_chromatic_bounds(6, 5, o.jobs));
    if (suite == "tree-bound") return emit(check_tree_bound(6, 5, 4, o.budget, o.jobs));
    if (suite == "expectation") return emit(check_expectation_identities(40, o.seed, o.jobs));
    if (suite == "cycle-dp") return emit(check_cycle_dp(7, 4, o.budget, o.jobs));
    if (suite == "two-connected") return emit(check_two_connected_bounds(5, 4, o.budget, o.jobs));
    if (suite == "pinned") return emit(check_pinned_sweep(5, 4, o.jobs));
    if (suite == "two-path") return emit(check_two_path_sweep(o.m > 0 ? o.m : 3, o.jobs));
    if (suite == "canonical") return emit(check_canonical_theorems(6, 7, o.jobs));
    if (suite == "gauge") return emit(check_gauge_invariance(1000, o.seed, o.jobs));
    if (suite == "twist") return emit(check_cycle_twist_law(6, 4, o.jobs));
    if (suite == "closed-forms") return emit(check_closed_forms(8, 6, o.jobs));
    if (suite == "all") {
        int rc = 0;
        for (const char* s :
             {"chromatic-bounds", "closed-forms", "twist", "gauge", "cycle-dp", "tree-bound",
              "two-connected", "pinned", "two-path", "canonical", "expectation", "w4"})
            rc = std::max(rc, cmd_verify(s, o, out));
        return rc;
    }
    throw ParameterError("unknown suite: " + suite);
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact DP-coloring toolkit: covers, coloring counts, gauge "
                 "normalization, chromatic polynomials and verification suites"};
    app.name("dpcolor");
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool with_budget_jobs) {
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"text", "records"}));
        if (with_budget_jobs) {
            sub->add_option("--budget", o.budget, "Cover enumeration budget");
            sub->add_option("--jobs", o.jobs, "Worker count");
        }
    };

    std::string family;
    std::vector<int> family_params;
    auto* gen = app.add_subcommand("gen", "Emit a named family graph in graph text format");
    gen->add_option("family", family, "path|cycle|complete|star|wheel|complete_bipartite|theta")
        ->required();
    gen->add_option("params", family_params, "Integer parameters")->required();

    auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomial of a graph");
    chromatic->add_option("--graph", o.graph_path, "Graph file")->required();
    chromatic->add_option("--at", o.at, "Also evaluate at this m");
    add_common(chromatic, false);

    auto* count = app.add_subcommand("count", "Count the colorings of a cover");
    count->add_option("--graph", o.graph_path, "Graph file")->required();
    count->add_option("--cover", o.cover_path, "Cover file")->required();
    add_common(count, false);

    auto* canonical = app.add_subcommand("canonical", "Find a canonical labeling or say NONE");
    canonical->add_option("--graph", o.graph_path, "Graph file")->required();
    canonical->add_option("--cover", o.cover_path, "Cover file")->required();
    add_common(canonical, false);

    auto* dpfn = app.add_subcommand("dpfn", "Minimum coloring count over gauge-fixed covers");
    dpfn->add_option("--graph", o.graph_path, "Graph file")->required();
    dpfn->add_option("--m", o.m, "Fold count")->required()->check(CLI::PositiveNumber);
    dpfn->add_option("--witness", o.witness_path, "Write the first minimizing cover here");
    add_common(dpfn, true);

    auto* dpchi = app.add_subcommand("dpchi", "Least m with every cover colorable");
    dpchi->add_option("--graph", o.graph_path, "Graph file")->required();
    dpchi->add_option("--m", o.m, "Largest m to try (default 8)");
    add_common(dpchi, true);

    int a1 = 0, a2 = 0, a3 = 0;
    auto* classify = app.add_subcommand("classify", "Classify the cross-edge paths over a 2-path");
    classify->add_option("--graph", o.graph_path, "Graph file")->required();
    classify->add_option("--cover", o.cover_path, "Cover file")->required();
    classify->add_option("a1", a1, "First path vertex")->required();
    classify->add_option("a2", a2, "Middle path vertex")->required();
    classify->add_option("a3", a3, "Last path vertex")->required();
    add_common(classify, false);

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite,
                       "chromatic-bounds|closed-forms|twist|gauge|cycle-dp|tree-bound|"
                       "two-connected|pinned|two-path|canonical|expectation|w4|all")
        ->required();
    verify->add_option("--m", o.m, "Fold count where the suite takes one");
    verify->add_option("--seed", o.seed, "Seed for randomized suites");
    verify->add_option("--witness", o.witness_path, "Witness file prefix (w4)");
    add_common(verify, true);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(family, family_params, out);
        if (chromatic->parsed()) return cmd_chromatic(o, out);
        if (count->parsed()) return cmd_count(o, out);
        if (canonical->parsed()) return cmd_canonical(o, out);
        if (dpfn->parsed()) return cmd_dpfn(o, out);
        if (dpchi->parsed()) return cmd_dpchi(o, out);
        if (classify->parsed()) return cmd_classify(o, a1, a2, a3, out);
        if (verify->parsed()) return cmd_verify(suite, o, out);
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ParameterError& e) {
        err << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const StructureError& e) {
        err << "structure error: " << e.what() << "\n";
        return 2;
    } catch (const NormalizationError& e) {
        err << "normalization error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

} // namespace dpcolor::cli
