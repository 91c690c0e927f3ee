#include "gjets/cli.hpp"

#include "gjets/betti.hpp"
#include "gjets/corpus.hpp"
#include "gjets/error.hpp"
#include "gjets/graph_io.hpp"
#include "gjets/groebner.hpp"
#include "gjets/jets.hpp"
#include "gjets/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace gjets {

namespace {

struct CliContext {
    int s = 1;
    std::string format = "text";
    std::string limits_file;
    unsigned long seed = 0;
    std::string input_file = "-";
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;

    Limits limits() const {
        Limits l = limits_file.empty() ? Limits{} : load_limits(limits_file);
        l.seed = seed;
        return l;
    }
    bool structured() const { return format == "structured"; }

    std::string read_input() const {
        if (input_file == "-") {
            std::stringstream buffer;
            buffer << std::cin.rdbuf();
            return buffer.str();
        }
        std::ifstream f(input_file);
        if (!f)
            throw ParseError("cannot open input file: " + input_file);
        std::stringstream buffer;
        buffer << f.rdbuf();
        return buffer.str();
    }
    Graph read_graph() const { return parse_graph(read_input()); }
};

nlohmann::json ideal_json(const RingPtr& ring, const std::vector<std::string>& gens) {
    nlohmann::json doc;
    doc["ring"] = ring->variable_names();
    doc["generators"] = gens;
    return doc;
}

void print_monomial_ideal(const CliContext& ctx, const MonomialIdeal& ideal) {
    if (ctx.structured()) {
        std::vector<std::string> gens;
        for (const auto& m : ideal.generators())
            gens.push_back(Polynomial::from_monomial(ideal.ring(), m).to_string());
        *ctx.out << ideal_json(ideal.ring(), gens).dump(2) << "\n";
    } else {
        *ctx.out << ideal.to_string();
    }
}

void print_poly_ideal(const CliContext& ctx, const PolyIdeal& ideal) {
    if (ctx.structured()) {
        std::vector<std::string> gens;
        for (const auto& g : ideal.generators())
            gens.push_back(g.to_string());
        *ctx.out << ideal_json(ideal.ring(), gens).dump(2) << "\n";
    } else {
        *ctx.out << ideal.to_string();
    }
}

void print_graph(const CliContext& ctx, const Graph& g) {
    if (ctx.structured())
        *ctx.out << graph_to_json(g);
    else
        *ctx.out << graph_to_edge_list(g);
}

struct SuiteDefaults {
    std::string corpus;
    std::vector<int> s_values;
};

SuiteDefaults suite_defaults(const std::string& suite) {
    if (suite == "cor135")
        return {"all-connected:6", {0}};
    if (suite == "vc-colon" || suite == "minimal-prime" || suite == "ghw-cover")
        return {"path:3,cycle:3,star:4,cycle:5,path:4", {0, 1, 2}};
    if (suite == "pc-identity" || suite == "pc-saturation")
        return {"all-connected:4", {1, 2}};
    if (suite == "cochordal-pc")
        return {"all-connected:6", {1, 2}};
    if (suite == "froberg")
        return {"all-connected:6", {0}};
    return {"path:4", {1}};
}

} // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliContext ctx;
    ctx.out = &out;
    ctx.err = &err;

    CLI::App app{"jets of graphs and their edge ideals"};
    app.fallthrough();
    CLI::Option* order_opt =
        app.add_option("-s,--order", ctx.s, "jet order")->check(CLI::NonNegativeNumber);
    app.add_option("--format", ctx.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--limits", ctx.limits_file, "resource limits file (JSON)");
    app.add_option("--seed", ctx.seed, "seed for randomized property tests");
    app.require_subcommand(1);

    int exit_code = 0;
    auto graph_input = [&](CLI::App* cmd) {
        cmd->add_option("input", ctx.input_file, "graph file; '-' reads stdin");
    };

    CLI::App* covers = app.add_subcommand("covers", "minimal vertex covers");
    graph_input(covers);
    covers->callback([&] {
        Graph g = ctx.read_graph();
        auto result = minimal_vertex_covers(g, ctx.limits());
        if (ctx.structured()) {
            nlohmann::json doc = nlohmann::json::array();
            for (const auto& w : result) {
                nlohmann::json one = nlohmann::json::array();
                for (int v : w.cover)
                    one.push_back(g.vertex_name(v));
                doc.push_back(std::move(one));
            }
            out << doc.dump(2) << "\n";
        } else {
            for (const auto& w : result) {
                for (std::size_t i = 0; i < w.cover.size(); ++i)
                    out << (i ? " " : "") << g.vertex_name(w.cover[i]);
                out << "\n";
            }
        }
    });

    CLI::App* jets_graph_cmd = app.add_subcommand("jets-graph", "jets of a graph");
    graph_input(jets_graph_cmd);
    jets_graph_cmd->callback([&] { print_graph(ctx, jets_of_graph(ctx.read_graph(), ctx.s)); });

    CLI::App* complement_cmd = app.add_subcommand("complement", "complementary graph");
    graph_input(complement_cmd);
    complement_cmd->callback([&] { print_graph(ctx, complement(ctx.read_graph())); });

    CLI::App* chordal_cmd = app.add_subcommand("chordal", "chordality with witness");
    graph_input(chordal_cmd);
    chordal_cmd->callback([&] {
        Graph g = ctx.read_graph();
        auto [chordal, witness] = is_chordal(g);
        if (ctx.structured()) {
            nlohmann::json doc;
            doc["chordal"] = chordal;
            if (witness) {
                nlohmann::json cycle = nlohmann::json::array();
                for (int v : witness->path)
                    cycle.push_back(g.vertex_name(v));
                doc["witness"] = std::move(cycle);
            }
            out << doc.dump(2) << "\n";
        } else if (chordal) {
            out << "chordal\n";
        } else {
            out << "not chordal; witness cycle: (";
            for (std::size_t i = 0; i < witness->path.size(); ++i)
                out << (i ? " " : "") << g.vertex_name(witness->path[i]);
            out << ")\n";
        }
    });

    CLI::App* edge_ideal_cmd = app.add_subcommand("edge-ideal", "edge ideal of a graph");
    graph_input(edge_ideal_cmd);
    edge_ideal_cmd->callback([&] { print_monomial_ideal(ctx, edge_ideal(ctx.read_graph())); });

    CLI::App* jets_ideal_cmd = app.add_subcommand("jets-ideal", "jets of the edge ideal");
    graph_input(jets_ideal_cmd);
    jets_ideal_cmd->callback(
        [&] { print_poly_ideal(ctx, jets_of_ideal(edge_ideal(ctx.read_graph()), ctx.s)); });

    CLI::App* jets_radical_cmd =
        app.add_subcommand("jets-radical", "radical of the jets of the edge ideal");
    graph_input(jets_radical_cmd);
    jets_radical_cmd->callback(
        [&] { print_monomial_ideal(ctx, radical_of_jets(edge_ideal(ctx.read_graph()), ctx.s)); });

    CLI::App* pc_cmd = app.add_subcommand("pc", "principal component of the jets");
    std::string route = "closed-form";
    pc_cmd->add_option("--route", route, "construction route")
        ->check(CLI::IsMember({"closed-form", "intersection", "saturation"}));
    graph_input(pc_cmd);
    pc_cmd->callback([&] {
        Graph g = ctx.read_graph();
        if (route == "closed-form")
            print_monomial_ideal(ctx, principal_component_ideal(g, ctx.s));
        else if (route == "intersection")
            print_monomial_ideal(ctx, pc_as_cover_intersection(g, ctx.s, ctx.limits()));
        else
            print_poly_ideal(ctx, principal_component_via_saturation(g, ctx.s, ctx.limits()));
    });

    CLI::App* singular_cmd =
        app.add_subcommand("singular-locus", "ideal of the singular locus at order 0");
    graph_input(singular_cmd);
    singular_cmd->callback(
        [&] { print_poly_ideal(ctx, singular_locus_ideal(ctx.read_graph(), ctx.s, ctx.limits())); });

    CLI::App* betti_cmd = app.add_subcommand("betti", "graded Betti table via subset homology");
    bool betti_pc = false;
    bool betti_quotient = true;
    bool betti_module = false;
    betti_cmd->add_flag("--pc", betti_pc, "table of the principal-component ideal at order s");
    betti_cmd->add_flag("--quotient,!--no-quotient", betti_quotient,
                        "table of S/I rather than of I (default on)");
    betti_cmd->add_flag("--module", betti_module, "table of the ideal as a module");
    graph_input(betti_cmd);
    betti_cmd->callback([&] {
        Graph g = ctx.read_graph();
        MonomialIdeal ideal = betti_pc ? principal_component_ideal(g, ctx.s) : edge_ideal(g);
        BettiTable table = betti_table(ideal, ctx.limits());
        if (betti_module || !betti_quotient)
            table = module_betti_table(table);
        if (ctx.structured())
            out << table.to_json_text() << "\n";
        else
            out << table.to_text();
    });

    CLI::App* linear_cmd = app.add_subcommand("linear-res", "linear resolution test");
    bool linear_pc = false;
    linear_cmd->add_flag("--pc", linear_pc, "test the principal-component ideal at order s");
    graph_input(linear_cmd);
    linear_cmd->callback([&] {
        Graph g = ctx.read_graph();
        MonomialIdeal ideal = linear_pc ? principal_component_ideal(g, ctx.s) : edge_ideal(g);
        bool linear = has_linear_resolution(ideal, ctx.limits());
        if (ctx.structured())
            out << "{\"linear_resolution\": " << (linear ? "true" : "false") << "}\n";
        else
            out << (linear ? "true" : "false") << "\n";
    });

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::string corpus_spec;
    std::vector<int> s_values;
    verify_cmd->add_option("suite", suite, "suite id")->required();
    verify_cmd->add_option("--corpus", corpus_spec, "corpus specification");
    verify_cmd->add_option("--s-values", s_values, "jet orders to test");
    verify_cmd->callback([&] {
        SuiteDefaults defaults = suite_defaults(suite);
        if (corpus_spec.empty())
            corpus_spec = defaults.corpus;
        if (s_values.empty())
            s_values = order_opt->count() > 0 ? std::vector<int>{ctx.s} : defaults.s_values;
        Corpus corpus = parse_corpus(corpus_spec);
        std::vector<VerificationReport> reports = run_suite(suite, corpus, s_values, ctx.limits());
        if (ctx.structured()) {
            nlohmann::json doc = nlohmann::json::array();
            for (const auto& r : reports) {
                nlohmann::json one;
                one["suite"] = r.suite;
                one["instance"] = r.instance;
                if (r.s >= 0)
                    one["s"] = r.s;
                if (!r.detail.empty())
                    one["detail"] = r.detail;
                one["status"] = r.status == SuiteStatus::Pass
                                    ? "pass"
                                    : (r.status == SuiteStatus::Fail ? "fail" : "skipped");
                if (!r.witness.empty())
                    one["witness"] = r.witness;
                doc.push_back(std::move(one));
            }
            out << doc.dump(2) << "\n";
        } else {
            std::size_t passed = 0, failed = 0, skipped = 0;
            for (const auto& r : reports) {
                out << report_line(r) << "\n";
                if (r.status == SuiteStatus::Fail) {
                    ++failed;
                    out << "  witness:\n";
                    std::istringstream lines(r.witness);
                    std::string line;
                    while (std::getline(lines, line))
                        out << "    " << line << "\n";
                } else if (r.status == SuiteStatus::Skipped) {
                    ++skipped;
                } else {
                    ++passed;
                }
            }
            out << reports.size() << " cells: " << passed << " passed, " << failed
                << " failed, " << skipped << " skipped\n";
        }
        exit_code = reports_exit_code(reports);
    });

    CLI::App* export_cmd = app.add_subcommand("export-m2", "Macaulay2 source for cross-checking");
    std::string what = "jets-ideal";
    export_cmd->add_option("--what", what, "which ideal to export")
        ->check(CLI::IsMember(
            {"edge-ideal", "jets-ideal", "jets-radical", "pc", "singular-locus"}));
    graph_input(export_cmd);
    export_cmd->callback([&] {
        Graph g = ctx.read_graph();
        if (what == "edge-ideal")
            out << to_macaulay2(PolyIdeal::from_monomial_ideal(edge_ideal(g)), "I");
        else if (what == "jets-ideal")
            out << to_macaulay2(jets_of_ideal(edge_ideal(g), ctx.s), "JI");
        else if (what == "jets-radical")
            out << to_macaulay2(
                PolyIdeal::from_monomial_ideal(radical_of_jets(edge_ideal(g), ctx.s)), "RJ");
        else if (what == "pc")
            out << to_macaulay2(
                PolyIdeal::from_monomial_ideal(principal_component_ideal(g, ctx.s)), "PC");
        else
            out << to_macaulay2(singular_locus_ideal(g, ctx.s, ctx.limits()), "SL");
    });

    std::vector<const char*> argv;
    argv.push_back("gjets");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const UnknownSuite& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

} // namespace gjets
