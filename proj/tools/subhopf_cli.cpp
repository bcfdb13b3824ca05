// subhopf: command-line front end for the Hopf algebra on subgraphs.
//
// Exit codes: 0 success / verified, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <subhopf/subhopf.hpp>

namespace {

using namespace subhopf;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

struct GlobalOptions {
    std::string graph_file;
    bool json_output = false;
    std::size_t max_degree = 4;
    std::uint64_t seed = 1;
    std::string cache_dir;
    bool no_cache = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Graph load_graph(const std::string& path) {
    if (path.empty()) throw input_error("no graph given (use --graph FILE)");
    return parse_graph(read_file(path));
}

// Seeds the workspace bases from the on-disk cache when one is configured.
void attach_cache(const GlobalOptions& opt, Workspace& ws, std::size_t degree) {
    if (opt.cache_dir.empty() || opt.no_cache) return;
    sync_basis_cache(ws.bases, opt.cache_dir, degree);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

// ---------------------------------------------------------------------------

int cmd_subgraphs(const GlobalOptions& opt, std::optional<std::size_t> max_vertices) {
    const Graph g = load_graph(opt.graph_file);
    std::vector<ConnectedSubgraph> gens;
    if (max_vertices && !opt.cache_dir.empty() && !opt.no_cache) {
        Workspace ws(g);
        attach_cache(opt, ws, *max_vertices);
        gens = ws.bases.generators(*max_vertices);
    } else {
        gens = enumerate_connected_subgraphs(g, max_vertices);
    }
    if (opt.json_output) {
        json list = json::array();
        for (const auto& c : gens) list.push_back(to_json(c));
        std::cout << json{{"subgraphs", list}, {"count", gens.size()}}.dump(2) << "\n";
    } else {
        for (const auto& c : gens) std::cout << render(c) << "\n";
        std::cout << "count: " << gens.size() << "\n";
    }
    return exit_ok;
}

int cmd_eval(const GlobalOptions& opt, const std::string& expr) {
    Workspace ws(load_graph(opt.graph_file));
    attach_cache(opt, ws, opt.max_degree);
    const Value v = evaluate(expr, ws, opt.max_degree);
    if (opt.json_output)
        std::cout << to_json(v).dump(2) << "\n";
    else
        std::cout << render(v) << "\n";
    return exit_ok;
}

int cmd_dual(const GlobalOptions& opt, const std::string& action, const std::vector<std::string>& args,
             bool nonzero_only) {
    Workspace ws(load_graph(opt.graph_file));
    attach_cache(opt, ws, opt.max_degree);
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw input_error("dual " + action + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
    };
    if (action == "product") {
        need(2);
        const Monomial a = parse_monomial(args[0], ws), b = parse_monomial(args[1], ws);
        if (a.degree() + b.degree() > opt.max_degree)
            throw input_error("dual product degree " + std::to_string(a.degree() + b.degree()) +
                              " exceeds --max-degree " + std::to_string(opt.max_degree));
        const auto z = dual_product(ws.algebra, ws.bases, a, b);
        std::cout << (opt.json_output ? to_json(Value(z)).dump(2) : render(z)) << "\n";
        return exit_ok;
    }
    if (action == "coproduct") {
        need(1);
        const auto t = dual_coproduct(parse_monomial(args[0], ws));
        std::cout << (opt.json_output ? to_json(Value(t)).dump(2) : render(t)) << "\n";
        return exit_ok;
    }
    if (action == "table") {
        need(2);
        std::size_t p = 0, q = 0;
        try {
            p = std::stoul(args[0]);
            q = std::stoul(args[1]);
        } catch (const std::exception&) {
            throw input_error("dual table expects two degrees");
        }
        if (p + q > opt.max_degree)
            throw input_error("table degree " + std::to_string(p + q) + " exceeds --max-degree " +
                              std::to_string(opt.max_degree));
        json rows = json::array();
        if (!opt.json_output) std::cout << "F1,F2,F,n\n";
        for (const auto& f1 : ws.bases.basis(p).monomials)
            for (const auto& f2 : ws.bases.basis(q).monomials)
                for (const auto& f : ws.bases.basis(p + q).monomials) {
                    const Scalar n = structure_constant(ws.algebra, f1, f2, f);
                    if (nonzero_only && n == 0) continue;
                    if (opt.json_output)
                        rows.push_back({{"F1", to_json(f1)}, {"F2", to_json(f2)}, {"F", to_json(f)}, {"n", n.str()}});
                    else
                        std::cout << csv_field(render(f1)) << "," << csv_field(render(f2)) << ","
                                  << csv_field(render(f)) << "," << n.str() << "\n";
                }
        if (opt.json_output) std::cout << rows.dump(2) << "\n";
        return exit_ok;
    }
    throw input_error("unknown dual action '" + action + "' (product, coproduct, table)");
}

int cmd_dims(const GlobalOptions& opt) {
    Workspace ws(load_graph(opt.graph_file));
    attach_cache(opt, ws, opt.max_degree);
    json dims = json::array();
    for (std::size_t n = 0; n <= opt.max_degree; ++n) {
        if (opt.json_output)
            dims.push_back(ws.bases.dimension(n));
        else
            std::cout << n << " " << ws.bases.dimension(n) << "\n";
    }
    if (opt.json_output) std::cout << json{{"dims", dims}}.dump(2) << "\n";
    return exit_ok;
}

GraphHom load_hom(const Graph& source, const std::string& target_file, const std::string& map_file) {
    Graph target = load_graph(target_file);
    try {
        return validate_hom(source, std::move(target), parse_vertex_map(read_file(map_file)));
    } catch (const std::invalid_argument& e) {
        throw input_error(std::string("invalid homomorphism: ") + e.what());
    }
}

int cmd_hom(const GlobalOptions& opt, const std::string& source_file, const std::string& target_file,
            const std::string& map_file, const std::string& expr) {
    const Graph source = load_graph(source_file.empty() ? opt.graph_file : source_file);
    const GraphHom f = load_hom(source, target_file, map_file);
    Workspace ws(source);
    const Element image = apply_algebra_morphism(f, parse_element(expr, ws));
    std::cout << (opt.json_output ? to_json(Value(image)).dump(2) : render(image)) << "\n";
    return exit_ok;
}

struct VerifyOptions {
    std::vector<std::string> checks;
    bool all = false;
    std::optional<std::size_t> samples;
    std::vector<std::string> homs;  // TARGET:MAP
    std::vector<std::string> subs;
};

int cmd_verify(const GlobalOptions& opt, const VerifyOptions& vo) {
    static const std::vector<std::string> standard = {"coalgebra", "grading",  "bialgebra",   "hopf",
                                                      "duality",   "functor",  "subcoalgebra"};
    std::vector<std::string> checks = vo.checks;
    if (vo.all || checks.empty()) checks = standard;
    for (const auto& c : checks)
        if (c != "words" && std::find(standard.begin(), standard.end(), c) == standard.end())
            throw input_error("unknown check '" + c + "'");

    const Graph g = load_graph(opt.graph_file);
    Workspace ws(g);
    attach_cache(opt, ws, opt.max_degree);

    // Validate every input before running anything.
    std::vector<GraphHom> homs;
    Graph current = g;
    for (const auto& arg : vo.homs) {
        auto colon = arg.find(':');
        if (colon == std::string::npos) throw input_error("--hom expects TARGET:MAP, got '" + arg + "'");
        homs.push_back(load_hom(current, arg.substr(0, colon), arg.substr(colon + 1)));
        current = homs.back().target();
    }
    if (homs.size() > 2) throw input_error("--hom may be given at most twice");
    std::vector<Graph> subs;
    for (const auto& file : vo.subs) {
        subs.push_back(load_graph(file));
        if (!is_subgraph_of(subs.back(), g)) throw input_error("'" + file + "' is not a subgraph of the host graph");
    }
    if (subs.empty()) {
        for (const Edge& e : g.edges()) subs.push_back(Graph({}, {e}));
        if (subs.empty()) subs.push_back(g);
    }

    std::vector<Report> reports;
    for (const auto& c : checks) {
        if (c == "coalgebra") reports.push_back(check_coalgebra(ws, opt.max_degree));
        if (c == "grading") reports.push_back(check_grading(ws, opt.max_degree));
        if (c == "bialgebra") reports.push_back(check_bialgebra(ws, opt.max_degree, vo.samples.value_or(100), opt.seed));
        if (c == "hopf") reports.push_back(check_hopf(ws, opt.max_degree));
        if (c == "duality") reports.push_back(check_duality(ws, opt.max_degree));
        if (c == "functor") {
            const GraphHom f = homs.empty() ? identity_hom(g) : homs[0];
            const GraphHom h = homs.size() > 1 ? homs[1] : identity_hom(f.target());
            reports.push_back(check_functor(f, h, vo.samples.value_or(50), opt.seed, std::min<std::size_t>(opt.max_degree, 3)));
        }
        if (c == "subcoalgebra") {
            Report merged;
            for (const auto& sub : subs) {
                Report r = check_subcoalgebra(ws, sub, opt.max_degree);
                if (merged.check.empty()) {
                    merged = std::move(r);
                    continue;
                }
                merged.cases += r.cases;
                merged.ms += r.ms;
                merged.failures.insert(merged.failures.end(), r.failures.begin(), r.failures.end());
            }
            reports.push_back(std::move(merged));
        }
        if (c == "words") reports.push_back(check_word_coassociativity(g, opt.max_degree));
    }

    bool ok = true;
    json out = json::array();
    for (const auto& r : reports) {
        ok = ok && r.passed();
        if (opt.json_output) {
            out.push_back(r.to_json());
            continue;
        }
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.check << " cutoff=" << r.cutoff << " cases=" << r.cases
                  << " failures=" << r.failures.size() << " ms=" << static_cast<long long>(r.ms) << "\n";
        for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i)
            std::cout << "  " << r.failures[i].input << "\n    expected: " << r.failures[i].expected
                      << "\n    actual:   " << r.failures[i].actual << "\n";
    }
    if (opt.json_output) std::cout << out.dump(2) << "\n";
    return ok ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hopf algebra on the subgraphs of a labeled graph"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opt;
    app.add_option("-g,--graph", opt.graph_file, "Host graph file");
    app.add_flag("--json", opt.json_output, "Structured output");
    app.add_option("-d,--max-degree", opt.max_degree, "Degree cutoff")->capture_default_str();
    app.add_option("--seed", opt.seed, "Random seed for sampled checks")->capture_default_str();
    app.add_option("--cache", opt.cache_dir, "Basis cache directory");
    app.add_flag("--no-cache", opt.no_cache, "Ignore the basis cache");

    std::optional<std::size_t> max_vertices;
    auto* sub = app.add_subcommand("subgraphs", "List the nonempty connected subgraphs");
    sub->add_option("--max-vertices", max_vertices, "Only subgraphs with at most this many vertices");

    std::string expr;
    auto* eval = app.add_subcommand("eval", "Evaluate an expression");
    eval->add_option("expression", expr)->required();

    std::string dual_action;
    std::vector<std::string> dual_args;
    bool nonzero = false;
    auto* dual = app.add_subcommand("dual", "Graded dual: product A B | coproduct A | table P Q");
    dual->add_option("action", dual_action)->required();
    dual->add_option("args", dual_args);
    dual->add_flag("--nonzero", nonzero, "table: omit zero structure constants");

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run verification checks");
    verify->add_option("checks", vo.checks, "coalgebra grading bialgebra hopf duality functor subcoalgebra words");
    verify->add_flag("--all", vo.all, "Run every standard check");
    verify->add_option("--samples", vo.samples, "Random samples for bialgebra/functor checks");
    verify->add_option("--hom", vo.homs, "Homomorphism TARGET_GRAPH:MAP_FILE (up to two, chained)");
    verify->add_option("--sub", vo.subs, "Subgraph file for the subcoalgebra check");

    std::string hom_source, hom_target, hom_map, hom_expr;
    auto* hom = app.add_subcommand("hom", "Apply the algebra morphism induced by a graph homomorphism");
    hom->add_option("--source", hom_source, "Source graph (defaults to --graph)");
    hom->add_option("--target", hom_target, "Target graph")->required();
    hom->add_option("--map", hom_map, "Vertex map file (u -> v lines)")->required();
    hom->add_option("expression", hom_expr)->required();

    app.add_subcommand("dims", "Graded dimensions for degrees 0..max-degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_input;
    }

    try {
        if (*sub) return cmd_subgraphs(opt, max_vertices);
        if (*eval) return cmd_eval(opt, expr);
        if (*dual) return cmd_dual(opt, dual_action, dual_args, nonzero);
        if (*verify) return cmd_verify(opt, vo);
        if (*hom) return cmd_hom(opt, hom_source, hom_target, hom_map, hom_expr);
        return cmd_dims(opt);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
}
