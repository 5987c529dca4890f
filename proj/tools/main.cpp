// Command-line surface for the circular colouring reconfiguration library.
//
// Subcommands: verify, reconfigure, oracle, reduce, lift, cycles,
// sparse-colour.  Standard output carries only machine-readable results;
// diagnostics go to standard error, gated by RECOLOUR_LOG (error|info|debug).
//
// Exit codes: 0 yes/ok, 1 no-with-certificate, 2 invalid-colouring,
// 3 unsupported-params, 64 usage, 65 parse, 69 budget.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circol/chromatic.hpp"
#include "circol/circular.hpp"
#include "circol/graph.hpp"
#include "circol/hardness.hpp"
#include "circol/io.hpp"
#include "circol/oracle.hpp"
#include "circol/recolour.hpp"

namespace {

enum ExitCode {
    kOk = 0,
    kNo = 1,
    kInvalidColouring = 2,
    kUnsupportedParams = 3,
    kUsage = 64,
    kParse = 65,
    kBudget = 69,
};

int log_level() {
    static int level = [] {
        const char* env = std::getenv("RECOLOUR_LOG");
        if (!env) return 0;
        if (std::strcmp(env, "debug") == 0) return 2;
        if (std::strcmp(env, "info") == 0) return 1;
        return 0;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "info: " << msg << "\n";
}

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw circol::parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

circol::Graph load_graph(const std::string& path) {
    std::istringstream in(read_file(path));
    return circol::parse_graph(in);
}

circol::CircularColouring load_colouring(const std::string& path) {
    std::istringstream in(read_file(path));
    return circol::parse_colouring(in);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw circol::parse_error("cannot write '" + path + "'");
    out << text;
}

int cmd_verify(const std::string& graph_path, const std::string& col_path) {
    circol::Graph g = load_graph(graph_path);
    circol::CircularColouring c = load_colouring(col_path);
    auto bad = circol::verify_colouring(g, c);
    if (bad) {
        std::cout << "violation e " << bad->u << " " << bad->v << "\n";
        return kInvalidColouring;
    }
    std::cout << "ok\n";
    return kOk;
}

int cmd_reconfigure(const std::string& graph_path, const std::string& from_path,
                    const std::string& to_path, const std::string& out_path) {
    circol::Graph g = load_graph(graph_path);
    circol::CircularColouring from = load_colouring(from_path);
    circol::CircularColouring to = load_colouring(to_path);
    if (from.params != to.params)
        throw usage_error("'from' and 'to' use different (p,q)");
    if (!from.params.below_four())
        throw circol::param_out_of_range(
            "p/q >= 4 is PSPACE-hard territory; use 'reduce' to build instances or 'oracle' "
            "for toy-scale search");
    if (circol::verify_colouring(g, from) || circol::verify_colouring(g, to))
        throw circol::invalid_colouring("input colourings must be valid");

    // Verdicts combine per connected component: YES exactly when every
    // component says YES; the first NO certificate wins.
    circol::RecolourResult merged;
    for (const std::vector<int>& comp : circol::connected_components(g)) {
        circol::Graph sub = circol::induced_subgraph(g, comp);
        std::vector<int> cf(comp.size()), ct(comp.size());
        for (size_t i = 0; i < comp.size(); ++i) {
            cf[i] = from.colours[comp[i]];
            ct[i] = to.colours[comp[i]];
        }
        circol::RecolourResult res =
            circol::recolour(sub, circol::CircularColouring(from.params, cf),
                             circol::CircularColouring(from.params, ct));
        if (!res.yes()) {
            circol::Obstruction obs = *res.obstruction;
            auto remap = [&](std::vector<int>& vs) {
                for (int& v : vs) v = comp[v];
            };
            if (obs.vertex >= 0) obs.vertex = comp[obs.vertex];
            remap(obs.witness_cycle);
            remap(obs.cycle.verts);
            remap(obs.path);
            merged.obstruction = obs;
            merged.steps.clear();
            break;
        }
        for (circol::RecolourStep s : res.steps) {
            s.vertex = comp[s.vertex];
            merged.steps.push_back(s);
        }
    }
    std::string doc = circol::dump_json(circol::verdict_to_json(merged));
    std::cout << doc;
    if (!out_path.empty()) write_text(out_path, doc);
    log_info(merged.yes() ? "reconfigurable, " + std::to_string(merged.steps.size()) + " steps"
                          : "not reconfigurable");
    return merged.yes() ? kOk : kNo;
}

int cmd_oracle(const std::string& graph_path, int p, int q, const std::string& from_path,
               const std::string& to_path, bool components, long long budget, int threads) {
    circol::Graph g = load_graph(graph_path);
    circol::CircularParams pr(p, q);
    if (components) {
        auto s = circol::components_summary(g, pr, budget, threads);
        std::cout << s.to_string() << "\n";
        return kOk;
    }
    if (from_path.empty() || to_path.empty())
        throw usage_error("oracle needs --components or both --from and --to");
    circol::CircularColouring from = load_colouring(from_path);
    circol::CircularColouring to = load_colouring(to_path);
    if (from.params != pr || to.params != pr)
        throw usage_error("colouring files disagree with -p/-q");
    auto d = circol::oracle_decide(g, pr, from, to, budget, threads);
    if (d.reachable) {
        std::cout << "reachable=yes distance=" << d.distance << "\n";
        return kOk;
    }
    std::cout << "reachable=no\n";
    return kNo;
}

int cmd_reduce(const std::string& graph_path, const std::string& from_path,
               const std::string& to_path, int p, int q, const std::string& prefix) {
    circol::Graph g = load_graph(graph_path);
    circol::CircularParams pr(p, q);
    circol::CircularColouring from = load_colouring(from_path);
    circol::CircularColouring to = load_colouring(to_path);
    int k = pr.k();
    if (from.params != circol::CircularParams(k, 1) || to.params != circol::CircularParams(k, 1))
        throw usage_error("reduce expects k-colouring files with header 'colouring " +
                          std::to_string(k) + " 1 <n>'");
    circol::ReductionInstance red =
        circol::build_reduction(g, from.colours, to.colours, pr);
    write_text(prefix + ".graph", circol::format_graph(red.g_prime));
    write_text(prefix + ".alpha", circol::format_colouring(red.alpha));
    write_text(prefix + ".beta", circol::format_colouring(red.beta));
    write_text(prefix + ".meta.json", circol::dump_json(circol::reduction_metadata(red)));
    log_info("wrote " + prefix + ".{graph,alpha,beta,meta.json}; |V(G')| = " +
             std::to_string(red.g_prime.n));
    return kOk;
}

int cmd_lift(const std::string& graph_path, const std::string& from_path,
             const std::string& to_path, int p, int q, const std::string& ksteps_path,
             const std::string& out_path) {
    circol::Graph g = load_graph(graph_path);
    circol::CircularParams pr(p, q);
    circol::CircularColouring from = load_colouring(from_path);
    circol::CircularColouring to = load_colouring(to_path);
    int k = pr.k();
    if (from.params != circol::CircularParams(k, 1) || to.params != circol::CircularParams(k, 1))
        throw usage_error("lift expects k-colouring files with header 'colouring " +
                          std::to_string(k) + " 1 <n>'");
    nlohmann::json ksteps_doc;
    try {
        ksteps_doc = nlohmann::json::parse(read_file(ksteps_path));
    } catch (const nlohmann::json::parse_error& ex) {
        throw circol::parse_error(std::string("ksteps: ") + ex.what());
    }
    std::vector<circol::RecolourStep> raw = circol::steps_from_json(ksteps_doc);
    std::vector<std::pair<int, int>> ksteps;
    for (const circol::RecolourStep& s : raw) ksteps.emplace_back(s.vertex, s.new_colour);
    circol::ReductionInstance red = circol::build_reduction(g, from.colours, to.colours, pr);
    std::vector<circol::RecolourStep> lifted = circol::lift_sequence(red, ksteps);
    std::string doc = circol::dump_json(circol::steps_to_json(lifted));
    std::cout << doc;
    if (!out_path.empty()) write_text(out_path, doc);
    return kOk;
}

int cmd_cycles(const std::string& graph_path, int k, long long budget) {
    circol::Graph g = load_graph(graph_path);
    long long count = circol::count_cycles_mod_k(g, k, budget);
    long long threshold = circol::factorial(k - 1) / 2;
    std::cout << "count=" << count << " threshold=" << threshold << " verdict="
              << (count < threshold ? "below" : "at-or-above") << "\n";
    return kOk;
}

int cmd_sparse_colour(const std::string& graph_path, int k, const std::string& out_path) {
    circol::Graph g = load_graph(graph_path);
    circol::SparseColourResult res = circol::colour_sparse_cycles(g, k);
    if (std::holds_alternative<circol::SparseColourFailure>(res)) {
        const auto& fail = std::get<circol::SparseColourFailure>(res);
        std::cout << "result=failure edge=" << fail.edge.u << "," << fail.edge.v
                  << " index=" << fail.edge_index << " count=" << fail.cycles_mod_k
                  << " threshold=" << circol::factorial(k - 1) / 2 << "\n";
        return kNo;
    }
    circol::CircularColouring c(circol::CircularParams(k, 1),
                                std::get<std::vector<int>>(res));
    std::string text = circol::format_colouring(c);
    std::cout << text;
    if (!out_path.empty()) write_text(out_path, text);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular (p,q)-colouring reconfiguration toolkit"};
    app.require_subcommand(1);

    std::string graph_path, from_path, to_path, col_path, out_path, prefix, ksteps_path;
    int p = 0, q = 0, k = 0, threads = 1;
    long long budget = circol::kDefaultStateBudget;
    bool components = false;

    CLI::App* verify = app.add_subcommand("verify", "check a colouring against a graph");
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--colouring", col_path)->required();

    CLI::App* reconfigure =
        app.add_subcommand("reconfigure", "decide reconfigurability for 2 <= p/q < 4");
    reconfigure->add_option("--graph", graph_path)->required();
    reconfigure->add_option("--from", from_path)->required();
    reconfigure->add_option("--to", to_path)->required();
    reconfigure->add_option("--out", out_path);

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive configuration-graph search");
    oracle->add_option("--graph", graph_path)->required();
    oracle->add_option("-p", p)->required();
    oracle->add_option("-q", q)->required();
    oracle->add_option("--from", from_path);
    oracle->add_option("--to", to_path);
    oracle->add_flag("--components", components);
    oracle->add_option("--budget", budget);
    oracle->add_option("--threads", threads);

    CLI::App* reduce = app.add_subcommand("reduce", "build the p/q >= 4 hardness instance");
    reduce->add_option("--graph", graph_path)->required();
    reduce->add_option("--from", from_path)->required();
    reduce->add_option("--to", to_path)->required();
    reduce->add_option("-p", p)->required();
    reduce->add_option("-q", q)->required();
    reduce->add_option("--out-prefix", prefix)->required();

    CLI::App* lift = app.add_subcommand("lift", "lift a k-step sequence through the reduction");
    lift->add_option("--graph", graph_path)->required();
    lift->add_option("--from", from_path)->required();
    lift->add_option("--to", to_path)->required();
    lift->add_option("-p", p)->required();
    lift->add_option("-q", q)->required();
    lift->add_option("--ksteps", ksteps_path)->required();
    lift->add_option("--out", out_path);

    CLI::App* cycles = app.add_subcommand("cycles", "count cycles of length 0 mod k");
    cycles->add_option("--graph", graph_path)->required();
    cycles->add_option("-k", k)->required();
    cycles->add_option("--budget", budget);

    CLI::App* sparse =
        app.add_subcommand("sparse-colour", "k-colour a graph with few cycles of length 0 mod k");
    sparse->add_option("--graph", graph_path)->required();
    sparse->add_option("-k", k)->required();
    sparse->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(graph_path, col_path);
        if (reconfigure->parsed()) return cmd_reconfigure(graph_path, from_path, to_path, out_path);
        if (oracle->parsed())
            return cmd_oracle(graph_path, p, q, from_path, to_path, components, budget, threads);
        if (reduce->parsed()) return cmd_reduce(graph_path, from_path, to_path, p, q, prefix);
        if (lift->parsed())
            return cmd_lift(graph_path, from_path, to_path, p, q, ksteps_path, out_path);
        if (cycles->parsed()) return cmd_cycles(graph_path, k, budget);
        if (sparse->parsed()) return cmd_sparse_colour(graph_path, k, out_path);
    } catch (const circol::parse_error& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return kParse;
    } catch (const circol::budget_exceeded& ex) {
        std::cerr << "budget exceeded: " << ex.what() << "\n";
        return kBudget;
    } catch (const circol::param_out_of_range& ex) {
        std::cerr << "unsupported parameters: " << ex.what() << "\n";
        return kUnsupportedParams;
    } catch (const circol::invalid_colouring& ex) {
        std::cerr << "invalid colouring: " << ex.what() << "\n";
        return kInvalidColouring;
    } catch (const circol::domain_mismatch& ex) {
        std::cerr << "invalid colouring: " << ex.what() << "\n";
        return kInvalidColouring;
    } catch (const circol::colour_out_of_range& ex) {
        std::cerr << "invalid colouring: " << ex.what() << "\n";
        return kInvalidColouring;
    } catch (const circol::invalid_k_sequence& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return kParse;
    } catch (const circol::invalid_pq_sequence& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return kParse;
    } catch (const circol::not_a_proper_colouring& ex) {
        std::cerr << "invalid colouring: " << ex.what() << "\n";
        return kInvalidColouring;
    } catch (const circol::r_is_zero& ex) {
        std::cerr << "unsupported parameters: " << ex.what() << "\n";
        return kUnsupportedParams;
    } catch (const usage_error& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
