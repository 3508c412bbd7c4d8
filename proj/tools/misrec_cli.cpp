// misrec: graph reconstruction through a maximal-independent-set oracle.
// Subcommands: gen, reconstruct, scheme gen|verify, experiment,
// lb cycle|clique-pair|is-queries.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "misrec/experiment.hpp"
#include "misrec/generators.hpp"
#include "misrec/graph_io.hpp"
#include "misrec/lowerbound.hpp"
#include "misrec/reconstruct.hpp"

using namespace misrec;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string oracle = "lex-greedy";
    double c_const = 3.0;
    std::string dump_transcript;
    bool exact_adversary = false;
};

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

StrategyKind pick_strategy(const GlobalOpts& g, int n) {
    if (g.exact_adversary) {
        if (n > 20)
            throw std::invalid_argument(
                "--exact-adversary enumerates all maximal independent sets; limited to n <= 20");
        return StrategyKind::ExactAdversary;
    }
    return strategy_from_name(g.oracle);
}

std::vector<std::pair<int, int>> parse_cross_list(const std::string& spec) {
    // "i:j,i:j" pairs
    std::vector<std::pair<int, int>> out;
    if (spec.empty()) return out;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("cross edge must look like i:j, got \"" + item + "\"");
        out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    }
    return out;
}

int cmd_gen(const GlobalOpts& g, const std::string& family, int n, int delta, int N,
            double cross_density, const std::string& cross_list, int retry_budget,
            const std::string& out_path, bool as_json) {
    std::mt19937_64 rng(g.seed);
    Graph graph(1);
    if (family == "random-bounded")
        graph = gen_random_bounded(n, delta, rng, retry_budget);
    else if (family == "cycle")
        graph = gen_cycle(n);
    else if (family == "clique-pair")
        graph = cross_list.empty() ? gen_clique_pair_random(N, cross_density, rng)
                                   : gen_clique_pair(N, parse_cross_list(cross_list));
    else
        throw std::invalid_argument("unknown family: " + family);

    emit(out_path, as_json ? graph_to_json(graph) + "\n" : serialize_graph(graph));
    return 0;
}

int cmd_reconstruct(const GlobalOpts& g, const std::string& graph_path,
                    const std::string& algorithm, int delta, const std::string& scheme_path,
                    int query_budget, const std::string& out_path) {
    Graph truth = load_graph_file(graph_path);
    const int n = truth.vertex_count();
    OracleStrategy strategy(pick_strategy(g, n), g.seed ^ 0x9e3779b97f4a7c15ull);
    std::mt19937_64 rng(g.seed);

    ReconstructionResult result;
    if (algorithm == "scheme") {
        if (scheme_path.empty())
            throw std::invalid_argument("reconstruct --algorithm scheme needs --scheme FILE");
        QueryScheme scheme = scheme_from_json(read_text_file(scheme_path));
        result = scheme_reconstruct(truth, scheme, strategy);
    } else if (algorithm == "randomized") {
        ReconstructionParams params{n, delta > 0 ? delta : max_degree(truth), g.c_const, {}};
        if (query_budget > 0) params.query_budget = query_budget;
        result = randomized_reconstruct(truth, params, strategy, rng);
    } else {
        throw std::invalid_argument("unknown algorithm: " + algorithm);
    }

    nlohmann::json j;
    j["n"] = result.graph.vertex_count();
    auto edges = nlohmann::json::array();
    for (const auto& e : result.graph.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    j["queries"] = result.queries_used;
    j["witnessed_non_edges"] = result.witnessed_non_edges.size();
    emit(out_path, j.dump() + "\n");

    if (!g.dump_transcript.empty())
        write_text_file(g.dump_transcript, transcript_to_json(result.transcript) + "\n");
    return 0;
}

int cmd_scheme_gen(const GlobalOpts& g, int n, int delta, int size, double safety, bool verified,
                   const std::string& out_path) {
    std::mt19937_64 rng(g.seed);
    QueryScheme scheme;
    if (verified) {
        scheme = gen_verified_scheme(n, delta, rng).scheme;
    } else {
        int want = size > 0 ? size : default_scheme_size(n, delta, safety);
        scheme = gen_random_scheme(n, delta, want, rng);
    }
    emit(out_path, scheme_to_json(scheme) + "\n");
    return 0;
}

int cmd_scheme_verify(const std::string& in_path, const std::string& out_path) {
    QueryScheme scheme = scheme_from_json(read_text_file(in_path));
    auto counterexample = verify_scheme(scheme);
    nlohmann::json j;
    j["valid"] = !counterexample.has_value();
    if (counterexample)
        j["counterexample"] = {{"u", counterexample->u},
                               {"v", counterexample->v},
                               {"w", counterexample->w.to_vector()}};
    emit(out_path, j.dump() + "\n");
    return 0;
}

int cmd_experiment(const GlobalOpts& g, const std::string& algorithm, std::vector<int> n_values,
                   std::vector<int> delta_values, int trials, const std::string& scheme_path,
                   const std::string& graph_path, int query_budget, int retry_budget,
                   bool summary, const std::string& out_path) {
    ExperimentConfig cfg;
    cfg.algorithm = algorithm_from_name(algorithm);
    cfg.n_values = std::move(n_values);
    cfg.delta_values = std::move(delta_values);
    cfg.c_const = g.c_const;
    cfg.oracle = g.exact_adversary ? StrategyKind::ExactAdversary : strategy_from_name(g.oracle);
    cfg.trials = trials;
    cfg.base_seed = g.seed;
    cfg.gen_retry_budget = retry_budget;
    if (query_budget > 0) cfg.query_budget = query_budget;
    if (!scheme_path.empty()) cfg.scheme = scheme_from_json(read_text_file(scheme_path));
    if (!graph_path.empty()) cfg.fixed_graph = load_graph_file(graph_path);
    if (g.exact_adversary) {
        int max_n = cfg.scheme ? cfg.scheme->n : 0;
        for (int n : cfg.n_values) max_n = std::max(max_n, n);
        if (cfg.fixed_graph) max_n = std::max(max_n, cfg.fixed_graph->vertex_count());
        if (max_n > 20)
            throw std::invalid_argument("--exact-adversary is limited to n <= 20");
    }

    auto records = run_experiment(cfg);
    std::ostringstream out;
    if (summary) {
        auto cells = summarize(records);
        g.format == "json" ? write_summary_json(out, cells) : write_summary_csv(out, cells);
    } else {
        g.format == "json" ? write_records_json(out, records) : write_records_csv(out, records);
    }
    emit(out_path, out.str());
    return 0;
}

int cmd_lb_cycle(const GlobalOpts& g, int n, int queries, int trials,
                 const std::string& out_path) {
    std::mt19937_64 rng(g.seed);
    Graph cycle = gen_cycle(n);
    const StrategyKind mix[] = {StrategyKind::LexGreedy, StrategyKind::RandomGreedy,
                                StrategyKind::MinReveal};

    long long max_classes = 1;
    for (int i = 0; i < queries && max_classes <= n; ++i) max_classes *= 3;

    int with_pair = 0, consistent = 0, adjacent_pairs = 0, max_seen = 0;
    bool class_bound_ok = true;
    for (int trial = 0; trial < trials; ++trial) {
        OracleStrategy strategy(mix[trial % 3], rng());
        Transcript t;
        for (int i = 0; i < queries; ++i) {
            VertexSet q = sample_vertices(n, 0.5, rng);
            VertexSet a = strategy.answer(cycle, q);
            t.entries.push_back({std::move(q), std::move(a)});
        }
        PartitionState p = run_partition(n, t);
        max_seen = std::max(max_seen, p.class_count());
        if (p.class_count() > max_classes) class_bound_ok = false;
        if (auto pair = indistinguishable_pair(n, t)) {
            ++with_pair;
            SwapWitness w = swap_cycle_witness(cycle, t, pair->u, pair->v);
            if (w.consistent) ++consistent;
            if (cycle.has_edge(pair->u, pair->v)) ++adjacent_pairs;
        }
    }

    nlohmann::json j;
    j["n"] = n;
    j["queries"] = queries;
    j["trials"] = trials;
    j["query_lower_bound"] = cycle_query_lower_bound(n);
    j["max_class_count"] = max_seen;
    j["class_count_within_3_pow_l"] = class_bound_ok;
    j["trials_with_indistinguishable_pair"] = with_pair;
    j["swap_consistent"] = consistent;
    j["swapped_pairs_cycle_adjacent"] = adjacent_pairs;
    emit(out_path, j.dump() + "\n");
    return 0;
}

int cmd_lb_clique_pair(const GlobalOpts& g, int N, int trials, int budget, double cross_density,
                       const std::string& out_path) {
    std::mt19937_64 rng(g.seed);
    const int n = 2 * N;
    const int delta = 2 * N - 1;

    int max_answer = 0, exact_runs = 0, runs_under_budget = 0;
    bool reveal_bound_ok = true;
    double mean_false = 0.0, mean_reveals = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        Graph truth = gen_clique_pair_random(N, cross_density, rng);
        const int non_edge_count = int(non_edges(truth).size());
        OracleStrategy strategy(StrategyKind::Hider, rng());

        ReconstructionParams params{n, delta, g.c_const, budget};
        ReconstructionResult r = randomized_reconstruct(truth, params, strategy, rng);
        for (const auto& e : r.transcript.entries)
            max_answer = std::max(max_answer, e.answer.size());
        int reveals = reveal_count(truth, r.transcript);
        mean_reveals += reveals;
        if (reveals > r.queries_used) reveal_bound_ok = false;
        int false_edges = r.graph.edge_count() - truth.edge_count();
        mean_false += false_edges;
        if (false_edges == 0) ++exact_runs;
        if (r.queries_used < non_edge_count) ++runs_under_budget;
    }

    nlohmann::json j;
    j["N"] = N;
    j["delta"] = delta;
    j["trials"] = trials;
    j["query_budget"] = budget;
    j["cross_density"] = cross_density;
    j["max_answer_size"] = max_answer;
    j["reveal_count_le_queries"] = reveal_bound_ok;
    j["mean_reveals"] = mean_reveals / trials;
    j["mean_false_edges"] = mean_false / trials;
    j["exact_reconstructions"] = exact_runs;
    j["runs_with_budget_below_non_edges"] = runs_under_budget;
    j["is_query_lower_bound_bits"] = is_query_lower_bound(n, delta);
    emit(out_path, j.dump() + "\n");
    return 0;
}

int cmd_lb_is_queries(int n, int delta, const std::string& out_path) {
    nlohmann::json j;
    j["n"] = n;
    j["delta"] = delta;
    j["bits"] = is_query_lower_bound(n, delta);
    // The counting lemma assumes delta = Omega(log n); flag evaluations
    // outside that regime.
    j["delta_at_least_log2_n"] = double(delta) >= std::log2(double(n));
    emit(out_path, j.dump() + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph reconstruction via maximal-independent-set oracle queries"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "base random seed")->capture_default_str();
    app.add_option("--format", g.format, "output format for records")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--oracle", g.oracle, "oracle answer strategy")
        ->check(CLI::IsMember({"lex-greedy", "random-greedy", "min-reveal", "hider"}))
        ->capture_default_str();
    app.add_option("--c-const", g.c_const, "constant C in the query-count formula")
        ->capture_default_str();
    app.add_option("--dump-transcript", g.dump_transcript, "write the query transcript JSON here");
    app.add_flag("--exact-adversary", g.exact_adversary,
                 "use the exponential exact adversary (n <= 20)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph");
    std::string family = "random-bounded", cross_list, out_path;
    int n = 0, delta = 0, N = 0, retry_budget = 1000;
    double cross_density = 0.5;
    bool as_json = false;
    gen->add_option("--family", family, "graph family")
        ->check(CLI::IsMember({"random-bounded", "cycle", "clique-pair"}))
        ->capture_default_str();
    gen->add_option("--n", n, "vertex count");
    gen->add_option("--delta", delta, "max-degree bound");
    gen->add_option("--N", N, "clique size for clique-pair");
    gen->add_option("--cross-density", cross_density, "random cross-edge probability");
    gen->add_option("--cross", cross_list, "explicit cross edges, e.g. 0:1,2:0");
    gen->add_option("--retry-budget", retry_budget, "resample budget for random-bounded");
    gen->add_option("--out", out_path, "output path (stdout if omitted)");
    gen->add_flag("--json", as_json, "emit graph JSON instead of edge-list text");

    // reconstruct
    auto* rec = app.add_subcommand("reconstruct", "reconstruct a graph through the oracle");
    std::string graph_path, algorithm = "randomized", scheme_path;
    int query_budget = 0;
    rec->add_option("--graph", graph_path, "ground-truth graph file")->required();
    rec->add_option("--algorithm", algorithm, "randomized or scheme")
        ->check(CLI::IsMember({"randomized", "scheme"}))
        ->capture_default_str();
    rec->add_option("--delta", delta, "max-degree bound (defaults to the true max degree)");
    rec->add_option("--scheme", scheme_path, "query scheme JSON (algorithm=scheme)");
    rec->add_option("--queries", query_budget, "override the query-count formula");
    rec->add_option("--out", out_path, "output path (stdout if omitted)");

    // scheme gen / verify
    auto* scheme = app.add_subcommand("scheme", "query scheme management");
    scheme->require_subcommand(1);
    auto* sgen = scheme->add_subcommand("gen", "draw a random scheme");
    int scheme_size = 0;
    double safety = 1.0;
    bool verified = false;
    sgen->add_option("--n", n, "vertex count")->required();
    sgen->add_option("--delta", delta, "degree bound")->required();
    sgen->add_option("--size", scheme_size, "explicit number of sets");
    sgen->add_option("--safety", safety, "multiplier on the default size bound")
        ->capture_default_str();
    sgen->add_flag("--verified", verified, "retry until the scheme verifies (safety 2)");
    sgen->add_option("--out", out_path, "output path (stdout if omitted)");
    auto* sverify = scheme->add_subcommand("verify", "check the covering condition");
    std::string in_path;
    sverify->add_option("--in", in_path, "scheme JSON path")->required();
    sverify->add_option("--out", out_path, "output path (stdout if omitted)");

    // experiment
    auto* exp = app.add_subcommand("experiment", "parameter-sweep reconstruction trials");
    std::vector<int> n_values, delta_values;
    int trials = 1;
    bool summary = false;
    exp->add_option("--algorithm", algorithm, "randomized or scheme")
        ->check(CLI::IsMember({"randomized", "scheme"}))
        ->capture_default_str();
    exp->add_option("--n", n_values, "vertex counts (repeat or comma-separate)")
        ->delimiter(',');
    exp->add_option("--delta", delta_values, "degree bounds")->delimiter(',');
    exp->add_option("--trials", trials, "trials per cell")->capture_default_str();
    exp->add_option("--scheme", scheme_path, "pre-verified scheme JSON");
    exp->add_option("--graph", graph_path, "fixed ground-truth graph");
    exp->add_option("--queries", query_budget, "truncated query budget");
    exp->add_option("--retry-budget", retry_budget, "resample budget for graph generation")
        ->capture_default_str();
    exp->add_flag("--summary", summary, "emit per-cell summary instead of raw records");
    exp->add_option("--out", out_path, "output path (stdout if omitted)");

    // lb
    auto* lb = app.add_subcommand("lb", "executable lower-bound demonstrations");
    lb->require_subcommand(1);
    auto* lbc = lb->add_subcommand("cycle", "ternary partition refinement on a cycle");
    int lb_queries = 3, lb_trials = 1000;
    lbc->add_option("--n", n, "cycle length")->required();
    lbc->add_option("--queries", lb_queries, "queries per transcript")->capture_default_str();
    lbc->add_option("--trials", lb_trials, "random transcripts")->capture_default_str();
    lbc->add_option("--out", out_path, "output path (stdout if omitted)");
    auto* lbk = lb->add_subcommand("clique-pair", "reveal accounting under the hider");
    int lb_budget = 40;
    lbk->add_option("--N", N, "clique size")->required();
    lbk->add_option("--trials", lb_trials, "runs")->capture_default_str();
    lbk->add_option("--budget", lb_budget, "query budget per run")->capture_default_str();
    lbk->add_option("--cross-density", cross_density, "random cross-edge probability")
        ->capture_default_str();
    lbk->add_option("--out", out_path, "output path (stdout if omitted)");
    auto* lbq = lb->add_subcommand("is-queries", "binary-query counting bound");
    lbq->add_option("--n", n, "vertex count")->required();
    lbq->add_option("--delta", delta, "degree bound")->required();
    lbq->add_option("--out", out_path, "output path (stdout if omitted)");

    try {
        app.parse(argc, argv);

        if (gen->parsed())
            return cmd_gen(g, family, n, delta, N, cross_density, cross_list, retry_budget,
                           out_path, as_json);
        if (rec->parsed())
            return cmd_reconstruct(g, graph_path, algorithm, delta, scheme_path, query_budget,
                                   out_path);
        if (scheme->parsed()) {
            if (sgen->parsed())
                return cmd_scheme_gen(g, n, delta, scheme_size, safety, verified, out_path);
            return cmd_scheme_verify(in_path, out_path);
        }
        if (exp->parsed())
            return cmd_experiment(g, algorithm, n_values, delta_values, trials, scheme_path,
                                  graph_path, query_budget, retry_budget, summary, out_path);
        if (lb->parsed()) {
            if (lbc->parsed()) return cmd_lb_cycle(g, n, lb_queries, lb_trials, out_path);
            if (lbk->parsed())
                return cmd_lb_clique_pair(g, N, lb_trials, lb_budget, cross_density, out_path);
            return cmd_lb_is_queries(n, delta, out_path);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
