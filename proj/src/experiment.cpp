#include "misrec/experiment.hpp"

#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "misrec/generators.hpp"
#include "misrec/reconstruct.hpp"

namespace misrec {

const char* algorithm_name(Algorithm a) {
    return a == Algorithm::Randomized ? "randomized" : "scheme";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "randomized") return Algorithm::Randomized;
    if (name == "scheme") return Algorithm::Scheme;
    throw std::invalid_argument("unknown algorithm: " + name);
}

namespace {

void validate(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("experiment config: trials must be >= 1");
    if (cfg.c_const <= 0.0)
        throw std::invalid_argument("experiment config: c_const must be positive");
    const bool cells_pinned = cfg.scheme.has_value() || cfg.fixed_graph.has_value();
    if (!cells_pinned) {
        if (cfg.n_values.empty())
            throw std::invalid_argument("experiment config: n_values must be non-empty");
        if (cfg.delta_values.empty())
            throw std::invalid_argument("experiment config: delta_values must be non-empty");
        for (int n : cfg.n_values)
            if (n < 2) throw std::invalid_argument("experiment config: all n must be >= 2");
        for (int d : cfg.delta_values)
            if (d < 1) throw std::invalid_argument("experiment config: all delta must be >= 1");
    }
    if (cfg.algorithm == Algorithm::Scheme && cfg.fixed_graph && cfg.scheme &&
        cfg.fixed_graph->vertex_count() != cfg.scheme->n)
        throw std::invalid_argument("experiment config: scheme and fixed graph disagree on n");
}

struct TrialOutcome {
    int queries = 0;
    int false_edges = 0;
    double wall_ms = 0.0;
};

TrialOutcome run_trial(const ExperimentConfig& cfg, int n, int delta,
                       const QueryScheme* scheme, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Graph truth = cfg.fixed_graph ? *cfg.fixed_graph
                                  : gen_random_bounded(n, delta, rng, cfg.gen_retry_budget);
    OracleStrategy strategy(cfg.oracle, rng());

    auto start = std::chrono::steady_clock::now();
    ReconstructionResult result = [&] {
        if (cfg.algorithm == Algorithm::Scheme) return scheme_reconstruct(truth, *scheme, strategy);
        ReconstructionParams params{n, delta, cfg.c_const, cfg.query_budget};
        return randomized_reconstruct(truth, params, strategy, rng);
    }();
    auto stop = std::chrono::steady_clock::now();

    int missing = 0, extra = 0;
    for (const auto& e : truth.edges())
        if (!result.graph.has_edge(e.u, e.v)) ++missing;
    extra = result.graph.edge_count() - (truth.edge_count() - missing);
    if (missing != 0)
        throw std::logic_error("experiment: inferred graph dropped a true edge; "
                               "one-sided error invariant violated");

    return {result.queries_used, extra,
            std::chrono::duration<double, std::milli>(stop - start).count()};
}

}  // namespace

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);

    // Cell list: a scheme or a fixed graph pins (n, delta); otherwise the
    // cross product of the configured values.
    std::vector<std::pair<int, int>> cells;
    if (cfg.scheme)
        cells.emplace_back(cfg.scheme->n, cfg.scheme->delta);
    else if (cfg.fixed_graph)
        cells.emplace_back(cfg.fixed_graph->vertex_count(),
                           cfg.delta_values.empty() ? max_degree(*cfg.fixed_graph)
                                                    : cfg.delta_values.front());
    else
        for (int n : cfg.n_values)
            for (int d : cfg.delta_values) cells.emplace_back(n, d);

    std::vector<ExperimentRecord> records;
    records.reserve(cells.size() * cfg.trials);
    for (auto [n, delta] : cells) {
        if (delta > n - 1)
            throw std::invalid_argument("experiment config: delta " + std::to_string(delta) +
                                        " exceeds n-1 for n " + std::to_string(n));
        const QueryScheme* scheme = cfg.scheme ? &*cfg.scheme : nullptr;
        for (int trial = 0; trial < cfg.trials; ++trial) {
            std::uint64_t seed = cfg.base_seed + std::uint64_t(trial);
            TrialOutcome out = run_trial(cfg, n, delta, scheme, seed);
            records.push_back({n, delta, algorithm_name(cfg.algorithm),
                               strategy_name(cfg.oracle), cfg.c_const, seed, out.queries,
                               out.false_edges == 0, out.false_edges, out.wall_ms});
        }
    }
    return records;
}

std::vector<CellSummary> summarize(const std::vector<ExperimentRecord>& records) {
    if (records.empty()) throw std::invalid_argument("summarize: no records");

    std::vector<CellSummary> cells;
    for (const auto& r : records) {
        CellSummary* cell = nullptr;
        for (auto& c : cells)
            if (c.n == r.n && c.delta == r.delta && c.algorithm == r.algorithm &&
                c.oracle == r.oracle)
                cell = &c;
        if (cell == nullptr) {
            cells.push_back({r.n, r.delta, r.algorithm, r.oracle, 0, 0.0, 0.0, 0, 0.0});
            cell = &cells.back();
        }
        ++cell->trials;
        cell->success_rate += r.success ? 1.0 : 0.0;
        cell->mean_queries += r.queries;
        cell->max_queries = std::max(cell->max_queries, r.queries);
        cell->mean_wall_ms += r.wall_ms;
    }
    for (auto& c : cells) {
        c.success_rate /= c.trials;
        c.mean_queries /= c.trials;
        c.mean_wall_ms /= c.trials;
    }
    return cells;
}

namespace {

std::string format_double(double x) {
    std::ostringstream s;
    s << x;
    return s.str();
}

}  // namespace

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    out << "n,delta,algorithm,oracle,c_const,seed,queries,success,false_edges,wall_ms\n";
    for (const auto& r : records)
        out << r.n << ',' << r.delta << ',' << r.algorithm << ',' << r.oracle << ','
            << format_double(r.c_const) << ',' << r.seed << ',' << r.queries << ','
            << (r.success ? 1 : 0) << ',' << r.false_edges << ',' << format_double(r.wall_ms)
            << '\n';
}

void write_records_json(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records)
        arr.push_back({{"n", r.n},
                       {"delta", r.delta},
                       {"algorithm", r.algorithm},
                       {"oracle", r.oracle},
                       {"c_const", r.c_const},
                       {"seed", r.seed},
                       {"queries", r.queries},
                       {"success", r.success},
                       {"false_edges", r.false_edges},
                       {"wall_ms", r.wall_ms}});
    out << arr.dump() << '\n';
}

void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& cells) {
    out << "n,delta,algorithm,oracle,trials,success_rate,mean_queries,max_queries,mean_wall_ms\n";
    for (const auto& c : cells)
        out << c.n << ',' << c.delta << ',' << c.algorithm << ',' << c.oracle << ','
            << c.trials << ',' << format_double(c.success_rate) << ','
            << format_double(c.mean_queries) << ',' << c.max_queries << ','
            << format_double(c.mean_wall_ms) << '\n';
}

void write_summary_json(std::ostream& out, const std::vector<CellSummary>& cells) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cells)
        arr.push_back({{"n", c.n},
                       {"delta", c.delta},
                       {"algorithm", c.algorithm},
                       {"oracle", c.oracle},
                       {"trials", c.trials},
                       {"success_rate", c.success_rate},
                       {"mean_queries", c.mean_queries},
                       {"max_queries", c.max_queries},
                       {"mean_wall_ms", c.mean_wall_ms}});
    out << arr.dump() << '\n';
}

}  // namespace misrec
