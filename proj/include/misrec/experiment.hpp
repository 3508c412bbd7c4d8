#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "misrec/graph.hpp"
#include "misrec/oracle.hpp"
#include "misrec/scheme.hpp"

namespace misrec {

enum class Algorithm { Randomized, Scheme };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

struct ExperimentConfig {
    Algorithm algorithm = Algorithm::Randomized;
    std::vector<int> n_values;
    std::vector<int> delta_values;
    double c_const = 3.0;
    StrategyKind oracle = StrategyKind::LexGreedy;
    int trials = 1;
    std::uint64_t base_seed = 0;
    int gen_retry_budget = 1000;
    std::optional<int> query_budget;       // truncated runs
    std::optional<QueryScheme> scheme;     // pre-verified scheme (Algorithm::Scheme)
    std::optional<Graph> fixed_graph;      // fixed ground truth instead of random
};

struct ExperimentRecord {
    int n = 0;
    int delta = 0;
    std::string algorithm;
    std::string oracle;
    double c_const = 0.0;
    std::uint64_t seed = 0;
    int queries = 0;
    bool success = false;
    int false_edges = 0;
    double wall_ms = 0.0;
};

// One record per (cell, trial), in cell-major, trial-minor order. Trial
// seeds are base_seed + trial index. Ground truth per trial comes from
// gen_random_bounded unless fixed_graph or a scheme pins n and delta.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg);

struct CellSummary {
    int n = 0;
    int delta = 0;
    std::string algorithm;
    std::string oracle;
    int trials = 0;
    double success_rate = 0.0;
    double mean_queries = 0.0;
    int max_queries = 0;
    double mean_wall_ms = 0.0;
};

// Aggregates keyed by (n, delta, algorithm, oracle), in first-seen order.
std::vector<CellSummary> summarize(const std::vector<ExperimentRecord>& records);

// CSV with the fixed column order
// n,delta,algorithm,oracle,c_const,seed,queries,success,false_edges,wall_ms.
// Byte-stable given a config, except for the wall_ms column.
void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
void write_records_json(std::ostream& out, const std::vector<ExperimentRecord>& records);
void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& cells);
void write_summary_json(std::ostream& out, const std::vector<CellSummary>& cells);

}  // namespace misrec
