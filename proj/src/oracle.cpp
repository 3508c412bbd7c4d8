#include "misrec/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "misrec/graph_io.hpp"
#include "misrec/rng.hpp"

namespace misrec {

const char* strategy_name(StrategyKind k) {
    switch (k) {
        case StrategyKind::LexGreedy: return "lex-greedy";
        case StrategyKind::RandomGreedy: return "random-greedy";
        case StrategyKind::MinReveal: return "min-reveal";
        case StrategyKind::Hider: return "hider";
        case StrategyKind::ExactAdversary: return "exact-adversary";
    }
    return "?";
}

StrategyKind strategy_from_name(const std::string& name) {
    if (name == "lex-greedy") return StrategyKind::LexGreedy;
    if (name == "random-greedy") return StrategyKind::RandomGreedy;
    if (name == "min-reveal") return StrategyKind::MinReveal;
    if (name == "hider") return StrategyKind::Hider;
    if (name == "exact-adversary") return StrategyKind::ExactAdversary;
    throw std::invalid_argument("unknown oracle strategy: " + name);
}

OracleStrategy::OracleStrategy(StrategyKind kind, std::uint64_t seed)
    : kind_(kind), rng_(seed), revealed_(0) {}

void OracleStrategy::reset(std::uint64_t seed) {
    rng_.seed(seed);
    revealed_ = Graph(0);
}

VertexSet OracleStrategy::answer(const Graph& g, const VertexSet& q) {
    if (q.universe() != g.vertex_count())
        throw std::invalid_argument("OracleStrategy::answer: query universe mismatch");
    if (revealed_.vertex_count() != g.vertex_count()) revealed_ = Graph(g.vertex_count());

    VertexSet result;
    switch (kind_) {
        case StrategyKind::LexGreedy: result = answer_lex(g, q); break;
        case StrategyKind::RandomGreedy: result = answer_random(g, q); break;
        case StrategyKind::MinReveal: result = answer_min_reveal(g, q); break;
        case StrategyKind::Hider: result = answer_hider(g, q); break;
        case StrategyKind::ExactAdversary: result = answer_exact(g, q); break;
    }
    record_answer(result);
    return result;
}

void OracleStrategy::record_answer(const VertexSet& answer) {
    std::vector<int> ids = answer.to_vector();
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
            if (!revealed_.has_edge(ids[a], ids[b])) revealed_.add_edge(ids[a], ids[b]);
}

VertexSet OracleStrategy::answer_lex(const Graph& g, const VertexSet& q) const {
    VertexSet picked(g.vertex_count());
    for (int v : q)
        if (!g.neighbors(v).intersects(picked)) picked.insert(v);
    return picked;
}

VertexSet OracleStrategy::answer_random(const Graph& g, const VertexSet& q) {
    std::vector<int> order = q.to_vector();
    shuffle(order, rng_);
    VertexSet picked(g.vertex_count());
    for (int v : order)
        if (!g.neighbors(v).intersects(picked)) picked.insert(v);
    return picked;
}

// Builds the answer one vertex at a time. Each step takes the candidate that
// co-reports the fewest pairs not yet revealed in this run; ties prefer
// higher degree inside G[q] (kills more candidates), then lower id.
VertexSet OracleStrategy::answer_min_reveal(const Graph& g, const VertexSet& q) const {
    const int n = g.vertex_count();
    std::vector<int> induced_degree(n, 0);
    for (int v : q) induced_degree[v] = (g.neighbors(v) & q).size();

    VertexSet picked(n);
    std::vector<int> picked_list;
    VertexSet candidates = q;
    while (!candidates.empty()) {
        int best = -1;
        long best_new = 0;
        for (int v : candidates) {
            long fresh = 0;
            for (int w : picked_list)
                if (!revealed_.has_edge(v, w)) ++fresh;
            if (best < 0 || fresh < best_new ||
                (fresh == best_new && induced_degree[v] > induced_degree[best]))
                best = v, best_new = fresh;
        }
        picked.insert(best);
        picked_list.push_back(best);
        candidates.erase(best);
        candidates -= g.neighbors(best);
    }
    return picked;
}

// Prefers the least informative answers available on clique-pair graphs:
// a dominating singleton, then a previously revealed pair, then MinReveal.
VertexSet OracleStrategy::answer_hider(const Graph& g, const VertexSet& q) const {
    const int n = g.vertex_count();
    for (int a : q) {
        VertexSet rest = q;
        rest.erase(a);
        if (rest.is_subset_of(g.neighbors(a))) {
            VertexSet single(n);
            single.insert(a);
            return single;
        }
    }
    for (const auto& e : revealed_.edges()) {
        if (!q.contains(e.u) || !q.contains(e.v)) continue;
        if (g.has_edge(e.u, e.v)) continue;
        VertexSet pair(n);
        pair.insert(e.u);
        pair.insert(e.v);
        if (is_maximal_independent(g, q, pair)) return pair;
    }
    return answer_min_reveal(g, q);
}

VertexSet OracleStrategy::answer_exact(const Graph& g, const VertexSet& q) const {
    std::vector<VertexSet> all = enumerate_maximal_independent_sets(g, q);

    long best_new = -1;
    std::vector<int> best_ids;
    VertexSet best;
    for (const auto& cand : all) {
        std::vector<int> ids = cand.to_vector();
        long fresh = 0;
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b)
                if (!revealed_.has_edge(ids[a], ids[b])) ++fresh;
        if (best_new < 0 || fresh < best_new || (fresh == best_new && ids < best_ids)) {
            best_new = fresh;
            best_ids = std::move(ids);
            best = cand;
        }
    }
    return best;
}

bool is_maximal_independent(const Graph& g, const VertexSet& q, const VertexSet& i) {
    if (i.universe() != g.vertex_count() || q.universe() != g.vertex_count()) return false;
    if (!i.is_subset_of(q)) return false;
    for (int v : i)
        if (g.neighbors(v).intersects(i)) return false;
    VertexSet uncovered = q - i;
    for (int v : uncovered)
        if (!g.neighbors(v).intersects(i)) return false;
    return true;
}

bool verify_transcript(const Graph& g, const Transcript& t) {
    for (const auto& entry : t.entries)
        if (!is_maximal_independent(g, entry.query, entry.answer)) return false;
    return true;
}

namespace {

void enumerate_rec(const Graph& g, VertexSet& current, VertexSet candidates,
                   VertexSet excluded, std::vector<VertexSet>& out) {
    if (candidates.empty() && excluded.empty()) {
        out.push_back(current);
        return;
    }
    // Branch over candidates; excluded tracks vertices that would only
    // regenerate already-emitted sets (standard Bron-Kerbosch, independent
    // set flavor: extension candidates are non-neighbors).
    std::vector<int> branch = candidates.to_vector();
    for (int v : branch) {
        VertexSet non_nbrs = g.neighbors(v).complement();
        non_nbrs.erase(v);
        current.insert(v);
        enumerate_rec(g, current, candidates & non_nbrs, excluded & non_nbrs, out);
        current.erase(v);
        candidates.erase(v);
        excluded.insert(v);
    }
}

}  // namespace

std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g, const VertexSet& q) {
    std::vector<VertexSet> out;
    VertexSet current(g.vertex_count());
    enumerate_rec(g, current, q, VertexSet(g.vertex_count()), out);
    return out;  // for q = {} this is exactly {{}}
}

std::string transcript_to_json(const Transcript& t) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : t.entries) {
        entries.push_back({{"query", e.query.to_vector()}, {"answer", e.answer.to_vector()}});
    }
    return nlohmann::json{{"entries", entries}}.dump();
}

Transcript transcript_from_json(const std::string& text, int n) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(FormatError::Kind::Structure,
                          std::string("invalid transcript JSON: ") + e.what());
    }
    Transcript t;
    for (const auto& entry : j.value("entries", nlohmann::json::array())) {
        TranscriptEntry te{VertexSet(n), VertexSet(n)};
        for (long v : entry.value("query", std::vector<long>{})) {
            if (v < 0 || v >= n)
                throw FormatError(FormatError::Kind::VertexRange,
                                  "transcript vertex id out of range");
            te.query.insert(int(v));
        }
        for (long v : entry.value("answer", std::vector<long>{})) {
            if (v < 0 || v >= n)
                throw FormatError(FormatError::Kind::VertexRange,
                                  "transcript vertex id out of range");
            te.answer.insert(int(v));
        }
        if (!te.answer.is_subset_of(te.query))
            throw FormatError(FormatError::Kind::Structure,
                              "transcript answer not contained in its query");
        t.entries.push_back(std::move(te));
    }
    return t;
}

}  // namespace misrec
