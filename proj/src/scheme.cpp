#include "misrec/scheme.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "misrec/generators.hpp"
#include "misrec/graph_io.hpp"

namespace misrec {

namespace {

void require_admissible(int n, int delta) {
    if (delta < 1) throw std::invalid_argument("scheme: delta must be >= 1");
    if (n < 2 * delta + 2)
        throw std::invalid_argument("scheme: n must be >= 2*delta + 2 (need " +
                                    std::to_string(2 * delta + 2) + " distinct vertices, have " +
                                    std::to_string(n) + ")");
}

// Finds a hitting set of at most `budget` elements for the family, or
// nullopt. Branches on every element of the smallest unhit set; any hitting
// set must contain one of them, so the search is complete.
std::optional<VertexSet> find_hitting_set(const std::vector<VertexSet>& family,
                                          VertexSet chosen, int budget) {
    const VertexSet* smallest = nullptr;
    int smallest_size = 0;
    for (const VertexSet& s : family) {
        if (s.intersects(chosen)) continue;
        int sz = s.size();
        if (sz == 0) return std::nullopt;  // unhittable member
        if (smallest == nullptr || sz < smallest_size) {
            smallest = &s;
            smallest_size = sz;
        }
    }
    if (smallest == nullptr) return chosen;  // everything hit
    if (budget == 0) return std::nullopt;

    for (int x : *smallest) {
        chosen.insert(x);
        if (auto r = find_hitting_set(family, chosen, budget - 1)) return r;
        chosen.erase(x);
    }
    return std::nullopt;
}

}  // namespace

int default_scheme_size(int n, int delta, double safety) {
    require_admissible(n, delta);
    if (safety < 1.0) throw std::invalid_argument("scheme: safety factor must be >= 1");
    const double d1 = double(delta) + 1.0;
    const double bound = safety * 2.0 * std::exp(2.0) * d1 * d1 * d1 * std::log(double(n));
    return int(std::ceil(bound)) + 1;
}

QueryScheme gen_random_scheme(int n, int delta, int size, std::mt19937_64& rng) {
    if (n < 1 || delta < 1)
        throw std::invalid_argument("scheme: n and delta must be >= 1");
    if (size < 1) throw std::invalid_argument("scheme: size must be >= 1");
    QueryScheme s{n, delta, {}};
    s.sets.reserve(size);
    const double p = 1.0 / (double(delta) + 1.0);
    for (int i = 0; i < size; ++i) s.sets.push_back(sample_vertices(n, p, rng));
    return s;
}

std::optional<CoverageCounterexample> verify_scheme(const QueryScheme& s) {
    require_admissible(s.n, s.delta);
    const int n = s.n;
    const int budget = 2 * s.delta;

    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::vector<VertexSet> family;
            for (const VertexSet& q : s.sets) {
                if (!q.contains(u) || !q.contains(v)) continue;
                VertexSet stripped = q;
                stripped.erase(u);
                stripped.erase(v);
                family.push_back(std::move(stripped));
            }
            auto hit = find_hitting_set(family, VertexSet(n), budget);
            if (!hit) continue;  // pair covered

            VertexSet w = *hit;
            for (int pad = 0; pad < n && w.size() < budget; ++pad)
                if (pad != u && pad != v && !w.contains(pad)) w.insert(pad);
            return CoverageCounterexample{u, v, w};
        }
    }
    return std::nullopt;
}

VerifiedScheme gen_verified_scheme(int n, int delta, std::mt19937_64& rng, int max_attempts) {
    require_admissible(n, delta);
    if (max_attempts < 1) throw std::invalid_argument("scheme: max_attempts must be >= 1");
    const int size = default_scheme_size(n, delta, 2.0);

    std::optional<CoverageCounterexample> last;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        QueryScheme s = gen_random_scheme(n, delta, size, rng);
        last = verify_scheme(s);
        if (!last) return {std::move(s), attempt};
    }
    throw std::runtime_error(
        "gen_verified_scheme: no valid scheme in " + std::to_string(max_attempts) +
        " attempts for n=" + std::to_string(n) + ", delta=" + std::to_string(delta) +
        "; last counterexample u=" + std::to_string(last->u) + ", v=" + std::to_string(last->v));
}

std::string scheme_to_json(const QueryScheme& s) {
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& q : s.sets) sets.push_back(q.to_vector());
    return nlohmann::json{{"n", s.n}, {"delta", s.delta}, {"sets", sets}}.dump();
}

QueryScheme scheme_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(FormatError::Kind::Structure,
                          std::string("invalid scheme JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("delta") || !j.contains("sets"))
        throw FormatError(FormatError::Kind::Structure,
                          "scheme JSON needs \"n\", \"delta\" and \"sets\"");
    QueryScheme s;
    s.n = j["n"].get<int>();
    s.delta = j["delta"].get<int>();
    if (s.n < 1 || s.delta < 1)
        throw FormatError(FormatError::Kind::Structure, "scheme JSON: bad n or delta");
    for (const auto& ids : j["sets"]) {
        VertexSet q(s.n);
        for (long v : ids.get<std::vector<long>>()) {
            if (v < 0 || v >= s.n)
                throw FormatError(FormatError::Kind::VertexRange,
                                  "scheme JSON: vertex id out of range");
            q.insert(int(v));
        }
        s.sets.push_back(std::move(q));
    }
    if (s.sets.empty())
        throw FormatError(FormatError::Kind::Structure, "scheme JSON: empty set family");
    return s;
}

}  // namespace misrec
