#include "misrec/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace misrec {

namespace {

using Kind = FormatError::Kind;

// Splits into lines, requiring the final character to be '\n'.
std::vector<std::string> split_lines(const std::string& text) {
    if (text.empty() || text.back() != '\n')
        throw FormatError(Kind::Structure, "graph text must end with a newline");
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    return lines;
}

bool parse_two_ints(const std::string& line, long& a, long& b) {
    std::istringstream in(line);
    if (!(in >> a >> b)) return false;
    std::string rest;
    if (in >> rest) return false;  // trailing tokens
    return true;
}

void add_parsed_edge(Graph& g, long u, long v) {
    const long n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw FormatError(Kind::VertexRange,
                          "edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                              " out of range [0, " + std::to_string(n) + ")");
    if (u == v)
        throw FormatError(Kind::SelfLoop, "self-loop " + std::to_string(u) + " rejected");
    if (g.has_edge(int(u), int(v)))
        throw FormatError(Kind::DuplicateEdge, "duplicate edge " + std::to_string(u) + " " +
                                                   std::to_string(v));
    g.add_edge(int(u), int(v));
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    std::size_t pos = 0;
    auto next_content_line = [&]() -> const std::string* {
        while (pos < lines.size()) {
            const std::string& l = lines[pos++];
            if (!l.empty() && l[0] == '#') continue;
            return &l;
        }
        return nullptr;
    };

    const std::string* header = next_content_line();
    if (header == nullptr)
        throw FormatError(Kind::Header, "missing header line \"n m\"");
    long n = 0, m = 0;
    if (!parse_two_ints(*header, n, m) || n < 1 || m < 0)
        throw FormatError(Kind::Header, "malformed header line: \"" + *header + "\"");

    Graph g(int(n));
    for (long e = 0; e < m; ++e) {
        const std::string* line = next_content_line();
        if (line == nullptr)
            throw FormatError(Kind::Structure, "expected " + std::to_string(m) +
                                                   " edge lines, found " + std::to_string(e));
        long u = 0, v = 0;
        if (!parse_two_ints(*line, u, v))
            throw FormatError(Kind::Structure, "malformed edge line: \"" + *line + "\"");
        add_parsed_edge(g, u, v);
    }
    if (const std::string* extra = next_content_line(); extra != nullptr && !extra->empty())
        throw FormatError(Kind::Structure, "unexpected content after edge list: \"" + *extra + "\"");
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (const auto& e : es) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(Kind::Structure, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw FormatError(Kind::Header, "graph JSON must carry an integer \"n\"");
    long n = j["n"].get<long>();
    if (n < 1) throw FormatError(Kind::Header, "graph JSON: n must be >= 1");
    Graph g(int(n));
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw FormatError(Kind::Structure, "graph JSON: edges must be [u, v] pairs");
        add_parsed_edge(g, e[0].get<long>(), e[1].get<long>());
    }
    return g;
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    return j.dump();
}

Graph load_graph_file(const std::string& path) {
    std::string text = read_text_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return graph_from_json(text);
    return parse_graph(text);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace misrec
