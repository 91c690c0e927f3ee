#include "gjets/graph_io.hpp"

#include "gjets/error.hpp"
#include "gjets/jets.hpp"

#include <json.hpp>

#include <cctype>
#include <map>
#include <sstream>

namespace gjets {

namespace {

void check_base_name(const std::string& name) {
    if (name.find(kJetsSeparator) != std::string::npos)
        throw ParseError("vertex name contains the reserved separator '.': " + name);
}

struct VertexTable {
    std::vector<std::string> names;
    std::map<std::string, int> index;

    int intern(const std::string& name) {
        auto it = index.find(name);
        if (it != index.end())
            return it->second;
        check_base_name(name);
        int id = static_cast<int>(names.size());
        names.push_back(name);
        index.emplace(name, id);
        return id;
    }
};

} // namespace

Graph graph_from_edge_list(const std::string& text) {
    VertexTable vertices;
    std::vector<std::pair<int, int>> edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a))
            continue; // blank line
        if (a[0] == '#')
            continue;
        if (!(ls >> b)) {
            vertices.intern(a); // isolated vertex
            continue;
        }
        if (ls >> extra)
            throw ParseError("edge list line " + std::to_string(lineno) +
                             " has more than two names");
        int u = vertices.intern(a); // intern in appearance order
        int v = vertices.intern(b);
        edges.emplace_back(u, v);
    }
    return Graph(std::move(vertices.names), std::move(edges));
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid structured graph: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw ParseError("structured graph needs \"vertices\" and \"edges\" fields");
    std::vector<std::string> names;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string())
            throw ParseError("vertex entries must be strings");
        check_base_name(v.get<std::string>());
        names.push_back(v.get<std::string>());
    }
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < names.size(); ++i)
        index.emplace(names[i], static_cast<int>(i));
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError("edge entries must be 2-arrays of vertex names");
        auto a = index.find(e[0].get<std::string>());
        auto b = index.find(e[1].get<std::string>());
        if (a == index.end() || b == index.end())
            throw ParseError("edge references an undeclared vertex");
        edges.emplace_back(a->second, b->second);
    }
    return Graph(std::move(names), std::move(edges));
}

Graph graph_from_dot(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto word = [&]() -> std::string {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    };
    std::string keyword = word();
    if (keyword != "graph")
        throw ParseError("DOT input must start with 'graph'");
    skip_ws();
    if (pos < text.size() && text[pos] != '{')
        word(); // optional graph name
    skip_ws();
    if (pos >= text.size() || text[pos] != '{')
        throw ParseError("expected '{' in DOT input");
    ++pos;
    VertexTable vertices;
    std::vector<std::pair<int, int>> edges;
    for (;;) {
        skip_ws();
        if (pos >= text.size())
            throw ParseError("unterminated DOT graph");
        if (text[pos] == '}') {
            ++pos;
            break;
        }
        if (text[pos] == ';') {
            ++pos;
            continue;
        }
        std::string head = word();
        if (head.empty())
            throw ParseError("expected vertex name in DOT input");
        int prev = vertices.intern(head);
        for (;;) {
            skip_ws();
            if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '-') {
                pos += 2;
                std::string next = word();
                if (next.empty())
                    throw ParseError("dangling '--' in DOT input");
                int cur = vertices.intern(next);
                edges.emplace_back(prev, cur);
                prev = cur;
            } else {
                break;
            }
        }
    }
    return Graph(std::move(vertices.names), std::move(edges));
}

Graph parse_graph(const std::string& text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos >= text.size())
        throw ParseError("empty graph input");
    if (text[pos] == '{')
        return graph_from_json(text);
    if (text.compare(pos, 5, "graph") == 0)
        return graph_from_dot(text);
    return graph_from_edge_list(text);
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json doc;
    doc["vertices"] = g.vertices();
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({g.vertex_name(u), g.vertex_name(v)});
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream os;
    std::vector<char> touched(static_cast<std::size_t>(g.n()), 0);
    for (const auto& [u, v] : g.edges()) {
        touched[static_cast<std::size_t>(u)] = touched[static_cast<std::size_t>(v)] = 1;
        os << g.vertex_name(u) << " " << g.vertex_name(v) << "\n";
    }
    for (int v = 0; v < g.n(); ++v)
        if (!touched[static_cast<std::size_t>(v)])
            os << g.vertex_name(v) << "\n";
    return os.str();
}

} // namespace gjets
