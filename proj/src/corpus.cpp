#include "gjets/corpus.hpp"

#include "gjets/error.hpp"
#include "gjets/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace gjets {

namespace {

std::vector<std::string> numbered_names(int n, const std::string& prefix = "v") {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        names.push_back(prefix + std::to_string(i));
    return names;
}

} // namespace

Graph path_graph(int n) {
    if (n < 1)
        throw Error("path needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(numbered_names(n), std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw Error("cycle needs at least three vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(numbered_names(n), std::move(edges));
}

Graph star_graph(int n) {
    if (n < 1)
        throw Error("star needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(0, i);
    return Graph(numbered_names(n), std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(numbered_names(n), std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.emplace_back(i, a + j);
    return Graph(numbered_names(a + b, "x"), std::move(edges));
}

std::vector<Graph> all_graphs(int n) {
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            all_edges.emplace_back(i, j);
    if (all_edges.size() > 25)
        throw CapExceeded("too many potential edges to enumerate");
    std::vector<Graph> out;
    std::vector<std::string> names = numbered_names(n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << all_edges.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < all_edges.size(); ++k)
            if (mask >> k & 1)
                edges.push_back(all_edges[k]);
        out.emplace_back(names, std::move(edges));
    }
    return out;
}

std::vector<std::pair<std::string, Graph>> all_connected_graphs(int max_n) {
    std::vector<std::pair<std::string, Graph>> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> all_edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                all_edges.emplace_back(i, j);
        std::vector<std::string> names = numbered_names(n);
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << all_edges.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t k = 0; k < all_edges.size(); ++k)
                if (mask >> k & 1)
                    edges.push_back(all_edges[k]);
            Graph g(names, std::move(edges));
            if (!is_connected(g))
                continue;
            std::ostringstream name;
            name << "n" << n << "#" << mask;
            out.emplace_back(name.str(), std::move(g));
        }
    }
    return out;
}

namespace {

std::pair<std::string, std::string> split_token(const std::string& token) {
    std::size_t colon = token.find(':');
    if (colon == std::string::npos)
        return {token, ""};
    return {token.substr(0, colon), token.substr(colon + 1)};
}

} // namespace

Corpus parse_corpus(const std::string& spec) {
    Corpus corpus;
    corpus.spec = spec;
    std::istringstream in(spec);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty())
            continue;
        auto [kind, arg] = split_token(token);
        if (kind == "path")
            corpus.instances.emplace_back(token, path_graph(std::stoi(arg)));
        else if (kind == "cycle")
            corpus.instances.emplace_back(token, cycle_graph(std::stoi(arg)));
        else if (kind == "star")
            corpus.instances.emplace_back(token, star_graph(std::stoi(arg)));
        else if (kind == "complete")
            corpus.instances.emplace_back(token, complete_graph(std::stoi(arg)));
        else if (kind == "bipartite") {
            // bipartite:A delimits the parts with the next token, e.g. 3,2
            std::string second;
            if (!std::getline(in, second, ','))
                throw ParseError("bipartite corpus token needs two part sizes");
            corpus.instances.emplace_back("bipartite:" + arg + "," + second,
                                          complete_bipartite_graph(std::stoi(arg),
                                                                   std::stoi(second)));
        } else if (kind == "all-connected") {
            for (auto& [name, g] : all_connected_graphs(std::stoi(arg)))
                corpus.instances.emplace_back(name, std::move(g));
        } else if (kind == "file") {
            std::ifstream f(arg);
            if (!f)
                throw Error("cannot open graph file: " + arg);
            std::stringstream buffer;
            buffer << f.rdbuf();
            corpus.instances.emplace_back(arg, parse_graph(buffer.str()));
        } else {
            throw ParseError("unknown corpus token: " + token);
        }
    }
    if (corpus.instances.empty())
        throw ParseError("empty corpus specification");
    return corpus;
}

} // namespace gjets
