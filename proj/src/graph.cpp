#include "strongdom/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <vector>

namespace strongdom {

namespace {

void validate_labels(int n, const std::vector<std::string>& labels) {
    if (static_cast<int>(labels.size()) != n)
        throw Error(Errc::invalid_parameter,
                    "expected " + std::to_string(n) + " labels, got " +
                        std::to_string(labels.size()));
    std::set<std::string> seen;
    for (int v = 0; v < n; ++v) {
        const std::string& l = labels[v];
        if (l.empty())
            throw Error(Errc::invalid_parameter, "empty label for vertex " + std::to_string(v));
        for (char c : l)
            if (std::isspace(static_cast<unsigned char>(c)))
                throw Error(Errc::invalid_parameter, "label contains whitespace: '" + l + "'");
        if (!seen.insert(l).second)
            throw Error(Errc::invalid_parameter, "duplicate label '" + l + "'");
    }
}

} // namespace

Graph Graph::make(int n, const std::vector<Edge>& edge_list, std::vector<std::string> labels) {
    if (n < 0) throw Error(Errc::invalid_parameter, "negative vertex count");

    Graph g;
    g.n_ = n;

    std::vector<Edge> canon;
    canon.reserve(edge_list.size());
    for (const Edge& e : edge_list) {
        auto [a, b] = e;
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw Error(Errc::invalid_vertex, "edge (" + std::to_string(a) + "," +
                                                  std::to_string(b) + ") out of range [0," +
                                                  std::to_string(n) + ")");
        if (a == b)
            throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(a));
        canon.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    g.edges_ = std::move(canon);

    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const Edge& e : g.edges_) {
        g.adj_[static_cast<std::size_t>(e.first)].push_back(e.second);
        g.adj_[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    g.degree_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto& nbr = g.adj_[static_cast<std::size_t>(v)];
        std::sort(nbr.begin(), nbr.end());
        g.degree_[static_cast<std::size_t>(v)] = static_cast<int>(nbr.size());
        g.max_degree_ = std::max(g.max_degree_, g.degree_[static_cast<std::size_t>(v)]);
    }

    if (labels.empty()) {
        labels.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
    }
    validate_labels(n, labels);
    g.labels_ = std::move(labels);
    return g;
}

int Graph::degree(VertexId v) const {
    check_vertex(*this, v);
    return degree_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    check_vertex(*this, a);
    check_vertex(*this, b);
    if (a == b) return false;
    const auto& nbr = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(nbr.begin(), nbr.end(), b);
}

const std::vector<VertexId>& Graph::adjacent(VertexId v) const {
    check_vertex(*this, v);
    return adj_[static_cast<std::size_t>(v)];
}

const std::string& Graph::label(VertexId v) const {
    check_vertex(*this, v);
    return labels_[static_cast<std::size_t>(v)];
}

Graph complete_graph(int n) {
    if (n < 1) throw Error(Errc::invalid_parameter, "complete_graph requires n >= 1");
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return Graph::make(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error(Errc::invalid_parameter, "cycle_graph requires n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::make(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw Error(Errc::invalid_parameter, "path_graph requires n >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::make(n, edges);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw Error(Errc::invalid_parameter, "star_graph requires >= 1 leaf");
    std::vector<Edge> edges;
    std::vector<std::string> labels{"c"};
    for (int l = 1; l <= leaves; ++l) {
        edges.emplace_back(0, l);
        labels.push_back("v" + std::to_string(l));
    }
    return Graph::make(leaves + 1, edges, std::move(labels));
}

VertexSet neighbors(const Graph& g, VertexId v) {
    check_set_capacity(g);
    check_vertex(g, v);
    VertexSet s;
    for (VertexId w : g.adjacent(v)) s.add(w);
    return s;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.adjacent(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

bool is_pendant(const Graph& g, VertexId v) { return g.degree(v) == 1; }

void check_vertex(const Graph& g, VertexId v) {
    if (v < 0 || v >= g.vertex_count())
        throw Error(Errc::invalid_vertex, "vertex " + std::to_string(v) + " out of range [0," +
                                              std::to_string(g.vertex_count()) + ")");
}

void check_set_capacity(const Graph& g) {
    if (g.vertex_count() > VertexSet::max_vertices)
        throw Error(Errc::graph_too_large,
                    "graph has " + std::to_string(g.vertex_count()) +
                        " vertices; set operations support at most " +
                        std::to_string(VertexSet::max_vertices));
}

} // namespace strongdom
