#pragma once

#include <string>
#include <utility>
#include <vector>

#include "strongdom/errors.hpp"
#include "strongdom/vertex_set.hpp"

namespace strongdom {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

// Simple undirected graph with dense vertex ids [0, n), one label per
// vertex, and an eagerly built degree cache. Instances are immutable after
// construction, so they can be shared freely across threads; fusions and
// edits always build new graphs.
class Graph {
public:
    Graph() = default; // the empty graph

    // Validates ids, rejects self-loops, silently deduplicates repeated
    // edges. Labels default to "v<i>"; when given they must be non-empty,
    // whitespace-free and unique.
    static Graph make(int n, const std::vector<Edge>& edge_list,
                      std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int degree(VertexId v) const;
    int max_degree() const { return max_degree_; }

    bool has_edge(VertexId a, VertexId b) const;

    // Sorted open neighborhood.
    const std::vector<VertexId>& adjacent(VertexId v) const;

    // Canonical edge list: a < b, sorted, no duplicates.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::string& label(VertexId v) const;
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_ && labels_ == other.labels_;
    }

private:
    int n_ = 0;
    int max_degree_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<int> degree_;
    std::vector<std::string> labels_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n); // n >= 3
Graph path_graph(int n);
Graph star_graph(int leaves); // center id 0 labeled "c"

// Open neighborhood as a set; requires vertex_count() <= 64.
VertexSet neighbors(const Graph& g, VertexId v);

bool is_connected(const Graph& g);
bool is_pendant(const Graph& g, VertexId v); // degree exactly 1

// Throws InvalidVertex unless 0 <= v < n.
void check_vertex(const Graph& g, VertexId v);

// Throws GraphTooLarge unless the graph fits a VertexSet.
void check_set_capacity(const Graph& g);

} // namespace strongdom
