#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace z5 {

using Vertex = int;

/// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool has_edge(Vertex a, Vertex b) const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    /// Sorted edge list.
    std::vector<Edge> edges() const;

    /// Throws std::invalid_argument on loops, duplicates or out-of-range endpoints.
    void add_edge(Vertex a, Vertex b);
    void remove_edge(Vertex a, Vertex b);

    /// Vertex sets of connected components, each sorted, ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components() const;
    bool connected() const;

private:
    std::size_t slot(Vertex a, Vertex b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
    }

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> matrix_;
};

}  // namespace z5
