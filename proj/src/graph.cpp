#include "z5/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace z5 {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    return matrix_[slot(a, b)] != 0;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex a = 0; a < n_; ++a)
        for (Vertex b : adj_[static_cast<std::size_t>(a)])
            if (a < b) out.emplace_back(a, b);
    std::sort(out.begin(), out.end());
    return out;
}

void Graph::add_edge(Vertex a, Vertex b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) + "-" + std::to_string(b));
    if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
    if (has_edge(a, b))
        throw std::invalid_argument("parallel edge " + std::to_string(a) + "-" + std::to_string(b));
    matrix_[slot(a, b)] = 1;
    matrix_[slot(b, a)] = 1;
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
    ++edge_count_;
}

void Graph::remove_edge(Vertex a, Vertex b) {
    if (!has_edge(a, b))
        throw std::invalid_argument("no edge " + std::to_string(a) + "-" + std::to_string(b));
    matrix_[slot(a, b)] = 0;
    matrix_[slot(b, a)] = 0;
    auto drop = [](std::vector<Vertex>& list, Vertex x) { list.erase(std::find(list.begin(), list.end(), x)); };
    drop(adj_[static_cast<std::size_t>(a)], b);
    drop(adj_[static_cast<std::size_t>(b)], a);
    --edge_count_;
}

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<int> seen(static_cast<std::size_t>(n_), 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : neighbors(comp[i]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::connected() const { return n_ == 0 || components().size() == 1; }

}  // namespace z5
