#include "z5/plane_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "z5/disk.hpp"

namespace z5 {

namespace {

std::string cycle_text(std::span<const Vertex> cycle) {
    std::string s;
    for (Vertex v : cycle) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    }
    return s;
}

int index_in(const std::vector<Vertex>& list, Vertex x) {
    auto it = std::find(list.begin(), list.end(), x);
    return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

}  // namespace

Triangle normalized(Triangle t) {
    auto it = std::min_element(t.begin(), t.end());
    std::rotate(t.begin(), it, t.end());
    return t;
}

PlaneGraph::PlaneGraph(std::vector<std::vector<Vertex>> rotation, std::vector<Vertex> outer)
    : rotation_(std::move(rotation)), outer_(std::move(outer)) {
    const int n = vertex_count();
    outer_pos_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < outer_.size(); ++i) {
        const Vertex v = outer_[i];
        if (v < 0 || v >= n) throw std::invalid_argument("outer cycle vertex out of range: " + std::to_string(v));
        if (outer_pos_[static_cast<std::size_t>(v)] < 0) outer_pos_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    graph_ = Graph(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : rotation_[static_cast<std::size_t>(v)]) {
            if (u < 0 || u >= n)
                throw std::invalid_argument("rotation of " + std::to_string(v) + " names vertex " + std::to_string(u));
            if (u != v && !graph_.has_edge(u, v)) graph_.add_edge(u, v);
        }
}

PlaneGraph PlaneGraph::from_faces(int n, std::span<const Triangle> faces, std::vector<Vertex> outer) {
    // succ[v] holds (x, y): y follows x clockwise around v.
    std::vector<std::map<Vertex, Vertex>> succ(static_cast<std::size_t>(n));
    auto add = [&](Vertex v, Vertex from, Vertex to) {
        if (v < 0 || v >= n || from < 0 || from >= n || to < 0 || to >= n)
            throw std::invalid_argument("face vertex out of range");
        auto [it, fresh] = succ[static_cast<std::size_t>(v)].emplace(from, to);
        if (!fresh) throw std::invalid_argument("faces overlap around vertex " + std::to_string(v));
    };
    for (const Triangle& t : faces)
        for (int i = 0; i < 3; ++i) add(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>((i + 1) % 3)], t[static_cast<std::size_t>((i + 2) % 3)]);
    const std::size_t k = outer.size();
    for (std::size_t i = 0; i < k; ++i) add(outer[i], outer[(i + k - 1) % k], outer[(i + 1) % k]);

    std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const auto& s = succ[static_cast<std::size_t>(v)];
        if (s.empty()) continue;
        std::vector<Vertex>& rot = rotation[static_cast<std::size_t>(v)];
        const Vertex start = s.begin()->first;
        Vertex cur = start;
        do {
            rot.push_back(cur);
            auto it = s.find(cur);
            if (it == s.end() || rot.size() > s.size())
                throw std::invalid_argument("faces around vertex " + std::to_string(v) + " do not close up");
            cur = it->second;
        } while (cur != start);
        if (rot.size() != s.size())
            throw std::invalid_argument("vertex " + std::to_string(v) + " is a pinch point");
    }
    return PlaneGraph(std::move(rotation), std::move(outer));
}

Vertex PlaneGraph::successor(Vertex v, Vertex u) const {
    const auto& rot = rotation(v);
    const int i = index_in(rot, u);
    if (i < 0) throw std::invalid_argument(std::to_string(u) + " is not a neighbour of " + std::to_string(v));
    return rot[static_cast<std::size_t>(i + 1) % rot.size()];
}

Vertex PlaneGraph::predecessor(Vertex v, Vertex u) const {
    const auto& rot = rotation(v);
    const int i = index_in(rot, u);
    if (i < 0) throw std::invalid_argument(std::to_string(u) + " is not a neighbour of " + std::to_string(v));
    return rot[(static_cast<std::size_t>(i) + rot.size() - 1) % rot.size()];
}

std::vector<std::vector<Vertex>> PlaneGraph::trace_faces() const {
    const int n = vertex_count();
    std::vector<std::vector<char>> used(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) used[static_cast<std::size_t>(v)].assign(rotation(v).size(), 0);
    std::vector<std::vector<Vertex>> faces;
    for (Vertex s = 0; s < n; ++s) {
        for (std::size_t i = 0; i < rotation(s).size(); ++i) {
            if (used[static_cast<std::size_t>(s)][i]) continue;
            std::vector<Vertex> face;
            Vertex a = s;
            Vertex b = rotation(s)[i];
            std::size_t ai = i;
            while (!used[static_cast<std::size_t>(a)][ai]) {
                used[static_cast<std::size_t>(a)][ai] = 1;
                face.push_back(a);
                const Vertex c = predecessor(b, a);
                ai = static_cast<std::size_t>(index_in(rotation(b), c));
                a = b;
                b = c;
            }
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

std::vector<Triangle> PlaneGraph::inner_faces() const {
    std::vector<Triangle> out;
    const std::size_t k = outer_.size();
    for (const auto& f : trace_faces()) {
        // The outer face is the walk holding dart outer[1] -> outer[0].
        bool is_outer = false;
        if (k >= 2 && f.size() == k) {
            for (std::size_t i = 0; i < f.size(); ++i)
                if (f[i] == outer_[1] && f[(i + 1) % f.size()] == outer_[0]) is_outer = true;
        }
        if (is_outer) continue;
        if (f.size() != 3) throw std::invalid_argument("inner face of length " + std::to_string(f.size()));
        out.push_back(normalized({f[0], f[1], f[2]}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> PlaneGraph::interior_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (!on_outer(v)) out.push_back(v);
    return out;
}

ValidationReport validate(const PlaneGraph& g) {
    ValidationReport report;
    auto problem = [&](std::string s) { report.problems.push_back(std::move(s)); };
    const int n = g.vertex_count();
    if (n <= 2) {
        problem("fewer than 3 vertices");
        return report;
    }
    bool rotation_ok = true;
    for (Vertex v = 0; v < n; ++v) {
        std::set<Vertex> seen;
        for (Vertex u : g.rotation(v)) {
            if (u == v) {
                problem("loop at vertex " + std::to_string(v));
                rotation_ok = false;
            } else if (!seen.insert(u).second) {
                problem("repeated neighbour " + std::to_string(u) + " in rotation of " + std::to_string(v));
                rotation_ok = false;
            } else if (index_in(g.rotation(u), v) < 0) {
                problem("rotation of " + std::to_string(v) + " lists " + std::to_string(u) + " but not conversely");
                rotation_ok = false;
            }
        }
    }
    if (!rotation_ok) return report;
    if (!g.graph().connected()) problem("graph is not connected");

    const auto faces = g.trace_faces();
    const long euler = static_cast<long>(g.graph().edge_count()) - n + 2;
    if (static_cast<long>(faces.size()) != euler)
        problem("rotation is not planar: " + std::to_string(faces.size()) + " faces, Euler count " + std::to_string(euler));

    const auto& outer = g.outer_cycle();
    const std::size_t k = outer.size();
    bool outer_ok = true;
    if (k < 3) {
        problem("outer cycle has fewer than 3 vertices");
        outer_ok = false;
    } else {
        std::set<Vertex> distinct(outer.begin(), outer.end());
        if (distinct.size() != k) {
            problem("outer cycle repeats a vertex");
            outer_ok = false;
        }
        for (std::size_t i = 0; i < k; ++i)
            if (!g.graph().has_edge(outer[i], outer[(i + 1) % k])) {
                problem("outer cycle vertices " + std::to_string(outer[i]) + " and " + std::to_string(outer[(i + 1) % k]) +
                        " are not adjacent");
                outer_ok = false;
            }
    }
    std::ptrdiff_t outer_face = -1;
    if (outer_ok) {
        for (std::size_t f = 0; f < faces.size() && outer_face < 0; ++f) {
            const auto& w = faces[f];
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i] == outer[1] && w[(i + 1) % w.size()] == outer[0]) outer_face = static_cast<std::ptrdiff_t>(f);
        }
        bool bounds = outer_face >= 0 && faces[static_cast<std::size_t>(outer_face)].size() == k;
        if (bounds) {
            const auto& w = faces[static_cast<std::size_t>(outer_face)];
            const auto start = static_cast<std::size_t>(std::find(w.begin(), w.end(), outer[0]) - w.begin());
            for (std::size_t i = 0; i < k; ++i)
                if (w[(start + i) % k] != outer[(k - i) % k]) bounds = false;
        }
        if (!bounds) {
            problem("outer cycle does not bound a face with the interior on its right");
            outer_face = -1;
        }
    }
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (static_cast<std::ptrdiff_t>(f) == outer_face) continue;
        if (faces[f].size() != 3)
            problem("inner face of length " + std::to_string(faces[f].size()) + ": " + cycle_text(faces[f]));
    }
    return report;
}

std::vector<Edge> chords(const PlaneGraph& g) {
    std::vector<Edge> out;
    const int k = g.outer_length();
    for (const Edge& e : g.graph().edges()) {
        const int a = g.outer_position(e.u);
        const int b = g.outer_position(e.v);
        if (a < 0 || b < 0) continue;
        const int d = std::abs(a - b);
        if (d != 1 && d != k - 1) out.push_back(e);
    }
    return out;
}

std::vector<Vertex> vertices_inside(const PlaneGraph& g, std::span<const Vertex> cycle) {
    return Disk::of(g).strictly_inside(cycle);
}

std::vector<std::vector<Vertex>> separating_cycles(const PlaneGraph& g, int length) {
    if (length != 3 && length != 4) throw std::invalid_argument("separating cycles: length must be 3 or 4");
    const Disk disk = Disk::of(g);
    const Graph& gr = g.graph();
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> out;
    auto consider = [&](std::vector<Vertex> cycle) {
        const auto inside = disk.strictly_inside(cycle);
        const int outside = n - length - static_cast<int>(inside.size());
        if (!inside.empty() && outside > 0) out.push_back(std::move(cycle));
    };
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b : gr.neighbors(a)) {
            if (b <= a) continue;
            if (length == 3) {
                for (Vertex c : gr.neighbors(b))
                    if (c > b && gr.has_edge(c, a)) consider({a, b, c});
            } else {
                for (Vertex c : gr.neighbors(b)) {
                    if (c <= a || c == b) continue;
                    for (Vertex d : gr.neighbors(c))
                        if (d > b && d != c && gr.has_edge(d, a)) consider({a, b, c, d});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subgraph disk_inside(const PlaneGraph& g, std::span<const Vertex> cycle) {
    const Disk sub = Disk::of(g).inside(cycle);
    Subgraph out;
    out.graph = sub.to_plane_graph(&out.to_parent);
    out.from_parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        out.from_parent[static_cast<std::size_t>(out.to_parent[i])] = static_cast<Vertex>(i);
    return out;
}

SplitResult split_along(const PlaneGraph& g, std::span<const Vertex> path) {
    const std::size_t m = path.size();
    if (m < 2) throw std::invalid_argument("split path needs at least two vertices");
    const Vertex a = path.front();
    const Vertex b = path.back();
    const int pa = g.outer_position(a);
    const int pb = g.outer_position(b);
    if (pa < 0 || pb < 0) throw std::invalid_argument("split path endpoints must lie on the outer cycle");
    if (a == b) throw std::invalid_argument("split path endpoints coincide");
    std::set<Vertex> distinct(path.begin(), path.end());
    if (distinct.size() != m) throw std::invalid_argument("split path repeats a vertex");
    for (std::size_t i = 1; i + 1 < m; ++i)
        if (g.on_outer(path[i])) throw std::invalid_argument("split path is not internally disjoint from the outer cycle");
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (!g.graph().has_edge(path[i], path[i + 1])) throw std::invalid_argument("split path uses a non-edge");
    const int k = g.outer_length();
    if (m == 2) {
        const int d = std::abs(pa - pb);
        if (d == 1 || d == k - 1) throw std::invalid_argument("split edge is an outer edge, not a chord");
    }
    const auto& outer = g.outer_cycle();
    // cycle_a: path, then the outer arc from b back to a.
    std::vector<Vertex> cycle_a(path.begin(), path.end());
    for (int p = (pb + 1) % k; p != pa; p = (p + 1) % k) cycle_a.push_back(outer[static_cast<std::size_t>(p)]);
    // cycle_b: outer arc from a to b, then the path backwards.
    std::vector<Vertex> cycle_b{a};
    for (int p = (pa + 1) % k; p != pb; p = (p + 1) % k) cycle_b.push_back(outer[static_cast<std::size_t>(p)]);
    for (std::size_t i = m - 1; i >= 1; --i) cycle_b.push_back(path[i]);

    SplitResult result;
    result.part_one = disk_inside(g, cycle_a);
    result.part_two = disk_inside(g, cycle_b);
    const Disk one = Disk::of(result.part_one.graph);
    const Vertex a1 = result.part_one.from_parent[static_cast<std::size_t>(path[0])];
    const Vertex b1 = result.part_one.from_parent[static_cast<std::size_t>(path[1])];
    if (one.face_of_dart(a1, b1) < 0) std::swap(result.part_one, result.part_two);
    result.shared_boundary.assign(path.begin(), path.end());
    return result;
}

std::vector<std::vector<Vertex>> blocks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> stack;
    std::vector<std::vector<Vertex>> out;
    int timer = 0;
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
        for (Vertex w : g.neighbors(v)) {
            if (w == parent) continue;
            if (disc[static_cast<std::size_t>(w)] < 0) {
                stack.emplace_back(v, w);
                dfs(w, v);
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)]) {
                    std::set<Vertex> block;
                    const Edge stop(v, w);
                    while (true) {
                        const Edge e = stack.back();
                        stack.pop_back();
                        block.insert(e.u);
                        block.insert(e.v);
                        if (e == stop) break;
                    }
                    out.emplace_back(block.begin(), block.end());
                }
            } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(v)]) {
                stack.emplace_back(v, w);
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
            }
        }
    };
    for (Vertex v = 0; v < n; ++v) {
        if (disc[static_cast<std::size_t>(v)] >= 0) continue;
        if (g.degree(v) == 0) {
            disc[static_cast<std::size_t>(v)] = timer++;
            out.push_back({v});
            continue;
        }
        dfs(v, -1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> canonical_code(const PlaneGraph& g) {
    const int n = g.vertex_count();
    const auto& outer = g.outer_cycle();
    std::vector<int> code{n, g.outer_length()};
    if (n == 0 || outer.size() < 2) return code;
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> order{outer[0]};
    std::vector<Vertex> ref{outer[1]};
    label[static_cast<std::size_t>(outer[0])] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex x = order[i];
        const auto& rot = g.rotation(x);
        const int start = index_in(rot, ref[i]);
        code.push_back(static_cast<int>(rot.size()));
        for (std::size_t j = 0; j < rot.size(); ++j) {
            const Vertex y = rot[(static_cast<std::size_t>(start) + j) % rot.size()];
            if (label[static_cast<std::size_t>(y)] < 0) {
                label[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
                order.push_back(y);
                ref.push_back(x);
            }
            code.push_back(label[static_cast<std::size_t>(y)]);
        }
    }
    if (static_cast<int>(order.size()) != n) code.push_back(-1);  // disconnected: not canonical beyond this point
    for (Vertex v : outer) code.push_back(label[static_cast<std::size_t>(v)]);
    return code;
}

bool embedded_isomorphic(const PlaneGraph& a, const PlaneGraph& b) { return canonical_code(a) == canonical_code(b); }

}  // namespace z5
