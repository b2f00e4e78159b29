#include "z5/disk.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace z5 {

Disk::Disk(std::vector<Vertex> outer, std::vector<Triangle> faces) : outer_(std::move(outer)), faces_(std::move(faces)) {
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        const Triangle& t = faces_[f];
        for (std::size_t i = 0; i < 3; ++i) {
            auto [it, fresh] = dart_face_.emplace(key(t[i], t[(i + 1) % 3]), static_cast<int>(f));
            if (!fresh)
                throw std::invalid_argument("dart " + std::to_string(t[i]) + "->" + std::to_string(t[(i + 1) % 3]) +
                                            " lies on two faces");
        }
    }
}

Disk Disk::of(const PlaneGraph& g) { return Disk(g.outer_cycle(), g.inner_faces()); }

Disk Disk::from_faces(std::vector<Triangle> faces) {
    std::set<std::pair<Vertex, Vertex>> darts;
    for (const Triangle& t : faces)
        for (std::size_t i = 0; i < 3; ++i) darts.emplace(t[i], t[(i + 1) % 3]);
    std::map<Vertex, Vertex> next;
    for (const auto& [a, b] : darts) {
        if (darts.count({b, a})) continue;
        if (!next.emplace(a, b).second) throw std::invalid_argument("faces do not form a disk (pinched boundary)");
    }
    if (next.empty()) throw std::invalid_argument("faces have no boundary");
    std::vector<Vertex> outer;
    Vertex cur = next.begin()->first;
    do {
        outer.push_back(cur);
        if (outer.size() > next.size()) throw std::invalid_argument("faces do not form a disk");
        cur = next.at(cur);
    } while (cur != outer.front());
    if (outer.size() != next.size()) throw std::invalid_argument("faces do not form a disk (several boundaries)");
    return Disk(std::move(outer), std::move(faces));
}

std::vector<Vertex> Disk::vertices() const {
    std::set<Vertex> s(outer_.begin(), outer_.end());
    for (const Triangle& t : faces_) s.insert(t.begin(), t.end());
    return {s.begin(), s.end()};
}

std::vector<Vertex> Disk::interior_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v : vertices())
        if (position(v) < 0) out.push_back(v);
    return out;
}

int Disk::vertex_count() const { return static_cast<int>(vertices().size()); }

int Disk::position(Vertex v) const {
    auto it = std::find(outer_.begin(), outer_.end(), v);
    return it == outer_.end() ? -1 : static_cast<int>(it - outer_.begin());
}

bool Disk::has_edge(Vertex a, Vertex b) const {
    return dart_face_.count(key(a, b)) != 0 || dart_face_.count(key(b, a)) != 0;
}

std::vector<Edge> Disk::edges() const {
    std::set<Edge> s;
    for (const Triangle& t : faces_)
        for (std::size_t i = 0; i < 3; ++i) s.emplace(t[i], t[(i + 1) % 3]);
    return {s.begin(), s.end()};
}

int Disk::face_of_dart(Vertex a, Vertex b) const {
    auto it = dart_face_.find(key(a, b));
    return it == dart_face_.end() ? -1 : it->second;
}

std::vector<Vertex> Disk::neighbors(Vertex v) const {
    std::map<Vertex, Vertex> succ;
    for (const Triangle& t : faces_)
        for (std::size_t i = 0; i < 3; ++i)
            if (t[i] == v) succ.emplace(t[(i + 1) % 3], t[(i + 2) % 3]);
    if (succ.empty()) return {};
    const int p = position(v);
    const std::size_t k = outer_.size();
    Vertex start = succ.begin()->first;
    Vertex stop = -1;
    if (p >= 0) {
        start = outer_[(static_cast<std::size_t>(p) + 1) % k];
        stop = outer_[(static_cast<std::size_t>(p) + k - 1) % k];
    }
    std::vector<Vertex> out{start};
    Vertex cur = start;
    while (true) {
        if (cur == stop) break;
        auto it = succ.find(cur);
        if (it == succ.end()) throw std::logic_error("broken rotation at " + std::to_string(v));
        cur = it->second;
        if (cur == start) break;
        out.push_back(cur);
        if (out.size() > succ.size() + 1) throw std::logic_error("rotation loop at " + std::to_string(v));
    }
    return out;
}

std::vector<Edge> Disk::chords() const {
    std::vector<Edge> out;
    const int k = outer_length();
    for (const Edge& e : edges()) {
        const int a = position(e.u);
        const int b = position(e.v);
        if (a < 0 || b < 0) continue;
        const int d = std::abs(a - b);
        if (d != 1 && d != k - 1) out.push_back(e);
    }
    return out;
}

std::vector<int> Disk::region(std::span<const Vertex> cycle, bool& touches_boundary) const {
    touches_boundary = false;
    const int start = face_of_dart(cycle[0], cycle[1]);
    if (start < 0) {
        touches_boundary = true;
        return {};
    }
    std::set<Edge> on_cycle;
    for (std::size_t i = 0; i < cycle.size(); ++i) on_cycle.emplace(cycle[i], cycle[(i + 1) % cycle.size()]);
    std::vector<char> seen(faces_.size(), 0);
    std::vector<int> out{start};
    seen[static_cast<std::size_t>(start)] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Triangle& t = faces_[static_cast<std::size_t>(out[i])];
        for (std::size_t j = 0; j < 3; ++j) {
            const Vertex a = t[j];
            const Vertex b = t[(j + 1) % 3];
            if (on_cycle.count(Edge(a, b))) continue;
            const int twin = face_of_dart(b, a);
            if (twin < 0) {
                touches_boundary = true;
            } else if (!seen[static_cast<std::size_t>(twin)]) {
                seen[static_cast<std::size_t>(twin)] = 1;
                out.push_back(twin);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Disk Disk::inside(std::span<const Vertex> cycle) const {
    const std::size_t l = cycle.size();
    if (l < 3) throw std::invalid_argument("cycle needs at least three vertices");
    std::set<Vertex> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != l) throw std::invalid_argument("cycle repeats a vertex");
    for (std::size_t i = 0; i < l; ++i)
        if (!has_edge(cycle[i], cycle[(i + 1) % l]))
            throw std::invalid_argument("not a cycle: " + std::to_string(cycle[i]) + " and " +
                                        std::to_string(cycle[(i + 1) % l]) + " are not adjacent");
    std::vector<Vertex> oriented(cycle.begin(), cycle.end());
    bool touches = false;
    auto faces = region(oriented, touches);
    if (touches) {
        std::reverse(oriented.begin() + 1, oriented.end());
        faces = region(oriented, touches);
        if (touches) throw std::logic_error("cycle bounds no region of the disk");
    }
    std::vector<Triangle> sub;
    sub.reserve(faces.size());
    for (int f : faces) sub.push_back(faces_[static_cast<std::size_t>(f)]);
    return Disk(std::move(oriented), std::move(sub));
}

std::vector<Vertex> Disk::strictly_inside(std::span<const Vertex> cycle) const {
    const Disk sub = inside(cycle);
    std::vector<Vertex> out;
    for (Vertex v : sub.vertices())
        if (std::find(cycle.begin(), cycle.end(), v) == cycle.end()) out.push_back(v);
    return out;
}

Disk Disk::rotated_to(Vertex first) const {
    const int p = position(first);
    if (p < 0) throw std::invalid_argument("vertex " + std::to_string(first) + " is not on the outer cycle");
    std::vector<Vertex> outer = outer_;
    std::rotate(outer.begin(), outer.begin() + p, outer.end());
    return Disk(std::move(outer), faces_);
}

PlaneGraph Disk::to_plane_graph(std::vector<Vertex>* labels) const {
    std::vector<Vertex> order = outer_;
    for (Vertex v : interior_vertices()) order.push_back(v);
    std::map<Vertex, Vertex> fresh;
    for (std::size_t i = 0; i < order.size(); ++i) fresh[order[i]] = static_cast<Vertex>(i);
    std::vector<Triangle> faces;
    faces.reserve(faces_.size());
    for (const Triangle& t : faces_) faces.push_back({fresh.at(t[0]), fresh.at(t[1]), fresh.at(t[2])});
    std::vector<Vertex> outer;
    for (Vertex v : outer_) outer.push_back(fresh.at(v));
    if (labels) *labels = order;
    return PlaneGraph::from_faces(static_cast<int>(order.size()), faces, std::move(outer));
}

}  // namespace z5
