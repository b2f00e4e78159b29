#pragma once

#include <vector>

#include "z5/plane_graph.hpp"

namespace z5::test {

inline PlaneGraph triangle() { return PlaneGraph::from_faces(3, std::vector<Triangle>{{0, 1, 2}}, {0, 1, 2}); }

inline PlaneGraph k4() {
    return PlaneGraph::from_faces(4, std::vector<Triangle>{{0, 1, 3}, {1, 2, 3}, {2, 0, 3}}, {0, 1, 2});
}

inline PlaneGraph wheel(int k) {
    std::vector<Triangle> faces;
    std::vector<Vertex> outer;
    for (int i = 0; i < k; ++i) {
        faces.push_back({i, (i + 1) % k, k});
        outer.push_back(i);
    }
    return PlaneGraph::from_faces(k + 1, faces, outer);
}

inline PlaneGraph broken_wheel(int k) {
    std::vector<Triangle> faces;
    std::vector<Vertex> outer;
    for (int i = 0; i < k; ++i) outer.push_back(i);
    for (int i = 1; i + 1 < k; ++i) faces.push_back({0, i, i + 1});
    return PlaneGraph::from_faces(k, faces, outer);
}

/// Outer triangle 0 1 2; 3, 4, 5 sit across the edges 01, 12, 20.
inline PlaneGraph octahedron() {
    return PlaneGraph::from_faces(
        6, std::vector<Triangle>{{0, 1, 3}, {1, 2, 4}, {2, 0, 5}, {1, 4, 3}, {2, 5, 4}, {0, 3, 5}, {3, 4, 5}},
        {0, 1, 2});
}

/// K4 with a further vertex stacked into the face 1 2 3.
inline PlaneGraph stacked_k4() {
    return PlaneGraph::from_faces(
        5, std::vector<Triangle>{{0, 1, 3}, {2, 0, 3}, {1, 2, 4}, {2, 3, 4}, {3, 1, 4}}, {0, 1, 2});
}

/// Icosahedron with one vertex removed: outer 5-cycle a0..a4 (0..4), ring
/// b0..b4 (5..9) with b_i on a_i and a_(i+1), bottom vertex 10.
inline PlaneGraph icosahedron_minus_vertex() {
    std::vector<Triangle> faces;
    auto a = [](int i) { return static_cast<Vertex>(i % 5); };
    auto b = [](int i) { return static_cast<Vertex>(5 + i % 5); };
    for (int i = 0; i < 5; ++i) {
        faces.push_back({a(i), a(i + 1), b(i)});
        faces.push_back({b(i), a(i + 1), b(i + 1)});
        faces.push_back({b(i), b(i + 1), 10});
    }
    return PlaneGraph::from_faces(11, faces, {0, 1, 2, 3, 4});
}

}  // namespace z5::test
