#pragma once

#include <optional>
#include <string>
#include <vector>

#include "z5/graph.hpp"
#include "z5/plane_graph.hpp"

namespace z5 {

enum class FamilyKind { Broken, Wheel, Glue, Insert, String };

/// Term of the wheel grammar.
///
///   (broken k)          outer path v1..vk fanned from v1, k >= 3
///   (wheel k)           k-cycle plus a hub, k >= 3
///   (glue L R)          L's edge v1-vk identified with R's edge v1-v2;
///                       the result runs v1, L's v2..vk (= R's v2), R's v3..vk
///   (insert B t<i> j=J) wheel inserted into the face on outer edge
///                       (position i, i+1) of build(B), 1 <= i <= k-2,
///                       whose third vertex must be interior; J new outer vertices
///   (string P1 ... Pm)  wheel string; only build_wheel_string accepts it
struct Descriptor {
    FamilyKind kind = FamilyKind::Broken;
    int size = 3;          // Broken, Wheel
    int triangle = 0;      // Insert
    int subdivisions = 0;  // Insert
    std::vector<Descriptor> parts;

    static Descriptor broken(int k);
    static Descriptor wheel(int k);
    static Descriptor glue(Descriptor left, Descriptor right);
    static Descriptor insert(Descriptor base, int triangle, int subdivisions);
    static Descriptor string(std::vector<Descriptor> parts);

    int vertex_count() const;
    int outer_length() const;

    friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

std::string to_string(const Descriptor& d);
/// Throws std::invalid_argument on malformed text.
Descriptor parse_descriptor(const std::string& text);

/// True iff the term uses neither glue nor broken wheels.
bool describes_multi_wheel(const Descriptor& d);

/// (vk, v1, v2) with v1 the major vertex.
struct PrincipalPath {
    Vertex vk = 0;
    Vertex v1 = 0;
    Vertex v2 = 0;
    friend bool operator==(const PrincipalPath&, const PrincipalPath&) = default;
};

/// Principal path read off the outer cycle: (outer.back(), outer[0], outer[1]).
PrincipalPath principal_path(const PlaneGraph& g);

struct Built {
    PlaneGraph graph;
    PrincipalPath path;
};

/// Canonical numbering: outer cycle v1..vk as 0..k-1, then interior
/// vertices in insertion order. Throws std::invalid_argument on malformed
/// descriptors (bad sizes, insert into a face whose apex is on the outer
/// cycle or which touches v1, string terms).
Built build(const Descriptor& d);

/// Decomposes g with respect to its own principal path (outer.back(),
/// outer[0], outer[1]). The descriptor rebuilds a graph isomorphic to g
/// under a map fixing the outer cycle pointwise.
std::optional<Descriptor> recognize_generalized_multi_wheel(const PlaneGraph& g);
/// Same, with the principal path given explicitly; none if it is not three
/// consecutive outer vertices in clockwise order.
std::optional<Descriptor> recognize_generalized_multi_wheel(const PlaneGraph& g, const PrincipalPath& p);

bool is_generalized_multi_wheel(const PlaneGraph& g);
bool is_multi_wheel(const PlaneGraph& g);

/// Every inner face has a vertex on the outer cycle other than v1.
bool facial_triangle_property(const PlaneGraph& g);

struct WheelString {
    Graph graph;
    std::vector<Vertex> clean;  // part 1's vk, then part m's v2
    std::vector<Vertex> cuts;   // part i's v2 = part i+1's vk, in order
    std::vector<Vertex> majors;
    std::vector<PlaneGraph> parts;
    std::vector<std::vector<Vertex>> embedding;  // part vertex -> string vertex
};

/// Chains the parts: part i's v2 is identified with part i+1's vk.
/// Throws std::invalid_argument on an empty list.
WheelString build_wheel_string(const std::vector<Descriptor>& parts);

/// All generalized multi-wheels with at most max_n vertices, one per class
/// of outer-cycle-preserving isomorphism, ordered by vertex count and then
/// by canonical code.
std::vector<Descriptor> enumerate_family(int max_n);

}  // namespace z5
