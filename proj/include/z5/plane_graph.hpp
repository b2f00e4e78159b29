#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "z5/graph.hpp"

namespace z5 {

/// Inner face of a near-triangulation, listed clockwise.
using Triangle = std::array<Vertex, 3>;

/// Rotate a triangle so its smallest vertex comes first (orientation kept).
Triangle normalized(Triangle t);

/// A plane near-triangulation given by an explicit embedding.
///
/// `rotation(v)` lists the neighbours of v clockwise. `outer_cycle()` is
/// v1 v2 ... vk, oriented so that the interior lies to the right of every
/// dart v_i -> v_{i+1}; v1 is the major vertex and (vk, v1, v2) the
/// principal path.
///
/// Faces are traced with the face on the right of each dart: the dart after
/// u->v is v->w where w precedes u in the clockwise rotation at v. The outer
/// face therefore shows up as the reversed outer cycle.
///
/// Construction never validates; call validate() for a full report.
class PlaneGraph {
public:
    PlaneGraph() = default;
    PlaneGraph(std::vector<std::vector<Vertex>> rotation, std::vector<Vertex> outer);

    /// Builds the rotation system from clockwise inner triangles and the outer
    /// cycle. Throws std::invalid_argument if they do not describe a disk.
    static PlaneGraph from_faces(int n, std::span<const Triangle> faces, std::vector<Vertex> outer);

    int vertex_count() const { return static_cast<int>(rotation_.size()); }
    const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[static_cast<std::size_t>(v)]; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }
    const std::vector<Vertex>& outer_cycle() const { return outer_; }
    int outer_length() const { return static_cast<int>(outer_.size()); }

    /// Underlying simple graph. Loops and repeated neighbours in a malformed
    /// rotation are skipped here; validate() reports them.
    const Graph& graph() const { return graph_; }

    /// Position of v on the outer cycle, or -1 for interior vertices.
    int outer_position(Vertex v) const { return outer_pos_[static_cast<std::size_t>(v)]; }
    bool on_outer(Vertex v) const { return outer_position(v) >= 0; }

    /// Clockwise successor / predecessor of u in the rotation at v.
    Vertex successor(Vertex v, Vertex u) const;
    Vertex predecessor(Vertex v, Vertex u) const;

    /// Every face (outer one included) as its boundary walk. Requires a
    /// symmetric rotation system.
    std::vector<std::vector<Vertex>> trace_faces() const;

    /// Inner faces as normalized clockwise triangles, sorted. Requires a valid graph.
    std::vector<Triangle> inner_faces() const;

    std::vector<Vertex> interior_vertices() const;

private:
    std::vector<std::vector<Vertex>> rotation_;
    std::vector<Vertex> outer_;
    std::vector<int> outer_pos_;
    Graph graph_;
};

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

/// Lists every violated near-triangulation invariant; empty iff valid.
ValidationReport validate(const PlaneGraph& g);

/// Edges joining two non-consecutive outer vertices.
std::vector<Edge> chords(const PlaneGraph& g);

/// Vertices strictly inside the given cycle of g (either orientation).
/// Throws std::invalid_argument if `cycle` is not a cycle of g.
std::vector<Vertex> vertices_inside(const PlaneGraph& g, std::span<const Vertex> cycle);

/// Cycles of the given length (3 or 4) with vertices both strictly inside
/// and strictly outside. Each cycle starts at its smallest vertex.
std::vector<std::vector<Vertex>> separating_cycles(const PlaneGraph& g, int length);

/// A near-triangulation carved out of a parent, with the vertex maps.
struct Subgraph {
    PlaneGraph graph;
    std::vector<Vertex> to_parent;    // new -> old
    std::vector<Vertex> from_parent;  // old -> new, -1 when absent
};

/// The near-triangulation bounded by `cycle` (cycle plus everything inside).
/// The result's outer cycle starts at cycle[0] and is oriented clockwise.
Subgraph disk_inside(const PlaneGraph& g, std::span<const Vertex> cycle);

struct SplitResult {
    Subgraph part_one;  // holds the face to the right of path[0] -> path[1]
    Subgraph part_two;
    std::vector<Vertex> shared_boundary;  // the path, in parent labels
};

/// Splits g along a path whose endpoints lie on the outer cycle and whose
/// inner vertices are interior (a chord is a path of two vertices).
/// Both parts have their outer cycle starting at path[0].
SplitResult split_along(const PlaneGraph& g, std::span<const Vertex> path);

/// Block decomposition (2-connected components, bridges, isolated vertices).
/// Each block is sorted; blocks are sorted lexicographically.
std::vector<std::vector<Vertex>> blocks(const Graph& g);

/// Canonical code of the embedding, invariant under relabelings that keep
/// the rotation system and map outer[0], outer[1] to outer[0], outer[1].
std::vector<int> canonical_code(const PlaneGraph& g);

/// True iff some orientation-preserving isomorphism maps the outer cycle of
/// `a` onto that of `b` position by position.
bool embedded_isomorphic(const PlaneGraph& a, const PlaneGraph& b);

}  // namespace z5
