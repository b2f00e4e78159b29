#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "z5/plane_graph.hpp"

namespace z5 {

/// A near-triangulation held as clockwise inner triangles plus its outer
/// cycle, over arbitrary (sparse) vertex labels. The recursive algorithms
/// carve sub-disks out of a parent without relabeling.
class Disk {
public:
    Disk() = default;
    Disk(std::vector<Vertex> outer, std::vector<Triangle> faces);

    static Disk of(const PlaneGraph& g);

    /// Outer cycle recovered from the boundary edges (edges lying on exactly
    /// one face). Starts at the smallest boundary vertex.
    static Disk from_faces(std::vector<Triangle> faces);

    const std::vector<Vertex>& outer() const { return outer_; }
    const std::vector<Triangle>& faces() const { return faces_; }
    int outer_length() const { return static_cast<int>(outer_.size()); }

    std::vector<Vertex> vertices() const;
    std::vector<Vertex> interior_vertices() const;
    int vertex_count() const;
    int position(Vertex v) const;

    bool has_edge(Vertex a, Vertex b) const;
    std::vector<Edge> edges() const;

    /// Neighbours of v in clockwise order. For an outer vertex the list runs
    /// from its outer successor to its outer predecessor.
    std::vector<Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    std::vector<Edge> chords() const;

    /// Face index holding dart a->b, or -1.
    int face_of_dart(Vertex a, Vertex b) const;

    /// Sub-disk bounded by `cycle`, outer oriented clockwise and starting at cycle[0].
    Disk inside(std::span<const Vertex> cycle) const;

    /// Vertices strictly inside `cycle`.
    std::vector<Vertex> strictly_inside(std::span<const Vertex> cycle) const;

    /// Same disk, outer cycle rotated so that `first` leads.
    Disk rotated_to(Vertex first) const;

    /// Dense relabeling: outer vertices first in cycle order, then interior
    /// vertices by increasing label. `labels` receives new -> old.
    PlaneGraph to_plane_graph(std::vector<Vertex>* labels = nullptr) const;

private:
    static std::uint64_t key(Vertex a, Vertex b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
    }
    std::vector<int> region(std::span<const Vertex> cycle, bool& touches_boundary) const;

    std::vector<Vertex> outer_;
    std::vector<Triangle> faces_;
    std::unordered_map<std::uint64_t, int> dart_face_;
};

}  // namespace z5
