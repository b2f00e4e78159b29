#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "z5/graph.hpp"

namespace z5 {

/// Element of Z_m stored as its representative in [0, m).
using Color = int;

inline constexpr int kDefaultModulus = 5;
inline constexpr int kMaxModulus = 31;

inline Color mod(long long x, int m) {
    const long long r = x % m;
    return static_cast<Color>(r < 0 ? r + m : r);
}

/// Subset of Z_m (m <= 31) as a bitmask.
class ColorSet {
public:
    constexpr ColorSet() = default;
    constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}

    static constexpr ColorSet full(int m) { return ColorSet((std::uint32_t{1} << m) - 1); }
    static constexpr ColorSet single(Color c) { return ColorSet(std::uint32_t{1} << c); }
    static ColorSet of(std::span<const Color> colors);

    constexpr bool contains(Color c) const { return (bits_ >> c) & 1U; }
    constexpr void insert(Color c) { bits_ |= std::uint32_t{1} << c; }
    constexpr void erase(Color c) { bits_ &= ~(std::uint32_t{1} << c); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint32_t bits() const { return bits_; }
    /// Smallest member; the set must be non-empty.
    constexpr Color first() const { return std::countr_zero(bits_); }
    std::vector<Color> members() const;

    constexpr ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
    constexpr ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
    constexpr ColorSet operator-(ColorSet o) const { return ColorSet(bits_ & ~o.bits_); }
    friend constexpr bool operator==(ColorSet, ColorSet) = default;

private:
    std::uint32_t bits_ = 0;
};

std::string to_string(ColorSet s);

/// One stored edge record: the edge is directed towards `head`.
struct EdgeRecord {
    Vertex tail = 0;
    Vertex head = 0;
    Color value = 0;

    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// A Z_m value on every edge of a host graph, each edge with a fixed stored
/// orientation. Everything downstream reads it through along()/tau(), so
/// callers never depend on which way a record happens to be stored.
class PhiAssignment {
public:
    PhiAssignment() = default;
    /// Zero on every edge, each record stored from the smaller endpoint.
    explicit PhiAssignment(const Graph& g, int modulus = kDefaultModulus);

    int modulus() const { return modulus_; }
    int vertex_count() const { return n_; }
    const std::vector<EdgeRecord>& records() const { return records_; }
    bool has_edge(Vertex a, Vertex b) const;

    /// Stores the record of edge {tail, head} as tail -> head with `value`.
    void set(Vertex tail, Vertex head, Color value);

    /// phi of the edge read in direction from -> to: the stored value if the
    /// record points at `to`, its negation otherwise.
    Color along(Vertex from, Vertex to) const;

    /// Same assignment with the record of {a, b} stored the other way round.
    PhiAssignment flipped(Vertex a, Vertex b) const;

    friend bool operator==(const PhiAssignment&, const PhiAssignment&) = default;

private:
    int record_index(Vertex a, Vertex b) const;

    int n_ = 0;
    int modulus_ = kDefaultModulus;
    std::vector<EdgeRecord> records_;
    std::vector<int> index_;  // n*n, -1 for non-edges
};

/// Per-vertex forbidden sets plus an optional precoloring. Precoloring a
/// vertex clears its forbidden set; its list becomes the single color.
class ColorSystem {
public:
    ColorSystem() = default;
    explicit ColorSystem(int n, int modulus = kDefaultModulus);

    int modulus() const { return modulus_; }
    int vertex_count() const { return static_cast<int>(forbidden_.size()); }

    void forbid(Vertex v, Color c);
    void set_forbidden(Vertex v, ColorSet s);
    void precolor(Vertex v, Color c);
    void clear_precolor(Vertex v);

    ColorSet forbidden(Vertex v) const { return forbidden_[static_cast<std::size_t>(v)]; }
    std::optional<Color> precolored(Vertex v) const;
    bool is_precolored(Vertex v) const { return precolor_[static_cast<std::size_t>(v)] >= 0; }
    /// L_v: Z_m minus F_v, or {c} for a precolored vertex.
    ColorSet available(Vertex v) const;

    friend bool operator==(const ColorSystem&, const ColorSystem&) = default;

private:
    int modulus_ = kDefaultModulus;
    std::vector<ColorSet> forbidden_;
    std::vector<Color> precolor_;  // -1 when free
};

/// Total vertex coloring; properness is checked, not enforced.
using Coloring = std::vector<Color>;

/// tau_v(alpha, u): the color that `alpha` at v forbids at neighbour u.
Color tau(const PhiAssignment& phi, Vertex v, Color alpha, Vertex u);
ColorSet tau_set(const PhiAssignment& phi, Vertex v, ColorSet s, Vertex u);

/// c(w) - c(u) != phi(uw) for every record u -> w.
bool is_proper(const Graph& g, const PhiAssignment& phi, const Coloring& c);
/// Same predicate through tau: c(u) != tau_v(c(v), u) on every edge, both ways.
bool is_proper_tau(const Graph& g, const PhiAssignment& phi, const Coloring& c);

/// Proper and every vertex takes a color from its list.
bool respects(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs, const Coloring& c);

/// Adds alpha to records pointing at v0 and subtracts it from records leaving
/// v0. Colorings correspond via c(v0) -> c(v0) + alpha.
PhiAssignment shift_phi(const PhiAssignment& phi, Vertex v0, Color alpha);
/// The matching transform of constraints: F_{v0} and a precolor of v0 move by alpha.
ColorSystem shift_colors(const ColorSystem& cs, Vertex v0, Color alpha);

/// Oriented sum phi(uv) + phi(vw) + phi(wu) vanishes.
bool triangle_consistent(const Graph& g, const PhiAssignment& phi, Vertex u, Vertex v, Vertex w);

struct NormalizedStar {
    PhiAssignment phi;
    ColorSystem colors;
    std::vector<Color> shifts;  // alpha applied at each target, in order
};

/// Shifts at each target in turn so that every center-target edge reads 0.
NormalizedStar normalize_star(const PhiAssignment& phi, const ColorSystem& cs, Vertex center,
                              std::span<const Vertex> targets);

}  // namespace z5
