#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "z5/families.hpp"
#include "z5/gcg.hpp"
#include "z5/group_color.hpp"
#include "z5/plane_graph.hpp"

namespace z5 {

struct SearchOptions {
    /// Stop counting once this many colorings are found; 0 means exact.
    std::uint64_t cap = 0;
    /// Workers for counting; the count never depends on it.
    int jobs = 1;
    /// Vertices placed right after the precolored ones, in this order.
    std::vector<Vertex> priority;
};

/// Number of colorings that are proper for phi and take every vertex into
/// its list (min(count, cap) when a cap is set). Multiplies over connected
/// components.
std::uint64_t count_colorings(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs,
                              const SearchOptions& opt = {});
/// Same, with the outer cycle as search priority.
std::uint64_t count_colorings(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs,
                              const SearchOptions& opt = {});

/// Visits colorings in the deterministic search order; stop by returning false.
void for_each_coloring(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs,
                       const std::function<bool(const Coloring&)>& visit, const SearchOptions& opt = {});
std::vector<Coloring> enumerate_colorings(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs,
                                          std::size_t limit, const SearchOptions& opt = {});
std::optional<Coloring> find_coloring(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs,
                                      const SearchOptions& opt = {});

/// For every assignment of `prefix` (index sum c_i * m^i) whether it is
/// part of some coloring. List constraints on prefix vertices apply.
std::vector<bool> extendable_assignments(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs,
                                         std::span<const Vertex> prefix);

/// Thrown when a constructive algorithm fails on input its contract covers.
class AlgorithmDefect : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An interior vertex adjacent to all of a precolored 5-cycle whose colors
/// forbid every element of Z5 at it.
struct HubException {
    Vertex hub = -1;
};

using ShortCycleResult = std::variant<Coloring, HubException>;

/// Outer cycle of length 3..5 fully precolored, interior lists full.
/// Throws std::invalid_argument on other input, including an improper
/// precoloring of the cycle and its chords.
ShortCycleResult color_short_cycle(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs);

/// Two adjacent outer vertices precolored properly, every other outer
/// vertex with at most two forbidden colors, interior lists full.
/// Throws std::invalid_argument on other input and AlgorithmDefect if the
/// construction ever runs out of colors.
Coloring extend_two(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs);

struct ObstructionCertificate {
    /// Sub-instance in its own numbering: outer cycle v1 v2 ... vk of the
    /// wheel-family member, vk v1 v2 precolored as in the parent, the other
    /// outer vertices carrying their parent forbidden sets. Carries the
    /// descriptor and the parent labels (`origin`).
    Instance instance;
    Descriptor descriptor;
};

using ExtendThreeResult = std::variant<Coloring, ObstructionCertificate>;

struct ExtendThreeOptions {
    /// Cap on candidate sub-instances plus search nodes spent on the certificate.
    std::uint64_t node_budget = 50'000'000;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// vk, v1, v2 precolored properly; every other outer vertex with at most two
/// forbidden colors; interior lists full. Returns a coloring, or a
/// non-extendable sub-instance that is a generalized multi-wheel on the same
/// principal path whose other outer vertices lie on the outer cycle with
/// exactly two forbidden colors. Throws std::invalid_argument on other input,
/// AlgorithmDefect when no certificate exists, BudgetExceeded on budget.
ExtendThreeResult extend_three(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs,
                               const ExtendThreeOptions& opt = {});

struct CertificateCheck {
    bool ok = true;
    std::string problem;
};

/// Standalone checks: valid near-triangulation, recognized on its
/// principal path, precoloring exactly on vk v1 v2, exactly two forbidden
/// colors on every other outer vertex, none inside, and no coloring.
CertificateCheck validate_certificate(const ObstructionCertificate& cert);
/// Additionally checks the embedding into the parent: origin labels, edges,
/// phi values, forbidden sets and precolors all agree with the parent.
CertificateCheck validate_certificate(const ObstructionCertificate& cert, const PlaneGraph& parent,
                                      const PhiAssignment& phi, const ColorSystem& cs);

enum class AlphaKind { Value, Vacuous, None };

struct AlphaResult {
    AlphaKind kind = AlphaKind::Vacuous;
    Color alpha = 0;
    /// Non-extendable proper precolorings as (c(vk), c(v1), c(v2)).
    std::vector<std::array<Color, 3>> failures;
};

/// Collects the proper precolorings of vk, v1, v2 that do not extend and
/// reports their common value of c(vk) - c(v2). Lists: at most two forbidden
/// colors on v3..v(k-1), nothing else constrained.
/// Throws std::invalid_argument if the graph is not a multi-wheel (unless
/// the check is disabled) or the lists break the caps.
AlphaResult lemma1_alpha(const PlaneGraph& w, const PhiAssignment& phi, const ColorSystem& cs,
                         bool require_multi_wheel = true);

/// With exactly three precolored vertices: a vertex with four available
/// colors adjacent to all three of them whose list keeps a single color once
/// their tau values are removed.
std::optional<Vertex> counting_exception(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs);

}  // namespace z5
