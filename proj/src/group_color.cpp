#include "z5/group_color.hpp"

#include <algorithm>
#include <stdexcept>

namespace z5 {

ColorSet ColorSet::of(std::span<const Color> colors) {
    ColorSet s;
    for (Color c : colors) s.insert(c);
    return s;
}

std::vector<Color> ColorSet::members() const {
    std::vector<Color> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

std::string to_string(ColorSet s) {
    std::string out = "{";
    for (Color c : s.members()) {
        if (out.size() > 1) out += ',';
        out += std::to_string(c);
    }
    return out + "}";
}

PhiAssignment::PhiAssignment(const Graph& g, int modulus) : n_(g.vertex_count()), modulus_(modulus) {
    if (modulus < 2 || modulus > kMaxModulus) throw std::invalid_argument("modulus must lie in 2..31");
    index_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
    for (const Edge& e : g.edges()) {
        const int id = static_cast<int>(records_.size());
        records_.push_back({e.u, e.v, 0});
        index_[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e.v)] = id;
        index_[static_cast<std::size_t>(e.v) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e.u)] = id;
    }
}

int PhiAssignment::record_index(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
    return index_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
}

bool PhiAssignment::has_edge(Vertex a, Vertex b) const { return record_index(a, b) >= 0; }

void PhiAssignment::set(Vertex tail, Vertex head, Color value) {
    const int id = record_index(tail, head);
    if (id < 0) throw std::invalid_argument("phi: no edge " + std::to_string(tail) + "-" + std::to_string(head));
    records_[static_cast<std::size_t>(id)] = {tail, head, mod(value, modulus_)};
}

Color PhiAssignment::along(Vertex from, Vertex to) const {
    const int id = record_index(from, to);
    if (id < 0) throw std::invalid_argument("phi: no edge " + std::to_string(from) + "-" + std::to_string(to));
    const EdgeRecord& r = records_[static_cast<std::size_t>(id)];
    return r.head == to ? r.value : mod(-r.value, modulus_);
}

PhiAssignment PhiAssignment::flipped(Vertex a, Vertex b) const {
    PhiAssignment out = *this;
    const int id = record_index(a, b);
    if (id < 0) throw std::invalid_argument("phi: no edge " + std::to_string(a) + "-" + std::to_string(b));
    const EdgeRecord r = records_[static_cast<std::size_t>(id)];
    out.records_[static_cast<std::size_t>(id)] = {r.head, r.tail, mod(-r.value, modulus_)};
    return out;
}

ColorSystem::ColorSystem(int n, int modulus)
    : modulus_(modulus), forbidden_(static_cast<std::size_t>(n)), precolor_(static_cast<std::size_t>(n), -1) {
    if (modulus < 2 || modulus > kMaxModulus) throw std::invalid_argument("modulus must lie in 2..31");
}

void ColorSystem::forbid(Vertex v, Color c) {
    if (c < 0 || c >= modulus_) throw std::invalid_argument("color out of range: " + std::to_string(c));
    if (is_precolored(v)) return;
    forbidden_[static_cast<std::size_t>(v)].insert(c);
}

void ColorSystem::set_forbidden(Vertex v, ColorSet s) {
    if ((s - ColorSet::full(modulus_)).bits() != 0) throw std::invalid_argument("forbidden set outside Z_m");
    forbidden_[static_cast<std::size_t>(v)] = is_precolored(v) ? ColorSet{} : s;
}

void ColorSystem::precolor(Vertex v, Color c) {
    if (c < 0 || c >= modulus_) throw std::invalid_argument("color out of range: " + std::to_string(c));
    precolor_[static_cast<std::size_t>(v)] = c;
    forbidden_[static_cast<std::size_t>(v)] = ColorSet{};
}

void ColorSystem::clear_precolor(Vertex v) { precolor_[static_cast<std::size_t>(v)] = -1; }

std::optional<Color> ColorSystem::precolored(Vertex v) const {
    const Color c = precolor_[static_cast<std::size_t>(v)];
    if (c < 0) return std::nullopt;
    return c;
}

ColorSet ColorSystem::available(Vertex v) const {
    if (auto c = precolored(v)) return ColorSet::single(*c);
    return ColorSet::full(modulus_) - forbidden(v);
}

Color tau(const PhiAssignment& phi, Vertex v, Color alpha, Vertex u) {
    return mod(static_cast<long long>(alpha) + phi.along(v, u), phi.modulus());
}

ColorSet tau_set(const PhiAssignment& phi, Vertex v, ColorSet s, Vertex u) {
    ColorSet out;
    for (Color c : s.members()) out.insert(tau(phi, v, c, u));
    return out;
}

bool is_proper(const Graph& g, const PhiAssignment& phi, const Coloring& c) {
    (void)g;
    const int m = phi.modulus();
    for (const EdgeRecord& r : phi.records())
        if (mod(static_cast<long long>(c[static_cast<std::size_t>(r.head)]) - c[static_cast<std::size_t>(r.tail)], m) ==
            r.value)
            return false;
    return true;
}

bool is_proper_tau(const Graph& g, const PhiAssignment& phi, const Coloring& c) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex u : g.neighbors(v))
            if (c[static_cast<std::size_t>(u)] == tau(phi, v, c[static_cast<std::size_t>(v)], u)) return false;
    return true;
}

bool respects(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs, const Coloring& c) {
    if (static_cast<int>(c.size()) != g.vertex_count()) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!cs.available(v).contains(c[static_cast<std::size_t>(v)])) return false;
    return is_proper(g, phi, c);
}

PhiAssignment shift_phi(const PhiAssignment& phi, Vertex v0, Color alpha) {
    PhiAssignment out = phi;
    for (const EdgeRecord& r : phi.records()) {
        if (r.head == v0) out.set(r.tail, r.head, r.value + alpha);
        else if (r.tail == v0) out.set(r.tail, r.head, r.value - alpha);
    }
    return out;
}

ColorSystem shift_colors(const ColorSystem& cs, Vertex v0, Color alpha) {
    ColorSystem out = cs;
    const int m = cs.modulus();
    if (auto c = cs.precolored(v0)) {
        out.precolor(v0, mod(static_cast<long long>(*c) + alpha, m));
    } else {
        ColorSet shifted;
        for (Color c : cs.forbidden(v0).members()) shifted.insert(mod(static_cast<long long>(c) + alpha, m));
        out.set_forbidden(v0, shifted);
    }
    return out;
}

bool triangle_consistent(const Graph& g, const PhiAssignment& phi, Vertex u, Vertex v, Vertex w) {
    if (!g.has_edge(u, v) || !g.has_edge(v, w) || !g.has_edge(w, u))
        throw std::invalid_argument("triangle_consistent: vertices do not form a triangle");
    return mod(static_cast<long long>(phi.along(u, v)) + phi.along(v, w) + phi.along(w, u), phi.modulus()) == 0;
}

NormalizedStar normalize_star(const PhiAssignment& phi, const ColorSystem& cs, Vertex center,
                              std::span<const Vertex> targets) {
    NormalizedStar out{phi, cs, {}};
    for (Vertex t : targets) {
        if (t == center || !phi.has_edge(center, t))
            throw std::invalid_argument("normalize_star: " + std::to_string(t) + " is not adjacent to the center");
        // Shifting at t by alpha changes phi(center -> t) by +alpha.
        const Color alpha = mod(-static_cast<long long>(out.phi.along(center, t)), phi.modulus());
        out.phi = shift_phi(out.phi, t, alpha);
        out.colors = shift_colors(out.colors, t, alpha);
        out.shifts.push_back(alpha);
    }
    return out;
}

}  // namespace z5
