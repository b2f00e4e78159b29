#include <algorithm>
#include <set>

#include "z5/disk.hpp"
#include "z5/solver.hpp"

namespace z5 {

namespace {

struct State {
    const PhiAssignment* phi_;
    std::vector<ColorSet> lists;
    Coloring color;  // -1 while uncolored

    bool colored(Vertex v) const { return color[static_cast<std::size_t>(v)] >= 0; }
    Color of(Vertex v) const { return color[static_cast<std::size_t>(v)]; }
    ColorSet& list(Vertex v) { return lists[static_cast<std::size_t>(v)]; }

    /// Colors in v's list not forbidden by already colored neighbours in `nbrs`.
    ColorSet free_colors(Vertex v, const std::vector<Vertex>& nbrs) const {
        ColorSet s = lists[static_cast<std::size_t>(v)];
        for (Vertex x : nbrs)
            if (colored(x)) s.erase(tau(*phi_, x, of(x), v));
        return s;
    }

    void paint(Vertex v, Color c) { color[static_cast<std::size_t>(v)] = c; }
    const PhiAssignment& phi() const { return *phi_; }
};

/// Rotates d so that its two colored outer vertices lead, in clockwise order.
Disk lead_with_colored_pair(const Disk& d, const State& st) {
    const auto& o = d.outer();
    const std::size_t k = o.size();
    for (std::size_t i = 0; i < k; ++i)
        if (st.colored(o[i]) && st.colored(o[(i + 1) % k])) return d.rotated_to(o[i]);
    throw AlgorithmDefect("extension step lost its precolored edge");
}

/// Thomassen-style induction. Precondition: d.outer()[0], d.outer()[1]
/// colored, everything else in d uncolored, outer lists of size >= 3,
/// interior lists full.
void extend_pair(State& st, const Disk& d) {
    const auto& o = d.outer();
    const int k = d.outer_length();
    if (d.faces().size() == 1) {
        const Vertex v3 = o[2];
        const ColorSet s = st.free_colors(v3, {o[0], o[1]});
        if (s.empty()) throw AlgorithmDefect("no color left for the last vertex of a triangle");
        st.paint(v3, s.first());
        return;
    }

    const auto chords = d.chords();
    if (!chords.empty()) {
        int pa = d.position(chords.front().u);
        int pb = d.position(chords.front().v);
        if (pa > pb) std::swap(pa, pb);
        std::vector<Vertex> with_edge;
        std::vector<Vertex> rest;
        if (pa == 0) {
            with_edge.assign(o.begin(), o.begin() + pb + 1);
            rest.assign(o.begin() + pb, o.end());
            rest.push_back(o[0]);
        } else {
            with_edge.assign(o.begin(), o.begin() + pa + 1);
            with_edge.insert(with_edge.end(), o.begin() + pb, o.end());
            rest.assign(o.begin() + pa, o.begin() + pb + 1);
        }
        extend_pair(st, lead_with_colored_pair(d.inside(with_edge), st));
        extend_pair(st, lead_with_colored_pair(d.inside(rest), st));
        return;
    }

    const Vertex v1 = o[0];
    const Vertex vk = o[static_cast<std::size_t>(k - 1)];
    const Vertex before = o[static_cast<std::size_t>(k - 2)];
    const std::vector<Vertex> nbrs = d.neighbors(vk);  // v1, u1..um, before
    ColorSet options = st.list(vk);
    options.erase(tau(st.phi(), v1, st.of(v1), vk));
    if (options.size() < 2) throw AlgorithmDefect("outer vertex with fewer than three colors");
    const auto members = options.members();
    const Color alpha = members[0];
    const Color beta = members[1];
    std::vector<Vertex> inner(nbrs.begin() + 1, nbrs.end() - 1);
    for (Vertex u : inner) {
        st.list(u).erase(tau(st.phi(), vk, alpha, u));
        st.list(u).erase(tau(st.phi(), vk, beta, u));
    }
    std::vector<Triangle> faces;
    for (const Triangle& t : d.faces())
        if (t[0] != vk && t[1] != vk && t[2] != vk) faces.push_back(t);
    std::vector<Vertex> outer(o.begin(), o.end() - 1);
    outer.insert(outer.end(), inner.rbegin(), inner.rend());
    extend_pair(st, Disk(std::move(outer), std::move(faces)));

    const Color blocked = tau(st.phi(), before, st.of(before), vk);
    const Color c = alpha != blocked ? alpha : beta;
    for (Vertex x : nbrs)
        if (tau(st.phi(), x, st.of(x), vk) == c) throw AlgorithmDefect("reserved colors clash at the deleted vertex");
    st.paint(vk, c);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void require_valid(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs) {
    const auto report = validate(g);
    require(report.ok(), "not a near-triangulation: " + (report.ok() ? std::string() : report.problems.front()));
    require(phi.modulus() == 5 && cs.modulus() == 5, "the extension algorithms work over Z5 only");
    require(phi.vertex_count() == g.vertex_count() && cs.vertex_count() == g.vertex_count(),
            "phi or lists sized for another graph");
}

bool precolored_edge_proper(const PhiAssignment& phi, const ColorSystem& cs, Vertex a, Vertex b) {
    return *cs.precolored(b) != tau(phi, a, *cs.precolored(a), b);
}

/// Colors the graph H = d minus its outer cycle, block by block, with the
/// lists already reduced by the colored outer cycle.
void color_inside_blocks(State& st, const Disk& d) {
    const auto interior = d.interior_vertices();
    const std::set<Vertex> inside(interior.begin(), interior.end());
    const Vertex top = interior.empty() ? 0 : *std::max_element(interior.begin(), interior.end());
    Graph h(top + 1);
    for (const Edge& e : d.edges())
        if (inside.count(e.u) && inside.count(e.v)) h.add_edge(e.u, e.v);
    std::vector<std::vector<Vertex>> todo;
    for (auto& b : blocks(h))
        if (inside.count(b.front())) todo.push_back(std::move(b));

    std::vector<char> done(todo.size(), 0);
    for (std::size_t finished = 0; finished < todo.size(); ++finished) {
        // A block touching the colored part first; otherwise start a new component.
        std::size_t pick = todo.size();
        for (std::size_t i = 0; i < todo.size() && pick == todo.size(); ++i)
            if (!done[i] && std::any_of(todo[i].begin(), todo[i].end(), [&](Vertex v) { return st.colored(v); }))
                pick = i;
        for (std::size_t i = 0; i < todo.size() && pick == todo.size(); ++i)
            if (!done[i]) pick = i;
        done[pick] = 1;
        const auto& b = todo[pick];

        auto paint_from = [&](Vertex v, const std::vector<Vertex>& nbrs) {
            const ColorSet s = st.free_colors(v, nbrs);
            if (s.empty()) throw AlgorithmDefect("inner vertex without a color");
            st.paint(v, s.first());
        };
        if (b.size() == 1) {
            if (!st.colored(b[0])) paint_from(b[0], {});
            continue;
        }
        if (b.size() == 2) {
            for (Vertex v : b)
                if (!st.colored(v)) paint_from(v, b);
            continue;
        }
        std::vector<Triangle> faces;
        const std::set<Vertex> in_block(b.begin(), b.end());
        for (const Triangle& t : d.faces())
            if (in_block.count(t[0]) && in_block.count(t[1]) && in_block.count(t[2])) faces.push_back(t);
        Disk db = Disk::from_faces(std::move(faces));
        Vertex x = db.outer()[0];
        for (Vertex v : db.outer())
            if (st.colored(v)) x = v;
        db = db.rotated_to(x);
        if (!st.colored(x)) paint_from(x, {});
        const Vertex y = db.outer()[1];
        paint_from(y, {x});
        extend_pair(st, db);
    }
}

/// Precondition: the outer cycle of d (length <= 5) is colored, nothing
/// inside is. Returns the hub if the top-level exception applies.
std::optional<Vertex> short_cycle(State& st, const Disk& d) {
    const auto interior = d.interior_vertices();
    if (interior.empty()) return std::nullopt;
    const auto& o = d.outer();
    const int k = d.outer_length();

    if (k == 5) {
        for (Vertex v : interior) {
            ColorSet hit;
            int adjacent = 0;
            for (Vertex x : o)
                if (d.has_edge(x, v)) {
                    ++adjacent;
                    hit.insert(tau(st.phi(), x, st.of(x), v));
                }
            if (adjacent == 5 && hit == ColorSet::full(5)) return v;
        }
    }

    for (Vertex u : interior) {
        std::vector<int> positions;
        std::vector<Vertex> touching;
        for (int p = 0; p < k; ++p)
            if (d.has_edge(u, o[static_cast<std::size_t>(p)])) {
                positions.push_back(p);
                touching.push_back(o[static_cast<std::size_t>(p)]);
            }
        if (positions.size() < 3) continue;

        const ColorSet options = st.free_colors(u, touching);
        for (Color x : options.members()) {
            const State saved = st;
            st.paint(u, x);
            bool ok = true;
            for (std::size_t t = 0; t < positions.size() && ok; ++t) {
                const int from = positions[t];
                const int to = positions[(t + 1) % positions.size()];
                std::vector<Vertex> cycle{u};
                for (int p = from;; p = (p + 1) % k) {
                    cycle.push_back(o[static_cast<std::size_t>(p)]);
                    if (p == to) break;
                }
                ok = !short_cycle(st, d.inside(cycle)).has_value();
            }
            if (ok) return std::nullopt;
            st = saved;
        }
        throw AlgorithmDefect("no color of a vertex with three cycle neighbours extends");
    }

    for (Vertex v : interior)
        for (Vertex x : o)
            if (d.has_edge(x, v)) st.list(v).erase(tau(st.phi(), x, st.of(x), v));
    color_inside_blocks(st, d);
    return std::nullopt;
}

State initial_state(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs) {
    State st{&phi, {}, Coloring(static_cast<std::size_t>(g.vertex_count()), -1)};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        st.lists.push_back(cs.available(v));
        if (auto c = cs.precolored(v)) st.paint(v, *c);
    }
    return st;
}

}  // namespace

Coloring extend_two(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs) {
    require_valid(g, phi, cs);
    const auto& o = g.outer_cycle();
    const std::size_t k = o.size();
    std::vector<Vertex> pre;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (cs.is_precolored(v)) pre.push_back(v);
    require(pre.size() == 2, "exactly two vertices must be precolored");
    std::size_t start = k;
    for (std::size_t i = 0; i < k; ++i)
        if (cs.is_precolored(o[i]) && cs.is_precolored(o[(i + 1) % k])) start = i;
    require(start < k, "the precolored vertices must be consecutive on the outer cycle");
    const Vertex a = o[start];
    const Vertex b = o[(start + 1) % k];
    require(precolored_edge_proper(phi, cs, a, b), "the precoloring is not proper");
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (cs.is_precolored(v)) continue;
        if (g.on_outer(v)) require(cs.forbidden(v).size() <= 2, "outer vertex with more than two forbidden colors");
        else require(cs.forbidden(v).empty(), "inner vertex with forbidden colors");
    }

    State st = initial_state(g, phi, cs);
    extend_pair(st, Disk::of(g).rotated_to(a));
    if (!respects(g.graph(), phi, cs, st.color)) throw AlgorithmDefect("extension produced an invalid coloring");
    return st.color;
}

ShortCycleResult color_short_cycle(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs) {
    require_valid(g, phi, cs);
    const auto& o = g.outer_cycle();
    require(o.size() >= 3 && o.size() <= 5, "outer cycle must have length 3, 4 or 5");
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.on_outer(v)) {
            require(cs.is_precolored(v), "every outer vertex must be precolored");
        } else {
            require(!cs.is_precolored(v) && cs.forbidden(v).empty(), "inner vertices must be unconstrained");
        }
    }
    for (Vertex a : o)
        for (Vertex b : g.graph().neighbors(a))
            if (g.on_outer(b)) require(precolored_edge_proper(phi, cs, a, b), "the precoloring of the cycle is not proper");

    State st = initial_state(g, phi, cs);
    if (auto hub = short_cycle(st, Disk::of(g))) return HubException{*hub};
    if (!respects(g.graph(), phi, cs, st.color)) throw AlgorithmDefect("short-cycle coloring is invalid");
    return st.color;
}

}  // namespace z5
