#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "z5/disk.hpp"
#include "z5/solver.hpp"

namespace z5 {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

CertificateCheck fail(std::string what) { return {false, std::move(what)}; }

/// The outer cycle rotated so that the middle of the three precolored
/// vertices leads.
std::vector<Vertex> three_path_outer(const PlaneGraph& g, const ColorSystem& cs) {
    const auto& o = g.outer_cycle();
    const std::size_t k = o.size();
    int pre = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) pre += cs.is_precolored(v);
    require(pre == 3, "exactly three vertices must be precolored");
    for (std::size_t i = 0; i < k; ++i)
        if (cs.is_precolored(o[(i + k - 1) % k]) && cs.is_precolored(o[i]) && cs.is_precolored(o[(i + 1) % k])) {
            std::vector<Vertex> out(o.begin(), o.end());
            std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(i), out.end());
            return out;
        }
    throw std::invalid_argument("the precolored vertices must form a path on the outer cycle");
}

void require_three_path_instance(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs,
                                 const std::vector<Vertex>& outer) {
    for (Vertex a : {outer.back(), outer[0], outer[1]})
        for (Vertex b : g.graph().neighbors(a))
            if (cs.is_precolored(b))
                require(*cs.precolored(b) != tau(phi, a, *cs.precolored(a), b), "the precoloring is not proper");
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (cs.is_precolored(v)) continue;
        if (g.on_outer(v)) require(cs.forbidden(v).size() <= 2, "outer vertex with more than two forbidden colors");
        else require(cs.forbidden(v).empty(), "inner vertex with forbidden colors");
    }
}

/// Sub-disk with the insides of the chosen separating triangles removed.
Disk collapse(const Disk& d, const std::vector<std::vector<Vertex>>& triangles) {
    std::set<Vertex> gone;
    for (const auto& t : triangles)
        for (Vertex v : d.strictly_inside(t)) gone.insert(v);
    std::vector<Triangle> faces;
    std::set<std::pair<Vertex, Vertex>> darts;
    for (const Triangle& f : d.faces()) {
        if (gone.count(f[0]) || gone.count(f[1]) || gone.count(f[2])) continue;
        faces.push_back(f);
        for (std::size_t i = 0; i < 3; ++i) darts.emplace(f[i], f[(i + 1) % 3]);
    }
    for (const auto& t : triangles) {
        Triangle f{t[0], t[1], t[2]};
        const bool taken = darts.count({f[0], f[1]}) || darts.count({f[1], f[2]}) || darts.count({f[2], f[0]});
        if (taken) f = {t[0], t[2], t[1]};
        faces.push_back(f);
    }
    return Disk(d.outer(), std::move(faces));
}

/// Every way of emptying an antichain of separating triangles of d.
std::vector<Disk> collapsed_variants(const Disk& d) {
    std::vector<Vertex> labels;
    const PlaneGraph pg = d.to_plane_graph(&labels);
    std::vector<std::vector<Vertex>> seps;
    for (const auto& t : separating_cycles(pg, 3)) {
        std::vector<Vertex> back;
        for (Vertex v : t) back.push_back(labels[static_cast<std::size_t>(v)]);
        seps.push_back(back);
    }
    std::vector<std::set<Vertex>> inside;
    for (const auto& t : seps) {
        const auto in = d.strictly_inside(t);
        inside.emplace_back(in.begin(), in.end());
    }
    std::vector<Disk> out;
    std::vector<std::vector<Vertex>> chosen;
    std::vector<std::size_t> chosen_ids;
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == seps.size()) {
            out.push_back(chosen.empty() ? d : collapse(d, chosen));
            return;
        }
        walk(i + 1);
        // Skip triangles nested with an already chosen one.
        for (std::size_t c : chosen_ids) {
            const auto& a = inside[c];
            const auto& b = inside[i];
            const bool nested = std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
                                std::includes(b.begin(), b.end(), a.begin(), a.end());
            if (nested) return;
        }
        chosen.push_back(seps[i]);
        chosen_ids.push_back(i);
        walk(i + 1);
        chosen.pop_back();
        chosen_ids.pop_back();
    };
    walk(0);
    return out;
}

ObstructionCertificate make_certificate(const Disk& sub, const PhiAssignment& phi, const ColorSystem& cs,
                                        const Descriptor& desc) {
    std::vector<Vertex> labels;
    PlaneGraph pg = sub.to_plane_graph(&labels);
    std::map<Vertex, Vertex> fresh;
    for (std::size_t i = 0; i < labels.size(); ++i) fresh[labels[i]] = static_cast<Vertex>(i);
    Instance inst = make_instance(pg, phi.modulus());
    // Records keep the parent's stored orientation.
    for (const EdgeRecord& r : phi.records()) {
        auto ta = fresh.find(r.tail);
        auto hb = fresh.find(r.head);
        if (ta != fresh.end() && hb != fresh.end() && inst.phi.has_edge(ta->second, hb->second))
            inst.phi.set(ta->second, hb->second, r.value);
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const Vertex p = labels[i];
        const Vertex v = static_cast<Vertex>(i);
        if (auto c = cs.precolored(p)) inst.colors.precolor(v, *c);
        else inst.colors.set_forbidden(v, cs.forbidden(p));
    }
    inst.descriptor = to_string(desc);
    inst.origin = labels;
    return {std::move(inst), desc};
}

bool has_coloring(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs) {
    SearchOptions opt;
    opt.priority = g.outer_cycle();
    return find_coloring(g.graph(), phi, cs, opt).has_value();
}

}  // namespace

ExtendThreeResult extend_three(const PlaneGraph& g_in, const PhiAssignment& phi, const ColorSystem& cs,
                               const ExtendThreeOptions& opt) {
    const auto report = validate(g_in);
    require(report.ok(), "not a near-triangulation: " + (report.ok() ? std::string() : report.problems.front()));
    require(phi.modulus() == 5 && cs.modulus() == 5, "the extension algorithms work over Z5 only");
    require(phi.vertex_count() == g_in.vertex_count() && cs.vertex_count() == g_in.vertex_count(),
            "phi or lists sized for another graph");
    const std::vector<Vertex> outer = three_path_outer(g_in, cs);
    require_three_path_instance(g_in, phi, cs, outer);
    const PlaneGraph g(g_in.rotations(), outer);

    SearchOptions so;
    so.priority = outer;
    if (auto c = find_coloring(g.graph(), phi, cs, so)) return *c;

    // Candidate outer cycles: v1 v2, then outer vertices with exactly two
    // forbidden colors in cycle order, then vk; consecutive ones adjacent.
    const std::size_t k = outer.size();
    const Graph& h = g.graph();
    std::vector<std::vector<Vertex>> cycles;
    std::vector<Vertex> path{outer[0], outer[1]};
    std::function<void(std::size_t)> extend = [&](std::size_t last) {
        const Vertex tail = path.back();
        if (h.has_edge(tail, outer[k - 1])) {
            auto c = path;
            c.push_back(outer[k - 1]);
            cycles.push_back(std::move(c));
        }
        for (std::size_t p = last + 1; p + 1 < k; ++p) {
            const Vertex v = outer[p];
            if (cs.forbidden(v).size() != 2 || !h.has_edge(tail, v)) continue;
            path.push_back(v);
            extend(p);
            path.pop_back();
        }
    };
    extend(1);

    const Disk whole = Disk::of(g);
    struct Candidate {
        Disk disk;
        std::vector<Vertex> key;
    };
    std::vector<Candidate> candidates;
    std::uint64_t spent = 0;
    for (const auto& c : cycles) {
        const Disk d = whole.inside(c);
        for (Disk& v : collapsed_variants(d)) {
            if (++spent > opt.node_budget) throw BudgetExceeded("certificate search exceeded its budget");
            auto key = v.vertices();
            std::sort(key.begin(), key.end());
            candidates.push_back({std::move(v), std::move(key)});
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.key.size() != b.key.size()) return a.key.size() < b.key.size();
        return a.key < b.key;
    });
    for (const Candidate& cand : candidates) {
        if (++spent > opt.node_budget) throw BudgetExceeded("certificate search exceeded its budget");
        const PlaneGraph sub = cand.disk.to_plane_graph();
        auto desc = recognize_generalized_multi_wheel(sub);
        if (!desc) continue;
        ObstructionCertificate cert = make_certificate(cand.disk, phi, cs, *desc);
        if (has_coloring(cert.instance.graph, cert.instance.phi, cert.instance.colors)) continue;
        return cert;
    }
    throw AlgorithmDefect("no coloring and no wheel-family obstruction found");
}

CertificateCheck validate_certificate(const ObstructionCertificate& cert) {
    const Instance& inst = cert.instance;
    const PlaneGraph& g = inst.graph;
    const auto report = validate(g);
    if (!report.ok()) return fail("certificate graph invalid: " + report.problems.front());
    const auto& o = g.outer_cycle();
    const std::size_t k = o.size();
    const auto rec = recognize_generalized_multi_wheel(g);
    if (!rec) return fail("certificate graph is not a generalized multi-wheel on its principal path");
    try {
        if (!embedded_isomorphic(build(cert.descriptor).graph, g))
            return fail("descriptor does not rebuild the certificate graph");
    } catch (const std::invalid_argument& e) {
        return fail(std::string("descriptor does not build: ") + e.what());
    }
    const std::set<Vertex> path{o[k - 1], o[0], o[1]};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const bool pre = inst.colors.is_precolored(v);
        if (path.count(v) != 0) {
            if (!pre) return fail("principal path vertex " + std::to_string(v) + " is not precolored");
        } else if (pre) {
            return fail("vertex " + std::to_string(v) + " off the principal path is precolored");
        } else if (g.on_outer(v)) {
            if (inst.colors.forbidden(v).size() != 2)
                return fail("outer vertex " + std::to_string(v) + " does not have exactly two forbidden colors");
        } else if (!inst.colors.forbidden(v).empty()) {
            return fail("inner vertex " + std::to_string(v) + " has forbidden colors");
        }
    }
    if (count_colorings(g, inst.phi, inst.colors, {1, 1, {}}) != 0) return fail("certificate instance has a coloring");
    return {};
}

CertificateCheck validate_certificate(const ObstructionCertificate& cert, const PlaneGraph& parent,
                                      const PhiAssignment& phi, const ColorSystem& cs) {
    if (auto c = validate_certificate(cert); !c.ok) return c;
    const Instance& inst = cert.instance;
    const auto& origin = inst.origin;
    if (static_cast<int>(origin.size()) != inst.graph.vertex_count()) return fail("origin has the wrong length");
    std::set<Vertex> distinct(origin.begin(), origin.end());
    if (distinct.size() != origin.size()) return fail("origin repeats a parent vertex");
    for (Vertex p : origin)
        if (p < 0 || p >= parent.vertex_count()) return fail("origin names a vertex outside the parent");
    auto up = [&](Vertex v) { return origin[static_cast<std::size_t>(v)]; };
    for (const Edge& e : inst.graph.graph().edges()) {
        if (!parent.graph().has_edge(up(e.u), up(e.v))) return fail("certificate edge missing in the parent");
        if (inst.phi.along(e.u, e.v) != phi.along(up(e.u), up(e.v))) return fail("phi differs from the parent");
    }
    const auto& o = inst.graph.outer_cycle();
    for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) {
        const Vertex p = up(v);
        if (inst.colors.precolored(v) != cs.precolored(p)) return fail("precoloring differs from the parent");
        if (!inst.colors.is_precolored(v) && inst.colors.forbidden(v) != cs.forbidden(p))
            return fail("forbidden set differs from the parent");
        if (inst.graph.on_outer(v) && !parent.on_outer(p)) return fail("certificate outer vertex inside the parent");
    }
    int parent_pre = 0;
    for (Vertex v = 0; v < parent.vertex_count(); ++v) parent_pre += cs.is_precolored(v);
    int mapped_pre = 0;
    for (Vertex v : {o.back(), o[0], o[1]}) mapped_pre += cs.is_precolored(up(v));
    if (parent_pre != 3 || mapped_pre != 3) return fail("principal path is not the parent's precolored path");
    return {};
}

AlphaResult lemma1_alpha(const PlaneGraph& w, const PhiAssignment& phi, const ColorSystem& cs,
                         bool require_multi_wheel) {
    const auto report = validate(w);
    require(report.ok(), "not a near-triangulation: " + (report.ok() ? std::string() : report.problems.front()));
    require(phi.modulus() == 5 && cs.modulus() == 5, "the extension algorithms work over Z5 only");
    if (require_multi_wheel) require(is_multi_wheel(w), "not a multi-wheel");
    const auto& o = w.outer_cycle();
    const int k = w.outer_length();
    for (Vertex v = 0; v < w.vertex_count(); ++v) {
        require(!cs.is_precolored(v), "lists only; the principal path is enumerated");
        const int pos = w.outer_position(v);
        if (pos >= 2 && pos <= k - 2) require(cs.forbidden(v).size() <= 2, "more than two forbidden colors");
        else require(cs.forbidden(v).empty(), "forbidden colors allowed only on v3..v(k-1)");
    }
    const std::vector<Vertex> prefix{o.back(), o[0], o[1]};
    const auto ext = extendable_assignments(w.graph(), phi, cs, prefix);
    AlphaResult r;
    std::set<Color> diffs;
    const Graph& h = w.graph();
    for (Color c2 = 0; c2 < 5; ++c2)
        for (Color c1 = 0; c1 < 5; ++c1)
            for (Color ck = 0; ck < 5; ++ck) {
                const Coloring part{ck, c1, c2};
                bool proper = true;
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b)
                        if (a != b && h.has_edge(prefix[static_cast<std::size_t>(a)], prefix[static_cast<std::size_t>(b)]) &&
                            part[static_cast<std::size_t>(b)] ==
                                tau(phi, prefix[static_cast<std::size_t>(a)], part[static_cast<std::size_t>(a)],
                                    prefix[static_cast<std::size_t>(b)]))
                            proper = false;
                if (!proper) continue;
                if (ext[static_cast<std::size_t>(ck + 5 * c1 + 25 * c2)]) continue;
                r.failures.push_back({ck, c1, c2});
                diffs.insert(mod(ck - c2, 5));
            }
    if (diffs.empty()) r.kind = AlphaKind::Vacuous;
    else if (diffs.size() == 1) {
        r.kind = AlphaKind::Value;
        r.alpha = *diffs.begin();
    } else {
        r.kind = AlphaKind::None;
    }
    return r;
}

std::optional<Vertex> counting_exception(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs) {
    std::vector<Vertex> pre;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (cs.is_precolored(v)) pre.push_back(v);
    if (pre.size() != 3) return std::nullopt;
    const Graph& h = g.graph();
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (cs.is_precolored(u) || cs.available(u).size() != 4) continue;
        ColorSet left = cs.available(u);
        bool joined = true;
        for (Vertex p : pre) {
            if (!h.has_edge(p, u)) {
                joined = false;
                break;
            }
            left.erase(tau(phi, p, *cs.precolored(p), u));
        }
        if (joined && left.size() == 1) return u;
    }
    return std::nullopt;
}

}  // namespace z5
