#include "z5/propcheck.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "z5/families.hpp"
#include "z5/solver.hpp"

namespace z5 {

namespace {

constexpr int kMaxN = 14;
constexpr std::size_t kKeep = 10;

// ---------------------------------------------------------------- plumbing

struct Outcome {
    std::uint64_t tested = 0;
    std::uint64_t excluded = 0;
    std::vector<Counterexample> found;
};

using Task = std::function<void(std::size_t, Outcome&)>;

/// Runs task(i) for i < count on `jobs` workers; merges in index order, so
/// the report never depends on the worker count.
void run_tasks(CheckReport& rep, std::size_t count, int jobs, const Task& task) {
    std::vector<Outcome> out(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                task(i, out[i]);
            } catch (const std::exception& e) {
                out[i].found.push_back({"task " + std::to_string(i) + " raised: " + e.what(), {}});
            }
        }
    };
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& o : out) {
        rep.instances_tested += o.tested;
        rep.excluded += o.excluded;
        rep.counterexample_count += o.found.size();
        for (auto& c : o.found)
            if (rep.counterexamples.size() < kKeep) rep.counterexamples.push_back(std::move(c));
    }
}

CheckReport start(const std::string& property, const CheckConfig& cfg) {
    CheckReport rep;
    rep.property = property;
    rep.config = cfg;
    return rep;
}

Rng stream(const CheckConfig& cfg, const std::string& property, std::size_t index) {
    return Rng::derive(cfg.seed, property, index);
}

const std::vector<Descriptor>& family_upto(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Descriptor>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_family(n)).first;
    return it->second;
}

struct Member {
    Descriptor descriptor;
    PlaneGraph graph;
};

std::vector<Member> members_upto(int n, const std::function<bool(const Member&)>& keep) {
    std::vector<Member> out;
    for (const Descriptor& d : family_upto(n)) {
        Member m{d, build(d).graph};
        if (keep(m)) out.push_back(std::move(m));
    }
    return out;
}

bool no_separating_triangle(const PlaneGraph& g) { return separating_cycles(g, 3).empty(); }

Instance snapshot(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs,
                  std::string descriptor = {}) {
    Instance in = make_instance(g, phi.modulus());
    in.phi = phi;
    in.colors = cs;
    in.descriptor = std::move(descriptor);
    return in;
}

Counterexample counterexample(std::string note, Instance in) {
    Counterexample c;
    c.note = std::move(note);
    c.instances.push_back(std::move(in));
    return c;
}

// ------------------------------------------------------------- instances

/// Cap-sized with probability 1/2, otherwise uniform below the cap.
ColorSet sample_forbidden(Rng& rng, int cap) {
    if (cap <= 0) return {};
    const int size = rng.chance(1, 2) ? cap : rng.between(0, cap - 1);
    return random_subset(size, rng);
}

bool agrees(const Graph& g, const PhiAssignment& phi, Vertex a, Color ca, Vertex b, Color cb) {
    return !g.has_edge(a, b) || cb != tau(phi, a, ca, b);
}

/// Index of (c(vk), c(v1), c(v2)) in extendable_assignments with prefix vk v1 v2.
std::size_t triple_index(Color ck, Color c1, Color c2) { return static_cast<std::size_t>(ck + 5 * c1 + 25 * c2); }

bool proper_triple(const Graph& g, const PhiAssignment& phi, const PrincipalPath& p, Color ck, Color c1, Color c2) {
    return agrees(g, phi, p.v1, c1, p.vk, ck) && agrees(g, phi, p.v1, c1, p.v2, c2) &&
           agrees(g, phi, p.vk, ck, p.v2, c2);
}

/// Forbidden sets on outer positions [from, to] of g, at most `cap` each.
void forbid_outer(ColorSystem& cs, const PlaneGraph& g, int from, int to, Rng& rng, int cap = 2) {
    const auto& o = g.outer_cycle();
    for (int p = from; p <= to; ++p) cs.set_forbidden(o[static_cast<std::size_t>(p)], sample_forbidden(rng, cap));
}

/// A proper random coloring of vk v1 v2.
void precolor_triple(ColorSystem& cs, const PlaneGraph& g, const PhiAssignment& phi, Rng& rng) {
    const PrincipalPath p = principal_path(g);
    for (;;) {
        const Color ck = static_cast<Color>(rng.below(5));
        const Color c1 = static_cast<Color>(rng.below(5));
        const Color c2 = static_cast<Color>(rng.below(5));
        if (!proper_triple(g.graph(), phi, p, ck, c1, c2)) continue;
        cs.precolor(p.vk, ck);
        cs.precolor(p.v1, c1);
        cs.precolor(p.v2, c2);
        return;
    }
}

/// The first proper coloring of vk v1 v2 that does not extend, if any.
std::optional<std::array<Color, 3>> stuck_triple(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs) {
    const PrincipalPath p = principal_path(g);
    const std::array<Vertex, 3> prefix{p.vk, p.v1, p.v2};
    const auto ext = extendable_assignments(g.graph(), phi, cs, prefix);
    for (Color c2 = 0; c2 < 5; ++c2)
        for (Color c1 = 0; c1 < 5; ++c1)
            for (Color ck = 0; ck < 5; ++ck)
                if (proper_triple(g.graph(), phi, p, ck, c1, c2) && !ext[triple_index(ck, c1, c2)])
                    return std::array<Color, 3>{ck, c1, c2};
    return std::nullopt;
}

std::string triple_note(const std::array<Color, 3>& t) {
    return "c(vk)=" + std::to_string(t[0]) + " c(v1)=" + std::to_string(t[1]) + " c(v2)=" + std::to_string(t[2]);
}

/// Copy of g without edge {a, b} and phi restricted to it.
std::pair<Graph, PhiAssignment> without_edge(const Graph& g, const PhiAssignment& phi, Vertex a, Vertex b) {
    Graph h = g;
    h.remove_edge(a, b);
    PhiAssignment q(h, phi.modulus());
    for (const EdgeRecord& r : phi.records())
        if (h.has_edge(r.tail, r.head)) q.set(r.tail, r.head, r.value);
    return {std::move(h), std::move(q)};
}

// ------------------------------------------------------------- calculus

PlaneGraph triangle_graph() { return build(Descriptor::broken(3)).graph; }

}  // namespace

PlaneGraph two_inner_vertices_a(int k, int split) {
    if (split < 3 || split > k - 1) throw std::invalid_argument("shape a needs 3 <= i <= k-1");
    auto v = [](int j) { return static_cast<Vertex>(j - 1); };
    const Vertex u = k;
    const Vertex w = k + 1;
    std::vector<Triangle> faces;
    for (int j = 1; j < split; ++j) faces.push_back({v(j), v(j + 1), u});
    for (int j = split; j < k; ++j) faces.push_back({v(j), v(j + 1), w});
    faces.push_back({v(k), v(1), w});
    faces.push_back({v(1), u, w});
    faces.push_back({v(split), w, u});
    std::vector<Vertex> outer;
    for (int j = 1; j <= k; ++j) outer.push_back(v(j));
    return PlaneGraph::from_faces(k + 2, faces, outer);
}

PlaneGraph two_inner_vertices_b(int k, int split) {
    if (split < 4 || split > k - 1) throw std::invalid_argument("shape b needs 4 <= i <= k-1");
    auto v = [](int j) { return static_cast<Vertex>(j - 1); };
    const Vertex u = k;
    const Vertex w = k + 1;
    std::vector<Triangle> faces;
    for (int j = 2; j < split; ++j) faces.push_back({v(j), v(j + 1), u});
    for (int j = split; j < k; ++j) faces.push_back({v(j), v(j + 1), w});
    faces.push_back({v(k), v(1), w});
    faces.push_back({v(1), v(2), w});
    faces.push_back({v(2), u, w});
    faces.push_back({u, v(split), w});
    std::vector<Vertex> outer;
    for (int j = 1; j <= k; ++j) outer.push_back(v(j));
    return PlaneGraph::from_faces(k + 2, faces, outer);
}

CheckReport check_calculus(const CheckConfig& cfg) {
    CheckReport rep = start("calculus", cfg);
    const PlaneGraph k3 = triangle_graph();
    Outcome o;

    // tau is an involution across an edge, for single colors and for sets.
    for (int orient = 0; orient < 2; ++orient)
        for (Color value = 0; value < 5; ++value) {
            PhiAssignment phi(k3.graph());
            if (orient) phi.set(1, 0, value);
            else phi.set(0, 1, value);
            for (Color a = 0; a < 5; ++a) {
                ++o.tested;
                if (tau(phi, 1, tau(phi, 0, a, 1), 0) != a)
                    o.found.push_back(counterexample("tau round trip fails for alpha=" + std::to_string(a),
                                                     snapshot(k3, phi, ColorSystem(3))));
            }
            for (std::uint32_t bits = 0; bits < 32; ++bits) {
                ++o.tested;
                const ColorSet s(bits);
                if (tau_set(phi, 1, tau_set(phi, 0, s, 1), 0) != s)
                    o.found.push_back(counterexample("tau set round trip fails for " + to_string(s),
                                                     snapshot(k3, phi, ColorSystem(3))));
            }
        }

    // Around a triangle the composed tau agrees with the direct one for all
    // colors or for none, and for all exactly when phi sums to zero.
    const std::array<std::array<Vertex, 2>, 3> sides{{{0, 1}, {1, 2}, {2, 0}}};
    for (int orient = 0; orient < 8; ++orient)
        for (int code = 0; code < 125; ++code) {
            PhiAssignment phi(k3.graph());
            int rest = code;
            for (int s = 0; s < 3; ++s) {
                const auto [a, b] = sides[static_cast<std::size_t>(s)];
                const Color value = rest % 5;
                rest /= 5;
                if ((orient >> s) & 1) phi.set(b, a, value);
                else phi.set(a, b, value);
            }
            int hits = 0;
            for (Color a = 0; a < 5; ++a) hits += tau(phi, 1, tau(phi, 0, a, 1), 2) == tau(phi, 0, a, 2);
            ++o.tested;
            const bool consistent = triangle_consistent(k3.graph(), phi, 0, 1, 2);
            if ((hits != 0 && hits != 5) || (hits == 5) != consistent)
                o.found.push_back(counterexample("composed tau holds for " + std::to_string(hits) + " of 5 colors",
                                                 snapshot(k3, phi, ColorSystem(3))));
        }

    // Every inner face of a family member has a vertex on C - v1.
    for (const Descriptor& d : family_upto(cfg.n_max)) {
        ++o.tested;
        const PlaneGraph g = build(d).graph;
        if (!facial_triangle_property(g))
            o.found.push_back(counterexample("inner face avoids C - v1", snapshot(g, PhiAssignment(g.graph()),
                                                                                    ColorSystem(g.vertex_count()),
                                                                                    to_string(d))));
    }
    rep.instances_tested = o.tested;
    rep.counterexample_count = o.found.size();
    for (auto& c : o.found)
        if (rep.counterexamples.size() < kKeep) rep.counterexamples.push_back(std::move(c));
    return rep;
}

CheckReport check_prop1(const CheckConfig& cfg) {
    CheckReport rep = start("prop1", cfg);
    run_tasks(rep, static_cast<std::size_t>(cfg.instances), cfg.jobs, [&](std::size_t i, Outcome& o) {
        Rng rng = stream(cfg, "prop1", i);
        const int n = rng.between(3, cfg.n_max);
        const PlaneGraph g = random_near_triangulation(n, rng);
        const PhiAssignment phi = random_phi(g.graph(), rng, cfg.phi_mode);
        ColorSystem cs(n);
        for (Vertex v = 0; v < n; ++v)
            if (rng.chance(1, 3)) cs.set_forbidden(v, random_subset(rng.between(1, 3), rng));
        if (rng.chance(1, 4)) cs.precolor(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))),
                                          static_cast<Color>(rng.below(5)));
        const Vertex v0 = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        const Color alpha = static_cast<Color>(rng.below(5));
        const auto before = count_colorings(g, phi, cs);
        const auto after = count_colorings(g, shift_phi(phi, v0, alpha), shift_colors(cs, v0, alpha));
        ++o.tested;
        if (before != after)
            o.found.push_back(counterexample("shift at vertex " + std::to_string(v0) + " by " + std::to_string(alpha) +
                                                 " changes the count " + std::to_string(before) + " -> " +
                                                 std::to_string(after),
                                             snapshot(g, phi, cs)));
    });
    return rep;
}

CheckReport check_theorem2(const CheckConfig& cfg) {
    CheckReport rep = start("theorem2", cfg);
    run_tasks(rep, static_cast<std::size_t>(cfg.instances), cfg.jobs, [&](std::size_t i, Outcome& o) {
        Rng rng = stream(cfg, "theorem2", i);
        const int n = rng.between(3, cfg.n_max);
        const PlaneGraph g = random_near_triangulation(n, rng);
        const PhiAssignment phi = random_phi(g.graph(), rng, cfg.phi_mode);
        const auto& outer = g.outer_cycle();
        const std::size_t k = outer.size();
        const std::size_t s = rng.below(k);
        const Vertex a = outer[s];
        const Vertex b = outer[(s + 1) % k];
        ColorSystem cs(n);
        for (Vertex v : outer)
            if (v != a && v != b) cs.set_forbidden(v, sample_forbidden(rng, 2));
        const Color ca = static_cast<Color>(rng.below(5));
        Color cb;
        do cb = static_cast<Color>(rng.below(5));
        while (cb == tau(phi, a, ca, b));
        cs.precolor(a, ca);
        cs.precolor(b, cb);
        ++o.tested;
        std::string problem;
        try {
            const Coloring c = extend_two(g, phi, cs);
            if (!respects(g.graph(), phi, cs, c)) problem = "returned coloring violates the lists";
        } catch (const AlgorithmDefect& e) {
            problem = std::string("construction failed: ") + e.what();
        }
        if (problem.empty() && n <= 9 && !find_coloring(g.graph(), phi, cs)) problem = "brute force finds no coloring";
        if (!problem.empty()) o.found.push_back(counterexample(problem, snapshot(g, phi, cs)));
    });
    return rep;
}

CheckReport check_short_cycle(const CheckConfig& cfg) {
    CheckReport rep = start("shortcycle", cfg);
    std::vector<PlaneGraph> graphs;
    for (int k = 3; k <= 5; ++k) graphs.push_back(build(Descriptor::wheel(k)).graph);
    for (int gi = 0; gi < cfg.instances; ++gi) {
        Rng rng = stream(cfg, "shortcycle-graph", static_cast<std::size_t>(gi));
        for (;;) {
            PlaneGraph g = random_near_triangulation(rng.between(4, std::max(4, cfg.n_max)), rng);
            if (g.outer_length() <= 5 && !g.interior_vertices().empty()) {
                graphs.push_back(std::move(g));
                break;
            }
        }
    }
    const std::size_t samples = static_cast<std::size_t>(cfg.samples);
    run_tasks(rep, graphs.size() * samples, cfg.jobs, [&](std::size_t t, Outcome& o) {
        const PlaneGraph& g = graphs[t / samples];
        Rng rng = stream(cfg, "shortcycle", t);
        const PhiAssignment phi = random_phi(g.graph(), rng, t % samples == 0 ? PhiMode::Zero : cfg.phi_mode);
        const auto& outer = g.outer_cycle();
        const int k = g.outer_length();
        const auto interior = g.interior_vertices();
        std::vector<Edge> cycle_edges;
        for (const Edge& e : g.graph().edges())
            if (g.on_outer(e.u) && g.on_outer(e.v)) cycle_edges.push_back(e);
        int total = 1;
        for (int j = 0; j < k; ++j) total *= 5;
        for (int code = 0; code < total; ++code) {
            ColorSystem cs(g.vertex_count());
            int rest = code;
            for (Vertex v : outer) {
                cs.precolor(v, rest % 5);
                rest /= 5;
            }
            bool proper = true;
            for (const Edge& e : cycle_edges)
                proper = proper && *cs.precolored(e.v) != tau(phi, e.u, *cs.precolored(e.u), e.v);
            if (!proper) continue;
            ++o.tested;
            bool hub_expected = false;
            if (k == 5)
                for (Vertex v : interior) {
                    ColorSet hit;
                    int adjacent = 0;
                    for (Vertex x : outer)
                        if (g.graph().has_edge(x, v)) {
                            ++adjacent;
                            hit.insert(tau(phi, x, *cs.precolored(x), v));
                        }
                    hub_expected = hub_expected || (adjacent == 5 && hit == ColorSet::full(5));
                }
            const bool exists = find_coloring(g.graph(), phi, cs).has_value();
            std::string problem;
            try {
                const auto res = color_short_cycle(g, phi, cs);
                const bool hub = std::holds_alternative<HubException>(res);
                if (hub != hub_expected) problem = hub ? "hub reported without a full tau set" : "hub missed";
                else if (hub == exists) problem = hub ? "hub reported but a coloring exists" : "no hub yet no coloring exists";
                else if (!hub && !respects(g.graph(), phi, cs, std::get<Coloring>(res)))
                    problem = "returned coloring is not proper";
            } catch (const AlgorithmDefect& e) {
                problem = std::string("construction failed: ") + e.what();
            }
            if (!problem.empty()) {
                o.found.push_back(counterexample(problem, snapshot(g, phi, cs)));
                return;
            }
        }
    });
    return rep;
}

CheckReport check_theorem3(const CheckConfig& cfg) {
    CheckReport rep = start("theorem3", cfg);
    const auto& family = family_upto(cfg.n_max);
    run_tasks(rep, static_cast<std::size_t>(cfg.instances), cfg.jobs, [&](std::size_t i, Outcome& o) {
        Rng rng = stream(cfg, "theorem3", i);
        PlaneGraph g;
        std::string origin;
        const bool from_family = rng.chance(1, 2);
        if (from_family) {
            const Descriptor& d = family[rng.below(family.size())];
            g = build(d).graph;
            origin = to_string(d);
        } else {
            g = random_near_triangulation(rng.between(3, cfg.n_max), rng);
        }
        const PhiAssignment phi = random_phi(g.graph(), rng, cfg.phi_mode);
        ColorSystem cs(g.vertex_count());
        const int k = g.outer_length();
        if (from_family) {
            for (int p = 2; p <= k - 2; ++p) cs.set_forbidden(g.outer_cycle()[static_cast<std::size_t>(p)], random_subset(2, rng));
        } else {
            forbid_outer(cs, g, 2, k - 2, rng);
        }
        precolor_triple(cs, g, phi, rng);
        ++o.tested;
        const bool exists = find_coloring(g.graph(), phi, cs).has_value();
        std::string problem;
        try {
            const auto res = extend_three(g, phi, cs);
            if (const auto* c = std::get_if<Coloring>(&res)) {
                if (!respects(g.graph(), phi, cs, *c)) problem = "returned coloring violates the lists";
            } else {
                const auto& cert = std::get<ObstructionCertificate>(res);
                if (exists) problem = "certificate returned although a coloring exists";
                const auto alone = validate_certificate(cert);
                const auto embedded = validate_certificate(cert, g, phi, cs);
                if (!alone.ok) problem = "certificate rejected: " + alone.problem;
                else if (!embedded.ok) problem = "certificate does not embed: " + embedded.problem;
            }
        } catch (const AlgorithmDefect& e) {
            problem = std::string("no certificate: ") + e.what();
        } catch (const BudgetExceeded& e) {
            problem = e.what();
        }
        if (!problem.empty()) o.found.push_back(counterexample(problem, snapshot(g, phi, cs, origin)));
    });
    return rep;
}

CheckReport check_lemma1(const CheckConfig& cfg) {
    CheckReport rep = start("lemma1", cfg);
    // Control: the broken wheel on four vertices admits no common alpha.
    {
        const PlaneGraph bw4 = build(Descriptor::broken(4)).graph;
        const PhiAssignment phi(bw4.graph());
        ColorSystem cs(4);
        cs.set_forbidden(2, ColorSet::of(std::vector<Color>{0, 1}));
        ++rep.instances_tested;
        if (lemma1_alpha(bw4, phi, cs, false).kind != AlphaKind::None) {
            ++rep.counterexample_count;
            rep.counterexamples.push_back(counterexample("control (broken 4) has a common alpha",
                                                         snapshot(bw4, phi, cs, "(broken 4)")));
        }
    }
    const auto members = members_upto(cfg.n_max, [](const Member& m) { return is_multi_wheel(m.graph); });
    const std::size_t samples = static_cast<std::size_t>(cfg.samples);
    run_tasks(rep, members.size() * samples, cfg.jobs, [&](std::size_t t, Outcome& o) {
        const Member& m = members[t / samples];
        const PlaneGraph& g = m.graph;
        Rng rng = stream(cfg, "lemma1", t);
        const PhiAssignment phi = random_phi(g.graph(), rng, cfg.phi_mode);
        ColorSystem cs(g.vertex_count());
        forbid_outer(cs, g, 2, g.outer_length() - 2, rng);
        ++o.tested;
        const AlphaResult r = lemma1_alpha(g, phi, cs);
        if (r.kind == AlphaKind::None) {
            o.found.push_back(counterexample("non-extendable precolorings disagree on c(vk) - c(v2)",
                                             snapshot(g, phi, cs, to_string(m.descriptor))));
            return;
        }
        // With the principal edges removed every precoloring is allowed, which
        // covers every value phi could take on them at once.
        const PrincipalPath p = principal_path(g);
        auto [h, q] = without_edge(g.graph(), phi, p.v1, p.vk);
        auto [h2, q2] = without_edge(h, q, p.v1, p.v2);
        const std::array<Vertex, 3> prefix{p.vk, p.v1, p.v2};
        const auto ext = extendable_assignments(h2, q2, cs, prefix);
        std::optional<Color> common;
        bool ok = true;
        for (Color c2 = 0; c2 < 5; ++c2)
            for (Color c1 = 0; c1 < 5; ++c1)
                for (Color ck = 0; ck < 5; ++ck) {
                    if (!agrees(h2, q2, p.vk, ck, p.v2, c2) || ext[triple_index(ck, c1, c2)]) continue;
                    const Color diff = mod(ck - c2, 5);
                    if (common && *common != diff) ok = false;
                    common = diff;
                }
        if (!ok || (r.kind == AlphaKind::Value && common && *common != r.alpha))
            o.found.push_back(counterexample("alpha moves when phi changes on the principal edges",
                                             snapshot(g, phi, cs, to_string(m.descriptor))));
    });
    return rep;
}

CheckReport check_lemma2(const CheckConfig& cfg) {
    CheckReport rep = start("lemma2", cfg);
    const auto members = members_upto(cfg.n_max, [](const Member& m) { return no_separating_triangle(m.graph); });
    const std::size_t samples = static_cast<std::size_t>(cfg.samples);
    run_tasks(rep, members.size() * samples, cfg.jobs, [&](std::size_t t, Outcome& o) {
        const Member& m = members[t / samples];
        const PlaneGraph& g = m.graph;
        Rng rng = stream(cfg, "lemma2", t);
        const PhiAssignment phi = random_phi(g.graph(), rng, cfg.phi_mode);
        const PrincipalPath p = principal_path(g);
        ColorSystem cs(g.vertex_count());
        forbid_outer(cs, g, 2, g.outer_length() - 2, rng);
        const Color ck = static_cast<Color>(rng.below(5));
        const Color c1 = static_cast<Color>(rng.below(5));
        const Color c2 = static_cast<Color>(rng.below(5));
        if (!agrees(g.graph(), phi, p.v1, c1, p.vk, ck) || !agrees(g.graph(), phi, p.v1, c1, p.v2, c2)) {
            ++o.excluded;
            return;
        }
        cs.precolor(p.vk, ck);
        cs.precolor(p.v1, c1);
        cs.precolor(p.v2, c2);
        for (const Edge& e : g.graph().edges()) {
            const bool principal = (e.u == p.v1 || e.v == p.v1) && (e.u == p.vk || e.v == p.vk || e.u == p.v2 || e.v == p.v2);
            if (principal) continue;
            auto [h, q] = without_edge(g.graph(), phi, e.u, e.v);
            if (!agrees(h, q, p.vk, ck, p.v2, c2)) continue;
            ++o.tested;
            if (!find_coloring(h, q, cs))
                o.found.push_back(counterexample("deleting edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                                     " leaves no coloring",
                                                 snapshot(g, phi, cs, to_string(m.descriptor))));
        }
    });
    return rep;
}

namespace {

CheckReport check_two_inner(const CheckConfig& cfg, const std::string& property, bool shape_b) {
    CheckReport rep = start(property, cfg);
    std::vector<std::pair<PlaneGraph, std::string>> shapes;
    for (int k = 4; k + 2 <= cfg.n_max; ++k)
        for (int i = shape_b ? 4 : 3; i <= k - 1; ++i)
            shapes.emplace_back(shape_b ? two_inner_vertices_b(k, i) : two_inner_vertices_a(k, i),
                                "k=" + std::to_string(k) + " i=" + std::to_string(i));
    const std::size_t samples = static_cast<std::size_t>(cfg.samples);
    run_tasks(rep, shapes.size() * samples, cfg.jobs, [&](std::size_t t, Outcome& o) {
        const auto& [g, label] = shapes[t / samples];
        Rng rng = stream(cfg, property, t);
        const PhiAssignment phi = random_phi(g.graph(), rng, cfg.phi_mode);
        ColorSystem cs(g.vertex_count());
        forbid_outer(cs, g, 2, g.outer_length() - 2, rng);
        ++o.tested;
        if (auto stuck = stuck_triple(g, phi, cs)) {
            ColorSystem shown = cs;
            const PrincipalPath p = principal_path(g);
            shown.precolor(p.vk, (*stuck)[0]);
            shown.precolor(p.v1, (*stuck)[1]);
            shown.precolor(p.v2, (*stuck)[2]);
            o.found.push_back(counterexample(label + ": " + triple_note(*stuck) + " does not extend",
                                             snapshot(g, phi, shown)));
        }
    });
    return rep;
}

}  // namespace

CheckReport check_lemma3a(const CheckConfig& cfg) { return check_two_inner(cfg, "lemma3a", false); }
CheckReport check_lemma3b(const CheckConfig& cfg) { return check_two_inner(cfg, "lemma3b", true); }

CheckReport check_corollary1(const CheckConfig& cfg) {
    CheckReport rep = start("cor1", cfg);
    const auto members = members_upto(cfg.n_max, [](const Member& m) {
        const PlaneGraph& g = m.graph;
        const auto inner = g.interior_vertices();
        if (inner.size() < 2 || !no_separating_triangle(g) || !is_multi_wheel(g)) return false;
        const Vertex v2 = principal_path(g).v2;
        return std::all_of(inner.begin(), inner.end(), [&](Vertex u) { return g.graph().has_edge(u, v2); });
    });
    const std::size_t samples = static_cast<std::size_t>(cfg.samples);
    run_tasks(rep, members.size() * samples, cfg.jobs, [&](std::size_t t, Outcome& o) {
        const Member& m = members[t / samples];
        const PlaneGraph& g = m.graph;
        Rng rng = stream(cfg, "cor1", t);
        const PhiAssignment phi = random_phi(g.graph(), rng, cfg.phi_mode);
        ColorSystem cs(g.vertex_count());
        forbid_outer(cs, g, 2, g.outer_length() - 2, rng);
        ++o.tested;
        if (auto stuck = stuck_triple(g, phi, cs))
            o.found.push_back(counterexample(triple_note(*stuck) + " does not extend",
                                             snapshot(g, phi, cs, to_string(m.descriptor))));
    });
    if (members.empty()) rep.flags.push_back("no family member satisfies the hypotheses at this n_max");
    return rep;
}

CheckReport check_lemma4(const CheckConfig& cfg) {
    CheckReport rep = start("lemma4", cfg);
    rep.flags.push_back("c(vk) is drawn from the list of vk");
    const auto members = members_upto(cfg.n_max, [](const Member&) { return true; });
    const std::size_t samples = static_cast<std::size_t>(cfg.samples);
    run_tasks(rep, members.size() * samples, cfg.jobs, [&](std::size_t t, Outcome& o) {
        const Member& m = members[t / samples];
        const PlaneGraph& g = m.graph;
        const Graph& h = g.graph();
        Rng rng = stream(cfg, "lemma4", t);
        const PhiAssignment phi = random_phi(h, rng, cfg.phi_mode);
        ColorSystem cs(g.vertex_count());
        forbid_outer(cs, g, 2, g.outer_length() - 1, rng);
        const PrincipalPath p = principal_path(g);
        const std::array<Vertex, 3> prefix{p.vk, p.v1, p.v2};
        const auto ext = extendable_assignments(h, phi, cs, prefix);
        for (Color c2 = 0; c2 < 5; ++c2) {
            ++o.tested;
            bool found = false;
            for (Color ck : cs.available(p.vk).members()) {
                if (!agrees(h, phi, p.v2, c2, p.vk, ck)) continue;
                bool every = true;
                for (Color c1 = 0; c1 < 5 && every; ++c1)
                    if (agrees(h, phi, p.v2, c2, p.v1, c1) && agrees(h, phi, p.vk, ck, p.v1, c1))
                        every = ext[triple_index(ck, c1, c2)];
                found = found || every;
            }
            if (!found) {
                ColorSystem shown = cs;
                shown.precolor(p.v2, c2);
                o.found.push_back(counterexample("no color of vk works for every color of v1",
                                                 snapshot(g, phi, shown, to_string(m.descriptor))));
            }
        }
    });
    return rep;
}

CheckReport check_lemma5(const CheckConfig& cfg) {
    CheckReport rep = start("lemma5", cfg);
    rep.flags.push_back("caps: clean vertices at most 3 forbidden colors, other outer vertices at most 2");
    rep.flags.push_back("major vertices range over their lists");
    const auto& family = family_upto(cfg.n_max);
    run_tasks(rep, static_cast<std::size_t>(cfg.instances), cfg.jobs, [&](std::size_t i, Outcome& o) {
        Rng rng = stream(cfg, "lemma5", i);
        const int m = rng.between(1, 3);
        std::vector<Descriptor> parts;
        int budget = cfg.n_max + m - 1;
        for (int j = 0; j < m; ++j) {
            const int reserve = 3 * (m - j - 1);
            for (;;) {
                const Descriptor& d = family[rng.below(family.size())];
                if (d.vertex_count() <= budget - reserve) {
                    parts.push_back(d);
                    budget -= d.vertex_count();
                    break;
                }
            }
        }
        const WheelString ws = build_wheel_string(parts);
        const int n = ws.graph.vertex_count();
        const PhiAssignment phi = random_phi(ws.graph, rng, cfg.phi_mode);
        std::vector<int> cap(static_cast<std::size_t>(n), 0);
        for (std::size_t j = 0; j < ws.parts.size(); ++j)
            for (Vertex v : ws.parts[j].outer_cycle()) cap[static_cast<std::size_t>(ws.embedding[j][static_cast<std::size_t>(v)])] = 2;
        for (Vertex c : ws.clean) cap[static_cast<std::size_t>(c)] = 3;
        std::vector<ColorSet> forbidden(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) forbidden[static_cast<std::size_t>(v)] = sample_forbidden(rng, cap[static_cast<std::size_t>(v)]);

        // good[j][a][b]: part j with its ends colored a (its vk) and b (its v2)
        // extends for every admissible color of its major vertex.
        std::vector<Instance> shown;
        std::vector<std::array<std::array<bool, 5>, 5>> good(ws.parts.size());
        for (std::size_t j = 0; j < ws.parts.size(); ++j) {
            const PlaneGraph& part = ws.parts[j];
            const auto& emb = ws.embedding[j];
            const Graph& h = part.graph();
            PhiAssignment q(h);
            for (const Edge& e : h.edges())
                q.set(e.u, e.v, phi.along(emb[static_cast<std::size_t>(e.u)], emb[static_cast<std::size_t>(e.v)]));
            ColorSystem cs(part.vertex_count());
            for (Vertex v = 0; v < part.vertex_count(); ++v) cs.set_forbidden(v, forbidden[static_cast<std::size_t>(emb[static_cast<std::size_t>(v)])]);
            shown.push_back(snapshot(part, q, cs, to_string(parts[j])));
            const PrincipalPath p = principal_path(part);
            const std::array<Vertex, 3> prefix{p.vk, p.v1, p.v2};
            const auto ext = extendable_assignments(h, q, cs, prefix);
            for (Color a = 0; a < 5; ++a)
                for (Color b = 0; b < 5; ++b) {
                    bool ok = cs.available(p.vk).contains(a) && cs.available(p.v2).contains(b) && agrees(h, q, p.vk, a, p.v2, b);
                    for (Color c1 : cs.available(p.v1).members())
                        if (ok && agrees(h, q, p.vk, a, p.v1, c1) && agrees(h, q, p.v2, b, p.v1, c1))
                            ok = ext[triple_index(a, c1, b)];
                    good[j][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ok;
                }
        }
        // Chain: some color per clean/cut vertex with every part good.
        std::array<bool, 5> reach{true, true, true, true, true};
        for (std::size_t j = 0; j < good.size(); ++j) {
            std::array<bool, 5> next{};
            for (std::size_t a = 0; a < 5; ++a)
                for (std::size_t b = 0; b < 5; ++b) next[b] = next[b] || (reach[a] && good[j][a][b]);
            reach = next;
        }
        ++o.tested;
        if (std::none_of(reach.begin(), reach.end(), [](bool x) { return x; })) {
            Counterexample c;
            std::ostringstream note;
            note << "wheel string of " << m << " part(s) has no good coloring of its clean and cut vertices";
            c.note = note.str();
            c.instances = std::move(shown);
            o.found.push_back(std::move(c));
        }
    });
    return rep;
}

namespace {

/// Triangulations for the counting checks: `instances` stacked ones, then
/// as many random near-triangulations.
PlaneGraph counting_graph(const CheckConfig& cfg, const std::string& property, std::size_t gi) {
    Rng rng = stream(cfg, property + "-graph", gi);
    const int n = rng.between(3, cfg.n_max);
    return gi < static_cast<std::size_t>(cfg.instances) ? random_triangulation(n, rng) : random_near_triangulation(n, rng);
}

}  // namespace

CheckReport check_theorem4_bound(const CheckConfig& cfg) {
    CheckReport rep = start("theorem4", cfg);
    const std::size_t graphs = 2 * static_cast<std::size_t>(cfg.instances);
    const std::size_t samples = static_cast<std::size_t>(cfg.samples);
    run_tasks(rep, graphs * samples, cfg.jobs, [&](std::size_t t, Outcome& o) {
        const PlaneGraph g = counting_graph(cfg, "theorem4", t / samples);
        Rng rng = stream(cfg, "theorem4", t);
        const PhiAssignment phi = random_phi(g.graph(), rng, cfg.phi_mode);
        const int k = g.outer_length();
        ColorSystem cs(g.vertex_count());
        const bool three = rng.chance(1, 2);
        if (three) {
            forbid_outer(cs, g, 2, k - 2, rng);
            precolor_triple(cs, g, phi, rng);
        } else {
            forbid_outer(cs, g, 2, k - 1, rng);
            const PrincipalPath p = principal_path(g);
            const Color c1 = static_cast<Color>(rng.below(5));
            Color c2;
            do c2 = static_cast<Color>(rng.below(5));
            while (c2 == tau(phi, p.v1, c1, p.v2));
            cs.precolor(p.v1, c1);
            cs.precolor(p.v2, c2);
        }
        if (counting_exception(g, phi, cs)) {
            ++o.excluded;
            return;
        }
        int n = 0;
        int r = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (cs.is_precolored(v)) continue;
            ++n;
            r += cs.available(v).size() == 3;
        }
        const double bound = std::exp2(n / 9.0 - r / 3.0);
        SearchOptions opt;
        opt.cap = static_cast<std::uint64_t>(std::ceil(bound));
        const auto count = count_colorings(g, phi, cs, opt);
        ++o.tested;
        if (count >= 1 && static_cast<double>(count) < bound)
            o.found.push_back(counterexample("only " + std::to_string(count) + " colorings, n=" + std::to_string(n) +
                                                 " r=" + std::to_string(r),
                                             snapshot(g, phi, cs)));
    });
    return rep;
}

CheckReport check_corollary(const CheckConfig& cfg) {
    CheckReport rep = start("corollary", cfg);
    const std::size_t graphs = 2 * static_cast<std::size_t>(cfg.instances);
    const std::size_t samples = static_cast<std::size_t>(cfg.samples);
    run_tasks(rep, graphs * samples, cfg.jobs, [&](std::size_t t, Outcome& o) {
        const PlaneGraph g = counting_graph(cfg, "corollary", t / samples);
        Rng rng = stream(cfg, "corollary", t);
        const int n = g.vertex_count();
        const ColorSystem cs(n);
        const double bound = std::exp2(n / 9.0);
        SearchOptions opt;
        opt.cap = static_cast<std::uint64_t>(std::ceil(bound));
        // The triangulation itself, then a planar subgraph of it.
        const PhiAssignment phi = random_phi(g.graph(), rng, cfg.phi_mode);
        ++o.tested;
        const auto count = count_colorings(g, phi, cs, opt);
        if (static_cast<double>(count) < bound)
            o.found.push_back(counterexample("only " + std::to_string(count) + " colorings", snapshot(g, phi, cs)));
        Graph sub = g.graph();
        for (const Edge& e : g.graph().edges())
            if (rng.chance(1, 4)) sub.remove_edge(e.u, e.v);
        PhiAssignment q(sub);
        for (const EdgeRecord& rec : phi.records())
            if (sub.has_edge(rec.tail, rec.head)) q.set(rec.tail, rec.head, rec.value);
        ++o.tested;
        const auto sub_count = count_colorings(sub, q, cs, opt);
        if (static_cast<double>(sub_count) < bound) {
            std::ostringstream note;
            note << "subgraph keeping " << sub.edge_count() << " edges has only " << sub_count << " colorings";
            o.found.push_back(counterexample(note.str(), snapshot(g, phi, cs)));
        }
    });
    return rep;
}

// ----------------------------------------------------------------- driver

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids{"calculus", "prop1",  "theorem2", "shortcycle", "theorem3",
                                              "lemma1",   "lemma2", "lemma3a",  "lemma3b",    "cor1",
                                              "lemma4",   "lemma5", "theorem4", "corollary"};
    return ids;
}

CheckConfig default_config(const std::string& id) {
    struct Scale {
        int n_max, samples, instances;
    };
    static const std::map<std::string, Scale> scales{
        {"calculus", {12, 1, 1}},    {"prop1", {8, 1, 200}},      {"theorem2", {10, 1, 1000}},
        {"shortcycle", {9, 50, 40}}, {"theorem3", {9, 1, 20000}},  {"lemma1", {10, 100, 1}},
        {"lemma2", {12, 100, 1}},     {"lemma3a", {14, 100, 1}},   {"lemma3b", {14, 100, 1}},
        {"cor1", {12, 100, 1}},      {"lemma4", {10, 100, 1}},    {"lemma5", {12, 1, 3000}},
        {"theorem4", {12, 50, 100}}, {"corollary", {12, 50, 100}},
    };
    auto it = scales.find(id);
    if (it == scales.end()) throw std::invalid_argument("unknown property id: " + id);
    CheckConfig cfg;
    cfg.n_max = it->second.n_max;
    cfg.samples = it->second.samples;
    cfg.instances = it->second.instances;
    return cfg;
}

CheckReport run_check(const std::string& id, const CheckConfig& cfg) {
    static const std::map<std::string, CheckReport (*)(const CheckConfig&)> table{
        {"calculus", check_calculus},   {"prop1", check_prop1},           {"theorem2", check_theorem2},
        {"shortcycle", check_short_cycle}, {"theorem3", check_theorem3},  {"lemma1", check_lemma1},
        {"lemma2", check_lemma2},       {"lemma3a", check_lemma3a},       {"lemma3b", check_lemma3b},
        {"cor1", check_corollary1},     {"lemma4", check_lemma4},         {"lemma5", check_lemma5},
        {"theorem4", check_theorem4_bound}, {"corollary", check_corollary},
    };
    auto it = table.find(id);
    if (it == table.end()) throw std::invalid_argument("unknown property id: " + id);
    if (cfg.n_max < 3 || cfg.n_max > kMaxN) throw std::invalid_argument("n_max must lie in 3..14");
    if (cfg.samples < 1 || cfg.instances < 1 || cfg.jobs < 1)
        throw std::invalid_argument("samples, instances and jobs must be positive");

    const auto wall = std::chrono::system_clock::now();
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport rep = it->second(cfg);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::time_t stamp = std::chrono::system_clock::to_time_t(wall);
    std::tm utc{};
    gmtime_r(&stamp, &utc);
    std::ostringstream when;
    when << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
    rep.started = when.str();
    return rep;
}

std::string report_body(const CheckReport& rep) {
    std::ostringstream out;
    const CheckConfig& c = rep.config;
    out << "property: " << rep.property << '\n'
        << "seed: " << c.seed << '\n'
        << "n_max: " << c.n_max << '\n'
        << "samples: " << c.samples << '\n'
        << "instances: " << c.instances << '\n'
        << "tested: " << rep.instances_tested << '\n'
        << "excluded: " << rep.excluded << '\n'
        << "counterexamples: " << rep.counterexample_count << '\n';
    for (std::size_t i = 0; i < rep.counterexamples.size(); ++i) {
        const Counterexample& cx = rep.counterexamples[i];
        out << "counterexample " << i + 1 << ": " << cx.note << '\n';
        for (const Instance& in : cx.instances) {
            out << "begin gcg\n";
            write_gcg(out, in);
            out << "end gcg\n";
        }
    }
    if (rep.passed()) out << "PASS\n";
    else out << "FAIL " << rep.counterexample_count << '\n';
    return out.str();
}

void write_report(std::ostream& out, const CheckReport& rep) {
    out << "# property check report\n"
        << "# started: " << rep.started << '\n'
        << "# wall-clock: " << std::fixed << std::setprecision(3) << rep.wall_seconds << "s\n"
        << "# jobs: " << rep.config.jobs << '\n';
    for (const std::string& f : rep.flags) out << "# flag: " << f << '\n';
    out << report_body(rep);
}

}  // namespace z5
