#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "z5/solver.hpp"

namespace z5 {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    const std::uint64_t s = a + b < a ? UINT64_MAX : a + b;
    return cap && s > cap ? cap : s;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    std::uint64_t p = 0;
    if (a != 0 && b > UINT64_MAX / a) p = UINT64_MAX;
    else p = a * b;
    return cap && p > cap ? cap : p;
}

/// Backtracking over a fixed vertex order with forward checking on bitmask
/// domains. Only the vertices in `subset` take part.
class Search {
public:
    Search(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs, std::span<const Vertex> subset,
           std::span<const Vertex> priority)
        : m_(phi.modulus()), n_(g.vertex_count()) {
        std::vector<char> member(static_cast<std::size_t>(n_), 0);
        for (Vertex v : subset) member[static_cast<std::size_t>(v)] = 1;
        std::vector<char> placed(static_cast<std::size_t>(n_), 0);
        auto place = [&](Vertex v) {
            if (!member[static_cast<std::size_t>(v)] || placed[static_cast<std::size_t>(v)]) return;
            placed[static_cast<std::size_t>(v)] = 1;
            order_.push_back(v);
        };
        for (Vertex v : subset)
            if (cs.is_precolored(v)) place(v);
        for (Vertex v : priority)
            if (v >= 0 && v < n_) place(v);
        // Then greedily the vertex with most placed neighbours, ties by degree, then label.
        std::vector<int> placed_nbrs(static_cast<std::size_t>(n_), 0);
        for (Vertex v : order_)
            for (Vertex u : g.neighbors(v)) ++placed_nbrs[static_cast<std::size_t>(u)];
        while (order_.size() < subset.size()) {
            Vertex best = -1;
            for (Vertex v : subset) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                if (best < 0) {
                    best = v;
                    continue;
                }
                const auto key = [&](Vertex x) {
                    return std::pair{placed_nbrs[static_cast<std::size_t>(x)], g.degree(x)};
                };
                if (key(v) > key(best)) best = v;
            }
            place(best);
            for (Vertex u : g.neighbors(best)) ++placed_nbrs[static_cast<std::size_t>(u)];
        }

        std::vector<int> pos(static_cast<std::size_t>(n_), -1);
        for (std::size_t i = 0; i < order_.size(); ++i) pos[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
        forward_.resize(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) {
            const Vertex v = order_[i];
            for (Vertex u : g.neighbors(v)) {
                const int pu = pos[static_cast<std::size_t>(u)];
                if (pu > static_cast<int>(i)) forward_[i].push_back({pu, phi.along(v, u)});
            }
        }
        initial_.resize(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) initial_[i] = cs.available(order_[i]).bits();
    }

    const std::vector<Vertex>& order() const { return order_; }
    std::size_t size() const { return order_.size(); }
    std::vector<std::uint32_t> initial() const { return initial_; }

    /// Removes the colors forbidden by color c at position i from later domains.
    /// Returns false on a wipe-out; `undo` receives (position, old domain).
    bool assign(std::vector<std::uint32_t>& dom, std::size_t i, Color c,
                std::vector<std::pair<int, std::uint32_t>>& undo) const {
        for (const auto& [p, off] : forward_[i]) {
            const std::uint32_t bit = std::uint32_t{1} << ((c + off) % m_);
            std::uint32_t& d = dom[static_cast<std::size_t>(p)];
            if (d & bit) {
                undo.emplace_back(p, d);
                d &= ~bit;
                if (d == 0) return false;
            }
        }
        return true;
    }

    static void rollback(std::vector<std::uint32_t>& dom, std::vector<std::pair<int, std::uint32_t>>& undo,
                         std::size_t mark) {
        while (undo.size() > mark) {
            dom[static_cast<std::size_t>(undo.back().first)] = undo.back().second;
            undo.pop_back();
        }
    }

    std::uint64_t count_from(std::vector<std::uint32_t>& dom, std::size_t i, std::uint64_t cap,
                             std::vector<std::pair<int, std::uint32_t>>& undo, std::uint64_t& nodes) const {
        ++nodes;
        if (i == order_.size()) return 1;
        if (i + 1 == order_.size()) {
            const std::uint64_t c = static_cast<std::uint64_t>(std::popcount(dom[i]));
            return cap && c > cap ? cap : c;
        }
        std::uint64_t total = 0;
        for (std::uint32_t bits = dom[i]; bits; bits &= bits - 1) {
            const Color c = std::countr_zero(bits);
            const std::size_t mark = undo.size();
            const std::uint32_t saved = dom[i];
            dom[i] = std::uint32_t{1} << c;
            if (assign(dom, i, c, undo)) total = saturating_add(total, count_from(dom, i + 1, cap ? cap - total : 0, undo, nodes), cap);
            rollback(dom, undo, mark);
            dom[i] = saved;
            if (cap && total >= cap) return cap;
        }
        return total;
    }

    /// Depth-first visit of complete assignments; returns false once stopped.
    bool visit_from(std::vector<std::uint32_t>& dom, std::size_t i, std::vector<std::pair<int, std::uint32_t>>& undo,
                    const std::function<bool(const std::vector<std::uint32_t>&)>& leaf) const {
        if (i == order_.size()) return leaf(dom);
        for (std::uint32_t bits = dom[i]; bits; bits &= bits - 1) {
            const Color c = std::countr_zero(bits);
            const std::size_t mark = undo.size();
            const std::uint32_t saved = dom[i];
            dom[i] = std::uint32_t{1} << c;
            bool go_on = true;
            if (assign(dom, i, c, undo)) go_on = visit_from(dom, i + 1, undo, leaf);
            rollback(dom, undo, mark);
            dom[i] = saved;
            if (!go_on) return false;
        }
        return true;
    }

    /// Propagates the singleton domains of positions [0, upto) in order.
    bool propagate_prefix(std::vector<std::uint32_t>& dom, std::size_t upto,
                          std::vector<std::pair<int, std::uint32_t>>& undo) const {
        for (std::size_t i = 0; i < upto; ++i) {
            if (std::popcount(dom[i]) != 1) return true;
            if (!assign(dom, i, std::countr_zero(dom[i]), undo)) return false;
        }
        return true;
    }

private:
    int m_;
    int n_;
    std::vector<Vertex> order_;
    std::vector<std::vector<std::pair<int, Color>>> forward_;
    std::vector<std::uint32_t> initial_;
};

bool lists_fit(const ColorSystem& cs, const PhiAssignment& phi, const Graph& g) {
    return cs.vertex_count() == g.vertex_count() && phi.vertex_count() == g.vertex_count() &&
           cs.modulus() == phi.modulus();
}

void check_inputs(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs) {
    if (!lists_fit(cs, phi, g)) throw std::invalid_argument("graph, phi and color system disagree in size or modulus");
}

std::uint64_t count_component(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs,
                              std::span<const Vertex> comp, const SearchOptions& opt) {
    const Search s(g, phi, cs, comp, opt.priority);
    auto dom = s.initial();
    for (auto d : dom)
        if (d == 0) return 0;
    std::vector<std::pair<int, std::uint32_t>> undo;
    // Singleton prefix (precolored vertices) is one branch; split below it.
    std::size_t split = 0;
    while (split < s.size() && std::popcount(dom[split]) == 1) {
        if (!s.assign(dom, split, std::countr_zero(dom[split]), undo)) return 0;
        ++split;
    }
    if (split == s.size()) return 1;
    std::vector<Color> firsts;
    for (std::uint32_t bits = dom[split]; bits; bits &= bits - 1) firsts.push_back(std::countr_zero(bits));
    std::vector<std::uint64_t> results(firsts.size(), 0);
    auto run_task = [&](std::size_t t) {
        auto local = dom;
        std::vector<std::pair<int, std::uint32_t>> local_undo;
        std::uint64_t nodes = 0;
        local[split] = std::uint32_t{1} << firsts[t];
        if (!s.assign(local, split, firsts[t], local_undo)) return;
        results[t] = s.count_from(local, split + 1, opt.cap, local_undo, nodes);
    };
    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(firsts.size())));
    if (jobs == 1) {
        for (std::size_t t = 0; t < firsts.size(); ++t) run_task(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t t = next++; t < firsts.size(); t = next++) run_task(t);
            });
        for (auto& th : pool) th.join();
    }
    std::uint64_t total = 0;
    for (std::uint64_t r : results) total = saturating_add(total, r, opt.cap);
    return total;
}

}  // namespace

std::uint64_t count_colorings(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs,
                              const SearchOptions& opt) {
    check_inputs(g, phi, cs);
    std::uint64_t total = 1;
    for (const auto& comp : g.components()) {
        const std::uint64_t c = count_component(g, phi, cs, comp, opt);
        if (c == 0) return 0;
        total = saturating_mul(total, c, opt.cap);
    }
    return total;
}

std::uint64_t count_colorings(const PlaneGraph& g, const PhiAssignment& phi, const ColorSystem& cs,
                              const SearchOptions& opt) {
    SearchOptions o = opt;
    if (o.priority.empty()) o.priority = g.outer_cycle();
    return count_colorings(g.graph(), phi, cs, o);
}

void for_each_coloring(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs,
                       const std::function<bool(const Coloring&)>& visit, const SearchOptions& opt) {
    check_inputs(g, phi, cs);
    std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    const Search s(g, phi, cs, all, opt.priority);
    auto dom = s.initial();
    for (auto d : dom)
        if (d == 0) return;
    std::vector<std::pair<int, std::uint32_t>> undo;
    Coloring c(static_cast<std::size_t>(g.vertex_count()), 0);
    s.visit_from(dom, 0, undo, [&](const std::vector<std::uint32_t>& leaf) {
        for (std::size_t i = 0; i < s.size(); ++i) c[static_cast<std::size_t>(s.order()[i])] = std::countr_zero(leaf[i]);
        return visit(c);
    });
}

std::vector<Coloring> enumerate_colorings(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs,
                                          std::size_t limit, const SearchOptions& opt) {
    std::vector<Coloring> out;
    if (limit == 0) return out;
    for_each_coloring(
        g, phi, cs,
        [&](const Coloring& c) {
            out.push_back(c);
            return out.size() < limit;
        },
        opt);
    return out;
}

std::optional<Coloring> find_coloring(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs,
                                      const SearchOptions& opt) {
    std::optional<Coloring> found;
    for_each_coloring(
        g, phi, cs,
        [&](const Coloring& c) {
            found = c;
            return false;
        },
        opt);
    return found;
}

std::vector<bool> extendable_assignments(const Graph& g, const PhiAssignment& phi, const ColorSystem& cs,
                                         std::span<const Vertex> prefix) {
    check_inputs(g, phi, cs);
    const int m = phi.modulus();
    std::size_t total = 1;
    for (std::size_t i = 0; i < prefix.size(); ++i) total *= static_cast<std::size_t>(m);
    std::vector<bool> out(total, false);
    for (Vertex v : prefix)
        if (cs.is_precolored(v)) throw std::invalid_argument("extendable_assignments: prefix vertex is precolored");

    // The prefix must lead the order, so the free vertices are searched with it first.
    std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    ColorSystem relaxed = cs;
    const std::vector<Vertex> priority(prefix.begin(), prefix.end());
    const Search s(g, phi, relaxed, all, priority);
    // Precolored vertices come first, then the prefix.
    std::size_t first = 0;
    while (first < s.size() && cs.is_precolored(s.order()[first])) ++first;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (s.order()[first + i] != prefix[i]) throw std::logic_error("extendable_assignments: order mismatch");

    auto dom = s.initial();
    for (auto d : dom)
        if (d == 0) return out;
    std::vector<std::pair<int, std::uint32_t>> undo;
    if (!s.propagate_prefix(dom, first, undo)) return out;

    std::vector<Color> chosen(prefix.size(), 0);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == prefix.size()) {
            bool found = false;
            auto copy = dom;
            std::vector<std::pair<int, std::uint32_t>> u2;
            s.visit_from(copy, first + prefix.size(), u2, [&](const std::vector<std::uint32_t>&) {
                found = true;
                return false;
            });
            if (found) {
                std::size_t index = 0;
                for (std::size_t t = prefix.size(); t-- > 0;) index = index * static_cast<std::size_t>(m) + static_cast<std::size_t>(chosen[t]);
                out[index] = true;
            }
            return;
        }
        const std::size_t p = first + i;
        for (std::uint32_t bits = dom[p]; bits; bits &= bits - 1) {
            const Color c = std::countr_zero(bits);
            const std::size_t mark = undo.size();
            const std::uint32_t saved = dom[p];
            dom[p] = std::uint32_t{1} << c;
            chosen[i] = c;
            if (s.assign(dom, p, c, undo)) walk(i + 1);
            Search::rollback(dom, undo, mark);
            dom[p] = saved;
        }
    };
    walk(0);
    return out;
}

}  // namespace z5
