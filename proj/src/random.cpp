#include "z5/random.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace z5 {

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
}

Rng Rng::derive(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
    // FNV-1a over the tag, then mixed with seed and index.
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    Rng mix(seed ^ (h * 0x9E3779B97F4A7C15ULL));
    const std::uint64_t a = mix.next();
    Rng mix2(a ^ (index * 0xD1B54A32D192ED03ULL + 0x632BE59BD9B4E019ULL));
    return Rng(mix2.next());
}

PhiAssignment random_phi(const Graph& g, Rng& rng, PhiMode mode, int modulus) {
    PhiAssignment phi(g, modulus);
    for (const Edge& e : g.edges()) {
        const bool forward = rng.chance(1, 2);
        Color value = 0;
        switch (mode) {
            case PhiMode::Uniform: value = static_cast<Color>(rng.below(static_cast<std::uint64_t>(modulus))); break;
            case PhiMode::Zero: break;
            case PhiMode::Sparse:
                if (rng.chance(1, 4)) value = 1 + static_cast<Color>(rng.below(static_cast<std::uint64_t>(modulus - 1)));
                break;
        }
        if (forward) phi.set(e.u, e.v, value);
        else phi.set(e.v, e.u, value);
    }
    return phi;
}

PlaneGraph random_triangulation(int n, Rng& rng) {
    if (n < 3) throw std::invalid_argument("random_triangulation needs n >= 3");
    std::vector<Triangle> faces{{0, 1, 2}};
    for (Vertex v = 3; v < n; ++v) {
        const std::size_t f = static_cast<std::size_t>(rng.below(faces.size()));
        const Triangle t = faces[f];
        faces[f] = {t[0], t[1], v};
        faces.push_back({t[1], t[2], v});
        faces.push_back({t[2], t[0], v});
    }
    return PlaneGraph::from_faces(n, faces, {0, 1, 2});
}

PlaneGraph random_triangulation(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_triangulation(n, rng);
}

namespace {

/// Index of the face holding dart a->b, or faces.size().
std::size_t face_with(const std::vector<Triangle>& faces, Vertex a, Vertex b) {
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t r = 0; r < 3; ++r)
            if (faces[i][r] == a && faces[i][(r + 1) % 3] == b) return i;
    return faces.size();
}

Vertex apex(const Triangle& t, Vertex a, Vertex b) {
    for (Vertex x : t)
        if (x != a && x != b) return x;
    return -1;
}

}  // namespace

PlaneGraph random_near_triangulation(int n, Rng& rng) {
    if (n < 3) throw std::invalid_argument("random_near_triangulation needs n >= 3");
    std::vector<Triangle> faces{{0, 1, 2}};
    std::vector<Vertex> outer{0, 1, 2};
    std::set<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    for (Vertex v = 3; v < n; ++v) {
        const auto op = rng.below(3);
        if (op == 0) {
            const std::size_t f = static_cast<std::size_t>(rng.below(faces.size()));
            const Triangle t = faces[f];
            faces[f] = {t[0], t[1], v};
            faces.push_back({t[1], t[2], v});
            faces.push_back({t[2], t[0], v});
            for (Vertex x : t) edges.insert({x, v});
            continue;
        }
        const std::size_t i = static_cast<std::size_t>(rng.below(outer.size()));
        const Vertex a = outer[i];
        const Vertex b = outer[(i + 1) % outer.size()];
        if (op == 1) {
            // Ear on the outer edge a b; a b becomes a chord.
            faces.push_back({a, v, b});
            edges.insert({a, v});
            edges.insert({b, v});
        } else {
            // Subdivide a b by v and join v to the apex of its face.
            const std::size_t f = face_with(faces, a, b);
            const Vertex z = apex(faces[f], a, b);
            faces[f] = {a, v, z};
            faces.push_back({v, b, z});
            edges.erase({a, b});
            for (Vertex x : {a, b, z}) edges.insert({x, v});
        }
        outer.insert(outer.begin() + static_cast<std::ptrdiff_t>(i) + 1, v);
    }
    // Flips of inner edges shared by two faces.
    const int flips = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    for (int t = 0; t < flips; ++t) {
        const std::size_t f = static_cast<std::size_t>(rng.below(faces.size()));
        const std::size_t r = static_cast<std::size_t>(rng.below(3));
        const Vertex a = faces[f][r];
        const Vertex b = faces[f][(r + 1) % 3];
        const std::size_t g = face_with(faces, b, a);
        if (g == faces.size()) continue;
        const Vertex c = apex(faces[f], a, b);
        const Vertex d = apex(faces[g], a, b);
        if (edges.count({c, d})) continue;
        // faces (a, b, c) and (b, a, d) become (c, d, b) and (d, c, a).
        faces[f] = {c, d, b};
        faces[g] = {d, c, a};
        edges.erase({a, b});
        edges.insert({c, d});
    }
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.below(i))]);
    for (Triangle& t : faces)
        for (Vertex& x : t) x = perm[static_cast<std::size_t>(x)];
    for (Vertex& x : outer) x = perm[static_cast<std::size_t>(x)];
    std::rotate(outer.begin(), outer.begin() + static_cast<std::ptrdiff_t>(rng.below(outer.size())), outer.end());
    return PlaneGraph::from_faces(n, faces, std::move(outer));
}

ColorSet random_subset(int size, Rng& rng, int modulus) {
    std::vector<Color> all(static_cast<std::size_t>(modulus));
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[static_cast<std::size_t>(rng.below(i))]);
    ColorSet s;
    for (int i = 0; i < size; ++i) s.insert(all[static_cast<std::size_t>(i)]);
    return s;
}

}  // namespace z5
