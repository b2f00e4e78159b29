#include "z5/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "z5/disk.hpp"

namespace z5 {

Descriptor Descriptor::broken(int k) {
    Descriptor d;
    d.kind = FamilyKind::Broken;
    d.size = k;
    return d;
}

Descriptor Descriptor::wheel(int k) {
    Descriptor d;
    d.kind = FamilyKind::Wheel;
    d.size = k;
    return d;
}

Descriptor Descriptor::glue(Descriptor left, Descriptor right) {
    Descriptor d;
    d.kind = FamilyKind::Glue;
    d.size = 0;
    d.parts = {std::move(left), std::move(right)};
    return d;
}

Descriptor Descriptor::insert(Descriptor base, int triangle, int subdivisions) {
    Descriptor d;
    d.kind = FamilyKind::Insert;
    d.size = 0;
    d.triangle = triangle;
    d.subdivisions = subdivisions;
    d.parts = {std::move(base)};
    return d;
}

Descriptor Descriptor::string(std::vector<Descriptor> parts) {
    Descriptor d;
    d.kind = FamilyKind::String;
    d.size = 0;
    d.parts = std::move(parts);
    return d;
}

int Descriptor::vertex_count() const {
    switch (kind) {
        case FamilyKind::Broken: return size;
        case FamilyKind::Wheel: return size + 1;
        case FamilyKind::Glue: return parts[0].vertex_count() + parts[1].vertex_count() - 2;
        case FamilyKind::Insert: return parts[0].vertex_count() + subdivisions + 1;
        case FamilyKind::String: {
            int n = 0;
            for (const Descriptor& p : parts) n += p.vertex_count();
            return n - static_cast<int>(parts.size()) + 1;
        }
    }
    return 0;
}

int Descriptor::outer_length() const {
    switch (kind) {
        case FamilyKind::Broken:
        case FamilyKind::Wheel: return size;
        case FamilyKind::Glue: return parts[0].outer_length() + parts[1].outer_length() - 2;
        case FamilyKind::Insert: return parts[0].outer_length() + subdivisions;
        case FamilyKind::String: return 0;
    }
    return 0;
}

std::string to_string(const Descriptor& d) {
    switch (d.kind) {
        case FamilyKind::Broken: return "(broken " + std::to_string(d.size) + ")";
        case FamilyKind::Wheel: return "(wheel " + std::to_string(d.size) + ")";
        case FamilyKind::Glue: return "(glue " + to_string(d.parts[0]) + " " + to_string(d.parts[1]) + ")";
        case FamilyKind::Insert:
            return "(insert " + to_string(d.parts[0]) + " t" + std::to_string(d.triangle) +
                   " j=" + std::to_string(d.subdivisions) + ")";
        case FamilyKind::String: {
            std::string out = "(string";
            for (const Descriptor& p : d.parts) out += " " + to_string(p);
            return out + ")";
        }
    }
    return {};
}

namespace {

class SexpReader {
public:
    explicit SexpReader(const std::string& text) : text_(text) {}

    Descriptor read_all() {
        Descriptor d = read();
        skip_space();
        if (pos_ != text_.size()) fail("trailing text");
        return d;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("descriptor: " + what + " at offset " + std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_close() {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == ')';
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string atom() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
               text_[pos_] != ')')
            ++pos_;
        if (start == pos_) fail("expected a word");
        return text_.substr(start, pos_ - start);
    }

    int number(const std::string& word) const {
        if (word.empty() || word.size() > 6 ||
            !std::all_of(word.begin(), word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            fail("expected a number, got '" + word + "'");
        return std::stoi(word);
    }

    Descriptor read() {
        expect('(');
        const std::string head = atom();
        Descriptor d;
        if (head == "broken" || head == "wheel") {
            const int k = number(atom());
            if (k < 3) fail("size below 3");
            d = head == "broken" ? Descriptor::broken(k) : Descriptor::wheel(k);
        } else if (head == "glue") {
            Descriptor left = read();
            Descriptor right = read();
            d = Descriptor::glue(std::move(left), std::move(right));
        } else if (head == "insert") {
            Descriptor base = read();
            const std::string t = atom();
            if (t.size() < 2 || t[0] != 't') fail("expected t<i>");
            const std::string j = atom();
            if (j.size() < 3 || j.compare(0, 2, "j=") != 0) fail("expected j=<n>");
            d = Descriptor::insert(std::move(base), number(t.substr(1)), number(j.substr(2)));
        } else if (head == "string") {
            std::vector<Descriptor> parts;
            while (!peek_close()) parts.push_back(read());
            if (parts.empty()) fail("empty string");
            d = Descriptor::string(std::move(parts));
        } else {
            fail("unknown constructor '" + head + "'");
        }
        expect(')');
        return d;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Descriptor parse_descriptor(const std::string& text) { return SexpReader(text).read_all(); }

bool describes_multi_wheel(const Descriptor& d) {
    switch (d.kind) {
        case FamilyKind::Wheel: return true;
        case FamilyKind::Insert: return describes_multi_wheel(d.parts[0]);
        default: return false;
    }
}

PrincipalPath principal_path(const PlaneGraph& g) {
    const auto& o = g.outer_cycle();
    if (o.size() < 3) throw std::invalid_argument("principal path needs an outer cycle");
    return {o.back(), o[0], o[1]};
}

namespace {

/// Canonically numbered member: outer cycle 0..k-1, interior k..n-1.
struct Layout {
    int n = 0;
    int k = 0;
    std::vector<Triangle> faces;

    PlaneGraph graph() const {
        std::vector<Vertex> outer(static_cast<std::size_t>(k));
        std::iota(outer.begin(), outer.end(), 0);
        return PlaneGraph::from_faces(n, faces, std::move(outer));
    }
};

Layout broken_layout(int k) {
    if (k < 3) throw std::invalid_argument("broken wheel needs k >= 3");
    Layout l{k, k, {}};
    for (int i = 1; i + 1 < k; ++i) l.faces.push_back({0, i, i + 1});
    return l;
}

Layout wheel_layout(int k) {
    if (k < 3) throw std::invalid_argument("wheel needs k >= 3");
    Layout l{k + 1, k, {}};
    for (int i = 0; i < k; ++i) l.faces.push_back({i, (i + 1) % k, k});
    return l;
}

Layout glue_layout(const Layout& a, const Layout& b) {
    const int p = a.k;
    const int q = b.k;
    const int k = p + q - 2;
    Layout l{a.n + b.n - 2, k, {}};
    auto map_a = [&](Vertex v) { return v < p ? v : k + (v - p); };
    auto map_b = [&](Vertex v) {
        if (v == 0) return 0;
        if (v == 1) return p - 1;
        if (v < q) return p + v - 2;
        return k + (a.n - p) + (v - q);
    };
    for (const Triangle& t : a.faces) l.faces.push_back({map_a(t[0]), map_a(t[1]), map_a(t[2])});
    for (const Triangle& t : b.faces) l.faces.push_back({map_b(t[0]), map_b(t[1]), map_b(t[2])});
    return l;
}

/// Apex of the face on outer edge (i, i+1), or -1 if the insertion is not allowed there.
Vertex insertion_apex(const Layout& base, int i) {
    if (i < 1 || i > base.k - 2) return -1;
    for (const Triangle& t : base.faces)
        for (int r = 0; r < 3; ++r)
            if (t[static_cast<std::size_t>(r)] == i && t[static_cast<std::size_t>((r + 1) % 3)] == i + 1) {
                const Vertex u = t[static_cast<std::size_t>((r + 2) % 3)];
                return u >= base.k ? u : -1;
            }
    return -1;
}

Layout insert_layout(const Layout& base, int i, int j) {
    if (j < 0) throw std::invalid_argument("insert: negative subdivision count");
    const Vertex u = insertion_apex(base, i);
    if (u < 0)
        throw std::invalid_argument("insert: face on outer edge t" + std::to_string(i) +
                                    " is not a triangle v_i u v_i+1 with u interior and v1 avoided");
    Layout l{base.n + j + 1, base.k + j, {}};
    auto map = [&](Vertex v) { return v <= i ? v : v + j; };
    const Vertex w = base.n + j;
    const Vertex vi = i;
    const Vertex vi1 = i + 1 + j;
    const Vertex um = map(u);
    for (const Triangle& t : base.faces) {
        if (normalized(t) == normalized(Triangle{i, i + 1, u})) continue;
        l.faces.push_back({map(t[0]), map(t[1]), map(t[2])});
    }
    std::vector<Vertex> path{vi};
    for (int a = 1; a <= j; ++a) path.push_back(i + a);
    path.push_back(vi1);
    for (std::size_t a = 0; a + 1 < path.size(); ++a) l.faces.push_back({path[a], path[a + 1], w});
    l.faces.push_back({vi1, um, w});
    l.faces.push_back({um, vi, w});
    return l;
}

Layout layout_of(const Descriptor& d) {
    switch (d.kind) {
        case FamilyKind::Broken: return broken_layout(d.size);
        case FamilyKind::Wheel: return wheel_layout(d.size);
        case FamilyKind::Glue: return glue_layout(layout_of(d.parts[0]), layout_of(d.parts[1]));
        case FamilyKind::Insert: return insert_layout(layout_of(d.parts[0]), d.triangle, d.subdivisions);
        case FamilyKind::String: throw std::invalid_argument("a wheel string is not a near-triangulation");
    }
    throw std::invalid_argument("descriptor: unknown kind");
}

Descriptor glue_normalized(Descriptor left, Descriptor right) {
    if (left.kind == FamilyKind::Broken) {
        if (right.kind == FamilyKind::Broken) return Descriptor::broken(left.size + right.size - 2);
        if (right.kind == FamilyKind::Glue && right.parts[0].kind == FamilyKind::Broken)
            return Descriptor::glue(Descriptor::broken(left.size + right.parts[0].size - 2), std::move(right.parts[1]));
    }
    return Descriptor::glue(std::move(left), std::move(right));
}

class Recognizer {
public:
    std::optional<Descriptor> run(const Disk& d) {
        const std::vector<int> code = canonical_code(d.to_plane_graph());
        if (auto it = memo_.find(code); it != memo_.end()) return it->second;
        std::optional<Descriptor> result = decompose(d);
        memo_.emplace(code, result);
        return result;
    }

private:
    std::optional<Descriptor> decompose(const Disk& d) {
        const auto& outer = d.outer();
        const int k = d.outer_length();
        if (k == 3 && d.faces().size() == 1) return Descriptor::broken(3);

        const auto chords = d.chords();
        int split = -1;
        for (const Edge& e : chords) {
            if (e.u != outer[0] && e.v != outer[0]) return std::nullopt;
            const int pos = d.position(e.u == outer[0] ? e.v : e.u);
            if (split < 0 || pos < split) split = pos;
        }
        if (split >= 0) {
            std::vector<Vertex> left(outer.begin(), outer.begin() + split + 1);
            std::vector<Vertex> right{outer[0]};
            right.insert(right.end(), outer.begin() + split, outer.end());
            auto l = run(d.inside(left));
            if (!l) return std::nullopt;
            auto r = run(d.inside(right));
            if (!r) return std::nullopt;
            return glue_normalized(std::move(*l), std::move(*r));
        }

        const auto interior = d.interior_vertices();
        if (interior.size() == 1) {
            if (d.degree(interior[0]) != k) return std::nullopt;
            return Descriptor::wheel(k);
        }
        for (Vertex w : interior) {
            auto reduced = uninsert(d, w);
            if (!reduced) continue;
            auto base = run(reduced->disk);
            if (base) return Descriptor::insert(std::move(*base), reduced->position, reduced->subdivisions);
        }
        return std::nullopt;
    }

    struct Reduction {
        Disk disk;
        int position;
        int subdivisions;
    };

    /// Undoes a wheel insertion whose new interior vertex is w, if the local
    /// pattern allows it.
    static std::optional<Reduction> uninsert(const Disk& d, Vertex w) {
        const auto& outer = d.outer();
        const int k = d.outer_length();
        Vertex u = -1;
        std::vector<int> positions;
        for (Vertex x : d.neighbors(w)) {
            const int pos = d.position(x);
            if (pos < 0) {
                if (u >= 0) return std::nullopt;
                u = x;
            } else {
                positions.push_back(pos);
            }
        }
        if (u < 0 || positions.size() < 2) return std::nullopt;
        std::sort(positions.begin(), positions.end());
        if (positions.front() == 0) return std::nullopt;
        for (std::size_t a = 1; a < positions.size(); ++a)
            if (positions[a] != positions[a - 1] + 1) return std::nullopt;
        const int first = positions.front();
        const int last = positions.back();
        if (last > k - 1) return std::nullopt;
        const Vertex vi = outer[static_cast<std::size_t>(first)];
        const Vertex vi1 = outer[static_cast<std::size_t>(last)];
        const int j = last - first - 1;
        std::set<Vertex> removed{w};
        for (int p = first + 1; p < last; ++p) {
            const Vertex x = outer[static_cast<std::size_t>(p)];
            if (d.degree(x) != 3) return std::nullopt;
            removed.insert(x);
        }
        if (!d.has_edge(u, vi) || !d.has_edge(u, vi1)) return std::nullopt;
        if (j >= 1 && d.has_edge(vi, vi1)) return std::nullopt;

        std::vector<Triangle> faces;
        for (const Triangle& t : d.faces())
            if (!removed.count(t[0]) && !removed.count(t[1]) && !removed.count(t[2])) faces.push_back(t);
        faces.push_back({vi, vi1, u});
        std::vector<Vertex> new_outer;
        for (Vertex x : outer)
            if (!removed.count(x)) new_outer.push_back(x);
        try {
            return Reduction{Disk(std::move(new_outer), std::move(faces)), first, j};
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }

    std::map<std::vector<int>, std::optional<Descriptor>> memo_;
};

}  // namespace

Built build(const Descriptor& d) {
    const Layout l = layout_of(d);
    Built b{l.graph(), {}};
    b.path = principal_path(b.graph);
    return b;
}

std::optional<Descriptor> recognize_generalized_multi_wheel(const PlaneGraph& g) {
    if (g.outer_length() < 3 || !validate(g).ok()) return std::nullopt;
    Recognizer r;
    return r.run(Disk::of(g));
}

std::optional<Descriptor> recognize_generalized_multi_wheel(const PlaneGraph& g, const PrincipalPath& p) {
    if (g.outer_length() < 3 || !validate(g).ok()) return std::nullopt;
    const int pos = g.outer_position(p.v1);
    if (pos < 0) return std::nullopt;
    const auto& o = g.outer_cycle();
    const std::size_t k = o.size();
    if (o[(static_cast<std::size_t>(pos) + 1) % k] != p.v2 || o[(static_cast<std::size_t>(pos) + k - 1) % k] != p.vk)
        return std::nullopt;
    Recognizer r;
    return r.run(Disk::of(g).rotated_to(p.v1));
}

bool is_generalized_multi_wheel(const PlaneGraph& g) { return recognize_generalized_multi_wheel(g).has_value(); }

bool is_multi_wheel(const PlaneGraph& g) {
    auto d = recognize_generalized_multi_wheel(g);
    return d && describes_multi_wheel(*d);
}

bool facial_triangle_property(const PlaneGraph& g) {
    const Vertex v1 = g.outer_cycle().at(0);
    for (const Triangle& t : g.inner_faces()) {
        const bool touches = std::any_of(t.begin(), t.end(), [&](Vertex x) { return g.on_outer(x) && x != v1; });
        if (!touches) return false;
    }
    return true;
}

WheelString build_wheel_string(const std::vector<Descriptor>& parts) {
    if (parts.empty()) throw std::invalid_argument("wheel string needs at least one part");
    WheelString s;
    int n = 0;
    Vertex previous_v2 = -1;
    std::vector<Edge> edges;
    for (const Descriptor& d : parts) {
        Built b = build(d);
        std::vector<Vertex> map(static_cast<std::size_t>(b.graph.vertex_count()), -1);
        for (Vertex v = 0; v < b.graph.vertex_count(); ++v) {
            if (v == b.path.vk && previous_v2 >= 0) map[static_cast<std::size_t>(v)] = previous_v2;
            else map[static_cast<std::size_t>(v)] = n++;
        }
        for (const Edge& e : b.graph.graph().edges())
            edges.emplace_back(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
        if (previous_v2 < 0) s.clean.push_back(map[static_cast<std::size_t>(b.path.vk)]);
        else s.cuts.push_back(previous_v2);
        s.majors.push_back(map[static_cast<std::size_t>(b.path.v1)]);
        previous_v2 = map[static_cast<std::size_t>(b.path.v2)];
        s.embedding.push_back(std::move(map));
        s.parts.push_back(std::move(b.graph));
    }
    s.clean.push_back(previous_v2);
    s.graph = Graph::from_edges(n, edges);
    return s;
}

std::vector<Descriptor> enumerate_family(int max_n) {
    struct Entry {
        Descriptor d;
        Layout layout;
        std::vector<int> code;
    };
    std::vector<Entry> members;
    std::set<std::vector<int>> seen;
    auto offer = [&](Descriptor d, Layout l) {
        if (l.n > max_n) return;
        std::vector<int> code = canonical_code(l.graph());
        if (!seen.insert(code).second) return;
        members.push_back({std::move(d), std::move(l), std::move(code)});
    };
    for (int k = 3; k <= max_n; ++k) offer(Descriptor::broken(k), broken_layout(k));
    for (int k = 3; k + 1 <= max_n; ++k) offer(Descriptor::wheel(k), wheel_layout(k));

    for (std::size_t next = 0; next < members.size(); ++next) {
        // members may reallocate while offering; work on copies.
        const Descriptor d = members[next].d;
        const Layout l = members[next].layout;
        for (int i = 1; i <= l.k - 2; ++i) {
            if (insertion_apex(l, i) < 0) continue;
            for (int j = 0; l.n + j + 1 <= max_n; ++j) offer(Descriptor::insert(d, i, j), insert_layout(l, i, j));
        }
        for (std::size_t other = 0; other <= next; ++other) {
            if (l.n + members[other].layout.n - 2 > max_n) continue;
            const Descriptor od = members[other].d;
            const Layout ol = members[other].layout;
            offer(Descriptor::glue(d, od), glue_layout(l, ol));
            if (other != next) offer(Descriptor::glue(od, d), glue_layout(ol, l));
        }
    }
    std::sort(members.begin(), members.end(), [](const Entry& a, const Entry& b) {
        if (a.layout.n != b.layout.n) return a.layout.n < b.layout.n;
        return a.code < b.code;
    });
    std::vector<Descriptor> out;
    out.reserve(members.size());
    for (Entry& e : members) out.push_back(std::move(e.d));
    return out;
}

}  // namespace z5
