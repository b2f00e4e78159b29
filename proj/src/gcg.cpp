#include "z5/gcg.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace z5 {

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string w; ss >> w;) out.push_back(w);
    return out;
}

int to_int(const std::string& word, int line) {
    int value = 0;
    const char* end = word.data() + word.size();
    auto [ptr, ec] = std::from_chars(word.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw ParseError(line, "expected an integer, got '" + word + "'");
    return value;
}

struct EdgeLine {
    int line;
    Vertex tail, head;
    int value;
};

}  // namespace

Instance make_instance(PlaneGraph g, int modulus) {
    Instance inst;
    inst.phi = PhiAssignment(g.graph(), modulus);
    inst.colors = ColorSystem(g.vertex_count(), modulus);
    inst.graph = std::move(g);
    return inst;
}

Instance parse_gcg(std::istream& in) {
    std::optional<int> n;
    int modulus = kDefaultModulus;
    bool saw_group = false;
    std::vector<std::optional<std::vector<Vertex>>> rot;
    std::optional<std::vector<Vertex>> outer;
    std::vector<EdgeLine> edges;
    std::vector<std::pair<int, std::vector<int>>> forbids;
    std::vector<std::pair<int, std::pair<int, int>>> precolors;
    std::string descriptor;
    std::optional<std::vector<Vertex>> origin;

    std::string raw;
    int line = 0;
    auto vertex = [&](const std::string& w, int ln) {
        const int v = to_int(w, ln);
        if (v < 0 || v >= *n) throw ParseError(ln, "vertex out of range: " + w);
        return v;
    };
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto w = split_words(raw);
        if (w.empty()) continue;
        const std::string& d = w[0];
        if (d != "n" && !n) throw ParseError(line, "'" + d + "' before 'n'");
        if (d == "n") {
            if (n) throw ParseError(line, "duplicate 'n'");
            if (w.size() != 2) throw ParseError(line, "usage: n <N>");
            n = to_int(w[1], line);
            if (*n < 0) throw ParseError(line, "negative vertex count");
            rot.assign(static_cast<std::size_t>(*n), std::nullopt);
        } else if (d == "group") {
            if (saw_group) throw ParseError(line, "duplicate 'group'");
            if (w.size() != 2) throw ParseError(line, "usage: group <m>");
            modulus = to_int(w[1], line);
            if (modulus < 2 || modulus > kMaxModulus) throw ParseError(line, "group order must lie in 2..31");
            saw_group = true;
        } else if (d == "rot") {
            if (w.size() < 2) throw ParseError(line, "usage: rot <v> <u1> ...");
            const int v = vertex(w[1], line);
            if (rot[static_cast<std::size_t>(v)]) throw ParseError(line, "duplicate rot line for " + w[1]);
            std::vector<Vertex> r;
            for (std::size_t i = 2; i < w.size(); ++i) r.push_back(vertex(w[i], line));
            rot[static_cast<std::size_t>(v)] = std::move(r);
        } else if (d == "outer") {
            if (outer) throw ParseError(line, "duplicate 'outer'");
            if (w.size() < 2) throw ParseError(line, "usage: outer <k> <v1> ... <vk>");
            const int k = to_int(w[1], line);
            if (k < 0 || static_cast<std::size_t>(k) + 2 != w.size())
                throw ParseError(line, "outer length does not match the listed vertices");
            std::vector<Vertex> o;
            for (std::size_t i = 2; i < w.size(); ++i) o.push_back(vertex(w[i], line));
            outer = std::move(o);
        } else if (d == "edge") {
            if (w.size() != 4) throw ParseError(line, "usage: edge <u> <v> <phi>");
            edges.push_back({line, vertex(w[1], line), vertex(w[2], line), to_int(w[3], line)});
        } else if (d == "forbid") {
            if (w.size() < 3) throw ParseError(line, "usage: forbid <v> <c1> ...");
            std::vector<int> cs;
            for (std::size_t i = 2; i < w.size(); ++i) cs.push_back(to_int(w[i], line));
            forbids.push_back({line, {}});
            forbids.back().second.push_back(vertex(w[1], line));
            forbids.back().second.insert(forbids.back().second.end(), cs.begin(), cs.end());
        } else if (d == "precolor") {
            if (w.size() != 3) throw ParseError(line, "usage: precolor <v> <c>");
            precolors.push_back({line, {vertex(w[1], line), to_int(w[2], line)}});
        } else if (d == "descriptor") {
            if (!descriptor.empty()) throw ParseError(line, "duplicate 'descriptor'");
            const auto start = raw.find("descriptor") + std::string("descriptor").size();
            descriptor = raw.substr(start);
            descriptor.erase(0, descriptor.find_first_not_of(" \t"));
            descriptor.erase(descriptor.find_last_not_of(" \t\r") + 1);
        } else if (d == "origin") {
            if (origin) throw ParseError(line, "duplicate 'origin'");
            std::vector<Vertex> o;
            for (std::size_t i = 1; i < w.size(); ++i) {
                const int v = to_int(w[i], line);
                if (v < 0) throw ParseError(line, "negative origin label");
                o.push_back(v);
            }
            if (static_cast<int>(o.size()) != *n) throw ParseError(line, "origin must list one label per vertex");
            origin = std::move(o);
        } else {
            throw ParseError(line, "unknown directive '" + d + "'");
        }
    }
    if (!n) throw ParseError(line, "missing 'n'");

    std::vector<std::vector<Vertex>> rotation;
    for (int v = 0; v < *n; ++v) {
        if (!rot[static_cast<std::size_t>(v)]) throw ParseError(line, "missing rot line for vertex " + std::to_string(v));
        rotation.push_back(*rot[static_cast<std::size_t>(v)]);
    }
    // Rotations must be symmetric and simple before anything is built on them.
    for (int v = 0; v < *n; ++v) {
        std::set<Vertex> seen;
        for (Vertex u : rotation[static_cast<std::size_t>(v)]) {
            if (u == v) throw ParseError(line, "loop at vertex " + std::to_string(v));
            if (!seen.insert(u).second)
                throw ParseError(line, "vertex " + std::to_string(u) + " repeated in rot of " + std::to_string(v));
            const auto& back = rotation[static_cast<std::size_t>(u)];
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw ParseError(line, "rot of " + std::to_string(u) + " lacks neighbour " + std::to_string(v));
        }
    }
    std::vector<Vertex> cycle = outer.value_or(std::vector<Vertex>{});
    {
        std::set<Vertex> distinct(cycle.begin(), cycle.end());
        if (distinct.size() != cycle.size()) throw ParseError(line, "outer cycle repeats a vertex");
        if (outer && cycle.size() < 3) throw ParseError(line, "outer cycle shorter than 3");
    }

    Instance inst;
    inst.graph = PlaneGraph(std::move(rotation), cycle);
    const Graph& g = inst.graph.graph();
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]))
            throw ParseError(line, "outer cycle uses non-edge " + std::to_string(cycle[i]) + "-" +
                                       std::to_string(cycle[(i + 1) % cycle.size()]));

    inst.phi = PhiAssignment(g, modulus);
    std::set<Edge> phi_seen;
    for (const EdgeLine& e : edges) {
        if (!g.has_edge(e.tail, e.head))
            throw ParseError(e.line, "edge " + std::to_string(e.tail) + " " + std::to_string(e.head) + " not in rot");
        if (!phi_seen.insert(Edge(e.tail, e.head)).second) throw ParseError(e.line, "duplicate edge line");
        if (e.value < 0 || e.value >= modulus) throw ParseError(e.line, "phi value outside 0..m-1");
        inst.phi.set(e.tail, e.head, e.value);
    }

    inst.colors = ColorSystem(*n, modulus);
    std::set<Vertex> pre_seen, forbid_seen;
    for (const auto& [ln, pc] : precolors) {
        if (!pre_seen.insert(pc.first).second) throw ParseError(ln, "vertex precolored twice");
        if (pc.second < 0 || pc.second >= modulus) throw ParseError(ln, "color outside 0..m-1");
        inst.colors.precolor(pc.first, pc.second);
    }
    for (const auto& [ln, f] : forbids) {
        const Vertex v = f[0];
        if (!forbid_seen.insert(v).second) throw ParseError(ln, "duplicate forbid line");
        if (pre_seen.count(v)) throw ParseError(ln, "forbidden set on a precolored vertex");
        ColorSet s;
        for (std::size_t i = 1; i < f.size(); ++i) {
            if (f[i] < 0 || f[i] >= modulus) throw ParseError(ln, "color outside 0..m-1");
            if (s.contains(f[i])) throw ParseError(ln, "color repeated in forbid");
            s.insert(f[i]);
        }
        inst.colors.set_forbidden(v, s);
    }
    inst.descriptor = descriptor;
    inst.origin = origin.value_or(std::vector<Vertex>{});
    return inst;
}

Instance parse_gcg(const std::string& text) {
    std::istringstream ss(text);
    return parse_gcg(ss);
}

Instance read_gcg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_gcg(in);
}

void write_gcg(std::ostream& out, const Instance& inst) {
    const PlaneGraph& g = inst.graph;
    out << "n " << g.vertex_count() << '\n';
    out << "group " << inst.phi.modulus() << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "rot " << v;
        for (Vertex u : g.rotation(v)) out << ' ' << u;
        out << '\n';
    }
    if (!g.outer_cycle().empty()) {
        out << "outer " << g.outer_length();
        for (Vertex v : g.outer_cycle()) out << ' ' << v;
        out << '\n';
    }
    for (const EdgeRecord& r : inst.phi.records()) out << "edge " << r.tail << ' ' << r.head << ' ' << r.value << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (auto c = inst.colors.precolored(v)) {
            out << "precolor " << v << ' ' << *c << '\n';
        } else if (!inst.colors.forbidden(v).empty()) {
            out << "forbid " << v;
            for (Color c : inst.colors.forbidden(v).members()) out << ' ' << c;
            out << '\n';
        }
    }
    if (!inst.descriptor.empty()) out << "descriptor " << inst.descriptor << '\n';
    if (!inst.origin.empty()) {
        out << "origin";
        for (Vertex v : inst.origin) out << ' ' << v;
        out << '\n';
    }
}

std::string to_gcg(const Instance& inst) {
    std::ostringstream ss;
    write_gcg(ss, inst);
    return ss.str();
}

void write_gcg_file(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_gcg(out, inst);
}

}  // namespace z5
