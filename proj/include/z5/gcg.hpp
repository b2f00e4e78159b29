#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "z5/group_color.hpp"
#include "z5/plane_graph.hpp"

namespace z5 {

/// Everything a gcg file can carry.
struct Instance {
    PlaneGraph graph;
    PhiAssignment phi;
    ColorSystem colors;
    std::string descriptor;      // family descriptor, certificates only
    std::vector<Vertex> origin;  // vertex i of this instance is origin[i] in its parent
};

/// phi = 0 everywhere, no constraints.
Instance make_instance(PlaneGraph g, int modulus = kDefaultModulus);

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Strict reader. `outer` may be omitted, leaving an empty outer cycle.
/// Edges without an `edge` line get phi = 0 stored from the smaller endpoint.
Instance parse_gcg(std::istream& in);
Instance parse_gcg(const std::string& text);
Instance read_gcg_file(const std::string& path);

/// Writes every directive, including one `edge` line per stored record.
void write_gcg(std::ostream& out, const Instance& inst);
std::string to_gcg(const Instance& inst);
void write_gcg_file(const std::string& path, const Instance& inst);

}  // namespace z5
