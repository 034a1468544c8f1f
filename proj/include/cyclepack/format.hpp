#pragma once

// Text format shared by the CLI and the test corpora:
//
//   # comment
//   n <num_vertices>
//   e <u> <v> <multiplicity>     (u == v encodes <multiplicity> loops at u)
//
// 0-indexed, whitespace separated; duplicate e-lines for the same pair sum.
// Serialization is canonical: loops first (ascending vertex), then edges
// sorted lexicographically, so equal graphs serialize to equal bytes.

#include <sstream>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace cyclepack {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

inline Multigraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_n = false;
    Multigraph g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "n") {
            long long n;
            if (!(ls >> n)) throw ParseError(lineno, "expected vertex count after 'n'");
            if (have_n) throw ParseError(lineno, "duplicate 'n' line");
            if (n < 0 || n > 1'000'000) throw ParseError(lineno, "vertex count out of range");
            g = Multigraph(static_cast<int>(n));
            have_n = true;
        } else if (tag == "e") {
            if (!have_n) throw ParseError(lineno, "'e' line before 'n' line");
            long long u, v, m;
            if (!(ls >> u >> v >> m)) throw ParseError(lineno, "expected 'e <u> <v> <mult>'");
            if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
                throw ParseError(lineno, "vertex out of range");
            if (m <= 0 || m > 1'000'000'000) throw ParseError(lineno, "multiplicity must be positive");
            if (u == v)
                g.add_loop(static_cast<Vertex>(u), static_cast<int>(m));
            else
                g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<int>(m));
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens");
    }
    if (!have_n) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'n' line");
    return g;
}

inline std::string serialize(const Multigraph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.loop_count(v) > 0) out << "e " << v << " " << v << " " << g.loop_count(v) << "\n";
    for (auto [u, v, m] : g.edges()) out << "e " << u << " " << v << " " << m << "\n";
    return out.str();
}

}  // namespace cyclepack
