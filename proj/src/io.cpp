#include "homhom/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace homhom {

OrientedGraph read_ogr(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int order = 0;
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag;
            if (!(ls >> tag)) continue; // blank
            if (tag != "ogr" || !(ls >> order))
                fail(Errc::parse_error, "line " + std::to_string(lineno) +
                                            ": expected header \"ogr <order>\"");
            std::string extra;
            if (ls >> extra)
                fail(Errc::parse_error, "line " + std::to_string(lineno) + ": trailing junk");
            have_header = true;
            continue;
        }
        long long u, v;
        if (!(ls >> u)) continue; // blank
        std::string extra;
        if (!(ls >> v) || (ls >> extra))
            fail(Errc::parse_error,
                 "line " + std::to_string(lineno) + ": expected \"u v\"");
        for (const auto& a : arcs)
            if (a.first == u && a.second == v)
                fail(Errc::parse_error, "line " + std::to_string(lineno) + ": duplicate arc " +
                                            std::to_string(u) + " " + std::to_string(v));
        arcs.emplace_back((Vertex)u, (Vertex)v);
    }
    if (!have_header) fail(Errc::parse_error, "missing \"ogr <order>\" header");
    return OrientedGraph::from_arcs(order, arcs);
}

OrientedGraph read_ogr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::io_error, "cannot open " + path);
    return read_ogr(in);
}

std::string write_ogr(const OrientedGraph& g) {
    std::string s = "ogr " + std::to_string(g.order()) + "\n";
    for (const auto& [u, v] : g.arcs())
        s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

} // namespace homhom
