#ifndef HOMHOM_IO_HPP
#define HOMHOM_IO_HPP

#include <iosfwd>
#include <string>

#include "homhom/digraph.hpp"

namespace homhom {

// Text format ".ogr": first content line "ogr <order>", then one arc "u v"
// per line (0-indexed). '#' starts a comment; duplicate arcs are rejected.
OrientedGraph read_ogr(std::istream& in);
OrientedGraph read_ogr_file(const std::string& path);

std::string write_ogr(const OrientedGraph& g);

} // namespace homhom

#endif
