#ifndef GLU_IO_HPP
#define GLU_IO_HPP

#include <string>

#include "json.hpp"

#include "glu/triangulation.hpp"

namespace glu {

using Json = nlohmann::ordered_json;

// glu3/1 triangulation format.  Canonical key order is
// format, tetrahedra, gluings; serialization round-trips byte-identically.
Json triangulation_to_json(const Triangulation& t);
RawGluingData raw_gluing_from_json(const Json& j);
Triangulation triangulation_from_json(const Json& j, bool allow_boundary = false);

std::string write_triangulation(const Triangulation& t);
Triangulation read_triangulation(const std::string& text, bool allow_boundary = false);

Triangulation load_triangulation_file(const std::string& path, bool allow_boundary = false);
void save_triangulation_file(const Triangulation& t, const std::string& path);

}  // namespace glu

#endif
