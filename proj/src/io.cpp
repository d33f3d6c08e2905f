#include "glu/io.hpp"

#include <fstream>
#include <sstream>

namespace glu {

Json triangulation_to_json(const Triangulation& t) {
    Json j;
    j["format"] = "glu3/1";
    j["tetrahedra"] = t.size();
    Json glus = Json::array();
    for (int i = 0; i < t.size(); ++i) {
        Json tet = Json::array();
        for (int k = 0; k < 4; ++k) {
            const auto& g = t.gluing(i, k);
            if (!g) {
                tet.push_back(nullptr);
            } else {
                tet.push_back(Json::array({g->tet, Json::array({g->perm[0], g->perm[1], g->perm[2], g->perm[3]})}));
            }
        }
        glus.push_back(tet);
    }
    j["gluings"] = glus;
    return j;
}

RawGluingData raw_gluing_from_json(const Json& j) {
    if (!j.is_object() || j.value("format", "") != "glu3/1")
        throw GluError(Err::BadInput, "expected a glu3/1 document");
    const int t = j.at("tetrahedra").get<int>();
    if (t < 0) throw GluError(Err::BadInput, "negative tetrahedron count");
    const Json& glus = j.at("gluings");
    if (!glus.is_array() || static_cast<int>(glus.size()) != t)
        throw GluError(Err::BadInput, "gluings array must have one entry per tetrahedron");
    RawGluingData raw;
    raw.tets.resize(t);
    for (int i = 0; i < t; ++i) {
        const Json& tet = glus[i];
        if (!tet.is_array() || tet.size() != 4)
            throw GluError(Err::BadInput, "each tetrahedron needs 4 face entries");
        for (int k = 0; k < 4; ++k) {
            const Json& e = tet[k];
            if (e.is_null()) continue;
            if (!e.is_array() || e.size() != 2 || !e[1].is_array() || e[1].size() != 4)
                throw GluError(Err::BadInput, "face entry must be [target_tet,[p0,p1,p2,p3]]");
            int tgt = e[0].get<int>();
            int p0 = e[1][0].get<int>(), p1 = e[1][1].get<int>(), p2 = e[1][2].get<int>(), p3 = e[1][3].get<int>();
            if (!Perm4::is_valid(p0, p1, p2, p3))
                throw GluError(Err::BadPermutation, "face entry carries a non-permutation");
            raw.tets[i][k] = Gluing{tgt, Perm4(p0, p1, p2, p3)};
        }
    }
    return raw;
}

Triangulation triangulation_from_json(const Json& j, bool allow_boundary) {
    return Triangulation::validate(raw_gluing_from_json(j), allow_boundary);
}

std::string write_triangulation(const Triangulation& t) { return triangulation_to_json(t).dump(); }

Triangulation read_triangulation(const std::string& text, bool allow_boundary) {
    Json j = Json::parse(text);
    return triangulation_from_json(j, allow_boundary);
}

Triangulation load_triangulation_file(const std::string& path, bool allow_boundary) {
    std::ifstream in(path);
    if (!in) throw GluError(Err::BadInput, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_triangulation(ss.str(), allow_boundary);
}

void save_triangulation_file(const Triangulation& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw GluError(Err::BadInput, "cannot write " + path);
    out << write_triangulation(t) << "\n";
}

}  // namespace glu
