#ifndef GLU_LINKS_HPP
#define GLU_LINKS_HPP

#include <vector>

#include "glu/triangulation.hpp"

namespace glu {

// The link of one vertex class, as a triangulated surface.  Triangles are
// the tetrahedron corners in the class; edges and vertices are counted
// after identification.
struct VertexLink {
    int triangles = 0;
    int edges = 0;
    int vertices = 0;
    int euler_characteristic = 0;
    bool closed = false;       // every link edge in exactly 2 link triangles
    bool connected = false;
    bool is_sphere = false;    // closed && connected && chi == 2
};

struct LinkReport {
    std::vector<VertexLink> links;  // one per vertex class
    bool all_spheres = false;
};

LinkReport vertex_links(const Triangulation& t);

// True iff the gluing is closed and the link of every vertex is a 2-sphere.
bool is_closed_3_manifold(const Triangulation& t);

}  // namespace glu

#endif
