#ifndef GLU_DUAL_GRAPH_HPP
#define GLU_DUAL_GRAPH_HPP

#include <vector>

#include "glu/triangulation.hpp"

namespace glu {

// One edge per triangle class: the pair of face slots it identifies.
// For an unglued (boundary) face no edge is produced.
struct DualEdge {
    int tet_a, face_a;
    int tet_b, face_b;  // (tet_b, face_b) = target of the gluing at (tet_a, face_a)
};

struct DualGraph {
    int nodes = 0;
    std::vector<DualEdge> edges;  // ordered by (tet_a, face_a)
};

DualGraph dual_graph(const Triangulation& t);

// BFS spanning tree from `root` in edge-list order; returns indices into
// g.edges.  Throws DisconnectedGraph if not all nodes are reached.
std::vector<int> spanning_tree(const DualGraph& g, int root);

}  // namespace glu

#endif
