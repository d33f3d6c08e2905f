#include "glu/dual_graph.hpp"

#include <queue>

namespace glu {

DualGraph dual_graph(const Triangulation& t) {
    DualGraph g;
    g.nodes = t.size();
    for (int i = 0; i < t.size(); ++i) {
        for (int k = 0; k < 4; ++k) {
            const auto& gl = t.gluing(i, k);
            if (!gl) continue;
            int j = gl->tet, f = gl->perm[k];
            // Keep the lexicographically first of the two slot records.
            if (std::pair(i, k) <= std::pair(j, f)) g.edges.push_back({i, k, j, f});
        }
    }
    return g;
}

std::vector<int> spanning_tree(const DualGraph& g, int root) {
    std::vector<int> tree;
    if (g.nodes == 0) return tree;
    std::vector<char> seen(g.nodes, 0);
    seen[root] = 1;
    int reached = 1;
    // Repeated sweeps in edge order keep the result independent of any
    // adjacency-list layout; the graph is tiny at desk scale.
    bool grew = true;
    while (grew) {
        grew = false;
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            const DualEdge& d = g.edges[e];
            if (seen[d.tet_a] == seen[d.tet_b]) continue;
            seen[d.tet_a] = seen[d.tet_b] = 1;
            tree.push_back(e);
            ++reached;
            grew = true;
        }
    }
    if (reached != g.nodes) throw GluError(Err::DisconnectedGraph, "dual graph is disconnected");
    return tree;
}

}  // namespace glu
