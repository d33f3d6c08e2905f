#include "glu/links.hpp"

#include <numeric>
#include <queue>

namespace glu {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Link slot numbering inside one triangulation:
//   link triangle  <-> corner (tet i, vertex v):            4i + v
//   link edge      <-> (corner, cutting face k != v):      12i + 3v' ...
//   link vertex    <-> (corner, other vertex w != v):      same shape
// For edges/vertices we index the three choices k (resp. w) by their rank
// among labels != v.
int rank3(int v, int x) {
    int r = 0;
    for (int y = 0; y < 4; ++y) {
        if (y == v) continue;
        if (y == x) return r;
        ++r;
    }
    return -1;
}

}  // namespace

LinkReport vertex_links(const Triangulation& tri) {
    const int t = tri.size();
    SimplexClasses cls = simplex_classes(tri);

    Dsu lv(12 * t);  // link vertices: (corner, w)
    // Link edges pair up 1:1 across face gluings; count pairs directly.
    std::vector<char> edge_glued(12 * t, 0);

    for (int i = 0; i < t; ++i) {
        for (int k = 0; k < 4; ++k) {
            const auto& g = tri.gluing(i, k);
            if (!g) continue;
            const int j = g->tet;
            const Perm4& p = g->perm;
            for (int v = 0; v < 4; ++v) {
                if (v == k) continue;
                edge_glued[12 * i + 3 * v + rank3(v, k)] = 1;
                for (int w = 0; w < 4; ++w) {
                    if (w == v || w == k) continue;
                    lv.unite(12 * i + 3 * v + rank3(v, w), 12 * j + 3 * p[v] + rank3(p[v], p[w]));
                }
            }
        }
    }

    LinkReport rep;
    rep.links.resize(cls.vertex_count);

    // Per class: triangle count, boundary edges, glued edge slots.
    std::vector<int> tri_count(cls.vertex_count, 0), bdry(cls.vertex_count, 0), glued(cls.vertex_count, 0);
    for (int i = 0; i < t; ++i)
        for (int v = 0; v < 4; ++v) {
            int c = cls.vertex_class[4 * i + v];
            ++tri_count[c];
            for (int r = 0; r < 3; ++r)
                (edge_glued[12 * i + 3 * v + r] ? glued[c] : bdry[c])++;
        }

    // Link vertex classes per vertex class.
    std::vector<int> vtx_count(cls.vertex_count, 0);
    {
        std::vector<char> seen(12 * t, 0);
        for (int s = 0; s < 12 * t; ++s) {
            int r = lv.find(s);
            if (!seen[r]) {
                seen[r] = 1;
                ++vtx_count[cls.vertex_class[4 * (s / 12) + (s % 12) / 3]];
            }
        }
    }

    // Connectivity: BFS over corners within each class via face gluings.
    std::vector<char> corner_seen(4 * t, 0);
    std::vector<int> comp_count(cls.vertex_count, 0);
    for (int s = 0; s < 4 * t; ++s) {
        if (corner_seen[s]) continue;
        ++comp_count[cls.vertex_class[s]];
        std::queue<int> q;
        q.push(s);
        corner_seen[s] = 1;
        while (!q.empty()) {
            int cur = q.front();
            q.pop();
            int i = cur / 4, v = cur % 4;
            for (int k = 0; k < 4; ++k) {
                if (k == v) continue;
                const auto& g = tri.gluing(i, k);
                if (!g) continue;
                int nxt = 4 * g->tet + g->perm[v];
                if (!corner_seen[nxt]) {
                    corner_seen[nxt] = 1;
                    q.push(nxt);
                }
            }
        }
    }

    rep.all_spheres = cls.vertex_count > 0 || t == 0;
    if (t == 0) rep.all_spheres = true;
    for (int c = 0; c < cls.vertex_count; ++c) {
        VertexLink& L = rep.links[c];
        L.triangles = tri_count[c];
        L.edges = glued[c] / 2 + bdry[c];
        L.vertices = vtx_count[c];
        L.euler_characteristic = L.vertices - L.edges + L.triangles;
        L.closed = bdry[c] == 0;
        L.connected = comp_count[c] == 1;
        L.is_sphere = L.closed && L.connected && L.euler_characteristic == 2;
        if (!L.is_sphere) rep.all_spheres = false;
    }
    return rep;
}

bool is_closed_3_manifold(const Triangulation& t) {
    if (!t.is_closed()) return false;
    return vertex_links(t).all_spheres;
}

}  // namespace glu
