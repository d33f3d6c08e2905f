#include "glu/triangulation.hpp"

#include <numeric>
#include <queue>
#include <string>

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
    // Relabels roots 0..k-1 in slot order; returns class count.
    int compress(std::vector<int>& out) {
        out.assign(parent.size(), -1);
        int next = 0;
        for (std::size_t i = 0; i < parent.size(); ++i) {
            int r = find(static_cast<int>(i));
            if (out[r] < 0) out[r] = next++;
            out[i] = out[r];
        }
        return next;
    }
};

}  // namespace

bool Triangulation::is_closed() const { return boundary_face_count() == 0; }

int Triangulation::boundary_face_count() const {
    int n = 0;
    for (const auto& t : glu_)
        for (const auto& g : t)
            if (!g) ++n;
    return n;
}

bool Triangulation::is_connected() const {
    if (glu_.empty()) return true;
    std::vector<char> seen(glu_.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int found = 1;
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (const auto& g : glu_[i])
            if (g && !seen[g->tet]) {
                seen[g->tet] = 1;
                ++found;
                q.push(g->tet);
            }
    }
    return found == size();
}

Triangulation Triangulation::validate(const RawGluingData& raw, bool allow_boundary) {
    const int t = static_cast<int>(raw.tets.size());
    for (int i = 0; i < t; ++i) {
        for (int k = 0; k < 4; ++k) {
            const auto& g = raw.tets[i][k];
            if (!g) {
                if (!allow_boundary)
                    throw GluError(Err::UnpairedFace, "face " + std::to_string(k) + " of tetrahedron " +
                                                          std::to_string(i) + " is unglued");
                continue;
            }
            if (g->tet < 0 || g->tet >= t)
                throw GluError(Err::BadPermutation, "gluing target out of range at tet " + std::to_string(i) +
                                                        " face " + std::to_string(k));
            const Perm4& p = g->perm;
            if (!Perm4::is_valid(p[0], p[1], p[2], p[3]))
                throw GluError(Err::BadPermutation, "non-bijective gluing map");
            if (g->tet == i && p[k] == k)
                throw GluError(Err::SelfGluedFace, "face " + std::to_string(k) + " of tetrahedron " +
                                                       std::to_string(i) + " glued to itself");
            const auto& back = raw.tets[g->tet][p[k]];
            if (!back || back->tet != i || !(back->perm == p.inverse()))
                throw GluError(Err::NonInvolutive, "gluing at tet " + std::to_string(i) + " face " +
                                                       std::to_string(k) + " has no matching inverse record");
        }
    }
    return Triangulation(raw.tets);
}

SimplexClasses simplex_classes(const Triangulation& tri) {
    const int t = tri.size();
    Dsu dv(4 * t), de(6 * t), df(4 * t);
    for (int i = 0; i < t; ++i) {
        for (int k = 0; k < 4; ++k) {
            const auto& g = tri.gluing(i, k);
            if (!g) continue;
            const int j = g->tet;
            const Perm4& p = g->perm;
            df.unite(4 * i + k, 4 * j + p[k]);
            for (int v = 0; v < 4; ++v) {
                if (v == k) continue;
                dv.unite(4 * i + v, 4 * j + p[v]);
            }
            for (int e = 0; e < 6; ++e) {
                int a = kEdgeV0[e], b = kEdgeV1[e];
                if (a == k || b == k) continue;  // edge not on face k
                de.unite(6 * i + e, 6 * j + edge_index(p[a], p[b]));
            }
        }
    }
    SimplexClasses out;
    out.vertex_count = dv.compress(out.vertex_class);
    out.edge_count = de.compress(out.edge_class);
    out.face_count = df.compress(out.face_class);
    return out;
}

SkeletonReport skeleton(const Triangulation& t) {
    SimplexClasses c = simplex_classes(t);
    SkeletonReport r;
    r.vertex_classes = c.vertex_count;
    r.edge_classes = c.edge_count;
    r.triangle_classes = c.face_count;
    r.tetrahedra = t.size();
    r.euler_characteristic = c.vertex_count - c.edge_count + c.face_count - t.size();
    return r;
}

std::vector<std::vector<std::pair<int, int>>> edge_class_members(const Triangulation& t,
                                                                 const SimplexClasses& cls) {
    std::vector<std::vector<std::pair<int, int>>> out(cls.edge_count);
    for (int i = 0; i < t.size(); ++i)
        for (int e = 0; e < 6; ++e) out[cls.edge_class[6 * i + e]].emplace_back(i, e);
    return out;
}

std::vector<std::vector<std::pair<int, int>>> vertex_class_members(const Triangulation& t,
                                                                   const SimplexClasses& cls) {
    std::vector<std::vector<std::pair<int, int>>> out(cls.vertex_count);
    for (int i = 0; i < t.size(); ++i)
        for (int v = 0; v < 4; ++v) out[cls.vertex_class[4 * i + v]].emplace_back(i, v);
    return out;
}

}  // namespace glu
