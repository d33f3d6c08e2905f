#include "glu/moves.hpp"

#include <algorithm>
#include <cassert>

#include "glu/isosig.hpp"

namespace glu {

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::M14: return "1-4";
        case MoveKind::M41: return "4-1";
        case MoveKind::M23: return "2-3";
        case MoveKind::M32: return "3-2";
        case MoveKind::TwoD13: return "2D-(1-3)";
        case MoveKind::TwoD22: return "2D-(2-2)";
        case MoveKind::TwoD31: return "2D-(3-1)";
        case MoveKind::VertexAdd: return "VERTEX-ADD";
        case MoveKind::ConeShell: return "CONE-SHELL";
    }
    return "?";
}

std::optional<MoveKind> move_kind_from_name(const std::string& s) {
    for (MoveKind k : {MoveKind::M14, MoveKind::M41, MoveKind::M23, MoveKind::M32, MoveKind::TwoD13,
                       MoveKind::TwoD22, MoveKind::TwoD31, MoveKind::VertexAdd, MoveKind::ConeShell})
        if (s == move_kind_name(k)) return k;
    return std::nullopt;
}

bool is_elementary(MoveKind k) {
    return k == MoveKind::M14 || k == MoveKind::M41 || k == MoveKind::M23 || k == MoveKind::M32;
}

MoveKind inverse_kind(MoveKind k) {
    switch (k) {
        case MoveKind::M14: return MoveKind::M41;
        case MoveKind::M41: return MoveKind::M14;
        case MoveKind::M23: return MoveKind::M32;
        case MoveKind::M32: return MoveKind::M23;
        case MoveKind::TwoD13: return MoveKind::TwoD31;
        case MoveKind::TwoD31: return MoveKind::TwoD13;
        case MoveKind::TwoD22: return MoveKind::TwoD22;
        default: throw GluError(Err::IllegalMove, "no single inverse kind");
    }
}

EdgeStar edge_star(const Triangulation& t, int tet, int edge) {
    EdgeStar star;
    const int u0 = kEdgeV0[edge], u1 = kEdgeV1[edge];
    int sides[2];
    {
        int* s = sides;
        for (int v = 0; v < 4; ++v)
            if (v != u0 && v != u1) *s++ = v;
    }
    // The face shared with the next slice contains side_out, i.e. it is the
    // face opposite side_in.  Returns 1 if the walk closed, 2 if closed with
    // the edge orientation flipped, 0 if it hit a boundary face.
    auto walk = [&](int a0, int a1, int in_side, int out_side, std::vector<EdgeStarEntry>& out) -> int {
        int ct = tet, cu0 = a0, cu1 = a1, cin = in_side, cout = out_side;
        int guard = 12 * t.size() + 2;
        while (true) {
            if (--guard < 0) throw GluError(Err::BadInput, "edge star walk does not close");
            out.push_back({ct, cu0, cu1, cin, cout});
            const auto& g = t.gluing(ct, cin);
            if (!g) return 0;
            const Perm4& p = g->perm;
            int nt = g->tet, nu0 = p[cu0], nu1 = p[cu1], nin = p[cout];
            int nout = -1;
            for (int v = 0; v < 4; ++v)
                if (v != nu0 && v != nu1 && v != nin) nout = v;
            if (nt == tet && ((nu0 == a0 && nu1 == a1) || (nu0 == a1 && nu1 == a0)) && nin == in_side)
                return (nu0 == a0) ? 1 : 2;
            ct = nt;
            cu0 = nu0;
            cu1 = nu1;
            cin = nin;
            cout = nout;
        }
    };

    std::vector<EdgeStarEntry> fwd;
    int res = walk(u0, u1, sides[0], sides[1], fwd);
    if (res != 0) {
        star.entries = std::move(fwd);
        star.closed = true;
        star.flipped = (res == 2);
        return star;
    }
    // Boundary edge: walk the other way and stitch the two arcs.
    std::vector<EdgeStarEntry> bwd;
    walk(u0, u1, sides[1], sides[0], bwd);
    for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) {
        EdgeStarEntry e = *it;
        std::swap(e.side_in, e.side_out);
        star.entries.push_back(e);
    }
    star.entries.pop_back();  // drop the duplicated start entry
    for (auto& e : fwd) star.entries.push_back(e);
    star.closed = false;
    return star;
}

namespace {

// Assembles the post-move triangulation from removed site tets, fresh tets
// with internal gluings (targets encoded as ~fresh_index), and the external
// face forwarding map.
struct Builder {
    const Triangulation& old_tri;
    std::vector<int> removed;
    std::vector<FaceSlots> fresh;
    std::map<std::pair<int, int>, std::tuple<int, int, Perm4>> ext;

    explicit Builder(const Triangulation& t) : old_tri(t) {}

    void glue_fresh(int fa, int face_a, int fb, int face_b, const Perm4& p) {
        assert(p[face_a] == face_b);
        fresh[fa][face_a] = Gluing{~fb, p};
        fresh[fb][face_b] = Gluing{~fa, p.inverse()};
    }

    bool is_removed(int tet) const { return std::binary_search(removed.begin(), removed.end(), tet); }

    MoveResult finish(MoveKind ikind, std::vector<int> isite_fresh) const {
        const int n = old_tri.size();
        MoveResult r;
        r.tet_map.assign(n, -1);
        int next = 0;
        for (int i = 0; i < n; ++i)
            if (!is_removed(i)) r.tet_map[i] = next++;
        const int base = next;
        for (std::size_t f = 0; f < fresh.size(); ++f) r.created.push_back(base + static_cast<int>(f));

        std::vector<FaceSlots> out(base + fresh.size());
        for (int i = 0; i < n; ++i) {
            if (r.tet_map[i] < 0) continue;
            for (int k = 0; k < 4; ++k) {
                const auto& g = old_tri.gluing(i, k);
                if (!g) continue;
                if (!is_removed(g->tet)) {
                    out[r.tet_map[i]][k] = Gluing{r.tet_map[g->tet], g->perm};
                } else {
                    auto it = ext.find({g->tet, g->perm[k]});
                    if (it == ext.end())
                        throw GluError(Err::IllegalMove, "site not embedded: external face lost");
                    auto [fi, ff, rho] = it->second;
                    (void)ff;
                    out[r.tet_map[i]][k] = Gluing{base + fi, g->perm.then(rho)};
                }
            }
        }
        for (std::size_t f = 0; f < fresh.size(); ++f)
            for (int k = 0; k < 4; ++k) {
                const auto& g = fresh[f][k];
                if (g) out[base + f][k] = Gluing{base + ~g->tet, g->perm};
            }
        for (const auto& [slot, dest] : ext) {
            auto [fi, ff, rho] = dest;
            const auto& g = old_tri.gluing(slot.first, slot.second);
            if (!g) continue;  // boundary stays boundary
            if (!is_removed(g->tet)) {
                out[base + fi][ff] = Gluing{r.tet_map[g->tet], rho.inverse().then(g->perm)};
            } else {
                auto it = ext.find({g->tet, g->perm[slot.second]});
                if (it == ext.end()) throw GluError(Err::IllegalMove, "site not embedded: partner face lost");
                auto [fi2, ff2, rho2] = it->second;
                (void)ff2;
                out[base + fi][ff] = Gluing{base + fi2, rho.inverse().then(g->perm).then(rho2)};
            }
        }

        r.tri = Triangulation(std::move(out));
        r.face_fwd = ext;
        for (auto& x : isite_fresh)
            if (x < 0) x = base + ~x;
        r.inverse = Move{ikind, std::move(isite_fresh)};
        return r;
    }
};

// (1-4): fresh tet k is the cone over old face k; the new interior vertex
// sits at label k of fresh tet k.
MoveResult apply_14(const Triangulation& t, int tet) {
    if (tet < 0 || tet >= t.size()) throw GluError(Err::IllegalMove, "1-4: no such tetrahedron");
    Builder b(t);
    b.removed = {tet};
    b.fresh.resize(4);
    for (int k = 0; k < 4; ++k)
        for (int m = k + 1; m < 4; ++m) b.glue_fresh(k, m, m, k, Perm4::transposition(k, m));
    for (int k = 0; k < 4; ++k) b.ext[{tet, k}] = {k, k, Perm4()};
    return b.finish(MoveKind::M41, {~0, 0});
}

// (2-3): fresh tet m spans the two apexes (labels 0, 1) plus the two face
// vertices it keeps (labels 2, 3 in sorted order); it omits face vertex m.
MoveResult apply_23(const Triangulation& t, int tetA, int faceA) {
    if (tetA < 0 || tetA >= t.size() || faceA < 0 || faceA > 3)
        throw GluError(Err::IllegalMove, "2-3: bad slot");
    const auto& g0 = t.gluing(tetA, faceA);
    if (!g0) throw GluError(Err::IllegalMove, "2-3: face is unglued");
    const int tetB = g0->tet;
    if (tetB == tetA) throw GluError(Err::IllegalMove, "2-3: tetrahedra must be distinct");
    const Perm4 p = g0->perm;
    const int faceB = p[faceA];

    int fv[3];
    {
        int* o = fv;
        for (int v = 0; v < 4; ++v)
            if (v != faceA) *o++ = v;
    }
    auto lbl = [&](int m, int j) {
        // Label of face vertex fv[j] inside fresh tet m (j != m).
        int kept0 = (m == 0) ? 1 : 0;
        return (j == kept0) ? 2 : 3;
    };

    Builder b(t);
    b.removed = {std::min(tetA, tetB), std::max(tetA, tetB)};
    b.fresh.resize(3);
    for (int m = 0; m < 3; ++m)
        for (int m2 = m + 1; m2 < 3; ++m2) {
            int shared = 3 - m - m2;
            int arr[4];
            arr[0] = 0;
            arr[1] = 1;
            arr[lbl(m, shared)] = lbl(m2, shared);
            arr[lbl(m, m2)] = lbl(m2, m);
            b.glue_fresh(m, lbl(m, m2), m2, lbl(m2, m), Perm4(arr[0], arr[1], arr[2], arr[3]));
        }
    for (int m = 0; m < 3; ++m) {
        int ra[4];
        ra[faceA] = 0;
        ra[fv[m]] = 1;
        for (int j = 0; j < 3; ++j)
            if (j != m) ra[fv[j]] = lbl(m, j);
        b.ext[{tetA, fv[m]}] = {m, 1, Perm4(ra[0], ra[1], ra[2], ra[3])};
        int rb[4];
        rb[faceB] = 1;
        rb[p[fv[m]]] = 0;
        for (int j = 0; j < 3; ++j)
            if (j != m) rb[p[fv[j]]] = lbl(m, j);
        b.ext[{tetB, p[fv[m]]}] = {m, 0, Perm4(rb[0], rb[1], rb[2], rb[3])};
    }
    return b.finish(MoveKind::M32, {~0, 0});
}

// (3-2): fresh tet 0 keeps edge endpoint u0, fresh tet 1 keeps u1; rim
// symbol y_m (between star entries m and m+1) gets label m+1 in both.
MoveResult apply_32(const Triangulation& t, int tet, int edge) {
    if (tet < 0 || tet >= t.size() || edge < 0 || edge > 5)
        throw GluError(Err::IllegalMove, "3-2: bad slot");
    EdgeStar star = edge_star(t, tet, edge);
    if (!star.closed || star.flipped || star.entries.size() != 3)
        throw GluError(Err::IllegalMove, "3-2: edge star is not an embedded degree-3 cycle");
    const auto& e = star.entries;
    if (e[0].tet == e[1].tet || e[0].tet == e[2].tet || e[1].tet == e[2].tet)
        throw GluError(Err::IllegalMove, "3-2: tetrahedra must be distinct");

    Builder b(t);
    b.removed = {e[0].tet, e[1].tet, e[2].tet};
    std::sort(b.removed.begin(), b.removed.end());
    b.fresh.resize(2);
    b.glue_fresh(0, 0, 1, 0, Perm4());

    for (int m = 0; m < 3; ++m) {
        int ym = m + 1;                  // label of y_m
        int miss = ((m + 1) % 3) + 1;    // label of y_{m+1}, absent from entry m
        int prev = ((m + 2) % 3) + 1;    // label of y_{m-1}
        int ra[4];
        ra[e[m].u0] = 0;
        ra[e[m].side_in] = prev;
        ra[e[m].side_out] = ym;
        ra[e[m].u1] = miss;
        b.ext[{e[m].tet, e[m].u1}] = {0, miss, Perm4(ra[0], ra[1], ra[2], ra[3])};
        int rb[4];
        rb[e[m].u1] = 0;
        rb[e[m].side_in] = prev;
        rb[e[m].side_out] = ym;
        rb[e[m].u0] = miss;
        b.ext[{e[m].tet, e[m].u0}] = {1, miss, Perm4(rb[0], rb[1], rb[2], rb[3])};
    }
    return b.finish(MoveKind::M23, {~0, 0});
}

// (4-1): label maps phi_k are propagated from corner 0 across the internal
// faces of the star; the standard star is the only configuration for which
// this closes consistently.
MoveResult apply_41(const Triangulation& t, int tet, int vertex) {
    if (tet < 0 || tet >= t.size() || vertex < 0 || vertex > 3)
        throw GluError(Err::IllegalMove, "4-1: bad slot");
    SimplexClasses cls = simplex_classes(t);
    const int cid = cls.vertex_class[4 * tet + vertex];
    std::vector<std::pair<int, int>> corners;
    for (int i = 0; i < t.size(); ++i)
        for (int v = 0; v < 4; ++v)
            if (cls.vertex_class[4 * i + v] == cid) corners.emplace_back(i, v);
    if (corners.size() != 4) throw GluError(Err::IllegalMove, "4-1: vertex class does not have degree 4");
    for (int a = 0; a < 4; ++a)
        for (int c = a + 1; c < 4; ++c)
            if (corners[a].first == corners[c].first)
                throw GluError(Err::IllegalMove, "4-1: star tetrahedra must be distinct");

    constexpr int kApex = 4;
    std::array<std::array<int, 4>, 4> phi{};
    std::array<int, 4> rep{};
    std::array<bool, 4> done{};
    auto corner_index = [&](int tt) {
        for (int k = 0; k < 4; ++k)
            if (corners[k].first == tt) return k;
        return -1;
    };
    {
        auto [t0, v0] = corners[0];
        (void)t0;
        int next = 0;
        for (int x = 0; x < 4; ++x) phi[0][x] = (x == v0) ? kApex : next++;
        rep[0] = 3;
        done[0] = true;
    }
    std::vector<int> queue = {0};
    while (!queue.empty()) {
        int k = queue.back();
        queue.pop_back();
        auto [tk, vk] = corners[k];
        for (int f = 0; f < 4; ++f) {
            if (f == vk) continue;
            const auto& g = t.gluing(tk, f);
            if (!g) throw GluError(Err::IllegalMove, "4-1: star face unglued");
            const Perm4& p = g->perm;
            int m = corner_index(g->tet);
            if (m < 0 || p[vk] != corners[m].second)
                throw GluError(Err::IllegalMove, "4-1: star not closed around the vertex");
            std::array<int, 4> cand{};
            cand[p[f]] = rep[k];
            for (int x = 0; x < 4; ++x)
                if (x != f) cand[p[x]] = phi[k][x];
            int crep = phi[k][f];
            if (!done[m]) {
                phi[m] = cand;
                rep[m] = crep;
                done[m] = true;
                queue.push_back(m);
            } else if (phi[m] != cand || rep[m] != crep) {
                throw GluError(Err::IllegalMove, "4-1: star is not the standard one");
            }
        }
    }
    if (!(done[0] && done[1] && done[2] && done[3]))
        throw GluError(Err::IllegalMove, "4-1: star not connected through the vertex");

    Builder b(t);
    for (auto& c : corners) b.removed.push_back(c.first);
    std::sort(b.removed.begin(), b.removed.end());
    b.fresh.resize(1);
    for (int k = 0; k < 4; ++k) {
        auto [tk, vk] = corners[k];
        int r[4];
        for (int x = 0; x < 4; ++x) r[x] = (x == vk) ? rep[k] : phi[k][x];
        b.ext[{tk, vk}] = {0, rep[k], Perm4(r[0], r[1], r[2], r[3])};
    }
    return b.finish(MoveKind::M14, {~0});
}

}  // namespace

std::vector<Move> enumerate_moves(const Triangulation& t) {
    std::vector<Move> out;
    for (int i = 0; i < t.size(); ++i) out.push_back({MoveKind::M14, {i}});

    for (int i = 0; i < t.size(); ++i)
        for (int k = 0; k < 4; ++k) {
            const auto& g = t.gluing(i, k);
            if (!g || g->tet == i) continue;
            if (std::pair(i, k) < std::pair(g->tet, static_cast<int>(g->perm[k])))
                out.push_back({MoveKind::M23, {i, k}});
        }

    SimplexClasses cls = simplex_classes(t);
    std::vector<char> eseen(cls.edge_count, 0);
    for (int i = 0; i < t.size(); ++i)
        for (int e = 0; e < 6; ++e) {
            int c = cls.edge_class[6 * i + e];
            if (eseen[c]) continue;
            eseen[c] = 1;  // slot order makes this the canonical representative
            EdgeStar star = edge_star(t, i, e);
            if (!star.closed || star.flipped || star.entries.size() != 3) continue;
            if (star.entries[0].tet == star.entries[1].tet || star.entries[0].tet == star.entries[2].tet ||
                star.entries[1].tet == star.entries[2].tet)
                continue;
            out.push_back({MoveKind::M32, {i, e}});
        }

    std::vector<char> vseen(cls.vertex_count, 0);
    for (int i = 0; i < t.size(); ++i)
        for (int v = 0; v < 4; ++v) {
            int c = cls.vertex_class[4 * i + v];
            if (vseen[c]) continue;
            vseen[c] = 1;
            try {
                apply_41(t, i, v);
            } catch (const GluError&) {
                continue;
            }
            out.push_back({MoveKind::M41, {i, v}});
        }
    return out;
}

MoveResult apply_move(const Triangulation& t, const Move& m) {
    switch (m.kind) {
        case MoveKind::M14:
            if (m.site.size() != 1) throw GluError(Err::IllegalMove, "1-4: site is {tet}");
            return apply_14(t, m.site[0]);
        case MoveKind::M23:
            if (m.site.size() != 2) throw GluError(Err::IllegalMove, "2-3: site is {tet, face}");
            return apply_23(t, m.site[0], m.site[1]);
        case MoveKind::M32:
            if (m.site.size() != 2) throw GluError(Err::IllegalMove, "3-2: site is {tet, edge}");
            return apply_32(t, m.site[0], m.site[1]);
        case MoveKind::M41:
            if (m.site.size() != 2) throw GluError(Err::IllegalMove, "4-1: site is {tet, vertex}");
            return apply_41(t, m.site[0], m.site[1]);
        default:
            throw GluError(Err::IllegalMove, "apply_move handles elementary moves only");
    }
}

}  // namespace glu
