#include "glu/composite_moves.hpp"

#include <algorithm>
#include <cassert>

#include "glu/isosig.hpp"
#include "glu/shelling.hpp"

namespace glu {

namespace {

void compose_map(std::vector<int>& acc, const std::vector<int>& step) {
    for (auto& x : acc)
        if (x >= 0) x = step[x];
}

int rank_in_sorted3(const int* fv, int x) {
    for (int j = 0; j < 3; ++j)
        if (fv[j] == x) return j;
    return -1;
}

}  // namespace

CompositeResult two_dim_move(const Triangulation& t, const Move& m) {
    CompositeResult out;
    out.tet_map.resize(t.size());
    for (int i = 0; i < t.size(); ++i) out.tet_map[i] = i;

    if (m.kind == MoveKind::TwoD13) {
        if (m.site.size() != 2) throw GluError(Err::IllegalMove, "2D-(1-3): site is {tet, face}");
        const int tetA = m.site[0], faceA = m.site[1];
        if (tetA < 0 || tetA >= t.size() || faceA < 0 || faceA > 3 || !t.gluing(tetA, faceA))
            throw GluError(Err::IllegalMove, "2D-(1-3): bad triangle slot");
        Move m1{MoveKind::M14, {tetA}};
        MoveResult r1 = apply_move(t, m1);
        Move m2{MoveKind::M23, {r1.created[faceA], faceA}};
        MoveResult r2 = apply_move(r1.tri, m2);
        out.tri = r2.tri;
        out.elementary = {m1, m2};
        compose_map(out.tet_map, r1.tet_map);
        compose_map(out.tet_map, r2.tet_map);
        return out;
    }

    if (m.kind == MoveKind::TwoD22) {
        if (m.site.size() != 3) throw GluError(Err::IllegalMove, "2D-(2-2): site is {tet, face, offvert}");
        const int tetA = m.site[0], faceA = m.site[1], off = m.site[2];
        if (tetA < 0 || tetA >= t.size() || faceA < 0 || faceA > 3 || off < 0 || off > 3 || off == faceA)
            throw GluError(Err::IllegalMove, "2D-(2-2): bad site");
        // First (2-3) across the face of tetA opposite `off`; its apexes are
        // the off-vertices of the two triangles.
        Move m1{MoveKind::M23, {tetA, off}};
        MoveResult r1 = apply_move(t, m1);
        // The flipped edge survives inside the created tet that omits the
        // suspension apex (old vertex faceA of tetA), at labels {2,3}.
        int fv[3];
        {
            int* o = fv;
            for (int v = 0; v < 4; ++v)
                if (v != off) *o++ = v;
        }
        const int mu = rank_in_sorted3(fv, faceA);
        Move m2{MoveKind::M32, {r1.created[mu], 5}};
        MoveResult r2 = apply_move(r1.tri, m2);
        out.tri = r2.tri;
        out.elementary = {m1, m2};
        compose_map(out.tet_map, r1.tet_map);
        compose_map(out.tet_map, r2.tet_map);
        return out;
    }

    if (m.kind == MoveKind::TwoD31) {
        if (m.site.size() != 3) throw GluError(Err::IllegalMove, "2D-(3-1): site is {tet, face, xlabel}");
        const int tetA = m.site[0], faceA = m.site[1], x = m.site[2];
        if (tetA < 0 || tetA >= t.size() || faceA < 0 || faceA > 3 || x < 0 || x > 3 || x == faceA)
            throw GluError(Err::IllegalMove, "2D-(3-1): bad site");
        // (3-2) around the edge from x up to the suspension apex (the label
        // opposite the triangle), then (4-1) at x.
        Move m1{MoveKind::M32, {tetA, edge_index(x, faceA)}};
        MoveResult r1 = apply_move(t, m1);
        // apply_32 keeps the smaller edge endpoint in created[0].
        const int keeper = (x < faceA) ? r1.created[0] : r1.created[1];
        Move m2{MoveKind::M41, {keeper, 0}};
        MoveResult r2 = apply_move(r1.tri, m2);
        out.tri = r2.tri;
        out.elementary = {m1, m2};
        compose_map(out.tet_map, r1.tet_map);
        compose_map(out.tet_map, r2.tet_map);
        return out;
    }

    throw GluError(Err::IllegalMove, "two_dim_move expects a 2D-* kind");
}

CompositeResult vertex_add_move(const Triangulation& t, int tet, int edge) {
    if (tet < 0 || tet >= t.size() || edge < 0 || edge > 5)
        throw GluError(Err::IllegalMove, "vertex-add: bad slot");
    EdgeStar star = edge_star(t, tet, edge);
    const int k = static_cast<int>(star.entries.size());
    if (!star.closed || star.flipped || k < 2)
        throw GluError(Err::IllegalMove, "vertex-add: edge star is not an embedded cycle");
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (star.entries[a].tet == star.entries[b].tet)
                throw GluError(Err::IllegalMove, "vertex-add: edge star wraps through a tetrahedron");

    CompositeResult out;
    out.tet_map.resize(t.size());
    for (int i = 0; i < t.size(); ++i) out.tet_map[i] = i;
    Triangulation cur = t;

    const auto& e0 = star.entries[0];
    // Track original star tets through renumbering.
    std::vector<int> pos(k);
    for (int m = 0; m < k; ++m) pos[m] = star.entries[m].tet;
    auto advance = [&](const std::vector<int>& step) {
        for (auto& p : pos)
            if (p >= 0) p = step[p];
        compose_map(out.tet_map, step);
    };

    // (1-4) on the first star tet.
    Move m1{MoveKind::M14, {e0.tet}};
    MoveResult r = apply_move(cur, m1);
    out.elementary.push_back(m1);
    cur = r.tri;
    int cone_in = r.created[e0.side_in];    // contains (u, v, x, w_1); face side_in leads on
    int cone_out = r.created[e0.side_out];  // contains (u, v, x, w_k)
    advance(r.tet_map);

    // Chain of (2-3)s connecting x to w_2 .. w_{k-1}.
    int chain = cone_in;
    int chain_face = e0.side_in;  // face of `chain` shared with the next star tet
    int u_lab = e0.u0, v_lab = e0.u1, x_lab = e0.side_in, w_lab = e0.side_out;
    for (int stepi = 0; stepi < k - 2; ++stepi) {
        Move mm{MoveKind::M23, {chain, chain_face}};
        MoveResult rr = apply_move(cur, mm);
        out.elementary.push_back(mm);
        cur = rr.tri;
        int fv[3];
        {
            int* o = fv;
            for (int v = 0; v < 4; ++v)
                if (v != chain_face) *o++ = v;
        }
        // The 2-3 names: apexA = x (label chain_face), face verts {u, v, w}.
        // The created tet omitting w carries the edge (u, v); its labels are
        // x=0, w_next=1, u/v at 2/3 in sorted order.
        const int mw = rank_in_sorted3(fv, w_lab);
        int new_chain = rr.created[mw];
        int nu = (u_lab < v_lab) ? 2 : 3;
        cone_out = rr.tet_map[cone_out];
        advance(rr.tet_map);
        chain = new_chain;
        chain_face = 0;  // face of the fresh tet opposite x: toward the next star tet
        u_lab = nu;
        v_lab = 5 - nu;
        x_lab = 0;
        w_lab = 1;
        if (cone_out < 0) throw GluError(Err::IllegalMove, "vertex-add: star collapsed unexpectedly");
    }

    // Final (3-2) removes the original edge.
    Move mf{MoveKind::M32, {chain, edge_index(u_lab, v_lab)}};
    MoveResult rf = apply_move(cur, mf);
    out.elementary.push_back(mf);
    out.tri = rf.tri;
    compose_map(out.tet_map, rf.tet_map);
    assert(static_cast<int>(out.elementary.size()) == k);
    return out;
}

ConedSubdivisionResult first_coned_subdivision(const Triangulation& t) {
    ConedSubdivisionResult out;
    const int n = t.size();
    if (!t.is_closed()) throw GluError(Err::UnpairedFace, "first coned subdivision expects a closed gluing");

    Triangulation cur = t;

    // Roles of current tets during construction.
    struct Role {
        int kind = 0;  // 0: untouched original, 1: cone(orig, face), 2: final
        int orig = -1;
        int face = -1;  // face of `orig` this piece sits over
        // kind 2 only: labels of the tet centre and face centre, and the
        // original vertex label behind each remaining label.
        int lbl_center = -1, lbl_facec = -1;
        std::array<int, 4> orig_vertex{-1, -1, -1, -1};
    };
    std::vector<Role> role(n);
    for (int i = 0; i < n; ++i) role[i] = Role{0, i, -1, -1, -1, {-1, -1, -1, -1}};

    auto advance = [&](const MoveResult& r, std::vector<Role> fresh_roles) {
        std::vector<Role> nr(r.tri.size());
        for (std::size_t i = 0; i < role.size(); ++i)
            if (r.tet_map[i] >= 0) nr[r.tet_map[i]] = role[i];
        for (std::size_t c = 0; c < r.created.size(); ++c) nr[r.created[c]] = fresh_roles[c];
        role = std::move(nr);
    };

    // Phase 1: cone every original tetrahedron.
    for (int i = 0; i < n; ++i) {
        int cur_id = -1;
        for (int c = 0; c < cur.size(); ++c)
            if (role[c].kind == 0 && role[c].orig == i) cur_id = c;
        Move m{MoveKind::M14, {cur_id}};
        MoveResult r = apply_move(cur, m);
        out.moves.push_back(m);
        out.elementary.push_back(m);
        std::vector<Role> fr(4);
        for (int kf = 0; kf < 4; ++kf) fr[kf] = Role{1, i, kf, -1, -1, {-1, -1, -1, -1}};
        advance(r, fr);
        cur = r.tri;
    }

    // Phase 2: one 2D-(1-3) per original face pair, in canonical slot order.
    for (int i = 0; i < n; ++i)
        for (int kf = 0; kf < 4; ++kf) {
            const auto& g = t.gluing(i, kf);
            const int j = g->tet, kf2 = g->perm[kf];
            if (std::pair(i, kf) > std::pair(j, kf2)) continue;
            const Perm4 p = g->perm;

            int coneA = -1, coneB = -1;
            for (int c = 0; c < cur.size(); ++c) {
                if (role[c].kind != 1) continue;
                if (role[c].orig == i && role[c].face == kf) coneA = c;
                if (role[c].orig == j && role[c].face == kf2) coneB = c;
            }
            assert(coneA >= 0 && coneB >= 0 && coneA != coneB);

            // Elementary expansion of the 2D-(1-3), with role bookkeeping.
            Move m1{MoveKind::M14, {coneA}};
            MoveResult r1 = apply_move(cur, m1);
            // Fresh cones of coneA: N_l = coneA with vertex l swapped for the
            // face centre.  N_l for l != kf are final i-side tets.
            std::vector<Role> fr1(4);
            for (int l = 0; l < 4; ++l) {
                Role rr;
                if (l == kf) {
                    rr.kind = 1;  // transient; consumed by the 2-3 below
                    rr.orig = i;
                    rr.face = kf;
                } else {
                    rr.kind = 2;
                    rr.orig = i;
                    rr.face = kf;
                    rr.lbl_center = kf;
                    rr.lbl_facec = l;
                    for (int v = 0; v < 4; ++v)
                        if (v != kf && v != l) rr.orig_vertex[v] = v;
                }
                fr1[l] = rr;
            }
            int carrier23 = r1.created[kf];
            advance(r1, fr1);
            cur = r1.tri;

            Move m2{MoveKind::M23, {carrier23, kf}};
            MoveResult r2 = apply_move(cur, m2);
            // Created tets omit face vertex fv[m]; labels: 0 = face centre,
            // 1 = centre of tet j, kept vertices at 2/3 in sorted order.
            int fv[3];
            {
                int* o = fv;
                for (int v = 0; v < 4; ++v)
                    if (v != kf) *o++ = v;
            }
            std::vector<Role> fr2(3);
            for (int mm = 0; mm < 3; ++mm) {
                Role rr;
                rr.kind = 2;
                rr.orig = j;
                rr.face = kf2;
                rr.lbl_facec = 0;
                rr.lbl_center = 1;
                int kept[2], c2 = 0;
                for (int x = 0; x < 3; ++x)
                    if (x != mm) kept[c2++] = x;
                rr.orig_vertex[2] = p[fv[kept[0]]];
                rr.orig_vertex[3] = p[fv[kept[1]]];
                fr2[mm] = rr;
            }
            advance(r2, fr2);
            cur = r2.tri;

            out.moves.push_back(Move{MoveKind::TwoD13, {coneA, kf}});
            out.elementary.push_back(m1);
            out.elementary.push_back(m2);
        }

    out.tri = cur;
    assert(out.tri.size() == 12 * n);

    out.carrier.tets.resize(out.tri.size());
    for (int c = 0; c < out.tri.size(); ++c) {
        const Role& rr = role[c];
        assert(rr.kind == 2);
        CarrierTet ct;
        ct.carrier = rr.orig;
        for (auto& pt : ct.pos) pt = {Rat(0), Rat(0), Rat(0), Rat(0)};
        for (int l = 0; l < 4; ++l) {
            if (l == rr.lbl_center) {
                for (int v = 0; v < 4; ++v) ct.pos[l][v] = Rat(1, 4);
            } else if (l == rr.lbl_facec) {
                for (int v = 0; v < 4; ++v)
                    if (v != rr.face) ct.pos[l][v] = Rat(1, 3);
            } else {
                ct.pos[l][rr.orig_vertex[l]] = Rat(1);
            }
        }
        out.carrier.tets[c] = ct;
    }
    return out;
}

ReplayResult replay(const Triangulation& start, const std::vector<Move>& moves) {
    ReplayResult out;
    out.tri = start;
    for (const Move& m : moves) {
        if (is_elementary(m.kind)) {
            MoveResult r = apply_move(out.tri, m);
            out.tri = std::move(r.tri);
            out.elementary.push_back(m);
        } else if (m.kind == MoveKind::TwoD13 || m.kind == MoveKind::TwoD22 || m.kind == MoveKind::TwoD31) {
            CompositeResult r = two_dim_move(out.tri, m);
            out.tri = std::move(r.tri);
            out.elementary.insert(out.elementary.end(), r.elementary.begin(), r.elementary.end());
        } else if (m.kind == MoveKind::VertexAdd) {
            if (m.site.size() != 2) throw GluError(Err::IllegalMove, "VERTEX-ADD: site is {tet, edge}");
            CompositeResult r = vertex_add_move(out.tri, m.site[0], m.site[1]);
            out.tri = std::move(r.tri);
            out.elementary.insert(out.elementary.end(), r.elementary.begin(), r.elementary.end());
        } else if (m.kind == MoveKind::ConeShell) {
            ConeShellingResult r = cone_shelling(out.tri, m.site);
            out.tri = std::move(r.tri);
            out.elementary.insert(out.elementary.end(), r.elementary.begin(), r.elementary.end());
        } else {
            throw GluError(Err::IllegalMove, "unknown move kind in replay");
        }
    }
    return out;
}

MoveSequence make_sequence(const Triangulation& start, const std::vector<Move>& moves) {
    MoveSequence s;
    s.initial = iso_signature(start);
    s.moves = moves;
    s.final_sig = iso_signature(replay(start, moves).tri);
    return s;
}

}  // namespace glu
