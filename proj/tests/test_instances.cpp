#include "test_instances.hpp"

#include "glu/isosig.hpp"
#include "glu/links.hpp"
#include "glu/moves.hpp"

namespace glu::testing {

Triangulation double_of_tetrahedron() {
    RawGluingData raw;
    raw.tets.resize(2);
    for (int k = 0; k < 4; ++k) {
        raw.tets[0][k] = Gluing{1, Perm4()};
        raw.tets[1][k] = Gluing{0, Perm4()};
    }
    return Triangulation::validate(raw);
}

namespace {

// Enumerates closed one-tetrahedron gluings: pair the 4 faces into 2 pairs,
// each with one of the 24 maps; keep those passing `pred`.
template <typename Pred>
Triangulation first_one_tet(Pred pred) {
    static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& pr : pairings) {
        for (int q1 = 0; q1 < 24; ++q1) {
            Perm4 p1 = Perm4::from_index(q1);
            if (p1[pr[0]] != pr[1]) continue;
            for (int q2 = 0; q2 < 24; ++q2) {
                Perm4 p2 = Perm4::from_index(q2);
                if (p2[pr[2]] != pr[3]) continue;
                RawGluingData raw;
                raw.tets.resize(1);
                raw.tets[0][pr[0]] = Gluing{0, p1};
                raw.tets[0][pr[1]] = Gluing{0, p1.inverse()};
                raw.tets[0][pr[2]] = Gluing{0, p2};
                raw.tets[0][pr[3]] = Gluing{0, p2.inverse()};
                try {
                    Triangulation t = Triangulation::validate(raw);
                    if (pred(t)) return t;
                } catch (const GluError&) {
                }
            }
        }
    }
    throw GluError(Err::BadInput, "no one-tetrahedron gluing matches the predicate");
}

}  // namespace

Triangulation one_tet_manifold() {
    return first_one_tet([](const Triangulation& t) { return is_closed_3_manifold(t); });
}

Triangulation one_tet_non_manifold() {
    return first_one_tet([](const Triangulation& t) { return !is_closed_3_manifold(t); });
}

Triangulation relabel(const Triangulation& t, std::mt19937_64& rng) {
    const int n = t.size();
    std::vector<int> tp(n);
    for (int i = 0; i < n; ++i) tp[i] = i;
    std::shuffle(tp.begin(), tp.end(), rng);
    std::vector<Perm4> vp(n);
    for (int i = 0; i < n; ++i) vp[i] = Perm4::from_index(static_cast<int>(rng() % 24));

    std::vector<FaceSlots> out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < 4; ++k) {
            const auto& g = t.gluing(i, k);
            if (!g) continue;
            const int j = g->tet;
            out[tp[i]][vp[i][k]] = Gluing{tp[j], vp[i].inverse().then(g->perm).then(vp[j])};
        }
    RawGluingData raw{std::move(out)};
    return Triangulation::validate(raw, true);
}

Triangulation scramble(const Triangulation& t, int k, unsigned seed) {
    std::mt19937_64 rng(seed);
    Triangulation cur = t;
    for (int step = 0; step < k; ++step) {
        std::vector<Move> ms = enumerate_moves(cur);
        // Keep growth bounded: prefer shrinking/neutral moves on large
        // triangulations, growing ones on small.
        std::vector<Move> pool;
        for (const auto& m : ms) {
            if (cur.size() > 3 * t.size() && (m.kind == MoveKind::M14 || m.kind == MoveKind::M23)) continue;
            pool.push_back(m);
        }
        if (pool.empty()) pool = ms;
        cur = apply_move(cur, pool[rng() % pool.size()]).tri;
    }
    return cur;
}

std::vector<Triangulation> instance_suite(const std::vector<int>& sizes) {
    std::vector<Triangulation> out;
    for (int target : sizes) {
        if (target <= 1) {
            out.push_back(one_tet_manifold());
            continue;
        }
        Triangulation cur = double_of_tetrahedron();
        unsigned salt = 0;
        while (cur.size() < target) {
            // Grow deterministically: a (2-3) when possible, else a (1-4).
            std::vector<Move> ms = enumerate_moves(cur);
            Move pick{MoveKind::M14, {static_cast<int>(salt) % cur.size()}};
            for (const auto& m : ms)
                if (m.kind == MoveKind::M23 && cur.size() + 1 <= target) {
                    pick = m;
                    break;
                }
            if (cur.size() + 1 > target) break;
            cur = apply_move(cur, pick).tri;
            ++salt;
        }
        // Adjust to the exact size with (1-4)s (+3) only if it fits.
        while (cur.size() + 3 <= target) cur = apply_move(cur, Move{MoveKind::M14, {0}}).tri;
        out.push_back(cur);
    }
    return out;
}

}  // namespace glu::testing
