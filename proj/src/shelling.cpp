#include "glu/shelling.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace glu {

namespace {

int glued_faces_within(const Triangulation& t, int tet, std::uint64_t inside, int* faces) {
    int n = 0;
    for (int k = 0; k < 4; ++k) {
        const auto& g = t.gluing(tet, k);
        if (g && (inside >> g->tet & 1)) faces[n++] = k;
    }
    return n;
}

bool connected_within(const Triangulation& t, std::uint64_t set) {
    if (!set) return true;
    int start = __builtin_ctzll(set);
    std::uint64_t seen = 1ull << start;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int k = 0; k < 4; ++k) {
            const auto& g = t.gluing(i, k);
            if (!g) continue;
            std::uint64_t bit = 1ull << g->tet;
            if ((set & bit) && !(seen & bit)) {
                seen |= bit;
                stack.push_back(g->tet);
            }
        }
    }
    return seen == set;
}

// Leaf candidates are verified by actually replaying the coning; a state is
// memoized as dead only when its subtree was exhausted without reaching any
// leaf, so verification failures never poison the table.
enum class DfsOut { Found, Exhausted, LeafFailed };

DfsOut dfs_shelling(const Triangulation& t, std::uint64_t remaining, std::vector<int>& order,
                    std::unordered_set<std::uint64_t>& dead, long long& budget) {
    if (__builtin_popcountll(remaining) == 1) {
        order.push_back(__builtin_ctzll(remaining));
        try {
            cone_shelling_trace(t, order);
            return DfsOut::Found;
        } catch (const GluError&) {
            order.pop_back();
            return DfsOut::LeafFailed;
        }
    }
    if (dead.count(remaining)) return DfsOut::Exhausted;
    if (--budget < 0) throw GluError(Err::BudgetExceeded, "shelling search budget exhausted");

    bool leaf_failed = false;
    for (int i = 0; i < t.size(); ++i) {
        if (!(remaining >> i & 1)) continue;
        std::uint64_t rest = remaining & ~(1ull << i);
        int faces[4];
        int f = glued_faces_within(t, i, rest, faces);
        if (f < 1 || f > 3) continue;
        if (!connected_within(t, rest)) continue;
        order.push_back(i);
        DfsOut r = dfs_shelling(t, rest, order, dead, budget);
        if (r == DfsOut::Found) return r;
        if (r == DfsOut::LeafFailed) leaf_failed = true;
        order.pop_back();
    }
    if (!leaf_failed) dead.insert(remaining);
    return leaf_failed ? DfsOut::LeafFailed : DfsOut::Exhausted;
}

}  // namespace

std::optional<std::vector<int>> shelling_order(const Triangulation& ball, long long budget) {
    const int k = ball.size();
    if (k == 0) return std::vector<int>{};
    if (k > 63) throw GluError(Err::BadInput, "shelling_order supports at most 63 tetrahedra");
    if (ball.is_closed()) throw GluError(Err::BadInput, "shelling_order expects a ball with boundary");
    if (k == 1) return std::vector<int>{0};
    std::uint64_t all = (1ull << k) - 1;
    std::vector<int> order;
    std::unordered_set<std::uint64_t> dead;
    if (dfs_shelling(ball, all, order, dead, budget) == DfsOut::Found) return order;
    return std::nullopt;
}

ConeShellingTrace cone_shelling_trace(const Triangulation& ball, const std::vector<int>& order) {
    const int k = ball.size();
    if (static_cast<int>(order.size()) != k)
        throw GluError(Err::IllegalMove, "cone_shelling: order must list every tetrahedron");
    ConeShellingTrace tr;
    tr.states.push_back(ball);

    // Current id of every original tetrahedron, and whether a current tet
    // belongs to the already-coned region.
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[i] = i;
    std::vector<char> in_region(k, 0);

    auto step = [&](const Move& m) {
        MoveResult r = apply_move(tr.states.back(), m);
        std::vector<char> region(r.tri.size(), 0);
        for (std::size_t i = 0; i < in_region.size(); ++i)
            if (r.tet_map[i] >= 0) region[r.tet_map[i]] = in_region[i];
        for (int c : r.created) region[c] = 1;
        in_region = std::move(region);
        for (auto& p : pos)
            if (p >= 0) p = r.tet_map[p];
        tr.moves.push_back(m);
        tr.states.push_back(r.tri);
        tr.results.push_back(std::move(r));
    };

    // Base case: cone the last simplex of the shelling.
    step(Move{MoveKind::M14, {pos[order[k - 1]]}});

    for (int j = k - 2; j >= 0; --j) {
        const int cur = pos[order[j]];
        if (cur < 0) throw GluError(Err::IllegalMove, "cone_shelling: simplex vanished");
        const Triangulation& s = tr.states.back();
        int faces[4], f = 0;
        for (int kk = 0; kk < 4; ++kk) {
            const auto& g = s.gluing(cur, kk);
            if (g && in_region[g->tet]) faces[f++] = kk;
        }
        if (f == 1) {
            step(Move{MoveKind::M23, {cur, faces[0]}});
        } else if (f == 2) {
            // The two region-facing faces meet along an edge; its endpoints
            // are the two labels not in {faces[0], faces[1]}.
            int a = -1, b = -1;
            for (int v = 0; v < 4; ++v)
                if (v != faces[0] && v != faces[1]) (a < 0 ? a : b) = v;
            step(Move{MoveKind::M32, {cur, edge_index(a, b)}});
        } else if (f == 3) {
            int v = -1;
            for (int x = 0; x < 4; ++x)
                if (x != faces[0] && x != faces[1] && x != faces[2]) v = x;
            step(Move{MoveKind::M41, {cur, v}});
        } else {
            throw GluError(Err::NotShellable, "cone_shelling: order is not a shelling");
        }
    }
    tr.final_tri = tr.states.back();
    assert(static_cast<int>(tr.moves.size()) == k);
    return tr;
}

ConeShellingResult cone_shelling(const Triangulation& ball, const std::vector<int>& order) {
    ConeShellingTrace tr = cone_shelling_trace(ball, order);
    return ConeShellingResult{tr.final_tri, tr.moves};
}

}  // namespace glu
