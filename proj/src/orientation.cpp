#include "glu/orientation.hpp"

#include <queue>

namespace glu {

std::optional<std::vector<int>> orientation_assignment(const Triangulation& t) {
    std::vector<int> o(t.size(), 0);
    for (int root = 0; root < t.size(); ++root) {
        if (o[root] != 0) continue;
        o[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (int k = 0; k < 4; ++k) {
                const auto& g = t.gluing(i, k);
                if (!g) continue;
                int want = -g->perm.sign() * o[i];
                if (o[g->tet] == 0) {
                    o[g->tet] = want;
                    q.push(g->tet);
                } else if (o[g->tet] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return o;
}

}  // namespace glu
