#include "glu/subdivide.hpp"

namespace glu {

namespace {

std::array<int, 4> flag_of(int idx) {
    Perm4 p = Perm4::from_index(idx);
    return {p[0], p[1], p[2], p[3]};
}

int index_of(const std::array<int, 4>& f) { return Perm4(f[0], f[1], f[2], f[3]).index(); }

}  // namespace

Subdivision barycentric_subdivision(const Triangulation& t) {
    Subdivision out;
    const int n = t.size();
    std::vector<FaceSlots> glu(static_cast<std::size_t>(24) * n);
    out.carrier.tets.resize(static_cast<std::size_t>(24) * n);

    for (int i = 0; i < n; ++i) {
        for (int s = 0; s < 24; ++s) {
            const auto f = flag_of(s);
            const int id = 24 * i + s;

            // Interior walls: swap adjacent flag entries.
            for (int face = 0; face < 3; ++face) {
                auto g = f;
                std::swap(g[face], g[face + 1]);
                glu[id][face] = Gluing{24 * i + index_of(g), Perm4()};
            }
            // Face 3 lies on the original face opposite f[3].
            const auto& big = t.gluing(i, f[3]);
            if (big) {
                const Perm4& p = big->perm;
                std::array<int, 4> g = {p[f[0]], p[f[1]], p[f[2]], p[f[3]]};
                glu[id][3] = Gluing{24 * big->tet + index_of(g), Perm4()};
            }

            CarrierTet& ct = out.carrier.tets[id];
            ct.carrier = i;
            for (auto& pt : ct.pos) pt = {Rat(0), Rat(0), Rat(0), Rat(0)};
            for (int k = 0; k < 4; ++k)
                for (int m = 0; m <= k; ++m) ct.pos[k][f[m]] = Rat(1, k + 1);
        }
    }
    out.tri = Triangulation(std::move(glu));
    return out;
}

}  // namespace glu
