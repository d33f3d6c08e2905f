#ifndef GLU_TRIANGULATION_HPP
#define GLU_TRIANGULATION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "glu/errors.hpp"
#include "glu/perm4.hpp"

namespace glu {

// One face-gluing record: face k of some tetrahedron is glued to
// tetrahedron `tet` via the vertex-label permutation `perm`.  The target
// face is perm[k].  The record stored at the target is the inverse.
struct Gluing {
    int tet = -1;
    Perm4 perm;

    bool operator==(const Gluing& o) const { return tet == o.tet && perm == o.perm; }
};

using FaceSlots = std::array<std::optional<Gluing>, 4>;

// Raw, unchecked gluing data as read from a file or built by a caller.
struct RawGluingData {
    std::vector<FaceSlots> tets;
};

// Static tables for the six edges of a tetrahedron.
// Edge e joins vertices edge_v0(e), edge_v1(e); edges are listed in
// lexicographic order of their vertex pairs.
inline constexpr int kEdgeV0[6] = {0, 0, 0, 1, 1, 2};
inline constexpr int kEdgeV1[6] = {1, 2, 3, 2, 3, 3};

inline int edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    static constexpr int tab[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return tab[a][b];
}

// A 3-dimensional gluing: tetrahedra with face-pairing permutations.
// Faces may be left unglued (boundary) for internal ball machinery; the
// closed-manifold pipeline requires every face glued.
class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(std::vector<FaceSlots> glu) : glu_(std::move(glu)) {}

    int size() const { return static_cast<int>(glu_.size()); }
    bool empty() const { return glu_.empty(); }

    const std::optional<Gluing>& gluing(int tet, int face) const { return glu_[tet][face]; }
    const FaceSlots& tet(int i) const { return glu_[i]; }

    bool is_closed() const;
    int boundary_face_count() const;
    bool is_connected() const;

    // Checks pairing structure; throws GluError on violation.  With
    // allow_boundary, unglued faces are accepted (for ball machinery).
    static Triangulation validate(const RawGluingData& raw, bool allow_boundary = false);

    // Unchecked access for the move engine; callers re-validate.
    std::vector<FaceSlots>& raw() { return glu_; }
    const std::vector<FaceSlots>& raw() const { return glu_; }

    bool operator==(const Triangulation& o) const { return glu_ == o.glu_; }

private:
    std::vector<FaceSlots> glu_;
};

// Partition of the simplices of a triangulation after gluing, via
// slot-level union-find.  Slot numbering: vertex slot = 4*tet + v,
// edge slot = 6*tet + e, face slot = 4*tet + f.
struct SimplexClasses {
    std::vector<int> vertex_class;    // size 4t, values 0..V-1
    std::vector<int> edge_class;      // size 6t, values 0..E-1
    std::vector<int> face_class;      // size 4t, values 0..F-1
    int vertex_count = 0;
    int edge_count = 0;
    int face_count = 0;
};

SimplexClasses simplex_classes(const Triangulation& t);

struct SkeletonReport {
    int vertex_classes = 0;
    int edge_classes = 0;
    int triangle_classes = 0;
    int tetrahedra = 0;
    int euler_characteristic = 0;
};

SkeletonReport skeleton(const Triangulation& t);

// Members of each edge class as (tet, edge) slots, in slot order.
std::vector<std::vector<std::pair<int, int>>> edge_class_members(const Triangulation& t,
                                                                 const SimplexClasses& cls);
std::vector<std::vector<std::pair<int, int>>> vertex_class_members(const Triangulation& t,
                                                                   const SimplexClasses& cls);

}  // namespace glu

#endif
