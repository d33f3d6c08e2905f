#ifndef GLU_COMPOSITE_MOVES_HPP
#define GLU_COMPOSITE_MOVES_HPP

#include "glu/moves.hpp"
#include "glu/subdivide.hpp"

namespace glu {

struct CompositeResult {
    Triangulation tri;
    std::vector<Move> elementary;  // elementary expansion, sites as applied
    // Composition of the per-step tet maps: old index -> final index
    // (-1 for tets consumed at any stage), and final ids created last.
    std::vector<int> tet_map;
};

// Suspended two-dimensional moves.  Each expands to exactly two elementary
// moves: (1-4)+(2-3) for 2D-(1-3), (2-3)+(3-2) for 2D-(2-2),
// (3-2)+(4-1) for 2D-(3-1).
//   TwoD13 {tet, face}:           the triangle; the (1-4) runs on this side.
//   TwoD22 {tet, face, offvert}:  triangle slot plus the label of its vertex
//                                 not on the flipped edge; the first (2-3)
//                                 runs across the face opposite offvert.
//   TwoD31 {tet, face, xlabel}:   triangle slot plus the label of the
//                                 degree-3 interior vertex being removed.
CompositeResult two_dim_move(const Triangulation& t, const Move& m);

// Bisects an edge whose star is an embedded cycle of k distinct tetrahedra:
// one (1-4), k-2 successive (2-3)s, one (3-2); exactly k elementary moves.
CompositeResult vertex_add_move(const Triangulation& t, int tet, int edge);

struct ConedSubdivisionResult {
    Triangulation tri;                 // 12t tetrahedra
    std::vector<Move> moves;           // t (1-4)s then 2t 2D-(1-3)s
    std::vector<Move> elementary;      // 5t elementary moves
    SubdivisionData carrier;           // over the input triangulation
};

// (1-4) on every tetrahedron, then a 2D-(1-3) on every original face.
ConedSubdivisionResult first_coned_subdivision(const Triangulation& t);

}  // namespace glu

#endif
