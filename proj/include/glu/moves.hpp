#ifndef GLU_MOVES_HPP
#define GLU_MOVES_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "glu/triangulation.hpp"

namespace glu {

enum class MoveKind {
    M14,
    M41,
    M23,
    M32,
    TwoD13,
    TwoD22,
    TwoD31,
    VertexAdd,
    ConeShell,
};

const char* move_kind_name(MoveKind k);
std::optional<MoveKind> move_kind_from_name(const std::string& s);
bool is_elementary(MoveKind k);
MoveKind inverse_kind(MoveKind k);

// A move with its canonical site encoding, in current-triangulation indices:
//   M14 {tet}            M41 {tet, vertex}
//   M23 {tet, face}      M32 {tet, edge}
//   TwoD13 {tet, face}   TwoD22 {tet, face, offvertex}   TwoD31 {tet, face, xlabel}
//   VertexAdd {tet, edge}
//   ConeShell {shelling order ...}
struct Move {
    MoveKind kind;
    std::vector<int> site;

    bool operator==(const Move& o) const { return kind == o.kind && site == o.site; }
};

// Renumbering convention after a move: surviving tetrahedra keep their
// relative order (indices shift down past removed ones), new tetrahedra
// are appended in canonical creation order.
struct MoveResult {
    Triangulation tri;
    Move inverse;             // canonical inverse site in the new triangulation
    std::vector<int> tet_map; // old index -> new index, -1 for consumed tets
    std::vector<int> created; // new indices of created tets, creation order
    // Where each external face of a consumed site tet went:
    // (old tet, old face) -> (created tet, face, relabel old->new labels).
    std::map<std::pair<int, int>, std::tuple<int, int, Perm4>> face_fwd;
};

// Walks the star of an edge.  Each entry is one incidence of the edge;
// endpoints are tracked coherently around the walk.
struct EdgeStarEntry {
    int tet;
    int u0, u1;       // edge endpoints in this tet's labels (oriented coherently)
    int side_in;      // label of the side vertex toward the previous entry
    int side_out;     // label of the side vertex toward the next entry
};

struct EdgeStar {
    std::vector<EdgeStarEntry> entries;
    bool closed = false;   // walk returned to the start
    bool flipped = false;  // closed, but with edge orientation reversed
};

EdgeStar edge_star(const Triangulation& t, int tet, int edge);

// Complete list of legal elementary moves, in kind order
// (1-4, 2-3, 3-2, 4-1) and site order within each kind.
std::vector<Move> enumerate_moves(const Triangulation& t);

// Applies one elementary move.  Throws IllegalMove when the site is not
// present or not embedded.  Composite kinds are not accepted here; see
// composite_moves.hpp.
MoveResult apply_move(const Triangulation& t, const Move& m);

// Move sequences are replayable: sites refer to the triangulation as it
// stands when the move is applied.
struct MoveSequence {
    std::string initial;
    std::vector<Move> moves;
    std::string final_sig;
};

struct ReplayResult {
    Triangulation tri;
    std::vector<Move> elementary;  // composite moves expanded as applied
};

ReplayResult replay(const Triangulation& start, const std::vector<Move>& moves);

// Builds a MoveSequence record (computes endpoint signatures).
MoveSequence make_sequence(const Triangulation& start, const std::vector<Move>& moves);

}  // namespace glu

#endif
