#ifndef GLU_SHELLING_HPP
#define GLU_SHELLING_HPP

#include <optional>

#include "glu/moves.hpp"

namespace glu {

// Searches for a shelling order of a combinatorial 3-ball: an ordering of
// the tetrahedra such that removing them front-to-back leaves a connected
// ball at every stage (each removed tetrahedron meets the remainder in 1-3
// faces).  Exhaustive DFS with a transposition table; `budget` caps visited
// states.  Throws BudgetExceeded if the budget runs out before the search
// space is exhausted; returns nullopt if exhausted without success.
std::optional<std::vector<int>> shelling_order(const Triangulation& ball, long long budget = 2'000'000);

struct ConeShellingResult {
    Triangulation tri;
    std::vector<Move> elementary;  // exactly ball.size() moves
};

// Lickorish coning: converts a shellable ball into the cone on its
// boundary, emitting one elementary move per tetrahedron: a (1-4) on the
// last simplex of the shelling, then a (2-3)/(3-2)/(4-1) per earlier
// simplex according to how many faces it shares with the coned part.
ConeShellingResult cone_shelling(const Triangulation& ball, const std::vector<int>& order);

// Same, but also reports per-step data for transporting the run onto
// another triangulation (used by the subdivision sequencer).
struct ConeShellingTrace {
    Triangulation final_tri;
    std::vector<Move> moves;               // as applied, in order
    std::vector<Triangulation> states;     // states[0] = input, states[i] = after move i
    std::vector<MoveResult> results;       // result of move i applied to states[i-1]... (size = moves)
};

ConeShellingTrace cone_shelling_trace(const Triangulation& ball, const std::vector<int>& order);

}  // namespace glu

#endif
