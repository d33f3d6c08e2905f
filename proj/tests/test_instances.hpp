#ifndef GLU_TEST_INSTANCES_HPP
#define GLU_TEST_INSTANCES_HPP

#include <random>
#include <vector>

#include "glu/triangulation.hpp"

namespace glu::testing {

// Two tetrahedra, face k of tet 0 glued to face k of tet 1 by the identity
// map (the double of a 3-ball; topologically S^3).
Triangulation double_of_tetrahedron();

// Lexicographically first valid closed one-tetrahedron gluing that is a
// 3-manifold, found by enumeration.
Triangulation one_tet_manifold();

// Lexicographically first valid closed one-tetrahedron gluing that is NOT
// a 3-manifold (some vertex link has chi != 2).
Triangulation one_tet_non_manifold();

// Random relabeling: permutes tetrahedron indices and vertex labels.
Triangulation relabel(const Triangulation& t, std::mt19937_64& rng);

// Closed-manifold instance suite: for each requested size (tetrahedra
// count), a triangulation grown from the double of a tetrahedron by
// deterministic moves.  Sizes below 2 fall back to one_tet_manifold.
std::vector<Triangulation> instance_suite(const std::vector<int>& sizes);

// Scramble by k random legal elementary moves (bounded growth), seeded.
Triangulation scramble(const Triangulation& t, int k, unsigned seed);

}  // namespace glu::testing

#endif
