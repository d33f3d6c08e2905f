#ifndef GLU_SUBDIVIDE_HPP
#define GLU_SUBDIVIDE_HPP

#include <boost/rational.hpp>

#include "glu/triangulation.hpp"

namespace glu {

using Rat = boost::rational<long long>;

// Barycentric position inside a carrier tetrahedron: weights over the four
// carrier vertices, non-negative, summing to 1.
using BaryPoint = std::array<Rat, 4>;

// Carrier data for one tetrahedron of a subdivision: which tetrahedron of
// the original it lies in, and where its four vertices sit there.
struct CarrierTet {
    int carrier = -1;
    std::array<BaryPoint, 4> pos;
};

// Carrier data for a whole subdivision, indexed like its Triangulation.
struct SubdivisionData {
    std::vector<CarrierTet> tets;
};

struct Subdivision {
    Triangulation tri;
    SubdivisionData carrier;
};

// Barycentric subdivision: 24 tetrahedra per original, one per vertex flag
// (a0,a1,a2,a3).  In each small tetrahedron, label k is the barycenter of
// the k-dimensional face {a0..ak} of the original (label 0 an original
// vertex, label 3 the body barycenter); all gluing permutations are the
// identity in flag coordinates.
Subdivision barycentric_subdivision(const Triangulation& t);

}  // namespace glu

#endif
