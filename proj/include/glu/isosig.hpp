#ifndef GLU_ISOSIG_HPP
#define GLU_ISOSIG_HPP

#include <string>

#include "glu/triangulation.hpp"

namespace glu {

// Canonical signature: equal strings iff the gluings are simplicially
// isomorphic (tetrahedron + vertex relabeling).  Computed as the
// lexicographic minimum over all (start tetrahedron, start labeling)
// breadth-first relabelings of a fixed byte encoding.
//
// threads <= 1 runs the serial reference scan; otherwise candidate starts
// are scanned in parallel with a deterministic min-reduction.
std::string iso_signature(const Triangulation& t, int threads = 1);

bool are_isomorphic(const Triangulation& a, const Triangulation& b);

}  // namespace glu

#endif
