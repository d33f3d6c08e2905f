#ifndef GLU_ORIENTATION_HPP
#define GLU_ORIENTATION_HPP

#include <optional>
#include <vector>

#include "glu/triangulation.hpp"

namespace glu {

// Assigns +1/-1 per tetrahedron so that every gluing reverses the induced
// boundary orientation (sign(perm) * o_i * o_j == -1), or nothing if no
// consistent assignment exists.  Each connected component's first
// tetrahedron gets +1.
std::optional<std::vector<int>> orientation_assignment(const Triangulation& t);

inline bool is_orientable(const Triangulation& t) { return orientation_assignment(t).has_value(); }

}  // namespace glu

#endif
