#pragma once

#include "sqdepth/instance.hpp"

namespace sqdepth {

// Depth of S/J from reduced simplicial homology of restrictions of the
// complex of monomials outside J:
//   depth = n - max{ i : H~_{|a|-i-1}(restriction to a) != 0 for some a }.
// Independent route from the Koszul engine (own complexes, own elimination).
// Requires J proper (not the unit ideal); J = 0 gives depth n.
int hochster_depth_oracle(const MonomialIdeal& j, FieldSpec field);

}  // namespace sqdepth
