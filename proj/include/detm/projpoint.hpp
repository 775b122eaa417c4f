#pragma once

#include <vector>

#include "detm/primefield.hpp"
#include "detm/rational.hpp"

namespace detm {

// Primitive integer projective point: gcd of coordinates 1, first nonzero
// coordinate positive.
struct ProjPoint {
    std::vector<Int> coords;

    int dim() const { return static_cast<int>(coords.size()) - 1; }  // ambient P^n

    bool operator==(const ProjPoint& o) const { return coords == o.coords; }
    bool operator<(const ProjPoint& o) const { return coords < o.coords; }
};

// Canonicalize arbitrary integer homogeneous coordinates.
ProjPoint make_point(std::vector<Int> coords);

FpPoint reduce_mod_p(const ProjPoint& P, long p);

}  // namespace detm
