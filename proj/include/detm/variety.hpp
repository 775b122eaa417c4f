#pragma once

#include <vector>

#include "detm/form.hpp"
#include "detm/jet.hpp"
#include "detm/projpoint.hpp"

namespace detm {

// X subset P^n_Q cut out by one irreducible primitive form; d = n - 1.
struct Hypersurface {
    int n = 2;
    int delta = 1;
    Form f;

    int d() const { return n - 1; }
};

// f must be homogeneous with integer coprime coefficients; irreducibility is
// asserted by the caller and spot-checked for small degree.
Hypersurface make_hypersurface(Form f);

struct ResidueClass {
    long p = 0;
    FpPoint point_mod_p;
    bool regular = false;
    std::vector<ProjPoint> members;
};

// All canonical primitive points with f(P) = 0 and sum of squares <= B^2,
// found by scanning the box |x_i| <= B. Deterministic order.
std::vector<ProjPoint> enumerate_points(const Hypersurface& X, const Rat& B);

// Local vanishing order of f at P (1 iff regular); throws if P not on X.
int multiplicity(const Hypersurface& X, const ProjPoint& P);

bool is_regular_point(const Hypersurface& X, const ProjPoint& P);

// Gradient of f mod p vanishes together with f at the reduced point.
std::vector<FpPoint> singular_points_mod_p(const Hypersurface& X, long p);

bool is_regular_mod_p(const Hypersurface& X, const FpPoint& xi);

std::vector<ResidueClass> partition_into_classes(const Hypersurface& X,
                                                 const std::vector<ProjPoint>& points, long p);

}  // namespace detm
