#pragma once

#include "detm/form.hpp"
#include "detm/projpoint.hpp"
#include "detm/rational.hpp"

namespace detm {

struct HeightReport {
    double classic_log_height = 0;
    LogValue arakelov;  // (1/2) log(sum of squares), exact radicand
    double arakelov_log_height = 0;
    double bound_gap = 0;  // |classic - arakelov| <= (1/2) log(n+1)
};

// log max|x_i| over the primitive integer coordinates; finite places
// contribute 0 by primitivity.
double classic_log_height(const ProjPoint& P);

// (1/2) log(sum x_i^2), exact radicand retained.
LogValue arakelov_log_height(const ProjPoint& P);

HeightReport height_comparison(const ProjPoint& P);

// log of the max absolute coefficient; f must have integer coprime
// coefficients. Stand-in default for the height of the variety.
double naive_form_height(const Form& f);

// Exact test exp(arakelov height) <= B, i.e. sum x_i^2 <= B^2.
bool height_at_most(const ProjPoint& P, const Rat& B);

Rat coord_square_sum(const ProjPoint& P);

}  // namespace detm
