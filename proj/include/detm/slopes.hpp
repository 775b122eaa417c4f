#pragma once

#include <vector>

#include "detm/jets_hilbert.hpp"
#include "detm/linalg.hpp"
#include "detm/variety.hpp"

namespace detm {

// Slope of F_D under the symmetric quotient metric, with the exact offset
// interval against the (uncomputed) John metric.
struct SlopeInterval {
    long r1 = 0;
    LogValue degree;     // Arakelov degree of F_D, sym metric: (1/2)log(radicand)
    double mu_sym = 0;   // degree.value() / r1
    double r0_max = 0;   // (1/2) log r(n, D)
    double lower = 0;    // mu_sym - r0_max
    double upper = 0;    // mu_sym
};

// Diagonal Gram of the symmetric-power metric on the degree-D monomial
// basis: <x^a, x^a> = a! / D!.
std::vector<Rat> sym_gram(int n, int D);

SlopeInterval slope_F_D(const Hypersurface& X, int D);

// Slope of the full symmetric power E_D (used when D < delta and by tests).
SlopeInterval slope_full_space(int n, int D);

struct ClassTerm {
    long R = 0;   // filtration invariant at the class
    Int p = 0;    // prime
};

struct CriterionInput {
    int D = 1;
    long r1 = 0;
    SlopeInterval slope;
    std::vector<ClassTerm> classes;
    double sup_height = 0;
    int field_degree = 1;  // [K:Q]
};

// Sound form of the slope-method hypothesis: certifies with the John-interval
// lower end, so a true answer implies the existence statement.
bool criterion_holds(const CriterionInput& in);

double criterion_threshold(const CriterionInput& in);

}  // namespace detm
