#pragma once

#include <vector>

#include "detm/linalg.hpp"
#include "detm/variety.hpp"

namespace detm {

// Integral basis of F_D = E_D / (f * E_{D-delta}) with lifts in E_D
// coordinates (grlex monomial basis of degree D).
struct GradedPiece {
    int D = 0;
    long r1 = 0;
    std::vector<Monomial> ambient_basis;      // monomial basis of E_D
    std::vector<std::vector<Int>> image_basis;  // columns spanning f * E_{D-delta}
    std::vector<std::vector<Int>> basis;      // integral lifts of a quotient basis
};

GradedPiece graded_piece(const Hypersurface& X, int D);

// Lift vectors as honest degree-D forms.
std::vector<Form> graded_basis_forms(const Hypersurface& X, const GradedPiece& gp);

// rank of E_D (binomial), 0 for negative degree
long ambient_rank(int n, int D);

// Truncation order floor(delta^{1/d} * D) + 1: jet kernels vanish from here on.
long truncation_order(int delta, int d, int D);

// dim of the classes of F_{D,K} whose on-hypersurface jet at eta vanishes to
// order >= m. eta must be on X and regular.
long jet_kernel_dim(const Hypersurface& X, int D, const ProjPoint& eta, int m);

struct FiltrationProfile {
    int D = 0;
    ProjPoint center;
    std::vector<long> dims;  // k_m for m = 1 .. truncation_order
    long R = 0;              // sum of dims
};

FiltrationProfile filtration_profile(const Hypersurface& X, int D, const ProjPoint& eta);

// d! * R / D^(d+1), the finite-D estimate of the pseudo-effective integral.
Rat empirical_I(const Hypersurface& X, const ProjPoint& eta, int D);

// True iff the profiles of two points with the same regular reduction agree.
bool check_reduction_invariance(const Hypersurface& X, int D, const ProjPoint& eta1,
                                const ProjPoint& eta2, long p);

// On-hypersurface jet of a form at a regular point, as a series in the d
// local parameters, truncated at total degree trunc.
LocalSeries on_hypersurface_jet(const Hypersurface& X, const Form& g, const ProjPoint& eta, int trunc);

}  // namespace detm
