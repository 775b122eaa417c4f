#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detm/bounds.hpp"
#include "detm/jets_hilbert.hpp"
#include "detm/variety.hpp"

namespace detm {

struct AuxiliaryForm {
    Form form;                // integer coprime coefficients, not in (f)
    int degree_used = 0;
    std::vector<ProjPoint> covered_points;
    std::optional<ResidueClass> class_info;
};

// Exact kernel of the evaluation of the F_D basis at the points; the returned
// form is the kernel element with smallest grlex leading monomial, integer
// canonical. Absent when the evaluation map is injective.
std::optional<AuxiliaryForm> find_auxiliary_form(const Hypersurface& X,
                                                 const std::vector<ProjPoint>& points, int D);

struct DetCheck {
    std::optional<long> valuation;  // v_p(det); nullopt encodes det = 0
    Int det = 0;
    long R = 0;
    bool holds = false;  // valuation >= R (infinite valuation always holds)
};

// p-adic smallness of the interpolation determinant: needs exactly r_1(D)
// points, all with the same regular reduction mod p.
DetCheck determinant_valuation_check(const Hypersurface& X, const std::vector<ProjPoint>& points,
                                     int D, long p);

// A partial derivative of f (smallest grlex leading monomial, canonicalized);
// it vanishes on the singular locus and is not in (f). Absent for delta = 1,
// where the singular locus is empty.
std::optional<AuxiliaryForm> singular_cover(const Hypersurface& X);

struct ClassOutcome {
    long p = 0;
    FpPoint class_point;
    bool regular = true;
    std::vector<ProjPoint> members;
    bool success = false;
    int D_used = 0;
    Form form;
};

struct ExperimentConfig {
    int max_degree = 8;
    int jobs = 1;
    std::optional<double> h_X;      // override for the height of X
    std::optional<double> I_value;  // override for the I invariant
};

struct ExperimentReport {
    std::string variety;
    double B = 0;
    Rat epsilon;
    double h_X = 0;
    double I_value = 0;
    bool part1 = false;  // large-height single-cover branch taken
    std::vector<Int> primes;
    std::vector<ClassOutcome> outcomes;
    std::optional<AuxiliaryForm> singular;
    std::vector<Form> forms;             // all emitted covering forms
    std::vector<ProjPoint> points;       // S(X;B)
    std::vector<ProjPoint> uncovered;    // points no emitted form vanishes at
    long total_forms = 0;
    double count_bound_value = 0;
    double wall_seconds = 0;
    bool all_covered = false;
};

ExperimentReport run_experiment(const Hypersurface& X, double B, const Rat& epsilon,
                                const ExperimentConfig& config = {});

}  // namespace detm
