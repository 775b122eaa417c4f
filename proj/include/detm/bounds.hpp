#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detm/rational.hpp"

namespace detm {

// Shared inputs of the explicit-constant formulas.
struct BoundInputs {
    int n = 2;
    int d = 1;
    int delta = 1;
    Rat epsilon = 1;
    double B = 1.0;          // height bound, B >= 1
    int field_degree = 1;    // [K:Q]
    double alpha = 2.0;      // Bertrand constant, >= 2
    double h_X = 0.0;        // supplied height of X
    double mu_max_bound = 0.0;  // upper bound for the max slope of Sym^delta
    double I_value = 0.0;       // supplied or computed I invariant
};

struct BoundEntry {
    std::string name;
    double value = 0.0;
    std::string formula;  // the evaluated closed form, spelled out
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    void add(std::string name, double value, std::string formula);
    const BoundEntry* find(const std::string& name) const;
};

// Default upper bound for the max slope of Sym^delta: half the log of its rank.
double default_mu_max_bound(int n, int delta);

// C(D+d+1, d+1) - C(D-delta+d+1, d+1); negative-top binomials are 0.
Int sombra_lower_bound(int n, int d, int delta, int D);

struct RLowerBound {
    Int B_int;          // the integer cutoff B(D, d, delta)
    Rat L;              // certified lower bound L(D) for R
    double dominant_coefficient;  // d * delta^(1 + 1/d) / (d+1)!
};

RLowerBound explicit_R_lower_bound(int d, int delta, int D);

struct ChardinBound {
    Int binomial_bound;  // delta * C(D+d, D)
    Int weak_bound;      // delta * (d+1)^D
};

ChardinBound chardin_upper_bound(int delta, int d, int D);

// Closed forms of the I invariant: curve of degree delta, or a linear P^d.
Rat I_closed_form_curve(int delta);
Rat I_closed_form_linear(int d);

// d * delta^(1 + 1/d) / (d + 1)
double I_lower_bound(int d, int delta);
// Exact value when delta is a perfect d-th power (covers both closed forms).
std::optional<Rat> I_lower_bound_exact(int d, int delta);

// Dominant coefficient from the cubic-hypersurface improvement,
// 2*delta/n! + delta*(delta/2)^(1/(n-2))/(n-1)! * (1 - 2/n).
double cubic_remark_coefficient(int n, int delta);

// C_1, C_2 and C_3 = (n-d)*C_1 + C_2; checks C_3 <= c(n,d)*delta.
BoundReport constants_C123(const BoundInputs& in, int r_param = 1);

struct PrimePlan {
    double log_N0 = 0.0;
    double N0 = 0.0;
    long r = 0;
    std::vector<Int> primes;  // p_i in (alpha^(i-1) N0, alpha^i N0]
};

PrimePlan prime_plan(const BoundInputs& in);

struct CountBound {
    double A1 = 0, A2 = 0, A3 = 0;
    double C4pp = 0;     // C''_4
    double C4 = 0;       // C''_4 + 1
    double exponent = 0; // (1+eps) d delta / I
    double bound = 0;    // C_4 * B^exponent
};

CountBound count_bound(const BoundInputs& in, std::optional<double> A3_override = std::nullopt);

// Part-1 cutoff: (2d+2)^(d+1)/d! * delta * (log B/[K:Q] + (3/2)log(n+1) + 2^d)
double large_height_threshold(const BoundInputs& in);

}  // namespace detm
