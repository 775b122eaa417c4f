#pragma once

#include <map>
#include <optional>
#include <vector>

#include "detm/form.hpp"
#include "detm/projpoint.hpp"
#include "detm/rational.hpp"

namespace detm {

// Truncated polynomial in local parameters: terms of total degree <= max_deg,
// exact rational coefficients.
class LocalSeries {
public:
    using Key = std::vector<int>;

    LocalSeries(int nvars, int max_deg) : nvars_(nvars), max_deg_(max_deg) {}

    int nvars() const { return nvars_; }
    int max_deg() const { return max_deg_; }
    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const Rat& c);
    Rat coeff(const Key& k) const;

    LocalSeries operator+(const LocalSeries& o) const;
    LocalSeries operator-(const LocalSeries& o) const;
    LocalSeries operator*(const LocalSeries& o) const;
    LocalSeries operator*(const Rat& c) const;

    // terms of total degree exactly k
    LocalSeries homogeneous_part(int k) const;
    // lowest total degree with a nonzero term, or nullopt for 0
    std::optional<int> order() const;

    // substitute variable `var` by series `value` (which must not involve `var`)
    LocalSeries substitute(int var, const LocalSeries& value) const;
    // drop variable `var` (must have exponent 0 everywhere), renumbering the rest
    LocalSeries drop_var(int var) const;

private:
    int nvars_;
    int max_deg_;
    std::map<Key, Rat> terms_;
};

// Taylor expansion of a form at a rational point, in the affine chart where
// one coordinate is scaled to 1 and the point is translated to the origin.
struct JetExpansion {
    ProjPoint center;
    int chart = 0;          // index of the coordinate scaled to 1
    LocalSeries series;     // n local parameters (ambient) or d (on-hypersurface)

    LocalSeries piece(int k) const { return series.homogeneous_part(k); }
};

// Deterministic chart: nonzero coordinate of largest absolute value, ties to
// the lowest index.
int default_chart(const ProjPoint& P);

// Ambient jet: n local parameters t_j for j != chart; exact.
JetExpansion jet_at(const Form& f, const ProjPoint& P, int max_order, std::optional<int> chart = {});

// Power series phi in the ambient chart parameters solving F = 0 implicitly
// for the parameter with a nonvanishing linear coefficient. Returns the
// solved-variable index and phi (free of that variable). Throws at singular
// centers (no linear term).
struct ImplicitSolution {
    int solved_var;         // index among the n chart parameters
    LocalSeries phi;
};
ImplicitSolution implicit_solve(const LocalSeries& chart_series, int max_deg);

}  // namespace detm
