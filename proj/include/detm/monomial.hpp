#pragma once

#include <vector>

#include "detm/rational.hpp"

namespace detm {

// Exponent vector in n+1 variables; total order is graded-lex (degree first,
// then lexicographic with x_0 > x_1 > ... ). Canonical basis listings run
// from the grlex-largest monomial down, so monomial_basis(2,1) = {x, y, z}.
struct Monomial {
    std::vector<int> exp;

    int degree() const {
        int d = 0;
        for (int e : exp) d += e;
        return d;
    }
    std::size_t nvars() const { return exp.size(); }

    bool operator==(const Monomial& o) const { return exp == o.exp; }
};

// grlex: a > b if deg(a) > deg(b), or equal degree and exp(a) lexicographically larger
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exp > b.exp;
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a == b) return false;
        return grlex_greater(a, b);
    }
};

// All C(n+D, D) monomials of degree D in n+1 variables, grlex-descending.
std::vector<Monomial> monomial_basis(int n, int D);

}  // namespace detm
