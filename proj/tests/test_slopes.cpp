#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "detm/slopes.hpp"

using namespace detm;

namespace {

Form conic_form() {
    Form f(2, 2);
    f.set_coeff(Monomial{{1, 0, 1}}, 1);
    f.set_coeff(Monomial{{0, 2, 0}}, -1);
    return f;
}

}  // namespace

TEST_CASE("symmetric Gram diagonal") {
    auto g11 = sym_gram(1, 1);
    CHECK(g11 == std::vector<Rat>{1, 1});
    auto g12 = sym_gram(1, 2);  // x^2, xy, y^2
    CHECK(g12 == std::vector<Rat>{1, Rat(1, 2), 1});
    auto g22 = sym_gram(2, 2);
    auto basis = monomial_basis(2, 2);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool square = false;
        for (int e : basis[i].exp) square |= (e == 2);
        CHECK(g22[i] == (square ? Rat(1) : Rat(1, 2)));
    }
}

TEST_CASE("Gram entries are reciprocal multinomials") {
    for (int n = 1; n <= 3; ++n)
        for (int D = 1; D <= 5; ++D) {
            auto diag = sym_gram(n, D);
            auto basis = monomial_basis(n, D);
            Rat prod = 1;
            Int prod_multinomials = 1;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                Int mfact = 1;
                for (int e : basis[i].exp) mfact *= factorial(e);
                Int multinomial = factorial(D) / mfact;
                CHECK(diag[i] == Rat(1) / Rat(multinomial));
                prod *= Rat(1) / diag[i];
                prod_multinomials *= multinomial;
            }
            CHECK(prod == prod_multinomials);
        }
}

TEST_CASE("slope of the full symmetric power") {
    SlopeInterval s = slope_full_space(1, 2);
    CHECK(s.r1 == 3);
    CHECK(s.degree.radicand() == 2);  // -(1/2)log(1 * 1/2 * 1)
    CHECK(s.mu_sym == doctest::Approx(std::log(2.0) / 6.0));
}

TEST_CASE("slope of F_D on the conic") {
    Hypersurface X = make_hypersurface(conic_form());
    SlopeInterval s1 = slope_F_D(X, 1);  // F_1 = E_1, orthonormal
    CHECK(s1.r1 == 3);
    CHECK(s1.degree.radicand() == 1);
    CHECK(s1.mu_sym == doctest::Approx(0.0));
    CHECK(s1.lower == doctest::Approx(-0.5 * std::log(3.0)));
    CHECK(s1.upper == doctest::Approx(0.0));

    for (int D = 1; D <= 4; ++D) {
        SlopeInterval s = slope_F_D(X, D);
        CHECK(s.lower <= s.upper);
        // interval width is exactly (1/2) log r(n, D)
        long rnD = ambient_rank(X.n, D);
        CHECK(s.upper - s.lower ==
              doctest::Approx(0.5 * std::log(static_cast<double>(rnD))));
        // trivial lower bound for the slope
        CHECK(s.upper >= -0.5 * D * std::log(3.0) - 1e-9);
    }
}

TEST_CASE("full-space oracle agreement below delta") {
    Hypersurface X = make_hypersurface(conic_form());
    SlopeInterval a = slope_F_D(X, 1);
    SlopeInterval b = slope_full_space(2, 1);
    CHECK(a.degree.radicand() == b.degree.radicand());
    CHECK(a.r1 == b.r1);
}

TEST_CASE("criterion evaluation") {
    Hypersurface X = make_hypersurface(conic_form());
    CriterionInput in;
    in.D = 1;
    in.r1 = 3;
    in.slope = slope_F_D(X, 1);
    in.classes = {ClassTerm{3, 23}};
    in.sup_height = 1.0;
    CHECK(criterion_threshold(in) == doctest::Approx(std::log(23.0 / 3.0)));
    CHECK(criterion_holds(in));
    in.sup_height = 3.0;
    CHECK_FALSE(criterion_holds(in));

    in.classes.clear();
    in.sup_height = 0.0;
    CHECK_FALSE(criterion_holds(in));  // threshold negative without class gains
}

TEST_CASE("criterion input validation") {
    CriterionInput bad;
    bad.D = 1;
    bad.r1 = 0;
    CHECK_THROWS(criterion_holds(bad));
    bad.r1 = 3;
    bad.classes = {ClassTerm{-1, 5}};
    CHECK_THROWS(criterion_holds(bad));
}
