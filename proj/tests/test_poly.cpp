#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "detm/form.hpp"
#include "detm/jet.hpp"
#include "detm/json_io.hpp"
#include "detm/monomial.hpp"

using namespace detm;

namespace {

std::mt19937 rng(777);

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

// xz - y^2 in P^2
Form conic_form() {
    Form f(2, 2);
    f.set_coeff(mono({1, 0, 1}), 1);
    f.set_coeff(mono({0, 2, 0}), -1);
    return f;
}

// y^2 z - x^3
Form cusp_form() {
    Form f(2, 3);
    f.set_coeff(mono({0, 2, 1}), 1);
    f.set_coeff(mono({3, 0, 0}), -1);
    return f;
}

Form random_form(int n, int D) {
    std::uniform_int_distribution<int> dist(-5, 5);
    Form f(n, D);
    for (const auto& m : monomial_basis(n, D)) f.set_coeff(m, dist(rng));
    return f;
}

}  // namespace

TEST_CASE("monomial basis sizes and order") {
    for (int n = 1; n <= 4; ++n)
        for (int D = 0; D <= 12; ++D)
            CHECK(static_cast<long>(monomial_basis(n, D).size()) == binomial(n + D, D));

    auto b = monomial_basis(2, 1);
    REQUIRE(b.size() == 3);
    CHECK(b[0] == mono({1, 0, 0}));
    CHECK(b[1] == mono({0, 1, 0}));
    CHECK(b[2] == mono({0, 0, 1}));

    CHECK(monomial_basis(2, 2).size() == 6);
    CHECK(monomial_basis(3, 3).size() == 20);

    // grlex-descending throughout
    auto b2 = monomial_basis(3, 4);
    for (std::size_t i = 0; i + 1 < b2.size(); ++i) CHECK(grlex_greater(b2[i], b2[i + 1]));
}

TEST_CASE("grlex comparisons") {
    CHECK(grlex_greater(mono({2, 0, 0}), mono({1, 1, 0})));
    CHECK(grlex_greater(mono({1, 1, 0}), mono({0, 2, 0})));
    CHECK(grlex_greater(mono({0, 2, 0}), mono({0, 1, 1})));
    CHECK(grlex_greater(mono({0, 1, 1}), mono({1, 0, 0})));  // degree wins
}

TEST_CASE("form evaluation") {
    Form f = conic_form();
    CHECK(f.evaluate(make_point({1, 1, 1})) == 0);
    CHECK(f.evaluate(make_point({1, 2, 3})) == -1);
    Form lin(2, 1);
    lin.set_coeff(mono({1, 0, 0}), 1);
    lin.set_coeff(mono({0, 1, 0}), -5);
    lin.set_coeff(mono({0, 0, 1}), 4);
    CHECK(lin.evaluate(make_point({16, 4, 1})) == 0);
}

TEST_CASE("form arithmetic") {
    Form x(2, 1), y(2, 1);
    x.set_coeff(mono({1, 0, 0}), 1);
    y.set_coeff(mono({0, 1, 0}), 1);
    Form prod = (x + y) * (x - y);
    CHECK(prod.coeff(mono({2, 0, 0})) == 1);
    CHECK(prod.coeff(mono({0, 2, 0})) == -1);
    CHECK(prod.coeff(mono({1, 1, 0})) == 0);
}

TEST_CASE("partial derivatives") {
    CHECK(cusp_form().partial_derivative(1) == monomial_form(2, mono({0, 1, 1}), 2));  // 2yz
    CHECK(conic_form().partial_derivative(0) == monomial_form(2, mono({0, 0, 1})));    // z
    Form x3 = monomial_form(2, mono({3, 0, 0}));
    CHECK(x3.partial_derivative(1).is_zero());
}

TEST_CASE("Euler identity on random forms") {
    for (int t = 0; t < 20; ++t) {
        int n = 2 + t % 2;
        int D = 1 + t % 4;
        Form f = random_form(n, D);
        Form acc(n, D);
        for (int i = 0; i <= n; ++i) {
            Monomial xi{std::vector<int>(n + 1, 0)};
            xi.exp[i] = 1;
            acc = acc + f.partial_derivative(i) * monomial_form(n, xi);
        }
        CHECK(acc == f * Rat(D));
    }
}

TEST_CASE("ideal membership by exact division") {
    Form f = conic_form();
    Form x(2, 1), y(2, 1);
    x.set_coeff(mono({1, 0, 0}), 1);
    y.set_coeff(mono({0, 1, 0}), 1);
    Form g = f * (x + y);
    CHECK(divides_modulo(g, f));
    CHECK(exact_divide(g, f) == x + y);
    Form yz2 = monomial_form(2, mono({0, 1, 1}), 2);
    CHECK_FALSE(divides_modulo(yz2, cusp_form()));
    CHECK(divides_modulo(Form(2, 5), f));  // zero form
    CHECK_FALSE(divides_modulo(g + monomial_form(2, mono({3, 0, 0})), f));
}

TEST_CASE("jets at a point") {
    // y^2 z - x^3 at [0:0:1], chart z: locals t_0 = x, t_1 = y
    JetExpansion j = jet_at(cusp_form(), make_point({0, 0, 1}), 3, 2);
    CHECK(j.chart == 2);
    CHECK(j.piece(0).is_zero());
    CHECK(j.piece(1).is_zero());
    CHECK(j.piece(2).coeff({0, 2}) == 1);
    CHECK(j.piece(3).coeff({3, 0}) == -1);

    JetExpansion jc = jet_at(conic_form(), make_point({0, 0, 1}), 1, 2);
    CHECK(jc.piece(1).coeff({1, 0}) == 1);  // linear term x
    CHECK(jc.piece(1).coeff({0, 1}) == 0);

    Form c = monomial_form(2, mono({0, 0, 0}), 1);  // constant, degree 0
    JetExpansion jk = jet_at(c, make_point({1, 2, 3}), 2);
    CHECK(jk.piece(0).coeff({0, 0}) == 1);
    CHECK(jk.piece(1).is_zero());
    CHECK(jk.piece(2).is_zero());
}

TEST_CASE("jet reconstruction and constant term") {
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int t = 0; t < 15; ++t) {
        int n = 2;
        int D = 1 + t % 3;
        Form f = random_form(n, D);
        if (f.is_zero()) continue;
        ProjPoint P = make_point({dist(rng) * 2 + 1, dist(rng), dist(rng)});
        JetExpansion j = jet_at(f, P, D);
        int chart = j.chart;

        // piece(0) vanishes exactly when f vanishes at the center
        CHECK((f.evaluate(P) == 0) == j.piece(0).is_zero());

        // evaluating the series at a rational offset reproduces the
        // dehomogenized form (order D captures everything)
        std::vector<Rat> offs(n);
        for (auto& o : offs) {
            o = Rat(dist(rng), 3);
            o.canonicalize();  // mpq comparisons require canonical form
        }
        std::vector<Rat> x(n + 1);
        int li = 0;
        for (int i = 0; i <= n; ++i) {
            if (i == chart)
                x[i] = 1;
            else {
                x[i] = Rat(P.coords[i]) / Rat(P.coords[chart]) + offs[li];
                ++li;
            }
        }
        Rat direct = f.evaluate(x);
        Rat via_series = 0;
        for (const auto& [key, c] : j.series.terms()) {
            Rat term = c;
            for (int v = 0; v < n; ++v)
                for (int e = 0; e < key[v]; ++e) term *= offs[v];
            via_series += term;
        }
        CHECK(direct == via_series);
    }
}

TEST_CASE("implicit solve kills the series on the hypersurface") {
    Form f = conic_form();
    ProjPoint P = make_point({1, 1, 1});
    JetExpansion j = jet_at(f, P, 5);
    ImplicitSolution sol = implicit_solve(j.series, 5);
    LocalSeries residual = j.series.substitute(sol.solved_var, sol.phi);
    CHECK(residual.is_zero());
    // singular center refuses
    JetExpansion js = jet_at(cusp_form(), make_point({0, 0, 1}), 3, 2);
    CHECK_THROWS(implicit_solve(js.series, 3));
}

TEST_CASE("canonicalization and serialization") {
    Form f(2, 2);
    f.set_coeff(mono({2, 0, 0}), Rat(2, 3));
    f.set_coeff(mono({0, 0, 2}), Rat(-4, 3));
    Form g = f.integer_canonical();
    CHECK(g.coeff(mono({2, 0, 0})) == 1);
    CHECK(g.coeff(mono({0, 0, 2})) == -2);
    CHECK(g.has_integer_coprime_coeffs());
    CHECK(g.leading_monomial() == mono({2, 0, 0}));

    json j = form_to_json(g);
    CHECK(j["n"] == 2);
    CHECK(j["degree"] == 2);
    // grlex-sorted terms: x^2 before z^2
    CHECK(j["terms"][0][0] == json::array({2, 0, 0}));
    CHECK(form_from_json(j) == g);

    for (int t = 0; t < 10; ++t) {
        Form r = random_form(2, 3);
        CHECK(form_from_json(form_to_json(r)) == r);
    }
}
