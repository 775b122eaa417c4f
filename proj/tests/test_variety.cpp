#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "detm/jets_hilbert.hpp"
#include "detm/variety.hpp"

using namespace detm;

namespace {

Form conic_form() {
    Form f(2, 2);
    f.set_coeff(Monomial{{1, 0, 1}}, 1);
    f.set_coeff(Monomial{{0, 2, 0}}, -1);
    return f;
}

Form cusp_form() {
    Form f(2, 3);
    f.set_coeff(Monomial{{0, 2, 1}}, 1);
    f.set_coeff(Monomial{{3, 0, 0}}, -1);
    return f;
}

Form line_form() {
    Form f(2, 1);
    f.set_coeff(Monomial{{1, 0, 0}}, 1);
    f.set_coeff(Monomial{{0, 1, 0}}, 1);
    f.set_coeff(Monomial{{0, 0, 1}}, 1);
    return f;
}

std::set<std::vector<long>> as_set(const std::vector<ProjPoint>& pts) {
    std::set<std::vector<long>> s;
    for (const auto& P : pts) {
        std::vector<long> v;
        for (const auto& x : P.coords) v.push_back(x.get_si());
        s.insert(v);
    }
    return s;
}

}  // namespace

TEST_CASE("hypersurface construction guards") {
    CHECK_THROWS(make_hypersurface(Form(2, 2)));  // zero form
    Form non_primitive(2, 1);
    non_primitive.set_coeff(Monomial{{1, 0, 0}}, 2);
    non_primitive.set_coeff(Monomial{{0, 1, 0}}, 4);
    CHECK_THROWS(make_hypersurface(non_primitive));
    // visible linear factor: x^2 - y^2
    Form split(2, 2);
    split.set_coeff(Monomial{{2, 0, 0}}, 1);
    split.set_coeff(Monomial{{0, 2, 0}}, -1);
    CHECK_THROWS(make_hypersurface(split));
    Hypersurface X = make_hypersurface(conic_form());
    CHECK(X.n == 2);
    CHECK(X.delta == 2);
    CHECK(X.d() == 1);
}

TEST_CASE("point enumeration on the conic") {
    Hypersurface X = make_hypersurface(conic_form());
    auto pts = enumerate_points(X, 2);
    CHECK(as_set(pts) ==
          std::set<std::vector<long>>{{1, 0, 0}, {0, 0, 1}, {1, 1, 1}, {1, -1, 1}});
    CHECK(enumerate_points(X, Rat(1, 2)).empty());
    for (const auto& P : enumerate_points(X, 20)) CHECK(X.f.evaluate(P) == 0);
}

TEST_CASE("point enumeration on a line") {
    Hypersurface L = make_hypersurface(line_form());
    auto pts = enumerate_points(L, Rat(3, 2));
    CHECK(as_set(pts) == std::set<std::vector<long>>{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}});
}

TEST_CASE("multiplicity and regularity") {
    Hypersurface X = make_hypersurface(conic_form());
    CHECK(multiplicity(X, make_point({1, 1, 1})) == 1);
    CHECK(is_regular_point(X, make_point({1, 1, 1})));
    Hypersurface C = make_hypersurface(cusp_form());
    CHECK(multiplicity(C, make_point({0, 0, 1})) == 2);
    CHECK_FALSE(is_regular_point(C, make_point({0, 0, 1})));
    CHECK_THROWS(multiplicity(X, make_point({1, 2, 3})));
}

TEST_CASE("multiplicity agrees with the gradient criterion") {
    std::vector<Hypersurface> sample = {
        make_hypersurface(conic_form()), make_hypersurface(cusp_form()),
        make_hypersurface(line_form())};
    {
        Form f(2, 3);  // x^3 + y^3 + z^3 - 3xyz... use Fermat cubic instead
        f.set_coeff(Monomial{{3, 0, 0}}, 1);
        f.set_coeff(Monomial{{0, 3, 0}}, 1);
        f.set_coeff(Monomial{{0, 0, 3}}, -2);
        sample.push_back(make_hypersurface(f));
    }
    {
        Form q(3, 2);  // quadric surface xw - yz
        q.set_coeff(Monomial{{1, 0, 0, 1}}, 1);
        q.set_coeff(Monomial{{0, 1, 1, 0}}, -1);
        sample.push_back(make_hypersurface(q));
    }
    for (const auto& X : sample) {
        for (const auto& P : enumerate_points(X, 6)) {
            bool grad_nonzero = false;
            for (int i = 0; i <= X.n; ++i)
                if (X.f.partial_derivative(i).evaluate(P) != 0) grad_nonzero = true;
            CHECK((multiplicity(X, P) == 1) == grad_nonzero);
        }
    }
}

TEST_CASE("reduction mod p") {
    CHECK(reduce_mod_p(make_point({16, 4, 1}), 3).coords == std::vector<long>{1, 1, 1});
    CHECK(reduce_mod_p(make_point({4, -2, 1}), 3).coords == std::vector<long>{1, 1, 1});
    CHECK(reduce_mod_p(make_point({3, 4, 0}), 3).coords == std::vector<long>{0, 1, 0});
}

TEST_CASE("singular points mod p") {
    Hypersurface C = make_hypersurface(cusp_form());
    auto s5 = singular_points_mod_p(C, 5);
    REQUIRE(s5.size() == 1);
    CHECK(s5[0].coords == std::vector<long>{0, 0, 1});

    Hypersurface X = make_hypersurface(conic_form());
    CHECK(singular_points_mod_p(X, 3).empty());
    auto s2 = singular_points_mod_p(X, 2);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0].coords == std::vector<long>{0, 1, 0});
}

TEST_CASE("residue class partition") {
    Hypersurface X = make_hypersurface(conic_form());
    std::vector<ProjPoint> pts = {make_point({1, 1, 1}), make_point({16, 4, 1}),
                                  make_point({4, -2, 1}), make_point({0, 0, 1})};
    auto classes = partition_into_classes(X, pts, 3);
    REQUIRE(classes.size() == 2);
    const ResidueClass* c111 = nullptr;
    const ResidueClass* c001 = nullptr;
    for (const auto& c : classes) {
        if (c.point_mod_p.coords == std::vector<long>{1, 1, 1}) c111 = &c;
        if (c.point_mod_p.coords == std::vector<long>{0, 0, 1}) c001 = &c;
    }
    REQUIRE(c111);
    REQUIRE(c001);
    CHECK(c111->members.size() == 3);
    CHECK(c111->regular);
    CHECK(c001->members.size() == 1);
    CHECK(c001->regular);

    CHECK(partition_into_classes(X, {}, 5).empty());

    Hypersurface C = make_hypersurface(cusp_form());
    auto cc = partition_into_classes(C, {make_point({0, 0, 1})}, 5);
    REQUIRE(cc.size() == 1);
    CHECK_FALSE(cc[0].regular);
}

TEST_CASE("partition is a partition") {
    Hypersurface X = make_hypersurface(conic_form());
    auto pts = enumerate_points(X, 30);
    for (long p : {3, 5, 7}) {
        auto classes = partition_into_classes(X, pts, p);
        std::size_t total = 0;
        std::set<std::vector<long>> seen;
        for (const auto& c : classes) {
            total += c.members.size();
            CHECK(seen.insert(c.point_mod_p.coords).second);  // distinct classes
            for (const auto& P : c.members) CHECK(reduce_mod_p(P, p) == c.point_mod_p);
        }
        CHECK(total == pts.size());
    }
}

TEST_CASE("regular classes have member-independent jet dimensions") {
    Hypersurface X = make_hypersurface(conic_form());
    auto pts = enumerate_points(X, 20);
    for (long p : {3, 5}) {
        for (const auto& c : partition_into_classes(X, pts, p)) {
            if (!c.regular || c.members.size() < 2) continue;
            long k0 = jet_kernel_dim(X, 2, c.members[0], 2);
            for (std::size_t i = 1; i < c.members.size(); ++i)
                CHECK(jet_kernel_dim(X, 2, c.members[i], 2) == k0);
        }
    }
}
