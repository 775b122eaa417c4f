#include "detm/variety.hpp"

#include "detm/heights.hpp"

#include <numeric>
#include <stdexcept>

namespace detm {

namespace {

// reject an obvious linear factor (small coefficients) for low degree
void spot_check_irreducible(const Form& f) {
    if (f.degree() < 2 || f.degree() > 3) return;
    long cap = 3;
    int nv = f.num_vars();
    std::vector<long> c(nv, -cap);
    while (true) {
        bool nonzero = false;
        for (long v : c)
            if (v != 0) nonzero = true;
        if (nonzero) {
            Form lin(f.n(), 1);
            for (int i = 0; i < nv; ++i) {
                if (c[i] == 0) continue;
                Monomial m{std::vector<int>(nv, 0)};
                m.exp[i] = 1;
                lin.set_coeff(m, c[i]);
            }
            if (divides_modulo(f, lin))
                throw std::invalid_argument("hypersurface form has a linear factor: " + lin.to_string());
        }
        int i = 0;
        for (; i < nv; ++i) {
            if (c[i] < cap) { ++c[i]; break; }
            c[i] = -cap;
        }
        if (i == nv) break;
    }
}

}  // namespace

Hypersurface make_hypersurface(Form f) {
    if (f.is_zero()) throw std::invalid_argument("hypersurface: zero form");
    if (!f.has_integer_coprime_coeffs())
        throw std::invalid_argument("hypersurface: integer coprime coefficients required");
    if (f.n() < 2) throw std::invalid_argument("hypersurface: ambient dimension >= 2 required");
    spot_check_irreducible(f);
    Hypersurface X;
    X.n = f.n();
    X.delta = f.degree();
    X.f = std::move(f);
    return X;
}

std::vector<ProjPoint> enumerate_points(const Hypersurface& X, const Rat& B) {
    std::vector<ProjPoint> out;
    if (B < 1) return out;
    long box = rat_floor(B).get_si();
    int nv = X.n + 1;
    Rat B2 = B * B;

    std::vector<Int> c(nv, 0);
    // recursive box scan; canonical representatives only (first nonzero
    // coordinate positive), primitivity and exact height filters afterwards
    auto rec = [&](auto&& self, int i, bool lead_fixed) -> void {
        if (i == nv) {
            if (!lead_fixed) return;
            Int g = 0;
            for (const auto& x : c) g = gcd(g, x);
            if (g != 1) return;
            ProjPoint P{c};
            if (coord_square_sum(P) > B2) return;
            if (X.f.evaluate(P) == 0) out.push_back(P);
            return;
        }
        if (!lead_fixed) {
            c[i] = 0;
            self(self, i + 1, false);
            for (long v = 1; v <= box; ++v) {
                c[i] = v;
                self(self, i + 1, true);
            }
        } else {
            for (long v = -box; v <= box; ++v) {
                c[i] = v;
                self(self, i + 1, true);
            }
        }
    };
    rec(rec, 0, false);
    return out;
}

int multiplicity(const Hypersurface& X, const ProjPoint& P) {
    if (X.f.evaluate(P) != 0) throw std::invalid_argument("multiplicity: point not on the hypersurface");
    JetExpansion j = jet_at(X.f, P, X.delta);
    auto ord = j.series.order();
    if (!ord) throw std::logic_error("multiplicity: zero jet of a nonzero form");
    return *ord;
}

bool is_regular_point(const Hypersurface& X, const ProjPoint& P) { return multiplicity(X, P) == 1; }

bool is_regular_mod_p(const Hypersurface& X, const FpPoint& xi) {
    for (int i = 0; i <= X.n; ++i)
        if (X.f.partial_derivative(i).evaluate_mod_p(xi) != 0) return true;
    return false;
}

std::vector<FpPoint> singular_points_mod_p(const Hypersurface& X, long p) {
    PrimeField F(p);
    std::vector<FpPoint> out;
    // points where the whole gradient vanishes mod p; membership in the
    // reduced hypersurface is not required (in small characteristic the
    // gradient can vanish at points off the reduction, e.g. xz - y^2 at
    // [0:1:0] mod 2, and classes through such points still need care)
    for (const auto& pt : projective_points(F, X.n)) {
        if (!is_regular_mod_p(X, pt)) out.push_back(pt);
    }
    return out;
}

std::vector<ResidueClass> partition_into_classes(const Hypersurface& X,
                                                 const std::vector<ProjPoint>& points, long p) {
    std::vector<ResidueClass> classes;
    for (const auto& P : points) {
        if (X.f.evaluate(P) != 0)
            throw std::invalid_argument("partition_into_classes: point not on the hypersurface");
        FpPoint xi = reduce_mod_p(P, p);
        ResidueClass* cls = nullptr;
        for (auto& c : classes)
            if (c.point_mod_p == xi) { cls = &c; break; }
        if (!cls) {
            classes.push_back(ResidueClass{p, xi, is_regular_mod_p(X, xi), {}});
            cls = &classes.back();
        }
        cls->members.push_back(P);
    }
    return classes;
}

}  // namespace detm
