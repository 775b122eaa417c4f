#include "detm/heights.hpp"

#include <cmath>
#include <stdexcept>

namespace detm {

double classic_log_height(const ProjPoint& P) {
    Int best = 0;
    for (const auto& c : P.coords) {
        Int a = abs(c);
        if (a > best) best = a;
    }
    // exact radicand form reused for a stable log of a big integer
    return LogValue(Rat(best * best)).value();
}

Rat coord_square_sum(const ProjPoint& P) {
    Rat s = 0;
    for (const auto& c : P.coords) s += Rat(c * c);
    return s;
}

LogValue arakelov_log_height(const ProjPoint& P) { return LogValue(coord_square_sum(P)); }

HeightReport height_comparison(const ProjPoint& P) {
    HeightReport r;
    r.classic_log_height = classic_log_height(P);
    r.arakelov = arakelov_log_height(P);
    r.arakelov_log_height = r.arakelov.value();
    r.bound_gap = std::abs(r.classic_log_height - r.arakelov_log_height);
    return r;
}

double naive_form_height(const Form& f) {
    if (!f.has_integer_coprime_coeffs())
        throw std::invalid_argument("naive_form_height: integer coprime coefficients required");
    Int m = f.max_abs_coeff();
    if (m == 0) return 0;
    return LogValue(Rat(m * m)).value();
}

bool height_at_most(const ProjPoint& P, const Rat& B) { return coord_square_sum(P) <= B * B; }

}  // namespace detm
