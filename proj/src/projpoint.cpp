#include "detm/projpoint.hpp"

#include <stdexcept>

namespace detm {

ProjPoint make_point(std::vector<Int> coords) {
    Int g = 0;
    for (const auto& c : coords) g = gcd(g, c);
    if (g == 0) throw std::invalid_argument("projective point: all coordinates zero");
    for (auto& c : coords) c /= g;
    for (const auto& c : coords) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : coords) x = -x;
        break;
    }
    return ProjPoint{std::move(coords)};
}

FpPoint reduce_mod_p(const ProjPoint& P, long p) {
    PrimeField F(p);
    std::vector<long> c;
    c.reserve(P.coords.size());
    for (const auto& x : P.coords) c.push_back(F.reduce(x));
    return canonical_fp_point(F, std::move(c));
}

std::vector<FpPoint> projective_points(const PrimeField& F, int n) {
    // representatives: leading coordinate 1, free residues after it
    std::vector<FpPoint> out;
    long p = F.p();
    for (int lead = 0; lead <= n; ++lead) {
        std::vector<long> c(n + 1, 0);
        c[lead] = 1;
        long free = n - lead;
        long total = 1;
        for (long i = 0; i < free; ++i) total *= p;
        for (long idx = 0; idx < total; ++idx) {
            long v = idx;
            for (long i = 0; i < free; ++i) {
                c[lead + 1 + i] = v % p;
                v /= p;
            }
            out.push_back(FpPoint{p, c});
        }
    }
    return out;
}

}  // namespace detm
