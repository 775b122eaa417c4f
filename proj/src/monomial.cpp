#include "detm/monomial.hpp"

#include <stdexcept>

namespace detm {

namespace {

void gen(int vars_left, int deg_left, std::vector<int>& cur, std::vector<Monomial>& out) {
    if (vars_left == 1) {
        cur.push_back(deg_left);
        out.push_back(Monomial{cur});
        cur.pop_back();
        return;
    }
    for (int e = deg_left; e >= 0; --e) {
        cur.push_back(e);
        gen(vars_left - 1, deg_left - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomial_basis(int n, int D) {
    if (n < 0 || D < 0) throw std::invalid_argument("monomial_basis: n >= 0 and D >= 0 required");
    std::vector<Monomial> out;
    std::vector<int> cur;
    gen(n + 1, D, cur, out);
    return out;
}

}  // namespace detm
