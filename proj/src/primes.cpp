#include "detm/primes.hpp"

#include <stdexcept>

namespace detm {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::optional<long> padic_valuation(const Int& x, const Int& p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("padic_valuation: p must be prime");
    if (x == 0) return std::nullopt;
    Int v = abs(x);
    long e = 0;
    while (v % p == 0) { v /= p; ++e; }
    return e;
}

std::optional<Int> next_prime_in_range(const Rat& N0, const Rat& alpha) {
    if (N0 < 0) throw std::invalid_argument("next_prime_in_range: N0 must be nonnegative");
    Int lo = rat_floor(N0) + 1;  // least integer > N0
    if (lo < 2) lo = 2;
    Rat upper = alpha * N0;
    for (Int p = lo; Rat(p) <= upper; ++p)
        if (is_prime(p)) return p;
    return std::nullopt;
}

}  // namespace detm
