#pragma once

#include <optional>

#include "detm/rational.hpp"

namespace detm {

// Deterministic trial division; all experiment primes are tiny.
bool is_prime(const Int& n);

// v_p(x) for x != 0; std::nullopt encodes the infinite valuation of 0.
std::optional<long> padic_valuation(const Int& x, const Int& p);

// Least prime p with N0 < p <= alpha * N0 (Bertrand window). alpha >= 2
// guarantees existence over Q; returns nullopt if the window is empty.
std::optional<Int> next_prime_in_range(const Rat& N0, const Rat& alpha);

}  // namespace detm
