#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace detm {

using Int = mpz_class;
using Rat = mpq_class;

inline double to_double(const Rat& q) { return q.get_d(); }

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// (1/2)*log(radicand), kept exact as a positive rational radicand.
// Sums of these multiply radicands, so Arakelov degrees of the standard
// metrics stay exact until final display.
class LogValue {
public:
    LogValue() : radicand_(1) {}
    explicit LogValue(Rat radicand) : radicand_(std::move(radicand)) {
        if (radicand_ <= 0) throw std::invalid_argument("LogValue radicand must be positive");
        radicand_.canonicalize();
    }

    const Rat& radicand() const { return radicand_; }

    LogValue operator+(const LogValue& o) const { return LogValue(radicand_ * o.radicand_); }
    LogValue operator-(const LogValue& o) const { return LogValue(radicand_ / o.radicand_); }

    double value() const {
        // log of a ratio of big integers, computed from the mantissa/exponent
        // split so huge radicands do not overflow.
        signed long int en, ed;
        double mn = mpz_get_d_2exp(&en, radicand_.get_num().get_mpz_t());
        double md = mpz_get_d_2exp(&ed, radicand_.get_den().get_mpz_t());
        constexpr double ln2 = 0.6931471805599453;
        return 0.5 * ((std::log(mn) - std::log(md)) + ln2 * static_cast<double>(en - ed));
    }

private:
    Rat radicand_;
};

// floor(x) for rational x
inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

// largest integer m >= 0 with m^d <= v (integer d-th root)
inline Int iroot(const Int& v, unsigned long d) {
    Int r;
    mpz_root(r.get_mpz_t(), v.get_mpz_t(), d);
    return r;
}

}  // namespace detm
