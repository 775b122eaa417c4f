#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "detm/rational.hpp"

namespace detm {

// Residues mod a prime p, value-semantics helpers. Elements live in 0..p-1.
class PrimeField {
public:
    explicit PrimeField(long p) : p_(p) {
        if (p < 2) throw std::invalid_argument("PrimeField: p must be prime >= 2");
    }

    long p() const { return p_; }

    long reduce(const Int& x) const {
        Int r = x % p_;
        long v = r.get_si();
        if (v < 0) v += p_;
        return v;
    }
    long reduce(long x) const {
        long v = x % p_;
        if (v < 0) v += p_;
        return v;
    }

    long add(long a, long b) const { return (a + b) % p_; }
    long sub(long a, long b) const { return ((a - b) % p_ + p_) % p_; }
    long mul(long a, long b) const {
        return static_cast<long>((static_cast<unsigned long long>(a) * static_cast<unsigned long long>(b)) %
                                 static_cast<unsigned long long>(p_));
    }
    long pow(long a, long e) const {
        long r = 1 % p_;
        long base = reduce(a);
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    long inv(long a) const {
        a = reduce(a);
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }

    // Row-echelon rank of a matrix of residues.
    long rank(std::vector<std::vector<long>> m) const {
        long rows = static_cast<long>(m.size());
        if (rows == 0) return 0;
        long cols = static_cast<long>(m[0].size());
        long rank = 0;
        for (long c = 0; c < cols && rank < rows; ++c) {
            long piv = -1;
            for (long r = rank; r < rows; ++r)
                if (m[r][c] != 0) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(m[rank], m[piv]);
            long ia = inv(m[rank][c]);
            for (long j = c; j < cols; ++j) m[rank][j] = mul(m[rank][j], ia);
            for (long r = 0; r < rows; ++r) {
                if (r == rank || m[r][c] == 0) continue;
                long f = m[r][c];
                for (long j = c; j < cols; ++j) m[r][j] = sub(m[r][j], mul(f, m[rank][j]));
            }
            ++rank;
        }
        return rank;
    }

private:
    long p_;
};

// Canonical projective point over F_p: first nonzero coordinate scaled to 1.
struct FpPoint {
    long p = 0;
    std::vector<long> coords;

    bool operator==(const FpPoint& o) const { return p == o.p && coords == o.coords; }
    bool operator<(const FpPoint& o) const {
        if (p != o.p) return p < o.p;
        return coords < o.coords;
    }
};

inline FpPoint canonical_fp_point(const PrimeField& F, std::vector<long> coords) {
    long lead = -1;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        coords[i] = F.reduce(coords[i]);
        if (lead < 0 && coords[i] != 0) lead = static_cast<long>(i);
    }
    if (lead < 0) throw std::invalid_argument("projective point over F_p: all coordinates zero");
    long s = F.inv(coords[lead]);
    for (auto& c : coords) c = F.mul(c, s);
    return FpPoint{F.p(), std::move(coords)};
}

// All canonical points of P^n(F_p).
std::vector<FpPoint> projective_points(const PrimeField& F, int n);

}  // namespace detm
