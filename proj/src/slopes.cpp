#include "detm/slopes.hpp"

#include <cmath>
#include <stdexcept>

namespace detm {

std::vector<Rat> sym_gram(int n, int D) {
    if (n < 1 || D < 1) throw std::invalid_argument("sym_gram: n >= 1 and D >= 1 required");
    std::vector<Rat> diag;
    Int Dfact = factorial(D);
    for (const auto& m : monomial_basis(n, D)) {
        Int mfact = 1;
        for (int e : m.exp) mfact *= factorial(e);
        Rat g(mfact, Dfact);
        g.canonicalize();
        diag.push_back(g);
    }
    return diag;
}

namespace {

// inverse of a symmetric positive definite rational matrix
RatMat rat_inverse(RatMat A) {
    long n = static_cast<long>(A.size());
    RatMat I(n, RatVec(n, 0));
    for (long i = 0; i < n; ++i) I[i][i] = 1;
    for (long c = 0; c < n; ++c) {
        long piv = -1;
        for (long r = c; r < n; ++r)
            if (A[r][c] != 0) { piv = r; break; }
        if (piv < 0) throw std::domain_error("rat_inverse: singular matrix");
        std::swap(A[c], A[piv]);
        std::swap(I[c], I[piv]);
        Rat inv = 1 / A[c][c];
        for (long j = 0; j < n; ++j) { A[c][j] *= inv; I[c][j] *= inv; }
        for (long r = 0; r < n; ++r) {
            if (r == c || A[r][c] == 0) continue;
            Rat f = A[r][c];
            for (long j = 0; j < n; ++j) { A[r][j] -= f * A[c][j]; I[r][j] -= f * I[c][j]; }
        }
    }
    return I;
}

Rat rat_det(RatMat A) {
    long n = static_cast<long>(A.size());
    Rat det = 1;
    for (long c = 0; c < n; ++c) {
        long piv = -1;
        for (long r = c; r < n; ++r)
            if (A[r][c] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) { std::swap(A[c], A[piv]); det = -det; }
        det *= A[c][c];
        Rat inv = 1 / A[c][c];
        for (long r = c + 1; r < n; ++r) {
            if (A[r][c] == 0) continue;
            Rat f = A[r][c] * inv;
            for (long j = c; j < n; ++j) A[r][j] -= f * A[c][j];
        }
    }
    det.canonicalize();
    return det;
}

// Gram form <u, v> under a diagonal metric
Rat diag_inner(const std::vector<Rat>& diag, const std::vector<Int>& u, const std::vector<Int>& v) {
    Rat s = 0;
    for (std::size_t i = 0; i < diag.size(); ++i)
        if (u[i] != 0 && v[i] != 0) s += diag[i] * Rat(u[i] * v[i]);
    return s;
}

SlopeInterval finish(long r1, const Rat& quot_gram_det, long rank_nD) {
    SlopeInterval s;
    s.r1 = r1;
    s.degree = LogValue(1 / quot_gram_det);
    s.mu_sym = s.degree.value() / static_cast<double>(r1);
    s.r0_max = 0.5 * std::log(static_cast<double>(rank_nD));
    s.lower = s.mu_sym - s.r0_max;
    s.upper = s.mu_sym;
    return s;
}

}  // namespace

SlopeInterval slope_full_space(int n, int D) {
    auto diag = sym_gram(n, D);
    Rat det = 1;
    for (const auto& g : diag) det *= g;
    det.canonicalize();
    return finish(static_cast<long>(diag.size()), det, static_cast<long>(diag.size()));
}

SlopeInterval slope_F_D(const Hypersurface& X, int D) {
    if (D < 1) throw std::invalid_argument("slope_F_D: D >= 1 required");
    long rank_nD = ambient_rank(X.n, D);
    if (D < X.delta) {
        // F_D = E_D, the full symmetric power
        return slope_full_space(X.n, D);
    }
    GradedPiece gp = graded_piece(X, D);
    auto diag = sym_gram(X.n, D);

    long k = static_cast<long>(gp.image_basis.size());
    long r1 = gp.r1;
    // Schur complement of the image block: Gram of the quotient metric on the
    // integral basis classes. The integral basis makes the finite index term
    // exactly zero (torsion-freeness is asserted inside graded_piece).
    RatMat Gss(k, RatVec(k));
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) Gss[i][j] = diag_inner(diag, gp.image_basis[i], gp.image_basis[j]);
    RatMat Gsl(k, RatVec(r1));
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < r1; ++j) Gsl[i][j] = diag_inner(diag, gp.image_basis[i], gp.basis[j]);
    RatMat Gll(r1, RatVec(r1));
    for (long i = 0; i < r1; ++i)
        for (long j = 0; j < r1; ++j) Gll[i][j] = diag_inner(diag, gp.basis[i], gp.basis[j]);

    RatMat Q = Gll;
    if (k > 0) {
        RatMat Sinv = rat_inverse(Gss);
        // Q = Gll - Gsl^T * Sinv * Gsl
        for (long i = 0; i < r1; ++i)
            for (long j = 0; j < r1; ++j) {
                Rat acc = 0;
                for (long a = 0; a < k; ++a)
                    for (long b = 0; b < k; ++b) acc += Gsl[a][i] * Sinv[a][b] * Gsl[b][j];
                Q[i][j] -= acc;
            }
    }
    Rat det = rat_det(std::move(Q));
    if (det <= 0) throw std::logic_error("slope_F_D: quotient Gram not positive definite");
    return finish(r1, det, rank_nD);
}

double criterion_threshold(const CriterionInput& in) {
    double D = static_cast<double>(in.D);
    double r1 = static_cast<double>(in.r1);
    double t = in.slope.lower / D - std::log(r1) / (2.0 * D);
    for (const auto& c : in.classes)
        t += (static_cast<double>(c.R) / (D * r1)) * std::log(c.p.get_d()) /
             static_cast<double>(in.field_degree);
    return t;
}

bool criterion_holds(const CriterionInput& in) {
    if (in.r1 <= 0) throw std::invalid_argument("criterion_holds: r1 must be positive");
    for (const auto& c : in.classes)
        if (c.R < 0 || !(c.p > 1)) throw std::invalid_argument("criterion_holds: bad class term");
    return in.sup_height < criterion_threshold(in);
}

}  // namespace detm
