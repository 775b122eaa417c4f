#include "detm/jets_hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace detm {

long ambient_rank(int n, int D) {
    if (D < 0) return 0;
    return binomial(n + D, D).get_si();
}

long truncation_order(int delta, int d, int D) {
    // floor(delta^(1/d) * D) = floor((delta * D^d)^(1/d)), exact integer root
    Int v = delta;
    for (int i = 0; i < d; ++i) v *= D;
    return iroot(v, static_cast<unsigned long>(d)).get_si() + 1;
}

GradedPiece graded_piece(const Hypersurface& X, int D) {
    if (D < 1) throw std::invalid_argument("graded_piece: D >= 1 required");
    GradedPiece gp;
    gp.D = D;
    gp.ambient_basis = monomial_basis(X.n, D);
    long N = static_cast<long>(gp.ambient_basis.size());

    int Dq = D - X.delta;
    if (Dq < 0) {
        gp.r1 = N;
        for (long i = 0; i < N; ++i) {
            std::vector<Int> e(N, 0);
            e[i] = 1;
            gp.basis.push_back(std::move(e));
        }
        return gp;
    }

    // inclusion matrix of multiplication by f: E_{D-delta} -> E_D
    std::vector<Monomial> low = monomial_basis(X.n, Dq);
    long k = static_cast<long>(low.size());
    IntMat A(N, std::vector<Int>(k, 0));
    for (long j = 0; j < k; ++j) {
        Form prod = X.f * monomial_form(X.n, low[j]);
        long i = 0;
        for (const auto& m : gp.ambient_basis) {
            Rat c = prod.coeff(m);
            if (c.get_den() != 1) throw std::logic_error("graded_piece: non-integer product coefficient");
            A[i][j] = c.get_num();
            ++i;
        }
    }
    for (long j = 0; j < k; ++j) {
        std::vector<Int> col(N);
        for (long i = 0; i < N; ++i) col[i] = A[i][j];
        gp.image_basis.push_back(std::move(col));
    }

    SmithResult snf = smith_normal_form(A);
    for (const auto& dv : snf.divisors)
        if (dv != 1)
            throw std::logic_error("graded_piece: quotient lattice has torsion, F_D realization invalid");

    // U*A*V = [I_k; 0], so in U-coordinates the quotient is the last N-k
    // coordinates; the columns k..N-1 of U^{-1} lift an integral basis.
    gp.r1 = N - k;
    for (long j = k; j < N; ++j) {
        std::vector<Int> v(N);
        for (long i = 0; i < N; ++i) v[i] = snf.Uinv[i][j];
        gp.basis.push_back(std::move(v));
    }
    return gp;
}

std::vector<Form> graded_basis_forms(const Hypersurface& X, const GradedPiece& gp) {
    std::vector<Form> out;
    for (const auto& v : gp.basis) {
        Form g(X.n, gp.D);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) g.set_coeff(gp.ambient_basis[i], Rat(v[i]));
        out.push_back(std::move(g));
    }
    return out;
}

LocalSeries on_hypersurface_jet(const Hypersurface& X, const Form& g, const ProjPoint& eta, int trunc) {
    int chart = default_chart(eta);
    LocalSeries Ff = jet_at(X.f, eta, trunc, chart).series;
    ImplicitSolution sol = implicit_solve(Ff, trunc);
    LocalSeries Gg = jet_at(g, eta, trunc, chart).series;
    return Gg.substitute(sol.solved_var, sol.phi).drop_var(sol.solved_var);
}

namespace {

// local monomials of the d parameters grouped by total degree 0..max_deg
std::vector<std::vector<std::vector<int>>> local_monomials_by_degree(int d, int max_deg) {
    std::vector<std::vector<std::vector<int>>> out(max_deg + 1);
    std::vector<int> cur(d, 0);
    auto rec = [&](auto&& self, int i, int deg) -> void {
        if (i == d) {
            out[deg].push_back(cur);
            return;
        }
        for (int e = 0; e + deg <= max_deg; ++e) {
            cur[i] = e;
            self(self, i + 1, deg + e);
        }
        cur[i] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

void require_regular_center(const Hypersurface& X, const ProjPoint& eta) {
    if (X.f.evaluate(eta) != 0)
        throw std::invalid_argument("jet kernel: center not on the hypersurface");
    if (multiplicity(X, eta) != 1)
        throw std::invalid_argument("jet kernel: center is singular on the hypersurface");
}

// ranks of the jet-evaluation matrix restricted to local orders < m, for
// m = 1 .. max_m; shared by jet_kernel_dim and filtration_profile
std::vector<long> jet_rank_profile(const Hypersurface& X, int D, const ProjPoint& eta, int max_m) {
    int d = X.d();
    int trunc = max_m - 1;
    int chart = default_chart(eta);
    // the defining form needs its linear part even when trunc = 0
    int trunc_f = std::max(trunc, 1);
    LocalSeries Ff = jet_at(X.f, eta, trunc_f, chart).series;
    ImplicitSolution sol = implicit_solve(Ff, trunc_f);

    std::vector<Monomial> amb = monomial_basis(X.n, D);
    long N = static_cast<long>(amb.size());
    std::vector<LocalSeries> jets;
    jets.reserve(N);
    for (const auto& m : amb) {
        LocalSeries Gg = jet_at(monomial_form(X.n, m), eta, trunc, chart).series;
        jets.push_back(Gg.substitute(sol.solved_var, sol.phi).drop_var(sol.solved_var));
    }

    auto mons = local_monomials_by_degree(d, trunc);
    IncrementalRowReducer red(N);
    std::vector<long> ranks;  // ranks[t] = rank of rows of local degree <= t-1
    for (int t = 0; t <= trunc; ++t) {
        for (const auto& key : mons[t]) {
            RatVec row(N);
            for (long j = 0; j < N; ++j) row[j] = jets[j].coeff(key);
            red.add_row(std::move(row));
        }
        ranks.push_back(red.rank());
    }
    return ranks;  // ranks[m-1] = rank using orders < m
}

}  // namespace

long jet_kernel_dim(const Hypersurface& X, int D, const ProjPoint& eta, int m) {
    if (D < 1) throw std::invalid_argument("jet_kernel_dim: D >= 1 required");
    if (m < 1) throw std::invalid_argument("jet_kernel_dim: m >= 1 required");
    require_regular_center(X, eta);
    long rank = jet_rank_profile(X, D, eta, m).back();
    long dim = ambient_rank(X.n, D) - rank - ambient_rank(X.n, D - X.delta);
    return std::max(dim, 0L);
}

FiltrationProfile filtration_profile(const Hypersurface& X, int D, const ProjPoint& eta) {
    if (D < 1) throw std::invalid_argument("filtration_profile: D >= 1 required");
    require_regular_center(X, eta);
    long m_max = truncation_order(X.delta, X.d(), D);
    auto ranks = jet_rank_profile(X, D, eta, static_cast<int>(m_max));
    long full = ambient_rank(X.n, D) - ambient_rank(X.n, D - X.delta);
    FiltrationProfile fp;
    fp.D = D;
    fp.center = eta;
    for (long m = 1; m <= m_max; ++m) {
        long k = std::max(full - ranks[m - 1], 0L);
        fp.dims.push_back(k);
        fp.R += k;
    }
    return fp;
}

Rat empirical_I(const Hypersurface& X, const ProjPoint& eta, int D) {
    FiltrationProfile fp = filtration_profile(X, D, eta);
    Int denom = 1;
    for (int i = 0; i < X.d() + 1; ++i) denom *= D;
    Rat r(factorial(X.d()) * fp.R, denom);
    r.canonicalize();
    return r;
}

bool check_reduction_invariance(const Hypersurface& X, int D, const ProjPoint& eta1,
                                const ProjPoint& eta2, long p) {
    FpPoint x1 = reduce_mod_p(eta1, p);
    FpPoint x2 = reduce_mod_p(eta2, p);
    if (!(x1 == x2))
        throw std::invalid_argument("check_reduction_invariance: different reductions mod p");
    if (!is_regular_mod_p(X, x1))
        throw std::invalid_argument("check_reduction_invariance: singular reduction");
    FiltrationProfile p1 = filtration_profile(X, D, eta1);
    FiltrationProfile p2 = filtration_profile(X, D, eta2);
    return p1.dims == p2.dims;
}

}  // namespace detm
