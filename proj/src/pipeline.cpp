#include "detm/pipeline.hpp"

#include "detm/heights.hpp"
#include "detm/linalg.hpp"
#include "detm/primes.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace detm {

std::optional<AuxiliaryForm> find_auxiliary_form(const Hypersurface& X,
                                                 const std::vector<ProjPoint>& points, int D) {
    if (D < 1) throw std::invalid_argument("find_auxiliary_form: D >= 1 required");
    for (const auto& P : points)
        if (X.f.evaluate(P) != 0)
            throw std::invalid_argument("find_auxiliary_form: point not on the hypersurface");

    GradedPiece gp = graded_piece(X, D);
    std::vector<Form> basis = graded_basis_forms(X, gp);
    RatMat M(points.size(), RatVec(basis.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) M[i][j] = basis[j].evaluate(points[i]);

    RankKernel rk = rank_and_kernel_over_Q(M);
    if (rk.kernel.empty()) return std::nullopt;

    // deterministic choice: kernel element with smallest grlex leading monomial
    std::optional<Form> best;
    for (const auto& v : rk.kernel) {
        Form cand(X.n, D);
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (v[j] != 0) cand = cand + basis[j] * v[j];
        cand = cand.integer_canonical();
        if (!best || grlex_greater(best->leading_monomial(), cand.leading_monomial()))
            best = std::move(cand);
    }

    if (D >= X.delta && divides_modulo(*best, X.f))
        throw std::logic_error("find_auxiliary_form: kernel lift fell into the ideal");
    for (const auto& P : points)
        if (best->evaluate(P) != 0)
            throw std::logic_error("find_auxiliary_form: kernel form fails to vanish");

    AuxiliaryForm out;
    out.form = std::move(*best);
    out.degree_used = D;
    out.covered_points = points;
    return out;
}

DetCheck determinant_valuation_check(const Hypersurface& X, const std::vector<ProjPoint>& points,
                                     int D, long p) {
    GradedPiece gp = graded_piece(X, D);
    if (static_cast<long>(points.size()) != gp.r1)
        throw std::invalid_argument("determinant_valuation_check: need exactly r_1(D) points");
    for (const auto& P : points)
        if (X.f.evaluate(P) != 0)
            throw std::invalid_argument("determinant_valuation_check: point not on the hypersurface");
    FpPoint xi = reduce_mod_p(points[0], p);
    for (const auto& P : points)
        if (!(reduce_mod_p(P, p) == xi))
            throw std::invalid_argument("determinant_valuation_check: mixed residue classes");
    if (!is_regular_mod_p(X, xi))
        throw std::invalid_argument("determinant_valuation_check: singular reduction");

    std::vector<Form> basis = graded_basis_forms(X, gp);
    IntMat M(gp.r1, std::vector<Int>(gp.r1));
    for (long i = 0; i < gp.r1; ++i)
        for (long j = 0; j < gp.r1; ++j) {
            Rat v = basis[j].evaluate(points[i]);
            if (v.get_den() != 1)
                throw std::logic_error("determinant_valuation_check: non-integer evaluation");
            M[i][j] = v.get_num();
        }

    DetCheck out;
    out.det = int_determinant(std::move(M));
    out.valuation = padic_valuation(out.det, p);
    out.R = filtration_profile(X, D, points[0]).R;
    out.holds = !out.valuation || *out.valuation >= out.R;
    return out;
}

std::optional<AuxiliaryForm> singular_cover(const Hypersurface& X) {
    if (X.delta < 2) return std::nullopt;  // smooth in codimension: empty cover
    std::optional<Form> best;
    for (int i = 0; i <= X.n; ++i) {
        Form g = X.f.partial_derivative(i);
        if (g.is_zero()) continue;
        g = g.integer_canonical();
        if (!best || grlex_greater(best->leading_monomial(), g.leading_monomial()))
            best = std::move(g);
    }
    if (!best) throw std::logic_error("singular_cover: all partial derivatives vanish");
    AuxiliaryForm out;
    out.form = std::move(*best);
    out.degree_used = X.delta - 1;
    return out;
}

namespace {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    };
    std::vector<std::thread> pool;
    int k = static_cast<int>(std::min(static_cast<std::size_t>(jobs), count));
    for (int t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

bool on_some_form(const std::vector<Form>& forms, const ProjPoint& P) {
    for (const auto& g : forms)
        if (g.evaluate(P) == 0) return true;
    return false;
}

}  // namespace

ExperimentReport run_experiment(const Hypersurface& X, double B, const Rat& epsilon,
                                const ExperimentConfig& config) {
    auto t0 = std::chrono::steady_clock::now();
    double logB = std::log(B);
    double eps = to_double(epsilon);
    if (logB < eps)
        throw std::invalid_argument("run_experiment: regime requires log B >= epsilon");

    ExperimentReport rep;
    rep.variety = X.f.to_string();
    rep.B = B;
    rep.epsilon = epsilon;
    rep.h_X = config.h_X ? *config.h_X : naive_form_height(X.f);
    rep.I_value = config.I_value ? *config.I_value : I_lower_bound(X.d(), X.delta);

    BoundInputs bi;
    bi.n = X.n;
    bi.d = X.d();
    bi.delta = X.delta;
    bi.epsilon = epsilon;
    bi.B = B;
    bi.h_X = rep.h_X;
    bi.I_value = rep.I_value;

    rep.points = enumerate_points(X, Rat(B));
    rep.singular = singular_cover(X);
    if (rep.singular) rep.forms.push_back(rep.singular->form);
    rep.count_bound_value = count_bound(bi).bound;

    if (rep.h_X > large_height_threshold(bi)) {
        // large-height branch: one hypersurface through all of S(X;B)
        rep.part1 = true;
        int D1 = 2 * (X.n - X.d()) * (X.delta - 1) + X.d() + 2;
        ClassOutcome oc;
        oc.members = rep.points;
        oc.D_used = D1;
        if (auto aux = find_auxiliary_form(X, rep.points, D1)) {
            oc.success = true;
            oc.form = aux->form;
            rep.forms.push_back(aux->form);
        }
        rep.outcomes.push_back(std::move(oc));
    } else {
        PrimePlan plan = prime_plan(bi);
        rep.primes = plan.primes;

        std::vector<ProjPoint> remaining;
        for (const auto& P : rep.points)
            if (!on_some_form(rep.forms, P)) remaining.push_back(P);

        for (const auto& pz : plan.primes) {
            if (remaining.empty()) break;
            long p = pz.get_si();
            auto classes = partition_into_classes(X, remaining, p);

            std::vector<ClassOutcome> results(classes.size());
            parallel_for(classes.size(), config.jobs, [&](std::size_t i) {
                const ResidueClass& c = classes[i];
                ClassOutcome oc;
                oc.p = c.p;
                oc.class_point = c.point_mod_p;
                oc.regular = c.regular;
                oc.members = c.members;
                if (c.regular) {
                    for (int D = 1; D <= config.max_degree; ++D) {
                        if (auto aux = find_auxiliary_form(X, c.members, D)) {
                            oc.success = true;
                            oc.D_used = D;
                            oc.form = aux->form;
                            break;
                        }
                    }
                }
                results[i] = std::move(oc);
            });

            for (auto& oc : results) {
                // classes with singular reduction are deferred to later primes
                if (!oc.regular) continue;
                if (oc.success) rep.forms.push_back(oc.form);
                rep.outcomes.push_back(std::move(oc));
            }
            std::vector<ProjPoint> still;
            for (const auto& P : remaining)
                if (!on_some_form(rep.forms, P)) still.push_back(P);
            remaining = std::move(still);
        }
    }

    for (const auto& P : rep.points)
        if (!on_some_form(rep.forms, P)) rep.uncovered.push_back(P);
    rep.all_covered = rep.uncovered.empty();
    rep.total_forms = static_cast<long>(rep.forms.size());
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace detm
