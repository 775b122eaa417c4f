#include "detm/bounds.hpp"

#include "detm/primes.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace detm {

void BoundReport::add(std::string name, double value, std::string formula) {
    entries.push_back(BoundEntry{std::move(name), value, std::move(formula)});
}

const BoundEntry* BoundReport::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

double default_mu_max_bound(int n, int delta) {
    return 0.5 * std::log(binomial(n + delta, delta).get_d());
}

Int sombra_lower_bound(int n, int d, int delta, int D) {
    (void)n;
    if (D < 1) throw std::invalid_argument("sombra_lower_bound: D >= 1 required");
    return binomial(D + d + 1, d + 1) - binomial(D - delta + d + 1, d + 1);
}

namespace {

// largest integer strictly smaller than delta^(1/d)*(D-delta+2) + (d+1)/2,
// decided with exact integer arithmetic
Int strict_floor_B(int d, int delta, int D) {
    long s = D - delta + 2;
    Int sd = 1;
    for (int i = 0; i < d; ++i) sd *= s;
    Int v = Int(delta) * sd;          // (delta^(1/d) * s)^d
    Int t = iroot(v, static_cast<unsigned long>(d));
    Int td = 1;
    for (int i = 0; i < d; ++i) td *= t;
    bool perfect = (td == v);
    if (d % 2 == 1) {
        // (d+1)/2 is an integer, so x is an integer iff the root is exact
        Int k = (d + 1) / 2;
        return perfect ? Int(t + k - 1) : Int(t + k);
    }
    // (d+1)/2 is a half-integer, so x is never an integer; compare the
    // fractional part of the root against 1/2: 2^d*v vs (2t+1)^d
    Int lhs = v;
    for (int i = 0; i < d; ++i) lhs *= 2;
    Int rhs = 1;
    for (int i = 0; i < d; ++i) rhs *= (2 * t + 1);
    Int m = d / 2;
    return (lhs >= rhs) ? Int(t + m + 1) : Int(t + m);
}

}  // namespace

RLowerBound explicit_R_lower_bound(int d, int delta, int D) {
    if (D < delta) throw std::invalid_argument("explicit_R_lower_bound: requires D >= delta");
    if (d < 1 || delta < 1) throw std::invalid_argument("explicit_R_lower_bound: d, delta >= 1");
    RLowerBound out;
    out.B_int = strict_floor_B(d, delta, D);

    long s = D - delta + 2;
    Int sd = 1;
    for (int i = 0; i < d; ++i) sd *= s;
    Rat first = Rat(out.B_int) * Rat(Int(delta) * sd, factorial(d));
    Rat base = Rat(out.B_int) + Rat(d, 2);
    Rat pow = 1;
    for (int i = 0; i < d + 1; ++i) pow *= base;
    out.L = first - pow / Rat(factorial(d + 1)) - 1;
    out.L.canonicalize();

    out.dominant_coefficient = static_cast<double>(d) *
                               std::pow(static_cast<double>(delta), 1.0 + 1.0 / d) /
                               factorial(d + 1).get_d();
    return out;
}

ChardinBound chardin_upper_bound(int delta, int d, int D) {
    if (D < 1) throw std::invalid_argument("chardin_upper_bound: D >= 1 required");
    ChardinBound out;
    out.binomial_bound = Int(delta) * binomial(D + d, D);
    Int p = 1;
    for (int i = 0; i < D; ++i) p *= (d + 1);
    out.weak_bound = Int(delta) * p;
    return out;
}

Rat I_closed_form_curve(int delta) {
    if (delta < 1) throw std::invalid_argument("I_closed_form_curve: delta >= 1");
    Rat r(Int(delta) * delta, 2);
    r.canonicalize();
    return r;
}

Rat I_closed_form_linear(int d) {
    if (d < 1) throw std::invalid_argument("I_closed_form_linear: d >= 1");
    Rat r(d, d + 1);
    r.canonicalize();
    return r;
}

double I_lower_bound(int d, int delta) {
    if (d < 1 || delta < 1) throw std::invalid_argument("I_lower_bound: d, delta >= 1");
    return static_cast<double>(d) * std::pow(static_cast<double>(delta), 1.0 + 1.0 / d) /
           static_cast<double>(d + 1);
}

std::optional<Rat> I_lower_bound_exact(int d, int delta) {
    if (d < 1 || delta < 1) throw std::invalid_argument("I_lower_bound_exact: d, delta >= 1");
    Int root = iroot(delta, static_cast<unsigned long>(d));
    Int check = 1;
    for (int i = 0; i < d; ++i) check *= root;
    if (check != delta) return std::nullopt;
    Rat r(Int(d) * delta * root, d + 1);  // d * delta^(1+1/d) / (d+1)
    r.canonicalize();
    return r;
}

double cubic_remark_coefficient(int n, int delta) {
    if (n < 3) throw std::invalid_argument("cubic_remark_coefficient: n >= 3 required");
    Int cap = 1;
    for (int i = 0; i < n - 1; ++i) cap *= 2;
    if (delta < 2 || Int(delta) > cap)
        throw std::invalid_argument("cubic_remark_coefficient: requires 2 <= delta <= 2^(n-1)");
    double D = delta;
    return 2.0 * D / factorial(n).get_d() +
           D * std::pow(D / 2.0, 1.0 / (n - 2)) / factorial(n - 1).get_d() * (1.0 - 2.0 / n);
}

BoundReport constants_C123(const BoundInputs& in, int r_param) {
    int n = in.n, d = in.d, delta = in.delta;
    if (d < 1 || d > n - 1 || delta < 1)
        throw std::invalid_argument("constants_C123: requires 1 <= d <= n-1 and delta >= 1");
    double mu = (in.mu_max_bound != 0.0) ? in.mu_max_bound : default_mu_max_bound(n, delta);
    double log_rk = std::log(binomial(n + delta, delta).get_d());
    double log_np1 = std::log(static_cast<double>(n + 1));
    int nd = n - d;

    double C1 = (d + 2) * mu + 0.5 * (d + 2) * log_rk + 0.5 * delta * std::log((d + 2.0) * nd) +
                0.5 * delta * (d + 1) * log_np1;
    double C2 = 0.5 * r_param * log_rk + 0.5 * std::log(binomial(n + 1, nd).get_d()) +
                0.5 * std::log(factorial(nd).get_d()) + nd * std::log(static_cast<double>(delta));
    double C3 = nd * C1 + C2;

    // sanity check that C_3 grows at most linearly in delta: bound every term
    // through log rk(Sym^delta) <= delta*log(n+1) and log(delta) <= delta
    double mu_per_delta = std::max(0.5 * log_np1, mu / delta);
    double c1_per_delta = (d + 2) * mu_per_delta + 0.5 * (d + 2) * log_np1 +
                          0.5 * std::log((d + 2.0) * nd) + 0.5 * (d + 1) * log_np1;
    double c2_per_delta = 0.5 * r_param * log_np1 + 0.5 * std::log(binomial(n + 1, nd).get_d()) +
                          0.5 * std::log(factorial(nd).get_d()) + nd;
    double c = nd * c1_per_delta + c2_per_delta;
    if (C3 > c * delta * (1.0 + 1e-12))
        throw std::logic_error("constants_C123: linear-in-delta bound on C_3 violated");

    BoundReport rep;
    rep.add("C_1", C1,
            "(d+2)*mu_max + (1/2)(d+2)log C(n+delta,delta) + (delta/2)log((d+2)(n-d)) + "
            "(delta/2)(d+1)log(n+1)");
    rep.add("C_2", C2,
            "(r/2)log C(n+delta,delta) + (1/2)log C(n+1,n-d) + (1/2)log((n-d)!) + (n-d)log delta");
    rep.add("C_3", C3, "(n-d)*C_1 + C_2");
    rep.add("mu_max_bound", mu, "(1/2)log C(n+delta,delta) unless supplied");
    rep.add("c(n,d)", c, "delta-free coefficient with C_3 <= c(n,d)*delta");
    return rep;
}

PrimePlan prime_plan(const BoundInputs& in) {
    double logB = std::log(in.B);
    double eps = to_double(in.epsilon);
    if (logB < eps) throw std::invalid_argument("prime_plan: requires log B >= epsilon");
    if (in.I_value <= 0) throw std::invalid_argument("prime_plan: requires I_value > 0");
    int n = in.n, d = in.d, delta = in.delta, K = in.field_degree;

    PrimePlan plan;
    plan.log_N0 = (1.0 + eps) *
                  (logB + 0.5 * K * std::log((n + 1.0) * (d + 1.0))) * delta / in.I_value;
    plan.N0 = std::exp(plan.log_N0);

    double C3 = constants_C123(in).find("C_3")->value;
    double numer = (n - d) * (delta - 1.0) * logB + ((n - d) * in.h_X + C3) * K;
    plan.r = static_cast<long>(std::floor(numer / plan.log_N0 + 1.0));
    if (plan.r < 1) plan.r = 1;

    // p_i in the Bertrand window (alpha^(i-1) N0, alpha^i N0]
    double lo = plan.N0;
    for (long i = 0; i < plan.r; ++i) {
        Rat lo_q(lo);
        auto p = next_prime_in_range(lo_q, Rat(in.alpha));
        if (!p) throw std::runtime_error("prime_plan: empty Bertrand window");
        plan.primes.push_back(*p);
        lo *= in.alpha;
    }
    return plan;
}

CountBound count_bound(const BoundInputs& in, std::optional<double> A3_override) {
    int n = in.n, d = in.d, delta = in.delta, K = in.field_degree;
    double eps = to_double(in.epsilon);
    CountBound out;
    double jets = std::pow(2.0 * d + 2.0, d + 1) / factorial(d).get_d();
    out.A1 = (n - d) * (delta - 1.0) + jets * (n - d) * delta;
    double C3 = constants_C123(in).find("C_3")->value;
    out.A2 = K * (C3 + jets * delta *
                           (std::log(n + 1.0) + 0.5 * std::log(d + 1.0) + std::pow(2.0, d)));
    out.A3 = A3_override ? *A3_override
                         : (in.I_value / delta) * (out.A1 + out.A2 / eps) + 1.0;

    double a = in.alpha;
    double geo = std::pow(a, d) * (std::pow(a, out.A3 * d) - 1.0) / (std::pow(a, d) - 1.0);
    double exp4 = 0.5 * (1.0 + eps) * K * (d + 1.0) * std::pow(static_cast<double>(delta), -1.0 / d);
    out.C4pp = delta * (d + 1.0) * geo * std::pow((d + 1.0) * (n + 1.0), exp4);
    out.C4 = out.C4pp + 1.0;
    out.exponent = (1.0 + eps) * d * delta / in.I_value;
    out.bound = out.C4 * std::pow(in.B, out.exponent);
    return out;
}

double large_height_threshold(const BoundInputs& in) {
    double jets = std::pow(2.0 * in.d + 2.0, in.d + 1) / factorial(in.d).get_d();
    return jets * in.delta *
           (std::log(in.B) / in.field_degree + 1.5 * std::log(in.n + 1.0) +
            std::pow(2.0, in.d));
}

}  // namespace detm
