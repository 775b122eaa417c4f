#include "detm/jet.hpp"

#include <stdexcept>

namespace detm {

void LocalSeries::add_term(const Key& k, const Rat& c) {
    if (static_cast<int>(k.size()) != nvars_) throw std::invalid_argument("LocalSeries: key size mismatch");
    int d = 0;
    for (int e : k) d += e;
    if (d > max_deg_ || c == 0) return;
    Rat s = coeff(k) + c;
    if (s == 0)
        terms_.erase(k);
    else
        terms_[k] = s;
}

Rat LocalSeries::coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rat(0) : it->second;
}

LocalSeries LocalSeries::operator+(const LocalSeries& o) const {
    LocalSeries r(nvars_, std::min(max_deg_, o.max_deg_));
    for (const auto& [k, c] : terms_) r.add_term(k, c);
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

LocalSeries LocalSeries::operator-(const LocalSeries& o) const { return *this + o * Rat(-1); }

LocalSeries LocalSeries::operator*(const LocalSeries& o) const {
    LocalSeries r(nvars_, std::min(max_deg_, o.max_deg_));
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Key k(nvars_);
            int d = 0;
            for (int i = 0; i < nvars_; ++i) { k[i] = ka[i] + kb[i]; d += k[i]; }
            if (d > r.max_deg_) continue;
            r.add_term(k, ca * cb);
        }
    return r;
}

LocalSeries LocalSeries::operator*(const Rat& c) const {
    LocalSeries r(nvars_, max_deg_);
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

LocalSeries LocalSeries::homogeneous_part(int k) const {
    LocalSeries r(nvars_, max_deg_);
    for (const auto& [key, c] : terms_) {
        int d = 0;
        for (int e : key) d += e;
        if (d == k) r.terms_[key] = c;
    }
    return r;
}

std::optional<int> LocalSeries::order() const {
    std::optional<int> best;
    for (const auto& [key, c] : terms_) {
        int d = 0;
        for (int e : key) d += e;
        if (!best || d < *best) best = d;
    }
    return best;
}

LocalSeries LocalSeries::substitute(int var, const LocalSeries& value) const {
    // powers of `value` computed once per needed exponent
    std::vector<LocalSeries> pow;
    pow.emplace_back(nvars_, max_deg_);
    pow[0].add_term(Key(nvars_, 0), 1);
    LocalSeries r(nvars_, max_deg_);
    for (const auto& [key, c] : terms_) {
        int e = key[var];
        while (static_cast<int>(pow.size()) <= e) pow.push_back(pow.back() * value);
        Key rest = key;
        rest[var] = 0;
        LocalSeries mono(nvars_, max_deg_);
        mono.add_term(rest, c);
        r = r + mono * pow[e];
    }
    return r;
}

LocalSeries LocalSeries::drop_var(int var) const {
    LocalSeries r(nvars_ - 1, max_deg_);
    for (const auto& [key, c] : terms_) {
        if (key[var] != 0) throw std::domain_error("drop_var: variable still present");
        Key k;
        k.reserve(nvars_ - 1);
        for (int i = 0; i < nvars_; ++i)
            if (i != var) k.push_back(key[i]);
        r.add_term(k, c);
    }
    return r;
}

int default_chart(const ProjPoint& P) {
    int best = -1;
    Int best_abs = 0;
    for (std::size_t i = 0; i < P.coords.size(); ++i) {
        Int a = abs(P.coords[i]);
        if (a > best_abs) { best_abs = a; best = static_cast<int>(i); }
    }
    return best;
}

JetExpansion jet_at(const Form& f, const ProjPoint& P, int max_order, std::optional<int> chart) {
    int nv = f.num_vars();
    if (static_cast<int>(P.coords.size()) != nv) throw std::invalid_argument("jet_at: dimension mismatch");
    int i0 = chart ? *chart : default_chart(P);
    if (P.coords[i0] == 0) throw std::domain_error("jet_at: chart coordinate vanishes at the center");

    int n = nv - 1;  // local parameters
    // affine coordinates of the center with chart coordinate scaled to 1
    std::vector<Rat> q(nv);
    for (int i = 0; i < nv; ++i) q[i] = Rat(P.coords[i]) / Rat(P.coords[i0]);

    // per variable, the series (q_i + t_i) (or the constant 1 for the chart)
    std::vector<LocalSeries> var_series;
    var_series.reserve(nv);
    int li = 0;
    for (int i = 0; i < nv; ++i) {
        LocalSeries s(n, max_order);
        if (i == i0) {
            s.add_term(LocalSeries::Key(n, 0), 1);
        } else {
            if (q[i] != 0) s.add_term(LocalSeries::Key(n, 0), q[i]);
            LocalSeries::Key k(n, 0);
            k[li] = 1;
            s.add_term(k, 1);
            ++li;
        }
        var_series.push_back(std::move(s));
    }

    LocalSeries total(n, max_order);
    for (const auto& [m, c] : f.terms()) {
        LocalSeries t(n, max_order);
        t.add_term(LocalSeries::Key(n, 0), c);
        for (int i = 0; i < nv; ++i)
            for (int e = 0; e < m.exp[i]; ++e) t = t * var_series[i];
        total = total + t;
    }
    return JetExpansion{P, i0, std::move(total)};
}

ImplicitSolution implicit_solve(const LocalSeries& F, int max_deg) {
    int n = F.nvars();
    // the linear coefficient of largest absolute value picks the solved variable
    int sv = -1;
    Rat a;
    for (int i = 0; i < n; ++i) {
        LocalSeries::Key k(n, 0);
        k[i] = 1;
        Rat c = F.coeff(k);
        if (c == 0) continue;
        if (sv < 0 || abs(c) > abs(a)) { sv = i; a = c; }
    }
    if (F.coeff(LocalSeries::Key(n, 0)) != 0)
        throw std::domain_error("implicit_solve: center is not on the hypersurface");
    if (sv < 0) throw std::domain_error("implicit_solve: singular center (no linear term)");

    Rat inv_a = 1 / a;
    LocalSeries phi(n, max_deg);  // exponent of sv stays 0 throughout
    for (int iter = 0; iter <= max_deg; ++iter) {
        LocalSeries val = F.substitute(sv, phi);  // residual, free of sv
        if (val.is_zero()) break;
        phi = phi - val * inv_a;
    }
    return ImplicitSolution{sv, std::move(phi)};
}

}  // namespace detm
