#include "detm/form.hpp"

#include <sstream>
#include <stdexcept>

namespace detm {

Form::Form(int n, int degree, TermMap terms) : n_(n), degree_(degree), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) {
            it = terms_.erase(it);
            continue;
        }
        if (static_cast<int>(it->first.nvars()) != n_ + 1 || it->first.degree() != degree_)
            throw std::invalid_argument("Form: term does not match declared n/degree");
        ++it;
    }
}

void Form::set_coeff(const Monomial& m, const Rat& c) {
    if (static_cast<int>(m.nvars()) != n_ + 1 || m.degree() != degree_)
        throw std::invalid_argument("Form::set_coeff: monomial mismatch");
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

Rat Form::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Form Form::operator+(const Form& o) const {
    if (n_ != o.n_ || (!is_zero() && !o.is_zero() && degree_ != o.degree_))
        throw std::invalid_argument("Form addition: mismatch");
    Form r(n_, is_zero() ? o.degree_ : degree_);
    r.terms_ = terms_;
    for (const auto& [m, c] : o.terms_) {
        Rat s = r.coeff(m) + c;
        if (s == 0)
            r.terms_.erase(m);
        else
            r.terms_[m] = s;
    }
    return r;
}

Form Form::operator-(const Form& o) const { return *this + (o * Rat(-1)); }

Form Form::operator*(const Form& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Form multiplication: variable mismatch");
    Form r(n_, degree_ + o.degree_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] += mb.exp[i];
            Rat s = r.coeff(m) + ca * cb;
            if (s == 0)
                r.terms_.erase(m);
            else
                r.terms_[m] = s;
        }
    return r;
}

Form Form::operator*(const Rat& c) const {
    Form r(n_, degree_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

Rat Form::evaluate(const ProjPoint& P) const {
    std::vector<Rat> x(P.coords.begin(), P.coords.end());
    return evaluate(x);
}

Rat Form::evaluate(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != n_ + 1) throw std::invalid_argument("Form::evaluate: dimension mismatch");
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (int e = 0; e < m.exp[i]; ++e) t *= x[i];
        total += t;
    }
    return total;
}

long Form::evaluate_mod_p(const FpPoint& P) const {
    PrimeField F(P.p);
    long total = 0;
    for (const auto& [m, c] : terms_) {
        if (c.get_den() % P.p == 0) throw std::domain_error("Form::evaluate_mod_p: denominator divisible by p");
        long t = F.mul(F.reduce(Int(c.get_num())), F.inv(F.reduce(Int(c.get_den()))));
        for (std::size_t i = 0; i < P.coords.size(); ++i) t = F.mul(t, F.pow(P.coords[i], m.exp[i]));
        total = F.add(total, t);
    }
    return total;
}

Form Form::partial_derivative(int var) const {
    if (var < 0 || var > n_) throw std::invalid_argument("partial_derivative: bad variable index");
    Form r(n_, degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [m, c] : terms_) {
        if (m.exp[var] == 0) continue;
        Monomial d = m;
        d.exp[var] -= 1;
        r.terms_[d] = c * m.exp[var];
    }
    return r;
}

const Monomial& Form::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading_monomial of zero form");
    return terms_.begin()->first;
}

Form Form::integer_canonical() const {
    if (is_zero()) return *this;
    Int lcm = 1;
    for (const auto& [m, c] : terms_) lcm = lcm * c.get_den() / gcd(lcm, Int(c.get_den()));
    Int g = 0;
    for (const auto& [m, c] : terms_) {
        Rat v = c * Rat(lcm);
        v.canonicalize();
        g = gcd(g, Int(v.get_num()));
    }
    Rat scale = Rat(lcm) / Rat(g);
    if (terms_.begin()->second * scale < 0) scale = -scale;
    return *this * scale;
}

bool Form::has_integer_coprime_coeffs() const {
    Int g = 0;
    for (const auto& [m, c] : terms_) {
        if (c.get_den() != 1) return false;
        g = gcd(g, Int(c.get_num()));
    }
    return is_zero() || g == 1;
}

Int Form::max_abs_coeff() const {
    Int best = 0;
    for (const auto& [m, c] : terms_) {
        if (c.get_den() != 1) throw std::domain_error("max_abs_coeff: non-integer coefficients");
        Int a = abs(Int(c.get_num()));
        if (a > best) best = a;
    }
    return best;
}

std::string Form::to_string(const std::vector<std::string>& var_names) const {
    if (is_zero()) return "0";
    static const char* defaults[] = {"x", "y", "z", "w", "v", "u"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        if (a < 0) a = -a;
        bool unit = (a == 1) && m.degree() > 0;
        if (!unit) os << a.get_str();
        for (std::size_t i = 0; i < m.exp.size(); ++i) {
            if (m.exp[i] == 0) continue;
            std::string name = i < var_names.size()
                                   ? var_names[i]
                                   : (i < 6 ? defaults[i] : "x" + std::to_string(i));
            os << (unit ? "" : "*") << name;
            unit = false;
            if (m.exp[i] > 1) os << "^" << m.exp[i];
        }
    }
    return os.str();
}

Form monomial_form(int n, const Monomial& m, const Rat& c) {
    Form f(n, m.degree());
    f.set_coeff(m, c);
    return f;
}

bool divides_modulo(const Form& g, const Form& f) {
    if (f.is_zero()) throw std::invalid_argument("divides_modulo: zero divisor");
    if (g.is_zero()) return true;
    if (g.degree() < f.degree()) return false;
    // single-divisor reduction: membership in the principal ideal (f) is
    // exact divisibility, and lead(h*f) = lead(h)*lead(f) under grlex
    Form r = g;
    const Monomial& lf = f.leading_monomial();
    Rat cf = f.coeff(lf);
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        Monomial q = lr;
        for (std::size_t i = 0; i < q.exp.size(); ++i) {
            q.exp[i] -= lf.exp[i];
            if (q.exp[i] < 0) return false;
        }
        r = r - monomial_form(f.n(), q, r.coeff(lr) / cf) * f;
    }
    return true;
}

Form exact_divide(const Form& g, const Form& f) {
    if (f.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    Form q(g.n(), g.degree() - f.degree());
    Form r = g;
    const Monomial& lf = f.leading_monomial();
    Rat cf = f.coeff(lf);
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        Monomial qm = lr;
        for (std::size_t i = 0; i < qm.exp.size(); ++i) {
            qm.exp[i] -= lf.exp[i];
            if (qm.exp[i] < 0) throw std::domain_error("exact_divide: not divisible");
        }
        Rat qc = r.coeff(lr) / cf;
        q.set_coeff(qm, qc);
        r = r - monomial_form(f.n(), qm, qc) * f;
    }
    return q;
}

}  // namespace detm
