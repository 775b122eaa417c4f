#pragma once

#include <map>
#include <string>
#include <vector>

#include "detm/monomial.hpp"
#include "detm/projpoint.hpp"
#include "detm/rational.hpp"

namespace detm {

// Homogeneous polynomial with exact rational coefficients in n+1 variables.
// Terms are stored grlex-descending with no zero coefficients.
class Form {
public:
    using TermMap = std::map<Monomial, Rat, GrlexGreater>;

    Form() : n_(0), degree_(0) {}
    Form(int n, int degree) : n_(n), degree_(degree) {}
    Form(int n, int degree, TermMap terms);

    int n() const { return n_; }                 // ambient projective dimension
    int num_vars() const { return n_ + 1; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void set_coeff(const Monomial& m, const Rat& c);
    Rat coeff(const Monomial& m) const;

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator*(const Form& o) const;
    Form operator*(const Rat& c) const;
    Form operator-() const { return *this * Rat(-1); }
    bool operator==(const Form& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    Rat evaluate(const ProjPoint& P) const;
    Rat evaluate(const std::vector<Rat>& x) const;
    long evaluate_mod_p(const FpPoint& P) const;

    Form partial_derivative(int var) const;

    // Leading (grlex-largest) monomial; form must be nonzero.
    const Monomial& leading_monomial() const;

    // Scale to integer coprime coefficients with positive leading coefficient.
    Form integer_canonical() const;
    bool has_integer_coprime_coeffs() const;

    // Max |coefficient| over an integer-coefficient form.
    Int max_abs_coeff() const;

    std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
    int n_;
    int degree_;
    TermMap terms_;
};

// Monomial as a Form.
Form monomial_form(int n, const Monomial& m, const Rat& c = 1);

// True iff g lies in the principal ideal (f), i.e. f divides g exactly.
bool divides_modulo(const Form& g, const Form& f);

// Exact division g / f; throws if not divisible.
Form exact_divide(const Form& g, const Form& f);

}  // namespace detm
