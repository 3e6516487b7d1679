#pragma once

#include <map>
#include <string>
#include <vector>

#include "planarlim/poly.hpp"

namespace planarlim {

/// Sparse multivariate polynomial with rational coefficients over named variables.
///
/// Terms are keyed by exponent vectors (one entry per variable); no zero coefficients are
/// stored. Two polynomials combined arithmetically must share the same variable list.
class MPoly {
public:
    using Exponents = std::vector<int>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(const std::vector<std::string>& vars, const Rat& c);
    static MPoly variable(const std::vector<std::string>& vars, const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    int var_index(const std::string& name) const;
    bool is_zero() const { return terms_.empty(); }
    /// Degree in the given variable (-1 for the zero polynomial).
    int degree(int var) const;
    int degree(const std::string& name) const { return degree(var_index(name)); }
    Rat coeff(const Exponents& e) const;

    void add_term(const Exponents& e, const Rat& c);

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const Rat& s, const MPoly& a);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }
    MPoly pow(int e) const;

    MPoly derivative(int var) const;
    MPoly derivative(const std::string& name) const { return derivative(var_index(name)); }
    /// Substitutes a rational value for one variable (the variable stays in the list).
    MPoly substitute(int var, const Rat& value) const;
    /// Coefficient of var^k as a polynomial in the remaining variables.
    MPoly coeff_of(int var, int k) const;
    /// Converts to a univariate polynomial in `var`; every other variable must be absent.
    Poly to_univariate(int var) const;
    /// Lifts a univariate polynomial into the given variable.
    static MPoly from_univariate(const std::vector<std::string>& vars, int var, const Poly& p);

    /// Generic evaluation: values[i] is substituted for variable i (any ring X with
    /// +, * and embed(Rat, X)).
    template <class X>
    X evaluate(const std::vector<X>& values) const {
        X acc = embed(Rat(0), values.at(0));
        std::vector<std::vector<X>> powers(vars_.size());
        for (const auto& [e, c] : terms_) {
            X term = embed(c, values[0]);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(embed(Rat(1), values[0]));
                while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * values[i]);
                term = term * pw[e[i]];
            }
            acc = acc + term;
        }
        return acc;
    }

    /// Removes the largest monomial factor x^a y^b ... dividing every term.
    MPoly strip_monomial_factor() const;
    /// Scales to integer coefficients with gcd 1 and positive leading term (in map order).
    MPoly primitive() const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::map<Exponents, Rat> terms_;
};

/// Bivariate polynomial in (t, y): an MPoly over the variable list {"t", "y"}.
using BivarPoly = MPoly;
inline const std::vector<std::string>& bivar_vars() {
    static const std::vector<std::string> v{"t", "y"};
    return v;
}
/// Builds a bivariate polynomial from (i, j, c) triples meaning c * t^i * y^j.
BivarPoly bivar(const std::vector<std::tuple<int, int, Rat>>& terms);
/// Builds a bivariate polynomial from its coefficients in y: sum_j coeffs[j](t) y^j.
BivarPoly bivar_from_y_coeffs(const std::vector<Poly>& coeffs);
/// Coefficients of y^j as univariate polynomials in t.
std::vector<Poly> y_coeffs(const BivarPoly& p);

/// Resultant with respect to `eliminate`, the Sylvester-matrix determinant
/// det Syl(p, q) built from the formal degrees of p and q in that variable. The result
/// lives in the remaining variables (the eliminated one has degree 0).
MPoly resultant_m(const MPoly& p, const MPoly& q, const std::string& eliminate);
/// Bivariate convenience: the resultant as a univariate polynomial in the other variable.
Poly resultant(const BivarPoly& p, const BivarPoly& q, const std::string& eliminate);
/// discriminant(p, y) := resultant(p, dp/dy, y). With n = deg_y p and leading coefficient
/// a_n this equals (-1)^(n(n-1)/2) * a_n times the classical discriminant.
Poly discriminant(const BivarPoly& p, const std::string& var);
MPoly discriminant_m(const MPoly& p, const std::string& var);

/// Determinant of a square rational matrix by fraction-based Gaussian elimination.
Rat determinant(std::vector<std::vector<Rat>> m);

}  // namespace planarlim
