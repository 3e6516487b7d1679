#include "planarlim/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace planarlim {

MPoly MPoly::constant(const std::vector<std::string>& vars, const Rat& c) {
    MPoly p(vars);
    p.add_term(Exponents(vars.size(), 0), c);
    return p;
}

MPoly MPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
    MPoly p(vars);
    Exponents e(vars.size(), 0);
    e[p.var_index(name)] = 1;
    p.add_term(e, Rat(1));
    return p;
}

int MPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable: " + name);
    return static_cast<int>(it - vars_.begin());
}

int MPoly::degree(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

Rat MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const Rat& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector size mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("variable lists differ");
    MPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("variable lists differ");
    MPoly out(a.vars_);
    MPoly::Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MPoly operator*(const Rat& s, const MPoly& a) {
    MPoly out(a.vars_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, s * c);
    return out;
}

MPoly MPoly::pow(int e) const {
    MPoly out = constant(vars_, Rat(1));
    for (int i = 0; i < e; ++i) out = out * (*this);
    return out;
}

MPoly MPoly::derivative(int var) const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents f = e;
        f[var] -= 1;
        out.add_term(f, c * Rat(e[var]));
    }
    return out;
}

MPoly MPoly::substitute(int var, const Rat& value) const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[var] = 0;
        out.add_term(f, c * planarlim::pow(value, e[var]));
    }
    return out;
}

MPoly MPoly::coeff_of(int var, int k) const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != k) continue;
        Exponents f = e;
        f[var] = 0;
        out.add_term(f, c);
    }
    return out;
}

Poly MPoly::to_univariate(int var) const {
    std::vector<Rat> v(std::max(degree(var) + 1, 0), Rat(0));
    for (const auto& [e, c] : terms_) {
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var && e[i] != 0)
                throw std::invalid_argument("polynomial is not univariate in " + vars_[var]);
        v[e[var]] += c;
    }
    return Poly(std::move(v));
}

MPoly MPoly::from_univariate(const std::vector<std::string>& vars, int var, const Poly& p) {
    MPoly out(vars);
    Exponents e(vars.size(), 0);
    for (int i = 0; i <= p.degree(); ++i) {
        e[var] = i;
        out.add_term(e, p.coeffs()[i]);
    }
    return out;
}

MPoly MPoly::strip_monomial_factor() const {
    if (terms_.empty()) return *this;
    Exponents lo(vars_.size(), 1 << 30);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i) lo[i] = std::min(lo[i], e[i]);
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        for (size_t i = 0; i < f.size(); ++i) f[i] -= lo[i];
        out.terms_.emplace(f, c);
    }
    return out;
}

MPoly MPoly::primitive() const {
    if (terms_.empty()) return *this;
    mpz_class l = 1, g = 0;
    for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    for (const auto& [e, c] : terms_) {
        mpz_class n = (c * Rat(l)).num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (terms_.rbegin()->second.sign() < 0) g = -g;
    return (Rat(l) / Rat(g)) * (*this);
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = abs(c);
        os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
        first = false;
        bool any = false;
        std::ostringstream mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) mono << "*";
            any = true;
            mono << vars_[i];
            if (e[i] > 1) mono << "^" << e[i];
        }
        if (!any) os << a;
        else if (a.is_one()) os << mono.str();
        else os << a << "*" << mono.str();
    }
    return os.str();
}

BivarPoly bivar(const std::vector<std::tuple<int, int, Rat>>& terms) {
    MPoly p(bivar_vars());
    for (const auto& [i, j, c] : terms) p.add_term({i, j}, c);
    return p;
}

BivarPoly bivar_from_y_coeffs(const std::vector<Poly>& coeffs) {
    MPoly p(bivar_vars());
    for (size_t j = 0; j < coeffs.size(); ++j)
        for (int i = 0; i <= coeffs[j].degree(); ++i) p.add_term({i, static_cast<int>(j)}, coeffs[j].coeffs()[i]);
    return p;
}

std::vector<Poly> y_coeffs(const BivarPoly& p) {
    std::vector<Poly> out;
    for (int j = 0; j <= p.degree(1); ++j) out.push_back(p.coeff_of(1, j).to_univariate(0));
    return out;
}

Rat determinant(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = Rat(1) / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rat f = m[r][col] * inv;
            for (size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

namespace {

Rat sylvester_det(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    // a, b: coefficient vectors in ascending order with their formal lengths (deg + 1).
    int dp = static_cast<int>(a.size()) - 1, dq = static_cast<int>(b.size()) - 1;
    int n = dp + dq;
    if (n == 0) return Rat(1);
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k) m[r][r + k] = a[dp - k];
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k) m[dq + r][r + k] = b[dq - k];
    return determinant(std::move(m));
}

MPoly resultant_rec(const MPoly& p, const MPoly& q, int elim, int dp, int dq) {
    const auto& vars = p.vars();
    int free_var = -1;
    for (size_t v = 0; v < vars.size(); ++v) {
        if (static_cast<int>(v) == elim) continue;
        if (p.degree(static_cast<int>(v)) > 0 || q.degree(static_cast<int>(v)) > 0) {
            free_var = static_cast<int>(v);
            break;
        }
    }
    if (free_var < 0) {
        std::vector<Rat> a(dp + 1, Rat(0)), b(dq + 1, Rat(0));
        for (const auto& [e, c] : p.terms()) a[e[elim]] += c;
        for (const auto& [e, c] : q.terms()) b[e[elim]] += c;
        return MPoly::constant(vars, sylvester_det(a, b));
    }
    int bound = dq * std::max(p.degree(free_var), 0) + dp * std::max(q.degree(free_var), 0);
    std::vector<MPoly> values;
    for (int i = 0; i <= bound; ++i)
        values.push_back(resultant_rec(p.substitute(free_var, Rat(i)), q.substitute(free_var, Rat(i)), elim, dp, dq));
    // Lagrange interpolation in free_var through the nodes 0..bound.
    MPoly out(vars);
    Poly x = Poly::x(Rat(0));
    for (int i = 0; i <= bound; ++i) {
        if (values[i].is_zero()) continue;
        Poly basis = Poly::constant(Rat(1));
        Rat denom(1);
        for (int j = 0; j <= bound; ++j) {
            if (j == i) continue;
            basis = basis * (x - Poly::constant(Rat(j)));
            denom *= Rat(i - j);
        }
        out = out + (Rat(1) / denom) * (MPoly::from_univariate(vars, free_var, basis) * values[i]);
    }
    return out;
}

}  // namespace

MPoly resultant_m(const MPoly& p, const MPoly& q, const std::string& eliminate) {
    if (p.vars() != q.vars()) throw std::invalid_argument("variable lists differ");
    int elim = p.var_index(eliminate);
    int dp = p.degree(elim), dq = q.degree(elim);
    if (dp <= 0 && dq <= 0) throw std::invalid_argument("nothing to eliminate");
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
    return resultant_rec(p, q, elim, dp, dq);
}

Poly resultant(const BivarPoly& p, const BivarPoly& q, const std::string& eliminate) {
    MPoly r = resultant_m(p, q, eliminate);
    int other = -1;
    for (size_t v = 0; v < r.vars().size(); ++v)
        if (r.vars()[v] != eliminate) other = static_cast<int>(v);
    if (r.vars().size() != 2) throw std::invalid_argument("resultant(): expected a bivariate polynomial");
    return r.to_univariate(other);
}

MPoly discriminant_m(const MPoly& p, const std::string& var) {
    return resultant_m(p, p.derivative(var), var);
}

Poly discriminant(const BivarPoly& p, const std::string& var) {
    return resultant(p, p.derivative(var), var);
}

}  // namespace planarlim
