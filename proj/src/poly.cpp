#include "planarlim/poly.hpp"

#include <sstream>

namespace planarlim {

Poly poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rat> v;
    for (const auto& s : coeffs) v.push_back(Rat::parse(s));
    return Poly(std::move(v));
}

std::vector<std::string> poly_to_strings(const Poly& p) {
    std::vector<std::string> out;
    for (const Rat& c : p.coeffs()) out.push_back(c.str());
    return out;
}

std::string poly_to_text(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        const Rat& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        Rat a = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << a;
        } else {
            if (!a.is_one()) os << a << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class l = 1, g = 0;
    for (const Rat& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    std::vector<Rat> v;
    for (const Rat& c : p.coeffs()) {
        Rat s = c * Rat(l);
        mpz_class n = s.num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        v.push_back(s);
    }
    if (p.lead().sign() < 0) g = -g;
    for (Rat& c : v) c = c / Rat(g);
    return Poly(std::move(v));
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p;
    Poly g = gcd(p, p.derivative());
    return primitive_part(p / g);
}

Poly taylor_shift(const Poly& p, const Rat& s) {
    std::vector<Rat> c = p.coeffs();
    int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i)
        for (int j = n - 2; j >= i; --j) c[j] += s * c[j + 1];
    return Poly(std::move(c));
}

Poly scale_arg(const Poly& p, const Rat& s) {
    std::vector<Rat> c = p.coeffs();
    Rat f(1);
    for (auto& x : c) {
        x *= f;
        f *= s;
    }
    return Poly(std::move(c));
}

Poly reverse(const Poly& p) {
    std::vector<Rat> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly(std::move(c));
}

int sign_variations(const Poly& p) {
    int count = 0, last = 0;
    for (const Rat& c : p.coeffs()) {
        int s = c.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int sign_at(const Poly& p, const Rat& x) { return p.eval(x).sign(); }

}  // namespace planarlim
