#include "planarlim/rat.hpp"

#include <stdexcept>

namespace planarlim {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator: " + text);
    q.canonicalize();
    return Rat(q);
}

std::string Rat::str() const { return v_.get_str(10); }

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& r, long e) {
    if (e < 0) return Rat(1) / pow(r, -e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), r.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), r.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

bool exact_sqrt(const Rat& r, Rat& out) {
    if (r.sign() < 0) return false;
    mpz_class n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    out = Rat(sn, sd);
    return true;
}

mpz_class binom(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rat binom_rat(long n, long k) { return Rat(binom(n, k)); }

mpz_class factorial(unsigned long n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace planarlim

size_t std::hash<planarlim::Rat>::operator()(const planarlim::Rat& r) const {
    return std::hash<std::string>()(r.str());
}
