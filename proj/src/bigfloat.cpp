#include "planarlim/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace planarlim {

BigFloat::BigFloat(long prec_bits) : prec_(prec_bits) {
    mpfr_init2(v_, prec_);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, long prec_bits) : prec_(prec_bits) {
    mpfr_init2(v_, prec_);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(double v, long prec_bits) : prec_(prec_bits) {
    mpfr_init2(v_, prec_);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rat& v, long prec_bits) : prec_(prec_bits) {
    mpfr_init2(v_, prec_);
    mpfr_set_q(v_, v.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& decimal, long prec_bits) : prec_(prec_bits) {
    mpfr_init2(v_, prec_);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("not a decimal number: " + decimal);
    }
}

BigFloat::BigFloat(const BigFloat& o) : prec_(o.prec_) {
    mpfr_init2(v_, prec_);
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(v_, prec_);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

void BigFloat::widen_to(long prec) {
    if (prec <= prec_) return;
    mpfr_prec_round(v_, prec, MPFR_RNDN);
    prec_ = prec;
}

std::string BigFloat::str(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Re", digits - 1, v_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(prec_);
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    widen_to(o.prec_);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    widen_to(o.prec_);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    widen_to(o.prec_);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    widen_to(o.prec_);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigFloat abs(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_abs(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat log(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_log(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat exp(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_exp(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat pow(const BigFloat& x, long e) {
    BigFloat out(x.precision());
    mpfr_pow_si(out.get(), x.get(), e, MPFR_RNDN);
    return out;
}

BigFloat pow(const BigFloat& x, const BigFloat& e) {
    BigFloat out(std::max(x.precision(), e.precision()));
    mpfr_pow(out.get(), x.get(), e.get(), MPFR_RNDN);
    return out;
}

BigFloat pi(long prec_bits) {
    BigFloat out(prec_bits);
    mpfr_const_pi(out.get(), MPFR_RNDN);
    return out;
}

BigFloat lgamma_big(const BigFloat& x) {
    BigFloat out(x.precision());
    int sign = 0;
    mpfr_lgamma(out.get(), &sign, x.get(), MPFR_RNDN);
    return out;
}

BigFloat cos(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_cos(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat rel_diff(const BigFloat& a, const BigFloat& b) {
    BigFloat d = abs(a - b);
    BigFloat s = abs(b);
    if (s.is_zero()) return d;
    return d / s;
}

}  // namespace planarlim
