#pragma once

#include <mpfr.h>

#include <compare>
#include <ostream>
#include <string>

#include "planarlim/rat.hpp"

namespace planarlim {

inline constexpr long kDefaultPrecisionBits = 256;

/// Binary floating-point number of configurable precision (MPFR, round-to-nearest).
///
/// Each value carries its own precision. Binary operations produce a result at the larger
/// of the two operand precisions, so mixing precisions never loses bits silently.
class BigFloat {
public:
    explicit BigFloat(long prec_bits = kDefaultPrecisionBits);
    BigFloat(long v, long prec_bits);
    BigFloat(double v, long prec_bits);
    BigFloat(const Rat& v, long prec_bits);
    /// Parses a decimal literal such as "0.0180827901833" or "-1.5e-3".
    BigFloat(const std::string& decimal, long prec_bits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    long precision() const { return prec_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Scientific notation with the given number of significant decimal digits.
    std::string str(int digits = 30) const;

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

    friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

private:
    void widen_to(long prec);
    mpfr_t v_;
    long prec_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat pow(const BigFloat& x, long e);
BigFloat pow(const BigFloat& x, const BigFloat& e);
BigFloat pi(long prec_bits);
BigFloat lgamma_big(const BigFloat& x);
BigFloat cos(const BigFloat& x);
/// |a - b| / max(|b|, tiny); a convenience for relative-tolerance checks.
BigFloat rel_diff(const BigFloat& a, const BigFloat& b);

}  // namespace planarlim
