#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace planarlim {

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}
    Rat(int v) : v_(v) {}
    Rat(long num, long den);
    /// From any GMP integer or rational expression.
    template <class T, class U>
    explicit Rat(const __gmp_expr<T, U>& v) : v_(v) { v_.canonicalize(); }
    Rat(const mpz_class& num, const mpz_class& den);

    /// Parses "p", "-p" or "p/q" (decimal integers).
    static Rat parse(const std::string& text);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    /// "p/q" form, or "p" when the denominator is 1.
    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class v_{0};
};

Rat abs(const Rat& r);
/// r^e for integer e (negative exponents require r != 0).
Rat pow(const Rat& r, long e);
/// Exact square root when r is the square of a rational, false otherwise.
bool exact_sqrt(const Rat& r, Rat& out);

/// Binomial coefficient C(n, k) with the convention C(n, k) = 0 unless 0 <= k <= n.
mpz_class binom(long n, long k);
Rat binom_rat(long n, long k);
mpz_class factorial(unsigned long n);

}  // namespace planarlim

template <>
struct std::hash<planarlim::Rat> {
    size_t operator()(const planarlim::Rat& r) const;
};
