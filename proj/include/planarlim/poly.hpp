#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "planarlim/coeff.hpp"

namespace planarlim {

/// Zero test resolved at instantiation, so coefficient types declared after this header
/// (number-field elements) are found through argument-dependent lookup.
template <class K>
bool coeff_is_zero(const K& x) {
    return is_zero(x);
}

/// Dense univariate polynomial over a coefficient ring K, trailing zeros stripped.
///
/// The zero polynomial has degree -1. A prototype element carries the coefficient context
/// (number field or precision) so that constants can be created for empty polynomials.
template <class K>
class UPoly {
public:
    UPoly() : like_(embed(Rat(0), K{})) {}
    explicit UPoly(const K& like) : like_(embed(Rat(0), like)) {}
    UPoly(std::vector<K> coeffs, const K& like) : c_(std::move(coeffs)), like_(embed(Rat(0), like)) { trim(); }
    /// Convenience for K with a default context: coefficients in ascending order.
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)), like_(embed(Rat(0), K{})) {
        if (!c_.empty()) like_ = embed(Rat(0), c_[0]);
        trim();
    }

    static UPoly constant(const K& c) { return UPoly(std::vector<K>{c}, c); }
    static UPoly monomial(const K& c, int e) {
        std::vector<K> v(e + 1, embed(Rat(0), c));
        v[e] = c;
        return UPoly(std::move(v), c);
    }
    /// The polynomial x.
    static UPoly x(const K& like) { return monomial(embed(Rat(1), like), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    const K& like() const { return like_; }
    K coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : like_; }
    const K& lead() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    template <class X>
    X eval(const X& x) const {
        X acc = embed(Rat(0), x);
        for (int i = degree(); i >= 0; --i) acc = acc * x + lift(c_[i], x);
        return acc;
    }
    K operator()(const K& x) const { return eval(x); }

    UPoly derivative() const {
        std::vector<K> d;
        for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * embed(Rat(i), like_));
        return UPoly(std::move(d), like_);
    }

    UPoly operator-() const {
        std::vector<K> v;
        for (const K& a : c_) v.push_back(-a);
        return UPoly(std::move(v), like_);
    }
    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> v(std::max(a.c_.size(), b.c_.size()), a.like_);
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
        return UPoly(std::move(v), a.like_);
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly(a.like_);
        std::vector<K> v(a.c_.size() + b.c_.size() - 1, a.like_);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(v), a.like_);
    }
    friend UPoly operator*(const K& s, const UPoly& a) {
        std::vector<K> v;
        for (const K& x : a.c_) v.push_back(s * x);
        return UPoly(std::move(v), a.like_);
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return (a - b).is_zero(); }

    /// Euclidean division; the leading coefficient of the divisor must be invertible.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<K> r = c_;
        int dd = d.degree();
        if (degree() < dd) return {UPoly(like_), *this};
        std::vector<K> q(degree() - dd + 1, like_);
        K inv = inverse(d.lead());
        for (int i = degree(); i >= dd; --i) {
            K f = r[i] * inv;
            q[i - dd] = f;
            if (coeff_is_zero(f)) continue;
            for (int j = 0; j <= dd; ++j) r[i - dd + j] = r[i - dd + j] - f * d.c_[j];
        }
        r.resize(dd, like_);
        return {UPoly(std::move(q), like_), UPoly(std::move(r), like_)};
    }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return a.divmod(b).second; }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return a.divmod(b).first; }

    UPoly monic() const { return is_zero() ? *this : inverse(lead()) * (*this); }

    /// Composition this(q(x)).
    UPoly compose(const UPoly& q) const {
        UPoly acc(like_);
        for (int i = degree(); i >= 0; --i) acc = acc * q + constant(c_[i]);
        return acc;
    }

private:
    template <class X>
    static X lift(const K& k, const X& like) {
        if constexpr (std::is_same_v<K, X>) return k;
        else return lift_coeff(k, like);
    }
    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
    K like_;
};

/// Monic greatest common divisor over a field K (Euclid).
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        UPoly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended Euclid: returns g = gcd (monic) and s with s*a == g (mod b).
template <class K>
UPoly<K> ext_gcd(const UPoly<K>& a, const UPoly<K>& b, UPoly<K>& s_out) {
    UPoly<K> r0 = a, r1 = b;
    UPoly<K> s0 = UPoly<K>::constant(embed(Rat(1), a.like())), s1(a.like());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UPoly<K> s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    K inv = inverse(r0.lead());
    s_out = inv * s0;
    return inv * r0;
}

using Poly = UPoly<Rat>;

inline BigFloat lift_coeff(const Rat& r, const BigFloat& like) { return BigFloat(r, like.precision()); }

/// Parses a dense coefficient list of "p/q" strings (ascending exponent).
Poly poly_from_strings(const std::vector<std::string>& coeffs);
std::vector<std::string> poly_to_strings(const Poly& p);
/// Human-readable rendering in the given variable, e.g. "1 - 8*t".
std::string poly_to_text(const Poly& p, const std::string& var = "t");

/// Integer primitive part with positive leading coefficient: rational content removed.
Poly primitive_part(const Poly& p);
/// Square-free part p / gcd(p, p').
Poly squarefree_part(const Poly& p);
/// p(x + s).
Poly taylor_shift(const Poly& p, const Rat& s);
/// p(s * x).
Poly scale_arg(const Poly& p, const Rat& s);
/// x^deg p(1/x).
Poly reverse(const Poly& p);
/// Number of sign changes in the coefficient sequence (zeros skipped).
int sign_variations(const Poly& p);
/// Sign of p(x) at a rational point.
int sign_at(const Poly& p, const Rat& x);

}  // namespace planarlim
