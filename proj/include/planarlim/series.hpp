#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "planarlim/coeff.hpp"
#include "planarlim/numberfield.hpp"

namespace planarlim {

/// Cheap zero test used to skip work in inner loops. For number-field elements it only
/// recognizes the zero residue, so it never triggers a field split.
inline bool trivially_zero(const Rat& x) { return x.is_zero(); }
inline bool trivially_zero(const BigFloat& x) { return x.is_zero(); }
inline bool trivially_zero(const NumberFieldElem& x) { return x.residue().is_zero(); }

/// Square root of a coefficient when it exists in the same ring.
inline bool coeff_sqrt(const Rat& x, Rat& out) { return exact_sqrt(x, out); }
inline bool coeff_sqrt(const BigFloat& x, BigFloat& out) {
    if (x.sign() < 0) return false;
    out = sqrt(x);
    return true;
}
inline bool coeff_sqrt(const NumberFieldElem& x, NumberFieldElem& out) {
    Rat r, s;
    if (!x.is_rational(r) || !exact_sqrt(r, s)) return false;
    out = embed(s, x);
    return true;
}

/// Truncated Laurent series in u = t^(1/2) with coefficients in K.
///
/// The series is known exactly through u^cap (so through t^(cap/2)); every coefficient from
/// u^low to u^cap is stored, zeros included. Public accessors are offered both in u-exponents
/// and in t-exponents. Precision is tracked through every operation, so a result never
/// claims more terms than its inputs determine.
template <class K>
class Series {
public:
    Series() : like_(embed(Rat(0), K{})) {}
    /// The zero series known through u^cap.
    Series(int cap, const K& like) : low_(0), cap_(cap), like_(embed(Rat(0), like)) {
        c_.assign(std::max(cap + 1, 0), like_);
    }
    /// Coefficients of u^low, u^(low+1), ... known through u^cap (missing entries are zero).
    Series(int low, std::vector<K> coeffs, int cap, const K& like)
        : low_(low), cap_(cap), c_(std::move(coeffs)), like_(embed(Rat(0), like)) {
        if (cap_ < low_ - 1) throw std::invalid_argument("series cap below its lowest exponent");
        c_.resize(cap_ - low_ + 1, like_);
    }

    static Series constant(const K& c, int cap) {
        Series s(cap, c);
        if (cap >= 0) s.c_[0] = c;
        return s;
    }
    /// c * u^k known through u^cap.
    static Series monomial(const K& c, int k, int cap) {
        int low = std::min(0, k);
        Series s(low, {}, std::max(cap, low - 1), c);
        if (k <= s.cap_) s.c_[k - low] = c;
        return s;
    }
    /// The series t = u^2.
    static Series t(const K& like, int cap) { return monomial(embed(Rat(1), like), 2, cap); }

    int low() const { return low_; }
    int cap() const { return cap_; }
    const K& like() const { return like_; }
    /// Coefficient of u^k; zero outside the stored range below the cap.
    K coeff_u(int k) const {
        if (k > cap_) throw std::out_of_range("coefficient beyond the series precision");
        if (k < low_) return like_;
        return c_[k - low_];
    }
    /// Coefficient of t^e for a half-integer e.
    K coeff_t(const Rat& e) const {
        Rat twice = e * Rat(2);
        if (!twice.is_integer()) throw std::invalid_argument("t-exponent must be a half-integer");
        return coeff_u(static_cast<int>(twice.num().get_si()));
    }
    /// Index of the first coefficient that is not trivially zero, or cap+1 for the zero series.
    int valuation() const {
        for (int k = low_; k <= cap_; ++k)
            if (!trivially_zero(c_[k - low_])) return k;
        return cap_ + 1;
    }
    bool integer_exponents_only() const {
        for (int k = low_; k <= cap_; ++k)
            if ((k % 2) != 0 && !trivially_zero(c_[k - low_])) return false;
        return true;
    }
    /// Nonzero terms keyed by u-exponent.
    std::map<int, K> terms() const {
        std::map<int, K> out;
        for (int k = low_; k <= cap_; ++k)
            if (!planarlim::is_zero(c_[k - low_])) out.emplace(k, c_[k - low_]);
        return out;
    }

    /// Drops everything above u^new_cap.
    Series truncate(int new_cap) const {
        if (new_cap > cap_) throw std::invalid_argument("cannot extend series precision");
        std::vector<K> v(c_.begin(), c_.begin() + std::max(0, new_cap - low_ + 1));
        return Series(std::min(low_, new_cap + 1), std::move(v), new_cap, like_);
    }

    Series operator-() const {
        Series out = *this;
        for (K& x : out.c_) x = -x;
        return out;
    }
    friend Series operator+(const Series& a, const Series& b) {
        int cap = std::min(a.cap_, b.cap_);
        int low = std::min(a.low_, b.low_);
        Series out(low, {}, std::max(cap, low - 1), a.like_);
        for (int k = low; k <= cap; ++k) {
            K v = a.get(k) + b.get(k);
            out.c_[k - low] = v;
        }
        return out;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    friend Series operator*(const K& s, const Series& a) {
        Series out = a;
        for (K& x : out.c_) x = s * x;
        return out;
    }
    friend Series operator*(const Series& a, const Series& b) {
        int va = a.valuation(), vb = b.valuation();
        int cap = std::min(a.cap_ + vb, b.cap_ + va);
        int low = std::min(va + vb, cap + 1);
        Series out(low, {}, cap, a.like_);
        for (int i = va; i <= a.cap_; ++i) {
            const K& x = a.c_[i - a.low_];
            if (trivially_zero(x)) continue;
            for (int j = vb; j <= b.cap_ && i + j <= cap; ++j) {
                const K& y = b.c_[j - b.low_];
                if (trivially_zero(y)) continue;
                out.c_[i + j - low] = out.c_[i + j - low] + x * y;
            }
        }
        return out;
    }

    /// Multiplicative inverse; the leading coefficient must be invertible.
    Series inverse() const {
        int v = valuation();
        if (v > cap_) throw std::domain_error("division by a series with no known nonzero term");
        int rel = cap_ - v;
        K inv0 = planarlim::inverse(c_[v - low_]);
        std::vector<K> b(rel + 1, like_);
        b[0] = inv0;
        for (int n = 1; n <= rel; ++n) {
            K acc = like_;
            for (int k = 1; k <= n; ++k) {
                const K& s = c_[v + k - low_];
                if (!trivially_zero(s)) acc = acc + s * b[n - k];
            }
            b[n] = -(inv0 * acc);
        }
        return Series(-v, std::move(b), -v + rel, like_);
    }
    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

    Series pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        if (e == 0) return constant(embed(Rat(1), like_), cap_ - valuation());
        Series acc;
        Series base = *this;
        bool first = true;
        while (e > 0) {
            if (e & 1) {
                acc = first ? base : acc * base;
                first = false;
            }
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return acc;
    }

    /// d/du.
    Series d_du() const {
        std::vector<K> v;
        for (int k = low_; k <= cap_; ++k) v.push_back(c_[k - low_] * embed(Rat(k), like_));
        // coefficient of u^(k-1) is k * c_k
        return Series(low_ - 1, std::move(v), cap_ - 1, like_);
    }
    /// Antiderivative in u with zero constant; a u^-1 term is an error.
    Series integrate_u() const {
        int low = low_ + 1;
        std::vector<K> v;
        for (int k = low_; k <= cap_; ++k) {
            const K& x = c_[k - low_];
            if (k == -1) {
                if (!planarlim::is_zero(x)) throw std::domain_error("antiderivative of a u^-1 term");
                v.push_back(like_);
                continue;
            }
            v.push_back(x * embed(Rat(1, k + 1), like_));
        }
        return Series(low, std::move(v), cap_ + 1, like_);
    }
    /// d/dt: t^(k/2) -> (k/2) t^(k/2 - 1).
    Series d_dt() const {
        std::vector<K> v;
        for (int k = low_; k <= cap_; ++k) v.push_back(c_[k - low_] * embed(Rat(k, 2), like_));
        return Series(low_ - 2, std::move(v), cap_ - 2, like_);
    }
    /// Antiderivative in t with zero constant: t^(k/2) -> t^(k/2 + 1) / (k/2 + 1).
    Series integrate_t() const {
        std::vector<K> v;
        for (int k = low_; k <= cap_; ++k) {
            const K& x = c_[k - low_];
            if (k == -2) {
                if (!planarlim::is_zero(x)) throw std::domain_error("antiderivative of a 1/t term");
                v.push_back(like_);
                continue;
            }
            v.push_back(x * embed(Rat(2, k + 2), like_));
        }
        return Series(low_ + 2, std::move(v), cap_ + 2, like_);
    }
    /// Multiplies by u^k (exact, shifts the precision with it).
    Series shift_u(int k) const { return Series(low_ + k, c_, cap_ + k, like_); }

    /// Composition f(g) where this series f has no negative exponents and g has positive
    /// valuation; exponents are in u for both.
    Series compose(const Series& g) const {
        int vg = g.valuation();
        if (vg < 1) throw std::domain_error("composition needs an inner series without constant term");
        if (low_ < 0 && valuation() < 0) throw std::domain_error("composition of a Laurent series");
        // Truncating f costs O(g^(cap_f + 1)); the error in g enters through f'(g).
        int first_nonconstant = cap_ + 1;
        for (int k = std::max(1, low_); k <= cap_; ++k)
            if (!trivially_zero(c_[k - low_])) { first_nonconstant = k; break; }
        int cap = (cap_ + 1) * vg - 1;
        if (first_nonconstant <= cap_) cap = std::min(cap, g.cap_ + (first_nonconstant - 1) * vg);
        Series acc = constant(like_, cap);
        Series power = constant(embed(Rat(1), like_), cap);
        for (int k = 0; k <= cap_ && k * vg <= cap; ++k) {
            if (k > 0) power = (power * g).truncate_or_keep(cap);
            const K& ck = get(k);
            if (!trivially_zero(ck)) acc = acc + ck * power;
        }
        return acc.truncate_or_keep(cap);
    }

    /// Sum of the coefficients known through the cap, i.e. the truncated series at t = 1.
    K sum() const {
        K acc = like_;
        for (const K& x : c_) acc = acc + x;
        return acc;
    }

    friend bool operator==(const Series& a, const Series& b) {
        if (a.cap_ != b.cap_) return false;
        for (int k = std::min(a.low_, b.low_); k <= a.cap_; ++k)
            if (!planarlim::is_zero(a.get(k) - b.get(k))) return false;
        return true;
    }

    Series truncate_or_keep(int c) const { return c < cap_ ? truncate(c) : *this; }

private:
    K get(int k) const { return (k < low_ || k > cap_) ? like_ : c_[k - low_]; }

    int low_ = 0;
    int cap_ = -1;
    std::vector<K> c_;
    K like_;
};

using USeries = Series<Rat>;

/// log(s) for a series with constant term 1.
template <class K>
Series<K> log(const Series<K>& s) {
    if (s.valuation() != 0 || s.low() < 0) throw std::domain_error("log requires constant term 1");
    K c0 = s.coeff_u(0);
    if (!planarlim::is_zero(c0 - embed(Rat(1), c0))) throw std::domain_error("log requires constant term 1");
    return (s.d_du() / s).integrate_u();
}

/// exp(s) for a series with zero constant term.
template <class K>
Series<K> exp(const Series<K>& s) {
    int v = s.valuation();
    if (v < 1) throw std::domain_error("exp requires zero constant term");
    int cap = s.cap();
    std::vector<K> e(cap + 1, s.like());
    e[0] = embed(Rat(1), s.like());
    for (int n = 1; n <= cap; ++n) {
        K acc = s.like();
        for (int k = v; k <= n; ++k) {
            K sk = s.coeff_u(k);
            if (!trivially_zero(sk)) acc = acc + embed(Rat(k), sk) * sk * e[n - k];
        }
        e[n] = acc * embed(Rat(1, n), s.like());
    }
    return Series<K>(0, std::move(e), cap, s.like());
}

/// sqrt(s) for a series of even valuation whose leading coefficient has a square root in K.
/// The root with the positive (principal) leading coefficient is returned.
template <class K>
Series<K> sqrt(const Series<K>& s) {
    int v = s.valuation();
    if (v > s.cap()) throw std::domain_error("sqrt of a series with no known nonzero term");
    if (v % 2 != 0) throw std::domain_error("sqrt of a series with odd valuation");
    K r0;
    if (!coeff_sqrt(s.coeff_u(v), r0)) throw std::domain_error("leading coefficient has no square root in the ring");
    int rel = s.cap() - v;
    std::vector<K> r(rel + 1, s.like());
    r[0] = r0;
    K inv2r0 = inverse(embed(Rat(2), r0) * r0);
    for (int n = 1; n <= rel; ++n) {
        K acc = s.coeff_u(v + n);
        for (int k = 1; k < n; ++k) acc = acc - r[k] * r[n - k];
        r[n] = acc * inv2r0;
    }
    return Series<K>(v / 2, std::move(r), v / 2 + rel, s.like());
}

/// Converts coefficients between rings (for example Rat to BigFloat) with a mapping function.
template <class K2, class K1, class Fn>
Series<K2> map_coeffs(const Series<K1>& s, const K2& like, Fn&& fn) {
    std::vector<K2> v;
    for (int k = s.low(); k <= s.cap(); ++k) v.push_back(fn(s.coeff_u(k)));
    return Series<K2>(s.low(), std::move(v), s.cap(), like);
}

/// The constant series c with the precision of `like`, so that generic code (for example
/// MPoly::evaluate) can treat series as a coefficient ring.
template <class K>
Series<K> embed(const Rat& c, const Series<K>& like) {
    return Series<K>::constant(embed(c, like.like()), like.cap());
}

/// Sum of a rational series at t = 1 through its cap (a partial sum, no convergence claim).
inline Rat set_t_one(const USeries& s) { return s.sum(); }

}  // namespace planarlim
