#pragma once

#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <string>

#include "planarlim/bigfloat.hpp"
#include "planarlim/poly.hpp"
#include "planarlim/roots.hpp"

namespace planarlim {

/// The field Q(theta) for a real algebraic number theta, given by a monic square-free modulus
/// m(x) with m(theta) = 0 and an open rational interval isolating theta among the real roots
/// of m.
///
/// The modulus is not required to be irreducible up front. Whenever a computation meets an
/// element that is zero at theta but not divisible by m (a zero divisor of Q[x]/(m)), a
/// FieldSplit is thrown carrying the factor of m that vanishes at theta; with_field() then
/// restarts the computation in the smaller field. Every result produced is therefore exact
/// in Q(theta).
class NumberField {
public:
    NumberField(const Poly& modulus, const Rat& lo, const Rat& hi);

    const Poly& modulus() const { return modulus_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    int degree() const { return modulus_.degree(); }
    /// Decimal approximation of theta at the requested precision (cached per precision).
    BigFloat theta(long bits) const;
    /// True when f (a factor of the modulus) vanishes at theta.
    bool factor_has_theta(const Poly& f) const;

private:
    Poly modulus_;
    Rat lo_, hi_;
    mutable std::mutex mu_;
    mutable RootInterval refined_;
    mutable long refined_bits_ = 0;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Raised when a zero divisor exposes a proper factor of the modulus that contains theta.
struct FieldSplit : std::exception {
    Poly factor;
    explicit FieldSplit(Poly f) : factor(std::move(f)) {}
    const char* what() const noexcept override { return "number field modulus split"; }
};

/// Element of Q(theta), stored as a residue polynomial of degree < deg(modulus).
class NumberFieldElem {
public:
    NumberFieldElem() = default;
    NumberFieldElem(FieldPtr field, const Poly& residue);
    NumberFieldElem(FieldPtr field, const Rat& value);
    static NumberFieldElem generator(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const Poly& residue() const { return residue_; }
    /// Exact zero test at theta; may throw FieldSplit.
    bool is_zero() const;
    /// Value at theta.
    BigFloat to_bigfloat(long bits) const;
    /// Residue as text in the generator name, e.g. "1/11 + 856/11*t0".
    std::string str(const std::string& gen = "t0") const;
    /// Returns true and sets out when the element is a rational number.
    bool is_rational(Rat& out) const;

    NumberFieldElem operator-() const;
    friend NumberFieldElem operator+(const NumberFieldElem& a, const NumberFieldElem& b);
    friend NumberFieldElem operator-(const NumberFieldElem& a, const NumberFieldElem& b);
    friend NumberFieldElem operator*(const NumberFieldElem& a, const NumberFieldElem& b);
    friend NumberFieldElem operator/(const NumberFieldElem& a, const NumberFieldElem& b);
    /// Exact equality at theta; may throw FieldSplit.
    friend bool operator==(const NumberFieldElem& a, const NumberFieldElem& b) { return (a - b).is_zero(); }

    NumberFieldElem inverse() const;

private:
    const FieldPtr& pick_field(const NumberFieldElem& o) const;
    FieldPtr field_;
    Poly residue_;
};

bool is_zero(const NumberFieldElem& x);
NumberFieldElem embed(const Rat& r, const NumberFieldElem& like);
NumberFieldElem inverse(const NumberFieldElem& x);
NumberFieldElem lift_coeff(const Rat& r, const NumberFieldElem& like);
BigFloat lift_coeff(const NumberFieldElem& x, const BigFloat& like);

/// Builds the field of the real root of `p` isolated by `root`; the modulus starts as the
/// monic square-free part of p.
FieldPtr make_field(const Poly& p, const RootInterval& root);

/// Runs fn in the given field, transparently restarting in the split field whenever a
/// FieldSplit is raised. Returns fn's result; `field` is updated to the final field.
template <class Fn>
auto with_field(FieldPtr& field, Fn&& fn) -> decltype(fn(field)) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            return fn(field);
        } catch (const FieldSplit& s) {
            field = std::make_shared<NumberField>(s.factor, field->lo(), field->hi());
        }
    }
    throw std::runtime_error("number field splitting did not stabilize");
}

}  // namespace planarlim
