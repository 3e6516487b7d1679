#include "planarlim/numberfield.hpp"

#include <sstream>
#include <stdexcept>

namespace planarlim {

NumberField::NumberField(const Poly& modulus, const Rat& lo, const Rat& hi)
    : modulus_(squarefree_part(modulus).monic()), lo_(lo), hi_(hi), refined_{lo, hi, BigFloat(64)} {
    if (modulus_.degree() < 1) throw std::invalid_argument("number field modulus must have degree >= 1");
    if (lo_ == hi_) {
        if (modulus_.eval(lo_).sign() != 0) throw std::invalid_argument("exact root is not a root of the modulus");
    } else if (sign_at(modulus_, lo_) * sign_at(modulus_, hi_) >= 0) {
        throw std::invalid_argument("interval does not isolate a simple root of the modulus");
    }
}

BigFloat NumberField::theta(long bits) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (refined_bits_ < bits) {
        refined_ = refine_root(modulus_, RootInterval{lo_, hi_, BigFloat(bits)}, bits);
        refined_bits_ = bits;
    }
    if (refined_.exact()) return BigFloat(refined_.lo, bits);
    return BigFloat((refined_.lo + refined_.hi) / Rat(2), bits);
}

bool NumberField::factor_has_theta(const Poly& f) const {
    if (lo_ == hi_) return f.eval(lo_).is_zero();
    return sign_at(f, lo_) * sign_at(f, hi_) < 0;
}

namespace {

[[noreturn]] void split(const NumberField& field, const Poly& g) {
    Poly other = field.modulus() / g;
    if (field.factor_has_theta(g)) throw FieldSplit(g.monic());
    throw FieldSplit(other.monic());
}

}  // namespace

NumberFieldElem::NumberFieldElem(FieldPtr field, const Poly& residue) : field_(std::move(field)) {
    if (!field_) {
        if (residue.degree() > 0) throw std::invalid_argument("non-constant element without a field");
        residue_ = residue;
        return;
    }
    residue_ = residue.degree() >= field_->degree() ? residue % field_->modulus() : residue;
}

NumberFieldElem::NumberFieldElem(FieldPtr field, const Rat& value)
    : NumberFieldElem(std::move(field), Poly::constant(value)) {}

NumberFieldElem NumberFieldElem::generator(FieldPtr field) {
    return NumberFieldElem(std::move(field), Poly::x(Rat(0)));
}

const FieldPtr& NumberFieldElem::pick_field(const NumberFieldElem& o) const {
    if (field_ && o.field_ && field_ != o.field_ && field_->modulus() != o.field_->modulus())
        throw std::invalid_argument("number field elements from different fields");
    return field_ ? field_ : o.field_;
}

bool NumberFieldElem::is_zero() const {
    if (residue_.is_zero()) return true;
    if (residue_.degree() == 0) return false;
    Poly g = gcd(field_->modulus(), residue_);
    if (g.degree() == 0) return false;
    split(*field_, g);
}

BigFloat NumberFieldElem::to_bigfloat(long bits) const {
    BigFloat x = field_ ? field_->theta(bits + 32) : BigFloat(bits);
    BigFloat acc(bits + 32);
    for (int i = residue_.degree(); i >= 0; --i) acc = acc * x + BigFloat(residue_.coeffs()[i], bits + 32);
    BigFloat out(bits);
    mpfr_set(out.get(), acc.get(), MPFR_RNDN);
    return out;
}

std::string NumberFieldElem::str(const std::string& gen) const { return poly_to_text(residue_, gen); }

bool NumberFieldElem::is_rational(Rat& out) const {
    if (residue_.degree() > 0) return false;
    out = residue_.coeff(0);
    return true;
}

NumberFieldElem NumberFieldElem::operator-() const {
    NumberFieldElem out = *this;
    out.residue_ = -residue_;
    return out;
}

NumberFieldElem operator+(const NumberFieldElem& a, const NumberFieldElem& b) {
    NumberFieldElem out;
    out.field_ = a.pick_field(b);
    out.residue_ = a.residue_ + b.residue_;
    return out;
}

NumberFieldElem operator-(const NumberFieldElem& a, const NumberFieldElem& b) {
    NumberFieldElem out;
    out.field_ = a.pick_field(b);
    out.residue_ = a.residue_ - b.residue_;
    return out;
}

NumberFieldElem operator*(const NumberFieldElem& a, const NumberFieldElem& b) {
    const FieldPtr& f = a.pick_field(b);
    Poly prod = a.residue_ * b.residue_;
    NumberFieldElem out;
    out.field_ = f;
    out.residue_ = (f && prod.degree() >= f->degree()) ? prod % f->modulus() : prod;
    return out;
}

NumberFieldElem NumberFieldElem::inverse() const {
    if (residue_.is_zero()) throw std::domain_error("inverse of zero in number field");
    if (residue_.degree() == 0) return NumberFieldElem(field_, Rat(1) / residue_.coeff(0));
    Poly s;
    Poly g = ext_gcd(residue_, field_->modulus(), s);
    if (g.degree() > 0) {
        if (field_->factor_has_theta(g)) throw std::domain_error("inverse of zero in number field");
        split(*field_, g);
    }
    return NumberFieldElem(field_, s);
}

NumberFieldElem operator/(const NumberFieldElem& a, const NumberFieldElem& b) { return a * b.inverse(); }

bool is_zero(const NumberFieldElem& x) { return x.is_zero(); }

NumberFieldElem embed(const Rat& r, const NumberFieldElem& like) {
    // Without a field the element is a plain rational constant until combined with one.
    return NumberFieldElem(like.field(), r);
}

NumberFieldElem inverse(const NumberFieldElem& x) { return x.inverse(); }
NumberFieldElem lift_coeff(const Rat& r, const NumberFieldElem& like) { return embed(r, like); }
BigFloat lift_coeff(const NumberFieldElem& x, const BigFloat& like) { return x.to_bigfloat(like.precision()); }

FieldPtr make_field(const Poly& p, const RootInterval& root) {
    return std::make_shared<NumberField>(p, root.lo, root.hi);
}

}  // namespace planarlim
