#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "planarlim/bigfloat.hpp"
#include "planarlim/numberfield.hpp"
#include "planarlim/rat.hpp"
#include "planarlim/series.hpp"

namespace planarlim {

/// log of a nonzero constant in the coefficient ring, when the ring can hold it.
inline std::optional<Rat> log_constant(const Rat& c) {
    if (c == Rat(1)) return Rat(0);
    return std::nullopt;
}
inline std::optional<BigFloat> log_constant(const BigFloat& c) {
    if (c.sign() <= 0) return std::nullopt;
    return log(c);
}
inline std::optional<NumberFieldElem> log_constant(const NumberFieldElem& c) {
    if ((c - embed(Rat(1), c)).is_zero()) return embed(Rat(0), c);
    return std::nullopt;
}

/// Coefficients that are zero up to rounding, flushed to exact zeros so that a square root
/// sees the true valuation. Exact coefficient rings are left alone.
template <class K>
Series<K> flush_rounding(const Series<K>& s) {
    return s;
}
inline Series<BigFloat> flush_rounding(const Series<BigFloat>& s) {
    BigFloat eps = pow(BigFloat(2L, s.like().precision()), -s.like().precision() / 2);
    std::vector<BigFloat> c;
    for (int k = s.low(); k <= s.cap(); ++k) {
        BigFloat x = s.coeff_u(k);
        c.push_back(abs(x) < eps ? embed(Rat(0), x) : x);
    }
    return Series<BigFloat>(s.low(), std::move(c), s.cap(), s.like());
}

/// Immutable expression tree over the variables t and y with rational constants and the
/// operations +, -, *, /, integer powers, sqrt and log.
///
/// sqrt and log take their principal real branch; for series evaluation this is the branch
/// continuous from the expansion point (a square root of a series picks the positive leading
/// coefficient).
class Expr {
public:
    enum class Op { Const, T, Y, Add, Sub, Mul, Div, Neg, Pow, Sqrt, Log };

    /// The constant 0.
    Expr() = default;
    Expr(const Rat& c);  // NOLINT: implicit so that Rat constants mix freely
    Expr(long c) : Expr(Rat(c)) {}
    Expr(int c) : Expr(Rat(c)) {}

    static Expr t();
    static Expr y();

    Op op() const;
    const Rat& value() const;
    const Expr& lhs() const;
    const Expr& rhs() const;
    int exponent() const;
    bool uses_y() const;

    friend Expr operator+(const Expr& a, const Expr& b) { return make(Op::Add, a, b); }
    friend Expr operator-(const Expr& a, const Expr& b) { return make(Op::Sub, a, b); }
    friend Expr operator*(const Expr& a, const Expr& b) { return make(Op::Mul, a, b); }
    friend Expr operator/(const Expr& a, const Expr& b) { return make(Op::Div, a, b); }
    Expr operator-() const { return make(Op::Neg, *this, Expr()); }
    friend Expr pow(const Expr& a, int k);
    friend Expr sqrt(const Expr& a) { return make(Op::Sqrt, a, Expr()); }
    friend Expr log(const Expr& a) { return make(Op::Log, a, Expr()); }

    /// Infix text with explicit parentheses, e.g. "(1 + 12*t - sqrt(1 - 12*t))/(18*t)".
    std::string str() const;

    /// Exact value at rational arguments, or nullopt when a sqrt is irrational or a log is not
    /// log(1). Division by zero throws.
    std::optional<Rat> eval_exact(const Rat& t, const std::optional<Rat>& y = std::nullopt) const;
    /// Numeric value; sqrt of a negative or log of a nonpositive number throws.
    BigFloat eval(const BigFloat& t, const std::optional<BigFloat>& y = std::nullopt) const;

    /// Evaluates with series arguments (in a common expansion variable). log needs a
    /// constant term whose logarithm exists in K, see log_constant().
    template <class K>
    Series<K> series(const Series<K>& t, const std::optional<Series<K>>& y = std::nullopt) const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Expr make(Op op, const Expr& a, const Expr& b, int k = 0);
    std::shared_ptr<const Node> node_;
};

struct Expr::Node {
    Op op;
    Rat value;
    Expr a, b;
    int k = 0;
};

inline Expr::Op Expr::op() const { return node_ ? node_->op : Op::Const; }
inline const Rat& Expr::value() const {
    static const Rat zero(0);
    return node_ ? node_->value : zero;
}
inline const Expr& Expr::lhs() const { return node_->a; }
inline const Expr& Expr::rhs() const { return node_->b; }
inline int Expr::exponent() const { return node_->k; }

template <class K>
Series<K> Expr::series(const Series<K>& t, const std::optional<Series<K>>& y) const {
    const K& like = t.like();
    switch (op()) {
        case Op::Const:
            return Series<K>::constant(embed(value(), like), t.cap());
        case Op::T:
            return t;
        case Op::Y:
            if (!y) throw std::invalid_argument("expression uses y but no series was supplied");
            return *y;
        case Op::Add:
            return lhs().series(t, y) + rhs().series(t, y);
        case Op::Sub:
            return lhs().series(t, y) - rhs().series(t, y);
        case Op::Mul:
            return lhs().series(t, y) * rhs().series(t, y);
        case Op::Div:
            return lhs().series(t, y) / rhs().series(t, y);
        case Op::Neg:
            return -lhs().series(t, y);
        case Op::Pow:
            return lhs().series(t, y).pow(exponent());
        case Op::Sqrt:
            return sqrt(flush_rounding(lhs().series(t, y)));
        case Op::Log: {
            Series<K> s = lhs().series(t, y);
            int v = s.valuation();
            if (v != 0) throw std::domain_error("log of a series without a nonzero constant term");
            K c0 = s.coeff_u(0);
            std::optional<K> lc = log_constant(c0);
            if (!lc) throw std::domain_error("log of a constant outside the coefficient ring");
            Series<K> unit = inverse(c0) * s;
            return log(unit) + Series<K>::constant(*lc, unit.cap());
        }
    }
    throw std::logic_error("unknown expression node");
}

}  // namespace planarlim
