#include "planarlim/expr.hpp"

namespace planarlim {

Expr::Expr(const Rat& c) : node_(std::make_shared<const Node>(Node{Op::Const, c, {}, {}, 0})) {}

Expr Expr::t() {
    static const Expr e(std::make_shared<const Node>(Node{Op::T, Rat(0), {}, {}, 0}));
    return e;
}

Expr Expr::y() {
    static const Expr e(std::make_shared<const Node>(Node{Op::Y, Rat(0), {}, {}, 0}));
    return e;
}

Expr Expr::make(Op op, const Expr& a, const Expr& b, int k) {
    return Expr(std::make_shared<const Node>(Node{op, Rat(0), a, b, k}));
}

Expr pow(const Expr& a, int k) { return Expr::make(Expr::Op::Pow, a, Expr(), k); }

bool Expr::uses_y() const {
    switch (op()) {
        case Op::Const:
        case Op::T:
            return false;
        case Op::Y:
            return true;
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Div:
            return lhs().uses_y() || rhs().uses_y();
        default:
            return lhs().uses_y();
    }
}

namespace {

int precedence(Expr::Op op) {
    switch (op) {
        case Expr::Op::Add:
        case Expr::Op::Sub:
            return 1;
        case Expr::Op::Mul:
        case Expr::Op::Div:
            return 2;
        case Expr::Op::Neg:
            return 3;
        case Expr::Op::Pow:
            return 4;
        default:
            return 5;
    }
}

std::string wrap(const Expr& e, int min_prec) {
    std::string s = e.str();
    bool negative_const = e.op() == Expr::Op::Const && e.value().sign() < 0;
    bool fraction_const = e.op() == Expr::Op::Const && !e.value().is_integer();
    if (precedence(e.op()) < min_prec || ((negative_const || fraction_const) && min_prec > 1)) return "(" + s + ")";
    return s;
}

}  // namespace

std::string Expr::str() const {
    switch (op()) {
        case Op::Const:
            return value().str();
        case Op::T:
            return "t";
        case Op::Y:
            return "y";
        case Op::Add:
            return lhs().str() + " + " + wrap(rhs(), 1);
        case Op::Sub:
            return lhs().str() + " - " + wrap(rhs(), 2);
        case Op::Mul:
            return wrap(lhs(), 2) + "*" + wrap(rhs(), 3);
        case Op::Div:
            return wrap(lhs(), 2) + "/" + wrap(rhs(), 3);
        case Op::Neg:
            return "-" + wrap(lhs(), 3);
        case Op::Pow:
            return wrap(lhs(), 5) + "^" + std::to_string(exponent());
        case Op::Sqrt:
            return "sqrt(" + lhs().str() + ")";
        case Op::Log:
            return "log(" + lhs().str() + ")";
    }
    return "?";
}

std::optional<Rat> Expr::eval_exact(const Rat& t, const std::optional<Rat>& y) const {
    auto both = [&](auto fn) -> std::optional<Rat> {
        auto a = lhs().eval_exact(t, y);
        if (!a) return std::nullopt;
        auto b = rhs().eval_exact(t, y);
        if (!b) return std::nullopt;
        return fn(*a, *b);
    };
    switch (op()) {
        case Op::Const:
            return value();
        case Op::T:
            return t;
        case Op::Y:
            if (!y) throw std::invalid_argument("expression uses y but no value was supplied");
            return *y;
        case Op::Add:
            return both([](const Rat& a, const Rat& b) { return a + b; });
        case Op::Sub:
            return both([](const Rat& a, const Rat& b) { return a - b; });
        case Op::Mul:
            return both([](const Rat& a, const Rat& b) { return a * b; });
        case Op::Div:
            return both([](const Rat& a, const Rat& b) {
                if (b.is_zero()) throw std::domain_error("division by zero");
                return a / b;
            });
        case Op::Neg: {
            auto a = lhs().eval_exact(t, y);
            if (!a) return std::nullopt;
            return -*a;
        }
        case Op::Pow: {
            auto a = lhs().eval_exact(t, y);
            if (!a) return std::nullopt;
            return planarlim::pow(*a, exponent());
        }
        case Op::Sqrt: {
            auto a = lhs().eval_exact(t, y);
            if (!a) return std::nullopt;
            if (a->sign() < 0) throw std::domain_error("square root of a negative number");
            Rat r;
            if (!exact_sqrt(*a, r)) return std::nullopt;
            return r;
        }
        case Op::Log: {
            auto a = lhs().eval_exact(t, y);
            if (!a) return std::nullopt;
            if (a->sign() <= 0) throw std::domain_error("log of a nonpositive number");
            if (*a == Rat(1)) return Rat(0);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

BigFloat Expr::eval(const BigFloat& t, const std::optional<BigFloat>& y) const {
    switch (op()) {
        case Op::Const:
            return BigFloat(value(), t.precision());
        case Op::T:
            return t;
        case Op::Y:
            if (!y) throw std::invalid_argument("expression uses y but no value was supplied");
            return *y;
        case Op::Add:
            return lhs().eval(t, y) + rhs().eval(t, y);
        case Op::Sub:
            return lhs().eval(t, y) - rhs().eval(t, y);
        case Op::Mul:
            return lhs().eval(t, y) * rhs().eval(t, y);
        case Op::Div: {
            BigFloat d = rhs().eval(t, y);
            if (d.is_zero()) throw std::domain_error("division by zero");
            return lhs().eval(t, y) / d;
        }
        case Op::Neg:
            return -lhs().eval(t, y);
        case Op::Pow:
            return planarlim::pow(lhs().eval(t, y), static_cast<long>(exponent()));
        case Op::Sqrt: {
            BigFloat a = lhs().eval(t, y);
            if (a.sign() < 0) throw std::domain_error("square root of a negative number");
            return sqrt(a);
        }
        case Op::Log: {
            BigFloat a = lhs().eval(t, y);
            if (a.sign() <= 0) throw std::domain_error("log of a nonpositive number");
            return log(a);
        }
    }
    throw std::logic_error("unknown expression node");
}

}  // namespace planarlim
