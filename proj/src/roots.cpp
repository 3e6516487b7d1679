#include "planarlim/roots.hpp"

#include <stdexcept>

namespace planarlim {

namespace {

// Sign variations of (1+x)^n p((a + b x)/(1 + x)), an upper bound for the number of roots
// of p in (a, b) with matching parity.
int descartes_count(const Poly& p, const Rat& a, const Rat& b) {
    Poly q = scale_arg(taylor_shift(p, a), b - a);  // p(a + (b-a) y), roots in (0,1)
    Poly r = taylor_shift(reverse(q), Rat(1));      // (1+x)^n q(1/(1+x))
    return sign_variations(r);
}

void isolate(const Poly& p, const Rat& a, const Rat& b, std::vector<std::pair<Rat, Rat>>& out,
             int depth) {
    if (depth > 4000) throw std::runtime_error("root isolation did not terminate");
    int v = descartes_count(p, a, b);
    if (v == 0) return;
    if (v == 1) {
        // Move endpoints that are themselves roots inward, certifying by Descartes that the
        // discarded sliver holds no root.
        Rat lo = a, hi = b;
        if (sign_at(p, lo) == 0) {
            Rat eps = (hi - lo) / Rat(2);
            while (descartes_count(p, lo, lo + eps) != 0 || sign_at(p, lo + eps) == 0) eps /= Rat(2);
            lo = lo + eps;
        }
        if (sign_at(p, hi) == 0) {
            Rat eps = (hi - lo) / Rat(2);
            while (descartes_count(p, hi - eps, hi) != 0 || sign_at(p, hi - eps) == 0) eps /= Rat(2);
            hi = hi - eps;
        }
        out.emplace_back(lo, hi);
        return;
    }
    Rat m = (a + b) / Rat(2);
    isolate(p, a, m, out, depth + 1);
    if (sign_at(p, m) == 0) out.emplace_back(m, m);
    isolate(p, m, b, out, depth + 1);
}

}  // namespace

Rat root_bound(const Poly& p) {
    if (p.degree() <= 0) return Rat(1);
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat r = abs(p.coeffs()[i] / p.lead());
        if (r > m) m = r;
    }
    return m + Rat(1);
}

RootInterval refine_root(const Poly& p, RootInterval r, long bits) {
    if (r.exact()) {
        r.approx = BigFloat(r.lo, bits);
        return r;
    }
    int slo = sign_at(p, r.lo);
    Rat width_goal = pow(Rat(2), -bits - 4);
    while (r.hi - r.lo > width_goal) {
        Rat m = (r.lo + r.hi) / Rat(2);
        int sm = sign_at(p, m);
        if (sm == 0) {
            r.lo = r.hi = m;
            break;
        }
        if (sm == slo) r.lo = m;
        else r.hi = m;
    }
    r.approx = BigFloat((r.lo + r.hi) / Rat(2), bits);
    return r;
}

std::vector<RootInterval> isolate_real_roots(const Poly& p, const Rat& lo, const Rat& hi,
                                             long precision_bits) {
    if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
    std::vector<RootInterval> result;
    if (p.degree() == 0 || !(lo < hi)) return result;
    Poly q = squarefree_part(p);
    std::vector<std::pair<Rat, Rat>> raw;
    isolate(q, lo, hi, raw, 0);
    for (auto& [a, b] : raw) {
        RootInterval r{a, b, BigFloat(precision_bits)};
        result.push_back(refine_root(q, r, precision_bits));
    }
    return result;
}

}  // namespace planarlim
