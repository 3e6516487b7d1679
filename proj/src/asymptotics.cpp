#include "planarlim/asymptotics.hpp"

#include <algorithm>
#include <stdexcept>

namespace planarlim {

namespace {

// ---------------------------------------------------------------------------------------
// Numeric branch tracking.

struct Tracker {
    BivarPoly P, Py, Pt;
    long bits;

    Tracker(const BivarPoly& p, long b) : P(p), Py(p.derivative("y")), Pt(p.derivative("t")), bits(b) {}

    BigFloat eval(const BivarPoly& q, const BigFloat& t, const BigFloat& y) const { return q.evaluate<BigFloat>({t, y}); }

    /// Newton polish of y at fixed t; false when it does not converge.
    bool newton(const BigFloat& t, BigFloat& y) const {
        BigFloat tol = pow(BigFloat(2L, bits), -(bits - 24));
        for (int it = 0; it < 100; ++it) {
            BigFloat d = eval(Py, t, y);
            if (d.is_zero()) return false;
            BigFloat step = eval(P, t, y) / d;
            if (!step.is_finite()) return false;
            y = y - step;
            if (abs(step) <= tol * (BigFloat(1L, bits) + abs(y))) return true;
        }
        return false;
    }
};

BigFloat stub_value(const USeries& stub, const BigFloat& t) {
    BigFloat acc(0L, t.precision());
    for (int k = stub.cap() - (stub.cap() % 2); k >= 0; k -= 2) acc = acc * t + BigFloat(stub.coeff_u(k), t.precision());
    return acc;
}

/// Follows the branch from near 0 to t_end.
BigFloat track_to(const Tracker& tr, const USeries& stub, const BigFloat& t_end) {
    long bits = tr.bits;
    BigFloat t = t_end * pow(BigFloat(2L, bits), -12);
    BigFloat y = stub_value(stub, t);
    if (!tr.newton(t, y)) throw std::runtime_error("path following could not start from the branch stub");
    BigFloat h = (t_end - t) / BigFloat(32L, bits);
    BigFloat floor_h = abs(t_end) * pow(BigFloat(2L, bits), -80);
    BigFloat one(1L, bits);
    while (!(t == t_end)) {
        BigFloat tn = t + h;
        if (abs(tn) >= abs(t_end)) tn = t_end;
        BigFloat dt = tn - t;
        BigFloat slope = -tr.eval(tr.Pt, t, y) / tr.eval(tr.Py, t, y);
        BigFloat yp = y + dt * slope;
        BigFloat yn = yp;
        bool ok = tr.newton(tn, yn) && abs(yn - yp) <= BigFloat(Rat(1, 100), bits) * (one + abs(y));
        if (ok) {
            t = tn;
            y = yn;
            h = h * BigFloat(Rat(3, 2), bits);
        } else {
            h = h / BigFloat(2L, bits);
            if (abs(h) < floor_h) throw std::runtime_error("path following stalled");
        }
    }
    return y;
}

struct Approach {
    bool singular = false;
    BigFloat ratio, y_near, delta_near;
};

/// Follows the branch towards tc and compares |P_y| at distances 1e-10 and 1e-12.
Approach approach(const Tracker& tr, const USeries& stub, const BigFloat& tc) {
    long bits = tr.bits;
    BigFloat one(1L, bits);
    Approach a;
    BigFloat y;
    try {
        y = track_to(tr, stub, tc * (one - BigFloat(Rat(1, 100), bits)));
    } catch (const std::runtime_error&) {
        a.singular = true;  // the branch degenerates before reaching tc
        return a;
    }
    BigFloat py10, py12;
    BigFloat root10 = sqrt(BigFloat(10L, bits));
    BigFloat delta(Rat(1, 100), bits);
    for (int k = 1; k <= 20; ++k) {
        delta = delta / root10;
        BigFloat t = tc * (one - delta);
        if (!tr.newton(t, y)) {
            a.singular = true;
            return a;
        }
        if (k == 16) py10 = abs(tr.eval(tr.Py, t, y));
        if (k == 20) py12 = abs(tr.eval(tr.Py, t, y));
    }
    a.ratio = py12 / py10;
    a.singular = a.ratio < BigFloat(Rat(1, 2), bits);
    a.y_near = y;
    a.delta_near = delta;
    return a;
}

Poly strip_zero_roots(Poly p) {
    while (!p.is_zero() && p.coeff(0).is_zero()) {
        std::vector<Rat> c(p.coeffs().begin() + 1, p.coeffs().end());
        p = Poly(c);
    }
    return p;
}

// ---------------------------------------------------------------------------------------
// Exact helpers.

using NSeries = Series<NumberFieldElem>;

NumberFieldElem at_theta(const FieldPtr& f, const Poly& p) { return NumberFieldElem(f, p); }

/// P(t0, y) as a polynomial in y over Q(t0).
UPoly<NumberFieldElem> specialize_t(const BivarPoly& P, const FieldPtr& f) {
    std::vector<NumberFieldElem> c;
    for (const Poly& q : y_coeffs(P)) c.push_back(at_theta(f, q));
    return UPoly<NumberFieldElem>(c, NumberFieldElem(f, Rat(0)));
}

/// r_k = sqrt(pi) / Gamma(-k/2) for odd k.
Rat r_odd(int k) {
    int m = (k - 1) / 2;
    Rat num(mpz_class(factorial(static_cast<unsigned long>(2 * m + 2))));
    Rat den = pow(Rat(-4), m + 1) * Rat(mpz_class(factorial(static_cast<unsigned long>(m + 1))));
    return num / den;
}

std::vector<Rat> bernoulli_numbers(int n) {
    std::vector<Rat> B(n + 1, Rat(0));
    B[0] = Rat(1);
    for (int m = 1; m <= n; ++m) {
        Rat acc(0);
        for (int k = 0; k < m; ++k) acc += binom_rat(m + 1, k) * B[k];
        B[m] = -acc / Rat(m + 1);
    }
    return B;
}

Rat bernoulli_poly(int m, const Rat& x, const std::vector<Rat>& B) {
    Rat acc(0);
    for (int k = 0; k <= m; ++k) acc += binom_rat(m, k) * B[k] * pow(x, m - k);
    return acc;
}

std::vector<Rat> mul_trunc(const std::vector<Rat>& a, const std::vector<Rat>& b, int M) {
    std::vector<Rat> c(M + 1, Rat(0));
    for (int i = 0; i <= M && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j <= M && j < static_cast<int>(b.size()); ++j) c[i + j] += a[i] * b[j];
    return c;
}

/// sum_j g_j x^j E_{k0+2j}(x) W(x) through x^M, where E_k is the gamma-ratio series of
/// [t^(n+h)] u^k.
template <class K>
std::vector<K> correction_series(const std::vector<K>& g, int k0, int h, const std::vector<Rat>& W, int M,
                                 const K& like) {
    std::vector<K> total(M + 1, embed(Rat(0), like));
    for (int j = 0; j <= M; ++j) {
        int k = k0 + 2 * j;
        std::vector<Rat> E = gamma_ratio_series(Rat(2 * h - k, 2), Rat(h + 1), M);
        std::vector<Rat> EW = mul_trunc(E, W, M);
        for (int i = 0; i + j <= M; ++i) total[i + j] = total[i + j] + g[j] * embed(EW[i], like);
    }
    return total;
}

Expr poly_expr(const Poly& p) {
    Expr acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * Expr::t() + Expr(p.coeff(i));
    return acc;
}

USeries poly_useries(const Poly& p, int cap) {
    std::vector<Rat> c(cap + 1, Rat(0));
    for (int i = 0; i <= p.degree() && 2 * i <= cap; ++i) c[2 * i] = p.coeff(i);
    return USeries(0, c, cap, Rat(0));
}

/// Square-free decomposition: p = lc * prod_i f_i^i (Yun), f_i monic.
std::vector<Poly> yun(const Poly& p) {
    std::vector<Poly> out;
    Poly a0 = gcd(p, p.derivative());
    Poly b = p / a0;
    Poly c = p.derivative() / a0;
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly a = gcd(b, d);
        out.push_back(a);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
    }
    return out;
}

struct QuadraticReduction {
    Poly delta;  // delta(0) = 1
    Expr target;
};

/// For P = a y^2 + b y + c with discriminant C q^2 Delta (Delta the odd-multiplicity part),
/// expresses the branch matching `stub` as (-b + eps sqrt(C) q Y) / (2a) with Y = sqrt(Delta).
QuadraticReduction reduce_quadratic(const BivarPoly& P, const USeries& stub) {
    std::vector<Poly> yc = y_coeffs(P);
    if (yc.size() != 3) throw std::invalid_argument("quadratic reduction needs degree 2 in y");
    const Poly &c = yc[0], &b = yc[1], &a = yc[2];
    Poly disc = b * b - Poly(std::vector<Rat>{Rat(4)}) * a * c;
    std::vector<Poly> parts = yun(disc);
    Poly delta(std::vector<Rat>{Rat(1)}), q(std::vector<Rat>{Rat(1)});
    for (size_t i = 0; i < parts.size(); ++i) {
        int mult = static_cast<int>(i) + 1;
        Poly f = parts[i];
        if (f.degree() <= 0) continue;
        if (f.coeff(0).is_zero()) {
            if (mult % 2) throw std::domain_error("the branch is not a power series in t");
        } else {
            f = Poly(std::vector<Rat>{Rat(1) / f.coeff(0)}) * f;
        }
        if (mult % 2) delta = delta * f;
        for (int e = 0; e < mult / 2; ++e) q = q * f;
    }
    auto [C, rem] = disc.divmod(delta * q * q);
    Rat root;
    if (!rem.is_zero() || C.degree() != 0 || !exact_sqrt(C.coeff(0), root))
        throw std::domain_error("discriminant is not a rational square times its odd part");
    int cap = stub.cap();
    USeries tser = USeries::t(Rat(0), cap + 8);
    USeries yser = sqrt(poly_useries(delta, cap + 8));
    for (int eps : {1, -1}) {
        Expr target = (-poly_expr(b) + Expr(Rat(eps) * root) * poly_expr(q) * Expr::y()) / (2 * poly_expr(a));
        USeries g;
        try {
            g = target.series(tser, std::optional<USeries>(yser));
        } catch (const std::domain_error&) {
            continue;
        }
        if (g.low() < 0 && g.valuation() < 0) continue;
        bool match = true;
        for (int k = 0; k <= std::min(cap, g.cap()); ++k)
            if (g.coeff_u(k) != stub.coeff_u(k)) match = false;
        if (match) return {delta, target};
    }
    throw std::runtime_error("no branch of the quadratic equation matches the series");
}

std::vector<Rat> w_one(int M) {
    std::vector<Rat> w(M + 1, Rat(0));
    w[0] = Rat(1);
    return w;
}

std::vector<Rat> w_edge(int M) {  // 1 / (1 + x)
    std::vector<Rat> w;
    for (int j = 0; j <= M; ++j) w.push_back(Rat(j % 2 ? -1 : 1));
    return w;
}

std::vector<Rat> w_face(int M) {  // 1 / ((1 + x)(1 + 2x))
    std::vector<Rat> w;
    for (int j = 0; j <= M; ++j) w.push_back(Rat(j % 2 ? -1 : 1) * (pow(Rat(2), j + 1) - Rat(1)));
    return w;
}

}  // namespace

// -------------------------------------------------------------------------------------------

Singularity dominant_singularity(const BivarPoly& P, const USeries& stub, long bits) {
    if (stub.cap() < 18) throw std::invalid_argument("branch stub needs at least 10 coefficients");
    if (!algebraic_residual(P, stub).terms().empty()) throw std::invalid_argument("branch stub inconsistent with the equation");
    Poly disc = strip_zero_roots(discriminant(P, "y"));
    if (disc.degree() <= 0) throw std::domain_error("the equation has no finite singularities");
    Poly sq = squarefree_part(disc);
    Rat B = root_bound(sq);
    std::vector<RootInterval> roots = isolate_real_roots(sq, -B, B, bits);
    std::sort(roots.begin(), roots.end(), [](const RootInterval& x, const RootInterval& y) { return abs(x.approx) < abs(y.approx); });

    Tracker tr(P, bits);
    Singularity out;
    for (size_t i = 0; i < roots.size(); ++i) {
        Approach a = approach(tr, stub, roots[i].approx);
        if (!a.singular) {
            out.rejected.push_back(roots[i].approx);
            continue;
        }
        BigFloat tie = abs(roots[i].approx) * pow(BigFloat(2L, bits), -(bits / 2));
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (abs(abs(roots[j].approx) - abs(roots[i].approx)) > tie) break;
            if (approach(tr, stub, roots[j].approx).singular) throw std::domain_error("multiple dominant singularities");
        }
        out.field = make_field(sq, roots[i]);
        out.t0 = roots[i].approx;
        out.py_ratio = a.ratio;
        out.y_near = a.y_near;
        out.delta_near = a.delta_near;
        out.y0 = a.y_near;
        return out;
    }
    throw std::domain_error("no discriminant root is a singularity of the branch");
}

BigFloat PuiseuxExpansion::a1(long bits) const { return BigFloat(static_cast<long>(sign), bits) * sqrt(s.to_bigfloat(bits)); }

BigFloat PuiseuxExpansion::a(int k, long bits) const {
    BigFloat v = alpha.at(k).to_bigfloat(bits);
    return k % 2 ? v * a1(bits) : v;
}

PuiseuxExpansion puiseux_expand(const BivarPoly& P, Singularity& sing, int M, const USeries& stub, long bits) {
    (void)stub;
    const FieldPtr& F = sing.field;
    NumberFieldElem zero(F, Rat(0));
    NumberFieldElem t0 = NumberFieldElem::generator(F);

    UPoly<NumberFieldElem> A = specialize_t(P, F);
    UPoly<NumberFieldElem> g = gcd(A, A.derivative());
    if (g.degree() < 1) throw std::domain_error("the branch is not singular at t0");
    if (g.degree() > 1) throw std::domain_error("several branches collide at t0");
    NumberFieldElem y0 = -g.coeff(0) / g.coeff(1);
    BigFloat y0f = y0.to_bigfloat(bits);
    BigFloat tol = pow(BigFloat(10L, bits), -4) * (BigFloat(1L, bits) + abs(y0f));
    if (abs(y0f - sing.y_near) > tol) throw std::domain_error("the colliding pair at t0 is not the tracked branch");
    sing.y0 = y0f;

    NumberFieldElem Pt = P.derivative("t").evaluate<NumberFieldElem>({t0, y0});
    NumberFieldElem Pyy = P.derivative("y").derivative("y").evaluate<NumberFieldElem>({t0, y0});
    if (Pt.is_zero() || Pyy.is_zero()) throw std::domain_error("non-square-root singularity");
    NumberFieldElem s = embed(Rat(2), t0) * t0 * Pt / Pyy;
    if (s.to_bigfloat(bits).sign() <= 0) throw std::domain_error("square-root coefficient is not real");

    // y = sum beta_k v^k with t = t0 (1 - v^2 / s); beta_k from the v^(k+1) coefficient.
    std::vector<NumberFieldElem> beta{y0, embed(Rat(1), t0)};
    auto tv_at = [&](int cap) {
        NSeries tv = NSeries::constant(t0, cap);
        return tv - NSeries::monomial(t0 / s, 2, cap);
    };
    for (int k = 2; k <= M; ++k) {
        int cap = k + 1;
        std::vector<NumberFieldElem> c(beta.begin(), beta.end());
        NSeries yv(0, c, cap, zero);
        NSeries Q = P.evaluate<NSeries>({tv_at(cap), yv});
        for (int j = 0; j <= k; ++j)
            if (!Q.coeff_u(j).is_zero()) throw std::logic_error("Puiseux iteration lost consistency");
        beta.push_back(-Q.coeff_u(k + 1) / Pyy);
    }
    {
        NSeries yv(0, beta, M, zero);
        NSeries Q = P.evaluate<NSeries>({tv_at(M), yv});
        for (int j = 0; j <= M; ++j)
            if (!Q.coeff_u(j).is_zero()) throw std::logic_error("Puiseux expansion does not satisfy the equation");
    }

    PuiseuxExpansion px;
    px.field = F;
    px.t0 = t0;
    px.s = s;
    px.beta = beta;
    NumberFieldElem sp = embed(Rat(1), t0);
    for (int k = 0; k <= M; ++k) {
        if (k >= 2 && k % 2 == 0) sp = sp * s;
        px.alpha.push_back(beta[k] * sp);
    }
    // Sign of a1 from the tracked branch just below t0: y - y0 ~ a1 sqrt(delta).
    BigFloat lin = (sing.y_near - y0f) / sqrt(sing.delta_near * s.to_bigfloat(bits));
    px.sign = lin.sign() >= 0 ? 1 : -1;
    return px;
}

std::vector<Rat> gamma_ratio_series(const Rat& a, const Rat& b, int M) {
    std::vector<Rat> B = bernoulli_numbers(M + 2);
    std::vector<Rat> L(M + 1, Rat(0));
    for (int j = 1; j <= M; ++j) {
        Rat v = (bernoulli_poly(j + 1, a, B) - bernoulli_poly(j + 1, b, B)) / Rat(static_cast<long>(j) * (j + 1));
        L[j] = j % 2 ? v : -v;
    }
    USeries e = exp(USeries(0, L, M, Rat(0)));
    std::vector<Rat> out;
    for (int j = 0; j <= M; ++j) out.push_back(e.coeff_u(j));
    return out;
}

BigFloat AsymExpansion::stokes(long bits) const {
    BigFloat k = K.to_bigfloat(bits);
    return BigFloat(static_cast<long>(stokes_sign), bits) * sqrt(k / pi(bits));
}

BigFloat AsymExpansion::evaluate(long n, int M, long bits) const {
    if (M > static_cast<int>(d.size())) throw std::invalid_argument("more corrections requested than computed");
    BigFloat nn(n, bits);
    BigFloat x = BigFloat(1L, bits) / nn;
    BigFloat sum(1L, bits), xp(1L, bits);
    for (int l = 1; l <= M; ++l) {
        xp = xp * x;
        sum = sum + d[l - 1].to_bigfloat(bits) * xp;
    }
    return stokes(bits) * pow(rate.to_bigfloat(bits), n) * pow(nn, BigFloat(exponent, bits)) * sum;
}

AsymExpansion transfer(const PuiseuxExpansion& px, const TransferSpec& spec, int M) {
    const FieldPtr& F = px.field;
    NumberFieldElem zero(F, Rat(0));
    int kmax = px.order();
    NSeries tv = NSeries::constant(px.t0, kmax) - NSeries::monomial(px.t0 / px.s, 2, kmax);
    NSeries yv(0, px.beta, kmax, zero);
    NSeries T = spec.target.series(tv, std::optional<NSeries>(yv));
    if (spec.take_log) {
        NumberFieldElem c0 = T.coeff_u(0);
        if (c0.is_zero()) throw std::domain_error("logarithm of a target vanishing at t0");
        T = log(inverse(c0) * T);  // drops the constant log(c0), which is analytic
    }
    int cap = T.cap();
    // phi_k = tau_k s^((k-1)/2): the u^k coefficient is sign * sqrt(s) * phi_k.
    std::vector<NumberFieldElem> phi(cap + 1, zero);
    NumberFieldElem sp = embed(Rat(1), zero);
    for (int k = 1; k <= cap; k += 2) {
        if (k >= 3) sp = sp * px.s;
        phi[k] = T.coeff_u(k) * sp;
    }
    int k0 = -1;
    for (int k = 1; k <= cap; k += 2)
        if (!phi[k].is_zero()) {
            k0 = k;
            break;
        }
    if (k0 < 0) throw std::domain_error("the target has no singular part at t0");
    if (k0 + 2 * M > cap) throw std::invalid_argument("Puiseux expansion too short for the requested corrections");

    NumberFieldElem lead = phi[k0] * embed(r_odd(k0), zero);
    NumberFieldElem t0pow = embed(Rat(1), zero);
    for (int i = 0; i < -spec.shift; ++i) t0pow = t0pow * px.t0;
    for (int i = 0; i < spec.shift; ++i) t0pow = t0pow / px.t0;
    lead = lead * t0pow;

    std::vector<NumberFieldElem> g;
    NumberFieldElem base = phi[k0] * embed(r_odd(k0), zero);
    for (int j = 0; j <= M; ++j) g.push_back(phi[k0 + 2 * j] * embed(r_odd(k0 + 2 * j), zero) / base);
    std::vector<NumberFieldElem> total = correction_series(g, k0, spec.shift, spec.weight(M), M, zero);
    if (!(total[0] - embed(Rat(1), zero)).is_zero()) throw std::logic_error("normalization of the correction series");

    AsymExpansion out;
    out.field = F;
    out.t0 = px.t0;
    out.rate = inverse(px.t0);
    out.exponent = Rat(-k0, 2) - Rat(1) - Rat(spec.p);
    out.K = px.s * lead * lead;
    out.stokes_sign = px.sign * (lead.to_bigfloat(64).sign() >= 0 ? 1 : -1);
    out.d.assign(total.begin() + 1, total.end());
    return out;
}

NumericAsym transfer_numeric(const std::vector<BigFloat>& c, const BigFloat& t0, int M, long bits) {
    BigFloat biggest(0L, bits);
    for (const BigFloat& x : c) biggest = std::max(biggest, abs(x));
    BigFloat eps = biggest * pow(BigFloat(2L, bits), -(bits / 2));
    int k0 = -1;
    for (int k = 1; k < static_cast<int>(c.size()); k += 2)
        if (abs(c[k]) > eps) {
            k0 = k;
            break;
        }
    if (k0 < 0) throw std::domain_error("the expansion has no singular part");
    if (k0 + 2 * M >= static_cast<int>(c.size())) throw std::invalid_argument("expansion too short for the requested corrections");
    BigFloat base = c[k0] * BigFloat(r_odd(k0), bits);
    std::vector<BigFloat> g;
    for (int j = 0; j <= M; ++j) g.push_back(c[k0 + 2 * j] * BigFloat(r_odd(k0 + 2 * j), bits) / base);
    std::vector<BigFloat> total = correction_series(g, k0, 0, w_one(M), M, BigFloat(0L, bits));
    NumericAsym out;
    out.t0 = t0;
    out.stokes = base / sqrt(pi(bits));
    out.exponent = Rat(-k0, 2) - Rat(1);
    out.d.assign(total.begin() + 1, total.end());
    return out;
}

AsymModel asym_model(ExtremeKind k) {
    AsymModel m;
    m.kind = k;
    const int stub_cap = 14;
    if (catalog(k).algebraic_G0) {
        m.source = *catalog(k).algebraic_G0;
        std::vector<Rat> f = coefficient_sequence(k, stub_cap + 1);
        std::vector<Rat> g(2 * stub_cap + 1, Rat(0));
        for (int n = 1; n <= stub_cap + 1; ++n) g[2 * (n - 1)] = Rat(n) * f[n - 1];
        USeries g0(0, g, 2 * stub_cap, Rat(0));
        QuadraticReduction qr = reduce_quadratic(m.source, g0);
        m.P = bivar_from_y_coeffs({-qr.delta, Poly(std::vector<Rat>{}), Poly(std::vector<Rat>{Rat(1)})});
        m.stub = sqrt(poly_useries(qr.delta, 2 * stub_cap));
        m.spec.target = qr.target;
        m.spec.shift = -1;
        m.spec.p = 1;
        m.spec.weight = w_one;
        return m;
    }
    switch (k) {
        case ExtremeKind::FaceEven:
        case ExtremeKind::FaceAll:
            m.source = derive_face_algebraic(k);
            m.P = m.source;
            m.stub = algebraic_series(m.P, Rat(1), stub_cap);
            break;
        case ExtremeKind::Mixed34Face:
            m.source = derive_mixed_algebraic(k);
            m.P = m.source;
            m.stub = mixed_series(k, stub_cap).first;
            break;
        case ExtremeKind::Mixed34Edge: {
            m.source = derive_mixed_algebraic(k);
            m.P = m.source;
            m.stub = mixed_series(k, stub_cap).second;
            Expr t = Expr::t(), y = Expr::y();
            Expr R = (y - pow(t, 2) * pow(y, 2) - pow(t, 3) * pow(y, 3)) / (2 * t * (1 + 3 * t * y));
            m.spec.target = (2 * t * R * pow(y, 2) + pow(R, 2) - 1) / 2;
            m.spec.shift = 0;
            m.spec.p = 2;
            m.spec.weight = w_edge;
            return m;
        }
        default:
            throw std::logic_error("no asymptotic model for " + kind_name(k));
    }
    m.spec.target = Expr::y();
    m.spec.take_log = true;
    m.spec.shift = 0;
    m.spec.p = 2;
    m.spec.weight = w_face;
    return m;
}

AsymResult analyze_kind(ExtremeKind k, int M, long bits) {
    AsymModel model = asym_model(k);
    AsymResult r;
    r.kind = k;
    r.sing = dominant_singularity(model.P, model.stub, bits);
    const int order = 2 * M + 6;
    FieldPtr field = r.sing.field;
    with_field(field, [&](const FieldPtr& f) {
        r.sing.field = f;
        r.puiseux = puiseux_expand(model.P, r.sing, order, model.stub, bits);
        r.expansion = transfer(r.puiseux, model.spec, M);
        return 0;
    });
    r.sing.field = field;
    return r;
}

NumericAsym closed_form_asymptotics(ExtremeKind k, int M, long bits) {
    const ClosedFormRecord& rec = catalog(k);
    if (!rec.F0_closed) throw std::invalid_argument("no closed form for " + kind_name(k));
    BigFloat t0 = closed_radius(k, bits);
    int cap = 2 * M + 9;
    Series<BigFloat> tv = Series<BigFloat>::constant(t0, cap) - Series<BigFloat>::monomial(t0, 2, cap);
    Series<BigFloat> F = rec.F0_closed->series(tv);
    std::vector<BigFloat> c;
    for (int j = 0; j <= F.cap(); ++j) c.push_back(F.coeff_u(j));
    return transfer_numeric(c, t0, M, bits);
}

CheckReport asymptotic_check(const AsymResult& r, const std::vector<long>& n_list, int M, long bits) {
    if (n_list.empty()) return {};
    long nmax = *std::max_element(n_list.begin(), n_list.end());
    std::vector<Rat> f = coefficient_sequence(r.kind, static_cast<int>(nmax));
    CheckReport rep;
    rep.fitted_K = BigFloat(0L, bits);
    for (long n : n_list) {
        CheckRow row{n, f[n - 1], r.expansion.evaluate(n, M, bits), BigFloat(0L, bits)};
        row.rel_error = abs(BigFloat(row.exact, bits) / row.asym - BigFloat(1L, bits));
        rep.fitted_K = std::max(rep.fitted_K, row.rel_error * pow(BigFloat(n, bits), M + 1));
        rep.rows.push_back(row);
    }
    return rep;
}

CheckReport asymptotic_check(ExtremeKind k, const std::vector<long>& n_list, int M, long bits) {
    return asymptotic_check(analyze_kind(k, M, bits), n_list, M, bits);
}

}  // namespace planarlim
