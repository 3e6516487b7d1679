#include "planarlim/closed_forms.hpp"

#include <map>
#include <stdexcept>

#include "planarlim/planar.hpp"
#include "planarlim/roots.hpp"

namespace planarlim {

namespace {

// Polynomial in n (or t) from ascending coefficients.
Poly P(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return Poly(v);
}

BivarPoly from_y_polys(std::initializer_list<Poly> coeffs) { return bivar_from_y_coeffs(std::vector<Poly>(coeffs)); }

ClosedFormRecord make_edge_even() {
    Expr t = Expr::t();
    Expr root = sqrt(1 - 8 * t);
    ClosedFormRecord r;
    r.kind = ExtremeKind::EdgeEven;
    r.R_closed = (1 + 4 * t - root) / (8 * t);
    r.S_closed = Expr(0);
    r.F0_closed = (1 - 24 * t + 72 * pow(t, 2) - (1 - 20 * t) * root) / (128 * pow(t, 2)) -
                  Expr(Rat(3, 8)) * log((1 - 4 * t + root) / 2);
    r.algebraic_R = from_y_polys({P({1, 1}), P({-1, -4}), P({0, 4})});
    r.algebraic_G0 = from_y_polys({P({-1, 9}), P({2, -24, 48}), P({0, 0, 0, 64})});
    r.ode = LinearOde2{P({3}), P({-6, 24}), P({0, -2, 16})};
    r.recurrence = HolonomicRec{{P({0, -4, -8}), P({3, 4, 1})}, 1, {Rat(1, 2)}};
    r.has_fn_closed = true;
    r.radius_poly = P({-1, 8});
    r.radius_lo = Rat(0);
    r.radius_hi = Rat(1);
    return r;
}

ClosedFormRecord make_edge_all() {
    Expr t = Expr::t();
    Expr root = sqrt(1 - 12 * t);
    ClosedFormRecord r;
    r.kind = ExtremeKind::EdgeAll;
    r.R_closed = (1 + 12 * t - root) / (18 * t);
    r.S_closed = (1 - root) / (6 * sqrt(t));
    r.F0_closed = (1 - 36 * t + 162 * pow(t, 2) - (1 - 30 * t) * root) / (216 * pow(t, 2)) -
                  Expr(Rat(1, 2)) * log((1 - 6 * t + root) / 2);
    r.algebraic_R = from_y_polys({P({1, 4}), P({-1, -12}), P({0, 9})});
    r.algebraic_sigma = from_y_polys({P({1}), P({-1}), P({0, 3})});
    r.algebraic_G0 = from_y_polys({P({-2, 27}), P({2, -36, 108}), P({0, 0, 0, 108})});
    r.ode = LinearOde2{P({3}), P({-3, 18}), P({0, -1, 12})};
    r.recurrence = HolonomicRec{{P({0, -6, -12}), P({3, 4, 1})}, 1, {Rat(1)}};
    r.has_fn_closed = true;
    r.radius_poly = P({-1, 12});
    r.radius_lo = Rat(0);
    r.radius_hi = Rat(1);
    r.notes.push_back("printed ODE initial condition F0(0) = 1 is inconsistent with F0 = t + ...; F0(0) = 0 is used");
    return r;
}

ClosedFormRecord make_edge_even_min4() {
    Expr t = Expr::t();
    Expr root = sqrt((1 + t) * (1 - 7 * t));
    ClosedFormRecord r;
    r.kind = ExtremeKind::EdgeEvenMin4;
    r.R_closed = (1 + 5 * t - root) / (8 * t * (1 + t));
    r.S_closed = Expr(0);
    r.F0_closed = (1 - 22 * t + 49 * pow(t, 2) - (1 - 19 * t) * root) / (128 * pow(t, 2)) -
                  Expr(Rat(1, 8)) * log(1 + t) - Expr(Rat(3, 8)) * log((1 - 3 * t + root) / 2);
    r.algebraic_G0 = from_y_polys({P({0, -2, 13, 16}), P({2, -18, 6, 90, 64}), P({0, 0, 0, 64, 128, 64})});
    r.ode = LinearOde2{P({0, 8, 7}), P({-6, 8, 42, 28}), P({0, -2, 10, 26, 14})};
    Poly n1 = P({1, 1}), n2 = P({2, 1}), n3 = P({3, 1}), n4 = P({4, 1}), n6 = P({6, 1});
    r.recurrence = HolonomicRec{{P({0, 0, 49}) * n1, n1 * n1 * P({32, 21}) * P({7}), n2 * P({544, 543, 139}),
                                 n3 * P({224, 157, 33}), n2 * n4 * n6 * P({-8})},
                                0,
                                {Rat(0), Rat(1, 2), Rat(5, 6)}};
    r.radius_poly = P({-1, 7});
    r.radius_lo = Rat(0);
    r.radius_hi = Rat(1);
    return r;
}

ClosedFormRecord make_edge_min2() {
    Expr t = Expr::t();
    Expr root = sqrt(1 - 10 * t + pow(t, 2));
    ClosedFormRecord r;
    r.kind = ExtremeKind::EdgeMin2;
    r.R_closed = (1 + 14 * t + pow(t, 2) - (1 + t) * root) / (18 * t);
    r.S_closed = (1 - 5 * t - root) / (6 * sqrt(t));
    r.F0_closed = (1 - 32 * t + 96 * pow(t, 2) + 76 * pow(t, 3) + pow(t, 4) -
                   (1 - 27 * t - 27 * pow(t, 2) + pow(t, 3)) * root) /
                      (216 * pow(t, 2)) -
                  log((1 + t + root) / 2);
    r.algebraic_G0 = from_y_polys({P({1, -13, 22, -9, -1}), P({-2, 32, -108, 76, 2}), P({0, 0, 0, -108})});
    r.ode = LinearOde2{P({3, -5, 1, 1}), P({-6, 34, -10, -2}), P({0, -2, 22, -22, 2})};
    Poly n = P({0, 1});
    Poly nm1 = P({-1, 1}), nm2 = P({-2, 1}), n1 = P({1, 1}), n2 = P({2, 1}), n3 = P({3, 1}), n4 = P({4, 1});
    Poly n5 = P({5, 1}), n6 = P({6, 1}), n8 = P({8, 1});
    r.recurrence = HolonomicRec{{nm2 * nm1 * n, nm1 * n1 * P({2, 5}) * P({-2}), n2 * P({44, 25, 5}) * P({-1}),
                                 n3 * P({116, 91, 17}) * P({4}), n4 * P({1326, 701, 89}) * P({-1}), n5 * n6 * P({85, 19}) * P({2}),
                                 n5 * n6 * n8 * P({-3})},
                                0,
                                {Rat(1, 2), Rat(3, 4), Rat(8, 3), Rat(12), Rat(312, 5)}};
    r.radius_poly = P({1, -10, 1});
    r.radius_lo = Rat(0);
    r.radius_hi = Rat(1);
    return r;
}

ClosedFormRecord make_edge_min3() {
    Expr t = Expr::t();
    Expr root = sqrt(1 - 8 * t - 8 * pow(t, 2));
    ClosedFormRecord r;
    r.kind = ExtremeKind::EdgeMin3;
    r.R_closed = (1 + 16 * t + 16 * pow(t, 2) - (1 + 2 * t) * root) / (18 * t * pow(1 + t, 2));
    r.S_closed = (1 - 4 * t - root) / (6 * (1 + t) * sqrt(t));
    r.F0_closed = (1 - 28 * t + 6 * pow(t, 2) + 176 * pow(t, 3) + 142 * pow(t, 4) -
                   (1 - 24 * t - 78 * pow(t, 2) - 52 * pow(t, 3)) * root) /
                      (216 * pow(t, 2) * pow(1 + t, 2)) +
                  Expr(Rat(1, 2)) * log(1 + t) - log((1 + 2 * t + root) / 2);
    r.algebraic_G0 = from_y_polys({P({0, -2, 11, 65, 107, 81, 27}), P({2, -20, -22, 184, 560, 700, 432, 108}),
                                   P({0, 0, 0, 108, 540, 1080, 1080, 540, 108})});
    r.ode = LinearOde2{P({0, -8, -35, -44, -16}), P({-1, 0, 15, 34, 28, 8}) * P({-6}), P({0, -1, 5, 29, 47, 32, 8}) * P({-2})};
    Poly n = P({0, 1}), n1 = P({1, 1}), n2 = P({2, 1}), n3 = P({3, 1}), n4 = P({4, 1}), n5 = P({5, 1});
    Poly n6 = P({6, 1}), n7 = P({7, 1}), n8 = P({8, 1}), n10 = P({10, 1});
    r.recurrence = HolonomicRec{{n * n * n2 * P({128}), n1 * P({66, 97, 27}) * P({32}), n2 * P({1836, 1568, 305}) * P({8}),
                                 n3 * P({9972, 6193, 929}) * P({4}), n4 * P({54276, 26661, 3257}), n5 * P({38220, 15479, 1595}),
                                 n6 * P({3972, 1349, 121}) * P({3}), n7 * P({36, 5, 1}) * P({5}), n6 * n8 * n10 * P({-8})},
                                0,
                                {Rat(0), Rat(1, 2), Rat(3, 2), Rat(47, 8), Rat(139, 5), Rat(430, 3), Rat(11175, 14)}};
    r.radius_poly = P({-1, 8, 8});
    r.radius_lo = Rat(0);
    r.radius_hi = Rat(1);
    r.notes.push_back("printed R has (1 + 16t) in front of the square root, which gives R(0) = 2/9; (1 + 2t) is used");
    r.notes.push_back("printed initial value f5 = 138/5 disagrees with the series coefficient 139/5; 139/5 is used");
    return r;
}

ClosedFormRecord make_plain(ExtremeKind k) {
    ClosedFormRecord r;
    r.kind = k;
    return r;
}

}  // namespace

const std::vector<ExtremeKind>& all_kinds() {
    static const std::vector<ExtremeKind> v{ExtremeKind::EdgeEven, ExtremeKind::EdgeAll,     ExtremeKind::EdgeEvenMin4,
                                            ExtremeKind::EdgeMin2, ExtremeKind::EdgeMin3,    ExtremeKind::FaceEven,
                                            ExtremeKind::FaceAll,  ExtremeKind::Mixed34Edge, ExtremeKind::Mixed34Face};
    return v;
}

const std::vector<ExtremeKind>& edge_kinds() {
    static const std::vector<ExtremeKind> v{ExtremeKind::EdgeEven, ExtremeKind::EdgeAll, ExtremeKind::EdgeEvenMin4,
                                            ExtremeKind::EdgeMin2, ExtremeKind::EdgeMin3};
    return v;
}

std::string kind_name(ExtremeKind k) {
    switch (k) {
        case ExtremeKind::EdgeEven: return "edge-even";
        case ExtremeKind::EdgeAll: return "edge-all";
        case ExtremeKind::EdgeEvenMin4: return "edge-even-min4";
        case ExtremeKind::EdgeMin2: return "edge-min2";
        case ExtremeKind::EdgeMin3: return "edge-min3";
        case ExtremeKind::FaceEven: return "face-even";
        case ExtremeKind::FaceAll: return "face-all";
        case ExtremeKind::Mixed34Edge: return "mixed34-edge";
        case ExtremeKind::Mixed34Face: return "mixed34-face";
    }
    return "?";
}

ExtremeKind parse_kind(const std::string& name) {
    for (ExtremeKind k : all_kinds())
        if (kind_name(k) == name) return k;
    throw std::invalid_argument("unknown extreme kind: " + name);
}

Grading kind_grading(ExtremeKind k) {
    switch (k) {
        case ExtremeKind::FaceEven:
        case ExtremeKind::FaceAll:
        case ExtremeKind::Mixed34Face:
            return Grading::Face;
        default:
            return Grading::Edge;
    }
}

bool kind_even(ExtremeKind k) {
    return k == ExtremeKind::EdgeEven || k == ExtremeKind::EdgeEvenMin4 || k == ExtremeKind::FaceEven;
}

bool kind_has_var(ExtremeKind k, int n) {
    if (n < 1) return false;
    switch (k) {
        case ExtremeKind::EdgeEven: return n % 2 == 0;
        case ExtremeKind::EdgeAll: return true;
        case ExtremeKind::EdgeEvenMin4: return n % 2 == 0 && n >= 4;
        case ExtremeKind::EdgeMin2: return n >= 2;
        case ExtremeKind::EdgeMin3: return n >= 3;
        case ExtremeKind::FaceEven: return n % 2 == 0 && n >= 4;
        case ExtremeKind::FaceAll: return n >= 3;
        case ExtremeKind::Mixed34Edge:
        case ExtremeKind::Mixed34Face:
            return n == 3 || n == 4;
    }
    return false;
}

std::vector<Rat> holonomic_evaluate(const HolonomicRec& rec, int N) {
    const int r = rec.order();
    if (r < 1) throw std::invalid_argument("recurrence of order zero");
    if (N < static_cast<int>(rec.initial.size())) throw std::invalid_argument("fewer terms requested than initial values");
    std::vector<Rat> f(N + 1, Rat(0));  // f[0] = 0
    for (size_t i = 0; i < rec.initial.size(); ++i) f[i + 1] = rec.initial[i];
    for (int m = static_cast<int>(rec.initial.size()) + 1; m <= N; ++m) {
        int n = m - r;
        if (n < rec.start) throw std::domain_error("recurrence not valid at n = " + std::to_string(n));
        Rat nn(n);
        Rat lead = rec.gamma[r].eval(nn);
        if (lead.is_zero()) throw std::domain_error("leading recurrence coefficient vanishes at n = " + std::to_string(n));
        Rat acc(0);
        for (int j = 0; j < r; ++j)
            if (n + j >= 0) acc += rec.gamma[j].eval(nn) * f[n + j];
        f[m] = -acc / lead;
    }
    return std::vector<Rat>(f.begin() + 1, f.end());
}

const ClosedFormRecord& catalog(ExtremeKind k) {
    static const std::map<ExtremeKind, ClosedFormRecord> records = [] {
        std::map<ExtremeKind, ClosedFormRecord> m;
        m.emplace(ExtremeKind::EdgeEven, make_edge_even());
        m.emplace(ExtremeKind::EdgeAll, make_edge_all());
        m.emplace(ExtremeKind::EdgeEvenMin4, make_edge_even_min4());
        m.emplace(ExtremeKind::EdgeMin2, make_edge_min2());
        m.emplace(ExtremeKind::EdgeMin3, make_edge_min3());
        for (ExtremeKind f : {ExtremeKind::FaceEven, ExtremeKind::FaceAll, ExtremeKind::Mixed34Edge,
                              ExtremeKind::Mixed34Face})
            m.emplace(f, make_plain(f));
        return m;
    }();
    return records.at(k);
}

BigFloat closed_radius(ExtremeKind k, long bits) {
    const ClosedFormRecord& r = catalog(k);
    if (!r.radius_poly) throw std::invalid_argument("no closed-form radius for " + kind_name(k));
    auto roots = isolate_real_roots(*r.radius_poly, r.radius_lo, r.radius_hi, bits);
    if (roots.size() != 1) throw std::logic_error("radius polynomial does not isolate a single root");
    return roots[0].approx;
}

ClosedValues eval_closed(ExtremeKind k, const Rat& t, long bits) {
    const ClosedFormRecord& r = catalog(k);
    if (!r.F0_closed) throw std::invalid_argument("no closed form for " + kind_name(k));
    if (t.sign() <= 0) throw std::domain_error("closed forms are evaluated for t > 0");
    if (BigFloat(t, bits) >= closed_radius(k, bits)) throw std::domain_error("beyond radius of convergence");
    BigFloat tb(t, bits);
    auto one = [&](const std::optional<Expr>& e) -> std::optional<ClosedValue> {
        if (!e) return std::nullopt;
        return ClosedValue{e->eval_exact(t), e->eval(tb)};
    };
    return ClosedValues{one(r.R_closed), one(r.S_closed), one(r.F0_closed)};
}

const HolonomicRec& recurrence_coeffs(ExtremeKind k) {
    const ClosedFormRecord& r = catalog(k);
    if (!r.recurrence) throw std::invalid_argument("no printed recurrence");
    return *r.recurrence;
}

Rat fn_closed(ExtremeKind k, long n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    auto fact = [](long m) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
        return f;
    };
    mpz_class p;
    if (k == ExtremeKind::EdgeEven) {
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
        return Rat(mpz_class(3 * fact(2 * n - 1) * p), mpz_class(fact(n) * fact(n + 2)));
    }
    if (k == ExtremeKind::EdgeAll) {
        mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(n));
        return Rat(mpz_class(2 * fact(2 * n - 1) * p), mpz_class(fact(n) * fact(n + 2)));
    }
    throw std::invalid_argument("no closed coefficient formula for " + kind_name(k));
}

ExtremeSeries extreme_series(ExtremeKind k, int t_cap) {
    if (t_cap < 0) throw std::invalid_argument("t cap must be nonnegative");
    Grading g = kind_grading(k);
    int half_cap = 2 * t_cap;
    std::vector<int> vars;
    for (int n = 1; half_degree(g, n) <= half_cap; ++n)
        if (kind_has_var(k, n) && half_degree(g, n) > 0) vars.push_back(n);
    auto basis = std::make_shared<MonomialBasis>(vars, g, half_cap);
    MultiSeries R, S(basis);
    bool all_even = std::all_of(vars.begin(), vars.end(), [](int n) { return n % 2 == 0; });
    if (all_even) {
        R = solve_R_even(basis);
    } else {
        RSPair rs = solve_RS(basis);
        R = rs.R;
        S = rs.S;
    }
    ExtremeSeries out;
    out.R = grade_specialize(R, g, half_cap);
    if (g == Grading::Edge) {
        out.S = grade_specialize(S, g, half_cap);
        out.F0 = f0_edge(out.R, out.S);
    } else {
        out.S = USeries(half_cap, Rat(0));
        out.F0 = f0_face(out.R);
    }
    return out;
}

std::pair<MPoly, MPoly> rs_system(ExtremeKind k) {
    if (k != ExtremeKind::Mixed34Edge && k != ExtremeKind::Mixed34Face)
        throw std::invalid_argument("the (R, S) system is polynomial only for finitely many a_n");
    const std::vector<std::string> vars{"t", "R", "s"};
    bool face = kind_grading(k) == Grading::Face;
    MPoly h1 = MPoly::constant(vars, Rat(1)), h2(vars);
    for (int n = 1; n <= 4; ++n) {
        if (!kind_has_var(k, n)) continue;
        for (int j = 1; 2 * j <= n; ++j) {
            Rat c(binom(n - 1, j - 1) * binom(n - j, j));
            h1.add_term({n - j - (face ? 1 : 0), j, n - 2 * j}, c);
        }
        for (int j = 0; 2 * j + 1 <= n; ++j) {
            Rat c(binom(n - 1, 2 * j) * binom(2 * j, j));
            h2.add_term({n - j - 1 - (face ? 1 : 0), j, n - 2 * j - 1}, c);
        }
    }
    return {MPoly::variable(vars, "R") - h1, MPoly::variable(vars, "s") - h2};
}

namespace {

// Reads a polynomial in {t, x, z} that no longer involves z as a bivariate polynomial in (t, x).
BivarPoly to_bivar(const MPoly& p, int keep) {
    BivarPoly out(bivar_vars());
    for (auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != 0 && static_cast<int>(i) != keep && e[i] != 0)
                throw std::logic_error("eliminated variable survived the resultant");
        out.add_term({e[0], e[keep]}, c);
    }
    return out;
}

void check_branch(const BivarPoly& P, const USeries& y, const std::string& what) {
    USeries res = algebraic_residual(P, y);
    if (!res.terms().empty()) throw std::runtime_error("normalization mismatch: " + what + " does not satisfy the series");
}

}  // namespace

BivarPoly derive_face_algebraic(ExtremeKind k) {
    MPoly res;
    if (k == ExtremeKind::FaceEven) {
        // H'(c) = 0 with D = sqrt(1 - 4 t R): D^2 = 1 - 4tR and D (1 + D)(1 - 2R) + 2R = 0.
        const std::vector<std::string> v{"t", "R", "D"};
        MPoly t = MPoly::variable(v, "t"), R = MPoly::variable(v, "R"), D = MPoly::variable(v, "D");
        MPoly one = MPoly::constant(v, Rat(1));
        MPoly e1 = D * D - one + Rat(4) * t * R;
        MPoly e2 = D * (one + D) * (one - Rat(2) * R) + Rat(2) * R;
        res = resultant_m(e1, e2, "D");
    } else if (k == ExtremeKind::FaceAll) {
        // Critical system in R = c^2 and s = b / sqrt(t), with W = 1 - t s and E = 1 + 2 t s
        // standing for 1 / sqrt(W^2 - 4 t R).
        const std::vector<std::string> v{"t", "R", "s"};
        MPoly t = MPoly::variable(v, "t"), R = MPoly::variable(v, "R"), s = MPoly::variable(v, "s");
        MPoly one = MPoly::constant(v, Rat(1));
        MPoly W = one - t * s, E = one + Rat(2) * t * s;
        MPoly a = Rat(2) * R * E * E - (Rat(2) * R - one) * (W * E + one);
        MPoly b = Rat(4) * t * R * E * E - W * W * E * E + one;
        res = resultant_m(a, b, "s");
    } else {
        throw std::invalid_argument("face equations are derived for face-even and face-all only");
    }
    BivarPoly P = to_bivar(res.strip_monomial_factor().primitive(), 1);
    check_branch(P, extreme_series(k, 6).R, kind_name(k) + " derived equation");
    return P;
}

BivarPoly derive_mixed_algebraic(ExtremeKind k) {
    auto [f1, f2] = rs_system(k);
    bool face = k == ExtremeKind::Mixed34Face;
    MPoly res = resultant_m(f1, f2, face ? "s" : "R");
    BivarPoly P = to_bivar(res.strip_monomial_factor().primitive(), face ? 1 : 2);
    ExtremeSeries es = extreme_series(k, 6);
    if (face) {
        check_branch(P, es.R, kind_name(k) + " derived equation");
    } else {
        // sigma = S / sqrt(t)
        USeries sigma = es.S.shift_u(-1);
        check_branch(P, sigma.truncate(sigma.cap() - (sigma.cap() % 2)), kind_name(k) + " derived equation");
    }
    return P;
}

BivarPoly printed_face_equation(ExtremeKind k) {
    if (k == ExtremeKind::FaceEven)
        return bivar({{0, 0, Rat(1)}, {0, 1, Rat(-1)}, {2, 0, Rat(-1)}, {2, 2, Rat(4)}, {4, 1, Rat(4)},
                      {4, 2, Rat(-16)}, {4, 3, Rat(16)}});
    if (k == ExtremeKind::FaceAll)
        return bivar({{2, 4, Rat(144)}, {1, 3, Rat(60)}, {2, 3, Rat(-192)}, {0, 2, Rat(-2)}, {1, 2, Rat(-52)},
                      {2, 2, Rat(88)}, {0, 1, Rat(1)}, {1, 1, Rat(15)}, {2, 1, Rat(-16)}, {0, 0, Rat(1)},
                      {1, 0, Rat(-2)}, {2, 0, Rat(1)}});
    throw std::invalid_argument("no printed face equation for " + kind_name(k));
}

namespace {

USeries poly_series(const Poly& p, int cap) {
    std::vector<Rat> c(std::max(cap + 1, 0), Rat(0));
    for (int i = 0; i <= p.degree() && 2 * i <= cap; ++i) c[2 * i] = p.coeff(i);
    return USeries(0, std::move(c), cap, Rat(0));
}

}  // namespace

USeries algebraic_residual(const BivarPoly& P, const USeries& y) {
    std::vector<Poly> cs = y_coeffs(P);
    USeries acc(y.cap(), Rat(0));
    for (int j = static_cast<int>(cs.size()) - 1; j >= 0; --j) acc = acc * y + poly_series(cs[j], y.cap());
    return acc;
}

USeries algebraic_series(const BivarPoly& P, const Rat& y0, int t_cap) {
    int cap = 2 * t_cap;
    BivarPoly Py = P.derivative("y");
    USeries y = USeries::constant(y0, cap);
    if (!algebraic_residual(P, USeries::constant(y0, 0)).terms().empty())
        throw std::invalid_argument("initial value is not a root at t = 0");
    if (algebraic_residual(Py, USeries::constant(y0, 0)).terms().empty())
        throw std::invalid_argument("Newton iteration needs a simple root at t = 0");
    for (int iter = 0; iter < 64; ++iter) {
        USeries r = algebraic_residual(P, y);
        if (r.terms().empty()) return y;
        y = y - r / algebraic_residual(Py, y);
        y = y.truncate_or_keep(cap);
    }
    throw std::runtime_error("Newton iteration for the algebraic series did not converge");
}

namespace {

// Newton iteration for f1(t, R, s) = f2(t, R, s) = 0 in power series of t.
std::pair<USeries, USeries> system_series(const MPoly& f1, const MPoly& f2, const Rat& R0, const Rat& s0, int t_cap) {
    int cap = 2 * t_cap;
    USeries t = USeries::t(Rat(0), cap);
    USeries R = USeries::constant(R0, cap), s = USeries::constant(s0, cap);
    MPoly j11 = f1.derivative("R"), j12 = f1.derivative("s"), j21 = f2.derivative("R"), j22 = f2.derivative("s");
    for (int iter = 0; iter < 64; ++iter) {
        std::vector<USeries> at{t, R, s};
        USeries r1 = f1.evaluate(at), r2 = f2.evaluate(at);
        if (r1.terms().empty() && r2.terms().empty()) return {R, s};
        USeries a = j11.evaluate(at), b = j12.evaluate(at), c = j21.evaluate(at), d = j22.evaluate(at);
        USeries det_inv = (a * d - b * c).inverse();
        R = (R - (d * r1 - b * r2) * det_inv).truncate_or_keep(cap);
        s = (s - (a * r2 - c * r1) * det_inv).truncate_or_keep(cap);
    }
    throw std::runtime_error("Newton iteration for the (R, S) system did not converge");
}

}  // namespace

std::pair<USeries, USeries> mixed_series(ExtremeKind k, int t_cap) {
    auto [f1, f2] = rs_system(k);
    return system_series(f1, f2, Rat(1), k == ExtremeKind::Mixed34Face ? Rat(2) : Rat(0), t_cap);
}

std::vector<Rat> coefficient_sequence(ExtremeKind k, int N) {
    const ClosedFormRecord& rec = catalog(k);
    if (rec.recurrence) return holonomic_evaluate(*rec.recurrence, N);
    USeries target;
    std::function<Rat(long)> weight;
    if (k == ExtremeKind::FaceEven || k == ExtremeKind::FaceAll) {
        target = log(algebraic_series(derive_face_algebraic(k), Rat(1), N));
    } else {
        bool face = k == ExtremeKind::Mixed34Face;
        auto [R, s] = mixed_series(k, N);
        if (face) {
            target = log(R);
        } else {
            USeries t = USeries::t(Rat(0), 2 * N);
            target = Rat(1, 2) * (Rat(2) * t * R * s * s + R * R - USeries::constant(Rat(1), 2 * N));
        }
    }
    bool face = kind_grading(k) == Grading::Face;
    std::vector<Rat> f(N);
    for (long n = 1; n <= N; ++n) {
        Rat c = target.coeff_t(Rat(n));
        f[n - 1] = face ? c / Rat((n + 1) * (n + 2)) : c / Rat(n * (n + 1));
    }
    return f;
}

USeries ode_residual(const LinearOde2& ode, const USeries& F) {
    USeries d1 = F.d_dt(), d2 = d1.d_dt();
    int cap = d2.cap();
    return poly_series(ode.p0, cap) + poly_series(ode.p1, cap) * d1 + poly_series(ode.p2, cap) * d2;
}

}  // namespace planarlim
