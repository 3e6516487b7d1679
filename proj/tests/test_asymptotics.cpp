#include <cmath>
#include <map>

#include "doctest.h"
#include "planarlim/asymptotics.hpp"

using namespace planarlim;

namespace {

constexpr long kBits = 256;

double rel(const BigFloat& a, double b) { return std::fabs(a.to_double() - b) / std::fabs(b); }

// analyze_kind is the expensive step; every kind is analyzed once with three corrections.
const AsymResult& analyzed(ExtremeKind k) {
    static std::map<ExtremeKind, AsymResult> cache;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, analyze_kind(k, 3)).first;
    return it->second;
}

NumberFieldElem num(const AsymResult& r, const Rat& q) { return NumberFieldElem(r.expansion.field, q); }
NumberFieldElem gen(const AsymResult& r) { return NumberFieldElem::generator(r.expansion.field); }

// Series of the closed-form EdgeAll R at 0, from its corrected quadratic equation.
BivarPoly edge_all_R_equation() {
    return bivar({{0, 0, Rat(1)}, {1, 0, Rat(4)}, {0, 1, Rat(-1)}, {1, 1, Rat(-12)}, {1, 2, Rat(9)}});
}

}  // namespace

TEST_CASE("gamma ratio series") {
    // Gamma(n + 1) / Gamma(n) / n = 1.
    std::vector<Rat> one = gamma_ratio_series(Rat(1), Rat(0), 4);
    CHECK(one[0] == Rat(1));
    for (int l = 1; l <= 4; ++l) CHECK(one[l] == Rat(0));
    // Gamma(n + a) / Gamma(n + b) n^(b - a) = 1 + (a - b)(a + b - 1) / (2n) + ...
    Rat a(-5, 2), b(3);
    std::vector<Rat> g = gamma_ratio_series(a, b, 3);
    CHECK(g[1] == (a - b) * (a + b - Rat(1)) / Rat(2));
    // Gamma(n) / Gamma(n + 2) n^2 = 1 / (1 + 1/n) = sum (-1)^l n^-l.
    std::vector<Rat> inv = gamma_ratio_series(Rat(0), Rat(2), 5);
    for (int l = 0; l <= 5; ++l) CHECK(inv[l] == Rat(l % 2 == 0 ? 1 : -1));
}

TEST_CASE("dominant singularity of the EdgeAll R equation") {
    BivarPoly P = edge_all_R_equation();
    USeries stub = algebraic_series(P, Rat(1), 14);
    CHECK(stub.coeff_t(Rat(1)) == Rat(1));
    Singularity s = dominant_singularity(P, stub, kBits);
    CHECK(rel(s.t0, 1.0 / 12) < 1e-30);
    CHECK(rel(s.y0, 4.0 / 3) < 1e-5);  // path-followed, sqrt(delta) accurate
    CHECK(s.py_ratio.to_double() < 0.5);

    PuiseuxExpansion px = puiseux_expand(P, s, 6, stub, kBits);
    Rat a0;
    REQUIRE(px.alpha[0].is_rational(a0));
    CHECK(a0 == Rat(4, 3));
    CHECK(rel(px.a(1, kBits), -2.0 / 3) < 1e-30);
    // With u^2 = 1 - 12t the closed form is R = 2 (2 + u) / (3 (1 + u)), so a_k = (2/3)(-1)^k.
    for (int k = 1; k <= 6; ++k) CHECK(rel(px.a(k, kBits), (k % 2 ? -2.0 : 2.0) / 3) < 1e-30);
}

TEST_CASE("stubs inconsistent with the equation are rejected") {
    BivarPoly P = edge_all_R_equation();
    USeries bad = algebraic_series(P, Rat(1), 14) + USeries::monomial(Rat(5), 10, 28);
    CHECK_THROWS(dominant_singularity(P, bad, kBits));
}

TEST_CASE("singularities of every kind") {
    auto t0 = [](ExtremeKind k) { return analyzed(k).sing.t0; };
    CHECK(rel(t0(ExtremeKind::EdgeEven), 1.0 / 8) < 1e-30);
    CHECK(rel(t0(ExtremeKind::EdgeAll), 1.0 / 12) < 1e-30);
    CHECK(rel(t0(ExtremeKind::EdgeEvenMin4), 1.0 / 7) < 1e-30);
    CHECK(rel(t0(ExtremeKind::EdgeMin2), 5 - 2 * std::sqrt(6.0)) < 1e-14);
    CHECK(rel(t0(ExtremeKind::EdgeMin3), (std::sqrt(6.0) - 2) / 4) < 1e-14);
    CHECK(rel(t0(ExtremeKind::FaceEven), (4 - 3 * std::cbrt(2.0)) / 4) < 1e-14);
    CHECK(rel(t0(ExtremeKind::FaceAll), 0.0180827901833) < 1e-10);
    CHECK(rel(t0(ExtremeKind::Mixed34Edge), 0.2094195368) < 1e-9);
    // The printed decimals carry 10 significant digits; compare to half a unit in the last one.
    CHECK(std::fabs(t0(ExtremeKind::Mixed34Face).to_double() - 0.02305646139) <= 0.5e-11);
    // The smaller positive discriminant root of the mixed edge equation is passed through.
    const Singularity& mixed = analyzed(ExtremeKind::Mixed34Edge).sing;
    REQUIRE_FALSE(mixed.rejected.empty());
    CHECK(std::fabs(mixed.rejected[0].to_double() - 0.1591) < 1e-3);
}

TEST_CASE("branch values at the singularity") {
    const AsymResult& fe = analyzed(ExtremeKind::FaceEven);
    NumberFieldElem c = (num(fe, Rat(4)) - num(fe, Rat(4)) * gen(fe)) / num(fe, Rat(3));  // 2^(1/3)
    CHECK(c * c * c == num(fe, Rat(2)));
    CHECK(fe.puiseux.alpha[0] == (num(fe, Rat(7)) + num(fe, Rat(4)) * c + num(fe, Rat(3)) * c * c) / num(fe, Rat(10)));

    const AsymResult& fa = analyzed(ExtremeKind::FaceAll);
    NumberFieldElem t = gen(fa);
    NumberFieldElem R0 = num(fa, Rat(1, 11)) + num(fa, Rat(856, 11)) * t - num(fa, Rat(1280, 33)) * t * t +
                         num(fa, Rat(256, 33)) * t * t * t;
    CHECK(fa.puiseux.alpha[0] == R0);
}

TEST_CASE("exponent is universal and corrections lie in the singularity field") {
    for (ExtremeKind k : all_kinds()) {
        INFO(kind_name(k));
        const AsymExpansion& e = analyzed(k).expansion;
        CHECK(e.exponent == Rat(-7, 2));
        CHECK(e.d.size() == 3);
        CHECK(e.stokes(kBits).to_double() > 0);
        CHECK(rel(e.rate.to_bigfloat(kBits), 1 / analyzed(k).sing.t0.to_double()) < 1e-14);
    }
}

TEST_CASE("exact constants of the edge kinds") {
    const AsymExpansion& ev = analyzed(ExtremeKind::EdgeEven).expansion;
    CHECK(ev.K == NumberFieldElem(ev.field, Rat(9, 16)));
    CHECK(ev.d[0] == NumberFieldElem(ev.field, Rat(-25, 8)));
    CHECK(ev.d[1] == NumberFieldElem(ev.field, Rat(945, 128)));
    CHECK(ev.d[2] == NumberFieldElem(ev.field, Rat(-16275, 1024)));

    // The factorial formula gives 12^n n^(-7/2) / sqrt(pi) with the same corrections as the even case.
    const AsymExpansion& all = analyzed(ExtremeKind::EdgeAll).expansion;
    CHECK(all.K == NumberFieldElem(all.field, Rat(1)));
    CHECK(all.d[0] == NumberFieldElem(all.field, Rat(-25, 8)));
    CHECK(all.d[1] == NumberFieldElem(all.field, Rat(945, 128)));

    const AsymExpansion& m4 = analyzed(ExtremeKind::EdgeEvenMin4).expansion;
    CHECK(m4.K == NumberFieldElem(m4.field, Rat(147 * 147 * 7, 512 * 512 * 2)));
    CHECK(m4.d[0] == NumberFieldElem(m4.field, Rat(-105, 32)));
    CHECK(m4.d[1] == NumberFieldElem(m4.field, Rat(16065, 2048)));

    const AsymResult& r2 = analyzed(ExtremeKind::EdgeMin2);
    NumberFieldElem s6 = (num(r2, Rat(5)) - gen(r2)) / num(r2, Rat(2));
    CHECK(s6 * s6 == num(r2, Rat(6)));
    CHECK(r2.expansion.K == num(r2, Rat(4, 27)) * s6);
    CHECK(r2.expansion.d[0] == num(r2, Rat(-45, 32)) * s6);
    CHECK(r2.expansion.d[1] == num(r2, Rat(8435, 1024)));

    const AsymResult& r3 = analyzed(ExtremeKind::EdgeMin3);
    NumberFieldElem w = num(r3, Rat(4)) * gen(r3) + num(r3, Rat(2));
    CHECK(w * w == num(r3, Rat(6)));
    CHECK(r3.expansion.K == num(r3, Rat(1024)) / (num(r3, Rat(9)) * (num(r3, Rat(267)) + num(r3, Rat(109)) * w)));
    CHECK(r3.expansion.d[0] == num(r3, Rat(-5, 8)) * (num(r3, Rat(62)) - num(r3, Rat(23)) * w));
    CHECK(r3.expansion.d[1] == num(r3, Rat(35, 64)) * (num(r3, Rat(4567)) - num(r3, Rat(1858)) * w));
}

TEST_CASE("constants of the face and mixed kinds") {
    const AsymResult& fe = analyzed(ExtremeKind::FaceEven);
    NumberFieldElem c = (num(fe, Rat(4)) - num(fe, Rat(4)) * gen(fe)) / num(fe, Rat(3));
    CHECK(fe.expansion.K == (num(fe, Rat(2)) * c - num(fe, Rat(1))) / num(fe, Rat(9)));
    CHECK(fe.expansion.d[0] == -(num(fe, Rat(243)) - num(fe, Rat(8)) * c) / num(fe, Rat(72)));
    CHECK(fe.expansion.d[1] ==
          (num(fe, Rat(91881)) - num(fe, Rat(2640)) * c - num(fe, Rat(5696)) * c * c) / num(fe, Rat(10368)));

    const AsymExpansion& fa = analyzed(ExtremeKind::FaceAll).expansion;
    CHECK(rel(fa.stokes(kBits), 0.1786898225) < 1e-9);
    CHECK(rel(fa.correction(1, kBits), -3.3197404318) < 1e-9);
    CHECK(rel(fa.correction(2, kBits), 7.9727292073) < 1e-9);
    CHECK(rel(fa.rate.to_bigfloat(kBits), 55.3012001942) < 1e-11);

    const AsymExpansion& me = analyzed(ExtremeKind::Mixed34Edge).expansion;
    CHECK(rel(me.stokes(kBits), 1.4826787729) < 1e-9);
    CHECK(rel(me.correction(1, kBits), -7.2166440681) < 1e-9);
    CHECK(rel(me.correction(2, kBits), 37.5616277128) < 1e-9);

    const AsymExpansion& mf = analyzed(ExtremeKind::Mixed34Face).expansion;
    CHECK(rel(mf.stokes(kBits), 0.2023938212) < 1e-9);
    CHECK(rel(mf.correction(1, kBits), -3.2617202693) < 1e-9);
}

TEST_CASE("closed-form expansion gives the same constants numerically") {
    for (ExtremeKind k : edge_kinds()) {
        INFO(kind_name(k));
        NumericAsym n = closed_form_asymptotics(k, 2, kBits);
        const AsymExpansion& e = analyzed(k).expansion;
        CHECK(n.exponent == Rat(-7, 2));
        CHECK(rel(n.t0, analyzed(k).sing.t0.to_double()) < 1e-14);
        CHECK(rel(n.stokes, e.stokes(kBits).to_double()) < 1e-12);
        for (int l = 1; l <= 2; ++l) CHECK(rel(n.d[l - 1], e.correction(l, kBits).to_double()) < 1e-12);
    }
}

TEST_CASE("asymptotic partial sums against exact coefficients") {
    CheckReport even = asymptotic_check(analyzed(ExtremeKind::EdgeEven), {100}, 2);
    CHECK(even.rows[0].rel_error.to_double() < 1e-4);
    CheckReport all = asymptotic_check(analyzed(ExtremeKind::EdgeAll), {200}, 3);
    CHECK(all.rows[0].rel_error.to_double() < 1e-6);

    // Errors with two corrections fall like n^-3 for every kind.
    for (ExtremeKind k : all_kinds()) {
        INFO(kind_name(k));
        CheckReport rep = asymptotic_check(analyzed(k), {50, 100, 200}, 2);
        REQUIRE(rep.rows.size() == 3);
        double e50 = rep.rows[0].rel_error.to_double(), e200 = rep.rows[2].rel_error.to_double();
        double slope = std::log(e200 / e50) / std::log(4.0);
        CHECK(slope < -2.7);
        CHECK(slope > -3.3);
        CHECK(rep.fitted_K.to_double() > 0);
    }
}

TEST_CASE("ratio test for the EdgeMin2 growth rate") {
    std::vector<Rat> f = coefficient_sequence(ExtremeKind::EdgeMin2, 101);
    double rate = 5 + 2 * std::sqrt(6.0);
    double ratio = BigFloat(f[100] / f[99], 128).to_double();
    // The raw ratio still carries the (1 + 1/n)^(-7/2) factor, about 3.4% at n = 100.
    CHECK(std::fabs(ratio / rate - 1) < 0.04);
    CHECK(std::fabs(ratio * std::pow(101.0 / 100.0, 3.5) / rate - 1) < 0.01);
}
