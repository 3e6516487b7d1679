#include <random>

#include "doctest.h"
#include "planarlim/identities.hpp"
#include "planarlim/mpoly.hpp"
#include "planarlim/numberfield.hpp"
#include "planarlim/roots.hpp"

using namespace planarlim;

namespace {

Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    return Rat(num(rng), den(rng));
}

BivarPoly T() { return MPoly::variable(bivar_vars(), "t"); }
BivarPoly Y() { return MPoly::variable(bivar_vars(), "y"); }
BivarPoly C(const Rat& c) { return MPoly::constant(bivar_vars(), c); }

}  // namespace

TEST_CASE("rationals stay normalized under randomized ring laws") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        Rat n = Rat(a.num() * 6, a.den() * 6);
        CHECK(n == a);
        CHECK(n.den() == a.den());
        CHECK(a.den() > 0);
    }
    CHECK(Rat::parse("-6/4").str() == "-3/2");
    CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("resultant examples") {
    // y^2 - t and y - 1 share a root exactly when t = 1.
    Poly r = resultant(Y() * Y() - T(), Y() - C(1), "y");
    CHECK(primitive_part(r) == primitive_part(Poly({Rat(1), Rat(-1)})));

    BivarPoly even = C(4) * T() * Y() * Y() - (C(1) + C(4) * T()) * Y() + T() + C(1);
    Poly d = discriminant(even, "y");
    // (1 + 4t)^2 - 16t(t + 1) = 1 - 8t, times the leading coefficient 4t.
    CHECK(primitive_part(d) == Poly({Rat(0), Rat(-1), Rat(8)}));

    BivarPoly all = C(9) * T() * Y() * Y() - (C(12) * T() + C(1)) * Y() + C(1);
    // (12t + 1)^2 - 36t times the leading coefficient 9t.
    CHECK(primitive_part(discriminant(all, "y")) == Poly({Rat(0), Rat(1), Rat(-12), Rat(144)}));

    CHECK_THROWS_WITH(resultant(T(), T() + C(1), "y"), "nothing to eliminate");
}

TEST_CASE("resultant vanishes exactly at common roots of random factored instances") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Rat r1 = random_rat(rng), r2 = random_rat(rng), r3 = random_rat(rng);
        // p = (y - t - r1)(y + r2), q = (y - 2t - r3): common root iff t + r1 = 2t + r3 or -r2 = 2t + r3.
        BivarPoly p = (Y() - T() - C(r1)) * (Y() + C(r2));
        BivarPoly q = Y() - C(2) * T() - C(r3);
        Poly res = resultant(p, q, "y");
        CHECK(res.eval(r1 - r3).is_zero());
        CHECK(res.eval((-r2 - r3) / Rat(2)).is_zero());
        CHECK(res.degree() == 2);
    }
}

TEST_CASE("real root isolation") {
    auto roots = isolate_real_roots(Poly({Rat(1), Rat(-8)}), Rat(0), Rat(1));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].lo <= Rat(1, 8));
    CHECK(roots[0].hi >= Rat(1, 8));

    Poly quartic({Rat(-11), Rat(-128), Rat(41088), Rat(-20480), Rat(4096)});
    auto q = isolate_real_roots(quartic, Rat(0), Rat(1));
    REQUIRE(q.size() == 1);
    CHECK(rel_diff(q[0].approx, BigFloat("0.0180827901833", 256)).to_double() < 1e-11);

    Poly quintic({Rat(0), Rat(0), Rat(-5), Rat(96), Rat(-96), Rat(32)});
    auto f = isolate_real_roots(quintic, Rat(1, 1000), Rat(1));
    REQUIRE(f.size() == 1);
    BigFloat expect = (BigFloat(2L, 256) - BigFloat(3L, 256) / pow(BigFloat(2L, 256), BigFloat(Rat(2, 3), 256))) / BigFloat(2L, 256);
    CHECK(rel_diff(f[0].approx, expect).to_double() < 1e-60);

    // Roots at the outer endpoints are excluded; rational roots inside are exact or isolated.
    auto e = isolate_real_roots(Poly({Rat(0), Rat(-1), Rat(1)}), Rat(0), Rat(1));
    CHECK(e.empty());
    auto m = isolate_real_roots(Poly({Rat(1, 4), Rat(-1), Rat(1)}) * Poly({Rat(-3, 4), Rat(1)}), Rat(0), Rat(1));
    CHECK(m.size() == 2);

    // Intervals not starting at 0, including negative endpoints.
    auto s = isolate_real_roots(Poly({Rat(-4), Rat(32)}), Rat(-9, 8), Rat(9, 8));
    REQUIRE(s.size() == 1);
    CHECK(s[0].lo <= Rat(1, 8));
    CHECK(s[0].hi >= Rat(1, 8));
    auto pm = isolate_real_roots(Poly({Rat(-1, 4), Rat(0), Rat(1)}) * Poly({Rat(3, 2), Rat(1)}), Rat(-2), Rat(2));
    CHECK(pm.size() == 3);
    auto neg = isolate_real_roots(Poly({Rat(-2), Rat(0), Rat(1)}), Rat(-3), Rat(-1));
    REQUIRE(neg.size() == 1);
    CHECK(rel_diff(neg[0].approx, -sqrt(BigFloat(2L, 256))).to_double() < 1e-60);
}

TEST_CASE("number field arithmetic in the face-even singularity field") {
    Poly m({Rat(5), Rat(-96), Rat(96), Rat(-32)});  // 5 - 96t + 96t^2 - 32t^3
    auto roots = isolate_real_roots(m, Rat(0), Rat(1, 2));
    REQUIRE(roots.size() == 1);
    FieldPtr F = make_field(m, roots[0]);
    NumberFieldElem th = NumberFieldElem::generator(F);
    CHECK(m.eval(th).is_zero());
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        auto rnd = [&] {
            return NumberFieldElem(F, Poly({random_rat(rng), random_rat(rng), random_rat(rng)}));
        };
        NumberFieldElem a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a * a.inverse() == NumberFieldElem(F, Rat(1)));
    }
    // 2^(1/3) = (4 - 4 t0)/3 lies in the field.
    NumberFieldElem cbrt2 = (NumberFieldElem(F, Rat(4)) - NumberFieldElem(F, Rat(4)) * th) / NumberFieldElem(F, Rat(3));
    CHECK(cbrt2 * cbrt2 * cbrt2 == NumberFieldElem(F, Rat(2)));
}

TEST_CASE("number field splits lazily on zero divisors") {
    // Modulus (t^2 - 2)(t - 3), theta = sqrt 2.
    Poly m = Poly({Rat(-2), Rat(0), Rat(1)}) * Poly({Rat(-3), Rat(1)});
    FieldPtr F = std::make_shared<NumberField>(m, Rat(1), Rat(2));
    int attempts = 0;
    bool zero = with_field(F, [&](const FieldPtr& f) {
        ++attempts;
        NumberFieldElem th = NumberFieldElem::generator(f);
        return (th * th - NumberFieldElem(f, Rat(2))).is_zero();
    });
    CHECK(zero);
    CHECK(attempts == 2);
    CHECK(F->degree() == 2);
}

TEST_CASE("binomial identities") {
    CHECK(binomial_identity_lhs(BinomialIdentity::First, 1, 1) == Rat(1));
    CHECK(binomial_identity_lhs(BinomialIdentity::First, 1, 2) == Rat(4));
    CHECK(check_binomial_identity(BinomialIdentity::First, 1, 2));
    CHECK(binomial_identity_lhs(BinomialIdentity::Second, 0, 0) == Rat(1));
    for (long l1 = 1; l1 <= 40; ++l1)
        for (long l2 = 1; l2 <= 40; ++l2) {
            CHECK(check_binomial_identity(BinomialIdentity::First, l1, l2));
            CHECK(check_binomial_identity(BinomialIdentity::Second, l1, l2));
        }
}

TEST_CASE("telescoping certificates") {
    CHECK(check_zb_certificate(BinomialIdentity::First, {{2, 2, 1}}));
    CHECK(check_zb_certificate(BinomialIdentity::First, {{3, 5, 2}}));
    // The published companion of the second identity fails; the corrected one holds.
    CHECK_FALSE(check_zb_certificate(BinomialIdentity::Second, {{2, 3, 1}}));
    CHECK(check_zb_certificate(BinomialIdentity::Second, {{2, 3, 1}}, CertificateForm::Corrected));

    // Summing the relation over p telescopes: sum_p f(l1+1, l2, p) = sum_p f(l1, l2, p).
    for (auto which : {BinomialIdentity::First, BinomialIdentity::Second})
        for (long l1 = 1; l1 <= 20; ++l1)
            for (long l2 = 1; l2 <= 20; ++l2) {
                Rat s0(0), s1(0), tel(0);
                for (long p = 0; p <= l1 + l2 + 2; ++p) {
                    s0 += zb_f(which, l1, l2, p);
                    s1 += zb_f(which, l1 + 1, l2, p);
                    tel += zb_g(which, l1, l2, p + 1, CertificateForm::Corrected) -
                           zb_g(which, l1, l2, p, CertificateForm::Corrected);
                }
                CHECK(s1 == s0);
                CHECK(tel == s1 - s0);
                CHECK(s0 == Rat(1));
            }
}
