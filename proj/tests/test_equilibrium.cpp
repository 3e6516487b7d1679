#include <cmath>
#include <random>

#include "doctest.h"
#include "planarlim/equilibrium.hpp"

using namespace planarlim;

namespace {

constexpr long kBits = 256;

BigFloat big(const std::string& s) { return BigFloat(s, kBits); }
BigFloat big(long v) { return BigFloat(v, kBits); }
double rd(const BigFloat& a, const BigFloat& b) { return rel_diff(a, b).to_double(); }

Poly poly(std::vector<Rat> c) { return Poly(std::move(c)); }

}  // namespace

TEST_CASE("Chebyshev moments") {
    std::vector<Rat> q = cheb_moments(poly({Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}), 5);
    CHECK(q == std::vector<Rat>{Rat(6), Rat(0), Rat(4), Rat(0), Rat(1), Rat(0)});
    std::vector<Rat> x = cheb_moments(poly({Rat(0), Rat(1)}), 3);
    CHECK(x == std::vector<Rat>{Rat(0), Rat(1), Rat(0), Rat(0)});
    std::vector<Rat> one = cheb_moments(poly({Rat(1)}), 3);
    CHECK(one == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)});
    CHECK(arcsine_moment(6) == Rat(20));
    CHECK(arcsine_moment(5) == Rat(0));
}

TEST_CASE("energy of moments") {
    // Semicircle under x^2/2: alpha_2 = -1/2, beta_0 = 1, beta_2 = 1/2.
    std::vector<BigFloat> alphas{big(1), big(0), BigFloat(Rat(-1, 2), kBits)};
    std::vector<BigFloat> betas{big(1), big(0), BigFloat(Rat(1, 2), kBits)};
    CHECK(rd(energy_of_moments(alphas, betas), BigFloat(Rat(3, 4), kBits)) < 1e-70);
    std::vector<BigFloat> zeros(4, big(0));
    std::vector<BigFloat> only0{big(7), big(0), big(0), big(0)};
    CHECK(energy_of_moments(zeros, only0) == big(7));
    // alpha_n = -n beta_n / 2 gives beta_0 - (1/2) sum n beta_n^2.
    std::vector<BigFloat> b{big(2), big(3), big(-1), big(5)}, a(4, big(0));
    for (int n = 1; n < 4; ++n) a[n] = -big(n) * b[n] / big(2);
    CHECK(rd(energy_of_moments(a, b), big(2) - BigFloat(Rat(1, 2), kBits) * big(9 + 2 + 75)) < 1e-70);
    CHECK_THROWS(energy_of_moments(zeros, betas));
}

TEST_CASE("endpoints") {
    Endpoints g = solve_endpoints(PotentialSpec::from_couplings({}));
    CHECK(rd(g.c, big(1)) < 1e-60);
    CHECK(g.b.is_zero());
    CHECK(g.residual < big("1e-30"));

    Endpoints q = solve_endpoints(PotentialSpec::quartic(Rat(1), Rat(1)));
    CHECK(rd(q.c, quartic_endpoint_formula(Rat(1), Rat(1))) < 1e-60);
    CHECK(std::fabs(q.c.to_double() - 0.6589832) < 1e-6);

    Endpoints p = solve_endpoints(PotentialSpec::quartic(Rat(0), Rat(1)));
    CHECK(rd(p.c, pow(big(3), BigFloat(Rat(-1, 4), kBits))) < 1e-60);

    // The two endpoint equations hold at the maximizer and the Hessian is negative definite.
    PotentialSpec skew = PotentialSpec::polynomial(poly({Rat(0), Rat(1, 2), Rat(1, 2), Rat(0), Rat(1, 4)}));
    CHECK_FALSE(skew.even);
    Endpoints s = solve_endpoints(skew);
    CHECK(s.b.sign() < 0);
    auto [first, second] = endpoint_equations(skew, s.c, s.b);
    CHECK(rd(first, big(2)) < 1e-50);
    CHECK(abs(second) < big("1e-50"));
    CHECK(s.hessian[0][0].sign() < 0);
    CHECK((s.hessian[0][0] * s.hessian[1][1] - s.hessian[0][1] * s.hessian[1][0]).sign() > 0);

    CHECK_THROWS_WITH(solve_endpoints(PotentialSpec::polynomial(poly({Rat(0), Rat(1)})), big(1), big(0)),
                      "degenerate maximizer");
}

TEST_CASE("density and psi") {
    PotentialSpec gauss = PotentialSpec::from_couplings({});
    CHECK(rd(density(gauss, big(1), big(0), big(0)), big(1) / pi(kBits)) < 1e-70);
    CHECK(density(gauss, big(1), big(0), big(3)).is_zero());

    PotentialSpec quartic = PotentialSpec::quartic(Rat(0), Rat(1));
    Endpoints e = solve_endpoints(quartic);
    std::vector<BigFloat> p = psi_coefficients(quartic, e.c, e.b);
    BigFloat c3 = pow(e.c, 3);
    REQUIRE(p.size() == 3);
    CHECK(rd(p[0], big(2) * c3) < 1e-60);
    CHECK(abs(p[1]) < big("1e-70"));
    CHECK(rd(p[2], c3) < 1e-60);

    // Normalization by Gauss-Chebyshev in the variable of the support: the density over the
    // square-root weight is a polynomial, so the rule is exact.
    const int N = 16;
    BigFloat total = big(0);
    for (int k = 1; k <= N; ++k) {
        BigFloat u = big(2) * cos(pi(kBits) * BigFloat(Rat(2 * k - 1, 2 * N), kBits));
        total += psi(quartic, e.c, e.b, u) * (big(4) - u * u);
    }
    total *= e.c / big(2 * N);
    CHECK(abs(total - big(1)) < big("1e-20"));
}

TEST_CASE("full support test") {
    auto run = [](const Rat& a2) {
        PotentialSpec v = PotentialSpec::quartic(a2, Rat(1));
        Endpoints e = solve_endpoints(v);
        return full_support_test(v, e.c, e.b, 64);
    };
    SupportReport ok = run(Rat(1));
    CHECK(ok.ok);
    CHECK_FALSE(ok.boundary);
    SupportReport bad = run(Rat(-3));
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.boundary);
    SupportReport edge = run(Rat(-2));
    CHECK_FALSE(edge.ok);
    CHECK(edge.boundary);
    CHECK(edge.note.find("boundary") != std::string::npos);
    CHECK_THROWS(full_support_test(PotentialSpec::from_couplings({}), big(1), big(0), 32));

    // Convex samples have full support and a negative definite Hessian.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        Rat a2(1 + static_cast<long>(rng() % 4)), a4(static_cast<long>(rng() % 5), 3), a3(static_cast<long>(rng() % 3), 10);
        // V = a2 x^2/2 + a3 x^3/3 + a4 x^4/4 + x^6/6 is convex when a3^2 is small against a2 and a4.
        PotentialSpec v = PotentialSpec::polynomial(poly({Rat(0), Rat(0), a2 / Rat(2), a3 / Rat(3), a4 / Rat(4), Rat(0), Rat(1, 6)}));
        Endpoints e = solve_endpoints(v);
        CHECK(full_support_test(v, e.c, e.b, 64).ok);
        CHECK(e.hessian[0][0].sign() < 0);
        CHECK((e.hessian[0][0] * e.hessian[1][1] - e.hessian[0][1] * e.hessian[1][0]).sign() > 0);
    }
}

TEST_CASE("planar energy") {
    PotentialSpec gauss = PotentialSpec::from_couplings({});
    CHECK(rd(planar_energy(gauss, big(1), big(0)), BigFloat(Rat(3, 4), kBits)) < 1e-70);

    PotentialSpec pure = PotentialSpec::quartic(Rat(0), Rat(1));
    Endpoints e = solve_endpoints(pure);
    BigFloat expect = log(big(3)) / big(4) + BigFloat(Rat(3, 8), kBits);
    CHECK(abs(planar_energy(pure, e.c, e.b) - expect) < big("1e-60"));

    // Printed quartic formula: the constant 3/8 breaks the Gaussian limit; 0 matches.
    PotentialSpec q = PotentialSpec::quartic(Rat(1), Rat(1));
    Endpoints eq = solve_endpoints(q);
    BigFloat I = planar_energy(q, eq.c, eq.b);
    CHECK(abs(I - quartic_energy_formula(Rat(1), Rat(1), Rat(0))) < big("1e-60"));
    CHECK(abs(I - quartic_energy_formula(Rat(1), Rat(1), Rat(3, 8))) > big("0.1"));
    CHECK(abs(quartic_energy_formula(Rat(1), Rat(1, 1000000000), Rat(0)) - BigFloat(Rat(3, 4), kBits)) < big("1e-8"));

    // Variational consistency: alpha_n = -n beta_n / 2 on the rescaled potential V(c x + b).
    for (const PotentialSpec& v : {pure, q}) {
        Endpoints ep = solve_endpoints(v);
        // V(c x) for even quartics: coefficients of x^2 and x^4.
        Rat a2 = v.v.coeff(2) * Rat(2), a4 = v.v.coeff(4) * Rat(4);
        BigFloat v2 = BigFloat(a2, kBits) * pow(ep.c, 2) / big(2), v4 = BigFloat(a4, kBits) * pow(ep.c, 4) / big(4);
        std::vector<BigFloat> beta{v2 * big(2) + v4 * big(6), big(0), v2 + v4 * big(4), big(0), v4};
        std::vector<BigFloat> alpha(5, big(0));
        for (int n = 1; n < 5; ++n) alpha[n] = -big(n) * beta[n] / big(2);
        CHECK(abs(energy_of_moments(alpha, beta) - log(ep.c) - planar_energy(v, ep.c, ep.b)) < big("1e-60"));
    }

    // Criticality: the energy expression as a function of (c, b) is stationary at the maximizer.
    PotentialSpec skew = PotentialSpec::polynomial(poly({Rat(0), Rat(1, 2), Rat(1, 2), Rat(0), Rat(1, 4)}));
    for (const PotentialSpec& v : {q, skew}) {
        Endpoints ep = solve_endpoints(v);
        BigFloat h = big("1e-8");
        BigFloat I0 = planar_energy(v, ep.c, ep.b);
        BigFloat dc = (planar_energy(v, ep.c + h, ep.b) - planar_energy(v, ep.c - h, ep.b)) / (big(2) * h);
        BigFloat db = (planar_energy(v, ep.c, ep.b + h) - planar_energy(v, ep.c, ep.b - h)) / (big(2) * h);
        CHECK(abs(dc / I0) < big("1e-6"));
        CHECK(abs(db / I0) < big("1e-6"));
    }
}

TEST_CASE("raw potentials agree with polynomial mode") {
    PotentialSpec raw = PotentialSpec::raw([](const BigFloat& x) { return x * x / BigFloat(2L, x.precision()) + pow(x, 4) / BigFloat(4L, x.precision()); },
                                           [](const BigFloat& x) { return x + pow(x, 3); },
                                           [](const BigFloat& x) { return BigFloat(1L, x.precision()) + BigFloat(3L, x.precision()) * x * x; },
                                           true, 64);
    PotentialSpec poly_mode = PotentialSpec::quartic(Rat(1), Rat(1));
    Endpoints a = solve_endpoints(raw), b = solve_endpoints(poly_mode);
    CHECK(rd(a.c, b.c) < 1e-60);
    CHECK(rd(psi(raw, a.c, a.b, big("0.7")), psi(poly_mode, b.c, b.b, big("0.7"))) < 1e-50);
    CHECK(std::fabs((planar_energy(raw, a.c, a.b) - planar_energy(poly_mode, b.c, b.b)).to_double()) < 1e-13);
}

TEST_CASE("arcsine potential and its quadrature") {
    CHECK(arcsine_potential(big(1)).is_zero());
    CHECK(arcsine_potential(big(2)).is_zero());
    CHECK(rd(arcsine_potential(BigFloat(Rat(5, 2), kBits)), log(big(2))) < 1e-70);
    CHECK(rd(arcsine_potential(BigFloat(Rat(-5, 2), kBits)), log(big(2))) < 1e-70);
    for (double x : {2.001, 2.5, 3.0, 7.5, -4.0}) {
        INFO(x);
        CHECK(std::fabs(arcsine_potential_quadrature(x) - arcsine_potential(BigFloat(x, 128)).to_double()) < 1e-10);
    }
    for (double x : {0.0, 0.3, 1.0, -1.7, 1.999, 2.0}) {
        INFO(x);
        CHECK(std::fabs(arcsine_potential_quadrature(x)) < 1e-10);
    }
}

TEST_CASE("discretized minimizer") {
    DiscreteResult g = discretized_minimizer(PotentialSpec::from_couplings({}), -2.4, 2.4, 240);
    CHECK(std::fabs(g.energy - 0.75) < 1e-3);
    CHECK(g.energy > 0.75 - 1e-6);
    DiscreteResult p = discretized_minimizer(PotentialSpec::quartic(Rat(0), Rat(1)), -1.9, 1.9, 240);
    CHECK(std::fabs(p.energy - 0.649653) < 1e-3);
    PotentialSpec q = PotentialSpec::quartic(Rat(1), Rat(1));
    Endpoints e = solve_endpoints(q);
    DiscreteResult d = discretized_minimizer(q, -1.9, 1.9, 240);
    CHECK(std::fabs(d.energy - planar_energy(q, e.c, e.b).to_double()) < 1e-3);
    CHECK_THROWS(discretized_minimizer(q, -1, 1, 100));

    // A potential without symmetry, where b != 0 enters the energy formula.
    PotentialSpec skew = PotentialSpec::polynomial(poly({Rat(0), Rat(1, 2), Rat(1, 2), Rat(0), Rat(1, 4)}));
    Endpoints es = solve_endpoints(skew);
    DiscreteResult ds = discretized_minimizer(skew, -2.2, 1.8, 240);
    CHECK(std::fabs(ds.energy - planar_energy(skew, es.c, es.b).to_double()) < 1e-4);
}

TEST_CASE("product identity for polynomials") {
    for (int k = 0; k <= 8; ++k) {
        std::vector<Rat> c(k + 1, Rat(0));
        c[k] = Rat(1);
        auto [lhs, rhs] = moment_product_identity(poly(c));
        CHECK(lhs == rhs);
    }
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rat> c;
        int d = static_cast<int>(rng() % 7);
        for (int i = 0; i <= d; ++i) c.emplace_back(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
        auto [lhs, rhs] = moment_product_identity(poly(c));
        CHECK(lhs == rhs);
    }
    // A case where both sides are nonzero.
    auto [l, r] = moment_product_identity(poly({Rat(0), Rat(1), Rat(1)}));
    CHECK(l == r);
    CHECK_FALSE(l.is_zero());
}
