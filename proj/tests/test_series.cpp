#include <random>

#include "doctest.h"
#include "planarlim/reference_tables.hpp"
#include "planarlim/multiseries.hpp"
#include "planarlim/series.hpp"

using namespace planarlim;

namespace {

USeries from_t(const std::vector<Rat>& t_coeffs, int t_cap) {
    std::vector<Rat> u(2 * t_cap + 1, Rat(0));
    for (size_t i = 0; i < t_coeffs.size() && static_cast<int>(i) <= t_cap; ++i) u[2 * i] = t_coeffs[i];
    return USeries(0, u, 2 * t_cap, Rat(0));
}

USeries random_series(std::mt19937& rng, int cap, bool unit) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    std::vector<Rat> c(cap + 1);
    for (auto& x : c) x = Rat(num(rng), den(rng));
    if (unit) c[0] = Rat(1);
    return USeries(0, c, cap, Rat(0));
}

}  // namespace

TEST_CASE("log(1 + t) has the alternating harmonic coefficients") {
    USeries one_plus_t = from_t({Rat(1), Rat(1)}, 8);
    USeries L = log(one_plus_t);
    CHECK(L.cap() == 16);
    for (int n = 1; n <= 8; ++n) CHECK(L.coeff_t(Rat(n)) == Rat(n % 2 ? 1 : -1, n));
    CHECK(L.coeff_t(Rat(0)) == Rat(0));
}

TEST_CASE("exp and log invert each other on random unit series") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        USeries s = random_series(rng, 12, true);
        CHECK(exp(log(s)) == s);
        USeries z = random_series(rng, 12, false);
        z = z - USeries::constant(z.coeff_u(0), 12);
        CHECK(log(exp(z)) == z);
    }
}

TEST_CASE("products track precision from both factors") {
    USeries a = USeries::monomial(Rat(1), 2, 10);  // t, known through u^10
    USeries b = from_t({Rat(1), Rat(3)}, 3);      // known through u^6
    USeries p = a * b;
    CHECK(p.cap() == 8);
    CHECK(p.coeff_t(Rat(1)) == Rat(1));
    CHECK(p.coeff_t(Rat(2)) == Rat(3));
    CHECK_THROWS(p.coeff_u(9));
}

TEST_CASE("inverse, sqrt and pow agree") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        USeries s = random_series(rng, 10, true);
        CHECK(s * s.inverse() == USeries::constant(Rat(1), 10));
        CHECK(sqrt(s * s) == s);
        CHECK(s.pow(3) == s * s * s);
        CHECK(s.pow(-2) * s.pow(2) == USeries::constant(Rat(1), 10));
    }
}

TEST_CASE("t-derivative and t-antiderivative act on half-integer exponents") {
    // t^(3/2) -> (3/2) t^(1/2)
    USeries s = USeries::monomial(Rat(1), 3, 9);
    USeries d = s.d_dt();
    CHECK(d.coeff_t(Rat(1, 2)) == Rat(3, 2));
    CHECK(d.cap() == 7);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        USeries r = random_series(rng, 11, false);
        CHECK(r.integrate_t().d_dt() == r);
        CHECK(r.integrate_u().d_du() == r);
    }
    CHECK_THROWS(USeries::monomial(Rat(1), -2, 4).integrate_t());
}

TEST_CASE("composition matches direct substitution") {
    // 1/(1 - x) composed with x = u + u^2 equals 1/(1 - u - u^2): Fibonacci numbers.
    USeries geo(0, std::vector<Rat>(13, Rat(1)), 12, Rat(0));  // 1 + u + u^2 + ... in u
    USeries x = USeries(0, {Rat(0), Rat(1), Rat(1)}, 12, Rat(0));
    USeries c = geo.compose(x);
    Rat f0(1), f1(1);
    CHECK(c.coeff_u(0) == Rat(1));
    CHECK(c.coeff_u(1) == Rat(1));
    for (int k = 2; k <= c.cap(); ++k) {
        Rat f2 = f0 + f1;
        CHECK(c.coeff_u(k) == f2);
        f0 = f1;
        f1 = f2;
    }
    CHECK(c.cap() == 12);
}

TEST_CASE("truncation is coherent with arithmetic") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        USeries a = random_series(rng, 14, true), b = random_series(rng, 14, false);
        CHECK((a * b).truncate(8) == a.truncate(8) * b.truncate(8));
        CHECK(log(a).truncate(6) == log(a.truncate(6)));
    }
}

TEST_CASE("setting t = 1 sums the known coefficients") {
    CHECK(set_t_one(from_t({Rat(1), Rat(1, 2), Rat(1, 3)}, 2)) == Rat(11, 6));
}

TEST_CASE("partitions carry weight, length and symmetry factor") {
    Partition p = Partition::from_parts({4, 4, 1});
    CHECK(p.weight() == 9);
    CHECK(p.length() == 3);
    CHECK(p.multiplicity(4) == 2);
    CHECK(p.symmetry_factor() == Rat(2 * 16));
    CHECK(p.str() == "a_1*a_4^2");
    CHECK(parse_monomial("a1*a4^2") == p);
    CHECK(parse_monomial("a_1*a_4^2") == p);
    CHECK(parse_monomial("1").empty());
    CHECK(Partition::from_parts({1}) * Partition::from_parts({4, 4}) == p);
}

TEST_CASE("monomial bases enumerate by degree with a consistent product table") {
    auto B = MonomialBasis::by_weight(6);
    // p(0) + ... + p(6) = 1 + 1 + 2 + 3 + 5 + 7 + 11
    CHECK(B->size() == 30);
    for (int i = 0; i < B->size(); ++i)
        for (int j = 0; j < B->size(); ++j) {
            int k = B->product(i, j);
            Partition prod = B->monomial(i) * B->monomial(j);
            if (prod.weight() <= 6)
                CHECK(k == B->index_of(prod));
            else
                CHECK(k == -1);
        }
    auto E = MonomialBasis::even_by_weight(8);
    for (int i = 0; i < E->size(); ++i)
        for (auto [j, m] : E->monomial(i).parts()) CHECK(j % 2 == 0);
}

TEST_CASE("grade specialization is a ring homomorphism") {
    auto B = MonomialBasis::by_weight(8);
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> num(-5, 5);
    for (int trial = 0; trial < 5; ++trial) {
        MultiSeries x(B), y(B);
        for (int i = 0; i < B->size(); ++i) {
            x.set_coefficient(B->monomial(i), Rat(num(rng)));
            y.set_coefficient(B->monomial(i), Rat(num(rng)));
        }
        std::map<int, Rat> vals{{1, Rat(2)}, {3, Rat(-1, 3)}};
        USeries sx = grade_specialize(x, Grading::Edge, 8, vals);
        USeries sy = grade_specialize(y, Grading::Edge, 8, vals);
        CHECK(grade_specialize(x * y, Grading::Edge, 8, vals) == sx * sy);
        CHECK(grade_specialize(x + y, Grading::Edge, 8, vals) == sx + sy);
    }
    CHECK_THROWS(grade_specialize(MultiSeries(B), Grading::Edge, 9));
    CHECK_THROWS(grade_specialize(MultiSeries::var(B, 1), Grading::Face, 1));
}

TEST_CASE("multivariate log inverts the exponential series") {
    auto B = MonomialBasis::by_weight(7);
    MultiSeries a1 = MultiSeries::var(B, 1), a2 = MultiSeries::var(B, 2);
    // log(1 + a_1) through weight 7.
    MultiSeries L = (MultiSeries::constant(B, Rat(1)) + a1).log();
    for (int m = 1; m <= 7; ++m) CHECK(L.coefficient(Partition({{1, m}})) == Rat(m % 2 ? 1 : -1, m));
    MultiSeries prod = (MultiSeries::constant(B, Rat(1)) + a1) * (MultiSeries::constant(B, Rat(1)) + a2);
    CHECK(prod.log() == (MultiSeries::constant(B, Rat(1)) + a1).log() + (MultiSeries::constant(B, Rat(1)) + a2).log());
}
