#include <map>

#include "doctest.h"
#include "planarlim/reference_tables.hpp"
#include "planarlim/planar.hpp"

using namespace planarlim;

namespace {

const PlanarResult& pipeline14() {
    static const PlanarResult r = f0_multivariate(14);
    return r;
}

void check_t_coeffs(const USeries& s, const std::vector<Rat>& expected) {
    for (size_t n = 0; n < expected.size(); ++n) {
        INFO("t^" << n + 1);
        CHECK(s.coeff_t(Rat(static_cast<long>(n + 1))) == expected[n]);
    }
}

bool is_nonnegative_integer(const Rat& c) { return c.is_integer() && c.sign() >= 0; }

BasisPtr face_basis(std::vector<int> vars, int half_cap) {
    return std::make_shared<MonomialBasis>(std::move(vars), Grading::Face, half_cap);
}

}  // namespace

TEST_CASE("trivial cap gives R = 1 and S = 0") {
    RSPair rs = solve_RS(0);
    CHECK(rs.R.constant_term() == Rat(1));
    CHECK(rs.R.terms().size() == 1);
    CHECK(rs.S.is_zero());
}

TEST_CASE("low-order coefficients of R and S") {
    RSPair rs = solve_RS(6);
    CHECK(rs.R.coefficient(Partition::from_parts({2})) == Rat(1));
    CHECK(rs.S.coefficient(Partition::from_parts({3})) == Rat(2));
    CHECK(rs.R.coefficient(Partition::from_parts({4})) == Rat(3));
    CHECK(rs.S.coefficient(Partition::from_parts({1, 2})) == Rat(1));
    CHECK(rs.S.coefficient(Partition::from_parts({1, 1, 3})) == Rat(1));
    CHECK(rs.R.coefficient(Partition::from_parts({2, 2})) == Rat(1));
}

TEST_CASE("R, S and F0 match the bundled reference tables") {
    const PlanarResult& r = pipeline14();
    for (auto& [p, c] : reference_R()) {
        INFO(p.str());
        CHECK(r.RS.R.coefficient(p) == c);
    }
    for (auto& [p, c] : reference_S()) {
        INFO(p.str());
        CHECK(r.RS.S.coefficient(p) == c);
    }
    for (auto& [p, c] : reference_F0()) {
        INFO(p.str());
        CHECK(r.F0.coefficient(p) == c);
    }
    CHECK(r.F0.coefficient(Partition::from_parts({1, 1})) == Rat(1, 2));
    CHECK(r.F0.coefficient(Partition::from_parts({4, 4})) == Rat(9, 8));
    CHECK(r.F0.coefficient(Partition::from_parts({3, 3})) == Rat(2, 3));
    CHECK(r.F0.coefficient(Partition::from_parts({10})) == Rat(21, 5));
    CHECK(r.F0.coefficient(Partition::from_parts({4, 6})) == Rat(6));
}

TEST_CASE("the solution is a fixed point with nonnegative integer coefficients") {
    const RSPair& rs = pipeline14().RS;
    RSPair next = apply_H(rs);
    CHECK(next.R == rs.R);
    CHECK(next.S == rs.S);
    for (auto& [p, c] : rs.R.terms()) CHECK(is_nonnegative_integer(c));
    for (auto& [p, c] : rs.S.terms()) CHECK(is_nonnegative_integer(c));
}

TEST_CASE("F0 lives on even weights") {
    for (auto& [p, c] : pipeline14().F0.terms()) CHECK(p.weight() % 2 == 0);
}

TEST_CASE("the even solver agrees with the general one") {
    MultiSeries Re = solve_R_even(12);
    CHECK(Re.coefficient(Partition::from_parts({4})) == Rat(3));
    RSPair rs = solve_RS(12);
    for (auto& [p, c] : rs.R.terms()) {
        bool even = true;
        for (auto [j, m] : p.parts()) even = even && j % 2 == 0;
        if (even) CHECK(Re.coefficient(p) == c);
    }
    // a_{2n} -> t^n: (1 + 4t - sqrt(1 - 8t)) / (8t) = 1 + t + 4t^2 + 20t^3 + 112t^4 + ...
    USeries Rt = grade_specialize(Re, Grading::Edge, 12);
    CHECK(Rt.coeff_t(Rat(1)) == Rat(1));
    CHECK(Rt.coeff_t(Rat(2)) == Rat(4));
    CHECK(Rt.coeff_t(Rat(3)) == Rat(20));
    CHECK(Rt.coeff_t(Rat(4)) == Rat(112));
}

TEST_CASE("edge extremes reproduce the published expansions") {
    check_t_coeffs(pipeline14().F0_edge,
                   {Rat(1), Rat(9, 4), Rat(9), Rat(189, 4), Rat(1458, 5), Rat(8019, 4), Rat(104247, 7)});
    // Even extreme: solve in even variables up to weight 16 to reach t^8.
    auto B = MonomialBasis::even_by_weight(16);
    MultiSeries R = solve_R_even(B);
    USeries Re = grade_specialize(R, Grading::Edge, 16);
    USeries F = f0_edge(Re, USeries(Re.cap(), Rat(0)));
    check_t_coeffs(F, {Rat(1, 2), Rat(3, 4), Rat(2), Rat(7), Rat(144, 5), Rat(132), Rat(4576, 7), Rat(3432)});
}

TEST_CASE("edge integrand identity carries the constant -1") {
    const PlanarResult& r = pipeline14();
    USeries Re = grade_specialize(r.RS.R, Grading::Edge, 14);
    USeries Se = grade_specialize(r.RS.S, Grading::Edge, 14);
    USeries F = r.F0_edge;
    USeries t = USeries::t(Rat(0), F.cap());
    USeries lhs = t * (t * F).d_dt().d_dt();
    USeries one = USeries::constant(Rat(1), Re.cap());
    USeries rhs = Rat(1, 2) * (Rat(2) * Re * Se * Se + Re * Re - one);
    int cap = std::min(lhs.cap(), rhs.cap());
    CHECK(cap >= 12);
    CHECK(lhs.truncate(cap) == rhs.truncate(cap));
    // Without the -1 the constant term would survive.
    CHECK(Rat(1, 2) * (Rat(2) * Re * Se * Se + Re * Re).coeff_u(0) != lhs.coeff_u(0));
}

TEST_CASE("face extremes reproduce the published expansions") {
    // Even variables a_4, a_6, ...: face degree n - 1 for a_{2n}; t^10 needs a_22.
    std::vector<int> even;
    for (int j = 4; j <= 22; j += 2) even.push_back(j);
    MultiSeries Rf = solve_R_even(face_basis(even, 20));
    USeries R = grade_specialize(Rf, Grading::Face, 20);
    USeries F = f0_face(R);
    check_t_coeffs(F, {Rat(1, 2), Rat(47, 24), Rat(49, 4), Rat(11839, 120), Rat(9283, 10), Rat(3260543, 336),
                       Rat(18387797, 168), Rat(941448191, 720), Rat(490223647, 30), Rat(93171535189, 440)});
    // Face identity: (t^2 F)'' = log R.
    USeries t = USeries::t(Rat(0), F.cap());
    CHECK((t * t * F).d_dt().d_dt() == log(R).truncate((t * t * F).d_dt().d_dt().cap()));

    std::vector<int> all;
    for (int j = 3; j <= 14; ++j) all.push_back(j);
    RSPair rs = solve_RS(face_basis(all, 12));
    USeries Fa = f0_face(grade_specialize(rs.R, Grading::Face, 12));
    check_t_coeffs(Fa, {Rat(7, 6), Rat(109, 8), Rat(15631, 60), Rat(256629, 40), Rat(38720767, 210),
                        Rat(658811733, 112)});
}

TEST_CASE("face specialization of the weight pipeline agrees where it is exact") {
    const PlanarResult& r = pipeline14();
    CHECK(r.F0_face.cap() == 4);
    CHECK(r.F0_face.coeff_t(Rat(1)) == Rat(7, 6));
    CHECK(r.F0_face.coeff_t(Rat(2)) == Rat(109, 8));
}

TEST_CASE("coefficient sums respect the 8^n and 12^n bounds") {
    const MultiSeries& F0 = pipeline14().F0;
    BoundReport b1 = coefficient_bound_report(F0, 1);
    CHECK(b1.sum_all == Rat(1));
    CHECK(b1.sum_even == Rat(1, 2));
    CHECK(b1.bound_ok);
    BoundReport b2 = coefficient_bound_report(F0, 2);
    CHECK(b2.sum_all == Rat(9, 4));
    for (int n = 1; n <= 7; ++n) CHECK(coefficient_bound_report(F0, n).bound_ok);
    CHECK_THROWS(coefficient_bound_report(F0, 8));
    // Sums over weight 2n are the t^n coefficients of the edge extreme.
    for (int n = 1; n <= 7; ++n) CHECK(coefficient_bound_report(F0, n).sum_all == pipeline14().F0_edge.coeff_t(Rat(n)));
}

TEST_CASE("rescaling a_n by r^n scales each coefficient by r^weight") {
    const MultiSeries& F0 = pipeline14().F0;
    Rat r(3, 2);
    std::map<int, Rat> vals;
    for (int j = 1; j <= 14; ++j) vals[j] = pow(r, j);
    // Edge specialization with a_j -> r^j t^(j/2) equals the unscaled one at t -> r^2 t.
    USeries scaled = grade_specialize(F0, Grading::Edge, 14, vals);
    for (int n = 1; n <= 7; ++n) CHECK(scaled.coeff_t(Rat(n)) == pipeline14().F0_edge.coeff_t(Rat(n)) * pow(r, 2 * n));
}
