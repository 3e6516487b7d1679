#include <cmath>

#include "doctest.h"
#include "planarlim/closed_forms.hpp"

using namespace planarlim;

namespace {

bool close(const BigFloat& a, double b, double tol) { return std::fabs(a.to_double() - b) <= tol * std::max(1.0, std::fabs(b)); }

// f_n from the F0 series in t.
std::vector<Rat> t_coeffs(const USeries& s, int N) {
    std::vector<Rat> out;
    for (long n = 1; n <= N; ++n) out.push_back(s.coeff_t(Rat(n)));
    return out;
}

}  // namespace

TEST_CASE("kind names round trip") {
    for (ExtremeKind k : all_kinds()) CHECK(parse_kind(kind_name(k)) == k);
    CHECK_THROWS(parse_kind("edge-odd"));
    CHECK(kind_has_var(ExtremeKind::EdgeEvenMin4, 4));
    CHECK_FALSE(kind_has_var(ExtremeKind::EdgeEvenMin4, 2));
    CHECK_FALSE(kind_has_var(ExtremeKind::FaceAll, 2));
    CHECK(kind_has_var(ExtremeKind::Mixed34Face, 3));
    CHECK_FALSE(kind_has_var(ExtremeKind::Mixed34Face, 5));
}

TEST_CASE("closed forms at rational points") {
    ClosedValues all = eval_closed(ExtremeKind::EdgeAll, Rat(1, 16));
    REQUIRE(all.R);
    CHECK(all.R->exact == Rat(10, 9));
    CHECK(all.S->exact == Rat(1, 3));
    CHECK_FALSE(all.F0->exact.has_value());
    CHECK(close(all.F0->approx, 0.0747196, 1e-6));

    ClosedValues even = eval_closed(ExtremeKind::EdgeEven, Rat(3, 32));
    CHECK(even.R->exact == Rat(7, 6));
    CHECK_THROWS(eval_closed(ExtremeKind::EdgeAll, Rat(1, 10)));
    CHECK_THROWS(eval_closed(ExtremeKind::FaceAll, Rat(1, 100)));
}

TEST_CASE("radii of convergence") {
    CHECK(close(closed_radius(ExtremeKind::EdgeEven), 0.125, 1e-15));
    CHECK(close(closed_radius(ExtremeKind::EdgeAll), 1.0 / 12, 1e-15));
    CHECK(close(closed_radius(ExtremeKind::EdgeEvenMin4), 1.0 / 7, 1e-15));
    CHECK(close(closed_radius(ExtremeKind::EdgeMin2), 5 - 2 * std::sqrt(6.0), 1e-14));
    CHECK(close(closed_radius(ExtremeKind::EdgeMin3), (std::sqrt(6.0) - 2) / 4, 1e-14));
}

TEST_CASE("recurrence values") {
    CHECK(recurrence_coeffs(ExtremeKind::EdgeAll).order() == 1);
    std::vector<Rat> all = coefficient_sequence(ExtremeKind::EdgeAll, 5);
    CHECK(all[1] == Rat(9, 4));
    CHECK(all[4] == Rat(1458, 5));
    std::vector<Rat> even = coefficient_sequence(ExtremeKind::EdgeEven, 8);
    CHECK(even[1] == Rat(3, 4));
    CHECK(even[7] == Rat(3432));
    CHECK(coefficient_sequence(ExtremeKind::EdgeMin3, 7)[6] == Rat(11175, 14));
    CHECK(coefficient_sequence(ExtremeKind::EdgeEvenMin4, 4)[3] == Rat(23, 8));
    CHECK(coefficient_sequence(ExtremeKind::EdgeMin2, 6)[5] == Rat(1076, 3));
    CHECK_THROWS_WITH(recurrence_coeffs(ExtremeKind::FaceAll), "no printed recurrence");
}

TEST_CASE("factorial formulas agree with the recurrences") {
    CHECK(fn_closed(ExtremeKind::EdgeAll, 3) == Rat(9));
    CHECK(fn_closed(ExtremeKind::EdgeEven, 4) == Rat(7));
    for (ExtremeKind k : {ExtremeKind::EdgeEven, ExtremeKind::EdgeAll}) {
        std::vector<Rat> f = coefficient_sequence(k, 200);
        for (long n = 1; n <= 200; ++n) {
            INFO(kind_name(k) << " n = " << n);
            REQUIRE(fn_closed(k, n) == f[n - 1]);
        }
    }
    CHECK_THROWS(fn_closed(ExtremeKind::EdgeMin2, 3));
}

TEST_CASE("recurrences agree with the multivariate series") {
    const int N = 8;
    for (ExtremeKind k : edge_kinds()) {
        INFO(kind_name(k));
        ExtremeSeries es = extreme_series(k, N);
        CHECK(t_coeffs(es.F0, N) == coefficient_sequence(k, N));
    }
}

TEST_CASE("closed forms expand to the recurrence coefficients") {
    const int N = 20;
    for (ExtremeKind k : edge_kinds()) {
        INFO(kind_name(k));
        const ClosedFormRecord& rec = catalog(k);
        // F0 has a removable 1/t^2; expand with two extra orders of headroom.
        USeries t = USeries::t(Rat(0), 2 * (N + 2));
        USeries F = rec.F0_closed->series(t);
        CHECK(t_coeffs(F, N) == coefficient_sequence(k, N));
        CHECK(F.coeff_t(Rat(0)) == Rat(0));
    }
}

TEST_CASE("closed R and S match the series") {
    const int N = 8;
    for (ExtremeKind k : edge_kinds()) {
        INFO(kind_name(k));
        const ClosedFormRecord& rec = catalog(k);
        ExtremeSeries es = extreme_series(k, N);
        USeries t = USeries::t(Rat(0), 2 * (N + 2));
        USeries R = rec.R_closed->series(t);
        for (int u = 0; u <= 2 * N; ++u) CHECK(R.coeff_u(u) == es.R.coeff_u(u));
        if (!kind_even(k)) {
            USeries S = rec.S_closed->series(t);
            for (int u = 0; u < 2 * N; ++u) CHECK(S.coeff_u(u) == es.S.coeff_u(u));
        }
    }
}

TEST_CASE("algebraic and differential equations vanish on the series") {
    const int N = 30;
    for (ExtremeKind k : edge_kinds()) {
        INFO(kind_name(k));
        const ClosedFormRecord& rec = catalog(k);
        std::vector<Rat> f = coefficient_sequence(k, N + 2);
        std::vector<Rat> c(2 * (N + 2) + 1, Rat(0));
        for (int n = 1; n <= N + 2; ++n) c[2 * n] = f[n - 1];
        USeries F(0, c, 2 * (N + 2), Rat(0));
        CHECK(ode_residual(*rec.ode, F).truncate(2 * N).terms().empty());
        USeries G = F.d_dt();
        CHECK(algebraic_residual(*rec.algebraic_G0, G).truncate(2 * N).terms().empty());
    }
    ExtremeSeries es = extreme_series(ExtremeKind::EdgeAll, 10);
    CHECK(algebraic_residual(*catalog(ExtremeKind::EdgeAll).algebraic_R, es.R).terms().empty());
    CHECK(algebraic_residual(*catalog(ExtremeKind::EdgeEven).algebraic_R, extreme_series(ExtremeKind::EdgeEven, 10).R)
              .terms()
              .empty());
    CHECK(algebraic_residual(*catalog(ExtremeKind::EdgeAll).algebraic_sigma, es.S.shift_u(-1)).truncate(18).terms().empty());
}

TEST_CASE("face equations derived by elimination") {
    BivarPoly even = derive_face_algebraic(ExtremeKind::FaceEven);
    BivarPoly expected_even = bivar({{0, 0, Rat(-1)}, {1, 0, Rat(1)}, {0, 1, Rat(1)}, {2, 1, Rat(-4)},
                                     {1, 2, Rat(-4)}, {2, 2, Rat(16)}, {2, 3, Rat(-16)}});
    CHECK((even == expected_even || even == -expected_even));

    BivarPoly all = derive_face_algebraic(ExtremeKind::FaceAll);
    BivarPoly printed_all = printed_face_equation(ExtremeKind::FaceAll);
    CHECK((all == printed_all || all == -printed_all));

    USeries R = algebraic_series(all, Rat(1), 6);
    CHECK(R.coeff_t(Rat(1)) == Rat(7));
    CHECK(algebraic_series(even, Rat(1), 6).coeff_t(Rat(1)) == Rat(3));
}

TEST_CASE("face and mixed coefficient sequences agree with the series") {
    for (ExtremeKind k : {ExtremeKind::FaceEven, ExtremeKind::FaceAll, ExtremeKind::Mixed34Edge,
                          ExtremeKind::Mixed34Face}) {
        INFO(kind_name(k));
        const int N = 6;
        ExtremeSeries es = extreme_series(k, N);
        CHECK(t_coeffs(es.F0, N) == coefficient_sequence(k, N));
    }
}

TEST_CASE("mixed quartic-cubic equations") {
    for (ExtremeKind k : {ExtremeKind::Mixed34Edge, ExtremeKind::Mixed34Face}) {
        INFO(kind_name(k));
        CHECK_NOTHROW(derive_mixed_algebraic(k));
    }
    CHECK_THROWS(rs_system(ExtremeKind::EdgeAll));
}
