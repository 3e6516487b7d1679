#include "planarlim/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "planarlim/reference_tables.hpp"
#include "planarlim/asymptotics.hpp"
#include "planarlim/closed_forms.hpp"
#include "planarlim/equilibrium.hpp"
#include "planarlim/expr.hpp"
#include "planarlim/identities.hpp"
#include "planarlim/planar.hpp"
#include "planarlim/wick_oracle.hpp"

namespace planarlim {

namespace {

constexpr long kBits = 256;

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

std::string fixed(double x, int digits = 4) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

BigFloat big(const Rat& q) { return BigFloat(q, kBits); }
BigFloat big(long v) { return BigFloat(v, kBits); }

const PlanarResult& pipeline(int cap) {
    static std::map<int, PlanarResult> cache;
    auto it = cache.find(cap);
    if (it == cache.end()) it = cache.emplace(cap, f0_multivariate(cap)).first;
    return it->second;
}

const AsymResult& analyzed(ExtremeKind k) {
    static std::map<ExtremeKind, AsymResult> cache;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, analyze_kind(k, 3, kBits)).first;
    return it->second;
}

CriterionResult titled(int id, std::string title) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    return r;
}

/// Counts checks and records a note for every failed one.
class Tally {
public:
    explicit Tally(CriterionResult& r) : r_(r) {}
    bool check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            ++failures_;
            r_.notes.push_back("mismatch: " + what);
        }
        return ok;
    }
    int checks() const { return checks_; }
    int failures() const { return failures_; }

private:
    CriterionResult& r_;
    int checks_ = 0;
    int failures_ = 0;
};

std::vector<Rat> t_coeffs(const USeries& s, int from, int to) {
    std::vector<Rat> out;
    for (int n = from; n <= to; ++n) out.push_back(s.coeff_t(Rat(n)));
    return out;
}

std::string join(const std::vector<Rat>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s;
}

// The quartic generating function with the square-root term added (as printed) or subtracted.
Expr quartic_generating_function(bool printed_sign) {
    Expr t = Expr::t();
    Expr root = sqrt(Expr(1) - Expr(12) * t);
    Expr lead = Expr(1) - Expr(36) * t + Expr(162) * t * t;
    Expr radical = (Expr(1) - Expr(30) * t) * root;
    Expr num = printed_sign ? lead + radical : lead - radical;
    return num / (Expr(432) * t * t) + log((Expr(1) - root) / (Expr(6) * t)) / Expr(2);
}

USeries expand(const Expr& e, int n_max) { return e.series(USeries::t(Rat(0), 2 * (n_max + 2))); }

// Sum of the F0 coefficients of the monomials a_4^k.
std::map<int, Rat> quartic_slice(const MultiSeries& F0) {
    std::map<int, Rat> out;
    for (auto& [p, c] : F0.terms())
        if (p.parts().size() == 1 && p.parts()[0].first == 4) out[p.parts()[0].second] = c;
    return out;
}

// ---------------------------------------------------------------------------------------------

CriterionResult reference_tables() {
    CriterionResult r = titled(1, "reference tables");
    Tally tally(r);
    const PlanarResult& p = f0_multivariate(10);
    auto compare = [&](const CoefficientTable& table, const MultiSeries& s, const std::string& name) {
        for (auto& [part, c] : table) {
            Rat got = s.coefficient(part);
            tally.check(got == c, name + " " + part.str() + ": table " + c.str() + ", computed " + got.str());
        }
    };
    compare(reference_R(), p.RS.R, "R");
    compare(reference_S(), p.RS.S, "S");
    compare(reference_F0(), p.F0, "F0");
    r.pass = tally.failures() == 0;
    r.summary = std::to_string(tally.checks() - tally.failures()) + " of " + std::to_string(tally.checks()) +
                " tabulated coefficients of R, S and F0 reproduced exactly at weight cap 10";
    return r;
}

CriterionResult oracle_equivalence() {
    CriterionResult r = titled(2, "map-count oracle");
    Tally tally(r);
    auto start = std::chrono::steady_clock::now();
    MapCounts counts = connected_coefficients(kOracleDefaultCap);
    double oracle_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const MultiSeries& F0 = pipeline(8).F0;
    int compared = 0;
    for (auto& [p, genera] : counts) {
        Rat planar = genera.count(0) ? genera.at(0) : Rat(0);
        Rat f = F0.coefficient(p);
        ++compared;
        tally.check(planar == f, p.str() + ": oracle " + planar.str() + ", fixed point " + f.str());
    }
    for (auto& [p, f] : F0.terms())
        tally.check(counts.count(p) > 0 || p.empty(), p.str() + " missing from the oracle");
    tally.check(oracle_seconds < 60, "oracle took " + fixed(oracle_seconds, 1) + " s");
    r.pass = tally.failures() == 0;
    r.summary = std::to_string(compared) + " partitions of weight <= 8: genus-0 counts equal F0 exactly; oracle " +
                fixed(oracle_seconds, 2) + " s";
    return r;
}

CriterionResult edge_extremes() {
    CriterionResult r = titled(3, "edge extremes");
    Tally tally(r);
    std::vector<Rat> all_expected{Rat(1), Rat(9, 4), Rat(9), Rat(189, 4), Rat(1458, 5), Rat(8019, 4), Rat(104247, 7)};
    std::vector<Rat> all_got = t_coeffs(pipeline(14).F0_edge, 1, 7);
    tally.check(all_got == all_expected, "all-valency series: " + join(all_got));

    BasisPtr basis = MonomialBasis::even_by_weight(16);
    USeries Re = grade_specialize(solve_R_even(basis), Grading::Edge, 16);
    USeries F = f0_edge(Re, USeries(Re.cap(), Rat(0)));
    std::vector<Rat> even_expected{Rat(1, 2), Rat(3, 4), Rat(2), Rat(7), Rat(144, 5), Rat(132), Rat(4576, 7), Rat(3432)};
    std::vector<Rat> even_got = t_coeffs(F, 1, 8);
    tally.check(even_got == even_expected, "even-valency series: " + join(even_got));
    r.pass = tally.failures() == 0;
    r.summary = "all valencies through t^7 (" + join(all_got) + "); even valencies through t^8 (..., " +
                even_got[6].str() + ", " + even_got[7].str() + ")";
    return r;
}

CriterionResult face_extremes() {
    CriterionResult r = titled(4, "face extremes");
    Tally tally(r);
    std::vector<int> even;
    for (int j = 4; j <= 22; j += 2) even.push_back(j);
    auto even_basis = std::make_shared<MonomialBasis>(even, Grading::Face, 20);
    USeries Fe = f0_face(grade_specialize(solve_R_even(even_basis), Grading::Face, 20));
    std::vector<Rat> even_expected{Rat(1, 2),          Rat(47, 24),        Rat(49, 4),         Rat(11839, 120),
                                   Rat(9283, 10),      Rat(3260543, 336),  Rat(18387797, 168), Rat(941448191, 720),
                                   Rat(490223647, 30), Rat(93171535189, 440)};
    std::vector<Rat> even_got = t_coeffs(Fe, 1, 10);
    tally.check(even_got == even_expected, "even face series: " + join(even_got));

    std::vector<int> all;
    for (int j = 3; j <= 14; ++j) all.push_back(j);
    auto all_basis = std::make_shared<MonomialBasis>(all, Grading::Face, 12);
    USeries Fa = f0_face(grade_specialize(solve_RS(all_basis).R, Grading::Face, 12));
    std::vector<Rat> all_expected{Rat(7, 6),          Rat(109, 8),          Rat(15631, 60),
                                  Rat(256629, 40),    Rat(38720767, 210),   Rat(658811733, 112)};
    std::vector<Rat> all_got = t_coeffs(Fa, 1, 6);
    tally.check(all_got == all_expected, "all-valency face series: " + join(all_got));
    r.pass = tally.failures() == 0;
    r.summary = "even valencies through t^10 (last " + even_got.back().str() + "), valencies >= 3 through t^6 (last " +
                all_got.back().str() + "), R from the multivariate pipeline";
    return r;
}

CriterionResult recurrence_coherence() {
    CriterionResult r = titled(5, "closed forms and recurrences");
    Tally tally(r);
    auto closed_series = [](ExtremeKind k, int N) { return t_coeffs(expand(*catalog(k).F0_closed, N), 1, N); };
    for (ExtremeKind k : {ExtremeKind::EdgeEven, ExtremeKind::EdgeAll}) {
        const int N = 200;
        std::vector<Rat> rec = coefficient_sequence(k, N);
        std::vector<Rat> ser = closed_series(k, N);
        int bad = 0;
        for (long n = 1; n <= N; ++n)
            if (fn_closed(k, n) != rec[n - 1] || rec[n - 1] != ser[n - 1]) ++bad;
        tally.check(bad == 0, kind_name(k) + ": " + std::to_string(bad) + " disagreements for n <= 200");
    }
    for (ExtremeKind k : {ExtremeKind::EdgeEvenMin4, ExtremeKind::EdgeMin2, ExtremeKind::EdgeMin3}) {
        const int N = 50;
        std::vector<Rat> rec = coefficient_sequence(k, N);
        std::vector<Rat> ser = closed_series(k, N);
        int bad = 0;
        for (int n = 0; n < N; ++n)
            if (rec[n] != ser[n]) ++bad;
        tally.check(bad == 0, kind_name(k) + ": " + std::to_string(bad) + " disagreements for n <= 50");
    }
    r.pass = tally.failures() == 0;
    r.summary = "factorial formula, recurrence and closed-form expansion agree for n <= 200 (edge-even, edge-all); "
                "recurrence and expansion agree for n <= 50 (edge-even-min4, edge-min2, edge-min3)";
    return r;
}

CriterionResult singularities() {
    CriterionResult r = titled(6, "dominant singularities");
    Tally tally(r);
    BigFloat s6 = sqrt(big(6));
    BigFloat cbrt2 = pow(big(2), big(Rat(1, 3)));
    std::vector<std::tuple<ExtremeKind, BigFloat, std::string>> exact{
        {ExtremeKind::EdgeEven, big(Rat(1, 8)), "1/8"},
        {ExtremeKind::EdgeAll, big(Rat(1, 12)), "1/12"},
        {ExtremeKind::EdgeEvenMin4, big(Rat(1, 7)), "1/7"},
        {ExtremeKind::EdgeMin2, big(5) - big(2) * s6, "5 - 2 sqrt 6"},
        {ExtremeKind::EdgeMin3, (s6 - big(2)) / big(4), "(sqrt 6 - 2)/4"},
        {ExtremeKind::FaceEven, (big(4) - big(3) * cbrt2) / big(4), "(4 - 3 cbrt 2)/4"},
    };
    for (auto& [k, value, text] : exact) {
        double d = rel_diff(analyzed(k).sing.t0, value).to_double();
        tally.check(d < 1e-60, kind_name(k) + ": t0 differs from " + text + " by " + sci(d));
    }
    std::vector<std::pair<ExtremeKind, std::string>> printed{{ExtremeKind::FaceAll, "0.0180827901833"},
                                                             {ExtremeKind::Mixed34Edge, "0.2094195368"},
                                                             {ExtremeKind::Mixed34Face, "0.02305646139"}};
    for (auto& [k, text] : printed) {
        BigFloat t0 = analyzed(k).sing.t0;
        BigFloat p(text, kBits);
        double rel = rel_diff(t0, p).to_double();
        int decimals = static_cast<int>(text.size() - text.find('.') - 1);
        double half_unit = 0.5 * std::pow(10.0, -decimals);
        double abs_diff = std::fabs((t0 - p).to_double());
        bool ok = rel < 1e-10 || abs_diff <= half_unit;
        tally.check(ok, kind_name(k) + ": t0 = " + t0.str(16) + " vs printed " + text);
        if (ok && rel >= 1e-10)
            r.notes.push_back(kind_name(k) + ": t0 = " + t0.str(16) + " rounds to the printed " + text +
                              " (relative difference " + sci(rel) + " is rounding in the last printed digit)");
    }
    r.pass = tally.failures() == 0;
    r.summary = "growth rates 8, 12, 7, 5+2 sqrt 6, 4+2 sqrt 6 and the face-even root exact to 1e-60; "
                "face-all, mixed34-edge and mixed34-face match the printed decimals";
    return r;
}

CriterionResult asymptotic_constants() {
    CriterionResult r = titled(7, "asymptotic constants");
    Tally tally(r);
    auto field_of = [](ExtremeKind k) { return analyzed(k).expansion.field; };
    auto num = [](ExtremeKind k, const Rat& q) { return NumberFieldElem(analyzed(k).expansion.field, q); };
    auto gen = [&](ExtremeKind k) { return NumberFieldElem::generator(field_of(k)); };
    // K = pi * stokes^2 and the first two corrections, compared in Q(t0).
    auto compare = [&](ExtremeKind k, const NumberFieldElem& K, const NumberFieldElem& d1, const NumberFieldElem& d2) {
        const AsymExpansion& e = analyzed(k).expansion;
        bool ok = e.K == K && e.d[0] == d1 && e.d[1] == d2 && e.stokes_sign > 0;
        tally.check(ok, kind_name(k) + ": computed stokes " + e.stokes(kBits).str(12) + ", d1 " +
                            e.correction(1, kBits).str(12) + ", d2 " + e.correction(2, kBits).str(12) +
                            "; printed stokes " + sqrt(K.to_bigfloat(kBits) / pi(kBits)).str(12) + ", d1 " +
                            d1.to_bigfloat(kBits).str(12) + ", d2 " + d2.to_bigfloat(kBits).str(12));
        return ok;
    };
    using EK = ExtremeKind;
    compare(EK::EdgeEven, num(EK::EdgeEven, Rat(9, 16)), num(EK::EdgeEven, Rat(-25, 8)), num(EK::EdgeEven, Rat(945, 128)));
    bool all_ok = compare(EK::EdgeAll, num(EK::EdgeAll, Rat(4)), num(EK::EdgeAll, Rat(-25, 16)),
                          num(EK::EdgeAll, Rat(945, 256)));
    if (!all_ok) {
        // Independent check with the factorial formula at n = 2000.
        const long n = 2000;
        BigFloat f = big(fn_closed(EK::EdgeAll, n));
        BigFloat scale = pow(big(12), n) * pow(big(n), big(Rat(-7, 2))) / sqrt(pi(kBits));
        BigFloat x = big(Rat(1, n));
        BigFloat derived = scale * (big(1) - big(Rat(25, 8)) * x + big(Rat(945, 128)) * x * x);
        BigFloat printed = big(2) * scale * (big(1) - big(Rat(25, 16)) * x + big(Rat(945, 256)) * x * x);
        r.notes.push_back("edge-all: the factorial formula 2 (2n-1)! 3^n / (n! (n+2)!) is 12^n / 8^n times the "
                          "edge-even one, so both share d1 = -25/8, d2 = 945/128 and the stokes constant is 1/sqrt(pi); "
                          "at n = 2000 f_n / derived - 1 = " +
                          sci((f / derived - big(1)).to_double()) + ", f_n / printed - 1 = " +
                          sci((f / printed - big(1)).to_double()));
    }
    compare(EK::EdgeEvenMin4, num(EK::EdgeEvenMin4, Rat(147 * 147 * 7, 512 * 512 * 2)),
            num(EK::EdgeEvenMin4, Rat(-105, 32)), num(EK::EdgeEvenMin4, Rat(16065, 2048)));
    {
        NumberFieldElem s6 = (num(EK::EdgeMin2, Rat(5)) - gen(EK::EdgeMin2)) / num(EK::EdgeMin2, Rat(2));
        tally.check(s6 * s6 == num(EK::EdgeMin2, Rat(6)), "edge-min2: (5 - t0)/2 is not sqrt 6");
        compare(EK::EdgeMin2, num(EK::EdgeMin2, Rat(4, 27)) * s6, num(EK::EdgeMin2, Rat(-45, 32)) * s6,
                num(EK::EdgeMin2, Rat(8435, 1024)));
    }
    {
        NumberFieldElem w = num(EK::EdgeMin3, Rat(4)) * gen(EK::EdgeMin3) + num(EK::EdgeMin3, Rat(2));
        tally.check(w * w == num(EK::EdgeMin3, Rat(6)), "edge-min3: 4 t0 + 2 is not sqrt 6");
        compare(EK::EdgeMin3,
                num(EK::EdgeMin3, Rat(1024)) / (num(EK::EdgeMin3, Rat(9)) * (num(EK::EdgeMin3, Rat(267)) +
                                                                            num(EK::EdgeMin3, Rat(109)) * w)),
                num(EK::EdgeMin3, Rat(-5, 8)) * (num(EK::EdgeMin3, Rat(62)) - num(EK::EdgeMin3, Rat(23)) * w),
                num(EK::EdgeMin3, Rat(35, 64)) * (num(EK::EdgeMin3, Rat(4567)) - num(EK::EdgeMin3, Rat(1858)) * w));
    }
    {
        NumberFieldElem c = (num(EK::FaceEven, Rat(4)) - num(EK::FaceEven, Rat(4)) * gen(EK::FaceEven)) /
                            num(EK::FaceEven, Rat(3));
        tally.check(c * c * c == num(EK::FaceEven, Rat(2)), "face-even: (4 - 4 t0)/3 is not cbrt 2");
        compare(EK::FaceEven, (num(EK::FaceEven, Rat(2)) * c - num(EK::FaceEven, Rat(1))) / num(EK::FaceEven, Rat(9)),
                -(num(EK::FaceEven, Rat(243)) - num(EK::FaceEven, Rat(8)) * c) / num(EK::FaceEven, Rat(72)),
                (num(EK::FaceEven, Rat(91881)) - num(EK::FaceEven, Rat(2640)) * c - num(EK::FaceEven, Rat(5696)) * c * c) /
                    num(EK::FaceEven, Rat(10368)));
    }
    {
        const AsymExpansion& e = analyzed(EK::FaceAll).expansion;
        std::vector<std::pair<BigFloat, double>> pairs{{e.stokes(kBits), 0.1786898225},
                                                       {e.correction(1, kBits), -3.3197404318},
                                                       {e.correction(2, kBits), 7.9727292073}};
        for (auto& [got, want] : pairs) {
            double d = std::fabs(got.to_double() / want - 1);
            tally.check(d < 1e-8, "face-all: " + got.str(12) + " vs printed " + fixed(want, 10));
        }
        // The printed exact forms in Q(t0).
        NumberFieldElem t = gen(EK::FaceAll);
        auto q = [&](long v) { return num(EK::FaceAll, Rat(v)); };
        NumberFieldElem K = (q(34133) - q(914556) * t + q(449856) * t * t - q(89344) * t * t * t) / q(176868);
        NumberFieldElem d1 = -(q(36145645) + q(79913928) * t - q(39094848) * t * t + q(7808512) * t * t * t) / q(11319552);
        NumberFieldElem d2 =
            (q(7806311269L) + q(20984001752L) * t - q(10129539392L) * t * t + q(2006727168L) * t * t * t) / q(1026306048);
        bool exact = e.K == K && e.d[0] == d1 && e.d[1] == d2;
        r.notes.push_back(std::string("face-all: the printed closed forms of the constants in Q(t0) ") +
                          (exact ? "hold exactly" : "do not hold exactly; the decimals are what is checked"));
    }
    r.pass = tally.failures() == 0;
    r.summary = "exact comparison in Q(t0) for six kinds, decimals for face-all; " + std::to_string(tally.failures()) +
                " of " + std::to_string(tally.checks()) + " comparisons fail";
    return r;
}

CriterionResult asymptotic_convergence() {
    CriterionResult r = titled(8, "asymptotic convergence");
    Tally tally(r);
    std::string slopes;
    for (ExtremeKind k : all_kinds()) {
        CheckReport rep = asymptotic_check(analyzed(k), {50, 100, 200}, 2, kBits);
        double e50 = rep.rows[0].rel_error.to_double(), e100 = rep.rows[1].rel_error.to_double(),
               e200 = rep.rows[2].rel_error.to_double();
        double slope = std::log(e200 / e50) / std::log(4.0);
        bool ok = e50 > e100 && e100 > e200 && slope > -3.3 && slope < -2.7;
        tally.check(ok, kind_name(k) + ": errors " + sci(e50) + ", " + sci(e100) + ", " + sci(e200) + ", slope " +
                            fixed(slope, 3));
        slopes += (slopes.empty() ? "" : ", ") + kind_name(k) + " " + fixed(slope, 2);
    }
    r.pass = tally.failures() == 0;
    r.summary = "log-log slopes of |f_n / asym(M=2) - 1| over n = 50, 100, 200: " + slopes;
    return r;
}

CriterionResult equilibrium_numerics() {
    CriterionResult r = titled(9, "equilibrium numerics");
    Tally tally(r);
    BigFloat tol("1e-20", kBits);

    PotentialSpec gauss = PotentialSpec::from_couplings({});
    EquilibriumResult g = solve_equilibrium(gauss);
    BigFloat dg = abs(g.I_V - big(Rat(3, 4)));
    tally.check(dg < tol, "Gaussian I_V off by " + dg.str(3));

    PotentialSpec pure = PotentialSpec::quartic(Rat(0), Rat(1));
    EquilibriumResult p = solve_equilibrium(pure);
    BigFloat dp = abs(p.I_V - (log(big(3)) / big(4) + big(Rat(3, 8))));
    tally.check(dp < tol, "pure quartic I_V off by " + dp.str(3));

    PotentialSpec quartic = PotentialSpec::quartic(Rat(1), Rat(1));
    EquilibriumResult q = solve_equilibrium(quartic);
    BigFloat dc = abs(q.endpoints.c - quartic_endpoint_formula(Rat(1), Rat(1), kBits));
    tally.check(dc < tol, "quartic endpoint off by " + dc.str(3));

    struct Discrete {
        const char* name;
        const PotentialSpec* V;
        const BigFloat* I;
        double lo, hi;
    };
    std::string discrete;
    for (const Discrete& d : {Discrete{"Gaussian", &gauss, &g.I_V, -2.4, 2.4},
                              Discrete{"pure quartic", &pure, &p.I_V, -1.9, 1.9},
                              Discrete{"quartic a2 = a4 = 1", &quartic, &q.I_V, -1.9, 1.9}}) {
        DiscreteResult res = discretized_minimizer(*d.V, d.lo, d.hi, 240);
        double diff = std::fabs(res.energy - d.I->to_double());
        tally.check(diff < 1e-3, std::string(d.name) + ": discretized energy off by " + sci(diff));
        discrete += (discrete.empty() ? "" : ", ") + sci(diff);
    }

    // Small quartic coupling: the local one-cut solution of V = x^2/2 - a4 x^4/4 against F0.
    const Rat a4(1, 100);
    PotentialSpec small = PotentialSpec::from_couplings({{4, a4}});
    Endpoints es = solve_endpoints(small);
    BigFloat lhs = big(Rat(3, 4)) - planar_energy(small, es.c, es.b);
    BigFloat partial = big(0);
    for (auto& [k, c] : quartic_slice(pipeline(14).F0)) partial += big(c * pow(a4, k));
    double gap = abs(lhs - partial).to_double();
    tally.check(gap < 1e-10, "a4 = 1/100: 3/4 - I_V = " + lhs.str(14) + ", weight-14 partial sum " + partial.str(14) +
                                 ", difference " + sci(gap));
    if (gap >= 1e-10) {
        USeries longer = expand(quartic_generating_function(false), 40);
        BigFloat full = big(0);
        for (int k = 1; k <= 40; ++k) full += big(longer.coeff_t(Rat(k)) * pow(a4, k));
        Rat next = longer.coeff_t(Rat(4));
        r.notes.push_back("the first omitted term is the a4^4 coefficient " + next.str() + " times 1e-8 = " +
                          sci(big(next * pow(a4, 4)).to_double()) +
                          ", weight 16 > 14, so no weight-14 partial sum reaches 1e-10 at a4 = 1/100");
        r.notes.push_back("with the a4 series continued to a4^40 the difference is " + sci(abs(lhs - full).to_double()));
    }
    r.pass = tally.failures() == 0;
    r.summary = "Gaussian, pure quartic and quartic endpoint to 1e-20; discretized energies within " + discrete +
                "; a4 = 1/100 partial sum off by " + sci(gap);
    return r;
}

CriterionResult coefficient_bounds() {
    CriterionResult r = titled(10, "coefficient bounds");
    Tally tally(r);
    const MultiSeries& F0 = pipeline(10).F0;
    for (int n = 1; n <= 5; ++n) {
        BoundReport b = coefficient_bound_report(F0, n);
        tally.check(b.bound_ok && b.nonnegative, "n = " + std::to_string(n) + ": sum " + b.sum_all.str() +
                                                     ", even sum " + b.sum_even.str());
    }
    Rat rate;
    bool all12 = analyzed(ExtremeKind::EdgeAll).expansion.rate.is_rational(rate) && rate == Rat(12);
    tally.check(all12, "edge-all growth rate is not 12");
    bool even8 = analyzed(ExtremeKind::EdgeEven).expansion.rate.is_rational(rate) && rate == Rat(8);
    tally.check(even8, "edge-even growth rate is not 8");
    BoundReport b5 = coefficient_bound_report(F0, 5);
    r.pass = tally.failures() == 0;
    r.summary = "sums over weight 2n within 12^n and 8^n for n <= 5 (n = 5: " + b5.sum_all.str() + " <= 248832, " +
                b5.sum_even.str() + " <= 32768); edge-extreme rates are exactly 12 and 8";
    return r;
}

CriterionResult identity_suites() {
    CriterionResult r = titled(11, "identity suites");
    Tally tally(r);
    int binomial = 0;
    for (long l1 = 0; l1 <= 40; ++l1)
        for (long l2 = 0; l2 <= 40; ++l2) {
            if (l1 + l2 > 0) {
                ++binomial;
                tally.check(check_binomial_identity(BinomialIdentity::First, l1, l2),
                            "first binomial identity at (" + std::to_string(l1) + ", " + std::to_string(l2) + ")");
            }
            ++binomial;
            tally.check(check_binomial_identity(BinomialIdentity::Second, l1, l2),
                        "second binomial identity at (" + std::to_string(l1) + ", " + std::to_string(l2) + ")");
        }

    std::vector<std::tuple<long, long, long>> grid;
    for (long l1 = 1; l1 <= 5; ++l1)
        for (long l2 = 1; l2 <= 5; ++l2)
            for (long p = 0; p <= 3; ++p) grid.emplace_back(l1, l2, p);
    CertificateReport cert = zb_certificate_report(BinomialIdentity::First, grid);
    tally.check(cert.ok, "telescoping certificate failed at " + std::to_string(cert.failed.size()) + " grid points");
    bool second_corrected = check_zb_certificate(BinomialIdentity::Second, grid, CertificateForm::Corrected);
    bool second_printed = check_zb_certificate(BinomialIdentity::Second, grid, CertificateForm::Printed);
    r.notes.push_back(std::string("second identity: the companion divided by ((l1+1)(l2+1))^2 ") +
                      (second_corrected ? "certifies" : "does not certify") + " the same grid; the printed companion " +
                      (second_printed ? "also does" : "does not"));

    int product = 0;
    for (int k = 0; k <= 8; ++k) {
        std::vector<Rat> c(k + 1, Rat(0));
        c[k] = Rat(1);
        auto [lhs, rhs] = moment_product_identity(Poly(c));
        ++product;
        tally.check(lhs == rhs, "product identity for x^" + std::to_string(k) + ": " + lhs.str() + " vs " + rhs.str());
    }
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> c;
        for (int i = 0; i <= 8; ++i) c.emplace_back(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5));
        auto [lhs, rhs] = moment_product_identity(Poly(c));
        ++product;
        tally.check(lhs == rhs, "product identity for a random degree-8 polynomial");
    }
    r.pass = tally.failures() == 0;
    r.summary = std::to_string(binomial) + " binomial sums for l1, l2 <= 40; telescoping certificate at " +
                std::to_string(cert.checked) + " grid points (" + std::to_string(cert.skipped.size()) +
                " poles skipped); product identity for " + std::to_string(product) + " polynomials, all exact";
    return r;
}

CriterionResult discrepancy_report() {
    CriterionResult r = titled(12, "discrepancy ledger");
    int confirmed = 0;
    std::vector<Discrepancy> ledger = discrepancy_ledger();
    for (const Discrepancy& d : ledger) {
        bool ok = d.printed_fails && d.corrected_holds;
        if (ok) ++confirmed;
        r.notes.push_back(std::string(ok ? "expected-fail: " : "unconfirmed: ") + d.name + ": printed " + d.printed +
                          (d.printed_fails ? " rejected" : " accepted") + "; corrected " + d.corrected +
                          (d.corrected_holds ? " verified" : " NOT verified") + " (" + d.evidence + ")");
    }
    r.pass = confirmed == static_cast<int>(ledger.size());
    r.summary = std::to_string(confirmed) + " of " + std::to_string(ledger.size()) +
                " recorded discrepancies confirmed, each with a machine-checked correction";
    return r;
}

}  // namespace

std::vector<Discrepancy> discrepancy_ledger() {
    std::vector<Discrepancy> out;
    {
        Discrepancy d;
        d.name = "integrand identity for the edge-graded F0";
        d.printed = "t (t F0)'' = (2 R S^2 + R^2) / 2";
        d.corrected = "t (t F0)'' = (2 R S^2 + R^2 - 1) / 2";
        const PlanarResult& p = pipeline(14);
        USeries Re = grade_specialize(p.RS.R, Grading::Edge, 14);
        USeries Se = grade_specialize(p.RS.S, Grading::Edge, 14);
        USeries t = USeries::t(Rat(0), p.F0_edge.cap());
        USeries lhs = t * (t * p.F0_edge).d_dt().d_dt();
        USeries base = Rat(1, 2) * (Rat(2) * Re * Se * Se + Re * Re);
        USeries corrected = base - USeries::constant(Rat(1, 2), base.cap());
        int cap = std::min(lhs.cap(), base.cap());
        d.printed_fails = lhs.truncate(cap) != base.truncate(cap);
        d.corrected_holds = lhs.truncate(cap) == corrected.truncate(cap);
        d.evidence = "weight 14, through t^" + std::to_string(cap / 2) + "; the printed right side has constant term " +
                     base.coeff_u(0).str() + ", the left side " + lhs.coeff_u(0).str();
        out.push_back(d);
    }
    {
        Discrepancy d;
        d.name = "quartic generating function";
        d.printed = "(1 - 36t + 162t^2 + (1 - 30t) sqrt(1 - 12t)) / (432t^2) + log((1 - sqrt(1 - 12t)) / (6t)) / 2";
        d.corrected = "the same with - (1 - 30t) sqrt(1 - 12t)";
        USeries printed = expand(quartic_generating_function(true), 6);
        USeries fixed_form = expand(quartic_generating_function(false), 6);
        Rat pole = printed.coeff_t(Rat(-2));
        d.printed_fails = !pole.is_zero();
        std::map<int, Rat> slice = quartic_slice(pipeline(14).F0);
        bool holds = fixed_form.valuation() >= 2 && slice.size() == 3;
        for (auto& [k, c] : slice) holds = holds && fixed_form.coeff_t(Rat(k)) == c;
        d.corrected_holds = holds;
        d.evidence = "printed form has a t^-2 term " + pole.str() + "; corrected form expands to " +
                     join(t_coeffs(fixed_form, 1, 4)) + ", matching the a4^k coefficients of the weight-14 F0 for k <= 3";
        out.push_back(d);
    }
    {
        Discrepancy d;
        d.name = "constant of the quartic energy formula";
        d.printed = "constant 3/8";
        d.corrected = "constant 0";
        PotentialSpec q = PotentialSpec::quartic(Rat(1), Rat(1));
        Endpoints e = solve_endpoints(q);
        BigFloat I = planar_energy(q, e.c, e.b);
        BigFloat printed_gap = abs(I - quartic_energy_formula(Rat(1), Rat(1), Rat(3, 8)));
        BigFloat fixed_gap = abs(I - quartic_energy_formula(Rat(1), Rat(1), Rat(0)));
        Rat tiny(1, 1000000000);
        BigFloat limit = quartic_energy_formula(Rat(1), tiny, Rat(0));
        BigFloat limit_gap = abs(limit - big(Rat(3, 4)));
        PotentialSpec pure = PotentialSpec::quartic(Rat(0), Rat(1));
        Endpoints ep = solve_endpoints(pure);
        BigFloat pure_gap = abs(planar_energy(pure, ep.c, ep.b) - quartic_energy_formula(Rat(0), Rat(1), Rat(0)));
        d.printed_fails = printed_gap > BigFloat("0.1", kBits);
        d.corrected_holds = fixed_gap < BigFloat("1e-60", kBits) && pure_gap < BigFloat("1e-60", kBits) &&
                            limit_gap < BigFloat("1e-8", kBits);
        d.evidence = "at a2 = a4 = 1 the printed form is off by " + printed_gap.str(6) +
                     "; with 0 it matches the solver to " + sci(fixed_gap.to_double()) +
                     " and tends to the Gaussian 3/4 as a4 -> 0 (a4 = 1e-9: " + sci(limit_gap.to_double()) + ")";
        out.push_back(d);
    }
    return out;
}

CriterionResult run_criterion(int id) {
    using Fn = CriterionResult (*)();
    static const Fn table[kCriterionCount] = {reference_tables,      oracle_equivalence,     edge_extremes,
                                              face_extremes,         recurrence_coherence,   singularities,
                                              asymptotic_constants,  asymptotic_convergence, equilibrium_numerics,
                                              coefficient_bounds,    identity_suites,        discrepancy_report};
    if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion ids run from 1 to 12");
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = table[id - 1]();
    } catch (const std::exception& e) {
        r = titled(id, "criterion " + std::to_string(id));
        r.pass = false;
        r.summary = std::string("error: ") + e.what();
    }
    r.id = id;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids) {
    std::vector<CriterionResult> out;
    for (int id : ids) out.push_back(run_criterion(id));
    return out;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    char head[64];
    std::snprintf(head, sizeof head, "criterion %2d %s  ", r.id, r.pass ? "PASS" : "FAIL");
    os << head << r.title << ": " << r.summary << " [" << fixed(r.seconds, 1) << " s]";
    for (const std::string& n : r.notes) os << "\n    " << n;
    return os.str();
}

}  // namespace planarlim
