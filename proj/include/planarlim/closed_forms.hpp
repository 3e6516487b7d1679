#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planarlim/expr.hpp"
#include "planarlim/mpoly.hpp"
#include "planarlim/multiseries.hpp"
#include "planarlim/series.hpp"

namespace planarlim {

/// The extreme potentials: every admissible a_n set to 1 under the edge or face grading.
///   EdgeEven      a_{2n}, n >= 1          EdgeAll   a_n, n >= 1
///   EdgeEvenMin4  a_{2n}, n >= 2          EdgeMin2  a_n, n >= 2      EdgeMin3  a_n, n >= 3
///   FaceEven      a_{2n}, n >= 2          FaceAll   a_n, n >= 3
///   Mixed34Edge   a_3, a_4 (edge)         Mixed34Face  a_3, a_4 (face)
enum class ExtremeKind { EdgeEven, EdgeAll, EdgeEvenMin4, EdgeMin2, EdgeMin3, FaceEven, FaceAll, Mixed34Edge, Mixed34Face };

const std::vector<ExtremeKind>& all_kinds();
const std::vector<ExtremeKind>& edge_kinds();  // the five kinds with printed recurrences
std::string kind_name(ExtremeKind k);          // "edge-even", "face-all", "mixed34-edge", ...
ExtremeKind parse_kind(const std::string& name);
Grading kind_grading(ExtremeKind k);
bool kind_even(ExtremeKind k);
/// True when a_n is set to 1 by the kind (all others are 0).
bool kind_has_var(ExtremeKind k, int n);

/// sum_{j=0}^{r} gamma_j(n) f_{n+j} = 0 for all n >= start, with f_0 = 0 and the printed
/// initial values f_1..f_k.
struct HolonomicRec {
    std::vector<Poly> gamma;
    int start = 0;
    std::vector<Rat> initial;
    int order() const { return static_cast<int>(gamma.size()) - 1; }
};

/// Exact f_1..f_N. Throws when the leading coefficient vanishes at a needed n.
std::vector<Rat> holonomic_evaluate(const HolonomicRec& rec, int N);

/// p0 + p1 F' + p2 F'' = 0.
struct LinearOde2 {
    Poly p0, p1, p2;
};

struct ClosedFormRecord {
    ExtremeKind kind;
    std::optional<Expr> R_closed, S_closed, F0_closed;
    std::optional<BivarPoly> algebraic_R;
    /// Equation for sigma = S / sqrt(t), which is a power series in t.
    std::optional<BivarPoly> algebraic_sigma;
    std::optional<BivarPoly> algebraic_G0;  // G0 = F0'
    std::optional<LinearOde2> ode;
    std::optional<HolonomicRec> recurrence;
    bool has_fn_closed = false;
    /// Polynomial whose root in (radius_lo, radius_hi) is the radius of convergence, when known
    /// in closed form.
    std::optional<Poly> radius_poly;
    Rat radius_lo, radius_hi;
    std::vector<std::string> notes;
};

const ClosedFormRecord& catalog(ExtremeKind k);

/// The radius of convergence of the kind's closed forms (edge kinds only).
BigFloat closed_radius(ExtremeKind k, long bits = kDefaultPrecisionBits);

struct ClosedValue {
    std::optional<Rat> exact;
    BigFloat approx;
};
struct ClosedValues {
    std::optional<ClosedValue> R, S, F0;
};

/// Evaluates the closed forms at 0 < t < t0. Exact values are returned when every square root
/// along the way is rational and no logarithm survives.
ClosedValues eval_closed(ExtremeKind k, const Rat& t, long bits = kDefaultPrecisionBits);

/// The printed recurrence; face and mixed kinds throw "no printed recurrence".
const HolonomicRec& recurrence_coeffs(ExtremeKind k);

/// The factorial formula for f_n (EdgeEven and EdgeAll only).
Rat fn_closed(ExtremeKind k, long n);

/// Graded R, S and F0 of the kind, computed by the multivariate pipeline and specialized, exact
/// through t^t_cap. For face kinds S is zero by convention (only R enters F0).
struct ExtremeSeries {
    USeries R, S, F0;
};
ExtremeSeries extreme_series(ExtremeKind k, int t_cap);

/// The (R, S) fixed-point system of a kind with finitely many a_n, rewritten in t, R and
/// sigma = S / sqrt(t) as two polynomials {R - H1, sigma - H2 / sqrt(t)} over the variables
/// {"t", "R", "s"}.
std::pair<MPoly, MPoly> rs_system(ExtremeKind k);

/// The algebraic equation P(t, R) = 0 for the face-graded R of FaceEven or FaceAll, derived by
/// resultant elimination from the critical-point system of the F-functional and checked
/// against the series R. Throws "normalization mismatch" when no branch matches.
BivarPoly derive_face_algebraic(ExtremeKind k);
/// The same for the mixed kinds from rs_system: in R for Mixed34Face, in sigma for
/// Mixed34Edge.
BivarPoly derive_mixed_algebraic(ExtremeKind k);
/// The face equations as printed, and whether the series R satisfies them unchanged.
BivarPoly printed_face_equation(ExtremeKind k);

/// R and sigma = S / sqrt(t) of a mixed kind through t^t_cap, by Newton iteration on
/// rs_system.
std::pair<USeries, USeries> mixed_series(ExtremeKind k, int t_cap);

/// Power-series root of P(t, y) = 0 with y(0) = y0 through t^t_cap by Newton iteration
/// (needs dP/dy(0, y0) != 0).
USeries algebraic_series(const BivarPoly& P, const Rat& y0, int t_cap);

/// Exact f_1..f_N for any kind: recurrences for the edge kinds, Newton-iterated algebraic
/// series for the others.
std::vector<Rat> coefficient_sequence(ExtremeKind k, int N);

/// The residual p0 + p1 F' + p2 F'' of the kind's ODE on a truncated series F.
USeries ode_residual(const LinearOde2& ode, const USeries& F);
/// P(t, y(t)) for a truncated series y.
USeries algebraic_residual(const BivarPoly& P, const USeries& y);

}  // namespace planarlim
