#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "planarlim/closed_forms.hpp"
#include "planarlim/expr.hpp"
#include "planarlim/mpoly.hpp"
#include "planarlim/numberfield.hpp"
#include "planarlim/series.hpp"

namespace planarlim {

/// The dominant singularity t0 of the branch of P(t, y) = 0 whose expansion at 0 is `stub`.
struct Singularity {
    FieldPtr field;         // Q(t0), t0 being the field generator
    BigFloat t0;            // decimal value
    BigFloat y0;            // branch value at t0 from path following
    BigFloat py_ratio;      // |P_y| at delta = 1e-12 over |P_y| at delta = 1e-10 (about 0.1 when singular)
    BigFloat delta_near;    // the branch at t0 (1 - delta_near) ...
    BigFloat y_near;        // ... takes this value
    std::vector<BigFloat> rejected;  // smaller discriminant roots the branch passes through
};

/// Locates the smallest-modulus real root of the discriminant of P in y at which the branch
/// given by `stub` (a power series in t with at least 10 coefficients) becomes singular.
/// Real roots are tested by BigFloat path following along [0, t_c]. Throws when the stub does
/// not satisfy P, when no discriminant root is singular for the branch, and with "multiple
/// dominant singularities" when two singular roots share the smallest modulus.
Singularity dominant_singularity(const BivarPoly& P, const USeries& stub, long bits = kDefaultPrecisionBits);

/// y(t) = sum_k a_k (1 - t/t0)^(k/2) near t0.
///
/// Stored as a_k = alpha_k * a1^(k mod 2) with alpha_k in Q(t0) and a1 = sign * sqrt(s),
/// s = a1^2 in Q(t0). alpha_0 = y0 and alpha_1 = 1.
struct PuiseuxExpansion {
    FieldPtr field;
    NumberFieldElem t0;
    NumberFieldElem s;
    int sign = -1;
    std::vector<NumberFieldElem> alpha;
    /// The same expansion in v = a1 * u (u = sqrt(1 - t/t0)): y = sum_k beta_k v^k with
    /// t = t0 (1 - v^2 / s). beta_k = alpha_k / s^floor(k/2).
    std::vector<NumberFieldElem> beta;

    int order() const { return static_cast<int>(alpha.size()) - 1; }
    BigFloat a1(long bits) const;
    /// Decimal a_k.
    BigFloat a(int k, long bits) const;
};

/// Puiseux expansion of the branch at its square-root singularity through (1 - t/t0)^(M/2),
/// with y0 = gcd(P(t0, y), P_y(t0, y)) solved exactly in Q(t0). The sign of a1 is read off the
/// path-followed branch just below t0. Throws "non-square-root singularity" when
/// P_yy(t0, y0) = 0 or P_t(t0, y0) = 0. `sing.field` may be narrowed.
PuiseuxExpansion puiseux_expand(const BivarPoly& P, Singularity& sing, int M, const USeries& stub,
                                long bits = kDefaultPrecisionBits);

/// The function whose coefficients are transferred, as an expression in t and the branch y
/// (optionally its logarithm), and how f_n is recovered from its coefficients:
///   f_n = w(n) [t^(n + shift)] target,  w(n) = n^(-p) W(1/n).
struct TransferSpec {
    Expr target = Expr::y();
    bool take_log = false;
    int shift = 0;
    int p = 0;
    /// W as a power series in x = 1/n (ascending coefficients; missing terms are zero).
    std::function<std::vector<Rat>(int)> weight = [](int m) {
        std::vector<Rat> w(m + 1, Rat(0));
        w[0] = Rat(1);
        return w;
    };
};

/// f_n ~ stokes * rate^n * n^exponent * (1 + sum_l d_l / n^l).
///
/// K = pi * stokes^2 lies in Q(t0), as do the corrections; stokes = stokes_sign * sqrt(K / pi).
struct AsymExpansion {
    FieldPtr field;
    NumberFieldElem t0;
    NumberFieldElem rate;  // 1 / t0
    Rat exponent;
    NumberFieldElem K;
    int stokes_sign = 1;
    std::vector<NumberFieldElem> d;

    BigFloat stokes(long bits) const;
    BigFloat correction(int l, long bits) const { return d.at(l - 1).to_bigfloat(bits); }
    /// The partial sum with the first M corrections at n.
    BigFloat evaluate(long n, int M, long bits) const;
};

/// Transfers the expansion of the target to coefficient asymptotics with M corrections.
/// Throws when the Puiseux expansion is too short for M.
AsymExpansion transfer(const PuiseuxExpansion& px, const TransferSpec& spec, int M);

/// Numeric counterpart of transfer for a target already expanded in u = sqrt(1 - t/t0):
/// coefficients c_k of u^k (BigFloat) with shift 0 and weight 1.
struct NumericAsym {
    BigFloat t0, stokes;
    Rat exponent;
    std::vector<BigFloat> d;
};
NumericAsym transfer_numeric(const std::vector<BigFloat>& u_coeffs, const BigFloat& t0, int M, long bits);

/// Gamma(n + a) / Gamma(n + b) * n^(b - a) as a power series in x = 1/n through x^M.
std::vector<Rat> gamma_ratio_series(const Rat& a, const Rat& b, int M);

/// Everything needed to run the transfer for one catalog kind.
///
/// Edge kinds start from the quadratic equation for G0 = F0'. Its discriminant is c m(t)^2
/// Delta(t)^3, so G0 = (-b + m sqrt(c Delta^3)) / (2a) has a (1 - t/t0)^(3/2) singularity;
/// the primary branch is then y = sqrt(Delta) (P = y^2 - Delta) and G0 a rational target.
struct AsymModel {
    ExtremeKind kind;
    BivarPoly source;  // the equation the model was built from
    BivarPoly P;       // equation of the primary branch y
    USeries stub;  // the branch at 0
    TransferSpec spec;
};
AsymModel asym_model(ExtremeKind k);

struct AsymResult {
    ExtremeKind kind;
    Singularity sing;
    PuiseuxExpansion puiseux;
    AsymExpansion expansion;
};
/// dominant_singularity + puiseux_expand + transfer for a catalog kind, restarted in a
/// narrower field whenever the modulus splits.
AsymResult analyze_kind(ExtremeKind k, int M, long bits = kDefaultPrecisionBits);

/// For edge kinds: expands the closed-form F0 at t0 numerically and transfers it, an
/// independent route to the same constants.
NumericAsym closed_form_asymptotics(ExtremeKind k, int M, long bits = kDefaultPrecisionBits);

struct CheckRow {
    long n;
    Rat exact;
    BigFloat asym;
    BigFloat rel_error;
};
struct CheckReport {
    std::vector<CheckRow> rows;
    /// max over the rows of rel_error * n^(M+1).
    BigFloat fitted_K;
};
/// Compares exact f_n with the asymptotic partial sum with M corrections.
CheckReport asymptotic_check(const AsymResult& r, const std::vector<long>& n_list, int M,
                             long bits = kDefaultPrecisionBits);
CheckReport asymptotic_check(ExtremeKind k, const std::vector<long>& n_list, int M, long bits = kDefaultPrecisionBits);

}  // namespace planarlim
