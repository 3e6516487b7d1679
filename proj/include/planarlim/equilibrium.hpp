#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "planarlim/bigfloat.hpp"
#include "planarlim/poly.hpp"

namespace planarlim {

/// An external potential V on the real line.
///
/// Polynomial mode stores V(x) = sum_k v_k x^k with rational v_k; every moment is then exact.
/// Raw mode stores callables for V, V' and V'' and integrates with Gauss-Chebyshev nodes.
struct PotentialSpec {
    Poly v;
    std::function<BigFloat(const BigFloat&)> raw_V, raw_dV, raw_d2V;
    int quad_nodes = 0;  // Gauss-Chebyshev node count in raw mode
    bool even = false;

    /// V(x) = x^2/2 - sum a_n x^n / n.
    static PotentialSpec from_couplings(const std::vector<std::pair<int, Rat>>& a);
    /// V(x) = a2 x^2/2 + a4 x^4/4.
    static PotentialSpec quartic(const Rat& a2, const Rat& a4);
    /// V given by its coefficients v_0, v_1, ...
    static PotentialSpec polynomial(const Poly& v);
    static PotentialSpec raw(std::function<BigFloat(const BigFloat&)> V, std::function<BigFloat(const BigFloat&)> dV,
                             std::function<BigFloat(const BigFloat&)> d2V, bool even, int quad_nodes = 400);

    bool is_polynomial() const { return !raw_V; }
    /// Growth condition V(x) / (2 log|x|) -> infinity: for polynomials, even degree >= 2 with a
    /// positive leading coefficient. Raw potentials are taken as admissible.
    bool admissible() const;
    BigFloat V(const BigFloat& x) const;
    BigFloat dV(const BigFloat& x) const;
    std::string describe() const;
};

/// Chebyshev moments beta_n(f) = int f(x) T_n(x/2) d omega(x), n = 0..n_max, with omega the
/// arcsine law on [-2, 2]; int x^i T_n(x/2) d omega = C(i, (i-n)/2) when i - n is even and >= 0.
std::vector<Rat> cheb_moments(const Poly& f, int n_max);

/// Moments m_i = int x^i d omega = C(i, i/2) for even i, 0 otherwise.
Rat arcsine_moment(int i);

/// I = beta_0 + 2 sum_{n>=1} (beta_n alpha_n + alpha_n^2 / n); alphas[0] is ignored (alpha_0 = 1).
BigFloat energy_of_moments(const std::vector<BigFloat>& alphas, const std::vector<BigFloat>& betas);

/// Maximizer (c, b) of H(c, b) = log c - (1/2) int V(c x + b) d omega by damped Newton on the
/// gradient, residual below 2^(-bits/2) or 1e-30, whichever is smaller in magnitude. For even
/// V, b is pinned to 0. Throws "no one-cut solution found from this seed" and "degenerate
/// maximizer".
struct Endpoints {
    BigFloat c, b;
    BigFloat H;
    std::array<std::array<BigFloat, 2>, 2> hessian;
    BigFloat residual;
    int iterations = 0;
};
Endpoints solve_endpoints(const PotentialSpec& V, const BigFloat& c0, const BigFloat& b0,
                          long bits = kDefaultPrecisionBits);
Endpoints solve_endpoints(const PotentialSpec& V, long bits = kDefaultPrecisionBits);

/// The two integrals int c x V'(c x + b) d omega and int V'(c x + b) d omega, which equal 2
/// and 0 at the maximizer.
std::pair<BigFloat, BigFloat> endpoint_equations(const PotentialSpec& V, const BigFloat& c, const BigFloat& b);

/// psi(x) = int (V'(c x + b) - V'(c y + b)) / (x - y) d omega(y).
BigFloat psi(const PotentialSpec& V, const BigFloat& c, const BigFloat& b, const BigFloat& x);
/// Polynomial mode only: coefficients of psi in x (ascending).
std::vector<BigFloat> psi_coefficients(const PotentialSpec& V, const BigFloat& c, const BigFloat& b);

/// Equilibrium density psi((x - b)/c) sqrt(4c^2 - (x - b)^2) / (2 c pi); 0 outside the support.
BigFloat density(const PotentialSpec& V, const BigFloat& c, const BigFloat& b, const BigFloat& x);

struct SupportReport {
    bool ok = false;        // psi > 0 on [-2, 2]
    bool boundary = false;  // min psi vanishes to working precision
    BigFloat min_psi;
    BigFloat argmin;
    std::string note;
};
/// Positivity of psi at grid_size Chebyshev nodes of [-2, 2] and at the interior critical
/// points of psi (polynomial mode). A minimum within 2^(-bits/2) of 0, relative to max |psi|,
/// is reported as "boundary" and counts as not ok. Requires grid_size >= 64.
SupportReport full_support_test(const PotentialSpec& V, const BigFloat& c, const BigFloat& b, int grid_size = 128);

/// I_V = -log c + int V(c x + b) d omega
///       - int_0^c s [ (int x V'(s x + b) d omega / 2)^2 + (int V'(s x + b) d omega)^2 ] ds.
/// Exact inner moments and an exact outer integral in polynomial mode; Gauss-Legendre in s
/// (via Boost, double precision) in raw mode.
BigFloat planar_energy(const PotentialSpec& V, const BigFloat& c, const BigFloat& b);

struct EquilibriumResult {
    Endpoints endpoints;
    BigFloat I_V;
    SupportReport support;
    std::vector<std::pair<BigFloat, BigFloat>> density_samples;
    bool admissible = true;
};
/// solve_endpoints, full_support_test, planar_energy and `samples` density values at
/// Chebyshev points of the support.
EquilibriumResult solve_equilibrium(const PotentialSpec& V, int samples = 33, long bits = kDefaultPrecisionBits);

/// int log|x - y| d omega(y): 0 on [-2, 2], log((|x| + sqrt(x^2 - 4)) / 2) outside.
BigFloat arcsine_potential(const BigFloat& x);
/// The same integral by quadrature: Gauss-Chebyshev outside [-2, 2], tanh-sinh on the two
/// sides of the logarithmic singularity inside (double precision).
double arcsine_potential_quadrature(double x);

/// Upper-bound estimate of I_V: the minimum of the energy over probability measures with
/// piecewise constant density on m equal bins of [lo, hi], by accelerated projected gradient.
/// Bin-bin interactions use the exact mean of log|x - y| over the two bins.
struct DiscreteResult {
    double energy = 0;
    std::vector<double> weights;
    int iterations = 0;
};
DiscreteResult discretized_minimizer(const PotentialSpec& V, double lo, double hi, int m, int iterations = 4000);

/// Both sides of the product identity
///   int_0^1 int int s (x y + 4) U(s x) U'(s y) d omega(x) d omega(y) ds / 4
///     = int U d omega * int_0^1 int s U'(s y) d omega(y) ds
/// for polynomial U, exactly.
std::pair<Rat, Rat> moment_product_identity(const Poly& U);

/// The closed-form I_V printed for V = a2 x^2/2 + a4 x^4/4 (a4 > 0):
///   k + (1/2) log((a2 + r)/2) + (-a2^4 - 36 a2^2 a4 + 162 a4^2 + (a2^3 + 30 a2 a4) r) / (432 a4^2),
/// r = sqrt(a2^2 + 12 a4), with the constant k as a parameter (printed: 3/8).
BigFloat quartic_energy_formula(const Rat& a2, const Rat& a4, const Rat& k, long bits = kDefaultPrecisionBits);
/// Support half-width c = sqrt((-a2 + sqrt(a2^2 + 12 a4)) / (6 a4)) of the quartic.
BigFloat quartic_endpoint_formula(const Rat& a2, const Rat& a4, long bits = kDefaultPrecisionBits);

}  // namespace planarlim
