#include "planarlim/equilibrium.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace planarlim {

namespace {

using BigVec = std::vector<BigFloat>;

BigFloat zero_like(long bits) { return BigFloat(0L, bits); }

// Coefficients in x of p(c x + b).
BigVec shifted(const Poly& p, const BigFloat& c, const BigFloat& b) {
    const long bits = std::max(c.precision(), b.precision());
    BigVec out(std::max(p.degree() + 1, 1), zero_like(bits));
    BigVec bpow{BigFloat(1L, bits)};
    for (int j = 1; j <= p.degree(); ++j) bpow.push_back(bpow.back() * b);
    BigFloat cpow(1L, bits);
    for (int k = 0; k <= p.degree(); ++k) {
        BigFloat acc = zero_like(bits);
        for (int j = k; j <= p.degree(); ++j) {
            if (p.coeff(j).is_zero()) continue;
            acc += BigFloat(p.coeff(j) * binom_rat(j, k), bits) * bpow[j - k];
        }
        out[k] = acc * cpow;
        cpow *= c;
    }
    return out;
}

// sum_i q_i m_(i + r).
BigFloat omega_dot(const BigVec& q, int r, long bits) {
    BigFloat acc = zero_like(bits);
    for (size_t i = 0; i < q.size(); ++i) {
        Rat m = arcsine_moment(static_cast<int>(i) + r);
        if (!m.is_zero()) acc += q[i] * BigFloat(m, bits);
    }
    return acc;
}

// Gauss-Chebyshev nodes 2 cos((2k - 1) pi / (2N)) of the arcsine law, all with weight 1/N.
BigVec cheb_nodes(int N, long bits) {
    BigVec x;
    BigFloat p = pi(bits);
    for (int k = 1; k <= N; ++k) x.push_back(BigFloat(2L, bits) * cos(p * BigFloat(Rat(2 * k - 1, 2 * N), bits)));
    return x;
}

// int x^r V^(d)(c x + b) d omega for d = 0, 1, 2.
BigFloat integrate(const PotentialSpec& V, int d, int r, const BigFloat& c, const BigFloat& b) {
    const long bits = std::max(c.precision(), b.precision());
    if (V.is_polynomial()) {
        Poly p = V.v;
        for (int i = 0; i < d; ++i) p = p.derivative();
        return omega_dot(shifted(p, c, b), r, bits);
    }
    const auto& f = d == 0 ? V.raw_V : d == 1 ? V.raw_dV : V.raw_d2V;
    BigFloat acc = zero_like(bits);
    for (const BigFloat& x : cheb_nodes(V.quad_nodes, bits)) acc += f(c * x + b) * pow(x, r);
    return acc / BigFloat(static_cast<long>(V.quad_nodes), bits);
}

BigFloat eval_poly(const BigVec& q, const BigFloat& x) {
    BigFloat acc = zero_like(x.precision());
    for (size_t i = q.size(); i-- > 0;) acc = acc * x + q[i];
    return acc;
}

struct Gradient {
    BigFloat gc, gb;
    BigFloat hcc, hcb, hbb;
    BigFloat H;
};

Gradient gradient(const PotentialSpec& V, const BigFloat& c, const BigFloat& b) {
    const long bits = c.precision();
    BigFloat half(Rat(1, 2), bits);
    Gradient g;
    g.H = log(c) - half * integrate(V, 0, 0, c, b);
    g.gc = BigFloat(1L, bits) / c - half * integrate(V, 1, 1, c, b);
    g.gb = -half * integrate(V, 1, 0, c, b);
    g.hcc = -BigFloat(1L, bits) / (c * c) - half * integrate(V, 2, 2, c, b);
    g.hcb = -half * integrate(V, 2, 1, c, b);
    g.hbb = -half * integrate(V, 2, 0, c, b);
    return g;
}

BigFloat bigmax(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat residual_of(const Gradient& g, bool even) { return even ? abs(g.gc) : bigmax(abs(g.gc), abs(g.gb)); }

}  // namespace

PotentialSpec PotentialSpec::from_couplings(const std::vector<std::pair<int, Rat>>& a) {
    std::vector<Rat> v(3, Rat(0));
    v[2] = Rat(1, 2);
    bool even = true;
    for (const auto& [n, an] : a) {
        if (n < 1) throw std::invalid_argument("coupling index must be positive");
        if (static_cast<int>(v.size()) <= n) v.resize(n + 1, Rat(0));
        v[n] -= an / Rat(n);
        if (n % 2 == 1 && !an.is_zero()) even = false;
    }
    PotentialSpec s;
    s.v = Poly(v);
    s.even = even;
    return s;
}

PotentialSpec PotentialSpec::quartic(const Rat& a2, const Rat& a4) {
    PotentialSpec s;
    s.v = Poly(std::vector<Rat>{Rat(0), Rat(0), a2 / Rat(2), Rat(0), a4 / Rat(4)});
    s.even = true;
    return s;
}

PotentialSpec PotentialSpec::polynomial(const Poly& v) {
    PotentialSpec s;
    s.v = v;
    s.even = true;
    for (int k = 1; k <= v.degree(); k += 2)
        if (!v.coeff(k).is_zero()) s.even = false;
    return s;
}

PotentialSpec PotentialSpec::raw(std::function<BigFloat(const BigFloat&)> V, std::function<BigFloat(const BigFloat&)> dV,
                                 std::function<BigFloat(const BigFloat&)> d2V, bool even, int quad_nodes) {
    if (quad_nodes < 2) throw std::invalid_argument("raw potentials need at least 2 quadrature nodes");
    PotentialSpec s;
    s.raw_V = std::move(V);
    s.raw_dV = std::move(dV);
    s.raw_d2V = std::move(d2V);
    s.even = even;
    s.quad_nodes = quad_nodes;
    return s;
}

bool PotentialSpec::admissible() const {
    if (!is_polynomial()) return true;
    int d = v.degree();
    return d >= 2 && d % 2 == 0 && v.coeff(d).sign() > 0;
}

BigFloat PotentialSpec::V(const BigFloat& x) const { return is_polynomial() ? v.eval(x) : raw_V(x); }
BigFloat PotentialSpec::dV(const BigFloat& x) const { return is_polynomial() ? v.derivative().eval(x) : raw_dV(x); }

std::string PotentialSpec::describe() const {
    if (!is_polynomial()) return "raw potential";
    std::ostringstream os;
    bool first = true;
    for (int k = v.degree(); k >= 0; --k) {
        const Rat& c = v.coeff(k);
        if (c.is_zero()) continue;
        if (first) os << c.str();
        else os << (c.sign() < 0 ? " - " : " + ") << abs(c).str();
        if (k > 0) os << "*x^" << k;
        first = false;
    }
    return first ? "0" : os.str();
}

Rat arcsine_moment(int i) {
    if (i < 0 || i % 2 != 0) return Rat(0);
    return binom_rat(i, i / 2);
}

std::vector<Rat> cheb_moments(const Poly& f, int n_max) {
    std::vector<Rat> beta(n_max + 1, Rat(0));
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        for (int n = i % 2; n <= std::min(i, n_max); n += 2) beta[n] += f.coeff(i) * binom_rat(i, (i - n) / 2);
    }
    return beta;
}

BigFloat energy_of_moments(const std::vector<BigFloat>& alphas, const std::vector<BigFloat>& betas) {
    if (alphas.size() != betas.size()) throw std::invalid_argument("alphas and betas differ in length");
    if (betas.empty()) throw std::invalid_argument("empty moment list");
    const long bits = betas[0].precision();
    BigFloat sum = zero_like(bits);
    for (size_t n = 1; n < betas.size(); ++n)
        sum += betas[n] * alphas[n] + alphas[n] * alphas[n] / BigFloat(static_cast<long>(n), bits);
    return betas[0] + BigFloat(2L, bits) * sum;
}

std::pair<BigFloat, BigFloat> endpoint_equations(const PotentialSpec& V, const BigFloat& c, const BigFloat& b) {
    return {c * integrate(V, 1, 1, c, b), integrate(V, 1, 0, c, b)};
}

Endpoints solve_endpoints(const PotentialSpec& V, const BigFloat& c0, const BigFloat& b0, long bits) {
    BigFloat c = c0;
    BigFloat b = V.even ? BigFloat(0L, bits) : b0;
    if (c.sign() <= 0) throw std::invalid_argument("initial c must be positive");
    const BigFloat target = pow(BigFloat(2L, bits), -(bits - 24));
    const BigFloat accept("1e-30", bits);
    Gradient g = gradient(V, c, b);
    BigFloat res = residual_of(g, V.even);
    int it = 0;
    for (; it < 200 && res > target; ++it) {
        BigFloat dc, db(0L, bits);
        if (V.even) {
            if (g.hcc.is_zero()) throw std::runtime_error("degenerate maximizer");
            dc = -g.gc / g.hcc;
        } else {
            BigFloat det = g.hcc * g.hbb - g.hcb * g.hcb;
            BigFloat scale = abs(g.hcc * g.hbb) + g.hcb * g.hcb;
            if (abs(det) <= scale * pow(BigFloat(2L, bits), -(bits / 2))) throw std::runtime_error("degenerate maximizer");
            dc = -(g.hbb * g.gc - g.hcb * g.gb) / det;
            db = -(g.hcc * g.gb - g.hcb * g.gc) / det;
        }
        BigFloat lambda(1L, bits);
        bool accepted = false;
        for (int damp = 0; damp <= 20; ++damp) {
            BigFloat cn = c + lambda * dc, bn = b + lambda * db;
            if (cn.sign() > 0) {
                Gradient gn = gradient(V, cn, bn);
                BigFloat rn = residual_of(gn, V.even);
                if (rn < res) {
                    c = cn;
                    b = bn;
                    g = gn;
                    res = rn;
                    accepted = true;
                    break;
                }
            }
            lambda /= BigFloat(2L, bits);
        }
        if (!accepted) break;
    }
    if (!(res < accept) || c.sign() <= 0) throw std::runtime_error("no one-cut solution found from this seed");
    Endpoints e;
    e.c = c;
    e.b = b;
    e.H = g.H;
    e.hessian = {{{g.hcc, g.hcb}, {g.hcb, g.hbb}}};
    e.residual = res;
    e.iterations = it;
    return e;
}

Endpoints solve_endpoints(const PotentialSpec& V, long bits) {
    return solve_endpoints(V, BigFloat(1L, bits), BigFloat(0L, bits), bits);
}

std::vector<BigFloat> psi_coefficients(const PotentialSpec& V, const BigFloat& c, const BigFloat& b) {
    if (!V.is_polynomial()) throw std::invalid_argument("psi coefficients need a polynomial potential");
    const long bits = std::max(c.precision(), b.precision());
    BigVec q = shifted(V.v.derivative(), c, b);
    const int deg = static_cast<int>(q.size()) - 1;
    BigVec out(std::max(deg, 1), zero_like(bits));
    // (x^k - y^k) / (x - y) = sum_{j < k} x^(k-1-j) y^j.
    for (int k = 1; k <= deg; ++k)
        for (int j = 0; j < k; ++j) {
            Rat m = arcsine_moment(j);
            if (!m.is_zero()) out[k - 1 - j] += q[k] * BigFloat(m, bits);
        }
    return out;
}

BigFloat psi(const PotentialSpec& V, const BigFloat& c, const BigFloat& b, const BigFloat& x) {
    if (V.is_polynomial()) return eval_poly(psi_coefficients(V, c, b), x);
    const long bits = std::max(c.precision(), b.precision());
    BigFloat acc = zero_like(bits);
    BigFloat dx = V.raw_dV(c * x + b);
    const BigFloat tiny = pow(BigFloat(2L, bits), -(bits / 2));
    for (const BigFloat& y : cheb_nodes(V.quad_nodes, bits)) {
        BigFloat h = x - y;
        if (abs(h) < tiny)
            acc += c * V.raw_d2V(c * x + b);
        else
            acc += (dx - V.raw_dV(c * y + b)) / h;
    }
    return acc / BigFloat(static_cast<long>(V.quad_nodes), bits);
}

BigFloat density(const PotentialSpec& V, const BigFloat& c, const BigFloat& b, const BigFloat& x) {
    const long bits = std::max(c.precision(), b.precision());
    BigFloat u = (x - b) / c;
    if (!(abs(u) < BigFloat(2L, bits))) return zero_like(bits);
    BigFloat w = sqrt(BigFloat(4L, bits) * c * c - (x - b) * (x - b));
    return psi(V, c, b, u) * w / (BigFloat(2L, bits) * c * pi(bits));
}

SupportReport full_support_test(const PotentialSpec& V, const BigFloat& c, const BigFloat& b, int grid_size) {
    if (grid_size < 64) throw std::invalid_argument("grid_size must be at least 64");
    const long bits = std::max(c.precision(), b.precision());
    std::vector<BigFloat> points = cheb_nodes(grid_size, bits);
    points.push_back(BigFloat(-2L, bits));
    points.push_back(BigFloat(2L, bits));
    if (V.is_polynomial()) {
        // Interior critical points of psi: sign changes of psi' on a fine grid, then bisection.
        BigVec p = psi_coefficients(V, c, b);
        BigVec dp;
        for (size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * BigFloat(static_cast<long>(i), bits));
        if (!dp.empty()) {
            const int fine = 8 * grid_size;
            BigFloat step = BigFloat(4L, bits) / BigFloat(static_cast<long>(fine), bits);
            BigFloat lo(-2L, bits);
            BigFloat flo = eval_poly(dp, lo);
            for (int i = 1; i <= fine; ++i) {
                BigFloat hi = BigFloat(-2L, bits) + step * BigFloat(static_cast<long>(i), bits);
                BigFloat fhi = eval_poly(dp, hi);
                if (fhi.is_zero()) points.push_back(hi);
                if (flo.sign() * fhi.sign() < 0) {
                    BigFloat a = lo, z = hi, fa = flo;
                    for (int k = 0; k < bits + 8; ++k) {
                        BigFloat mid = (a + z) / BigFloat(2L, bits);
                        BigFloat fm = eval_poly(dp, mid);
                        if (fm.sign() == fa.sign()) {
                            a = mid;
                            fa = fm;
                        } else {
                            z = mid;
                        }
                    }
                    points.push_back((a + z) / BigFloat(2L, bits));
                }
                lo = hi;
                flo = fhi;
            }
        }
    }
    SupportReport r;
    BigFloat biggest = zero_like(bits);
    bool first = true;
    for (const BigFloat& x : points) {
        BigFloat v = psi(V, c, b, x);
        if (first || v < r.min_psi) {
            r.min_psi = v;
            r.argmin = x;
        }
        first = false;
        biggest = bigmax(biggest, abs(v));
    }
    BigFloat tol = biggest * pow(BigFloat(2L, bits), -(bits / 2));
    if (abs(r.min_psi) <= tol) {
        r.boundary = true;
        r.ok = false;
        r.note = "boundary: min psi vanishes at x = " + r.argmin.str(12);
    } else if (r.min_psi.sign() < 0) {
        r.note = "psi negative at x = " + r.argmin.str(12);
    } else {
        r.ok = true;
    }
    return r;
}

BigFloat planar_energy(const PotentialSpec& V, const BigFloat& c, const BigFloat& b) {
    const long bits = std::max(c.precision(), b.precision());
    BigFloat head = -log(c) + integrate(V, 0, 0, c, b);
    if (V.is_polynomial()) {
        // V'(s x + b) = sum_k p_k s^k x^k; A(s) = sum_k p_k m_(k+1) s^k, B(s) = sum_k p_k m_k s^k.
        BigVec p = shifted(V.v.derivative(), BigFloat(1L, bits), b);
        const int n = static_cast<int>(p.size());
        BigVec A(n, zero_like(bits)), B(n, zero_like(bits));
        for (int k = 0; k < n; ++k) {
            A[k] = p[k] * BigFloat(arcsine_moment(k + 1), bits) / BigFloat(2L, bits);
            B[k] = p[k] * BigFloat(arcsine_moment(k), bits);
        }
        BigVec sq(2 * n - 1, zero_like(bits));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sq[i + j] += A[i] * A[j] + B[i] * B[j];
        // int_0^c s * s^e ds = c^(e + 2) / (e + 2).
        BigFloat tail = zero_like(bits);
        BigFloat cp = c * c;
        for (size_t e = 0; e < sq.size(); ++e) {
            tail += sq[e] * cp / BigFloat(static_cast<long>(e + 2), bits);
            cp *= c;
        }
        return head - tail;
    }
    auto integrand = [&](double s) {
        BigFloat sb(s, bits);
        BigFloat A = integrate(V, 1, 1, sb, b) / BigFloat(2L, bits);
        BigFloat B = integrate(V, 1, 0, sb, b);
        return s * (A * A + B * B).to_double();
    };
    double tail = boost::math::quadrature::gauss<double, 30>::integrate(integrand, 0.0, c.to_double());
    return head - BigFloat(tail, bits);
}

EquilibriumResult solve_equilibrium(const PotentialSpec& V, int samples, long bits) {
    EquilibriumResult r;
    r.admissible = V.admissible();
    r.endpoints = solve_endpoints(V, bits);
    const BigFloat& c = r.endpoints.c;
    const BigFloat& b = r.endpoints.b;
    r.support = full_support_test(V, c, b);
    r.I_V = planar_energy(V, c, b);
    BigFloat p = pi(bits);
    for (int k = 1; k <= samples; ++k) {
        BigFloat x = b + BigFloat(2L, bits) * c * cos(p * BigFloat(Rat(k, samples + 1), bits));
        r.density_samples.emplace_back(x, density(V, c, b, x));
    }
    std::reverse(r.density_samples.begin(), r.density_samples.end());
    return r;
}

BigFloat arcsine_potential(const BigFloat& x) {
    const long bits = x.precision();
    BigFloat ax = abs(x);
    if (!(ax > BigFloat(2L, bits))) return zero_like(bits);
    return log((ax + sqrt(ax * ax - BigFloat(4L, bits))) / BigFloat(2L, bits));
}

double arcsine_potential_quadrature(double x) {
    using std::numbers::pi;
    if (std::fabs(x) > 2) {
        const int N = 4000;
        double acc = 0;
        for (int k = 1; k <= N; ++k) acc += std::log(std::fabs(x - 2 * std::cos((2 * k - 1) * pi / (2 * N))));
        return acc / N;
    }
    // x = 2 cos(phi); x - 2 cos(theta) = 4 sin((theta + phi)/2) sin((theta - phi)/2).
    const double phi = std::acos(x / 2);
    boost::math::quadrature::tanh_sinh<double> ts;
    auto piece = [&](double t, double d) {
        return (std::log(4.0) + std::log(std::fabs(std::sin((t + phi) / 2))) + std::log(std::fabs(std::sin(d / 2)))) / pi;
    };
    double total = 0;
    if (phi > 0) {
        // On [0, phi] the complement xc > 0 is phi - theta near the right end.
        total += ts.integrate([&](double t, double xc) { return piece(t, xc > 0 ? -xc : t - phi); }, 0.0, phi);
    }
    if (phi < pi) {
        // On [phi, pi] the complement xc < 0 is phi - theta near the left end.
        total += ts.integrate([&](double t, double xc) { return piece(t, xc < 0 ? -xc : t - phi); }, phi, pi);
    }
    return total;
}

namespace {

// Mean of log|x - y| over x in bin 0 and y in bin k, in units of the bin width:
// kappa_k = int_{-1}^{1} (1 - |u|) log|k + u| du.
double xlogx(double v) { return v > 0 ? v * std::log(v) : 0.0; }
double bin_kernel(int k) {
    if (k == 0) return -1.5;
    // int_0^1 (1 - u) log(k + u) du and int_0^1 (1 - u) log(k - u) du via antiderivatives in v.
    auto F_plus = [&](double v) { return (1.0 + k) * (xlogx(v) - v) - (v * xlogx(v) / 2 - v * v / 4); };
    auto F_minus = [&](double v) { return (1.0 - k) * (xlogx(v) - v) + (v * xlogx(v) / 2 - v * v / 4); };
    return (F_plus(k + 1.0) - F_plus(k)) + (F_minus(k) - F_minus(k - 1.0));
}

// Euclidean projection onto the probability simplex.
void project_simplex(std::vector<double>& w) {
    std::vector<double> s(w);
    std::sort(s.begin(), s.end(), std::greater<>());
    double cum = 0, theta = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        cum += s[i];
        double t = (cum - 1) / static_cast<double>(i + 1);
        if (i + 1 == s.size() || s[i + 1] <= t) {
            theta = t;
            break;
        }
    }
    for (double& x : w) x = std::max(0.0, x - theta);
}

}  // namespace

DiscreteResult discretized_minimizer(const PotentialSpec& V, double lo, double hi, int m, int iterations) {
    if (m < 200) throw std::invalid_argument("discretized_minimizer needs m >= 200");
    if (!(hi > lo)) throw std::invalid_argument("empty grid");
    const double delta = (hi - lo) / m;
    // Bin averages of V by 5-point Gauss-Legendre (exact through degree 9).
    const double gx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831, 0.9061798459386640};
    const double gw[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889, 0.4786286704993665,
                          0.2369268850561891};
    std::vector<double> vbar(m), kernel(m);
    for (int i = 0; i < m; ++i) {
        double mid = lo + (i + 0.5) * delta, acc = 0;
        for (int q = 0; q < 5; ++q) acc += gw[q] * V.V(BigFloat(mid + gx[q] * delta / 2, 64)).to_double();
        vbar[i] = acc / 2;
        kernel[i] = std::log(delta) + bin_kernel(i);
    }
    // E(w) = sum w_i vbar_i - sum_ij w_i w_j kernel_|i-j|; gradient vbar - 2 K w.
    auto apply = [&](const std::vector<double>& w, std::vector<double>& out) {
        for (int i = 0; i < m; ++i) {
            double acc = 0;
            for (int j = 0; j < m; ++j) acc += kernel[std::abs(i - j)] * w[j];
            out[i] = acc;
        }
    };
    auto energy = [&](const std::vector<double>& w, const std::vector<double>& Kw) {
        double e = 0;
        for (int i = 0; i < m; ++i) e += w[i] * (vbar[i] - Kw[i]);
        return e;
    };
    // Lipschitz constant of the gradient on zero-sum directions by power iteration.
    std::vector<double> z(m), Kz(m);
    for (int i = 0; i < m; ++i) z[i] = std::sin(0.7 * i + 0.3);
    double L = 1;
    for (int it = 0; it < 60; ++it) {
        double mean = 0;
        for (double v : z) mean += v;
        mean /= m;
        double nrm = 0;
        for (double& v : z) {
            v -= mean;
            nrm += v * v;
        }
        nrm = std::sqrt(nrm);
        for (double& v : z) v /= nrm;
        apply(z, Kz);
        double mean2 = 0;
        for (double v : Kz) mean2 += v;
        mean2 /= m;
        double ray = 0;
        for (int i = 0; i < m; ++i) ray += -(Kz[i] - mean2) * z[i];
        L = 2 * std::fabs(ray);
        for (int i = 0; i < m; ++i) z[i] = -(Kz[i] - mean2);
    }
    const double step = 1 / (1.05 * L);

    std::vector<double> w(m, 1.0 / m), y(w), prev(w), Ky(m), Kw(m);
    double tk = 1;
    int it = 0;
    for (; it < iterations; ++it) {
        apply(y, Ky);
        prev = w;
        for (int i = 0; i < m; ++i) w[i] = y[i] - step * (vbar[i] - 2 * Ky[i]);
        project_simplex(w);
        double tn = (1 + std::sqrt(1 + 4 * tk * tk)) / 2;
        for (int i = 0; i < m; ++i) y[i] = w[i] + (tk - 1) / tn * (w[i] - prev[i]);
        tk = tn;
    }
    apply(w, Kw);
    DiscreteResult r;
    r.energy = energy(w, Kw);
    if (!std::isfinite(r.energy)) throw std::runtime_error("non-finite discrete energy");
    r.weights = w;
    r.iterations = it;
    return r;
}

std::pair<Rat, Rat> moment_product_identity(const Poly& U) {
    const int d = U.degree();
    Rat lhs(0), left(0), right(0);
    for (int i = 0; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            Rat w = U.coeff(i) * Rat(j) * U.coeff(j);
            if (w.is_zero()) continue;
            Rat inner = arcsine_moment(i + 1) * arcsine_moment(j) + Rat(4) * arcsine_moment(i) * arcsine_moment(j - 1);
            lhs += w * inner / Rat(4 * (i + j + 1));
        }
    }
    for (int i = 0; i <= d; ++i) left += U.coeff(i) * arcsine_moment(i);
    for (int j = 1; j <= d; ++j) right += Rat(j) * U.coeff(j) * arcsine_moment(j - 1) / Rat(j + 1);
    return {lhs, left * right};
}

BigFloat quartic_energy_formula(const Rat& a2, const Rat& a4, const Rat& k, long bits) {
    BigFloat A2(a2, bits), A4(a4, bits);
    BigFloat r = sqrt(A2 * A2 + BigFloat(12L, bits) * A4);
    BigFloat num = -pow(A2, 4) - BigFloat(36L, bits) * A2 * A2 * A4 + BigFloat(162L, bits) * A4 * A4 +
                   (pow(A2, 3) + BigFloat(30L, bits) * A2 * A4) * r;
    return BigFloat(k, bits) + log((A2 + r) / BigFloat(2L, bits)) / BigFloat(2L, bits) +
           num / (BigFloat(432L, bits) * A4 * A4);
}

BigFloat quartic_endpoint_formula(const Rat& a2, const Rat& a4, long bits) {
    BigFloat A2(a2, bits), A4(a4, bits);
    return sqrt((-A2 + sqrt(A2 * A2 + BigFloat(12L, bits) * A4)) / (BigFloat(6L, bits) * A4));
}

}  // namespace planarlim
