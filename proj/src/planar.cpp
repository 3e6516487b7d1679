#include "planarlim/planar.hpp"

#include <algorithm>
#include <stdexcept>

namespace planarlim {

namespace {

int max_var(const MonomialBasis& B) { return B.vars().empty() ? 0 : B.vars().back(); }

int var_index(const MonomialBasis& B, int n) { return B.index_of(Partition({{n, 1}})); }

// sum over n of coef(n, j) * a_n * S^(n - shift(j)), built from cheap monomial shifts.
template <class Coef>
MultiSeries collect(const MonomialBasis& B, const BasisPtr& basis, const std::vector<MultiSeries>& spow, int offset,
                    Coef coef) {
    MultiSeries y(basis);
    for (int n : B.vars()) {
        int k = n - offset;
        if (k < 0 || k >= static_cast<int>(spow.size())) continue;
        Rat c = coef(n);
        if (c.is_zero() || spow[k].is_zero()) continue;
        int idx = var_index(B, n);
        if (idx < 0) continue;
        y += c * spow[k].times_monomial(idx);
    }
    return y;
}

}  // namespace

RSPair apply_H(const RSPair& rs) {
    const BasisPtr& basis = rs.R.basis();
    const MonomialBasis& B = *basis;
    int top = max_var(B);
    MultiSeries one = MultiSeries::constant(basis, Rat(1));

    std::vector<MultiSeries> spow{one};
    if (!rs.S.is_zero())
        for (int k = 1; k < top; ++k) spow.push_back(spow.back() * rs.S);
    std::vector<MultiSeries> rpow{one};
    for (int j = 1; 2 * j <= top + 1; ++j) rpow.push_back(rpow.back() * rs.R);

    MultiSeries h1 = one;
    for (int j = 1; 2 * j <= top; ++j) {
        MultiSeries y = collect(B, basis, spow, 2 * j, [j](int n) { return Rat(binom(n - 1, j - 1) * binom(n - j, j)); });
        if (!y.is_zero()) h1 += rpow[j] * y;
    }
    MultiSeries h2(basis);
    for (int j = 0; 2 * j + 1 <= top; ++j) {
        MultiSeries y =
            collect(B, basis, spow, 2 * j + 1, [j](int n) { return Rat(binom(n - 1, 2 * j) * binom(2 * j, j)); });
        if (!y.is_zero()) h2 += rpow[j] * y;
    }
    return {h1, h2};
}

RSPair solve_RS(const BasisPtr& basis) {
    RSPair rs{MultiSeries::constant(basis, Rat(1)), MultiSeries(basis)};
    for (int sweep = 0; sweep <= basis->half_cap() + 2; ++sweep) {
        RSPair next = apply_H(rs);
        if (next.R == rs.R && next.S == rs.S) return rs;
        rs = std::move(next);
    }
    throw std::logic_error("fixed-point iteration did not settle within the graded bound");
}

RSPair solve_RS(int weight_cap) {
    if (weight_cap < 0) throw std::invalid_argument("weight cap must be nonnegative");
    return solve_RS(MonomialBasis::by_weight(weight_cap));
}

MultiSeries solve_R_even(const BasisPtr& basis) {
    for (int j : basis->vars())
        if (j % 2 != 0) throw std::invalid_argument("even solver needs even variables only");
    MultiSeries R = MultiSeries::constant(basis, Rat(1));
    int top = max_var(*basis);
    for (int sweep = 0; sweep <= basis->half_cap() + 2; ++sweep) {
        MultiSeries next = MultiSeries::constant(basis, Rat(1));
        MultiSeries rp = MultiSeries::constant(basis, Rat(1));
        for (int n = 1; 2 * n <= top; ++n) {
            rp = rp * R;
            int idx = var_index(*basis, 2 * n);
            if (idx < 0) continue;
            next += Rat(binom(2 * n - 1, n - 1)) * rp.times_monomial(idx);
        }
        if (next == R) return R;
        R = std::move(next);
    }
    throw std::logic_error("fixed-point iteration did not settle within the graded bound");
}

MultiSeries solve_R_even(int weight_cap) { return solve_R_even(MonomialBasis::even_by_weight(weight_cap)); }

USeries f0_edge(const USeries& R, const USeries& S) {
    USeries one = USeries::constant(Rat(1), R.cap());
    USeries g = Rat(2) * R * S * S + R * R - one;
    int cap = g.cap();
    std::vector<Rat> f(std::max(cap + 1, 0), Rat(0));
    for (int k = g.low(); k <= cap; ++k) {
        Rat c = g.coeff_u(k);
        if (c.is_zero()) continue;
        if (k <= 0) throw std::domain_error("edge integrand has a nonzero 1/s residue");
        // g_k t^(k/2) / (2 s) integrated against (t - s)/t gives 2 g_k / (k (k + 2)) t^(k/2).
        f[k] = Rat(2) * c / Rat(static_cast<long>(k) * (k + 2));
    }
    return USeries(0, std::move(f), cap, Rat(0));
}

USeries f0_face(const USeries& R) {
    USeries L = log(R);
    int cap = L.cap();
    std::vector<Rat> f(std::max(cap + 1, 0), Rat(0));
    for (int k = 0; k <= cap; ++k) {
        Rat c = L.coeff_u(k);
        if (c.is_zero()) continue;
        f[k] = Rat(4) * c / Rat(static_cast<long>(k + 2) * (k + 4));
    }
    return USeries(0, std::move(f), cap, Rat(0));
}

MultiSeries f0_from_rs(const RSPair& rs) {
    const BasisPtr& basis = rs.R.basis();
    if (basis->grading() != Grading::Weight && basis->grading() != Grading::Edge)
        throw std::invalid_argument("edge route needs a weight- or edge-graded basis");
    MultiSeries g = Rat(2) * rs.R * rs.S * rs.S + rs.R * rs.R - MultiSeries::constant(basis, Rat(1));
    MultiSeries f(basis);
    for (auto& [p, c] : g.terms()) {
        int w = p.weight();
        if (w == 0 || w % 2 != 0) throw std::logic_error("edge integrand has a term of odd or zero weight");
        long d = w / 2;
        f.set_coefficient(p, c / Rat(2 * d * (d + 1)));
    }
    return f;
}

MultiSeries f0_face_multivariate(const MultiSeries& R) {
    const BasisPtr& basis = R.basis();
    if (basis->grading() != Grading::Face) throw std::invalid_argument("face route needs a face-graded basis");
    MultiSeries L = R.log();
    MultiSeries f(basis);
    for (auto& [p, c] : L.terms()) {
        int hd = half_degree(Grading::Face, p);  // 2d
        f.set_coefficient(p, Rat(4) * c / Rat(static_cast<long>(hd + 2) * (hd + 4)));
    }
    return f;
}

PlanarResult f0_multivariate(int weight_cap) {
    RSPair rs = solve_RS(weight_cap);
    MultiSeries F0 = f0_from_rs(rs);

    // Face route over a_3..a_cap. A monomial of weight w without a_1, a_2 has face
    // half-degree w - 2*length <= cap - 2, so that face cap covers every such monomial the
    // weight truncation knows about; higher-weight face terms are skipped in the comparison.
    std::vector<int> face_vars;
    for (int j = 3; j <= weight_cap; ++j) face_vars.push_back(j);
    if (!face_vars.empty()) {
        auto face_basis = std::make_shared<MonomialBasis>(face_vars, Grading::Face, weight_cap - 2);
        MultiSeries F0f = f0_face_multivariate(solve_RS(face_basis).R);
        for (auto& [p, c] : F0f.terms()) {
            if (p.weight() > weight_cap) continue;
            if (F0.coefficient(p) != c)
                throw std::logic_error("edge and face routes disagree on the coefficient of " + p.str());
        }
        for (auto& [p, c] : F0.terms()) {
            if (p.multiplicity(1) || p.multiplicity(2)) continue;
            if (F0f.coefficient(p) != c)
                throw std::logic_error("edge and face routes disagree on the coefficient of " + p.str());
        }
    }

    PlanarResult out{F0, grade_specialize(F0, Grading::Edge, weight_cap), USeries(), rs};
    std::map<int, Rat> no12{{1, Rat(0)}, {2, Rat(0)}};
    out.F0_face = grade_specialize(F0, Grading::Face, (2 * weight_cap) / 6, no12);
    return out;
}

BoundReport coefficient_bound_report(const MultiSeries& F0, int n) {
    const MonomialBasis& B = *F0.basis();
    if (B.grading() != Grading::Weight || B.half_cap() < 4 * n)
        throw std::invalid_argument("weight cap too small for the requested bound");
    BoundReport r{Rat(0), Rat(0), true, false};
    for (auto& [p, c] : F0.terms()) {
        if (c.sign() < 0) r.nonnegative = false;
        if (p.weight() != 2 * n) continue;
        r.sum_all += c;
        bool even = std::all_of(p.parts().begin(), p.parts().end(), [](auto pr) { return pr.first % 2 == 0; });
        if (even) r.sum_even += c;
    }
    r.bound_ok = r.nonnegative && r.sum_even <= pow(Rat(8), n) && r.sum_all <= pow(Rat(12), n);
    return r;
}

}  // namespace planarlim
