#pragma once

#include "planarlim/multiseries.hpp"
#include "planarlim/series.hpp"

namespace planarlim {

/// Formal solution (R, S) of the fixed-point system: R in 1 + A+, S in A+.
struct RSPair {
    MultiSeries R;
    MultiSeries S;
};

/// The two right-hand sides of the fixed-point system evaluated at (R, S):
///   H1 = 1 + sum_n a_n sum_{j>=1} C(n-1, j-1) C(n-j, j) R^j S^(n-2j)
///   H2 =     sum_n a_n sum_{j>=0} C(n-1, 2j) C(2j, j) R^j S^(n-2j-1)
RSPair apply_H(const RSPair& rs);

/// Solves R = H1(R, S), S = H2(R, S) by graded fixed-point iteration in the given basis.
/// Terms of degree d are exact after d + 1 sweeps; iteration stops at the first repeat.
RSPair solve_RS(const BasisPtr& basis);
/// All variables a_1..a_cap truncated at weight <= weight_cap.
RSPair solve_RS(int weight_cap);

/// For even potentials (S = 0): R = 1 + sum_{n>=1} a_{2n} C(2n-1, n-1) R^n, solved in a basis
/// of even variables.
MultiSeries solve_R_even(const BasisPtr& even_basis);
MultiSeries solve_R_even(int weight_cap);

/// F0 from graded R, S (edge grading):
///   F0(t) = (1/t) int_0^t (t - s) (2 R S^2 + R^2 - 1) / (2 s) ds,
/// term by term. The integrand must be a power series (no 1/s term).
USeries f0_edge(const USeries& R, const USeries& S);

/// F0 from the face-graded R alone: F0(t) = (1/t^2) int_0^t (t - s) log R(s) ds.
USeries f0_face(const USeries& R);

/// Multivariate F0 from a weight-graded (R, S): each monomial of weight w = 2d gets
/// coefficient [2 R S^2 + R^2 - 1] / (2 d (d + 1)).
MultiSeries f0_from_rs(const RSPair& rs);

/// Multivariate F0 over a face-graded basis (no a_1, a_2) from log R: a monomial of face
/// degree d gets [log R] / ((d + 1)(d + 2)).
MultiSeries f0_face_multivariate(const MultiSeries& R_face_basis);

struct PlanarResult {
    MultiSeries F0;
    USeries F0_edge;  // all a_j -> 1, edge grading
    USeries F0_face;  // a_1 = a_2 = 0, other a_j -> 1, face grading
    RSPair RS;
};

/// Runs the whole multivariate pipeline at the given weight cap. The edge-route F0 is checked
/// against the face route on every monomial without a_1, a_2; a mismatch throws.
PlanarResult f0_multivariate(int weight_cap);

struct BoundReport {
    Rat sum_all;
    Rat sum_even;
    bool nonnegative;
    bool bound_ok;
};

/// Sums c_lambda over partitions of weight exactly 2n (all, and even parts only) and checks
/// sum_even <= 8^n, sum_all <= 12^n and c_lambda >= 0.
BoundReport coefficient_bound_report(const MultiSeries& F0, int n);

}  // namespace planarlim
